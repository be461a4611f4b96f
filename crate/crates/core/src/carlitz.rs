//! Carlitz binomial matrices `A_{n+1} = [C(r, n−s)]` and their invariants.
//!
//! `A_{n+1}` is Pascal's triangle laid out against the anti-diagonal. Its
//! characteristic polynomial is the golden binomial `(x − 1)^{n+1}_F`; its
//! eigenvalues are `φ^{n−j}φ′ʲ`; and the traces of its powers are Fibonacci
//! divisors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::golden_ring::{phi_pow, GoldenInt};
use crate::goldpoly::golden_binomial;
use crate::matrix::IntMatrix;
use crate::poly::Poly;
use crate::ring::sign_pow;
use crate::sequences::{fib, fib_divisor};
use crate::{Error, Result};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `A_order` with entry `(r, s) = C(r, order − 1 − s)`.
pub fn build_carlitz(order: usize) -> Result<IntMatrix> {
    let n = order as i64 - 1;
    IntMatrix::from_fn(order, |r, s| binomial(r as u64, n - s as i64))
}

/// Monic `det(xI − M)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    poly: Poly<BigInt>,
}

impl CharPoly {
    pub fn poly(&self) -> &Poly<BigInt> {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("characteristic polynomials are monic")
    }

    /// Leading coefficient first.
    pub fn descending(&self) -> Vec<BigInt> {
        self.poly.descending()
    }

    pub fn eval_golden(&self, x: &GoldenInt) -> GoldenInt {
        self.poly.map(|c| GoldenInt::from(c.clone())).eval(x)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Characteristic polynomial by Faddeev–LeVerrier.
///
/// `M₀ = 0`, `M_k = A·M_{k−1} + c_{n−k+1}I`, `c_{n−k} = −tr(A·M_k)/k`. Each
/// division by `k` is exact over the integers.
pub fn char_poly(m: &IntMatrix) -> CharPoly {
    let n = m.order();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut aux = IntMatrix::from_fn(n, |_, _| BigInt::zero()).expect("order >= 1");
    for k in 1..=n {
        let mk = m.mul(&aux).add_identity(&c[n - k + 1]);
        let (q, r) = m.mul(&mk).trace().div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible by {k}");
        c[n - k] = -q;
        aux = mk;
    }
    CharPoly { poly: Poly::new(c) }
}

fn poly_div_exact(num: &Poly<BigInt>, den: &Poly<BigInt>) -> Option<Poly<BigInt>> {
    let dd = den.degree()?;
    let lead = den.leading()?.clone();
    let mut rem = num.clone();
    let Some(nd) = rem.degree() else {
        return Some(Poly::zero());
    };
    if nd < dd {
        return None;
    }
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    while let Some(rd) = rem.degree() {
        if rd < dd {
            return None;
        }
        let (q, r) = rem.leading()?.div_rem(&lead);
        if !r.is_zero() {
            return None;
        }
        let term = Poly::monomial(rd - dd, q.clone());
        quot[rd - dd] = q;
        rem = &rem - &(&term * den);
    }
    Some(Poly::new(quot))
}

fn char_matrix(m: &IntMatrix) -> Vec<Vec<Poly<BigInt>>> {
    let n = m.order();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let x = if r == c { Poly::x() } else { Poly::zero() };
                    &x - &Poly::constant(m.get(r, c).clone())
                })
                .collect()
        })
        .collect()
}

/// `det(xI − M)` by fraction-free Bareiss elimination over `Z[x]`.
pub fn char_poly_bareiss(m: &IntMatrix) -> CharPoly {
    let n = m.order();
    let mut a = char_matrix(m);
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => unreachable!("det(xI - M) is monic, never zero"),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = poly_div_exact(&num, &prev).expect("Bareiss division must be exact");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    CharPoly {
        poly: if negate { -det } else { det },
    }
}

/// `det(xI − M)` by cofactor expansion along the first row; exponential time.
pub fn char_poly_cofactor(m: &IntMatrix) -> CharPoly {
    fn det(rows: &[Vec<Poly<BigInt>>]) -> Poly<BigInt> {
        if rows.len() == 1 {
            return rows[0][0].clone();
        }
        let mut total = Poly::zero();
        for c in 0..rows.len() {
            if rows[0][c].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Poly<BigInt>>> = rows[1..]
                .iter()
                .map(|r| [&r[..c], &r[c + 1..]].concat())
                .collect();
            let term = &rows[0][c] * &det(&minor);
            total = if c % 2 == 0 { &total + &term } else { &total - &term };
        }
        total
    }
    CharPoly {
        poly: det(&char_matrix(m)),
    }
}

/// Whether `char_poly(A_order)` equals `(x − 1)^order_F` coefficientwise.
pub fn verify_charpoly_theorem(order: usize) -> Result<bool> {
    let q = char_poly(&build_carlitz(order)?);
    let g = golden_binomial(order as u64, &One::one());
    let q_rational = q.poly().map(|c| num_rational::BigRational::from_integer(c.clone()));
    Ok(q_rational == g)
}

pub fn mat_pow(m: &IntMatrix, k: u64) -> IntMatrix {
    m.pow(k)
}

/// `A₂ⁿ = [[F_{n−1}, Fₙ], [Fₙ, F_{n+1}]]`.
pub fn a2_power_closed_form(n: u64) -> IntMatrix {
    let n = n as i64;
    IntMatrix::from_rows(vec![
        vec![fib(n - 1), fib(n)],
        vec![fib(n), fib(n + 1)],
    ])
    .expect("2x2")
}

/// `5·A₃ⁿ` from Fibonacci divisors `F⁽²⁾ₙ`, `F⁽²⁾_{n−1}` and `(−1)ⁿ`.
pub fn a3_power_numerators(n: u64) -> IntMatrix {
    let n = n as i64;
    let f = fib_divisor(2, n).expect("k = 2");
    let g = fib_divisor(2, n - 1).expect("k = 2");
    let s = BigInt::from(sign_pow(n));
    // (F⁽²⁾ₙ, F⁽²⁾_{n−1}, (−1)ⁿ) weights per entry
    const W: [[[i64; 3]; 3]; 3] = [
        [[2, -3, 2], [2, 2, 2], [3, -2, -2]],
        [[1, 1, 1], [6, -4, 1], [4, -1, -1]],
        [[3, -2, -2], [8, -2, -2], [7, -3, 2]],
    ];
    IntMatrix::from_fn(3, |r, c| {
        let [wf, wg, ws] = W[r][c];
        &f * wf + &g * wg + &s * ws
    })
    .expect("3x3")
}

/// `A₃ⁿ` via [`a3_power_numerators`].
///
/// # Panics
/// If an entry is not divisible by 5.
pub fn a3_power_closed_form(n: u64) -> IntMatrix {
    let five = BigInt::from(5);
    let num = a3_power_numerators(n);
    IntMatrix::from_fn(3, |r, c| {
        let (q, rem) = num.get(r, c).div_rem(&five);
        assert!(rem.is_zero(), "A3^{n} entry ({r},{c}) is not an integer");
        q
    })
    .expect("3x3")
}

/// `(Tr(A_orderᵏ), F⁽ᵏ⁾_order)`.
pub fn trace_invariant(order: usize, k: u64) -> Result<(BigInt, BigInt)> {
    if k == 0 {
        return Err(Error::DivisorIndex);
    }
    let t = build_carlitz(order)?.pow(k).trace();
    Ok((t, fib_divisor(k, order as i64)?))
}

/// `(det(A_orderᵏ), (−1)^{k·order(order−1)/2})`.
pub fn det_invariant(order: usize, k: u64) -> Result<(BigInt, BigInt)> {
    let d = build_carlitz(order)?.pow(k).det();
    let tri = (order as u64 * (order as u64 - 1) / 2) % 2;
    let expected = if (k % 2) * tri == 1 { -1 } else { 1 };
    Ok((d, BigInt::from(expected)))
}

/// `φⁿ, φ^{n−1}φ′, …, φ′ⁿ` for `n = order − 1`.
pub fn eigen_powers(order: usize) -> Result<Vec<GoldenInt>> {
    if order == 0 {
        return Err(Error::EmptyOrder);
    }
    let n = order as i64 - 1;
    Ok((0..=n)
        .map(|j| &phi_pow(n - j) * &GoldenInt::phi_conj_pow(j))
        .collect())
}

/// `(Σ_j (φᵏ)^{n−j}(φ′ᵏ)ʲ, F⁽ᵏ⁾_order)` with `n = order − 1`: the power sum of
/// the eigenvalues next to the Fibonacci divisor it should equal.
pub fn power_sum_identity(order: usize, k: u64) -> Result<(GoldenInt, GoldenInt)> {
    if order == 0 {
        return Err(Error::EmptyOrder);
    }
    let up = phi_pow(k as i64);
    let down = GoldenInt::phi_conj_pow(k as i64);
    let n = order as u64 - 1;
    let sum = (0..=n).fold(GoldenInt::zero(), |acc, j| {
        acc + &up.pow(n - j) * &down.pow(j)
    });
    Ok((sum, fib_divisor(k, order as i64)?.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(2, 1), BigInt::from(2));
        assert_eq!(binomial(0, 1), BigInt::zero());
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn carlitz_matrices() {
        assert_eq!(build_carlitz(1).unwrap(), m(&[&[1]]));
        assert_eq!(build_carlitz(2).unwrap(), m(&[&[0, 1], &[1, 1]]));
        assert_eq!(
            build_carlitz(3).unwrap(),
            m(&[&[0, 0, 1], &[0, 1, 1], &[1, 2, 1]])
        );
        assert_eq!(build_carlitz(5).unwrap().row(4), ints(&[1, 4, 6, 4, 1]).as_slice());
        assert_eq!(build_carlitz(0), Err(Error::EmptyOrder));
    }

    #[test]
    fn characteristic_polynomials() {
        let q = |o| char_poly(&build_carlitz(o).unwrap()).descending();
        assert_eq!(q(1), ints(&[1, -1]));
        assert_eq!(q(2), ints(&[1, -1, -1]));
        assert_eq!(q(3), ints(&[1, -2, -2, 1]));
        assert_eq!(q(4), ints(&[1, -3, -6, 3, 1]));
        for order in 1..=6 {
            let a = build_carlitz(order).unwrap();
            assert_eq!(char_poly(&a), char_poly_cofactor(&a));
            assert_eq!(char_poly(&a), char_poly_bareiss(&a));
        }
    }

    #[test]
    fn generic_matrices() {
        let a = m(&[&[2, -1, 0], &[7, 3, 5], &[0, 0, -4]]);
        assert_eq!(char_poly(&a), char_poly_cofactor(&a));
        assert_eq!(char_poly(&a), char_poly_bareiss(&a));
        let z = m(&[&[0, 0], &[0, 0]]);
        assert_eq!(char_poly(&z).descending(), ints(&[1, 0, 0]));
        assert_eq!(char_poly_bareiss(&z), char_poly(&z));
    }

    #[test]
    fn theorem_small_orders() {
        for order in [1, 3, 12] {
            assert!(verify_charpoly_theorem(order).unwrap());
        }
    }

    #[test]
    fn powers() {
        let a2 = build_carlitz(2).unwrap();
        let a3 = build_carlitz(3).unwrap();
        assert_eq!(mat_pow(&a2, 5), m(&[&[3, 5], &[5, 8]]));
        assert_eq!(mat_pow(&a3, 0), IntMatrix::identity(3).unwrap());
        assert_eq!(a3.mul(&a3), m(&[&[1, 2, 1], &[1, 3, 2], &[1, 4, 4]]));
        assert_eq!(mat_pow(&a3, 2), a3.mul(&a3));
        assert_eq!(a2_power_closed_form(1), a2);
        assert_eq!(a2_power_closed_form(2), m(&[&[1, 1], &[1, 2]]));
        assert_eq!(a2_power_closed_form(10), m(&[&[34, 55], &[55, 89]]));
        assert_eq!(a3_power_closed_form(1), a3);
        assert_eq!(a3_power_closed_form(0), IntMatrix::identity(3).unwrap());
        assert_eq!(a3_power_numerators(2).get(0, 0), &BigInt::from(5));
        for n in 0..=40 {
            assert_eq!(a3_power_closed_form(n), mat_pow(&a3, n), "n={n}");
        }
        for n in 0..=60 {
            assert_eq!(a2_power_closed_form(n), mat_pow(&a2, n), "n={n}");
        }
    }

    #[test]
    fn traces_and_determinants() {
        let p = |a: i64, b: i64| (BigInt::from(a), BigInt::from(b));
        assert_eq!(trace_invariant(3, 1).unwrap(), p(2, 2));
        assert_eq!(trace_invariant(3, 2).unwrap(), p(8, 8));
        assert_eq!(trace_invariant(1, 5).unwrap(), p(1, 1));
        assert_eq!(trace_invariant(3, 0), Err(Error::DivisorIndex));
        assert_eq!(det_invariant(3, 1).unwrap(), p(-1, -1));
        assert_eq!(det_invariant(4, 1).unwrap(), p(1, 1));
        assert_eq!(det_invariant(7, 0).unwrap(), p(1, 1));
        assert_eq!(det_invariant(3, 2).unwrap(), p(1, 1));
    }

    #[test]
    fn eigenvalues() {
        let phi = GoldenInt::phi();
        let phc = GoldenInt::phi_conj();
        assert_eq!(eigen_powers(1).unwrap(), vec![GoldenInt::one()]);
        assert_eq!(eigen_powers(2).unwrap(), vec![phi.clone(), phc.clone()]);
        assert_eq!(
            eigen_powers(3).unwrap(),
            vec![phi.pow(2), GoldenInt::from(-1), phc.pow(2)]
        );
        assert_eq!(
            eigen_powers(4).unwrap(),
            vec![phi.pow(3), -phi.clone(), -phc.clone(), phc.pow(3)]
        );
        for order in 1..=12 {
            let q = char_poly(&build_carlitz(order).unwrap());
            for e in eigen_powers(order).unwrap() {
                assert!(q.eval_golden(&e).is_zero());
            }
        }
    }

    #[test]
    fn power_sums() {
        let (s, d) = power_sum_identity(2, 1).unwrap();
        assert_eq!((s, d), (GoldenInt::one(), GoldenInt::one()));
        let (s, d) = power_sum_identity(3, 2).unwrap();
        assert_eq!(s, GoldenInt::from(8));
        assert_eq!(d, GoldenInt::from(8));
        let (s, d) = power_sum_identity(5, 3).unwrap();
        assert_eq!(d, GoldenInt::from(305));
        assert_eq!(s, d);
    }
}
