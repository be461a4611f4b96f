//! Golden binomials, golden polynomials and the golden derivative.
//!
//! The golden binomial `(x − a)ⁿ_F` is built from its Fibonomial expansion.
//! Its product form over `Q(φ)` is a separate constructor so that the two can
//! be checked against each other.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::golden_ring::{GoldenInt, GoldenRational};
use crate::poly::Poly;
use crate::ring::{sign_pow, Field, Ring};
use crate::sequences::{fib, fib_factorial, fibonomial};

/// `(−1)^{k(k−1)/2}`: the sign pattern `+ + − − + + …`.
pub fn triangular_sign(k: u64) -> i64 {
    if k % 4 < 2 {
        1
    } else {
        -1
    }
}

fn r(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `(x − a)ⁿ_F = Σ_k [n k]_F (−1)^{k(k−1)/2} (−a)ᵏ x^{n−k}`.
pub fn golden_binomial(n: u64, a: &BigRational) -> Poly<BigRational> {
    let minus_a = -a.clone();
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    let mut a_pow = BigRational::one();
    for k in 0..=n {
        let c = r(fibonomial(n, k).expect("k <= n") * triangular_sign(k)) * &a_pow;
        coeffs[(n - k) as usize] = c;
        a_pow *= &minus_a;
    }
    Poly::new(coeffs)
}

/// `∏_{j=0}^{n−1} (x − φʲ φ′^{n−1−j} a)` expanded over `Q(φ)`.
pub fn golden_product(n: u64, a: &GoldenRational) -> Poly<GoldenRational> {
    let n = n as i64;
    (0..n).fold(Poly::one(), |acc, j| {
        let root = GoldenRational::from(&GoldenInt::phi_pow(j) * &GoldenInt::phi_conj_pow(n - 1 - j));
        &acc * &Poly::linear_root(root * a)
    })
}

/// [`golden_product`] for a rational parameter.
pub fn golden_binomial_product_form(n: u64, a: &BigRational) -> Poly<GoldenRational> {
    golden_product(n, &GoldenRational::from(a))
}

/// Drops to rational coefficients when every `φ` component is zero.
pub fn collapse_rational(p: &Poly<GoldenRational>) -> Option<Poly<BigRational>> {
    p.try_map(|c| c.as_rational().cloned())
}

/// `Pₙ(x) = (x − a)ⁿ_F / Fₙ!`, with `P₀ = 1`.
pub fn golden_poly_p(n: u64, a: &BigRational) -> Poly<BigRational> {
    let scale = BigRational::new(BigInt::one(), fib_factorial(n));
    golden_binomial(n, a).scale(&scale)
}

/// `D_F`, acting on monomials as `xⁿ ↦ Fₙ x^{n−1}`.
pub fn golden_derivative<S: Ring>(p: &Poly<S>) -> Poly<S> {
    Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.clone() * &S::from(fib(n as i64)))
            .collect(),
    )
}

/// `D_F` from its definition `(p(φx) − p(φ′x)) / ((φ − φ′)x)`, evaluated in `Q(φ)`.
///
/// Powers of `φ` and `φ′` are built by repeated multiplication, so this shares
/// nothing with [`golden_derivative`] beyond the ring arithmetic.
pub fn golden_derivative_by_definition(p: &Poly<BigRational>) -> Poly<BigRational> {
    let phi = GoldenRational::phi();
    let phc = GoldenRational::phi_conj();
    let root5 = &phi - &phc;
    let root5_inv = root5.inv().expect("sqrt 5 is invertible");
    let (mut up, mut down) = (GoldenRational::one(), GoldenRational::one());
    let mut diff = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        // coefficient of xⁿ in p(φx) − p(φ′x)
        diff.push(GoldenRational::from(c) * &(&up - &down));
        up = up * &phi;
        down = down * &phc;
    }
    let numerator = Poly::new(diff);
    // constant term of the difference is always zero, so dividing by x is a shift
    assert!(numerator.coeff(0).is_zero());
    let quotient = Poly::new(numerator.coeffs().iter().skip(1).cloned().collect())
        .scale(&root5_inv);
    collapse_rational(&quotient).expect("golden derivative of a rational polynomial is rational")
}

/// Coefficients of `E_F(t) = Σ (−1)^{n(n−1)/2} tⁿ / Fₙ!` through `tᴺ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenSeriesTruncation {
    coeffs: Vec<BigRational>,
}

impl GoldenSeriesTruncation {
    pub fn new(max_degree: u64) -> Self {
        let coeffs = (0..=max_degree)
            .map(|n| BigRational::new(BigInt::from(triangular_sign(n)), fib_factorial(n)))
            .collect();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }
}

/// `E_F^{−a D_F} p = Σ_k (−1)^{k(k−1)/2} (−a)ᵏ D_Fᵏ p / F_k!`.
///
/// The sum is finite: `D_F` lowers the degree by one.
pub fn golden_translate(p: &Poly<BigRational>, a: &BigRational) -> Poly<BigRational> {
    let Some(deg) = p.degree() else {
        return Poly::zero();
    };
    let series = GoldenSeriesTruncation::new(deg as u64);
    let minus_a = -a.clone();
    let mut a_pow = BigRational::one();
    let mut d = p.clone();
    let mut acc = Poly::zero();
    for k in 0..=deg {
        acc = &acc + &d.scale(&(series.coeff(k) * &a_pow));
        d = golden_derivative(&d);
        a_pow *= &minus_a;
    }
    acc
}

/// `Pₘ` as a scale times a list of monic linear and quadratic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFactors {
    pub degree: u64,
    /// `1/Fₘ!`
    pub scale: BigRational,
    pub factors: Vec<Poly<BigRational>>,
}

impl QuadraticFactors {
    pub fn expand(&self) -> Poly<BigRational> {
        Poly::product(&self.factors).scale(&self.scale)
    }
}

/// The even/odd product forms of `Pₘ`:
///
/// * `m = 2n`: `∏_{k=1}^n (x² − (−1)^{n+k}(F_{2k−1} + 2F_{2k−2}) x a − a²)`
/// * `m = 2n+1`: `(x − (−1)ⁿ a) ∏_{k=1}^n (x² − (−1)^{n+k}(F_{2k} + 2F_{2k−1}) x a + a²)`
///
/// The middle coefficients are Lucas numbers `L_{2k−1}` and `L_{2k}`.
pub fn quadratic_factor_form(m: u64, a: &BigRational) -> QuadraticFactors {
    let half = (m / 2) as i64;
    let odd = m % 2 == 1;
    let a2 = a * a;
    let mut factors = Vec::with_capacity(half as usize + 1);
    if odd {
        let root = a * r(sign_pow(half));
        factors.push(Poly::linear_root(root));
    }
    for k in 1..=half {
        let sign = r(sign_pow(half + k));
        let (lucas, constant) = if odd {
            (fib(2 * k) + 2 * fib(2 * k - 1), a2.clone())
        } else {
            (fib(2 * k - 1) + 2 * fib(2 * k - 2), -a2.clone())
        };
        let middle = -(sign * r(lucas) * a);
        factors.push(Poly::new(vec![constant, middle, BigRational::one()]));
    }
    QuadraticFactors {
        degree: m,
        scale: BigRational::new(BigInt::one(), fib_factorial(m)),
        factors,
    }
}

/// The zeros of `(x − 1)ⁿ_F` as listed by parity: `±φ^e, ±φ′^e` for
/// `e = n−1, n−3, …` with alternating signs, ending at `±φ, ±φ′` (even `n`)
/// or a single `±1` (odd `n`).
pub fn golden_binomial_zeros(n: u64) -> Vec<GoldenInt> {
    let mut zeros = Vec::with_capacity(n as usize);
    let mut e = n as i64 - 1;
    let mut sign = 1i64;
    while e >= 0 {
        let s = GoldenInt::from(sign);
        if e == 0 {
            zeros.push(s);
        } else {
            zeros.push(&s * &GoldenInt::phi_pow(e));
            zeros.push(&s * &GoldenInt::phi_conj_pow(e));
        }
        e -= 2;
        sign = -sign;
    }
    zeros
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn q(c: &[i64]) -> Poly<BigRational> {
        Poly::new(c.iter().map(|&v| rat(v, 1)).collect())
    }

    fn one() -> BigRational {
        rat(1, 1)
    }

    /// Expands the product over the listed zeros directly.
    fn product_oracle(zeros: &[GoldenInt], a: &BigRational) -> Poly<BigRational> {
        let p = zeros.iter().fold(Poly::<GoldenRational>::one(), |acc, z| {
            &acc * &Poly::linear_root(GoldenRational::from(z.clone()) * &GoldenRational::from(a))
        });
        collapse_rational(&p).unwrap()
    }

    #[test]
    fn golden_binomial_values() {
        assert_eq!(golden_binomial(2, &one()), q(&[-1, -1, 1]));
        assert_eq!(golden_binomial(0, &rat(7, 3)), q(&[1]));
        let oracle = product_oracle(
            &[
                GoldenInt::phi_pow(3),
                -GoldenInt::phi(),
                -GoldenInt::phi_conj(),
                GoldenInt::phi_conj_pow(3),
            ],
            &one(),
        );
        assert_eq!(oracle, q(&[1, 3, -6, -3, 1]));
        assert_eq!(golden_binomial(4, &one()), oracle);
    }

    #[test]
    fn product_form_values() {
        let p1 = collapse_rational(&golden_binomial_product_form(1, &one())).unwrap();
        assert_eq!(p1, q(&[-1, 1]));
        let p3 = collapse_rational(&golden_binomial_product_form(3, &one())).unwrap();
        assert_eq!(p3, q(&[1, -2, -2, 1]));
        let p2 = collapse_rational(&golden_binomial_product_form(2, &rat(2, 1))).unwrap();
        assert_eq!(p2, q(&[-4, -2, 1]));
    }

    #[test]
    fn expansion_equals_product() {
        for a in [rat(1, 1), rat(-1, 1), rat(2, 1), rat(1, 2)] {
            for n in 0..=40 {
                let prod = collapse_rational(&golden_binomial_product_form(n, &a));
                assert_eq!(prod, Some(golden_binomial(n, &a)), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn listed_zeros_are_roots() {
        for n in 1..=20 {
            let p = golden_binomial(n, &one()).map(|c| GoldenRational::from(c.clone()));
            let zeros = golden_binomial_zeros(n);
            assert_eq!(zeros.len(), n as usize);
            for z in zeros {
                assert!(p.eval(&z.into()).is_zero(), "n={n}");
            }
        }
    }

    #[test]
    fn golden_polynomials() {
        assert_eq!(golden_poly_p(0, &one()), q(&[1]));
        assert_eq!(golden_poly_p(2, &one()), q(&[-1, -1, 1]));
        let p3 = (&q(&[1, 1]) * &q(&[1, -3, 1])).scale(&rat(1, 2));
        assert_eq!(golden_poly_p(3, &one()), p3);
    }

    #[test]
    fn derivative_values() {
        assert_eq!(golden_derivative(&q(&[0, 0, 0, 1])), q(&[0, 0, 2]));
        assert_eq!(golden_derivative(&q(&[5])), Poly::zero());
        let p3 = golden_poly_p(3, &one());
        assert_eq!(golden_derivative(&p3), golden_poly_p(2, &one()));
        assert_eq!(golden_derivative_by_definition(&q(&[0, 0, 0, 1])), q(&[0, 0, 2]));
    }

    #[test]
    fn derivative_chain() {
        for a in [rat(1, 1), rat(-1, 1), rat(2, 1), rat(1, 2)] {
            for n in 1..=30 {
                assert_eq!(golden_derivative(&golden_poly_p(n, &a)), golden_poly_p(n - 1, &a));
            }
        }
    }

    #[test]
    fn closed_form_matches_definition() {
        let p = q(&[3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5]);
        assert_eq!(golden_derivative(&p), golden_derivative_by_definition(&p));
    }

    #[test]
    fn translation() {
        let x2 = Poly::monomial(2, one());
        assert_eq!(golden_translate(&x2, &one()), q(&[-1, -1, 1]));
        let p = q(&[1, -2, 7]);
        assert_eq!(golden_translate(&p, &rat(0, 1)), p);
        for a in [rat(1, 1), rat(-1, 1), rat(2, 1), rat(1, 2)] {
            for n in 0..=30 {
                let xn = Poly::monomial(n as usize, one());
                assert_eq!(golden_translate(&xn, &a), golden_binomial(n, &a));
            }
        }
    }

    #[test]
    fn series_coefficients() {
        let s = GoldenSeriesTruncation::new(6);
        let expected = [
            rat(1, 1),
            rat(1, 1),
            rat(-1, 1),
            rat(-1, 2),
            rat(1, 6),
            rat(1, 30),
            rat(-1, 240),
        ];
        assert_eq!(s.coeffs(), &expected);
    }

    #[test]
    fn displayed_factorisations() {
        let f6 = quadratic_factor_form(6, &one());
        assert_eq!(f6.scale, rat(1, 240));
        assert_eq!(f6.factors, vec![q(&[-1, -1, 1]), q(&[-1, 4, 1]), q(&[-1, -11, 1])]);
        let f1 = quadratic_factor_form(1, &one());
        assert_eq!(f1.factors, vec![q(&[-1, 1])]);
        let f4 = quadratic_factor_form(4, &one());
        assert_eq!(f4.scale, rat(1, 6));
        assert_eq!(f4.factors, vec![q(&[-1, 1, 1]), q(&[-1, -4, 1])]);
        let f7 = quadratic_factor_form(7, &one());
        assert_eq!(
            f7.factors,
            vec![q(&[1, 1]), q(&[1, -3, 1]), q(&[1, 7, 1]), q(&[1, -18, 1])]
        );
        assert_eq!(f7.scale, rat(1, 2 * 3 * 5 * 8 * 13));
    }

    #[test]
    fn factor_forms_expand_to_golden_polynomials() {
        for a in [rat(1, 1), rat(-1, 1), rat(2, 1), rat(1, 2)] {
            for m in 0..=20 {
                let f = quadratic_factor_form(m, &a);
                assert_eq!(f.expand(), golden_poly_p(m, &a), "m={m} a={a}");
            }
        }
    }
}
