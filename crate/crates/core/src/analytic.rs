//! Golden analytic functions: the complex golden binomial, the split of
//! `E_F^{iyD_F} f` into `Cos_F`/`Sin_F` parts, and the golden `∂̄_F`,
//! Cauchy–Riemann and Laplace equations checked exactly on polynomials.
//!
//! `D^y_{−F}` acts on monomials as `yⁿ ↦ (−1)^{n−1} Fₙ y^{n−1}`: the parity
//! operator `(−1)^{y d/dy}` applied after the golden derivative.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::bipoly::{BiPoly, ComplexBiPoly};
use crate::golden_ring::{GoldenInt, GoldenRational};
use crate::goldpoly::{golden_derivative, triangular_sign};
use crate::poly::Poly;
use crate::ring::{sign_pow, Ring};
use crate::sequences::{fib, fib_factorial, fibonomial};

/// `(x + iy)ⁿ_F = Σ_k [n k]_F (−1)^{k(k−1)/2} x^{n−k} iᵏ yᵏ`.
pub fn complex_golden_binomial(n: u64) -> ComplexBiPoly {
    let mut re = BiPoly::zero();
    let mut im = BiPoly::zero();
    for k in 0..=n {
        // iᵏ contributes the sign (−1)^{⌊k/2⌋} and picks the part
        let sign = triangular_sign(k) * if k % 4 < 2 { 1 } else { -1 };
        let c = BigRational::from_integer(fibonomial(n, k).expect("k <= n") * sign);
        let term = BiPoly::term((n - k) as usize, k as usize, c);
        if k % 2 == 0 {
            re = &re + &term;
        } else {
            im = &im + &term;
        }
    }
    ComplexBiPoly::new(re, im)
}

/// `∏_{j=0}^{n−1} (x + i(−1)ʲφ^{n−1−2j} y)` expanded over `Q(φ)`.
pub fn complex_golden_product(n: u64) -> ComplexBiPoly<GoldenRational> {
    let n = n as i64;
    let x = BiPoly::term(1, 0, GoldenRational::one());
    (0..n).fold(ComplexBiPoly::one(), |acc, j| {
        let c = GoldenRational::from(GoldenInt::phi_pow(n - 1 - 2 * j) * GoldenInt::from(sign_pow(j)));
        let factor = ComplexBiPoly::new(x.clone(), BiPoly::term(0, 1, c));
        &acc * &factor
    })
}

/// [`complex_golden_product`] collapsed to rationals, if every `φ` part vanishes.
pub fn complex_golden_product_rational(n: u64) -> Option<ComplexBiPoly> {
    complex_golden_product(n).try_map(|c| c.as_rational().cloned())
}

/// `D^x_F`.
pub fn d_f_x<S: Ring>(p: &BiPoly<S>) -> BiPoly<S> {
    p.map_columns(golden_derivative)
}

/// `D^y_F`.
pub fn d_f_y<S: Ring>(p: &BiPoly<S>) -> BiPoly<S> {
    p.map_rows(golden_derivative)
}

fn neg_golden_derivative<S: Ring>(p: &Poly<S>) -> Poly<S> {
    Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| {
                let n = n as i64;
                c.clone() * &S::from(fib(n) * sign_pow(n - 1))
            })
            .collect(),
    )
}

/// `D^y_{−F}`: `yⁿ ↦ (−1)^{n−1} Fₙ y^{n−1}`.
pub fn d_neg_f_y<S: Ring>(p: &BiPoly<S>) -> BiPoly<S> {
    p.map_rows(neg_golden_derivative)
}

/// `D^x_{−F}`, the same operator acting on `x`.
pub fn d_neg_f_x<S: Ring>(p: &BiPoly<S>) -> BiPoly<S> {
    p.map_columns(neg_golden_derivative)
}

/// `(u, v)` with `u + iv = E_F^{iyD_F} f = Σₙ (−1)^{n(n−1)/2} (iy)ⁿ D_Fⁿ f / Fₙ!`.
///
/// Even `n` land in `u`, odd `n` in `v`. The sign of `iⁿ` and the sign
/// `(−1)^{n(n−1)/2}` always cancel, so every term enters with a plus sign.
pub fn cos_sin_parts(f: &Poly<BigRational>) -> (BiPoly, BiPoly) {
    let mut u = BiPoly::zero();
    let mut v = BiPoly::zero();
    let mut d = f.clone();
    let mut n = 0u64;
    while !d.is_zero() {
        let i_sign: i64 = if n % 4 < 2 { 1 } else { -1 };
        let c = BigRational::new(
            BigInt::from(triangular_sign(n) * i_sign),
            fib_factorial(n),
        );
        let term = BiPoly::from_x(&d.scale(&c)).shift_y(n as usize);
        if n.is_multiple_of(2) {
            u = &u + &term;
        } else {
            v = &v + &term;
        }
        d = golden_derivative(&d);
        n += 1;
    }
    (u, v)
}

/// `(D^x_F + i D^y_{−F}) f`.
pub fn dbar_f(f: &ComplexBiPoly) -> ComplexBiPoly {
    let dx = ComplexBiPoly::new(d_f_x(&f.re), d_f_x(&f.im));
    let dy = ComplexBiPoly::new(d_neg_f_y(&f.re), d_neg_f_y(&f.im));
    &dx + &dy.times_i()
}

/// The golden `∂̄_F` equation for `(x + iy)ⁿ_F`.
pub fn check_dbar(n: u64) -> bool {
    dbar_f(&complex_golden_binomial(n)).is_zero()
}

/// The golden `∂̄_F` equation for `E_F^{iyD_F} f`.
pub fn check_dbar_poly(f: &Poly<BigRational>) -> bool {
    let (u, v) = cos_sin_parts(f);
    dbar_f(&ComplexBiPoly::new(u, v)).is_zero()
}

/// `D^x_F u = D^y_{−F} v` and `D^y_{−F} u = −D^x_F v`.
pub fn check_cauchy_riemann(f: &Poly<BigRational>) -> bool {
    let (u, v) = cos_sin_parts(f);
    d_f_x(&u) == d_neg_f_y(&v) && d_neg_f_y(&u) == -&d_f_x(&v)
}

fn laplacian(p: &BiPoly) -> BiPoly {
    &d_f_x(&d_f_x(p)) + &d_neg_f_y(&d_neg_f_y(p))
}

/// `(D^x_F)² w + (D^y_{−F})² w = 0` for both `w = u` and `w = v`.
pub fn check_laplace(f: &Poly<BigRational>) -> bool {
    let (u, v) = cos_sin_parts(f);
    laplacian(&u).is_zero() && laplacian(&v).is_zero()
}

/// Recombines `u + iv` for `f = xᵐ` as a complex pair.
pub fn recombined_monomial(m: u64) -> ComplexBiPoly {
    let (u, v) = cos_sin_parts(&Poly::monomial(m as usize, BigRational::one()));
    ComplexBiPoly::new(u, v)
}
