//! Dense univariate polynomials over an exact [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::ring::Ring;

/// Coefficients are stored lowest degree first with no trailing zeros; the
/// zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Ring> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::monomial(1, S::one())
    }

    /// `c·xᵈ`.
    pub fn monomial(degree: usize, c: S) -> Self {
        let mut coeffs = vec![S::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x − r`.
    pub fn linear_root(r: S) -> Self {
        Self::new(vec![-r, S::one()])
    }

    pub fn from_descending(coeffs: Vec<S>) -> Self {
        let mut coeffs = coeffs;
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficients from the leading term down to the constant term.
    pub fn descending(&self) -> Vec<S> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn coeff(&self, degree: usize) -> S {
        self.coeffs.get(degree).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn map<T: Ring>(&self, f: impl FnMut(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Like [`Poly::map`], failing if any coefficient fails to convert.
    pub fn try_map<T: Ring>(&self, f: impl FnMut(&S) -> Option<T>) -> Option<Poly<T>> {
        self.coeffs
            .iter()
            .map(f)
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self
    where
        S: 'a,
    {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * f)
    }
}

impl<S: Ring> Default for Poly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Ring> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, o: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<S: Ring> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, o: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<S: Ring> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, o: &Poly<S>) -> Poly<S> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = std::mem::replace(&mut out[i + j], S::zero()) + a.clone() * b;
            }
        }
        Poly::new(out)
    }
}

impl<S: Ring> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! owned_poly_op {
    ($tr:ident, $m:ident) => {
        impl<S: Ring> $tr for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, o: Poly<S>) -> Poly<S> {
                (&self).$m(&o)
            }
        }
    };
}

owned_poly_op!(Add, add);
owned_poly_op!(Sub, sub);
owned_poly_op!(Mul, mul);

impl<S: Ring> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

/// Coefficient types that can be printed as part of `3x^2 - x + 1/2`.
pub trait CoeffDisplay: Ring + fmt::Display {
    fn is_negative_coeff(&self) -> bool;
    fn abs_coeff(&self) -> Self;
    /// Whether a non-unit coefficient needs parentheses in front of `x`.
    fn needs_parens(&self) -> bool;
}

impl CoeffDisplay for BigInt {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn abs_coeff(&self) -> Self {
        self.abs()
    }
    fn needs_parens(&self) -> bool {
        false
    }
}

impl CoeffDisplay for BigRational {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn abs_coeff(&self) -> Self {
        self.abs()
    }
    fn needs_parens(&self) -> bool {
        !self.is_integer()
    }
}

/// Renders a polynomial in `var`, highest degree first.
pub fn render<S: CoeffDisplay>(p: &Poly<S>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (deg, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative_coeff();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs_coeff();
        let body = match deg {
            0 => String::new(),
            1 => var.to_string(),
            d => format!("{var}^{d}"),
        };
        if deg == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&body);
        } else if mag.needs_parens() {
            out.push_str(&format!("({mag}){body}"));
        } else {
            out.push_str(&format!("{mag}{body}"));
        }
    }
    out
}

impl<S: CoeffDisplay> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, "x"))
    }
}
