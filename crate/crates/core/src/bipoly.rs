//! Bivariate polynomials in `x, y` and complex pairs `re + i·im` of them.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::poly::Poly;
use crate::ring::Ring;

/// `Σ c_{ij} xⁱ yʲ` stored as rows indexed by the `x` degree, each row a
/// canonical polynomial in `y`; trailing zero rows are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly<S = BigRational> {
    rows: Vec<Poly<S>>,
}

impl<S: Ring> BiPoly<S> {
    pub fn from_rows(mut rows: Vec<Poly<S>>) -> Self {
        while rows.last().is_some_and(Poly::is_zero) {
            rows.pop();
        }
        Self { rows }
    }

    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    /// `c·xⁱyʲ`.
    pub fn term(i: usize, j: usize, c: S) -> Self {
        let mut rows = vec![Poly::zero(); i + 1];
        rows[i] = Poly::monomial(j, c);
        Self::from_rows(rows)
    }

    /// Embeds a polynomial in `x`.
    pub fn from_x(p: &Poly<S>) -> Self {
        Self::from_rows(p.coeffs().iter().map(|c| Poly::constant(c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> S {
        self.rows.get(i).map_or_else(S::zero, |r| r.coeff(j))
    }

    /// Nonzero terms as `(x degree, y degree, coefficient)`, ordered by `x` then `y` degree.
    pub fn terms(&self) -> Vec<(usize, usize, S)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_rows(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    /// Multiplies by `yʲ`.
    pub fn shift_y(&self, j: usize) -> Self {
        Self::from_rows(self.rows.iter().map(|r| r.shift(j)).collect())
    }

    /// Applies a coefficient-level map to each `y`-polynomial row.
    pub fn map_rows(&self, f: impl Fn(&Poly<S>) -> Poly<S>) -> Self {
        Self::from_rows(self.rows.iter().map(f).collect())
    }

    /// Applies `f` to the polynomial in `x` sitting at each power of `y`.
    pub fn map_columns(&self, f: impl Fn(&Poly<S>) -> Poly<S>) -> Self {
        let width = self.rows.iter().map(|r| r.coeffs().len()).max().unwrap_or(0);
        let mut out = Self::zero();
        for j in 0..width {
            let column = Poly::new(self.rows.iter().map(|r| r.coeff(j)).collect());
            let image = f(&column);
            for (i, c) in image.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out = &out + &Self::term(i, j, c.clone());
                }
            }
        }
        out
    }

    pub fn try_map<T: Ring>(&self, f: impl Fn(&S) -> Option<T>) -> Option<BiPoly<T>> {
        self.rows
            .iter()
            .map(|r| r.try_map(&f))
            .collect::<Option<Vec<_>>>()
            .map(BiPoly::from_rows)
    }
}

impl<S: Ring> Add for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn add(self, o: &BiPoly<S>) -> BiPoly<S> {
        let n = self.rows.len().max(o.rows.len());
        let zero = Poly::zero();
        BiPoly::from_rows(
            (0..n)
                .map(|i| self.rows.get(i).unwrap_or(&zero) + o.rows.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl<S: Ring> Sub for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn sub(self, o: &BiPoly<S>) -> BiPoly<S> {
        self + &(-o)
    }
}

impl<S: Ring> Neg for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn neg(self) -> BiPoly<S> {
        BiPoly {
            rows: self.rows.iter().map(|r| -r).collect(),
        }
    }
}

impl<S: Ring> Mul for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn mul(self, o: &BiPoly<S>) -> BiPoly<S> {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![Poly::zero(); self.rows.len() + o.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in o.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BiPoly::from_rows(rows)
    }
}

/// `re + i·im`, with `i² = −1` handled structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexBiPoly<S = BigRational> {
    pub re: BiPoly<S>,
    pub im: BiPoly<S>,
}

impl<S: Ring> ComplexBiPoly<S> {
    pub fn new(re: BiPoly<S>, im: BiPoly<S>) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BiPoly::zero(), BiPoly::zero())
    }

    pub fn one() -> Self {
        Self::new(BiPoly::term(0, 0, S::one()), BiPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    pub fn try_map<T: Ring>(&self, f: impl Fn(&S) -> Option<T>) -> Option<ComplexBiPoly<T>> {
        Some(ComplexBiPoly::new(self.re.try_map(&f)?, self.im.try_map(&f)?))
    }
}

impl<S: Ring> Add for &ComplexBiPoly<S> {
    type Output = ComplexBiPoly<S>;
    fn add(self, o: &ComplexBiPoly<S>) -> ComplexBiPoly<S> {
        ComplexBiPoly::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<S: Ring> Sub for &ComplexBiPoly<S> {
    type Output = ComplexBiPoly<S>;
    fn sub(self, o: &ComplexBiPoly<S>) -> ComplexBiPoly<S> {
        ComplexBiPoly::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<S: Ring> Mul for &ComplexBiPoly<S> {
    type Output = ComplexBiPoly<S>;
    fn mul(self, o: &ComplexBiPoly<S>) -> ComplexBiPoly<S> {
        let re = &(&self.re * &o.re) - &(&self.im * &o.im);
        let im = &(&self.re * &o.im) + &(&self.im * &o.re);
        ComplexBiPoly::new(re, im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn t(i: usize, j: usize, c: i64) -> BiPoly {
        BiPoly::term(i, j, rat(c, 1))
    }

    #[test]
    fn canonical_and_arithmetic() {
        let x = t(1, 0, 1);
        let y = t(0, 1, 1);
        assert_eq!(&(&x + &y) - &y, x);
        assert!((&x - &x).is_zero());
        let sq = &(&x + &y) * &(&x + &y);
        assert_eq!(sq.coeff(1, 1), rat(2, 1));
        assert_eq!(sq.terms().len(), 3);
        assert_eq!(t(2, 3, 0), BiPoly::zero());
    }

    #[test]
    fn complex_products() {
        // (x + iy)(x − iy) = x² + y²
        let x = t(1, 0, 1);
        let y = t(0, 1, 1);
        let a = ComplexBiPoly::new(x.clone(), y.clone());
        let b = ComplexBiPoly::new(x.clone(), -&y);
        let p = &a * &b;
        assert_eq!(p.re, &(&x * &x) + &(&y * &y));
        assert!(p.im.is_zero());
        assert_eq!(a.times_i().times_i(), ComplexBiPoly::new(-&x, -&y));
    }

    #[test]
    fn column_map() {
        let p = &t(3, 1, 2) + &t(0, 2, 5);
        let dropped = p.map_columns(|c| Poly::new(c.coeffs().iter().skip(1).cloned().collect()));
        assert_eq!(dropped, t(2, 1, 2));
    }
}
