//! Arithmetic in the golden ring `Z[φ]` and its fraction field `Q(φ)`.
//!
//! Elements are stored in the basis `{1, φ}` and reduced with `φ² = φ + 1`,
//! so every value has exactly one representation and equality is
//! componentwise. Conjugation sends `φ` to `φ′ = 1 − φ`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::Field;
use crate::sequences::fib;

/// `a + bφ` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    a: BigInt,
    b: BigInt,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn phi() -> Self {
        Self::new(0, 1)
    }

    /// `φ′ = 1 − φ`.
    pub fn phi_conj() -> Self {
        Self::new(1, -1)
    }

    /// Coefficient of `1`.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of `φ`.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        (self.a, self.b)
    }

    /// Returns the integer value if the `φ` component vanishes.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.b.is_zero().then_some(&self.a)
    }

    /// `(a + bφ) ↦ (a + b) − bφ`.
    pub fn conj(&self) -> Self {
        Self {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// `x · conj(x) = a² + ab − b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// The inverse, which exists in `Z[φ]` only for units (norm ±1).
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.abs().is_one() {
            let c = self.conj();
            Some(Self {
                a: c.a * &n,
                b: c.b * &n,
            })
        } else {
            None
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `φⁿ = F_{n−1} + Fₙφ` for any signed `n`.
    pub fn phi_pow(n: i64) -> Self {
        Self::new(fib(n - 1), fib(n))
    }

    /// `φ′ⁿ`, the conjugate of [`GoldenInt::phi_pow`].
    pub fn phi_conj_pow(n: i64) -> Self {
        Self::phi_pow(n).conj()
    }
}

/// Convenience wrapper over [`GoldenInt::phi_pow`].
pub fn phi_pow(n: i64) -> GoldenInt {
    GoldenInt::phi_pow(n)
}

impl From<BigInt> for GoldenInt {
    fn from(a: BigInt) -> Self {
        Self { a, b: BigInt::zero() }
    }
}

impl From<i64> for GoldenInt {
    fn from(a: i64) -> Self {
        Self::new(a, 0)
    }
}

impl Zero for GoldenInt {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenInt {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

/// `p + qφ` with rational coefficients; both coefficients are kept reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoldenRational {
    p: BigRational,
    q: BigRational,
}

impl GoldenRational {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        Self { p, q }
    }

    pub fn phi() -> Self {
        GoldenInt::phi().into()
    }

    pub fn phi_conj() -> Self {
        GoldenInt::phi_conj().into()
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.q.is_zero().then_some(&self.p)
    }

    pub fn conj(&self) -> Self {
        Self {
            p: &self.p + &self.q,
            q: -&self.q,
        }
    }

    pub fn norm(&self) -> BigRational {
        &self.p * &self.p + &self.p * &self.q - &self.q * &self.q
    }

    pub fn pow(&self, e: u64) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self)
    }
}

impl From<GoldenInt> for GoldenRational {
    fn from(x: GoldenInt) -> Self {
        Self {
            p: BigRational::from_integer(x.a),
            q: BigRational::from_integer(x.b),
        }
    }
}

impl From<BigRational> for GoldenRational {
    fn from(p: BigRational) -> Self {
        Self {
            p,
            q: BigRational::zero(),
        }
    }
}

impl From<&BigRational> for GoldenRational {
    fn from(p: &BigRational) -> Self {
        p.clone().into()
    }
}

impl From<BigInt> for GoldenRational {
    fn from(a: BigInt) -> Self {
        BigRational::from_integer(a).into()
    }
}

impl Zero for GoldenRational {
    fn zero() -> Self {
        Self {
            p: BigRational::zero(),
            q: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

impl One for GoldenRational {
    fn one() -> Self {
        Self {
            p: BigRational::one(),
            q: BigRational::zero(),
        }
    }
}

impl Field for GoldenRational {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self {
            p: c.p / &n,
            q: c.q / &n,
        })
    }
}

macro_rules! golden_ops {
    ($t:ident, $a:ident, $b:ident) => {
        impl<'x> Add<&'x $t> for &$t {
            type Output = $t;
            fn add(self, o: &'x $t) -> $t {
                $t {
                    $a: &self.$a + &o.$a,
                    $b: &self.$b + &o.$b,
                }
            }
        }

        impl<'x> Sub<&'x $t> for &$t {
            type Output = $t;
            fn sub(self, o: &'x $t) -> $t {
                $t {
                    $a: &self.$a - &o.$a,
                    $b: &self.$b - &o.$b,
                }
            }
        }

        // (a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ
        impl<'x> Mul<&'x $t> for &$t {
            type Output = $t;
            fn mul(self, o: &'x $t) -> $t {
                let bd = &self.$b * &o.$b;
                $t {
                    $a: &self.$a * &o.$a + &bd,
                    $b: &self.$a * &o.$b + &self.$b * &o.$a + bd,
                }
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t {
                    $a: -&self.$a,
                    $b: -&self.$b,
                }
            }
        }

        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }

        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }

        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }

        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }

        impl<'x> Add<&'x $t> for $t {
            type Output = $t;
            fn add(self, o: &'x $t) -> $t {
                &self + o
            }
        }

        impl<'x> Sub<&'x $t> for $t {
            type Output = $t;
            fn sub(self, o: &'x $t) -> $t {
                &self - o
            }
        }

        impl<'x> Mul<&'x $t> for $t {
            type Output = $t;
            fn mul(self, o: &'x $t) -> $t {
                &self * o
            }
        }
    };
}

golden_ops!(GoldenInt, a, b);
golden_ops!(GoldenRational, p, q);

impl Div for GoldenRational {
    type Output = GoldenRational;
    fn div(self, o: GoldenRational) -> GoldenRational {
        &self / &o
    }
}

impl<'x> Div<&'x GoldenRational> for &GoldenRational {
    type Output = GoldenRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &'x GoldenRational) -> GoldenRational {
        self * &o.inv().expect("division by zero in Q(phi)")
    }
}

fn fmt_golden<T: FormatBound>(f: &mut fmt::Formatter<'_>, a: &T, b: &T) -> fmt::Result {
    if b.is_zero() {
        return write!(f, "{a}");
    }
    let phi_term = |f: &mut fmt::Formatter<'_>, c: &T| {
        if c.is_one() {
            write!(f, "phi")
        } else if c.is_integer_like() {
            write!(f, "{c}phi")
        } else {
            write!(f, "({c})phi")
        }
    };
    if a.is_zero() {
        if b.is_negative() {
            write!(f, "-")?;
        }
        return phi_term(f, &b.abs());
    }
    write!(f, "{a} {} ", if b.is_negative() { "-" } else { "+" })?;
    phi_term(f, &b.abs())
}

trait IntegerLike {
    fn is_integer_like(&self) -> bool;
}

impl IntegerLike for BigInt {
    fn is_integer_like(&self) -> bool {
        true
    }
}

impl IntegerLike for BigRational {
    fn is_integer_like(&self) -> bool {
        self.is_integer()
    }
}

trait FormatBound: fmt::Display + Zero + One + Signed + IntegerLike {}
impl<T: fmt::Display + Zero + One + Signed + IntegerLike> FormatBound for T {}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_golden(f, &self.a, &self.b)
    }
}

impl fmt::Display for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_golden(f, &self.p, &self.q)
    }
}
