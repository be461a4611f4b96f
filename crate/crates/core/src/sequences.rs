//! Fibonacci numbers, Fibonacci factorials, Fibonomials and Fibonacci divisors.
//!
//! Negative indices follow `F_{−m} = (−1)^{m+1} F_m`, which keeps `φⁿ = φFₙ + F_{n−1}`
//! valid for every signed `n`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::golden_ring::GoldenInt;
use crate::ring::sign_pow;
use crate::{Error, Result};

/// `Fₙ` by fast doubling: `F_{2m} = F_m(2F_{m+1} − F_m)`, `F_{2m+1} = F_m² + F_{m+1}²`.
pub fn fib(n: i64) -> BigInt {
    let m = n.unsigned_abs();
    let f = fib_pair(m).0;
    if n < 0 && m.is_multiple_of(2) {
        -f
    } else {
        f
    }
}

/// `(F_m, F_{m+1})`.
fn fib_pair(m: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..u64::BITS - m.leading_zeros()).rev() {
        let two_b = &b << 1u32;
        let c = &a * (two_b - &a);
        let d = &a * &a + &b * &b;
        if (m >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// `Fₙ` by plain iteration of the recurrence. Used to cross-check [`fib`].
pub fn fib_iterative(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `Fₙ! = F₁F₂⋯Fₙ`, with `F₀! = 1`.
pub fn fib_factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 0..n {
        acc *= &a;
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    acc
}

fn div_exact(num: &BigInt, den: &BigInt, what: &str) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "{what}: {num} is not divisible by {den}");
    q
}

/// The Fibonomial `[n k]_F = Fₙ!/(F_{n−k}! F_k!)`.
///
/// Computed as `∏_{i=1..k} F_{n−k+i}/F_i`; every prefix of that product is
/// itself a Fibonomial, so each division is exact.
pub fn fibonomial(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::FibonomialRange { n, k });
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= fib((n - k + i) as i64);
        acc = div_exact(&acc, &fib(i as i64), "fibonomial prefix");
    }
    Ok(acc)
}

/// The Fibonomial straight from the factorial formula.
pub fn fibonomial_by_factorials(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::FibonomialRange { n, k });
    }
    let den = fib_factorial(n - k) * fib_factorial(k);
    Ok(div_exact(&fib_factorial(n), &den, "fibonomial"))
}

/// The Fibonacci divisor `F⁽ᵏ⁾ₙ = F_{nk}/F_k`.
pub fn fib_divisor(k: u64, n: i64) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::DivisorIndex);
    }
    let k = k as i64;
    Ok(div_exact(&fib(n * k), &fib(k), "Fibonacci divisor"))
}

/// Both sides of the two golden Pascal recursions for `[n k]_F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalCheck {
    pub lhs: GoldenInt,
    /// `φ′ᵏ[n−1 k]_F + φ^{n−k}[n−1 k−1]_F`
    pub first: GoldenInt,
    /// `φᵏ[n−1 k]_F + φ′^{n−k}[n−1 k−1]_F`
    pub second: GoldenInt,
}

impl PascalCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.first && self.lhs == self.second
    }
}

pub fn golden_pascal(n: u64, k: u64) -> Result<PascalCheck> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::PascalRange { n, k });
    }
    let upper = GoldenInt::from(fibonomial(n - 1, k)?);
    let lower = GoldenInt::from(fibonomial(n - 1, k - 1)?);
    let (k, nk) = (k as i64, (n - k) as i64);
    Ok(PascalCheck {
        lhs: fibonomial(n, k as u64)?.into(),
        first: &GoldenInt::phi_conj_pow(k) * &upper + &GoldenInt::phi_pow(nk) * &lower,
        second: &GoldenInt::phi_pow(k) * &upper + &GoldenInt::phi_conj_pow(nk) * &lower,
    })
}

/// `φᵏF⁽ᵏ⁾ₙ + (−1)^{k+1}F⁽ᵏ⁾_{n−1}`, or its `φ′` analogue when `conjugate` is set.
///
/// Equals `(φᵏ)ⁿ` (resp. `(φ′ᵏ)ⁿ`).
pub fn divisor_power_form(k: u64, n: i64, conjugate: bool) -> Result<GoldenInt> {
    let base = if conjugate {
        GoldenInt::phi_conj_pow(k as i64)
    } else {
        GoldenInt::phi_pow(k as i64)
    };
    let tail = fib_divisor(k, n - 1)? * sign_pow(k as i64 + 1);
    Ok(&base * &GoldenInt::from(fib_divisor(k, n)?) + GoldenInt::from(tail))
}

/// Memo table for Fibonacci numbers and Fibonacci factorials.
///
/// Fill it through the `&mut self` methods (or [`FibCache::warm`]); afterwards the
/// `get_*` accessors take `&self`, so a warmed cache can be shared across threads.
#[derive(Clone, Debug, Default)]
pub struct FibCache {
    fibs: Vec<BigInt>,
    factorials: Vec<BigInt>,
}

impl FibCache {
    pub fn new() -> Self {
        Self {
            fibs: vec![BigInt::zero(), BigInt::one()],
            factorials: vec![BigInt::one()],
        }
    }

    /// Extends both tables through index `n`.
    pub fn warm(&mut self, n: u64) {
        let n = n as usize;
        if self.fibs.len() < 2 {
            *self = Self::new();
        }
        while self.fibs.len() <= n {
            let len = self.fibs.len();
            let next = &self.fibs[len - 1] + &self.fibs[len - 2];
            self.fibs.push(next);
        }
        while self.factorials.len() <= n {
            let len = self.factorials.len();
            let next = &self.factorials[len - 1] * &self.fibs[len];
            self.factorials.push(next);
        }
    }

    pub fn fib(&mut self, n: i64) -> BigInt {
        self.warm(n.unsigned_abs());
        self.get_fib(n).expect("warmed")
    }

    pub fn fib_factorial(&mut self, n: u64) -> BigInt {
        self.warm(n);
        self.factorials[n as usize].clone()
    }

    pub fn get_fib(&self, n: i64) -> Option<BigInt> {
        let f = self.fibs.get(n.unsigned_abs() as usize)?;
        Some(if n < 0 && n % 2 == 0 { -f } else { f.clone() })
    }

    pub fn get_fib_factorial(&self, n: u64) -> Option<&BigInt> {
        self.factorials.get(n as usize)
    }

    pub fn len(&self) -> usize {
        self.fibs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fibs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Recurrence oracle extended backwards with `F_{n−2} = F_n − F_{n−1}`.
    fn fib_oracle(n: i64) -> BigInt {
        let (mut lo, mut hi) = (b(0), b(1)); // F_0, F_1
        if n >= 0 {
            for _ in 0..n {
                let next = &lo + &hi;
                lo = std::mem::replace(&mut hi, next);
            }
            lo
        } else {
            for _ in 0..(-n) {
                let prev = &hi - &lo;
                hi = std::mem::replace(&mut lo, prev);
            }
            lo
        }
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(10), b(55));
        assert_eq!(fib(0), b(0));
        assert_eq!(fib(-3), b(2));
        assert_eq!(fib(-4), b(-3));
        for n in -60..=300 {
            assert_eq!(fib(n), fib_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn fast_doubling_matches_iteration() {
        for n in 0..=1000u64 {
            assert_eq!(fib(n as i64), fib_iterative(n));
        }
    }

    #[test]
    fn fibonomials() {
        assert_eq!(fibonomial(4, 2).unwrap(), b(6));
        assert_eq!(fibonomial(4, 1).unwrap(), b(3));
        for n in 0..10 {
            assert_eq!(fibonomial(n, 0).unwrap(), b(1));
        }
        let row: Vec<_> = (0..=4).map(|k| fibonomial(4, k).unwrap()).collect();
        assert_eq!(row, [1, 3, 6, 3, 1].map(b));
        assert_eq!(fibonomial(3, 4), Err(Error::FibonomialRange { n: 3, k: 4 }));
        for n in 0..=60 {
            for k in 0..=n {
                let f = fibonomial(n, k).unwrap();
                assert_eq!(f, fibonomial_by_factorials(n, k).unwrap());
                assert_eq!(f, fibonomial(n, n - k).unwrap());
            }
        }
    }

    #[test]
    fn divisors() {
        assert_eq!(fib_divisor(2, 3).unwrap(), b(8));
        assert_eq!(fib_divisor(7, 1).unwrap(), b(1));
        assert_eq!(fib_divisor(2, -1).unwrap(), b(-1));
        assert_eq!(fib_divisor(0, 3), Err(Error::DivisorIndex));
        for n in -100..=100 {
            assert_eq!(fib_divisor(1, n).unwrap(), fib(n));
        }
        let row: Vec<_> = (0..=4).map(|n| fib_divisor(2, n).unwrap()).collect();
        assert_eq!(row, [0, 1, 3, 8, 21].map(b));
    }

    #[test]
    fn pascal_recursions() {
        let c = golden_pascal(2, 1).unwrap();
        assert_eq!(c.lhs, GoldenInt::from(1));
        assert!(c.holds());
        assert!(golden_pascal(4, 2).unwrap().holds());
        assert!(golden_pascal(5, 1).unwrap().holds());
        assert!(golden_pascal(4, 4).is_err());
        assert!(golden_pascal(4, 0).is_err());
        assert!(golden_pascal(1, 1).is_err());
        for n in 2..=60 {
            for k in 1..n {
                assert!(golden_pascal(n, k).unwrap().holds(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn divisor_powers() {
        for k in 1..=12u64 {
            for n in 0..=40i64 {
                let direct = GoldenInt::phi_pow(k as i64).pow(n as u64);
                assert_eq!(divisor_power_form(k, n, false).unwrap(), direct);
                let direct = GoldenInt::phi_conj_pow(k as i64).pow(n as u64);
                assert_eq!(divisor_power_form(k, n, true).unwrap(), direct);
            }
        }
    }

    #[test]
    fn cache() {
        let mut c = FibCache::new();
        assert_eq!(c.fib(10), b(55));
        assert_eq!(c.fib(-4), b(-3));
        assert_eq!(c.fib_factorial(0), b(1));
        assert_eq!(c.fib_factorial(6), b(240));
        c.warm(100);
        assert_eq!(c.get_fib(100).unwrap(), fib(100));
        assert_eq!(c.get_fib(101), None);
        assert_eq!(c.get_fib_factorial(30).unwrap(), &fib_factorial(30));
        let mut d = FibCache::default();
        assert_eq!(d.fib(2), b(1));
    }
}
