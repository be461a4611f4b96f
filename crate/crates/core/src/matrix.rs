//! Dense square matrices of arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::{Error, Result};

/// Row-major, always square, never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut entries = Vec::with_capacity(order * order);
        for r in 0..order {
            for c in 0..order {
                entries.push(f(r, c));
            }
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::NotSquare {
                rows: order,
                cols: bad.len(),
            });
        }
        Ok(Self {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(order: usize) -> Result<Self> {
        Self::from_fn(order, |r, c| BigInt::from((r == c) as u8))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.order + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.order..(r + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.order).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn add_identity(&self, c: &BigInt) -> Self {
        let mut out = self.clone();
        for i in 0..self.order {
            out.entries[i * self.order + i] += c;
        }
        out
    }

    /// Schoolbook product.
    ///
    /// # Panics
    /// If the orders differ.
    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, o.order, "matrix orders differ");
        let n = self.order;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * o.get(k, j);
                }
            }
        }
        IntMatrix { order: n, entries }
    }

    /// `Mᵏ` by repeated squaring; `M⁰` is the identity.
    pub fn pow(&self, mut k: u64) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.order).expect("order >= 1");
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Determinant by fraction-free Bareiss elimination with row pivoting.
    pub fn det(&self) -> BigInt {
        let n = self.order;
        let mut m = self.rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    let (q, rem) = num.div_rem(&prev);
                    assert!(rem.is_zero(), "Bareiss division must be exact");
                    m[i][j] = q;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.order {
            let line: Vec<String> = (0..self.order)
                .map(|c| format!("{:>width$}", cells[r * self.order + c]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Serialises as an array of rows of decimal strings, so huge entries survive JSON.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.order))?;
        for r in 0..self.order {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Laplace expansion along the first row.
    fn det_oracle(a: &IntMatrix) -> BigInt {
        fn go(rows: &[Vec<BigInt>]) -> BigInt {
            if rows.len() == 1 {
                return rows[0][0].clone();
            }
            let mut total = BigInt::zero();
            for c in 0..rows.len() {
                let minor: Vec<Vec<BigInt>> = rows[1..]
                    .iter()
                    .map(|r| [&r[..c], &r[c + 1..]].concat())
                    .collect();
                let term = &rows[0][c] * go(&minor);
                if c % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
        go(&a.rows())
    }

    #[test]
    fn construction_errors() {
        assert_eq!(IntMatrix::identity(0), Err(Error::EmptyOrder));
        let bad = IntMatrix::from_rows(vec![vec![BigInt::one()], vec![]]);
        assert_eq!(bad, Err(Error::NotSquare { rows: 2, cols: 1 }));
    }

    #[test]
    fn products_and_powers() {
        let a = m(&[&[0, 1], &[1, 1]]);
        assert_eq!(a.pow(5), m(&[&[3, 5], &[5, 8]]));
        assert_eq!(a.pow(0), IntMatrix::identity(2).unwrap());
        assert_eq!(a.trace(), BigInt::from(1));
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[0, 0, 1], &[0, 1, 1], &[1, 2, 1]]).det(), BigInt::from(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), BigInt::zero());
        assert_eq!(m(&[&[0, 0], &[0, 3]]).det(), BigInt::zero());
        assert_eq!(m(&[&[7]]).det(), BigInt::from(7));
    }

    fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..6).prop_flat_map(|n| {
            prop::collection::vec(-4i64..5, n * n).prop_map(move |v| {
                IntMatrix::from_fn(n, |r, c| BigInt::from(v[r * n + c])).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(a in arb_matrix()) {
            prop_assert_eq!(a.det(), det_oracle(&a));
        }

        #[test]
        fn det_is_multiplicative(a in arb_matrix()) {
            let b = a.pow(2);
            prop_assert_eq!(b.det(), a.det() * a.det());
        }
    }
}
