//! Dense matrices over a cyclotomic field, and exact integer rank.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;

use crate::cyclo::CyclotomicNumber;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloMatrix {
    rows: usize,
    cols: usize,
    order: u64,
    data: Vec<CyclotomicNumber>,
}

impl CycloMatrix {
    pub fn zeros(rows: usize, cols: usize, order: u64) -> Self {
        CycloMatrix {
            rows,
            cols,
            order,
            data: vec![CyclotomicNumber::zero(order); rows * cols],
        }
    }

    pub fn identity(n: usize, order: u64) -> Self {
        Self::from_fn(n, n, order, |i, j| {
            CyclotomicNumber::from_integer(order, (i == j) as i64)
        })
    }

    /// Entries are lifted to Q(ζ_order).
    pub fn from_fn(
        rows: usize,
        cols: usize,
        order: u64,
        f: impl Fn(usize, usize) -> CyclotomicNumber,
    ) -> Self {
        let data = (0..rows * cols)
            .map(|k| f(k / cols, k % cols).lift(order))
            .collect();
        CycloMatrix {
            rows,
            cols,
            order,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &CyclotomicNumber {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[CyclotomicNumber] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &CycloMatrix) -> CycloMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let order = crate::arith::lcm(self.order, rhs.order);
        let (lhs, rhs) = (self.lift(order), rhs.lift(order));
        let data: Vec<CyclotomicNumber> = (0..lhs.rows)
            .into_par_iter()
            .flat_map_iter(|i| {
                let lhs = &lhs;
                let rhs = &rhs;
                (0..rhs.cols).map(move |j| {
                    let mut acc = CyclotomicNumber::zero(lhs.order);
                    for k in 0..lhs.cols {
                        let a = lhs.get(i, k);
                        if a.is_zero() {
                            continue;
                        }
                        let b = rhs.get(k, j);
                        if b.is_zero() {
                            continue;
                        }
                        acc += &(a * b);
                    }
                    acc
                })
            })
            .collect();
        CycloMatrix {
            rows: lhs.rows,
            cols: rhs.cols,
            order,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[CyclotomicNumber]) -> Vec<CyclotomicNumber> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .into_par_iter()
            .map(|i| {
                let mut acc = CyclotomicNumber::zero(self.order);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn lift(&self, order: u64) -> CycloMatrix {
        if order == self.order {
            return self.clone();
        }
        CycloMatrix {
            rows: self.rows,
            cols: self.cols,
            order,
            data: self.data.iter().map(|x| x.lift(order)).collect(),
        }
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> CycloMatrix {
        CycloMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: self.data.par_iter().map(CyclotomicNumber::conj).collect(),
        }
    }

    pub fn transpose(&self) -> CycloMatrix {
        let data = (0..self.rows * self.cols)
            .map(|k| self.get(k % self.rows, k / self.rows).clone())
            .collect();
        CycloMatrix {
            rows: self.cols,
            cols: self.rows,
            order: self.order,
            data,
        }
    }

    pub fn conj_transpose(&self) -> CycloMatrix {
        self.transpose().conj()
    }

    pub fn scale(&self, s: &CyclotomicNumber) -> CycloMatrix {
        let s = s.lift(crate::arith::lcm(self.order, s.order()));
        let order = s.order();
        CycloMatrix {
            rows: self.rows,
            cols: self.cols,
            order,
            data: self.data.par_iter().map(|x| &x.lift(order) * &s).collect(),
        }
    }

    /// Multiplies row i by `d[i]` (left multiplication by a diagonal matrix).
    pub fn scale_rows(&self, d: &[CyclotomicNumber]) -> CycloMatrix {
        assert_eq!(d.len(), self.rows);
        let data = (0..self.rows * self.cols)
            .into_par_iter()
            .map(|k| self.data[k].clone() * d[k / self.cols].clone())
            .collect();
        CycloMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data,
        }
    }

    pub fn pow(&self, e: u32) -> CycloMatrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = CycloMatrix::identity(self.rows, self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn embed(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(CyclotomicNumber::embed).collect())
            .collect()
    }

    /// The matrix as rational integers, if every entry is one.
    pub fn to_integer_matrix(&self) -> Option<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(CyclotomicNumber::to_integer)
                    .collect()
            })
            .collect()
    }
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][col].clone();
        for i in r + 1..rows {
            let factor = a[i][col].clone();
            for j in col + 1..cols {
                let v = (&pivot * &a[i][j] - &factor * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Submatrix of the first `k` columns.
pub fn leading_columns(m: &[Vec<BigInt>], k: usize) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row[..k.min(row.len())].to_vec())
        .collect()
}
