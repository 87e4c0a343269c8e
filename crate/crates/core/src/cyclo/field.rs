//! Per-order data for Q(ζ_N): the cyclotomic polynomial and a table reducing
//! every power ζ^e, deg Φ_N ≤ e < N, to the power basis.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{divisors, euler_phi, mobius};

#[derive(Debug)]
pub(crate) struct Field {
    pub order: u64,
    pub degree: usize,
    /// `reduce[e - degree][i]` is the coefficient of ζ^i in ζ^e.
    reduce: Vec<Vec<i64>>,
}

impl Field {
    fn new(order: u64) -> Self {
        let poly = cyclotomic_polynomial(order);
        let degree = poly.len() - 1;
        debug_assert_eq!(degree as u64, euler_phi(order));
        let mut reduce = Vec::with_capacity(order as usize - degree);
        // x^degree = -(Φ - x^degree)
        let mut current: Vec<i64> = poly[..degree].iter().map(|c| -c).collect();
        for _ in degree..order as usize {
            reduce.push(current.clone());
            // multiply by x and fold the overflowing x^degree term back
            let top = current[degree - 1];
            for i in (1..degree).rev() {
                current[i] = current[i - 1];
            }
            current[0] = 0;
            if top != 0 {
                for i in 0..degree {
                    current[i] = current[i]
                        .checked_sub(top.checked_mul(poly[i]).expect("reduction overflow"))
                        .expect("reduction overflow");
                }
            }
        }
        Field {
            order,
            degree,
            reduce,
        }
    }

    pub fn reduction_of(&self, e: usize) -> &[i64] {
        &self.reduce[e - self.degree]
    }
}

static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Field>>>> = OnceLock::new();

pub(crate) fn field(order: u64) -> Arc<Field> {
    assert!(order >= 1, "cyclotomic order must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&order) {
        return Arc::clone(f);
    }
    let built = Arc::new(Field::new(order));
    let mut guard = cache.lock().unwrap();
    Arc::clone(guard.entry(order).or_insert(built))
}

/// Coefficients of Φ_n, lowest degree first, from the Möbius product
/// Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut num = vec![1i64];
    let mut dens = Vec::new();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = mul_x_pow_minus_one(&num, d as usize),
            -1 => dens.push(d as usize),
            _ => {}
        }
    }
    for d in dens {
        num = div_x_pow_minus_one(&num, d);
    }
    num
}

fn mul_x_pow_minus_one(p: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + d];
    for (i, &c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

fn div_x_pow_minus_one(p: &[i64], d: usize) -> Vec<i64> {
    let deg = p.len() - 1;
    let mut q = vec![0i64; deg - d + 1];
    for i in (d..=deg).rev() {
        let carried = if i <= deg - d { q[i] } else { 0 };
        q[i - d] = p[i] + carried;
    }
    // remainder check: low coefficients must match -q
    debug_assert!((0..d).all(|i| p[i] == -q.get(i).copied().unwrap_or(0)));
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        let phi105 = cyclotomic_polynomial(105);
        assert_eq!(phi105.len(), 49);
        // famous first coefficient of absolute value 2
        assert_eq!(phi105[7], -2);
    }

    #[test]
    fn reduction_table_wraps_to_one() {
        for n in [1u64, 3, 8, 12, 24, 35] {
            let f = field(n);
            if (f.degree as u64) < n {
                // ζ^N = 1 follows from ζ^(N-1) * ζ; check ζ^(N-1) * ζ reduces to 1 by hand
                let last = f.reduction_of(n as usize - 1).to_vec();
                let mut shifted = vec![0i64; f.degree + 1];
                for (i, c) in last.iter().enumerate() {
                    shifted[i + 1] += c;
                }
                let top = shifted[f.degree];
                let poly = cyclotomic_polynomial(n);
                let mut reduced: Vec<i64> = shifted[..f.degree].to_vec();
                for i in 0..f.degree {
                    reduced[i] -= top * poly[i];
                }
                let mut one = vec![0i64; f.degree];
                one[0] = 1;
                assert_eq!(reduced, one, "order {n}");
            }
        }
    }
}
