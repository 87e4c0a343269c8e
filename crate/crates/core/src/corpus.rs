//! Seeded random corpora: Γ₀(4m) elements, plus-space expansions and
//! Jacobi coefficient tables. The same seed always yields the same corpus.

use num_rational::Rational64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::mod_inverse;
use crate::discform::square_classes;
use crate::expansions::{Coeff, HarmonicExpansion};
use crate::jacobi::JacobiForm;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small nonzero rational.
fn coeff(rng: &mut impl Rng) -> Coeff {
    let mut n = rng.gen_range(-9i64..=9);
    if n == 0 {
        n = 1;
    }
    Coeff::ratio(n, rng.gen_range(1..=4))
}

/// (a b; c d) ∈ Γ₀(4m) with d > 0. Both signs of a occur.
pub fn random_gamma0(rng: &mut impl Rng, m: u64) -> [i64; 4] {
    let level = 4 * m as i64;
    let t = rng.gen_range(-6i64..=6);
    if t == 0 {
        return [1, rng.gen_range(-20..=20), 0, 1];
    }
    let c = level * t;
    let d = loop {
        let d = rng.gen_range(1i64..=80);
        if num_integer::gcd(d, c) == 1 {
            break d;
        }
    };
    let a0 = mod_inverse(d, c.unsigned_abs()).expect("coprime") as i64;
    // a0·d - b0·c = 1
    let b0 = (a0 * d - 1) / c;
    let s = rng.gen_range(-3i64..=3);
    [a0 + s * c, b0 + s * d, c, d]
}

/// Random element of the plus space for (m, k) with weight k + 1/2,
/// complete on [lo, hi]; c⁻ only at negative indices. Roughly `density` of
/// the admissible indices carry data.
pub fn random_plus_space(
    rng: &mut impl Rng,
    m: u64,
    k: i64,
    lo: i64,
    hi: i64,
    density: f64,
) -> HarmonicExpansion {
    let classes = square_classes(m, k);
    let level = 4 * m as i64;
    let mut f = HarmonicExpansion::new(2 * k + 1, (Rational64::from(lo), Rational64::from(hi)));
    for n in lo..=hi {
        if !classes.contains(&(n.rem_euclid(level) as u64)) || !rng.gen_bool(density) {
            continue;
        }
        let plus = if rng.gen_bool(0.8) {
            coeff(rng)
        } else {
            Coeff::zero()
        };
        let minus = if n < 0 && rng.gen_bool(0.5) {
            coeff(rng)
        } else {
            Coeff::zero()
        };
        f.set(Rational64::from(n), plus, minus)
            .expect("index inside window");
    }
    f
}

/// Random Jacobi coefficients on D ∈ [d_min, d_max]. With `symmetric`,
/// c±(D, -r) = c±(D, r).
pub fn random_jacobi(
    rng: &mut impl Rng,
    k: i64,
    m: u64,
    d_min: i64,
    d_max: i64,
    density: f64,
    symmetric: bool,
) -> JacobiForm {
    let mut phi = JacobiForm::new(k, m, d_min, d_max);
    let two_m = 2 * m as i64;
    let level = 4 * m as i64;
    for d in d_min..=d_max {
        for r in 0..two_m {
            if (r * r - d).rem_euclid(level) != 0 {
                continue;
            }
            if symmetric && (two_m - r) % two_m < r {
                continue;
            }
            let mirrors = if symmetric { vec![r, -r] } else { vec![r] };
            if rng.gen_bool(density) {
                let c = coeff(rng);
                for &s in &mirrors {
                    phi.set_plus(d, s, c.clone()).expect("valid key");
                }
            }
            if d > 0 && rng.gen_bool(density / 2.0) {
                let c = coeff(rng);
                for &s in &mirrors {
                    phi.set_minus(d, s, c.clone()).expect("valid key");
                }
            }
        }
    }
    phi
}
