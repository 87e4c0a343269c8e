//! The discriminant form (Z/2mZ, γ²/4m) of the lattice 2mZ.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::arith::{lcm, modulo};
use crate::cyclo::CyclotomicNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiscriminantForm {
    pub m: u64,
    /// (b⁺, b⁻)
    pub sig: (u32, u32),
}

impl DiscriminantForm {
    /// The form with the signature (2, 1) of the trace-zero matrix model.
    pub fn new(m: u64) -> Self {
        Self::with_signature(m, (2, 1))
    }

    pub fn with_signature(m: u64, sig: (u32, u32)) -> Self {
        assert!(m >= 1, "index m must be positive");
        DiscriminantForm { m, sig }
    }

    /// |L'/L| = 2m.
    pub fn size(&self) -> usize {
        2 * self.m as usize
    }

    pub fn level(&self) -> u64 {
        4 * self.m
    }

    /// Order N = lcm(8, 4m) of the cyclotomic field holding every scalar the
    /// Weil representation needs: e(1/8), e(γ²/4m), √2 and √m.
    pub fn field_order(&self) -> u64 {
        lcm(8, 4 * self.m)
    }

    pub fn reduce(&self, gamma: i64) -> u64 {
        modulo(gamma, 2 * self.m)
    }

    /// Q(γ) = γ²/4m mod 1.
    pub fn q_value(&self, gamma: i64) -> Rational64 {
        let g = self.reduce(gamma) as i64;
        let l = self.level() as i64;
        Rational64::new((g * g).rem_euclid(l), l)
    }

    /// (γ, δ) = γδ/2m mod 1.
    pub fn bilinear(&self, gamma: i64, delta: i64) -> Rational64 {
        let n = 2 * self.m as i64;
        let (g, d) = (self.reduce(gamma) as i64, self.reduce(delta) as i64);
        Rational64::new((g * d).rem_euclid(n), n)
    }

    /// e((b⁻ - b⁺)/8), the phase in ρ_L(S).
    pub fn s_phase(&self) -> CyclotomicNumber {
        let (bp, bm) = self.sig;
        CyclotomicNumber::root_in(bm as i64 - bp as i64, 8, self.field_order())
    }

    /// e(r) for a rational r whose denominator divides the field order.
    pub fn e(&self, r: Rational64) -> CyclotomicNumber {
        CyclotomicNumber::root_in(*r.numer(), *r.denom() as u64, self.field_order())
    }

    /// √(2m) in the session field.
    pub fn sqrt_size(&self) -> CyclotomicNumber {
        CyclotomicNumber::sqrt_nat(self.size() as i64)
            .expect("2m > 0")
            .lift(self.field_order())
    }

    /// Both sides of Milgram's formula: (Σ_γ e(Q(γ)), √|L'/L| · e((b⁺ - b⁻)/8)).
    pub fn milgram_sides(&self) -> (CyclotomicNumber, CyclotomicNumber) {
        let n = self.field_order();
        let mut lhs = CyclotomicNumber::zero(n);
        for g in 0..self.size() as i64 {
            lhs += &self.e(self.q_value(g));
        }
        let (bp, bm) = self.sig;
        let phase = CyclotomicNumber::root_in(bp as i64 - bm as i64, 8, n);
        (lhs, &self.sqrt_size() * &phase)
    }

    pub fn milgram_check(&self) -> bool {
        let (l, r) = self.milgram_sides();
        l == r
    }

    /// s(γ) = 1 if γ ≡ 0, m (mod 2m), else 2.
    pub fn s_factor(&self, gamma: i64) -> u32 {
        let g = self.reduce(gamma);
        if g == 0 || g == self.m {
            1
        } else {
            2
        }
    }

    /// The residue classes γ mod 2m with γ² ≡ n (mod 4m).
    pub fn square_roots_of(&self, n: i64) -> Vec<u64> {
        let l = self.level() as i64;
        (0..2 * self.m)
            .filter(|&g| ((g * g) as i64 - n).rem_euclid(l) == 0)
            .collect()
    }
}

/// { n mod 4m : (-1)^k n ≡ x² (mod 4m) for some x }.
pub fn square_classes(m: u64, k: i64) -> BTreeSet<u64> {
    let level = 4 * m;
    let squares: BTreeSet<u64> = (0..level).map(|x| x * x % level).collect();
    if k.rem_euclid(2) == 0 {
        squares
    } else {
        squares
            .into_iter()
            .map(|s| modulo(-(s as i64), level))
            .collect()
    }
}
