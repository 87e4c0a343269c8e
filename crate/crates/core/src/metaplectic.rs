//! The integral metaplectic group Mp₂(Z).
//!
//! An element is a pair (M, φ) with M ∈ SL₂(Z) and φ(τ)² = cτ + d. Only two
//! branches exist for a given M, so φ is stored as a sign ε with
//! φ(τ) = ε·√(cτ + d), the square root taken on the principal branch
//! (argument in (-π, π]; for c = 0, d < 0 this gives √d = i√|d|).

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Result, WeilError};

/// Probe point for branch comparisons. cτ₀ + d is a negative real only
/// when c = 0 and d < 0, which is handled exactly.
const PROBE: Complex64 = Complex64::new(0.0, 2.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MpElement {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    /// +1 or -1
    pub sign: i8,
}

/// Principal square root of cτ + d.
pub fn principal_sqrt_affine(c: i64, d: i64, tau: Complex64) -> Complex64 {
    if c == 0 {
        let d = d as f64;
        if d >= 0.0 {
            Complex64::new(d.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-d).sqrt())
        }
    } else {
        (tau * c as f64 + d as f64).sqrt()
    }
}

fn mul_entry(x: i64, y: i64, z: i64, w: i64) -> i64 {
    x.checked_mul(y)
        .and_then(|p| z.checked_mul(w).and_then(|q| p.checked_add(q)))
        .expect("Mp2(Z) matrix entry overflow")
}

impl MpElement {
    pub const IDENTITY: MpElement = MpElement {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
        sign: 1,
    };
    pub const T: MpElement = MpElement {
        a: 1,
        b: 1,
        c: 0,
        d: 1,
        sign: 1,
    };
    pub const S: MpElement = MpElement {
        a: 0,
        b: -1,
        c: 1,
        d: 0,
        sign: 1,
    };
    /// Z = S² = (-I, i).
    pub const Z: MpElement = MpElement {
        a: -1,
        b: 0,
        c: 0,
        d: -1,
        sign: 1,
    };

    /// The lift M̃ = (M, √(cτ + d)).
    pub fn tilde(m: [i64; 4]) -> Result<Self> {
        let [a, b, c, d] = m;
        if a.checked_mul(d).zip(b.checked_mul(c)).map(|(x, y)| x - y) != Some(1) {
            return Err(WeilError::NotUnimodular(m));
        }
        Ok(MpElement {
            a,
            b,
            c,
            d,
            sign: 1,
        })
    }

    pub fn matrix(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn t_power(k: i64) -> Self {
        MpElement {
            a: 1,
            b: k,
            c: 0,
            d: 1,
            sign: 1,
        }
    }

    /// φ(τ).
    pub fn branch_value(&self, tau: Complex64) -> Complex64 {
        principal_sqrt_affine(self.c, self.d, tau) * self.sign as f64
    }

    /// (M, φ)(M', φ') = (MM', φ(M'τ)φ'(τ)).
    pub fn mul(&self, rhs: &MpElement) -> MpElement {
        let a = mul_entry(self.a, rhs.a, self.b, rhs.c);
        let b = mul_entry(self.a, rhs.b, self.b, rhs.d);
        let c = mul_entry(self.c, rhs.a, self.d, rhs.c);
        let d = mul_entry(self.c, rhs.b, self.d, rhs.d);
        // φ(M'τ)² = c·M'τ + d = (c''τ + d'') / (c'τ + d'), evaluated without cancellation
        let outer = if self.c == 0 {
            principal_sqrt_affine(0, self.d, PROBE)
        } else {
            let w = (PROBE * c as f64 + d as f64) / (PROBE * rhs.c as f64 + rhs.d as f64);
            w.sqrt()
        };
        let v = outer * self.sign as f64 * rhs.branch_value(PROBE);
        let s = principal_sqrt_affine(c, d, PROBE);
        let sign = if (v * s.conj()).re > 0.0 { 1 } else { -1 };
        MpElement { a, b, c, d, sign }
    }

    pub fn inverse(&self) -> MpElement {
        let candidate = MpElement {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
            sign: 1,
        };
        if self.mul(&candidate).sign == 1 {
            candidate
        } else {
            MpElement {
                sign: -1,
                ..candidate
            }
        }
    }

    pub fn pow(&self, n: i64) -> MpElement {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.unsigned_abs()).fold(MpElement::IDENTITY, |acc, _| acc.mul(&base))
    }

    /// Action on the upper half plane.
    pub fn act(&self, tau: Complex64) -> Complex64 {
        (tau * self.a as f64 + self.b as f64) / (tau * self.c as f64 + self.d as f64)
    }

    /// Writes the element as a word in S, S⁻¹, T, T⁻¹ and Z.
    ///
    /// The bottom row is reduced by T-shifts and S-inversions (a continued
    /// fraction expansion); what is left is T^b times a power of Z.
    pub fn decompose(&self) -> Word {
        let mut h = *self;
        let mut tokens = Vec::new();
        while h.c != 0 {
            let k = nearest_quotient(h.a, h.c);
            h = MpElement::t_power(-k).mul(&h);
            h = MpElement::S.mul(&h);
            push_t_power(&mut tokens, k);
            tokens.push(Gen::SInv);
        }
        // h = ((±1, b), (0, ±1)) = T^{a·b} · Z^j
        let shift = h.a * h.b;
        let t = MpElement::t_power(shift);
        let j = (0..4)
            .find(|&j| t.mul(&MpElement::Z.pow(j)) == h)
            .expect("central element accounts for the remainder");
        push_t_power(&mut tokens, shift);
        tokens.extend(std::iter::repeat_n(Gen::Z, j as usize));
        Word(tokens)
    }
}

fn nearest_quotient(a: i64, c: i64) -> i64 {
    // round(a / c), ties toward -inf
    Integer::div_floor(&(2 * a + c.abs()), &(2 * c.abs())) * c.signum()
}

fn push_t_power(tokens: &mut Vec<Gen>, k: i64) {
    let g = if k >= 0 { Gen::T } else { Gen::TInv };
    tokens.extend(std::iter::repeat_n(g, k.unsigned_abs() as usize));
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gen {
    S,
    SInv,
    T,
    TInv,
    Z,
}

impl Gen {
    pub fn element(self) -> MpElement {
        match self {
            Gen::S => MpElement::S,
            Gen::SInv => MpElement::S.inverse(),
            Gen::T => MpElement::T,
            Gen::TInv => MpElement::t_power(-1),
            Gen::Z => MpElement::Z,
        }
    }

    fn token(self) -> &'static str {
        match self {
            Gen::S => "S",
            Gen::SInv => "S'",
            Gen::T => "T",
            Gen::TInv => "T'",
            Gen::Z => "Z",
        }
    }
}

/// A word over {S, S', T, T', Z}, read left to right as a product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn product(&self) -> MpElement {
        self.0
            .iter()
            .fold(MpElement::IDENTITY, |acc, g| acc.mul(&g.element()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<&str> = self.0.iter().map(|g| g.token()).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

impl FromStr for Word {
    type Err = WeilError;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| match t {
                "S" => Ok(Gen::S),
                "S'" => Ok(Gen::SInv),
                "T" => Ok(Gen::T),
                "T'" => Ok(Gen::TInv),
                "Z" => Ok(Gen::Z),
                other => Err(WeilError::Parse(format!(
                    "unknown generator token {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}
