//! Fixed-point evaluation of Σ c_j exp(2πij/N) at arbitrary precision.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CyclotomicNumber;

const GUARD_BITS: u32 = 32;

/// A complex number held as two fixed-point mantissas with `frac_bits`
/// fractional bits, plus a certified absolute error bound.
#[derive(Clone, Debug, PartialEq)]
pub struct PreciseComplex {
    re: BigInt,
    im: BigInt,
    frac_bits: u32,
    bits: u32,
    l1_norm: f64,
}

impl PreciseComplex {
    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            fixed_to_f64(&self.re, self.frac_bits),
            fixed_to_f64(&self.im, self.frac_bits),
        )
    }

    /// Absolute error bound `2^{-(bits-4)} · Σ|c_j|`.
    pub fn error_bound(&self) -> f64 {
        self.l1_norm * (-(self.bits as f64 - 4.0)).exp2()
    }

    pub fn precision_bits(&self) -> u32 {
        self.bits
    }

    /// Decimal rendering of real and imaginary parts with `digits` digits
    /// after the point (truncated toward zero).
    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        (
            fixed_to_decimal(&self.re, self.frac_bits, digits),
            fixed_to_decimal(&self.im, self.frac_bits, digits),
        )
    }

    /// Number of decimal digits justified by the requested precision.
    pub fn significant_digits(&self) -> usize {
        ((self.bits.saturating_sub(4)) as f64 * std::f64::consts::LOG10_2).floor() as usize
    }
}

pub(super) fn embed(x: &CyclotomicNumber, bits: u32) -> PreciseComplex {
    let w = bits + GUARD_BITS;
    let pi = pi_fixed(w);
    let n = x.order() as i64;
    let (num, den) = x.raw_parts();
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    for (j, c) in num.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let j = j as i64;
        let signed = if 2 * j <= n { j } else { j - n };
        let theta = (&pi * BigInt::from(2 * signed)).div_floor(&BigInt::from(n));
        let (s, co) = sin_cos(&theta, w);
        re += c * co;
        im += c * s;
    }
    let re = re.div_floor(den);
    let im = im.div_floor(den);
    PreciseComplex {
        re,
        im,
        frac_bits: w,
        bits,
        l1_norm: x.l1_norm().to_f64().unwrap_or(f64::INFINITY),
    }
}

fn mul_fixed(a: &BigInt, b: &BigInt, w: u32) -> BigInt {
    (a * b) >> w
}

fn arctan_inv(x: u64, w: u32) -> BigInt {
    let one = BigInt::one() << w;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut term = one / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !term.is_zero() {
        let t = &term / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &x2;
        k += 1;
    }
    sum
}

/// π with `w` fractional bits, by Machin's formula.
fn pi_fixed(w: u32) -> BigInt {
    let ww = w + 8;
    let pi = arctan_inv(5, ww) * 16 - arctan_inv(239, ww) * 4;
    pi >> 8
}

/// (sin θ, cos θ) for |θ| ≤ π by Taylor series in fixed point.
fn sin_cos(theta: &BigInt, w: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << w;
    let t2 = mul_fixed(theta, theta, w);
    let mut sin = BigInt::zero();
    let mut cos = BigInt::zero();
    let mut term_s = theta.clone();
    let mut term_c = one;
    let mut k = 0u64;
    while !(term_s.is_zero() && term_c.is_zero()) {
        sin += &term_s;
        cos += &term_c;
        term_s = -mul_fixed(&term_s, &t2, w) / BigInt::from((2 * k + 2) * (2 * k + 3));
        term_c = -mul_fixed(&term_c, &t2, w) / BigInt::from((2 * k + 1) * (2 * k + 2));
        k += 1;
    }
    (sin, cos)
}

fn fixed_to_f64(x: &BigInt, w: u32) -> f64 {
    let bits = x.bits() as i64;
    let shift = bits - 60;
    if shift > 0 {
        (x >> shift as u32).to_f64().unwrap() * (shift as f64 - w as f64).exp2()
    } else {
        x.to_f64().unwrap() * (-(w as f64)).exp2()
    }
}

fn fixed_to_decimal(x: &BigInt, w: u32, digits: usize) -> String {
    let neg = x.is_negative();
    let scaled = (x.abs() * BigInt::from(10).pow(digits as u32)) >> w;
    let s = scaled.to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let pi = pi_fixed(200);
        assert_eq!(
            fixed_to_decimal(&pi, 200, 50),
            "3.14159265358979323846264338327950288419716939937510"
        );
    }

    #[test]
    fn one_and_eighth_root() {
        let one = CyclotomicNumber::one(1).embed_with_precision(128);
        assert_eq!(one.to_complex64(), Complex64::new(1.0, 0.0));
        let z = CyclotomicNumber::root_of_unity(1, 8).embed_with_precision(128);
        let (re, im) = z.to_decimal(30);
        assert_eq!(re, "0.707106781186547524400844362104");
        assert_eq!(im, re);
    }

    #[test]
    fn sqrt_two_to_high_precision() {
        let r = CyclotomicNumber::sqrt_nat(2)
            .unwrap()
            .embed_with_precision(160);
        let (re, im) = r.to_decimal(40);
        assert_eq!(re, "1.4142135623730950488016887242096980785696");
        assert!(
            im == "0.0000000000000000000000000000000000000000"
                || im.starts_with("-0.0000000000000000000000000000000000000000")
        );
        assert!(r.error_bound() < 1e-40);
    }
}
