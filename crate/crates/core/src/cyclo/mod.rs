//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! An element is stored in the power basis 1, ζ, …, ζ^{φ(N)-1} with integer
//! numerators over one positive common denominator. Every operation reduces
//! modulo Φ_N, so two elements of the same order are equal iff their stored
//! data are identical. Elements of different orders are compared and combined
//! in Q(ζ_lcm).

mod embed;
mod field;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factorize, lcm, square_free_split};
use crate::error::{Result, WeilError};

pub use embed::PreciseComplex;
pub use field::cyclotomic_polynomial;

#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    order: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    pub fn zero(order: u64) -> Self {
        let f = field::field(order);
        CyclotomicNumber {
            order,
            num: vec![BigInt::zero(); f.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(order: u64) -> Self {
        Self::from_integer(order, 1)
    }

    pub fn from_integer(order: u64, n: i64) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = BigInt::from(n);
        z
    }

    pub fn from_rational(order: u64, q: &BigRational) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = q.numer().clone();
        z.den = q.denom().clone();
        z.normalize();
        z
    }

    /// e(p/q) = exp(2πi p/q) as an element of Q(ζ_q).
    pub fn root_of_unity(p: i64, q: u64) -> Self {
        Self::root_in(p, q, q)
    }

    /// e(p/q) realised in Q(ζ_order); `q` must divide `order`.
    pub fn root_in(p: i64, q: u64, order: u64) -> Self {
        assert!(
            q >= 1 && order.is_multiple_of(q),
            "e({p}/{q}) does not live in Q(ζ_{order})"
        );
        let e = (p.rem_euclid(q as i64) as u64) * (order / q);
        Self::monomial(order, e as usize, BigInt::one())
    }

    /// `c · ζ_order^e` for `0 ≤ e < order`.
    fn monomial(order: u64, e: usize, c: BigInt) -> Self {
        let f = field::field(order);
        let mut raw = vec![BigInt::zero(); order as usize];
        raw[e] = c;
        CyclotomicNumber {
            order,
            num: reduce_raw(&f, raw),
            den: BigInt::one(),
        }
    }

    /// The positive square root of a positive integer, built from
    /// √2 = ζ_8 + ζ_8^{-1} and quadratic Gauss sums Σ_x e(x²/p).
    pub fn sqrt_nat(n: i64) -> Result<Self> {
        if n <= 0 {
            return Err(WeilError::NonPositiveSqrt(n));
        }
        let (s, f) = square_free_split(n as u64);
        let mut order = 1u64;
        for (p, _) in factorize(f) {
            order = lcm(order, sqrt_prime_order(p));
        }
        let mut acc = Self::from_integer(order, s as i64);
        for (p, _) in factorize(f) {
            acc = &acc * &sqrt_prime(p).lift(order);
        }
        Ok(acc)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Power-basis coefficients as rationals, index `j` for ζ^j.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// The value as a rational number, if it lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Re-expresses the element in Q(ζ_order); `self.order` must divide `order`.
    pub fn lift(&self, order: u64) -> Self {
        if order == self.order {
            return self.clone();
        }
        assert!(
            order.is_multiple_of(self.order),
            "cannot lift from order {} to {}",
            self.order,
            order
        );
        let step = (order / self.order) as usize;
        let f = field::field(order);
        let mut raw = vec![BigInt::zero(); order as usize];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                raw[j * step] = c.clone();
            }
        }
        let mut out = CyclotomicNumber {
            order,
            num: reduce_raw(&f, raw),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let f = field::field(self.order);
        let mut raw = vec![BigInt::zero(); n];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                raw[(n - j) % n] += c;
            }
        }
        let mut out = CyclotomicNumber {
            order: self.order,
            num: reduce_raw(&f, raw),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = CyclotomicNumber {
            order: self.order,
            num: self.num.iter().map(|c| c * q.numer()).collect(),
            den: &self.den * q.denom(),
        };
        out.normalize();
        out
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
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

    /// Floating-point embedding under ζ_N ↦ exp(2πi/N).
    pub fn embed(&self) -> Complex64 {
        let n = self.order as f64;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * j as f64 / n;
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            acc += Complex64::from_polar(c, angle);
        }
        acc
    }

    /// High-precision embedding. The returned error bound is at most
    /// `2^{-(bits - 4)} · Σ|c_j|` (see [`PreciseComplex::error_bound`]).
    pub fn embed_with_precision(&self, bits: u32) -> PreciseComplex {
        embed::embed(self, bits.max(53))
    }

    /// Σ |c_j|, the ℓ¹ norm of the power-basis coefficients.
    pub fn l1_norm(&self) -> BigRational {
        let s: BigInt = self.num.iter().map(|c| c.abs()).sum();
        BigRational::new(s, self.den.clone())
    }

    pub(crate) fn raw_parts(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    fn common_order(a: &Self, b: &Self) -> u64 {
        lcm(a.order, b.order)
    }
}

/// Orders of the fields carrying √p: 8 for p = 2, p for p ≡ 1 (4), 4p otherwise.
fn sqrt_prime_order(p: u64) -> u64 {
    match p {
        2 => 8,
        _ if p % 4 == 1 => p,
        _ => 4 * p,
    }
}

fn sqrt_prime(p: u64) -> CyclotomicNumber {
    if p == 2 {
        return &CyclotomicNumber::root_of_unity(1, 8) + &CyclotomicNumber::root_of_unity(-1, 8);
    }
    let order = sqrt_prime_order(p);
    let mut g = CyclotomicNumber::zero(order);
    for x in 0..p as i64 {
        g += &CyclotomicNumber::root_in(x * x, p, order);
    }
    if p % 4 == 1 {
        g
    } else {
        // g = i√p
        &g * &CyclotomicNumber::root_in(-1, 4, order)
    }
}

/// Reduces a vector of coefficients of ζ^0..ζ^{N-1} to the power basis.
fn reduce_raw(f: &field::Field, mut raw: Vec<BigInt>) -> Vec<BigInt> {
    let deg = f.degree;
    let (low, high) = raw.split_at_mut(deg);
    for (k, c) in high.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (i, &t) in f.reduction_of(deg + k).iter().enumerate() {
            if t != 0 {
                low[i] += c * t;
            }
        }
    }
    raw.truncate(deg);
    raw
}

fn small(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|c| c.to_i64()).collect()
}

/// Product of numerator vectors in i128, `None` on overflow.
fn mul_small(f: &field::Field, a: &[i64], b: &[i64]) -> Option<Vec<BigInt>> {
    let n = f.order as usize;
    let mut raw = vec![0i128; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let k = (i + j) % n;
            raw[k] = raw[k].checked_add(x as i128 * y as i128)?;
        }
    }
    let deg = f.degree;
    let mut out: Vec<i128> = raw[..deg].to_vec();
    for (k, &c) in raw[deg..].iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (i, &t) in f.reduction_of(deg + k).iter().enumerate() {
            if t != 0 {
                out[i] = out[i].checked_add(c.checked_mul(t as i128)?)?;
            }
        }
    }
    Some(out.into_iter().map(BigInt::from).collect())
}

fn mul_same_order(a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
    let f = field::field(a.order);
    let num = match (small(&a.num), small(&b.num)) {
        (Some(x), Some(y)) => mul_small(&f, &x, &y),
        _ => None,
    }
    .unwrap_or_else(|| {
        let n = f.order as usize;
        let mut raw = vec![BigInt::zero(); n];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    raw[(i + j) % n] += x * y;
                }
            }
        }
        reduce_raw(&f, raw)
    });
    let mut out = CyclotomicNumber {
        order: a.order,
        num,
        den: &a.den * &b.den,
    };
    out.normalize();
    out
}

fn add_same_order(a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
    let mut out = if a.den == b.den {
        CyclotomicNumber {
            order: a.order,
            num: a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect(),
            den: a.den.clone(),
        }
    } else {
        CyclotomicNumber {
            order: a.order,
            num: a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| x * &b.den + y * &a.den)
                .collect(),
            den: &a.den * &b.den,
        }
    };
    out.normalize();
    out
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        if self.order == rhs.order {
            mul_same_order(self, rhs)
        } else {
            let n = CyclotomicNumber::common_order(self, rhs);
            mul_same_order(&self.lift(n), &rhs.lift(n))
        }
    }
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        if self.order == rhs.order {
            add_same_order(self, rhs)
        } else {
            let n = CyclotomicNumber::common_order(self, rhs);
            add_same_order(&self.lift(n), &rhs.lift(n))
        }
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl Mul for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Add for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl AddAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn add_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = &*self + rhs;
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.den == other.den && self.num == other.num
        } else {
            let n = Self::common_order(self, other);
            let (a, b) = (self.lift(n), other.lift(n));
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·ζ{}", self.order)?,
                _ => write!(f, "({c})·ζ{}^{j}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
