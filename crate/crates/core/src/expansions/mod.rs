//! Two-part Fourier expansions f = f⁺ + f⁻ of harmonic weak Maass forms.
//!
//! A term at index n contributes
//! `c⁺(n) qⁿ + c⁻(n) Γ(1 - w, 4π|n|y) qⁿ` with w the weight and c⁻ only
//! for n < 0. Indices are rationals so the same type serves scalar forms
//! (integral n) and components of vector-valued forms (n ∈ Z ± Q(γ)).

mod laplacian;
mod special;
mod vector;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::{BigRational, Rational64};
use num_traits::{ToPrimitive, Zero};

use crate::discform::square_classes;
use crate::error::{Result, WeilError};

pub use laplacian::{laplacian_fd, laplacian_fd_fn};
pub use special::inc_gamma;
pub(crate) use vector::embed;
pub use vector::{
    verify_s_transform, verify_t_transform, PointDeviation, TransformReport, VectorEvaluation,
    VectorForm,
};

/// A Fourier coefficient, exact or floating.
#[derive(Clone, Debug, PartialEq)]
pub enum Coeff {
    Exact(BigRational),
    Float(f64),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Exact(BigRational::zero())
    }

    pub fn int(n: i64) -> Self {
        Coeff::Exact(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Coeff::Exact(BigRational::new(n.into(), d.into()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Exact(r) => r.is_zero(),
            Coeff::Float(x) => *x == 0.0,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Coeff::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Coeff::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Coeff::Float(x) => *x,
        }
    }

    pub fn abs(&self) -> f64 {
        self.to_f64().abs()
    }

    /// Sum; exact only if both sides are.
    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Exact(a), Coeff::Exact(b)) => Coeff::Exact(a + b),
            _ => Coeff::Float(self.to_f64() + other.to_f64()),
        }
    }

    pub fn div_int(&self, d: i64) -> Coeff {
        match self {
            Coeff::Exact(a) => Coeff::Exact(a / BigRational::from_integer(d.into())),
            Coeff::Float(x) => Coeff::Float(x / d as f64),
        }
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::int(n)
    }
}

impl From<f64> for Coeff {
    fn from(x: f64) -> Self {
        Coeff::Float(x)
    }
}

/// Exact values print as `num/den`.
impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Coeff::Float(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for Coeff {
    type Err = WeilError;

    /// `num/den` or an integer is exact; anything else must parse as a float.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(r) = parse_big_rational(s) {
            return Ok(Coeff::Exact(r));
        }
        s.parse::<f64>()
            .map(Coeff::Float)
            .map_err(|_| WeilError::Parse(format!("bad coefficient `{s}`")))
    }
}

fn parse_big_rational(s: &str) -> Result<BigRational> {
    let bad = || WeilError::Parse(format!("bad rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Parses `num/den` or an integer into an index.
pub fn parse_index(s: &str) -> Result<Rational64> {
    let r = parse_big_rational(s.trim())?;
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Ok(Rational64::new(n, d)),
        _ => Err(WeilError::Parse(format!("index `{s}` out of range"))),
    }
}

pub fn format_index(n: Rational64) -> String {
    format!("{}/{}", n.numer(), n.denom())
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Term {
    pub plus: Coeff,
    pub minus: Coeff,
}

impl Term {
    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }
}

/// Value of a truncated sum with a bound on the omitted tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicExpansion {
    weight_num: i64,
    terms: BTreeMap<Rational64, Term>,
    window: (Rational64, Rational64),
}

impl HarmonicExpansion {
    /// Zero expansion of weight `weight_num/2`, complete on `window`.
    pub fn new(weight_num: i64, window: (Rational64, Rational64)) -> Self {
        assert!(window.0 <= window.1, "empty window");
        HarmonicExpansion {
            weight_num,
            terms: BTreeMap::new(),
            window,
        }
    }

    /// θ(τ) = Σ_{x∈Z} q^{x²}, weight 1/2, complete on [0, n_max].
    pub fn theta(n_max: i64) -> Self {
        let mut f = Self::new(1, (Rational64::from(0), Rational64::from(n_max)));
        let mut x = 0i64;
        while x * x <= n_max {
            let c = if x == 0 { 1 } else { 2 };
            f.set_plus(Rational64::from(x * x), Coeff::int(c))
                .expect("inside window");
            x += 1;
        }
        f
    }

    pub fn weight_num(&self) -> i64 {
        self.weight_num
    }

    pub fn weight(&self) -> f64 {
        self.weight_num as f64 / 2.0
    }

    pub fn window(&self) -> (Rational64, Rational64) {
        self.window
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational64, &Term)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, n: Rational64) -> Option<&Term> {
        self.terms.get(&n)
    }

    pub fn plus(&self, n: Rational64) -> Coeff {
        self.terms
            .get(&n)
            .map(|t| t.plus.clone())
            .unwrap_or_default()
    }

    pub fn minus(&self, n: Rational64) -> Coeff {
        self.terms
            .get(&n)
            .map(|t| t.minus.clone())
            .unwrap_or_default()
    }

    pub fn is_exact(&self) -> bool {
        self.terms
            .values()
            .all(|t| t.plus.is_exact() && t.minus.is_exact())
    }

    /// Stores both parts at index `n`; a zero term is removed.
    pub fn set(&mut self, n: Rational64, plus: Coeff, minus: Coeff) -> Result<()> {
        if n < self.window.0 || n > self.window.1 {
            return Err(WeilError::Support(format!(
                "index {} outside window [{}, {}]",
                n, self.window.0, self.window.1
            )));
        }
        if !minus.is_zero() && n >= Rational64::zero() {
            return Err(WeilError::Support(format!(
                "non-holomorphic coefficient at index {n} >= 0"
            )));
        }
        let term = Term { plus, minus };
        if term.is_zero() {
            self.terms.remove(&n);
        } else {
            self.terms.insert(n, term);
        }
        Ok(())
    }

    pub fn set_plus(&mut self, n: Rational64, c: Coeff) -> Result<()> {
        let minus = self.minus(n);
        self.set(n, c, minus)
    }

    pub fn set_minus(&mut self, n: Rational64, c: Coeff) -> Result<()> {
        let plus = self.plus(n);
        self.set(n, plus, c)
    }

    /// Adds to the coefficients already stored at `n`.
    pub fn accumulate(&mut self, n: Rational64, plus: &Coeff, minus: &Coeff) -> Result<()> {
        let cur = self.terms.get(&n).cloned().unwrap_or_default();
        self.set(n, cur.plus.add(plus), cur.minus.add(minus))
    }

    /// Γ order 1 - w of the non-holomorphic terms.
    fn gamma_order(&self) -> f64 {
        1.0 - self.weight()
    }

    /// The truncated sum at τ with no tail estimate.
    pub fn eval_terms(&self, tau: Complex64) -> Result<Complex64> {
        if !(tau.im > 0.0) {
            return Err(WeilError::NotInUpperHalfPlane(tau.to_string()));
        }
        let a = self.gamma_order();
        let mut sum = Complex64::zero();
        for (n, t) in &self.terms {
            let nf = *n.numer() as f64 / *n.denom() as f64;
            let qn = (Complex64::new(0.0, 2.0 * PI * nf) * tau).exp();
            let mut c = t.plus.to_f64();
            if !t.minus.is_zero() {
                c += t.minus.to_f64() * inc_gamma(a, 4.0 * PI * nf.abs() * tau.im)?;
            }
            sum += qn * c;
        }
        Ok(sum)
    }

    /// Evaluates at τ with the default growth exponent `weight_num + 1`,
    /// rejecting τ when the tail bound exceeds `accuracy`.
    pub fn eval_point(&self, tau: Complex64, accuracy: f64) -> Result<Evaluation> {
        self.eval_point_with_growth(tau, accuracy, (self.weight_num + 1) as f64)
    }

    /// Tail bound assumes |c±(n)| ≤ C±·max(1, |n|)^growth with C± the
    /// smallest constant fitting the stored coefficients.
    pub fn eval_point_with_growth(
        &self,
        tau: Complex64,
        accuracy: f64,
        growth: f64,
    ) -> Result<Evaluation> {
        let value = self.eval_terms(tau)?;
        let bound = self.tail_bound(tau.im, growth);
        if !(bound <= accuracy) {
            return Err(WeilError::TruncationTooLarge { bound, accuracy });
        }
        Ok(Evaluation { value, bound })
    }

    pub fn tail_bound(&self, y: f64, growth: f64) -> f64 {
        let weight = |n: &Rational64| {
            let nf = (*n.numer() as f64 / *n.denom() as f64).abs();
            nf.max(1.0).powf(growth)
        };
        let (mut c_plus, mut c_minus) = (0.0f64, 0.0f64);
        for (n, t) in &self.terms {
            c_plus = c_plus.max(t.plus.abs() / weight(n));
            c_minus = c_minus.max(t.minus.abs() / weight(n));
        }
        let decay = 2.0 * PI * y;
        let (lo, hi) = self.window;
        let to_f = |r: Rational64| *r.numer() as f64 / *r.denom() as f64;
        let mut bound = 0.0;
        if c_plus > 0.0 {
            // indices n > hi, at most one per unit interval
            bound += c_plus * geometric_tail(to_f(hi), decay, 0.0, growth);
        }
        if c_minus > 0.0 {
            // indices n < lo < 0; Γ(a, x) ≤ K x^{a-1} e^{-x}
            let start = -to_f(lo);
            let a = self.gamma_order();
            let x0 = 4.0 * PI * start * y;
            let k = if a <= 1.0 {
                1.0
            } else if x0 > 2.0 * (a - 1.0) {
                1.0 / (1.0 - (a - 1.0) / x0)
            } else {
                return f64::INFINITY;
            };
            let pref = k * (4.0 * PI * y).powf(a - 1.0);
            // |qⁿ| e^{-4π|n|y} = e^{-2π|n|y}
            bound += c_minus * pref * geometric_tail(start, decay, a - 1.0, growth + a - 1.0);
        }
        bound
    }

    /// Multiplies every coefficient by `s`.
    pub fn scaled(&self, s: &Coeff) -> HarmonicExpansion {
        let mul = |c: &Coeff| match (c, s) {
            (Coeff::Exact(a), Coeff::Exact(b)) => Coeff::Exact(a * b),
            _ => Coeff::Float(c.to_f64() * s.to_f64()),
        };
        let mut out = HarmonicExpansion::new(self.weight_num, self.window);
        for (n, t) in &self.terms {
            out.set(*n, mul(&t.plus), mul(&t.minus))
                .expect("same window");
        }
        out
    }
}

/// Σ_{j≥0} max_{t∈[s+j, s+j+1]} env(t) · e^{-decay(s+j)} with s = start and
/// env(t) = t^low below 1, t^p above. Summed explicitly until the term
/// ratio drops below 1/2, then closed with a geometric series.
fn geometric_tail(start: f64, decay: f64, low: f64, p: f64) -> f64 {
    let env = |t: f64| if t < 1.0 { t.powf(low) } else { t.powf(p) };
    let env_max = |t0: f64, t1: f64| {
        let mut m = env(t0).max(env(t1));
        if t0 < 1.0 && t1 > 1.0 {
            m = m.max(1.0);
        }
        m
    };
    let term = |j: f64| env_max(start + j, start + j + 1.0) * (-decay * (start + j)).exp();
    let mut sum = 0.0;
    let mut j = 0.0;
    loop {
        let t = term(j);
        if !t.is_finite() {
            return f64::INFINITY;
        }
        if start + j >= 1.0 {
            let ratio = if p >= 0.0 {
                // ((t+2)/(t+1))^p decreases in t
                ((start + j + 2.0) / (start + j + 1.0)).powf(p) * (-decay).exp()
            } else {
                (-decay).exp()
            };
            if ratio < 0.5 || j > 1e6 {
                if ratio >= 1.0 {
                    return f64::INFINITY;
                }
                return sum + t / (1.0 - ratio);
            }
        }
        sum += t;
        j += 1.0;
    }
}

/// Every stored nonzero coefficient sits at an integer n with
/// (-1)^k n ≡ □ (mod 4m).
pub fn plus_space_check(f: &HarmonicExpansion, m: u64, k: i64) -> bool {
    let classes = square_classes(m, k);
    let level = 4 * m as i64;
    f.terms().all(|(n, _)| {
        n.is_integer() && classes.contains(&(n.to_integer().rem_euclid(level) as u64))
    })
}
