//! Harmonic Maass-Jacobi forms of weight k and index m through their
//! coefficients c±(D, r), the theta decomposition φ = Σ_μ h_μ θ_{m,μ}, and
//! the composite map to the plus space.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::Zero;

use crate::arith::is_prime;
use crate::discform::DiscriminantForm;
use crate::error::{Result, WeilError};
use crate::expansions::{
    inc_gamma, laplacian_fd_fn, Coeff, Evaluation, HarmonicExpansion, VectorForm,
};
use crate::isomap::{combine_to_scalar, split_to_vector};

/// Coefficients keyed by (D, r mod 2m) with D = r² - 4nm.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiForm {
    pub k: i64,
    pub m: u64,
    plus: BTreeMap<(i64, u64), Coeff>,
    minus: BTreeMap<(i64, u64), Coeff>,
    /// Stored data is complete for D in [d_min, d_max].
    d_window: (i64, i64),
}

impl JacobiForm {
    pub fn new(k: i64, m: u64, d_min: i64, d_max: i64) -> Self {
        assert!(m >= 1 && d_min <= d_max);
        JacobiForm {
            k,
            m,
            plus: BTreeMap::new(),
            minus: BTreeMap::new(),
            d_window: (d_min, d_max),
        }
    }

    pub fn d_window(&self) -> (i64, i64) {
        self.d_window
    }

    pub fn plus(&self) -> &BTreeMap<(i64, u64), Coeff> {
        &self.plus
    }

    pub fn minus(&self) -> &BTreeMap<(i64, u64), Coeff> {
        &self.minus
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    fn key(&self, d: i64, r: i64) -> Result<(i64, u64)> {
        let level = 4 * self.m as i64;
        if (r * r - d).rem_euclid(level) != 0 {
            return Err(WeilError::Support(format!(
                "D = {d} is not ≡ r² = {} (mod {level})",
                r * r
            )));
        }
        if d < self.d_window.0 || d > self.d_window.1 {
            return Err(WeilError::Support(format!(
                "D = {d} outside [{}, {}]",
                self.d_window.0, self.d_window.1
            )));
        }
        Ok((d, r.rem_euclid(2 * self.m as i64) as u64))
    }

    pub fn set_plus(&mut self, d: i64, r: i64, c: Coeff) -> Result<()> {
        let key = self.key(d, r)?;
        if c.is_zero() {
            self.plus.remove(&key);
        } else {
            self.plus.insert(key, c);
        }
        Ok(())
    }

    pub fn set_minus(&mut self, d: i64, r: i64, c: Coeff) -> Result<()> {
        if d <= 0 {
            return Err(WeilError::Support(format!(
                "non-holomorphic coefficient needs D > 0, got {d}"
            )));
        }
        let key = self.key(d, r)?;
        if c.is_zero() {
            self.minus.remove(&key);
        } else {
            self.minus.insert(key, c);
        }
        Ok(())
    }

    /// c±(D, r) = c±(D, -r) for every stored key.
    pub fn is_symmetric(&self) -> bool {
        let n = 2 * self.m;
        let mirror = |map: &BTreeMap<(i64, u64), Coeff>| {
            map.iter()
                .all(|(&(d, r), c)| map.get(&(d, (n - r) % n)) == Some(c))
        };
        mirror(&self.plus) && mirror(&self.minus)
    }

    /// Γ(3/2 - k, πDy/m) factor of the non-holomorphic terms.
    fn gamma_factor(&self, d: i64, y: f64) -> Result<f64> {
        inc_gamma(1.5 - self.k as f64, PI * d as f64 * y / self.m as f64)
    }

    /// Σ over stored keys and |r| ≤ radius of c±(D, r)·[Γ]·qⁿζʳ.
    pub fn eval_direct(&self, tau: Complex64, z: Complex64, radius: i64) -> Result<Evaluation> {
        check_tau(tau)?;
        let level = 4 * self.m as i64;
        let tail = theta_tail(self.m, tau, z, radius);
        let mut value = Complex64::zero();
        let mut bound = 0.0;
        let mut add = |d: i64, mu: u64, c: f64| {
            let two_m = 2 * self.m as i64;
            let mut r = mu as i64 - ((radius + mu as i64) / two_m) * two_m;
            let shift = Complex64::new(0.0, -2.0 * PI * d as f64 / level as f64) * tau;
            bound += c.abs() * shift.exp().norm() * tail;
            while r <= radius {
                if r >= -radius {
                    let n = Rational64::new(r * r - d, level);
                    let nf = *n.numer() as f64 / *n.denom() as f64;
                    let arg = Complex64::new(0.0, 2.0 * PI) * (nf * tau + r as f64 * z);
                    value += c * arg.exp();
                }
                r += two_m;
            }
        };
        for (&(d, mu), c) in &self.plus {
            add(d, mu, c.to_f64());
        }
        for (&(d, mu), c) in &self.minus {
            let g = self.gamma_factor(d, tau.im)?;
            add(d, mu, c.to_f64() * g);
        }
        Ok(Evaluation { value, bound })
    }
}

fn check_tau(tau: Complex64) -> Result<()> {
    if tau.im > 0.0 {
        Ok(())
    } else {
        Err(WeilError::NotInUpperHalfPlane(tau.to_string()))
    }
}

/// Bound on Σ_{|r| > radius} |q^{r²/4m} ζʳ|, infinite when the terms do
/// not yet decay at the cut.
fn theta_tail(m: u64, tau: Complex64, z: Complex64, radius: i64) -> f64 {
    let a = PI * tau.im / (2.0 * m as f64);
    let b = 2.0 * PI * z.im.abs();
    let r0 = (radius + 1) as f64;
    let ratio = (-a * (2.0 * r0 + 1.0) + b).exp();
    if ratio >= 1.0 {
        return f64::INFINITY;
    }
    let first = (-a * r0 * r0 + b * r0).exp();
    2.0 * first / (1.0 - ratio)
}

/// θ_{m,μ}(τ, z) summed over r ≡ μ (mod 2m), |r| ≤ radius, without checks.
pub fn theta_series_sum(m: u64, mu: i64, tau: Complex64, z: Complex64, radius: i64) -> Complex64 {
    let two_m = 2 * m as i64;
    let mu = mu.rem_euclid(two_m);
    let mut r = mu - ((radius + mu) / two_m) * two_m;
    let mut sum = Complex64::zero();
    while r <= radius {
        if r >= -radius {
            let e = (r * r) as f64 / (4 * m) as f64;
            sum += (Complex64::new(0.0, 2.0 * PI) * (e * tau + r as f64 * z)).exp();
        }
        r += two_m;
    }
    sum
}

/// θ_{m,μ}(τ, z) = Σ_{r ≡ μ (2m)} q^{r²/4m} ζʳ with a tail bound; rejects
/// radii whose bound exceeds `accuracy`.
pub fn theta_series_eval(
    m: u64,
    mu: i64,
    tau: Complex64,
    z: Complex64,
    radius: i64,
    accuracy: f64,
) -> Result<Evaluation> {
    check_tau(tau)?;
    let bound = theta_tail(m, tau, z, radius);
    if !(bound <= accuracy) {
        return Err(WeilError::TruncationTooLarge { bound, accuracy });
    }
    Ok(Evaluation {
        value: theta_series_sum(m, mu, tau, z, radius),
        bound,
    })
}

/// φ ↦ (h_μ)_μ with h_μ carrying c±(D, μ) at index -D/4m, as a dual-type
/// vector form of weight k - 1/2.
pub fn theta_decompose(phi: &JacobiForm) -> Result<VectorForm> {
    let df = DiscriminantForm::new(phi.m);
    let level = Rational64::from(df.level() as i64);
    let (d_min, d_max) = phi.d_window;
    let window = (
        Rational64::from(-d_max) / level,
        Rational64::from(-d_min) / level,
    );
    let mut out = VectorForm::zero(df, true, 2 * phi.k - 1, window);
    for (&(d, mu), c) in &phi.plus {
        let n = Rational64::from(-d) / level;
        let cur = out.component(mu as i64).minus(n);
        out.set(mu as i64, n, c.clone(), cur)?;
    }
    for (&(d, mu), c) in &phi.minus {
        let n = Rational64::from(-d) / level;
        let cur = out.component(mu as i64).plus(n);
        out.set(mu as i64, n, cur, c.clone())?;
    }
    Ok(out)
}

/// Inverse of [`theta_decompose`].
pub fn reconstruct(hs: &VectorForm) -> Result<JacobiForm> {
    if !hs.dual {
        return Err(WeilError::Invalid(
            "theta components transform with the dual representation".into(),
        ));
    }
    if hs.weight_num() % 2 == 0 {
        return Err(WeilError::Invalid(format!(
            "weight {}/2 is not half-integral",
            hs.weight_num()
        )));
    }
    if let Some((g, n)) = hs.support_violation() {
        return Err(WeilError::Support(format!(
            "component {g} has a coefficient at {n}"
        )));
    }
    let m = hs.df.m;
    let level = Rational64::from(hs.df.level() as i64);
    let comps = hs.components();
    let lo = comps
        .iter()
        .map(|c| c.window().0)
        .max()
        .expect("components");
    let hi = comps
        .iter()
        .map(|c| c.window().1)
        .min()
        .expect("components");
    let d_min = (-hi * level).ceil().to_integer();
    let d_max = (-lo * level).floor().to_integer();
    let mut phi = JacobiForm::new((hs.weight_num() + 1) / 2, m, d_min, d_max);
    for (mu, comp) in comps.iter().enumerate() {
        for (n, t) in comp.terms() {
            let d = (-*n * level).to_integer();
            if !t.plus.is_zero() {
                phi.set_plus(d, mu as i64, t.plus.clone())?;
            }
            if !t.minus.is_zero() {
                phi.set_minus(d, mu as i64, t.minus.clone())?;
            }
        }
    }
    Ok(phi)
}

/// Σ_μ h_μ(τ) θ_{m,μ}(τ, z), with the sum of the component tail bounds.
pub fn eval_decomposed(
    phi: &JacobiForm,
    tau: Complex64,
    z: Complex64,
    radius: i64,
) -> Result<Evaluation> {
    let hs = theta_decompose(phi)?;
    let tail = theta_tail(phi.m, tau, z, radius);
    let mut value = Complex64::zero();
    let mut bound = 0.0;
    for (mu, h) in hs.components().iter().enumerate() {
        if h.is_empty() {
            continue;
        }
        let he = h.eval_point(tau, f64::INFINITY)?;
        let th = theta_series_sum(phi.m, mu as i64, tau, z, radius);
        value += he.value * th;
        bound += (he.value.norm() + he.bound) * tail + he.bound * th.norm();
    }
    Ok(Evaluation { value, bound })
}

/// A term c·(2πi)^power with rational c.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Monomial {
    coeff: Rational64,
    power: i32,
}

impl Monomial {
    fn mul(self, o: Monomial) -> Monomial {
        Monomial {
            coeff: self.coeff * o.coeff,
            power: self.power + o.power,
        }
    }
}

/// The heat operator ∂_τ - (1/8πim)∂²_z on the single term q^{r²/4m}ζʳ,
/// as exact multiples of 2πi times the term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeatCertificate {
    /// ∂_τ contributes r²/4m.
    pub tau_part: Rational64,
    /// (1/8πim)∂²_z contributes (2πir)²/(8πim).
    pub z_part: Rational64,
    pub value: Rational64,
}

pub fn heat_operator_term_check(m: u64, r: i64) -> HeatCertificate {
    let m = m as i64;
    // ∂_τ q^a = (2πi)·a·q^a
    let dtau = Monomial {
        coeff: Rational64::new(r * r, 4 * m),
        power: 1,
    };
    // ∂²_z ζʳ = (2πi)²·r²·ζʳ and 1/(8πim) = (2πi)^{-1}/(4m)
    let dzz = Monomial {
        coeff: Rational64::from(r * r),
        power: 2,
    };
    let pref = Monomial {
        coeff: Rational64::new(1, 4 * m),
        power: -1,
    };
    let z_term = pref.mul(dzz);
    assert_eq!((dtau.power, z_term.power), (1, 1));
    HeatCertificate {
        tau_part: dtau.coeff,
        z_part: z_term.coeff,
        value: dtau.coeff - z_term.coeff,
    }
}

/// -2Δ_{k-1/2} φ + ((τ - τ̄)²/4πim) ∂_τ̄ ∂²_z φ by central differences,
/// Δ acting on τ at fixed z.
pub fn casimir_reduced_fd_fn(
    phi: impl Fn(Complex64, Complex64) -> Complex64,
    k: i64,
    m: u64,
    tau: Complex64,
    z: Complex64,
    h: f64,
) -> Complex64 {
    let w = k as f64 - 0.5;
    let lap = laplacian_fd_fn(|t| phi(t, z), w, tau, h);
    let hz = Complex64::new(h, 0.0);
    let dzz = |t: Complex64| (phi(t, z + hz) - 2.0 * phi(t, z) + phi(t, z - hz)) / (h * h);
    let dx = (dzz(tau + hz) - dzz(tau - hz)) / (2.0 * h);
    let hy = Complex64::new(0.0, h);
    let dy = (dzz(tau + hy) - dzz(tau - hy)) / (2.0 * h);
    let dbar = 0.5 * (dx + Complex64::i() * dy);
    let y = tau.im;
    // (τ - τ̄)² = -4y²
    let coeff = Complex64::new(-4.0 * y * y, 0.0) / Complex64::new(0.0, 4.0 * PI * m as f64);
    -2.0 * lap + coeff * dbar
}

/// [`casimir_reduced_fd_fn`] on φ evaluated through its theta decomposition.
pub fn casimir_reduced_fd(
    phi: &JacobiForm,
    tau: Complex64,
    z: Complex64,
    h: f64,
    radius: i64,
) -> Result<Complex64> {
    let hs = theta_decompose(phi)?;
    for t in [tau, tau - Complex64::new(0.0, 2.0 * h)] {
        check_tau(t)?;
    }
    // validate the incomplete gamma arguments once
    for c in hs.components() {
        c.eval_terms(tau)?;
    }
    let m = phi.m;
    let eval = |t: Complex64, zz: Complex64| -> Complex64 {
        hs.components()
            .iter()
            .enumerate()
            .filter(|(_, h)| !h.is_empty())
            .map(|(mu, h)| {
                h.eval_terms(t).expect("upper half-plane")
                    * theta_series_sum(m, mu as i64, t, zz, radius)
            })
            .sum()
    };
    Ok(casimir_reduced_fd_fn(eval, phi.k, m, tau, z, h))
}

fn check_thm2_hypotheses(k: i64, m: u64) -> Result<()> {
    if k.rem_euclid(2) != 0 {
        return Err(WeilError::OddWeight(k));
    }
    if m != 1 && !is_prime(m) {
        return Err(WeilError::IndexNotPrime(m));
    }
    Ok(())
}

/// φ ↦ Σ_μ h_μ(4mτ), an element of the plus space of weight k - 1/2.
pub fn thm2_map(phi: &JacobiForm) -> Result<HarmonicExpansion> {
    check_thm2_hypotheses(phi.k, phi.m)?;
    if !phi.is_symmetric() {
        return Err(WeilError::Invalid(
            "even weight needs c(D, -r) = c(D, r)".into(),
        ));
    }
    combine_to_scalar(&theta_decompose(phi)?, phi.k - 1)
}

/// Inverse of [`thm2_map`].
pub fn thm2_inverse(f: &HarmonicExpansion, m: u64, k: i64) -> Result<JacobiForm> {
    check_thm2_hypotheses(k, m)?;
    reconstruct(&split_to_vector(f, m, k - 1)?)
}
