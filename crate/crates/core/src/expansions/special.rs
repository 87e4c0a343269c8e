//! Upper incomplete gamma Γ(a, y) for half-integral a.

use std::f64::consts::PI;

use crate::error::{Result, WeilError};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Γ(a, y) = ∫_y^∞ e^{-t} t^{a-1} dt for a ∈ ½Z and y > 0.
///
/// Half-odd a start from Γ(1/2, y) = √π·erfc(√y), integral a from
/// Γ(1, y) = e^{-y} (or Γ(0, y) = E₁(y)); both then follow
/// Γ(s+1, y) = sΓ(s, y) + y^s e^{-y} up or down. The downward recurrence
/// cancels badly once y is large, so for a < 1/2 and y > 2 the Legendre
/// continued fraction is used instead.
pub fn inc_gamma(a: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(WeilError::NonPositiveArgument(y));
    }
    let twice = 2.0 * a;
    if twice.fract() != 0.0 || !twice.is_finite() {
        return Err(WeilError::Invalid(format!(
            "incomplete gamma needs a half-integral order, got {a}"
        )));
    }
    let twice = twice as i64;
    if a < 0.5 && y > 2.0 {
        return Ok(continued_fraction(a, y));
    }
    let ey = (-y).exp();
    let (mut s, mut g) = if twice.rem_euclid(2) == 1 {
        (0.5, PI.sqrt() * libm::erfc(y.sqrt()))
    } else if twice >= 2 {
        (1.0, ey)
    } else {
        (0.0, exp_integral_e1(y))
    };
    while s < a {
        g = s * g + y.powf(s) * ey;
        s += 1.0;
    }
    while s > a {
        s -= 1.0;
        g = (g - y.powf(s) * ey) / s;
    }
    Ok(g)
}

/// E₁(y) = Γ(0, y).
fn exp_integral_e1(y: f64) -> f64 {
    if y > 1.0 {
        return continued_fraction(0.0, y);
    }
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..200 {
        term *= -y / k as f64;
        let add = term / k as f64;
        sum += add;
        if add.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    -EULER_GAMMA - y.ln() - sum
}

/// Γ(a, y) = e^{-y} y^a / (y + 1 - a - 1(1-a)/(y + 3 - a - 2(2-a)/(...))),
/// evaluated by modified Lentz. Converges quickly for y > 1.
fn continued_fraction(a: f64, y: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = y + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (a * y.ln() - y).exp() * h
}
