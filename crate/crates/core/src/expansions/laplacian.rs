use num_complex::Complex64;

use super::HarmonicExpansion;
use crate::error::Result;

/// Central-difference Δ_w f(τ) with
/// Δ_w = -y²(∂²ₓ + ∂²ᵧ) + iwy(∂ₓ + i∂ᵧ).
pub fn laplacian_fd_fn(
    f: impl Fn(Complex64) -> Complex64,
    weight: f64,
    tau: Complex64,
    h: f64,
) -> Complex64 {
    let dx = Complex64::new(h, 0.0);
    let dy = Complex64::new(0.0, h);
    let f0 = f(tau);
    let (fxp, fxm) = (f(tau + dx), f(tau - dx));
    let (fyp, fym) = (f(tau + dy), f(tau - dy));
    let fxx = (fxp - 2.0 * f0 + fxm) / (h * h);
    let fyy = (fyp - 2.0 * f0 + fym) / (h * h);
    let fx = (fxp - fxm) / (2.0 * h);
    let fy = (fyp - fym) / (2.0 * h);
    let y = tau.im;
    let i = Complex64::i();
    -(y * y) * (fxx + fyy) + i * weight * y * (fx + i * fy)
}

/// Δ_w of the truncated sum, w the weight of `form`.
pub fn laplacian_fd(form: &HarmonicExpansion, tau: Complex64, h: f64) -> Result<Complex64> {
    // validates every stencil point up front
    for p in [
        tau,
        tau + Complex64::new(h, 0.0),
        tau - Complex64::new(h, 0.0),
        tau + Complex64::new(0.0, h),
        tau - Complex64::new(0.0, h),
    ] {
        form.eval_terms(p)?;
    }
    Ok(laplacian_fd_fn(
        |t| form.eval_terms(t).expect("checked above"),
        form.weight(),
        tau,
        h,
    ))
}
