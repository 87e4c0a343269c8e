//! Incomplete gamma values, evaluation with tail bounds and the weight-w
//! Laplacian on a non-holomorphic expansion.

use num_complex::Complex64;
use num_rational::Rational64;
use weil::expansions::{inc_gamma, laplacian_fd};
use weil::{Coeff, HarmonicExpansion};

fn main() -> weil::Result<()> {
    for a in [-2.5, -0.5, 0.5, 1.0, 1.5] {
        let row: Vec<String> = [0.1, 1.0, 10.0]
            .iter()
            .map(|&y| format!("{:.12e}", inc_gamma(a, y).unwrap()))
            .collect();
        println!("Γ({a:4}, ·) at 0.1, 1, 10: {}", row.join("  "));
    }

    // q^{-1} principal part with a Whittaker term, weight 1/2, complete
    // down to n = -10 so the unseen non-holomorphic tail is negligible
    let mut f = HarmonicExpansion::new(1, (Rational64::from(-10), Rational64::from(40)));
    f.set(Rational64::from(-1), Coeff::int(1), Coeff::ratio(1, 2))?;
    for n in [3, 4, 7, 8] {
        f.set_plus(Rational64::from(n), Coeff::int(n))?;
    }
    let tau = Complex64::new(0.1, 1.2);
    let e = f.eval_point_with_growth(tau, 1e-10, 2.0)?;
    println!("f({tau}) = {:.12} ± {:.1e}", e.value, e.bound);
    for h in [1e-2, 5e-3, 2.5e-3] {
        let lap = laplacian_fd(&f, tau, h)?;
        println!("h = {h:.1e}: |Δ f| = {:.3e}", lap.norm());
    }
    Ok(())
}
