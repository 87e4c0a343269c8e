//! The S-transformation of the split θ and the f_j identities, numerically.

use num_complex::Complex64;
use weil::expansions::verify_s_transform;
use weil::isomap::{f_j_consistency_check, split_to_vector};
use weil::HarmonicExpansion;

fn main() -> weil::Result<()> {
    let theta = HarmonicExpansion::theta(400);
    let e = theta.eval_point(Complex64::i(), 1e-12)?;
    println!("θ(i) = {:.16} (tail ≤ {:e})", e.value.re, e.bound);

    let pts = [
        Complex64::new(0.0, 1.0),
        Complex64::new(1.0 / 3.0, 1.0),
        Complex64::new(-0.5, 2.0),
    ];
    let rep = verify_s_transform(&split_to_vector(&theta, 1, 0)?, &pts, 1e-8)?;
    for p in &rep.points {
        println!("S at {}: deviation {:.2e}", p.tau, p.deviation);
    }
    for j in [1, 3] {
        let rep = f_j_consistency_check(&theta, 1, 0, j, &pts[..1], 1e-8)?;
        println!("f_{j} at i: deviation {:.2e}", rep.max_deviation);
    }
    Ok(())
}
