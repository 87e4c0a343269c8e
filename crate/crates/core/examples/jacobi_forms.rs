//! Theta decomposition of a harmonic Maass-Jacobi form, the composite map
//! to the plus space, and the reduced Casimir check.

use num_complex::Complex64;
use weil::corpus::{random_jacobi, rng};
use weil::expansions::plus_space_check;
use weil::isomap::split_to_vector;
use weil::jacobi::{
    casimir_reduced_fd, eval_decomposed, heat_operator_term_check, reconstruct, theta_decompose,
    thm2_inverse, thm2_map, JacobiForm,
};
use weil::Coeff;

fn main() -> weil::Result<()> {
    let mut phi = JacobiForm::new(2, 1, -4, 4);
    phi.set_plus(-4, 0, Coeff::int(1))?;
    phi.set_minus(4, 0, Coeff::int(1000))?;
    let hs = theta_decompose(&phi)?;
    println!(
        "h_0 has {} terms, weight {}",
        hs.component(0).len(),
        hs.weight()
    );
    assert_eq!(reconstruct(&hs)?, phi);

    let (tau, z) = (Complex64::new(0.3, 0.8), Complex64::new(-0.2, 0.1));
    let direct = phi.eval_direct(tau, z, 40)?;
    let via = eval_decomposed(&phi, tau, z, 40)?;
    println!(
        "φ(τ, z): direct {:.10}, decomposed {:.10}",
        direct.value, via.value
    );
    let c = casimir_reduced_fd(&phi, Complex64::i(), Complex64::new(0.1, 0.05), 1e-3, 30)?;
    println!("reduced Casimir: {:.2e}", c.norm());
    let heat = heat_operator_term_check(7, 11);
    println!("heat operator on q^(121/28)ζ^11: {}", heat.value);

    let sym = random_jacobi(&mut rng(2), 4, 5, -40, 40, 0.3, true);
    let f = thm2_map(&sym)?;
    println!(
        "m = 5, k = 4: {} plus-space terms, in plus space {}, split = decomposition {}",
        f.len(),
        plus_space_check(&f, 5, 3),
        split_to_vector(&f, 5, 3)? == theta_decompose(&sym)?
    );
    assert_eq!(thm2_inverse(&f, 5, 4)?, sym);
    Ok(())
}
