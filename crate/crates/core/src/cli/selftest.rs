use num_complex::Complex64;

use super::harmonic_example;
use super::report::{CheckRecord, Report};
use crate::corpus::{random_gamma0, random_jacobi, random_plus_space, rng};
use crate::discform::DiscriminantForm;
use crate::error::Result;
use crate::expansions::{
    inc_gamma, plus_space_check, verify_s_transform, verify_t_transform, HarmonicExpansion,
};
use crate::isomap::{combine_to_scalar, gauss_sum_identity_check, split_to_vector};
use crate::jacobi::{casimir_reduced_fd, reconstruct, theta_decompose, thm2_map};
use crate::weilrep::{borcherds_eigencheck, generator_relations};

/// Small versions of every property, all corpora drawn from `seed`.
pub fn run(rep: &mut Report, seed: u64) -> Result<()> {
    let mut r = rng(seed);
    rep.data("seed", seed);

    let milgram = (1..=20).all(|m| DiscriminantForm::new(m).milgram_check());
    rep.check(CheckRecord::exact("milgram, m ≤ 20", milgram));
    rep.check(CheckRecord::exact(
        "milgram fails at signature (2,2)",
        !DiscriminantForm::with_signature(3, (2, 2)).milgram_check(),
    ));

    let rels: Vec<_> = (1..=6)
        .flat_map(|m| [false, true].map(|d| generator_relations(&DiscriminantForm::new(m), d)))
        .collect();
    rep.check(CheckRecord::exact(
        "(ρ(S)ρ(T))³ = ρ(S)², m ≤ 6",
        rels.iter().all(|x| x.braid),
    ));
    rep.check(CheckRecord::exact(
        "ρ(S)⁴ = -I at signature (2,1), m ≤ 6",
        rels.iter().all(|x| x.s_fourth_minus_identity),
    ));

    let mut borcherds = true;
    for m in [1u64, 2, 3, 5] {
        let df = DiscriminantForm::new(m);
        for _ in 0..10 {
            borcherds &= borcherds_eigencheck(&df, random_gamma0(&mut r, m))?.holds;
        }
    }
    rep.check(CheckRecord::exact(
        "Borcherds eigenvector, 40 elements",
        borcherds,
    ));

    rep.check(CheckRecord::exact(
        "A·R closed form, m ≤ 5",
        [1u64, 2, 3, 5].iter().all(|&m| gauss_sum_identity_check(m)),
    ));

    let mut round_trip = true;
    for m in [1u64, 2, 3, 5] {
        for k in [0i64, 1] {
            for _ in 0..5 {
                let f = random_plus_space(&mut r, m, k, -12 * m as i64, 24 * m as i64, 0.4);
                let v = split_to_vector(&f, m, k)?;
                round_trip &= verify_t_transform(&v)
                    && combine_to_scalar(&v, k)? == f
                    && split_to_vector(&combine_to_scalar(&v, k)?, m, k)? == v;
            }
        }
    }
    rep.check(CheckRecord::exact("split/combine round trip", round_trip));

    let theta = split_to_vector(&HarmonicExpansion::theta(400), 1, 0)?;
    let s = verify_s_transform(&theta, &[Complex64::new(0.0, 1.0)], 1e-8)?;
    rep.check(CheckRecord::below(
        "θ S-transformation at i",
        s.max_deviation,
        1e-8,
    ));

    // Γ(1, y) = e^{-y}
    let g = inc_gamma(1.0, 2.5)?;
    rep.check(CheckRecord::below(
        "Γ(1, 5/2) = e^{-5/2}",
        (g / (-2.5f64).exp() - 1.0).abs(),
        1e-14,
    ));

    let mut jacobi = true;
    let mut thm2 = true;
    for m in [1u64, 2, 3, 5] {
        let d = 8 * m as i64;
        let phi = random_jacobi(&mut r, 2, m, -d, d, 0.4, false);
        jacobi &= reconstruct(&theta_decompose(&phi)?)? == phi;
        let sym = random_jacobi(&mut r, 2, m, -d, d, 0.4, true);
        let f = thm2_map(&sym)?;
        thm2 &= plus_space_check(&f, m, 1) && split_to_vector(&f, m, 1)? == theta_decompose(&sym)?;
    }
    rep.check(CheckRecord::exact("theta decomposition round trip", jacobi));
    rep.check(CheckRecord::exact("composite map to the plus space", thm2));

    let c = casimir_reduced_fd(
        &harmonic_example(),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.1, 0.05),
        1e-3,
        30,
    )?;
    rep.check(CheckRecord::below(
        "reduced Casimir on the harmonic example",
        c.norm(),
        1e-4,
    ));
    Ok(())
}
