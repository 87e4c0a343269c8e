//! The isomorphism between the Kohnen plus space and vector-valued forms
//! for ρ_L, and the matrices used to prove the S-transformation law.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::arith::{euler_phi, is_prime, jacobi_symbol, mod_inverse, units};
use crate::cyclo::CyclotomicNumber;
use crate::discform::DiscriminantForm;
use crate::error::{Result, WeilError};
use crate::expansions::{
    embed, plus_space_check, HarmonicExpansion, PointDeviation, TransformReport, VectorForm,
};
use crate::matrix::{integer_rank, leading_columns, CycloMatrix};
use crate::weilrep::epsilon_inverse;

fn check_index(m: u64) -> Result<()> {
    if m == 1 || is_prime(m) {
        Ok(())
    } else {
        Err(WeilError::IndexNotPrime(m))
    }
}

/// f ↦ F with F_γ = (1/s(γ)) Σ_{(-1)^k n ≡ γ² (4m)} c_f(n) q^{n/4m}.
///
/// Requires m = 1 or prime; see [`split_to_vector_any_index`].
pub fn split_to_vector(f: &HarmonicExpansion, m: u64, k: i64) -> Result<VectorForm> {
    check_index(m)?;
    split_to_vector_any_index(f, m, k)
}

/// [`split_to_vector`] without the restriction on m.
pub fn split_to_vector_any_index(f: &HarmonicExpansion, m: u64, k: i64) -> Result<VectorForm> {
    if f.weight_num() != 2 * k + 1 {
        return Err(WeilError::WeightMismatch {
            found: f.weight_num(),
            expected: 2 * k + 1,
        });
    }
    if !plus_space_check(f, m, k) {
        return Err(WeilError::NotPlusSpace(format!(
            "coefficients outside the square classes mod {}",
            4 * m
        )));
    }
    let df = DiscriminantForm::new(m);
    let level = df.level() as i64;
    let (lo, hi) = f.window();
    let scale = Rational64::from(level);
    let mut out = VectorForm::zero(
        df,
        k.rem_euclid(2) == 1,
        f.weight_num(),
        (lo / scale, hi / scale),
    );
    let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
    for (n, t) in f.terms() {
        let n_int = n.to_integer();
        for gamma in df.square_roots_of(sign * n_int) {
            let s = df.s_factor(gamma as i64) as i64;
            out.set(
                gamma as i64,
                *n / scale,
                t.plus.div_int(s),
                t.minus.div_int(s),
            )?;
        }
    }
    Ok(out)
}

/// F ↦ f(τ) = Σ_γ F_γ(4mτ).
pub fn combine_to_scalar(f: &VectorForm, k: i64) -> Result<HarmonicExpansion> {
    if f.weight_num() != 2 * k + 1 {
        return Err(WeilError::WeightMismatch {
            found: f.weight_num(),
            expected: 2 * k + 1,
        });
    }
    if f.dual != (k.rem_euclid(2) == 1) {
        return Err(WeilError::Invalid(format!(
            "weight {}/2 pairs with the {} representation",
            2 * k + 1,
            if k.rem_euclid(2) == 1 {
                "dual"
            } else {
                "non-dual"
            }
        )));
    }
    if let Some((g, n)) = f.support_violation() {
        return Err(WeilError::Support(format!(
            "component {g} has a coefficient at {n}"
        )));
    }
    let m = f.df.m;
    let scale = Rational64::from(f.df.level() as i64);
    let comps = f.components();
    let lo = comps
        .iter()
        .map(|c| c.window().0)
        .max()
        .expect("2m ≥ 2 components");
    let hi = comps
        .iter()
        .map(|c| c.window().1)
        .min()
        .expect("2m ≥ 2 components");
    if lo > hi {
        return Err(WeilError::Support(
            "component windows do not overlap".into(),
        ));
    }
    let mut out = HarmonicExpansion::new(f.weight_num(), (lo * scale, hi * scale));
    for comp in comps {
        for (n, t) in comp.terms() {
            out.accumulate(*n * scale, &t.plus, &t.minus)?;
        }
    }
    if !plus_space_check(&out, m, k) {
        return Err(WeilError::NotPlusSpace("combined expansion".into()));
    }
    Ok(out)
}

/// The matrices A, C, R and B = CA.
#[derive(Clone, Debug)]
pub struct ProofMatrices {
    pub m: u64,
    /// Residues in [1, 4m] prime to 4m, increasing.
    pub js: Vec<u64>,
    /// A_{ℓγ} = e(j_ℓγ²/4m), φ(4m) × 2m.
    pub a: CycloMatrix,
    /// C_{βℓ} = e(-j_ℓβ²/4m), 2m × φ(4m).
    pub c: CycloMatrix,
    /// R_{lγ} = e(-1/8)/√(2m) · e(-lγ/2m).
    pub r: CycloMatrix,
    pub b: CycloMatrix,
}

pub fn build_proof_matrices(m: u64) -> ProofMatrices {
    let df = DiscriminantForm::new(m);
    let level = df.level();
    let js = units(level);
    let n = df.size();
    let order = df.field_order();
    let a = CycloMatrix::from_fn(js.len(), n, order, |l, g| {
        df.e(df.q_value(g as i64) * js[l] as i64)
    });
    let c = CycloMatrix::from_fn(n, js.len(), order, |b, l| {
        df.e(-df.q_value(b as i64) * js[l] as i64)
    });
    let r = crate::weilrep::rho_s(&df).matrix;
    let b = c.mul(&a);
    ProofMatrices { m, js, a, c, r, b }
}

/// The entry Σ_ℓ e(j_ℓ(γ² - β²)/4m) summed directly.
pub fn b_entry_bruteforce(m: u64, beta: i64, gamma: i64) -> i64 {
    let level = 4 * m;
    let l = level as i64;
    let diff = (gamma * gamma - beta * beta).rem_euclid(l);
    let mut sum = CyclotomicNumber::zero(level);
    for j in units(level) {
        sum += &CyclotomicNumber::root_in(j as i64 * diff, level, level);
    }
    sum.to_integer()
        .and_then(|z| z.to_i64())
        .expect("character sum over units is a rational integer")
}

/// The case table claimed for the entries of B: 2φ(m) on the diagonal,
/// -2 off the diagonal when β ≡ γ (mod 2), otherwise 0.
pub fn b_entry_table(m: u64, beta: i64, gamma: i64) -> i64 {
    let n = 2 * m as i64;
    let (b, g) = (beta.rem_euclid(n), gamma.rem_euclid(n));
    if b == g {
        2 * euler_phi(m) as i64
    } else if (b - g) % 2 == 0 {
        -2
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryDeviation {
    pub beta: u64,
    pub gamma: u64,
    pub table: i64,
    pub actual: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankLemmaReport {
    pub m: u64,
    pub rank: usize,
    /// 2φ(m)
    pub expected_rank: usize,
    pub rank_matches: bool,
    /// The first 2φ(m) columns have full column rank.
    pub leading_columns_independent: bool,
    /// B from the product C·A equals the directly summed entries.
    pub product_matches_entries: bool,
    /// Entries where the case table disagrees with the direct sum.
    pub table_deviations: Vec<EntryDeviation>,
}

impl RankLemmaReport {
    /// The claimed rank and the independence of the leading columns both hold.
    pub fn lemma_holds(&self) -> bool {
        self.rank_matches && self.leading_columns_independent
    }
}

pub fn rank_lemma_check(m: u64) -> Result<RankLemmaReport> {
    check_index(m)?;
    let pm = build_proof_matrices(m);
    let b =
        pm.b.to_integer_matrix()
            .ok_or_else(|| WeilError::Invalid("B is not integral".into()))?;
    let n = 2 * m as usize;
    let expected_rank = 2 * euler_phi(m) as usize;
    let rank = integer_rank(&b);
    let lead_rank = integer_rank(&leading_columns(&b, expected_rank));
    let mut product_matches_entries = true;
    let mut table_deviations = Vec::new();
    for beta in 0..n {
        for gamma in 0..n {
            let actual = b_entry_bruteforce(m, beta as i64, gamma as i64);
            if b[beta][gamma] != actual.into() {
                product_matches_entries = false;
            }
            let table = b_entry_table(m, beta as i64, gamma as i64);
            if table != actual {
                table_deviations.push(EntryDeviation {
                    beta: beta as u64,
                    gamma: gamma as u64,
                    table,
                    actual,
                });
            }
        }
    }
    Ok(RankLemmaReport {
        m,
        rank,
        expected_rank,
        rank_matches: rank == expected_rank,
        leading_columns_independent: lead_rank == expected_rank,
        product_matches_entries,
        table_deviations,
    })
}

/// (4m/j)·√((-1/j))^{-1}, the scalar in the closed form for AR.
pub fn gauss_scalar(m: u64, j: u64) -> CyclotomicNumber {
    let chi = jacobi_symbol(4 * m as i64, j as i64);
    epsilon_inverse(j as i64).scale_int(chi as i64)
}

/// Closed form (AR)_{ℓγ} = (4m/j_ℓ)√((-1/j_ℓ))^{-1} e(-j_ℓ^{-1}γ²/4m).
pub fn ar_closed_form(m: u64) -> CycloMatrix {
    let df = DiscriminantForm::new(m);
    let js = units(df.level());
    CycloMatrix::from_fn(js.len(), df.size(), df.field_order(), |l, g| {
        let j = js[l];
        let jinv = mod_inverse(j as i64, df.level()).expect("unit") as i64;
        &gauss_scalar(m, j) * &df.e(-df.q_value(g as i64) * jinv)
    })
}

/// A·R computed by matrix product equals the closed form entrywise.
pub fn gauss_sum_identity_check(m: u64) -> bool {
    let pm = build_proof_matrices(m);
    pm.a.mul(&pm.r) == ar_closed_form(m)
}

/// Both sides of
/// Σ_γ e(jγ²/4m) F_γ(-1/τ) = (4m/j)√((-1/j))^{-1} τ^w Σ_γ e(-j^{-1}γ²/4m) F_γ(τ)
/// at each sample τ. For dual-type F every root of unity and the scalar are
/// conjugated.
pub fn f_j_consistency_vector(
    f: &VectorForm,
    j: u64,
    points: &[Complex64],
    tolerance: f64,
) -> Result<TransformReport> {
    let df = f.df;
    let level = df.level();
    if j == 0 {
        return Err(WeilError::Invalid("j must be positive".into()));
    }
    // a unit mod 4m, hence odd
    let jinv = mod_inverse(j as i64, level)
        .ok_or_else(|| WeilError::Invalid(format!("j = {j} is not prime to {level}")))?
        as i64;
    let maybe_conj = |x: CyclotomicNumber| if f.dual { x.conj() } else { x };
    let n = df.size() as i64;
    let left: Vec<Complex64> = (0..n)
        .map(|g| embed(&maybe_conj(df.e(df.q_value(g) * j as i64))))
        .collect();
    let right: Vec<Complex64> = (0..n)
        .map(|g| embed(&maybe_conj(df.e(-df.q_value(g) * jinv))))
        .collect();
    let scalar = embed(&maybe_conj(gauss_scalar(df.m, j)));
    let w = f.weight();
    let results: Vec<Result<PointDeviation>> = points
        .par_iter()
        .map(|&tau| {
            let at_inv = f.eval_point(-tau.inv(), tolerance / 4.0)?;
            let at_tau = f.eval_point(tau, tolerance / 4.0)?;
            let lhs: Complex64 = left.iter().zip(&at_inv.values).map(|(a, b)| a * b).sum();
            let rhs: Complex64 = right.iter().zip(&at_tau.values).map(|(a, b)| a * b).sum();
            let deviation = (lhs - scalar * tau.powf(w) * rhs).norm();
            Ok(PointDeviation {
                tau,
                deviation,
                bound: at_inv.bound + at_tau.bound,
                pass: deviation < tolerance,
            })
        })
        .collect();
    let points = results.into_iter().collect::<Result<Vec<_>>>()?;
    let max_deviation = points.iter().map(|p| p.deviation).fold(0.0, f64::max);
    Ok(TransformReport {
        pass: points.iter().all(|p| p.pass),
        points,
        max_deviation,
        tolerance,
    })
}

/// [`f_j_consistency_vector`] on F = split_to_vector(f).
pub fn f_j_consistency_check(
    f: &HarmonicExpansion,
    m: u64,
    k: i64,
    j: u64,
    points: &[Complex64],
    tolerance: f64,
) -> Result<TransformReport> {
    let v = split_to_vector(f, m, k)?;
    f_j_consistency_vector(&v, j, points, tolerance)
}
