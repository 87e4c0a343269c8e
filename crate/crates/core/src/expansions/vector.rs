use num_complex::Complex64;
use num_rational::Rational64;
use rayon::prelude::*;

use super::{Coeff, HarmonicExpansion};
use crate::cyclo::CyclotomicNumber;
use crate::discform::DiscriminantForm;
use crate::error::{Result, WeilError};
use crate::weilrep::rho_s;

/// F = Σ_γ F_γ e_γ, one expansion per γ mod 2m. `dual` selects ρ̄_L.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorForm {
    pub df: DiscriminantForm,
    pub dual: bool,
    components: Vec<HarmonicExpansion>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VectorEvaluation {
    pub values: Vec<Complex64>,
    /// Largest per-component tail bound.
    pub bound: f64,
}

impl VectorForm {
    /// The zero form with every component complete on `window`.
    pub fn zero(
        df: DiscriminantForm,
        dual: bool,
        weight_num: i64,
        window: (Rational64, Rational64),
    ) -> Self {
        VectorForm {
            df,
            dual,
            components: vec![HarmonicExpansion::new(weight_num, window); df.size()],
        }
    }

    pub fn from_components(
        df: DiscriminantForm,
        dual: bool,
        components: Vec<HarmonicExpansion>,
    ) -> Result<Self> {
        if components.len() != df.size() {
            return Err(WeilError::Invalid(format!(
                "expected {} components, got {}",
                df.size(),
                components.len()
            )));
        }
        let w = components[0].weight_num();
        if let Some(c) = components.iter().find(|c| c.weight_num() != w) {
            return Err(WeilError::WeightMismatch {
                found: c.weight_num(),
                expected: w,
            });
        }
        Ok(VectorForm {
            df,
            dual,
            components,
        })
    }

    pub fn weight_num(&self) -> i64 {
        self.components[0].weight_num()
    }

    pub fn weight(&self) -> f64 {
        self.weight_num() as f64 / 2.0
    }

    pub fn components(&self) -> &[HarmonicExpansion] {
        &self.components
    }

    pub fn component(&self, gamma: i64) -> &HarmonicExpansion {
        &self.components[self.df.reduce(gamma) as usize]
    }

    pub fn component_mut(&mut self, gamma: i64) -> &mut HarmonicExpansion {
        let g = self.df.reduce(gamma) as usize;
        &mut self.components[g]
    }

    pub fn set(&mut self, gamma: i64, n: Rational64, plus: Coeff, minus: Coeff) -> Result<()> {
        self.component_mut(gamma).set(n, plus, minus)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(HarmonicExpansion::is_empty)
    }

    /// F_γ = F_{-γ} as coefficient maps.
    pub fn is_symmetric(&self) -> bool {
        let n = self.df.size() as i64;
        (0..n).all(|g| self.component(g) == self.component(-g))
    }

    /// Component γ lives on Z + Q(γ), or Z - Q(γ) when dual.
    pub fn support_violation(&self) -> Option<(u64, Rational64)> {
        for (g, comp) in self.components.iter().enumerate() {
            let q = self.df.q_value(g as i64);
            for (n, _) in comp.terms() {
                let shifted = if self.dual { *n + q } else { *n - q };
                if !shifted.is_integer() {
                    return Some((g as u64, *n));
                }
            }
        }
        None
    }

    pub fn eval_point(&self, tau: Complex64, accuracy: f64) -> Result<VectorEvaluation> {
        let mut values = Vec::with_capacity(self.components.len());
        let mut bound = 0.0f64;
        for c in &self.components {
            let e = c.eval_point(tau, accuracy)?;
            values.push(e.value);
            bound = bound.max(e.bound);
        }
        Ok(VectorEvaluation { values, bound })
    }
}

/// F(τ + 1) = ρ(T)F(τ) at the level of coefficients.
pub fn verify_t_transform(f: &VectorForm) -> bool {
    f.support_violation().is_none()
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointDeviation {
    pub tau: Complex64,
    pub deviation: f64,
    /// Tail bounds at τ and -1/τ.
    pub bound: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransformReport {
    pub points: Vec<PointDeviation>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// ρ(S) (or its conjugate) as a float matrix.
fn s_matrix(df: &DiscriminantForm, dual: bool) -> Vec<Vec<Complex64>> {
    let s = rho_s(df);
    let s = if dual { s.conjugate() } else { s };
    (0..df.size())
        .map(|i| (0..df.size()).map(|j| embed(s.entry(i, j))).collect())
        .collect()
}

pub(crate) fn embed(x: &CyclotomicNumber) -> Complex64 {
    x.embed_with_precision(crate::precision_bits())
        .to_complex64()
}

/// max_γ |F_γ(-1/τ) - τ^w (ρ(S)F(τ))_γ| at each sample point, principal
/// branch for τ^w.
pub fn verify_s_transform(
    f: &VectorForm,
    points: &[Complex64],
    tolerance: f64,
) -> Result<TransformReport> {
    let s = s_matrix(&f.df, f.dual);
    let w = f.weight();
    let results: Vec<Result<PointDeviation>> = points
        .par_iter()
        .map(|&tau| {
            let lhs = f.eval_point(-tau.inv(), tolerance / 4.0)?;
            let rhs = f.eval_point(tau, tolerance / 4.0)?;
            let factor = tau.powf(w);
            let deviation = s
                .iter()
                .zip(&lhs.values)
                .map(|(row, l)| {
                    let r: Complex64 = row.iter().zip(&rhs.values).map(|(a, b)| a * b).sum();
                    (l - factor * r).norm()
                })
                .fold(0.0, f64::max);
            Ok(PointDeviation {
                tau,
                deviation,
                bound: lhs.bound + rhs.bound,
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
