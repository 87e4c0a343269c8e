//! The Weil representation ρ_L of Mp₂(Z) on C[Z/2mZ] and its dual.
//!
//! Matrices act on column vectors indexed by residues γ ∈ [0, 2m); entry
//! (β, γ) is ⟨ρ(g) e_γ, e_β⟩. Everything is exact in Q(ζ_N), N = lcm(8, 4m).

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::jacobi_symbol;
use crate::cyclo::CyclotomicNumber;
use crate::discform::DiscriminantForm;
use crate::error::{Result, WeilError};
use crate::matrix::CycloMatrix;
use crate::metaplectic::{Gen, MpElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilMatrix {
    pub df: DiscriminantForm,
    pub dual: bool,
    pub matrix: CycloMatrix,
}

impl WeilMatrix {
    fn new(df: DiscriminantForm, dual: bool, matrix: CycloMatrix) -> Self {
        WeilMatrix { df, dual, matrix }
    }

    pub fn entry(&self, beta: usize, gamma: usize) -> &CyclotomicNumber {
        self.matrix.get(beta, gamma)
    }

    /// The same element under the other representation (entrywise conjugate).
    pub fn conjugate(&self) -> WeilMatrix {
        WeilMatrix::new(self.df, !self.dual, self.matrix.conj())
    }

    pub fn mul(&self, rhs: &WeilMatrix) -> WeilMatrix {
        WeilMatrix::new(self.df, self.dual, self.matrix.mul(&rhs.matrix))
    }

    pub fn is_unitary(&self) -> bool {
        self.matrix.conj_transpose().mul(&self.matrix).is_identity()
    }
}

/// Diagonal of ρ_L(T^k): e(k·Q(γ)).
fn t_diagonal(df: &DiscriminantForm, k: i64) -> Vec<CyclotomicNumber> {
    (0..df.size() as i64)
        .map(|g| df.e(df.q_value(g) * k))
        .collect()
}

fn inv_sqrt_size(df: &DiscriminantForm) -> CyclotomicNumber {
    // 1/√(2m) = √(2m)/(2m)
    df.sqrt_size().scale(&BigRational::new(
        BigInt::from(1),
        BigInt::from(df.size() as i64),
    ))
}

/// ρ_L(T): e_γ ↦ e(Q(γ)) e_γ.
pub fn rho_t(df: &DiscriminantForm) -> WeilMatrix {
    let diag = t_diagonal(df, 1);
    let n = df.size();
    WeilMatrix::new(
        *df,
        false,
        CycloMatrix::from_fn(n, n, df.field_order(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                CyclotomicNumber::zero(df.field_order())
            }
        }),
    )
}

/// ρ_L(S): e_γ ↦ e((b⁻ - b⁺)/8)/√(2m) · Σ_δ e(-(γ, δ)) e_δ.
pub fn rho_s(df: &DiscriminantForm) -> WeilMatrix {
    let c = &df.s_phase() * &inv_sqrt_size(df);
    let n = df.size();
    WeilMatrix::new(
        *df,
        false,
        CycloMatrix::from_fn(n, n, df.field_order(), |delta, gamma| {
            &c * &df.e(-df.bilinear(gamma as i64, delta as i64))
        }),
    )
}

/// Generator matrices for one evaluation; built per call.
struct Generators {
    s: CycloMatrix,
    s_inv: CycloMatrix,
    z: CycloMatrix,
}

impl Generators {
    fn new(df: &DiscriminantForm) -> Self {
        let s = rho_s(df).matrix;
        let s_inv = s.conj_transpose();
        let z = s.mul(&s);
        Generators { s, s_inv, z }
    }
}

/// Splits a word into runs: maximal T/T' blocks become a single power.
enum Step {
    TPower(i64),
    Dense(Gen),
}

fn steps(word: &[Gen]) -> Vec<Step> {
    let mut out = Vec::new();
    for &g in word {
        let dt = match g {
            Gen::T => 1,
            Gen::TInv => -1,
            other => {
                out.push(Step::Dense(other));
                continue;
            }
        };
        match out.last_mut() {
            Some(Step::TPower(k)) => *k += dt,
            _ => out.push(Step::TPower(dt)),
        }
    }
    out
}

/// ρ_L(g), or ρ̄_L(g) if `dual`, via the S/T decomposition of g.
pub fn rho_eval(df: &DiscriminantForm, g: &MpElement, dual: bool) -> WeilMatrix {
    let word = g.decompose();
    let gens = Generators::new(df);
    let n = df.size();
    let mut acc = CycloMatrix::identity(n, df.field_order());
    for step in steps(&word.0) {
        acc = match step {
            Step::TPower(0) => acc,
            Step::TPower(k) => {
                // right multiplication by a diagonal scales columns
                let d = t_diagonal(df, k);
                acc.transpose().scale_rows(&d).transpose()
            }
            Step::Dense(Gen::S) => acc.mul(&gens.s),
            Step::Dense(Gen::SInv) => acc.mul(&gens.s_inv),
            Step::Dense(Gen::Z) => acc.mul(&gens.z),
            Step::Dense(Gen::T | Gen::TInv) => unreachable!(),
        };
    }
    let w = WeilMatrix::new(*df, false, acc);
    if dual {
        w.conjugate()
    } else {
        w
    }
}

/// ρ_L(g)·v (or ρ̄_L(g)·v), applying the word right to left.
pub fn rho_apply(
    df: &DiscriminantForm,
    g: &MpElement,
    dual: bool,
    v: &[CyclotomicNumber],
) -> Vec<CyclotomicNumber> {
    let word = g.decompose();
    let gens = Generators::new(df);
    let mut acc: Vec<CyclotomicNumber> = if dual {
        v.iter().map(CyclotomicNumber::conj).collect()
    } else {
        v.to_vec()
    };
    for step in steps(&word.0).iter().rev() {
        acc = match step {
            Step::TPower(k) => {
                let d = t_diagonal(df, *k);
                acc.iter().zip(&d).map(|(x, y)| x * y).collect()
            }
            Step::Dense(Gen::S) => gens.s.mul_vec(&acc),
            Step::Dense(Gen::SInv) => gens.s_inv.mul_vec(&acc),
            Step::Dense(Gen::Z) => gens.z.mul_vec(&acc),
            Step::Dense(Gen::T | Gen::TInv) => unreachable!(),
        };
    }
    if dual {
        acc.iter().map(CyclotomicNumber::conj).collect()
    } else {
        acc
    }
}

/// Closed form for ρ_L applied to the lift of (1 0; 1 1), raised to the n-th
/// power: the n = 1 matrix has entries
/// e((b⁻ - b⁺)/8)/√(2m) · e(Q(β) - (β, γ) + Q(γ)).
pub fn shintani_unipotent(df: &DiscriminantForm, n: i64) -> WeilMatrix {
    let size = df.size();
    let c = &df.s_phase() * &inv_sqrt_size(df);
    let base = CycloMatrix::from_fn(size, size, df.field_order(), |beta, gamma| {
        let (b, g) = (beta as i64, gamma as i64);
        &c * &df.e(df.q_value(b) - df.bilinear(b, g) + df.q_value(g))
    });
    let base = if n < 0 { base.conj_transpose() } else { base };
    WeilMatrix::new(*df, false, base.pow(n.unsigned_abs() as u32))
}

/// (-1/d)^{-1/2} = ε_d^{-1} for odd d > 0: 1 if d ≡ 1 (4), -i if d ≡ 3 (4).
pub fn epsilon_inverse(d: i64) -> CyclotomicNumber {
    assert!(d > 0 && d % 2 == 1, "ε_d needs odd positive d");
    if d % 4 == 1 {
        CyclotomicNumber::one(4)
    } else {
        CyclotomicNumber::root_of_unity(3, 4)
    }
}

#[derive(Clone, Debug)]
pub struct BorcherdsCheck {
    /// (a, 4m·b; c/4m, d)
    pub conjugated: [i64; 4],
    /// (c/d)·ε_d^{-1}
    pub scalar: CyclotomicNumber,
    pub holds: bool,
}

/// Checks that the all-ones vector Σ_γ e_γ is an eigenvector of
/// ρ_L((a 4mb; c/4m d)~) with eigenvalue (c/d)·ε_d^{-1}, for
/// (a b; c d) ∈ Γ₀(4m) with d > 0.
pub fn borcherds_eigencheck(df: &DiscriminantForm, m: [i64; 4]) -> Result<BorcherdsCheck> {
    let [a, b, c, d] = m;
    let level = df.level() as i64;
    if a * d - b * c != 1 {
        return Err(WeilError::NotUnimodular(m));
    }
    if c.rem_euclid(level) != 0 || d <= 0 {
        return Err(WeilError::NotInGamma0(m, df.level()));
    }
    let conjugated = [a, level * b, c / level, d];
    let g = MpElement::tilde(conjugated)?;
    let order = df.field_order();
    let ones = vec![CyclotomicNumber::one(order); df.size()];
    let image = rho_apply(df, &g, false, &ones);
    let scalar = epsilon_inverse(d).scale_int(jacobi_symbol(c, d) as i64);
    let expected = scalar.lift(order);
    let holds = image.iter().all(|x| *x == expected);
    Ok(BorcherdsCheck {
        conjugated,
        scalar,
        holds,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relations {
    /// ρ(S)⁴ = I
    pub s_fourth_identity: bool,
    /// ρ(S)⁴ = -I, which is what ρ(Z²) gives when b⁺ - b⁻ is odd
    pub s_fourth_minus_identity: bool,
    /// (ρ(S)ρ(T))³ = ρ(S)²
    pub braid: bool,
}

pub fn generator_relations(df: &DiscriminantForm, dual: bool) -> Relations {
    let (mut s, mut t) = (rho_s(df), rho_t(df));
    if dual {
        s = s.conjugate();
        t = t.conjugate();
    }
    let s2 = s.mul(&s);
    let s4 = s2.mul(&s2);
    let st = s.mul(&t);
    let st3 = st.mul(&st).mul(&st);
    let minus_one = CyclotomicNumber::from_integer(df.field_order(), -1);
    Relations {
        s_fourth_identity: s4.matrix.is_identity(),
        s_fourth_minus_identity: s4.matrix.scale(&minus_one).is_identity(),
        braid: st3 == s2,
    }
}
