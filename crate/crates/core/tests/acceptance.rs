//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout.
//!
//! A criterion listed in `KNOWN_FAILURES` is still checked as written and
//! printed as FAIL; the run only aborts if such a criterion unexpectedly
//! passes or if its observed counter-statement does not hold.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::Rational64;
use weil::arith::{euler_phi, mobius};
use weil::corpus::{random_gamma0, random_jacobi, random_plus_space, rng};
use weil::expansions::{
    inc_gamma, laplacian_fd, laplacian_fd_fn, plus_space_check, verify_s_transform,
    verify_t_transform,
};
use weil::isomap::{
    b_entry_table, combine_to_scalar, f_j_consistency_check, gauss_sum_identity_check,
    rank_lemma_check, split_to_vector,
};
use weil::jacobi::{
    casimir_reduced_fd, casimir_reduced_fd_fn, eval_decomposed, heat_operator_term_check,
    reconstruct, theta_decompose, theta_series_sum, thm2_map, JacobiForm,
};
use weil::weilrep::{
    borcherds_eigencheck, generator_relations, rho_apply, rho_eval, shintani_unipotent,
};
use weil::{Coeff, CyclotomicNumber, DiscriminantForm, HarmonicExpansion, MpElement};

// tolerances and limits
const MILGRAM_LIMIT: Duration = Duration::from_secs(10);
const RELATIONS_LIMIT: Duration = Duration::from_secs(30);
const RANK_LIMIT: Duration = Duration::from_secs(60);
const THETA_LIMIT: Duration = Duration::from_secs(10);
const THETA_TOL: f64 = 1e-8;
const THETA_WINDOW: i64 = 400;
const GAMMA_REL_TOL: f64 = 1e-12;
const FD_STEPS: [f64; 3] = [1e-2, 5e-3, 2.5e-3];
/// Error ratio for halving h under O(h²) is 4.
const FD_RATIO: (f64, f64) = (3.5, 4.5);
const PROBE_MIN: f64 = 1e-2;
const CASIMIR_TOL: f64 = 1e-4;
const CASIMIR_H: f64 = 1e-3;
/// Relative rounding allowance on top of the truncation bounds when two
/// f64 evaluation routes are compared.
const ROUNDING_SLACK: f64 = 1e-12;
const SEED: u64 = 20_240_601;

/// Criterion 2 asks for ρ(S)⁴ = I, but at signature (2,1) the representation
/// has ρ(S)⁴ = ρ(Z²) = -I; see the decisions ledger.
const KNOWN_FAILURES: &[u32] = &[2];

struct Outcome {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
    /// For a known failure, whether the observed counter-statement holds.
    explained: bool,
}

impl Outcome {
    fn new(id: u32, name: &'static str, pass: bool, detail: String) -> Self {
        Outcome {
            id,
            name,
            pass,
            detail,
            explained: true,
        }
    }
}

fn main() {
    let outcomes = vec![
        milgram(),
        relations(),
        shintani(),
        borcherds(),
        rank_protocol(),
        gauss_sums(),
        round_trip(),
        theta_transformation(),
        incomplete_gamma(),
        harmonicity(),
        jacobi_layer(),
        composite_map(),
    ];
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let status = if o.pass { "PASS" } else { "FAIL" };
        let known = KNOWN_FAILURES.contains(&o.id);
        let note = if known && !o.pass {
            " [known, see ledger]"
        } else {
            ""
        };
        println!(
            "{status} criterion {:2}: {} | {}{note}",
            o.id, o.name, o.detail
        );
        if o.pass == known || (known && !o.explained) {
            unexpected.push(o.id);
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("{passed}/{} criteria pass", outcomes.len());
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}

fn milgram() -> Outcome {
    let start = Instant::now();
    let holds = (1..=50).all(|m| DiscriminantForm::new(m).milgram_check());
    let control = (1..=50).all(|m| !DiscriminantForm::with_signature(m, (2, 2)).milgram_check());
    let t = start.elapsed();
    Outcome::new(
        1,
        "Milgram, m ≤ 50, with (2,2) control",
        holds && control && t < MILGRAM_LIMIT,
        format!("holds {holds}, control fails {control}, {t:.2?}"),
    )
}

fn relations() -> Outcome {
    let start = Instant::now();
    let (mut s4, mut minus, mut braid) = (true, true, true);
    for m in 1..=12 {
        for dual in [false, true] {
            let r = generator_relations(&DiscriminantForm::new(m), dual);
            s4 &= r.s_fourth_identity;
            minus &= r.s_fourth_minus_identity;
            braid &= r.braid;
        }
    }
    let t = start.elapsed();
    Outcome {
        explained: minus && braid,
        ..Outcome::new(
            2,
            "ρ(S)⁴ = I and (ρ(S)ρ(T))³ = ρ(S)², m ≤ 12, ρ_L and dual",
            s4 && braid && t < RELATIONS_LIMIT,
            format!("S⁴ = I {s4}, observed S⁴ = -I {minus}, braid {braid}, {t:.2?}"),
        )
    }
}

fn shintani() -> Outcome {
    let (mut agree, mut ones_fixed) = (true, true);
    for m in 1..=10 {
        let df = DiscriminantForm::new(m);
        let ones = vec![CyclotomicNumber::one(df.field_order()); df.size()];
        for n in -5..=5 {
            let g = MpElement::tilde([1, 0, n, 1]).unwrap();
            let closed = shintani_unipotent(&df, n);
            agree &= rho_eval(&df, &g, false) == closed;
            ones_fixed &= rho_apply(&df, &g, false, &ones) == ones;
            ones_fixed &= closed.matrix.mul_vec(&ones) == ones;
        }
    }
    Outcome::new(
        3,
        "Shintani closed form and all-ones eigenvector, |n| ≤ 5, m ≤ 10",
        agree && ones_fixed,
        format!("closed form agrees {agree}, Σe_γ fixed {ones_fixed}"),
    )
}

fn borcherds() -> Outcome {
    let mut r = rng(SEED);
    let (mut holds, mut total, mut negative_a) = (true, 0, BTreeSet::new());
    for m in [1u64, 2, 3, 5, 7] {
        let df = DiscriminantForm::new(m);
        for _ in 0..50 {
            let g = random_gamma0(&mut r, m);
            if g[0] < 0 {
                negative_a.insert(m);
            }
            holds &= borcherds_eigencheck(&df, g)
                .map(|c| c.holds)
                .unwrap_or(false);
            total += 1;
        }
    }
    let covered = negative_a.len() == 5;
    Outcome::new(
        4,
        "Borcherds eigen-identity on random Γ₀(4m), m ∈ {1,2,3,5,7}",
        holds && covered,
        format!("{total} elements, all hold {holds}, a < 0 present for every m {covered}"),
    )
}

/// c_{4m}(n) = Σ_{d | (n, 4m)} μ(4m/d)·d.
fn ramanujan_sum(level: u64, n: i64) -> i64 {
    let g = num_integer::gcd(n.unsigned_abs(), level);
    let g = if n == 0 { level } else { g };
    (1..=g)
        .filter(|d| g % d == 0)
        .map(|d| mobius(level / d) * d as i64)
        .sum()
}

const P: i64 = 1_000_000_007;

fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(P)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = pow_mod(a[rank][c], P - 2);
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c] * inv % P;
                for j in c..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn rank_protocol() -> Outcome {
    let start = Instant::now();
    let mut consistent = true;
    let mut summary = Vec::new();
    for m in [1u64, 2, 3, 5, 7, 11, 13] {
        let Ok(rep) = rank_lemma_check(m) else {
            consistent = false;
            continue;
        };
        let n = 2 * m as i64;
        let level = 4 * m;
        let b: Vec<Vec<i64>> = (0..n)
            .map(|beta| {
                (0..n)
                    .map(|gamma| ramanujan_sum(level, gamma * gamma - beta * beta))
                    .collect()
            })
            .collect();
        let expected = 2 * euler_phi(m) as usize;
        let rank = rank_mod_p(&b);
        let leading: Vec<Vec<i64>> = b.iter().map(|r| r[..expected].to_vec()).collect();
        let independent = rank_mod_p(&leading) == expected;
        let deviations: BTreeSet<(u64, u64)> = (0..n)
            .flat_map(|beta| (0..n).map(move |gamma| (beta, gamma)))
            .filter(|&(beta, gamma)| {
                b_entry_table(m, beta, gamma) != b[beta as usize][gamma as usize]
            })
            .map(|(beta, gamma)| (beta as u64, gamma as u64))
            .collect();
        let reported: BTreeSet<(u64, u64)> = rep
            .table_deviations
            .iter()
            .map(|d| (d.beta, d.gamma))
            .collect();
        consistent &= rep.rank == rank
            && rep.expected_rank == expected
            && rep.rank_matches == (rank == expected)
            && rep.leading_columns_independent == independent
            && rep.product_matches_entries
            && reported == deviations;
        summary.push(format!(
            "m={m}: rank {rank}/{expected} lemma {}",
            if rep.lemma_holds() { "holds" } else { "fails" }
        ));
    }
    let t = start.elapsed();
    Outcome::new(
        5,
        "rank protocol for B = CA, m ∈ {1,2,3,5,7,11,13}",
        consistent && t < RANK_LIMIT,
        format!(
            "report matches oracle {consistent}; {}; {t:.2?}",
            summary.join(", ")
        ),
    )
}

fn gauss_sums() -> Outcome {
    let ok: Vec<u64> = [1u64, 2, 3, 5, 7]
        .into_iter()
        .filter(|&m| gauss_sum_identity_check(m))
        .collect();
    Outcome::new(
        6,
        "Gauss-sum closed form for AR, m ∈ {1,2,3,5,7}",
        ok.len() == 5,
        format!("holds for m in {ok:?}"),
    )
}

fn round_trip() -> Outcome {
    let mut r = rng(SEED + 7);
    let (mut ok, mut count) = (true, 0);
    for m in [1u64, 2, 3, 5] {
        for k in [0i64, 1] {
            for _ in 0..50 {
                let f = random_plus_space(&mut r, m, k, -8 * m as i64, 16 * m as i64, 0.4);
                let passed = split_to_vector(&f, m, k).and_then(|v| {
                    let back = combine_to_scalar(&v, k)?;
                    let again = split_to_vector(&back, m, k)?;
                    Ok(back == f && again == v && verify_t_transform(&v))
                });
                ok &= passed.unwrap_or(false);
                count += 1;
            }
        }
    }
    Outcome::new(
        7,
        "plus space ↔ vector round trip with T support",
        ok,
        format!("{count} random expansions, all exact {ok}"),
    )
}

fn theta_transformation() -> Outcome {
    let start = Instant::now();
    let theta = HarmonicExpansion::theta(THETA_WINDOW);
    let points = [
        Complex64::new(0.0, 1.0),
        Complex64::new(1.0 / 3.0, 1.0),
        Complex64::new(-0.5, 2.0),
    ];
    let s = split_to_vector(&theta, 1, 0)
        .and_then(|v| verify_s_transform(&v, &points, THETA_TOL))
        .map(|rep| rep.max_deviation)
        .unwrap_or(f64::INFINITY);
    let fj: Vec<f64> = [1u64, 3]
        .iter()
        .map(|&j| {
            f_j_consistency_check(&theta, 1, 0, j, &points[..1], THETA_TOL)
                .map(|rep| rep.max_deviation)
                .unwrap_or(f64::INFINITY)
        })
        .collect();
    let t = start.elapsed();
    let worst = fj.iter().copied().fold(s, f64::max);
    Outcome::new(
        8,
        "θ transformation and f_j identities, j ∈ {1,3}",
        worst < THETA_TOL && t < THETA_LIMIT,
        format!(
            "S deviation {s:.2e}, f_1 {:.2e}, f_3 {:.2e}, tol {THETA_TOL:e}, {t:.2?}",
            fj[0], fj[1]
        ),
    )
}

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let (c, h) = ((a + b) / 2.0, (b - a) / 2.0);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let s = f(c - h * XGK[i]) + f(c + h * XGK[i]);
        kron += WGK[i] * s;
        if i % 2 == 1 {
            gauss += WG[i / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn adaptive(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (v, err) = gk15(f, a, b);
    if err <= tol || depth == 0 {
        return v;
    }
    let mid = (a + b) / 2.0;
    adaptive(f, a, mid, tol / 2.0, depth - 1) + adaptive(f, mid, b, tol / 2.0, depth - 1)
}

/// ∫_y^∞ t^{a-1} e^{-t} dt over unit panels until the integrand is gone.
fn gamma_oracle(a: f64, y: f64) -> f64 {
    let f = |t: f64| t.powf(a - 1.0) * (-t).exp();
    let mut total = 0.0;
    let mut lo = y;
    let width = y.max(1.0);
    loop {
        let hi = lo + width;
        let piece = adaptive(&f, lo, hi, 1e-18 * f(lo).max(1e-300), 40);
        total += piece;
        if piece < 1e-18 * total {
            break;
        }
        lo = hi;
    }
    total
}

fn incomplete_gamma() -> Outcome {
    let mut worst = 0.0f64;
    let mut sanity = 0.0f64;
    for y in [0.1, 1.0, 10.0] {
        sanity = sanity.max((gamma_oracle(1.0, y) / (-y).exp() - 1.0).abs());
        for a in [-2.5, -1.5, -0.5, 0.5, 1.0, 1.5] {
            let got = inc_gamma(a, y).unwrap_or(f64::NAN);
            let want = gamma_oracle(a, y);
            worst = worst.max(((got - want) / want).abs());
        }
    }
    Outcome::new(
        9,
        "incomplete gamma against adaptive quadrature",
        worst < GAMMA_REL_TOL && sanity < 1e-14,
        format!(
            "max rel error {worst:.2e}, tol {GAMMA_REL_TOL:e}, oracle check Γ(1,y) {sanity:.1e}"
        ),
    )
}

/// |Δ| at each step and the two halving ratios.
fn fd_ratios(eval: impl Fn(f64) -> f64) -> ([f64; 3], f64, f64) {
    let e = FD_STEPS.map(&eval);
    (e, e[0] / e[1], e[1] / e[2])
}

fn harmonicity() -> Outcome {
    let tau = Complex64::new(0.1, 1.1);
    let r = Rational64::from;
    let mut cases: Vec<(String, HarmonicExpansion)> = Vec::new();
    for weight_num in [1i64, 3] {
        let mut hol = HarmonicExpansion::new(weight_num, (r(-2), r(2)));
        hol.set_plus(r(1), Coeff::int(1)).unwrap();
        cases.push((format!("q, w={weight_num}/2"), hol));
        let mut pole = HarmonicExpansion::new(weight_num, (r(-2), r(2)));
        pole.set_plus(r(-1), Coeff::int(1)).unwrap();
        cases.push((format!("q^-1, w={weight_num}/2"), pole));
        let mut nonhol = HarmonicExpansion::new(weight_num, (r(-2), r(2)));
        nonhol.set_minus(r(-1), Coeff::int(1)).unwrap();
        cases.push((format!("Γ·q^-1, w={weight_num}/2"), nonhol));
    }
    let mut ok = true;
    let mut worst: (f64, f64) = (f64::INFINITY, 0.0);
    for (_, f) in &cases {
        let (_, r1, r2) = fd_ratios(|h| laplacian_fd(f, tau, h).unwrap().norm());
        for q in [r1, r2] {
            ok &= (FD_RATIO.0..=FD_RATIO.1).contains(&q);
            worst = (worst.0.min(q), worst.1.max(q));
        }
    }
    let probe = laplacian_fd_fn(
        |t| t.im * (Complex64::new(0.0, 2.0 * PI) * t).exp(),
        0.5,
        tau,
        FD_STEPS[2],
    )
    .norm();
    Outcome::new(
        10,
        "Laplacian O(h²) on every term type, non-harmonic probe",
        ok && probe > PROBE_MIN,
        format!(
            "{} term types, ratios in [{:.3}, {:.3}], probe {probe:.3e}",
            cases.len(),
            worst.0,
            worst.1
        ),
    )
}

fn harmonic_example() -> JacobiForm {
    let mut phi = JacobiForm::new(2, 1, -4, 4);
    phi.set_plus(-4, 0, Coeff::int(1)).unwrap();
    phi.set_minus(4, 0, Coeff::int(1000)).unwrap();
    phi
}

fn jacobi_layer() -> Outcome {
    let mut r = rng(SEED + 11);
    let mut round = true;
    for m in 1..=5u64 {
        for k in [1i64, 2, 3, 4] {
            for symmetric in [false, true] {
                let d = 10 * m as i64;
                let phi = random_jacobi(&mut r, k, m, -d, d, 0.4, symmetric);
                round &= theta_decompose(&phi)
                    .and_then(|h| reconstruct(&h))
                    .map(|p| p == phi)
                    .unwrap_or(false);
            }
        }
    }
    let heat =
        (1..=10u64).all(|m| (-25..=25).all(|r| heat_operator_term_check(m, r).value == 0.into()));

    let mut display = true;
    let mut worst_gap = 0.0f64;
    let random = random_jacobi(&mut r, 2, 3, -12, 24, 0.5, false);
    let points = [
        (Complex64::new(0.0, 1.0), Complex64::new(0.1, 0.05)),
        (Complex64::new(0.3, 0.8), Complex64::new(-0.2, 0.1)),
        (Complex64::new(-0.45, 1.3), Complex64::new(0.4, -0.15)),
    ];
    for phi in [harmonic_example(), random] {
        for (tau, z) in points {
            let a = phi.eval_direct(tau, z, 60).unwrap();
            let b = eval_decomposed(&phi, tau, z, 60).unwrap();
            let gap = (a.value - b.value).norm();
            let allowed = a.bound + b.bound + ROUNDING_SLACK * a.value.norm().max(1.0);
            display &= gap <= allowed;
            worst_gap = worst_gap.max(gap);
        }
    }

    let tau = Complex64::i();
    let z = Complex64::new(0.1, 0.05);
    let casimir = casimir_reduced_fd(&harmonic_example(), tau, z, CASIMIR_H, 30)
        .map(|c| c.norm())
        .unwrap_or(f64::INFINITY);
    let probe = casimir_reduced_fd_fn(
        |t, zz| {
            t.im * (Complex64::new(0.0, 2.0 * PI) * t).exp() * theta_series_sum(1, 0, t, zz, 30)
        },
        2,
        1,
        tau,
        z,
        CASIMIR_H,
    )
    .norm();
    Outcome::new(
        11,
        "Jacobi decomposition, heat operator, display, reduced Casimir",
        round && heat && display && casimir < CASIMIR_TOL && probe > PROBE_MIN,
        format!(
            "round trip {round}, heat {heat}, display gap {worst_gap:.1e} within bounds {display}, Casimir {casimir:.2e}, probe {probe:.2e}"
        ),
    )
}

fn composite_map() -> Outcome {
    let mut r = rng(SEED + 13);
    let (mut ok, mut count) = (true, 0);
    for m in [1u64, 2, 3, 5] {
        for k in [2i64, 4] {
            for _ in 0..10 {
                let d = 12 * m as i64;
                let phi = random_jacobi(&mut r, k, m, -d, d, 0.4, true);
                let passed = thm2_map(&phi).and_then(|f| {
                    Ok(plus_space_check(&f, m, k - 1)
                        && split_to_vector(&f, m, k - 1)? == theta_decompose(&phi)?)
                });
                ok &= passed.unwrap_or(false);
                count += 1;
            }
        }
    }
    Outcome::new(
        12,
        "composite map to the plus space, k even, m ∈ {1,2,3,5}",
        ok,
        format!("{count} symmetric random forms, all exact {ok}"),
    )
}
