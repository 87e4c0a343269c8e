//! Splitting plus-space expansions into vector-valued forms and back.

use num_rational::Rational64;
use weil::corpus::{random_plus_space, rng};
use weil::expansions::verify_t_transform;
use weil::io::ExpansionFile;
use weil::isomap::{combine_to_scalar, split_to_vector};
use weil::HarmonicExpansion;

fn main() -> weil::Result<()> {
    let theta = HarmonicExpansion::theta(30);
    let v = split_to_vector(&theta, 1, 0)?;
    for (g, comp) in v.components().iter().enumerate() {
        let terms: Vec<String> = comp
            .terms()
            .map(|(n, t)| format!("{}·q^{n}", t.plus))
            .collect();
        println!("F_{g} = {}", terms.join(" + "));
    }
    assert_eq!(combine_to_scalar(&v, 0)?, theta);

    let mut r = rng(5);
    let f = random_plus_space(&mut r, 5, 1, -20, 40, 0.3);
    let v = split_to_vector(&f, 5, 1)?;
    println!(
        "m = 5, k = 1: {} terms, dual {}, T support {}, round trip {}",
        f.len(),
        v.dual,
        verify_t_transform(&v),
        combine_to_scalar(&v, 1)? == f
    );
    let c = v.component(3).plus(Rational64::new(-11, 20));
    println!("F_3 at q^(-11/20): {c}");

    let json = serde_json::to_string_pretty(&ExpansionFile::from_vector(&v, 1)?)?;
    println!("{}", json.lines().take(12).collect::<Vec<_>>().join("\n"));
    Ok(())
}
