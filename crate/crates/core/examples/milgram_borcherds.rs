//! Milgram's formula and the Borcherds eigenvector on random Γ₀(4m) elements.

use weil::corpus::{random_gamma0, rng};
use weil::weilrep::borcherds_eigencheck;
use weil::DiscriminantForm;

fn main() -> weil::Result<()> {
    for m in [1, 2, 5, 12] {
        let df = DiscriminantForm::new(m);
        let (lhs, rhs) = df.milgram_sides();
        println!("m = {m:2}: Σ e(Q(γ)) = {lhs}, matches: {}", lhs == rhs);
    }
    let control = DiscriminantForm::with_signature(5, (2, 2));
    println!("signature (2,2) control holds: {}", control.milgram_check());

    let mut r = rng(11);
    for m in [1, 3, 7] {
        let df = DiscriminantForm::new(m);
        for _ in 0..3 {
            let g = random_gamma0(&mut r, m);
            let check = borcherds_eigencheck(&df, g)?;
            println!(
                "m = {m}, {g:?} -> {:?}: eigenvalue {}, holds {}",
                check.conjugated, check.scalar, check.holds
            );
        }
    }
    Ok(())
}
