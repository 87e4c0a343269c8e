//! Exact rank of B = CA against 2φ(m), with the entries where the case
//! table and the direct character sums disagree.

use weil::arith::euler_phi;
use weil::isomap::{gauss_sum_identity_check, rank_lemma_check};

fn main() -> weil::Result<()> {
    for m in [1, 2, 3, 5, 7, 11, 13] {
        let r = rank_lemma_check(m)?;
        println!(
            "m = {m:2}: rank {:2}, 2φ(m) = {:2}, leading columns independent {}, table deviations {}",
            r.rank,
            2 * euler_phi(m),
            r.leading_columns_independent,
            r.table_deviations.len()
        );
        if let Some(d) = r.table_deviations.first() {
            println!(
                "         e.g. β = {}, γ = {}: table {}, actual {}",
                d.beta, d.gamma, d.table, d.actual
            );
        }
    }
    for m in [1, 2, 3, 5, 7] {
        println!("A·R closed form, m = {m}: {}", gauss_sum_identity_check(m));
    }
    Ok(())
}
