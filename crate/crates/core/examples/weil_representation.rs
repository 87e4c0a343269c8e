//! ρ_L on a few words, the generator relations and the unipotent closed form.

use weil::metaplectic::Word;
use weil::weilrep::{generator_relations, rho_eval, shintani_unipotent};
use weil::{DiscriminantForm, MpElement};

fn main() -> weil::Result<()> {
    let df = DiscriminantForm::new(3);
    for w in ["S", "T", "S T T S'", "Z"] {
        let word: Word = w.parse()?;
        let g = word.product();
        let rho = rho_eval(&df, &g, false);
        println!("ρ({w}) = ρ({:?}, sign {})", g.matrix(), g.sign);
        for row in rho.matrix.embed() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            println!("  {}", cells.join("  "));
        }
    }

    for m in 1..=4 {
        let r = generator_relations(&DiscriminantForm::new(m), false);
        println!(
            "m = {m}: S⁴ = I {}, S⁴ = -I {}, (ST)³ = S² {}",
            r.s_fourth_identity, r.s_fourth_minus_identity, r.braid
        );
    }

    let g = MpElement::tilde([1, 0, 2, 1])?;
    let same = rho_eval(&df, &g, false) == shintani_unipotent(&df, 2);
    println!("ρ((1 0; 2 1)~) matches the closed form: {same}");
    Ok(())
}
