//! Membership in the stabilizer and rewriting over its free basis.
//!
//! cargo run -p schreier-core --example subgroup_rewriting

use schreier_core::{build_table, compute_basis, contains, expand, rewrite, FiniteAction, Result};

fn main() -> Result<()> {
    let action: FiniteAction = "degree 3\ngenerators x y\nperm x 1 2 0\nperm y 0 1 2\n".parse()?;
    let a = action.alphabet().clone();
    let (table, transversal) = build_table(&action, 0)?;
    let basis = compute_basis(&table, &transversal);

    for text in ["x y x^2", "x y^-1 x^2", "x^3 y x^-3 y^2", "x", "y x"] {
        let w = a.parse(text)?;
        if !contains(&table, &w)? {
            println!(
                "{text:<16} not in H (ends in coset {})",
                table.coset_of(&w)?
            );
            continue;
        }
        let bw = rewrite(&table, &basis, &w)?;
        println!(
            "{text:<16} = {bw:<20} expands to {}",
            a.format(&expand(&basis, &bw)?)
        );
    }
    Ok(())
}
