//! Cosets of a point stabilizer and prefix-closed transversals for them.
//!
//! cargo run -p schreier-core --example schreier_transversal

use schreier_core::{build_table_with_order, FiniteAction, Result, TransversalOrder};

fn main() -> Result<()> {
    // x acts as a 5-cycle, y as a transposition: the stabilizer of 0 has index 5
    let action: FiniteAction =
        "degree 5\ngenerators x y\nperm x 1 2 3 4 0\nperm y 1 0 2 3 4\n".parse()?;
    let a = action.alphabet().clone();

    for order in [TransversalOrder::PositiveFirst, TransversalOrder::Shortlex] {
        let (table, transversal) = build_table_with_order(&action, 0, order)?;
        println!("{} transversal, index {}:", order.name(), table.index());
        for (c, t) in transversal.reps().iter().enumerate() {
            println!("  coset {c} (point {}): {}", table.cosets()[c], a.format(t));
        }
        let w = a.parse("y x^3 y^-1 x")?;
        println!(
            "  rep of {} is {}",
            a.format(&w),
            a.format(transversal.rep(&table, &w)?)
        );
    }
    Ok(())
}
