//! A permutation per generator determines an action of the whole free group.
//!
//! cargo run -p schreier-core --example permutation_actions

use schreier_core::{FiniteAction, Result};

const ACTION: &str = "\
# x rotates a square, y reflects it
degree 4
generators x y
perm x 1 2 3 0
perm y 1 0 3 2
";

fn main() -> Result<()> {
    let action: FiniteAction = ACTION.parse()?;
    let a = action.alphabet().clone();

    for text in ["x", "x^-1", "y x y", "x^4", "x y x y"] {
        let w = a.parse(text)?;
        println!(
            "{text:>8}: 0 -> {}   perm [{}]",
            action.evaluate(0, &w)?,
            action.perm_of_word(&w)?
        );
    }

    // right action: evaluate(p, v w) = evaluate(evaluate(p, v), w)
    let v = a.parse("x y")?;
    let w = a.parse("x^2")?;
    let lhs = action.evaluate(1, &v.concat(&w))?;
    let rhs = action.evaluate(action.evaluate(1, &v)?, &w)?;
    println!("1 . (x y)(x^2) = {lhs} = (1 . x y) . x^2 = {rhs}");

    println!("orbit of 0: {:?}", action.orbit(0)?);
    println!("transitive: {}", action.is_transitive());
    print!("round trip:\n{action}");
    Ok(())
}
