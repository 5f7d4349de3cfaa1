//! Inducing an action of the free group from an action of the subgroup.
//!
//! cargo run -p schreier-core --example induced_action

use schreier_core::{
    build_table, check_claim, compute_basis, induce, restrict_to_h, tensor_transfer, FiniteAction,
    HAction, Permutation, Result,
};

fn main() -> Result<()> {
    let action: FiniteAction = "degree 3\ngenerators x y\nperm x 1 2 0\nperm y 0 1 2\n".parse()?;
    let a = action.alphabet().clone();
    let (table, transversal) = build_table(&action, 0)?;
    let basis = compute_basis(&table, &transversal);

    // H acts on {0, 1}: b0 = y swaps, b2 = x^3 swaps, the rest are trivial
    let swap = Permutation::new(vec![1, 0])?;
    let id = Permutation::identity(2);
    let sigma = HAction::new(2, vec![swap.clone(), id.clone(), swap, id])?;

    let induced = induce(&sigma, &table, &basis)?;
    print!(
        "induced action on A x H\\F (point a + 2c):\n{}",
        induced.action()
    );

    let restricted = restrict_to_h(&induced, &basis)?;
    for (k, p) in restricted.iter().enumerate() {
        println!("restriction to b{k}: [{p}]  sigma: [{}]", sigma.perms()[k]);
    }
    println!(
        "(a, H) t = (a, Ht) for all t: {}",
        check_claim(&induced, &table, &transversal)
    );

    let prior = a.parse("x")?;
    let g = a.parse("x^2 y")?;
    let (a1, c1) = tensor_transfer(&sigma, &table, &transversal, &basis, 0, &prior, &g)?;
    let direct = induced
        .action()
        .evaluate(induced.encode(0, table.coset_of(&prior)?), &g)?;
    println!(
        "(0, Hx) . x^2 y = ({a1}, coset {c1}); letter by letter: {:?}",
        induced.decode(direct)
    );
    Ok(())
}
