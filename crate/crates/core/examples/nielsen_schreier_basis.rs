//! The free basis of a finite-index subgroup and the rank formula
//! `1 + m(n - 1)`.
//!
//! cargo run -p schreier-core --example nielsen_schreier_basis

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schreier_core::sample::random_transitive_action;
use schreier_core::schreier::schreier_rank;
use schreier_core::{build_table, compute_basis, Alphabet, FiniteAction, Result};

fn main() -> Result<()> {
    let action: FiniteAction = "degree 3\ngenerators x y\nperm x 1 2 0\nperm y 0 1 2\n".parse()?;
    let a = action.alphabet().clone();
    let (table, transversal) = build_table(&action, 0)?;
    let basis = compute_basis(&table, &transversal);

    println!("basis of Stab(0):");
    for (k, e) in basis.elements().iter().enumerate() {
        println!(
            "  b{k} = {:<12} from t = {}, x = {}",
            a.format(&e.word),
            a.format(&e.t),
            a.name(e.gen)
        );
    }
    for (c, g) in basis.degenerate_pairs() {
        println!(
            "  degenerate: t = {}, x = {}",
            a.format(transversal.get(c)),
            a.name(g)
        );
    }

    println!("random transitive actions:");
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (n, m) in [(1, 7), (2, 10), (3, 4), (4, 25)] {
        let action = random_transitive_action(&mut rng, &Alphabet::numbered("x", n), m);
        let (table, transversal) = build_table(&action, 0)?;
        let basis = compute_basis(&table, &transversal);
        println!(
            "  n = {n}, m = {m:>2}: |B| = {:>3}, 1 + m(n-1) = {:>3}, degenerate = {}",
            basis.len(),
            schreier_rank(m, n),
            basis.degenerate_count()
        );
    }
    Ok(())
}
