//! Runs the full invariant suite against a random action.
//!
//! cargo run -p schreier-core --example invariant_check

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schreier_core::check::{run_checks, CheckConfig};
use schreier_core::sample::random_transitive_action;
use schreier_core::{Alphabet, Result, TransversalOrder};

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let action = random_transitive_action(&mut rng, &Alphabet::new(["a", "b", "c"])?, 6);
    print!("{action}");
    for order in [TransversalOrder::PositiveFirst, TransversalOrder::Shortlex] {
        let config = CheckConfig {
            max_len: 5,
            order,
            ..CheckConfig::default()
        };
        let report = run_checks(&action, 0, &config)?;
        let failed: Vec<_> = report.outcomes.iter().filter(|o| !o.passed()).collect();
        println!(
            "{}: index {}, |B| = {}, {} checks, {} failed",
            order.name(),
            report.index,
            report.basis_len,
            report.outcomes.len(),
            failed.len()
        );
    }
    Ok(())
}
