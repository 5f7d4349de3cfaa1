//! Free groups acting on finite sets, and the Nielsen–Schreier machinery for
//! finite-index subgroups presented as point stabilizers.
//!
//! The pipeline:
//!
//! 1. [`words`]: reduced words, the elements of the free group `F` on `X`.
//! 2. [`actions`]: a permutation per generator extends uniquely to an action
//!    of `F`; [`FiniteAction::evaluate`] is that extension.
//! 3. [`cosets`]: the cosets of `H = Stab(basepoint)` and a prefix-closed
//!    (Schreier) transversal.
//! 4. [`schreier`]: the free basis `{ t x (t̄x)⁻¹ ≠ 1 }` of `H`.
//! 5. [`rewrite`]: membership in `H` and rewriting over the basis.
//! 6. [`induce`]: the action of `F` on `A × H\F` induced from an action of
//!    `H` on `A`.
//!
//! ```
//! use schreier_core::{build_table, compute_basis, rewrite, FiniteAction};
//!
//! let action = FiniteAction::from_text(
//!     "degree 3\ngenerators x y\nperm x 1 2 0\nperm y 0 1 2\n",
//! )?;
//! let (table, transversal) = build_table(&action, 0)?;
//! let basis = compute_basis(&table, &transversal);
//! assert_eq!(basis.len(), 4);
//!
//! let h = action.alphabet().parse("x y x^2")?;
//! assert_eq!(rewrite(&table, &basis, &h)?.to_string(), "b1 b2");
//! # Ok::<(), schreier_core::Error>(())
//! ```

pub mod actions;
pub mod check;
pub mod cli;
pub mod cosets;
mod error;
pub mod induce;
pub mod rewrite;
pub mod sample;
pub mod schreier;
pub mod words;

pub use actions::{FiniteAction, Permutation};
pub use cosets::{
    build_table, build_table_with_order, CosetTable, SchreierTransversal, TransversalOrder,
};
pub use error::{Error, Result};
pub use induce::{check_claim, induce, restrict_to_h, tensor_transfer, HAction, InducedAction};
pub use rewrite::{contains, expand, rewrite, BWord};
pub use schreier::{compute_basis, schreier_formula_check, BasisElement, SchreierBasis, Slot};
pub use words::{Alphabet, Letter, Word};
