//! The Schreier free basis of a finite-index subgroup.
//!
//! For a Schreier transversal `T` and generators `X`, the elements
//! `t x (t̄x)⁻¹` with `(t, x) ∈ T × X` that are not the identity freely
//! generate `H`. Pairs giving the identity are kept as degenerate slots:
//! there are exactly `m - 1` of them, one per nonempty representative.

use crate::cosets::{CosetTable, SchreierTransversal};
use crate::words::{Letter, Word};

/// A nondegenerate Schreier generator `t x (t̄x)⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisElement {
    /// Coset index of `t`.
    pub coset: usize,
    /// Generator index of `x`.
    pub gen: usize,
    /// The representative `t`.
    pub t: Word,
    /// The reduced word `t x (t̄x)⁻¹`, never the identity.
    pub word: Word,
}

/// What the pair `(coset, generator)` contributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Basis(usize),
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierBasis {
    elements: Vec<BasisElement>,
    slots: Vec<Vec<Slot>>,
}

impl SchreierBasis {
    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn word(&self, k: usize) -> Option<&Word> {
        self.elements.get(k).map(|e| &e.word)
    }

    pub fn slot(&self, coset: usize, gen: usize) -> Slot {
        self.slots[coset][gen]
    }

    /// All `(coset, generator)` pairs whose Schreier generator is trivial.
    pub fn degenerate_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (c, row) in self.slots.iter().enumerate() {
            for (g, slot) in row.iter().enumerate() {
                if *slot == Slot::Degenerate {
                    out.push((c, g));
                }
            }
        }
        out
    }

    pub fn degenerate_count(&self) -> usize {
        self.slots
            .iter()
            .flatten()
            .filter(|s| **s == Slot::Degenerate)
            .count()
    }

    /// The degenerate pair owned by the nonempty representative of `coset`:
    /// `ux ↦ (u, x)` and `ux⁻¹ ↦ (ux⁻¹, x)`. `None` for coset 0.
    pub fn degenerate_pair_for(
        &self,
        table: &CosetTable,
        transversal: &SchreierTransversal,
        coset: usize,
    ) -> Option<(usize, usize)> {
        let rep = transversal.get(coset);
        let last = rep.last()?;
        let gen = last.gen();
        let owner = if last.is_inverse() {
            coset
        } else {
            table.coset_of(&rep.parent()).ok()?
        };
        Some((owner, gen))
    }
}

/// Computes the Schreier generators for every `(coset, generator)` pair, in
/// order of coset index then generator.
pub fn compute_basis(table: &CosetTable, transversal: &SchreierTransversal) -> SchreierBasis {
    let m = table.index();
    let n = table.rank();
    let mut elements = Vec::new();
    let mut slots = vec![vec![Slot::Degenerate; n]; m];

    for (c, row) in slots.iter_mut().enumerate() {
        let t = transversal.get(c);
        for (g, slot) in row.iter_mut().enumerate() {
            let tx = t.concat(&Word::from(Letter::pos(g)));
            let rep = transversal.get(table.next(c, g));
            let word = tx.concat(&rep.invert());
            if !word.is_identity() {
                *slot = Slot::Basis(elements.len());
                elements.push(BasisElement {
                    coset: c,
                    gen: g,
                    t: t.clone(),
                    word,
                });
            }
        }
    }

    let basis = SchreierBasis { elements, slots };
    debug_assert!(schreier_formula_check(&basis, m, n));
    debug_assert_eq!(basis.degenerate_count() + 1, m);
    basis
}

/// `1 + m(n - 1)`, the rank of a subgroup of index `m` in a free group of
/// rank `n >= 1`. For `n = 0` the only subgroup is trivial and has rank 0.
pub fn schreier_rank(m: usize, n: usize) -> usize {
    if n == 0 {
        0
    } else {
        1 + m * (n - 1)
    }
}

pub fn schreier_formula_check(basis: &SchreierBasis, m: usize, n: usize) -> bool {
    basis.len() == schreier_rank(m, n)
}

pub fn degenerate_count(basis: &SchreierBasis) -> usize {
    basis.degenerate_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{FiniteAction, Permutation};
    use crate::cosets::{build_table, build_table_with_order, TransversalOrder};
    use crate::words::Alphabet;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn action(x: Permutation, y: Permutation) -> FiniteAction {
        let m = x.degree();
        FiniteAction::new(xy(), m, vec![x, y]).unwrap()
    }

    fn basis_words(a: &Alphabet, b: &SchreierBasis) -> Vec<String> {
        b.elements().iter().map(|e| a.format(&e.word)).collect()
    }

    #[test]
    fn trivial_action_basis_is_generators() {
        let act = FiniteAction::trivial(xy(), 2).unwrap();
        let (table, t) = build_table(&act, 0).unwrap();
        let b = compute_basis(&table, &t);
        assert_eq!(basis_words(&xy(), &b), ["x", "y"]);
        assert_eq!(b.degenerate_count(), 0);
        assert!(schreier_formula_check(&b, 1, 2));
    }

    #[test]
    fn three_cycle_basis() {
        let act = action(
            Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            Permutation::identity(3),
        );
        let (table, t) = build_table(&act, 0).unwrap();
        let b = compute_basis(&table, &t);
        assert_eq!(
            basis_words(&xy(), &b),
            ["y", "x y x^-1", "x^3", "x^2 y x^-2"]
        );
        assert_eq!(b.degenerate_pairs(), vec![(0, 0), (1, 0)]);
        assert_eq!(degenerate_count(&b), 2);
        assert!(schreier_formula_check(&b, 3, 2));
        assert_eq!(b.slot(1, 1), Slot::Basis(1));
        assert_eq!(b.degenerate_pair_for(&table, &t, 0), None);
        assert_eq!(b.degenerate_pair_for(&table, &t, 1), Some((0, 0)));
        assert_eq!(b.degenerate_pair_for(&table, &t, 2), Some((1, 0)));
    }

    #[test]
    fn three_cycle_shortlex_basis() {
        let act = action(
            Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            Permutation::identity(3),
        );
        let (table, t) = build_table_with_order(&act, 0, TransversalOrder::Shortlex).unwrap();
        let b = compute_basis(&table, &t);
        assert_eq!(basis_words(&xy(), &b), ["y", "x^3", "x y x^-1", "x^-1 y x"]);
        // x^-1 owns the pair (x^-1, x)
        assert_eq!(b.degenerate_pairs(), vec![(0, 0), (2, 0)]);
        assert_eq!(b.degenerate_pair_for(&table, &t, 2), Some((2, 0)));
    }

    #[test]
    fn swap_basis() {
        let act = action(
            Permutation::from_cycles(2, &[&[0, 1]]).unwrap(),
            Permutation::identity(2),
        );
        let (table, t) = build_table(&act, 0).unwrap();
        let b = compute_basis(&table, &t);
        assert_eq!(basis_words(&xy(), &b), ["y", "x^2", "x y x^-1"]);
        assert_eq!(b.degenerate_count(), 1);
    }

    #[test]
    fn cyclic_rank_one() {
        let a = Alphabet::new(["x"]).unwrap();
        let act = FiniteAction::new(
            a.clone(),
            5,
            vec![Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()],
        )
        .unwrap();
        let (table, t) = build_table(&act, 0).unwrap();
        let b = compute_basis(&table, &t);
        assert_eq!(basis_words(&a, &b), ["x^5"]);
        assert!(schreier_formula_check(&b, 5, 1));
        assert_eq!(b.degenerate_count(), 4);
    }

    #[test]
    fn rank_formula() {
        assert_eq!(schreier_rank(3, 2), 4);
        assert_eq!(schreier_rank(5, 1), 1);
        assert_eq!(schreier_rank(1, 7), 7);
        assert_eq!(schreier_rank(4, 0), 0);
    }

    #[test]
    fn empty_alphabet() {
        let act = FiniteAction::trivial(Alphabet::default(), 3).unwrap();
        let (table, t) = build_table(&act, 1).unwrap();
        let b = compute_basis(&table, &t);
        assert!(b.is_empty());
        assert!(schreier_formula_check(&b, 1, 0));
    }
}
