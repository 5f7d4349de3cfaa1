//! Random and exhaustive generation of words and actions.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::actions::{FiniteAction, Permutation};
use crate::cosets::{CosetTable, SchreierTransversal};
use crate::words::{Alphabet, Letter, Word};

/// A uniformly random reduced word of exactly `len` letters over `n`
/// generators (the identity when `n == 0`).
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> Word {
    if n == 0 {
        return Word::identity();
    }
    let mut w = Word::identity();
    while w.len() < len {
        let letter = Letter::from_rank(rng.gen_range(0..2 * n));
        if w.last() != Some(letter.inverse()) {
            w.push(letter);
        }
    }
    w
}

/// A random reduced word with length uniform in `0..=max_len`.
pub fn random_word_up_to<R: Rng + ?Sized>(rng: &mut R, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_word(rng, n, len)
}

/// A random element of `H`, `u ū⁻¹` for a random word `u`.
pub fn random_subgroup_element<R: Rng + ?Sized>(
    rng: &mut R,
    table: &CosetTable,
    transversal: &SchreierTransversal,
    max_len: usize,
) -> Word {
    let u = random_word_up_to(rng, table.rank(), max_len);
    let c = table.coset_of(&u).expect("word over the table alphabet");
    u.concat(&transversal.get(c).invert())
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffle is a bijection")
}

/// A random `degree`-cycle.
pub fn random_full_cycle<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> Permutation {
    let mut order: Vec<usize> = (0..degree).collect();
    order.shuffle(rng);
    Permutation::from_cycles(degree, &[&order]).expect("single cycle")
}

pub fn random_action<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    degree: usize,
) -> FiniteAction {
    let perms = (0..alphabet.len())
        .map(|_| random_permutation(rng, degree))
        .collect();
    FiniteAction::new(alphabet.clone(), degree, perms).expect("valid random action")
}

/// A random transitive action. Needs a nonempty alphabet unless `degree == 1`.
/// If independent random permutations are not transitive, the first generator
/// is replaced by a random full cycle.
pub fn random_transitive_action<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    degree: usize,
) -> FiniteAction {
    assert!(degree == 1 || !alphabet.is_empty(), "no transitive action");
    let act = random_action(rng, alphabet, degree);
    if act.is_transitive() {
        return act;
    }
    let mut perms = act.generator_perms().to_vec();
    perms[0] = random_full_cycle(rng, degree);
    FiniteAction::new(alphabet.clone(), degree, perms).expect("valid random action")
}

/// Every reduced word of length at most `max_len` over `n` generators, in
/// shortlex order.
pub fn all_reduced_words(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut layer = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for rank in 0..2 * n {
                let letter = Letter::from_rank(rank);
                if w.last() != Some(letter.inverse()) {
                    let mut v = w.clone();
                    v.push(letter);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
