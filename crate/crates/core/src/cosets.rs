//! Right cosets of a point stabilizer `H = Stab(basepoint)` and Schreier
//! transversals for them.
//!
//! The cosets `H\F` are in bijection with the orbit of the basepoint, coset
//! `Hw` corresponding to `basepoint · w`. Coset index 0 is `H` itself.
//!
//! A transversal is built by a breadth-first search over the Schreier graph.
//! Each representative is the search parent extended by one letter, so the
//! transversal is prefix-closed (a Schreier transversal) by construction.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::actions::FiniteAction;
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Which Schreier transversal to build. Both are prefix-closed; they differ in
/// which word is chosen for each coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TransversalOrder {
    /// Least word with the fewest inverse letters, ties broken by shortlex.
    /// For a finite action every coset has a positive representative, so the
    /// search uses positive letters only.
    #[default]
    PositiveFirst,
    /// Shortlex-least word in each coset, letter order `x0 < x0⁻¹ < x1 < ...`.
    Shortlex,
}

impl TransversalOrder {
    /// The word order that the chosen representatives are minimal for.
    pub fn cmp_words(self, a: &Word, b: &Word) -> Ordering {
        match self {
            TransversalOrder::Shortlex => a.shortlex_cmp(b),
            TransversalOrder::PositiveFirst => a
                .inverse_count()
                .cmp(&b.inverse_count())
                .then_with(|| a.shortlex_cmp(b)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TransversalOrder::PositiveFirst => "positive",
            TransversalOrder::Shortlex => "shortlex",
        }
    }

    /// Letter ranks explored by the search, in order.
    fn letter_ranks(self, n: usize) -> Box<dyn Iterator<Item = usize>> {
        match self {
            TransversalOrder::Shortlex => Box::new(0..2 * n),
            TransversalOrder::PositiveFirst => Box::new((0..n).map(|g| 2 * g)),
        }
    }
}

impl std::str::FromStr for TransversalOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "positive" => Ok(TransversalOrder::PositiveFirst),
            "shortlex" => Ok(TransversalOrder::Shortlex),
            other => Err(format!("unknown transversal order `{other}`")),
        }
    }
}

/// The basepoint orbit with generator transitions on coset indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    action: FiniteAction,
    basepoint: usize,
    cosets: Vec<usize>,
    index_of_point: Vec<Option<usize>>,
    forward: Vec<Vec<usize>>,
    backward: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn action(&self) -> &FiniteAction {
        &self.action
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    /// The index `[F:H]`.
    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.action.alphabet().len()
    }

    /// Orbit points, `cosets()[c]` is the point of coset `c`.
    pub fn cosets(&self) -> &[usize] {
        &self.cosets
    }

    pub fn coset_of_point(&self, point: usize) -> Option<usize> {
        self.index_of_point.get(point).copied().flatten()
    }

    /// Coset `c · x` for generator `x`.
    pub fn next(&self, coset: usize, gen: usize) -> usize {
        self.forward[coset][gen]
    }

    /// The coset `c'` with `c' · x = c`.
    pub fn prev(&self, coset: usize, gen: usize) -> usize {
        self.backward[coset][gen]
    }

    pub fn step(&self, coset: usize, letter: Letter) -> usize {
        if letter.is_inverse() {
            self.prev(coset, letter.gen())
        } else {
            self.next(coset, letter.gen())
        }
    }

    /// Applies `word` to a coset index.
    pub fn walk(&self, coset: usize, word: &Word) -> Result<usize> {
        self.action.alphabet().check_word(word)?;
        Ok(word.letters().iter().fold(coset, |c, &l| self.step(c, l)))
    }

    /// Index of the coset `Hw`.
    pub fn coset_of(&self, word: &Word) -> Result<usize> {
        self.walk(0, word)
    }
}

/// One prefix-closed representative per coset; `reps()[0]` is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierTransversal {
    reps: Vec<Word>,
    order: TransversalOrder,
}

impl SchreierTransversal {
    pub fn reps(&self) -> &[Word] {
        &self.reps
    }

    pub fn get(&self, coset: usize) -> &Word {
        &self.reps[coset]
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn order(&self) -> TransversalOrder {
        self.order
    }

    /// The representative `w̄` of the coset `Hw`.
    pub fn rep(&self, table: &CosetTable, word: &Word) -> Result<&Word> {
        Ok(&self.reps[table.coset_of(word)?])
    }

    /// Coset index whose representative is exactly `word`, if any.
    pub fn position(&self, word: &Word) -> Option<usize> {
        self.reps.iter().position(|r| r == word)
    }
}

/// Builds the coset table of `Stab(basepoint)` together with its default
/// (positive-first) Schreier transversal.
pub fn build_table(
    action: &FiniteAction,
    basepoint: usize,
) -> Result<(CosetTable, SchreierTransversal)> {
    build_table_with_order(action, basepoint, TransversalOrder::default())
}

pub fn build_table_with_order(
    action: &FiniteAction,
    basepoint: usize,
    order: TransversalOrder,
) -> Result<(CosetTable, SchreierTransversal)> {
    action.check_point(basepoint)?;
    let n = action.alphabet().len();

    let mut index_of_point = vec![None; action.degree()];
    let mut cosets = vec![basepoint];
    let mut reps = vec![Word::identity()];
    index_of_point[basepoint] = Some(0);

    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let point = cosets[c];
        for rank in order.letter_ranks(n) {
            let letter = Letter::from_rank(rank);
            let q = action.step(point, letter);
            if index_of_point[q].is_none() {
                let mut rep = reps[c].clone();
                rep.push(letter);
                debug_assert_eq!(rep.len(), reps[c].len() + 1);
                index_of_point[q] = Some(cosets.len());
                cosets.push(q);
                reps.push(rep);
                queue.push_back(cosets.len() - 1);
            }
        }
    }

    // Positive letters reach the whole orbit of a finite action; this is
    // only a guard for the positive-first search.
    if let Ok(orbit) = action.orbit(basepoint) {
        if orbit.len() != cosets.len() {
            return Err(Error::SizeMismatch {
                expected: orbit.len(),
                found: cosets.len(),
            });
        }
    }

    let forward: Vec<Vec<usize>> = cosets
        .iter()
        .map(|&p| {
            (0..n)
                .map(|g| {
                    index_of_point[action.step(p, Letter::pos(g))]
                        .expect("orbit is closed under generators")
                })
                .collect()
        })
        .collect();
    let mut backward = vec![vec![0; n]; cosets.len()];
    for (c, row) in forward.iter().enumerate() {
        for (g, &d) in row.iter().enumerate() {
            backward[d][g] = c;
        }
    }

    let table = CosetTable {
        action: action.clone(),
        basepoint,
        cosets,
        index_of_point,
        forward,
        backward,
    };
    Ok((table, SchreierTransversal { reps, order }))
}
