//! Membership in `H = Stab(basepoint)` and Reidemeister–Schreier rewriting
//! of elements of `H` as words over the Schreier basis.

use std::fmt;

use crate::cosets::CosetTable;
use crate::error::{Error, Result};
use crate::schreier::{SchreierBasis, Slot};
use crate::words::{Letter, Word};

/// A reduced word over the Schreier basis; generator `k` is basis element `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BWord(Word);

impl BWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Reduces a sequence of `(basis index, sign)` factors.
    pub fn from_factors<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (usize, i32)>,
    {
        Self(Word::from_letters(
            factors.into_iter().map(|(k, s)| Letter::with_sign(k, s)),
        ))
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.0.letters().iter().map(|l| (l.gen(), l.sign()))
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &BWord) -> BWord {
        BWord(self.0.concat(&other.0))
    }

    pub fn invert(&self) -> BWord {
        BWord(self.0.invert())
    }
}

impl From<Word> for BWord {
    fn from(word: Word) -> Self {
        Self(word)
    }
}

/// `b<k>` / `b<k>^-1` tokens separated by spaces; `1` for the empty word.
impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (i, (k, s)) in self.factors().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if s < 0 {
                write!(f, "b{k}^-1")?;
            } else {
                write!(f, "b{k}")?;
            }
        }
        Ok(())
    }
}

/// `true` iff `word` fixes the basepoint.
pub fn contains(table: &CosetTable, word: &Word) -> Result<bool> {
    Ok(table.coset_of(word)? == 0)
}

/// Rewrites `word ∈ H` over the Schreier basis by scanning it with the coset
/// state. A positive letter `x` read in coset `c` contributes the generator in
/// slot `(c, x)`; an inverse letter `x⁻¹` read in coset `c` contributes the
/// inverse of the generator in slot `(c', x)`, where `c' · x = c`.
pub fn rewrite(table: &CosetTable, basis: &SchreierBasis, word: &Word) -> Result<BWord> {
    table.action().alphabet().check_word(word)?;
    let mut coset = 0;
    let mut out = Word::identity();
    for &letter in word.letters() {
        let g = letter.gen();
        if letter.is_inverse() {
            let prev = table.prev(coset, g);
            if let Slot::Basis(k) = basis.slot(prev, g) {
                out.push(Letter::neg(k));
            }
            coset = prev;
        } else {
            if let Slot::Basis(k) = basis.slot(coset, g) {
                out.push(Letter::pos(k));
            }
            coset = table.next(coset, g);
        }
    }
    if coset != 0 {
        return Err(Error::NotInSubgroup { coset });
    }
    Ok(BWord(out))
}

/// Substitutes basis words back into `F`.
pub fn expand(basis: &SchreierBasis, bword: &BWord) -> Result<Word> {
    let mut out = Word::identity();
    for (k, s) in bword.factors() {
        let w = basis.word(k).ok_or(Error::BasisIndexOutOfRange {
            index: k,
            size: basis.len(),
        })?;
        out = if s < 0 {
            out.concat(&w.invert())
        } else {
            out.concat(w)
        };
    }
    Ok(out)
}
