//! Finite right actions of a free group, given by one permutation per
//! generator. Evaluating a word is the unique extension of the generator
//! permutations to an action of the whole free group.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// A bijection of `{0..degree-1}`; `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &p in &images {
            if p >= m {
                return Err(Error::InvalidPermutation(format!(
                    "image {p} out of range for degree {m}"
                )));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("image {p} repeated")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[p], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears in two cycles"
                    )));
                }
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Self { images }
    }

    /// `self` first, then `other` (right-action composition).
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    /// Conjugate by a relabelling `f`: the permutation `f⁻¹ ∘ self ∘ f`
    /// acting on relabelled points, i.e. `f(p) ↦ f(self(p))`.
    pub fn relabel(&self, f: &Permutation) -> Self {
        let mut images = vec![0; self.degree()];
        for (p, &q) in self.images.iter().enumerate() {
            images[f.apply(p)] = f.apply(q);
        }
        Self { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A right action of the free group on `alphabet` on the points
/// `{0..degree-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAction {
    alphabet: Alphabet,
    degree: usize,
    perms: Vec<Permutation>,
    inverses: Vec<Permutation>,
}

impl FiniteAction {
    pub fn new(alphabet: Alphabet, degree: usize, perms: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        if perms.len() != alphabet.len() {
            return Err(Error::SizeMismatch {
                expected: alphabet.len(),
                found: perms.len(),
            });
        }
        if let Some(p) = perms.iter().find(|p| p.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "permutation of degree {} in an action of degree {degree}",
                p.degree()
            )));
        }
        let inverses = perms.iter().map(Permutation::inverse).collect();
        Ok(Self {
            alphabet,
            degree,
            perms,
            inverses,
        })
    }

    /// Every generator acts trivially.
    pub fn trivial(alphabet: Alphabet, degree: usize) -> Result<Self> {
        let perms = vec![Permutation::identity(degree); alphabet.len()];
        Self::new(alphabet, degree, perms)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generator_perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn check_point(&self, point: usize) -> Result<()> {
        if point < self.degree {
            Ok(())
        } else {
            Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            })
        }
    }

    /// Image of `point` under a single letter. Panics if the letter or point
    /// is out of range.
    pub fn step(&self, point: usize, letter: Letter) -> usize {
        if letter.is_inverse() {
            self.inverses[letter.gen()].apply(point)
        } else {
            self.perms[letter.gen()].apply(point)
        }
    }

    /// `point · w`, letters applied left to right.
    pub fn evaluate(&self, point: usize, word: &Word) -> Result<usize> {
        self.check_point(point)?;
        self.alphabet.check_word(word)?;
        Ok(self.fold(point, word.letters()))
    }

    /// Applies an arbitrary (not necessarily reduced) letter sequence.
    pub fn evaluate_letters(&self, point: usize, letters: &[Letter]) -> Result<usize> {
        self.check_point(point)?;
        letters
            .iter()
            .try_for_each(|&l| self.alphabet.check_letter(l))?;
        Ok(self.fold(point, letters))
    }

    fn fold(&self, point: usize, letters: &[Letter]) -> usize {
        letters.iter().fold(point, |p, &l| self.step(p, l))
    }

    /// The permutation `p ↦ p · w`: the image of `w` under the homomorphism
    /// into the symmetric group.
    pub fn perm_of_word(&self, word: &Word) -> Result<Permutation> {
        self.alphabet.check_word(word)?;
        Ok(Permutation {
            images: (0..self.degree)
                .map(|p| self.fold(p, word.letters()))
                .collect(),
        })
    }

    /// Points reachable from `base`, in breadth-first discovery order
    /// (generators in alphabet order, positive letter before inverse).
    pub fn orbit(&self, base: usize) -> Result<Vec<usize>> {
        self.check_point(base)?;
        let mut seen = vec![false; self.degree];
        let mut order = vec![base];
        let mut queue = VecDeque::from([base]);
        seen[base] = true;
        while let Some(p) = queue.pop_front() {
            for rank in 0..2 * self.alphabet.len() {
                let q = self.step(p, Letter::from_rank(rank));
                if !std::mem::replace(&mut seen[q], true) {
                    order.push(q);
                    queue.push_back(q);
                }
            }
        }
        Ok(order)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0)
            .map(|o| o.len() == self.degree)
            .unwrap_or(false)
    }

    /// Parses the line-oriented action file format:
    ///
    /// ```text
    /// degree 3
    /// generators x y
    /// perm x 1 2 0
    /// perm y 0 1 2
    /// ```
    ///
    /// Blank lines and `#` comments are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let fmt_err = |line: usize, message: String| Error::Format { line, message };

        let (line_no, line) = lines
            .next()
            .ok_or_else(|| fmt_err(0, "missing `degree` line".into()))?;
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("degree") {
            return Err(fmt_err(line_no, "expected `degree <m>`".into()));
        }
        let degree: usize = match (tokens.next().map(str::parse), tokens.next()) {
            (Some(Ok(m)), None) if m >= 1 => m,
            _ => return Err(fmt_err(line_no, "expected `degree <m>` with m >= 1".into())),
        };

        let (line_no, line) = lines
            .next()
            .ok_or_else(|| fmt_err(0, "missing `generators` line".into()))?;
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("generators") {
            return Err(fmt_err(line_no, "expected `generators <names>`".into()));
        }
        let alphabet = Alphabet::new(tokens).map_err(|e| fmt_err(line_no, e.to_string()))?;

        let mut perms: Vec<Option<Permutation>> = vec![None; alphabet.len()];
        for (line_no, line) in lines {
            let mut tokens = line.split_whitespace();
            if tokens.next() != Some("perm") {
                return Err(fmt_err(line_no, "expected `perm <name> <images>`".into()));
            }
            let name = tokens
                .next()
                .ok_or_else(|| fmt_err(line_no, "missing generator name".into()))?;
            let gen = alphabet
                .index_of(name)
                .ok_or_else(|| fmt_err(line_no, format!("unknown generator `{name}`")))?;
            let images = tokens
                .map(str::parse::<usize>)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| {
                    Error::InvalidPermutation(format!("line {line_no}: non-numeric image"))
                })?;
            if images.len() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "line {line_no}: {} images for degree {degree}",
                    images.len()
                )));
            }
            let perm = Permutation::new(images).map_err(|e| match e {
                Error::InvalidPermutation(msg) => {
                    Error::InvalidPermutation(format!("line {line_no}: {msg}"))
                }
                other => other,
            })?;
            if perms[gen].replace(perm).is_some() {
                return Err(fmt_err(
                    line_no,
                    format!("duplicate perm line for `{name}`"),
                ));
            }
        }
        let perms = perms
            .into_iter()
            .enumerate()
            .map(|(g, p)| {
                p.ok_or_else(|| fmt_err(0, format!("missing perm line for `{}`", alphabet.name(g))))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, degree, perms)
    }
}

/// Writes the action file format read by [`FiniteAction::from_text`].
impl fmt::Display for FiniteAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree {}", self.degree)?;
        f.write_str("generators")?;
        for name in self.alphabet.names() {
            write!(f, " {name}")?;
        }
        writeln!(f)?;
        for (name, perm) in self.alphabet.names().iter().zip(&self.perms) {
            writeln!(f, "perm {name} {perm}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for FiniteAction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_text(s)
    }
}
