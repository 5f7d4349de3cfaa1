//! Elements of a free group as reduced words over `X ∪ X⁻¹`.
//!
//! A [`Word`] is always freely reduced: every constructor goes through the
//! stack-based reduction in [`Word::from_letters`]. Words do not carry their
//! alphabet; they are checked against an [`Alphabet`] whenever one is in play.
//!
//! Text form:
//!
//! ```text
//! word   := "1" | factor (sep factor)*
//! factor := name ("^" integer)?
//! sep    := whitespace+ | whitespace* "*" whitespace*
//! ```
//!
//! Output is canonical: single spaces, run-length exponents, `1` for the
//! identity.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Upper bound on the length of a parsed word, guarding against `x^999999999`.
pub const MAX_PARSED_LEN: usize = 1 << 22;

/// An ordered set of generator names. The order fixes the letter order used
/// by shortlex comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidGeneratorName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// Parses a comma separated list such as `x,y,z`. The empty string gives
    /// the empty alphabet.
    pub fn from_csv(list: &str) -> Result<Self> {
        let list = list.trim();
        if list.is_empty() {
            return Ok(Self::default());
        }
        Self::new(list.split(',').map(str::trim))
    }

    /// `x0, x1, ..., x(n-1)`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self::new((0..n).map(|i| format!("{prefix}{i}"))).expect("numbered names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.names[gen]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Single positive letter word for generator `name`.
    pub fn generator(&self, name: &str) -> Result<Word> {
        let gen = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Word::from_letters([Letter::pos(gen)]))
    }

    pub fn check_letter(&self, letter: Letter) -> Result<()> {
        if letter.gen() < self.len() {
            Ok(())
        } else {
            Err(Error::InvalidLetter {
                gen: letter.gen(),
                size: self.len(),
            })
        }
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        word.letters()
            .iter()
            .try_for_each(|&l| self.check_letter(l))
    }

    /// Validates every letter against this alphabet, then reduces.
    pub fn reduce<I>(&self, raw: I) -> Result<Word>
    where
        I: IntoIterator<Item = Letter>,
    {
        let raw: Vec<Letter> = raw.into_iter().collect();
        raw.iter().try_for_each(|&l| self.check_letter(l))?;
        Ok(Word::from_letters(raw))
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        parse_word(text, self)
    }

    pub fn format(&self, word: &Word) -> String {
        format_word(word, self)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A generator or its inverse.
///
/// The derived ordering is the shortlex letter order
/// `x0 < x0⁻¹ < x1 < x1⁻¹ < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    gen: usize,
    inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Self {
            gen,
            inverse: false,
        }
    }

    pub fn neg(gen: usize) -> Self {
        Self { gen, inverse: true }
    }

    /// `sign` must be `1` or `-1`.
    pub fn with_sign(gen: usize, sign: i32) -> Self {
        assert!(sign == 1 || sign == -1, "letter sign must be +1 or -1");
        Self {
            gen,
            inverse: sign < 0,
        }
    }

    pub fn gen(self) -> usize {
        self.gen
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// Position in the letter order, `2 * gen + (inverse as usize)`.
    pub fn rank(self) -> usize {
        2 * self.gen + usize::from(self.inverse)
    }

    /// Inverse of [`Letter::rank`].
    pub fn from_rank(rank: usize) -> Self {
        Self {
            gen: rank / 2,
            inverse: rank % 2 == 1,
        }
    }
}

/// A freely reduced word. The empty word is the identity.
///
/// `Ord` is shortlex: shorter words first, equal lengths compared letterwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Freely reduces an arbitrary letter sequence with a single left-to-right
    /// stack pass.
    pub fn from_letters<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut word = Self::identity();
        for letter in raw {
            word.push(letter);
        }
        word
    }

    /// Multiplies on the right by one letter, cancelling if needed.
    pub fn push(&mut self, letter: Letter) {
        if self.letters.last() == Some(&letter.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &letter in &other.letters {
            out.push(letter);
        }
        out
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// The `len + 1` prefixes, shortest first.
    pub fn prefixes(&self) -> Vec<Word> {
        (0..=self.len())
            .map(|k| Word {
                letters: self.letters[..k].to_vec(),
            })
            .collect()
    }

    /// Word without its last letter. Identity for the identity.
    pub fn parent(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.pop();
        Word { letters }
    }

    pub fn inverse_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_inverse()).count()
    }

    pub fn is_positive(&self) -> bool {
        self.inverse_count() == 0
    }

    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shortlex_cmp(other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Letter> for Word {
    fn from(letter: Letter) -> Self {
        Word {
            letters: vec![letter],
        }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word::from_letters(iter)
    }
}

/// Canonical text of a word. See [`format_word`].
pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let letter = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == letter {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let name = self
                .alphabet
                .names
                .get(letter.gen())
                .map(String::as_str)
                .unwrap_or("?");
            let exp = run as i64 * i64::from(letter.sign());
            if exp == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

pub fn format_word(word: &Word, alphabet: &Alphabet) -> String {
    word.display(alphabet).to_string()
}

/// Parses the word grammar against `alphabet` and reduces the result.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let text = text.trim();
    if text == "1" {
        return Ok(Word::identity());
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut raw: Vec<Letter> = Vec::new();
    let mut expect_factor = true;

    while pos < bytes.len() {
        if expect_factor {
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            if start == pos {
                return Err(match text[pos..].chars().next() {
                    Some('*') | None => Error::EmptyToken,
                    Some(c) => Error::UnexpectedChar {
                        found: c,
                        offset: pos,
                    },
                });
            }
            let name = &text[start..pos];
            if !is_identifier(name) {
                return Err(Error::InvalidGeneratorName(name.to_string()));
            }
            let gen = alphabet
                .index_of(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            let mut exp: i64 = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let num_start = pos;
                if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                    pos += 1;
                }
                let digits_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let token = &text[start..pos];
                if digits_start == pos {
                    return Err(Error::MalformedExponent(token.to_string()));
                }
                exp = text[num_start..pos]
                    .parse()
                    .map_err(|_| Error::MalformedExponent(token.to_string()))?;
                if exp == 0 {
                    return Err(Error::MalformedExponent(token.to_string()));
                }
            }
            let run = usize::try_from(exp.unsigned_abs()).unwrap_or(usize::MAX);
            if raw.len().saturating_add(run) > MAX_PARSED_LEN {
                return Err(Error::WordTooLong(raw.len().saturating_add(run)));
            }
            let letter = if exp < 0 {
                Letter::neg(gen)
            } else {
                Letter::pos(gen)
            };
            raw.extend(std::iter::repeat_n(letter, run));
            expect_factor = false;
        } else {
            // separator: whitespace+ | whitespace* '*' whitespace*
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
            }
            if pos == start {
                let c = text[pos..].chars().next().unwrap_or(' ');
                return Err(Error::UnexpectedChar {
                    found: c,
                    offset: pos,
                });
            }
            if pos == bytes.len() {
                return Err(Error::EmptyToken);
            }
            expect_factor = true;
        }
    }
    if expect_factor {
        return Err(Error::EmptyToken);
    }
    Ok(Word::from_letters(raw))
}
