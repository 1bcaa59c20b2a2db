//! The alphabet {L, M, R}, finite words over it, and the letterwise
//! structure everything else builds on: complementation (R̄ = L, L̄ = R,
//! M̄ = M), parity (the count of M letters mod 2), periodicity, factor
//! relations, and broken-alternating decompositions.

use std::fmt;
use std::ops::{BitXor, BitXorAssign, Deref};
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the three symbols `L`, `M`, `R`.
///
/// The derived order is `L < M < R`; the two-sided comparisons in
/// [`crate::ordering`] are built from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    M,
    R,
}

impl Letter {
    /// All letters in ascending order.
    pub const ALL: [Letter; 3] = [Letter::L, Letter::M, Letter::R];

    /// Letterwise complement: swaps `L` and `R`, fixes `M`. An involution.
    pub fn complement(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::M => Letter::M,
            Letter::R => Letter::L,
        }
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            'L' => Some(Letter::L),
            'M' => Some(Letter::M),
            'R' => Some(Letter::R),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::M => 'M',
            Letter::R => 'R',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::L => "L",
            Letter::M => "M",
            Letter::R => "R",
        })
    }
}

/// Evenness of the number of `M` letters in a word.
///
/// Parity is multiplicative over concatenation: `parity(uv) = parity(u) ^
/// parity(v)`. It drives the direction reversals in the parity-lexicographic
/// order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_letter(letter: Letter) -> Parity {
        if letter == Letter::M {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl BitXor for Parity {
    type Output = Parity;

    fn bitxor(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl BitXorAssign for Parity {
    fn bitxor_assign(&mut self, rhs: Parity) {
        *self = *self ^ rhs;
    }
}

/// A finite word over {L, M, R}. The empty word is a valid value and is the
/// identity for concatenation.
///
/// Words dereference to `&[Letter]`, so slice operations (`len`, indexing,
/// `starts_with`, ...) apply directly. All operations are pure; `Word` is
/// safe to share across threads.
///
/// The derived `Ord` is plain lexicographic with prefixes first — a storage
/// order for deterministic sets. The domain orders live in
/// [`crate::ordering`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// Parses an uppercase L/M/R string. Anything else — including
    /// lowercase — is rejected with the offending index.
    pub fn parse(text: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(text.len());
        for (index, ch) in text.chars().enumerate() {
            match Letter::from_char(ch) {
                Some(letter) => letters.push(letter),
                None => return Err(Error::InvalidLetter { ch, index }),
            }
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Letterwise complement; an involution that preserves length and parity.
    pub fn complement(&self) -> Word {
        Word(self.0.iter().map(|l| l.complement()).collect())
    }

    /// `Even` iff the word contains an even number of `M`s. The empty word
    /// is even.
    pub fn parity(&self) -> Parity {
        let m_count = self.0.iter().filter(|&&l| l == Letter::M).count();
        if m_count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The least `p` dividing the length with `w = u^(len/p)` for the
    /// length-`p` prefix `u`. Equals the length exactly when the word is
    /// primitive.
    ///
    /// Panics on the empty word.
    pub fn smallest_period(&self) -> usize {
        assert!(!self.is_empty(), "smallest_period of the empty word");
        smallest_period_slice(&self.0)
    }

    /// True iff the word is not a proper power `u^l`, `l ≥ 2`.
    pub fn is_primitive(&self) -> bool {
        !self.is_empty() && smallest_period_slice(&self.0) == self.len()
    }

    /// True iff `self` is a prefix of `x`. The empty word is a left factor
    /// of everything; every word is an improper left factor of itself.
    pub fn is_left_factor_of(&self, x: &Word) -> bool {
        x.0.starts_with(&self.0)
    }

    /// True iff `self` is a suffix of `x`.
    pub fn is_right_factor_of(&self, x: &Word) -> bool {
        x.0.ends_with(&self.0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Concatenation of many parts, left to right.
    pub fn concat_all(parts: &[&Word]) -> Word {
        let mut letters = Vec::with_capacity(parts.iter().map(|w| w.len()).sum());
        for part in parts {
            letters.extend_from_slice(&part.0);
        }
        Word(letters)
    }

    /// The word repeated `count` times; zero gives the empty word.
    pub fn repeated(&self, count: usize) -> Word {
        Word(self.0.repeat(count))
    }

    /// The cyclic left rotation by `offset` positions (taken mod the length).
    pub fn rotated(&self, offset: usize) -> Word {
        if self.is_empty() {
            return Word::new();
        }
        let k = offset % self.len();
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.0[k..]);
        letters.extend_from_slice(&self.0[..k]);
        Word(letters)
    }

    /// The length-`k` prefix.
    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    /// The suffix starting at position `k`.
    pub fn suffix_from(&self, k: usize) -> Word {
        Word(self.0[k..].to_vec())
    }

    /// The factor at `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }
}

pub(crate) fn smallest_period_slice(w: &[Letter]) -> usize {
    let n = w.len();
    for p in 1..=n / 2 {
        if n.is_multiple_of(p) && w.iter().enumerate().all(|(i, &l)| l == w[i % p]) {
            return p;
        }
    }
    n
}

pub(crate) fn is_primitive_slice(w: &[Letter]) -> bool {
    !w.is_empty() && smallest_period_slice(w) == w.len()
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.0 {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Iterator over all `3^n` words of length `n` in base-3 odometer order
/// (`L` low). Deterministic and cheap; the exhaustive oracles ride on it.
pub fn words_of_length(n: usize) -> impl Iterator<Item = Word> {
    WordsOfLength {
        digits: vec![0u8; n],
        done: false,
    }
}

struct WordsOfLength {
    digits: Vec<u8>,
    done: bool,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let word = Word(
            self.digits
                .iter()
                .map(|&d| Letter::ALL[d as usize])
                .collect(),
        );
        // increment
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.digits[i] == 2 {
                self.digits[i] = 0;
            } else {
                self.digits[i] += 1;
                break;
            }
        }
        Some(word)
    }
}

/// Writes the `index`-th word of length `buf.len()` into `buf`, treating the
/// index as a base-3 numeral with the first letter most significant.
pub(crate) fn decode_word(mut index: u64, buf: &mut [Letter]) {
    for slot in buf.iter_mut().rev() {
        *slot = Letter::ALL[(index % 3) as usize];
        index /= 3;
    }
}

/// A decomposition `w = (unit · ūnit)^repeats · tail` with `repeats ≥ 1` and
/// `tail` a proper left factor of `unit · ūnit` (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenAlternating {
    /// The block seed `w₁`; the repeated block is `w₁w̄₁`.
    pub unit: Word,
    /// Number of full `w₁w̄₁` blocks; always ≥ 1.
    pub repeats: usize,
    /// The leftover prefix of `w₁w̄₁`; its length is < 2|w₁|.
    pub tail: Word,
}

impl BrokenAlternating {
    /// Rebuilds the decomposed word.
    pub fn expand(&self) -> Word {
        let block = self.unit.concat(&self.unit.complement());
        block.repeated(self.repeats).concat(&self.tail)
    }
}

/// Finds the broken-alternating decomposition of `w` with the smallest
/// block seed, if one exists.
///
/// The tail is normalized to be shorter than the full block, so the
/// decomposition returned for a given seed length is unique; among seed
/// lengths the smallest wins. Words shorter than 2 letters are never broken
/// alternating.
pub fn detect_broken_alternating(w: &Word) -> Option<BrokenAlternating> {
    let n = w.len();
    for unit_len in 1..=n / 2 {
        let block_len = 2 * unit_len;
        // w must be a prefix of (unit · ūnit)^∞ containing at least one full block.
        let fits = w.iter().enumerate().all(|(i, &l)| {
            let j = i % block_len;
            if j < unit_len {
                l == w[j]
            } else {
                l == w[j - unit_len].complement()
            }
        });
        if fits {
            return Some(BrokenAlternating {
                unit: w.prefix(unit_len),
                repeats: n / block_len,
                tail: w.suffix_from(n - n % block_len),
            });
        }
    }
    None
}
