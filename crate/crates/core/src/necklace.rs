//! Conjugate classes (necklaces), their complement closures ⟨⟨w⟩⟩, greatest
//! representatives, and the enumerations M(n) and U(n).
//!
//! ⟨w⟩ is the set of cyclic rotations of `w`; ⟨⟨w⟩⟩ = ⟨w⟩ ∪ ⟨w̄⟩. A necklace
//! is self-complementary when the two coincide. M(n) collects ⟨⟨w⟩⟩ over the
//! primitive words of length n, U(n) the primitive self-complementary
//! necklaces. Counts come from explicit enumeration, never from counting
//! formulas, so they double as ground truth in tests.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::ordering::{cmp_vs_rotation, compare_parity_lex};
use crate::word::{decode_word, is_primitive_slice, Letter, Word};

/// A rotation- and complement-closed set of equal-length words with its
/// greatest member cached.
///
/// The member list is sorted parity-lexicographically descending, so
/// `words()[0]` is the canonical representative. For a primitive seed the
/// class has `2n` members, or `n` when self-complementary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceClass {
    words: Vec<Word>,
    self_complementary: bool,
}

impl NecklaceClass {
    /// The parity-lexicographically greatest member.
    pub fn greatest(&self) -> &Word {
        &self.words[0]
    }

    /// All members, greatest first.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Number of distinct members.
    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Length of the underlying words.
    pub fn word_len(&self) -> usize {
        self.words[0].len()
    }

    /// True iff ⟨w⟩ already contains w̄, i.e. ⟨⟨w⟩⟩ = ⟨w⟩.
    pub fn is_self_complementary(&self) -> bool {
        self.self_complementary
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.iter().any(|v| v == w)
    }
}

fn sort_dedup(words: &mut Vec<Word>) {
    words.sort_unstable_by(|a, b| compare_parity_lex(b, a));
    words.dedup();
}

/// The conjugate class ⟨w⟩: all rotations, deduplicated, greatest first.
pub fn conjugate_class(w: &Word) -> Vec<Word> {
    assert!(!w.is_empty(), "conjugate class of the empty word");
    let mut rotations: Vec<Word> = (0..w.len()).map(|k| w.rotated(k)).collect();
    sort_dedup(&mut rotations);
    rotations
}

/// The full class ⟨⟨w⟩⟩ = ⟨w⟩ ∪ ⟨w̄⟩.
pub fn full_class(w: &Word) -> NecklaceClass {
    assert!(!w.is_empty(), "class of the empty word");
    let complement = w.complement();
    let mut words: Vec<Word> = (0..w.len())
        .map(|k| w.rotated(k))
        .chain((0..w.len()).map(|k| complement.rotated(k)))
        .collect();
    sort_dedup(&mut words);
    let self_complementary = (0..w.len()).any(|k| w.rotated(k) == complement);
    NecklaceClass {
        words,
        self_complementary,
    }
}

pub(crate) fn is_greatest_slice(w: &[Letter]) -> bool {
    let n = w.len();
    for rot in 1..n {
        if cmp_vs_rotation(w, w, rot, false) == Ordering::Less {
            return false;
        }
    }
    for rot in 0..n {
        if cmp_vs_rotation(w, w, rot, true) == Ordering::Less {
            return false;
        }
    }
    true
}

/// True iff `w` is the greatest member of its own full class, i.e. the
/// canonical representative produced by the enumerations.
pub fn is_greatest_in_class(w: &Word) -> bool {
    assert!(!w.is_empty(), "class of the empty word");
    is_greatest_slice(w)
}

fn is_self_complementary_slice(w: &[Letter]) -> bool {
    (0..w.len()).any(|rot| cmp_vs_rotation(w, w, rot, true) == Ordering::Equal)
}

fn scan_canonical<F>(n: usize, keep: F) -> Vec<NecklaceClass>
where
    F: Fn(&[Letter]) -> bool + Sync,
{
    assert!(n >= 1, "enumeration needs n ≥ 1");
    assert!(n <= 32, "word length {n} is far beyond enumerable range");
    let total = 3u64.pow(n as u32);
    let mut classes: Vec<NecklaceClass> = (0..total)
        .into_par_iter()
        .map_init(
            || vec![Letter::L; n],
            |buf, index| {
                decode_word(index, buf);
                if is_primitive_slice(buf) && is_greatest_slice(buf) && keep(buf) {
                    Some(full_class(&Word::from_letters(buf.clone())))
                } else {
                    None
                }
            },
        )
        .flatten()
        .collect();
    classes.sort_unstable_by(|a, b| compare_parity_lex(b.greatest(), a.greatest()));
    classes
}

/// M(n): one class per distinct ⟨⟨w⟩⟩ over primitive `w` of length `n`,
/// sorted by greatest representative descending.
///
/// Scans all `3^n` words in parallel; each class is emitted exactly once,
/// when the scan hits its greatest member.
pub fn enumerate_m(n: usize) -> Vec<NecklaceClass> {
    scan_canonical(n, |_| true)
}

/// U(n): the primitive self-complementary necklaces ⟨w⟩ of length `n`,
/// sorted by greatest representative descending.
pub fn enumerate_u(n: usize) -> Vec<NecklaceClass> {
    scan_canonical(n, is_self_complementary_slice)
}

/// Splits an even-length word into δ with `w = δ·δ̄`, if the second half is
/// the complement of the first. Odd-length words and mismatches give `None`;
/// the caller decides what to do with the parity of δ.
pub fn decompose_delta(w: &Word) -> Option<Word> {
    if w.is_empty() || !w.len().is_multiple_of(2) {
        return None;
    }
    let half = w.len() / 2;
    let delta = w.prefix(half);
    if w.suffix_from(half) == delta.complement() {
        Some(delta)
    } else {
        None
    }
}
