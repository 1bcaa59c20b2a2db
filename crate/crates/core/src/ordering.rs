//! The parity-lexicographic order and its two extensions to
//! prefix-comparable words, plus the lexicality predicate and the
//! enumeration of lexical words.
//!
//! Equal-length words compare at the first differing position with
//! `L < M < R`, and the verdict is reversed when the common prefix is odd
//! (contains an odd number of `M`s). When one word is a proper prefix of the
//! other the two extensions disagree:
//!
//! * C̄-order: `uv > u` iff `u` is odd;
//! * C-order: `uv > u` iff `u` is even.
//!
//! A word is D-lexical (D one of the two variants) when it is greater than
//! all of its proper suffixes and its complement is less than all of *its*
//! proper suffixes, both in D-order. `L₁(D) = {M, R}` by definition.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::word::{decode_word, Letter, Parity, Word};

/// Selects which prefix rule applies when one word is a proper prefix of the
/// other: the C̄-order or the C-order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderVariant {
    CBar,
    C,
}

impl OrderVariant {
    pub const BOTH: [OrderVariant; 2] = [OrderVariant::CBar, OrderVariant::C];

    /// Verdict for `compare(u, uv)` when `u` is a proper prefix with the
    /// given parity: `Less` when the extension wins.
    fn shorter_vs_longer(self, prefix_parity: Parity) -> Ordering {
        let longer_wins = match self {
            OrderVariant::CBar => prefix_parity.is_odd(),
            OrderVariant::C => prefix_parity.is_even(),
        };
        if longer_wins {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

fn letter_cmp(a: Letter, b: Letter, complemented: bool) -> Ordering {
    if complemented {
        a.complement().cmp(&b.complement())
    } else {
        a.cmp(&b)
    }
}

/// Shared scan for both public comparisons. With `complemented` set, both
/// sides are read through the letterwise complement; parity is unaffected
/// since M is fixed.
pub(crate) fn cmp_extended_slices(
    x: &[Letter],
    y: &[Letter],
    variant: OrderVariant,
    complemented: bool,
) -> Ordering {
    let mut parity = Parity::Even;
    for i in 0..x.len().min(y.len()) {
        if x[i] != y[i] {
            let verdict = letter_cmp(x[i], y[i], complemented);
            return if parity.is_even() {
                verdict
            } else {
                verdict.reverse()
            };
        }
        parity ^= Parity::of_letter(x[i]);
    }
    match x.len().cmp(&y.len()) {
        Ordering::Equal => Ordering::Equal,
        // x is a proper prefix of y; `parity` is the parity of x.
        Ordering::Less => variant.shorter_vs_longer(parity),
        Ordering::Greater => variant.shorter_vs_longer(parity).reverse(),
    }
}

/// Compares two non-empty words in the extended order selected by `variant`.
///
/// Words that are not prefixes of one another compare parity-lexicographically
/// at their first difference; proper prefixes follow the variant's rule.
/// `Equal` is returned only for identical words.
///
/// Panics if either word is empty; the extended orders are not defined there.
pub fn compare_extended(u: &Word, w: &Word, variant: OrderVariant) -> Ordering {
    assert!(
        !u.is_empty() && !w.is_empty(),
        "extended order compares non-empty words"
    );
    cmp_extended_slices(u, w, variant, false)
}

/// Parity-lexicographic comparison of two equal-length words. Agrees with
/// [`compare_extended`] under both variants, since the prefix case cannot
/// arise.
///
/// Panics on a length mismatch.
pub fn compare_parity_lex(u: &Word, w: &Word) -> Ordering {
    assert_eq!(u.len(), w.len(), "parity-lex compares equal-length words");
    // Variant is irrelevant without a prefix case.
    cmp_extended_slices(u, w, OrderVariant::CBar, false)
}

/// Parity-lexicographic comparison of `w` with the cyclic rotation of `base`
/// by `rot`, optionally reading `base` through the complement. Used by the
/// necklace scans to avoid materializing rotations.
pub(crate) fn cmp_vs_rotation(
    w: &[Letter],
    base: &[Letter],
    rot: usize,
    complement_base: bool,
) -> Ordering {
    debug_assert_eq!(w.len(), base.len());
    let n = w.len();
    let mut parity = Parity::Even;
    for i in 0..n {
        let a = w[i];
        let mut b = base[(i + rot) % n];
        if complement_base {
            b = b.complement();
        }
        if a != b {
            let verdict = a.cmp(&b);
            return if parity.is_even() {
                verdict
            } else {
                verdict.reverse()
            };
        }
        parity ^= Parity::of_letter(a);
    }
    Ordering::Equal
}

pub(crate) fn is_d_lexical_slice(w: &[Letter], variant: OrderVariant) -> bool {
    let n = w.len();
    if n == 1 {
        return w[0] != Letter::L;
    }
    for k in 1..n {
        // w against its suffix, and w̄ against the matching suffix of w̄.
        if cmp_extended_slices(w, &w[k..], variant, false) != Ordering::Greater {
            return false;
        }
        if cmp_extended_slices(w, &w[k..], variant, true) != Ordering::Less {
            return false;
        }
    }
    true
}

/// True iff `w` is greater than each of its proper suffixes and `w̄` is less
/// than each of its proper suffixes, in the order selected by `variant`.
/// Length-1 words follow `L₁(D) = {M, R}`.
///
/// Panics on the empty word.
pub fn is_d_lexical(w: &Word, variant: OrderVariant) -> bool {
    assert!(!w.is_empty(), "lexicality of the empty word is undefined");
    is_d_lexical_slice(w, variant)
}

/// All lexical words of length `n` for the chosen variant, sorted
/// parity-lexicographically descending. Scans all `3^n` words; the search
/// space is partitioned across threads and the result is deterministic.
pub fn enumerate_lexical(n: usize, variant: OrderVariant) -> Vec<Word> {
    assert!(n >= 1, "lexical words have length at least 1");
    let total = 3u64.pow(n as u32);
    let mut found: Vec<Word> = (0..total)
        .into_par_iter()
        .map_init(
            || vec![Letter::L; n],
            |buf, index| {
                decode_word(index, buf);
                if is_d_lexical_slice(buf, variant) {
                    Some(Word::from_letters(buf.clone()))
                } else {
                    None
                }
            },
        )
        .flatten()
        .collect();
    found.sort_unstable_by(|a, b| compare_parity_lex(b, a));
    found
}
