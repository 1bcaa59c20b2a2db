//! Closed-form solvers, expanders, verifiers, and exhaustive oracles for the
//! three word equations
//!
//! * `ZW = W̄Z̄`,
//! * `XY = ȲX`,
//! * `XY = ȲZ`.
//!
//! The first two have complete parametric solutions: with `d` the gcd of the
//! lengths, either everything collapses to powers of `M`, or the words are
//! alternating block words `(EĒ)…` over one free block `E` of length `d`.
//! The third is solved structurally per length case. Solution families are
//! returned symbolically; materializing all `3^d` expansions is the caller's
//! choice. Each solver has a brute-force twin that scans the full word cube
//! so the closed forms can be checked against ground truth at desk scale.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::{words_of_length, Word};

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn all_m(len: usize) -> Word {
    use crate::word::Letter;
    Word::from_letters(vec![Letter::M; len])
}

/// Repeats of `first·second` followed by a final `first`, i.e.
/// `(first·second)^count · first`.
fn alternating(first: &Word, second: &Word, count: usize) -> Word {
    first.concat(second).repeated(count).concat(first)
}

/// True iff `Z·W` equals `W̄·Z̄` letter for letter.
///
/// Panics on empty operands; the equation is studied for non-empty words.
pub fn verify_zw(z: &Word, w: &Word) -> bool {
    assert!(
        !z.is_empty() && !w.is_empty(),
        "equation words must be non-empty"
    );
    z.concat(w) == w.complement().concat(&z.complement())
}

/// Which shape the `ZW = W̄Z̄` solution set takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZwKind {
    /// `m/d` odd: the single solution `ZW = M^m`.
    AllM,
    /// `m/d` even: `Z = (ĒE)^z_blocks·Ē`, `W = (EĒ)^w_blocks·E` over a free
    /// block `E` of length `d`.
    Alternating { z_blocks: usize, w_blocks: usize },
}

/// The solution family of `ZW = W̄Z̄` for `|ZW| = m`, `|W| = r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZwSolutionFamily {
    /// Total length |ZW|.
    pub m: usize,
    /// Length |W|.
    pub r: usize,
    /// gcd(m, r); the free-block length in the alternating case.
    pub d: usize,
    pub kind: ZwKind,
}

impl ZwSolutionFamily {
    /// The concrete pair for a free block `E` of length `d`. In the all-M
    /// case the block is ignored.
    ///
    /// Panics when an alternating family is given a block of the wrong
    /// length.
    pub fn expand(&self, e: &Word) -> (Word, Word) {
        match self.kind {
            ZwKind::AllM => (all_m(self.m - self.r), all_m(self.r)),
            ZwKind::Alternating { z_blocks, w_blocks } => {
                assert_eq!(
                    e.len(),
                    self.d,
                    "free block must have length d = {}",
                    self.d
                );
                let e_bar = e.complement();
                let z = alternating(&e_bar, e, z_blocks);
                let w = alternating(e, &e_bar, w_blocks);
                (z, w)
            }
        }
    }

    /// Materializes the whole family: one pair in the all-M case, one pair
    /// per block `E ∈ W_d` (3^d pairs) in the alternating case.
    pub fn enumerate(&self) -> Vec<(Word, Word)> {
        match self.kind {
            ZwKind::AllM => vec![self.expand(&Word::new())],
            ZwKind::Alternating { .. } => {
                let mut pairs: Vec<(Word, Word)> =
                    words_of_length(self.d).map(|e| self.expand(&e)).collect();
                pairs.sort_unstable();
                pairs.dedup();
                pairs
            }
        }
    }
}

/// Solves `ZW = W̄Z̄` symbolically for `|ZW| = m`, `|W| = r`, `0 < r < m`.
///
/// With `d = gcd(m, r)`: if `m/d` is odd the only solution is `ZW = M^m`;
/// if `m/d` is even, `Z = (ĒE)^((m−r)/d−1)/2 · Ē` and
/// `W = (EĒ)^((r/d−1)/2) · E` with `E` free of length `d`. In that case
/// `r/d` and `(m−r)/d` are forced odd, which the constructor asserts.
pub fn solve_zw(m: usize, r: usize) -> Result<ZwSolutionFamily> {
    if r == 0 || r >= m {
        return Err(Error::ZwLengths { m, r });
    }
    let d = gcd(m, r);
    let kind = if (m / d) % 2 == 1 {
        ZwKind::AllM
    } else {
        let t = m - r;
        assert!(
            (r / d) % 2 == 1 && (t / d) % 2 == 1,
            "m/d even forces odd r/d and (m−r)/d"
        );
        ZwKind::Alternating {
            z_blocks: (t / d - 1) / 2,
            w_blocks: (r / d - 1) / 2,
        }
    };
    Ok(ZwSolutionFamily { m, r, d, kind })
}

/// Materialized solution set of `ZW = W̄Z̄` at the given lengths.
pub fn enumerate_zw_solutions(m: usize, r: usize) -> Result<Vec<(Word, Word)>> {
    Ok(solve_zw(m, r)?.enumerate())
}

/// Ground truth for `ZW = W̄Z̄`: tests every length-`m` word split at
/// `m − r`. Exponential in `m`; run it only at desk scale.
pub fn brute_force_zw(m: usize, r: usize) -> Result<Vec<(Word, Word)>> {
    if r == 0 || r >= m {
        return Err(Error::ZwLengths { m, r });
    }
    let split = m - r;
    let mut pairs: Vec<(Word, Word)> = words_of_length(m)
        .par_bridge()
        .filter_map(|zw| {
            let z = zw.prefix(split);
            let w = zw.suffix_from(split);
            if verify_zw(&z, &w) {
                Some((z, w))
            } else {
                None
            }
        })
        .collect();
    pairs.sort_unstable();
    Ok(pairs)
}

/// True iff `X·Y` equals `Ȳ·X`.
pub fn verify_xy_yx(x: &Word, y: &Word) -> bool {
    assert!(
        !x.is_empty() && !y.is_empty(),
        "equation words must be non-empty"
    );
    x.concat(y) == y.complement().concat(x)
}

/// Which shape the `XY = ȲX` solution set takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XyKind {
    /// `m/d` odd: `X = M^l`, `Y = M^m`.
    AllM,
    /// `m/d` even: `X = (EĒ)^x_blocks·E`, `Y = (ĒE)^y_blocks` over a free
    /// block `E` of length `d`.
    Alternating { x_blocks: usize, y_blocks: usize },
}

/// The solution family of `XY = ȲX` for `|X| = l`, `|Y| = m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XyYxSolutionFamily {
    pub x_len: usize,
    pub y_len: usize,
    /// gcd(x_len, y_len).
    pub d: usize,
    pub kind: XyKind,
}

impl XyYxSolutionFamily {
    /// The concrete pair for a free block `E` of length `d`.
    pub fn expand(&self, e: &Word) -> (Word, Word) {
        match self.kind {
            XyKind::AllM => (all_m(self.x_len), all_m(self.y_len)),
            XyKind::Alternating { x_blocks, y_blocks } => {
                assert_eq!(
                    e.len(),
                    self.d,
                    "free block must have length d = {}",
                    self.d
                );
                let e_bar = e.complement();
                let x = alternating(e, &e_bar, x_blocks);
                let y = e_bar.concat(e).repeated(y_blocks);
                (x, y)
            }
        }
    }

    /// Materializes the whole family.
    pub fn enumerate(&self) -> Vec<(Word, Word)> {
        match self.kind {
            XyKind::AllM => vec![self.expand(&Word::new())],
            XyKind::Alternating { .. } => {
                let mut pairs: Vec<(Word, Word)> =
                    words_of_length(self.d).map(|e| self.expand(&e)).collect();
                pairs.sort_unstable();
                pairs.dedup();
                pairs
            }
        }
    }
}

/// Solves `XY = ȲX` symbolically for `|X| = x_len ≥ 1`, `|Y| = y_len ≥ 1`.
///
/// Both length orderings (and `x_len = y_len`) reduce to the `ZW` equation,
/// giving one uniform family in `d = gcd(x_len, y_len)`: all-M when
/// `y_len/d` is odd, otherwise `X = (EĒ)^((x_len/d−1)/2)·E` and
/// `Y = (ĒE)^(y_len/2d)` with `E` free of length `d`.
pub fn solve_xy_yx(x_len: usize, y_len: usize) -> Result<XyYxSolutionFamily> {
    if x_len == 0 || y_len == 0 {
        return Err(Error::XyLengths { x_len, y_len });
    }
    let d = gcd(x_len, y_len);
    let kind = if (y_len / d) % 2 == 1 {
        XyKind::AllM
    } else {
        // gcd(x_len/d, y_len/d) = 1, so x_len/d is odd here.
        XyKind::Alternating {
            x_blocks: (x_len / d - 1) / 2,
            y_blocks: y_len / (2 * d),
        }
    };
    Ok(XyYxSolutionFamily {
        x_len,
        y_len,
        d,
        kind,
    })
}

/// Ground truth for `XY = ȲX`: tests every `(X, Y)` in
/// `W_x_len × W_y_len`.
pub fn brute_force_xy_yx(x_len: usize, y_len: usize) -> Result<Vec<(Word, Word)>> {
    if x_len == 0 || y_len == 0 {
        return Err(Error::XyLengths { x_len, y_len });
    }
    let mut pairs: Vec<(Word, Word)> = words_of_length(x_len + y_len)
        .par_bridge()
        .filter_map(|xy| {
            let x = xy.prefix(x_len);
            let y = xy.suffix_from(x_len);
            if verify_xy_yx(&x, &y) {
                Some((x, y))
            } else {
                None
            }
        })
        .collect();
    pairs.sort_unstable();
    Ok(pairs)
}

/// True iff `X·Y` equals `Ȳ·Z`.
pub fn verify_xy_yz(x: &Word, y: &Word, z: &Word) -> bool {
    assert!(
        !x.is_empty() && !y.is_empty() && !z.is_empty(),
        "equation words must be non-empty"
    );
    x.concat(y) == y.complement().concat(z)
}

/// The structural outcome of a concrete `XY = ȲZ` solution. `|X| = |Z|` is
/// forced by length bookkeeping; the three cases split on how `|X|` compares
/// with `|Y|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XyYzStructure {
    /// `|X| = |Y|`: then `X = Z̄` and the triple satisfies `XY = ȲX̄`.
    EqualLengths,
    /// `|X| < |Y|`, `|Y| = q|X| + r` with even `q`: `X̄ = Y₀X₀`,
    /// `Z = X̄₀Y₀`, and `Y = (Y₀X₀·Ȳ₀X̄₀)^(q/2)·Y₀`.
    MiddleEvenQ { y0: Word, x0: Word, q: usize },
    /// `|X| < |Y|`, odd `q`: `X = Y₀X₀`, `Z = X̄₀Y₀`, and
    /// `Y = (Ȳ₀X̄₀·Y₀X₀)^((q−1)/2)·Ȳ₀X̄₀·Y₀`.
    MiddleOddQ { y0: Word, x0: Word, q: usize },
    /// `|X| > |Y|`: `X = Ȳ·X₁` and `Z = X₁·Y`.
    LongX { x1: Word },
}

impl XyYzStructure {
    /// Rebuilds the middle-case `Y` from its witnesses; `None` for the other
    /// cases.
    pub fn rebuild_y(&self) -> Option<Word> {
        match self {
            XyYzStructure::MiddleEvenQ { y0, x0, q } => Some(build_middle_y(y0, x0, *q)),
            XyYzStructure::MiddleOddQ { y0, x0, q } => Some(build_middle_y(y0, x0, *q)),
            _ => None,
        }
    }
}

/// The middle-case `Y` for witnesses `(Y₀, X₀, q)`: alternating blocks of
/// `Y₀X₀` and its complement, `q` of them, followed by `Y₀`.
pub fn build_middle_y(y0: &Word, x0: &Word, q: usize) -> Word {
    let block = y0.concat(x0);
    let block_bar = block.complement();
    let mut y = Word::new();
    for i in 0..q {
        // Even q starts with the plain block, odd q with the complemented one.
        let even_slot = i % 2 == 0;
        let take_plain = q.is_multiple_of(2) == even_slot;
        y = y.concat(if take_plain { &block } else { &block_bar });
    }
    y.concat(y0)
}

/// Classifies a concrete solution of `XY = ȲZ`.
///
/// Returns `Ok(None)` when the triple does not satisfy the equation,
/// `Err(UnequalEnds)` when `|X| ≠ |Z|` (such triples cannot satisfy it), and
/// otherwise the structural case with extracted witnesses.
pub fn analyze_xy_yz(x: &Word, y: &Word, z: &Word) -> Result<Option<XyYzStructure>> {
    if x.len() != z.len() {
        return Err(Error::UnequalEnds {
            x_len: x.len(),
            z_len: z.len(),
        });
    }
    if x.is_empty() || y.is_empty() {
        return Err(Error::XyLengths {
            x_len: x.len(),
            y_len: y.len(),
        });
    }
    if !verify_xy_yz(x, y, z) {
        return Ok(None);
    }
    let structure = if x.len() == y.len() {
        debug_assert_eq!(x, &z.complement());
        XyYzStructure::EqualLengths
    } else if x.len() < y.len() {
        let q = y.len() / x.len();
        let r = y.len() % x.len();
        // Witnesses split X̄ for even q, X for odd q.
        let base = if q.is_multiple_of(2) {
            x.complement()
        } else {
            x.clone()
        };
        let y0 = base.prefix(r);
        let x0 = base.suffix_from(r);
        debug_assert_eq!(z, &x0.complement().concat(&y0));
        let structure = if q.is_multiple_of(2) {
            XyYzStructure::MiddleEvenQ { y0, x0, q }
        } else {
            XyYzStructure::MiddleOddQ { y0, x0, q }
        };
        debug_assert_eq!(structure.rebuild_y().as_ref(), Some(y));
        structure
    } else {
        let x1 = x.suffix_from(y.len());
        debug_assert!(y.complement().is_left_factor_of(x));
        debug_assert_eq!(z, &x1.concat(y));
        XyYzStructure::LongX { x1 }
    };
    Ok(Some(structure))
}

/// Ground truth for `XY = ȲZ` at `|X| = |Z| = x_len`, `|Y| = y_len`:
/// enumerates `(X, Y)` and reads `Z` off the equation.
pub fn brute_force_xy_yz(x_len: usize, y_len: usize) -> Result<Vec<(Word, Word, Word)>> {
    if x_len == 0 || y_len == 0 {
        return Err(Error::XyLengths { x_len, y_len });
    }
    let mut triples: Vec<(Word, Word, Word)> = words_of_length(x_len + y_len)
        .par_bridge()
        .filter_map(|xy| {
            let x = xy.prefix(x_len);
            let y = xy.suffix_from(x_len);
            // XY = ȲZ forces the first y_len letters of XY to be Ȳ.
            let joined = x.concat(&y);
            if joined.prefix(y_len) != y.complement() {
                return None;
            }
            let z = joined.suffix_from(y_len);
            debug_assert!(verify_xy_yz(&x, &y, &z));
            Some((x, y, z))
        })
        .collect();
    triples.sort_unstable();
    Ok(triples)
}
