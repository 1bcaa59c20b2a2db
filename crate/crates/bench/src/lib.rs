//! Shared fixtures for the criterion benchmarks.

use lmr_core::Word;

/// The length-16 colliding pair built from λ = RRM, X₁ = LM.
pub fn sixteen_letter_pair() -> (Word, Word) {
    lmr_core::build_case_b_pair(&Word::parse("RRM").unwrap(), &Word::parse("LM").unwrap())
}

/// A 24-letter broken alternating word with a 3-letter unit and a tail.
pub fn long_broken_alternating() -> Word {
    let unit = Word::parse("RRM").unwrap();
    let block = unit.concat(&unit.complement());
    block.repeated(3).concat(&block.prefix(6 - 1))
}
