//! Combinatorics of finite words over the three-letter alphabet {L, M, R}
//! with the complement that swaps L and R and fixes M.
//!
//! The crate provides:
//!
//! * [`word`] — words, parity, primitivity, factor relations, and
//!   broken-alternating decompositions;
//! * [`ordering`] — the parity-lexicographic order, its two extensions to
//!   prefix-comparable words, and the lexical-word enumeration;
//! * [`necklace`] — conjugate classes closed under complementation, greatest
//!   representatives, and the enumerations M(n) and U(n);
//! * [`equations`] — closed-form solvers and exhaustive oracles for the word
//!   equations `ZW = W̄Z̄`, `XY = ȲX`, and `XY = ȲZ`;
//! * [`psi`] — the class-doubling map ⟨⟨β⟩⟩ ↦ ⟨ββ̄⟩, its collision finder,
//!   and the structural classification of colliding pairs.
//!
//! Everything is exact and enumeration-backed: each closed form has a
//! brute-force twin, and the test suites hold them equal on the whole
//! parameter space at desk scale. All values are immutable and all
//! operations pure, so the API is freely shareable across threads; the big
//! scans partition their search space internally via rayon.
//!
//! ```
//! use lmr_core::{enumerate_m, find_collisions, CaseKind, Word};
//!
//! // The ten primitive complement-closed classes of length 4 ...
//! let classes = enumerate_m(4);
//! assert_eq!(classes.len(), 10);
//! assert_eq!(classes[0].greatest(), &Word::parse("RRRM")?);
//!
//! // ... collapse to seven doubled classes; each collision fits template a.
//! let collisions = find_collisions(4)?;
//! assert_eq!(collisions.len(), 3);
//! assert!(collisions.iter().all(|report| report
//!     .matched_cases
//!     .iter()
//!     .any(|m| matches!(m.kind, CaseKind::CaseA { .. }))));
//! # Ok::<(), lmr_core::Error>(())
//! ```

pub mod equations;
pub mod error;
pub mod necklace;
pub mod ordering;
pub mod psi;
pub mod word;

pub use equations::{
    analyze_xy_yz, brute_force_xy_yx, brute_force_xy_yz, brute_force_zw, build_middle_y,
    enumerate_zw_solutions, solve_xy_yx, solve_zw, verify_xy_yx, verify_xy_yz, verify_zw, XyKind,
    XyYxSolutionFamily, XyYzStructure, ZwKind, ZwSolutionFamily,
};
pub use error::{Error, Result};
pub use necklace::{
    conjugate_class, decompose_delta, enumerate_m, enumerate_u, full_class, is_greatest_in_class,
    NecklaceClass,
};
pub use ordering::{
    compare_extended, compare_parity_lex, enumerate_lexical, is_d_lexical, OrderVariant,
};
pub use psi::{
    build_case_b_pair, classify_collision, doubled_class, find_collisions, psi_image, survey,
    CaseKind, CaseMatch, CollisionReport, SurveyStats,
};
pub use word::{
    detect_broken_alternating, words_of_length, BrokenAlternating, Letter, Parity, Word,
};
