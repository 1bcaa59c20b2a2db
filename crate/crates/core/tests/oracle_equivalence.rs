//! Dual-route checks: every closed form and every scanner in the crate is
//! held equal to an independently written exhaustive construction on the
//! whole parameter space at small scale.

use std::collections::{BTreeMap, BTreeSet};

use lmr_core::*;

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

/// Generator-based ground truth for broken alternating words: build every
/// word (unit·ūnit)^reps·tail of length `n` instead of recognizing them.
fn all_broken_alternating(n: usize) -> BTreeSet<Word> {
    let mut set = BTreeSet::new();
    for unit_len in 1..=n / 2 {
        for unit in words_of_length(unit_len) {
            let block = unit.concat(&unit.complement());
            for reps in 1..=n / (2 * unit_len) {
                let tail_len = n - reps * 2 * unit_len;
                if tail_len < 2 * unit_len {
                    set.insert(block.repeated(reps).concat(&block.prefix(tail_len)));
                }
            }
        }
    }
    set
}

#[test]
fn broken_alternating_detector_matches_generator() {
    for n in 2..=12 {
        let expected = all_broken_alternating(n);
        for word in words_of_length(n) {
            let detected = detect_broken_alternating(&word);
            assert_eq!(
                detected.is_some(),
                expected.contains(&word),
                "detector disagrees with generator on {word}"
            );
            if let Some(decomp) = detected {
                assert_eq!(decomp.expand(), word);
                assert!(decomp.repeats >= 1);
                assert!(decomp.tail.len() < 2 * decomp.unit.len());
                // No shorter unit works.
                for shorter in 1..decomp.unit.len() {
                    let unit = word.prefix(shorter);
                    let block = unit.concat(&unit.complement());
                    let fits = word
                        .iter()
                        .enumerate()
                        .all(|(i, &l)| l == block[i % block.len()])
                        && word.len() >= block.len();
                    assert!(!fits, "unit {unit} of {word} is not minimal");
                }
            }
        }
    }
}

/// Closure-based ground truth for M(n): grow each class by rotation and
/// complementation from an arbitrary seed, instead of scanning for greatest
/// representatives.
fn classes_by_closure(n: usize) -> BTreeMap<Word, BTreeSet<Word>> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut classes = BTreeMap::new();
    for seed in words_of_length(n) {
        if !seed.is_primitive() || seen.contains(&seed) {
            continue;
        }
        let mut members = BTreeSet::new();
        let mut frontier = vec![seed];
        while let Some(word) = frontier.pop() {
            if !members.insert(word.clone()) {
                continue;
            }
            frontier.push(word.rotated(1));
            frontier.push(word.complement());
        }
        let greatest = members.iter().cloned().max_by(compare_parity_lex).unwrap();
        seen.extend(members.iter().cloned());
        classes.insert(greatest, members);
    }
    classes
}

#[test]
fn enumerate_m_matches_closure_construction() {
    for n in 1..=7 {
        let expected = classes_by_closure(n);
        let got = enumerate_m(n);
        assert_eq!(got.len(), expected.len(), "class count at n={n}");
        for class in &got {
            let members = expected
                .get(class.greatest())
                .unwrap_or_else(|| panic!("unexpected representative {}", class.greatest()));
            let got_members: BTreeSet<Word> = class.words().iter().cloned().collect();
            assert_eq!(&got_members, members);
        }
    }
}

#[test]
fn enumerate_m_partitions_the_primitive_words() {
    for n in 1..=7 {
        let classes = enumerate_m(n);
        let mut covered = BTreeSet::new();
        for class in &classes {
            assert_eq!(
                class.size(),
                if class.is_self_complementary() {
                    n
                } else {
                    2 * n
                }
            );
            for member in class.words() {
                assert!(member.is_primitive());
                assert!(covered.insert(member.clone()), "{member} covered twice");
            }
        }
        let primitive_count = words_of_length(n).filter(|w| w.is_primitive()).count();
        assert_eq!(covered.len(), primitive_count);
    }
}

#[test]
fn enumerate_u_matches_direct_filter() {
    for n in 1..=9 {
        let direct: BTreeSet<Word> = words_of_length(n)
            .filter(|word| word.is_primitive())
            .map(|word| full_class(&word))
            .filter(|class| class.is_self_complementary())
            .map(|class| class.greatest().clone())
            .collect();
        let got: BTreeSet<Word> = enumerate_u(n)
            .iter()
            .map(|c| c.greatest().clone())
            .collect();
        assert_eq!(got, direct, "U({n})");
    }
}

#[test]
fn zw_closed_form_equals_brute_force() {
    for m in 2..=10usize {
        for r in 1..m {
            assert_eq!(
                enumerate_zw_solutions(m, r).unwrap(),
                brute_force_zw(m, r).unwrap(),
                "ZW mismatch at (m={m}, r={r})"
            );
        }
    }
}

#[test]
fn xy_yx_closed_form_equals_brute_force() {
    for l in 1..=9usize {
        for m in 1..=(10 - l) {
            let family = solve_xy_yx(l, m).unwrap();
            assert_eq!(
                family.enumerate(),
                brute_force_xy_yx(l, m).unwrap(),
                "XY=ȲX mismatch at (l={l}, m={m})"
            );
        }
    }
}

#[test]
fn xy_yx_solutions_double_to_non_primitive_words() {
    for l in 1..=9usize {
        for m in 1..=(10 - l) {
            for (x, y) in solve_xy_yx(l, m).unwrap().enumerate() {
                let xy = x.concat(&y);
                let doubled = xy.concat(&xy.complement());
                assert!(doubled.smallest_period() < doubled.len());
                let wrapped = Word::concat_all(&[&y.complement(), &x, &y, &x.complement()]);
                assert!(wrapped.smallest_period() < wrapped.len());
            }
        }
    }
}

#[test]
fn xy_yz_analyzer_covers_every_solution() {
    // All length shapes with |X| = |Z|, total ≤ 11 for the integration run.
    for x_len in 1..=4usize {
        for y_len in 1..=(11usize.saturating_sub(2 * x_len)) {
            for (x, y, z) in brute_force_xy_yz(x_len, y_len).unwrap() {
                let structure = analyze_xy_yz(&x, &y, &z)
                    .unwrap()
                    .expect("oracle produced a non-solution");
                match structure {
                    XyYzStructure::EqualLengths => {
                        assert_eq!(x_len, y_len);
                        assert_eq!(x, z.complement());
                    }
                    XyYzStructure::MiddleEvenQ { ref y0, ref x0, q } => {
                        assert!(q % 2 == 0 && x_len < y_len);
                        assert_eq!(y0.concat(x0), x.complement());
                        assert_eq!(z, x0.complement().concat(y0));
                        assert_eq!(build_middle_y(y0, x0, q), y);
                        assert!(detect_broken_alternating(&y).is_some());
                    }
                    XyYzStructure::MiddleOddQ { ref y0, ref x0, q } => {
                        assert!(q % 2 == 1 && x_len < y_len);
                        assert_eq!(y0.concat(x0), x);
                        assert_eq!(z, x0.complement().concat(y0));
                        assert_eq!(build_middle_y(y0, x0, q), y);
                        if q >= 3 {
                            assert!(detect_broken_alternating(&y).is_some());
                        }
                    }
                    XyYzStructure::LongX { ref x1 } => {
                        assert!(x_len > y_len);
                        assert_eq!(x, y.complement().concat(x1));
                        assert_eq!(z, x1.concat(&y));
                    }
                }
            }
        }
    }
}

#[test]
fn collision_finder_matches_pairwise_scan() {
    for n in 2..=6 {
        let classes = enumerate_m(n);
        let mut expected = BTreeSet::new();
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                let a = classes[i].greatest();
                let b = classes[j].greatest();
                let da = a.concat(&a.complement());
                let db = b.concat(&b.complement());
                if (0..db.len()).any(|k| db.rotated(k) == da) {
                    expected.insert((a.clone(), b.clone()));
                }
            }
        }
        let got: BTreeSet<(Word, Word)> = find_collisions(n)
            .unwrap()
            .into_iter()
            .map(|r| (r.beta1, r.beta2))
            .collect();
        assert_eq!(got, expected, "collision set at n={n}");
    }
}

#[test]
fn greatest_representatives_start_with_r() {
    // Primitive classes with any non-M letter have an R-initial greatest.
    for n in 2..=7 {
        for class in enumerate_m(n) {
            let greatest = class.greatest();
            if greatest.iter().any(|&l| l != Letter::M) {
                assert_eq!(greatest.letters()[0], Letter::R, "class {greatest}");
            }
        }
    }
}

#[test]
fn greatest_choice_is_independent_of_the_order_variant() {
    // Class members share one length, so the extended orders never reach
    // their prefix rules and both variants pick the same representative.
    for n in 1..=8 {
        for class in enumerate_m(n) {
            for member in class.words() {
                for variant in OrderVariant::BOTH {
                    assert_ne!(
                        compare_extended(class.greatest(), member, variant),
                        std::cmp::Ordering::Less
                    );
                }
            }
        }
    }
}

#[test]
fn explicit_case_matches_carry_the_lexicality_side_conditions() {
    // Matching is by template shape and defining equation; the lexicality
    // clauses stated alongside the explicit templates hold on every match
    // the finder produces at small lengths.
    for n in 2..=8 {
        for report in find_collisions(n).unwrap() {
            for case in &report.matched_cases {
                let (b1, b2) = if case.swapped {
                    (&report.beta2, &report.beta1)
                } else {
                    (&report.beta1, &report.beta2)
                };
                match &case.kind {
                    CaseKind::CaseA { .. } => {
                        assert!(is_d_lexical(b1, OrderVariant::CBar), "{b1} in ({b1}, {b2})");
                        assert!(is_d_lexical(b2, OrderVariant::CBar), "{b2} in ({b1}, {b2})");
                    }
                    CaseKind::CaseB { .. } => {
                        assert!(is_d_lexical(b2, OrderVariant::CBar), "{b2} in ({b1}, {b2})");
                    }
                    _ => {}
                }
            }
        }
    }
}

#[test]
fn lexical_words_are_exactly_the_unbordered_suffix_dominant_words() {
    // With suffix-based shifts the two variants coincide: a word qualifies
    // iff it has no border and parity-lexicographically dominates each
    // suffix at the first difference. Bordered words die on the prefix
    // rules' parity clash.
    for n in 2..=8 {
        for word in words_of_length(n) {
            let bordered = (1..n).any(|k| word.suffix_from(k).is_left_factor_of(&word));
            let dominant = (1..n).all(|k| {
                let suffix = word.suffix_from(k);
                suffix.is_left_factor_of(&word)
                    || compare_extended(&word, &suffix, OrderVariant::CBar)
                        == std::cmp::Ordering::Greater
            });
            let expected = !bordered && dominant;
            for variant in OrderVariant::BOTH {
                assert_eq!(
                    is_d_lexical(&word, variant),
                    expected,
                    "lexicality of {word} under {variant:?}"
                );
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic_across_thread_counts() {
    let classes = enumerate_m(6);
    let lexical = enumerate_lexical(6, OrderVariant::CBar);
    for threads in [1, 3] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        assert_eq!(pool.install(|| enumerate_m(6)), classes);
        assert_eq!(
            pool.install(|| enumerate_lexical(6, OrderVariant::CBar)),
            lexical
        );
    }
}

#[test]
fn survey_counts_are_internally_consistent() {
    for n in 2..=6 {
        let stats = survey(n).unwrap();
        let reports = find_collisions(n).unwrap();
        assert_eq!(stats.collision_pair_count, reports.len());
        assert_eq!(stats.size_m, enumerate_m(n).len());
        assert_eq!(stats.size_u2n, enumerate_u(2 * n).len());
        assert_eq!(stats.injective, reports.is_empty());
        assert!(stats.image_size <= stats.size_m);
    }
}

#[test]
fn length_sixteen_pair_facts() {
    let (beta1, beta2) = build_case_b_pair(&w("RRM"), &w("LM"));
    assert!(beta1.is_primitive() && beta2.is_primitive());
    assert!(is_greatest_in_class(&beta1) && is_greatest_in_class(&beta2));
    assert!(is_d_lexical(&beta2, OrderVariant::CBar));
    // β₁ is bordered by RRM, so it cannot be lexical; its doubled word still
    // matches β₂'s.
    assert!(!is_d_lexical(&beta1, OrderVariant::CBar));
    let d1 = beta1.concat(&beta1.complement());
    let d2 = beta2.concat(&beta2.complement());
    assert!((0..d2.len()).any(|k| d2.rotated(k) == d1));
}
