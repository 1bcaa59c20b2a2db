//! The class-doubling map Ψ(⟨⟨β⟩⟩) = ⟨ββ̄⟩ from M(n) toward U(2n), where β
//! is the greatest word of its class, together with a collision finder and a
//! classifier that matches each colliding pair against the structural case
//! templates.
//!
//! Rotating ββ̄ by |β| yields its own complement, so the image class is
//! always self-complementary. It is *usually* primitive as well, but not
//! always: β = RMLMRM is primitive and greatest in its class, yet
//! ββ̄ = (RMLM)³. Words of the shape (γγ̄)^m·γ with γ odd can be greatest
//! because the parity reversal after an odd prefix favors L over R, and they
//! double into proper powers. [`psi_image`] therefore reports such classes
//! as [`crate::Error::ImageNotPrimitive`] instead of pretending the map is
//! total, while [`find_collisions`] and [`survey`] key on the raw doubled
//! conjugate class so the census stays complete.
//!
//! The map is not injective; colliding pairs are matched against the case
//! templates below (tags `1`–`7`, `a`, `b`) by template shape and defining
//! word equation. Most pairs fit tag `a` or `b`; the finder reports the
//! matches it finds, including none.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::necklace::{enumerate_m, enumerate_u, full_class, is_greatest_in_class, NecklaceClass};
use crate::ordering::{compare_parity_lex, is_d_lexical, OrderVariant};
use crate::word::Word;

/// The conjugate class of the doubled word ββ̄, with no primitivity
/// guarantee. Always self-complementary.
pub fn doubled_class(class: &NecklaceClass) -> NecklaceClass {
    let beta = class.greatest();
    let image = full_class(&beta.concat(&beta.complement()));
    // Rotating ββ̄ by |β| gives β̄β, so the image class is its own complement.
    debug_assert!(image.is_self_complementary());
    image
}

/// Ψ applied to one class: the conjugate class ⟨ββ̄⟩ for β the greatest
/// member, when that class lies in U(2n).
///
/// Non-primitive inputs are rejected. A primitive input whose doubled word
/// is a proper power — the length-1 all-M class, and the (γγ̄)^m·γ shapes
/// described in the module docs — is reported as
/// [`Error::ImageNotPrimitive`]: Ψ has no value in U(2n) there.
pub fn psi_image(class: &NecklaceClass) -> Result<NecklaceClass> {
    let beta = class.greatest();
    if !beta.is_primitive() {
        return Err(Error::NotPrimitive { word: beta.clone() });
    }
    let doubled = beta.concat(&beta.complement());
    if !doubled.is_primitive() {
        return Err(Error::ImageNotPrimitive { image: doubled });
    }
    Ok(doubled_class(class))
}

/// One collision: two distinct classes with the same Ψ-image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionReport {
    pub class1: NecklaceClass,
    pub class2: NecklaceClass,
    /// Greatest representative of `class1`; parity-lexicographically above
    /// `beta2`.
    pub beta1: Word,
    pub beta2: Word,
    /// The shared image class ⟨β₁β̄₁⟩ = ⟨β₂β̄₂⟩.
    pub image: NecklaceClass,
    /// The unique rotation offset with β₁β̄₁ = rot_shift(β₂β̄₂); strictly
    /// between 0 and 2n because the doubled words are primitive and distinct.
    pub shift: usize,
    /// Every case template the pair matches, with witnesses.
    pub matched_cases: Vec<CaseMatch>,
}

/// A case template match. `swapped` records which argument played the
/// template's first role: `false` means `(β₁, β₂)` as passed to
/// [`classify_collision`], `true` means the roles were exchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseMatch {
    pub swapped: bool,
    pub kind: CaseKind,
}

/// The case templates. Tags 1–7 are the structural cases; `a` and `b` are
/// the explicit templates that every distinct-class collision satisfies.
/// Within a variant, β₁ and β₂ are the template roles (see
/// [`CaseMatch::swapped`]) and the listed equations bind the witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseKind {
    /// Tag `1`: the two classes coincide.
    Case1,
    /// Tag `2`: β₂ = λμ and β₁ = μ̄λ, both lexical, with λμ = μ̄η.
    Case2 { lambda: Word, mu: Word, eta: Word },
    /// Tag `3`: β₁ = μ̄λ₁μλ̄₁, β₂ = λ₁μλ̄₁μ lexical, with λ₁μ = μ̄λ₁.
    Case3 { lambda1: Word, mu: Word },
    /// Tag `4`: β₂ = λμ₁λμ̄₁ lexical, β₁ = μ̄₁λ̄μ₁λ, with λμ₁ = μ̄₁λ̄.
    Case4 { lambda: Word, mu1: Word },
    /// Tag `5`: β₁ = μ̄₁λ̄μ₁λ, β₂ = λμ₁λμ̄₁ lexical, with μ̄₁λ̄ = λη.
    Case5 { lambda: Word, mu1: Word, eta: Word },
    /// Tag `6`: β₁ = μ̄λ₁μλ₁ lexical, β₂ = λ̄₁μ̄λ₁μ, with μ̄λ₁ = λ̄₁μ̄.
    Case6 { lambda1: Word, mu: Word },
    /// Tag `7`: β₁ = μ̄₁λμ₁λ lexical, β₂ = λμ₁λ̄μ̄₁, with λμ₁ = μ̄₁λ.
    Case7 { lambda: Word, mu1: Word },
    /// Tag `a`: β₁ = μ̄²X₁ and β₂ = μ̄X₁μ, both lexical.
    CaseA { mu: Word, x1: Word },
    /// Tag `b`: β₁ = λX₁λ̄·λ̄X̄₁λ and β₂ = λλ̄X̄₁·λλX₁, the latter lexical.
    CaseB { lambda: Word, x1: Word },
}

impl CaseKind {
    /// The wire tag: `"1"` through `"7"`, `"a"`, or `"b"`.
    pub fn tag(&self) -> &'static str {
        match self {
            CaseKind::Case1 => "1",
            CaseKind::Case2 { .. } => "2",
            CaseKind::Case3 { .. } => "3",
            CaseKind::Case4 { .. } => "4",
            CaseKind::Case5 { .. } => "5",
            CaseKind::Case6 { .. } => "6",
            CaseKind::Case7 { .. } => "7",
            CaseKind::CaseA { .. } => "a",
            CaseKind::CaseB { .. } => "b",
        }
    }

    /// Rebuilds the template words (β₁, β₂) from the witnesses; `None` for
    /// the identity case.
    pub fn rebuild(&self) -> Option<(Word, Word)> {
        match self {
            CaseKind::Case1 => None,
            CaseKind::Case2 { lambda, mu, .. } => {
                Some((mu.complement().concat(lambda), lambda.concat(mu)))
            }
            CaseKind::Case3 { lambda1, mu } => {
                let l1b = lambda1.complement();
                let mub = mu.complement();
                Some((
                    Word::concat_all(&[&mub, lambda1, mu, &l1b]),
                    Word::concat_all(&[lambda1, mu, &l1b, mu]),
                ))
            }
            CaseKind::Case4 { lambda, mu1 } | CaseKind::Case5 { lambda, mu1, .. } => {
                let lb = lambda.complement();
                let m1b = mu1.complement();
                Some((
                    Word::concat_all(&[&m1b, &lb, mu1, lambda]),
                    Word::concat_all(&[lambda, mu1, lambda, &m1b]),
                ))
            }
            CaseKind::Case6 { lambda1, mu } => {
                let l1b = lambda1.complement();
                let mub = mu.complement();
                Some((
                    Word::concat_all(&[&mub, lambda1, mu, lambda1]),
                    Word::concat_all(&[&l1b, &mub, lambda1, mu]),
                ))
            }
            CaseKind::Case7 { lambda, mu1 } => {
                let lb = lambda.complement();
                let m1b = mu1.complement();
                Some((
                    Word::concat_all(&[&m1b, lambda, mu1, lambda]),
                    Word::concat_all(&[lambda, mu1, &lb, &m1b]),
                ))
            }
            CaseKind::CaseA { mu, x1 } => {
                let mub = mu.complement();
                Some((
                    Word::concat_all(&[&mub, &mub, x1]),
                    Word::concat_all(&[&mub, x1, mu]),
                ))
            }
            CaseKind::CaseB { lambda, x1 } => Some(build_case_b_pair(lambda, x1)),
        }
    }
}

/// The explicit tag-`b` pair for witnesses (λ, X₁):
/// β₁ = λ·X₁·λ̄·λ̄·X̄₁·λ and β₂ = λ·λ̄·X̄₁·λ·λ·X₁.
///
/// No validity filtering is applied; the templates are necessary shapes, not
/// sufficient ones, so callers wanting genuine collisions must still check
/// primitivity, greatestness, and lexicality. Panics on empty inputs.
pub fn build_case_b_pair(lambda: &Word, x1: &Word) -> (Word, Word) {
    assert!(
        !lambda.is_empty() && !x1.is_empty(),
        "case-b witnesses must be non-empty"
    );
    let lb = lambda.complement();
    let x1b = x1.complement();
    let beta1 = Word::concat_all(&[lambda, x1, &lb, &lb, &x1b, lambda]);
    let beta2 = Word::concat_all(&[lambda, &lb, &x1b, lambda, lambda, x1]);
    (beta1, beta2)
}

fn push_unique(matches: &mut Vec<CaseMatch>, candidate: CaseMatch) {
    if !matches.contains(&candidate) {
        matches.push(candidate);
    }
}

/// Template search with `x` in the β₁ role and `y` in the β₂ role.
fn match_templates(x: &Word, y: &Word, swapped: bool, matches: &mut Vec<CaseMatch>) {
    let n = x.len();
    let x_lex = is_d_lexical(x, OrderVariant::CBar);
    let y_lex = is_d_lexical(y, OrderVariant::CBar);

    // Tag 2: y = λμ, x = μ̄λ, both lexical, and μ̄ a left factor of y.
    if x_lex && y_lex {
        for k in 1..n {
            let lambda = y.prefix(k);
            let mu = y.suffix_from(k);
            let mu_bar = mu.complement();
            if *x == mu_bar.concat(&lambda) && mu_bar.is_left_factor_of(y) {
                let eta = y.suffix_from(n - k);
                push_unique(
                    matches,
                    CaseMatch {
                        swapped,
                        kind: CaseKind::Case2 { lambda, mu, eta },
                    },
                );
            }
        }
    }

    // Tags 3-5 and 7 need n = 2(|λ|+|μ|); tag 6 too.
    if n.is_multiple_of(2) {
        let half = n / 2;
        for a in 1..half {
            let b = half - a;

            // Tag 3: split y as λ₁μλ̄₁μ.
            if y_lex {
                let lambda1 = y.prefix(a);
                let mu = y.slice(a, a + b);
                if let Some(kind) = check_case3(x, y, &lambda1, &mu) {
                    push_unique(matches, CaseMatch { swapped, kind });
                }
            }

            // Tags 4 and 5: split y as λμ₁λμ̄₁.
            if y_lex {
                let lambda = y.prefix(a);
                let mu1 = y.slice(a, a + b);
                for kind in check_cases_4_5(x, y, &lambda, &mu1) {
                    push_unique(matches, CaseMatch { swapped, kind });
                }
            }

            // Tags 6 and 7 split x instead: both read μ̄ (resp. μ̄₁) off the
            // front and the λ-witness after it.
            if x_lex {
                let front = x.prefix(b).complement();
                let after = x.slice(b, b + a);
                if let Some(kind) = check_case6(x, y, &after, &front) {
                    push_unique(matches, CaseMatch { swapped, kind });
                }
                if let Some(kind) = check_case7(x, y, &after, &front) {
                    push_unique(matches, CaseMatch { swapped, kind });
                }
            }
        }
    }

    // Tag a: x = μ̄²X₁, y = μ̄X₁μ, both lexical.
    if x_lex && y_lex {
        for b in 1..n {
            if 2 * b >= n {
                break;
            }
            let mu_bar = x.prefix(b);
            let x1 = x.suffix_from(2 * b);
            let mu = mu_bar.complement();
            if x.slice(b, 2 * b) == mu_bar && *y == Word::concat_all(&[&mu_bar, &x1, &mu]) {
                push_unique(
                    matches,
                    CaseMatch {
                        swapped,
                        kind: CaseKind::CaseA { mu, x1 },
                    },
                );
            }
        }
    }

    // Tag b: y = λλ̄X̄₁λλX₁ lexical, x = λX₁λ̄λ̄X̄₁λ.
    if y_lex {
        for a in 1.. {
            if 4 * a + 2 > n {
                break;
            }
            if !(n - 4 * a).is_multiple_of(2) {
                continue;
            }
            let c = (n - 4 * a) / 2;
            let lambda = y.prefix(a);
            let x1 = y.slice(2 * a, 2 * a + c).complement();
            let (beta1, beta2) = build_case_b_pair(&lambda, &x1);
            if *x == beta1 && *y == beta2 {
                push_unique(
                    matches,
                    CaseMatch {
                        swapped,
                        kind: CaseKind::CaseB { lambda, x1 },
                    },
                );
            }
        }
    }
}

fn check_case3(x: &Word, y: &Word, lambda1: &Word, mu: &Word) -> Option<CaseKind> {
    let kind = CaseKind::Case3 {
        lambda1: lambda1.clone(),
        mu: mu.clone(),
    };
    let (t1, t2) = kind.rebuild().unwrap();
    let equation = lambda1.concat(mu) == mu.complement().concat(lambda1);
    (equation && *x == t1 && *y == t2).then_some(kind)
}

fn check_cases_4_5(x: &Word, y: &Word, lambda: &Word, mu1: &Word) -> Vec<CaseKind> {
    let probe = CaseKind::Case4 {
        lambda: lambda.clone(),
        mu1: mu1.clone(),
    };
    let (t1, t2) = probe.rebuild().unwrap();
    if *x != t1 || *y != t2 {
        return Vec::new();
    }
    let mut kinds = Vec::new();
    let head = mu1.complement().concat(&lambda.complement());
    if lambda.concat(mu1) == head {
        kinds.push(probe);
    }
    if lambda.is_left_factor_of(&head) {
        kinds.push(CaseKind::Case5 {
            lambda: lambda.clone(),
            mu1: mu1.clone(),
            eta: head.suffix_from(lambda.len()),
        });
    }
    kinds
}

fn check_case6(x: &Word, y: &Word, lambda1: &Word, mu: &Word) -> Option<CaseKind> {
    let kind = CaseKind::Case6 {
        lambda1: lambda1.clone(),
        mu: mu.clone(),
    };
    let (t1, t2) = kind.rebuild().unwrap();
    let equation = mu.complement().concat(lambda1) == lambda1.complement().concat(&mu.complement());
    (equation && *x == t1 && *y == t2).then_some(kind)
}

fn check_case7(x: &Word, y: &Word, lambda: &Word, mu1: &Word) -> Option<CaseKind> {
    let kind = CaseKind::Case7 {
        lambda: lambda.clone(),
        mu1: mu1.clone(),
    };
    let (t1, t2) = kind.rebuild().unwrap();
    let equation = lambda.concat(mu1) == mu1.complement().concat(lambda);
    (equation && *x == t1 && *y == t2).then_some(kind)
}

/// The unique `shift` in `1..2n` with β₁β̄₁ = rot_shift(β₂β̄₂), if the two
/// doubled words are conjugate.
fn alignment_shift(beta1: &Word, beta2: &Word) -> Option<usize> {
    let d1 = beta1.concat(&beta1.complement());
    let d2 = beta2.concat(&beta2.complement());
    (1..d2.len()).find(|&j| d2.rotated(j) == d1)
}

/// Matches a colliding pair against every case template, in both role
/// orders, and returns all matches.
///
/// Preconditions are checked: both words must be primitive greatest
/// representatives of the same length with conjugate doubled words. A pair
/// from the same class reports the identity case only.
pub fn classify_collision(beta1: &Word, beta2: &Word) -> Result<Vec<CaseMatch>> {
    for beta in [beta1, beta2] {
        if !beta.is_primitive() {
            return Err(Error::NotPrimitive { word: beta.clone() });
        }
        if !is_greatest_in_class(beta) {
            return Err(Error::NotGreatest { word: beta.clone() });
        }
    }
    if beta1 == beta2 {
        return Ok(vec![CaseMatch {
            swapped: false,
            kind: CaseKind::Case1,
        }]);
    }
    if beta1.len() != beta2.len() || alignment_shift(beta1, beta2).is_none() {
        return Err(Error::ImagesDiffer {
            beta1: beta1.clone(),
            beta2: beta2.clone(),
        });
    }
    let mut matches = Vec::new();
    match_templates(beta1, beta2, false, &mut matches);
    match_templates(beta2, beta1, true, &mut matches);
    Ok(matches)
}

/// All unordered pairs of distinct classes in M(n) with conjugate doubled
/// words, classified, sorted by image (descending) and then by first
/// representative.
///
/// Keys on the raw doubled class, so classes whose image falls outside
/// U(2n) still participate in the census.
pub fn find_collisions(n: usize) -> Result<Vec<CollisionReport>> {
    if n < 2 {
        return Err(Error::LengthBelowMinimum { n, min: 2 });
    }
    let classes = enumerate_m(n);
    let mut groups: HashMap<Word, (NecklaceClass, Vec<usize>)> = HashMap::new();
    for (index, class) in classes.iter().enumerate() {
        let image = doubled_class(class);
        groups
            .entry(image.greatest().clone())
            .or_insert_with(|| (image, Vec::new()))
            .1
            .push(index);
    }
    let mut reports = Vec::new();
    for (_, (image, members)) in groups {
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let a = &classes[members[i]];
                let b = &classes[members[j]];
                // enumerate_m sorts descending, so a.greatest() is the larger.
                debug_assert_eq!(
                    compare_parity_lex(a.greatest(), b.greatest()),
                    Ordering::Greater
                );
                let beta1 = a.greatest().clone();
                let beta2 = b.greatest().clone();
                let shift =
                    alignment_shift(&beta1, &beta2).expect("members of one image group must align");
                let matched_cases = classify_collision(&beta1, &beta2)?;
                reports.push(CollisionReport {
                    class1: a.clone(),
                    class2: b.clone(),
                    beta1,
                    beta2,
                    image: image.clone(),
                    shift,
                    matched_cases,
                });
            }
        }
    }
    reports.sort_unstable_by(|a, b| {
        compare_parity_lex(b.image.greatest(), a.image.greatest())
            .then_with(|| compare_parity_lex(&b.beta1, &a.beta1))
    });
    Ok(reports)
}

/// Aggregate statistics of Ψ: M(n) → U(2n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyStats {
    pub n: usize,
    /// |M(n)|.
    pub size_m: usize,
    /// |U(2n)|.
    pub size_u2n: usize,
    /// Number of distinct doubled classes ⟨ββ̄⟩.
    pub image_size: usize,
    /// Classes whose doubled word is a proper power, i.e. whose image falls
    /// outside U(2n).
    pub non_primitive_images: usize,
    /// Unordered pairs of distinct classes sharing an image.
    pub collision_pair_count: usize,
    pub injective: bool,
    /// True iff every class of U(2n) is hit.
    pub surjective: bool,
}

/// Computes the full statistics of Ψ on M(n) by enumeration, including the
/// comparison against U(2n). Requires n ≥ 2; the length-1 all-M class has no
/// primitive image.
pub fn survey(n: usize) -> Result<SurveyStats> {
    if n < 2 {
        return Err(Error::LengthBelowMinimum { n, min: 2 });
    }
    let classes = enumerate_m(n);
    let mut image_counts: HashMap<Word, usize> = HashMap::new();
    let mut non_primitive_images = 0;
    for class in &classes {
        let image = doubled_class(class);
        if !image.greatest().is_primitive() {
            non_primitive_images += 1;
        }
        *image_counts.entry(image.greatest().clone()).or_insert(0) += 1;
    }
    let collision_pair_count: usize = image_counts.values().map(|&k| k * (k - 1) / 2).sum();
    let universe = enumerate_u(2 * n);
    let surjective = universe
        .iter()
        .all(|c| image_counts.contains_key(c.greatest()));
    let stats = SurveyStats {
        n,
        size_m: classes.len(),
        size_u2n: universe.len(),
        image_size: image_counts.len(),
        non_primitive_images,
        collision_pair_count,
        injective: collision_pair_count == 0,
        surjective,
    };
    Ok(stats)
}
