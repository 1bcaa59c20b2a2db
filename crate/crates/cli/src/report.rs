//! Rendering helpers shared by the subcommands. Every command produces both
//! a text and a JSON form; `--json` selects which one is written. JSON
//! objects keep insertion order and contain no floats, so re-serializing a
//! parsed report is byte-identical.

use lmr_core::{CaseKind, CaseMatch, CollisionReport, NecklaceClass, SurveyStats};
use serde_json::{json, Map, Value};

/// What a subcommand hands back to `main` for printing.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// Process exit code; nonzero only for false `check` predicates.
    pub exit_code: i32,
}

impl Output {
    pub fn new(text: String, json: Value) -> Output {
        Output {
            text,
            json,
            exit_code: 0,
        }
    }
}

pub fn class_json(class: &NecklaceClass) -> Value {
    json!({
        "n": class.word_len(),
        "greatest": class.greatest().to_string(),
        "size": class.size(),
        "self_complementary": class.is_self_complementary(),
    })
}

pub fn case_json(case: &CaseMatch) -> Value {
    let mut object = Map::new();
    object.insert("tag".into(), case.kind.tag().into());
    object.insert("swapped".into(), case.swapped.into());
    let witnesses: Vec<(&str, String)> = match &case.kind {
        CaseKind::Case1 => vec![],
        CaseKind::Case2 { lambda, mu, eta } => vec![
            ("lambda", lambda.to_string()),
            ("mu", mu.to_string()),
            ("eta", eta.to_string()),
        ],
        CaseKind::Case3 { lambda1, mu } => {
            vec![("lambda1", lambda1.to_string()), ("mu", mu.to_string())]
        }
        CaseKind::Case4 { lambda, mu1 } => {
            vec![("lambda", lambda.to_string()), ("mu1", mu1.to_string())]
        }
        CaseKind::Case5 { lambda, mu1, eta } => vec![
            ("lambda", lambda.to_string()),
            ("mu1", mu1.to_string()),
            ("eta", eta.to_string()),
        ],
        CaseKind::Case6 { lambda1, mu } => {
            vec![("lambda1", lambda1.to_string()), ("mu", mu.to_string())]
        }
        CaseKind::Case7 { lambda, mu1 } => {
            vec![("lambda", lambda.to_string()), ("mu1", mu1.to_string())]
        }
        CaseKind::CaseA { mu, x1 } => {
            vec![("mu", mu.to_string()), ("x1", x1.to_string())]
        }
        CaseKind::CaseB { lambda, x1 } => {
            vec![("lambda", lambda.to_string()), ("x1", x1.to_string())]
        }
    };
    for (key, value) in witnesses {
        object.insert(key.into(), value.into());
    }
    Value::Object(object)
}

pub fn case_text(case: &CaseMatch) -> String {
    let witnesses = match &case.kind {
        CaseKind::Case1 => String::new(),
        CaseKind::Case2 { lambda, mu, eta } => format!(" lambda={lambda} mu={mu} eta={eta}"),
        CaseKind::Case3 { lambda1, mu } => format!(" lambda1={lambda1} mu={mu}"),
        CaseKind::Case4 { lambda, mu1 } => format!(" lambda={lambda} mu1={mu1}"),
        CaseKind::Case5 { lambda, mu1, eta } => format!(" lambda={lambda} mu1={mu1} eta={eta}"),
        CaseKind::Case6 { lambda1, mu } => format!(" lambda1={lambda1} mu={mu}"),
        CaseKind::Case7 { lambda, mu1 } => format!(" lambda={lambda} mu1={mu1}"),
        CaseKind::CaseA { mu, x1 } => format!(" mu={mu} x1={x1}"),
        CaseKind::CaseB { lambda, x1 } => format!(" lambda={lambda} x1={x1}"),
    };
    let swapped = if case.swapped { " (roles swapped)" } else { "" };
    format!("  case {}:{witnesses}{swapped}", case.kind.tag())
}

pub fn collision_json(report: &CollisionReport) -> Value {
    json!({
        "n": report.beta1.len(),
        "beta1": report.beta1.to_string(),
        "beta2": report.beta2.to_string(),
        "image": report.image.greatest().to_string(),
        "shift": report.shift,
        "cases": report.matched_cases.iter().map(case_json).collect::<Vec<_>>(),
    })
}

pub fn collision_text(report: &CollisionReport) -> String {
    let mut lines = vec![format!(
        "pair beta1={} beta2={} image={} shift={}",
        report.beta1,
        report.beta2,
        report.image.greatest(),
        report.shift
    )];
    for case in &report.matched_cases {
        lines.push(case_text(case));
    }
    lines.join("\n")
}

pub fn survey_json(stats: &SurveyStats) -> Value {
    json!({
        "n": stats.n,
        "size_m": stats.size_m,
        "size_u2n": stats.size_u2n,
        "image_size": stats.image_size,
        "non_primitive_images": stats.non_primitive_images,
        "collision_pair_count": stats.collision_pair_count,
        "injective": stats.injective,
        "surjective": stats.surjective,
    })
}

pub fn survey_text(stats: &SurveyStats) -> String {
    format!(
        "n={} size_m={} size_u2n={} image_size={} non_primitive_images={} collision_pairs={} injective={} surjective={}",
        stats.n,
        stats.size_m,
        stats.size_u2n,
        stats.image_size,
        stats.non_primitive_images,
        stats.collision_pair_count,
        stats.injective,
        stats.surjective
    )
}
