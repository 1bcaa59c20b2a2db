use lmr_core::{doubled_class, enumerate_m, find_collisions, survey};
use serde_json::json;

use crate::args::PsiMode;
use crate::config::Config;
use crate::error::{CliError, Result};
use crate::report::{collision_json, collision_text, survey_json, survey_text, Output};

pub fn run(config: &Config, n: usize, mode: PsiMode) -> Result<Output> {
    if n < 2 {
        return Err(CliError::Usage(
            "psi needs n ≥ 2; the length-1 all-M class has no primitive image".to_string(),
        ));
    }
    config.check_enumeration(n)?;
    match mode {
        PsiMode::Table => table(n),
        PsiMode::Collisions => collisions(n),
        PsiMode::Survey => {
            // The survey compares against U(2n), which needs the doubled scan.
            config.check_enumeration(2 * n)?;
            let stats = survey(n)?;
            Ok(Output::new(survey_text(&stats), survey_json(&stats)))
        }
    }
}

fn table(n: usize) -> Result<Output> {
    let classes = enumerate_m(n);
    let rows: Vec<(String, String, bool)> = classes
        .iter()
        .map(|class| {
            let image = doubled_class(class);
            let in_u2n = image.greatest().is_primitive();
            (
                class.greatest().to_string(),
                image.greatest().to_string(),
                in_u2n,
            )
        })
        .collect();
    let distinct: std::collections::BTreeSet<&String> = rows.iter().map(|r| &r.1).collect();
    let mut text = vec![format!(
        "n={n} classes={} images={}",
        classes.len(),
        distinct.len()
    )];
    for (class, image, in_u2n) in &rows {
        let marker = if *in_u2n { "" } else { "  (outside U)" };
        text.push(format!("{class} -> {image}{marker}"));
    }
    let json = json!({
        "n": n,
        "mode": "table",
        "count": classes.len(),
        "image_count": distinct.len(),
        "rows": rows
            .iter()
            .map(|(class, image, in_u2n)| json!({
                "class": class,
                "image": image,
                "in_u2n": in_u2n,
            }))
            .collect::<Vec<_>>(),
    });
    Ok(Output::new(text.join("\n"), json))
}

fn collisions(n: usize) -> Result<Output> {
    let reports = find_collisions(n)?;
    let mut text = vec![format!("collisions={}", reports.len())];
    for report in &reports {
        text.push(collision_text(report));
    }
    let json = json!({
        "n": n,
        "mode": "collisions",
        "count": reports.len(),
        "collisions": reports.iter().map(collision_json).collect::<Vec<_>>(),
    });
    Ok(Output::new(text.join("\n"), json))
}
