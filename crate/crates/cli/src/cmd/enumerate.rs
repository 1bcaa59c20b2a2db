use lmr_core::{enumerate_lexical, enumerate_m, enumerate_u};
use serde_json::json;

use crate::args::{OrderArg, SetKind};
use crate::config::Config;
use crate::error::{CliError, Result};
use crate::report::{class_json, Output};

pub fn run(config: &Config, n: usize, set: SetKind, order: OrderArg) -> Result<Output> {
    if n == 0 {
        return Err(CliError::Usage("enumeration needs n ≥ 1".to_string()));
    }
    config.check_enumeration(n)?;
    match set {
        SetKind::M | SetKind::U => {
            let classes = if set == SetKind::M {
                enumerate_m(n)
            } else {
                enumerate_u(n)
            };
            let mut text = vec![format!("count={}", classes.len())];
            text.extend(classes.iter().map(|c| c.greatest().to_string()));
            let json = json!({
                "n": n,
                "set": if set == SetKind::M { "m" } else { "u" },
                "count": classes.len(),
                "classes": classes.iter().map(class_json).collect::<Vec<_>>(),
            });
            Ok(Output::new(text.join("\n"), json))
        }
        SetKind::Lexical => {
            let words = enumerate_lexical(n, order.variant());
            let mut text = vec![format!("count={}", words.len())];
            text.extend(words.iter().map(|w| w.to_string()));
            let json = json!({
                "n": n,
                "set": "lexical",
                "order": order.as_str(),
                "count": words.len(),
                "words": words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            });
            Ok(Output::new(text.join("\n"), json))
        }
    }
}
