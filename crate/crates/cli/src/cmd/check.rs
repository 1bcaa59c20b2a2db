use lmr_core::{detect_broken_alternating, is_d_lexical, is_greatest_in_class};
use serde_json::{json, Map, Value};

use crate::args::OrderArg;
use crate::error::{CliError, Result};
use crate::input::parse_word;
use crate::report::Output;

pub struct Predicates {
    pub primitive: bool,
    pub greatest: bool,
    pub lexical: Option<OrderArg>,
    pub broken_alternating: bool,
}

pub fn run(word_text: &str, predicates: &Predicates) -> Result<Output> {
    if !predicates.primitive
        && !predicates.greatest
        && predicates.lexical.is_none()
        && !predicates.broken_alternating
    {
        return Err(CliError::Usage(
            "check needs at least one predicate flag (--primitive, --greatest, --lexical, --broken-alternating)"
                .to_string(),
        ));
    }
    let word = parse_word(word_text)?;
    if word.is_empty() {
        return Err(CliError::Usage("check needs a non-empty word".to_string()));
    }

    let mut text = Vec::new();
    let mut verdicts = Map::new();
    let mut all_true = true;
    let mut record =
        |name: &str, value: bool, text: &mut Vec<String>, verdicts: &mut Map<String, Value>| {
            text.push(format!("{name}: {value}"));
            verdicts.insert(name.to_string(), value.into());
            all_true &= value;
        };

    if predicates.primitive {
        record("primitive", word.is_primitive(), &mut text, &mut verdicts);
    }
    if predicates.greatest {
        record(
            "greatest",
            is_greatest_in_class(&word),
            &mut text,
            &mut verdicts,
        );
    }
    if let Some(order) = predicates.lexical {
        let value = is_d_lexical(&word, order.variant());
        record(
            &format!("lexical({})", order.as_str()),
            value,
            &mut text,
            &mut verdicts,
        );
    }
    if predicates.broken_alternating {
        let decomposition = detect_broken_alternating(&word);
        record(
            "broken-alternating",
            decomposition.is_some(),
            &mut text,
            &mut verdicts,
        );
        if let Some(d) = decomposition {
            text.push(format!(
                "  decomposition unit={} repeats={} tail={}",
                d.unit,
                d.repeats,
                if d.tail.is_empty() {
                    "(empty)".to_string()
                } else {
                    d.tail.to_string()
                }
            ));
        }
    }

    let json = json!({
        "word": word.to_string(),
        "verdicts": Value::Object(verdicts),
        "all_true": all_true,
    });
    let mut output = Output::new(text.join("\n"), json);
    if !all_true {
        output.exit_code = 1;
    }
    Ok(output)
}
