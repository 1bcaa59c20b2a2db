use lmr_core::Word;

use crate::error::{CliError, Result};

/// Longest word the CLI accepts. The predicates are quadratic, so this caps
/// a single check at roughly a hundred million letter comparisons.
const MAX_WORD_LEN: usize = 10_000;

/// Expands digit exponents: a digit run repeats the letter before it, so
/// `R2ML` reads RRML and `R12` reads twelve Rs. Output words are always
/// plain expanded strings; the shorthand exists only on input.
pub fn expand_exponents(text: &str) -> Result<String> {
    let mut expanded = String::with_capacity(text.len());
    let mut chars = text.chars().peekable();
    while let Some(ch) = chars.next() {
        if ch.is_ascii_digit() {
            let mut digits = String::from(ch);
            while let Some(&next) = chars.peek() {
                if next.is_ascii_digit() {
                    digits.push(next);
                    chars.next();
                } else {
                    break;
                }
            }
            let count: usize = digits
                .parse()
                .map_err(|_| CliError::Usage(format!("exponent {digits} is out of range")))?;
            let last = expanded.pop().ok_or_else(|| {
                CliError::Usage(format!("exponent {digits} has no letter before it"))
            })?;
            if count == 0 {
                return Err(CliError::Usage(format!(
                    "exponent 0 after {last:?} would erase the letter"
                )));
            }
            if expanded.len() + count > MAX_WORD_LEN {
                return Err(CliError::Usage(format!(
                    "word longer than {MAX_WORD_LEN} letters"
                )));
            }
            for _ in 0..count {
                expanded.push(last);
            }
        } else {
            if expanded.len() >= MAX_WORD_LEN {
                return Err(CliError::Usage(format!(
                    "word longer than {MAX_WORD_LEN} letters"
                )));
            }
            expanded.push(ch);
        }
    }
    Ok(expanded)
}

/// Parses a CLI word argument: exponent shorthand first, then the strict
/// uppercase L/M/R alphabet.
pub fn parse_word(text: &str) -> Result<Word> {
    let expanded = expand_exponents(text)?;
    Word::parse(&expanded).map_err(|err| {
        if expanded == text {
            CliError::Usage(err.to_string())
        } else {
            CliError::Usage(format!("{err} (expanded from {text:?} to {expanded:?})"))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_exponents() {
        assert_eq!(expand_exponents("R2M").unwrap(), "RRM");
        assert_eq!(
            expand_exponents("R2ML2MRMR2MR2MLM").unwrap(),
            "RRMLLMRMRRMRRMLM"
        );
        assert_eq!(expand_exponents("R12").unwrap(), "R".repeat(12));
        assert_eq!(expand_exponents("RML").unwrap(), "RML");
        assert_eq!(expand_exponents("").unwrap(), "");
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(expand_exponents("2R").is_err());
        assert!(expand_exponents("R0").is_err());
        assert!(expand_exponents("R999999999").is_err());
    }

    #[test]
    fn parses_after_expansion() {
        assert_eq!(parse_word("R3M").unwrap(), Word::parse("RRRM").unwrap());
        assert!(parse_word("R2X").is_err());
        assert!(parse_word("rml").is_err());
    }
}
