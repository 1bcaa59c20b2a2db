use lmr_core::{brute_force_xy_yx, brute_force_zw, solve_xy_yx, solve_zw, Word, XyKind, ZwKind};
use serde_json::{json, Map, Value};

use crate::args::SolveEquation;
use crate::config::Config;
use crate::error::Result;
use crate::report::Output;

fn oracle_verdict(matched: bool) -> &'static str {
    if matched {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

pub fn run(config: &Config, equation: &SolveEquation) -> Result<Output> {
    match *equation {
        SolveEquation::Zw {
            m,
            r,
            expand,
            check_oracle,
        } => zw(config, m, r, expand, check_oracle),
        SolveEquation::XyYx {
            l,
            m,
            expand,
            check_oracle,
        } => xy_yx(config, l, m, expand, check_oracle),
    }
}

fn zw(config: &Config, m: usize, r: usize, expand: bool, check_oracle: bool) -> Result<Output> {
    let family = solve_zw(m, r)?;
    let mut text = Vec::new();
    let mut object = Map::new();
    object.insert("equation".into(), "ZW".into());
    object.insert("m".into(), m.into());
    object.insert("r".into(), r.into());
    match family.kind {
        ZwKind::AllM => {
            text.push(format!("equation=ZW m={m} r={r} d={} kind=AllM", family.d));
            object.insert("kind".into(), "AllM".into());
            object.insert("d".into(), family.d.into());
            let (z, w) = family.expand(&Word::new());
            text.push(format!("solution Z={z} W={w}"));
            object.insert(
                "solution".into(),
                json!({ "z": z.to_string(), "w": w.to_string() }),
            );
        }
        ZwKind::Alternating { z_blocks, w_blocks } => {
            text.push(format!(
                "equation=ZW m={m} r={r} d={} kind=Alternating z_blocks={z_blocks} w_blocks={w_blocks}",
                family.d
            ));
            object.insert("kind".into(), "Alternating".into());
            object.insert("d".into(), family.d.into());
            object.insert("z_blocks".into(), z_blocks.into());
            object.insert("w_blocks".into(), w_blocks.into());
        }
    }
    if expand {
        config.check_oracle(family.d)?;
        let pairs = family.enumerate();
        text.push(format!("expansions={}", pairs.len()));
        let mut rows = Vec::new();
        for (z, w) in &pairs {
            text.push(format!("pair Z={z} W={w}"));
            rows.push(json!({ "z": z.to_string(), "w": w.to_string() }));
        }
        object.insert("expansions".into(), Value::Array(rows));
    }
    if check_oracle {
        config.check_oracle(m)?;
        let expected = brute_force_zw(m, r)?;
        let matched = family.enumerate() == expected;
        text.push(format!(
            "oracle={} pairs={}",
            oracle_verdict(matched),
            expected.len()
        ));
        object.insert("oracle".into(), oracle_verdict(matched).into());
        object.insert("oracle_pairs".into(), expected.len().into());
    }
    Ok(Output::new(text.join("\n"), Value::Object(object)))
}

fn xy_yx(config: &Config, l: usize, m: usize, expand: bool, check_oracle: bool) -> Result<Output> {
    let family = solve_xy_yx(l, m)?;
    let mut text = Vec::new();
    let mut object = Map::new();
    object.insert("equation".into(), "XY-YX".into());
    object.insert("l".into(), l.into());
    object.insert("m".into(), m.into());
    match family.kind {
        XyKind::AllM => {
            text.push(format!(
                "equation=XY-YX l={l} m={m} d={} kind=AllM",
                family.d
            ));
            object.insert("kind".into(), "AllM".into());
            object.insert("d".into(), family.d.into());
            let (x, y) = family.expand(&Word::new());
            text.push(format!("solution X={x} Y={y}"));
            object.insert(
                "solution".into(),
                json!({ "x": x.to_string(), "y": y.to_string() }),
            );
        }
        XyKind::Alternating { x_blocks, y_blocks } => {
            text.push(format!(
                "equation=XY-YX l={l} m={m} d={} kind=Alternating x_blocks={x_blocks} y_blocks={y_blocks}",
                family.d
            ));
            object.insert("kind".into(), "Alternating".into());
            object.insert("d".into(), family.d.into());
            object.insert("x_blocks".into(), x_blocks.into());
            object.insert("y_blocks".into(), y_blocks.into());
        }
    }
    if expand {
        config.check_oracle(family.d)?;
        let pairs = family.enumerate();
        text.push(format!("expansions={}", pairs.len()));
        let mut rows = Vec::new();
        for (x, y) in &pairs {
            text.push(format!("pair X={x} Y={y}"));
            rows.push(json!({ "x": x.to_string(), "y": y.to_string() }));
        }
        object.insert("expansions".into(), Value::Array(rows));
    }
    if check_oracle {
        config.check_oracle(l + m)?;
        let expected = brute_force_xy_yx(l, m)?;
        let matched = family.enumerate() == expected;
        text.push(format!(
            "oracle={} pairs={}",
            oracle_verdict(matched),
            expected.len()
        ));
        object.insert("oracle".into(), oracle_verdict(matched).into());
        object.insert("oracle_pairs".into(), expected.len().into());
    }
    Ok(Output::new(text.join("\n"), Value::Object(object)))
}
