use std::fmt::Write;

use cyclepat::enumerate::{count_avoiders, refined_census, EnumerateError};
use cyclepat::gf::{build, growth_estimate, GfError, GfId, GfValue};
use cyclepat::lattice::{dyck_to_motzkin, free_decomposition, motzkin_to_dyck, reduce, DyckWord};
use cyclepat::verify::{run, Bounds};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use crate::render;
use crate::{BijectionArgs, CountArgs, Failure, Format, GfArgs, GrowthArgs, RenderArgs, VerifyArgs};

type Outcome = Result<String, Failure>;

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Usage(format!("{command} does not support --format {format:?}").to_lowercase())
}

fn pretty(value: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(value).expect("json"))
}

fn gf_failure(e: GfError) -> Failure {
    match e {
        GfError::UnknownName(_) | GfError::MissingCycles(_) | GfError::UnsupportedCycles(_) => {
            Failure::Usage(format!("{e} (known: {})", GfId::NAMES.join(", ")))
        }
        other => Failure::Mismatch(format!("{other}\n")),
    }
}

pub fn count(args: &CountArgs) -> Outcome {
    let count = count_avoiders(args.n, &args.cycles, &args.pattern);
    Ok(match args.format {
        Format::Text => format!("{count}\n"),
        Format::Json => pretty(&json!({
            "n": args.n,
            "S": args.cycles,
            "pattern": args.pattern,
            "count": count.to_string(),
        })),
        Format::Csv => format!("n,S,pattern,count\n{},\"{}\",{},{count}\n", args.n, args.cycles, args.pattern),
        Format::Markdown => format!(
            "| n | S | pattern | count |\n|---|---|---|---|\n| {} | {} | {} | {count} |\n",
            args.n, args.cycles, args.pattern
        ),
        other => return Err(unsupported(other, "count")),
    })
}

pub fn census(args: &CountArgs) -> Outcome {
    let census = refined_census(args.n, &args.cycles, &args.pattern).map_err(|e: EnumerateError| Failure::Usage(e.to_string()))?;
    let rows = || census.table.iter().map(|(k, v)| (k.c1, k.c2, k.c3, v.to_string()));
    Ok(match args.format {
        Format::Json => pretty(&census.to_json()),
        Format::Csv | Format::Text => {
            let mut out = String::from("c1,c2,c3,count\n");
            for (c1, c2, c3, v) in rows() {
                writeln!(out, "{c1},{c2},{c3},{v}").unwrap();
            }
            out
        }
        Format::Markdown => {
            let mut out = String::from("| fixed points | 2-cycles | 3-cycles | count |\n|---|---|---|---|\n");
            for (c1, c2, c3, v) in rows() {
                writeln!(out, "| {c1} | {c2} | {c3} | {v} |").unwrap();
            }
            writeln!(out, "\ntotal: {}", census.total()).unwrap();
            out
        }
        other => return Err(unsupported(other, "census")),
    })
}

pub fn gf(args: &GfArgs) -> Outcome {
    let id = GfId::from_name(&args.name, args.cycles.as_ref()).map_err(gf_failure)?;
    let value = build(&id, args.order).map_err(gf_failure)?;
    let integer_list = |v: &GfValue| {
        v.as_univariate().map(|s| s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
    };
    Ok(match (args.format, integer_list(&value)) {
        (Format::Text, Some(list)) => format!("{}\n", list.join(",")),
        (Format::Csv, Some(list)) => {
            let mut out = String::from("n,coefficient\n");
            for (n, c) in list.iter().enumerate() {
                writeln!(out, "{n},{c}").unwrap();
            }
            out
        }
        (Format::Markdown, Some(list)) => {
            let mut out = format!("| n | [z^n] {id} |\n|---|---|\n");
            for (n, c) in list.iter().enumerate() {
                writeln!(out, "| {n} | {c} |").unwrap();
            }
            out
        }
        (Format::Json | Format::Text, _) => pretty(&json!({
            "name": id.to_string(),
            "order": args.order,
            "coefficients": value.to_json(),
        })),
        (other, _) => return Err(unsupported(other, "gf")),
    })
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    if args.n_max == 0 || args.m_max == 0 {
        return Err(Failure::Usage("--n-max and --m-max must be positive".into()));
    }
    let bounds = Bounds { n_max: args.n_max, m_max: args.m_max, deep: args.deep };
    let report = run(args.suite, &bounds);
    let text = match args.format {
        Format::Json => pretty(&report.to_json()),
        Format::Csv => report.to_csv(),
        Format::Markdown => report.to_markdown(),
        Format::Text => {
            let mut out = String::new();
            for group in &report.groups {
                let mark = if group.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{mark} {} ({} checks)", group.title, group.checks.len()).unwrap();
                for note in &group.notes {
                    writeln!(out, "     note: {note}").unwrap();
                }
                for c in group.failures() {
                    writeln!(out, "     {}: expected {}, got {}", c.name, c.expected, c.actual).unwrap();
                }
            }
            let verdict = if report.passed() { "all checks passed" } else { "MISMATCH" };
            writeln!(out, "{}: {verdict}", report.suite).unwrap();
            out
        }
        other => return Err(unsupported(other, "verify")),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

pub fn bijection(args: &BijectionArgs) -> Outcome {
    let word: DyckWord = match (&args.word, &args.path, &args.composition) {
        (Some(w), _, _) => w.clone(),
        (None, Some(path), Some(x)) => motzkin_to_dyck(path, x).map_err(|e| Failure::Usage(e.to_string()))?,
        _ => return Err(Failure::Usage("give --word, or --path with --composition".into())),
    };
    if word.is_empty() {
        return Err(Failure::Usage("the empty word has no free blocks".into()));
    }
    let blocks = free_decomposition(&word);
    let composition = blocks.composition().expect("nonempty word");
    let reduced = reduce(&word);
    let path = dyck_to_motzkin(&word);
    let back = motzkin_to_dyck(&path, &composition).map_err(|e| Failure::Mismatch(format!("{e}\n")))?;
    let hits = word.hits();
    let round_trip = back == word;
    let text = match args.format {
        Format::Json => pretty(&json!({
            "word": word,
            "hits": hits,
            "composition": composition,
            "reduced": reduced,
            "motzkin": path,
            "flats_at_level_zero": path.flats_at_level_zero(),
            "inverse": back,
            "round_trip": round_trip,
        })),
        Format::Text => format!(
            "word         {word}\nhits         {}\ncomposition  ({composition})\nreduced      {reduced}\nmotzkin      {}\nflats        {}\ninverse      {back}\nround trip   {}\n",
            hits.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(","),
            if path.is_empty() { "(empty)".to_string() } else { path.to_string() },
            path.flats_at_level_zero(),
            if round_trip { "ok" } else { "FAILED" }
        ),
        other => return Err(unsupported(other, "bijection")),
    };
    if round_trip {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

pub fn render(args: &RenderArgs) -> Outcome {
    match args.format {
        Format::Svg => Ok(render::svg(&args.permutation)),
        Format::Ascii | Format::Text => Ok(render::ascii(&args.permutation)),
        other => Err(unsupported(other, "render")),
    }
}

#[derive(Clone, Debug)]
pub struct Band {
    pub lo: BigRational,
    pub hi: BigRational,
    text: String,
}

fn parse_decimal(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| format!("not a decimal: {s:?}"))?;
    Ok(BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32)))
}

pub fn parse_band(s: &str) -> Result<Band, String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    let (lo, hi) = (parse_decimal(lo)?, parse_decimal(hi)?);
    if lo > hi {
        return Err("LO exceeds HI".into());
    }
    Ok(Band { lo, hi, text: s.to_string() })
}

pub fn growth(args: &GrowthArgs) -> Outcome {
    let id = match GfId::from_name(&args.name, args.cycles.as_ref()).map_err(gf_failure)? {
        GfId::A13_132 => GfId::A13_132Closed,
        id => id,
    };
    let order = args.order.unwrap_or(args.n + 10);
    let value = build(&id, order).map_err(gf_failure)?;
    let series = value
        .as_univariate()
        .ok_or_else(|| Failure::Usage(format!("{id} is not a univariate series")))?;
    let g = growth_estimate(series, args.n).map_err(gf_failure)?;
    let inside = args.band.as_ref().map(|b| g.within(&b.lo, &b.hi));
    let text = match args.format {
        Format::Text => {
            let mut out = format!("(a_{}/a_{})^(1/3) = {}\n", args.n + 3, args.n, g.decimal);
            if let (Some(b), Some(ok)) = (&args.band, inside) {
                writeln!(out, "band [{}]: {}", b.text, if ok { "inside" } else { "OUTSIDE" }).unwrap();
            }
            out
        }
        Format::Json => pretty(&json!({
            "name": id.to_string(),
            "n": args.n,
            "order": order,
            "ratio": g.ratio.to_string(),
            "cube_root": g.decimal,
            "band": args.band.as_ref().map(|b| b.text.clone()),
            "inside_band": inside,
        })),
        other => return Err(unsupported(other, "growth")),
    };
    if inside == Some(false) {
        Err(Failure::Mismatch(text))
    } else {
        Ok(text)
    }
}
