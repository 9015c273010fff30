use std::str::FromStr;

use super::{PermError, Permutation};

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts one-line notation (`"529614738"`, or space/comma separated
    /// such as `"11 10 9 7 4 3 5 2 6 8 12 1"`) and cycle notation
    /// (`"(1,5)(2)(3,9,8)(4,6)(7)"`). In cycle notation the size is the
    /// largest element mentioned; omitted elements are fixed points.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s = input.trim();
        if s.starts_with('(') {
            parse_cycles(input, s)
        } else {
            parse_one_line(input, s)
        }
    }
}

fn parse_err(input: &str, detail: impl Into<String>) -> PermError {
    PermError::Parse { input: input.to_string(), detail: detail.into() }
}

fn parse_one_line(input: &str, s: &str) -> Result<Permutation, PermError> {
    let values: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| tok.parse::<usize>().map_err(|e| parse_err(input, e.to_string())))
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| parse_err(input, format!("unexpected character {c:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    Permutation::new(values).map_err(|e| parse_err(input, e.to_string()))
}

fn parse_cycles(input: &str, s: &str) -> Result<Permutation, PermError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| parse_err(input, format!("expected '(' at {rest:?}")))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| parse_err(input, "unclosed cycle"))?;
        let body = &body_start[..close];
        let cycle: Vec<usize> = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| parse_err(input, format!("bad element {tok:?}: {e}")))
            })
            .collect::<Result<_, _>>()?;
        cycles.push(cycle);
        rest = body_start[close + 1..].trim_start();
    }
    let n = cycles.iter().flatten().copied().max().unwrap_or(0);
    Permutation::from_cycles(n, &cycles).map_err(|e| parse_err(input, e.to_string()))
}
