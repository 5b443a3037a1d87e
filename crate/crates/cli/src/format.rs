use std::fmt::Write as _;
use std::str::FromStr;

use lascoux::combi::WeakComposition;
use lascoux::expansion::ExpansionResult;
use lascoux::hecke::{CompatiblePair, Permutation, Word};
use lascoux::insertion::TableauPair;
use lascoux::polynomials::{LPolynomial, Monomial};
use lascoux::setops::FinSet;
use lascoux::tableaux::{IncreasingTableau, Rsvt};
use num_bigint::{BigInt, BigUint};
use serde_json::{Map, Value};

/// A malformed input, reported as a usage error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

pub type ParseResult<T> = Result<T, ParseError>;

fn err<T>(msg: impl Into<String>) -> ParseResult<T> {
    Err(ParseError(msg.into()))
}

fn number<T: FromStr>(s: &str, what: &str) -> ParseResult<T> {
    s.trim()
        .parse()
        .map_err(|_| ParseError(format!("'{}' is not a valid {what}", s.trim())))
}

/// Comma-separated non-negative integers, optionally in parentheses:
/// `0,2,1` or `(0,2,1)`.
pub fn parse_composition(s: &str) -> ParseResult<WeakComposition> {
    let s = s.trim();
    let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    if inner.trim().is_empty() {
        return Ok(WeakComposition::new(Vec::new()));
    }
    let parts = inner
        .split(',')
        .map(|p| number::<u32>(p, "composition entry"))
        .collect::<ParseResult<Vec<_>>>()?;
    Ok(WeakComposition::new(parts))
}

/// A list of positive integers, comma-separated or as a single string of
/// digits.
fn parse_letters(s: &str, what: &str) -> ParseResult<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let letters: Vec<u32> = if s.contains(',') {
        s.split(',').map(|p| number(p, what)).collect::<ParseResult<_>>()?
    } else if s.chars().all(|c| c.is_ascii_digit()) {
        s.chars().map(|c| c.to_digit(10).expect("digit")).collect()
    } else {
        return err(format!("'{s}' is not a valid {what}"));
    };
    if letters.contains(&0) {
        return err(format!("'{s}': letters must be positive"));
    }
    Ok(letters)
}

/// One-line notation: `3,2,1` or `321`. A lone `1` is the identity.
pub fn parse_permutation(s: &str) -> ParseResult<Permutation> {
    let letters = parse_letters(s, "permutation")?;
    Permutation::from_one_line(letters).map_err(|e| ParseError(e.to_string()))
}

pub fn parse_word(s: &str) -> ParseResult<Word> {
    Ok(Word::new(parse_letters(s, "word")?))
}

/// Rows of non-empty, non-comment lines.
fn rows_of(text: &str) -> Vec<&str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).collect()
}

/// An increasing tableau: one row per line, entries separated by spaces.
/// A file with no rows is the empty tableau.
pub fn parse_tableau(text: &str) -> ParseResult<IncreasingTableau> {
    let rows = rows_of(text)
        .into_iter()
        .map(|line| line.split_whitespace().map(|v| number(v, "tableau entry")).collect())
        .collect::<ParseResult<Vec<Vec<u32>>>>()?;
    IncreasingTableau::new(rows).map_err(|e| ParseError(e.to_string()))
}

pub fn format_tableau(t: &IncreasingTableau) -> String {
    t.rows()
        .iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

/// A reverse set-valued tableau: one row per line, cells separated by
/// spaces, each cell a comma-joined list of its elements in decreasing
/// order.
pub fn parse_rsvt(text: &str) -> ParseResult<Rsvt> {
    let rows = rows_of(text)
        .into_iter()
        .map(|line| {
            line.split_whitespace()
                .map(|cell| {
                    let set: FinSet = cell
                        .split(',')
                        .map(|v| number::<u32>(v, "cell entry"))
                        .collect::<ParseResult<Vec<_>>>()?
                        .into_iter()
                        .collect();
                    Ok(set)
                })
                .collect::<ParseResult<Vec<_>>>()
        })
        .collect::<ParseResult<Vec<_>>>()?;
    Rsvt::new(rows).map_err(|e| ParseError(e.to_string()))
}

pub fn format_rsvt(t: &Rsvt) -> String {
    t.rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|cell| cell.iter().rev().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// `P` and `Q` separated by a blank line.
pub fn parse_pair(text: &str) -> ParseResult<TableauPair> {
    let normalized = text.replace("\r\n", "\n");
    let blocks: Vec<&str> = normalized
        .split("\n\n")
        .filter(|b| !b.trim().is_empty())
        .collect();
    match blocks.as_slice() {
        [] => Ok(TableauPair::empty()),
        [p, q] => TableauPair::new(parse_tableau(p)?, parse_rsvt(q)?).map_err(|e| ParseError(e.to_string())),
        _ => err("a pair file holds two tableaux separated by one blank line"),
    }
}

pub fn format_pair(pair: &TableauPair) -> String {
    if pair.p().is_empty() {
        return String::new();
    }
    format!("{}\n\n{}", format_tableau(pair.p()), format_rsvt(pair.q()))
}

/// `(a, i)`, as printed by [`CompatiblePair`]'s display.
pub fn parse_compatible_pair(s: &str) -> ParseResult<CompatiblePair> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| ParseError(format!("'{s}' is not of the form (a, i)")))?;
    let (a, i) = inner
        .split_once(", ")
        .or_else(|| inner.split_once(' '))
        .ok_or_else(|| ParseError(format!("'{s}' is not of the form (a, i)")))?;
    CompatiblePair::new(parse_word(a)?, parse_word(i)?).map_err(|e| ParseError(e.to_string()))
}

/// A polynomial in the format of [`LPolynomial`]'s display:
/// `x1^2*x2 + 2*b*x1 - b^2*x3`, with `0` for zero.
pub fn parse_polynomial(s: &str, nvars: usize) -> ParseResult<LPolynomial> {
    let s = s.trim();
    let mut out = LPolynomial::zero(nvars);
    if s == "0" {
        return Ok(out);
    }
    let spaced = s.replace(" - ", " + -");
    for (k, raw) in spaced.split(" + ").enumerate() {
        let (negative, body) = match raw.trim().strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, raw.trim()),
        };
        if body.is_empty() {
            return err(format!("empty term {} in '{s}'", k + 1));
        }
        let mut coeff = BigInt::from(1);
        let mut beta = 0;
        let mut exps = vec![0u32; nvars];
        for factor in body.split('*') {
            let (base, power) = match factor.split_once('^') {
                Some((b, e)) => (b, number::<u32>(e, "exponent")?),
                None => (factor, 1),
            };
            if base == "b" {
                beta += power;
            } else if let Some(idx) = base.strip_prefix('x') {
                let i: usize = number(idx, "variable index")?;
                if i == 0 || i > nvars {
                    return err(format!("variable x{i} outside x1..x{nvars}"));
                }
                exps[i - 1] += power;
            } else {
                coeff *= number::<BigInt>(base, "coefficient")?;
            }
        }
        if negative {
            coeff = -coeff;
        }
        out.add_term(Monomial::new(beta, exps), coeff);
    }
    Ok(out)
}

/// The lines printed by [`ExpansionResult`]'s display, or `0`.
pub fn parse_expansion(text: &str) -> ParseResult<ExpansionResult> {
    let mut out = ExpansionResult::new();
    let lines = rows_of(text);
    if lines == ["0"] {
        return Ok(out);
    }
    for line in lines {
        let (lhs, c) = line
            .split_once(" : ")
            .ok_or_else(|| ParseError(format!("'{line}' is not of the form 'b^k L_(γ) : c'")))?;
        let c: BigUint = number(c, "coefficient")?;
        let (k, gamma) = if let Some(g) = lhs.strip_prefix("L_") {
            (0, g)
        } else if let Some(g) = lhs.strip_prefix("b L_") {
            (1, g)
        } else if let Some(rest) = lhs.strip_prefix("b^") {
            let (k, g) = rest
                .split_once(" L_")
                .ok_or_else(|| ParseError(format!("'{line}' is not of the form 'b^k L_(γ) : c'")))?;
            (number(k, "β exponent")?, g)
        } else {
            return err(format!("'{line}' is not of the form 'b^k L_(γ) : c'"));
        };
        out.add(parse_composition(gamma)?, k, c);
    }
    Ok(out)
}

fn big_to_json(c: &BigUint) -> Value {
    match u64::try_from(c) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(c.to_string()),
    }
}

/// `{"0,2,1": [c0, c1, …], …}` with `β`-coefficient arrays, sorted by key.
pub fn expansion_to_json(e: &ExpansionResult) -> Value {
    let map: Map<String, Value> = e
        .terms()
        .iter()
        .map(|(g, cs)| {
            let key = g.entries().iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            (key, Value::Array(cs.iter().map(big_to_json).collect()))
        })
        .collect();
    Value::Object(map)
}

pub fn expansion_from_json(v: &Value) -> ParseResult<ExpansionResult> {
    let obj = v
        .as_object()
        .ok_or_else(|| ParseError("expansion JSON must be an object".into()))?;
    let mut out = ExpansionResult::new();
    for (key, cs) in obj {
        let gamma = parse_composition(key)?;
        let cs = cs
            .as_array()
            .ok_or_else(|| ParseError(format!("coefficients of {key} must be an array")))?;
        for (k, c) in cs.iter().enumerate() {
            let c: BigUint = match c {
                Value::Number(n) => number(&n.to_string(), "coefficient")?,
                Value::String(s) => number(s, "coefficient")?,
                _ => return err(format!("coefficient of {key} is not a number")),
            };
            out.add(gamma.clone(), k as u32, c);
        }
    }
    Ok(out)
}

/// A report of reverse insertion for the `insert` subcommand.
pub fn format_insertion(trace: &[String], m: u32, p_prime: &IncreasingTableau) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "trace: {}", trace.join(", "));
    let _ = writeln!(s, "m: {m}");
    let _ = writeln!(s, "P':");
    if !p_prime.is_empty() {
        let _ = writeln!(s, "{}", format_tableau(p_prime));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_round_trip() {
        let t = parse_tableau("1 2 3 5\n2 5 6\n3 6\n6 7\n8\n").unwrap();
        assert_eq!(parse_tableau(&format_tableau(&t)).unwrap(), t);
        assert!(parse_tableau("2 1").is_err());
        assert!(parse_tableau("").unwrap().is_empty());
    }

    #[test]
    fn pair_round_trip() {
        let pair = parse_pair("1 2\n3\n\n3 2,1\n2,1\n").unwrap();
        assert_eq!(format_rsvt(pair.q()), "3 2,1\n2,1");
        assert_eq!(parse_pair(&format_pair(&pair)).unwrap(), pair);
        assert_eq!(parse_pair("").unwrap(), TableauPair::empty());
    }

    #[test]
    fn permutations_and_words() {
        let w = parse_permutation("321").unwrap();
        assert_eq!(parse_permutation("3,2,1").unwrap(), w);
        assert_eq!(parse_permutation(&w.to_string()).unwrap(), w);
        assert!(parse_permutation("1").unwrap().is_identity());
        let long = parse_permutation("1,2,3,4,5,6,7,8,9,11,10").unwrap();
        assert_eq!(parse_permutation(&long.to_string()).unwrap(), long);
        assert!(parse_permutation("2,2").is_err());
        let x = parse_compatible_pair("(21313, 11223)").unwrap();
        assert_eq!(parse_compatible_pair(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn polynomial_round_trip() {
        for (text, n) in [
            ("x1^2*x2 + 3*b*x1*x2 - b^2*x3", 3),
            ("0", 2),
            ("1", 2),
            ("-2 + x2", 2),
        ] {
            let p = parse_polynomial(text, n).unwrap();
            assert_eq!(parse_polynomial(&p.to_string(), n).unwrap(), p);
        }
        assert!(parse_polynomial("x4", 3).is_err());
    }

    #[test]
    fn expansion_round_trip() {
        let e = parse_expansion("L_(1,0,2) : 1\nb L_(2,0,2) : 2\nb^3 L_(3,2,4) : 1").unwrap();
        assert_eq!(parse_expansion(&e.to_string()).unwrap(), e);
        assert_eq!(expansion_from_json(&expansion_to_json(&e)).unwrap(), e);
        assert_eq!(parse_expansion("0").unwrap(), ExpansionResult::new());
    }

    #[test]
    fn compositions() {
        let a = parse_composition("0,2,1").unwrap();
        assert_eq!(parse_composition(&a.to_string()).unwrap(), a);
        assert!(parse_composition("1,-1").is_err());
    }
}
