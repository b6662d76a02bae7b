//! The ideal file format.
//!
//! ```text
//! # comments run to the end of the line
//! ring 3 3              # m x-variables, n y-variables; exactly once, first
//! name rp2              # optional
//! char 0 2              # optional default characteristics
//! gen x1 x2 x3          # one generator per line, tokens x<i>, y<j>, v^e
//! gen x1^2 y1
//! gen 1                 # the unit monomial
//! ```
//!
//! Grammar, one directive per line:
//!
//! ```text
//! line      := ws* (directive ws*)? ("#" any*)?
//! directive := "ring" ws+ uint ws+ uint
//!            | "name" ws+ word
//!            | "char" (ws+ uint)+
//!            | "gen" (ws+ factor)+
//! factor    := "1" | var ("^" uint)?
//! var       := ("x" | "y") uint          (1-based, within the ring)
//! ```
//!
//! Repeated variables in one generator multiply (`gen x1 x1` is `x1^2`).
//! Generators are minimalized on load, so [`IdealDocument::to_text`] emits
//! the minimal generating set in a fixed order.

use std::fmt;

use seqcm::{FieldSpec, GeneralMonomialIdeal, MonomialIdeal, RingSpec};

/// A parsed ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDocument {
    pub name: Option<String>,
    pub characteristics: Vec<FieldSpec>,
    pub ideal: MonomialIdeal,
}

impl IdealDocument {
    pub fn ring(&self) -> RingSpec {
        self.ideal.ring()
    }

    pub fn is_squarefree(&self) -> bool {
        self.ideal.as_squarefree().is_some()
    }

    /// Minimal generators as exponent vectors, in canonical order.
    pub fn generators(&self) -> Vec<Vec<u32>> {
        self.ideal.to_general().generators().to_vec()
    }

    /// Canonical text; parsing it gives back an equal document.
    pub fn to_text(&self) -> String {
        let ring = self.ring();
        let mut out = format!("ring {} {}\n", ring.m, ring.n);
        if let Some(name) = &self.name {
            out += &format!("name {name}\n");
        }
        if !self.characteristics.is_empty() {
            let chars: Vec<String> = self.characteristics.iter().map(|f| f.characteristic().to_string()).collect();
            out += &format!("char {}\n", chars.join(" "));
        }
        for g in self.generators() {
            out += &format!("gen {}\n", render_monomial(ring, &g, " "));
        }
        out
    }
}

/// `x1^2 y1`-style rendering with the given separator; `1` for the unit.
pub fn render_monomial(ring: RingSpec, exponents: &[u32], sep: &str) -> String {
    let parts: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| if e == 1 { ring.var_name(v) } else { format!("{}^{e}", ring.var_name(v)) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(sep)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unknown directive '{0}'")]
    UnknownDirective(String),
    #[error("unknown variable '{token}' in a ring with {m} x- and {n} y-variables")]
    UnknownVariable { token: String, m: usize, n: usize },
    #[error("malformed power '{0}'")]
    MalformedPower(String),
    #[error("expected a nonnegative integer, found '{0}'")]
    BadNumber(String),
    #[error("duplicate ring declaration (first on line {0})")]
    DuplicateRing(usize),
    #[error("duplicate name declaration")]
    DuplicateName,
    #[error("generator before any ring declaration")]
    MissingRing,
    #[error("no ring declaration")]
    NoRing,
    #[error("'{directive}' expects {expected}")]
    Arity { directive: &'static str, expected: &'static str },
    #[error("{0}")]
    Invalid(String),
}

/// A parse error with a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// Whitespace-separated words with their 1-based columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(s, w)| (line[..s].chars().count() + 1, w)).collect()
}

fn number(text: &str) -> Option<u32> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Adds one factor to `exps`.
fn factor(ring: RingSpec, token: &str, exps: &mut [u32]) -> Result<(), ParseErrorKind> {
    if token == "1" {
        return Ok(());
    }
    let (base, power) = match token.split_once('^') {
        Some((b, p)) => (b, Some(p)),
        None => (token, None),
    };
    let power = match power {
        None => 1,
        Some(p) => number(p).filter(|&e| e > 0).ok_or_else(|| ParseErrorKind::MalformedPower(token.into()))?,
    };
    let unknown = || ParseErrorKind::UnknownVariable { token: base.into(), m: ring.m, n: ring.n };
    let mut chars = base.chars();
    let block = chars.next().ok_or_else(|| ParseErrorKind::MalformedPower(token.into()))?;
    let index = number(chars.as_str()).map(|i| i as usize).ok_or_else(unknown)?;
    let var = match block {
        'x' if (1..=ring.m).contains(&index) => ring.x(index),
        'y' if (1..=ring.n).contains(&index) => ring.y(index),
        _ => return Err(unknown()),
    };
    exps[var] = exps[var].checked_add(power).ok_or_else(|| ParseErrorKind::MalformedPower(token.into()))?;
    Ok(())
}

/// Parses an ideal file.
pub fn parse_ideal(text: &str) -> Result<IdealDocument, ParseError> {
    let mut ring: Option<(RingSpec, usize)> = None;
    let mut name = None;
    let mut characteristics = Vec::new();
    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut last_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let ws = words(content);
        let Some(&(col, directive)) = ws.first() else { continue };
        let err = |column: usize, kind| ParseError { line: line_no, column, kind };
        let args = &ws[1..];
        match directive {
            "ring" => {
                if let Some((_, first)) = ring {
                    return Err(err(col, ParseErrorKind::DuplicateRing(first)));
                }
                let [(mc, m), (nc, n)] = args else {
                    return Err(err(col, ParseErrorKind::Arity { directive: "ring", expected: "two counts m n" }));
                };
                let m = number(m).ok_or_else(|| err(*mc, ParseErrorKind::BadNumber((*m).into())))?;
                let n = number(n).ok_or_else(|| err(*nc, ParseErrorKind::BadNumber((*n).into())))?;
                let spec = RingSpec::new(m as usize, n as usize).map_err(|e| err(col, ParseErrorKind::Invalid(e.to_string())))?;
                ring = Some((spec, line_no));
            }
            "name" => {
                if name.is_some() {
                    return Err(err(col, ParseErrorKind::DuplicateName));
                }
                let [(_, word)] = args else {
                    return Err(err(col, ParseErrorKind::Arity { directive: "name", expected: "one word" }));
                };
                name = Some((*word).to_string());
            }
            "char" => {
                if args.is_empty() {
                    return Err(err(col, ParseErrorKind::Arity { directive: "char", expected: "at least one characteristic" }));
                }
                for &(c, word) in args {
                    let p = number(word).ok_or_else(|| err(c, ParseErrorKind::BadNumber(word.into())))?;
                    let field = FieldSpec::new(p).map_err(|e| err(c, ParseErrorKind::Invalid(e.to_string())))?;
                    if !characteristics.contains(&field) {
                        characteristics.push(field);
                    }
                }
            }
            "gen" => {
                let Some((spec, _)) = ring else {
                    return Err(err(col, ParseErrorKind::MissingRing));
                };
                if args.is_empty() {
                    return Err(err(col, ParseErrorKind::Arity { directive: "gen", expected: "at least one factor (use 1 for the unit)" }));
                }
                let mut exps = vec![0u32; spec.num_vars()];
                for &(c, token) in args {
                    factor(spec, token, &mut exps).map_err(|kind| err(c, kind))?;
                }
                gens.push(exps);
            }
            other => return Err(err(col, ParseErrorKind::UnknownDirective(other.into()))),
        }
    }
    let Some((spec, _)) = ring else {
        return Err(ParseError { line: last_line, column: 1, kind: ParseErrorKind::NoRing });
    };
    let ideal = GeneralMonomialIdeal::new(spec, gens).expect("exponent vectors sized to the ring");
    Ok(IdealDocument { name, characteristics, ideal: MonomialIdeal::from(ideal) })
}

impl fmt::Display for IdealDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_directives_and_comments() {
        let doc = parse_ideal("# demo\nring 2 1\nname t # trailing\nchar 0 2\ngen x1 y1\ngen x1^2\ngen x1 x1 x2\n").unwrap();
        assert_eq!(doc.name.as_deref(), Some("t"));
        assert_eq!(doc.characteristics.len(), 2);
        assert!(!doc.is_squarefree());
        // x1^2 x2 is a multiple of x1^2
        assert_eq!(doc.generators(), vec![vec![1, 0, 1], vec![2, 0, 0]]);
    }

    #[test]
    fn squarefree_input_collapses() {
        let doc = parse_ideal("ring 1 1\ngen x1 y1\ngen x1 y1\n").unwrap();
        assert!(doc.is_squarefree());
        assert_eq!(doc.generators().len(), 1);
    }

    #[test]
    fn positions_point_at_the_token() {
        let e = parse_ideal("ring 3 3\ngen x1  x5\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));
        assert!(e.to_string().contains("'x5'"), "{e}");
        let e = parse_ideal("ring 1 1\ngen x1^\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MalformedPower("x1^".into()));
        let e = parse_ideal("ring 1 1\ngen x1^0\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MalformedPower("x1^0".into()));
        let e = parse_ideal("ring 1 1\n  ring 1 1\n").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (2, 3, ParseErrorKind::DuplicateRing(1)));
    }

    #[test]
    fn rejects_structural_mistakes() {
        assert_eq!(parse_ideal("gen x1\n").unwrap_err().kind, ParseErrorKind::MissingRing);
        assert_eq!(parse_ideal("name a\n").unwrap_err().kind, ParseErrorKind::NoRing);
        assert!(matches!(parse_ideal("ring 0 0\n").unwrap_err().kind, ParseErrorKind::Invalid(_)));
        assert!(matches!(parse_ideal("ring 1 1\nchar 4\n").unwrap_err().kind, ParseErrorKind::Invalid(_)));
        assert!(matches!(parse_ideal("ring 1 1\nideal x1\n").unwrap_err().kind, ParseErrorKind::UnknownDirective(_)));
        assert!(matches!(parse_ideal("ring 1 1\ngen\n").unwrap_err().kind, ParseErrorKind::Arity { .. }));
        assert!(matches!(parse_ideal("ring 1 1\ngen z1\n").unwrap_err().kind, ParseErrorKind::UnknownVariable { .. }));
    }

    #[test]
    fn unit_and_zero_ideals() {
        assert!(parse_ideal("ring 1 0\ngen 1\n").unwrap().ideal.is_unit());
        assert!(parse_ideal("ring 1 0\n").unwrap().ideal.is_zero());
    }

    #[test]
    fn canonical_text_round_trips() {
        let doc = parse_ideal("ring 2 2\ngen y2 x1^3\ngen x2\nname n\n").unwrap();
        let text = doc.to_text();
        assert_eq!(text, "ring 2 2\nname n\ngen x2\ngen x1^3 y2\n");
        assert_eq!(parse_ideal(&text).unwrap(), doc);
    }
}
