//! The hand-transcribed rank-6 signature table and its comparison against a
//! computed multiplet. The table also supplies the `χ_a`, `χ_c'`, ... vertex names.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactlin::{int, rat, LinForm};
use crate::multiplet::{Multiplet, Side, Signature};
use crate::rootsys::Labels;

const ARITY: usize = 6;

pub const SO12_MAIN_MULTIPLET: &str = include_str!("../../data/so12_main_multiplet.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    /// Base name such as `0`, `c'`, `g''`.
    pub name: String,
    pub side: Side,
    pub labels: Vec<LinForm>,
    pub c: LinForm,
}

impl GoldenRow {
    pub fn full_name(&self) -> String {
        format!("chi_{}^{}", self.name, self.side.sign())
    }

    fn matches(&self, sig: &Signature) -> bool {
        self.labels == sig.labels && self.c == sig.c
    }
}

/// `m34` → m3+m4, `m4,6` → m4+m6, `m24,6` → m2+m3+m4+m6.
fn parse_label(token: &str, line: usize) -> Result<LinForm> {
    let bad = || Error::Fixture {
        line,
        msg: format!("bad label shorthand {token:?}"),
    };
    let body = token.strip_prefix('m').ok_or_else(bad)?;
    let mut parts = body.split(',');
    let head = parts.next().ok_or_else(bad)?;
    let digits: Vec<usize> = head
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    let range = match digits[..] {
        [i] => i..=i,
        [i, j] if i < j => i..=j,
        _ => return Err(bad()),
    };
    let mut indices: Vec<usize> = range.collect();
    for p in parts {
        indices.push(p.parse().map_err(|_| bad())?);
    }
    let mut f = LinForm::zero(ARITY);
    for i in indices {
        if !(1..=ARITY).contains(&i) {
            return Err(bad());
        }
        f = &f + &LinForm::indeterminate(ARITY, i);
    }
    Ok(f)
}

/// Integer combination such as `-m1+m3+2m4+2m5+m6`.
fn parse_sum(expr: &str, line: usize) -> Result<LinForm> {
    let bad = |msg: String| Error::Fixture { line, msg };
    let mut f = LinForm::zero(ARITY);
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = s.as_str();
    if rest.is_empty() {
        return Err(bad("empty c-form".into()));
    }
    while !rest.is_empty() {
        let (sign, tail) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        if tail.is_empty() {
            return Err(bad("dangling sign".into()));
        }
        let end = tail[1..].find(['+', '-']).map_or(tail.len(), |p| p + 1);
        let term = &tail[..end];
        rest = &tail[end..];
        let (coef, var) = term
            .split_once('m')
            .ok_or_else(|| bad(format!("bad term {term:?}")))?;
        let coef: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse()
                .map_err(|_| bad(format!("bad coefficient {coef:?}")))?
        };
        let idx: usize = var
            .parse()
            .map_err(|_| bad(format!("bad index in {term:?}")))?;
        if !(1..=ARITY).contains(&idx) {
            return Err(bad(format!("index out of range in {term:?}")));
        }
        f = &f + &LinForm::indeterminate(ARITY, idx).scale(&int(sign * coef));
    }
    Ok(f)
}

/// Parse the fixture format; each line yields its minus and plus rows.
pub fn parse(text: &str) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split('|').map(str::trim).collect();
        let [name, labels, sum] = fields[..] else {
            return Err(Error::Fixture {
                line,
                msg: "expected `name | labels | c-form`".into(),
            });
        };
        let labels = labels
            .split_whitespace()
            .map(|t| parse_label(t, line))
            .collect::<Result<Vec<_>>>()?;
        if labels.len() != ARITY - 1 {
            return Err(Error::Fixture {
                line,
                msg: format!("expected {} labels, got {}", ARITY - 1, labels.len()),
            });
        }
        let half_sum = parse_sum(sum, line)?.scale(&rat(1, 2));
        rows.push(GoldenRow {
            name: name.to_string(),
            side: Side::Minus,
            labels: labels.clone(),
            c: -&half_sum,
        });
        rows.push(GoldenRow {
            name: name.to_string(),
            side: Side::Plus,
            labels: labels.into_iter().rev().collect(),
            c: half_sum,
        });
    }
    Ok(rows)
}

/// The embedded rank-6 table.
pub fn so12_rows() -> Vec<GoldenRow> {
    parse(SO12_MAIN_MULTIPLET).expect("embedded fixture parses")
}

/// Rows specialised to the run's labels (constant forms in numeric mode).
pub fn rows_at(rows: &[GoldenRow], labels: &Labels) -> Result<Vec<GoldenRow>> {
    match labels {
        Labels::Symbolic => Ok(rows.to_vec()),
        Labels::Numeric(ls) => rows
            .iter()
            .map(|r| {
                let k = ls.len();
                let fix = |f: &LinForm| f.eval_at(ls).map(|v| LinForm::constant(k, v));
                Ok(GoldenRow {
                    name: r.name.clone(),
                    side: r.side,
                    labels: r.labels.iter().map(fix).collect::<Result<_>>()?,
                    c: fix(&r.c)?,
                })
            })
            .collect(),
    }
}

pub fn name_for(rows: &[GoldenRow], sig: &Signature) -> Option<String> {
    rows.iter()
        .find(|r| r.matches(sig))
        .map(GoldenRow::full_name)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenDiff {
    pub total: usize,
    pub matched: usize,
    /// One entry per mismatched row or unmatched vertex.
    pub mismatches: Vec<String>,
}

impl GoldenDiff {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.matched == self.total
    }
}

fn render(labels: &[LinForm], c: &LinForm) -> String {
    let ls: Vec<String> = labels.iter().map(ToString::to_string).collect();
    format!("{{{}; {}}}", ls.join(", "), c)
}

/// Compare every table row with the multiplet's signatures, exactly.
pub fn diff(m: &Multiplet, rows: &[GoldenRow]) -> Result<GoldenDiff> {
    let rows = rows_at(rows, &m.labels)?;
    let mut used = vec![false; m.vertices.len()];
    let mut matched = 0;
    let mut mismatches = Vec::new();

    for row in &rows {
        let hit = m
            .vertices
            .iter()
            .find(|v| !used[v.id] && row.matches(&v.signature));
        match hit {
            Some(v) if v.side == row.side => {
                used[v.id] = true;
                matched += 1;
            }
            Some(v) => {
                used[v.id] = true;
                mismatches.push(format!(
                    "row {}: signature found at vertex {} but on the {} side",
                    row.full_name(),
                    v.id,
                    v.side.as_str()
                ));
            }
            None => {
                // closest vertex: most agreeing entries
                let score = |s: &Signature| {
                    s.labels
                        .iter()
                        .zip(&row.labels)
                        .filter(|(a, b)| a == b)
                        .count()
                        + usize::from(s.c == row.c)
                };
                let mut msg = format!(
                    "row {}: expected {}",
                    row.full_name(),
                    render(&row.labels, &row.c)
                );
                if let Some(v) = m.vertices.iter().max_by_key(|v| score(&v.signature)) {
                    let s = &v.signature;
                    let _ = write!(
                        msg,
                        "; closest computed {} = {}",
                        v.id,
                        render(&s.labels, &s.c)
                    );
                    let mut differs: Vec<String> = s
                        .labels
                        .iter()
                        .zip(&row.labels)
                        .enumerate()
                        .filter(|(_, (a, b))| a != b)
                        .map(|(i, _)| format!("n{}", i + 1))
                        .collect();
                    if s.c != row.c {
                        differs.push("c".into());
                    }
                    let _ = write!(msg, "; differs in {}", differs.join(", "));
                }
                mismatches.push(msg);
            }
        }
    }
    for v in m.vertices.iter().filter(|v| !used[v.id]) {
        mismatches.push(format!(
            "vertex {} ({}) = {} has no table row",
            v.id,
            v.coset.tag(),
            render(&v.signature.labels, &v.signature.c)
        ));
    }
    Ok(GoldenDiff {
        total: rows.len(),
        matched,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplet::{build_multiplet, AlgebraTag};

    fn m(i: usize) -> LinForm {
        LinForm::indeterminate(ARITY, i)
    }

    #[test]
    fn shorthand_expansion() {
        assert_eq!(parse_label("m4", 1).unwrap(), m(4));
        assert_eq!(parse_label("m34", 1).unwrap(), &m(3) + &m(4));
        assert_eq!(parse_label("m4,6", 1).unwrap(), &m(4) + &m(6));
        assert_eq!(
            parse_label("m24,6", 1).unwrap(),
            &(&(&m(2) + &m(3)) + &m(4)) + &m(6)
        );
        assert_eq!(
            parse_label("m15", 1).unwrap(),
            (1..=5).fold(LinForm::zero(6), |a, i| &a + &m(i))
        );
        for bad in ["x3", "m", "m43", "m7", "m123"] {
            assert!(parse_label(bad, 1).is_err(), "{bad}");
        }
    }

    #[test]
    fn sum_parsing() {
        let f = parse_sum("-m1+m3+2m4+2m5+m6", 1).unwrap();
        assert_eq!(
            f,
            LinForm::new(int(0), [-1, 0, 1, 2, 2, 1].map(int).to_vec())
        );
        assert!(parse_sum("", 1).is_err());
        assert!(parse_sum("m1+q", 1).is_err());
    }

    #[test]
    fn embedded_table_shape() {
        let rows = so12_rows();
        assert_eq!(rows.len(), 32);
        let chi0 = &rows[0];
        assert_eq!(chi0.full_name(), "chi_0^-");
        assert_eq!(
            chi0.c,
            LinForm::new(int(0), [1, 2, 3, 4, 2, 3].map(int).to_vec()).scale(&rat(-1, 2))
        );
        assert_eq!(
            rows[1].labels,
            chi0.labels.iter().rev().cloned().collect::<Vec<_>>()
        );
        assert_eq!(rows[1].c, -&chi0.c);
    }

    #[test]
    fn computed_multiplet_matches_table() {
        let mult = build_multiplet(6, &Labels::Symbolic, AlgebraTag::SoStar).unwrap();
        let d = diff(&mult, &so12_rows()).unwrap();
        assert!(d.passed(), "{:#?}", d.mismatches);
        assert_eq!(d.matched, 32);
    }

    #[test]
    fn tampered_row_is_reported() {
        let text = SO12_MAIN_MULTIPLET.replace("m1+2m2+3m3+2m4+m6", "m1+2m2+3m3+2m4+2m6");
        let rows = parse(&text).unwrap();
        let mult = build_multiplet(6, &Labels::Symbolic, AlgebraTag::SoStar).unwrap();
        let d = diff(&mult, &rows).unwrap();
        assert!(!d.passed());
        assert_eq!(d.matched, 30);
        assert!(d
            .mismatches
            .iter()
            .any(|s| s.starts_with("row chi_c^-") && s.contains("differs in c")));
    }

    #[test]
    fn malformed_fixture() {
        assert!(matches!(
            parse("0 | m1 m2 | m1"),
            Err(Error::Fixture { line: 1, .. })
        ));
        assert!(matches!(
            parse("\n0 | m1 m2 m3 m4 m5"),
            Err(Error::Fixture { line: 2, .. })
        ));
    }
}
