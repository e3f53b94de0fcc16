//! `--verify`: independent checks of a built multiplet against the
//! brute-force Weyl group, the signature table, and the structural claims.

use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactlin::int;
use crate::multiplet::golden::{self, GoldenRow};
use crate::multiplet::{build_multiplet, Multiplet};
use crate::rootsys::{Labels, RootSystemD};
use crate::weylcoset::{
    brute_force_group, coset_classes, coset_reps, orbit_classes, ORACLE_MAX_RANK,
};

use super::config::RunConfig;

/// Labels used to pick a regular integer test weight in symbolic runs.
const PROBE_LABELS: [u64; 8] = [2, 7, 1, 8, 2, 8, 1, 8];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// `None` for informational lines.
    pub passed: Option<bool>,
    pub detail: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed != Some(false))
    }

    fn push(&mut self, name: &str, passed: bool, detail: Vec<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: Some(passed),
            detail,
        });
    }

    fn info(&mut self, name: &str, detail: Vec<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: None,
            detail,
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.passed {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "INFO",
            };
            let (first, rest) = c
                .detail
                .split_first()
                .map_or(("", &[][..]), |(a, b)| (a.as_str(), b));
            writeln!(f, "{tag} {}: {first}", c.name)?;
            for line in rest {
                writeln!(f, "     {line}")?;
            }
        }
        writeln!(
            f,
            "{}",
            if self.passed() {
                "all checks passed"
            } else {
                "verification FAILED"
            }
        )
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `2·(Λ+ρ)` at the run's labels, or at fixed probe labels in symbolic mode.
fn probe_weight(rs: &RootSystemD, labels: &Labels) -> Result<Vec<i64>> {
    let ls = match labels {
        Labels::Numeric(v) => v.clone(),
        Labels::Symbolic => PROBE_LABELS[..rs.rank()].to_vec(),
    };
    let x = rs.lambda_plus_rho(&Labels::Numeric(ls.clone()))?;
    x.eval_at(&ls)?
        .into_iter()
        .map(|r| {
            (r * int(2))
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Invariant("probe weight overflows i64".into()))
        })
        .collect()
}

/// Run every check. `golden_text` replaces the built-in rank-6 table.
pub fn run_verify(cfg: &RunConfig, golden_text: Option<&str>) -> Result<VerifyReport> {
    let n = cfg.rank;
    if n > ORACLE_MAX_RANK {
        return Err(Error::OracleUnavailable(n));
    }
    let rs = RootSystemD::build(n)?;
    let mut report = VerifyReport::default();

    let group = brute_force_group(n)?;
    let expect_order = (1 << (n - 1)) * factorial(n);
    report.push(
        "weyl group order",
        group.len() == expect_order,
        vec![format!(
            "|W(D{n})| = {} (expected {expect_order})",
            group.len()
        )],
    );

    let x = probe_weight(&rs, &cfg.labels)?;
    let reps = coset_reps(n)?;
    let orbit = orbit_classes(&group, &x);
    let cosets = coset_classes(&reps, &x);
    report.push(
        "orbit quotient",
        orbit.len() == 1 << (n - 1) && orbit == cosets,
        vec![format!(
            "{} classes from a {}-element group; coset construction gives {} ({})",
            orbit.len(),
            group.len(),
            cosets.len(),
            if orbit == cosets {
                "same set"
            } else {
                "sets differ"
            }
        )],
    );

    let symbolic = build_multiplet(n, &Labels::Symbolic, cfg.algebra)?;

    if n == 6 {
        let rows: Vec<GoldenRow> = match golden_text {
            Some(text) => golden::parse(text)?,
            None => golden::so12_rows(),
        };
        let d = golden::diff(&symbolic, &rows)?;
        let mut detail = vec![format!("{}/{} signatures match", d.matched, d.total)];
        detail.extend(d.mismatches.iter().cloned());
        report.push("signature table", d.passed(), detail);
    }

    report_structure(&mut report, &symbolic);

    if let Labels::Numeric(ls) = &cfg.labels {
        let numeric = build_multiplet(n, &cfg.labels, cfg.algebra)?;
        let mut bad = Vec::new();
        for (s, v) in symbolic.vertices.iter().zip(&numeric.vertices) {
            let (sl, sc) = s.signature.eval_at(ls)?;
            let (nl, nc) = v.signature.eval_at(ls)?;
            if s.coset != v.coset || sl != nl || sc != nc {
                bad.push(format!("vertex {} ({}) differs", s.id, s.coset.tag()));
            }
        }
        let mut detail = vec![format!(
            "{}/{} numeric signatures equal the symbolic ones at {:?}",
            symbolic.vertices.len() - bad.len(),
            symbolic.vertices.len(),
            ls
        )];
        detail.extend(bad.iter().cloned());
        report.push("mode consistency", bad.is_empty(), detail);
    }

    Ok(report)
}

fn report_structure(report: &mut VerifyReport, m: &Multiplet) {
    let mut ks_bad = Vec::new();
    for v in &m.vertices {
        match m.ks_partner(v.id) {
            Some(p) if p != v.id && m.ks_partner(p) == Some(v.id) => {
                let w = &m.vertices[p];
                if w.signature.labels != v.signature.conjugate_labels()
                    || w.signature.c != -&v.signature.c
                {
                    ks_bad.push(format!(
                        "{} / {}: not conjugate",
                        v.signature.name, w.signature.name
                    ));
                }
            }
            _ => ks_bad.push(format!("{}: not paired", v.signature.name)),
        }
    }
    report.push(
        "knapp-stein involution",
        ks_bad.is_empty(),
        std::iter::once(format!(
            "{} pairs, labels reversed and c negated",
            m.ks_pairs.len()
        ))
        .chain(ks_bad)
        .collect(),
    );

    let reduced: Vec<_> = m.reduced_edges().collect();
    let complex: Vec<String> = reduced
        .iter()
        .filter(|e| e.m.single_indeterminate().is_none())
        .map(|e| {
            format!(
                "{} -> {}: m = {}",
                m.vertices[e.from].signature.name, m.vertices[e.to].signature.name, e.m
            )
        })
        .collect();
    report.push(
        "arrow labels",
        complex.is_empty(),
        std::iter::once(format!(
            "{}/{} non-composite arrows carry a single m_i",
            reduced.len() - complex.len(),
            reduced.len()
        ))
        .chain(complex)
        .collect(),
    );

    let sources = m.sources();
    let sinks = m.sinks();
    let bottom = m.finite_dim_vertex().map(|v| v.id);
    let top = m
        .vertices
        .iter()
        .find(|v| v.coset.flip_set.len() == m.rank)
        .map(|v| v.id);
    let shape_ok = m.validate().is_ok()
        && sources.len() == 1
        && sinks.len() == 1
        && Some(sources[0]) == bottom
        && Some(sinks[0]) == top;
    let names = |ids: &[usize]| -> String {
        ids.iter()
            .map(|&i| m.vertices[i].signature.name.clone())
            .collect::<Vec<_>>()
            .join(", ")
    };
    report.push(
        "diagram shape",
        shape_ok,
        vec![format!(
            "acyclic and connected; sources [{}], sinks [{}]",
            names(&sources),
            names(&sinks)
        )],
    );

    let composite_simple = m
        .edges
        .iter()
        .filter(|e| !e.reduced && e.m.single_indeterminate().is_some())
        .count();
    report.info(
        "converse",
        vec![format!(
            "{composite_simple} composite arrows have a single-m_i label ({} arrows in total)",
            m.edges.len()
        )],
    );
}
