//! JSON document for a multiplet.
//!
//! ```text
//! { algebra, rank, labels: "symbolic" | [m1, ...],
//!   vertices: [{ id, name, labels: [form], c: form, d: form | null,
//!                side: "minus" | "plus", flags: {...}, dim_e: "n" | null }],
//!   edges:    [{ from, to, root: { kind: "beta" | "alpha", i, j },
//!                m: form, reduced, label: "6_{56}" | null }],
//!   ks_pairs: [[minus_id, plus_id]] }
//! ```
//!
//! A form is `{ coeffs: ["c0", "c1", ..., "ck"], text }` with the constant
//! first and each entry an integer or `p/q`. `coeffs` is authoritative; `text`
//! is the canonical rendering. Field order is fixed, so output is byte-stable.

use serde::{Deserialize, Serialize};

use super::config::EdgeSet;
use crate::error::Result;
use crate::exactlin::{LinForm, Rational};
use crate::multiplet::{BggEdge, ErVertex, Multiplet};
use crate::rootsys::{Labels, Root, RootKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub coeffs: Vec<String>,
    pub text: String,
}

impl From<&LinForm> for FormJson {
    fn from(f: &LinForm) -> Self {
        FormJson {
            coeffs: f.coeff_vector().iter().map(ToString::to_string).collect(),
            text: f.to_string(),
        }
    }
}

impl FormJson {
    pub fn to_form(&self) -> Option<LinForm> {
        let v = self
            .coeffs
            .iter()
            .map(|s| s.parse::<Rational>().ok())
            .collect::<Option<Vec<_>>>()?;
        LinForm::from_coeff_vector(&v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelsJson {
    Symbolic(String),
    Numeric(Vec<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsJson {
    pub has_finite_dim_subrep: bool,
    pub has_discrete_series_metadata: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub name: String,
    pub labels: Vec<FormJson>,
    pub c: FormJson,
    pub d: Option<FormJson>,
    pub side: String,
    pub flags: FlagsJson,
    pub dim_e: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootJson {
    pub kind: String,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    pub root: RootJson,
    pub m: FormJson,
    pub reduced: bool,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipletJson {
    pub algebra: String,
    pub rank: usize,
    pub labels: LabelsJson,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    pub ks_pairs: Vec<[usize; 2]>,
}

fn root_json(r: &Root) -> RootJson {
    RootJson {
        kind: match r.kind {
            RootKind::AlphaDiff => "alpha",
            RootKind::BetaSum => "beta",
        }
        .into(),
        i: r.i,
        j: r.j,
    }
}

fn vertex_json(v: &ErVertex) -> VertexJson {
    VertexJson {
        id: v.id,
        name: v.signature.name.clone(),
        labels: v.signature.labels.iter().map(FormJson::from).collect(),
        c: (&v.signature.c).into(),
        d: v.signature.d.as_ref().map(FormJson::from),
        side: v.side.as_str().into(),
        flags: FlagsJson {
            has_finite_dim_subrep: v.flags.has_finite_dim_subrep,
            has_discrete_series_metadata: v.flags.has_discrete_series_metadata,
        },
        dim_e: v.dim_e.as_ref().map(ToString::to_string),
    }
}

fn edge_json(e: &BggEdge) -> EdgeJson {
    EdgeJson {
        from: e.from,
        to: e.to,
        root: root_json(&e.root),
        m: (&e.m).into(),
        reduced: e.reduced,
        label: e.label(),
    }
}

/// Validates the multiplet first; an inconsistent one is never serialized.
pub fn to_document(m: &Multiplet, edges: EdgeSet) -> Result<MultipletJson> {
    m.validate()?;
    Ok(MultipletJson {
        algebra: m.algebra.as_str().into(),
        rank: m.rank,
        labels: match &m.labels {
            Labels::Symbolic => LabelsJson::Symbolic("symbolic".into()),
            Labels::Numeric(v) => LabelsJson::Numeric(v.clone()),
        },
        vertices: m.vertices.iter().map(vertex_json).collect(),
        edges: m
            .edges
            .iter()
            .filter(|e| edges == EdgeSet::All || e.reduced)
            .map(edge_json)
            .collect(),
        ks_pairs: m.ks_pairs.iter().map(|&(a, b)| [a, b]).collect(),
    })
}

pub fn emit_json(m: &Multiplet, edges: EdgeSet) -> Result<Vec<u8>> {
    let doc = to_document(m, edges)?;
    let mut out = serde_json::to_vec_pretty(&doc).expect("multiplet document serializes");
    out.push(b'\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplet::{build_multiplet, AlgebraTag};

    #[test]
    fn chi0_vertex_text() {
        let m = build_multiplet(6, &Labels::Symbolic, AlgebraTag::SoStar).unwrap();
        let doc = to_document(&m, EdgeSet::Reduced).unwrap();
        let v = doc.vertices.iter().find(|v| v.name == "chi_0^-").unwrap();
        assert_eq!(v.c.text, "-1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6)");
        assert_eq!(v.c.coeffs, ["0", "-1/2", "-1", "-3/2", "-2", "-1", "-3/2"]);
        assert_eq!(v.side, "minus");
        assert!(v.flags.has_finite_dim_subrep);

        let e = doc.edges.iter().find(|e| e.from == v.id).unwrap();
        assert_eq!(e.label.as_deref(), Some("6_{56}"));
        assert_eq!(
            e.root,
            RootJson {
                kind: "beta".into(),
                i: 5,
                j: 6
            }
        );
    }

    #[test]
    fn refuses_invalid_multiplet() {
        let mut m = build_multiplet(4, &Labels::Symbolic, AlgebraTag::SoStar).unwrap();
        m.vertices.clear();
        assert!(emit_json(&m, EdgeSet::Reduced).is_err());
    }

    #[test]
    fn form_round_trip() {
        let m = build_multiplet(6, &Labels::Symbolic, AlgebraTag::SoStar).unwrap();
        for v in &m.vertices {
            assert_eq!(
                FormJson::from(&v.signature.c).to_form(),
                Some(v.signature.c.clone())
            );
        }
    }
}
