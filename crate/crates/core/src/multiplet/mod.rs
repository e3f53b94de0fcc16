//! Main multiplets: ER vertices, BGG arrows through noncompact roots, their
//! transitive reduction, and the Knapp–Stein pairing.
//!
//! Every vertex is a coset class `W(D_n)/S_n`. Its weight is the M-dominant
//! (generically decreasing) rearrangement of `w(Λ+ρ)`, and its signature is
//! read off that weight: `n_i = y_i − y_{i+1}` and `c = −½·Σ y_i`. An arrow
//! `χ(Λ) → χ(Λ−mβ)` exists when `m = ⟨Λ+ρ, β∨⟩` is a positive integer for a
//! noncompact `β`.

pub mod golden;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactlin::{rat, GenericOrdering, LinForm, Rational};
use crate::rootsys::{Labels, Root, RootSystemD, WeightVec};
use crate::weylcoset::{coset_reps, CosetRep, SignedPerm};

/// Which real form the multiplet is attached to. The graph is the same for
/// both; only the metadata differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraTag {
    /// `so*(2n)`, Levi factor `su*(n)`.
    SoStar,
    /// `so(n,n)` with Levi factor `sl(n,R)`.
    SoSplit,
}

impl AlgebraTag {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraTag::SoStar => "so-star",
            AlgebraTag::SoSplit => "so-split",
        }
    }

    /// Only `so*(2n)` has highest/lowest weight (discrete series) representations.
    pub fn has_discrete_series(self) -> bool {
        self == AlgebraTag::SoStar
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Minus,
    Plus,
}

impl Side {
    pub fn sign(self) -> char {
        match self {
            Side::Minus => '-',
            Side::Plus => '+',
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Minus => Side::Plus,
            Side::Plus => Side::Minus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Minus => "minus",
            Side::Plus => "plus",
        }
    }
}

/// `χ = {n_1, ..., n_{r-1}; c}` plus the conformal weight where it is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub name: String,
    pub labels: Vec<LinForm>,
    pub c: LinForm,
    pub d: Option<LinForm>,
}

impl Signature {
    /// Conjugation `(n_1..n_k)* = (n_k..n_1)`.
    pub fn conjugate_labels(&self) -> Vec<LinForm> {
        self.labels.iter().rev().cloned().collect()
    }

    pub fn eval_at(&self, labels: &[u64]) -> Result<(Vec<Rational>, Rational)> {
        let ls = self
            .labels
            .iter()
            .map(|f| f.eval_at(labels))
            .collect::<Result<Vec<_>>>()?;
        Ok((ls, self.c.eval_at(labels)?))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.labels.iter().map(ToString::to_string).collect();
        write!(f, "{{{}; {}}}", ls.join(", "), self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VertexFlags {
    pub has_finite_dim_subrep: bool,
    pub has_discrete_series_metadata: bool,
}

#[derive(Debug, Clone)]
pub struct ErVertex {
    pub id: usize,
    pub signature: Signature,
    /// M-dominant `w(Λ+ρ)` in the run's label mode.
    pub weight: WeightVec,
    /// Same weight with symbolic labels; drives arrow labels and sides in both modes.
    pub symbolic_weight: WeightVec,
    pub coset: CosetRep,
    /// `weight = element · (Λ+ρ)`.
    pub element: SignedPerm,
    /// Number of noncompact positive roots pairing negatively with the weight.
    pub length: usize,
    pub side: Side,
    pub flags: VertexFlags,
    /// Dimension of the finite-dimensional subspace; numeric mode, `χ0⁻` only.
    pub dim_e: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BggEdge {
    pub from: usize,
    pub to: usize,
    pub root: Root,
    pub m: LinForm,
    /// `i` when the symbolic `m` is exactly `m_i`.
    pub indeterminate: Option<usize>,
    pub reduced: bool,
}

impl BggEdge {
    /// `i_{jk}` as drawn on the arrows.
    pub fn label(&self) -> Option<String> {
        self.indeterminate
            .map(|i| format!("{}_{{{}}}", i, self.root.index_tag()))
    }
}

#[derive(Debug, Clone)]
pub struct Multiplet {
    pub algebra: AlgebraTag,
    pub rank: usize,
    pub labels: Labels,
    pub vertices: Vec<ErVertex>,
    pub edges: Vec<BggEdge>,
    /// `(minus id, plus id)`, sorted by the minus id.
    pub ks_pairs: Vec<(usize, usize)>,
}

/// Sort coordinates into generically decreasing order; returns the sorted
/// weight and `perm` with `sorted[i] = x[perm[i]]`.
pub fn canonicalize_with_perm(x: &WeightVec) -> Result<(WeightVec, Vec<usize>)> {
    let coords = x.coords();
    let mut order: Vec<usize> = Vec::with_capacity(coords.len());
    for i in 0..coords.len() {
        let mut pos = order.len();
        for (slot, &j) in order.iter().enumerate() {
            match coords[i].cmp_generic(&coords[j])? {
                GenericOrdering::Greater => {
                    pos = slot;
                    break;
                }
                GenericOrdering::Less => {}
                GenericOrdering::Equal => {
                    return Err(Error::Invariant(format!(
                        "weight is singular: coordinate {} repeats",
                        coords[i]
                    )))
                }
                GenericOrdering::Incomparable => {
                    return Err(Error::Incomparable {
                        left: coords[i].to_string(),
                        right: coords[j].to_string(),
                    })
                }
            }
        }
        order.insert(pos, i);
    }
    let sorted = order.iter().map(|&i| coords[i].clone()).collect();
    Ok((WeightVec::new(sorted), order))
}

pub fn canonicalize(x: &WeightVec) -> Result<WeightVec> {
    canonicalize_with_perm(x).map(|(y, _)| y)
}

/// Signature of a canonicalized weight. The name is left empty.
pub fn signature_of(y: &WeightVec) -> Result<Signature> {
    let coords = y.coords();
    let rank = coords.len();
    let mut labels = Vec::with_capacity(rank.saturating_sub(1));
    for (i, pair) in coords.windows(2).enumerate() {
        let n = &pair[0] - &pair[1];
        if n.generic_sign() != GenericOrdering::Greater {
            return Err(Error::NonDominant {
                index: i + 1,
                form: n.to_string(),
            });
        }
        labels.push(n);
    }
    let c = y.sum().scale(&rat(-1, 2));
    let d = (rank == 6).then(|| shift_to_d(&c));
    Ok(Signature {
        name: String::new(),
        labels,
        c,
        d,
    })
}

fn shift_to_d(c: &LinForm) -> LinForm {
    c + &LinForm::constant(c.arity(), rat(15, 2))
}

/// `d = c + 15/2`; the shift is only pinned down at rank 6.
pub fn conformal_weight_d(sig: &Signature) -> Result<LinForm> {
    let rank = sig.labels.len() + 1;
    if rank != 6 {
        return Err(Error::ConformalWeightUnavailable(rank));
    }
    Ok(shift_to_d(&sig.c))
}

/// `∏ (Λ+ρ, α) / (ρ, α)` over the positive roots.
pub fn weyl_dim(rs: &RootSystemD, labels: &[u64]) -> Result<BigInt> {
    let x = rs.lambda_plus_rho(&Labels::Numeric(labels.to_vec()))?;
    let mut num = Rational::one();
    let mut den = Rational::one();
    for root in rs.positive_roots() {
        num *= x.inner(root).constant_term();
        den *= rs.rho().inner(root).constant_term();
    }
    let q = num / den;
    if !q.is_integer() || !q.is_positive() {
        return Err(Error::Invariant(format!(
            "Weyl dimension {q} is not a positive integer"
        )));
    }
    Ok(q.to_integer())
}

fn side_of(length: usize, rank: usize, symbolic_c: &LinForm, coset: &CosetRep) -> Side {
    let noncompact = rank * (rank - 1) / 2;
    match (2 * length).cmp(&noncompact) {
        std::cmp::Ordering::Less => Side::Minus,
        std::cmp::Ordering::Greater => Side::Plus,
        std::cmp::Ordering::Equal => match symbolic_c.generic_sign() {
            GenericOrdering::Less => Side::Minus,
            GenericOrdering::Greater => Side::Plus,
            // the partner negates the complementary coordinates; exactly one
            // of the two flip sets contains index 1
            _ if coset.flip_set.contains(&1) => Side::Plus,
            _ => Side::Minus,
        },
    }
}

fn noncompact_length(rs: &RootSystemD, y: &WeightVec) -> Result<usize> {
    let mut length = 0;
    for root in rs.noncompact_roots() {
        match y.pairing(root).generic_sign() {
            GenericOrdering::Less => length += 1,
            GenericOrdering::Greater => {}
            _ => {
                return Err(Error::Invariant(format!(
                    "pairing with {root} has no definite sign"
                )))
            }
        }
    }
    Ok(length)
}

/// All BGG arrows between the given vertices. Duplicate `(from, to)` pairs keep
/// the first root in positive-root order.
pub fn bgg_edges(rs: &RootSystemD, vertices: &[ErVertex]) -> Result<Vec<BggEdge>> {
    let by_weight: HashMap<&WeightVec, usize> =
        vertices.iter().map(|v| (&v.weight, v.id)).collect();
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for v in vertices {
        for root in rs.noncompact_roots() {
            let m = v.weight.pairing(root);
            if !m.is_positive_integer_valued() {
                continue;
            }
            let target = canonicalize(&v.weight.reflect(root))?;
            let to = *by_weight.get(&target).ok_or_else(|| {
                Error::Invariant(format!(
                    "reflection of vertex {} in {root} left the multiplet",
                    v.id
                ))
            })?;
            if !seen.insert((v.id, to)) {
                continue;
            }
            let indeterminate = v.symbolic_weight.pairing(root).single_indeterminate();
            edges.push(BggEdge {
                from: v.id,
                to,
                root: *root,
                m,
                indeterminate,
                reduced: false,
            });
        }
    }
    Ok(edges)
}

type Bits = Vec<u64>;

fn bit_get(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

/// Kahn order of the graph on `0..n`; a cycle is an error.
fn topological_order(n: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for &(a, b) in edges {
        indeg[b] += 1;
        succ[a].push(b);
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for &s in &succ[v] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                ready.insert(s);
            }
        }
    }
    if order.len() != n {
        return Err(Error::Invariant("edge graph has a cycle".into()));
    }
    Ok(order)
}

/// Mark `reduced` on exactly the edges not implied by a longer path.
pub fn transitive_reduction(vertex_count: usize, edges: &mut [BggEdge]) -> Result<()> {
    let pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e.from, e.to)).collect();
    let order = topological_order(vertex_count, &pairs)?;
    let mut succ = vec![Vec::new(); vertex_count];
    for &(a, b) in &pairs {
        succ[a].push(b);
    }

    let words = vertex_count.div_ceil(64);
    let mut reach: Vec<Bits> = vec![vec![0; words]; vertex_count];
    for &v in order.iter().rev() {
        let mut acc = vec![0u64; words];
        for &s in &succ[v] {
            bit_set(&mut acc, s);
            for (a, r) in acc.iter_mut().zip(&reach[s]) {
                *a |= r;
            }
        }
        reach[v] = acc;
    }

    for e in edges.iter_mut() {
        e.reduced = !succ[e.from]
            .iter()
            .any(|&c| c != e.to && bit_get(&reach[c], e.to));
    }
    Ok(())
}

/// Pair every vertex with `{labels*; −c}`. Returns `(minus, plus)` id pairs.
pub fn ks_pairing(vertices: &[ErVertex]) -> Result<Vec<(usize, usize)>> {
    let index: HashMap<(&[LinForm], &LinForm), usize> = vertices
        .iter()
        .map(|v| ((v.signature.labels.as_slice(), &v.signature.c), v.id))
        .collect();
    let mut partner = vec![None; vertices.len()];
    for v in vertices {
        let labels = v.signature.conjugate_labels();
        let c = -&v.signature.c;
        let w = *index.get(&(labels.as_slice(), &c)).ok_or_else(|| {
            Error::Invariant(format!("vertex {} has no Knapp–Stein partner", v.id))
        })?;
        if w == v.id {
            return Err(Error::Invariant(format!(
                "vertex {} is self-conjugate",
                v.id
            )));
        }
        if vertices[w].side != v.side.opposite() {
            return Err(Error::Invariant(format!(
                "Knapp–Stein partners {} and {w} sit on the same side",
                v.id
            )));
        }
        partner[v.id] = Some(w);
    }
    let mut pairs: Vec<(usize, usize)> = vertices
        .iter()
        .filter(|v| v.side == Side::Minus)
        .map(|v| (v.id, partner[v.id].expect("every vertex was paired")))
        .collect();
    pairs.sort();
    Ok(pairs)
}

/// Build the main multiplet for `so*(2n)` (or its split relative) at the given labels.
pub fn build_multiplet(n: usize, labels: &Labels, algebra: AlgebraTag) -> Result<Multiplet> {
    let rs = RootSystemD::build(n)?;
    labels.validate(n)?;
    let seed = rs.lambda_plus_rho(labels)?;
    let symbolic_seed = rs.lambda_plus_rho(&Labels::Symbolic)?;
    let golden_rows = if n == 6 {
        Some(golden::rows_at(&golden::so12_rows(), labels)?)
    } else {
        None
    };

    let mut vertices = Vec::new();
    for coset in coset_reps(n)? {
        let (weight, perm) = canonicalize_with_perm(&coset.element.act_weight(&seed))?;
        let element = SignedPerm::permutation(perm).compose(&coset.element);
        let symbolic_weight = element.act_weight(&symbolic_seed);
        if canonicalize(&symbolic_weight)? != symbolic_weight {
            return Err(Error::Invariant(format!(
                "{}: numeric and symbolic orderings disagree",
                coset.tag()
            )));
        }
        let signature = signature_of(&weight)?;
        let length = noncompact_length(&rs, &symbolic_weight)?;
        let symbolic_c = symbolic_weight.sum().scale(&rat(-1, 2));
        let side = side_of(length, n, &symbolic_c, &coset);
        let flags = VertexFlags {
            has_finite_dim_subrep: coset.is_identity(),
            has_discrete_series_metadata: algebra.has_discrete_series()
                && coset.flip_set.len() == n,
        };
        vertices.push(ErVertex {
            id: 0,
            signature,
            weight,
            symbolic_weight,
            coset,
            element,
            length,
            side,
            flags,
            dim_e: None,
        });
    }
    vertices.sort_by(|a, b| (a.length, &a.coset.flip_set).cmp(&(b.length, &b.coset.flip_set)));

    for (id, v) in vertices.iter_mut().enumerate() {
        v.id = id;
        v.signature.name = match &golden_rows {
            Some(rows) => golden::name_for(rows, &v.signature).unwrap_or_else(|| v.coset.tag()),
            None => v.coset.tag(),
        };
        if let (true, Labels::Numeric(ls)) = (v.flags.has_finite_dim_subrep, labels) {
            v.dim_e = Some(weyl_dim(&rs, ls)?);
        }
    }

    let mut edges = bgg_edges(&rs, &vertices)?;
    transitive_reduction(vertices.len(), &mut edges)?;
    let ks_pairs = ks_pairing(&vertices)?;

    let multiplet = Multiplet {
        algebra,
        rank: n,
        labels: labels.clone(),
        vertices,
        edges,
        ks_pairs,
    };
    multiplet.validate()?;
    Ok(multiplet)
}

impl Multiplet {
    pub fn reduced_edges(&self) -> impl Iterator<Item = &BggEdge> {
        self.edges.iter().filter(|e| e.reduced)
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<&ErVertex> {
        self.vertices.iter().find(|v| v.signature.name == name)
    }

    /// `χ0⁻`: the identity coset.
    pub fn finite_dim_vertex(&self) -> Option<&ErVertex> {
        self.vertices.iter().find(|v| v.flags.has_finite_dim_subrep)
    }

    pub fn ks_partner(&self, id: usize) -> Option<usize> {
        self.ks_pairs.iter().find_map(|&(a, b)| {
            if a == id {
                Some(b)
            } else if b == id {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Vertices with no incoming reduced edge.
    pub fn sources(&self) -> Vec<usize> {
        let hit: BTreeSet<usize> = self.reduced_edges().map(|e| e.to).collect();
        (0..self.vertices.len())
            .filter(|v| !hit.contains(v))
            .collect()
    }

    /// Vertices with no outgoing reduced edge.
    pub fn sinks(&self) -> Vec<usize> {
        let hit: BTreeSet<usize> = self.reduced_edges().map(|e| e.from).collect();
        (0..self.vertices.len())
            .filter(|v| !hit.contains(v))
            .collect()
    }

    /// Structural checks every emitted multiplet must pass.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Invariant(msg));
        let n = self.vertices.len();
        if self.rank < 4 || self.rank >= 64 || n != 1 << (self.rank - 1) {
            return fail(format!("{n} vertices for rank {}", self.rank));
        }
        if self.vertices.iter().enumerate().any(|(i, v)| v.id != i) {
            return fail("vertex ids are not 0..n".into());
        }
        if self
            .vertices
            .iter()
            .filter(|v| v.flags.has_finite_dim_subrep)
            .count()
            != 1
        {
            return fail(
                "expected exactly one vertex with a finite-dimensional subrepresentation".into(),
            );
        }

        let mut partner = vec![None; n];
        for &(a, b) in &self.ks_pairs {
            if a >= n || b >= n || a == b {
                return fail(format!("bad Knapp–Stein pair ({a}, {b})"));
            }
            for (x, y) in [(a, b), (b, a)] {
                if partner[x].replace(y).is_some() {
                    return fail(format!("vertex {x} paired twice"));
                }
            }
            if self.vertices[a].side == self.vertices[b].side {
                return fail(format!("pair ({a}, {b}) does not cross sides"));
            }
        }
        if partner.iter().any(Option::is_none) {
            return fail("Knapp–Stein pairing does not cover every vertex".into());
        }

        for e in &self.edges {
            if e.from >= n || e.to >= n {
                return fail(format!("edge {} -> {} out of range", e.from, e.to));
            }
            if e.root.is_compact() {
                return fail(format!(
                    "edge {} -> {} uses compact root {}",
                    e.from, e.to, e.root
                ));
            }
            if !e.m.is_positive_integer_valued() {
                return fail(format!("edge {} -> {} has m = {}", e.from, e.to, e.m));
            }
        }

        let reduced: Vec<(usize, usize)> = self.reduced_edges().map(|e| (e.from, e.to)).collect();
        topological_order(n, &reduced)?;
        // weak connectivity
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b) in &reduced {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let root0 = find(&mut parent, 0);
        if (0..n).any(|v| find(&mut parent, v) != root0) {
            return fail("reduced arrows do not connect the multiplet".into());
        }
        Ok(())
    }
}
