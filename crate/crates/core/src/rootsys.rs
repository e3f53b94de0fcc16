//! The `D_n` root system in the orthonormal ε-basis.
//!
//! Positive roots are `εi − εj` (compact) and `εi + εj` (noncompact) for
//! `i < j`. Simple roots are `αi = εi − εi+1` for `i < n` and
//! `αn = εn−1 + εn`, so the last Dynkin label `mn` sits on the only
//! noncompact node. With that numbering `−½·Σ(Λ+ρ)i` comes out as
//! `−½(m1+2m2+3m3+4m4+2m5+3m6)` at rank 6.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{int, rat, GenericOrdering, LinForm, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    /// `εi − εj`, compact.
    AlphaDiff,
    /// `εi + εj`, noncompact.
    BetaSum,
}

/// A positive root of `D_n`, indices 1-based with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub kind: RootKind,
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn alpha(i: usize, j: usize) -> Root {
        assert!(0 < i && i < j, "root indices must satisfy 0 < i < j");
        Root {
            kind: RootKind::AlphaDiff,
            i,
            j,
        }
    }

    pub fn beta(i: usize, j: usize) -> Root {
        assert!(0 < i && i < j, "root indices must satisfy 0 < i < j");
        Root {
            kind: RootKind::BetaSum,
            i,
            j,
        }
    }

    pub fn is_compact(&self) -> bool {
        self.kind == RootKind::AlphaDiff
    }

    /// Integer ε-coordinates in a space of dimension `n`.
    pub fn vector(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        v[self.i - 1] = 1;
        v[self.j - 1] = match self.kind {
            RootKind::AlphaDiff => -1,
            RootKind::BetaSum => 1,
        };
        v
    }

    /// The `jk` part of an arrow label such as `6_{56}`.
    pub fn index_tag(&self) -> String {
        if self.j < 10 {
            format!("{}{}", self.i, self.j)
        } else {
            format!("{},{}", self.i, self.j)
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::AlphaDiff => write!(f, "alpha_{}", self.index_tag()),
            RootKind::BetaSum => write!(f, "beta_{}", self.index_tag()),
        }
    }
}

/// ε-basis coordinates of a weight (usually some `w(Λ+ρ)`), one form per axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(Vec<LinForm>);

impl WeightVec {
    pub fn new(coords: Vec<LinForm>) -> Self {
        WeightVec(coords)
    }

    pub fn coords(&self) -> &[LinForm] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<LinForm> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn arity(&self) -> usize {
        self.0.first().map_or(0, LinForm::arity)
    }

    pub fn sum(&self) -> LinForm {
        self.0
            .iter()
            .fold(LinForm::zero(self.arity()), |acc, x| &acc + x)
    }

    /// `(x, α)` under the standard inner product.
    pub fn inner(&self, root: &Root) -> LinForm {
        let xi = &self.0[root.i - 1];
        let xj = &self.0[root.j - 1];
        match root.kind {
            RootKind::AlphaDiff => xi - xj,
            RootKind::BetaSum => xi + xj,
        }
    }

    /// `⟨x, α∨⟩ = 2(x, α)/(α, α)`; every `D_n` root has `(α, α) = 2`.
    pub fn pairing(&self, root: &Root) -> LinForm {
        self.inner(root)
    }

    /// `s_α(x) = x − ⟨x, α∨⟩ α`.
    pub fn reflect(&self, root: &Root) -> WeightVec {
        let mut out = self.0.clone();
        let (a, b) = (root.i - 1, root.j - 1);
        match root.kind {
            RootKind::AlphaDiff => out.swap(a, b),
            RootKind::BetaSum => {
                out[a] = -&self.0[b];
                out[b] = -&self.0[a];
            }
        }
        WeightVec(out)
    }

    pub fn eval_at(&self, labels: &[u64]) -> Result<Vec<Rational>> {
        self.0.iter().map(|x| x.eval_at(labels)).collect()
    }
}

/// Dynkin labels `m1..mn`, either as free indeterminates or fixed positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Labels {
    Symbolic,
    Numeric(Vec<u64>),
}

impl Labels {
    pub fn is_symbolic(&self) -> bool {
        matches!(self, Labels::Symbolic)
    }

    /// Label `m_index` (1-based) as a form of the given arity.
    fn form(&self, arity: usize, index: usize) -> LinForm {
        match self {
            Labels::Symbolic => LinForm::indeterminate(arity, index),
            Labels::Numeric(v) => LinForm::constant(arity, int(v[index - 1] as i64)),
        }
    }

    pub fn validate(&self, rank: usize) -> Result<()> {
        if let Labels::Numeric(v) = self {
            if v.len() != rank {
                return Err(Error::LabelCount {
                    expected: rank,
                    got: v.len(),
                });
            }
            if let Some(pos) = v.iter().position(|&m| m == 0) {
                return Err(Error::DegenerateLabel { index: pos + 1 });
            }
            if v.iter().any(|&m| m > i64::MAX as u64) {
                return Err(Error::Invariant("label does not fit in i64".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystemD {
    rank: usize,
    positive_roots: Vec<Root>,
    simple_roots: Vec<Root>,
    rho: WeightVec,
}

impl RootSystemD {
    /// Root data of `D_n` for the `so*(2n)` conformal class (`n` even, `n >= 4`).
    pub fn build(n: usize) -> Result<Self> {
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::UnsupportedRank(n));
        }
        let pairs = || (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)));
        let positive_roots: Vec<Root> = pairs()
            .map(|(i, j)| Root::alpha(i, j))
            .chain(pairs().map(|(i, j)| Root::beta(i, j)))
            .collect();

        let mut simple_roots: Vec<Root> = (1..n).map(|i| Root::alpha(i, i + 1)).collect();
        simple_roots.push(Root::beta(n - 1, n));

        // half the sum of the positive roots
        let mut twice_rho = vec![0i64; n];
        for r in &positive_roots {
            for (acc, c) in twice_rho.iter_mut().zip(r.vector(n)) {
                *acc += c;
            }
        }
        let rho = WeightVec(
            twice_rho
                .into_iter()
                .map(|c| LinForm::constant(n, rat(c, 2)))
                .collect(),
        );

        Ok(RootSystemD {
            rank: n,
            positive_roots,
            simple_roots,
            rho,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of label indeterminates; always equal to the rank.
    pub fn arity(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn compact_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive_roots.iter().filter(|r| r.is_compact())
    }

    pub fn noncompact_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive_roots.iter().filter(|r| !r.is_compact())
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn rho(&self) -> &WeightVec {
        &self.rho
    }

    /// The unique `Λ+ρ` with `⟨Λ+ρ, αi∨⟩ = mi` for every simple root.
    pub fn lambda_plus_rho(&self, labels: &Labels) -> Result<WeightVec> {
        labels.validate(self.rank)?;
        let n = self.rank;
        let k = self.arity();
        let half = rat(1, 2);
        let m = |i| labels.form(k, i);

        let mut x = vec![LinForm::zero(k); n];
        x[n - 1] = (&m(n) - &m(n - 1)).scale(&half);
        x[n - 2] = (&m(n) + &m(n - 1)).scale(&half);
        for i in (0..n - 2).rev() {
            x[i] = &m(i + 1) + &x[i + 1];
        }
        let x = WeightVec(x);

        for root in &self.positive_roots {
            if x.pairing(root).generic_sign() != GenericOrdering::Greater {
                return Err(Error::Invariant(format!(
                    "Λ+ρ is not dominant regular on {root}"
                )));
            }
        }
        Ok(x)
    }

    /// Real dimension of `so*(2n)`.
    pub fn real_dimension(&self) -> usize {
        self.rank * (2 * self.rank - 1)
    }

    /// Real dimension of the noncompact part `p` of the Cartan decomposition.
    pub fn noncompact_dimension(&self) -> usize {
        self.rank * (self.rank - 1)
    }

    pub fn split_rank(&self) -> usize {
        self.rank / 2
    }

    /// `dim N±` of the `j`-th maximal parabolic, whose Levi factor is
    /// `so*(2n−4j) ⊕ su*(2j)`.
    pub fn maximal_parabolic_nilradical_dim(&self, j: usize) -> Option<usize> {
        let n = self.rank;
        (1..=self.split_rank())
            .contains(&j)
            .then(|| j * (4 * n - 6 * j - 1))
    }
}

/// Reflect an integer ε-vector (roots, oracle weights) in a root.
pub fn reflect_integer(v: &[i64], root: &Root) -> Vec<i64> {
    let a = root.vector(v.len());
    let ip: i64 = v.iter().zip(&a).map(|(x, y)| x * y).sum();
    // (a, a) = 2 for every root
    v.iter().zip(&a).map(|(x, y)| x - ip * y).collect()
}
