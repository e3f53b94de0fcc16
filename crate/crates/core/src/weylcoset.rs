//! `W(D_n)` as even-signed permutations, the `2^{n-1}` coset classes modulo the
//! compact `W(A_{n-1}) = S_n`, and a brute-force closure used as an oracle.

use std::collections::{BTreeSet, VecDeque};
use std::ops::Neg;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootKind, WeightVec};

/// Largest rank for which [`brute_force_group`] will run (`|W(D6)| = 23040`).
pub const ORACLE_MAX_RANK: usize = 6;

/// `(w·x)_i = signs[i] * x[perm[i]]`, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// Build from raw parts; `None` unless `perm` is a permutation, the signs
    /// are ±1, and an even number of them are negative.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Option<Self> {
        let n = perm.len();
        if signs.len() != n {
            return None;
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return None;
        }
        let w = SignedPerm { perm, signs };
        w.is_even().then_some(w)
    }

    /// Negate the 1-based coordinates in `flip_set`.
    pub fn sign_flip(n: usize, flip_set: &[usize]) -> Self {
        let mut w = SignedPerm::identity(n);
        for &i in flip_set {
            w.signs[i - 1] = -1;
        }
        w
    }

    /// Reorder coordinates so that `(w·x)_i = x[perm[i]]`.
    pub fn permutation(perm: Vec<usize>) -> Self {
        let n = perm.len();
        SignedPerm {
            perm,
            signs: vec![1; n],
        }
    }

    /// The reflection `s_α` as a signed permutation.
    pub fn reflection(n: usize, root: &Root) -> Self {
        let mut w = SignedPerm::identity(n);
        let (a, b) = (root.i - 1, root.j - 1);
        w.perm.swap(a, b);
        if root.kind == RootKind::BetaSum {
            w.signs[a] = -1;
            w.signs[b] = -1;
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_even(&self) -> bool {
        self.signs.iter().filter(|&&s| s < 0).count() % 2 == 0
    }

    /// `self ∘ other`: act by `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let signs = self
            .signs
            .iter()
            .zip(&self.perm)
            .map(|(&s, &p)| s * other.signs[p])
            .collect();
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for (i, (&p, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            perm[p] = i;
            signs[p] = s;
        }
        SignedPerm { perm, signs }
    }

    pub fn act<T>(&self, x: &[T]) -> Vec<T>
    where
        T: Clone + Neg<Output = T>,
    {
        assert_eq!(x.len(), self.rank(), "rank mismatch in Weyl action");
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| if s < 0 { -x[p].clone() } else { x[p].clone() })
            .collect()
    }

    pub fn act_weight(&self, x: &WeightVec) -> WeightVec {
        WeightVec::new(self.act(x.coords()))
    }
}

/// One class of `W(D_n) / S_n`, named by the coordinates it negates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetRep {
    pub element: SignedPerm,
    /// 1-based, sorted, even size.
    pub flip_set: Vec<usize>,
}

impl CosetRep {
    pub fn new(n: usize, flip_set: Vec<usize>) -> Self {
        CosetRep {
            element: SignedPerm::sign_flip(n, &flip_set),
            flip_set,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.flip_set.is_empty()
    }

    /// `F{5,6}`-style tag.
    pub fn tag(&self) -> String {
        let inner: Vec<String> = self.flip_set.iter().map(ToString::to_string).collect();
        format!("F{{{}}}", inner.join(","))
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) {
        Err(Error::UnsupportedRank(n))
    } else {
        Ok(())
    }
}

/// All even-size subsets of `{1..n}`, by size and then lexicographically.
pub fn coset_reps(n: usize) -> Result<Vec<CosetRep>> {
    check_rank(n)?;
    let mut sets: Vec<Vec<usize>> = (0u64..1 << n)
        .filter(|mask| mask.count_ones() % 2 == 0)
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets.into_iter().map(|s| CosetRep::new(n, s)).collect())
}

fn simple_reflections(n: usize) -> Vec<SignedPerm> {
    let mut gens: Vec<SignedPerm> = (1..n)
        .map(|i| SignedPerm::reflection(n, &Root::alpha(i, i + 1)))
        .collect();
    gens.push(SignedPerm::reflection(n, &Root::beta(n - 1, n)));
    gens
}

/// Closure of the simple reflections of `D_n` under composition.
pub fn brute_force_group(n: usize) -> Result<BTreeSet<SignedPerm>> {
    if n > ORACLE_MAX_RANK {
        return Err(Error::OracleUnavailable(n));
    }
    if n < 2 {
        return Err(Error::UnsupportedRank(n));
    }
    let gens = simple_reflections(n);
    let mut group = BTreeSet::new();
    let mut queue = VecDeque::new();
    let id = SignedPerm::identity(n);
    group.insert(id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next = g.compose(&w);
            if group.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(group)
}

/// Sort descending: the `S_n` canonical representative of an integer weight.
pub fn sort_descending(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Distinct `S_n`-classes in the orbit of `x` under `group`.
pub fn orbit_classes<'a>(
    group: impl IntoIterator<Item = &'a SignedPerm>,
    x: &[i64],
) -> BTreeSet<Vec<i64>> {
    group
        .into_iter()
        .map(|w| sort_descending(w.act(x)))
        .collect()
}

/// The same classes reached through [`coset_reps`] only.
pub fn coset_classes(reps: &[CosetRep], x: &[i64]) -> BTreeSet<Vec<i64>> {
    reps.iter()
        .map(|r| sort_descending(r.element.act(x)))
        .collect()
}
