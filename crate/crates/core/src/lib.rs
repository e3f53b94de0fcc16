//! Exact construction of the main multiplets of elementary representations of
//! `so*(2n)` (`n` even) and of `so(6,6)`, induced from the maximal parabolic
//! with Levi factor `su*(n)` (resp. `sl(6,R)`).
//!
//! A multiplet is computed from the `D_n` root system alone: its vertices are
//! the `2^{n-1}` classes of `W(D_n)/S_n` acting on `Λ+ρ`, its arrows are the
//! BGG embeddings through noncompact roots, and Knapp–Stein duality pairs
//! `{n; c}` with `{n*; −c}`. All arithmetic is exact; with symbolic labels
//! every entry is a rational linear form in `m1..mn`.
//!
//! ```
//! use sostar_core::{build_multiplet, AlgebraTag, Labels};
//!
//! let m = build_multiplet(6, &Labels::Symbolic, AlgebraTag::SoStar).unwrap();
//! assert_eq!(m.vertices.len(), 32);
//! let chi0 = m.vertex_by_name("chi_0^-").unwrap();
//! assert_eq!(chi0.signature.c.to_string(), "-1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6)");
//! ```

pub mod cli_io;
pub mod error;
pub mod exactlin;
pub mod multiplet;
pub mod rootsys;
pub mod weylcoset;

pub use error::{Error, Result};
pub use exactlin::{GenericOrdering, LinForm, Rational};
pub use multiplet::{
    build_multiplet, weyl_dim, AlgebraTag, BggEdge, ErVertex, Multiplet, Side, Signature,
};
pub use rootsys::{Labels, Root, RootKind, RootSystemD, WeightVec};
pub use weylcoset::{brute_force_group, coset_reps, CosetRep, SignedPerm};
