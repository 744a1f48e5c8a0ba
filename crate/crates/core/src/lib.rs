//! Group-theoretic machinery for abstract regular and chiral polytopes.
//!
//! Everything here works on finitely presented groups: a [`Presentation`] is
//! enumerated into a [`CosetTable`] by Todd-Coxeter coset enumeration, which
//! yields faithful permutation representations. On top of that sit stabilizer
//! chains, string C-group verification, flatness and tightness analysis, the
//! standard polytope families, and rotation-group tools for chiral polytopes.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod chiral;
pub mod constructions;
pub mod coset;
pub mod group;
pub mod perm;
pub mod presentation;
pub mod stringc;

pub use analysis::{AnalysisReport, FlagCount};
pub use chiral::{BoundQuery, ChiralBound, ChiralReport, RotationGroup, SectionFacts, SectionKind};
pub use constructions::{Built, Construction, ConstructionError, Family, FamilySpec, TorusKind};
pub use coset::{enumerate_cosets, CosetTable, EnumerationError, DEFAULT_MAX_COSETS};
pub use group::FiniteGroup;
pub use perm::{Permutation, StabilizerChain};
pub use presentation::{GeneratorWord, Kind, Letter, Presentation, SchlafliEntry};
pub use stringc::{CGroupVerdict, StringGroup};
