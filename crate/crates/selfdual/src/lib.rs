//! Construction and search of binary self-dual codes.
//!
//! A group-ring element v over a finite group G of order n maps to an n×n
//! binary matrix σ(v); whenever σ(v)σ(v)ᵀ = Iₙ, the matrix [Iₙ | σ(v)]
//! generates a self-dual code of length 2n. This crate builds those codes,
//! certifies their minimum distance and partial weight spectra by enumerating
//! two disjoint information sets, classifies weight enumerators of lengths 68
//! and 72 into the standard parameterized forms, searches coefficient space
//! with a seeded genetic algorithm or an exhaustive linear scan, and keeps a
//! registry of known enumerator parameters to flag new ones.
//!
//! Start with the `examples/` directory: each major capability has a runnable
//! example. A thin `selfdual` binary exposes the same operations as
//! subcommands.

pub mod cli;
pub mod code;
pub mod gf2;
pub mod group;
pub mod registry;
pub mod search;

pub use code::{
    extremal_bound, CodeType, EnumeratorClass, FormParams, PartialWeightSpectrum, SelfDualCode,
};
pub use gf2::{BitMatrix, BitWord};
pub use group::{FiniteGroup, GroupRingElement};
pub use registry::{NewnessVerdict, Registry, ResultRecord};
pub use search::{GaParams, SearchOutcome};
