//! B-orbit combinatorics on GL(2n)/O(2n), the double cover GL(2n)/SO(2n),
//! and the exact integer computation of its graded Chow group.
//!
//! The library is organized bottom-up:
//!
//! * [`perm`] — involutions in the symmetric group, Coxeter length,
//!   rank tables and the Bruhat comparison primitive;
//! * [`linalg`] — exact rational elimination and Smith normal form over
//!   arbitrary-precision integers;
//! * [`orbit`] — orbits, codimension (closed formula plus a stabilizer
//!   dimension oracle), closure order, strata, and the orbit graph;
//! * [`cover`] — the orbit-level double cover: splitting, component
//!   groups, the stratum fibrations and their pullbacks;
//! * [`chow`] — the generators/relations presentation of the graded Chow
//!   group, reduced per degree by Smith normal form, with a
//!   machine-checkable certificate;
//! * [`export`] — deterministic DOT and JSON serializations of orbit
//!   graphs;
//! * [`verify`] — the cross-module invariant suite behind `verify`.

pub mod chow;
pub mod cover;
pub mod export;
pub mod linalg;
pub mod orbit;
pub mod perm;
pub mod verify;

pub use chow::{
    base_chow_group, build_presentation, certificate, chow_group, Certificate, ChowGenerator,
    ChowPresentation, ChowRelation, GeneratorLabel, GradedAbelianGroup, RelationReason,
};
pub use cover::{
    fiber_dimension, fibration_image, fibration_pullback, orbit_splits,
    stabilizer_component_order, survivor_involution, CoverLift, FibrationSpec,
};
pub use export::{export_dot, export_json, parse_graph_json, DotStyle};
pub use linalg::{rational_nullity, smith_normal_form, SmithNormalForm};
pub use orbit::{
    build_orbit_graph, closure_contains, enumerate_orbits, orbit_codimension,
    orbit_codimension_oracle, representative_form, strata_summary, stratum_index, Edge,
    GraphOptions, Orbit, OrbitGraph, RepresentativeForm, StratumSummary,
};
pub use perm::{
    bruhat_leq, coxeter_length, cycle_stats, enumerate_involutions, rank_table, Involution,
    RankTable,
};

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a permutation of 1..={m}: {detail}")]
    NotAPermutation { m: usize, detail: String },
    #[error("not an involution: w(w({k})) = {image} != {k}")]
    NotAnInvolution { k: usize, image: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("size 2n = {size} exceeds the cap {cap}; pass the override to proceed")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("fibration undefined: w(2n) = 2n, the orbit lies in the last stratum")]
    FibrationUndefined,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
