//! Classification of unitary highest weight Harish-Chandra modules with
//! trivial infinitesimal character, for the seven families of irreducible
//! Hermitian symmetric pairs of noncompact type.
//!
//! The library is organized around a chain of exact combinatorial data:
//!
//! * [`rootsys`] builds simple root systems A–E7 in Bourbaki coordinates
//!   over exact rationals, with pairings, fundamental weights, and
//!   subsystem generation/classification.
//! * [`weyl`] represents Weyl group elements as orthogonal rational
//!   matrices and derives lengths, inversion sets, reduced words, and
//!   longest (parabolic) elements.
//! * [`hermitian`] holds the pair catalog, the poset of positive
//!   noncompact roots, its lower order ideals (equivalently, minimal
//!   length coset representatives, equivalently generalized Young
//!   diagrams), and the highest-weight evaluation attached to each ideal.
//! * [`unitarity`] decides unitarity by the subdiagram criterion, with an
//!   independent cross-check through last reduction points, and computes
//!   Gelfand–Kirillov dimensions, associated-variety indices, and
//!   per-cell counts.
//! * [`schubert`] tests smoothness and rational smoothness of the
//!   attached Schubert varieties, including the type-A pattern oracle
//!   and the simply laced cover of the B/C pairs.
//! * [`cli`] exposes all of the above as the `hhcw` command line tool.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod cli;
pub mod hermitian;
pub mod linalg;
pub mod rootsys;
pub mod schubert;
pub mod unitarity;
pub mod weyl;

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("seed vector is not a root of the ambient system")]
    SeedNotARoot,
    #[error("subsystem is not of recognized Cartan type")]
    UnrecognizedType,
    #[error("simple root index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("unknown Hermitian pair `{0}`")]
    UnknownPair(String),
    #[error("rank out of range for pair `{0}`")]
    RankOutOfRange(String),
    #[error("root does not lie in the noncompact positive set")]
    NotInPPlus,
    #[error("root set is not a lower order ideal")]
    NotAnIdeal,
    #[error("element is not a minimal length coset representative")]
    NotMinimalCosetRep,
    #[error("weight does not belong to a unitary module")]
    NotUnitary,
    #[error("cell index {0} out of range 0..={1}")]
    KOutOfRange(usize, usize),
    #[error("operation requires a type A pair")]
    WrongType,
    #[error("pair is already simply laced; no cover defined")]
    NotCovered,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
