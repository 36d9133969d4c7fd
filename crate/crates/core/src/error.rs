//! Error types shared across the library.
//!
//! Validation failures carry a stable machine-readable `code()` so that the
//! CLI (and any other consumer) can report the violated clause without string
//! matching on display text.

use thiserror::Error;

use crate::rootsys::Kind;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no simple root system of type {kind}{rank} exists")]
    InvalidType { kind: Kind, rank: usize },

    #[error("operation requires a simply laced system (A, D, E); got {kind}{rank}")]
    NotSimplyLaced { kind: Kind, rank: usize },

    #[error("operation requires type {expected}; got {kind}{rank}")]
    WrongKind {
        expected: Kind,
        kind: Kind,
        rank: usize,
    },

    #[error("points belong to different root systems")]
    SystemMismatch,

    #[error("coefficient vector {0:?} is not a root of the system")]
    NotARoot(Vec<i64>),

    #[error("root index {index} out of range (system has {count} roots)")]
    RootIndex { index: usize, count: usize },

    #[error("coordinate vector has length {got}, expected rank {expected}")]
    CoordinateLength { got: usize, expected: usize },

    #[error("reflection index {index} out of range for rank {rank}")]
    ReflectionIndex { index: usize, rank: usize },

    #[error("malformed point literal {input:?}: {reason}")]
    PointFormat { input: String, reason: String },

    #[error("root subset is not closed under the root-system structure: {reason}")]
    SubsetNotClosed { reason: String },

    #[error("orbit enumeration exceeded the configured bound {bound}")]
    OrbitBound { bound: usize },

    #[error("degree-zero case requires explicit decomposition")]
    DegreeZeroCohomology,

    #[error("decomposition contains a summand of rank zero")]
    ZeroRankSummand,

    #[error("stratum divisor must be at least 2; got {0}")]
    StratumDivisor(i64),

    #[error("parabolic choice: {0}")]
    ParabolicChoice(String),

    #[error("no universal family table for {kind}{rank}")]
    FamilyTableExcluded { kind: Kind, rank: usize },

    #[error("{0}")]
    Validation(#[from] ValidationError),
}

impl Error {
    /// Stable machine-readable tag for the error class. Validation errors
    /// expose their violated clause, everything else a fixed name.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidType { .. } => "invalid-type",
            Error::NotSimplyLaced { .. } => "not-simply-laced",
            Error::WrongKind { .. } => "wrong-kind",
            Error::SystemMismatch => "system-mismatch",
            Error::NotARoot(_) => "not-a-root",
            Error::RootIndex { .. } => "root-index",
            Error::CoordinateLength { .. } => "coordinate-length",
            Error::ReflectionIndex { .. } => "reflection-index",
            Error::PointFormat { .. } => "point-format",
            Error::SubsetNotClosed { .. } => "subset-not-closed",
            Error::OrbitBound { .. } => "orbit-bound",
            Error::DegreeZeroCohomology => "degree-zero-cohomology",
            Error::ZeroRankSummand => "zero-rank-summand",
            Error::StratumDivisor(_) => "stratum-divisor",
            Error::ParabolicChoice(_) => "parabolic-choice",
            Error::FamilyTableExcluded { .. } => "family-table-excluded",
            Error::Validation(v) => match v.code {
                ValidationCode::RankMismatch => "rank-mismatch",
                ValidationCode::DeterminantNotTrivial => "determinant-not-trivial",
                ValidationCode::OddRankAtTwoTorsion => "odd-rank-at-two-torsion",
                ValidationCode::RepeatedTwist => "repeated-twist",
                ValidationCode::UnpairedSummand => "unpaired-summand",
                ValidationCode::EvenRankAtTwoTorsion => "even-rank-at-two-torsion",
                ValidationCode::NonLiftable => "non-liftable",
                ValidationCode::MissingMandatoryOddBlock => "missing-mandatory-odd-block",
                ValidationCode::OutsideShape => "outside-shape",
                ValidationCode::GroupTagMismatch => "group-tag-mismatch",
            },
        }
    }
}

/// Violated clause of a bundle-decomposition validator.
///
/// `code` is the stable identifier; `message` restates the clause with the
/// offending data filled in.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{code}: {message}")]
pub struct ValidationError {
    pub code: ValidationCode,
    pub message: String,
}

impl ValidationError {
    pub fn new(code: ValidationCode, message: impl Into<String>) -> Self {
        ValidationError {
            code,
            message: message.into(),
        }
    }
}

/// Stable identifiers for the clauses a decomposition can violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValidationCode {
    /// Summand ranks do not add up to the declared group rank.
    RankMismatch,
    /// SL determinant constraint: the degree-zero part must sum to zero.
    DeterminantNotTrivial,
    /// Symplectic two-torsion summands must have even rank.
    OddRankAtTwoTorsion,
    /// A twist value (or its inverse) appears in more than one block.
    RepeatedTwist,
    /// A non-two-torsion summand lacks its partner of the same rank at the
    /// inverse point.
    UnpairedSummand,
    /// Orthogonal two-torsion summands must have odd rank.
    EvenRankAtTwoTorsion,
    /// The all-odd-blocks pattern admits an orthogonal structure but does not
    /// lift to the simply connected cover.
    NonLiftable,
    /// Odd orthogonal groups require the untwisted odd-rank block.
    MissingMandatoryOddBlock,
    /// The summand pattern at two-torsion points matches no regular shape.
    OutsideShape,
    /// The wrong classifier was called for the decomposition's group tag.
    GroupTagMismatch,
}

impl std::fmt::Display for ValidationCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ValidationCode::RankMismatch => "rank-mismatch",
            ValidationCode::DeterminantNotTrivial => "determinant-not-trivial",
            ValidationCode::OddRankAtTwoTorsion => "odd-rank-at-two-torsion",
            ValidationCode::RepeatedTwist => "repeated-twist",
            ValidationCode::UnpairedSummand => "unpaired-summand",
            ValidationCode::EvenRankAtTwoTorsion => "even-rank-at-two-torsion",
            ValidationCode::NonLiftable => "non-liftable",
            ValidationCode::MissingMandatoryOddBlock => "missing-mandatory-odd-block",
            ValidationCode::OutsideShape => "outside-shape",
            ValidationCode::GroupTagMismatch => "group-tag-mismatch",
        };
        f.write_str(s)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
