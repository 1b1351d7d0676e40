//! Typed domain errors shared by the whole kernel.
//!
//! Every fallible operation returns [`DomainError`]; the CLI maps these to
//! exit code 1 (parse/validation problems are a separate layer mapping to
//! exit code 2). Error payloads carry enough context to be actionable
//! without re-running the computation.

use thiserror::Error;

/// Errors raised by the geometric and algebraic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    /// An inequality system defines the empty set where a polyhedron was required.
    #[error("empty polyhedron: the inequality system is infeasible{}", detail(.0))]
    EmptyPolyhedron(String),

    /// A polyhedron's recession cone differs from the one the caller required.
    #[error("recession cone mismatch: {0}")]
    RecessionMismatch(String),

    /// A support-function query in a direction where the polyhedron is unbounded below.
    #[error("support function unbounded: weight pairs negatively with a recession direction")]
    Unbounded,

    /// A cone that must be pointed (no line through the origin) is not.
    #[error("cone is not pointed{}", detail(.0))]
    NotPointed(String),

    /// An operation requiring integral vertices met a fractional one.
    #[error("polyhedron has non-integral vertices{}", detail(.0))]
    NonIntegralVertices(String),

    /// Generator weights fail to span the weight space.
    #[error("weights are rank-deficient: they span rank {found} of {ambient}")]
    RankDeficient {
        /// Rank actually spanned by the weights.
        found: usize,
        /// Ambient lattice rank.
        ambient: usize,
    },

    /// Evaluation weight lies outside the weight cone.
    #[error("weight lies outside the weight cone")]
    WeightOutsideCone,

    /// A closure piece was requested at a weight outside the dilated Newton polyhedron.
    #[error("weight lies outside the {e}-fold dilated Newton polyhedron")]
    WeightOutsideDilatedNewton {
        /// The power whose closure piece was requested.
        e: u32,
    },

    /// Degree of a divisor was requested on the affine line.
    #[error("divisor degree is only defined on the projective line")]
    DegreeOnAffineCurve,

    /// The point at infinity appeared in affine-line data.
    #[error("the point at infinity only exists on the projective line")]
    InfinityOnAffineLine,

    /// An ideal generator does not lie in the ambient algebra.
    #[error("generator {index} does not lie in the ambient algebra")]
    GeneratorNotInAlgebra {
        /// Zero-based index of the offending generator.
        index: usize,
    },

    /// The divisor fails the properness conditions.
    #[error("polyhedral divisor is not proper: {0}")]
    NotProper(String),

    /// A normality-module operation was called on a projective-line algebra.
    #[error("this operation requires the affine line")]
    NotAffine,

    /// Rank-1 presentation dispatch found weights of mixed sign where a single
    /// sign class was required, or a zero weight.
    #[error("rank-1 presentation mode mismatch: {0}")]
    MixedSignsInParabolicMode(String),

    /// The ambient algebra is not the orthant-graded polynomial ring required here.
    #[error("ambient algebra is not the orthant-graded polynomial ring: {0}")]
    WrongAmbient(String),

    /// An operation restricted to rank-1 weight lattices got another rank.
    #[error("operation requires weight rank 1, got {0}")]
    WrongRank(usize),

    /// The exact power enumeration would exceed the configured tuple cap.
    #[error("power enumeration needs {needed} generator tuples, above the cap {cap}")]
    TupleCapExceeded {
        /// Tuples the enumeration would have to visit.
        needed: u64,
        /// Configured cap.
        cap: u64,
    },

    /// A certified enumeration window failed verification after the retry budget.
    #[error("window verification failed after {retries} enlargements: {message}")]
    VerificationFailed {
        /// Description of the failing invariant.
        message: String,
        /// Retries performed before giving up.
        retries: u32,
    },

    /// Catch-all for inconsistent inputs detected mid-computation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

fn detail(s: &str) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!(" ({s})")
    }
}

/// Result alias used across the kernel.
pub type Result<T> = std::result::Result<T, DomainError>;
