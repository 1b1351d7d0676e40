//! # tvarkit: exact polyhedral-divisor calculus on rational curves
//!
//! This crate computes with multigraded affine algebras whose torus action has
//! complexity one, presented through *polyhedral divisors*: finite formal sums
//! `𝔇 = Σ Δ_z · z` over points of a rational curve (the affine or projective
//! line), with coefficients `Δ_z` that are σ-polyhedra in a rational vector
//! space. The algebra attached to such a divisor is
//!
//! ```text
//! A[C, 𝔇] = ⊕_{m ∈ σ∨ ∩ M}  H⁰(C, O_C(⌊𝔇(m)⌋)) · χᵐ
//! ```
//!
//! and the crate answers three families of questions about it, all in exact
//! arbitrary-precision rational arithmetic (no floating point anywhere):
//!
//! 1. **Normalization** ([`normalize`]): given homogeneous generators
//!    `f_i χ^{m_i}` of a subalgebra of `k(C)[M]`, compute the unique proper
//!    polyhedral divisor presenting its normalization, coefficient by
//!    coefficient, as an intersection of half-spaces `⟨m_i, v⟩ ≥ −ν_z(f_i)`.
//! 2. **Integral closure of homogeneous ideals** ([`ideal`]): for an ideal
//!    `I ⊂ A[C, 𝔇]` with homogeneous generators, compute its Newton polyhedron
//!    `P`, the Rees weight cone `ω̃` (whose height-`e` slice is `(eP) ∩ M`),
//!    and the Rees divisor `𝔇̃` whose graded pieces are the closures of all
//!    powers `I^e` at once.
//! 3. **Normality certificates** ([`normality`]): decide whether all powers of
//!    an integrally closed ideal stay integrally closed, via normality of the
//!    lattice hulls `P̃_z` recording minimal admissible degrees, with exact
//!    power-by-power comparison as the independent ground truth.
//!
//! The supporting machinery is general-purpose and exposed: a double
//! description engine over `BigRational` with canonical forms ([`cone`],
//! [`polyhedron`]), Hilbert bases and semigroup saturation ([`lattice`]),
//! and divisor/section arithmetic on the rational curves ([`curve`]).
//!
//! ## Canonical forms
//!
//! Every geometric object has a unique canonical representation (primitive
//! integer ray generators, Hermite-normal-form lattice bases, lexicographic
//! ordering, reduction modulo lineality), so equality is structural equality
//! and serialized output is byte-stable. This is what makes golden-file
//! testing of the CLI meaningful.
//!
//! ## Parallelism
//!
//! With the default `parallel` feature the enumeration-heavy kernels
//! (lattice points, Hilbert-basis sieves, per-point divisor coefficients)
//! fan out via rayon; without it everything runs on the calling thread.
//! Results are canonically sorted after collection, so both modes produce
//! identical bytes.

#![forbid(unsafe_code)]
#![warn(missing_docs)]
#![warn(clippy::all)]

pub mod arith;
pub mod lattice;
pub mod cone;
mod dd;
pub mod error;
pub mod polyhedron;
pub(crate) mod par;

pub use cone::Cone;
pub use error::DomainError;
pub use lattice::{HilbertBasis, ModuleGenerators, NormalityWitness};
pub use polyhedron::Polyhedron;

#[doc(hidden)]
pub use par::bench_internals;

/// Exact integers used throughout the kernel.
pub type Int = num::BigInt;
/// Exact rationals used throughout the kernel.
pub type Rat = num::BigRational;
