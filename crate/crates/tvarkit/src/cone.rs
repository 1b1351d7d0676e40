//! Rational polyhedral cones with both representations kept in sync.
//!
//! A [`Cone`] stores the generator side (extreme rays modulo lineality, plus
//! a lattice basis of the lineality space) and the constraint side (facet
//! normals and equations) simultaneously, each in canonical form. The two
//! sides are exchanged by duality, which makes [`Cone::dual`] a constant-time
//! swap: the facet normals of a cone are exactly the extreme rays of its dual
//! and the equations are a basis of the dual's lineality space.
//!
//! Canonical form means: primitive integer vectors, rays reduced to
//! canonical coset representatives modulo the lineality lattice and sorted
//! lexicographically, lineality/equation bases in row Hermite normal form.
//! Two cones are equal as sets if and only if their canonical fields are
//! componentwise equal, so `==` is semantic equality.

use crate::arith::{dot_int, dot_int_rat, is_zero_int, zero_int};
use crate::dd;
use crate::{Int, Rat};
use num::{Signed, Zero};

/// A rational polyhedral cone in a lattice of the given rank, in canonical
/// dual representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    rank: usize,
    rays: Vec<Vec<Int>>,
    lineality_basis: Vec<Vec<Int>>,
    facet_normals: Vec<Vec<Int>>,
    equations: Vec<Vec<Int>>,
}

impl Cone {
    /// The cone generated by the given rays (no lineality input).
    pub fn from_rays(rank: usize, rays: &[Vec<Int>]) -> Self {
        Self::from_generators(rank, rays, &[])
    }

    /// The cone generated by rays together with lines (±direction pairs).
    pub fn from_generators(rank: usize, rays: &[Vec<Int>], lines: &[Vec<Int>]) -> Self {
        // The dual cone, in H-form, has the generators as its constraints;
        // converting it yields our facet normals and equations, and a second
        // conversion canonicalizes the generator side.
        let dual_gens = dd::extreme_rays(rank, rays, lines);
        let primal = dd::extreme_rays(rank, &dual_gens.rays, &dual_gens.lineality);
        let cone = Cone {
            rank,
            rays: primal.rays,
            lineality_basis: primal.lineality,
            facet_normals: dual_gens.rays,
            equations: dual_gens.lineality,
        };
        cone.debug_validate();
        cone
    }

    /// The cone `{x : a·x ≥ 0 for all a in inequalities}`.
    pub fn from_inequalities(rank: usize, inequalities: &[Vec<Int>]) -> Self {
        Self::from_constraints(rank, inequalities, &[])
    }

    /// The cone `{x : a·x ≥ 0 ∀a ∈ inequalities, b·x = 0 ∀b ∈ equations}`.
    pub fn from_constraints(
        rank: usize,
        inequalities: &[Vec<Int>],
        equations: &[Vec<Int>],
    ) -> Self {
        let primal = dd::extreme_rays(rank, inequalities, equations);
        let dual_gens = dd::extreme_rays(rank, &primal.rays, &primal.lineality);
        let cone = Cone {
            rank,
            rays: primal.rays,
            lineality_basis: primal.lineality,
            facet_normals: dual_gens.rays,
            equations: dual_gens.lineality,
        };
        cone.debug_validate();
        cone
    }

    /// The zero cone `{0}`.
    pub fn zero(rank: usize) -> Self {
        Self::from_rays(rank, &[])
    }

    /// The whole ambient space as a cone.
    pub fn full_space(rank: usize) -> Self {
        Self::from_inequalities(rank, &[])
    }

    /// The nonnegative orthant.
    pub fn positive_orthant(rank: usize) -> Self {
        let axes: Vec<Vec<Int>> = (0..rank)
            .map(|i| {
                let mut v = zero_int(rank);
                v[i] = Int::from(1);
                v
            })
            .collect();
        Self::from_rays(rank, &axes)
    }

    /// The dual cone `{m : ⟨m, v⟩ ≥ 0 for all v in self}`. Constant time:
    /// the representations swap roles. Involutive on canonical forms.
    pub fn dual(&self) -> Cone {
        Cone {
            rank: self.rank,
            rays: self.facet_normals.clone(),
            lineality_basis: self.equations.clone(),
            facet_normals: self.rays.clone(),
            equations: self.lineality_basis.clone(),
        }
    }

    /// Ambient lattice rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Canonical representatives of the extreme rays (modulo lineality),
    /// sorted lexicographically. Empty iff the cone is a linear subspace.
    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    /// Row Hermite normal form basis of the lineality space.
    pub fn lineality_basis(&self) -> &[Vec<Int>] {
        &self.lineality_basis
    }

    /// Canonical facet normals: `a` with `a·x ≥ 0` valid and irredundant.
    pub fn facet_normals(&self) -> &[Vec<Int>] {
        &self.facet_normals
    }

    /// Row Hermite normal form basis of the space of linear forms vanishing
    /// on the cone (nonempty iff the cone is not full-dimensional).
    pub fn equations(&self) -> &[Vec<Int>] {
        &self.equations
    }

    /// A cone is pointed when it contains no line.
    pub fn is_pointed(&self) -> bool {
        self.lineality_basis.is_empty()
    }

    /// Full-dimensional iff no nonzero linear form vanishes on it.
    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.rank - self.equations.len()
    }

    /// Dimension of the lineality space.
    pub fn lineality_dim(&self) -> usize {
        self.lineality_basis.len()
    }

    /// Membership test for a rational point.
    pub fn contains(&self, x: &[Rat]) -> bool {
        debug_assert_eq!(x.len(), self.rank);
        self.facet_normals
            .iter()
            .all(|a| dot_int_rat(a, x) >= Rat::zero())
            && self.equations.iter().all(|b| dot_int_rat(b, x).is_zero())
    }

    /// Membership test for a lattice point.
    pub fn contains_int(&self, x: &[Int]) -> bool {
        debug_assert_eq!(x.len(), self.rank);
        self.facet_normals
            .iter()
            .all(|a| !dot_int(a, x).is_negative())
            && self.equations.iter().all(|b| dot_int(b, x).is_zero())
    }

    /// True iff `other ⊆ self`.
    pub fn contains_cone(&self, other: &Cone) -> bool {
        other
            .rays
            .iter()
            .chain(other.lineality_basis.iter())
            .all(|v| self.contains_int(v))
            && other
                .lineality_basis
                .iter()
                .all(|l| self.contains_int(&l.iter().map(|x| -x).collect::<Vec<_>>()))
    }

    /// A lattice point in the relative interior: the sum of all extreme
    /// rays (the origin when the cone is a linear subspace).
    pub fn relative_interior_point(&self) -> Vec<Int> {
        let mut p = zero_int(self.rank);
        for r in &self.rays {
            for (pi, ri) in p.iter_mut().zip(r) {
                *pi += ri;
            }
        }
        debug_assert!(self.contains_int(&p));
        p
    }

    /// Intersection of two cones in the same ambient lattice.
    pub fn intersection(&self, other: &Cone) -> Cone {
        debug_assert_eq!(self.rank, other.rank);
        let mut ineqs = self.facet_normals.clone();
        ineqs.extend(other.facet_normals.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Cone::from_constraints(self.rank, &ineqs, &eqs)
    }

    /// Minkowski sum (join) of two cones: the cone generated by both.
    pub fn minkowski_sum(&self, other: &Cone) -> Cone {
        debug_assert_eq!(self.rank, other.rank);
        let mut rays = self.rays.clone();
        rays.extend(other.rays.iter().cloned());
        let mut lines = self.lineality_basis.clone();
        lines.extend(other.lineality_basis.iter().cloned());
        Cone::from_generators(self.rank, &rays, &lines)
    }

    /// Consistency of the two representations (debug builds only).
    fn debug_validate(&self) {
        debug_assert!(self.rays.iter().all(|r| !is_zero_int(r)));
        for r in self.rays.iter().chain(self.lineality_basis.iter()) {
            for a in &self.facet_normals {
                debug_assert!(
                    !dot_int(a, r).is_negative(),
                    "generator violates a facet inequality"
                );
            }
            for b in &self.equations {
                debug_assert!(
                    dot_int(b, r).is_zero() || !self.lineality_basis.contains(r),
                    "lineality generator violates an equation"
                );
            }
        }
    }
}
