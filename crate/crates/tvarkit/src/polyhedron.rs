//! Rational polyhedra of the form `conv(vertices) + recession cone`.
//!
//! A [`Polyhedron`] in rank `n` is represented by its homogenization: the
//! cone in rank `n+1` cut out by `⟨a, x⟩ − b·t ≥ 0` (one per inequality
//! `⟨a, x⟩ ≥ b`) together with `t ≥ 0`. That cone equals
//! `cone(P×{1}) ∪ (recession(P)×{0})` and depends only on the point set `P`,
//! so its canonical [`Cone`] form is a canonical form for `P`: two polyhedra
//! are equal as sets iff their homogenizations are equal. Vertices are read
//! off as the rays with positive last coordinate (scaled to `t = 1`), the
//! recession cone as the face at `t = 0`.
//!
//! When the recession cone is not pointed there are no vertices in the
//! classical sense; the vertex list then holds one canonical representative
//! point per minimal face, which is exactly what the support function and
//! all downstream computations need.

use crate::arith::{add_rat, denominator_lcm, dot_int, dot_int_rat, is_zero_int, scale_rat};
use crate::cone::Cone;
use crate::error::{DomainError, Result};
use crate::{Int, Rat};
use num::{One, Signed, Zero};

/// A nonempty rational polyhedron `conv(V) + σ`, canonically represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyhedron {
    rank: usize,
    homog: Cone,
    vertices: Vec<Vec<Rat>>,
    recession: Cone,
}

impl Polyhedron {
    /// Build from the intersection `{x : ⟨a, x⟩ ≥ b}` of finitely many
    /// half-spaces, with optional affine equations `⟨a, x⟩ = b`.
    pub fn from_constraints(
        rank: usize,
        inequalities: &[(Vec<Int>, Rat)],
        equations: &[(Vec<Int>, Rat)],
    ) -> Result<Self> {
        let mut homog_ineqs: Vec<Vec<Int>> = inequalities
            .iter()
            .map(|(a, b)| homogenize_constraint(rank, a, b))
            .collect();
        let mut t_axis = vec![Int::zero(); rank + 1];
        t_axis[rank] = Int::one();
        homog_ineqs.push(t_axis);
        let homog_eqs: Vec<Vec<Int>> = equations
            .iter()
            .map(|(a, b)| homogenize_constraint(rank, a, b))
            .collect();
        let homog = Cone::from_constraints(rank + 1, &homog_ineqs, &homog_eqs);
        Self::from_homogenization(rank, homog)
    }

    /// Build from half-spaces only.
    pub fn from_inequalities(rank: usize, inequalities: &[(Vec<Int>, Rat)]) -> Result<Self> {
        Self::from_constraints(rank, inequalities, &[])
    }

    /// Build from half-spaces and check that the recession cone comes out as
    /// `sigma`; the mismatch is reported as an error.
    pub fn from_inequalities_with_recession(
        rank: usize,
        inequalities: &[(Vec<Int>, Rat)],
        sigma: &Cone,
    ) -> Result<Self> {
        let p = Self::from_inequalities(rank, inequalities)?;
        if p.recession() != sigma {
            return Err(DomainError::RecessionMismatch(format!(
                "recession cone has rays {:?}, expected rays {:?}",
                p.recession().rays(),
                sigma.rays()
            )));
        }
        Ok(p)
    }

    /// Build `conv(vertices) + recession`.
    pub fn from_vertices_and_recession(
        rank: usize,
        vertices: &[Vec<Rat>],
        recession: &Cone,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(DomainError::EmptyPolyhedron(
                "a polyhedron needs at least one point".into(),
            ));
        }
        debug_assert_eq!(recession.rank(), rank);
        let mut rays: Vec<Vec<Int>> = vertices
            .iter()
            .map(|v| {
                let d = denominator_lcm(v);
                let mut r: Vec<Int> = v.iter().map(|x| x.numer() * (&d / x.denom())).collect();
                r.push(d);
                r
            })
            .collect();
        for r in recession.rays() {
            let mut rr = r.clone();
            rr.push(Int::zero());
            rays.push(rr);
        }
        let lines: Vec<Vec<Int>> = recession
            .lineality_basis()
            .iter()
            .map(|l| {
                let mut ll = l.clone();
                ll.push(Int::zero());
                ll
            })
            .collect();
        let homog = Cone::from_generators(rank + 1, &rays, &lines);
        Self::from_homogenization(rank, homog)
    }

    /// A lattice point set `{v} + σ` (translated cone).
    pub fn translated_cone(vertex: &[Rat], sigma: &Cone) -> Result<Self> {
        Self::from_vertices_and_recession(sigma.rank(), &[vertex.to_vec()], sigma)
    }

    /// A cone regarded as a polyhedron with vertex at the origin.
    pub fn from_cone(sigma: &Cone) -> Self {
        let origin = vec![Rat::zero(); sigma.rank()];
        Self::from_vertices_and_recession(sigma.rank(), &[origin], sigma)
            .expect("a cone is a nonempty polyhedron")
    }

    fn from_homogenization(rank: usize, homog: Cone) -> Result<Self> {
        let mut vertices: Vec<Vec<Rat>> = Vec::new();
        let mut recession_rays: Vec<Vec<Int>> = Vec::new();
        for r in homog.rays() {
            let t = &r[rank];
            if t.is_positive() {
                vertices.push(
                    r[..rank]
                        .iter()
                        .map(|x| Rat::new(x.clone(), t.clone()))
                        .collect(),
                );
            } else {
                debug_assert!(t.is_zero(), "homogenization enforces t ≥ 0");
                recession_rays.push(r[..rank].to_vec());
            }
        }
        if vertices.is_empty() {
            return Err(DomainError::EmptyPolyhedron(
                "the constraint system has no solution".into(),
            ));
        }
        vertices.sort();
        let lines: Vec<Vec<Int>> = homog
            .lineality_basis()
            .iter()
            .map(|l| {
                debug_assert!(l[rank].is_zero());
                l[..rank].to_vec()
            })
            .collect();
        let recession = Cone::from_generators(rank, &recession_rays, &lines);
        Ok(Polyhedron {
            rank,
            homog,
            vertices,
            recession,
        })
    }

    /// Ambient rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The homogenization cone in rank `n+1` (canonical form of the
    /// polyhedron).
    pub fn homogenization(&self) -> &Cone {
        &self.homog
    }

    /// Vertices (canonical minimal-face representatives when the recession
    /// cone is not pointed), sorted.
    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    /// The recession cone.
    pub fn recession(&self) -> &Cone {
        &self.recession
    }

    /// Canonical irredundant inequality description `⟨a, x⟩ ≥ b`, excluding
    /// affine equations (see [`Polyhedron::affine_equations`]).
    pub fn inequalities(&self) -> Vec<(Vec<Int>, Rat)> {
        self.homog
            .facet_normals()
            .iter()
            .filter(|f| !is_zero_int(&f[..self.rank]))
            .map(|f| {
                (
                    f[..self.rank].to_vec(),
                    -Rat::from(f[self.rank].clone()),
                )
            })
            .collect()
    }

    /// Affine equations `⟨a, x⟩ = b` satisfied by the whole polyhedron
    /// (empty iff full-dimensional).
    pub fn affine_equations(&self) -> Vec<(Vec<Int>, Rat)> {
        self.homog
            .equations()
            .iter()
            .map(|f| {
                (
                    f[..self.rank].to_vec(),
                    -Rat::from(f[self.rank].clone()),
                )
            })
            .collect()
    }

    /// Dimension of the affine span.
    pub fn dim(&self) -> usize {
        self.rank - self.homog.equations().len()
    }

    /// Membership test.
    pub fn contains(&self, x: &[Rat]) -> bool {
        debug_assert_eq!(x.len(), self.rank);
        let mut h = x.to_vec();
        h.push(Rat::one());
        self.homog.contains(&h)
    }

    /// Membership test for a lattice point.
    pub fn contains_int(&self, x: &[Int]) -> bool {
        let xr: Vec<Rat> = x.iter().map(|c| Rat::from(c.clone())).collect();
        self.contains(&xr)
    }

    /// The support function `h(m) = min_{v ∈ P} ⟨m, v⟩`, finite exactly when
    /// `m` lies in the dual of the recession cone.
    pub fn support_min(&self, m: &[Int]) -> Result<Rat> {
        debug_assert_eq!(m.len(), self.rank);
        let rec = &self.recession;
        let in_dual = rec.rays().iter().all(|r| !dot_int(m, r).is_negative())
            && rec
                .lineality_basis()
                .iter()
                .all(|l| dot_int(m, l).is_zero());
        if !in_dual {
            return Err(DomainError::Unbounded);
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| dot_int_rat(m, v))
            .min()
            .expect("polyhedra are nonempty"))
    }

    /// Translate by a rational vector.
    pub fn translate(&self, w: &[Rat]) -> Polyhedron {
        debug_assert_eq!(w.len(), self.rank);
        let vertices: Vec<Vec<Rat>> = self.vertices.iter().map(|v| add_rat(v, w)).collect();
        Self::from_vertices_and_recession(self.rank, &vertices, &self.recession)
            .expect("translation preserves nonemptiness")
    }

    /// The dilation `e·P` (Minkowski sum of `e` copies); `e = 0` yields the
    /// recession cone as a polyhedron with vertex at the origin.
    pub fn dilate(&self, e: u32) -> Polyhedron {
        if e == 0 {
            return Self::from_cone(&self.recession);
        }
        let factor = Rat::from(Int::from(e));
        let vertices: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .map(|v| scale_rat(v, &factor))
            .collect();
        Self::from_vertices_and_recession(self.rank, &vertices, &self.recession)
            .expect("dilation preserves nonemptiness")
    }

    /// Minkowski sum. The recession cone of the sum is the join of the two
    /// recession cones.
    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.rank != other.rank {
            return Err(DomainError::InvalidInput(format!(
                "Minkowski sum of polyhedra in ranks {} and {}",
                self.rank, other.rank
            )));
        }
        let mut vertices = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for v in &self.vertices {
            for w in &other.vertices {
                vertices.push(add_rat(v, w));
            }
        }
        let recession = self.recession.minkowski_sum(&other.recession);
        Self::from_vertices_and_recession(self.rank, &vertices, &recession)
    }

    /// Intersection of two polyhedra (may be empty, reported as an error).
    pub fn intersection(&self, other: &Polyhedron) -> Result<Polyhedron> {
        debug_assert_eq!(self.rank, other.rank);
        let mut ineqs = self.inequalities();
        ineqs.extend(other.inequalities());
        let mut eqs = self.affine_equations();
        eqs.extend(other.affine_equations());
        Self::from_constraints(self.rank, &ineqs, &eqs)
    }

    /// True iff every vertex is a lattice point.
    pub fn is_integral(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|x| x.denom().is_one()))
    }

    /// The vertices as lattice points; errors when some vertex is not
    /// integral.
    pub fn lattice_vertices(&self) -> Result<Vec<Vec<Int>>> {
        if !self.is_integral() {
            return Err(DomainError::NonIntegralVertices(format!(
                "vertices {:?}",
                self.vertices
            )));
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x.numer().clone()).collect())
            .collect())
    }

    /// Orthogonal projection forgetting the last coordinate.
    pub fn project_drop_last(&self) -> Polyhedron {
        debug_assert!(self.rank >= 1);
        let n = self.rank - 1;
        let vertices: Vec<Vec<Rat>> = self.vertices.iter().map(|v| v[..n].to_vec()).collect();
        let rays: Vec<Vec<Int>> = self
            .recession
            .rays()
            .iter()
            .map(|r| r[..n].to_vec())
            .collect();
        let lines: Vec<Vec<Int>> = self
            .recession
            .lineality_basis()
            .iter()
            .map(|l| l[..n].to_vec())
            .collect();
        let rec = Cone::from_generators(n, &rays, &lines);
        Self::from_vertices_and_recession(n, &vertices, &rec)
            .expect("projection preserves nonemptiness")
    }
}

/// `⟨a, x⟩ ≥ b` becomes the primitive homogeneous normal `(d·a, −d·b)`.
fn homogenize_constraint(rank: usize, a: &[Int], b: &Rat) -> Vec<Int> {
    debug_assert_eq!(a.len(), rank);
    let d = b.denom().clone();
    let mut h: Vec<Int> = a.iter().map(|x| x * &d).collect();
    h.push(-b.numer().clone());
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    fn rv(xs: &[(i64, i64)]) -> Vec<Rat> {
        xs.iter()
            .map(|&(n, d)| Rat::new(Int::from(n), Int::from(d)))
            .collect()
    }

    fn quadrant() -> Cone {
        Cone::positive_orthant(2)
    }

    #[test]
    fn shifted_quadrant_from_its_inequalities() {
        // 2x ≥ −1, y ≥ 0, plus two redundant cuts.
        let p = Polyhedron::from_inequalities_with_recession(
            2,
            &[
                (iv(&[2, 0]), Rat::from(Int::from(-1))),
                (iv(&[0, 1]), Rat::zero()),
                (iv(&[2, 2]), Rat::from(Int::from(-1))),
                (iv(&[3, 2]), Rat::from(Int::from(-2))),
            ],
            &quadrant(),
        )
        .unwrap();
        assert_eq!(p.vertices(), &[rv(&[(-1, 2), (0, 1)])]);
        let expected =
            Polyhedron::translated_cone(&rv(&[(-1, 2), (0, 1)]), &quadrant()).unwrap();
        assert_eq!(p, expected);
        // Redundant inequalities are gone from the canonical description.
        assert_eq!(p.inequalities().len(), 2);
    }

    #[test]
    fn simplex_edge_with_quadrant_recession() {
        // 2x ≥ 0, y ≥ 0, 2x+2y ≥ 1, 3x+2y ≥ 1.
        let p = Polyhedron::from_inequalities_with_recession(
            2,
            &[
                (iv(&[2, 0]), Rat::zero()),
                (iv(&[0, 1]), Rat::zero()),
                (iv(&[2, 2]), Rat::one()),
                (iv(&[3, 2]), Rat::one()),
            ],
            &quadrant(),
        )
        .unwrap();
        assert_eq!(
            p.vertices(),
            &[rv(&[(0, 1), (1, 2)]), rv(&[(1, 2), (0, 1)])]
        );
        let expected = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[(1, 2), (0, 1)]), rv(&[(0, 1), (1, 2)])],
            &quadrant(),
        )
        .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn the_recession_cone_is_the_neutral_summand() {
        let sigma = Polyhedron::from_cone(&quadrant());
        let p = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[(1, 1), (0, 1)]), rv(&[(0, 1), (1, 1)])],
            &quadrant(),
        )
        .unwrap();
        assert_eq!(p.minkowski_sum(&sigma).unwrap(), p);
        // Point translates add.
        let a = Polyhedron::translated_cone(&rv(&[(1, 2), (0, 1)]), &quadrant()).unwrap();
        let b = Polyhedron::translated_cone(&rv(&[(1, 2), (1, 1)]), &quadrant()).unwrap();
        let sum = a.minkowski_sum(&b).unwrap();
        let expected =
            Polyhedron::translated_cone(&rv(&[(1, 1), (1, 1)]), &quadrant()).unwrap();
        assert_eq!(sum, expected);
    }

    #[test]
    fn minkowski_square_rehulls_the_midpoint() {
        let p = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[(1, 1), (0, 1)]), rv(&[(0, 1), (1, 1)])],
            &quadrant(),
        )
        .unwrap();
        let sq = p.minkowski_sum(&p).unwrap();
        // Pairwise sums give (2,0),(1,1),(0,2); the middle one is absorbed.
        assert_eq!(
            sq.vertices(),
            &[rv(&[(0, 1), (2, 1)]), rv(&[(2, 1), (0, 1)])]
        );
        let listed = Polyhedron::from_vertices_and_recession(
            2,
            &[
                rv(&[(2, 1), (0, 1)]),
                rv(&[(1, 1), (1, 1)]),
                rv(&[(0, 1), (2, 1)]),
            ],
            &quadrant(),
        )
        .unwrap();
        assert_eq!(sq, listed);
    }

    #[test]
    fn support_function_values() {
        let shifted =
            Polyhedron::translated_cone(&rv(&[(-1, 2), (0, 1)]), &quadrant()).unwrap();
        assert_eq!(
            shifted.support_min(&iv(&[2, 0])).unwrap(),
            Rat::from(Int::from(-1))
        );
        let edge = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[(1, 2), (0, 1)]), rv(&[(0, 1), (1, 2)])],
            &quadrant(),
        )
        .unwrap();
        assert_eq!(edge.support_min(&iv(&[2, 2])).unwrap(), Rat::one());
        let sigma = Polyhedron::from_cone(&quadrant());
        assert_eq!(sigma.support_min(&iv(&[5, 7])).unwrap(), Rat::zero());
        assert!(matches!(
            sigma.support_min(&iv(&[-1, 0])),
            Err(DomainError::Unbounded)
        ));
    }

    #[test]
    fn dilation_matches_repeated_sums() {
        let p = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[(3, 1), (0, 1)]), rv(&[(0, 1), (3, 1)])],
            &quadrant(),
        )
        .unwrap();
        assert_eq!(p.dilate(1), p);
        assert_eq!(p.dilate(2), p.minkowski_sum(&p).unwrap());
        assert_eq!(p.dilate(0), Polyhedron::from_cone(&quadrant()));
    }

    #[test]
    fn equality_absorbs_redundant_vertices() {
        let padded = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[(0, 1), (0, 1)]), rv(&[(1, 1), (0, 1)])],
            &quadrant(),
        )
        .unwrap();
        let sigma = Polyhedron::from_cone(&quadrant());
        assert_eq!(padded, sigma);
        let shifted = Polyhedron::translated_cone(&rv(&[(1, 2), (0, 1)]), &quadrant()).unwrap();
        let other = Polyhedron::translated_cone(&rv(&[(0, 1), (1, 2)]), &quadrant()).unwrap();
        assert_ne!(shifted, other);
    }

    #[test]
    fn empty_and_mismatched_systems_error() {
        let empty = Polyhedron::from_inequalities(
            1,
            &[
                (iv(&[1]), Rat::one()),
                (iv(&[-1]), Rat::zero()),
            ],
        );
        assert!(matches!(empty, Err(DomainError::EmptyPolyhedron(_))));
        let mismatch = Polyhedron::from_inequalities_with_recession(
            2,
            &[(iv(&[1, 0]), Rat::zero()), (iv(&[0, 1]), Rat::zero())],
            &Cone::from_rays(2, &[iv(&[1, 0])]),
        );
        assert!(matches!(mismatch, Err(DomainError::RecessionMismatch(_))));
    }

    #[test]
    fn non_pointed_recession_uses_face_representatives() {
        // A half-plane slab: y ≥ 1 in the plane, recession = {y ≥ 0}.
        let p = Polyhedron::from_inequalities(2, &[(iv(&[0, 1]), Rat::one())]).unwrap();
        assert!(!p.recession().is_pointed());
        assert_eq!(p.vertices().len(), 1);
        assert_eq!(p.vertices()[0][1], Rat::one());
        assert!(p.contains(&rv(&[(100, 1), (1, 1)])));
        assert!(!p.contains(&rv(&[(0, 1), (0, 1)])));
    }

    #[test]
    fn projection_drops_the_last_coordinate() {
        let p = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[(1, 2), (-3, 1)]), rv(&[(2, 1), (5, 1)])],
            &quadrant(),
        )
        .unwrap();
        let q = p.project_drop_last();
        assert_eq!(q.rank(), 1);
        assert_eq!(q.vertices(), &[rv(&[(1, 2)])]);
        assert_eq!(q.recession().rays(), &[iv(&[1])]);
    }

    #[test]
    fn integral_vertex_extraction() {
        let p = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[(3, 1), (0, 1)]), rv(&[(0, 1), (3, 1)])],
            &quadrant(),
        )
        .unwrap();
        assert!(p.is_integral());
        assert_eq!(
            p.lattice_vertices().unwrap(),
            vec![iv(&[0, 3]), iv(&[3, 0])]
        );
        let half = Polyhedron::translated_cone(&rv(&[(1, 2), (0, 1)]), &quadrant()).unwrap();
        assert!(matches!(
            half.lattice_vertices(),
            Err(DomainError::NonIntegralVertices(_))
        ));
    }
}
