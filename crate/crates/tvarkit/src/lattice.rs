//! Lattice-point machinery on cones and polyhedra: Hilbert bases, semigroup
//! saturation, module generators of `P ∩ M` over `σ∨ ∩ M`, normality of
//! integral polyhedra, and exact `e`-fold-sum membership.
//!
//! The workhorse is the Hilbert basis of a pointed cone, computed by the
//! zonotope bound: every irreducible lattice point lies in the zonotope
//! spanned by the primitive extreme rays, so enumerating the zonotope's
//! bounding box and sieving reducible points (those that split off another
//! candidate while staying in the cone) yields the unique minimal generating
//! set. A strictly positive functional orders the sieve so only earlier
//! candidates need inspection.

use crate::arith::{
    dot_int, integer_kernel, rat_ceil, rat_floor, reduce_mod_lattice, solve_integer, sub_int,
    zero_int,
};
use crate::cone::Cone;
use crate::error::{DomainError, Result};
use crate::polyhedron::Polyhedron;
use crate::{par, Int, Rat};
use num::{Signed, Zero};

/// The minimal generating set of `cone ∩ lattice` (pointed case), or a
/// lineality-aware generating set when the cone contains lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    /// The cone whose lattice points are generated.
    pub cone: Cone,
    /// Generators, sorted lexicographically.
    pub elements: Vec<Vec<Int>>,
    /// True iff the generating set is the unique minimal one (pointed cone);
    /// cones with lines have no minimal set, so ± a lattice basis of the
    /// lineality space is included instead.
    pub minimal: bool,
}

/// A finite module presentation: `P ∩ M = generators + (σ∨ ∩ M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleGenerators {
    /// The polyhedron presented.
    pub polyhedron: Polyhedron,
    /// The minimal generator set, sorted lexicographically.
    pub generators: Vec<Vec<Int>>,
}

/// A certified failure of polyhedron normality: a lattice point of the
/// `degree`-fold dilation that is not a sum of `degree` lattice points of the
/// polyhedron itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityWitness {
    /// The offending lattice point `m ∈ (e·P) ∩ M`.
    pub weight: Vec<Int>,
    /// The dilation factor `e ≥ 2` at which it fails.
    pub degree: u32,
}

/// All lattice points in the axis-parallel box `lo ≤ x ≤ hi`.
pub fn lattice_points_in_box(lo: &[Int], hi: &[Int]) -> Vec<Vec<Int>> {
    debug_assert_eq!(lo.len(), hi.len());
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return Vec::new();
    }
    let mut points: Vec<Vec<Int>> = vec![Vec::new()];
    for (l, h) in lo.iter().zip(hi) {
        let mut next = Vec::new();
        for p in &points {
            let mut x = l.clone();
            while &x <= h {
                let mut q = p.clone();
                q.push(x.clone());
                next.push(q);
                x += 1;
            }
        }
        points = next;
    }
    points
}

/// All lattice points of a bounded polyhedron.
pub fn lattice_points_bounded(p: &Polyhedron) -> Result<Vec<Vec<Int>>> {
    if p.recession().dim() > 0 {
        return Err(DomainError::Unbounded);
    }
    let rank = p.rank();
    let mut lo = Vec::with_capacity(rank);
    let mut hi = Vec::with_capacity(rank);
    for j in 0..rank {
        let coords: Vec<&Rat> = p.vertices().iter().map(|v| &v[j]).collect();
        lo.push(rat_ceil(coords.iter().min().expect("nonempty")));
        hi.push(rat_floor(coords.iter().max().expect("nonempty")));
    }
    let boxed = lattice_points_in_box(&lo, &hi);
    Ok(par::filter(boxed, |x| p.contains_int(x)))
}

/// The Hilbert basis of a pointed cone: the unique minimal generating set of
/// its lattice-point semigroup.
pub fn hilbert_basis(c: &Cone) -> Result<HilbertBasis> {
    if !c.is_pointed() {
        return Err(DomainError::NotPointed(format!(
            "lineality dimension {}",
            c.lineality_dim()
        )));
    }
    let rank = c.rank();
    if c.rays().is_empty() {
        return Ok(HilbertBasis {
            cone: c.clone(),
            elements: Vec::new(),
            minimal: true,
        });
    }
    // Bounding box of the zonotope spanned by the primitive rays.
    let mut lo = zero_int(rank);
    let mut hi = zero_int(rank);
    for r in c.rays() {
        for j in 0..rank {
            if r[j].is_negative() {
                lo[j] += &r[j];
            } else {
                hi[j] += &r[j];
            }
        }
    }
    let boxed = lattice_points_in_box(&lo, &hi);
    let candidates = par::filter(boxed, |x| {
        !x.iter().all(Zero::is_zero) && c.contains_int(x)
    });
    // Order by a functional that is strictly positive on the cone minus the
    // origin; summands of a reducible point come strictly earlier.
    let w = c.dual().relative_interior_point();
    let mut ordered: Vec<(Int, Vec<Int>)> = candidates
        .into_iter()
        .map(|x| (dot_int(&w, &x), x))
        .collect();
    ordered.sort();
    let indices: Vec<usize> = (0..ordered.len()).collect();
    let keep = par::map(indices, |&i| {
        let (wi, g) = &ordered[i];
        !ordered[..i]
            .iter()
            .take_while(|(wj, _)| wj < wi)
            .any(|(_, h)| c.contains_int(&sub_int(g, h)))
    });
    let mut elements: Vec<Vec<Int>> = ordered
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|((_, g), _)| g)
        .collect();
    elements.sort();
    Ok(HilbertBasis {
        cone: c.clone(),
        elements,
        minimal: true,
    })
}

/// Saturate the semigroup generated by `generators`: returns the cone they
/// span and a generating set of its full lattice-point semigroup (the
/// exponent set of the normalization of the corresponding monomial algebra).
pub fn saturate_semigroup(rank: usize, generators: &[Vec<Int>]) -> Result<(Cone, HilbertBasis)> {
    if generators.is_empty() {
        return Err(DomainError::InvalidInput(
            "semigroup saturation needs at least one generator".into(),
        ));
    }
    let cone = Cone::from_rays(rank, generators);
    if cone.is_pointed() {
        let basis = hilbert_basis(&cone)?;
        return Ok((cone, basis));
    }
    // Non-pointed: work in the quotient by the lineality space. The
    // projection is surjective with kernel exactly the lineality lattice, so
    // lifted quotient generators together with ± a lineality basis generate
    // every lattice point of the cone.
    let lineality = cone.lineality_basis().to_vec();
    let phi = integer_kernel(&lineality, rank);
    let k = phi.len();
    let mut elements: Vec<Vec<Int>> = Vec::new();
    if k > 0 {
        let projected: Vec<Vec<Int>> = generators
            .iter()
            .map(|g| phi.iter().map(|row| dot_int(row, g)).collect())
            .collect();
        let image = Cone::from_rays(k, &projected);
        debug_assert!(image.is_pointed());
        let image_basis = hilbert_basis(&image)?;
        for h in &image_basis.elements {
            let lift = solve_integer(&phi, h).expect("saturated projection is surjective");
            elements.push(reduce_mod_lattice(&lift, &lineality));
        }
    }
    for l in &lineality {
        elements.push(l.clone());
        elements.push(l.iter().map(|x| -x).collect());
    }
    elements.sort();
    let basis = HilbertBasis {
        cone: cone.clone(),
        elements,
        minimal: false,
    };
    Ok((cone, basis))
}

/// Minimal generators of `P ∩ M` as a module over `σ∨ ∩ M` (σ∨ the recession
/// cone of `P`): the height-one Hilbert basis elements of the homogenization
/// cone.
pub fn module_generators(p: &Polyhedron) -> Result<ModuleGenerators> {
    if !p.recession().is_pointed() {
        return Err(DomainError::NotPointed(
            "module generators need a pointed recession cone".into(),
        ));
    }
    let rank = p.rank();
    let basis = hilbert_basis(p.homogenization())?;
    let generators: Vec<Vec<Int>> = basis
        .elements
        .into_iter()
        .filter(|v| v[rank] == Int::from(1))
        .map(|v| v[..rank].to_vec())
        .collect();
    Ok(ModuleGenerators {
        polyhedron: p.clone(),
        generators,
    })
}

/// Decide whether an integral polyhedron is normal: every lattice point of
/// every dilation `e·P` splits as a sum of `e` lattice points of `P`.
///
/// Equivalent to: no Hilbert basis element of the homogenization cone has
/// height ≥ 2. On failure the lexicographically smallest tall basis element
/// is returned as a certified witness. When `dim_bound` is supplied and the
/// recession cone is the positive orthant, only heights up to the bound need
/// inspection (taller failures cannot occur alone in that setting).
pub fn is_normal_polyhedron(
    p: &Polyhedron,
    dim_bound: Option<usize>,
) -> Result<(bool, Option<NormalityWitness>)> {
    if !p.recession().is_pointed() {
        return Err(DomainError::NotPointed(
            "normality needs a pointed recession cone".into(),
        ));
    }
    if !p.is_integral() {
        return Err(DomainError::NonIntegralVertices(format!(
            "vertices {:?}",
            p.vertices()
        )));
    }
    let rank = p.rank();
    let basis = hilbert_basis(p.homogenization())?;
    let tall: Vec<&Vec<Int>> = basis
        .elements
        .iter()
        .filter(|v| v[rank] >= Int::from(2))
        .collect();
    let inspected: Vec<&Vec<Int>> = match dim_bound {
        Some(bound) if *p.recession() == Cone::positive_orthant(rank) => {
            let capped: Vec<&Vec<Int>> = tall
                .iter()
                .filter(|v| v[rank] <= Int::from(bound as u64))
                .copied()
                .collect();
            debug_assert_eq!(capped.is_empty(), tall.is_empty());
            capped
        }
        _ => tall,
    };
    match inspected.first() {
        None => Ok((true, None)),
        Some(v) => {
            let degree = u32::try_from(v[rank].clone()).expect("small dilation degree");
            Ok((
                false,
                Some(NormalityWitness {
                    weight: v[..rank].to_vec(),
                    degree,
                }),
            ))
        }
    }
}

/// Exact decision of `m ∈ E_[e,P]`: can `m` be written as a sum of `e`
/// lattice points of `P`? Enumerates the bounded region `P ∩ (m − (e−1)·P)`
/// for the first summand and recurses.
pub fn efold_sum_membership(p: &Polyhedron, e: u32, m: &[Int]) -> Result<bool> {
    debug_assert_eq!(m.len(), p.rank());
    if !p.recession().is_pointed() {
        return Err(DomainError::NotPointed(
            "e-fold sums need a pointed recession cone".into(),
        ));
    }
    if e == 0 {
        return Ok(m.iter().all(Zero::is_zero));
    }
    if e == 1 {
        return Ok(p.contains_int(m));
    }
    if !p.dilate(e).contains_int(m) {
        return Ok(false);
    }
    let rest = p.dilate(e - 1);
    // First-summand region: P ∩ (m − rest); reflect rest's constraints
    // through m.
    let mut ineqs = p.inequalities();
    for (a, b) in rest.inequalities() {
        let am = Rat::from(dot_int(&a, m));
        ineqs.push((a.iter().map(|x| -x).collect(), b - am));
    }
    let region = match Polyhedron::from_inequalities(p.rank(), &ineqs) {
        Ok(q) => q,
        Err(DomainError::EmptyPolyhedron(_)) => return Ok(false),
        Err(other) => return Err(other),
    };
    for m1 in lattice_points_bounded(&region)? {
        let tail = sub_int(m, &m1);
        if efold_sum_membership(p, e - 1, &tail)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    fn ivv(xss: &[&[i64]]) -> Vec<Vec<Int>> {
        xss.iter().map(|xs| iv(xs)).collect()
    }

    fn rv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from(Int::from(x))).collect()
    }

    #[test]
    fn quadrant_basis_is_the_unit_vectors() {
        let hb = hilbert_basis(&Cone::positive_orthant(2)).unwrap();
        assert_eq!(hb.elements, ivv(&[&[0, 1], &[1, 0]]));
        assert!(hb.minimal);
    }

    #[test]
    fn wedge_bases_pick_up_interior_generators() {
        let c = Cone::from_rays(2, &ivv(&[&[1, 0], &[1, 2]]));
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(hb.elements, ivv(&[&[1, 0], &[1, 1], &[1, 2]]));

        let wide = Cone::from_rays(2, &ivv(&[&[1, 0], &[1, 6]]));
        let hb = hilbert_basis(&wide).unwrap();
        let expected: Vec<Vec<Int>> = (0..=6).map(|k| iv(&[1, k])).collect();
        assert_eq!(hb.elements, expected);
    }

    #[test]
    fn hilbert_basis_requires_pointedness() {
        let half = Cone::from_inequalities(2, &ivv(&[&[1, 0]]));
        assert!(matches!(
            hilbert_basis(&half),
            Err(DomainError::NotPointed(_))
        ));
    }

    #[test]
    fn basis_regenerates_box_lattice_points() {
        let c = Cone::from_rays(2, &ivv(&[&[2, -1], &[1, 3]]));
        let hb = hilbert_basis(&c).unwrap();
        // Every cone lattice point in a box must decompose over the basis;
        // check by greedy descent on a positive functional.
        let w = c.dual().relative_interior_point();
        for p in lattice_points_in_box(&iv(&[-4, -4]), &iv(&[4, 4])) {
            if !c.contains_int(&p) {
                continue;
            }
            let mut cur = p.clone();
            'outer: while !cur.iter().all(Zero::is_zero) {
                for h in &hb.elements {
                    let rest = sub_int(&cur, h);
                    if c.contains_int(&rest) {
                        cur = rest;
                        continue 'outer;
                    }
                }
                panic!("point {p:?} is not generated; stuck at {cur:?}");
            }
            let _ = w;
        }
    }

    #[test]
    fn numerical_semigroup_saturates_to_the_full_ray() {
        let (cone, basis) = saturate_semigroup(1, &ivv(&[&[2], &[3]])).unwrap();
        assert_eq!(cone.rays(), &ivv(&[&[1]])[..]);
        assert_eq!(basis.elements, ivv(&[&[1]]));
        assert!(basis.minimal);
    }

    #[test]
    fn already_saturated_semigroups_are_fixed_points() {
        let (_, basis) = saturate_semigroup(2, &ivv(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(basis.elements, ivv(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn index_two_sublattice_points_appear_in_the_saturation() {
        let (cone, basis) = saturate_semigroup(2, &ivv(&[&[2, 0], &[0, 2], &[1, 1]])).unwrap();
        assert_eq!(cone, Cone::positive_orthant(2));
        assert_eq!(basis.elements, ivv(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn saturation_of_a_half_plane_semigroup() {
        let (cone, basis) =
            saturate_semigroup(2, &ivv(&[&[1, 0], &[-1, 0], &[0, 1]])).unwrap();
        assert!(!cone.is_pointed());
        assert!(!basis.minimal);
        assert_eq!(basis.elements, ivv(&[&[-1, 0], &[0, 1], &[1, 0]]));
    }

    #[test]
    fn module_generators_of_shifted_cones() {
        let p = Polyhedron::translated_cone(&rv(&[0, 1]), &Cone::positive_orthant(2)).unwrap();
        let mg = module_generators(&p).unwrap();
        assert_eq!(mg.generators, ivv(&[&[0, 1]]));

        let sigma = Polyhedron::from_cone(&Cone::positive_orthant(2));
        let mg = module_generators(&sigma).unwrap();
        assert_eq!(mg.generators, ivv(&[&[0, 0]]));
    }

    #[test]
    fn cubic_edge_module_generators() {
        let p = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[3, 0]), rv(&[0, 3])],
            &Cone::positive_orthant(2),
        )
        .unwrap();
        let mg = module_generators(&p).unwrap();
        assert_eq!(
            mg.generators,
            ivv(&[&[0, 3], &[1, 2], &[2, 1], &[3, 0]])
        );
    }

    #[test]
    fn fractional_vertex_module_generators() {
        let p = Polyhedron::translated_cone(
            &[Rat::new(Int::from(1), Int::from(2)), Rat::zero()],
            &Cone::positive_orthant(2),
        )
        .unwrap();
        let mg = module_generators(&p).unwrap();
        assert_eq!(mg.generators, ivv(&[&[1, 0]]));
    }

    #[test]
    fn simplex_with_long_axes_is_not_normal_but_its_double_is() {
        let p = Polyhedron::from_vertices_and_recession(
            3,
            &[rv(&[2, 0, 0]), rv(&[0, 3, 0]), rv(&[0, 0, 7])],
            &Cone::positive_orthant(3),
        )
        .unwrap();
        let (normal, witness) = is_normal_polyhedron(&p, None).unwrap();
        assert!(!normal);
        let w = witness.unwrap();
        assert!(w.degree >= 2);
        // The witness is a genuine failure: in the dilation, not an e-fold sum.
        assert!(p.dilate(w.degree).contains_int(&w.weight));
        assert!(!efold_sum_membership(&p, w.degree, &w.weight).unwrap());

        let (normal2, witness2) = is_normal_polyhedron(&p.dilate(2), None).unwrap();
        assert!(normal2);
        assert!(witness2.is_none());

        // The dimension bound gives the same verdict in the orthant setting.
        let (normal_b, _) = is_normal_polyhedron(&p, Some(3)).unwrap();
        assert!(!normal_b);
    }

    #[test]
    fn plane_polyhedra_are_normal() {
        let p = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[3, 0]), rv(&[0, 3])],
            &Cone::positive_orthant(2),
        )
        .unwrap();
        let (normal, witness) = is_normal_polyhedron(&p, None).unwrap();
        assert!(normal);
        assert!(witness.is_none());
    }

    #[test]
    fn efold_membership_finds_explicit_decompositions() {
        let p = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[3, 0]), rv(&[0, 3])],
            &Cone::positive_orthant(2),
        )
        .unwrap();
        assert!(efold_sum_membership(&p, 2, &iv(&[3, 3])).unwrap());
        assert!(efold_sum_membership(&p, 1, &iv(&[2, 1])).unwrap());
        // (1,1) is not even in 1·P.
        assert!(!efold_sum_membership(&p, 1, &iv(&[1, 1])).unwrap());
    }

    #[test]
    fn box_and_bounded_enumeration() {
        let pts = lattice_points_in_box(&iv(&[0, 0]), &iv(&[2, 1]));
        assert_eq!(pts.len(), 6);
        let simplex = Polyhedron::from_vertices_and_recession(
            2,
            &[rv(&[0, 0]), rv(&[2, 0]), rv(&[0, 2])],
            &Cone::zero(2),
        )
        .unwrap();
        let inside = lattice_points_bounded(&simplex).unwrap();
        assert_eq!(inside.len(), 6);
        let ray = Polyhedron::from_cone(&Cone::from_rays(1, &ivv(&[&[1]])));
        assert!(matches!(
            lattice_points_bounded(&ray),
            Err(DomainError::Unbounded)
        ));
    }
}
