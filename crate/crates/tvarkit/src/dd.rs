//! Double description: from a homogeneous constraint system to the extreme
//! rays and lineality space of the cone it cuts out.
//!
//! The engine reduces the general case to the pointed case. Given
//! `C = {x : A·x ≥ 0, B·x = 0}`, the lineality space is
//! `L = {x : A·x = 0, B·x = 0}`; quotienting by `L` through a saturated
//! integer projection leaves a pointed cone in a smaller lattice, where the
//! classical incremental algorithm applies: start from a full-rank simplicial
//! subsystem, insert remaining constraints one at a time, and generate new
//! rays only from *adjacent* positive/negative pairs, with adjacency decided
//! combinatorially from the constraints' zero sets. Extreme rays of the
//! quotient are lifted back and reduced to canonical coset representatives
//! modulo `L`.
//!
//! Everything is exact; the output is canonical for the cone (independent of
//! the order or redundancy of the input constraints), so cones can be
//! compared by comparing outputs.

use crate::arith::{
    dot_int, integer_kernel, is_zero_int, primitive_int, primitive_rat, rank as rat_rank,
    reduce_mod_lattice, solve_integer, solve_rational, to_rat,
};
use crate::{Int, Rat};
use num::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Generators of a cone: extreme rays modulo lineality, plus a lattice basis
/// of the lineality space. Both components are canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct GeneratorOutput {
    /// Canonical representatives of the extreme rays, sorted.
    pub rays: Vec<Vec<Int>>,
    /// Row Hermite normal form basis of the lineality space.
    pub lineality: Vec<Vec<Int>>,
}

/// A ray of the working (pointed, quotient) cone together with the zero set
/// of the full constraint universe on it, stored as a bitset.
struct Ray {
    v: Vec<Int>,
    zero: Vec<u64>,
}

fn bitset_words(nbits: usize) -> usize {
    nbits.div_ceil(64)
}

fn bit_set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1u64 << (i % 64);
}

fn bit_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// `sub ⊆ sup` as bitsets.
fn bit_contains(sup: &[u64], sub: &[u64]) -> bool {
    sup.iter().zip(sub).all(|(s, t)| s & t == *t)
}

/// Extreme rays and lineality of `{x : a·x ≥ 0 ∀a ∈ inequalities,
/// b·x = 0 ∀b ∈ equations}` in `Z^rank`.
pub(crate) fn extreme_rays(
    rank: usize,
    inequalities: &[Vec<Int>],
    equations: &[Vec<Int>],
) -> GeneratorOutput {
    debug_assert!(inequalities.iter().chain(equations).all(|a| a.len() == rank));
    let ineqs: Vec<Vec<Int>> = inequalities
        .iter()
        .filter(|a| !is_zero_int(a))
        .map(|a| primitive_int(a))
        .collect();
    let eqs: Vec<Vec<Int>> = equations
        .iter()
        .filter(|b| !is_zero_int(b))
        .map(|b| primitive_int(b))
        .collect();

    // Lineality space: common kernel of every constraint normal.
    let mut all_rows = ineqs.clone();
    all_rows.extend(eqs.iter().cloned());
    let lineality = integer_kernel(&all_rows, rank);

    // Saturated projection with kernel exactly the lineality space. Its rows
    // form a basis of the orthogonal-complement lattice, so the induced map
    // Z^rank → Z^k is surjective and the quotient cone is pointed.
    let phi = integer_kernel(&lineality, rank);
    let k = phi.len();
    if k == 0 {
        return GeneratorOutput {
            rays: Vec::new(),
            lineality,
        };
    }

    // Push every constraint into the quotient: ā with Φᵀ·ā = a. The solution
    // exists because each normal vanishes on the lineality space, and it is
    // unique because Φᵀ has full column rank; signs are preserved.
    let phi_t: Vec<Vec<Rat>> = (0..rank)
        .map(|c| phi.iter().map(|row| Rat::from(row[c].clone())).collect())
        .collect();
    let project = |a: &Vec<Int>| -> Vec<Int> {
        let sol = solve_rational(&phi_t, &to_rat(a))
            .expect("constraint normal must vanish on the lineality space");
        primitive_rat(&sol)
    };
    let mut universe: BTreeSet<Vec<Int>> = BTreeSet::new();
    for a in &ineqs {
        universe.insert(project(a));
    }
    for b in &eqs {
        let pb = project(b);
        universe.insert(pb.iter().map(|x| -x).collect());
        universe.insert(pb);
    }
    let universe: Vec<Vec<Int>> = universe.into_iter().collect();
    let nwords = bitset_words(universe.len());

    // Deterministic full-rank start: greedily take constraints that increase
    // the rank. The projected normals span the dual of the quotient, so the
    // greedy pass always reaches rank k.
    let mut picked: Vec<usize> = Vec::new();
    let mut picked_rows: Vec<Vec<Rat>> = Vec::new();
    for (i, a) in universe.iter().enumerate() {
        if picked.len() == k {
            break;
        }
        let mut trial = picked_rows.clone();
        trial.push(to_rat(a));
        if rat_rank(&trial) > picked_rows.len() {
            picked_rows = trial;
            picked.push(i);
        }
    }
    debug_assert_eq!(picked.len(), k, "projected constraints must span");

    // Initial simplicial cone: rays are the columns of the inverse of the
    // picked subsystem, i.e. solutions of A_S·c = e_i.
    let make_ray = |v: Vec<Int>| -> Ray {
        let mut zero = vec![0u64; nwords];
        for (i, a) in universe.iter().enumerate() {
            if dot_int(a, &v).is_zero() {
                bit_set(&mut zero, i);
            }
        }
        Ray { v, zero }
    };
    let mut rays: Vec<Ray> = (0..k)
        .map(|i| {
            let e_i: Vec<Rat> = (0..k)
                .map(|j| {
                    if i == j {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            let c = solve_rational(&picked_rows, &e_i).expect("invertible start system");
            make_ray(primitive_rat(&c))
        })
        .collect();
    let mut processed = vec![0u64; nwords];
    for &i in &picked {
        bit_set(&mut processed, i);
    }

    // Incremental insertion of the remaining constraints.
    for (t, a) in universe.iter().enumerate() {
        if picked.contains(&t) {
            continue;
        }
        if rays.is_empty() {
            break;
        }
        let signs: Vec<Ordering> = rays
            .iter()
            .map(|r| dot_int(a, &r.v).cmp(&Int::zero()))
            .collect();
        let plus: Vec<usize> = (0..rays.len())
            .filter(|&i| signs[i] == Ordering::Greater)
            .collect();
        let minus: Vec<usize> = (0..rays.len())
            .filter(|&i| signs[i] == Ordering::Less)
            .collect();
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if signs[i] != Ordering::Less {
                next.push(Ray {
                    v: r.v.clone(),
                    zero: r.zero.clone(),
                });
            }
        }
        for &p in &plus {
            for &m in &minus {
                // Combinatorial adjacency: no third extreme ray's zero set
                // contains the common zero set of the pair (over the
                // constraints processed so far).
                let common = bit_and(&bit_and(&rays[p].zero, &rays[m].zero), &processed);
                let masked = (0..rays.len())
                    .filter(|&w| w != p && w != m)
                    .any(|w| bit_contains(&rays[w].zero, &common));
                if masked {
                    continue;
                }
                let alpha = dot_int(a, &rays[p].v);
                let beta = dot_int(a, &rays[m].v);
                // alpha > 0 > beta, so this is a positive combination landing
                // on the new hyperplane.
                let combo: Vec<Int> = rays[p]
                    .v
                    .iter()
                    .zip(&rays[m].v)
                    .map(|(pv, mv)| &alpha * mv - &beta * pv)
                    .collect();
                next.push(make_ray(primitive_int(&combo)));
            }
        }
        bit_set(&mut processed, t);
        rays = next;
    }

    // Lift quotient rays back to the original lattice and reduce each to the
    // canonical representative of its coset modulo the lineality space. Any
    // integer lift lies in the original cone because the cone is the full
    // preimage of the quotient cone.
    let mut lifted: Vec<Vec<Int>> = rays
        .into_iter()
        .map(|r| {
            let y = solve_integer(&phi, &r.v).expect("projection is surjective");
            reduce_mod_lattice(&y, &lineality)
        })
        .collect();
    lifted.sort();
    debug_assert!(lifted.windows(2).all(|w| w[0] != w[1]));
    GeneratorOutput {
        rays: lifted,
        lineality,
    }
}
