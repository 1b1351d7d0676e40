//! Exact integer and rational linear algebra.
//!
//! Everything downstream (double description, Hilbert bases, lattice
//! saturation) reduces to a handful of primitives implemented here:
//! primitive integer vectors, reduced row echelon form over the rationals,
//! row-style Hermite normal form over the integers (with or without a
//! unimodular transform), integer kernels, and saturated lattice bases.
//!
//! Conventions: matrices are `Vec<Vec<_>>` in row-major order; all bases of
//! lattices are returned in Hermite normal form with zero rows dropped, which
//! makes them canonical for the lattice they span.

use crate::{Int, Rat};
use num::{One, Signed, Zero};

/// Dot product of an integer vector with an integer vector.
pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dot product of an integer vector with a rational vector.
pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from(x.clone()) * y)
        .sum()
}

/// Dot product of two rational vectors.
pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Componentwise sum of integer vectors.
pub fn add_int(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise difference of integer vectors.
pub fn sub_int(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Componentwise sum of rational vectors.
pub fn add_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Scale a rational vector.
pub fn scale_rat(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

/// Convert an integer vector to rationals.
pub fn to_rat(a: &[Int]) -> Vec<Rat> {
    a.iter().map(|x| Rat::from(x.clone())).collect()
}

/// The zero integer vector of a given length.
pub fn zero_int(n: usize) -> Vec<Int> {
    vec![Int::zero(); n]
}

/// True iff every entry is zero.
pub fn is_zero_int(a: &[Int]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// True iff every entry is zero.
pub fn is_zero_rat(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Gcd of a slice, nonnegative; zero for the empty slice or all-zero input.
pub fn gcd_many(xs: &[Int]) -> Int {
    xs.iter()
        .fold(Int::zero(), |acc, x| num::Integer::gcd(&acc, x))
}

/// Lcm of the denominators of a rational slice (1 for the empty slice).
pub fn denominator_lcm(xs: &[Rat]) -> Int {
    xs.iter()
        .fold(Int::one(), |acc, x| num::Integer::lcm(&acc, x.denom()))
}

/// Smallest positive integer multiple of a rational vector that is integral,
/// divided by the content: the primitive integer vector on the same ray.
///
/// The direction is preserved (no sign flip); the zero vector maps to itself.
pub fn primitive_rat(v: &[Rat]) -> Vec<Int> {
    let lcm = denominator_lcm(v);
    let ints: Vec<Int> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    primitive_int(&ints)
}

/// Divide an integer vector by its content (gcd), preserving direction.
pub fn primitive_int(v: &[Int]) -> Vec<Int> {
    let g = gcd_many(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Primitive vector with the sign normalized so the first nonzero entry is
/// positive. Canonical representative of a *line* (used for lineality
/// directions, where both signs describe the same object).
pub fn primitive_line(v: &[Rat]) -> Vec<Int> {
    let p = primitive_rat(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => p.iter().map(|x| -x).collect(),
        _ => p,
    }
}

/// Reduced row echelon form over the rationals, in place.
///
/// Returns the pivot columns in increasing order. Zero rows are removed.
/// The result is the canonical basis of the row space.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut copy: Vec<Vec<Rat>> = rows.to_vec();
    rref(&mut copy);
    copy.len()
}

/// Row-style Hermite normal form with zero rows dropped.
///
/// Pivots are positive and strictly to the right as rows descend; entries
/// above each pivot are reduced into `[0, pivot)`. This is the canonical
/// basis of the integer row lattice, so two generating sets span the same
/// lattice iff their HNFs are equal.
pub fn row_hnf(rows: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    hnf_with_transform(rows).0
}

/// Hermite normal form together with a unimodular transform `u` such that
/// `u * input = hnf` (with `hnf` padded by the zero rows that were dropped;
/// `u` is square of size = number of input rows).
pub fn hnf_with_transform(mut rows: Vec<Vec<Int>>) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut u: Vec<Vec<Int>> = (0..nrows)
        .map(|i| {
            (0..nrows)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        // Euclidean elimination below the pivot position.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..nrows {
                if !rows[r][col].is_zero() {
                    best = match best {
                        None => Some(r),
                        Some(b) if rows[r][col].abs() < rows[b][col].abs() => Some(r),
                        keep => keep,
                    };
                }
            }
            let Some(b) = best else { break };
            rows.swap(pivot_row, b);
            u.swap(pivot_row, b);
            let mut done = true;
            for r in (pivot_row + 1)..nrows {
                if !rows[r][col].is_zero() {
                    let q = div_floor_int(&rows[r][col], &rows[pivot_row][col]);
                    row_axpy(&mut rows, r, pivot_row, &q);
                    row_axpy(&mut u, r, pivot_row, &q);
                    if !rows[r][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            negate_row(&mut rows, pivot_row);
            negate_row(&mut u, pivot_row);
        }
        // Reduce entries above the pivot into [0, pivot).
        for r in 0..pivot_row {
            if !rows[r][col].is_zero() {
                let q = div_floor_int(&rows[r][col], &rows[pivot_row][col]);
                row_axpy(&mut rows, r, pivot_row, &q);
                row_axpy(&mut u, r, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    (rows, u)
}

/// `rows[r] -= q * rows[p]`.
fn row_axpy(rows: &mut [Vec<Int>], r: usize, p: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    let prow = rows[p].clone();
    for (x, y) in rows[r].iter_mut().zip(&prow) {
        *x -= q * y;
    }
}

fn negate_row(rows: &mut [Vec<Int>], r: usize) {
    for x in rows[r].iter_mut() {
        *x = -x.clone();
    }
}

/// Floor division on big integers.
pub fn div_floor_int(a: &Int, b: &Int) -> Int {
    num::Integer::div_floor(a, b)
}

/// Floor of a rational as a big integer.
pub fn rat_floor(x: &Rat) -> Int {
    x.floor().to_integer()
}

/// Ceiling of a rational as a big integer.
pub fn rat_ceil(x: &Rat) -> Int {
    x.ceil().to_integer()
}

/// Canonical basis (row HNF) of the integer kernel `{x ∈ Zⁿ : rows · x = 0}`.
///
/// The kernel of an integer matrix is automatically a saturated sublattice,
/// so the HNF rows are a basis of the full rational kernel intersected
/// with the lattice.
pub fn integer_kernel(rows: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    // Transpose, then HNF with transform: the transform rows that map to
    // zero rows of the HNF form a basis of the left kernel of the transpose,
    // which is exactly the (right) kernel we want.
    let transposed: Vec<Vec<Int>> = (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect();
    let (h, u) = hnf_with_transform(transposed);
    let kernel_rows: Vec<Vec<Int>> = u.into_iter().skip(h.len()).collect();
    row_hnf(kernel_rows)
}

/// Canonical basis of the *saturation* of the lattice spanned by the given
/// integer vectors: `span_Q(vectors) ∩ Zⁿ`, in row HNF.
pub fn saturated_span_basis(vectors: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    let perp = integer_kernel(vectors, ncols);
    integer_kernel(&perp, ncols)
}

/// One rational solution of `a · x = b` (row-major `a`), if any.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent iff some pivot lands in the augmented column.
    if pivots.last().is_some_and(|&p| p == ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &col) in aug.iter().zip(&pivots) {
        x[col] = row[ncols].clone();
    }
    Some(x)
}

/// One **integer** solution of `a · x = b` for integer data, if any.
///
/// Computed from a column-style HNF: `a = (h | 0) · v⁻¹` with `v` unimodular,
/// so solving reduces to back-substitution in the triangular `h`.
pub fn solve_integer(a: &[Vec<Int>], b: &[Int]) -> Option<Vec<Int>> {
    let ncols = a.first().map_or(0, Vec::len);
    // Column HNF of `a` = transpose of the row HNF of the transpose.
    let transposed: Vec<Vec<Int>> = (0..ncols)
        .map(|c| a.iter().map(|r| r[c].clone()).collect())
        .collect();
    let (h_rows, u) = hnf_with_transform(transposed);
    // Now (u · aᵀ) = h, i.e. a · uᵀ = hᵀ with hᵀ lower-triangular-ish columns.
    // Solve hᵀ · y = b by forward substitution over the structured columns,
    // then x = uᵀ · y (padding y with zeros for the dropped columns).
    let m = a.len();
    let mut y = vec![Int::zero(); h_rows.len()];
    let mut residual: Vec<Int> = b.to_vec();
    // Column j of hᵀ is h_rows[j]; its leading nonzero is at the pivot row.
    for (j, hrow) in h_rows.iter().enumerate() {
        let Some(pivot) = hrow.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        debug_assert!(pivot < m);
        let (q, r) = num::Integer::div_rem(&residual[pivot], &hrow[pivot]);
        if !r.is_zero() {
            return None;
        }
        y[j] = q;
        for (i, coef) in hrow.iter().enumerate() {
            residual[i] -= &y[j] * coef;
        }
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    // x = uᵀ · (y padded with zeros): u[j] expresses h_rows[j] as an integer
    // combination of the original columns of `a`.
    let mut x = vec![Int::zero(); ncols];
    for (j, yj) in y.iter().enumerate() {
        if yj.is_zero() {
            continue;
        }
        for c in 0..ncols {
            x[c] += yj * &u[j][c];
        }
    }
    debug_assert!({
        let check: Vec<Int> = a.iter().map(|row| dot_int(row, &x)).collect();
        check == b
    });
    Some(x)
}

/// Reduce `x` modulo the lattice spanned by HNF basis `basis` (rows in row
/// HNF), returning the canonical coset representative: at each pivot column
/// the representative's entry lies in `[0, pivot)`.
pub fn reduce_mod_lattice(x: &[Int], basis: &[Vec<Int>]) -> Vec<Int> {
    let mut v = x.to_vec();
    for row in basis {
        let Some(pivot) = row.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        let q = div_floor_int(&v[pivot], &row[pivot]);
        if !q.is_zero() {
            for (vi, ri) in v.iter_mut().zip(row) {
                *vi -= &q * ri;
            }
        }
    }
    v
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

    #[test]
    fn primitive_preserves_direction() {
        assert_eq!(primitive_int(&iv(&[2, -4, 6])), iv(&[1, -2, 3]));
        assert_eq!(primitive_int(&iv(&[-2, 4])), iv(&[-1, 2]));
        assert_eq!(primitive_rat(&rv(&[(1, 2), (0, 1), (3, 4)])), iv(&[2, 0, 3]));
    }

    #[test]
    fn primitive_line_flips_to_positive_leading_entry() {
        assert_eq!(primitive_line(&rv(&[(-1, 2), (1, 1)])), iv(&[1, -2]));
        assert_eq!(primitive_line(&rv(&[(0, 1), (-3, 1)])), iv(&[0, 1]));
    }

    #[test]
    fn rref_identifies_pivots_and_normalizes() {
        let mut rows = vec![rv(&[(2, 1), (4, 1)]), rv(&[(1, 1), (2, 1)])];
        let pivots = rref(&mut rows);
        assert_eq!(pivots, vec![0]);
        assert_eq!(rows, vec![rv(&[(1, 1), (2, 1)])]);
    }

    #[test]
    fn hnf_is_canonical_for_the_row_lattice() {
        // Two generating sets of the same lattice.
        let a = row_hnf(vec![iv(&[2, 1]), iv(&[1, 2])]);
        let b = row_hnf(vec![iv(&[1, 2]), iv(&[3, 3]), iv(&[2, 1])]);
        assert_eq!(a, b);
        // Pivots positive, above-pivot entries reduced.
        let h = row_hnf(vec![iv(&[0, -5]), iv(&[3, 7])]);
        assert_eq!(h, vec![iv(&[3, 2]), iv(&[0, 5])]);
    }

    #[test]
    fn hnf_transform_reproduces_the_input() {
        let rows = vec![iv(&[6, 4, 2]), iv(&[2, 8, 4]), iv(&[4, -4, -2])];
        let (h, u) = hnf_with_transform(rows.clone());
        for (i, urow) in u.iter().enumerate() {
            let combo: Vec<Int> = (0..3)
                .map(|c| urow.iter().zip(&rows).map(|(ui, r)| ui * &r[c]).sum())
                .collect();
            if i < h.len() {
                assert_eq!(combo, h[i]);
            } else {
                assert!(is_zero_int(&combo));
            }
        }
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // Kernel of (1  2  3) contains (-2,1,0),(−3,0,1); saturation keeps it.
        let k = integer_kernel(&[iv(&[1, 2, 3])], 3);
        assert_eq!(k.len(), 2);
        for row in &k {
            assert!(dot_int(&iv(&[1, 2, 3]), row).is_zero());
        }
        // (2 4 6) spans the same kernel: canonical bases agree.
        let k2 = integer_kernel(&[iv(&[2, 4, 6])], 3);
        assert_eq!(k, k2);
    }

    #[test]
    fn saturation_of_an_index_two_sublattice() {
        // span{(2,0),(0,2)} saturates to all of Z².
        let s = saturated_span_basis(&[iv(&[2, 0]), iv(&[0, 2])], 2);
        assert_eq!(s, vec![iv(&[1, 0]), iv(&[0, 1])]);
        // span{(1,5)} is already saturated.
        let s = saturated_span_basis(&[iv(&[2, 10])], 2);
        assert_eq!(s, vec![iv(&[1, 5])]);
    }

    #[test]
    fn rational_solver_finds_a_witness_or_reports_none() {
        let a = vec![rv(&[(1, 1), (1, 1)]), rv(&[(1, 1), (-1, 1)])];
        let x = solve_rational(&a, &rv(&[(2, 1), (0, 1)])).unwrap();
        assert_eq!(x, rv(&[(1, 1), (1, 1)]));
        let inconsistent = vec![rv(&[(1, 1), (1, 1)]), rv(&[(2, 1), (2, 1)])];
        assert!(solve_rational(&inconsistent, &rv(&[(1, 1), (3, 1)])).is_none());
    }

    #[test]
    fn integer_solver_respects_divisibility() {
        // 2x = 3 has no integer solution; 2x = 4 does.
        assert!(solve_integer(&[iv(&[2])], &iv(&[3])).is_none());
        assert_eq!(solve_integer(&[iv(&[2])], &iv(&[4])).unwrap(), iv(&[2]));
        // Full-rank 2x2.
        let a = vec![iv(&[1, 1]), iv(&[0, 2])];
        let x = solve_integer(&a, &iv(&[3, 4])).unwrap();
        assert_eq!(x, iv(&[1, 2]));
    }

    #[test]
    fn lattice_reduction_gives_canonical_coset_representatives() {
        let basis = row_hnf(vec![iv(&[2, 1]), iv(&[0, 3])]);
        let r1 = reduce_mod_lattice(&iv(&[7, 5]), &basis);
        let r2 = reduce_mod_lattice(&iv(&[1, 1]), &basis); // 7-2·3=1, same coset?
        // (7,5) − 3·(2,1) = (1,2); (1,2) − 0 = (1,2) then mod (0,3): (1,2).
        assert_eq!(r1, iv(&[1, 2]));
        // (1,1) reduces to itself.
        assert_eq!(r2, iv(&[1, 1]));
        // Same coset reduces identically.
        let shifted = add_int(&iv(&[1, 2]), &add_int(&iv(&[2, 1]), &iv(&[0, 3])));
        assert_eq!(reduce_mod_lattice(&shifted, &basis), iv(&[1, 2]));
    }
}
