//! Smith normal form over `Z`.
//!
//! Every integer matrix `M` factors as `U * M * V = S` with `U`, `V`
//! unimodular and `S` diagonal with nonnegative entries satisfying the
//! divisibility chain `s_1 | s_2 | ... | s_r` (trailing zeros allowed).  The
//! diagonal is unique, and reading it off gives the canonical form of the
//! cokernel `Z^rows / im(M)`.
//!
//! The elimination strategy pivots on the entry of smallest nonzero absolute
//! value in the remaining submatrix.  Remainders after division strictly
//! shrink the pivot, so the reduction terminates without any of the entry
//! explosion a naive Gaussian strategy can produce; all arithmetic is
//! arbitrary-precision, so correctness never depends on entry bounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::group::FgAbGroup;
use super::matrix::IntMatrix;

/// The result of a Smith normal form computation `U * M * V = S`.
///
/// The inverses of the transforms are accumulated alongside them (each
/// elementary operation is trivially invertible), because lattice
/// computations downstream need `U^{-1}` to describe the image of `M`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    /// Unimodular `rows x rows` row transform.
    pub u: IntMatrix,
    /// Inverse of `u`.
    pub u_inv: IntMatrix,
    /// The diagonal form, same shape as the input.
    pub s: IntMatrix,
    /// Unimodular `cols x cols` column transform.
    pub v: IntMatrix,
    /// Inverse of `v`.
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal entries of `S` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }

    /// Number of nonzero diagonal entries, i.e. the rank of the input.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Compute the Smith normal form of `m`.
///
/// Returns `U`, `S`, `V` (with inverses) such that `U * m * V = S`, `U` and
/// `V` unimodular, and `S` diagonal with nonnegative entries in a
/// divisibility chain.  Empty matrices (zero rows or columns) are allowed
/// and produce empty diagonals with identity transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Elementary operations, mirrored onto the transforms so that
    // U * m * V = S holds after every step.
    macro_rules! row_swap {
        ($a:expr, $b:expr) => {{
            s.swap_rows($a, $b);
            u.swap_rows($a, $b);
            u_inv.swap_cols($a, $b);
        }};
    }
    macro_rules! col_swap {
        ($a:expr, $b:expr) => {{
            s.swap_cols($a, $b);
            v.swap_cols($a, $b);
            v_inv.swap_rows($a, $b);
        }};
    }
    macro_rules! row_add {
        // row[dst] += c * row[src]
        ($dst:expr, $src:expr, $c:expr) => {{
            let c: BigInt = $c;
            s.add_multiple_of_row($dst, $src, &c);
            u.add_multiple_of_row($dst, $src, &c);
            u_inv.add_multiple_of_col($src, $dst, &-c);
        }};
    }
    macro_rules! col_add {
        // col[dst] += c * col[src]
        ($dst:expr, $src:expr, $c:expr) => {{
            let c: BigInt = $c;
            s.add_multiple_of_col($dst, $src, &c);
            v.add_multiple_of_col($dst, $src, &c);
            v_inv.add_multiple_of_row($src, $dst, &-c);
        }};
    }

    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        // Choose the nonzero entry of smallest absolute value in the
        // remaining submatrix as pivot.
        let Some((pi, pj)) = smallest_pivot(&s, k) else {
            break; // remaining submatrix is zero
        };
        row_swap!(k, pi);
        col_swap!(k, pj);

        'reduce: loop {
            // Clear column k below the pivot.
            for i in k + 1..rows {
                if s[(i, k)].is_zero() {
                    continue;
                }
                let (q, r) = s[(i, k)].div_rem(&s[(k, k)]);
                row_add!(i, k, -q);
                if !r.is_zero() {
                    // The remainder is strictly smaller than the pivot;
                    // promote it and start over.
                    row_swap!(k, i);
                    continue 'reduce;
                }
            }
            // Clear row k right of the pivot.
            for j in k + 1..cols {
                if s[(k, j)].is_zero() {
                    continue;
                }
                let (q, r) = s[(k, j)].div_rem(&s[(k, k)]);
                col_add!(j, k, -q);
                if !r.is_zero() {
                    col_swap!(k, j);
                    continue 'reduce;
                }
            }
            // Row and column are clear.  Make sure the pivot divides every
            // remaining entry, so the diagonal ends up a divisibility chain:
            // fold an offending row into row k and keep reducing.
            for i in k + 1..rows {
                for j in k + 1..cols {
                    if !s[(i, j)].is_multiple_of(&s[(k, k)]) {
                        row_add!(k, i, BigInt::from(1));
                        continue 'reduce;
                    }
                }
            }
            break;
        }

        if s[(k, k)].is_negative() {
            s.negate_row(k);
            u.negate_row(k);
            u_inv.negate_col(k);
        }
        k += 1;
    }

    debug_assert_eq!(u.mul(m).mul(&v), s);
    debug_assert!(u.mul(&u_inv) == IntMatrix::identity(rows));
    debug_assert!(v.mul(&v_inv) == IntMatrix::identity(cols));

    SmithDecomposition {
        u,
        u_inv,
        s,
        v,
        v_inv,
    }
}

/// Position of the entry of smallest nonzero absolute value in the submatrix
/// `m[k.., k..]`, or `None` if that submatrix is zero.
fn smallest_pivot(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let e = &m[(i, j)];
            if e.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if e.abs() < m[(bi, bj)].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Canonical form of the cokernel `Z^rows / im(m)`.
///
/// The invariant factors are the Smith diagonal entries greater than one;
/// each zero diagonal entry, and each row beyond the rank, contributes a free
/// `Z` summand.
pub fn cokernel(m: &IntMatrix) -> FgAbGroup {
    let dec = smith_normal_form(m);
    let diag = dec.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag.into_iter().filter(|d| !d.is_zero());
    FgAbGroup::from_parts(m.rows() - rank, torsion)
}
