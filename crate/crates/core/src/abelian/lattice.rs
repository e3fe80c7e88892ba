//! Sublattices of `Z^n` described by generating sets, built on Smith normal
//! form: membership tests, coordinates with respect to a basis, kernels, and
//! quotients of one lattice by another.
//!
//! These are the workhorses behind subquotient computations on presented
//! groups (Tate cohomology, symmetric/even quotients): a subquotient
//! `K/M` of `Z^n/L` is computed by realizing `K` and `M` as lattices in
//! `Z^n` and taking the cokernel of `M` written in coordinates on `K`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::group::FgAbGroup;
use super::matrix::IntMatrix;
use super::snf::{self, SmithDecomposition};

/// The image lattice `im(M) <= Z^rows` of an integer matrix, in a form that
/// supports membership tests and coordinates.
///
/// If `U M V = S` with diagonal `s_1, ..., s_r` nonzero, then
/// `b_i = U^{-1} (s_i e_i)` is a basis of the image, and `v` lies in the
/// image iff `(U v)_i` is divisible by `s_i` for `i <= r` and vanishes for
/// `i > r`; the basis coordinates are then `(U v)_i / s_i`.
pub(crate) struct ImageLattice {
    rows: usize,
    rank: usize,
    dec: SmithDecomposition,
}

impl ImageLattice {
    pub(crate) fn new(m: &IntMatrix) -> Self {
        let dec = snf::smith_normal_form(m);
        ImageLattice {
            rows: m.rows(),
            rank: dec.rank(),
            dec,
        }
    }

    /// Rank of the lattice (length of coordinate vectors).
    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    /// Coordinates of `v` with respect to the Smith basis of the lattice,
    /// or `None` if `v` is not in the lattice.
    pub(crate) fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.rows);
        let w = self.dec.u.apply(v);
        let mut coords = Vec::with_capacity(self.rank);
        for (i, wi) in w.iter().enumerate() {
            if i < self.rank {
                let s = &self.dec.s[(i, i)];
                let (q, r) = wi.div_rem(s);
                if !r.is_zero() {
                    return None;
                }
                coords.push(q);
            } else if !wi.is_zero() {
                return None;
            }
        }
        Some(coords)
    }

    /// Membership test.
    pub(crate) fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// A matrix whose columns form a basis of `ker(M) <= Z^cols`.
///
/// The kernel columns of the Smith column transform `V` (those hitting zero
/// diagonal entries) are a basis because `V` is unimodular.
pub(crate) fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let dec = snf::smith_normal_form(m);
    let rank = dec.rank();
    let cols = m.cols();
    IntMatrix::from_fn(cols, cols - rank, |i, j| dec.v[(i, rank + j)].clone())
}

/// Canonical form of the quotient `im(ambient) / im(sub)` of two lattices in
/// the same `Z^n`.
///
/// Returns an internal-consistency error if some generator of `sub` does not
/// lie in the ambient lattice; callers only invoke this when containment is
/// guaranteed mathematically, so a failure means a bug upstream.
pub(crate) fn lattice_quotient(ambient: &IntMatrix, sub: &IntMatrix) -> crate::Result<FgAbGroup> {
    assert_eq!(ambient.rows(), sub.rows());
    let lattice = ImageLattice::new(ambient);
    let mut coords = IntMatrix::zeros(lattice.rank(), sub.cols());
    for j in 0..sub.cols() {
        let col = sub.column(j);
        let c = lattice.coordinates(&col).ok_or_else(|| {
            crate::Error::internal(
                "lattice quotient: sublattice generator outside the ambient lattice",
            )
        })?;
        for (i, ci) in c.into_iter().enumerate() {
            coords[(i, j)] = ci;
        }
    }
    Ok(snf::cokernel(&coords))
}
