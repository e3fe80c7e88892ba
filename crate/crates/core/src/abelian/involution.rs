//! Finitely generated abelian groups equipped with an involution, and the
//! derived invariants used throughout the classification: coinvariants,
//! Tate cohomology of the induced `C_2`-action, and the symmetric/even
//! subquotients of unit groups of group rings.
//!
//! A group is presented as `A = Z^n / L` where `L` is the column span of a
//! relation matrix, and the involution is an integer matrix on the
//! generators.  Validity (`iota(L) <= L` and `iota^2 = id` on `A`) is
//! checked eagerly at construction so that every downstream computation can
//! assume it.

use num_bigint::BigInt;

use super::group::FgAbGroup;
use super::lattice;
use super::matrix::IntMatrix;
use super::snf;
use crate::{Error, Result};

/// A presented finitely generated abelian group `A = Z^n / L` together with
/// an involution `iota: A -> A`.
#[derive(Clone, Debug)]
pub struct GroupWithInvolution {
    /// Relation matrix: `n x m`, columns span the relation lattice `L`.
    presentation: IntMatrix,
    /// Involution action on generators: `n x n`, descends to `A`.
    involution: IntMatrix,
}

impl GroupWithInvolution {
    /// Build a group with involution, checking validity eagerly.
    ///
    /// Requirements checked:
    /// * `presentation` is `n x m` and `involution` is `n x n`;
    /// * the involution preserves the relation lattice (`iota * L <= L`);
    /// * the involution squares to the identity on the quotient
    ///   (`iota^2 - id` maps `Z^n` into `L`).
    pub fn new(presentation: IntMatrix, involution: IntMatrix) -> Result<Self> {
        let n = presentation.rows();
        if involution.rows() != n || involution.cols() != n {
            return Err(Error::precondition(format!(
                "involution must be {n}x{n} to act on {n} generators, got {}x{}",
                involution.rows(),
                involution.cols()
            )));
        }
        let relations = lattice::ImageLattice::new(&presentation);
        let iota_r = involution.mul(&presentation);
        for j in 0..iota_r.cols() {
            if !relations.contains(&iota_r.column(j)) {
                return Err(Error::precondition(
                    "involution does not preserve the relation lattice",
                ));
            }
        }
        let square_minus_id = involution.mul(&involution).sub(&IntMatrix::identity(n));
        for j in 0..n {
            if !relations.contains(&square_minus_id.column(j)) {
                return Err(Error::precondition(
                    "involution does not square to the identity on the group",
                ));
            }
        }
        Ok(GroupWithInvolution {
            presentation,
            involution,
        })
    }

    /// Convenience constructor for `Z/d_1 + ... + Z/d_n` (a `0` gives a free
    /// `Z` summand) with the given involution matrix on the generators.
    pub fn from_cyclic_orders(orders: &[u64], involution: IntMatrix) -> Result<Self> {
        let n = orders.len();
        let nonzero: Vec<(usize, u64)> = orders
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, d)| d != 0)
            .collect();
        let mut presentation = IntMatrix::zeros(n, nonzero.len());
        for (col, &(row, d)) in nonzero.iter().enumerate() {
            presentation[(row, col)] = BigInt::from(d);
        }
        GroupWithInvolution::new(presentation, involution)
    }

    /// The identity involution on `Z/d_1 + ... + Z/d_n`.
    pub fn with_identity_involution(orders: &[u64]) -> Self {
        Self::from_cyclic_orders(orders, IntMatrix::identity(orders.len()))
            .expect("identity involution is always valid")
    }

    /// The negation involution `a -> -a` on `Z/d_1 + ... + Z/d_n`.
    pub fn with_negation_involution(orders: &[u64]) -> Self {
        Self::from_cyclic_orders(orders, IntMatrix::identity(orders.len()).neg())
            .expect("negation involution is always valid")
    }

    /// Number of generators of the presentation.
    pub fn generators(&self) -> usize {
        self.presentation.rows()
    }

    /// The relation matrix (columns span the relation lattice).
    pub fn presentation(&self) -> &IntMatrix {
        &self.presentation
    }

    /// The involution matrix on generators.
    pub fn involution(&self) -> &IntMatrix {
        &self.involution
    }

    /// The same group with the involution negated (`iota -> -iota`), which
    /// is again a valid involution.
    pub fn negated(&self) -> Self {
        GroupWithInvolution {
            presentation: self.presentation.clone(),
            involution: self.involution.neg(),
        }
    }

    /// Canonical form of the underlying group (forgetting the involution).
    pub fn group(&self) -> FgAbGroup {
        snf::cokernel(&self.presentation)
    }

    /// Coinvariants `A / (1 - iota) A`: the cokernel of the presentation
    /// augmented by the columns of `1 - iota`.
    pub fn coinvariants(&self) -> FgAbGroup {
        let one_minus = IntMatrix::identity(self.generators()).sub(&self.involution);
        snf::cokernel(&self.presentation.hstack(&one_minus))
    }

    /// Tate cohomology of the `C_2`-action generated by the involution:
    ///
    /// * parity 0: `ker(1 - iota) / im(1 + iota)`,
    /// * parity 1: `ker(1 + iota) / im(1 - iota)`.
    ///
    /// Either group is annihilated by 2, so the result is an elementary
    /// abelian 2-group; this is asserted before returning.
    pub fn tate_cohomology(&self, parity: u8) -> Result<FgAbGroup> {
        if parity > 1 {
            return Err(Error::precondition(format!(
                "Tate cohomology parity must be 0 or 1, got {parity}"
            )));
        }
        let id = IntMatrix::identity(self.generators());
        let minus = id.sub(&self.involution);
        let plus = id.add(&self.involution);
        let group = if parity == 0 {
            self.invariant_subquotient(&minus, &plus)?
        } else {
            self.invariant_subquotient(&plus, &minus)?
        };
        if !group.is_elementary_abelian_2() {
            return Err(Error::internal(format!(
                "Tate cohomology came out as {group}, not an elementary abelian 2-group"
            )));
        }
        Ok(group)
    }

    /// The quotient of the `sign`-symmetric elements by the `sign`-even
    /// elements:
    ///
    /// `{a : a = sign * iota(a)} / {b + sign * iota(b)}`
    ///
    /// `sign` must be `+1` or `-1`.  With `sign = +1` this is parity-0 Tate
    /// cohomology; with `sign = -1` it is parity-1 (equivalently, parity-0
    /// of the negated involution).
    pub fn symmetric_even_quotient(&self, sign: i8) -> Result<FgAbGroup> {
        if sign != 1 && sign != -1 {
            return Err(Error::precondition(format!(
                "sign must be +1 or -1, got {sign}"
            )));
        }
        let id = IntMatrix::identity(self.generators());
        let signed_iota = if sign == 1 {
            self.involution.clone()
        } else {
            self.involution.neg()
        };
        let fixed = id.sub(&signed_iota); // kernel of this = sign-symmetrics
        let even = id.add(&signed_iota); // image of this = sign-evens
        self.invariant_subquotient(&fixed, &even)
    }

    /// The subquotient `{x in A : f(x) = 0} / im(h)` of `A = Z^n / L`, for
    /// endomorphism matrices with `f h = 0` on `A`.
    ///
    /// The numerator is realized as the lattice `{x in Z^n : f x in L}`
    /// (projection of the kernel of `[f | -relations]`), the denominator as
    /// the lattice `h(Z^n) + L`.
    fn invariant_subquotient(&self, f: &IntMatrix, h: &IntMatrix) -> Result<FgAbGroup> {
        let n = self.generators();
        let stacked = f.hstack(&self.presentation.neg());
        let kernel = lattice::kernel_basis(&stacked);
        let numerator = kernel.top_rows(n);
        let denominator = h.hstack(&self.presentation);
        lattice::lattice_quotient(&numerator, &denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn neg_on(orders: &[u64]) -> GroupWithInvolution {
        GroupWithInvolution::with_negation_involution(orders)
    }

    fn id_on(orders: &[u64]) -> GroupWithInvolution {
        GroupWithInvolution::with_identity_involution(orders)
    }

    fn swap_on(orders: &[u64; 2]) -> GroupWithInvolution {
        GroupWithInvolution::from_cyclic_orders(orders, IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]))
            .unwrap()
    }

    #[test]
    fn validity_is_checked_eagerly() {
        // x -> 2x on Z/5 is not an involution (4 != 1 mod 5).
        let bad = GroupWithInvolution::from_cyclic_orders(&[5], IntMatrix::from_i64(1, 1, &[2]));
        assert!(bad.is_err());
        // x -> 2x on Z/3 is an involution (4 = 1 mod 3).
        assert!(
            GroupWithInvolution::from_cyclic_orders(&[3], IntMatrix::from_i64(1, 1, &[2]),).is_ok()
        );
        // The swap does not preserve the relations of Z/2 + Z/4.
        assert!(GroupWithInvolution::from_cyclic_orders(
            &[2, 4],
            IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]),
        )
        .is_err());
    }

    #[test]
    fn coinvariants_examples() {
        // Negation on Z/5: (1 - iota) = multiplication by 2, onto. -> 0.
        assert!(neg_on(&[5]).coinvariants().is_trivial());
        // Identity on Z^2: nothing is killed.
        assert_eq!(id_on(&[0, 0]).coinvariants(), FgAbGroup::free(2));
        // Swap on Z/2 + Z/2 kills the diagonal.
        assert_eq!(swap_on(&[2, 2]).coinvariants(), FgAbGroup::cyclic(2));
    }

    #[test]
    fn tate_cohomology_examples() {
        // Identity on Z: H^0 = Z/2Z, H^1 = 0.
        let g = id_on(&[0]);
        assert_eq!(g.tate_cohomology(0).unwrap(), FgAbGroup::cyclic(2));
        assert!(g.tate_cohomology(1).unwrap().is_trivial());
        // Negation on Z: the two swap.
        let g = neg_on(&[0]);
        assert!(g.tate_cohomology(0).unwrap().is_trivial());
        assert_eq!(g.tate_cohomology(1).unwrap(), FgAbGroup::cyclic(2));
        // Identity on Z/2: both are Z/2.
        let g = id_on(&[2]);
        assert_eq!(g.tate_cohomology(0).unwrap(), FgAbGroup::cyclic(2));
        assert_eq!(g.tate_cohomology(1).unwrap(), FgAbGroup::cyclic(2));
        // Swap on Z^2: both vanish.
        let g = swap_on(&[0, 0]);
        assert!(g.tate_cohomology(0).unwrap().is_trivial());
        assert!(g.tate_cohomology(1).unwrap().is_trivial());
        // Parity out of range is a precondition error.
        assert!(id_on(&[2]).tate_cohomology(2).is_err());
    }

    #[test]
    fn symmetric_even_quotient_examples() {
        // sign = +1, identity on Z/2: symmetrics Z/2, evens 2(Z/2) = 0.
        assert_eq!(
            id_on(&[2]).symmetric_even_quotient(1).unwrap(),
            FgAbGroup::cyclic(2)
        );
        // sign = -1, negation on Z/4: skew-symmetrics all of Z/4,
        // skew-evens 2(Z/4); quotient Z/2.
        assert_eq!(
            neg_on(&[4]).symmetric_even_quotient(-1).unwrap(),
            FgAbGroup::cyclic(2)
        );
        // sign = -1, identity on Z^r: only 0 is skew-symmetric.
        assert!(id_on(&[0, 0, 0])
            .symmetric_even_quotient(-1)
            .unwrap()
            .is_trivial());
        assert!(id_on(&[2]).symmetric_even_quotient(0).is_err());
    }

    #[test]
    fn sign_twist_matches_parity_swap() {
        for g in [
            swap_on(&[2, 2]),
            swap_on(&[6, 6]),
            neg_on(&[8]),
            id_on(&[4, 0]),
        ] {
            assert_eq!(
                g.symmetric_even_quotient(-1).unwrap(),
                g.negated().tate_cohomology(0).unwrap(),
                "sign -1 quotient should be parity-0 Tate of the negated involution"
            );
            assert_eq!(
                g.symmetric_even_quotient(1).unwrap(),
                g.tate_cohomology(0).unwrap()
            );
            assert_eq!(
                g.symmetric_even_quotient(-1).unwrap(),
                g.tate_cohomology(1).unwrap()
            );
        }
    }
}
