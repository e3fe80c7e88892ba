//! The classification of free cyclic actions on `S^1 x S^n`, assembled
//! from the other modules.
//!
//! For square-free odd `ell > 1`, conjugacy classes of free
//! `C_ell`-actions on `S^1 x S^n` with `n = 2k-1`, `k > 1`, are fibered
//! over a finite index set: one stratum per divisor `d > 1` of `ell` and
//! per class of the unit partition `Q_d^k`.  Each stratum's parameter
//! space is a hybrid `Z^{(d-1)/2} x H_0(C_2; Wh_0(C_d))`, reached by a
//! finite-to-one map whose fibers have order at most
//! `8 gcd(k, phi(d)/2)`.  For even `n` and for `n = 1` there is a single
//! class, the standard translation action.

use serde::{Deserialize, Serialize};

use crate::abelian::{FgAbGroup, GroupWithInvolution};
use crate::classdata::{h0_from_record, ClassDataSet, H0Result};
use crate::lens::structure_rank;
use crate::modular::{
    check_modulus, exponent_subgroup, indeterminacy_bound, is_prime, qdk_partition, totient,
};
use crate::{Error, Result};

/// Validate the global scope condition on the group order.
fn check_ell(ell: u64) -> Result<()> {
    // The scope message names the condition; square-freeness and oddness
    // are exactly what the lens-space modulus check enforces.
    check_modulus(ell)
        .map_err(|e| Error::precondition(format!("ℓ must be square-free odd and > 1: {e}")))
}

/// Divisors of `ell` greater than 1, ascending.
fn proper_divisors(ell: u64) -> Vec<u64> {
    let mut divs: Vec<u64> = (2..=ell).filter(|d| ell.is_multiple_of(*d)).collect();
    divs.sort_unstable();
    divs
}

/// The torsion factor of a stratum's parameter space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum H0Descriptor {
    /// Prime divisor with an ingested class-group record: the deduced
    /// coinvariants (exact or as an order interval).
    Known(H0Result),
    /// Composite divisor: the coinvariants are not determined by
    /// prime-level class-group data, so only the defining expression is
    /// reported.
    Symbolic {
        /// The symbolic expression, e.g. `H_0(C_2; Wh_0(C_15))`.
        formula: String,
    },
    /// Prime divisor outside the loaded data.
    NoData {
        /// Human-readable explanation.
        note: String,
    },
}

impl H0Descriptor {
    /// Build the descriptor for divisor `d` from the loaded records.
    pub fn for_divisor(d: u64, records: &ClassDataSet) -> Result<H0Descriptor> {
        if !is_prime(d) {
            return Ok(H0Descriptor::Symbolic {
                formula: format!("H_0(C_2; Wh_0(C_{d}))"),
            });
        }
        match records.get(d) {
            Some(rec) => Ok(H0Descriptor::Known(h0_from_record(rec)?)),
            None => Ok(H0Descriptor::NoData {
                note: format!("no class-group record for p = {d}"),
            }),
        }
    }

    /// True when the descriptor depends on GRH-conditional data.
    pub fn grh_conditional(&self) -> bool {
        matches!(self, H0Descriptor::Known(h) if h.grh_conditional)
    }
}

/// One stratum of the classification: a divisor `d` of `ell` together
/// with a homotopy class of orbit spaces (a `Q_d^k` class).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    /// Divisor of `ell`, `d > 1`.
    pub d: u64,
    /// Canonical representative of the `Q_d^k` class.
    pub q_class: u64,
    /// Rank `(d-1)/2` of the free factor `Z^{(d-1)/2}`.
    pub lattice_rank: u64,
    /// The torsion factor `H_0(C_2; Wh_0(C_d))`.
    pub h0_descriptor: H0Descriptor,
    /// Upper bound `8 gcd(k, phi(d)/2)` on the fibers of the
    /// parametrization.
    pub fiber_bound: u64,
}

/// How the set of conjugacy classes is organized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassificationKind {
    /// A single class, the translation action (even `n`, or `n = 1`).
    SingleClass,
    /// Strata indexed by divisors and unit classes (`n = 2k-1`, `k > 1`).
    Strata,
}

/// The classification of free `C_ell`-actions on `S^1 x S^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    /// The group order.
    pub ell: u64,
    /// The sphere dimension.
    pub n: u64,
    /// For odd `n`, the half-dimension `k = (n+1)/2`; 0 for even `n`.
    pub k: u64,
    /// Single class or strata.
    pub kind: ClassificationKind,
    /// The strata (empty for `SingleClass`).
    pub strata: Vec<Stratum>,
    /// True when the set of classes is countably infinite — exactly when
    /// strata exist, since every stratum carries a free factor of rank
    /// `(d-1)/2 >= 1`.
    pub countably_infinite: bool,
}

/// Classify free `C_ell`-actions on `S^1 x S^n` up to conjugacy.
///
/// For even `n` or `n = 1` every free action is conjugate to the
/// translation action.  For `n = 2k-1` with `k > 1` the result is one
/// [`Stratum`] per divisor `d > 1` of `ell` per class of `Q_d^k`, listed
/// in increasing `d`, then increasing class representative.  Prime
/// divisors get their torsion descriptor from `records`.
pub fn classify_actions(ell: u64, n: u64, records: &ClassDataSet) -> Result<ClassificationResult> {
    check_ell(ell)?;
    if n < 1 {
        return Err(Error::precondition("n must be at least 1"));
    }
    if n == 1 || n.is_multiple_of(2) {
        return Ok(ClassificationResult {
            ell,
            n,
            k: if n % 2 == 1 { n.div_ceil(2) } else { 0 },
            kind: ClassificationKind::SingleClass,
            strata: Vec::new(),
            countably_infinite: false,
        });
    }
    let k = n.div_ceil(2);
    let mut strata = Vec::new();
    for d in proper_divisors(ell) {
        let h0 = H0Descriptor::for_divisor(d, records)?;
        let partition = qdk_partition(d, k)?;
        let rank = structure_rank(d)?;
        let bound = indeterminacy_bound(d, k)?;
        for rep in partition.representatives() {
            strata.push(Stratum {
                d,
                q_class: rep,
                lattice_rank: rank,
                h0_descriptor: h0.clone(),
                fiber_bound: bound,
            });
        }
    }
    Ok(ClassificationResult {
        ell,
        n,
        k,
        kind: ClassificationKind::Strata,
        strata,
        countably_infinite: k > 1,
    })
}

/// Number of strata for `C_ell`-actions on `S^{2k-1} x S^1`-type
/// dimensions: `sum over divisors d > 1 of ell of |Q_d^k|`.
pub fn stratum_count(ell: u64, k: u64) -> Result<u64> {
    check_ell(ell)?;
    if k < 2 {
        return Err(Error::precondition("k must be at least 2"));
    }
    let mut count = 0u64;
    for d in proper_divisors(ell) {
        count += qdk_partition(d, k)?.class_count() as u64;
    }
    Ok(count)
}

/// Order bookkeeping for the group `hMod(d, k)` of homotopy classes of
/// self-homotopy-equivalences `A x (C_2 x B)` acting on a stratum's
/// structure set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HModReport {
    /// Modulus.
    pub d: u64,
    /// Half-dimension.
    pub k: u64,
    /// Order `2 d^2` of the abelian normal subgroup `A`.
    pub a_order: u64,
    /// `gcd(2k, phi(d))`, the exponent cutting out `B` inside
    /// `Aut(C_d)`.
    pub e: u64,
    /// Order of `B = {a : a^e = 1}` in `(Z/d)^*` (equal to `e` for prime
    /// `d`, possibly larger for composite `d`).
    pub b_order: u64,
    /// `|A| * |C_2| * |B| = 2 d^2 * 2 * b_order`.
    pub total_order: u64,
    /// Order `4 e` of the quotient that actually acts effectively on the
    /// parameter space.
    pub effective_quotient_order: u64,
    /// True when `b_order != e`, i.e. the exponent-`e` subgroup is larger
    /// than cyclic of order `e` (possible for composite `d`).
    pub discrepancy_flag: bool,
}

/// Compute the order data of `hMod(d, k)` for odd square-free `d > 1`,
/// `k > 1`.
pub fn hmod_report(d: u64, k: u64) -> Result<HModReport> {
    check_modulus(d)?;
    if k < 2 {
        return Err(Error::precondition("k must be at least 2"));
    }
    let phi = totient(d);
    let e = num_integer::gcd(2 * k, phi);
    // The defining identity behind the fiber bound: gcd(2k, phi(d)) =
    // 2 gcd(k, phi(d)/2), since phi(d) is even and 2 | 2k.
    debug_assert_eq!(e, 2 * num_integer::gcd(k, phi / 2));
    let b_order = exponent_subgroup(d, e)?.len() as u64;
    Ok(HModReport {
        d,
        k,
        a_order: 2 * d * d,
        e,
        b_order,
        total_order: 2 * d * d * 2 * b_order,
        effective_quotient_order: 4 * e,
        discrepancy_flag: b_order != e,
    })
}

/// The parameter space of one stratum: a free lattice plus the torsion
/// descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HybridDescriptor {
    /// Rank of the free factor `Z^{(d-1)/2}`.
    pub lattice_rank: u64,
    /// The torsion factor.
    pub h0: H0Descriptor,
}

/// Assemble the hybrid parameter-space descriptor
/// `Z^{(d-1)/2} x H_0(C_2; Wh_0(C_d))` for one stratum.
pub fn hybrid_structure_descriptor(d: u64, k: u64, h0: H0Descriptor) -> Result<HybridDescriptor> {
    check_modulus(d)?;
    if k < 2 {
        return Err(Error::precondition("k must be at least 2"));
    }
    Ok(HybridDescriptor {
        lattice_rank: structure_rank(d)?,
        h0,
    })
}

/// Quotient of an involuted module by its subgroup of skew-evens.
///
/// The module stores the involution `mu` already negated relative to the
/// standard one (the standard involution on `Wh_0(C_d)` acts as negative
/// on class groups), so the skew-evens are `{b + mu(b)}` and the quotient
/// is `A / (1 + mu) A` — the coinvariants of `-mu`.  The sign convention
/// is pinned by `mu = -id` on `Z/3`, where the answer is `Z/3`.
pub fn si_quotient(wh0: &GroupWithInvolution) -> FgAbGroup {
    wh0.negated().coinvariants()
}
