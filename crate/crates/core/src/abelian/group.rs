//! Finitely generated abelian groups in canonical form.
//!
//! A group is stored as `Z^free_rank + Z/d_1 + ... + Z/d_t` with invariant
//! factors `2 <= d_1 | d_2 | ... | d_t`.  By the structure theorem this form
//! is unique, so structural equality of the stored data *is* isomorphism of
//! the groups — `PartialEq` is the isomorphism test.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::IntMatrix;
use super::snf;

/// A finitely generated abelian group in canonical (invariant-factor) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    free_rank: usize,
    /// Invariant factors, each `>= 2`, in a divisibility chain.
    invariant_factors: Vec<BigInt>,
}

impl FgAbGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        FgAbGroup {
            free_rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    /// The free group `Z^rank`.
    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// The cyclic group `Z/d` (`d = 0` gives `Z`, `d = 1` the trivial group).
    pub fn cyclic(d: impl Into<BigInt>) -> Self {
        Self::from_parts(0, [d.into()])
    }

    /// Build a canonical group from a free rank and any list of cyclic
    /// orders.
    ///
    /// The orders need not form a divisibility chain: units are dropped,
    /// zeros count toward the free rank, signs are ignored, and the rest is
    /// refined into a chain with gcd/lcm exchanges.
    pub fn from_parts(free_rank: usize, orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut free = free_rank;
        let mut factors: Vec<BigInt> = Vec::new();
        for d in orders {
            if d.is_zero() {
                free += 1;
            } else {
                let d = d.abs();
                if !d.is_one() {
                    factors.push(d);
                }
            }
        }
        if !is_divisibility_chain(&factors) {
            factors = refine_to_chain(factors);
        } else {
            factors.sort(); // a chain sorted by divisibility is sorted by size
        }
        FgAbGroup {
            free_rank: free,
            invariant_factors: factors,
        }
    }

    /// Rank of the free part.
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// The invariant factors `d_1 | d_2 | ... | d_t`, each at least 2.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// True for the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// True when the group is finite (no free part).
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// The order of the group, or `None` if it is infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for d in &self.invariant_factors {
            o *= d;
        }
        Some(o)
    }

    /// True when every invariant factor is 2 and the free part vanishes,
    /// i.e. the group is an elementary abelian 2-group (possibly trivial).
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.iter().all(|d| *d == BigInt::from(2))
    }

    /// Canonical form of the direct sum with another group.
    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        FgAbGroup::from_parts(
            self.free_rank + other.free_rank,
            self.invariant_factors
                .iter()
                .chain(&other.invariant_factors)
                .cloned(),
        )
    }

    /// The quotient `A/2A`, an elementary abelian 2-group: one `Z/2` for
    /// each free summand and each even invariant factor.
    pub fn mod2_quotient(&self) -> FgAbGroup {
        let rank = self.free_rank
            + self
                .invariant_factors
                .iter()
                .filter(|d| d.is_even())
                .count();
        FgAbGroup::from_parts(0, std::iter::repeat_n(BigInt::from(2), rank))
    }

    /// Order of the 2-torsion subgroup of the torsion part, `2^(# even
    /// invariant factors)`.
    pub fn two_torsion_order(&self) -> BigInt {
        let rank = self
            .invariant_factors
            .iter()
            .filter(|d| d.is_even())
            .count();
        BigInt::one() << rank
    }
}

fn is_divisibility_chain(factors: &[BigInt]) -> bool {
    factors.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}

/// Refine a multiset of cyclic orders (each >= 2) into a divisibility chain
/// with gcd/lcm exchanges: `Z/a + Z/b = Z/gcd + Z/lcm`.  This is the Smith
/// reduction of a diagonal matrix, so it needs no integer factorization.
fn refine_to_chain(factors: Vec<BigInt>) -> Vec<BigInt> {
    let diag = IntMatrix::diagonal(&factors);
    let dec = snf::smith_normal_form(&diag);
    dec.diagonal().into_iter().filter(|d| !d.is_one()).collect()
}

impl fmt::Display for FgAbGroup {
    /// Renders e.g. `0`, `Z`, `Z^2`, `Z/6`, `Z + Z/2 + Z/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

/// Serialized shape: invariant factors as decimal strings, so arbitrarily
/// large torsion survives JSON round-trips losslessly.
#[derive(Serialize, Deserialize)]
struct FgAbGroupRepr {
    free_rank: usize,
    invariant_factors: Vec<String>,
}

impl Serialize for FgAbGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FgAbGroupRepr {
            free_rank: self.free_rank,
            invariant_factors: self
                .invariant_factors
                .iter()
                .map(|d| d.to_string())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FgAbGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FgAbGroupRepr::deserialize(deserializer)?;
        let mut factors = Vec::with_capacity(repr.invariant_factors.len());
        for s in &repr.invariant_factors {
            let d: BigInt = s
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid invariant factor {s:?}")))?;
            factors.push(d);
        }
        Ok(FgAbGroup::from_parts(repr.free_rank, factors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization_drops_units_and_refines_chains() {
        // Z/1 disappears, Z/0 = Z.
        let g = FgAbGroup::from_parts(0, [1, 0, 6].map(BigInt::from));
        assert_eq!(g.free_rank(), 1);
        assert_eq!(g.invariant_factors(), &[BigInt::from(6)]);
        // Z/4 + Z/6 = Z/2 + Z/12.
        let g = FgAbGroup::from_parts(0, [4, 6].map(BigInt::from));
        assert_eq!(g.invariant_factors(), &[BigInt::from(2), BigInt::from(12)]);
        // Z/2 + Z/3 = Z/6.
        let g = FgAbGroup::from_parts(0, [2, 3].map(BigInt::from));
        assert_eq!(g, FgAbGroup::cyclic(6));
    }

    #[test]
    fn structural_equality_is_isomorphism() {
        let a = FgAbGroup::from_parts(0, [2, 6].map(BigInt::from));
        let b = FgAbGroup::from_parts(0, [6, 2].map(BigInt::from));
        let c = FgAbGroup::from_parts(0, [3, 4].map(BigInt::from));
        assert_eq!(a, b);
        // Z/3 + Z/4 = Z/12, which has the same order as Z/2 + Z/6 but is not
        // isomorphic to it.
        assert_eq!(c, FgAbGroup::cyclic(12));
        assert_ne!(a, c);
    }

    #[test]
    fn direct_sum_and_derived_quantities() {
        let a = FgAbGroup::cyclic(3);
        let b = FgAbGroup::from_parts(0, [2, 2, 2].map(BigInt::from));
        let s = a.direct_sum(&b);
        assert_eq!(
            s.invariant_factors(),
            &[BigInt::from(2), BigInt::from(2), BigInt::from(6)]
        );
        assert_eq!(s.order(), Some(BigInt::from(24)));
        assert_eq!(s.two_torsion_order(), BigInt::from(8));
        assert_eq!(s.mod2_quotient(), b);
        assert!(b.is_elementary_abelian_2());
        assert!(!s.is_elementary_abelian_2());
        assert!(FgAbGroup::trivial().is_elementary_abelian_2());
        assert_eq!(FgAbGroup::free(2).order(), None);
        assert_eq!(
            FgAbGroup::free(2).mod2_quotient().invariant_factors().len(),
            2
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(FgAbGroup::trivial().to_string(), "0");
        assert_eq!(FgAbGroup::free(1).to_string(), "Z");
        assert_eq!(FgAbGroup::free(3).to_string(), "Z^3");
        let g = FgAbGroup::from_parts(1, [2, 4].map(BigInt::from));
        assert_eq!(g.to_string(), "Z + Z/2 + Z/4");
    }

    #[test]
    fn serde_round_trip() {
        let g = FgAbGroup::from_parts(2, [2, 10].map(BigInt::from));
        let json = serde_json::to_string(&g).unwrap();
        let back: FgAbGroup = serde_json::from_str(&json).unwrap();
        assert_eq!(g, back);
    }
}
