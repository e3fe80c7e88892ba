//! Lens spaces `L(d; q_1, ..., q_k)` and their classification invariants.
//!
//! A lens space here is the quotient of the unit sphere `S^{2k-1}` in `C^k`
//! by the `Z/d`-action rotating coordinate `i` by `zeta_d^{q_i}`, with `d`
//! odd and square-free and every rotation a unit mod `d`.  The module
//! computes:
//!
//! * the Postnikov invariant (product of rotations mod `d`) and linking
//!   form, which control the homotopy type;
//! * homotopy equivalence via the unit-class partition of [`crate::modular`];
//! * homeomorphism by exhausting unit/permutation/sign moves on the
//!   rotation data;
//! * the Atiyah–Singer rho invariant as an exact vector of cyclotomic
//!   numbers, with exact zero tests for differences;
//! * numeric invariants of the surrounding surgery-theoretic bookkeeping:
//!   Whitehead-group ranks, structure-set lattice ranks, the order bound on
//!   a unit from the second stage of the Atiyah–Hirzebruch spectral
//!   sequence, and the relevant page of that spectral sequence itself.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::abelian::FgAbGroup;
use crate::cyclotomic::CyclotomicNumber;
use crate::modular::{self, is_valid_modulus, mulmod, qdk_class_of};
use crate::{Error, Result};

/// Largest `k` for which the homeomorphism search (over `phi(d) * k!` sign
/// and permutation moves) is attempted.
pub const HOMEOMORPHISM_K_CAP: usize = 8;

/// A lens space `L(d; q_1, ..., q_k)`: `d` odd square-free `> 1`, each
/// rotation a unit mod `d`, stored reduced to `[1, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensSpace {
    d: u64,
    rotations: Vec<u64>,
}

impl LensSpace {
    /// Validate and build a lens space; rotations are reduced mod `d`.
    pub fn new(d: u64, rotations: &[u64]) -> Result<Self> {
        if !is_valid_modulus(d) {
            return Err(Error::precondition(format!(
                "lens space order must be odd, square-free and greater than 1, got {d}"
            )));
        }
        if rotations.is_empty() {
            return Err(Error::precondition(
                "a lens space needs at least one rotation parameter",
            ));
        }
        let mut reduced = Vec::with_capacity(rotations.len());
        for &q in rotations {
            let r = q % d;
            if r == 0 || r.gcd(&d) != 1 {
                return Err(Error::precondition(format!(
                    "rotation {q} is not a unit modulo {d}"
                )));
            }
            reduced.push(r);
        }
        Ok(LensSpace {
            d,
            rotations: reduced,
        })
    }

    /// The order `d` of the fundamental group.
    pub fn order(&self) -> u64 {
        self.d
    }

    /// The reduced rotation parameters `q_1, ..., q_k`.
    pub fn rotations(&self) -> &[u64] {
        &self.rotations
    }

    /// Half-dimension `k`; the space is `S^{2k-1}/(Z/d)`.
    pub fn k(&self) -> usize {
        self.rotations.len()
    }

    /// Dimension `2k - 1` of the manifold.
    pub fn dimension(&self) -> usize {
        2 * self.k() - 1
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let qs: Vec<String> = self.rotations.iter().map(|q| q.to_string()).collect();
        write!(f, "L({}; {})", self.d, qs.join(","))
    }
}

/// The Postnikov invariant `q_1 * ... * q_k mod d`, a unit mod `d`.
pub fn postnikov_invariant(l: &LensSpace) -> u64 {
    l.rotations
        .iter()
        .fold(1 % l.d, |acc, &q| mulmod(acc, q, l.d))
}

/// The linking form of `L(d; q, ...)` on its middle-dimensional torsion: the
/// class of `q/d` in `Q/Z`, returned as a reduced fraction in `[0, 1)`.
///
/// `q` must be a unit mod `d`; `k >= 1` fixes which middle homology carries
/// the pairing but does not change the value.
pub fn linking_form(d: u64, q: u64, k: u64) -> Result<Ratio<u64>> {
    if d < 2 {
        return Err(Error::precondition(format!(
            "linking form needs a cyclic group of order > 1, got {d}"
        )));
    }
    if k < 1 {
        return Err(Error::precondition("k must be at least 1"));
    }
    let q = q % d;
    if q == 0 || q.gcd(&d) != 1 {
        return Err(Error::precondition(format!("{q} is not a unit modulo {d}")));
    }
    Ok(Ratio::new(q, d))
}

fn check_comparable(a: &LensSpace, b: &LensSpace) -> Result<()> {
    if a.d != b.d {
        return Err(Error::precondition(format!(
            "lens spaces with different fundamental group orders {} and {} are incomparable",
            a.d, b.d
        )));
    }
    if a.k() != b.k() {
        return Err(Error::precondition(format!(
            "lens spaces of different dimensions {} and {} are incomparable",
            a.dimension(),
            b.dimension()
        )));
    }
    Ok(())
}

/// Homotopy equivalence of lens spaces with the same `d` and `k`: the
/// products of rotations must land in the same class of the partition of
/// units by `q ~ a^k q` and `q ~ -q`.
pub fn homotopy_equivalent(a: &LensSpace, b: &LensSpace) -> Result<bool> {
    check_comparable(a, b)?;
    let k = a.k() as u64;
    let ca = qdk_class_of(a.d, k, postnikov_invariant(a))?;
    let cb = qdk_class_of(b.d, k, postnikov_invariant(b))?;
    Ok(ca == cb)
}

/// A witness that two lens spaces are homeomorphic: rotations match under
/// `q'_i = sign_i * unit * q_{perm(i)} (mod d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomeomorphismWitness {
    /// The global unit `u`.
    pub unit: u64,
    /// `perm[i]` is the index into the first space's rotations matched to
    /// rotation `i` of the second space.
    pub perm: Vec<usize>,
    /// Per-coordinate signs, `+1` or `-1`.
    pub signs: Vec<i8>,
}

impl HomeomorphismWitness {
    /// Product of the signs: the orientation factor picked up by the rho
    /// vector under this witness.
    pub fn sign_product(&self) -> i8 {
        self.signs.iter().product()
    }
}

/// Depth-first matching of rotations of `b` against rotations of `a` scaled
/// by `u`, collecting every (or just one) witness for this `u`.
#[allow(clippy::too_many_arguments)] // recursive search state, not an API
fn match_rotations(
    a: &LensSpace,
    b: &LensSpace,
    u: u64,
    pos: usize,
    used: &mut Vec<bool>,
    perm: &mut Vec<usize>,
    signs: &mut Vec<i8>,
    out: &mut Vec<HomeomorphismWitness>,
    all: bool,
) {
    let d = a.d;
    let k = a.k();
    if pos == k {
        out.push(HomeomorphismWitness {
            unit: u,
            perm: perm.clone(),
            signs: signs.clone(),
        });
        return;
    }
    let target = b.rotations[pos];
    for t in 0..k {
        if used[t] {
            continue;
        }
        let scaled = mulmod(u, a.rotations[t], d);
        // d odd makes +scaled and -scaled distinct, so the sign is forced.
        let sign = if scaled == target {
            Some(1i8)
        } else if d - scaled == target {
            Some(-1i8)
        } else {
            None
        };
        if let Some(s) = sign {
            used[t] = true;
            perm.push(t);
            signs.push(s);
            match_rotations(a, b, u, pos + 1, used, perm, signs, out, all);
            signs.pop();
            perm.pop();
            used[t] = false;
            if !all && !out.is_empty() {
                return;
            }
        }
    }
}

fn homeomorphism_search(
    a: &LensSpace,
    b: &LensSpace,
    all: bool,
) -> Result<Vec<HomeomorphismWitness>> {
    check_comparable(a, b)?;
    if a.k() > HOMEOMORPHISM_K_CAP {
        return Err(Error::precondition(format!(
            "homeomorphism search is capped at k <= {HOMEOMORPHISM_K_CAP}, got k = {}",
            a.k()
        )));
    }
    let units = modular::unit_group(a.d)?;
    let mut out = Vec::new();
    for &u in &units.units {
        let mut used = vec![false; a.k()];
        let mut perm = Vec::with_capacity(a.k());
        let mut signs = Vec::with_capacity(a.k());
        match_rotations(a, b, u, 0, &mut used, &mut perm, &mut signs, &mut out, all);
        if !all && !out.is_empty() {
            break;
        }
    }
    Ok(out)
}

/// Homeomorphism test by exhausting all `unit * permutation * sign` moves on
/// the rotation data (the classical isometry classification of lens spaces).
pub fn homeomorphic(a: &LensSpace, b: &LensSpace) -> Result<bool> {
    Ok(!homeomorphism_search(a, b, false)?.is_empty())
}

/// All homeomorphism witnesses between two lens spaces.
pub fn homeomorphism_witnesses(a: &LensSpace, b: &LensSpace) -> Result<Vec<HomeomorphismWitness>> {
    homeomorphism_search(a, b, true)
}

/// The rho invariant of a lens space: the vector of exact cyclotomic values
///
/// `rho(j) = prod_i (zeta^{j q_i} + 1) / (zeta^{j q_i} - 1)`,  `j = 1, ..., d-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoVector {
    d: u64,
    /// `values[j - 1]` is `rho(j)`.
    values: Vec<CyclotomicNumber>,
}

impl RhoVector {
    /// The order `d`; entries are indexed by `1 <= j < d`.
    pub fn order(&self) -> u64 {
        self.d
    }

    /// The value at index `j` (`1 <= j < d`).
    pub fn value(&self, j: u64) -> &CyclotomicNumber {
        assert!(
            j >= 1 && j < self.d,
            "rho index {j} out of range 1..{}",
            self.d
        );
        &self.values[(j - 1) as usize]
    }

    /// All values in index order.
    pub fn values(&self) -> &[CyclotomicNumber] {
        &self.values
    }

    /// True when every component is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Componentwise difference with another vector over the same `d`.
    pub fn sub(&self, other: &RhoVector) -> Result<RhoVector> {
        if self.d != other.d {
            return Err(Error::precondition(format!(
                "rho vectors over different orders {} and {} are incomparable",
                self.d, other.d
            )));
        }
        Ok(RhoVector {
            d: self.d,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(x, y)| x.sub(y))
                .collect(),
        })
    }
}

/// The single factor `(zeta^m + 1)/(zeta^m - 1)` of the rho product,
/// for `m` not divisible by `d` (so the denominator is nonzero).
fn rho_factor(d: u64, m: u64) -> CyclotomicNumber {
    let zm = CyclotomicNumber::zeta_pow(d, (m % d) as i64);
    let one = CyclotomicNumber::one(d);
    zm.add(&one).div(&zm.sub(&one))
}

/// Compute the rho invariant of `l` exactly.
///
/// The values satisfy the conjugation symmetry `rho(d - j) = conj(rho(j))`,
/// which is checked (as an internal self-test of the arithmetic) when debug
/// assertions are on.
pub fn rho_invariant(l: &LensSpace) -> RhoVector {
    let d = l.d;
    let values: Vec<CyclotomicNumber> = (1..d)
        .map(|j| {
            l.rotations
                .iter()
                .map(|&q| rho_factor(d, mulmod(j, q, d)))
                .fold(CyclotomicNumber::one(d), |acc, f| acc.mul(&f))
        })
        .collect();
    let rho = RhoVector { d, values };
    #[cfg(debug_assertions)]
    for j in 1..d {
        debug_assert!(
            *rho.value(d - j) == rho.value(j).conjugate(),
            "conjugation symmetry failed at j = {j}"
        );
    }
    rho
}

/// The componentwise difference `rho(a) - rho(b)` of two lens spaces over
/// the same `d` (their dimensions may differ).
pub fn rho_difference(a: &LensSpace, b: &LensSpace) -> Result<RhoVector> {
    if a.d != b.d {
        return Err(Error::precondition(format!(
            "lens spaces with different fundamental group orders {} and {} have incomparable rho vectors",
            a.d, b.d
        )));
    }
    rho_invariant(a).sub(&rho_invariant(b))
}

/// Whether the rho vectors of two lens spaces agree after normalizing by a
/// homeomorphism witness.
///
/// A witness `q'_i = e_i u q_{perm(i)}` forces the identity
/// `rho_b(j) = (prod e_i) * rho_a(j u)`, so the comparison reindexes by `u`
/// and twists by the sign product; the raw difference [`rho_difference`] is
/// deliberately left un-normalized.  Returns `false` when the spaces are not
/// homeomorphic at all.
pub fn rho_difference_zero_after_homeomorphism(a: &LensSpace, b: &LensSpace) -> Result<bool> {
    let witnesses = homeomorphism_witnesses(a, b)?;
    if witnesses.is_empty() {
        return Ok(false);
    }
    let rho_a = rho_invariant(a);
    let rho_b = rho_invariant(b);
    let minus_one = CyclotomicNumber::from_integer(a.d, BigInt::from(-1));
    // Distinct witnesses can only differ in (unit, sign product) as far as
    // the rho identity is concerned.
    let mut seen: Vec<(u64, i8)> = Vec::new();
    'witness: for w in &witnesses {
        let key = (w.unit, w.sign_product());
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        for j in 1..a.d {
            let reindexed = rho_a.value(mulmod(j, w.unit, a.d));
            let expected = if w.sign_product() == 1 {
                reindexed.clone()
            } else {
                reindexed.mul(&minus_one)
            };
            if *rho_b.value(j) != expected {
                continue 'witness;
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// Rank of the Whitehead group `Wh(Z/p)` for an odd prime `p`: `(p - 3)/2`.
pub fn wh1_rank_prime(p: u64) -> Result<u64> {
    if p < 3 || !modular::is_prime(p) {
        return Err(Error::precondition(format!(
            "Whitehead rank formula needs an odd prime, got {p}"
        )));
    }
    Ok((p - 3) / 2)
}

/// Rank `(d - 1)/2` of the free lattice in the structure-set parametrization
/// for a cyclic group of odd square-free order `d > 1`.
pub fn structure_rank(d: u64) -> Result<u64> {
    if !is_valid_modulus(d) {
        return Err(Error::precondition(format!(
            "structure rank needs an odd square-free order > 1, got {d}"
        )));
    }
    Ok((d - 1) / 2)
}

/// Upper bound `2 d^2` on the order of the ambiguity unit arising from the
/// `S^1`-fibration comparison, for odd `d > 1` (square-freeness not needed).
pub fn eps_order_bound(d: u64) -> Result<u64> {
    if d < 2 || d.is_multiple_of(2) {
        return Err(Error::precondition(format!(
            "epsilon order bound needs an odd d > 1, got {d}"
        )));
    }
    Ok(2 * d * d)
}

/// One cell of the second page of the Atiyah–Hirzebruch spectral sequence
/// for `L^{2k-1} -> L-theory`, in homological bidegree `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E2Cell {
    /// Homological degree in the base.
    pub i: u64,
    /// Coefficient degree (connective L-theory of `Z`).
    pub j: u64,
    /// The group sitting in this cell.
    pub group: FgAbGroup,
}

/// The supported part of the E2 page in total degree `<= 2k`, plus the
/// product of the cell orders along total degree `2k - 1` (the order bound
/// for the relevant homotopy-fiber obstruction group).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AhssE2Page {
    /// Fundamental group order.
    pub d: u64,
    /// Half-dimension of the lens space.
    pub k: u64,
    /// Nonzero cells with `i + j <= 2k`, ordered by `(i, j)`.
    pub cells: Vec<E2Cell>,
    /// Product of `|E2_{i,j}|` over supported cells with `i + j = 2k - 1`;
    /// always an odd power of `d`.  Serialized as a decimal string.
    #[serde(with = "bigint_string")]
    pub h_order_bound: BigInt,
}

/// Decimal-string serde for `BigInt` fields (keeps JSON output free of
/// limb-level representation details).
mod bigint_string {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse()
            .map_err(|_| D::Error::custom(format!("invalid integer {text:?}")))
    }
}

/// The group at bidegree `(i, j)` of the E2 page for `L^{2k-1}`:
/// `H_i(L^{2k-1}; L<1>_j(Z))` — `Z` for `i = 2k-1` and `j > 0` divisible by
/// 4, `Z/d` for odd `0 < i < 2k-1` and `j > 0` divisible by 4, zero
/// otherwise.
fn e2_cell_group(d: u64, k: u64, i: u64, j: u64) -> FgAbGroup {
    let top = 2 * k - 1;
    if j == 0 || !j.is_multiple_of(4) {
        return FgAbGroup::trivial();
    }
    if i == top {
        FgAbGroup::free(1)
    } else if i % 2 == 1 && 0 < i && i < top {
        FgAbGroup::cyclic(d)
    } else {
        FgAbGroup::trivial()
    }
}

/// Tabulate the supported E2 cells in total degree `<= 2k` and the order
/// bound along total degree `2k - 1`.
pub fn ahss_e2_page(d: u64, k: u64) -> Result<AhssE2Page> {
    if !is_valid_modulus(d) {
        return Err(Error::precondition(format!(
            "spectral sequence page needs an odd square-free order > 1, got {d}"
        )));
    }
    if k < 1 {
        return Err(Error::precondition("k must be at least 1"));
    }
    let mut cells = Vec::new();
    for i in 0..=2 * k {
        for j in 0..=(2 * k - i) {
            let group = e2_cell_group(d, k, i, j);
            if !group.is_trivial() {
                cells.push(E2Cell { i, j, group });
            }
        }
    }
    let mut bound = BigInt::one();
    for cell in &cells {
        if cell.i + cell.j == 2 * k - 1 {
            let order = cell
                .group
                .order()
                .expect("cells on the bound line are finite");
            bound *= order;
        }
    }
    debug_assert!(bound.is_odd(), "order bound must be odd for odd d");
    Ok(AhssE2Page {
        d,
        k,
        cells,
        h_order_bound: bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens(d: u64, qs: &[u64]) -> LensSpace {
        LensSpace::new(d, qs).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(LensSpace::new(9, &[1]).is_err()); // not square-free
        assert!(LensSpace::new(6, &[1]).is_err()); // even
        assert!(LensSpace::new(7, &[]).is_err()); // no rotations
        assert!(LensSpace::new(15, &[5, 1]).is_err()); // 5 not a unit
        let l = lens(7, &[9, 1]);
        assert_eq!(l.rotations(), &[2, 1]); // reduced mod 7
        assert_eq!(l.dimension(), 3);
        assert_eq!(l.to_string(), "L(7; 2,1)");
    }

    #[test]
    fn postnikov_and_linking() {
        assert_eq!(postnikov_invariant(&lens(7, &[2, 1])), 2);
        assert_eq!(postnikov_invariant(&lens(7, &[3, 3])), 2);
        assert_eq!(postnikov_invariant(&lens(15, &[2, 4, 7])), 11); // 56 mod 15
        assert_eq!(linking_form(7, 8, 2).unwrap(), Ratio::new(1, 7));
        assert_eq!(linking_form(5, 3, 3).unwrap(), Ratio::new(3, 5));
        assert!(linking_form(15, 3, 1).is_err());
    }

    #[test]
    fn homotopy_equivalence_examples() {
        // Products 1 and 2 mod 7; 3^2 = 2 links the classes for k = 2.
        assert!(homotopy_equivalent(&lens(7, &[1, 1]), &lens(7, &[2, 1])).unwrap());
        // Mod 5 with k = 2 the squares {1, 4} do not reach 2.
        assert!(!homotopy_equivalent(&lens(5, &[1, 1]), &lens(5, &[2, 1])).unwrap());
        // Incomparable inputs are errors, not `false`.
        assert!(homotopy_equivalent(&lens(7, &[1, 1]), &lens(5, &[1, 1])).is_err());
        assert!(homotopy_equivalent(&lens(7, &[1, 1]), &lens(7, &[1, 1, 1])).is_err());
    }

    #[test]
    fn homeomorphism_examples() {
        // L(7;2,1) is not homeomorphic to L(7;1,1) (no unit sends {1,1} to
        // {2,1} up to signs), although they are homotopy equivalent.
        assert!(!homeomorphic(&lens(7, &[1, 1]), &lens(7, &[2, 1])).unwrap());
        // Scaling by a unit is a homeomorphism.
        assert!(homeomorphic(&lens(7, &[1, 2]), &lens(7, &[3, 6])).unwrap());
        // Signs and permutations are homeomorphisms.
        assert!(homeomorphic(&lens(5, &[1, 1]), &lens(5, &[4, 1])).unwrap());
        assert!(homeomorphic(&lens(15, &[1, 2, 4]), &lens(15, &[4, 13, 1])).unwrap());
        let w = homeomorphism_witnesses(&lens(5, &[1, 1]), &lens(5, &[4, 1])).unwrap();
        assert!(!w.is_empty());
        assert!(w.iter().any(|w| w.sign_product() == -1));
    }

    #[test]
    fn rho_basics() {
        // rho(L(5;1,1)) at j: ((zeta^j+1)/(zeta^j-1))^2, nonzero.
        let rho = rho_invariant(&lens(5, &[1, 1]));
        assert!(!rho.is_zero());
        // Conjugation symmetry (also checked in debug assertions).
        for j in 1..5 {
            assert_eq!(*rho.value(5 - j), rho.value(j).conjugate());
        }
        // rho of a space minus itself is exactly zero.
        let diff = rho_difference(&lens(5, &[1, 1]), &lens(5, &[1, 1])).unwrap();
        assert!(diff.is_zero());
        // Different orders are incomparable.
        assert!(rho_difference(&lens(5, &[1]), &lens(7, &[1])).is_err());
    }

    #[test]
    fn rho_distinguishes_homotopy_equivalent_spaces() {
        let a = lens(7, &[1, 1]);
        let b = lens(7, &[2, 1]);
        let diff = rho_difference(&a, &b).unwrap();
        assert!(!diff.is_zero());
        assert!(!rho_difference_zero_after_homeomorphism(&a, &b).unwrap());
    }

    #[test]
    fn rho_normalization_under_homeomorphism() {
        // L(5;1,1) vs L(5;4,1): homeomorphic via a sign flip; the raw
        // difference is nonzero but the normalized comparison vanishes.
        let a = lens(5, &[1, 1]);
        let b = lens(5, &[4, 1]);
        assert!(homeomorphic(&a, &b).unwrap());
        assert!(!rho_difference(&a, &b).unwrap().is_zero());
        assert!(rho_difference_zero_after_homeomorphism(&a, &b).unwrap());
        // Unit scaling: reindexing hides in the normalized comparison.
        let c = lens(7, &[1, 2, 3]);
        let d = lens(7, &[2, 4, 6]);
        assert!(rho_difference_zero_after_homeomorphism(&c, &d).unwrap());
    }

    #[test]
    fn numeric_invariants() {
        assert_eq!(wh1_rank_prime(3).unwrap(), 0);
        assert_eq!(wh1_rank_prime(5).unwrap(), 1);
        assert_eq!(wh1_rank_prime(23).unwrap(), 10);
        assert!(wh1_rank_prime(15).is_err());
        assert!(wh1_rank_prime(2).is_err());
        assert_eq!(structure_rank(3).unwrap(), 1);
        assert_eq!(structure_rank(15).unwrap(), 7);
        assert_eq!(structure_rank(105).unwrap(), 52);
        assert!(structure_rank(9).is_err());
        assert_eq!(eps_order_bound(3).unwrap(), 18);
        assert_eq!(eps_order_bound(9).unwrap(), 162); // square-free not required
        assert!(eps_order_bound(2).is_err());
    }

    #[test]
    fn ahss_page_examples() {
        // k = 2: no supported cell in total degree 3, bound 1.
        let page = ahss_e2_page(5, 2).unwrap();
        assert!(page.cells.is_empty());
        assert_eq!(page.h_order_bound, BigInt::one());
        // k = 4: cells (1,4) and (3,4); only (3,4) sits on degree 7.
        let page = ahss_e2_page(5, 4).unwrap();
        let coords: Vec<(u64, u64)> = page.cells.iter().map(|c| (c.i, c.j)).collect();
        assert_eq!(coords, vec![(1, 4), (3, 4)]);
        assert!(page.cells.iter().all(|c| c.group == FgAbGroup::cyclic(5)));
        assert_eq!(page.h_order_bound, BigInt::from(5));
        // k = 5, d = 7: (5,4) and (1,8) land on degree 9; bound 49.
        let page = ahss_e2_page(7, 5).unwrap();
        assert_eq!(page.h_order_bound, BigInt::from(49));
        let on_line: Vec<(u64, u64)> = page
            .cells
            .iter()
            .filter(|c| c.i + c.j == 9)
            .map(|c| (c.i, c.j))
            .collect();
        assert_eq!(on_line, vec![(1, 8), (5, 4)]);
    }
}
