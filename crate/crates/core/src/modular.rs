//! Unit groups `(Z/d)^x` for odd square-free moduli, and the partition of
//! units that indexes polarized homotopy types of quotient manifolds:
//! `q ~ q'` iff `a^k * q = +/- q' (mod d)` for some unit `a`.
//!
//! Everything here is exact machine-integer arithmetic; moduli are capped
//! (default `10^5`) so the dense unit enumeration stays cheap, and all
//! intermediate products go through `u128`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Default upper bound on moduli accepted by the dense enumerations.
pub const MODULUS_CAP: u64 = 100_000;

/// Euler's totient by trial-division factorization.
///
/// Accepts any `d >= 1`; this is exact for all `u64` inputs (no
/// probabilistic primality anywhere).
pub fn totient(d: u64) -> u64 {
    assert!(d >= 1, "totient undefined for 0");
    let mut phi = d;
    for (p, _) in factorize(d) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Trial-division factorization, smallest prime first.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Deterministic primality by trial division (exact for all `u64`).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

/// `a * b mod m` without overflow.
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a^e mod m` by square-and-multiply.
pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Reject moduli outside the supported scope, with a message naming the
/// failed condition and an explicit enumeration cap.
fn check_modulus_with_cap(d: u64, cap: u64) -> Result<()> {
    if d <= 1 {
        return Err(Error::precondition(format!(
            "modulus must be greater than 1, got {d}"
        )));
    }
    if d.is_multiple_of(2) {
        return Err(Error::precondition(format!(
            "modulus must be odd, got even {d}"
        )));
    }
    if factorize(d).iter().any(|&(_, e)| e > 1) {
        return Err(Error::precondition(format!(
            "modulus must be square-free, got {d}"
        )));
    }
    if d > cap {
        return Err(Error::precondition(format!(
            "modulus {d} exceeds the enumeration cap {cap}"
        )));
    }
    Ok(())
}

/// Reject moduli outside the supported scope (odd, square-free, `> 1`,
/// at most [`MODULUS_CAP`]), with a message naming the failed condition.
pub fn check_modulus(d: u64) -> Result<()> {
    check_modulus_with_cap(d, MODULUS_CAP)
}

/// True if `d` is odd, square-free, and `> 1` — the moduli the
/// classification machinery accepts.
pub fn is_valid_modulus(d: u64) -> bool {
    d > 1 && d % 2 == 1 && factorize(d).iter().all(|&(_, e)| e == 1)
}

/// The unit group `(Z/d)^x` for odd square-free `d > 1`, as the sorted list
/// of unit residues, with the factorization of `d` for CRT bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitGroupModD {
    /// The modulus.
    pub d: u64,
    /// Sorted unit residues in `[1, d)`.
    pub units: Vec<u64>,
    /// Prime factors of `d` (each to the first power; `d` is square-free).
    pub prime_factors: Vec<u64>,
}

impl UnitGroupModD {
    /// Group order `phi(d)`.
    pub fn order(&self) -> u64 {
        self.units.len() as u64
    }

    /// Membership test for a residue.
    pub fn contains(&self, q: u64) -> bool {
        self.units.binary_search(&(q % self.d)).is_ok()
    }
}

/// Enumerate the unit group mod `d` (odd, square-free, `1 < d <= cap`).
pub fn unit_group_with_cap(d: u64, cap: u64) -> Result<UnitGroupModD> {
    check_modulus_with_cap(d, cap)?;
    let units: Vec<u64> = (1..d).filter(|&a| a.gcd(&d) == 1).collect();
    debug_assert_eq!(units.len() as u64, totient(d));
    Ok(UnitGroupModD {
        d,
        units,
        prime_factors: factorize(d).into_iter().map(|(p, _)| p).collect(),
    })
}

/// [`unit_group_with_cap`] at the default cap.
pub fn unit_group(d: u64) -> Result<UnitGroupModD> {
    unit_group_with_cap(d, MODULUS_CAP)
}

/// The partition of `(Z/d)^x` by `q ~ a^k q` and `q ~ -q`.
///
/// Two units are equivalent exactly when they differ by an element of the
/// subgroup generated by `-1` and the `k`-th powers, so the classes are the
/// cosets of that subgroup; each class is stored sorted, classes are ordered
/// by their smallest member, and the smallest member is the canonical
/// representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QdkPartition {
    /// The modulus.
    pub d: u64,
    /// The power exponent `k`.
    pub k: u64,
    /// Equivalence classes: each sorted ascending, ordered by representative.
    pub classes: Vec<Vec<u64>>,
}

impl QdkPartition {
    /// Number of classes.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The canonical representatives (smallest member of each class).
    pub fn representatives(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// The class containing `q`, if `q` is a unit.
    pub fn class_of(&self, q: u64) -> Option<&[u64]> {
        let q = q % self.d;
        self.classes
            .iter()
            .find(|c| c.binary_search(&q).is_ok())
            .map(|c| c.as_slice())
    }
}

/// The subgroup `{ +/- a^k : a unit }` as a sorted list.
fn sign_power_subgroup(group: &UnitGroupModD, k: u64) -> Vec<u64> {
    let d = group.d;
    let mut h: Vec<u64> = Vec::new();
    for &a in &group.units {
        let p = powmod(a, k, d);
        h.push(p);
        h.push(d - p);
    }
    h.sort_unstable();
    h.dedup();
    h
}

/// Compute the partition of `(Z/d)^x` by `q ~ a^k q` and `q ~ -q`.
pub fn qdk_partition_with_cap(d: u64, k: u64, cap: u64) -> Result<QdkPartition> {
    if k < 1 {
        return Err(Error::precondition("power exponent k must be at least 1"));
    }
    let group = unit_group_with_cap(d, cap)?;
    let h = sign_power_subgroup(&group, k);
    let mut seen = vec![false; d as usize];
    let mut classes: Vec<Vec<u64>> = Vec::new();
    for &q in &group.units {
        if seen[q as usize] {
            continue;
        }
        let mut class: Vec<u64> = h.iter().map(|&x| mulmod(x, q, d)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen[c as usize] = true;
        }
        classes.push(class);
    }
    Ok(QdkPartition { d, k, classes })
}

/// [`qdk_partition_with_cap`] at the default cap.
pub fn qdk_partition(d: u64, k: u64) -> Result<QdkPartition> {
    qdk_partition_with_cap(d, k, MODULUS_CAP)
}

/// Canonical representative (smallest equivalent unit) of `q` in the
/// partition of `(Z/d)^x` by `q ~ a^k q` and `q ~ -q`.
///
/// `q` must be a unit mod `d`.
pub fn qdk_class_of(d: u64, k: u64, q: u64) -> Result<u64> {
    if k < 1 {
        return Err(Error::precondition("power exponent k must be at least 1"));
    }
    let group = unit_group(d)?;
    let q = q % d;
    if q == 0 || q.gcd(&d) != 1 {
        return Err(Error::precondition(format!("{q} is not a unit modulo {d}")));
    }
    let h = sign_power_subgroup(&group, k);
    Ok(h.iter().map(|&x| mulmod(x, q, d)).min().expect("nonempty"))
}

/// The subgroup `{ a : a^e = 1 }` of `(Z/d)^x`, sorted ascending.
pub fn exponent_subgroup(d: u64, e: u64) -> Result<Vec<u64>> {
    if e < 1 {
        return Err(Error::precondition("exponent must be at least 1"));
    }
    let group = unit_group(d)?;
    Ok(group
        .units
        .iter()
        .copied()
        .filter(|&a| powmod(a, e, d) == 1)
        .collect())
}

/// The upper bound `8 * gcd(k, phi(d)/2)` on the number of polarized
/// homotopy types above a single unit class.
pub fn indeterminacy_bound(d: u64, k: u64) -> Result<u64> {
    if k < 1 {
        return Err(Error::precondition("power exponent k must be at least 1"));
    }
    if !is_valid_modulus(d) {
        return Err(Error::precondition(format!(
            "modulus must be odd, square-free and greater than 1, got {d}"
        )));
    }
    Ok(8 * k.gcd(&(totient(d) / 2)))
}
