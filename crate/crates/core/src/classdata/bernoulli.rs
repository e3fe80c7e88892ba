//! Analytic computation of minus class numbers of `Q(zeta_p)`.
//!
//! For an odd prime `p` the analytic class number formula gives
//!
//! ```text
//! h_p^- = 2p * prod_{chi odd} ( -B_{1,chi} / 2 )
//! ```
//!
//! where the product runs over the odd characters `chi` of `(Z/p)^*` and
//! `B_{1,chi} = (1/p) * sum_{a=1}^{p-1} a chi(a)` is a generalized
//! Bernoulli number.  Writing `chi = omega^j` for a fixed generator
//! `omega` of the character group, each factor lives in the cyclotomic
//! field `Q(zeta_{p-1})`, and the whole product is a rational integer.
//! Everything here is computed exactly in that field; any failure of the
//! final value to be a positive rational integer is a hard internal error,
//! never a rounding concern.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::CyclotomicNumber;
use crate::modular::{factorize, is_prime, powmod};
use crate::{Error, Result};

/// Largest prime accepted by [`minus_class_number`]: the factor count and
/// coefficient sizes grow quickly, and the published data this oracle
/// cross-checks stops well below this point.
pub const MINUS_CLASS_NUMBER_CAP: u64 = 300;

/// Smallest primitive root modulo an odd prime `p`.
fn primitive_root(p: u64) -> u64 {
    let phi = p - 1;
    let prime_factors: Vec<u64> = factorize(phi).into_iter().map(|(q, _)| q).collect();
    (2..p)
        .find(|&g| prime_factors.iter().all(|&q| powmod(g, phi / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// The minus class number `h_p^-` of `Q(zeta_p)` for an odd prime
/// `p <= 300`, computed exactly from generalized Bernoulli numbers.
///
/// This is independent of any bundled table: the only inputs are `p`, a
/// primitive root modulo `p`, and exact arithmetic in `Q(zeta_{p-1})`.
pub fn minus_class_number(p: u64) -> Result<BigInt> {
    if p < 3 || !is_prime(p) {
        return Err(Error::precondition(format!("{p} is not an odd prime")));
    }
    if p > MINUS_CLASS_NUMBER_CAP {
        return Err(Error::precondition(format!(
            "p = {p} exceeds the minus-class-number cap {MINUS_CLASS_NUMBER_CAP}"
        )));
    }
    let n = p - 1; // conductor of the character values
    let g = primitive_root(p);

    // index[a] = discrete log of a base g, so omega(a) = zeta_n^{index[a]}.
    let mut index = vec![0u64; p as usize];
    let mut pow = 1u64;
    for i in 0..n {
        index[pow as usize] = i;
        pow = pow * g % p;
    }

    // prod over odd j of -B_{1, omega^j} / 2, each factor written as
    // ( -sum_a a * zeta_n^{j * index[a]} ) / (2p).
    let two_p = BigInt::from(2 * p);
    let mut product = CyclotomicNumber::one(n);
    for j in (1..n).step_by(2) {
        let mut coeffs = vec![BigInt::zero(); n as usize];
        for a in 1..p {
            coeffs[((index[a as usize] * j) % n) as usize] -= BigInt::from(a);
        }
        let factor = CyclotomicNumber::from_coeffs(n, &coeffs, two_p.clone());
        product = product.mul(&factor);
    }
    let h = CyclotomicNumber::from_integer(n, two_p).mul(&product);

    let (num, den) = h.constant_value().ok_or_else(|| {
        Error::internal(format!(
            "minus class number for p = {p} did not reduce to a rational"
        ))
    })?;
    if !den.is_one() {
        return Err(Error::internal(format!(
            "minus class number for p = {p} is not an integer: {num}/{den}"
        )));
    }
    if !num.is_positive() {
        return Err(Error::internal(format!(
            "minus class number for p = {p} is not positive: {num}"
        )));
    }
    Ok(num)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(3), 2);
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(41), 6);
    }

    #[test]
    fn small_minus_class_numbers() {
        for p in [3, 5, 7, 11, 13, 17, 19] {
            assert_eq!(minus_class_number(p).unwrap(), BigInt::from(1), "p = {p}");
        }
        assert_eq!(minus_class_number(23).unwrap(), BigInt::from(3));
        assert_eq!(minus_class_number(29).unwrap(), BigInt::from(8));
        assert_eq!(minus_class_number(31).unwrap(), BigInt::from(9));
        assert_eq!(minus_class_number(37).unwrap(), BigInt::from(37));
        assert_eq!(minus_class_number(41).unwrap(), BigInt::from(121));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(minus_class_number(2).is_err());
        assert!(minus_class_number(15).is_err());
        assert!(minus_class_number(307).is_err());
    }
}
