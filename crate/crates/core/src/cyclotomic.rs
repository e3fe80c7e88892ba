//! Exact arithmetic in cyclotomic fields `Q(zeta_d)`.
//!
//! Elements are fractions `num/den` of integer-coefficient polynomials in
//! `zeta_d`, both reduced modulo the `d`-th cyclotomic polynomial `Phi_d`
//! (so their degrees stay below `phi(d)`).  Since `Phi_d` is irreducible
//! over `Q`, the quotient ring is a field: a fraction is zero exactly when
//! its numerator reduces to zero, and equality is cross-multiplication.
//! Keeping denominators symbolic means division never needs a modular
//! inverse, and every operation is exact.
//!
//! `Phi_d` is computed for arbitrary `d` (not just square-free) by the
//! recursive identity `x^d - 1 = prod_{e | d} Phi_e(x)`, with results
//! memoized process-wide.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::modular::totient;

// ---------------------------------------------------------------------------
// Dense polynomial helpers over Z.  Coefficient `i` is the degree-`i` term;
// the zero polynomial is the empty vector.
// ---------------------------------------------------------------------------

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

fn poly_neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|c| -c).collect()
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the *monic* polynomial `m` (exact over `Z`).
fn poly_rem_monic(a: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    let dm = m.len() - 1;
    debug_assert!(
        m.last().is_some_and(|c| c.is_one()),
        "divisor must be monic"
    );
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() > dm {
        // Cancel the leading term: r -= lead * x^(deg r - dm) * m.  The top
        // coefficient cancels exactly because m is monic, so pop it first.
        let lead = r.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - dm; // = deg(r) - dm for the pre-pop degree
        for (i, c) in m.iter().take(dm).enumerate() {
            if !c.is_zero() {
                let t = &lead * c;
                r[shift + i] -= t;
            }
        }
        trim(&mut r);
    }
    r
}

/// Exact quotient `a / m` for monic `m` dividing `a` exactly.
///
/// # Panics
/// Panics if the division leaves a remainder.
fn poly_div_exact_monic(a: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    let dm = m.len() - 1;
    debug_assert!(
        m.last().is_some_and(|c| c.is_one()),
        "divisor must be monic"
    );
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return Vec::new();
    }
    assert!(r.len() > dm, "division was not exact (degree too small)");
    let mut q = vec![BigInt::zero(); r.len() - dm];
    while r.len() > dm {
        let lead = r.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - dm;
        q[shift] = lead.clone();
        for (i, c) in m.iter().take(dm).enumerate() {
            if !c.is_zero() {
                let t = &lead * c;
                r[shift + i] -= t;
            }
        }
        trim(&mut r);
    }
    assert!(r.is_empty(), "division was not exact");
    q
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials.
// ---------------------------------------------------------------------------

static PHI_CACHE: Lazy<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The `d`-th cyclotomic polynomial as a dense coefficient vector,
/// computed by `Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e` and memoized.
///
/// Works for every `d >= 1`, in particular for the non-square-free
/// conductors that show up as character-value fields.
pub fn cyclotomic_polynomial(d: u64) -> Arc<Vec<BigInt>> {
    assert!(d >= 1, "cyclotomic polynomial needs d >= 1");
    if let Some(hit) = PHI_CACHE.lock().unwrap().get(&d) {
        return Arc::clone(hit);
    }
    let phi = if d == 1 {
        vec![BigInt::from(-1), BigInt::one()] // x - 1
    } else {
        // x^d - 1
        let mut xd1 = vec![BigInt::zero(); d as usize + 1];
        xd1[0] = BigInt::from(-1);
        xd1[d as usize] = BigInt::one();
        let mut quotient = xd1;
        for e in 1..d {
            if d.is_multiple_of(e) {
                let phi_e = cyclotomic_polynomial(e);
                quotient = poly_div_exact_monic(&quotient, &phi_e);
            }
        }
        quotient
    };
    debug_assert_eq!(phi.len() as u64 - 1, totient(d));
    let arc = Arc::new(phi);
    PHI_CACHE
        .lock()
        .unwrap()
        .entry(d)
        .or_insert_with(|| Arc::clone(&arc));
    arc
}

// ---------------------------------------------------------------------------
// Cyclotomic numbers.
// ---------------------------------------------------------------------------

/// An element of `Q(zeta_d)`, stored as a fraction of integer polynomials in
/// `zeta_d` reduced modulo `Phi_d`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    conductor: u64,
    num: Vec<BigInt>,
    den: Vec<BigInt>,
}

impl CyclotomicNumber {
    fn reduce(conductor: u64, p: &[BigInt]) -> Vec<BigInt> {
        let phi = cyclotomic_polynomial(conductor);
        poly_rem_monic(p, &phi)
    }

    /// Normalize: strip the gcd of all integer coefficients from both
    /// numerator and denominator, and make the denominator's leading
    /// coefficient positive.  This keeps intermediate sizes in check and
    /// makes equal construction paths produce identical representations.
    fn normalized(conductor: u64, num: Vec<BigInt>, den: Vec<BigInt>) -> Self {
        assert!(
            !den.is_empty(),
            "cyclotomic number with zero denominator (division by zero in Q(zeta_{conductor}))"
        );
        let mut num = num;
        let mut den = den;
        let mut content = BigInt::zero();
        for c in num.iter().chain(den.iter()) {
            content = content.gcd(c);
        }
        if !content.is_zero() && !content.is_one() {
            for c in num.iter_mut().chain(den.iter_mut()) {
                *c = &*c / &content;
            }
        }
        if den.last().expect("nonzero denominator").is_negative() {
            for c in num.iter_mut().chain(den.iter_mut()) {
                *c = -std::mem::take(c);
            }
        }
        CyclotomicNumber {
            conductor,
            num,
            den,
        }
    }

    fn from_reduced_pair(conductor: u64, num: &[BigInt], den: &[BigInt]) -> Self {
        Self::normalized(
            conductor,
            Self::reduce(conductor, num),
            Self::reduce(conductor, den),
        )
    }

    /// Zero in `Q(zeta_d)`.
    pub fn zero(conductor: u64) -> Self {
        CyclotomicNumber {
            conductor,
            num: Vec::new(),
            den: vec![BigInt::one()],
        }
    }

    /// One in `Q(zeta_d)`.
    pub fn one(conductor: u64) -> Self {
        Self::from_integer(conductor, BigInt::one())
    }

    /// The integer `n` as an element of `Q(zeta_d)`.
    pub fn from_integer(conductor: u64, n: BigInt) -> Self {
        Self::normalized(conductor, vec![n], vec![BigInt::one()])
    }

    /// The rational `num/den` (`den != 0`) as an element of `Q(zeta_d)`.
    pub fn from_rational(conductor: u64, num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::normalized(conductor, vec![num], vec![den])
    }

    /// The root of unity `zeta_d^m`.
    pub fn zeta_pow(conductor: u64, m: i64) -> Self {
        let m = m.rem_euclid(conductor as i64) as usize;
        let mut p = vec![BigInt::zero(); m + 1];
        p[m] = BigInt::one();
        Self::from_reduced_pair(conductor, &p, &[BigInt::one()])
    }

    /// Build `(sum_i coeffs[i] * zeta_d^i) / den` from integer data.
    pub fn from_coeffs(conductor: u64, coeffs: &[BigInt], den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_reduced_pair(conductor, coeffs, &[den])
    }

    /// The conductor `d` of the ambient field `Q(zeta_d)`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Numerator coefficients (reduced mod `Phi_d`, degree < `phi(d)`).
    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    /// Denominator coefficients (reduced mod `Phi_d`, nonzero).
    pub fn denominator(&self) -> &[BigInt] {
        &self.den
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "mixed conductors {} and {}",
            self.conductor, other.conductor
        );
    }

    /// Exact zero test: the reduced numerator vanishes.
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let num = poly_add(
            &poly_mul(&self.num, &other.den),
            &poly_mul(&other.num, &self.den),
        );
        let den = poly_mul(&self.den, &other.den);
        Self::from_reduced_pair(self.conductor, &num, &den)
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            num: poly_neg(&self.num),
            den: self.den.clone(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let num = poly_mul(&self.num, &other.num);
        let den = poly_mul(&self.den, &other.den);
        Self::from_reduced_pair(self.conductor, &num, &den)
    }

    /// Quotient.
    ///
    /// # Panics
    /// Panics if `other` is zero (division by zero in a field).
    pub fn div(&self, other: &Self) -> Self {
        self.check_same_field(other);
        assert!(
            !other.is_zero(),
            "division by zero in Q(zeta_{})",
            self.conductor
        );
        let num = poly_mul(&self.num, &other.den);
        let den = poly_mul(&self.den, &other.num);
        Self::from_reduced_pair(self.conductor, &num, &den)
    }

    /// The Galois image under `zeta_d -> zeta_d^t` (`t` coprime to `d`).
    pub fn galois(&self, t: u64) -> Self {
        assert_eq!(
            t.gcd(&self.conductor),
            1,
            "galois exponent {t} not coprime to conductor {}",
            self.conductor
        );
        let sub = |p: &[BigInt]| -> Vec<BigInt> {
            // zeta^i -> zeta^{(i t) mod d}; x^d = 1 holds modulo Phi_d.
            let mut out = vec![BigInt::zero(); self.conductor as usize];
            for (i, c) in p.iter().enumerate() {
                if !c.is_zero() {
                    let e = (i as u64 * t % self.conductor) as usize;
                    out[e] += c;
                }
            }
            out
        };
        Self::from_reduced_pair(self.conductor, &sub(&self.num), &sub(&self.den))
    }

    /// Complex conjugation `zeta_d -> zeta_d^{-1}`.
    pub fn conjugate(&self) -> Self {
        self.galois(self.conductor - 1)
    }

    /// If both reduced numerator and denominator are constants, the value as
    /// a reduced rational `(num, den)` with `den > 0`.
    ///
    /// This recognizes rational values whose stored denominator is already
    /// rational (the only shape our callers produce); it makes no attempt to
    /// rationalize a genuinely polynomial denominator.
    pub fn constant_value(&self) -> Option<(BigInt, BigInt)> {
        if self.num.len() > 1 || self.den.len() > 1 {
            return None;
        }
        let num = self.num.first().cloned().unwrap_or_else(BigInt::zero);
        let den = self.den.first().cloned().expect("nonzero denominator");
        let g = num.gcd(&den);
        if g.is_zero() {
            return Some((BigInt::zero(), BigInt::one()));
        }
        let (mut n, mut d) = (num / &g, den / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Some((n, d))
    }
}

impl PartialEq for CyclotomicNumber {
    /// Field equality by cross-multiplication modulo `Phi_d`.
    fn eq(&self, other: &Self) -> bool {
        self.check_same_field(other);
        let lhs = poly_mul(&self.num, &other.den);
        let rhs = poly_mul(&other.num, &self.den);
        Self::reduce(self.conductor, &poly_add(&lhs, &poly_neg(&rhs))).is_empty()
    }
}

impl Eq for CyclotomicNumber {}

fn format_poly(p: &[BigInt], var: &str) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    let mut terms: Vec<String> = Vec::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let body = match i {
            0 => c.to_string(),
            _ => {
                let var_pow = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if c.is_one() {
                    var_pow
                } else if (-c).is_one() {
                    format!("-{var_pow}")
                } else {
                    format!("{c}*{var_pow}")
                }
            }
        };
        if terms.is_empty() {
            terms.push(body);
        } else if let Some(magnitude) = body.strip_prefix('-') {
            terms.push(format!("- {magnitude}"));
        } else {
            terms.push(format!("+ {body}"));
        }
    }
    terms.join(" ")
}

impl fmt::Display for CyclotomicNumber {
    /// Renders as a polynomial in `z` (for `zeta_d`), e.g. `(z^2 + 1)/(z - 1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_poly(&self.num, "z");
        if self.den.len() == 1 && self.den[0].is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", format_poly(&self.den, "z"))
        }
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicNumber[d={}]({self})", self.conductor)
    }
}

/// Serialized shape: decimal-string coefficient arrays, lossless for
/// arbitrary-precision coefficients.
#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    conductor: u64,
    numerator: Vec<String>,
    denominator: Vec<String>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CyclotomicRepr {
            conductor: self.conductor,
            numerator: self.num.iter().map(|c| c.to_string()).collect(),
            denominator: self.den.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(deserializer)?;
        let parse = |v: &[String]| -> Result<Vec<BigInt>, D::Error> {
            v.iter()
                .map(|s| {
                    s.parse()
                        .map_err(|_| D::Error::custom(format!("invalid coefficient {s:?}")))
                })
                .collect()
        };
        let num = parse(&repr.numerator)?;
        let den = parse(&repr.denominator)?;
        if den.iter().all(|c| c.is_zero()) {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(CyclotomicNumber::from_reduced_pair(
            repr.conductor,
            &num,
            &den,
        ))
    }
}
