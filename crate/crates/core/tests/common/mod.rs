//! Brute-force oracles shared by the integration suites.
//!
//! Everything here recomputes library results by a method as different as
//! possible from the implementation under test: element enumeration
//! instead of Smith normal forms, breadth-first closure instead of coset
//! sweeps, and the Maillet determinant instead of Bernoulli numbers.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use cyclens::abelian::{FgAbGroup, GroupWithInvolution, IntMatrix};
use cyclens::modular::{factorize, is_prime, mulmod, powmod};

/// All elements of `Z/n_1 x ... x Z/n_r`, as coordinate tuples.
pub fn all_elements(orders: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &n in orders {
        let mut next = Vec::with_capacity(out.len() * n as usize);
        for prefix in &out {
            for v in 0..n {
                let mut e = prefix.clone();
                e.push(v);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

/// Apply an integer matrix to a tuple, reducing coordinate `i` mod
/// `orders[i]`.
pub fn apply_mod(m: &IntMatrix, x: &[u64], orders: &[u64]) -> Vec<u64> {
    (0..m.rows())
        .map(|i| {
            let mut acc = BigInt::zero();
            for (j, &xj) in x.iter().enumerate() {
                acc += &m[(i, j)] * BigInt::from(xj);
            }
            acc.mod_floor(&BigInt::from(orders[i]))
                .to_u64()
                .expect("reduced residue fits u64")
        })
        .collect()
}

fn scalar_mul(s: u64, x: &[u64], orders: &[u64]) -> Vec<u64> {
    x.iter()
        .zip(orders)
        .map(|(&xi, &n)| mulmod(s % n, xi, n))
        .collect()
}

fn exact_log(mut q: u64, p: u64) -> u32 {
    let mut e = 0;
    while q > 1 {
        assert_eq!(q % p, 0, "{q} is not a power of {p}");
        q /= p;
        e += 1;
    }
    e
}

/// Isomorphism type of the quotient `S/T`, where `S` is a subgroup of the
/// product `Z/n_1 x ... x Z/n_r` given by its elements and `T <= S` by a
/// membership set.  Works by counting solutions of `p^j g = 0` in the
/// quotient for each prime `p`, which determines the partition of each
/// Sylow subgroup.
pub fn quotient_structure(
    orders: &[u64],
    s_elems: &[Vec<u64>],
    t_set: &HashSet<Vec<u64>>,
) -> FgAbGroup {
    assert_eq!(s_elems.len() % t_set.len(), 0);
    let quotient_order = (s_elems.len() / t_set.len()) as u64;
    let mut cyclic_factors: Vec<BigInt> = Vec::new();
    for (p, _) in factorize(quotient_order) {
        // m[j-1] = number of parts of the p-partition that are >= j,
        // recovered from s_j = log_p #{g in S/T : p^j g = 0}.
        let mut m: Vec<u32> = Vec::new();
        let mut prev = 0u32;
        let mut pj = 1u64;
        loop {
            pj *= p;
            let count = s_elems
                .iter()
                .filter(|x| t_set.contains(&scalar_mul(pj, x, orders)))
                .count();
            assert_eq!(count % t_set.len(), 0);
            let s_j = exact_log((count / t_set.len()) as u64, p);
            if s_j == prev {
                break;
            }
            m.push(s_j - prev);
            prev = s_j;
        }
        if let Some(&m1) = m.first() {
            for i in 1..=m1 {
                let part = m.iter().filter(|&&mj| mj >= i).count() as u32;
                cyclic_factors.push(BigInt::from(p).pow(part));
            }
        }
    }
    FgAbGroup::from_parts(0, cyclic_factors)
}

/// `ker(f) / im(h)` inside the product with the given cyclic orders,
/// computed by exhaustive enumeration.  Panics if `im(h)` is not contained
/// in `ker(f)`.
pub fn enumerated_subquotient(orders: &[u64], f: &IntMatrix, h: &IntMatrix) -> FgAbGroup {
    let all = all_elements(orders);
    let zero = vec![0u64; orders.len()];
    let s: Vec<Vec<u64>> = all
        .iter()
        .filter(|x| apply_mod(f, x, orders) == zero)
        .cloned()
        .collect();
    let t: HashSet<Vec<u64>> = all.iter().map(|x| apply_mod(h, x, orders)).collect();
    for y in &t {
        assert_eq!(apply_mod(f, y, orders), zero, "image escapes the kernel");
    }
    quotient_structure(orders, &s, &t)
}

/// Enumerated coinvariants `A / (1 - iota) A`.
pub fn enumerated_coinvariants(orders: &[u64], iota: &IntMatrix) -> FgAbGroup {
    let n = orders.len();
    let h = IntMatrix::identity(n).sub(iota);
    enumerated_subquotient(orders, &IntMatrix::zeros(n, n), &h)
}

/// Enumerated Tate cohomology: parity 0 gives `ker(1-i)/im(1+i)`, parity 1
/// gives `ker(1+i)/im(1-i)`.
pub fn enumerated_tate(orders: &[u64], iota: &IntMatrix, parity: u8) -> FgAbGroup {
    let n = orders.len();
    let id = IntMatrix::identity(n);
    let (f, h) = match parity {
        0 => (id.sub(iota), id.add(iota)),
        1 => (id.add(iota), id.sub(iota)),
        _ => panic!("parity must be 0 or 1"),
    };
    enumerated_subquotient(orders, &f, &h)
}

/// Enumerated `ker(1 - s*iota) / im(1 + s*iota)` for `s = +1/-1`.
pub fn enumerated_symmetric_even(orders: &[u64], iota: &IntMatrix, sign: i8) -> FgAbGroup {
    let n = orders.len();
    let id = IntMatrix::identity(n);
    let signed = if sign >= 0 { iota.clone() } else { iota.neg() };
    enumerated_subquotient(orders, &id.sub(&signed), &id.add(&signed))
}

/// Enumerated SI quotient `A / {b + mu(b)}`.
pub fn enumerated_si_quotient(orders: &[u64], mu: &IntMatrix) -> FgAbGroup {
    let n = orders.len();
    let h = IntMatrix::identity(n).add(mu);
    enumerated_subquotient(orders, &IntMatrix::zeros(n, n), &h)
}

fn modinv(u: u64, n: u64) -> u64 {
    (1..n)
        .find(|&v| mulmod(u, v, n) == 1)
        .expect("unit has an inverse")
}

/// A randomly generated finite abelian group with a valid involution.
pub struct InvolutedModule {
    pub orders: Vec<u64>,
    pub iota: IntMatrix,
}

impl InvolutedModule {
    /// Construct the validated library object.
    pub fn build(&self) -> GroupWithInvolution {
        GroupWithInvolution::from_cyclic_orders(&self.orders, self.iota.clone())
            .expect("generated involutions are valid by construction")
    }
}

/// Generate a random valid involution on a random group of order at most
/// `max_order`.
///
/// A base involution (coordinate signs, plus optional swaps of equal-order
/// coordinate pairs) is conjugated by a random sequence of elementary
/// automorphisms: unit scalings, lattice-compatible transvections
/// `e_j -> e_j + c e_i` with `c` a multiple of `n_i / gcd(n_i, n_j)`, and
/// swaps of equal-order coordinates.  Conjugation preserves both validity
/// conditions, so every sample is a genuine involution.
pub fn random_involuted_module(rng: &mut impl Rng, max_order: u64) -> InvolutedModule {
    let mut orders: Vec<u64> = Vec::new();
    let mut total = 1u64;
    for _ in 0..rng.gen_range(1..=4) {
        let n = rng.gen_range(2..=16u64);
        if total.saturating_mul(n) > max_order {
            break;
        }
        total *= n;
        orders.push(n);
    }
    if orders.is_empty() {
        orders.push(rng.gen_range(2..=16u64.min(max_order)));
    }
    let dim = orders.len();

    // Base involution: signs and equal-order pair swaps.
    let mut iota = IntMatrix::zeros(dim, dim);
    let mut used = vec![false; dim];
    for i in 0..dim {
        if used[i] {
            continue;
        }
        used[i] = true;
        let sign = if rng.gen_bool(0.5) { 1i64 } else { -1i64 };
        let partner =
            (i + 1..dim).find(|&j| !used[j] && orders[j] == orders[i] && rng.gen_bool(0.4));
        match partner {
            Some(j) => {
                used[j] = true;
                iota[(i, j)] = BigInt::from(sign);
                iota[(j, i)] = BigInt::from(sign);
            }
            None => iota[(i, i)] = BigInt::from(sign),
        }
    }

    // Conjugate by random elementary automorphisms.
    for _ in 0..rng.gen_range(0..=6) {
        match rng.gen_range(0..3) {
            0 => {
                // Unit scaling u on coordinate i: row i *= u, column i *= u^-1.
                let i = rng.gen_range(0..dim);
                let n = orders[i];
                let units: Vec<u64> = (1..n).filter(|&u| u64::gcd(&u, &n) == 1).collect();
                let u = units[rng.gen_range(0..units.len())];
                let uinv = modinv(u, n);
                // The diagonal entry picks up u * uinv, which is 1 mod n_i;
                // the final row-wise reduction absorbs it.
                for j in 0..dim {
                    let v = iota[(i, j)].clone() * BigInt::from(u);
                    iota[(i, j)] = v;
                    let w = iota[(j, i)].clone() * BigInt::from(uinv);
                    iota[(j, i)] = w;
                }
            }
            1 => {
                // Transvection e_j -> e_j + c e_i with the congruence that
                // keeps it well-defined on the quotient.
                if dim < 2 {
                    continue;
                }
                let i = rng.gen_range(0..dim);
                let mut j = rng.gen_range(0..dim - 1);
                if j >= i {
                    j += 1;
                }
                let step = orders[i] / u64::gcd(&orders[i], &orders[j]);
                let c = BigInt::from(step * rng.gen_range(1..=3u64));
                iota.add_multiple_of_row(i, j, &c);
                iota.add_multiple_of_col(j, i, &(-c));
            }
            _ => {
                // Swap two equal-order coordinates.
                let pairs: Vec<(usize, usize)> = (0..dim)
                    .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
                    .filter(|&(i, j)| orders[i] == orders[j])
                    .collect();
                if !pairs.is_empty() {
                    let (i, j) = pairs[rng.gen_range(0..pairs.len())];
                    iota.swap_rows(i, j);
                    iota.swap_cols(i, j);
                }
            }
        }
    }

    // Keep entries small: row i is only meaningful mod orders[i].
    for i in 0..dim {
        let n = BigInt::from(orders[i]);
        for j in 0..dim {
            let v = iota[(i, j)].mod_floor(&n);
            iota[(i, j)] = v;
        }
    }
    InvolutedModule { orders, iota }
}

/// Independent `Q_d^k` oracle: breadth-first closure of the relations
/// `q ~ a^k q` (all units `a`) and `q ~ -q`.
pub fn bfs_qdk_classes(d: u64, k: u64) -> Vec<Vec<u64>> {
    let units: Vec<u64> = (1..d).filter(|&q| u64::gcd(&q, &d) == 1).collect();
    let kth_powers: HashSet<u64> = units.iter().map(|&a| powmod(a, k, d)).collect();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut classes: Vec<Vec<u64>> = Vec::new();
    for &q in &units {
        if seen.contains(&q) {
            continue;
        }
        let mut class = Vec::new();
        let mut queue = VecDeque::from([q]);
        seen.insert(q);
        while let Some(x) = queue.pop_front() {
            class.push(x);
            let mut neighbors: Vec<u64> = kth_powers.iter().map(|&pk| mulmod(pk, x, d)).collect();
            neighbors.push(d - x);
            for y in neighbors {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes.sort_by_key(|c| c[0]);
    classes
}

/// Independent minus-class-number oracle via the Maillet determinant:
/// `det(R(a b^-1 mod p))_{1 <= a,b <= (p-1)/2} = +- p^((p-3)/2) h_p^-`,
/// with `R` the least positive residue.
pub fn maillet_minus_class_number(p: u64) -> BigInt {
    assert!(p >= 3 && is_prime(p), "{p} is not an odd prime");
    let m = ((p - 1) / 2) as usize;
    let inverses: Vec<u64> = (1..=m as u64).map(|b| modinv(b, p)).collect();
    let mat = IntMatrix::from_fn(m, m, |r, c| {
        BigInt::from(mulmod((r + 1) as u64, inverses[c], p))
    });
    let det = mat.determinant().abs();
    let scale = BigInt::from(p).pow((p as u32 - 3) / 2);
    let (h, rem) = det.div_rem(&scale);
    assert!(
        rem.is_zero(),
        "Maillet determinant for p = {p} is not divisible by p^((p-3)/2)"
    );
    h
}
