//! Exact-arithmetic invariants for the classification of free cyclic group
//! actions on products `S^1 x S^n`.
//!
//! Everything here is computed over `Z`, `Q`, or cyclotomic fields with
//! arbitrary-precision integers; no floating point is used anywhere.  The
//! crate is organised around the algebraic objects that appear in the
//! classification:
//!
//! * [`abelian`] — integer matrices, Smith normal form, finitely generated
//!   abelian groups in canonical form, and groups equipped with an involution
//!   (coinvariants, Tate cohomology, symmetric/even subquotients).
//! * [`modular`] — unit groups `(Z/d)^x` and the partition of units by
//!   `q ~ a^k q` and `q ~ -q` that indexes polarized homotopy types.
//! * [`cyclotomic`] — exact arithmetic in `Q(zeta_d)` as polynomial pairs
//!   reduced modulo the cyclotomic polynomial `Phi_d`.
//! * [`lens`] — lens spaces `L(d; q_1, ..., q_k)`: Postnikov invariant,
//!   linking form, homotopy/homeomorphism comparison, and the Atiyah–Singer
//!   rho invariant with exact zero tests.
//! * [`classdata`] — ingestion of published cyclotomic class-group tables,
//!   the coinvariant deduction `H_0(C_2; Cl_p)` from plus/minus parts, and an
//!   independent analytic oracle for minus class numbers.
//! * [`classify`] — assembly of the classification: strata of actions,
//!   structure-set parameter counts, and group-theoretic reports for the
//!   homotopy self-equivalence actions.
//! * [`cli`] — the `cyclens` command-line interface with deterministic,
//!   machine-readable output.
//!
//! All public functions are pure: no global mutable state is observable, and
//! identical inputs produce identical (byte-identical, where serialized)
//! outputs.

pub mod abelian;
pub mod classdata;
pub mod classify;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod lens;
pub mod modular;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
