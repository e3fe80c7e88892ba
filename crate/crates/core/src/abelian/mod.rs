//! Integer linear algebra and finitely generated abelian groups.
//!
//! The module provides, in dependency order: dense arbitrary-precision
//! integer matrices, Smith normal form with unimodular transforms, canonical
//! forms of finitely generated abelian groups (where structural equality is
//! isomorphism), lattice arithmetic in `Z^n`, and groups carrying an
//! involution together with their coinvariant / Tate-cohomology /
//! symmetric-even invariants.

mod group;
mod involution;
mod lattice;
mod matrix;
mod snf;

pub use group::FgAbGroup;
pub use involution::GroupWithInvolution;
pub use matrix::IntMatrix;
pub use snf::{cokernel, smith_normal_form, SmithDecomposition};
