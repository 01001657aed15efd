//! Exact computations around higher-dimensional Dehn twists on `T*S^n`.
//!
//! * [`lattice_core`]: big-integer matrices, Smith normal form, orders.
//! * [`twist_action`]: the twist's action on `H_n(D*S^n, B; Z)`.
//! * [`plumbing`]: A_l plumbing lattices, boundary homology, Arf invariants.
//! * [`classification`]: orders of the twist in the symplectic, smooth,
//!   topological and homotopical mapping class groups.
//! * [`bott_ac`]: order bounds in the almost-complex mapping class group.
//! * [`cross_check`]: exact cross-product identities on `R^3` and `R^7`.

pub mod bott_ac;
pub mod classification;
pub mod cross_check;
pub mod error;
pub mod lattice_core;
pub mod plumbing;
pub mod twist_action;

pub use error::{Error, Result};
pub use lattice_core::{AbelianGroupDescriptor, IntMatrix, OrderResult};
