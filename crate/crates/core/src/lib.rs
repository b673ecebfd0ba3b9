//! Exact computational algebra for the finite/algebraic layer of virtually
//! cyclic group theory: finite group tables, normal forms for infinite
//! virtually cyclic groups, an orientation constraint solver, the morphism
//! calculus of homotopy colimits of additive categories, and twisted
//! group/polynomial rings with their transfer bases.

pub mod batch;
pub mod caps;
pub mod error;
pub mod group;
pub mod matrix;
pub mod rng;
pub mod scalar;
pub mod snf;

pub use caps::Caps;
pub use error::{Error, Result};
