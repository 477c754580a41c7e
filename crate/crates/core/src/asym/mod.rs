//! Asymptotic laws, high-precision constants, and convergence probes.

pub mod constants;
pub mod fixed;
pub mod laws;
pub mod logspace;
pub mod probe;

pub use constants::{glaisher, GLAISHER_F64};
pub use laws::*;
pub use probe::{convergence_probe, ConvergenceRecord};
