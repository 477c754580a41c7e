//! Exact product formulas and asymptotic laws for correlations of monomer
//! and separation defects on the symmetry axis of Aztec diamonds and
//! rectangles, with a brute-force matching oracle, a free-energy landscape
//! for macroscopic monomer bars, and its equilibrium-position solver.

pub mod asym;
pub mod equilibrium;
pub mod exact;
pub mod forms;
pub mod lattice;
pub mod oracle;
pub mod verify;

pub use exact::{ExactValue, GammaProduct};
pub use lattice::{AxisGraph, DefectCluster, DefectConfig, DefectKind, Dipole, DipoleKind};
pub use oracle::MatchCount;
