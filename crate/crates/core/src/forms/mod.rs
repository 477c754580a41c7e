//! Exact counting and correlation formulas.

pub mod bars;
pub mod count;
pub mod dipoles;
pub mod efunc;
pub mod monomers;
pub mod moves;
pub mod slits;

pub use bars::{bars_count, BarConfig};
pub use count::{count_exact, CountPath};
pub use dipoles::{
    bulk_dipole_corr, center_dipole_corr, dipole_corr, dipole_family_corr, dipole_gap,
};
pub use efunc::{e_squared, e_value};
pub use monomers::{monomer_even_count_ratio, p_product, q_product};
pub use moves::{
    alpha_corr_ratio, alpha_move_ratio, hole_to_sep_ratio, likes_kernel, move_hole_ratio,
    move_sep_ratio, unlikes_kernel,
};
pub use slits::{multi_slit_corr, slit_corr, slit_ratio, SlitOrientation, SlitSpec};
