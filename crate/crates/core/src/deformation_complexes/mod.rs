//! Graph complexes, the Def complex of Ass∞ → Graphs, the mapping cone of 𝔚 and related maps.

pub mod def;
pub mod gauge;
pub mod gc;
pub mod ideals;
pub mod mac;
pub mod registry;
pub mod splitting;

pub use def::{bracket_def, delta_bb_def, delta_def, delta_prime, delta_wb, delta_ww, degree_def, star, whiten};
pub use gauge::{gauge_transform, gauge_transform_deformation, residual_in_cover};
pub use gc::{bracket_gc, delta_bb_gc, degree_gc};
pub use ideals::{ideal_basis, quotient_project, Ideal, Projection};
pub use mac::{gamma0, mac_bracket, mac_bracket_capped, mac_differential, mc_residual, willwacher, MacElement};
pub use registry::ComplexId;
pub use splitting::{splitting_s, splitting_s_hat, Whitening};
