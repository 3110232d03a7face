//! Graph complexes, two-coloured deformation complexes, their representation on
//! polyvector fields, and Monte Carlo configuration-space weights.

pub mod cli;
pub mod config_weights;
pub mod deformation_complexes;
pub mod error;
pub mod exact_linalg;
pub mod graph_core;
pub mod operad_calculus;
pub mod polyvector_rep;

pub use error::{Error, Result};
pub use graph_core::{Colour, Graph, GraphVector, Q};
