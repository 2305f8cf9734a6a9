//! Exact computer algebra for negative halves of quantum groups, their
//! bilinear forms, shuffle realizations, Verma modules and braidings.

pub mod bilinear_form;
pub mod braid_symmetries;
pub mod braiding;
pub mod cartan;
pub mod checks;
pub mod cli;
pub mod error;
pub mod expr_dsl;
pub mod free_algebra;
pub mod lincomb;
pub mod linalg;
pub mod scalar;
pub mod shuffle_image;
pub mod verma;

pub use error::{Error, Result};
