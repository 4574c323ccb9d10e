//! Exact characteristic-class calculus for projective surfaces in 3-space and
//! 3-folds in 4-space with ordinary singularities.

pub mod algebra;
pub mod chern;
pub mod classical;
pub mod cli;
pub mod presets;
pub mod report;
pub mod surface;
pub mod tables;
pub mod threefold;
pub mod verify;
