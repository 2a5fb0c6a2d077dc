pub mod error;
pub mod fft;
pub mod field;
pub mod grid;

pub use error::{Error, Result};
pub use field::{SpectralField, VectorField};
pub use grid::Grid;
