pub mod admissibility;
pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod motions;
pub mod rigidity;
pub mod sampling;
pub mod verify;

pub use error::{Error, Result};
