//! Exact verification engine for the two-parameter Jordanian twist of
//! `U(gl(2))` and `U(sl(1/2))`, its universal R-matrix, and the quantum
//! supergroup `SL_{h,g}(1/2)` obtained from the graded FRT construction.

pub mod cli;
pub mod enveloping;
mod error;
pub mod frtkit;
pub mod report;
pub mod representations;
pub mod scalars;
pub mod superalgebra;
pub mod twistkit;

pub use error::{Error, Result};
