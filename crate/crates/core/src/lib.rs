//! Exact Frobenius actions on graded pieces of top local cohomology for
//! complete intersections over `F_p(t_1..t_s)`.

pub mod cech;
pub mod certify;
pub mod cli;
pub mod error;
pub mod families;
pub mod linalg;
pub mod rings;
pub mod scalars;
pub mod semilinear;

pub use error::{Error, Result};
