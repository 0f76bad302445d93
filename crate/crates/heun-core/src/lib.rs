//! Series solutions of the non-stationary Heun equation.
//!
//! Solutions are built as truncated power series in the nome `q`: the
//! elliptic generalizations `P_n(z) = Σ P_n^{(l)}(z) q^l` of the Jacobi
//! polynomials together with their generalized eigenvalues. Four independent
//! engines compute the expansion coefficients and can be checked against each
//! other, against low-order closed forms, and against direct numerical
//! evaluation of the differential equation.
//!
//! Every algebraic routine is generic over [`seriescore::Scalar`], with an exact
//! rational field and a complex binary64 field as the two instantiations.

pub mod basis;
pub mod engines;
pub mod error;
pub mod exec;
pub mod params;
pub mod seriescore;
pub mod solution;
pub mod specfun;
pub mod verify;

pub use error::{ErrorClass, HeunError, Result};
pub use params::Params;
