//! Solution engines: the two order-by-order recursions, the bridge between
//! them, the stationary fixed point and the non-stationary path expansion.

mod bridge;
mod couplings;
mod recursion;
mod resonance;
mod table;
mod thm1;
mod thm2;

pub use bridge::{all_orders_eigen, all_orders_eigen_series, bridge, pade2};
pub use couplings::{b_denom, gamma_coeff, Couplings};
pub use recursion::{alg1, alg1_reduced, alg2, alg2_reduced, check_params};
pub use resonance::ResonanceReport;
pub use table::{window_lo, CoeffTable, EigenSeries, Normalization};
pub use thm1::{thm1_eigen, thm1_reduced};
pub use thm2::{thm2_alpha, thm2_diagonal, thm2_table};
