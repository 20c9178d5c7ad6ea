//! Truncated multivariate power series over precision-tracked coefficients,
//! together with the Frobenius calculus on jet variables.

mod jet;
mod phi;
mod ring;
mod text;

pub use jet::{JetSeries, JetVars, Monomial};
pub use phi::{lambda_sum, prolongation_polynomial, rational_binomial, twisted_power, word_power, PhiWord};
pub use ring::{CoeffRing, DeltaRing, Integers, RamifiedRing, Rationals};
pub use text::{dump_series, parse_series};
