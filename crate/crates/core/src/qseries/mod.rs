//! Truncated power series in `q` with coefficients in `Z[x, y]`.

mod identities;
mod pochhammer;
mod poly;
mod series;

pub use crate::error::SeriesError;
pub use identities::{verify_identity, verify_identity_with, Identity, IdentityReport, Mismatch};
pub use pochhammer::{
    divide_finite, poch_finite, poch_finite_inv, poch_infinite, poch_infinite_inv,
};
pub use poly::{CoeffPoly, Exponents};
pub use series::{QMonomial, TruncatedSeries};
