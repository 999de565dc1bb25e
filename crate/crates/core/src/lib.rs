//! Exact arithmetic for golden-ratio analogs in the field of formal Laurent
//! series k((1/X)): continued fractions and their convergents, certified
//! series conversion in both directions, Hankel matrices and their
//! triangular factors, Fibonacci-polynomial Zeckendorf representations,
//! Catalan numbers modulo a prime, shift-operator identities, and
//! Kronecker-type low-discrepancy sequences.
//!
//! Everything is computed over F_p (p prime) or Q with arbitrary-precision
//! integers; there is no floating point in any computational path.

pub mod error;
pub mod field;
pub mod poly;
pub mod laurent;
pub mod contfrac;

pub use error::{Error, Result};
pub use field::{FieldElem, FieldSpec};
pub use poly::{Degree, Polynomial};
pub use laurent::LaurentSeries;
pub use contfrac::{cf_of_rational, series_to_cf, ContinuedFraction, Convergent, GoldenSpec, SeriesCf};
