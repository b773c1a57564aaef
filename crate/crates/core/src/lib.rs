//! Stratified Jordan-type bounds for `sinc x` on `(0, pi/2)`.
//!
//! * [`family`]: closed forms for the one- and two-parameter families, their
//!   derivatives and endpoint limits.
//! * [`solve`]: bracketing, bisection, extremum location and sup-norm
//!   deviation.
//! * [`minimax`]: critical constants, regime classification, equioscillation
//!   solves and deviation tables.
//! * [`certify`]: exact rational polynomials, Maclaurin enclosures and Sturm
//!   sign certificates for the polynomial sub-lemmas.
//! * [`report`]: the `jordan-strata` command-line front end.

pub mod certify;
pub mod family;
pub mod minimax;
pub mod report;
pub mod solve;

pub use family::{FamilyError, FamilyKind, FamilySpec, Interval01};
