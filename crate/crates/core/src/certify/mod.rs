//! Exact sign certificates for mixed trigonometric polynomials.
//!
//! An MTP such as `x cos x + sin(2x)/2 - x` is bounded on one side by
//! replacing each sine and cosine with a truncated Maclaurin series whose
//! direction is known, and the resulting rational polynomial is then shown
//! to have constant sign with a Sturm chain.

mod lemma;
mod maclaurin;
mod poly;
mod sturm;

use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

pub use lemma::{certify_lemma, certify_plan, default_interval, CertificateBundle, Lemma, LemmaError, LemmaPlan, PlannedTerm, Stage};
pub use maclaurin::{maclaurin, Direction, Enclosure, Trig, VALID_HI_BITS};
pub use poly::{rat, RationalPoly};
pub use sturm::{count_roots, sturm_chain, sturm_sign, Sign, SturmCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("term {index}: multiplier {multiplier} is not a single nonzero monomial")]
    NotMonomial { index: usize, multiplier: RationalPoly },
    #[error("term {index}: requires direction {}, enclosure {label} gives {}", required.name(), got.name())]
    DirectionMismatch { index: usize, label: String, required: Direction, got: Direction },
    #[error("term {index}: enclosure {label} valid only up to {valid_hi}, interval reaches {hi}")]
    ValidityTooShort { index: usize, label: String, valid_hi: BigRational, hi: BigRational },
    #[error("interval must be a subset of [0, inf) with lo < hi, got ({lo}, {hi})")]
    EmptyInterval { lo: BigRational, hi: BigRational },
    #[error("cannot certify the sign of the zero polynomial")]
    ZeroPolynomial,
    #[error("{count} root(s) of {poly} inside the interval")]
    RootInside { count: usize, poly: RationalPoly },
    #[error("claimed {} but the value at {at} is {value}", claimed.name())]
    SignMismatch { claimed: Sign, at: BigRational, value: BigRational },
}

/// One summand of an MTP bound.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundTerm {
    /// A polynomial summand, used as is.
    Exact(RationalPoly),
    /// `multiplier * f(kx)` with `f` replaced by the enclosure's truncation.
    Enclosed { multiplier: RationalPoly, enclosure: Enclosure },
}

/// Sums the terms into a polynomial bound of direction `target` on `(0, hi)`.
///
/// Each multiplier must be a monomial `c x^j`, whose sign on `(0, hi)` is
/// that of `c`; a positive multiplier needs an enclosure in the target
/// direction and a negative one the opposite direction. Every enclosure must
/// be valid up to `hi`. The truncation and its direction are recomputed from
/// the enclosure's target, scale and degree rather than trusted.
pub fn combine_bound(terms: &[BoundTerm], target: Direction, hi: &BigRational) -> Result<RationalPoly, CertifyError> {
    let mut sum = RationalPoly::zero();
    for (index, term) in terms.iter().enumerate() {
        match term {
            BoundTerm::Exact(p) => sum = &sum + p,
            BoundTerm::Enclosed { multiplier, enclosure } => {
                let (c, _) = multiplier.as_monomial().ok_or_else(|| CertifyError::NotMonomial {
                    index,
                    multiplier: multiplier.clone(),
                })?;
                let required = if c.is_positive() { target } else { target.flip() };
                let (poly, actual) = maclaurin(enclosure.target, &enclosure.scale, enclosure.degree);
                if actual.direction != required {
                    return Err(CertifyError::DirectionMismatch {
                        index,
                        label: actual.label(),
                        required,
                        got: actual.direction,
                    });
                }
                if actual.valid_hi < *hi {
                    return Err(CertifyError::ValidityTooShort {
                        index,
                        label: actual.label(),
                        valid_hi: actual.valid_hi,
                        hi: hi.clone(),
                    });
                }
                sum = &sum + &(multiplier * &poly);
            }
        }
    }
    Ok(sum)
}

fn check_interval(lo: &BigRational, hi: &BigRational) -> Result<(), CertifyError> {
    if lo.is_negative() || lo >= hi {
        return Err(CertifyError::EmptyInterval { lo: lo.clone(), hi: hi.clone() });
    }
    Ok(())
}
