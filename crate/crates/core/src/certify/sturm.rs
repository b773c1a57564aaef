use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::RationalPoly;
use super::CertifyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn name(self) -> &'static str {
        match self {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
        }
    }

    fn of(v: &BigRational) -> Option<Self> {
        if v.is_positive() {
            Some(Sign::Positive)
        } else if v.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }
}

/// Proof that `poly` keeps `claimed_sign` on the open interval `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmCertificate {
    pub poly: RationalPoly,
    /// Power of `x` divided out before building the chain (only when `lo >= 0`).
    pub factored_power: usize,
    pub cofactor: RationalPoly,
    pub lo: BigRational,
    pub hi: BigRational,
    pub claimed_sign: Sign,
    pub root_count: usize,
    pub chain_length: usize,
}

/// `p, p', -rem(p, p'), ...` for the square-free part of `p`, each member
/// scaled by the magnitude of its leading coefficient.
pub fn sturm_chain(p: &RationalPoly) -> Vec<RationalPoly> {
    let p = p.square_free().normalized();
    if p.is_zero() {
        return Vec::new();
    }
    let mut chain = vec![p.clone()];
    let mut next = p.derivative().normalized();
    while !next.is_zero() {
        let rem = chain.last().unwrap().div_rem(&next).1;
        chain.push(next);
        next = (-&rem).normalized();
    }
    chain
}

fn variations(chain: &[RationalPoly], x: &BigRational) -> usize {
    let signs: Vec<Sign> = chain.iter().filter_map(|p| Sign::of(&p.eval(x))).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct roots of `p` in the open interval `(lo, hi)`.
pub fn count_roots(p: &RationalPoly, lo: &BigRational, hi: &BigRational) -> usize {
    let chain = sturm_chain(p);
    count_with_chain(&chain, lo, hi)
}

fn count_with_chain(chain: &[RationalPoly], lo: &BigRational, hi: &BigRational) -> usize {
    let Some(p) = chain.first() else { return 0 };
    // V(lo) - V(hi) counts roots in (lo, hi]
    let half_open = variations(chain, lo) - variations(chain, hi);
    half_open - usize::from(p.eval(hi).is_zero())
}

/// Certifies that `poly` has sign `claimed` everywhere on `(lo, hi)`.
pub fn sturm_sign(
    poly: &RationalPoly,
    lo: &BigRational,
    hi: &BigRational,
    claimed: Sign,
) -> Result<SturmCertificate, CertifyError> {
    if lo >= hi {
        return Err(CertifyError::EmptyInterval { lo: lo.clone(), hi: hi.clone() });
    }
    if poly.is_zero() {
        return Err(CertifyError::ZeroPolynomial);
    }
    // x^m > 0 on (lo, hi) when lo >= 0, so the cofactor carries the sign
    let m = if lo.is_negative() { 0 } else { poly.zero_order() };
    let cofactor = poly.shift_down(m);
    let chain = sturm_chain(&cofactor);
    let root_count = count_with_chain(&chain, lo, hi);
    if root_count != 0 {
        return Err(CertifyError::RootInside { count: root_count, poly: cofactor });
    }
    let mid = (lo + hi) / BigRational::from_integer(2.into());
    let value = poly.eval(&mid);
    if Sign::of(&value) != Some(claimed) {
        return Err(CertifyError::SignMismatch { claimed, at: mid, value });
    }
    Ok(SturmCertificate {
        poly: poly.clone(),
        factored_power: m,
        cofactor,
        lo: lo.clone(),
        hi: hi.clone(),
        claimed_sign: claimed,
        root_count,
        chain_length: chain.len(),
    })
}
