//! The two MTP sign lemmas behind the monotonicity of the boundary-exponent
//! functions `g_a` and `g_b`.

use std::fmt::{self, Write as _};

use num_rational::BigRational;
use thiserror::Error;

use super::maclaurin::{maclaurin, Direction, Enclosure, Trig};
use super::poly::{rat, RationalPoly};
use super::sturm::{sturm_sign, Sign, SturmCertificate};
use super::{check_interval, combine_bound, BoundTerm, CertifyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma {
    /// `x cos x + sin(2x)/2 + x^2 sin x - sin x - x < 0`; makes `g_a` decreasing.
    GaMonotonicity,
    /// `cos 2x + x sin(2x)/2 + x^2 - 1 > 0`; makes `g_b` decreasing.
    GbMonotonicity,
}

impl Lemma {
    pub const ALL: [Lemma; 2] = [Lemma::GaMonotonicity, Lemma::GbMonotonicity];

    pub fn id(self) -> &'static str {
        match self {
            Lemma::GaMonotonicity => "ga-monotone",
            Lemma::GbMonotonicity => "gb-monotone",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.id() == id)
    }

    pub fn plan(self) -> LemmaPlan {
        let term = |label: &'static str, multiplier: RationalPoly, target, scale: i64, degree| PlannedTerm {
            label,
            multiplier,
            target,
            scale: rat(scale, 1),
            degree,
        };
        let x = RationalPoly::x;
        let half = |power| RationalPoly::monomial(rat(1, 2), power);
        match self {
            Lemma::GaMonotonicity => LemmaPlan {
                lemma: self,
                mtp: "x*cos(x) + 1/2*sin(2x) + x^2*sin(x) - sin(x) - x",
                terms: vec![
                    term("x*cos(x)", x(), Trig::Cos, 1, 4),
                    term("1/2*sin(2x)", half(0), Trig::Sin, 2, 9),
                    term("x^2*sin(x)", RationalPoly::monomial(rat(1, 1), 2), Trig::Sin, 1, 5),
                    term("-sin(x)", RationalPoly::from_i64(&[-1]), Trig::Sin, 1, 7),
                ],
                exact: RationalPoly::from_i64(&[0, -1]),
                direction: Direction::Upper,
                claimed: Sign::Negative,
            },
            Lemma::GbMonotonicity => LemmaPlan {
                lemma: self,
                mtp: "cos(2x) + 1/2*x*sin(2x) + x^2 - 1",
                terms: vec![
                    term("cos(2x)", RationalPoly::one(), Trig::Cos, 2, 6),
                    term("1/2*x*sin(2x)", half(1), Trig::Sin, 2, 7),
                ],
                exact: RationalPoly::from_i64(&[-1, 0, 1]),
                direction: Direction::Lower,
                claimed: Sign::Positive,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlannedTerm {
    pub label: &'static str,
    pub multiplier: RationalPoly,
    pub target: Trig,
    pub scale: BigRational,
    pub degree: u32,
}

/// Everything needed to certify one lemma; editable so that tests and the
/// CLI can run deliberately broken variants.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaPlan {
    pub lemma: Lemma,
    pub mtp: &'static str,
    pub terms: Vec<PlannedTerm>,
    /// Polynomial part of the MTP, kept exactly.
    pub exact: RationalPoly,
    /// Side of the MTP the combined polynomial must lie on.
    pub direction: Direction,
    pub claimed: Sign,
}

impl LemmaPlan {
    /// Replaces the truncation degree of the term labelled `label`.
    /// Returns `None` if there is no such term.
    pub fn with_degree(mut self, label: &str, degree: u32) -> Option<Self> {
        self.terms.iter_mut().find(|t| t.label == label)?.degree = degree;
        Some(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    Interval,
    Combine,
    Sturm,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Interval => "interval",
            Stage::Combine => "combine",
            Stage::Sturm => "sturm",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{} failed at stage {}: {source}", lemma.id(), stage.name())]
pub struct LemmaError {
    pub lemma: Lemma,
    pub stage: Stage,
    pub source: CertifyError,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificateBundle {
    pub plan: LemmaPlan,
    pub enclosures: Vec<(&'static str, Enclosure)>,
    pub combined: RationalPoly,
    pub certificate: SturmCertificate,
}

/// `(0, 8/5)`: a rational interval containing `(0, pi/2)`.
pub fn default_interval() -> (BigRational, BigRational) {
    (rat(0, 1), rat(8, 5))
}

pub fn certify_lemma(lemma: Lemma) -> Result<CertificateBundle, LemmaError> {
    let (lo, hi) = default_interval();
    certify_plan(&lemma.plan(), &lo, &hi)
}

pub fn certify_plan(plan: &LemmaPlan, lo: &BigRational, hi: &BigRational) -> Result<CertificateBundle, LemmaError> {
    let fail = |stage| move |source| LemmaError { lemma: plan.lemma, stage, source };
    check_interval(lo, hi).map_err(fail(Stage::Interval))?;
    let enclosures: Vec<_> = plan
        .terms
        .iter()
        .map(|t| (t.label, maclaurin(t.target, &t.scale, t.degree).1))
        .collect();
    let mut terms: Vec<BoundTerm> = plan
        .terms
        .iter()
        .zip(&enclosures)
        .map(|(t, (_, e))| BoundTerm::Enclosed { multiplier: t.multiplier.clone(), enclosure: e.clone() })
        .collect();
    terms.push(BoundTerm::Exact(plan.exact.clone()));
    let combined = combine_bound(&terms, plan.direction, hi).map_err(fail(Stage::Combine))?;
    let certificate = sturm_sign(&combined, lo, hi, plan.claimed).map_err(fail(Stage::Sturm))?;
    Ok(CertificateBundle { plan: plan.clone(), enclosures, combined, certificate })
}

/// Canonical, decimal-free audit text.
impl fmt::Display for CertificateBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.certificate;
        let mut s = String::new();
        writeln!(s, "lemma {}", self.plan.lemma.id())?;
        writeln!(s, "mtp {}", self.plan.mtp)?;
        writeln!(s, "claim {} on ({}, {})", c.claimed_sign.name(), c.lo, c.hi)?;
        for ((label, e), t) in self.enclosures.iter().zip(&self.plan.terms) {
            writeln!(
                s,
                "term {label}: {}, multiplier {}, valid below {}",
                e.label(),
                t.multiplier,
                e.valid_hi
            )?;
        }
        writeln!(s, "term exact: {}", self.plan.exact)?;
        writeln!(s, "bound {}: {}", self.plan.direction.name(), self.combined)?;
        writeln!(s, "factored x^{}", c.factored_power)?;
        writeln!(s, "cofactor {}", c.cofactor)?;
        writeln!(s, "sturm chain length {}, roots {}", c.chain_length, c.root_count)?;
        writeln!(s, "valid")?;
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(n: i64, d: i64, power: usize) -> RationalPoly {
        RationalPoly::monomial(rat(n, d), power)
    }

    #[test]
    fn ga_lemma() {
        let b = certify_lemma(Lemma::GaMonotonicity).unwrap();
        assert_eq!(b.combined, &mono(2, 2835, 9) + &mono(-1, 240, 7));
        assert_eq!(b.certificate.factored_power, 7);
        assert_eq!(b.certificate.root_count, 0);
        assert_eq!(b.certificate.claimed_sign, Sign::Negative);
    }

    #[test]
    fn gb_lemma() {
        let b = certify_lemma(Lemma::GbMonotonicity).unwrap();
        assert_eq!(b.combined, &mono(-4, 315, 8) + &mono(2, 45, 6));
        assert_eq!(b.certificate.factored_power, 6);
        assert_eq!(b.certificate.root_count, 0);
    }

    #[test]
    fn lowered_degree_is_rejected() {
        let plan = Lemma::GaMonotonicity.plan().with_degree("x^2*sin(x)", 3).unwrap();
        let (lo, hi) = default_interval();
        let err = certify_plan(&plan, &lo, &hi).unwrap_err();
        assert_eq!(err.stage, Stage::Combine);
        assert!(matches!(err.source, CertifyError::DirectionMismatch { index: 2, .. }));
        assert!(Lemma::GaMonotonicity.plan().with_degree("nope", 3).is_none());
    }

    #[test]
    fn interval_past_the_sign_change_fails_in_sturm() {
        // 2/2835 x^2 - 1/240 vanishes at x^2 = 189/32, about 2.43
        let err = certify_plan(&Lemma::GaMonotonicity.plan(), &rat(0, 1), &rat(5, 2)).unwrap_err();
        assert_eq!(err.stage, Stage::Sturm);
        assert!(matches!(err.source, CertifyError::RootInside { count: 1, .. }));
        let err = certify_plan(&Lemma::GaMonotonicity.plan(), &rat(1, 1), &rat(1, 2)).unwrap_err();
        assert_eq!(err.stage, Stage::Interval);
    }

    #[test]
    fn canonical_text_is_decimal_free() {
        let text = certify_lemma(Lemma::GbMonotonicity).unwrap().to_string();
        assert!(text.contains("bound lower: -4/315*x^8 + 2/45*x^6"), "{text}");
        assert!(!text.contains('.'));
        assert!(text.ends_with("valid\n"));
    }
}
