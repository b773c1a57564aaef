//! Closed-form evaluation of the stratified sinc families.
//!
//! Every family member has the shape
//!
//! ```text
//! phi(x) = sinc(x) - 2/pi - p * (pi^q - (2x)^q),    x in (0, pi/2)
//! ```
//!
//! and differs only in how `p` is tied to `q`:
//!
//! | kind       | coefficient `p`                 |
//! |------------|---------------------------------|
//! | `TwoParam` | free, `p > 0`                   |
//! | `AType`    | `A(q) = (pi - 2) / pi^(q+1)`    |
//! | `BType`    | `B(q) = 2 / (q pi^(q+1))`       |
//! | `FixedQ`   | free, `q` in `{1, 2, 3, 4}`     |
//!
//! The `k`-th x-derivative of any member splits as
//! `(x^(q+1) f_k + h_k(x)) / x^(k+1)`, where `f_k` depends only on the
//! parameters and `h_k` is a mixed trigonometric polynomial shared by all
//! members. The `h_k` are evaluated from their Maclaurin series near zero,
//! where the closed forms cancel catastrophically.

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, PI};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("parameter {name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("fixed-q families only exist for q in {{1, 2, 3, 4}}, got {0}")]
    UnsupportedFixedQ(f64),
    #[error("x = {0} lies outside the open interval (0, pi/2)")]
    OutOfDomain(f64),
    #[error("derivative order {0} is not supported (expected 1..=4)")]
    UnsupportedOrder(u32),
    #[error("{0:?} families have no free coefficient p")]
    NoFreeCoefficient(FamilyKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    TwoParam,
    AType,
    BType,
    FixedQ,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::TwoParam => "two-param",
            FamilyKind::AType => "a-type",
            FamilyKind::BType => "b-type",
            FamilyKind::FixedQ => "fixed-q",
        }
    }
}

/// One member of a stratified family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    kind: FamilyKind,
    p: Option<f64>,
    q: f64,
}

fn positive(name: &'static str, value: f64) -> Result<f64, FamilyError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(FamilyError::NonPositive { name, value })
    }
}

impl FamilySpec {
    pub fn two_param(p: f64, q: f64) -> Result<Self, FamilyError> {
        Ok(Self {
            kind: FamilyKind::TwoParam,
            p: Some(positive("p", p)?),
            q: positive("q", q)?,
        })
    }

    pub fn a_type(q: f64) -> Result<Self, FamilyError> {
        Ok(Self {
            kind: FamilyKind::AType,
            p: None,
            q: positive("q", q)?,
        })
    }

    pub fn b_type(q: f64) -> Result<Self, FamilyError> {
        Ok(Self {
            kind: FamilyKind::BType,
            p: None,
            q: positive("q", q)?,
        })
    }

    pub fn fixed_q(q: u32, p: f64) -> Result<Self, FamilyError> {
        if !(1..=4).contains(&q) {
            return Err(FamilyError::UnsupportedFixedQ(q as f64));
        }
        Ok(Self {
            kind: FamilyKind::FixedQ,
            p: Some(positive("p", p)?),
            q: q as f64,
        })
    }

    /// Builds a spec from raw parts, as received over the C ABI.
    pub fn from_parts(kind: FamilyKind, p: f64, q: f64) -> Result<Self, FamilyError> {
        match kind {
            FamilyKind::TwoParam => Self::two_param(p, q),
            FamilyKind::AType => Self::a_type(q),
            FamilyKind::BType => Self::b_type(q),
            FamilyKind::FixedQ => {
                if q.fract() != 0.0 || !(1.0..=4.0).contains(&q) {
                    return Err(FamilyError::UnsupportedFixedQ(q));
                }
                Self::fixed_q(q as u32, p)
            }
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// The explicitly chosen coefficient, `None` for A/B-type members.
    pub fn explicit_p(&self) -> Option<f64> {
        self.p
    }

    /// The effective coefficient `p` multiplying `pi^q - (2x)^q`.
    pub fn p(&self) -> f64 {
        match self.kind {
            FamilyKind::AType => coeff_a(self.q),
            FamilyKind::BType => coeff_b(self.q),
            FamilyKind::TwoParam | FamilyKind::FixedQ => self.p.expect("validated at construction"),
        }
    }

    /// Same family with the scalar parameter replaced: `q` for A/B-type
    /// members, `p` for the others.
    pub fn with_param(&self, value: f64) -> Result<Self, FamilyError> {
        match self.kind {
            FamilyKind::AType => Self::a_type(value),
            FamilyKind::BType => Self::b_type(value),
            FamilyKind::TwoParam => Self::two_param(value, self.q),
            FamilyKind::FixedQ => Self::fixed_q(self.q as u32, value),
        }
    }

    /// The scalar the family is stratified in: `q` for A/B-type, `p` otherwise.
    pub fn param(&self) -> f64 {
        match self.kind {
            FamilyKind::AType | FamilyKind::BType => self.q,
            FamilyKind::TwoParam | FamilyKind::FixedQ => self.p(),
        }
    }

    pub fn limit_at_zero(&self) -> f64 {
        phi_at_zero(self)
    }
}

/// The open domain `(0, pi/2)` together with the one-sided limits of the
/// function under study at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval01 {
    pub lo: f64,
    pub hi: f64,
    pub lo_limit: f64,
    pub hi_limit: f64,
}

impl Interval01 {
    pub fn new(lo_limit: f64, hi_limit: f64) -> Self {
        Self {
            lo: 0.0,
            hi: FRAC_PI_2,
            lo_limit,
            hi_limit,
        }
    }

    /// Endpoint limits of `phi(spec, .)`: `1 - 2/pi - p pi^q` at `0+` and `0`
    /// at `pi/2-`.
    pub fn for_spec(spec: &FamilySpec) -> Self {
        Self::new(phi_at_zero(spec), 0.0)
    }

    pub fn contains(&self, x: f64) -> bool {
        x > self.lo && x < self.hi
    }
}

fn check_x(x: f64) -> Result<(), FamilyError> {
    if x > 0.0 && x < FRAC_PI_2 {
        Ok(())
    } else {
        Err(FamilyError::OutOfDomain(x))
    }
}

const SINC_SERIES_CUTOFF: f64 = 1.0 / (1u64 << 26) as f64;

/// `sin(x)/x`, with `sinc(0) = 1`.
pub fn sinc(x: f64) -> f64 {
    let ax = x.abs();
    if ax < SINC_SERIES_CUTOFF {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0))
    } else {
        x.sin() / x
    }
}

/// Alternating series `sum_{n>=0} (-1)^n x^(2n) c_n`, where `ratio(n)` gives
/// `c_{n+1} / c_n`.
fn alternating_series(x2: f64, c0: f64, ratio: impl Fn(u32) -> f64) -> f64 {
    let mut term = c0;
    let mut sum = c0;
    for n in 0..60 {
        term *= -x2 * ratio(n);
        sum += term;
        if term.abs() <= f64::EPSILON * 1e-2 * sum.abs() {
            break;
        }
    }
    sum
}

/// `(1 - sinc x) / x^2 = sum (-1)^n x^(2n) / (2n+3)!`.
fn one_minus_sinc_over_x2(x: f64) -> f64 {
    alternating_series(x * x, 1.0 / 6.0, |n| {
        let m = 2.0 * n as f64;
        1.0 / ((m + 4.0) * (m + 5.0))
    })
}

fn one_minus_sinc(x: f64) -> f64 {
    if x < 2.0 {
        x * x * one_minus_sinc_over_x2(x)
    } else {
        1.0 - x.sin() / x
    }
}

const H_SERIES_CUTOFF: f64 = 0.5;

/// Series of `h_k` divided by its leading power (`x^3` for `k = 1, 2`,
/// `x^5` for `k = 3, 4`). Each `h_k` is `+-integral_0^x t^k trig(t) dt`:
///
/// * `t^k sin t` integrates to `sum (-1)^n x^(2n+k+2) / ((2n+1)! (2n+k+2))`
/// * `t^k cos t` integrates to `sum (-1)^n x^(2n+k+1) / ((2n)! (2n+k+1))`
fn h_scaled(order: u32, x: f64) -> f64 {
    let x2 = x * x;
    let k = order as f64;
    let (sign, odd) = match order {
        1 => (-1.0, true),
        2 => (-1.0, false),
        3 => (1.0, true),
        4 => (1.0, false),
        _ => unreachable!("order validated by callers"),
    };
    let mut fact = 1.0;
    let mut sum = 0.0;
    let mut pow = 1.0;
    for n in 0..40u32 {
        let m = 2.0 * n as f64;
        if n > 0 {
            fact *= if odd { m * (m + 1.0) } else { (m - 1.0) * m };
            pow *= -x2;
        }
        let denom = if odd { m + k + 2.0 } else { m + k + 1.0 };
        let term = pow / (fact * denom);
        sum += term;
        if n > 2 && term.abs() <= f64::EPSILON * 1e-2 * sum.abs() {
            break;
        }
    }
    sign * sum
}

fn h_series(order: u32, x: f64) -> f64 {
    // Leading powers: h1, h2 ~ x^3; h3, h4 ~ x^5.
    let lead = match order {
        1 | 2 => 3,
        _ => 5,
    };
    x.powi(lead) * h_scaled(order, x)
}

/// The trigonometric part `h_k(x)` of the `k`-th x-derivative of sinc:
/// `d^k/dx^k sinc(x) = h_k(x) / x^(k+1)`.
///
/// * `h_1(x) = x cos x - sin x`
/// * `h_2(x) = -2x cos x - (x^2 - 2) sin x`
/// * `h_3(x) = (-x^3 + 6x) cos x + (3x^2 - 6) sin x`
/// * `h_4(x) = 4x (x^2 - 6) cos x + (x^4 - 12x^2 + 24) sin x`
pub fn h_k(order: u32, x: f64) -> Result<f64, FamilyError> {
    if !(1..=4).contains(&order) {
        return Err(FamilyError::UnsupportedOrder(order));
    }
    if x.abs() < H_SERIES_CUTOFF {
        return Ok(h_series(order, x));
    }
    let (s, c) = x.sin_cos();
    let x2 = x * x;
    Ok(match order {
        1 => x * c - s,
        2 => -2.0 * x * c - (x2 - 2.0) * s,
        3 => (-x2 * x + 6.0 * x) * c + (3.0 * x2 - 6.0) * s,
        _ => 4.0 * x * (x2 - 6.0) * c + (x2 * x2 - 12.0 * x2 + 24.0) * s,
    })
}

fn falling(q: f64, k: u32) -> f64 {
    (0..k).map(|i| q - i as f64).product()
}

/// Parameter part `f_k` of the `k`-th x-derivative: `p 2^q q (q-1) ... (q-k+1)`.
pub fn f_k(spec: &FamilySpec, order: u32) -> Result<f64, FamilyError> {
    if !(1..=4).contains(&order) {
        return Err(FamilyError::UnsupportedOrder(order));
    }
    let q = spec.q();
    Ok(spec.p() * 2f64.powf(q) * falling(q, order))
}

/// `f_k(q) = pi^(-q-1) 2^q q (q-1) ... (q-k+1) (pi - 2)` for A-type members.
pub fn f_a(q: f64, order: u32) -> Result<f64, FamilyError> {
    f_k(&FamilySpec::a_type(q)?, order)
}

/// `A(q) = (pi - 2) / pi^(q+1)`.
pub fn coeff_a(q: f64) -> f64 {
    (PI - 2.0) / PI.powf(q + 1.0)
}

/// `B(q) = 2 / (q pi^(q+1))`.
pub fn coeff_b(q: f64) -> f64 {
    2.0 / (q * PI.powf(q + 1.0))
}

fn phi_at_zero(spec: &FamilySpec) -> f64 {
    match spec.kind() {
        FamilyKind::AType => 0.0,
        FamilyKind::BType => {
            let q = spec.q();
            ((PI - 2.0) * q - 2.0) / (PI * q)
        }
        _ => 1.0 - FRAC_2_PI - spec.p() * PI.powf(spec.q()),
    }
}

const NEAR_HALF_PI: f64 = 1.0;

/// `phi` written as `(sinc x - 2/pi) - c (1 - (2x/pi)^q)` with `c = p pi^q`,
/// both brackets expanded in `u = pi/2 - x` so that neither cancels.
fn phi_near_half_pi(spec: &FamilySpec, x: f64) -> f64 {
    let q = spec.q();
    let u = FRAC_PI_2 - x;
    let s = (-u / FRAC_PI_2).ln_1p();
    let half = (0.5 * u).sin();
    let sinc_gap = (FRAC_2_PI * u - 2.0 * half * half) / x;
    let c = match spec.kind() {
        FamilyKind::AType => 1.0 - FRAC_2_PI,
        FamilyKind::BType => 2.0 / (q * PI),
        _ => spec.p() * PI.powf(q),
    };
    sinc_gap + c * (q * s).exp_m1()
}

/// `phi(x) = sinc x - 2/pi - p (pi^q - (2x)^q)` on `(0, pi/2)`.
pub fn phi(spec: &FamilySpec, x: f64) -> Result<f64, FamilyError> {
    check_x(x)?;
    let q = spec.q();
    if x >= NEAR_HALF_PI {
        return Ok(phi_near_half_pi(spec, x));
    }
    let t = (x / FRAC_PI_2).powf(q);
    Ok(match spec.kind() {
        // sinc x - 1 + (2x/pi)^q (1 - 2/pi)
        FamilyKind::AType => (1.0 - FRAC_2_PI) * t - one_minus_sinc(x),
        // sinc x - 2/pi - 2/(q pi) (1 - (2x/pi)^q)
        FamilyKind::BType => sinc(x) - FRAC_2_PI - 2.0 / (q * PI) * (1.0 - t),
        _ => sinc(x) - FRAC_2_PI - spec.p() * PI.powf(q) * (1.0 - t),
    })
}

/// `d^k phi / dx^k` for `k` in `1..=4`, for any family.
pub fn dphi_dx_n(spec: &FamilySpec, x: f64, order: u32) -> Result<f64, FamilyError> {
    check_x(x)?;
    let f = f_k(spec, order)?;
    let h = h_k(order, x)?;
    // x^(q+1) f / x^(k+1) is folded into one power to avoid underflow.
    Ok(f * x.powf(spec.q() - order as f64) + h / x.powi(order as i32 + 1))
}

/// First x-derivative of `phi`.
pub fn dphi_dx(spec: &FamilySpec, x: f64) -> Result<f64, FamilyError> {
    dphi_dx_n(spec, x, 1)
}

/// `d^k phi_A / dx^k = (x^(q+1) f_k(q) + h_k(x)) / x^(k+1)`.
pub fn dphi_a_dx(q: f64, x: f64, order: u32) -> Result<f64, FamilyError> {
    dphi_dx_n(&FamilySpec::a_type(q)?, x, order)
}

/// `d phi_B / dx = (x cos x - sin x + (2x/pi)^(q+1)) / x^2`.
pub fn dphi_b_dx(q: f64, x: f64) -> Result<f64, FamilyError> {
    positive("q", q)?;
    check_x(x)?;
    Ok((h_k(1, x)? + (x / FRAC_PI_2).powf(q + 1.0)) / (x * x))
}

fn free_p(spec: &FamilySpec) -> Result<f64, FamilyError> {
    spec.explicit_p()
        .ok_or(FamilyError::NoFreeCoefficient(spec.kind()))
}

/// `d phi / dp = (2x)^q - pi^q`.
pub fn dphi_dp(spec: &FamilySpec, x: f64) -> Result<f64, FamilyError> {
    free_p(spec)?;
    check_x(x)?;
    let q = spec.q();
    Ok((2.0 * x).powf(q) - PI.powf(q))
}

/// `d phi / dq = p ((2x)^q ln(2x) - pi^q ln pi)` at fixed `p`.
pub fn dphi_dq(spec: &FamilySpec, x: f64) -> Result<f64, FamilyError> {
    let p = free_p(spec)?;
    check_x(x)?;
    let q = spec.q();
    let two_x = 2.0 * x;
    Ok(p * (two_x.powf(q) * two_x.ln() - PI.powf(q) * PI.ln()))
}

/// `d phi_A / dq = (1 - 2/pi) (2x/pi)^q ln(2x/pi)`; negative on the domain.
pub fn dphi_a_dq(q: f64, x: f64) -> Result<f64, FamilyError> {
    positive("q", q)?;
    check_x(x)?;
    let r = x / FRAC_PI_2;
    Ok((1.0 - FRAC_2_PI) * r.powf(q) * r.ln())
}

/// `d phi_B / dq = 2/(q^2 pi) * t (ln t + 1/t - 1)` with `t = (2x/pi)^q`;
/// positive on the domain since `ln t + 1/t - 1 > 0` for `t` in `(0, 1)`.
pub fn dphi_b_dq(q: f64, x: f64) -> Result<f64, FamilyError> {
    positive("q", q)?;
    check_x(x)?;
    let ln_t = q * (x / FRAC_PI_2).ln();
    let t = ln_t.exp();
    // t (ln t + 1/t - 1) = t ln t + (1 - t); -expm1 keeps 1 - t exact near t = 1.
    Ok(2.0 / (q * q * PI) * (t * ln_t - ln_t.exp_m1()))
}

/// The unique `q` with `phi_A(q, x) = 0`:
/// `ln[x (pi-2) / (pi (x - sin x))] / ln(pi / 2x)`.
pub fn g_a(x: f64) -> Result<f64, FamilyError> {
    check_x(x)?;
    // x - sin x = x^3 s(x) with s from the sinc series.
    let ln_num = ((PI - 2.0) / PI).ln() - 2.0 * x.ln() - one_minus_sinc_over_x2(x).ln();
    Ok(ln_num / (FRAC_PI_2 / x).ln())
}

/// The unique `q` with `d phi_B / dx (q, x) = 0`:
/// `ln[2x / (pi (sin x - x cos x))] / ln(pi / 2x)`.
pub fn g_b(x: f64) -> Result<f64, FamilyError> {
    check_x(x)?;
    let ln_sin_minus_xcos = if x < H_SERIES_CUTOFF {
        3.0 * x.ln() + (-h_scaled(1, x)).ln()
    } else {
        (-h_k(1, x)?).ln()
    };
    let ln_num = (x / FRAC_PI_2).ln() - ln_sin_minus_xcos;
    Ok(ln_num / (FRAC_PI_2 / x).ln())
}

/// Analytic endpoint data for the A- and B-type families at parameter `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointLimits {
    /// `d phi_A/dx` at `x = pi/4`.
    pub k1: f64,
    /// `lim_{x -> pi/2-} d^2 phi_A/dx^2`.
    pub k2: f64,
    /// `lim_{x -> pi/2-} d^3 phi_A/dx^3`.
    pub k3: f64,
    /// `lim_{x -> pi/2-} d phi_A/dx = 2 (q (pi-2) - 2) / pi^2`.
    pub dphi_a_dx_at_half_pi: f64,
    /// `phi_B(0+) = ((pi-2) q - 2) / (pi q)`.
    pub phi_b_at_zero: f64,
    /// Quadratic Taylor coefficient of `phi_B` at `pi/2`: `(4q - pi^2 + 4) / pi^3`.
    pub phi_b_half_pi_quadratic: f64,
}

pub fn endpoint_limits(q: f64) -> Result<EndpointLimits, FamilyError> {
    positive("q", q)?;
    let pi2 = PI * PI;
    let pi3 = pi2 * PI;
    let k1 = (2f64.powf(-q) * q * (4.0 * PI - 8.0) + 2.0 * 2f64.sqrt() * (PI - 4.0)) / pi2;
    let k2 = ((4.0 * PI - 8.0) * q * q + (8.0 - 4.0 * PI) * q - 2.0 * pi2 + 16.0) / pi3;
    let k3 = ((8.0 * PI - 16.0) * q * q * q
        + (48.0 - 24.0 * PI) * q * q
        + (16.0 * PI - 32.0) * q
        + 12.0 * pi2
        - 96.0)
        / (pi3 * PI);
    Ok(EndpointLimits {
        k1,
        k2,
        k3,
        dphi_a_dx_at_half_pi: 2.0 * (q * (PI - 2.0) - 2.0) / pi2,
        phi_b_at_zero: ((PI - 2.0) * q - 2.0) / (PI * q),
        phi_b_half_pi_quadratic: (4.0 * q - pi2 + 4.0) / pi3,
    })
}
