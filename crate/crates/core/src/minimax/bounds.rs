//! Grid checks of two-sided bounds `lower <= sinc x <= upper` on `(0, pi/2]`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::family::{self, coeff_a, coeff_b, sinc, FamilySpec};

use super::{critical_constants, MinimaxError};

/// Tolerance for the equality of every bound with sinc at `x = pi/2`.
const EQUALITY_TOL: f64 = 1e-12;

/// A pair of bounds, each of the form `2/pi + p (pi^q - (2x)^q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sandwich {
    pub label: String,
    pub lower: FamilySpec,
    pub upper: FamilySpec,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundViolation {
    pub x: f64,
    pub lower: f64,
    pub sinc: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub label: String,
    pub points: usize,
    pub passed: usize,
    pub first_violation: Option<BoundViolation>,
}

impl BoundCheck {
    pub fn ok(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// `2/pi + p (pi^q - (2x)^q)`.
pub fn bound_value(spec: &FamilySpec, x: f64) -> f64 {
    let q = spec.q();
    2.0 / PI + spec.p() * (PI.powf(q) - (2.0 * x).powf(q))
}

/// Checks the sandwich at `x_i = i (pi/2) / n`, `i = 1..=n`. Interior points
/// are decided from the sign of `phi` (the stably computed difference
/// `sinc - bound`), with no slack; at `x = pi/2` both sides must equal sinc
/// within `1e-12`.
pub fn check_sandwich(s: &Sandwich, n: usize) -> BoundCheck {
    let mut passed = 0;
    let mut first_violation = None;
    for i in 1..=n {
        let x = if i == n { FRAC_PI_2 } else { FRAC_PI_2 * i as f64 / n as f64 };
        let ok = if i == n {
            let s0 = sinc(x);
            (bound_value(&s.lower, x) - s0).abs() <= EQUALITY_TOL && (bound_value(&s.upper, x) - s0).abs() <= EQUALITY_TOL
        } else {
            let above_lower = family::phi(&s.lower, x).map_or(false, |v| v >= 0.0);
            let below_upper = family::phi(&s.upper, x).map_or(false, |v| v <= 0.0);
            above_lower && below_upper
        };
        if ok {
            passed += 1;
        } else if first_violation.is_none() {
            first_violation = Some(BoundViolation {
                x,
                lower: bound_value(&s.lower, x),
                sinc: sinc(x),
                upper: bound_value(&s.upper, x),
            });
        }
    }
    BoundCheck { label: s.label.clone(), points: n, passed, first_violation }
}

/// The classical linear bound and its integer-power generalisations
/// `n = 2..=max_n`.
pub fn classical_sandwiches(max_n: u32) -> Vec<Sandwich> {
    let spec = |q: u32, p: f64| FamilySpec::fixed_q(q, p).or_else(|_| FamilySpec::two_param(p, q as f64)).expect("positive");
    let mut out = vec![Sandwich {
        label: "linear".to_string(),
        lower: spec(1, coeff_a(1.0)),
        upper: spec(1, coeff_b(1.0)),
    }];
    out.extend((2..=max_n).map(|n| Sandwich {
        label: format!("power-{n}"),
        lower: spec(n, coeff_b(n as f64)),
        upper: spec(n, coeff_a(n as f64)),
    }));
    out
}

/// Which side the B-coefficient bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleBoundRegime {
    /// `q_b <= pi^2/4 - 1`, `q_a <= 2/(pi - 2)`: B-bound above, A-bound below.
    BUpper,
    /// `q_b >= 2/(pi - 2)`, `q_a >= 2`: B-bound below, A-bound above.
    BLower,
}

fn double_bound_regime(q_b: f64, q_a: f64) -> Result<DoubleBoundRegime, MinimaxError> {
    let c = critical_constants();
    if q_b > 0.0 && q_b <= c.q1_b && q_a > 0.0 && q_a <= c.q1_a {
        Ok(DoubleBoundRegime::BUpper)
    } else if q_b >= c.q2_b && q_a >= c.q2_a {
        Ok(DoubleBoundRegime::BLower)
    } else {
        Err(MinimaxError::OutOfRange { q_b, q_a })
    }
}

/// Grid check of the real-exponent double bound with B-coefficient exponent
/// `q_b` and A-coefficient exponent `q_a`.
pub fn check_double_bound(q_b: f64, q_a: f64, n: usize) -> Result<(DoubleBoundRegime, BoundCheck), MinimaxError> {
    let regime = double_bound_regime(q_b, q_a)?;
    let b = FamilySpec::b_type(q_b)?;
    let a = FamilySpec::a_type(q_a)?;
    let label = match regime {
        DoubleBoundRegime::BUpper => "double-bound-b-upper",
        DoubleBoundRegime::BLower => "double-bound-b-lower",
    }
    .to_string();
    let s = match regime {
        DoubleBoundRegime::BUpper => Sandwich { label, lower: a, upper: b },
        DoubleBoundRegime::BLower => Sandwich { label, lower: b, upper: a },
    };
    Ok((regime, check_sandwich(&s, n)))
}

pub fn verify_double_bound(q_b: f64, q_a: f64, n: usize) -> Result<bool, MinimaxError> {
    Ok(check_double_bound(q_b, q_a, n)?.1.ok())
}
