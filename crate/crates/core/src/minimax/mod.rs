//! Boundary constants, regime classification and minimax parameters.
//!
//! Every family here is strictly monotone (stratified) in its scalar
//! parameter, so the parameter line splits into three regimes: one where the
//! member is a global lower bound of sinc (`phi > 0`), one where it is a
//! global upper bound (`phi < 0`), and an open interval in between where
//! `phi` changes sign exactly once. The minimax member lives in that middle
//! interval and is found by equalising the magnitudes of two witnesses.

mod bounds;
mod tables;

use std::f64::consts::PI;

use thiserror::Error;

use crate::family::{self, coeff_a, coeff_b, FamilyError, FamilyKind, FamilySpec, Interval01};
use crate::solve::{self, ExtremumKind, ExtremumRecord, RootRecord, SolveError, DEFAULT_GRID_N, DEFAULT_TOL};

pub use bounds::{
    bound_value, check_double_bound, check_sandwich, classical_sandwiches, verify_double_bound, BoundCheck, BoundViolation,
    DoubleBoundRegime, Sandwich,
};
pub use tables::{deviation_tables, deviation_tables_with, ClosedForm, DeviationRow, DeviationTables};

/// Offset from the boundary constants at which the outer search starts; the
/// extremum structure degenerates exactly at the boundary.
const SEARCH_SHRINK: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MinimaxError {
    #[error("{0:?} families are not classified (only A-type, B-type and fixed-q)")]
    UnsupportedKind(FamilyKind),
    #[error("expected one sign change of phi inside the window, found {found}")]
    CrossingNotResolved { found: usize },
    #[error("equalisation objective does not change sign on [{lo}, {hi}] (D = {d_lo}, {d_hi})")]
    NoSignChange { lo: f64, hi: f64, d_lo: f64, d_hi: f64 },
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("q = {q_b} / {q_a} outside both admissible double-bound ranges")]
    OutOfRange { q_b: f64, q_a: f64 },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// `(p1, p2)` bounding the crossing regime of `phi_{p,q}` at a fixed integer `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedQBounds {
    pub q: u32,
    pub p1: f64,
    pub p2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalConstants {
    /// `2 / (pi - 2)`
    pub q1_a: f64,
    /// `2`
    pub q2_a: f64,
    /// `pi^2 / 4 - 1`
    pub q1_b: f64,
    /// `2 / (pi - 2)`
    pub q2_b: f64,
    pub fixed: [FixedQBounds; 4],
}

impl CriticalConstants {
    pub fn fixed_q(&self, q: u32) -> Option<FixedQBounds> {
        self.fixed.iter().copied().find(|b| b.q == q)
    }
}

pub fn critical_constants() -> CriticalConstants {
    let fixed = |q: u32| {
        let (a, b) = (coeff_a(q as f64), coeff_b(q as f64));
        // For q = 1 the A-coefficient is the smaller one; from q = 2 on it is B.
        FixedQBounds { q, p1: a.min(b), p2: a.max(b) }
    };
    CriticalConstants {
        q1_a: 2.0 / (PI - 2.0),
        q2_a: 2.0,
        q1_b: PI * PI / 4.0 - 1.0,
        q2_b: 2.0 / (PI - 2.0),
        fixed: [fixed(1), fixed(2), fixed(3), fixed(4)],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `phi > 0` on the whole interval: the bound lies below sinc.
    GlobalLower,
    /// `phi < 0` on the whole interval: the bound lies above sinc.
    GlobalUpper,
    /// `phi` changes sign exactly once.
    Crossing,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::GlobalLower => "global-lower",
            Regime::GlobalUpper => "global-upper",
            Regime::Crossing => "crossing",
        }
    }
}

/// Sign pattern of a crossing member, read from left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    PositiveThenNegative,
    NegativeThenPositive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeClassification {
    pub regime: Regime,
    pub crossing: Option<RootRecord>,
    pub orientation: Option<Orientation>,
}

/// How the parameter line of one family splits into regimes.
#[derive(Debug, Clone, Copy, PartialEq)]
struct RegimeLayout {
    lo: f64,
    hi: f64,
    below: Regime,
    above: Regime,
    orientation: Orientation,
}

fn layout(spec: &FamilySpec) -> Result<RegimeLayout, MinimaxError> {
    let c = critical_constants();
    use Orientation::*;
    use Regime::*;
    Ok(match spec.kind() {
        FamilyKind::AType => RegimeLayout {
            lo: c.q1_a,
            hi: c.q2_a,
            below: GlobalLower,
            above: GlobalUpper,
            orientation: PositiveThenNegative,
        },
        FamilyKind::BType => RegimeLayout {
            lo: c.q1_b,
            hi: c.q2_b,
            below: GlobalUpper,
            above: GlobalLower,
            orientation: NegativeThenPositive,
        },
        FamilyKind::FixedQ => {
            let q = spec.q() as u32;
            let b = c.fixed_q(q).expect("fixed-q spec validated");
            RegimeLayout {
                lo: b.p1,
                hi: b.p2,
                below: GlobalLower,
                above: GlobalUpper,
                orientation: if q == 1 { NegativeThenPositive } else { PositiveThenNegative },
            }
        }
        FamilyKind::TwoParam => return Err(MinimaxError::UnsupportedKind(spec.kind())),
    })
}

pub fn classify(spec: &FamilySpec) -> Result<RegimeClassification, MinimaxError> {
    classify_with(spec, DEFAULT_GRID_N, DEFAULT_TOL)
}

/// Regime of `spec` from the boundary constants; crossing members also get
/// their unique sign change located numerically.
pub fn classify_with(spec: &FamilySpec, grid_n: usize, tol: f64) -> Result<RegimeClassification, MinimaxError> {
    let l = layout(spec)?;
    let t = spec.param();
    if t <= l.lo {
        return Ok(RegimeClassification { regime: l.below, crossing: None, orientation: None });
    }
    if t >= l.hi {
        return Ok(RegimeClassification { regime: l.above, crossing: None, orientation: None });
    }
    let roots = solve::window_roots(|x| family::phi(spec, x).unwrap_or(f64::NAN), grid_n, tol)?;
    if roots.len() != 1 {
        return Err(MinimaxError::CrossingNotResolved { found: roots.len() });
    }
    Ok(RegimeClassification {
        regime: Regime::Crossing,
        crossing: Some(roots[0]),
        orientation: Some(l.orientation),
    })
}

/// The families with a minimax member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinimaxFamily {
    AType,
    BType,
    FixedQ(u32),
}

impl MinimaxFamily {
    pub const ALL: [MinimaxFamily; 6] = [
        MinimaxFamily::FixedQ(1),
        MinimaxFamily::FixedQ(2),
        MinimaxFamily::FixedQ(3),
        MinimaxFamily::FixedQ(4),
        MinimaxFamily::AType,
        MinimaxFamily::BType,
    ];

    pub fn spec(self, param: f64) -> Result<FamilySpec, FamilyError> {
        match self {
            MinimaxFamily::AType => FamilySpec::a_type(param),
            MinimaxFamily::BType => FamilySpec::b_type(param),
            MinimaxFamily::FixedQ(q) => FamilySpec::fixed_q(q, param),
        }
    }

    /// Open parameter interval holding the crossing regime.
    pub fn search_interval(self) -> Result<(f64, f64), FamilyError> {
        let c = critical_constants();
        Ok(match self {
            MinimaxFamily::AType => (c.q1_a, c.q2_a),
            MinimaxFamily::BType => (c.q1_b, c.q2_b),
            MinimaxFamily::FixedQ(q) => {
                let b = c.fixed_q(q).ok_or(FamilyError::UnsupportedFixedQ(q as f64))?;
                (b.p1, b.p2)
            }
        })
    }

    pub fn label(self) -> String {
        match self {
            MinimaxFamily::AType => "a-type".to_string(),
            MinimaxFamily::BType => "b-type".to_string(),
            MinimaxFamily::FixedQ(q) => format!("fixed-q{q}"),
        }
    }
}

/// A quantity entering the equalisation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Witness {
    Extremum(ExtremumRecord),
    /// `phi(0+)`.
    LimitAtZero(f64),
}

impl Witness {
    pub fn value(&self) -> f64 {
        match self {
            Witness::Extremum(e) => e.value,
            Witness::LimitAtZero(v) => *v,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimaxResult {
    pub family: MinimaxFamily,
    /// `q0` for A/B-type families, `p0` for fixed-q families.
    pub param0: f64,
    pub d0: f64,
    /// The two equalised witnesses, left one first.
    pub witnesses: Vec<Witness>,
    /// `| |left| - |right| |` at `param0`.
    pub residual: f64,
    pub iterations: u32,
}

impl MinimaxResult {
    pub fn spec(&self) -> FamilySpec {
        self.family.spec(self.param0).expect("param0 lies inside the search interval")
    }

    /// Coefficient in front of `pi^q - (2x)^q`.
    pub fn coefficient(&self) -> f64 {
        self.spec().p()
    }

    pub fn exponent(&self) -> f64 {
        self.spec().q()
    }
}

/// Left and right witness of the equalisation at one parameter value. A
/// witness that the grid cannot resolve (it has merged into an endpoint where
/// `phi` vanishes) contributes magnitude zero.
fn witnesses(family: MinimaxFamily, spec: &FamilySpec, grid_n: usize, tol: f64) -> Result<(Witness, Option<Witness>), MinimaxError> {
    let extrema = solve::find_extrema(spec, grid_n, tol)?;
    let strongest = |kind: ExtremumKind| {
        extrema
            .iter()
            .filter(|e| e.kind == kind)
            .copied()
            .max_by(|a, b| a.value.abs().total_cmp(&b.value.abs()))
    };
    Ok(match family {
        MinimaxFamily::AType => {
            let max = strongest(ExtremumKind::Max);
            let min = strongest(ExtremumKind::Min);
            match (max, min) {
                (Some(a), b) => (Witness::Extremum(a), b.map(Witness::Extremum)),
                (None, Some(b)) => (Witness::LimitAtZero(0.0), Some(Witness::Extremum(b))),
                (None, None) => (Witness::LimitAtZero(0.0), None),
            }
        }
        MinimaxFamily::BType | MinimaxFamily::FixedQ(1) => (
            Witness::LimitAtZero(Interval01::for_spec(spec).lo_limit),
            strongest(ExtremumKind::Max).map(Witness::Extremum),
        ),
        MinimaxFamily::FixedQ(_) => (
            Witness::LimitAtZero(Interval01::for_spec(spec).lo_limit),
            strongest(ExtremumKind::Min).map(Witness::Extremum),
        ),
    })
}

fn objective(family: MinimaxFamily, param: f64, grid_n: usize, tol: f64) -> Result<f64, MinimaxError> {
    let spec = family.spec(param)?;
    let (left, right) = witnesses(family, &spec, grid_n, tol)?;
    Ok(left.value().abs() - right.map_or(0.0, |w| w.value().abs()))
}

/// Solves the equalisation for `family` by bisection on the parameter.
pub fn solve_minimax(family: MinimaxFamily, tol: f64) -> Result<MinimaxResult, MinimaxError> {
    solve_minimax_with(family, tol, DEFAULT_GRID_N, DEFAULT_TOL)
}

pub fn solve_minimax_with(
    family: MinimaxFamily,
    tol: f64,
    grid_n: usize,
    inner_tol: f64,
) -> Result<MinimaxResult, MinimaxError> {
    if !(tol > 0.0) {
        return Err(MinimaxError::InvalidTolerance(tol));
    }
    let (crit_lo, crit_hi) = family.search_interval()?;
    let (mut lo, mut hi) = (crit_lo + SEARCH_SHRINK, crit_hi - SEARCH_SHRINK);
    let d_lo = objective(family, lo, grid_n, inner_tol)?;
    let d_hi = objective(family, hi, grid_n, inner_tol)?;
    if (d_lo < 0.0) == (d_hi < 0.0) {
        return Err(MinimaxError::NoSignChange { lo, hi, d_lo, d_hi });
    }
    let lo_negative = d_lo < 0.0;
    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let d = objective(family, mid, grid_n, inner_tol)?;
        if d == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (d < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let param0 = 0.5 * (lo + hi);
    let spec = family.spec(param0)?;
    let (left, right) = witnesses(family, &spec, grid_n, inner_tol)?;
    let right_abs = right.map_or(0.0, |w| w.value().abs());
    let mut ws = vec![left];
    ws.extend(right);
    Ok(MinimaxResult {
        family,
        param0,
        d0: left.value().abs().max(right_abs),
        witnesses: ws,
        residual: (left.value().abs() - right_abs).abs(),
        iterations,
    })
}

pub fn solve_minimax_a(tol: f64) -> Result<MinimaxResult, MinimaxError> {
    solve_minimax(MinimaxFamily::AType, tol)
}

pub fn solve_minimax_b(tol: f64) -> Result<MinimaxResult, MinimaxError> {
    solve_minimax(MinimaxFamily::BType, tol)
}

pub fn solve_minimax_fixed_q(q: u32, tol: f64) -> Result<MinimaxResult, MinimaxError> {
    if !(1..=4).contains(&q) {
        return Err(FamilyError::UnsupportedFixedQ(q as f64).into());
    }
    solve_minimax(MinimaxFamily::FixedQ(q), tol)
}
