//! Bracketing root finding and extremum location on `(0, pi/2)`.
//!
//! All searches run on the window `[EDGE, pi/2 - EDGE]`; the open endpoints
//! are represented by their analytic limits (see [`Interval01`]), never by
//! evaluation.

use std::f64::consts::FRAC_PI_2;

use thiserror::Error;

use crate::family::{self, FamilyError, FamilySpec, Interval01};

/// Distance kept from both open endpoints.
pub const EDGE: f64 = 1e-9;
pub const DEFAULT_GRID_N: usize = 1024;
pub const DEFAULT_TOL: f64 = 1e-12;
/// Extra log-spaced samples between `EDGE` and the first uniform grid point.
/// Extrema of some members sit very close to zero (the A-type maximum for `q`
/// near 2 drifts towards the origin like `exp(-c / (2 - q))`).
const LOG_POINTS: usize = 96;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("invalid bracket [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi} do not differ in sign")]
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("grid size {got} is below the minimum {min}")]
    GridTooSmall { got: usize, min: usize },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootRecord {
    pub x: f64,
    /// `|f(x)|` at the returned point.
    pub residual: f64,
    /// Final bracket, endpoints of opposite sign.
    pub bracket: (f64, f64),
    pub iterations: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtremumKind {
    Max,
    Min,
}

impl ExtremumKind {
    pub fn name(self) -> &'static str {
        match self {
            ExtremumKind::Max => "max",
            ExtremumKind::Min => "min",
        }
    }
}

/// An interior critical point of a family member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremumRecord {
    pub x: f64,
    pub value: f64,
    pub kind: ExtremumKind,
}

/// Pairs of consecutive samples across which `f` changes sign strictly.
/// Samples where `f` is exactly zero or not finite are skipped, so a bracket
/// joins the last usable sample to the next one of opposite sign.
fn sign_changes(samples: impl IntoIterator<Item = (f64, f64)>) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut last: Option<(f64, f64)> = None;
    for (x, y) in samples {
        if y == 0.0 || !y.is_finite() {
            continue;
        }
        if let Some((lx, ly)) = last {
            if (ly < 0.0) != (y < 0.0) {
                out.push((lx, x));
            }
        }
        last = Some((x, y));
    }
    out
}

/// Evaluates `f` at `n` uniformly spaced points strictly inside `(lo, hi)` and
/// returns every consecutive pair with a strict sign change.
pub fn bracket_scan<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n: usize) -> Vec<(f64, f64)> {
    if n < 2 || !(lo < hi) {
        return Vec::new();
    }
    let step = (hi - lo) / (n + 1) as f64;
    sign_changes((1..=n).map(|i| {
        let x = lo + step * i as f64;
        (x, f(x))
    }))
}

/// Sample abscissae used by the family searches: `grid_n` uniform points on
/// `[EDGE, pi/2 - EDGE]` (both ends included) plus a log-spaced run between
/// `EDGE` and the first interior uniform point. Sorted ascending.
pub fn window_grid(grid_n: usize) -> Vec<f64> {
    let lo = EDGE;
    let hi = FRAC_PI_2 - EDGE;
    let n = grid_n.max(2);
    let step = (hi - lo) / (n - 1) as f64;
    let first = lo + step;
    let ratio = (first / lo).ln() / (LOG_POINTS + 1) as f64;
    let mut xs = Vec::with_capacity(n + LOG_POINTS);
    xs.push(lo);
    xs.extend((1..=LOG_POINTS).map(|i| lo * (ratio * i as f64).exp()));
    xs.extend((1..n - 1).map(|i| lo + step * i as f64));
    xs.push(hi);
    xs
}

/// Bisection on a sign-change bracket down to width `tol`.
///
/// Runs at most `ceil(log2((hi - lo) / tol)) + 2` halvings.
pub fn bisect<F: Fn(f64) -> f64>(f: F, bracket: (f64, f64), tol: f64) -> Result<RootRecord, SolveError> {
    if !(tol > 0.0) {
        return Err(SolveError::InvalidTolerance(tol));
    }
    let (mut lo, mut hi) = if bracket.0 <= bracket.1 { bracket } else { (bracket.1, bracket.0) };
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(RootRecord { x: lo, residual: 0.0, bracket: (lo, lo), iterations: 0 });
    }
    if f_hi == 0.0 {
        return Ok(RootRecord { x: hi, residual: 0.0, bracket: (hi, hi), iterations: 0 });
    }
    if !((f_lo < 0.0) != (f_hi < 0.0)) || !f_lo.is_finite() || !f_hi.is_finite() {
        return Err(SolveError::InvalidBracket { lo, hi, f_lo, f_hi });
    }
    let lo_negative = f_lo < 0.0;
    let max_iter = ((hi - lo) / tol).log2().ceil().max(0.0) as u32 + 2;
    let mut iterations = 0;
    while hi - lo > tol && iterations < max_iter {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(RootRecord { x: mid, residual: 0.0, bracket: (mid, mid), iterations });
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    Ok(RootRecord { x, residual: f(x).abs(), bracket: (lo, hi), iterations })
}

fn check_search(grid_n: usize, tol: f64) -> Result<(), SolveError> {
    if grid_n < 64 {
        return Err(SolveError::GridTooSmall { got: grid_n, min: 64 });
    }
    if !(tol > 0.0) {
        return Err(SolveError::InvalidTolerance(tol));
    }
    Ok(())
}

/// Roots of `f` on the search window, one per sign change of the sampled grid.
pub fn window_roots<F: Fn(f64) -> f64>(f: F, grid_n: usize, tol: f64) -> Result<Vec<RootRecord>, SolveError> {
    check_search(grid_n, tol)?;
    sign_changes(window_grid(grid_n).into_iter().map(|x| (x, f(x))))
        .into_iter()
        .map(|b| bisect(&f, b, tol))
        .collect()
}

/// All interior extrema of `phi(spec, .)`, located as sign changes of the
/// closed-form x-derivative and classified by the direction of the flip.
/// Sorted by `x`.
pub fn find_extrema(spec: &FamilySpec, grid_n: usize, tol: f64) -> Result<Vec<ExtremumRecord>, SolveError> {
    check_search(grid_n, tol)?;
    let deriv = |x: f64| family::dphi_dx(spec, x).unwrap_or(f64::NAN);
    let brackets = sign_changes(window_grid(grid_n).into_iter().map(|x| (x, deriv(x))));
    brackets
        .into_iter()
        .map(|b| {
            let kind = if deriv(b.0) > 0.0 { ExtremumKind::Max } else { ExtremumKind::Min };
            let root = bisect(deriv, b, tol)?;
            Ok(ExtremumRecord { x: root.x, value: family::phi(spec, root.x)?, kind })
        })
        .collect()
}

/// `sup |phi|` over the open interval: the largest magnitude among the
/// interior extrema and the two endpoint limits.
pub fn sup_abs_deviation(
    spec: &FamilySpec,
    interval: &Interval01,
    grid_n: usize,
    tol: f64,
) -> Result<f64, SolveError> {
    let extrema = find_extrema(spec, grid_n, tol)?;
    Ok(extrema
        .iter()
        .map(|e| e.value.abs())
        .fold(interval.lo_limit.abs().max(interval.hi_limit.abs()), f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use std::f64::consts::{PI, SQRT_2};

    #[test]
    fn scan_constant_is_empty() {
        assert!(bracket_scan(|_| 1.0, 0.0, 1.0, 1024).is_empty());
        assert!(bracket_scan(|x| x, -1.0, 1.0, 1).is_empty());
    }

    #[test]
    fn scan_cosine() {
        let b = bracket_scan(f64::cos, 0.0, PI, 1024);
        assert_eq!(b.len(), 1);
        assert!(b[0].0 < FRAC_PI_2 && FRAC_PI_2 < b[0].1);
    }

    #[test]
    fn scan_skips_exact_zeros() {
        // zero exactly on a sample: the bracket spans it
        let b = bracket_scan(|x| x - 0.5, 0.0, 1.0, 3);
        assert_eq!(b, vec![(0.25, 0.75)]);
    }

    #[test]
    fn bisect_sqrt2() {
        let r = bisect(|x| x * x - 2.0, (1.0, 2.0), 1e-12).unwrap();
        assert!((r.x - SQRT_2).abs() < 1e-12);
        assert!(r.iterations <= (1e12f64).log2().ceil() as u32 + 2);
        assert!(r.bracket.1 - r.bracket.0 <= 1e-12);
    }

    #[test]
    fn bisect_rejects_same_sign() {
        assert!(matches!(bisect(|x| x * x + 1.0, (0.0, 1.0), 1e-9), Err(SolveError::InvalidBracket { .. })));
        assert!(matches!(bisect(|x| x, (-1.0, 1.0), 0.0), Err(SolveError::InvalidTolerance(_))));
    }

    #[test]
    fn window_grid_is_sorted_and_bounded() {
        let g = window_grid(1024);
        assert_eq!(g.len(), 1024 + LOG_POINTS);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g[0], EDGE);
        assert_eq!(*g.last().unwrap(), FRAC_PI_2 - EDGE);
    }

    #[test]
    fn a_type_extrema_order() {
        let spec = FamilySpec::a_type(1.9).unwrap();
        let ex = find_extrema(&spec, 1024, 1e-12).unwrap();
        assert_eq!(ex.len(), 2);
        assert_eq!(ex[0].kind, ExtremumKind::Max);
        assert_eq!(ex[1].kind, ExtremumKind::Min);
        assert!((ex[0].x - 0.298_404_193_817_380_2).abs() < 1e-10);
        assert!((ex[1].x - 1.205_848_268_395_069_8).abs() < 1e-10);
    }

    #[test]
    fn grid_and_tol_are_validated() {
        let spec = FamilySpec::a_type(1.9).unwrap();
        assert!(matches!(find_extrema(&spec, 10, 1e-12), Err(SolveError::GridTooSmall { .. })));
        assert!(matches!(find_extrema(&spec, 1024, -1.0), Err(SolveError::InvalidTolerance(_))));
    }
}
