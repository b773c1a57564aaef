//! Sup-norm deviations of the classical upper and lower bounds.

use std::f64::consts::PI;

use crate::family::{coeff_a, coeff_b, FamilySpec, Interval01};
use crate::solve::{self, DEFAULT_GRID_N, DEFAULT_TOL};

use super::{critical_constants, MinimaxError};

/// A deviation known in closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub expr: &'static str,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeviationRow {
    pub id: &'static str,
    /// The bound as printed, `2/pi + coefficient (pi^q - (2x)^q)`.
    pub bound: String,
    pub spec: FamilySpec,
    pub closed_form: Option<ClosedForm>,
    /// Published value, truncated as printed.
    pub reference: f64,
    pub deviation: f64,
}

impl DeviationRow {
    pub fn difference(&self) -> f64 {
        (self.deviation - self.reference).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeviationTables {
    pub upper: Vec<DeviationRow>,
    pub lower: Vec<DeviationRow>,
}

impl DeviationTables {
    pub fn rows(&self) -> impl Iterator<Item = &DeviationRow> {
        self.upper.iter().chain(self.lower.iter())
    }
}

pub fn deviation_tables() -> Result<DeviationTables, MinimaxError> {
    deviation_tables_with(DEFAULT_GRID_N, DEFAULT_TOL)
}

struct RowDef {
    id: &'static str,
    bound: String,
    spec: FamilySpec,
    closed_form: Option<ClosedForm>,
    reference: f64,
}

fn bound_text(coeff: &str, q: &str) -> String {
    format!("2/pi + {coeff} (pi^{q} - (2x)^{q})")
}

fn upper_defs() -> Result<Vec<RowDef>, MinimaxError> {
    let q1_b = critical_constants().q1_b;
    let mut rows = vec![RowDef {
        id: "upper-fixed-q1",
        bound: bound_text("2/pi^2", "1"),
        spec: FamilySpec::fixed_q(1, coeff_b(1.0))?,
        // printed as (pi - 4)/pi, which is negative; the deviation is its magnitude
        closed_form: Some(ClosedForm { expr: "(4 - pi)/pi", value: (4.0 - PI) / PI }),
        reference: 0.27323,
    }];
    for (q, reference) in [(2u32, 0.011612), (3, 0.065358), (4, 0.10245)] {
        rows.push(RowDef {
            id: ["upper-a-q2", "upper-a-q3", "upper-a-q4"][q as usize - 2],
            bound: bound_text(&format!("(pi - 2)/pi^{}", q + 1), &q.to_string()),
            spec: FamilySpec::a_type(q as f64)?,
            closed_form: None,
            reference,
        });
    }
    rows.push(RowDef {
        id: "upper-b-q1",
        bound: bound_text("B(q1)", "q1"),
        spec: FamilySpec::b_type(q1_b)?,
        closed_form: Some(ClosedForm {
            expr: "(-pi^2 + 2 pi + 4)/(pi^2 - 4)",
            value: (-PI * PI + 2.0 * PI + 4.0) / (PI * PI - 4.0),
        }),
        reference: 0.070461,
    });
    Ok(rows)
}

fn lower_defs() -> Result<Vec<RowDef>, MinimaxError> {
    let q2_b = critical_constants().q2_b;
    let b_forms = [
        ("(pi - 3)/pi", (PI - 3.0) / PI),
        ("(3 pi - 8)/(3 pi)", (3.0 * PI - 8.0) / (3.0 * PI)),
        ("(2 pi - 5)/(2 pi)", (2.0 * PI - 5.0) / (2.0 * PI)),
    ];
    let mut rows = vec![RowDef {
        id: "lower-fixed-q1",
        bound: bound_text("(pi - 2)/pi^2", "1"),
        spec: FamilySpec::fixed_q(1, coeff_a(1.0))?,
        closed_form: None,
        reference: 0.082395,
    }];
    for (q, reference) in [(2u32, 0.045070), (3, 0.15117), (4, 0.20422)] {
        let (expr, value) = b_forms[q as usize - 2];
        rows.push(RowDef {
            id: ["lower-b-q2", "lower-b-q3", "lower-b-q4"][q as usize - 2],
            bound: bound_text(&format!("2/({q} pi^{})", q + 1), &q.to_string()),
            spec: FamilySpec::b_type(q as f64)?,
            closed_form: Some(ClosedForm { expr, value }),
            reference,
        });
    }
    rows.push(RowDef {
        id: "lower-a-q2",
        bound: bound_text("A(q2)", "q2"),
        spec: FamilySpec::a_type(q2_b)?,
        closed_form: None,
        reference: 0.0085153,
    });
    Ok(rows)
}

fn evaluate(defs: Vec<RowDef>, grid_n: usize, tol: f64) -> Result<Vec<DeviationRow>, MinimaxError> {
    defs.into_iter()
        .map(|d| {
            let deviation = solve::sup_abs_deviation(&d.spec, &Interval01::for_spec(&d.spec), grid_n, tol)?;
            Ok(DeviationRow {
                id: d.id,
                bound: d.bound,
                spec: d.spec,
                closed_form: d.closed_form,
                reference: d.reference,
                deviation,
            })
        })
        .collect()
}

pub fn deviation_tables_with(grid_n: usize, tol: f64) -> Result<DeviationTables, MinimaxError> {
    Ok(DeviationTables {
        upper: evaluate(upper_defs()?, grid_n, tol)?,
        lower: evaluate(lower_defs()?, grid_n, tol)?,
    })
}
