use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certify::{certify_plan, Lemma};
use crate::family::{self, FamilySpec};
use crate::minimax::{
    check_double_bound, check_sandwich, classical_sandwiches, classify, critical_constants, deviation_tables_with,
    solve_minimax_with, BoundCheck, MinimaxFamily, Sandwich,
};

use super::{format_sig, Cell, Outcome, Report, ReportConfig, Table, EXIT_CERTIFICATE, EXIT_MISMATCH, EXIT_OK};

/// Grid size of the bound checks in `verify`.
pub const VERIFY_POINTS: usize = 10_000;
/// Allowed gap between a recomputed deviation and its published value.
const TABLE_TOL: f64 = 1e-5;
/// Allowed relative gap between a solved constant and its published value.
const CONSTANT_REL_TOL: f64 = 1e-4;
/// Random parameter pairs per double-bound regime in `verify`.
const DOUBLE_BOUND_DRAWS: usize = 20;

fn error_outcome(command: &str, message: String) -> Outcome {
    let mut t = Table::new("error", &format!("{command} failed"), &["message"]);
    t.push(vec![message.into()]);
    Outcome { report: Report { tables: vec![t], blocks: Vec::new() }, exit: EXIT_MISMATCH }
}

fn within_rel(value: f64, reference: f64) -> bool {
    (value - reference).abs() <= CONSTANT_REL_TOL * reference.abs()
}

pub fn cmd_bounds(config: &ReportConfig) -> Outcome {
    let tables = match deviation_tables_with(config.grid_n, config.tol) {
        Ok(t) => t,
        Err(e) => return error_outcome("bounds", e.to_string()),
    };
    let cols = [
        "id",
        "bound",
        "closed_form",
        "closed_form_value",
        "deviation",
        "closed_form_difference",
        "published",
        "published_difference",
        "ok",
    ];
    let mut all_ok = true;
    let mut build = |id, title, rows: &[crate::minimax::DeviationRow]| {
        let mut t = Table::new(id, title, &cols);
        for r in rows {
            let cf_diff = r.closed_form.as_ref().map(|c| (c.value - r.deviation).abs());
            let ok = r.difference() <= TABLE_TOL && cf_diff.map_or(true, |d| d <= TABLE_TOL);
            all_ok &= ok;
            t.push(vec![
                r.id.into(),
                r.bound.clone().into(),
                r.closed_form.as_ref().map(|c| c.expr).into(),
                r.closed_form.as_ref().map(|c| c.value).into(),
                r.deviation.into(),
                cf_diff.into(),
                r.reference.into(),
                r.difference().into(),
                ok.into(),
            ]);
        }
        t
    };
    let upper = build("upper", "Upper bounds of sinc x", &tables.upper);
    let lower = build("lower", "Lower bounds of sinc x", &tables.lower);
    Outcome {
        report: Report { tables: vec![upper, lower], blocks: Vec::new() },
        exit: if all_ok { EXIT_OK } else { EXIT_MISMATCH },
    }
}

/// Published `(parameter, deviation)` of each minimax member, in table order.
fn published(family: MinimaxFamily) -> (f64, f64) {
    match family {
        MinimaxFamily::FixedQ(1) => (0.13323, 0.055187),
        MinimaxFamily::FixedQ(2) => (0.036014, 0.0079283),
        MinimaxFamily::FixedQ(3) => (0.010441, 0.039635),
        MinimaxFamily::FixedQ(4) => (0.0031146, 0.059981),
        MinimaxFamily::AType => (1.84823, 0.0026604),
        MinimaxFamily::BType => (1.72287, 0.0061296),
        MinimaxFamily::FixedQ(_) => (f64::NAN, f64::NAN),
    }
}

fn published_coefficient(family: MinimaxFamily) -> Option<f64> {
    match family {
        MinimaxFamily::AType => Some(0.043803),
        MinimaxFamily::BType => Some(0.051415),
        MinimaxFamily::FixedQ(_) => None,
    }
}

pub fn cmd_minimax(config: &ReportConfig) -> Outcome {
    let mut t = Table::new(
        "minimax",
        "Minimax approximations 2/pi + p (pi^q - (2x)^q)",
        &[
            "row",
            "family",
            "coefficient",
            "exponent",
            "deviation",
            "published_parameter",
            "published_deviation",
            "residual",
            "iterations",
            "ok",
        ],
    );
    let mut all_ok = true;
    for (i, family) in MinimaxFamily::ALL.into_iter().enumerate() {
        let r = match solve_minimax_with(family, config.tol, config.grid_n, config.tol) {
            Ok(r) => r,
            Err(e) => return error_outcome("minimax", format!("{}: {e}", family.label())),
        };
        let (param, d0) = published(family);
        let ok = within_rel(r.param0, param)
            && within_rel(r.d0, d0)
            && published_coefficient(family).map_or(true, |c| within_rel(r.coefficient(), c));
        all_ok &= ok;
        t.push(vec![
            (i + 1).into(),
            family.label().into(),
            r.coefficient().into(),
            r.exponent().into(),
            r.d0.into(),
            param.into(),
            d0.into(),
            r.residual.into(),
            r.iterations.into(),
            ok.into(),
        ]);
    }
    let c = critical_constants();
    let mut k = Table::new("constants", "Boundary constants", &["name", "value", "closed_form"]);
    k.push(vec!["a-type q1".into(), c.q1_a.into(), "2/(pi - 2)".into()]);
    k.push(vec!["a-type q2".into(), c.q2_a.into(), "2".into()]);
    k.push(vec!["b-type q1".into(), c.q1_b.into(), "pi^2/4 - 1".into()]);
    k.push(vec!["b-type q2".into(), c.q2_b.into(), "2/(pi - 2)".into()]);
    for b in c.fixed {
        let (lo_form, hi_form) = if b.q == 1 {
            ("(pi - 2)/pi^2".to_string(), "2/pi^2".to_string())
        } else {
            (format!("2/({} pi^{})", b.q, b.q + 1), format!("(pi - 2)/pi^{}", b.q + 1))
        };
        k.push(vec![format!("fixed-q{} p1", b.q).into(), b.p1.into(), lo_form.into()]);
        k.push(vec![format!("fixed-q{} p2", b.q).into(), b.p2.into(), hi_form.into()]);
    }
    Outcome {
        report: Report { tables: vec![t, k], blocks: Vec::new() },
        exit: if all_ok { EXIT_OK } else { EXIT_MISMATCH },
    }
}

/// The term whose degree `--tamper` lowers: degree 3 flips the truncation of
/// `sin x` to a lower bound where an upper one is needed.
const TAMPER_TERM: (&str, u32) = ("x^2*sin(x)", 3);

pub fn cmd_certify(config: &ReportConfig) -> Outcome {
    let (lo, hi) = &config.interval;
    let mut t = Table::new(
        "certificates",
        "Sign certificates",
        &["lemma", "claim", "interval", "bound", "factored_power", "cofactor", "chain_length", "roots", "valid", "failure"],
    );
    let mut blocks = Vec::new();
    let mut all_ok = true;
    for lemma in Lemma::ALL {
        let mut plan = lemma.plan();
        if config.tamper && lemma == Lemma::GaMonotonicity {
            plan = plan.with_degree(TAMPER_TERM.0, TAMPER_TERM.1).expect("term exists");
        }
        let interval = format!("({lo}, {hi})");
        match certify_plan(&plan, lo, hi) {
            Ok(b) => {
                let c = &b.certificate;
                t.push(vec![
                    lemma.id().into(),
                    c.claimed_sign.name().into(),
                    interval.into(),
                    b.combined.to_string().into(),
                    c.factored_power.into(),
                    c.cofactor.to_string().into(),
                    c.chain_length.into(),
                    c.root_count.into(),
                    true.into(),
                    Cell::Empty,
                ]);
                blocks.push((lemma.id().to_string(), b.to_string()));
            }
            Err(e) => {
                all_ok = false;
                t.push(vec![
                    lemma.id().into(),
                    plan.claimed.name().into(),
                    interval.into(),
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    false.into(),
                    e.to_string().into(),
                ]);
            }
        }
    }
    Outcome { report: Report { tables: vec![t], blocks }, exit: if all_ok { EXIT_OK } else { EXIT_CERTIFICATE } }
}

fn check_row(c: &BoundCheck, params: String) -> Vec<Cell> {
    let v = c.first_violation;
    vec![
        c.label.clone().into(),
        params.into(),
        c.points.into(),
        c.passed.into(),
        c.ok().into(),
        v.map(|v| v.x).into(),
        v.map(|v| v.lower).into(),
        v.map(|v| v.sinc).into(),
        v.map(|v| v.upper).into(),
    ]
}

pub fn cmd_verify(config: &ReportConfig) -> Outcome {
    let cols = ["check", "parameters", "points", "passed", "ok", "x", "lower", "sinc", "upper"];
    let mut t = Table::new("bounds", "Two-sided bound checks", &cols);
    let mut all_ok = true;
    let num = |v: f64| format_sig(v, config.digits);
    let params = |s: &Sandwich| {
        format!("lower p={} q={}; upper p={} q={}", num(s.lower.p()), num(s.lower.q()), num(s.upper.p()), num(s.upper.q()))
    };
    for s in classical_sandwiches(8) {
        let c = check_sandwich(&s, VERIFY_POINTS);
        all_ok &= c.ok();
        t.push(check_row(&c, params(&s)));
    }

    let crit = critical_constants();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut pairs = vec![(crit.q1_b, crit.q1_a), (crit.q2_b, crit.q2_a), (1.0, 1.0), (2.0, 3.0)];
    for _ in 0..DOUBLE_BOUND_DRAWS {
        pairs.push((rng.gen_range(0.1..=crit.q1_b), rng.gen_range(0.1..=crit.q1_a)));
    }
    for _ in 0..DOUBLE_BOUND_DRAWS {
        pairs.push((rng.gen_range(crit.q2_b..=6.0), rng.gen_range(crit.q2_a..=6.0)));
    }
    let mut d = Table::new("double-bound", "Real-exponent double bounds", &cols);
    for (q_b, q_a) in pairs {
        match check_double_bound(q_b, q_a, VERIFY_POINTS) {
            Ok((_, c)) => {
                all_ok &= c.ok();
                d.push(check_row(&c, format!("q_b={} q_a={}", num(q_b), num(q_a))));
            }
            Err(e) => return error_outcome("verify", e.to_string()),
        }
    }
    Outcome {
        report: Report { tables: vec![t, d], blocks: Vec::new() },
        exit: if all_ok { EXIT_OK } else { EXIT_MISMATCH },
    }
}

struct Curve {
    family: String,
    label: &'static str,
    spec: FamilySpec,
}

fn bundle_curves(family: MinimaxFamily, param0: f64) -> Vec<Curve> {
    let (lo, hi) = family.search_interval().expect("supported family");
    let mut params: Vec<(&'static str, f64)> = Vec::new();
    params.extend([0.5, 0.75, 0.9].map(|f| ("", lo * f)));
    params.push(("boundary", lo));
    params.extend([0.25, 0.5, 0.75].map(|f| ("", lo + (hi - lo) * f)));
    params.push(("minimax", param0));
    params.push(("boundary", hi));
    params.extend([1.1, 1.5, 2.0].map(|f| ("", hi * f)));
    params.sort_by(|a, b| a.1.total_cmp(&b.1));
    params
        .into_iter()
        .map(|(label, p)| {
            let spec = family.spec(p).expect("positive parameter");
            let label = if label.is_empty() {
                classify(&spec).map_or("unclassified", |c| c.regime.name())
            } else {
                label
            };
            Curve { family: family.label(), label, spec }
        })
        .collect()
}

pub fn cmd_plot_data(config: &ReportConfig) -> Outcome {
    let bundles = [
        MinimaxFamily::AType,
        MinimaxFamily::BType,
        MinimaxFamily::FixedQ(1),
        MinimaxFamily::FixedQ(2),
        MinimaxFamily::FixedQ(3),
        MinimaxFamily::FixedQ(4),
    ];
    let mut t = Table::new("curves", "Family curves", &["family", "label", "parameter", "x", "value"]);
    for family in bundles {
        let param0 = match solve_minimax_with(family, config.tol, config.grid_n, config.tol) {
            Ok(r) => r.param0,
            Err(e) => return error_outcome("plot-data", e.to_string()),
        };
        for c in bundle_curves(family, param0) {
            for i in 1..=config.grid_n {
                let x = FRAC_PI_2 * i as f64 / (config.grid_n + 1) as f64;
                let v = family::phi(&c.spec, x).unwrap_or(f64::NAN);
                t.push(vec![
                    c.family.clone().into(),
                    c.label.into(),
                    c.spec.param().into(),
                    x.into(),
                    v.into(),
                ]);
            }
        }
    }
    Outcome { report: Report { tables: vec![t], blocks: Vec::new() }, exit: EXIT_OK }
}
