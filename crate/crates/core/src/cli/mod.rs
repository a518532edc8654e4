//! Command implementations behind the `fiblucas` binary.
//!
//! Every command produces a [`Report`] plus a human-readable rendering;
//! the binary prints one or the other and exits with
//! [`Report::exit_code`].

mod report;

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::classical::{cassini_check, fib_poly, laurent_sides, lucas_poly, Kind, LaurentIdentity};
use crate::dsl::{self, check_exact, check_numeric, identity_lines, DslError, BUILTIN_IDENTITIES};
use crate::exact::{int, parse_rational, rational_to_string, PolyX, QuadExt};
use crate::interpolants::{
    closed_series, def_series, exact_at_one, lambda_routes, phi_routes, radical_form_check,
    radical_form_sides, relation_outcome, specialize, Family, ParityIndex, RadicalForm, Relation,
};
use crate::series::{ts_t_eval, TSeries, DEFAULT_ORDER};

pub use report::{
    detail_text, quad_json, rational_json, Item, Report, RunMeta, Status, EXIT_FAIL, EXIT_INPUT,
    EXIT_INTERNAL, EXIT_OK,
};

pub const DEFAULT_SEED: u64 = 0x9E37_79B9_7F4A_7C15;
pub const DEFAULT_SAMPLES: usize = 100;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const MAX_POLY_INDEX: usize = 500;
/// Smallest order accepted by the verification commands.
pub const MIN_VERIFY_ORDER: usize = 8;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub order: usize,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: DEFAULT_ORDER,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            tolerance: DEFAULT_TOLERANCE,
            format: Format::Text,
        }
    }
}

impl RunConfig {
    fn meta(&self, command: &str) -> RunMeta {
        RunMeta {
            command: command.to_string(),
            order: self.order,
            seed: self.seed,
            samples: self.samples,
            tolerance: self.tolerance,
        }
    }

    fn check_verification(&self) -> Result<(), CliError> {
        if self.order < MIN_VERIFY_ORDER {
            return Err(CliError::input(format!(
                "order must be at least {MIN_VERIFY_ORDER}, got {}",
                self.order
            )));
        }
        if self.samples == 0 {
            return Err(CliError::input("samples must be at least 1"));
        }
        if !(self.tolerance.is_finite() && self.tolerance >= 0.0) {
            return Err(CliError::input("tolerance must be a nonnegative number"));
        }
        Ok(())
    }
}

/// A command that could not run at all.
#[derive(Clone, Debug, PartialEq, Error)]
#[error("{message}")]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

/// A finished command: the report and its human-readable form.
#[derive(Clone, Debug)]
pub struct Output {
    pub report: Report,
    pub text: String,
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        self.report.exit_code()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Machine => self.report.to_json() + "\n",
        }
    }
}

fn timed(f: impl FnOnce() -> Item) -> Item {
    let start = Instant::now();
    let item = f();
    item.timed(start.elapsed().as_micros() as u64)
}

fn coeff_strings(p: &PolyX) -> Vec<String> {
    let coeffs = p.coeffs();
    if coeffs.is_empty() {
        return vec!["0".into()];
    }
    coeffs.iter().map(rational_to_string).collect()
}

pub fn cmd_poly(kind: Kind, n: usize, cfg: &RunConfig) -> Result<Output, CliError> {
    if n > MAX_POLY_INDEX {
        return Err(CliError::input(format!(
            "index {n} out of range 0..={MAX_POLY_INDEX}"
        )));
    }
    let name = match kind {
        Kind::Fib => format!("F({n})"),
        Kind::Lucas => format!("L({n})"),
    };
    let p = match kind {
        Kind::Fib => fib_poly(n),
        Kind::Lucas => lucas_poly(n),
    };
    let coeffs = coeff_strings(&p);
    let rendered = p.render(false);
    let text = format!("coefficients: {}\n{}\n", coeffs.join(" "), rendered);
    let item = Item::pass(name, json!({ "coefficients": coeffs, "text": rendered }));
    Ok(Output {
        report: Report::new(cfg.meta("poly"), vec![item]),
        text,
    })
}

pub fn cmd_series(family: Family, t: Option<&str>, cfg: &RunConfig) -> Result<Output, CliError> {
    let n = cfg.order;
    if n == 0 {
        return Err(CliError::input("order must be at least 1"));
    }
    let s = def_series(family, n);
    let mut text = String::new();
    let item = match t {
        None => {
            let mut coeffs = Vec::new();
            for (k, c) in s.coeffs().iter().enumerate() {
                let rendered = c.render(true);
                if !num_traits::Zero::is_zero(c) {
                    let _ = writeln!(text, "x^{k}: {rendered}");
                }
                coeffs.push(rendered);
            }
            let _ = writeln!(text, "O(x^{n})");
            Item::pass(family.name(), json!({ "coefficients": coeffs }))
        }
        Some(raw) => {
            let t0 = parse_rational(raw)
                .ok_or_else(|| CliError::input(format!("not a rational number: {raw:?}")))?;
            let values = ts_t_eval(&s, &t0);
            let p = PolyX::from_coeffs(values.coeffs());
            let rendered = if p.is_zero() {
                format!("O(x^{n})")
            } else {
                format!("{} + O(x^{n})", p.render(false))
            };
            let _ = writeln!(text, "{rendered}");
            Item::pass(
                format!("{}(t={})", family.name(), rational_to_string(&t0)),
                json!({
                    "coefficients": values.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
                    "text": rendered,
                }),
            )
        }
    };
    Ok(Output {
        report: Report::new(cfg.meta("series"), vec![item]),
        text,
    })
}

/// Rows of the exact table at `x = 1`, in printing order.
pub const TABLE_ROWS: [&str; 6] = ["F", "Phi0", "Phi1", "L", "Lam0", "Lam1"];

/// Exact cell value of a table row at `t = k`.
pub fn table_value(row: &str, k: usize) -> QuadExt {
    let at_one = |p: PolyX| QuadExt::from_rational(p.eval(&int(1)));
    match row {
        "F" => at_one(fib_poly(k)),
        "L" => at_one(lucas_poly(k)),
        other => {
            let family: Family = other.parse().expect("table row names are families");
            exact_at_one(family, k as i64)
        }
    }
}

/// Renders one row, failing with an internal error on a cell that is
/// neither rational nor a rational multiple of √5.
pub fn table_row_item(row: &str, cells: &[QuadExt]) -> Item {
    let mut rendered = Vec::with_capacity(cells.len());
    for (k, cell) in cells.iter().enumerate() {
        match cell.table_form() {
            Some(s) => rendered.push(s),
            None => {
                return Item::error(
                    row,
                    json!({ "k": k, "cell": quad_json(cell), "message": "mixed rational and √5 parts" }),
                    EXIT_INTERNAL,
                )
            }
        }
    }
    Item::pass(
        row,
        json!({
            "cells": cells.iter().map(quad_json).collect::<Vec<_>>(),
            "text": rendered,
        }),
    )
}

pub fn cmd_table(max_k: usize, cfg: &RunConfig) -> Result<Output, CliError> {
    let items: Vec<Item> = TABLE_ROWS
        .iter()
        .map(|row| {
            let cells: Vec<QuadExt> = (0..=max_k).map(|k| table_value(row, k)).collect();
            table_row_item(row, &cells)
        })
        .collect();
    let report = Report::new(cfg.meta("table"), items);
    let text = if report.exit_code() == EXIT_OK {
        render_table(&report, max_k)
    } else {
        report.to_text()
    };
    Ok(Output { report, text })
}

fn render_table(report: &Report, max_k: usize) -> String {
    let mut grid: Vec<Vec<String>> = vec![std::iter::once("k".to_string())
        .chain((0..=max_k).map(|k| k.to_string()))
        .collect()];
    for item in &report.items {
        let cells = item.detail["text"].as_array().expect("rendered cells");
        grid.push(
            std::iter::once(item.name.clone())
                .chain(
                    cells
                        .iter()
                        .map(|c| c.as_str().unwrap_or_default().to_string()),
                )
                .collect(),
        );
    }
    let columns = grid[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (cell, &w))| {
                let pad = w - cell.chars().count();
                if i == 0 {
                    format!("{cell}{}", " ".repeat(pad))
                } else {
                    format!("{}{cell}", " ".repeat(pad))
                }
            })
            .collect();
        let _ = writeln!(out, "{}", line.join("  "));
    }
    out
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EvalKind {
    Phi,
    Lambda,
}

pub fn cmd_eval(
    kind: EvalKind,
    j: u8,
    t: f64,
    x: f64,
    verbose: bool,
    cfg: &RunConfig,
) -> Result<Output, CliError> {
    if j > 1 {
        return Err(CliError::input(format!(
            "parity index must be 0 or 1, got {j}"
        )));
    }
    if !t.is_finite() || !x.is_finite() {
        return Err(CliError::input("t and x must be finite"));
    }
    let j = ParityIndex::new(j as i64);
    let (name, routes) = match kind {
        EvalKind::Phi => (format!("Phi{}", j.value()), phi_routes(j, t, x)),
        EvalKind::Lambda => (format!("Lam{}", j.value()), lambda_routes(j, t, x)),
    };
    let detail = json!({ "t": t, "x": x, "value": routes.binet, "binet": routes.binet, "hyperbolic": routes.hyperbolic });
    let item = if routes.agree() {
        Item::pass(name, detail)
    } else {
        Item::error(name, detail, EXIT_INTERNAL)
    };
    let mut text = String::new();
    if routes.agree() {
        let _ = writeln!(text, "{}", routes.binet);
    } else {
        let _ = writeln!(text, "routes disagree");
    }
    if verbose || !routes.agree() {
        let _ = writeln!(text, "alpha-power route: {}", routes.binet);
        let _ = writeln!(text, "hyperbolic route:  {}", routes.hyperbolic);
    }
    Ok(Output {
        report: Report::new(cfg.meta("eval"), vec![item]),
        text,
    })
}

/// Source of the definitional series for the oracle items, replaceable
/// for fault injection.
pub type Definition = dyn Fn(Family, usize) -> TSeries + Sync;

type Task<'a> = Box<dyn Fn() -> Item + Send + Sync + 'a>;

fn mismatch_detail(power: usize, lhs: String, rhs: String) -> Value {
    json!({ "power": power, "lhs": lhs, "rhs": rhs })
}

fn series_item(name: String, lhs: &TSeries, rhs: &TSeries) -> Item {
    match lhs.first_mismatch(rhs).expect("one order") {
        None => Item::pass(name, json!(format!("verified modulo x^{}", lhs.order()))),
        Some(p) => Item::fail(
            name,
            mismatch_detail(p, lhs.coeff(p).render(true), rhs.coeff(p).render(true)),
        ),
    }
}

/// One item per identity line: exact check then sampling check.
fn dsl_item(name: String, text: &str, cfg: &RunConfig) -> Item {
    let id = match dsl::parse(text) {
        Ok(id) => id,
        Err(e) => return dsl_error_item(name, &e),
    };
    let exact = match check_exact(&id, cfg.order) {
        Ok(r) => r,
        Err(e) => return dsl_error_item(name, &e),
    };
    let numeric = match check_numeric(&id, cfg.samples, cfg.seed, cfg.tolerance) {
        Ok(r) => r,
        Err(e) => return dsl_error_item(name, &e),
    };
    let mut detail = json!({
        "exact": exact.to_string(),
        "max_residual": numeric.max_residual,
        "samples": numeric.samples,
        "skipped": numeric.skipped,
    });
    if let Some((power, l, r)) = &exact.mismatch {
        detail["mismatch"] = mismatch_detail(*power, l.render(true), r.render(true));
    }
    Item::from_bool(name, exact.passed() && numeric.passed(), detail)
}

fn dsl_error_item(name: String, e: &DslError) -> Item {
    let code = if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_INTERNAL
    };
    Item::error(name, json!(e.to_string()), code)
}

fn builtin_tasks<'a>(cfg: &'a RunConfig, definition: &'a Definition) -> Vec<Task<'a>> {
    let n = cfg.order;
    let mut tasks: Vec<Task<'a>> = Vec::new();

    for which in LaurentIdentity::ALL {
        for m in 0..=10 {
            let name = format!("laurent/{}/n={m}", which.name());
            tasks.push(Box::new(move || {
                let (l, r) = laurent_sides(which, m);
                Item::from_bool(name.clone(), l == r, json!(format!("{l} vs {r}")))
            }));
        }
    }
    for kind in [Kind::Fib, Kind::Lucas] {
        for m in 1..=20 {
            let label = if kind == Kind::Fib { "fib" } else { "lucas" };
            let name = format!("cassini/{label}/n={m}");
            tasks.push(Box::new(move || {
                Item::from_bool(
                    name.clone(),
                    cassini_check(kind, m),
                    json!("polynomial identity"),
                )
            }));
        }
    }
    for f in Family::ALL {
        let name = format!("oracle/{}", f.name());
        tasks.push(Box::new(move || {
            series_item(name.clone(), &definition(f, n), &closed_series(f, n))
        }));
    }
    for f in [Family::Phi0, Family::Phi1, Family::Lam0, Family::Lam1] {
        let parity = f.integer_parity().expect("polynomial families");
        for k in (1..=13.min(n - 1)).filter(|k| k % 2 == parity) {
            let name = format!("specialize/{}/t={k}", f.name());
            tasks.push(Box::new(move || {
                let expected = match f {
                    Family::Phi0 | Family::Phi1 => fib_poly(k),
                    _ => lucas_poly(k),
                };
                match specialize(f, k, n) {
                    Ok(p) => Item::from_bool(name.clone(), p == expected, json!(p.render(false))),
                    Err(e) => Item::fail(name.clone(), json!(e.to_string())),
                }
            }));
        }
    }
    for rel in Relation::ALL {
        for j in [ParityIndex::ZERO, ParityIndex::ONE] {
            let name = format!("relation/{}/j={}", rel.name(), j.value());
            tasks.push(Box::new(move || match relation_outcome(rel, j, n) {
                    None => Item::pass(name.clone(), json!(format!("verified modulo x^{n}"))),
                    Some(m) => Item::fail(
                        name.clone(),
                        json!({ "label": m.label, "power": m.power, "lhs": m.lhs.render(true), "rhs": m.rhs.render(true) }),
                    ),
                }));
        }
    }
    for which in RadicalForm::ALL {
        for k in 1..=4 {
            let name = format!("radical/{}/k={k}", which.name());
            tasks.push(Box::new(move || {
                let (l, r) = radical_form_sides(which, k);
                Item::from_bool(
                    name.clone(),
                    radical_form_check(which, k),
                    json!({ "square": quad_json(&l), "radicand": quad_json(&r) }),
                )
            }));
        }
    }
    for (line, text) in identity_lines(BUILTIN_IDENTITIES) {
        let name = format!("dsl/line {line}");
        tasks.push(Box::new(move || dsl_item(name.clone(), text, cfg)));
    }
    tasks
}

/// Runs tasks in parallel and returns items in task order.
fn run_tasks(tasks: Vec<Task<'_>>) -> Vec<Item> {
    tasks.par_iter().map(|task| timed(task)).collect()
}

pub fn cmd_verify_builtin(cfg: &RunConfig) -> Result<Output, CliError> {
    verify_builtin_with(cfg, &def_series)
}

/// [`cmd_verify_builtin`] with the definitional series supplied by the
/// caller. Tests use it to inject a corrupted definition.
pub fn verify_builtin_with(cfg: &RunConfig, definition: &Definition) -> Result<Output, CliError> {
    cfg.check_verification()?;
    let items = run_tasks(builtin_tasks(cfg, definition));
    let report = Report::new(cfg.meta("verify-builtin"), items);
    let text = report.to_text();
    Ok(Output { report, text })
}

/// Checks every identity in `text`. Parse errors are reported with the
/// line number and the byte offset within that line.
pub fn check_text(text: &str, cfg: &RunConfig) -> Result<Output, CliError> {
    cfg.check_verification()?;
    let raw_lines: Vec<&str> = text.lines().collect();
    let tasks: Vec<Task<'_>> = identity_lines(text)
        .map(|(line, body)| {
            let raw = raw_lines[line - 1];
            let lead = raw.len() - raw.trim_start().len();
            let name = format!("line {line}: {body}");
            let task: Task<'_> = Box::new(move || match dsl::parse(body) {
                Err(e) => {
                    let msg = format!("line {line}: {}", e.shifted(lead));
                    Item::error(name.clone(), json!(msg), EXIT_INPUT)
                }
                Ok(_) => dsl_item(name.clone(), body, cfg),
            });
            task
        })
        .collect();
    let report = Report::new(cfg.meta("check"), run_tasks(tasks));
    let text = report.to_text();
    Ok(Output { report, text })
}

pub fn cmd_check(path: &Path, cfg: &RunConfig) -> Result<Output, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    check_text(&text, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn cfg(order: usize) -> RunConfig {
        RunConfig {
            order,
            ..RunConfig::default()
        }
    }

    #[test]
    fn poly_output() {
        let out = cmd_poly(Kind::Fib, 6, &cfg(32)).unwrap();
        assert_eq!(out.text, "coefficients: 0 3 0 4 0 1\n3x + 4x^3 + x^5\n");
        assert_eq!(
            cmd_poly(Kind::Lucas, 0, &cfg(32))
                .unwrap()
                .text
                .lines()
                .last(),
            Some("2")
        );
        assert_eq!(
            cmd_poly(Kind::Fib, 1_000_000, &cfg(32)).unwrap_err().code,
            EXIT_INPUT
        );
    }

    #[test]
    fn series_output() {
        let out = cmd_series(Family::Phi0, None, &cfg(6)).unwrap();
        let lines: Vec<&str> = out.text.lines().collect();
        assert_eq!(lines[0], "x^1: t/2");
        assert_eq!(lines[1], "x^3: t^3/48 - t/12");
        assert_eq!(lines.last(), Some(&"O(x^6)"));
        let out = cmd_series(Family::Lam0, Some("6"), &cfg(8)).unwrap();
        assert_eq!(out.text, "2 + 9x^2 + 6x^4 + x^6 + O(x^8)\n");
        let out = cmd_series(Family::AlphaT, Some("0"), &cfg(8)).unwrap();
        assert_eq!(out.text, "1 + O(x^8)\n");
        assert_eq!(
            cmd_series(Family::AlphaT, Some("1/0"), &cfg(8))
                .unwrap_err()
                .code,
            EXIT_INPUT
        );
        assert_eq!(
            cmd_series(Family::AlphaT, None, &cfg(0)).unwrap_err().code,
            EXIT_INPUT
        );
    }

    #[test]
    fn table_rows_and_violation() {
        let out = cmd_table(8, &cfg(32)).unwrap();
        assert_eq!(out.exit_code(), EXIT_OK);
        let row = |name: &str| -> String {
            out.text
                .lines()
                .find(|l| l.starts_with(&format!("{name} ")))
                .unwrap()
                .split_whitespace()
                .skip(1)
                .collect::<Vec<_>>()
                .join(" ")
        };
        assert_eq!(row("Phi0"), "0 1/√5 1 4/√5 3 11/√5 8 29/√5 21");
        assert_eq!(row("Lam1"), "0 1 √5 4 3√5 11 8√5 29 21√5");
        assert_eq!(row("Phi1").split(' ').next(), Some("2/√5"));

        let bad = table_row_item("Phi0", &[QuadExt::new(rat(1, 1), rat(1, 1))]);
        assert_eq!(bad.status, Status::Error);
        let report = Report::new(cfg(32).meta("table"), vec![bad]);
        assert_eq!(report.exit_code(), EXIT_INTERNAL);
    }

    #[test]
    fn eval_values() {
        let v = |kind, j, t, x| -> f64 {
            let out = cmd_eval(kind, j, t, x, false, &cfg(32)).unwrap();
            out.report.items[0].detail["value"].as_f64().unwrap()
        };
        assert!((v(EvalKind::Phi, 0, 6.0, 1.0) - 8.0).abs() < 1e-10);
        assert_eq!(v(EvalKind::Lambda, 0, 0.0, 3.7), 2.0);
        assert!((v(EvalKind::Lambda, 0, 2.0, 1.0) - 3.0).abs() < 1e-10);
        let verbose = cmd_eval(EvalKind::Phi, 1, 0.5, 1.0, true, &cfg(32)).unwrap();
        assert_eq!(verbose.text.lines().count(), 3);
        assert_eq!(
            cmd_eval(EvalKind::Phi, 2, 0.5, 1.0, false, &cfg(32))
                .unwrap_err()
                .code,
            EXIT_INPUT
        );
        assert_eq!(
            cmd_eval(EvalKind::Phi, 0, f64::NAN, 1.0, false, &cfg(32))
                .unwrap_err()
                .code,
            EXIT_INPUT
        );
    }

    #[test]
    fn check_reports() {
        let text =
            "Lambda(0,t) == Phi(1,t-1) + Phi(1,t+1)\nLambda(1,t) == Phi(0,t-1) + Phi(0,t+1)\n";
        let out = check_text(text, &cfg(16)).unwrap();
        assert_eq!(out.exit_code(), EXIT_OK);
        assert_eq!(out.report.items.len(), 2);

        let out = check_text("Phi(0,t) == Phi(1,t)\n", &cfg(16)).unwrap();
        assert_eq!(out.exit_code(), EXIT_FAIL);
        assert!(out.text.contains("differs at x^0: 0 vs 1"), "{}", out.text);

        let out = check_text("# c\nt == t\n  Phi(3,t) == t\n", &cfg(16)).unwrap();
        assert_eq!(out.exit_code(), EXIT_INPUT);
        let detail = detail_text(&out.report.items[1].detail);
        assert_eq!(
            detail,
            "line 3: parity index must be 0 or 1, got 3 at offset 6"
        );

        assert_eq!(check_text("t == t", &cfg(4)).unwrap_err().code, EXIT_INPUT);
        assert_eq!(
            check_text("F(9) == 0", &cfg(8)).unwrap().exit_code(),
            EXIT_INPUT
        );
    }

    #[test]
    fn missing_file() {
        let err = cmd_check(Path::new("/nonexistent/identities.txt"), &cfg(16)).unwrap_err();
        assert_eq!(err.code, EXIT_INPUT);
    }
}
