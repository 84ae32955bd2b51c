//! Regression gate against the reference nondimensional tables.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use fgbeam::{
    compute_rigidities, solve_static, table_values, BoundaryCondition, Layup, LayupKind,
    LoadCase, MaterialPair, Mesh, Scheme, TableValues,
};
use rayon::prelude::*;
use serde::Deserialize;

use crate::study::num;

const TABLES_CSV: &str = include_str!("../fixtures/tables.csv");
const CONVERGENCE_CSV: &str = include_str!("../fixtures/convergence.csv");

/// Element count used for every table.
pub const TABLE_NE: usize = 16;
/// Relative tolerance for straight-beam tables.
pub const STRAIGHT_TOLERANCE: f64 = 1e-3;
/// Relative tolerance for curved-beam tables.
pub const CURVED_TOLERANCE: f64 = 2e-3;

const CURVED_TABLES: &[&str] = &["T7", "T8", "T12", "T14", "T15", "T16", "T19"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableQuantity {
    WBar,
    SigmaBar,
    TauBar,
}

impl TableQuantity {
    pub fn pick(&self, t: &TableValues) -> f64 {
        match self {
            Self::WBar => t.w_bar,
            Self::SigmaBar => t.sigma_bar,
            Self::TauBar => t.tau_bar,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::WBar => "w_bar",
            Self::SigmaBar => "sigma_bar",
            Self::TauBar => "tau_bar",
        }
    }
}

#[derive(Debug, Deserialize)]
struct RawFixture {
    table: String,
    row: String,
    col: String,
    kind: String,
    scheme: String,
    p: f64,
    l_over_h: f64,
    r_over_l: String,
    bc: String,
    quantity: TableQuantity,
    expected: f64,
}

/// Geometry, material layout and supports shared by the cells of one solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseKey {
    pub kind: LayupKind,
    pub scheme: Scheme,
    pub p: f64,
    pub l_over_h: f64,
    /// `None` for a straight beam.
    pub r_over_l: Option<f64>,
    pub bc: BoundaryCondition,
}

impl CaseKey {
    fn id(&self) -> String {
        format!(
            "{}|{}|{}|{}|{:?}|{}",
            self.kind, self.scheme, self.p, self.l_over_h, self.r_over_l, self.bc
        )
    }

    /// Solves the case with h = 0.1 m and q = 10 kN/m; the nondimensional
    /// values do not depend on either.
    pub fn solve(&self, ne: usize) -> fgbeam::Result<TableValues> {
        let mat = MaterialPair::default();
        let h = 0.1;
        let layup = Layup::new(self.kind, self.scheme, self.p, h)?;
        let l = self.l_over_h * h;
        let inv_r = self.r_over_l.map_or(0.0, |r| 1.0 / (r * l));
        let rig = compute_rigidities(&mat, &layup)?;
        let mesh = Mesh::new(l, ne, inv_r)?;
        let sol = solve_static(&mesh, &rig, self.bc, &LoadCase::Udl { q: 1.0e4 })?;
        table_values(&sol, &mat, &layup)
    }
}

/// One reference cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub table: String,
    pub row: String,
    pub col: String,
    pub case: CaseKey,
    pub quantity: TableQuantity,
    pub expected: f64,
}

impl Fixture {
    pub fn is_curved_table(&self) -> bool {
        CURVED_TABLES.contains(&self.table.as_str())
    }

    pub fn default_tolerance(&self) -> f64 {
        if self.is_curved_table() {
            CURVED_TOLERANCE
        } else {
            STRAIGHT_TOLERANCE
        }
    }

    pub fn label(&self) -> String {
        format!(
            "{} [{}] [{}] {} {}",
            self.table,
            self.row,
            self.col,
            self.case.bc,
            self.quantity.name()
        )
    }
}

fn parse_fixture(raw: RawFixture, line: usize) -> Result<Fixture> {
    let kind: LayupKind = raw.kind.parse().with_context(|| format!("line {line}: kind"))?;
    let scheme = if raw.scheme == "-" {
        Scheme([0.0, 1.0, 0.0])
    } else {
        raw.scheme.parse().with_context(|| format!("line {line}: scheme"))?
    };
    let r_over_l = if raw.r_over_l == "inf" {
        None
    } else {
        Some(
            raw.r_over_l
                .parse::<f64>()
                .with_context(|| format!("line {line}: r_over_l"))?,
        )
    };
    Ok(Fixture {
        table: raw.table,
        row: raw.row,
        col: raw.col,
        case: CaseKey {
            kind,
            scheme,
            p: raw.p,
            l_over_h: raw.l_over_h,
            r_over_l,
            bc: raw.bc.parse().with_context(|| format!("line {line}: bc"))?,
        },
        quantity: raw.quantity,
        expected: raw.expected,
    })
}

/// Parses fixture rows from CSV text.
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .deserialize::<RawFixture>()
        .enumerate()
        .map(|(i, raw)| parse_fixture(raw.with_context(|| format!("line {}", i + 2))?, i + 2))
        .collect()
}

/// All embedded table cells.
pub fn embedded_fixtures() -> Vec<Fixture> {
    parse_fixtures(TABLES_CSV).expect("embedded fixtures are well formed")
}

/// Cells belonging to the given tables, in fixture order.
pub fn select_tables(fixtures: &[Fixture], tables: &[&str]) -> Vec<Fixture> {
    fixtures
        .iter()
        .filter(|f| tables.contains(&f.table.as_str()))
        .cloned()
        .collect()
}

/// A mesh-convergence row: dimensional deflection in mm for one element count.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct ConvergenceFixture {
    pub table: String,
    pub kind: String,
    pub scheme: String,
    pub bc: String,
    pub p: f64,
    pub ne: usize,
    pub deflection_mm: f64,
}

pub fn embedded_convergence() -> Vec<ConvergenceFixture> {
    csv::Reader::from_reader(CONVERGENCE_CSV.as_bytes())
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .expect("embedded convergence fixtures are well formed")
}

#[derive(Debug, Clone, PartialEq)]
pub struct RowResult {
    pub fixture: Fixture,
    pub computed: f64,
    pub relative_error: f64,
    pub tolerance: f64,
}

impl RowResult {
    pub fn passed(&self) -> bool {
        self.relative_error <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<RowResult>,
}

impl BenchReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(RowResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowResult> {
        self.rows.iter().filter(|r| !r.passed())
    }

    /// Rows sorted by error relative to tolerance, largest first.
    pub fn worst(&self, n: usize) -> Vec<&RowResult> {
        let mut rows: Vec<&RowResult> = self.rows.iter().collect();
        rows.sort_by(|a, b| {
            (b.relative_error / b.tolerance).total_cmp(&(a.relative_error / a.tolerance))
        });
        rows.truncate(n);
        rows
    }

    pub fn to_text(&self, worst: usize) -> String {
        let mut per_table: BTreeMap<(usize, &str), (usize, usize, f64, f64)> = BTreeMap::new();
        for r in &self.rows {
            let t = r.fixture.table.as_str();
            let order = t.trim_start_matches('T').parse().unwrap_or(usize::MAX);
            let e = per_table.entry((order, t)).or_insert((0, 0, 0.0, r.tolerance));
            e.0 += 1;
            e.1 += usize::from(r.passed());
            e.2 = e.2.max(r.relative_error);
            e.3 = e.3.max(r.tolerance);
        }
        let mut out = format!(
            "{:<6} {:>6} {:>6} {:>12} {:>10}  {}\n",
            "table", "cells", "pass", "max_rel_err", "tolerance", "status"
        );
        for ((_, t), (n, pass, max, tol)) in &per_table {
            let _ = writeln!(
                out,
                "{:<6} {:>6} {:>6} {:>12.3e} {:>10.1e}  {}",
                t,
                n,
                pass,
                max,
                tol,
                if pass == n { "PASS" } else { "FAIL" }
            );
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "\n{} of {} cells within tolerance; {} outside",
            self.rows.len() - failed,
            self.rows.len(),
            failed
        );
        if worst > 0 && !self.rows.is_empty() {
            let _ = writeln!(out, "\nworst cells (error / tolerance):");
            let w = self.worst(worst);
            let width = w.iter().map(|r| r.fixture.label().len()).max().unwrap_or(0);
            for r in w {
                let _ = writeln!(
                    out,
                    "  {:<width$}  expected {:>10.4}  computed {:>12.6}  rel_err {:>9.3e}  ratio {:>7.2}  {}",
                    r.fixture.label(),
                    r.fixture.expected,
                    r.computed,
                    r.relative_error,
                    r.relative_error / r.tolerance,
                    if r.passed() { "ok" } else { "FAIL" }
                );
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "table,row,col,bc,quantity,expected,computed,relative_error,tolerance,status\n",
        );
        for r in &self.rows {
            let f = &r.fixture;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                f.table,
                f.row,
                f.col,
                f.case.bc,
                f.quantity.name(),
                f.expected,
                num(r.computed),
                num(r.relative_error),
                r.tolerance,
                if r.passed() { "pass" } else { "fail" }
            );
        }
        out
    }
}

/// Per-table tolerance overrides such as `T12=0.01`.
pub fn parse_overrides(specs: &[String]) -> Result<HashMap<String, f64>> {
    let mut out = HashMap::new();
    for s in specs {
        let (table, tol) = s
            .split_once('=')
            .with_context(|| format!("tolerance override '{s}' is not TABLE=VALUE"))?;
        let tol: f64 = tol
            .trim()
            .parse()
            .with_context(|| format!("tolerance override '{s}': invalid number"))?;
        if !(tol > 0.0 && tol.is_finite()) {
            bail!("tolerance override '{s}': must be positive");
        }
        out.insert(table.trim().to_string(), tol);
    }
    Ok(out)
}

/// Solves every distinct case once (in parallel) and compares each cell.
pub fn benchmark_compare(fixtures: &[Fixture], overrides: &HashMap<String, f64>) -> Result<BenchReport> {
    let mut keys: Vec<CaseKey> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for f in fixtures {
        index.entry(f.case.id()).or_insert_with(|| {
            keys.push(f.case);
            keys.len() - 1
        });
    }
    let values: Vec<TableValues> = keys
        .par_iter()
        .map(|k| k.solve(TABLE_NE).with_context(|| format!("solving {}", k.id())))
        .collect::<Result<_>>()?;
    let rows = fixtures
        .iter()
        .map(|f| {
            let computed = f.quantity.pick(&values[index[&f.case.id()]]);
            RowResult {
                fixture: f.clone(),
                computed,
                relative_error: (computed - f.expected).abs() / f.expected.abs(),
                tolerance: overrides
                    .get(&f.table)
                    .copied()
                    .unwrap_or_else(|| f.default_tolerance()),
            }
        })
        .collect();
    Ok(BenchReport { rows })
}
