//! Single cases, mesh convergence, parameter sweeps and thickness profiles.

use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use fgbeam::postproc::{deflection_station, nondimensionalize};
use fgbeam::{
    compute_rigidities, displacement_at, solve_static, stress_at, thickness_profile, LayupKind,
    Quantity, Scheme, Solution,
};
use rayon::prelude::*;

use crate::config::{CaseConfig, LoadKind, Station};

/// Formats a number for CSV output (ten significant digits).
pub fn num(v: f64) -> String {
    // adding zero turns -0.0 into 0.0
    format!("{:.9e}", v + 0.0)
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

/// Dimensional and (for uniform loads) nondimensional results of one case.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    /// Deflection at its reporting station (m).
    pub w: f64,
    /// σx at (L/2, h/2) (Pa).
    pub sigma_x: f64,
    /// τxz at (0, 0) (Pa).
    pub tau_xz: f64,
    pub w_bar: Option<f64>,
    pub sigma_bar: Option<f64>,
    pub tau_bar: Option<f64>,
    /// Profile CSV when the config requests one.
    pub profile: Option<String>,
}

impl CaseReport {
    pub fn to_csv(&self, cfg: &CaseConfig) -> String {
        let mut out = String::from("quantity,value\n");
        let mut row = |name: &str, v: String| {
            let _ = writeln!(out, "{name},{v}");
        };
        row("w", num(self.w));
        row("sigma_x", num(self.sigma_x));
        row("tau_xz", num(self.tau_xz));
        if cfg.outputs.w_bar {
            row("w_bar", opt(self.w_bar));
        }
        if cfg.outputs.sigma_bar {
            row("sigma_bar", opt(self.sigma_bar));
        }
        if cfg.outputs.tau_bar {
            row("tau_bar", opt(self.tau_bar));
        }
        out
    }
}

fn solve(cfg: &CaseConfig) -> Result<(Solution, fgbeam::Layup)> {
    let layup = cfg.layup().context("building the layup")?;
    let rig = compute_rigidities(&cfg.material, &layup).context("computing section rigidities")?;
    let mesh = cfg.mesh().context("building the mesh")?;
    let sol = solve_static(&mesh, &rig, cfg.bc, &cfg.load())
        .with_context(|| format!("solving {} case with ne = {}", cfg.bc, cfg.ne))?;
    Ok((sol, layup))
}

fn bar(cfg: &CaseConfig, v: f64, q: Quantity) -> Option<f64> {
    (cfg.load_kind == LoadKind::Udl && cfg.magnitude != 0.0)
        .then(|| nondimensionalize(v, q, &cfg.material, cfg.length, cfg.h, &cfg.load()).ok())
        .flatten()
}

pub fn run_case(cfg: &CaseConfig) -> Result<CaseReport> {
    let (sol, layup) = solve(cfg)?;
    let w = displacement_at(&sol, deflection_station(&sol))?.w0;
    let sigma_x = stress_at(&sol, &cfg.material, &layup, 0.5 * cfg.length, 0.5 * cfg.h)?.sigma_x;
    let tau_xz = stress_at(&sol, &cfg.material, &layup, 0.0, 0.0)?.tau_xz;
    let profile = match cfg.outputs.profile {
        Some(req) => Some(profile_from_solution(cfg, &sol, &layup, req.x, req.n_samples)?),
        None => None,
    };
    Ok(CaseReport {
        w,
        sigma_x,
        tau_xz,
        w_bar: bar(cfg, w, Quantity::Deflection),
        sigma_bar: bar(cfg, sigma_x, Quantity::Sigma),
        tau_bar: bar(cfg, tau_xz, Quantity::Tau),
        profile,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub ne: usize,
    pub w: f64,
    pub w_bar: Option<f64>,
    /// Relative change from the previous row.
    pub change: Option<f64>,
    /// The change reverses the direction of the preceding change.
    pub non_monotone: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    pub fn is_monotone(&self) -> bool {
        !self.rows.iter().any(|r| r.non_monotone)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("ne,w,w_bar,relative_change,flag\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.ne,
                num(r.w),
                opt(r.w_bar),
                opt(r.change),
                if r.non_monotone { "non-monotone" } else { "" }
            );
        }
        out
    }
}

/// Deflection at the reporting station for each mesh size.
pub fn convergence_study(cfg: &CaseConfig, ne_list: &[usize]) -> Result<ConvergenceTable> {
    if ne_list.is_empty() {
        bail!("the element-count list is empty");
    }
    let cases: Vec<CaseConfig> = ne_list
        .iter()
        .map(|&ne| {
            let mut c = cfg.clone();
            c.ne = ne;
            c.outputs.profile = None;
            c.validate().map(|_| c)
        })
        .collect::<std::result::Result<_, _>>()?;
    let results: Vec<CaseReport> = cases.par_iter().map(run_case).collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(results.len());
    let mut direction = 0.0f64;
    for (i, (r, &ne)) in results.iter().zip(ne_list).enumerate() {
        let (change, non_monotone) = if i == 0 {
            (None, false)
        } else {
            let prev = results[i - 1].w;
            let d = r.w.abs() - prev.abs();
            let tiny = 1e-9 * prev.abs();
            let sign = if d.abs() <= tiny { 0.0 } else { d.signum() };
            let flip = sign != 0.0 && direction != 0.0 && sign != direction;
            if sign != 0.0 {
                direction = sign;
            }
            (Some((r.w - prev) / prev.abs().max(f64::MIN_POSITIVE)), flip)
        };
        rows.push(ConvergenceRow {
            ne,
            w: r.w,
            w_bar: r.w_bar,
            change,
            non_monotone,
        });
    }
    Ok(ConvergenceTable { rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    P,
    ROverL,
    Scheme,
    LOverH,
}

impl FromStr for SweepParam {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "p" => Ok(Self::P),
            "R_over_L" | "r_over_l" => Ok(Self::ROverL),
            "scheme" => Ok(Self::Scheme),
            "L_over_h" | "l_over_h" => Ok(Self::LOverH),
            _ => Err(format!("unknown sweep parameter '{s}' (expected p, R_over_L, scheme or L_over_h)")),
        }
    }
}

impl SweepParam {
    pub fn name(&self) -> &'static str {
        match self {
            Self::P => "p",
            Self::ROverL => "R_over_L",
            Self::Scheme => "scheme",
            Self::LOverH => "L_over_h",
        }
    }

    fn apply(&self, base: &CaseConfig, value: &str) -> Result<CaseConfig> {
        let mut c = base.clone();
        c.outputs.profile = None;
        let number = || -> Result<f64> {
            value
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .with_context(|| format!("{}: '{value}' is not a number", self.name()))
        };
        match self {
            Self::P => c.p = number()?,
            Self::ROverL => {
                c.r_over_l = if value.eq_ignore_ascii_case("inf") {
                    None
                } else {
                    Some(number()?)
                }
            }
            Self::Scheme => {
                if c.kind == LayupKind::TypeA {
                    bail!("a scheme sweep needs a sandwich layup (kind B or C)");
                }
                c.scheme = value
                    .parse::<Scheme>()
                    .with_context(|| format!("scheme: invalid value '{value}'"))?;
            }
            Self::LOverH => c.length = number()? * c.h,
        }
        c.validate()
            .with_context(|| format!("{} = {value} is not a valid value", self.name()))?;
        c.layup()
            .with_context(|| format!("{} = {value} is not a valid value", self.name()))?;
        Ok(c)
    }
}

/// Solves the base case once per value; rows keep the order of `values`.
pub fn sweep(cfg: &CaseConfig, param: SweepParam, values: &[String]) -> Result<String> {
    let cases: Vec<CaseConfig> = values
        .iter()
        .map(|v| param.apply(cfg, v))
        .collect::<Result<_>>()?;
    let reports: Vec<CaseReport> = cases.par_iter().map(run_case).collect::<Result<_>>()?;
    let mut out = format!("{},w,w_bar,sigma_bar,tau_bar\n", param.name());
    for (v, r) in values.iter().zip(reports) {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            v,
            num(r.w),
            opt(r.w_bar),
            opt(r.sigma_bar),
            opt(r.tau_bar)
        );
    }
    Ok(out)
}

fn profile_from_solution(
    cfg: &CaseConfig,
    sol: &Solution,
    layup: &fgbeam::Layup,
    x: Station,
    n_samples: usize,
) -> Result<String> {
    if cfg.load_kind != LoadKind::Udl {
        bail!("nondimensional profiles are defined for uniform loads only (load.type = udl)");
    }
    let x = x.resolve(cfg.length);
    let samples = thickness_profile(sol, &cfg.material, layup, x, n_samples)?;
    let mut out = String::from("z_over_h,sigma_bar,tau_bar,side\n");
    let scale = cfg.h / (cfg.magnitude * cfg.length);
    for s in samples {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            num(s.stress.z / cfg.h),
            num(scale * s.stress.sigma_x),
            num(scale * s.stress.tau_xz),
            s.side
        );
    }
    Ok(out)
}

/// Through-thickness nondimensional stresses at station `x`.
pub fn profile_csv(cfg: &CaseConfig, x: Station, n_samples: usize) -> Result<String> {
    if n_samples < 2 {
        bail!("a profile needs at least 2 samples, got {n_samples}");
    }
    let (sol, layup) = solve(cfg)?;
    profile_from_solution(cfg, &sol, &layup, x, n_samples)
}
