//! Sectioned `key = value` case files.
//!
//! ```text
//! [material]
//! E_m = 70e9
//! E_c = 380e9
//! nu = 0.3
//!
//! [layup]
//! kind = B
//! scheme = 2-2-1
//! p = 1
//!
//! [geometry]
//! L = 0.5
//! h = 0.1
//! R_over_L = inf
//!
//! [bc]
//! type = SS
//!
//! [load]
//! type = udl
//! magnitude = 1e4
//!
//! [mesh]
//! ne = 16
//!
//! [outputs]
//! w_bar = true
//! sigma_bar = true
//! tau_bar = true
//! profile_x = mid
//! profile_samples = 201
//! ```
//!
//! `#` and `;` start comments. `[material]`, `[mesh]` and `[outputs]` may be
//! omitted; `scheme` is only required for kinds B and C.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use fgbeam::{BoundaryCondition, Layup, LayupKind, LoadCase, MaterialPair, Mesh, Scheme};
use thiserror::Error;

pub const DEFAULT_NE: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{key}{}: {message}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
pub struct ConfigError {
    /// Dotted key such as `geometry.h`.
    pub key: String,
    pub line: Option<usize>,
    pub message: String,
}

impl ConfigError {
    fn new(key: impl Into<String>, line: Option<usize>, message: impl Into<String>) -> Self {
        Self {
            key: key.into(),
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoadKind {
    Udl,
    PointEnd,
    PointMid,
}

impl FromStr for LoadKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "udl" => Ok(Self::Udl),
            "point_end" => Ok(Self::PointEnd),
            "point_mid" => Ok(Self::PointMid),
            _ => Err(format!("expected udl, point_end or point_mid, got '{s}'")),
        }
    }
}

impl fmt::Display for LoadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Udl => "udl",
            Self::PointEnd => "point_end",
            Self::PointMid => "point_mid",
        })
    }
}

/// Axial station of a thickness profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Station {
    Start,
    Mid,
    End,
    /// Arc length from the left support (m).
    At(f64),
}

impl Station {
    pub fn resolve(&self, length: f64) -> f64 {
        match *self {
            Self::Start => 0.0,
            Self::Mid => 0.5 * length,
            Self::End => length,
            Self::At(x) => x,
        }
    }
}

impl FromStr for Station {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "start" => Ok(Self::Start),
            "mid" => Ok(Self::Mid),
            "end" => Ok(Self::End),
            other => other
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite() && *x >= 0.0)
                .map(Self::At)
                .ok_or_else(|| format!("expected start, mid, end or a length >= 0, got '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileRequest {
    pub x: Station,
    pub n_samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Outputs {
    pub w_bar: bool,
    pub sigma_bar: bool,
    pub tau_bar: bool,
    pub profile: Option<ProfileRequest>,
}

impl Default for Outputs {
    fn default() -> Self {
        Self {
            w_bar: true,
            sigma_bar: true,
            tau_bar: true,
            profile: None,
        }
    }
}

/// A fully validated analysis case.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseConfig {
    pub material: MaterialPair,
    pub kind: LayupKind,
    pub scheme: Scheme,
    pub p: f64,
    /// Arc length (m).
    pub length: f64,
    /// Thickness (m).
    pub h: f64,
    /// Radius-to-span ratio; `None` for a straight beam.
    pub r_over_l: Option<f64>,
    pub bc: BoundaryCondition,
    pub load_kind: LoadKind,
    pub magnitude: f64,
    pub ne: usize,
    pub outputs: Outputs,
}

impl CaseConfig {
    pub fn layup(&self) -> fgbeam::Result<Layup> {
        Layup::new(self.kind, self.scheme, self.p, self.h)
    }

    pub fn inv_radius(&self) -> f64 {
        self.r_over_l.map_or(0.0, |r| 1.0 / (r * self.length))
    }

    pub fn mesh(&self) -> fgbeam::Result<Mesh> {
        Mesh::new(self.length, self.ne, self.inv_radius())
    }

    pub fn load(&self) -> LoadCase {
        match self.load_kind {
            LoadKind::Udl => LoadCase::Udl { q: self.magnitude },
            LoadKind::PointEnd => LoadCase::PointAtEnd {
                force: self.magnitude,
            },
            LoadKind::PointMid => LoadCase::PointAtMid {
                force: self.magnitude,
            },
        }
    }

    pub fn l_over_h(&self) -> f64 {
        self.length / self.h
    }

    /// Re-checks the invariants enforced by [`parse_config`]; used after a
    /// field has been modified programmatically.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let positive = |key: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(ConfigError::new(key, None, format!("must be a positive number, got {v}")))
            }
        };
        positive("geometry.L", self.length)?;
        positive("geometry.h", self.h)?;
        if let Some(r) = self.r_over_l {
            positive("geometry.R_over_L", r)?;
        }
        if !(self.p >= 0.0 && self.p.is_finite()) {
            return Err(ConfigError::new("layup.p", None, format!("must be >= 0, got {}", self.p)));
        }
        if self.ne == 0 {
            return Err(ConfigError::new("mesh.ne", None, "must be at least 1"));
        }
        if self.load_kind == LoadKind::PointMid && !self.ne.is_multiple_of(2) {
            return Err(ConfigError::new(
                "mesh.ne",
                None,
                format!("a point_mid load needs an even element count, got {}", self.ne),
            ));
        }
        if let Some(profile) = self.outputs.profile {
            if profile.n_samples < 2 {
                return Err(ConfigError::new("outputs.profile_samples", None, "must be at least 2"));
            }
            let x = profile.x.resolve(self.length);
            if x > self.length * (1.0 + 1e-12) {
                return Err(ConfigError::new(
                    "outputs.profile_x",
                    None,
                    format!("{x} lies beyond the beam length {}", self.length),
                ));
            }
        }
        Ok(())
    }
}

struct Entry {
    value: String,
    line: usize,
}

type Sections = BTreeMap<String, BTreeMap<String, Entry>>;

const KNOWN: &[(&str, &[&str])] = &[
    ("material", &["E_m", "E_c", "nu"]),
    ("layup", &["kind", "scheme", "p"]),
    ("geometry", &["L", "h", "R_over_L"]),
    ("bc", &["type"]),
    ("load", &["type", "magnitude"]),
    ("mesh", &["ne"]),
    (
        "outputs",
        &["w_bar", "sigma_bar", "tau_bar", "profile_x", "profile_samples"],
    ),
];

fn tokenize(text: &str) -> Result<Sections, ConfigError> {
    let mut sections = Sections::new();
    let mut current: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split(['#', ';']).next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| ConfigError::new(content, Some(line), "unterminated section header"))?
                .trim();
            if !KNOWN.iter().any(|(s, _)| *s == name) {
                return Err(ConfigError::new(name, Some(line), "unknown section"));
            }
            if sections.contains_key(name) {
                return Err(ConfigError::new(name, Some(line), "section appears twice"));
            }
            sections.insert(name.to_string(), BTreeMap::new());
            current = Some(name.to_string());
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| ConfigError::new(content, Some(line), "expected 'key = value'"))?;
        let (key, value) = (key.trim(), value.trim());
        let section = current
            .as_deref()
            .ok_or_else(|| ConfigError::new(key, Some(line), "key appears before any section"))?;
        let dotted = format!("{section}.{key}");
        let allowed = KNOWN.iter().find(|(s, _)| *s == section).map(|(_, k)| *k).unwrap_or(&[]);
        if !allowed.contains(&key) {
            return Err(ConfigError::new(dotted, Some(line), "unknown key"));
        }
        if value.is_empty() {
            return Err(ConfigError::new(dotted, Some(line), "missing value"));
        }
        let entries = sections.get_mut(section).expect("section was inserted");
        if entries.contains_key(key) {
            return Err(ConfigError::new(dotted, Some(line), "key appears twice"));
        }
        entries.insert(
            key.to_string(),
            Entry {
                value: value.to_string(),
                line,
            },
        );
    }
    Ok(sections)
}

struct Reader<'a> {
    sections: &'a Sections,
}

impl Reader<'_> {
    fn entry(&self, section: &str, key: &str) -> Option<&Entry> {
        self.sections.get(section).and_then(|s| s.get(key))
    }

    fn get<T, E>(&self, section: &str, key: &str, parse: impl Fn(&str) -> Result<T, E>) -> Result<Option<T>, ConfigError>
    where
        E: fmt::Display,
    {
        match self.entry(section, key) {
            None => Ok(None),
            Some(e) => parse(&e.value)
                .map(Some)
                .map_err(|err| ConfigError::new(format!("{section}.{key}"), Some(e.line), err.to_string())),
        }
    }

    fn require<T, E>(&self, section: &str, key: &str, parse: impl Fn(&str) -> Result<T, E>) -> Result<T, ConfigError>
    where
        E: fmt::Display,
    {
        self.get(section, key, parse)?
            .ok_or_else(|| ConfigError::new(format!("{section}.{key}"), None, "required key is missing"))
    }

    fn line(&self, section: &str, key: &str) -> Option<usize> {
        self.entry(section, key).map(|e| e.line)
    }
}

fn number(s: &str) -> Result<f64, String> {
    s.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("expected a finite number, got '{s}'"))
}

fn positive(s: &str) -> Result<f64, String> {
    let v = number(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be > 0, got {v}"))
    }
}

fn radius_ratio(s: &str) -> Result<Option<f64>, String> {
    if s.eq_ignore_ascii_case("inf") {
        Ok(None)
    } else {
        positive(s).map(Some)
    }
}

fn boolean(s: &str) -> Result<bool, String> {
    match s.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(format!("expected true or false, got '{s}'")),
    }
}

fn count(s: &str) -> Result<usize, String> {
    s.parse::<usize>()
        .map_err(|_| format!("expected a non-negative integer, got '{s}'"))
}

/// Parses and validates a case file.
pub fn parse_config(text: &str) -> Result<CaseConfig, ConfigError> {
    let sections = tokenize(text)?;
    let r = Reader {
        sections: &sections,
    };
    let defaults = MaterialPair::default();
    let e_m = r.get("material", "E_m", positive)?.unwrap_or(defaults.e_metal);
    let e_c = r.get("material", "E_c", positive)?.unwrap_or(defaults.e_ceramic);
    let nu = r.get("material", "nu", number)?.unwrap_or(defaults.nu);
    let material = MaterialPair::new(e_m, e_c, nu).map_err(|e| {
        ConfigError::new("material.nu", r.line("material", "nu"), e.to_string())
    })?;

    let kind: LayupKind = r.require("layup", "kind", |s| s.parse::<LayupKind>())?;
    let scheme = match kind {
        LayupKind::TypeA => r
            .get("layup", "scheme", |s| s.parse::<Scheme>())?
            .unwrap_or(Scheme([0.0, 1.0, 0.0])),
        _ => r.require("layup", "scheme", |s| s.parse::<Scheme>())?,
    };
    let p = r.require("layup", "p", number)?;
    if p < 0.0 {
        return Err(ConfigError::new("layup.p", r.line("layup", "p"), format!("must be >= 0, got {p}")));
    }

    let length = r.require("geometry", "L", positive)?;
    let h = r.require("geometry", "h", positive)?;
    let r_over_l = r.get("geometry", "R_over_L", radius_ratio)?.flatten();

    let bc = r.require("bc", "type", |s| s.parse::<BoundaryCondition>())?;
    let load_kind = r.require("load", "type", |s| s.parse::<LoadKind>())?;
    let magnitude = r.require("load", "magnitude", number)?;

    let ne = r.get("mesh", "ne", count)?.unwrap_or(DEFAULT_NE);
    if ne == 0 {
        return Err(ConfigError::new("mesh.ne", r.line("mesh", "ne"), "must be at least 1"));
    }

    let mut outputs = Outputs::default();
    if let Some(v) = r.get("outputs", "w_bar", boolean)? {
        outputs.w_bar = v;
    }
    if let Some(v) = r.get("outputs", "sigma_bar", boolean)? {
        outputs.sigma_bar = v;
    }
    if let Some(v) = r.get("outputs", "tau_bar", boolean)? {
        outputs.tau_bar = v;
    }
    let profile_x = r.get("outputs", "profile_x", |s| s.parse::<Station>())?;
    let profile_samples = r.get("outputs", "profile_samples", count)?;
    if profile_x.is_some() || profile_samples.is_some() {
        outputs.profile = Some(ProfileRequest {
            x: profile_x.unwrap_or(Station::Mid),
            n_samples: profile_samples.unwrap_or(201),
        });
    }

    let cfg = CaseConfig {
        material,
        kind,
        scheme,
        p,
        length,
        h,
        r_over_l,
        bc,
        load_kind,
        magnitude,
        ne,
        outputs,
    };
    cfg.validate().map_err(|mut e| {
        if e.line.is_none() {
            if let Some((s, k)) = e.key.split_once('.') {
                e.line = r.line(s, k);
            }
        }
        e
    })?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "\
[layup]
kind = A
p = 0

[geometry]
L = 0.5
h = 0.1

[bc]
type = SS

[load]
type = udl
magnitude = 1e4
";

    #[test]
    fn minimal_config_uses_defaults() {
        let c = parse_config(MINIMAL).unwrap();
        assert_eq!(c.ne, 16);
        assert_eq!(c.material, MaterialPair::default());
        assert_eq!(c.r_over_l, None);
        assert_eq!(c.inv_radius(), 0.0);
        assert_eq!(c.l_over_h(), 5.0);
        assert_eq!(c.outputs, Outputs::default());
        assert_eq!(c.load(), LoadCase::Udl { q: 1e4 });
    }

    #[test]
    fn infinite_radius_is_straight() {
        let text = MINIMAL.replace("h = 0.1", "h = 0.1\nR_over_L = inf");
        assert_eq!(parse_config(&text).unwrap().inv_radius(), 0.0);
        let text = MINIMAL.replace("h = 0.1", "h = 0.1\nR_over_L = 10");
        let c = parse_config(&text).unwrap();
        assert!((c.inv_radius() - 1.0 / 5.0).abs() < 1e-15);
    }

    #[test]
    fn negative_thickness_names_the_key() {
        let err = parse_config(&MINIMAL.replace("h = 0.1", "h = -0.1")).unwrap_err();
        assert_eq!(err.key, "geometry.h");
        assert_eq!(err.line, Some(7));
        assert!(err.to_string().starts_with("geometry.h (line 7)"));
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            (MINIMAL.replace("kind = A", "kind = D"), "layup.kind"),
            (MINIMAL.replace("p = 0", "p = -1"), "layup.p"),
            (MINIMAL.replace("type = SS", "type = XX"), "bc.type"),
            (MINIMAL.replace("[bc]", "[bcs]"), "bcs"),
            (MINIMAL.replace("L = 0.5", "Length = 0.5"), "geometry.Length"),
            (MINIMAL.replace("L = 0.5", "L = 0.5\nL = 0.6"), "geometry.L"),
            (MINIMAL.replace("magnitude = 1e4\n", ""), "load.magnitude"),
            (MINIMAL.replace("kind = A", "kind = B"), "layup.scheme"),
            (format!("{MINIMAL}[mesh]\nne = 0\n"), "mesh.ne"),
            (
                MINIMAL.replace("type = udl", "type = point_mid") + "[mesh]\nne = 7\n",
                "mesh.ne",
            ),
        ];
        for (text, key) in cases {
            let err = parse_config(&text).unwrap_err();
            assert_eq!(err.key, key, "{err}");
        }
    }

    #[test]
    fn full_config() {
        let text = "\
# a curved sandwich beam
[material]
E_m = 70e9 ; aluminium
E_c = 380e9
nu = 0.3
[layup]
kind = C
scheme = 1-8-1
p = 2
[geometry]
L = 1.0
h = 0.2
R_over_L = 5
[bc]
type = cf
[load]
type = point_end
magnitude = -500
[mesh]
ne = 8
[outputs]
tau_bar = false
profile_x = 0.25
profile_samples = 11
";
        let c = parse_config(text).unwrap();
        assert_eq!(c.kind, LayupKind::TypeC);
        assert_eq!(c.scheme, Scheme([1.0, 8.0, 1.0]));
        assert_eq!(c.bc, BoundaryCondition::CF);
        assert_eq!(c.load(), LoadCase::PointAtEnd { force: -500.0 });
        assert_eq!(c.ne, 8);
        assert!(!c.outputs.tau_bar && c.outputs.w_bar);
        assert_eq!(
            c.outputs.profile,
            Some(ProfileRequest {
                x: Station::At(0.25),
                n_samples: 11
            })
        );
    }

    #[test]
    fn stations() {
        assert_eq!("mid".parse::<Station>().unwrap().resolve(2.0), 1.0);
        assert_eq!("END".parse::<Station>().unwrap().resolve(2.0), 2.0);
        assert_eq!("0.3".parse::<Station>().unwrap().resolve(2.0), 0.3);
        assert!("-1".parse::<Station>().is_err());
    }
}
