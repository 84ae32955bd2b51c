//! Power-law gradation of a metal/ceramic pair through the beam thickness.
//!
//! Three configurations are supported:
//!
//! - [`LayupKind::TypeA`]: a single FG layer, metal at the bottom surface and
//!   ceramic at the top.
//! - [`LayupKind::TypeB`]: FG face sheets around a fully ceramic core. Both
//!   faces are metal at the outer surface and ceramic at the core interface.
//! - [`LayupKind::TypeC`]: metal bottom face, ceramic top face, and a core
//!   graded from metal (bottom) to ceramic (top).
//!
//! Interface coordinates `h1 <= h2 <= h3 <= h4` bound the three layers.
//! Layers are half-open `[h_n, h_{n+1})`, so a point exactly on an interior
//! interface takes the law of the layer that starts there. The topmost
//! non-empty layer is closed at `+h/2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Elastic constants of the two constituent phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialPair {
    /// Young's modulus of the metal phase (Pa).
    pub e_metal: f64,
    /// Young's modulus of the ceramic phase (Pa).
    pub e_ceramic: f64,
    /// Poisson's ratio shared by both phases.
    pub nu: f64,
}

impl MaterialPair {
    pub fn new(e_metal: f64, e_ceramic: f64, nu: f64) -> Result<Self> {
        if !(e_metal > 0.0 && e_metal.is_finite()) {
            return Err(domain("E_m", e_metal, "E_m > 0"));
        }
        if !(e_ceramic > 0.0 && e_ceramic.is_finite()) {
            return Err(domain("E_c", e_ceramic, "E_c > 0"));
        }
        if !(0.0..0.5).contains(&nu) {
            return Err(domain("nu", nu, "0 <= nu < 0.5"));
        }
        Ok(Self {
            e_metal,
            e_ceramic,
            nu,
        })
    }

    /// Multiplies both moduli by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.e_metal * factor, self.e_ceramic * factor, self.nu)
    }

    /// Rule-of-mixtures modulus for a ceramic volume fraction.
    pub fn modulus_for_fraction(&self, fraction: f64) -> f64 {
        self.e_metal + (self.e_ceramic - self.e_metal) * fraction
    }
}

impl Default for MaterialPair {
    /// Al / Al2O3: E_m = 70 GPa, E_c = 380 GPa, nu = 0.3.
    fn default() -> Self {
        Self {
            e_metal: 70.0e9,
            e_ceramic: 380.0e9,
            nu: 0.3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LayupKind {
    /// Single FG layer.
    TypeA,
    /// FG faces, homogeneous ceramic core.
    TypeB,
    /// Homogeneous faces, FG core.
    TypeC,
}

impl fmt::Display for LayupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LayupKind::TypeA => "A",
            LayupKind::TypeB => "B",
            LayupKind::TypeC => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for LayupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" | "TypeA" => Ok(LayupKind::TypeA),
            "B" | "b" | "TypeB" => Ok(LayupKind::TypeB),
            "C" | "c" | "TypeC" => Ok(LayupKind::TypeC),
            other => Err(Error::Config(format!("unknown layup kind `{other}`"))),
        }
    }
}

/// Bottom : core : top thickness ratios, e.g. `1-8-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scheme(pub [f64; 3]);

impl Scheme {
    pub fn new(bottom: f64, core: f64, top: f64) -> Result<Self> {
        for (name, v) in [("scheme.bottom", bottom), ("scheme.core", core), ("scheme.top", top)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(domain(name, v, "nonnegative thickness ratio"));
            }
        }
        let total = bottom + core + top;
        if total <= 0.0 {
            return Err(domain("scheme", total, "ratios must not all be zero"));
        }
        Ok(Self([bottom, core, top]))
    }

    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0[0] == self.0[2]
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{a}-{b}-{c}")
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split('-').collect();
        if parts.len() != 3 {
            return Err(Error::Config(format!(
                "scheme `{s}` must have the form a-b-c"
            )));
        }
        let mut v = [0.0; 3];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = part
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("scheme `{s}`: `{part}` is not a number")))?;
        }
        Scheme::new(v[0], v[1], v[2])
    }
}

/// How the ceramic fraction varies inside one layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gradation {
    /// Constant ceramic fraction.
    Uniform(f64),
    /// `((z - bottom) / thickness)^p`: metal at the bottom, ceramic at the top.
    Rising,
    /// `((top - z) / thickness)^p`: ceramic at the bottom, metal at the top.
    Falling,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Layer {
    pub bottom: f64,
    pub top: f64,
    pub gradation: Gradation,
}

impl Layer {
    pub fn thickness(&self) -> f64 {
        self.top - self.bottom
    }

    pub fn is_empty(&self) -> bool {
        self.top <= self.bottom
    }

    /// Ceramic fraction at `z` using this layer's law, without range checks.
    pub fn fraction_at(&self, z: f64, p: f64) -> f64 {
        let t = self.thickness();
        match self.gradation {
            Gradation::Uniform(v) => v,
            Gradation::Rising => ((z - self.bottom) / t).clamp(0.0, 1.0).powf(p),
            Gradation::Falling => ((self.top - z) / t).clamp(0.0, 1.0).powf(p),
        }
    }

    /// The coordinate where a power-law base vanishes, if any.
    pub fn power_law_origin(&self) -> Option<f64> {
        match self.gradation {
            Gradation::Uniform(_) => None,
            Gradation::Rising => Some(self.bottom),
            Gradation::Falling => Some(self.top),
        }
    }
}

/// Through-thickness arrangement of a beam section.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Layup {
    pub kind: LayupKind,
    pub scheme: Scheme,
    /// Power-law index.
    pub p: f64,
    /// Total thickness (m).
    pub h: f64,
    interfaces: [f64; 4],
}

impl Layup {
    /// Builds a layup; `scheme` is ignored for [`LayupKind::TypeA`].
    pub fn new(kind: LayupKind, scheme: Scheme, p: f64, h: f64) -> Result<Self> {
        if !(p >= 0.0 && p.is_finite()) {
            return Err(domain("p", p, "p >= 0"));
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(domain("h", h, "h > 0"));
        }
        let interfaces = match kind {
            LayupKind::TypeA => [-0.5 * h, -0.5 * h, 0.5 * h, 0.5 * h],
            _ => {
                let total = scheme.total();
                let [a, b, _] = scheme.0;
                let h1 = -0.5 * h;
                let h2 = h1 + h * a / total;
                let h3 = h2 + h * b / total;
                [h1, h2.min(0.5 * h), h3.min(0.5 * h), 0.5 * h]
            }
        };
        Ok(Self {
            kind,
            scheme,
            p,
            h,
            interfaces,
        })
    }

    /// A single-layer FG beam.
    pub fn type_a(p: f64, h: f64) -> Result<Self> {
        Self::new(LayupKind::TypeA, Scheme([0.0, 1.0, 0.0]), p, h)
    }

    /// Interface coordinates `[h1, h2, h3, h4]`.
    pub fn interfaces(&self) -> [f64; 4] {
        self.interfaces
    }

    /// Interior interfaces between non-empty layers.
    pub fn interior_interfaces(&self) -> Vec<f64> {
        let [h1, h2, h3, h4] = self.interfaces;
        let mut out = Vec::new();
        for z in [h2, h3] {
            if z > h1 && z < h4 && !out.contains(&z) {
                out.push(z);
            }
        }
        out
    }

    pub fn layers(&self) -> [Layer; 3] {
        let [h1, h2, h3, h4] = self.interfaces;
        let (g1, g2, g3) = match self.kind {
            LayupKind::TypeA => (Gradation::Uniform(0.0), Gradation::Rising, Gradation::Uniform(1.0)),
            LayupKind::TypeB => (Gradation::Rising, Gradation::Uniform(1.0), Gradation::Falling),
            LayupKind::TypeC => (Gradation::Uniform(0.0), Gradation::Rising, Gradation::Uniform(1.0)),
        };
        [
            Layer { bottom: h1, top: h2, gradation: g1 },
            Layer { bottom: h2, top: h3, gradation: g2 },
            Layer { bottom: h3, top: h4, gradation: g3 },
        ]
    }

    fn check_z(&self, z: f64) -> Result<f64> {
        let half = 0.5 * self.h;
        let slack = 1e-12 * self.h;
        if !z.is_finite() || z < -half - slack || z > half + slack {
            return Err(domain("z", z, "-h/2 <= z <= h/2"));
        }
        Ok(z.clamp(-half, half))
    }

    /// Index of the layer that owns `z` under the half-open interface rule.
    pub fn layer_index(&self, z: f64) -> Result<usize> {
        let z = self.check_z(z)?;
        let layers = self.layers();
        if let Some(i) = layers
            .iter()
            .position(|l| !l.is_empty() && l.bottom <= z && z < l.top)
        {
            return Ok(i);
        }
        // z == +h/2: the topmost non-empty layer is closed above.
        Ok(layers
            .iter()
            .rposition(|l| !l.is_empty())
            .expect("a layup always has a non-empty layer"))
    }

    /// Ceramic volume fraction V(z).
    pub fn volume_fraction(&self, z: f64) -> Result<f64> {
        let z = self.check_z(z)?;
        let n = self.layer_index(z)?;
        Ok(self.layers()[n].fraction_at(z, self.p))
    }

    /// V(z) evaluated with the law of a specific layer; used to take one-sided
    /// limits at interfaces.
    pub fn volume_fraction_in_layer(&self, layer: usize, z: f64) -> Result<f64> {
        let z = self.check_z(z)?;
        let l = self
            .layers()
            .get(layer)
            .copied()
            .ok_or_else(|| Error::Config(format!("layer index {layer} out of range")))?;
        Ok(l.fraction_at(z, self.p))
    }
}

/// Ceramic volume fraction of `layup` at thickness coordinate `z`.
pub fn volume_fraction(layup: &Layup, z: f64) -> Result<f64> {
    layup.volume_fraction(z)
}

/// Effective Young's modulus E(z) by the rule of mixtures.
pub fn effective_modulus(mat: &MaterialPair, layup: &Layup, z: f64) -> Result<f64> {
    Ok(mat.modulus_for_fraction(layup.volume_fraction(z)?))
}

/// Plane-stress beam stiffness coefficients `(C11, C55)`.
pub fn stiffness_coeffs(e: f64, nu: f64) -> Result<(f64, f64)> {
    if !(e > 0.0 && e.is_finite()) {
        return Err(domain("E", e, "E > 0"));
    }
    if !(0.0..0.5).contains(&nu) {
        return Err(domain("nu", nu, "0 <= nu < 0.5"));
    }
    Ok((e, shear_modulus(e, nu)))
}

#[inline]
pub(crate) fn shear_modulus(e: f64, nu: f64) -> f64 {
    e / (2.0 * (1.0 + nu))
}
