//! Recovery of displacements, strains, stresses and resultants from a
//! solution, plus the nondimensional table quantities.

use std::fmt;

use crate::element::{hermite_shape, lagrange_shape, strain_displacement, GeneralizedStrains};
use crate::error::{domain, Error, Result};
use crate::material::{Layup, MaterialPair};
use crate::section::{g_shear, SectionRigidities};
use crate::solver::{BoundaryCondition, LoadCase, Solution};

/// Relative distance (in element lengths) within which `x` counts as a node.
const NODE_SNAP: f64 = 1e-10;

/// Generalized displacements at a point on the beam axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Displacement {
    pub u0: f64,
    pub w0: f64,
    pub w0_x: f64,
    pub phi_x: f64,
}

/// Stresses at a point `(x, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressSample {
    pub x: f64,
    pub z: f64,
    pub sigma_x: f64,
    pub tau_xz: f64,
}

/// Axial force, bending moment, higher-order moment and shear force.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressResultants {
    pub nx: f64,
    pub mx: f64,
    pub sx: f64,
    pub qxz: f64,
}

/// Which side of a material interface a profile sample was evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Interior,
    Below,
    Above,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Interior => "interior",
            Self::Below => "below",
            Self::Above => "above",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSample {
    pub stress: StressSample,
    pub side: Side,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Deflection,
    Sigma,
    Tau,
}

/// Nondimensional deflection and stresses at their reporting locations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableValues {
    /// At L/2 for SS and CC, at L for CF.
    pub w_bar: f64,
    /// At (L/2, h/2).
    pub sigma_bar: f64,
    /// At (0, 0).
    pub tau_bar: f64,
}

/// Element index and local coordinate containing `x`.
fn locate(sol: &Solution, x: f64) -> Result<(usize, f64)> {
    let mesh = &sol.mesh;
    let l = mesh.length;
    if !x.is_finite() || x < -1e-12 * l || x > l * (1.0 + 1e-12) {
        return Err(domain("x", x, "0 <= x <= L"));
    }
    let le = mesh.element_length();
    let x = x.clamp(0.0, l);
    let e = ((x / le).floor() as usize).min(mesh.ne - 1);
    Ok((e, (x - e as f64 * le).clamp(0.0, le)))
}

/// Interior node index at `x`, if `x` coincides with one.
fn interior_node(sol: &Solution, x: f64) -> Option<usize> {
    let le = sol.mesh.element_length();
    let i = (x / le).round();
    let on_node = (x - i * le).abs() <= NODE_SNAP * le;
    (on_node && i >= 1.0 && (i as usize) < sol.mesh.ne).then_some(i as usize)
}

pub fn displacement_at(sol: &Solution, x: f64) -> Result<Displacement> {
    let (e, xi) = locate(sol, x)?;
    let le = sol.mesh.element_length();
    let d = sol.element_dofs(e);
    let lag = lagrange_shape(xi, le);
    let her = hermite_shape(xi, le);
    let wd = [d[1], d[2], d[5], d[6]];
    Ok(Displacement {
        u0: lag.n[0] * d[0] + lag.n[1] * d[4],
        w0: her.n.iter().zip(wd).map(|(n, v)| n * v).sum(),
        w0_x: her.dn.iter().zip(wd).map(|(n, v)| n * v).sum(),
        phi_x: lag.n[0] * d[3] + lag.n[1] * d[7],
    })
}

fn element_strains(sol: &Solution, e: usize, xi: f64) -> GeneralizedStrains {
    strain_displacement(xi, &sol.mesh.element_geometry()).apply(&sol.element_dofs(e))
}

/// Generalized strains at `x`; at interior nodes the two adjacent elements
/// are averaged.
pub fn strains_at(sol: &Solution, x: f64) -> Result<GeneralizedStrains> {
    let (e, xi) = locate(sol, x)?;
    if let Some(i) = interior_node(sol, x) {
        let le = sol.mesh.element_length();
        let left = element_strains(sol, i - 1, le);
        let right = element_strains(sol, i, 0.0);
        return Ok(left.average(&right));
    }
    Ok(element_strains(sol, e, xi))
}

fn stress_from_strains(
    s: &GeneralizedStrains,
    mat: &MaterialPair,
    layup: &Layup,
    layer: usize,
    x: f64,
    z: f64,
) -> Result<StressSample> {
    let e = mat.modulus_for_fraction(layup.volume_fraction_in_layer(layer, z)?);
    let c55 = e / (2.0 * (1.0 + mat.nu));
    let h = layup.h;
    Ok(StressSample {
        x,
        z,
        sigma_x: e * s.axial_strain(z, h),
        tau_xz: c55 * g_shear(z, h) * s.gamma0,
    })
}

/// Stresses at `(x, z)` using the material of the layer that owns `z`.
pub fn stress_at(
    sol: &Solution,
    mat: &MaterialPair,
    layup: &Layup,
    x: f64,
    z: f64,
) -> Result<StressSample> {
    let layer = layup.layer_index(z)?;
    stress_from_strains(&strains_at(sol, x)?, mat, layup, layer, x, z)
}

/// Stresses at `(x, z)` using the material law of a given layer, for
/// one-sided values at interfaces.
pub fn stress_in_layer(
    sol: &Solution,
    mat: &MaterialPair,
    layup: &Layup,
    layer: usize,
    x: f64,
    z: f64,
) -> Result<StressSample> {
    stress_from_strains(&strains_at(sol, x)?, mat, layup, layer, x, z)
}

pub fn resultants_at(sol: &Solution, rig: &SectionRigidities, x: f64) -> Result<StressResultants> {
    let s = strains_at(sol, x)?;
    let c = rig.axial_block();
    let eps = [s.eps0, s.eps1, s.eps2];
    let row = |i: usize| c[i].iter().zip(eps).map(|(a, b)| a * b).sum::<f64>();
    Ok(StressResultants {
        nx: row(0),
        mx: row(1),
        sx: row(2),
        qxz: rig.a55s * s.gamma0,
    })
}

/// Scales a dimensional value to its nondimensional table form.
///
/// Only uniform loads have a defined normalization.
pub fn nondimensionalize(
    value: f64,
    quantity: Quantity,
    mat: &MaterialPair,
    length: f64,
    h: f64,
    load: &LoadCase,
) -> Result<f64> {
    let q = match *load {
        LoadCase::Udl { q } => q,
        _ => {
            return Err(Error::Config(
                "nondimensional values are defined for uniform loads only".into(),
            ))
        }
    };
    if q == 0.0 || !q.is_finite() {
        return Err(domain("q", q, "q != 0"));
    }
    Ok(match quantity {
        Quantity::Deflection => 100.0 * mat.e_metal * h.powi(3) / (q * length.powi(4)) * value,
        Quantity::Sigma | Quantity::Tau => h / (q * length) * value,
    })
}

/// Position where the reported deflection is taken.
pub fn deflection_station(sol: &Solution) -> f64 {
    match sol.bc {
        BoundaryCondition::CF => sol.mesh.length,
        BoundaryCondition::SS | BoundaryCondition::CC => 0.5 * sol.mesh.length,
    }
}

/// w̄, σ̄x and τ̄xz at their standard reporting locations.
pub fn table_values(sol: &Solution, mat: &MaterialPair, layup: &Layup) -> Result<TableValues> {
    let (l, h) = (sol.mesh.length, layup.h);
    let w = displacement_at(sol, deflection_station(sol))?.w0;
    let sigma = stress_at(sol, mat, layup, 0.5 * l, 0.5 * h)?.sigma_x;
    let tau = stress_at(sol, mat, layup, 0.0, 0.0)?.tau_xz;
    let nd = |v, k| nondimensionalize(v, k, mat, l, h, &sol.load);
    Ok(TableValues {
        w_bar: nd(w, Quantity::Deflection)?,
        sigma_bar: nd(sigma, Quantity::Sigma)?,
        tau_bar: nd(tau, Quantity::Tau)?,
    })
}

/// Stresses on a uniform z-grid that includes both surfaces; each interior
/// interface is sampled once from each side.
pub fn thickness_profile(
    sol: &Solution,
    mat: &MaterialPair,
    layup: &Layup,
    x: f64,
    n_samples: usize,
) -> Result<Vec<ProfileSample>> {
    if n_samples < 2 {
        return Err(Error::Config(format!(
            "a profile needs at least 2 samples, got {n_samples}"
        )));
    }
    let strains = strains_at(sol, x)?;
    let h = layup.h;
    let interfaces = layup.interior_interfaces();
    let layers = layup.layers();
    let snap = 1e-12 * h;
    let mut out = Vec::with_capacity(n_samples + 2 * interfaces.len());
    for k in 0..n_samples {
        let z = if k + 1 == n_samples {
            0.5 * h
        } else {
            -0.5 * h + h * k as f64 / (n_samples - 1) as f64
        };
        if interfaces.iter().any(|zi| (z - zi).abs() <= snap) {
            continue;
        }
        let layer = layup.layer_index(z)?;
        out.push(ProfileSample {
            stress: stress_from_strains(&strains, mat, layup, layer, x, z)?,
            side: Side::Interior,
        });
    }
    for &zi in &interfaces {
        let below = layers.iter().rposition(|l| !l.is_empty() && l.top == zi);
        let above = layers.iter().position(|l| !l.is_empty() && l.bottom == zi);
        for (layer, side) in [(below, Side::Below), (above, Side::Above)] {
            let layer = layer.expect("an interior interface separates two non-empty layers");
            out.push(ProfileSample {
                stress: stress_from_strains(&strains, mat, layup, layer, x, zi)?,
                side,
            });
        }
    }
    // stable sort keeps below before above at equal z
    out.sort_by(|a, b| a.stress.z.total_cmp(&b.stress.z));
    Ok(out)
}
