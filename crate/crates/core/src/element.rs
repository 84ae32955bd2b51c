//! Two-node, eight-DOF beam element.
//!
//! Each node carries `[u0, w0, w0_x, phi_x]`. Axial displacement and shear
//! rotation use linear Lagrange interpolation; deflection uses Hermite
//! cubics so that the slope is continuous across elements.

use crate::error::{Error, Result};
use crate::quadrature::{element_rule, GaussLegendre};
use crate::section::SectionRigidities;

pub const DOFS_PER_NODE: usize = 4;
pub const ELEMENT_DOFS: usize = 8;

pub type ElementMatrix = [[f64; ELEMENT_DOFS]; ELEMENT_DOFS];
pub type ElementVector = [f64; ELEMENT_DOFS];

/// Names of the per-node degrees of freedom, in storage order.
pub const DOF_NAMES: [&str; DOFS_PER_NODE] = ["u0", "w0", "w0_x", "phi_x"];

/// Length and curvature of a single element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementGeometry {
    /// Arc length (m).
    pub length: f64,
    /// Curvature 1/R (1/m); zero for a straight beam.
    pub inv_radius: f64,
}

impl ElementGeometry {
    pub fn new(length: f64, inv_radius: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(crate::error::domain("Le", length, "Le > 0"));
        }
        if !(inv_radius >= 0.0 && inv_radius.is_finite()) {
            return Err(crate::error::domain("1/R", inv_radius, "1/R >= 0"));
        }
        Ok(Self { length, inv_radius })
    }

    pub fn straight(length: f64) -> Result<Self> {
        Self::new(length, 0.0)
    }
}

/// Linear Lagrange functions and their derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagrangeShape {
    pub n: [f64; 2],
    pub dn: [f64; 2],
}

/// Hermite cubics ordered (w1, slope1, w2, slope2) with two derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteShape {
    pub n: [f64; 4],
    pub dn: [f64; 4],
    pub d2n: [f64; 4],
}

pub fn lagrange_shape(x: f64, le: f64) -> LagrangeShape {
    LagrangeShape {
        n: [1.0 - x / le, x / le],
        dn: [-1.0 / le, 1.0 / le],
    }
}

pub fn hermite_shape(x: f64, le: f64) -> HermiteShape {
    let t = x / le;
    let (t2, t3) = (t * t, t * t * t);
    HermiteShape {
        n: [
            1.0 - 3.0 * t2 + 2.0 * t3,
            le * (t - 2.0 * t2 + t3),
            3.0 * t2 - 2.0 * t3,
            le * (t3 - t2),
        ],
        dn: [
            (-6.0 * t + 6.0 * t2) / le,
            1.0 - 4.0 * t + 3.0 * t2,
            (6.0 * t - 6.0 * t2) / le,
            3.0 * t2 - 2.0 * t,
        ],
        d2n: [
            (-6.0 + 12.0 * t) / (le * le),
            (-4.0 + 6.0 * t) / le,
            (6.0 - 12.0 * t) / (le * le),
            (6.0 * t - 2.0) / le,
        ],
    }
}

/// Generalized strains of the beam axis.
///
/// The axial strain at height `z` is `eps0 + z * eps1 + f(z) * eps2` and the
/// shear strain is `g(z) * gamma0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GeneralizedStrains {
    /// Membrane strain `u0' + w0 / R`
    pub eps0: f64,
    /// Curvature `-w0''` (1/m)
    pub eps1: f64,
    /// Higher-order strain `phi_x'` (1/m)
    pub eps2: f64,
    /// Shear strain amplitude `phi_x`
    pub gamma0: f64,
}

impl GeneralizedStrains {
    pub fn average(&self, other: &Self) -> Self {
        Self {
            eps0: 0.5 * (self.eps0 + other.eps0),
            eps1: 0.5 * (self.eps1 + other.eps1),
            eps2: 0.5 * (self.eps2 + other.eps2),
            gamma0: 0.5 * (self.gamma0 + other.gamma0),
        }
    }

    /// Axial strain at height `z`.
    pub fn axial_strain(&self, z: f64, h: f64) -> f64 {
        self.eps0 + z * self.eps1 + crate::section::f_shear(z, h) * self.eps2
    }

    /// Shear strain at height `z`.
    pub fn shear_strain(&self, z: f64, h: f64) -> f64 {
        crate::section::g_shear(z, h) * self.gamma0
    }
}

/// Strain–displacement rows; each maps the element DOF vector to one
/// generalized strain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrainRows {
    pub b0: ElementVector,
    pub b1: ElementVector,
    pub b2: ElementVector,
    pub bs: ElementVector,
}

impl StrainRows {
    pub fn apply(&self, d: &ElementVector) -> GeneralizedStrains {
        GeneralizedStrains {
            eps0: dot(&self.b0, d),
            eps1: dot(&self.b1, d),
            eps2: dot(&self.b2, d),
            gamma0: dot(&self.bs, d),
        }
    }
}

fn dot(a: &ElementVector, b: &ElementVector) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn strain_displacement(x: f64, geom: &ElementGeometry) -> StrainRows {
    let le = geom.length;
    let k = geom.inv_radius;
    let lag = lagrange_shape(x, le);
    let her = hermite_shape(x, le);
    StrainRows {
        b0: [
            lag.dn[0],
            k * her.n[0],
            k * her.n[1],
            0.0,
            lag.dn[1],
            k * her.n[2],
            k * her.n[3],
            0.0,
        ],
        b1: [
            0.0,
            -her.d2n[0],
            -her.d2n[1],
            0.0,
            0.0,
            -her.d2n[2],
            -her.d2n[3],
            0.0,
        ],
        b2: [0.0, 0.0, 0.0, lag.dn[0], 0.0, 0.0, 0.0, lag.dn[1]],
        bs: [0.0, 0.0, 0.0, lag.n[0], 0.0, 0.0, 0.0, lag.n[1]],
    }
}

/// Element stiffness with the default 4-point rule.
pub fn element_stiffness(rig: &SectionRigidities, geom: &ElementGeometry) -> ElementMatrix {
    element_stiffness_with(rig, geom, element_rule())
}

/// Element stiffness integrated with an explicit Gauss rule.
pub fn element_stiffness_with(
    rig: &SectionRigidities,
    geom: &ElementGeometry,
    rule: &GaussLegendre,
) -> ElementMatrix {
    let c = rig.axial_block();
    let mut ke = [[0.0; ELEMENT_DOFS]; ELEMENT_DOFS];
    for (x, w) in rule.points(0.0, geom.length) {
        let b = strain_displacement(x, geom);
        let rows = [&b.b0, &b.b1, &b.b2];
        // D·B for the axial block, one row per generalized stress
        let mut db = [[0.0; ELEMENT_DOFS]; 3];
        for (i, dbi) in db.iter_mut().enumerate() {
            for (j, row) in rows.iter().enumerate() {
                for k in 0..ELEMENT_DOFS {
                    dbi[k] += c[i][j] * row[k];
                }
            }
        }
        for r in 0..ELEMENT_DOFS {
            for s in 0..ELEMENT_DOFS {
                let axial: f64 = (0..3).map(|i| rows[i][r] * db[i][s]).sum();
                ke[r][s] += w * (axial + rig.a55s * b.bs[r] * b.bs[s]);
            }
        }
    }
    // exact symmetry regardless of rounding order
    for r in 0..ELEMENT_DOFS {
        for s in r + 1..ELEMENT_DOFS {
            let v = 0.5 * (ke[r][s] + ke[s][r]);
            ke[r][s] = v;
            ke[s][r] = v;
        }
    }
    ke
}

/// Work-equivalent nodal loads of a uniform transverse load `q` (N/m).
pub fn element_load_udl(q: f64, le: f64) -> ElementVector {
    let mut fe = [0.0; ELEMENT_DOFS];
    for (x, w) in element_rule().points(0.0, le) {
        let her = hermite_shape(x, le);
        for (slot, n) in [1, 2, 5, 6].into_iter().zip(her.n) {
            fe[slot] += w * q * n;
        }
    }
    fe
}

/// A transverse point force on element node 1 or 2.
pub fn element_load_point(force: f64, node: usize) -> Result<ElementVector> {
    let mut fe = [0.0; ELEMENT_DOFS];
    match node {
        1 => fe[1] = force,
        2 => fe[5] = force,
        other => {
            return Err(Error::Config(format!(
                "element node must be 1 or 2, got {other}"
            )))
        }
    }
    Ok(fe)
}
