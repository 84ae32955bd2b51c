//! Cross-sectional rigidities of a graded section under the parabolic shear
//! deformation kinematics.
//!
//! The axial displacement carries a quintic warping term `f(z) * phi_x`,
//! with `g = f'` vanishing at both surfaces so that no shear correction
//! factor is needed. All rigidities are per unit width.

use crate::error::{domain, Result};
use crate::material::{shear_modulus, Layer, Layup, MaterialPair};
use crate::quadrature::thickness_rule;

/// Ratio between consecutive sub-interval lengths when grading toward the
/// zero of a power-law base.
const GRADING_RATIO: f64 = 0.15;
/// Number of graded sub-intervals added below the outermost one.
const GRADING_LEVELS: i32 = 14;

/// Shear function `f(z) = z (1 - 3/2 (z/h)^2 + 2/5 (z/h)^4)`.
#[inline]
pub fn f_shear(z: f64, h: f64) -> f64 {
    let r2 = (z / h) * (z / h);
    z * (1.0 - 1.5 * r2 + 0.4 * r2 * r2)
}

/// Derivative of [`f_shear`]: `g(z) = 1 - 9/2 (z/h)^2 + 2 (z/h)^4`.
#[inline]
pub fn g_shear(z: f64, h: f64) -> f64 {
    let r2 = (z / h) * (z / h);
    1.0 - 4.5 * r2 + 2.0 * r2 * r2
}

/// Thickness-integrated stiffness moments of a section (per unit width).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectionRigidities {
    /// ∫ C11 dz (N/m)
    pub a11: f64,
    /// ∫ C11 z dz (N)
    pub b11: f64,
    /// ∫ C11 z² dz (N·m)
    pub d11: f64,
    /// ∫ C11 f dz (N)
    pub b11s: f64,
    /// ∫ C11 z f dz (N·m)
    pub d11s: f64,
    /// ∫ C11 f² dz (N·m)
    pub h11s: f64,
    /// ∫ C55 g² dz (N/m)
    pub a55s: f64,
}

impl SectionRigidities {
    /// The symmetric block coupling (membrane, bending, higher-order) strains
    /// to (N, M, S).
    pub fn axial_block(&self) -> [[f64; 3]; 3] {
        [
            [self.a11, self.b11, self.b11s],
            [self.b11, self.d11, self.d11s],
            [self.b11s, self.d11s, self.h11s],
        ]
    }

    /// All seven values in declaration order.
    pub fn to_array(&self) -> [f64; 7] {
        [
            self.a11, self.b11, self.d11, self.b11s, self.d11s, self.h11s, self.a55s,
        ]
    }

    pub fn from_array(v: [f64; 7]) -> Self {
        let [a11, b11, d11, b11s, d11s, h11s, a55s] = v;
        Self {
            a11,
            b11,
            d11,
            b11s,
            d11s,
            h11s,
            a55s,
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::from_array(self.to_array().map(|v| v * factor))
    }
}

/// Integrates a vector-valued function of `(layer, z)` over the thickness.
///
/// Each non-empty layer gets a 50-point Gauss–Legendre rule. Power-law layers
/// are additionally split into geometrically graded sub-intervals toward the
/// point where the power-law base vanishes, because `s^p` with non-integer `p`
/// is not smooth there.
pub fn integrate_thickness<const N: usize, F>(layup: &Layup, mut f: F) -> [f64; N]
where
    F: FnMut(usize, f64) -> [f64; N],
{
    let rule = thickness_rule();
    let mut acc = [0.0; N];
    for (n, layer) in layup.layers().iter().enumerate() {
        if layer.is_empty() {
            continue;
        }
        for (a, b) in segments(layer, layup.p) {
            for (z, w) in rule.points(a, b) {
                let v = f(n, z);
                for (s, x) in acc.iter_mut().zip(v) {
                    *s += w * x;
                }
            }
        }
    }
    acc
}

fn segments(layer: &Layer, p: f64) -> Vec<(f64, f64)> {
    let (a, b) = (layer.bottom, layer.top);
    let graded = p > 0.0 && p.fract() != 0.0;
    let origin = match layer.power_law_origin() {
        Some(o) if graded => o,
        _ => return vec![(a, b)],
    };
    let t = b - a;
    let mut cuts: Vec<f64> = (1..=GRADING_LEVELS)
        .rev()
        .map(|k| t * GRADING_RATIO.powi(k))
        .collect();
    cuts.insert(0, 0.0);
    cuts.push(t);
    let mut segs: Vec<(f64, f64)> = cuts
        .windows(2)
        .map(|w| {
            if origin == a {
                (a + w[0], a + w[1])
            } else {
                (b - w[1], b - w[0])
            }
        })
        .collect();
    segs.sort_by(|x, y| x.0.total_cmp(&y.0));
    segs
}

/// Computes the seven section rigidities for a material pair and layup.
pub fn compute_rigidities(mat: &MaterialPair, layup: &Layup) -> Result<SectionRigidities> {
    let h = layup.h;
    if h.is_nan() || h <= 0.0 {
        return Err(domain("h", h, "h > 0"));
    }
    let layers = layup.layers();
    let v = integrate_thickness(layup, |n, z| {
        let e = mat.modulus_for_fraction(layers[n].fraction_at(z, layup.p));
        let g = shear_modulus(e, mat.nu);
        let f = f_shear(z, h);
        let gz = g_shear(z, h);
        [e, e * z, e * z * z, e * f, e * z * f, e * f * f, g * gz * gz]
    });
    Ok(SectionRigidities::from_array(v))
}
