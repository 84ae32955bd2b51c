//! Meshing, assembly, boundary conditions and the static solve.

use std::fmt;
use std::str::FromStr;

use crate::banded::SymmetricBanded;
use crate::element::{
    element_load_udl, element_stiffness, ElementGeometry, DOFS_PER_NODE, DOF_NAMES, ELEMENT_DOFS,
};
use crate::error::{domain, Error, Result};
use crate::section::SectionRigidities;

/// Uniform mesh of `ne` elements over an arc length `length`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mesh {
    pub length: f64,
    pub ne: usize,
    /// Curvature shared by all elements; zero for a straight beam.
    pub inv_radius: f64,
}

impl Mesh {
    pub fn new(length: f64, ne: usize, inv_radius: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(domain("L", length, "L > 0"));
        }
        if ne == 0 {
            return Err(Error::Config("mesh needs at least one element".into()));
        }
        if !(inv_radius >= 0.0 && inv_radius.is_finite()) {
            return Err(domain("1/R", inv_radius, "1/R >= 0"));
        }
        Ok(Self {
            length,
            ne,
            inv_radius,
        })
    }

    pub fn straight(length: f64, ne: usize) -> Result<Self> {
        Self::new(length, ne, 0.0)
    }

    pub fn nodes(&self) -> usize {
        self.ne + 1
    }

    pub fn ndof(&self) -> usize {
        DOFS_PER_NODE * self.nodes()
    }

    pub fn element_length(&self) -> f64 {
        self.length / self.ne as f64
    }

    pub fn node_x(&self, i: usize) -> f64 {
        if i == self.ne {
            self.length
        } else {
            i as f64 * self.element_length()
        }
    }

    pub fn element_geometry(&self) -> ElementGeometry {
        ElementGeometry {
            length: self.element_length(),
            inv_radius: self.inv_radius,
        }
    }

    /// Global DOF numbers of element `e`.
    pub fn element_dofs(&self, e: usize) -> [usize; ELEMENT_DOFS] {
        std::array::from_fn(|k| DOFS_PER_NODE * e + k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryCondition {
    /// Simply supported at both ends.
    SS,
    /// Clamped at both ends.
    CC,
    /// Clamped at x = 0, free at x = L.
    CF,
}

impl BoundaryCondition {
    /// Constrained global DOFs in ascending order.
    ///
    /// For SS the axial displacement at node 0 is also pinned; otherwise the
    /// rigid axial translation would leave the system singular.
    pub fn constrained_dofs(&self, mesh: &Mesh) -> Vec<usize> {
        let last = DOFS_PER_NODE * mesh.ne;
        match self {
            Self::SS => vec![0, 1, last + 1],
            Self::CC => (0..4).chain(last..last + 4).collect(),
            Self::CF => (0..4).collect(),
        }
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SS => "SS",
            Self::CC => "CC",
            Self::CF => "CF",
        })
    }
}

impl FromStr for BoundaryCondition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "SS" => Ok(Self::SS),
            "CC" => Ok(Self::CC),
            "CF" => Ok(Self::CF),
            other => Err(Error::Config(format!(
                "unknown boundary condition '{other}' (expected SS, CC or CF)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LoadCase {
    /// Uniform transverse load per unit arc length (N/m).
    Udl { q: f64 },
    /// Transverse point force at x = L (N).
    PointAtEnd { force: f64 },
    /// Transverse point force at x = L/2 (N).
    PointAtMid { force: f64 },
}

impl LoadCase {
    pub fn magnitude(&self) -> f64 {
        match *self {
            Self::Udl { q } => q,
            Self::PointAtEnd { force } | Self::PointAtMid { force } => force,
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        match *self {
            Self::Udl { q } => Self::Udl { q: q * factor },
            Self::PointAtEnd { force } => Self::PointAtEnd {
                force: force * factor,
            },
            Self::PointAtMid { force } => Self::PointAtMid {
                force: force * factor,
            },
        }
    }
}

/// Assembles the global stiffness matrix.
pub fn assemble(mesh: &Mesh, rig: &SectionRigidities) -> SymmetricBanded {
    let ke = element_stiffness(rig, &mesh.element_geometry());
    let mut k = SymmetricBanded::zeros(mesh.ndof(), ELEMENT_DOFS - 1);
    for e in 0..mesh.ne {
        let dofs = mesh.element_dofs(e);
        for (a, &i) in dofs.iter().enumerate() {
            for (b, &j) in dofs.iter().enumerate().skip(a) {
                k.add(i, j, ke[a][b]);
            }
        }
    }
    k
}

/// Assembles the global load vector.
pub fn assemble_load(mesh: &Mesh, load: &LoadCase) -> Result<Vec<f64>> {
    let mut f = vec![0.0; mesh.ndof()];
    match *load {
        LoadCase::Udl { q } => {
            let fe = element_load_udl(q, mesh.element_length());
            for e in 0..mesh.ne {
                for (&i, v) in mesh.element_dofs(e).iter().zip(fe) {
                    f[i] += v;
                }
            }
        }
        LoadCase::PointAtEnd { force } => f[DOFS_PER_NODE * mesh.ne + 1] += force,
        LoadCase::PointAtMid { force } => {
            if !mesh.ne.is_multiple_of(2) {
                return Err(Error::Config(format!(
                    "a mid-span point load needs an even element count, got ne = {}",
                    mesh.ne
                )));
            }
            f[DOFS_PER_NODE * (mesh.ne / 2) + 1] += force;
        }
    }
    Ok(f)
}

/// A system with constrained rows and columns removed.
#[derive(Debug, Clone)]
pub struct ReducedSystem {
    pub k: SymmetricBanded,
    pub f: Vec<f64>,
    /// Full DOF index of each reduced unknown.
    pub free: Vec<usize>,
    pub ndof: usize,
}

impl ReducedSystem {
    /// Scatters a reduced vector into a full one with zeros at constraints.
    pub fn expand(&self, reduced: &[f64]) -> Vec<f64> {
        let mut d = vec![0.0; self.ndof];
        for (&i, &v) in self.free.iter().zip(reduced) {
            d[i] = v;
        }
        d
    }
}

/// Eliminates constrained DOFs.
pub fn apply_bcs(
    k: &SymmetricBanded,
    f: &[f64],
    mesh: &Mesh,
    bc: BoundaryCondition,
) -> ReducedSystem {
    let fixed = bc.constrained_dofs(mesh);
    let free: Vec<usize> = (0..k.dim()).filter(|i| !fixed.contains(i)).collect();
    ReducedSystem {
        k: k.select(&free),
        f: free.iter().map(|&i| f[i]).collect(),
        free,
        ndof: k.dim(),
    }
}

/// Solves a reduced system, naming the DOF where factorization fails.
pub fn solve_system(sys: &ReducedSystem) -> Result<Vec<f64>> {
    let chol = sys.k.cholesky().map_err(|e| {
        let dof = sys.free[e.index];
        Error::Singular {
            dof,
            node: dof / DOFS_PER_NODE,
            component: DOF_NAMES[dof % DOFS_PER_NODE],
        }
    })?;
    Ok(chol.solve(&sys.f))
}

/// Nodal solution of a static case.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub mesh: Mesh,
    pub bc: BoundaryCondition,
    pub load: LoadCase,
    /// Interleaved `[u0, w0, w0_x, phi_x]` per node.
    pub dofs: Vec<f64>,
}

impl Solution {
    pub fn node_dofs(&self, i: usize) -> [f64; DOFS_PER_NODE] {
        std::array::from_fn(|k| self.dofs[DOFS_PER_NODE * i + k])
    }

    pub fn element_dofs(&self, e: usize) -> [f64; ELEMENT_DOFS] {
        self.mesh.element_dofs(e).map(|i| self.dofs[i])
    }
}

/// Assembles and solves one static case.
pub fn solve_static(
    mesh: &Mesh,
    rig: &SectionRigidities,
    bc: BoundaryCondition,
    load: &LoadCase,
) -> Result<Solution> {
    let k = assemble(mesh, rig);
    let f = assemble_load(mesh, load)?;
    let sys = apply_bcs(&k, &f, mesh, bc);
    let x = solve_system(&sys)?;
    Ok(Solution {
        mesh: *mesh,
        bc,
        load: *load,
        dofs: sys.expand(&x),
    })
}

/// Reactions `K d - F` at every DOF (nonzero only at constraints).
pub fn reactions(sol: &Solution, rig: &SectionRigidities) -> Result<Vec<f64>> {
    let k = assemble(&sol.mesh, rig);
    let f = assemble_load(&sol.mesh, &sol.load)?;
    Ok(k.mul_vec(&sol.dofs)
        .iter()
        .zip(f)
        .map(|(kd, fi)| kd - fi)
        .collect())
}
