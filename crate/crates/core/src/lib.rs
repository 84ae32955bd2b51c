//! Static bending of functionally graded straight and curved sandwich beams
//! with a two-node higher-order shear deformation finite element.
//!
//! The pipeline is [`compute_rigidities`] for the section, [`solve_static`]
//! for the nodal solution, and the [`postproc`] functions for recovered
//! quantities.

pub mod banded;
pub mod element;
pub mod error;
pub mod material;
pub mod postproc;
pub mod quadrature;
pub mod section;
pub mod solver;

pub use element::{
    element_load_point, element_load_udl, element_stiffness, hermite_shape, lagrange_shape,
    strain_displacement, ElementGeometry, GeneralizedStrains,
};
pub use error::{Error, Result};
pub use material::{
    effective_modulus, stiffness_coeffs, volume_fraction, Layup, LayupKind, MaterialPair, Scheme,
};
pub use postproc::{
    displacement_at, nondimensionalize, resultants_at, strains_at, stress_at, table_values,
    thickness_profile, Displacement, ProfileSample, Quantity, Side, StressResultants,
    StressSample, TableValues,
};
pub use section::{compute_rigidities, f_shear, g_shear, SectionRigidities};
pub use solver::{
    apply_bcs, assemble, assemble_load, solve_static, BoundaryCondition, LoadCase, Mesh, Solution,
};
