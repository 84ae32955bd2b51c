//! Reference nondimensional values for representative cases at ne = 16.

use fgbeam::{
    compute_rigidities, solve_static, table_values, BoundaryCondition, Layup, LayupKind,
    LoadCase, MaterialPair, Mesh, Scheme, TableValues,
};

fn run(layup: Layup, l_over_h: f64, r_over_l: Option<f64>, bc: BoundaryCondition) -> TableValues {
    let mat = MaterialPair::default();
    let l = l_over_h * layup.h;
    let mesh = Mesh::new(l, 16, r_over_l.map_or(0.0, |r| 1.0 / (r * l))).unwrap();
    let rig = compute_rigidities(&mat, &layup).unwrap();
    let sol = solve_static(&mesh, &rig, bc, &LoadCase::Udl { q: 1.0e4 }).unwrap();
    table_values(&sol, &mat, &layup).unwrap()
}

fn check(got: f64, want: f64, tol: f64) {
    let err = (got - want).abs() / want.abs();
    assert!(err <= tol, "got {got}, want {want} (relative error {err:.2e})");
}

fn type_b(scheme: [f64; 3], p: f64) -> Layup {
    Layup::new(LayupKind::TypeB, Scheme(scheme), p, 0.1).unwrap()
}

fn type_c(p: f64) -> Layup {
    Layup::new(LayupKind::TypeC, Scheme([1.0, 8.0, 1.0]), p, 0.1).unwrap()
}

#[test]
fn straight_type_a_simply_supported() {
    let t = run(Layup::type_a(0.0, 0.1).unwrap(), 5.0, None, BoundaryCondition::SS);
    check(t.w_bar, 3.1652, 1e-3);
    check(t.sigma_bar, 3.8136, 1e-3);
    check(t.tau_bar, 0.7534, 1e-3);
    let t = run(Layup::type_a(1.0, 0.1).unwrap(), 5.0, None, BoundaryCondition::SS);
    check(t.w_bar, 6.2563, 1e-3);
    check(t.sigma_bar, 5.9061, 1e-3);
    check(t.tau_bar, 0.7534, 1e-3);
    let t = run(Layup::type_a(10.0, 0.1).unwrap(), 20.0, None, BoundaryCondition::SS);
    check(t.w_bar, 9.6868, 1e-3);
    check(t.sigma_bar, 38.2826, 1e-3);
}

#[test]
fn curved_type_a_simply_supported() {
    let t = run(Layup::type_a(2.0, 0.1).unwrap(), 5.0, Some(10.0), BoundaryCondition::SS);
    check(t.w_bar, 8.0578, 2e-3);
    let t = run(Layup::type_a(1.0, 0.1).unwrap(), 5.0, Some(5.0), BoundaryCondition::SS);
    check(t.w_bar, 6.2480, 2e-3);
    let t = run(Layup::type_a(5.0, 0.1).unwrap(), 5.0, Some(5.0), BoundaryCondition::SS);
    check(t.tau_bar, 0.6107, 2e-3);
}

#[test]
fn straight_type_b() {
    let t = run(type_b([1.0, 1.0, 1.0], 10.0), 5.0, None, BoundaryCondition::SS);
    check(t.w_bar, 12.5612, 1e-3);
    let t = run(type_b([1.0, 1.0, 1.0], 5.0), 5.0, None, BoundaryCondition::SS);
    check(t.tau_bar, 1.0280, 1e-3);
}

#[test]
fn curved_type_b_clamped_and_cantilever() {
    let t = run(type_b([1.0, 1.0, 1.0], 0.0), 5.0, Some(5.0), BoundaryCondition::CC);
    check(t.w_bar, 0.8170, 2e-3);
    let t = run(type_b([1.0, 1.0, 1.0], 1.0), 5.0, Some(5.0), BoundaryCondition::CF);
    check(t.w_bar, 58.0282, 2e-3);
}

#[test]
fn type_c_core_graded() {
    let t = run(type_c(5.0), 5.0, None, BoundaryCondition::CC);
    check(t.w_bar, 2.5036, 2e-3);
    let t = run(type_c(1.0), 5.0, Some(10.0), BoundaryCondition::SS);
    check(t.w_bar, 6.7083, 2e-3);
    let t = run(type_c(2.0), 5.0, None, BoundaryCondition::SS);
    check(t.sigma_bar, 6.5497, 2e-3);
    check(t.tau_bar, 0.6647, 2e-3);
}
