use fgbeam::solver::{apply_bcs, reactions, solve_system};
use fgbeam::{
    assemble, assemble_load, compute_rigidities, displacement_at, solve_static, stress_at,
    table_values, BoundaryCondition, Layup, LayupKind, LoadCase, MaterialPair, Mesh, Scheme,
};
use proptest::prelude::*;

fn any_kind() -> impl Strategy<Value = LayupKind> {
    prop_oneof![
        Just(LayupKind::TypeA),
        Just(LayupKind::TypeB),
        Just(LayupKind::TypeC)
    ]
}

fn any_bc() -> impl Strategy<Value = BoundaryCondition> {
    prop_oneof![
        Just(BoundaryCondition::SS),
        Just(BoundaryCondition::CC),
        Just(BoundaryCondition::CF)
    ]
}

fn any_layup() -> impl Strategy<Value = Layup> {
    (any_kind(), 0.5..3.0f64, 0.0..4.0f64, 0.5..3.0f64, 0.0..10.0f64, 0.01..0.5f64).prop_map(
        |(kind, a, b, c, p, h)| Layup::new(kind, Scheme([a, b, c]), p, h).unwrap(),
    )
}

fn solve(
    mat: &MaterialPair,
    layup: &Layup,
    l_over_h: f64,
    r_over_l: Option<f64>,
    ne: usize,
    bc: BoundaryCondition,
    q: f64,
) -> fgbeam::Solution {
    let l = l_over_h * layup.h;
    let mesh = Mesh::new(l, ne, r_over_l.map_or(0.0, |r| 1.0 / (r * l))).unwrap();
    let rig = compute_rigidities(mat, layup).unwrap();
    solve_static(&mesh, &rig, bc, &LoadCase::Udl { q }).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shear_stress_vanishes_at_surfaces(
        layup in any_layup(), bc in any_bc(), l_over_h in 3.0..50.0f64,
        r_over_l in prop::option::of(2.0..200.0f64), xr in 0.0..1.0f64,
    ) {
        let mat = MaterialPair::default();
        let sol = solve(&mat, &layup, l_over_h, r_over_l, 8, bc, 1e4);
        let x = xr * sol.mesh.length;
        for z in [-0.5 * layup.h, 0.5 * layup.h] {
            prop_assert_eq!(stress_at(&sol, &mat, &layup, x, z).unwrap().tau_xz, 0.0);
        }
    }

    #[test]
    fn global_stiffness_is_symmetric(layup in any_layup(), ne in 1usize..12, k in 0.0..5.0f64) {
        let rig = compute_rigidities(&MaterialPair::default(), &layup).unwrap();
        let mesh = Mesh::new(1.0, ne, k).unwrap();
        let km = assemble(&mesh, &rig);
        let n = km.norm();
        for i in 0..mesh.ndof() {
            for j in 0..mesh.ndof() {
                prop_assert!((km.get(i, j) - km.get(j, i)).abs() <= 1e-12 * n);
            }
        }
    }

    #[test]
    fn rigid_modes_carry_no_energy(layup in any_layup(), ne in 1usize..12, c in -2.0..2.0f64, s in -2.0..2.0f64) {
        let rig = compute_rigidities(&MaterialPair::default(), &layup).unwrap();
        let mesh = Mesh::straight(1.3, ne).unwrap();
        let km = assemble(&mesh, &rig);
        // axial translation plus rigid transverse translation and rotation
        let d: Vec<f64> = (0..mesh.ndof())
            .map(|i| {
                let x = mesh.node_x(i / 4);
                match i % 4 {
                    0 => c,
                    1 => s + 0.7 * x,
                    2 => 0.7,
                    _ => 0.0,
                }
            })
            .collect();
        let kd = km.mul_vec(&d);
        let dd: f64 = d.iter().map(|v| v * v).sum();
        let energy: f64 = kd.iter().zip(&d).map(|(a, b)| a * b).sum();
        prop_assert!(energy.abs() <= 1e-12 * km.norm() * dd);
    }

    #[test]
    fn nondimensional_values_are_scale_invariant(
        layup in any_layup(), bc in any_bc(), l_over_h in 3.0..50.0f64,
        r_over_l in prop::option::of(2.0..200.0f64), alpha in 0.01..100.0f64, beta in 0.01..100.0f64,
    ) {
        let mat = MaterialPair::default();
        let base = table_values(&solve(&mat, &layup, l_over_h, r_over_l, 8, bc, 1e4), &mat, &layup).unwrap();
        let q = table_values(&solve(&mat, &layup, l_over_h, r_over_l, 8, bc, alpha * 1e4), &mat, &layup).unwrap();
        let scaled = mat.scaled(beta).unwrap();
        let e = table_values(&solve(&scaled, &layup, l_over_h, r_over_l, 8, bc, 1e4), &scaled, &layup).unwrap();
        for t in [q, e] {
            prop_assert!(rel(t.w_bar, base.w_bar) <= 1e-10);
            prop_assert!(rel(t.sigma_bar, base.sigma_bar) <= 1e-10);
            prop_assert!(rel(t.tau_bar, base.tau_bar) <= 1e-10);
        }
    }

    #[test]
    fn huge_radius_matches_straight_beam(layup in any_layup(), bc in any_bc(), l_over_h in 3.0..50.0f64) {
        let mat = MaterialPair::default();
        let straight = table_values(&solve(&mat, &layup, l_over_h, None, 16, bc, 1e4), &mat, &layup).unwrap();
        let curved = table_values(&solve(&mat, &layup, l_over_h, Some(1e9), 16, bc, 1e4), &mat, &layup).unwrap();
        prop_assert!(rel(curved.w_bar, straight.w_bar) <= 1e-6);
    }

    #[test]
    fn reactions_balance_the_load(layup in any_layup(), bc in any_bc(), ne in 1usize..20, q in 1.0..1e5f64) {
        let mat = MaterialPair::default();
        let rig = compute_rigidities(&mat, &layup).unwrap();
        let mesh = Mesh::straight(10.0 * layup.h, ne).unwrap();
        let sol = solve_static(&mesh, &rig, bc, &LoadCase::Udl { q }).unwrap();
        let r = reactions(&sol, &rig).unwrap();
        let total: f64 = bc
            .constrained_dofs(&mesh)
            .into_iter()
            .filter(|i| i % 4 == 1)
            .map(|i| r[i])
            .sum();
        let ql = q * mesh.length;
        prop_assert!(rel(total, -ql) <= 1e-8, "{} vs {}", total, -ql);
    }

    #[test]
    fn responses_superpose(layup in any_layup(), bc in any_bc(), k in 0.0..3.0f64, q in 1.0..1e4f64, f in -1e4..1e4f64) {
        let rig = compute_rigidities(&MaterialPair::default(), &layup).unwrap();
        let mesh = Mesh::new(1.0, 8, k).unwrap();
        let a = solve_static(&mesh, &rig, bc, &LoadCase::Udl { q }).unwrap();
        let b = solve_static(&mesh, &rig, bc, &LoadCase::PointAtMid { force: f }).unwrap();
        let km = assemble(&mesh, &rig);
        let fa = assemble_load(&mesh, &LoadCase::Udl { q }).unwrap();
        let fb = assemble_load(&mesh, &LoadCase::PointAtMid { force: f }).unwrap();
        let fsum: Vec<f64> = fa.iter().zip(&fb).map(|(x, y)| x + y).collect();
        let sys = apply_bcs(&km, &fsum, &mesh, bc);
        let both = sys.expand(&solve_system(&sys).unwrap());
        let scale = both.iter().chain(&a.dofs).map(|v| v.abs()).fold(0.0, f64::max);
        for i in 0..both.len() {
            prop_assert!((both[i] - a.dofs[i] - b.dofs[i]).abs() <= 1e-10 * scale);
        }
    }
}

#[test]
fn type_a_deflection_grows_with_index() {
    let mat = MaterialPair::default();
    for bc in [BoundaryCondition::SS, BoundaryCondition::CC, BoundaryCondition::CF] {
        for l_over_h in [5.0, 20.0] {
            for r_over_l in [None, Some(5.0)] {
                let mut last = 0.0;
                for p in [0.0, 1.0, 2.0, 5.0, 10.0] {
                    let layup = Layup::type_a(p, 0.1).unwrap();
                    let w = table_values(&solve(&mat, &layup, l_over_h, r_over_l, 16, bc, 1e4), &mat, &layup)
                        .unwrap()
                        .w_bar;
                    assert!(w > last, "{bc} L/h={l_over_h} R/L={r_over_l:?} p={p}");
                    last = w;
                }
            }
        }
    }
}

#[test]
fn clamped_deflection_converges_monotonically() {
    let mat = MaterialPair::default();
    for kind in [LayupKind::TypeA, LayupKind::TypeB, LayupKind::TypeC] {
        for p in [0.0, 0.5, 2.0, 10.0] {
            for r_over_l in [None, Some(5.0)] {
                let layup = Layup::new(kind, Scheme([1.0, 2.0, 1.0]), p, 0.1).unwrap();
                let mut last = 0.0;
                for ne in [2, 4, 8, 12, 16, 24, 32] {
                    let sol = solve(&mat, &layup, 10.0, r_over_l, ne, BoundaryCondition::CC, 1e4);
                    let w = displacement_at(&sol, 0.5 * sol.mesh.length).unwrap().w0;
                    assert!(w >= last, "{kind} p={p} R/L={r_over_l:?} ne={ne}");
                    last = w;
                }
            }
        }
    }
}
