//! The reference mesh-convergence rows do not state their beam dimensions, so
//! they are used as a pattern: deflection should not decrease as the mesh is
//! refined, and our solver should share that direction. Simply supported
//! beams settle within a few parts in 1e7 from two elements on, so changes
//! below 1e-6 relative are treated as flat.

use std::collections::BTreeMap;

use fgbeam::{
    compute_rigidities, displacement_at, solve_static, BoundaryCondition, Layup, LayupKind,
    LoadCase, MaterialPair, Mesh, Scheme,
};
use fgbeam_cli::benchmark::embedded_convergence;

fn ours(kind: &str, scheme: &str, bc: &str, p: f64, ne: usize) -> f64 {
    let kind: LayupKind = kind.parse().unwrap();
    let scheme: Scheme = if scheme == "-" { Scheme([0.0, 1.0, 0.0]) } else { scheme.parse().unwrap() };
    let bc: BoundaryCondition = bc.parse().unwrap();
    let layup = Layup::new(kind, scheme, p, 0.1).unwrap();
    let rig = compute_rigidities(&MaterialPair::default(), &layup).unwrap();
    let mesh = Mesh::straight(2.0, ne).unwrap();
    let sol = solve_static(&mesh, &rig, bc, &LoadCase::Udl { q: 1e4 }).unwrap();
    let x = if bc == BoundaryCondition::CF { mesh.length } else { 0.5 * mesh.length };
    displacement_at(&sol, x).unwrap().w0
}

#[test]
fn refinement_never_reduces_deflection() {
    let mut groups: BTreeMap<(String, String, String, String, u64), Vec<(usize, f64)>> = BTreeMap::new();
    for r in embedded_convergence() {
        groups
            .entry((r.table, r.kind, r.scheme, r.bc, r.p.to_bits()))
            .or_default()
            .push((r.ne, r.deflection_mm));
    }
    assert_eq!(groups.len(), 45);
    for ((table, kind, scheme, bc, p), mut rows) in groups {
        let p = f64::from_bits(p);
        rows.sort_by_key(|r| r.0);
        let reference: Vec<f64> = rows.iter().map(|r| r.1).collect();
        assert!(
            reference.windows(2).all(|s| s[1] >= s[0]),
            "{table} {kind} p={p}: {reference:?}"
        );
        let w: Vec<f64> = rows.iter().map(|r| ours(&kind, &scheme, &bc, p, r.0)).collect();
        assert!(
            w.windows(2).all(|s| s[1] >= s[0] * (1.0 - 1e-6)),
            "{table} {kind} {bc} p={p}: {w:?}"
        );
    }
}
