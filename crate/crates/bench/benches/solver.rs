use criterion::{black_box, criterion_group, criterion_main, Criterion};
use fgbeam::{
    compute_rigidities, element_stiffness, solve_static, table_values, BoundaryCondition,
    ElementGeometry, Layup, LayupKind, LoadCase, MaterialPair, Mesh, Scheme,
};

fn layup(p: f64) -> Layup {
    Layup::new(LayupKind::TypeB, Scheme([2.0, 2.0, 1.0]), p, 0.1).unwrap()
}

fn rigidities(c: &mut Criterion) {
    let mat = MaterialPair::default();
    let mut g = c.benchmark_group("rigidities");
    for p in [1.0, 0.5] {
        let l = layup(p);
        g.bench_function(format!("type_b_p{p}"), |b| {
            b.iter(|| compute_rigidities(&mat, black_box(&l)).unwrap())
        });
    }
    g.finish();
}

fn element(c: &mut Criterion) {
    let rig = compute_rigidities(&MaterialPair::default(), &layup(2.0)).unwrap();
    let geom = ElementGeometry::new(0.05, 2.0).unwrap();
    c.bench_function("element_stiffness", |b| {
        b.iter(|| element_stiffness(black_box(&rig), black_box(&geom)))
    });
}

fn solve(c: &mut Criterion) {
    let mat = MaterialPair::default();
    let l = layup(2.0);
    let rig = compute_rigidities(&mat, &l).unwrap();
    let mut g = c.benchmark_group("solve_static");
    for ne in [16, 32] {
        let mesh = Mesh::new(0.5, ne, 0.4).unwrap();
        g.bench_function(format!("cc_ne{ne}"), |b| {
            b.iter(|| {
                let sol = solve_static(
                    black_box(&mesh),
                    &rig,
                    BoundaryCondition::CC,
                    &LoadCase::Udl { q: 1.0e4 },
                )
                .unwrap();
                table_values(&sol, &mat, &l).unwrap()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, rigidities, element, solve);
criterion_main!(benches);
