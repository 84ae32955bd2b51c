//! Criterion benchmarks for the beam solver live in `benches/`.
