//! Criterion benchmarks for the solver and the combiner live in `benches/`.
