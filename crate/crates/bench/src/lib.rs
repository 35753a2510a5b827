//! Criterion benchmarks for the verification kernels live in `benches/`.
