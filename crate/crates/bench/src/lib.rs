//! Criterion benchmarks for the degentrig kernels live in `benches/`.
