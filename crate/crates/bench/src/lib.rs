//! Criterion benchmarks for `skein-core`; see `benches/`.
