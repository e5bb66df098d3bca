//! Criterion benchmarks for `awspec-core`; see `benches/`.
