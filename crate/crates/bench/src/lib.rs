//! Criterion benchmarks for `descent-core`; see `benches/`.
