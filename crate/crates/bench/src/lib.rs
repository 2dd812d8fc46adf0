//! Criterion benchmarks for `oddmagic-core`; see `benches/`.
