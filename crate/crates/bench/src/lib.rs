//! Criterion benchmarks for `orbitlab-core`; see `benches/`.
