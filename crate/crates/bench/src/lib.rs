//! Benchmarks for `ado-core`; see `benches/`.
