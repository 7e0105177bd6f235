//! Benchmark-only crate; see `benches/graphs.rs`.
