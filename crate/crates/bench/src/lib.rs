//! Criterion benchmarks for the hot paths live in `benches/`; this crate
//! exports nothing.
