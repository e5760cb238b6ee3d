//! Criterion benchmarks for the exact-arithmetic kernels live in
//! `benches/`; this crate has no library surface of its own.
