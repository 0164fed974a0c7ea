//! Benchmark-only crate; the measurements live in `benches/forge.rs`.
//! Run with `cargo bench -p pairforge-bench`.
