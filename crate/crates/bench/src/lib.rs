//! Benchmarks live in `benches/`; run them with `cargo bench -p poplat-bench`.
