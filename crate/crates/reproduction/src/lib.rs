//! Holds the acceptance run in `tests/acceptance.rs`; run it with
//! `cargo test -p bipramsey-reproduction`.
