//! Library half of the `degenpoly` binary. The rendering and parsing
//! helpers live here so the integration tests can exercise them directly
//! (in particular the JSON round trip) without going through a process
//! boundary.

pub mod fexpr;
pub mod output;
