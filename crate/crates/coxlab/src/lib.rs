//! File formats, rendering and parallel drivers for the `coxlab` CLI.

pub mod input;
pub mod jobs;
pub mod render;
