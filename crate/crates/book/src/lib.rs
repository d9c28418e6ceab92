//! The guide's code listings, compiled and run as doctests.

#[doc = include_str!("../../../book/src/intro.md")]
mod intro {}

#[doc = include_str!("../../../book/src/ingest.md")]
mod ingest {}

#[doc = include_str!("../../../book/src/detect.md")]
mod detect {}

#[doc = include_str!("../../../book/src/roi.md")]
mod roi {}

#[doc = include_str!("../../../book/src/metrics.md")]
mod metrics {}

#[doc = include_str!("../../../book/src/stats.md")]
mod stats {}

#[doc = include_str!("../../../book/src/power.md")]
mod power {}

#[doc = include_str!("../../../book/src/formats.md")]
mod formats {}

#[doc = include_str!("../../../book/src/synth.md")]
mod synth {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
