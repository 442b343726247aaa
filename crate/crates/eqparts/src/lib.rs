//! Exact enumeration and asymptotics for tuples of restricted integer
//! compositions that share the same number of parts.
//!
//! A composition of `n` with parts in a set `A` is an ordered sequence of
//! elements of `A` summing to `n`. Given `m` part sets, this crate counts
//! (and weighs, and samples) `m`-tuples of compositions of `n`, one per set,
//! all having the same number of parts. It provides:
//!
//! * exact dynamic-programming counts and probabilities in arbitrary
//!   precision ([`enumerate`]),
//! * closed-form oracles for special families ([`oracles`]),
//! * certified asymptotic constants via interval arithmetic
//!   ([`asymptotics`], [`interval`]),
//! * local-limit-theorem diagnostics ([`llt`]),
//! * seeded exact-distribution sampling and Monte Carlo estimation
//!   ([`sampler`]).

pub mod asymptotics;
pub mod enumerate;
pub mod error;
pub mod interval;
pub mod llt;
pub mod oracles;
pub mod partset;
pub mod sampler;

pub use error::Error;
pub use interval::Interval;
pub use partset::{parse_part_spec, PartSet, PartSetSpec};
