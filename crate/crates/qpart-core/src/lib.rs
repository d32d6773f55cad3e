//! Exact q-series and partition-theory toolkit.
//!
//! The crate has four legs:
//!
//! - [`series`]: a truncated formal power series ring over the integers in
//!   the fixed variable set `{q, x, a, b, t}`, with q-Pochhammer and
//!   Gaussian binomial constructors;
//! - [`partition`]: integer partitions, their statistics, constrained
//!   enumeration, and brute-force weighted generating functions used as
//!   oracles;
//! - [`bijection`]: explicit, invertible, weight-preserving maps between
//!   partition families (column insertion, Durfee dissection, parity and
//!   even-part splits, and the 2-modular vector/hook machinery);
//! - [`identity`]: builders for both sides of a catalog of q-series
//!   identities plus a verification harness that compares sides coefficient
//!   by coefficient and cross-checks them against enumeration.
//!
//! All arithmetic is exact; there is no floating point anywhere in a
//! verified path. Every operation is a pure function of its inputs, so the
//! whole crate is safe to drive from multiple threads. With the `parallel`
//! feature (default) the heavier inner loops run on rayon; without it the
//! same code paths run sequentially.

pub mod bijection;
pub mod identity;
pub mod par;
pub mod partition;
pub mod series;
pub mod suite;
