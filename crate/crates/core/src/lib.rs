//! Exact expansions of q-chromatic symmetric functions of unit interval graphs.
//!
//! The library computes the coefficients of `χ_e[X;q]` in modified Macdonald
//! polynomials (as functions of `q` and `t`), in the elementary basis (the
//! `t = 1` specialization) and in Hall-Littlewood functions (the `t = 0`
//! specialization). Two independent ground truths are provided: a brute-force
//! sum over proper colorings and the `d_+`/`d_-` operator construction.

pub mod algebra;
pub mod error;
pub mod expansion;
pub mod golden;
pub mod interval;
pub mod macdonald;
pub mod oracles;
pub mod partitions;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
