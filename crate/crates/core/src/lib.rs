//! Exact construction and verification of finite-dimensional weak Hopf
//! quasigroups.

// structure-constant tables read more clearly with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod axioms;
pub mod cli;
pub mod constructors;
pub mod corpus;
pub mod hopf_module;
pub mod linear;
pub mod structure;
