//! Exact computations with Schur rings over finite groups.

pub mod arith;
pub mod cli;
pub mod corpus;
pub mod group;
pub mod rationality;
pub mod ring;
pub mod sring;
pub mod verifiers;
