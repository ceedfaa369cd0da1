pub mod arith;
pub mod catalog;
pub mod census;
pub mod classify;
pub mod cli;
pub mod error;
pub mod fields;
pub mod galois;
pub mod pgl;
pub mod wire;
