//! Similarity classes of planar lattices. Arithmetic classes are named by
//! integer quadruples and counted by maximum height; the modular j-invariant
//! is evaluated numerically on top of exact reduction.

pub mod arith;
pub mod census;
pub mod classes;
pub mod cli;
pub mod lattice;
pub mod modular;
pub mod numfmt;
pub mod rational;
pub mod verify;
