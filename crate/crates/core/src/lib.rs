//! Exact-arithmetic workbench for approximate degree and dual polynomials.

pub mod certapp;
pub mod cli;
pub mod dualcraft;
pub mod exactlp;
pub mod fncore;
pub mod rational;
pub mod reduction;
pub mod report;
pub mod shareapp;
