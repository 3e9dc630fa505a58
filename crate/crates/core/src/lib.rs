//! Exact `SL_N` web evaluation, quantum skew Howe duality on tableau bases,
//! ladder and dual canonical bases, and graded Cartan data of web algebras.

pub mod bases;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod howe;
pub mod ring;
pub mod tensor;
pub mod verify;
pub mod webalg;
pub mod webs;

pub use error::{Error, Result};
