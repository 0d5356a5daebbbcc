//! Exact computations with triangular algebras and the structured linear maps
//! on them.

pub mod algebra;
pub mod cli;
pub mod exactlin;
pub mod maps;
pub mod structure;
pub mod theorems;
