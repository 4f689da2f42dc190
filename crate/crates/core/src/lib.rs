//! Justifications for answer sets of logic programs, computed through the
//! assumption-based argumentation framework of the program.
//!
//! [`lp`] parses and solves programs, [`aba`] builds arguments, attacks and
//! stable extensions, [`attack_tree`] constructs Attack Trees, [`justify`]
//! flattens them into BABAS and LABAS justifications and [`render`] prints
//! them as text, JSON or DOT.

pub mod aba;
pub mod attack_tree;
pub mod cli;
pub mod justify;
pub mod lp;
pub mod render;
