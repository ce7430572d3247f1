//! Exact combinatorics for Specht modules of Iwahori–Hecke algebras at
//! `q = -1` (`e = 2`) over a field of characteristic zero: partitions and
//! ladders, 2-blocks, Littlewood–Richardson coefficients, the Fock-space
//! canonical basis, tableau homomorphisms, and reducibility classifiers with
//! independently checkable witnesses.

pub mod blocks;
pub mod classify;
pub mod error;
pub mod fock;
pub mod homs;
pub mod laurent;
pub mod lr;
pub mod partition;
pub mod sweeps;

pub use blocks::{BlockData, TwoQuotient};
pub use classify::{FmReport, Reducibility, Terminal, Witness};
pub use error::{Error, Result};
pub use fock::{DecompCache, DecompositionMatrix, FockVector, LadderWord};
pub use laurent::LaurentPoly;
pub use lr::LrQuery;
pub use partition::{LadderSegmentation, Node, Partition, Residue};
pub use sweeps::{Suite, SweepReport};
