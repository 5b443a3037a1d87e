//! Combinatorics of Lascoux polynomials: set operations on columns, left keys
//! of increasing and reverse tableaux, Hecke words and compatible pairs,
//! K-theoretic insertion, polynomial families, and Lascoux expansions of
//! products `𝔏_α · 𝔊_w`.

pub mod combi;
pub mod error;
pub mod expansion;
pub mod hecke;
pub mod insertion;
pub mod leftkey;
pub mod polynomials;
pub mod setops;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
