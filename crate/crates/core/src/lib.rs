//! Persistent invariants of classical and virtual tangles.
//!
//! The crate computes invariants of a 2n-tangle that must reappear in any link
//! the tangle embeds in: the torsion and boundary invariants of the Alexander–Fox
//! module, link determinants, and ideals generated by Kauffman brackets of closures.
//! Each of them turns into an embedding obstruction via [`alexander::check_embedding_obstruction`]
//! or [`ideal::IdealZA::contains`].

pub mod alexander;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod ring;
pub mod skein;

pub use error::{Error, Result};
pub use ring::{CyclotomicInt, LaurentPoly, Monomial};
