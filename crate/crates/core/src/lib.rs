//! Finite-model workbench for BCI-algebras.
//!
//! Algebras are Cayley tables with the zero pinned at index 0. On top of
//! that sit exhaustive property checks ([`props`]), the sixty Bol-Moufang
//! identities ([`fenyves`]), automorphism and regularity machinery
//! ([`morphisms`]), A-holomorphs ([`holomorph`]), enumeration up to
//! isomorphism ([`search`]) and corpus-wide theorem sweeps ([`sweep`]).

pub mod algebra;
pub mod bundled;
pub mod error;
pub mod fenyves;
pub mod holomorph;
pub mod morphisms;
pub mod props;
pub mod report;
pub mod search;
pub mod sweep;
pub mod tablefile;

pub use algebra::{ElementIndex, FiniteAlgebra, TranslationKind, TranslationMap, MAX_ORDER};
pub use error::{Error, Result};
