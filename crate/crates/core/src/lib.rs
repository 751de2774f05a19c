//! Dimension theory of finite spectral spaces.
//!
//! A Noetherian T0 space of finite dimension is modelled by the finite poset of
//! its points under specialization ([`SpectralPoset`]). On top of it the crate
//! decides equidimensionality, equicodimensionality, catenarity, both notions
//! of biequidimensionality, the dimension formula and the existence of
//! codimension functions, and it can enumerate every small poset up to
//! isomorphism to check how these properties relate.

pub mod analysis;
pub mod catalog;
pub mod census;
pub mod codim;
pub mod dsl;
pub mod poset;
pub mod report;

pub use analysis::{classify, AnalysisError, AnalysisReport, LocalFailure, Property, Witness};
pub use catalog::{CatalogEntry, CatalogError};
pub use census::{CanonicalForm, CensusConfig, CensusError, CensusRow};
pub use codim::{Certificate, CodimResult, Labeling};
pub use dsl::{DslError, SpaceDocument};
pub use poset::{Chain, PosetError, SpectralPoset};
pub use report::Format;
