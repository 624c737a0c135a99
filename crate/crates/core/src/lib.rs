//! Verification workbench for finite order-theoretic dualities: basic
//! lattices and their Stone spaces, basic semilattices, saturation frames,
//! tight representations and tight spectra of finite p0sets.

pub mod axioms;
pub mod error;
pub mod lab;
pub mod mask;
pub mod morphisms;
pub mod report;
pub mod saturation;
pub mod spectrum;
pub mod stone;
pub mod structure;
pub mod tight;
pub mod topology;

pub use error::{Error, Result};
pub use mask::Mask;
pub use report::{Report, Verdict};
pub use structure::{DerivedRels, OrderTables, P0Set};
pub use topology::FiniteTopology;
