//! Structure generators, sweeps and counterexample search.

pub mod criteria;
pub mod enumerate;
pub mod families;
pub mod random;
pub mod search;

pub use enumerate::{enumerate_structures, sweep_structures, GeneratorSpec};
pub use families::make_family;
pub use random::{random_p0set, random_structure};
pub use search::{search_counterexample, search_random, SUITES};
