pub mod classes;
pub mod degseq;
pub mod error;
pub mod graph;
pub mod miner;
pub mod rao;
pub mod unigraph;

pub use classes::ClassSpec;
pub use degseq::{BipartitionedPair, DegreeSequence};
pub use error::{Error, Result};
pub use graph::{CanonicalKey, Graph};
