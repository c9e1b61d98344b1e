pub mod distinguishing;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod par;
pub mod self_centered;
pub mod symmetry;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{Family, Graph, MetricProfile};
