pub mod census;
pub mod construct;
pub mod error;
pub mod graph;
pub mod permpoly;
pub mod poly;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{Graph, RootedGraph};
pub use permpoly::{per_poly, EngineKind};
pub use poly::IntPoly;
pub use spectra::{classify_perspec, is_in_G, PerSpecReport};
