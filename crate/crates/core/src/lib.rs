//! Exact computation of tensor product multiplicities for series of
//! symmetrizable Kac-Moody algebras built from a marked Dynkin diagram,
//! their stabilization bounds, and products in the stable representation
//! ring. All arithmetic is exact (big integers and rationals); there is no
//! floating point anywhere in the crate.

pub mod diagram;
pub mod error;
pub mod weight;
pub mod linalg;

pub use diagram::{Extensibility, LevelAlgebra, MarkedDiagram};
pub use error::{Error, Result};
pub use weight::{DoubleWeight, InstantiatedWeight, RootProfile, SupportSeq};
