//! The rings `S`, `S^∅` and `S^β`.

pub mod fraction;
pub mod parse;
pub mod poly;

pub use fraction::RootFraction;
pub use poly::{Mono, Poly};
