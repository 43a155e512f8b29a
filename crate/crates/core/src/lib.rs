pub mod error;
pub mod dualtilt;
pub mod ajscat;
pub mod alcove;
pub mod cli;
pub mod field;
pub mod fracring;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod report;
pub mod rootsys;
pub mod suites;

pub use error::{AjsError, Result};
pub use field::{Field, Fp, Q};
pub use rootsys::{Root, RootDatum, RootType, WeylElt};
