//! The category `K` of alcove-indexed families of graded lattices.

pub mod checks;
pub mod morphism;
pub mod object;

#[cfg(test)]
mod tests;

pub use checks::{check_alpha_strings, check_density, check_projtimesbeta, check_structure, check_verma, linking_graph, q0_indecomposable_check, LinkingGraph};
pub use morphism::{diagonal, lift_hom, FracMat, KMorphism};
pub use object::{weyl_label, word_string, Base, KObject, Provenance, RankTable, Step};
