//! Duality, tilting, and the self-duality witnesses built from them.

pub mod anti;
pub mod functors;
pub mod witness;

#[cfg(test)]
mod tests;

pub use anti::{anti_words, box_alcoves, reduced_words_w0, selfdual_anti_check, AntiReport};
pub use functors::{dualize, left_act, tilt, tilt_w0};
pub use witness::{
    bs_selfdual_witness, check_kipptrans, delta, extend_witness, q0_selfdual_witness, q0_summand_split, shift_witness,
    tau_sigma, DualityWitness, KippTrans, SummandSplit, WitnessCheck,
};
