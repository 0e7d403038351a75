//! Synthesis routines, organised by the number of controls and the gate
//! granularity they emit:
//!
//! - [`two_bit`]: one-control gates on two wires (the basic building
//!   blocks: at most four one-qubit gates and two XORs).
//! - [`three_bit`]: two-control gates on three wires, including the exact
//!   sixteen-gate expansion and the seven-gate phase-congruent Toffolis.
//! - [`mcx`]: multi-control NOTs via Toffoli ladders when spare wires
//!   exist, linear in the register width.
//! - [`multi`]: multi-control single-qubit gates — gray-code (exponential,
//!   no spare wires), quadratic, approximate, determinant-one linear, and
//!   single-ancilla constructions.
//! - [`general`]: two-level decomposition of arbitrary dense unitaries.

pub mod general;
pub mod mcx;
pub mod multi;
pub mod three_bit;
pub mod two_bit;

pub use general::{
    gray_path, synth_two_level, synth_unitary, two_level_decompose, DiagonalPhases,
    TwoLevelRotation,
};
pub use mcx::{expand_mcx_split, synth_mcx_ladder, synth_mcx_split};
pub use multi::{
    approx_error_bound, expand_graycode, synth_graycode, synth_mcsu2_linear, synth_mcu_ancilla,
    synth_mcu_approx, synth_mcu_quadratic, synth_mcu_quadratic_with_crossover, DEFAULT_CROSSOVER,
};
pub use three_bit::{
    expand_cc_u, synth_cc_u, synth_congruent_toffoli, CongruentVariant, CONGRUENT_SIGNS,
};
pub use two_bit::{synth_c_ab, synth_c_phase, synth_c_su2, synth_c_u, synth_c_v};
