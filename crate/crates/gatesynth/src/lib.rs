//! Synthesis of multi-controlled quantum gates over a register of qubits
//! ("wires") into networks of one-qubit gates and controlled-NOTs (XORs).
//!
//! The library is organised around a small circuit IR ([`Circuit`], [`Gate`])
//! whose gates are single-qubit unitaries with any number of control wires.
//! Synthesis routines lower high-level targets — a controlled `U(2)` gate, a
//! Toffoli, an n-wire controlled unitary, or an arbitrary dense unitary — into
//! that IR at progressively finer granularity, down to the *basic* gate set of
//! one-qubit gates and two-wire XORs.
//!
//! The main entry points, roughly in order of generality:
//!
//! - [`synth::synth_c_u`]: one-control `U(2)` gate, at most four one-qubit
//!   gates and two XORs.
//! - [`synth::synth_cc_u`] / [`synth::expand_cc_u`]: two-control `U(2)` gate
//!   as five two-wire gates, or fully expanded to sixteen basic gates.
//! - [`synth::synth_congruent_toffoli`]: Toffoli up to relative phases, in
//!   seven basic gates.
//! - [`synth::synth_graycode`]: m-control gate via a gray-code schedule of
//!   controlled roots (exponential size, no work wires).
//! - [`synth::synth_mcx_ladder`] / [`synth::synth_mcx_split`]: m-control NOT
//!   in linearly many Toffolis when spare wires are available.
//! - [`synth::synth_mcu_quadratic`]: any m-control `U(2)` gate in `O(n^2)`
//!   basic gates without work wires.
//! - [`synth::synth_mcu_approx`]: approximate m-control `U(2)` gate in
//!   `O(n log(1/eps))` basic gates.
//! - [`synth::synth_mcsu2_linear`] / [`synth::synth_mcu_ancilla`]: linear-size
//!   exact networks for determinant-one payloads, or with one work wire.
//! - [`synth::synth_unitary`]: full two-level decomposition of an arbitrary
//!   dense unitary.
//!
//! Supporting modules provide dense reference simulation ([`dense`],
//! [`circuit`]), verification up to global or relative phases ([`verify`]),
//! gate counting ([`report`]), a peephole optimizer ([`peephole`]), a text
//! format for circuits ([`format`]), and seeded random sampling of unitaries
//! ([`sampling`]).
//!
//! Wire `0` is the most significant bit of a basis index, and circuits list
//! gates in execution order: the first gate of a circuit acts first, so the
//! matrix of a circuit `g1, g2, ..., gk` is `G_k · ... · G_2 · G_1`.
//!
//! The `examples/` directory contains one runnable walkthrough per major
//! capability; `cargo run --example <name>` prints circuits, counts, and
//! verification results for each.

pub mod circuit;
pub mod cli;
pub mod dense;
pub mod format;
pub mod mat2;
pub mod peephole;
pub mod report;
pub mod sampling;
pub mod synth;
pub mod verify;

pub use circuit::{Ancilla, Circuit, Gate, GateTag};
pub use dense::DenseUnitary;
pub use mat2::Unitary2;
pub use report::SynthesisReport;

/// Errors reported by synthesis, verification, parsing, and simulation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A matrix expected to be unitary failed the unitarity check.
    #[error("matrix is not unitary within {tol}: defect {defect:.3e}")]
    NotUnitary { defect: f64, tol: f64 },

    /// A payload that must have determinant one does not.
    #[error("matrix is not special unitary: |det - 1| = {0:.3e}")]
    NotSpecialUnitary(f64),

    /// A payload does not have the structural form a routine requires
    /// (e.g. the symmetric rz-ry-rz form accepted by the two-XOR networks).
    #[error("matrix does not have the form required by this construction: {0}")]
    FormMismatch(String),

    /// Two operands have incompatible dimensions.
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),

    /// A wire index lies outside the circuit's register.
    #[error("wire {wire} out of range for {num_wires} wires")]
    WireRange { wire: usize, num_wires: usize },

    /// A size or numeric parameter violates a routine's documented range.
    #[error("parameter out of range: {0}")]
    ParamRange(String),

    /// Dense simulation is capped to keep memory and time bounded.
    #[error("dense simulation supports at most 12 wires, got {0}")]
    SimTooLarge(usize),

    /// The circuit text format could not be parsed.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// JSON (de)serialization failure for matrices or reports.
    #[error("json error: {0}")]
    Json(String),

    /// An I/O failure surfaced by the command-line interface.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Complex scalar used for all matrix entries.
pub type C64 = num_complex::Complex64;
