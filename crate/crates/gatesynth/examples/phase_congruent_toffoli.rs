//! Toffoli up to relative phases: seven gates instead of sixteen, at the
//! price of one −1 sign on basis state |101⟩.
//!
//! The sign is invisible whenever the network fires an even number of times
//! against unchanged control values, which is exactly how the multi-control
//! ladders consume it; see the `linear_toffoli_ladder` example.
//!
//! Run with `cargo run --example phase_congruent_toffoli`.

use gatesynth::circuit::reference_controlled;
use gatesynth::report::count_basic;
use gatesynth::synth::{synth_congruent_toffoli, CongruentVariant, CONGRUENT_SIGNS};
use gatesynth::verify::congruent_mod_phases;
use gatesynth::Unitary2;

fn main() {
    let toffoli = reference_controlled(2, &Unitary2::pauli_x()).expect("3-wire reference");

    for variant in [CongruentVariant::RyQuarter, CongruentVariant::RyThreeQuarter] {
        let (c, signs) = synth_congruent_toffoli(variant);
        let sim = c.simulate().expect("simulate");
        let out = congruent_mod_phases(&sim, &toffoli, 1e-10).expect("congruent");
        let r = count_basic(&c);
        println!("{variant:?}:");
        println!("  gates: {} one-qubit, {} XOR, {} controlled-V", r.one_qubit, r.xor, r.controlled_v);
        println!("  recovered signs: {:?}", out.signs.expect("diagonal signs"));
        println!("  documented:      {:?}", signs);
    }

    println!("sign table is fixed: {CONGRUENT_SIGNS:?} (the -1 sits at |101>)");

    // Squaring the quarter-turn network cancels the sign: the doubled
    // circuit is exactly the identity (Toffoli * Toffoli), no phases left.
    let (c, _) = synth_congruent_toffoli(CongruentVariant::RyQuarter);
    let mut doubled = c.clone();
    doubled.append(&c);
    let sim = doubled.simulate().expect("simulate");
    let id = gatesynth::DenseUnitary::identity(3);
    let d = gatesynth::dense::operator_distance(&sim, &id).expect("distance");
    println!("self-composition distance from identity: {d:.3e}");
}
