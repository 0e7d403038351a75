//! One-control gates on two wires: the general four-plus-two network and
//! the cheaper forms available for special payload families.
//!
//! Run with `cargo run --example controlled_single_qubit`.

use gatesynth::circuit::{reference_controlled, render_ascii};
use gatesynth::dense::operator_distance;
use gatesynth::report::count_basic;
use gatesynth::sampling;
use gatesynth::synth::{synth_c_phase, synth_c_su2, synth_c_u, synth_c_v};
use gatesynth::Unitary2;

fn show(label: &str, c: &gatesynth::Circuit, payload: &Unitary2) {
    let want = reference_controlled(1, payload).expect("2-wire reference");
    let d = operator_distance(&c.simulate().expect("simulate"), &want).expect("distance");
    let r = count_basic(c);
    println!(
        "{label}: {} one-qubit + {} XOR, distance {d:.3e}",
        r.one_qubit, r.xor
    );
}

fn main() {
    let mut rng = sampling::rng_from_seed(17);

    // General payload: at most four one-qubit gates and two XORs.
    let u = sampling::random_unitary2(&mut rng);
    let c = synth_c_u(&u);
    show("general U(2)    ", &c, &u);
    println!("{}", render_ascii(&c));

    // Determinant-one payload: the phase-correction gate drops out.
    let w = sampling::random_su2(&mut rng);
    show("special unitary ", &synth_c_su2(&w).expect("det 1"), &w);

    // Scalar phase payload: a single one-qubit gate on the control wire.
    let delta = 0.913;
    show("conditional phase", &synth_c_phase(delta), &Unitary2::ph(delta));

    // Conjugated-NOT payload: two gates suffice.
    let v = sampling::random_su2(&mut rng);
    let conj = v.mul(&Unitary2::pauli_x()).mul(&v.adjoint());
    show("conjugated NOT  ", &synth_c_v(&conj).expect("NOT family"), &conj);
}
