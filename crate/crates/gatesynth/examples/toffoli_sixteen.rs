//! Two-control gates on three wires: the five-gate network over controlled
//! square roots and its exact sixteen-basic-gate expansion.
//!
//! Run with `cargo run --example toffoli_sixteen`.

use gatesynth::circuit::{reference_controlled, render_ascii};
use gatesynth::dense::operator_distance;
use gatesynth::report::count_basic;
use gatesynth::sampling;
use gatesynth::synth::{expand_cc_u, synth_cc_u};
use gatesynth::Unitary2;

fn check(c: &gatesynth::Circuit, payload: &Unitary2) -> f64 {
    let want = reference_controlled(2, payload).expect("3-wire reference");
    operator_distance(&c.simulate().expect("simulate"), &want).expect("distance")
}

fn main() {
    // The Toffoli gate itself: payload NOT.
    let x = Unitary2::pauli_x();
    let five = synth_cc_u(&x);
    println!("five-gate Toffoli network (V = sqrt NOT), distance {:.3e}:", check(&five, &x));
    println!("{}", render_ascii(&five));

    let exp = expand_cc_u(&x);
    let r = count_basic(&exp);
    println!(
        "expanded: {} one-qubit + {} XOR = {} basic gates, distance {:.3e}",
        r.one_qubit,
        r.xor,
        r.total_basic,
        check(&exp, &x)
    );

    // Time reversal gives a second sixteen-gate form of the same gate.
    let rev = exp.dagger();
    println!("time-reversed expansion distance: {:.3e}", check(&rev, &x));

    // A generic payload costs exactly the same.
    let mut rng = sampling::rng_from_seed(23);
    let u = sampling::random_unitary2(&mut rng);
    let ru = count_basic(&expand_cc_u(&u));
    println!(
        "generic payload: {} one-qubit + {} XOR, distance {:.3e}",
        ru.one_qubit,
        ru.xor,
        check(&expand_cc_u(&u), &u)
    );

    // The Deutsch-gate family (i·Rx(theta) payloads) is the classic
    // three-bit universal gate; it lowers through the same path.
    let d = Unitary2::deutsch(1.234);
    println!("deutsch(1.234) payload distance: {:.3e}", check(&expand_cc_u(&d), &d));
}
