//! The gray-code schedule: an m-control gate from controlled (2^{m−1})-th
//! roots, with no work wires and no approximation.
//!
//! Every control pattern is visited along a reflected gray code; parity of
//! the pattern decides root vs inverse root, so all partial applications
//! telescope and only the all-ones pattern keeps a net payload.
//!
//! Run with `cargo run --example graycode_schedule`.

use gatesynth::circuit::reference_controlled;
use gatesynth::dense::operator_distance;
use gatesynth::report::count_basic;
use gatesynth::sampling;
use gatesynth::synth::{expand_graycode, synth_graycode};

fn main() {
    let mut rng = sampling::rng_from_seed(29);
    let u = sampling::random_unitary2(&mut rng);

    println!("two-wire granularity (controlled roots + XORs):");
    println!("  m | controlled-V | XOR");
    for m in 2..=7 {
        let c = synth_graycode(m, &u).expect("schedule");
        let r = count_basic(&c);
        println!("  {m} | {:12} | {:3}", r.controlled_v, r.xor);
        assert_eq!(r.controlled_v, (1 << m) - 1);
        assert_eq!(r.xor, (1 << m) - 2);
    }

    println!("basic granularity (each controlled root lowered and merged):");
    println!("  m | one-qubit | XOR | distance");
    for m in 2..=6 {
        let c = expand_graycode(m, &u).expect("expansion");
        let r = count_basic(&c);
        let want = reference_controlled(m, &u).expect("reference");
        let d = operator_distance(&c.simulate().expect("simulate"), &want).expect("distance");
        println!("  {m} | {:9} | {:3} | {d:.3e}", r.one_qubit, r.xor);
        assert_eq!(r.one_qubit, 2 << m);
        assert_eq!(r.xor, 3 * (1 << m) - 4);
    }
    println!("counts follow 2^(m+1) one-qubit and 3·2^m − 4 XOR exactly.");
}
