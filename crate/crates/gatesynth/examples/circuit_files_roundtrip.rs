//! The on-disk formats: a line-oriented text format for circuits and JSON
//! for matrices and reports, both round-tripping bit for bit.
//!
//! Run with `cargo run --example circuit_files_roundtrip`.

use gatesynth::format::{parse_circuit, unitary2_from_json, unitary2_to_json, write_circuit};
use gatesynth::sampling;
use gatesynth::synth::{synth_c_u, synth_mcu_ancilla};

fn main() {
    let mut rng = sampling::rng_from_seed(47);
    let u = sampling::random_unitary2(&mut rng);

    // A small circuit in the text format: header, optional ancilla lines,
    // one gate per line with 17-significant-digit payload parameters.
    let c = synth_c_u(&u);
    let text = write_circuit(&c);
    println!("--- circuit file ---\n{text}--------------------");

    let back = parse_circuit(&text).expect("parse");
    assert_eq!(back.num_wires, c.num_wires);
    assert_eq!(back.gates, c.gates, "text round-trip must be exact");
    println!("text round-trip: {} gates, bit-for-bit equal", back.gates.len());

    // Ancilla annotations survive the trip too.
    let a = synth_mcu_ancilla(5, &u).expect("synthesis");
    let atext = write_circuit(&a);
    let aback = parse_circuit(&atext).expect("parse");
    assert_eq!(aback.ancillas, a.ancillas);
    println!(
        "ancilla round-trip: wire {} restored={}",
        aback.ancillas[0].wire, aback.ancillas[0].restored
    );

    // Matrices as JSON, also exact.
    let json = unitary2_to_json(&u);
    println!("--- payload json ---\n{json}\n--------------------");
    let uback = unitary2_from_json(&json).expect("parse");
    assert!(uback.bit_eq(&u), "json round-trip must be exact");
    println!("json round-trip: bit-for-bit equal");
}
