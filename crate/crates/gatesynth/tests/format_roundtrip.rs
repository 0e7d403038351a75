//! Round-trip tests for the on-disk formats: the text circuit format and
//! the JSON matrix formats must reproduce their inputs bit for bit, so a
//! written file re-simulates to the identical matrix.

use gatesynth::circuit::{Circuit, Gate};
use gatesynth::format::{
    dense_from_json, dense_to_json, parse_circuit, unitary2_from_json, unitary2_to_json,
    write_circuit,
};
use gatesynth::sampling::{random_dense_unitary, random_unitary2, rng_from_seed};
use gatesynth::synth;
use gatesynth::Unitary2;
use proptest::prelude::*;

fn assert_roundtrip(c: &Circuit) {
    let text = write_circuit(c);
    let back = parse_circuit(&text).unwrap_or_else(|e| panic!("parse failed ({e}):\n{text}"));
    assert_eq!(&back, c, "circuit changed across write/parse:\n{text}");
}

#[test]
fn every_synthesis_method_roundtrips_bit_exactly() {
    let mut rng = rng_from_seed(301);
    let u = random_unitary2(&mut rng);
    let w = gatesynth::sampling::random_su2(&mut rng);

    assert_roundtrip(&synth::synth_c_u(&u));
    assert_roundtrip(&synth::synth_c_phase(0.37));
    assert_roundtrip(&synth::synth_cc_u(&u));
    assert_roundtrip(&synth::expand_cc_u(&u));
    assert_roundtrip(&synth::synth_congruent_toffoli(synth::CongruentVariant::RyQuarter).0);
    assert_roundtrip(&synth::synth_graycode(3, &u).unwrap());
    assert_roundtrip(&synth::expand_graycode(3, &u).unwrap());
    assert_roundtrip(&synth::synth_mcx_ladder(7, 4).unwrap());
    assert_roundtrip(&synth::synth_mcx_split(8).unwrap());
    assert_roundtrip(&synth::expand_mcx_split(8).unwrap());
    assert_roundtrip(&synth::synth_mcu_quadratic(5, &u).unwrap());
    assert_roundtrip(&synth::synth_mcu_approx(6, &u, 1e-2).unwrap());
    assert_roundtrip(&synth::synth_mcsu2_linear(5, &w).unwrap());
    // The ancilla method also round-trips its wire annotation.
    let c = synth::synth_mcu_ancilla(5, &u).unwrap();
    assert_eq!(c.ancillas.len(), 1);
    assert_roundtrip(&c);
    let mut rng2 = rng_from_seed(302);
    assert_roundtrip(&synth::synth_unitary(&random_dense_unitary(2, &mut rng2)).unwrap().0);
}

#[test]
fn matrix_json_roundtrips_bit_exactly() {
    let mut rng = rng_from_seed(303);
    for _ in 0..50 {
        let u = random_unitary2(&mut rng);
        let back = unitary2_from_json(&unitary2_to_json(&u)).unwrap();
        assert!(u.bit_eq(&back), "payload changed across JSON round trip");
    }
    for n in 1..=3usize {
        let u = random_dense_unitary(n, &mut rng);
        let back = dense_from_json(&dense_to_json(&u)).unwrap();
        assert_eq!(back.dim(), u.dim());
        for i in 0..u.dim() {
            for j in 0..u.dim() {
                let (a, b) = (u.entry(i, j), back.entry(i, j));
                assert!(
                    a.re.to_bits() == b.re.to_bits() && a.im.to_bits() == b.im.to_bits(),
                    "entry ({i},{j}) changed across JSON round trip"
                );
            }
        }
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(parse_circuit("").is_err());
    assert!(parse_circuit("qubits two\n").is_err());
    assert!(parse_circuit("qubits 2\ngate targets=5 controls=- u=X\n").is_err());
    assert!(parse_circuit("qubits 2\ngate targets=1 controls=1 u=X\n").is_err());
    assert!(unitary2_from_json("{\"rows\": [[[1,0]]]}").is_err());
    assert!(dense_from_json("{\"n\": 1, \"rows\": [[[1,0],[0,0]]]}").is_err());
    // A non-unitary matrix parses structurally but fails validation.
    assert!(unitary2_from_json(
        "{\"rows\": [[[2,0],[0,0]],[[0,0],[2,0]]]}"
    )
    .is_err());
}

proptest! {
    // Hand-assembled circuits with named-form and generic payloads keep
    // every angle bit-exact across write/parse.
    #[test]
    fn arbitrary_gate_lists_roundtrip(
        angles in proptest::collection::vec(-10.0f64..10.0, 1..8),
        seed in 0u64..1000,
    ) {
        let mut c = Circuit::new(3);
        let mut rng = rng_from_seed(seed);
        for (i, &a) in angles.iter().enumerate() {
            match i % 5 {
                0 => c.push(Gate::one_qubit(i % 3, Unitary2::rz(a))),
                1 => c.push(Gate::one_qubit(i % 3, Unitary2::ry(a))),
                2 => c.push(Gate::xor(i % 3, (i + 1) % 3)),
                3 => c.push(Gate::toffoli(0, 1, 2)),
                _ => c.push(Gate::controlled(
                    &[i % 3],
                    (i + 1) % 3,
                    random_unitary2(&mut rng),
                )),
            }
        }
        let back = parse_circuit(&write_circuit(&c)).unwrap();
        prop_assert_eq!(back, c);
    }
}
