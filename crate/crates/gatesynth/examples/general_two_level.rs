//! Synthesizing an arbitrary dense unitary: Givens eliminations factor it
//! into two-level rotations plus a phase diagonal, each rotation rides a
//! gray-code path of basis states to a fully-controlled gate, and the
//! multi-control machinery finishes the job.
//!
//! Run with `cargo run --example general_two_level`.

use gatesynth::dense::operator_distance;
use gatesynth::sampling;
use gatesynth::synth::{gray_path, synth_unitary, two_level_decompose};

fn main() {
    let mut rng = sampling::rng_from_seed(43);
    let n = 3;
    let u = sampling::random_dense_unitary(n, &mut rng);

    // Stage 1: the elimination. A dense 8x8 unitary needs at most 28
    // two-level rotations.
    let (ts, phases) = two_level_decompose(&u).expect("decomposition");
    println!(
        "two-level factors: {} rotations + diagonal (trivial: {})",
        ts.len(),
        phases.is_trivial(1e-12)
    );

    // Stage 2: each rotation's pair of basis states is connected by
    // flipping one bit at a time.
    let t = &ts[0];
    println!(
        "first rotation acts on |{:0n$b}> and |{:0n$b}>; gray path {:?}",
        t.x2,
        t.x1,
        gray_path(t.x2, t.x1)
    );

    // Stage 3: the full pipeline, with a gate-count report.
    let (c, report) = synth_unitary(&u).expect("synthesis");
    let d = operator_distance(&c.simulate().expect("simulate"), &u).expect("distance");
    println!("synthesized circuit: {} gates, distance {d:.3e}", c.gates.len());
    println!("report: {}", report.to_json());
}
