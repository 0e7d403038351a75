//! Factoring one-qubit gates: phase split, z-y-z Euler angles, and the
//! A·B·C triple that powers every two-XOR controlled-gate network.
//!
//! Run with `cargo run --example euler_and_abc`.

use gatesynth::mat2::{abc_decompose, euler_zyz, su2_phase_split, Unitary2};
use gatesynth::sampling;

fn main() {
    let mut rng = sampling::rng_from_seed(7);
    let u = sampling::random_unitary2(&mut rng);

    // Any U(2) matrix is a global phase times a determinant-one matrix.
    let (delta, w) = su2_phase_split(&u);
    println!("phase split: delta = {delta:+.6} rad, |det W - 1| = {:.3e}", {
        (w.det() - gatesynth::C64::new(1.0, 0.0)).norm()
    });

    // The special-unitary part factors into Rz(alpha) Ry(theta) Rz(beta).
    let e = euler_zyz(&w);
    println!(
        "euler angles: alpha = {:+.6}, theta = {:+.6}, beta = {:+.6}",
        e.alpha, e.theta, e.beta
    );
    let rebuilt = Unitary2::rz(e.alpha).mul(&Unitary2::ry(e.theta)).mul(&Unitary2::rz(e.beta));
    println!("euler rebuild distance: {:.3e}", w.distance(&rebuilt));

    // The ABC triple: A·B·C = I, yet conjugating the middle factors by NOT
    // recovers W. A controlled gate follows by making only the NOTs
    // conditional.
    let t = abc_decompose(&w).expect("determinant-one input");
    let x = Unitary2::pauli_x();
    let abc = t.a.mul(&t.b).mul(&t.c);
    let axbxc = t.a.mul(&x).mul(&t.b).mul(&x).mul(&t.c);
    println!("A·B·C distance from identity: {:.3e}", abc.distance(&Unitary2::identity()));
    println!("A·X·B·X·C distance from W:    {:.3e}", axbxc.distance(&w));
}
