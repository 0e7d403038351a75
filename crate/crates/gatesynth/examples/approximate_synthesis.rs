//! Approximate multi-control gates in O(n log(1/eps)) basic gates: run the
//! peeling recursion only k = ceil(log2(pi/eps)) levels and drop the
//! residual, whose payload is a (2^k)-th root of the original and hence
//! within eps of the identity in operator norm.
//!
//! Run with `cargo run --example approximate_synthesis`.

use gatesynth::circuit::reference_controlled;
use gatesynth::dense::operator_distance;
use gatesynth::report::count_basic;
use gatesynth::sampling;
use gatesynth::synth::{approx_error_bound, synth_mcu_approx};

fn main() {
    let mut rng = sampling::rng_from_seed(37);
    let u = sampling::random_unitary2(&mut rng);

    // At n = 9 a coarse budget truncates the recursion early; the achieved
    // operator distance equals the a-priori bound exactly, because the
    // only error source is the dropped residual.
    let n = 9;
    println!("n = {n}, payload a random U(2):");
    println!("  eps     | basic gates | bound       | achieved");
    let want = reference_controlled(n - 1, &u).expect("reference");
    for eps in [0.5, 0.2, 0.05, 1e-3] {
        let c = synth_mcu_approx(n, &u, eps).expect("synthesis");
        let bound = approx_error_bound(n, &u, eps).expect("bound");
        let d = operator_distance(&c.simulate().expect("simulate"), &want).expect("distance");
        println!(
            "  {eps:<7} | {:11} | {bound:.5e} | {d:.5e}",
            count_basic(&c).total_basic
        );
    }

    // Tighten eps and the count grows linearly in log2(1/eps) until the
    // recursion bottoms out and the circuit becomes exact.
    println!();
    println!("count vs budget at n = 12 (counts only):");
    for eps in [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6] {
        let c = synth_mcu_approx(12, &u, eps).expect("synthesis");
        let bound = approx_error_bound(12, &u, eps).expect("bound");
        println!(
            "  eps = {eps:7.0e}: {:5} basic gates, bound {bound:.3e}",
            count_basic(&c).total_basic
        );
    }
}
