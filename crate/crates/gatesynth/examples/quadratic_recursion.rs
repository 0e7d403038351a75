//! Any (n−1)-control U(2) gate in O(n²) basic gates with no work wires:
//! peel a controlled square root off onto the last control, reduce to an
//! (n−2)-control problem, and let a multi-control NOT conjugate the
//! correction.
//!
//! Run with `cargo run --example quadratic_recursion`.

use gatesynth::circuit::reference_controlled;
use gatesynth::dense::operator_distance;
use gatesynth::report::count_basic;
use gatesynth::sampling;
use gatesynth::synth::{
    synth_mcu_quadratic, synth_mcu_quadratic_with_crossover, DEFAULT_CROSSOVER,
};

fn main() {
    let mut rng = sampling::rng_from_seed(31);
    let u = sampling::random_unitary2(&mut rng);

    // Exactness at simulable sizes.
    for n in [4, 6, 8] {
        let c = synth_mcu_quadratic(n, &u).expect("synthesis");
        let want = reference_controlled(n - 1, &u).expect("reference");
        let d = operator_distance(&c.simulate().expect("simulate"), &want).expect("distance");
        println!(
            "n={n}: {} basic gates, distance {d:.3e}",
            count_basic(&c).total_basic
        );
    }

    // The recursion peels until the residual control count drops below the
    // crossover, then a gray-code block finishes. A lower crossover peels
    // deeper; the default balances the two regimes.
    println!();
    let n = 9;
    for crossover in [4, 6, DEFAULT_CROSSOVER] {
        let c = synth_mcu_quadratic_with_crossover(n, &u, crossover).expect("synthesis");
        println!(
            "n={n} crossover={crossover}: {} basic gates",
            count_basic(&c).total_basic
        );
    }

    // Count growth is quadratic: the first differences of the totals are
    // affine in n (second difference a constant 96 per step).
    println!();
    let counts: Vec<usize> = (14..=17)
        .map(|n| count_basic(&synth_mcu_quadratic(n, &u).expect("synthesis")).total_basic)
        .collect();
    println!("counts at n = 14..17: {counts:?}");
    let d1: Vec<isize> = counts.windows(2).map(|w| w[1] as isize - w[0] as isize).collect();
    let d2: Vec<isize> = d1.windows(2).map(|w| w[1] - w[0]).collect();
    println!("first differences {d1:?}, second differences {d2:?}");
}
