//! Two-control gates on three wires: the five-gate network over controlled
//! square roots, its exact sixteen-basic-gate expansion, and the seven-gate
//! networks that realize a Toffoli up to relative phases.

use crate::circuit::{Circuit, Gate};
use crate::mat2::{unitary_root, Unitary2};
use crate::peephole;
use crate::synth::two_bit::{c_u_gates, c_u_gates_dagger, c_u_parts};

/// Two-control `U(2)` gate on wires `(0, 1) -> 2` as five two-wire gates:
/// with `V² = U`,
/// `∧_2(U) = CV(1→2), XOR(0→1), CV†(1→2), XOR(0→1), CV(0→2)`
/// in execution order. Exponent bookkeeping: the target sees
/// `V^{x1} · V†^{x1 ⊕ x0} · V^{x0} = V^{2·(x0 AND x1)}`.
pub fn synth_cc_u(u: &Unitary2) -> Circuit {
    let v = unitary_root(u, 1);
    let mut c = Circuit::new(3);
    c.push(Gate::controlled(&[1], 2, v));
    c.push(Gate::xor(0, 1));
    c.push(Gate::controlled(&[1], 2, v.adjoint()));
    c.push(Gate::xor(0, 1));
    c.push(Gate::controlled(&[0], 2, v));
    c
}

/// Exact basic-gate expansion of [`synth_cc_u`]: each controlled root
/// expands into its one-control network and the peephole pass cancels the
/// seam gates, leaving eight one-qubit gates and eight XORs for a generic
/// payload.
pub fn expand_cc_u(u: &Unitary2) -> Circuit {
    peephole::merge_adjacent(&expand_cc_u_raw(u), peephole::IDENTITY_TOL)
}

/// [`expand_cc_u`] before the merge pass: all twenty gates of the three
/// spliced one-control networks, including the pairs that cancel.
pub(crate) fn expand_cc_u_raw(u: &Unitary2) -> Circuit {
    let v = unitary_root(u, 1);
    let parts = c_u_parts(&v);
    let mut c = Circuit::new(3);
    for g in c_u_gates(1, 2, &parts) {
        c.push(g);
    }
    c.push(Gate::xor(0, 1));
    for g in c_u_gates_dagger(1, 2, &parts) {
        c.push(g);
    }
    c.push(Gate::xor(0, 1));
    for g in c_u_gates(0, 2, &parts) {
        c.push(g);
    }
    c
}

/// Column signs of the diagonal `D` with `network = Toffoli · D` for both
/// congruent variants: `-1` exactly at basis state `|101⟩`.
pub const CONGRUENT_SIGNS: [i8; 8] = [1, 1, 1, 1, 1, -1, 1, 1];

/// Which seven-gate phase-congruent Toffoli network to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruentVariant {
    /// Quarter-turn y rotations with three XORs (seven basic gates).
    RyQuarter,
    /// Three-quarter-turn y rotations with three controlled-Z gates
    /// (three two-wire gates; not a basic-gate network).
    RyThreeQuarter,
}

/// Seven-gate network congruent to the Toffoli on wires `(0, 1) -> 2`:
/// simulates exactly `Toffoli · diag(signs)` with [`CONGRUENT_SIGNS`]
/// (a single `-1` on `|101⟩`). Returns the circuit and the sign vector.
///
/// Both variants alternate two-wire gates controlled by wire 1, wire 0,
/// wire 1; only the rotation angles and the two-wire gate family differ.
pub fn synth_congruent_toffoli(variant: CongruentVariant) -> (Circuit, Vec<i8>) {
    let mut c = Circuit::new(3);
    match variant {
        CongruentVariant::RyQuarter => {
            for g in congruent_toffoli_gates(0, 1, 2) {
                c.push(g);
            }
        }
        CongruentVariant::RyThreeQuarter => {
            let q = 3.0 * std::f64::consts::FRAC_PI_4;
            let cz = |ctrl: usize, t: usize| Gate::controlled(&[ctrl], t, Unitary2::pauli_z());
            c.push(Gate::one_qubit(2, Unitary2::ry(-q)));
            c.push(cz(1, 2));
            c.push(Gate::one_qubit(2, Unitary2::ry(q)));
            c.push(cz(0, 2));
            c.push(Gate::one_qubit(2, Unitary2::ry(-q)));
            c.push(cz(1, 2));
            c.push(Gate::one_qubit(2, Unitary2::ry(q)));
        }
    }
    (c, CONGRUENT_SIGNS.to_vec())
}

/// Raw quarter-turn congruent-Toffoli gates on arbitrary wires, in
/// execution order. The defect sign sits at `x1 = 1, x2 = 0, target = 1`:
/// conditioned on the controls the target sees `I, I, Z, X` for
/// `(x1, x2) = (0,0), (0,1), (1,0), (1,1)`.
pub(crate) fn congruent_toffoli_gates(x1: usize, x2: usize, t: usize) -> Vec<Gate> {
    let q = std::f64::consts::FRAC_PI_4;
    vec![
        Gate::one_qubit(t, Unitary2::ry(-q)),
        Gate::xor(x2, t),
        Gate::one_qubit(t, Unitary2::ry(-q)),
        Gate::xor(x1, t),
        Gate::one_qubit(t, Unitary2::ry(q)),
        Gate::xor(x2, t),
        Gate::one_qubit(t, Unitary2::ry(q)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::reference_controlled;
    use crate::dense::operator_distance;
    use crate::report::count_basic;
    use crate::sampling;
    use crate::verify::congruent_mod_phases;
    use crate::C64;

    fn check_cc(c: &Circuit, u: &Unitary2, tol: f64) {
        let want = reference_controlled(2, u).unwrap();
        let d = operator_distance(&c.simulate().unwrap(), &want).unwrap();
        assert!(d <= tol, "distance {d:.3e}");
    }

    #[test]
    fn five_gate_network_and_expansion_are_exact() {
        let mut rng = sampling::rng_from_seed(81);
        for _ in 0..50 {
            let u = sampling::random_unitary2(&mut rng);
            let five = synth_cc_u(&u);
            assert_eq!(five.gates.len(), 5);
            check_cc(&five, &u, 1e-10);
            let exp = expand_cc_u(&u);
            check_cc(&exp, &u, 1e-10);
            let r = count_basic(&exp);
            assert_eq!((r.one_qubit, r.xor), (8, 8), "{r:?}");
        }
    }

    #[test]
    fn expansion_handles_not_payload_and_time_reversal() {
        let x = Unitary2::pauli_x();
        let exp = expand_cc_u(&x);
        check_cc(&exp, &x, 1e-10);
        let r = count_basic(&exp);
        assert_eq!((r.one_qubit, r.xor), (8, 8));
        // The reversed-adjoint circuit implements the same self-inverse gate.
        let rev = exp.dagger();
        check_cc(&rev, &x, 1e-10);
    }

    #[test]
    fn congruent_variants_match_toffoli_up_to_the_documented_signs() {
        let toffoli = reference_controlled(2, &Unitary2::pauli_x()).unwrap();
        for variant in [CongruentVariant::RyQuarter, CongruentVariant::RyThreeQuarter] {
            let (c, signs) = synth_congruent_toffoli(variant);
            assert_eq!(c.gates.len(), 7);
            let sim = c.simulate().unwrap();
            let out = congruent_mod_phases(&sim, &toffoli, 1e-10).unwrap();
            assert_eq!(out.signs.unwrap(), signs, "variant {variant:?}");
            assert_eq!(signs[5], -1);
            assert_eq!(signs.iter().filter(|&&s| s == -1).count(), 1);
            // Check the product structure directly: sim == toffoli * diag(signs).
            for col in 0..8 {
                for row in 0..8 {
                    let want = toffoli.entry(row, col) * C64::new(signs[col] as f64, 0.0);
                    assert!((sim.entry(row, col) - want).norm() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn congruent_gate_budgets() {
        let (v1, _) = synth_congruent_toffoli(CongruentVariant::RyQuarter);
        let r1 = count_basic(&v1);
        assert_eq!((r1.one_qubit, r1.xor, r1.total_basic), (4, 3, 7));
        let (v2, _) = synth_congruent_toffoli(CongruentVariant::RyThreeQuarter);
        let r2 = count_basic(&v2);
        assert_eq!((r2.one_qubit, r2.controlled_v, r2.xor), (4, 3, 0));
    }

    #[test]
    fn controlled_z_is_control_target_symmetric() {
        let mut a = Circuit::new(2);
        a.push(Gate::controlled(&[0], 1, Unitary2::pauli_z()));
        let mut b = Circuit::new(2);
        b.push(Gate::controlled(&[1], 0, Unitary2::pauli_z()));
        let d = operator_distance(&a.simulate().unwrap(), &b.simulate().unwrap()).unwrap();
        assert!(d <= 1e-15);
    }
}
