//! Many-control NOT gates built from three-wire Toffolis.
//!
//! Two constructions live here. The *ladder* realizes `∧_m(σx)` as
//! `4(m−2)` Toffolis when `m−2` extra wires are available; the extra wires
//! may hold arbitrary states and are always restored. The *split* chains
//! two ladders to realize an `(n−2)`-control NOT on `n` wires with a
//! single borrowed wire, costing `8(n−5)` Toffolis; its basic-gate
//! expansion replaces all but two Toffolis per layer with seven-gate
//! phase-congruent networks (the phase defects cancel pairwise) and lands
//! on exactly `48n − 204` basic gates after pruning.

use crate::circuit::{Circuit, Gate};
use crate::mat2::{unitary_root, Unitary2};
use crate::peephole;
use crate::synth::multi::expand_graycode;
use crate::synth::three_bit::{congruent_toffoli_gates, expand_cc_u};
use crate::synth::two_bit::c_u_parts;
use crate::{Error, Result};

/// One Toffoli slot in a ladder: controls `x1` (the chain control) and
/// `x2` (the carry wire), target `t`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LadderSlot {
    pub x1: usize,
    pub x2: usize,
    pub target: usize,
    /// True for the slot whose target is the ladder's output wire; it
    /// fires twice per pass while the inner slots fire four times.
    pub is_g1: bool,
}

/// Toffoli schedule computing `target ^= AND(controls)` with
/// `work.len() == controls.len() − 2` helper wires in arbitrary states.
///
/// Slot `0` XORs the top carry into the target, slot `m−1` seeds the
/// bottom carry from the two lowest controls, and the slots in between
/// propagate carries down the work chain. The up/down/up/down sweep
/// cancels every partial carry, so all work wires come back unchanged:
///
/// ```text
/// indices: 0 1 … m−2 | m−3 … 0 | 1 … m−2 | m−3 … 1     (4(m−2) slots)
/// ```
pub(crate) fn ladder_seq(controls: &[usize], work: &[usize], target: usize) -> Vec<LadderSlot> {
    let m = controls.len();
    assert!(m >= 3 && work.len() == m - 2, "ladder shape: m={m}, work={}", work.len());
    let mut defs = Vec::with_capacity(m - 1);
    defs.push((controls[m - 1], work[m - 3], target));
    for k in 2..m - 1 {
        defs.push((controls[m - k], work[m - 2 - k], work[m - 1 - k]));
    }
    defs.push((controls[0], controls[1], work[0]));

    let mut order = Vec::with_capacity(4 * (m - 2));
    order.extend(0..m - 1);
    order.extend((0..=m - 3).rev());
    order.extend(1..m - 1);
    order.extend((1..=m - 3).rev());
    debug_assert_eq!(order.len(), 4 * (m - 2));

    order
        .into_iter()
        .map(|i| LadderSlot { x1: defs[i].0, x2: defs[i].1, target: defs[i].2, is_g1: i == 0 })
        .collect()
}

/// `∧_m(σx)` on `n` wires as `4(m−2)` Toffolis: controls `0..m`, target
/// `n−1`, work wires `n−m+1..n−1` (arbitrary states, all restored).
/// Requires `n ≥ 5` and `3 ≤ m ≤ ⌈n/2⌉` so the work wires fit between
/// the controls and the target.
pub fn synth_mcx_ladder(n: usize, m: usize) -> Result<Circuit> {
    if n < 5 || m < 3 || 2 * m > n + 1 {
        return Err(Error::ParamRange(format!(
            "toffoli ladder needs n >= 5 and 3 <= m <= ceil(n/2); got n={n}, m={m}"
        )));
    }
    let controls: Vec<usize> = (0..m).collect();
    let work: Vec<usize> = (n - m + 1..=n - 2).collect();
    let mut c = Circuit::new(n);
    for s in ladder_seq(&controls, &work, n - 1) {
        c.push(Gate::toffoli(s.x1, s.x2, s.target));
    }
    Ok(c)
}

/// The two ladders of the one-borrowed-wire split on `n` wires: ladder A
/// toggles the borrowed wire `n−2` under the low control block, ladder B
/// toggles the target `n−1` under the high control block plus the
/// borrowed wire, and each uses the other block's controls as work wires.
fn split_plan(n: usize) -> Result<(Vec<LadderSlot>, Vec<LadderSlot>)> {
    if n < 7 {
        return Err(Error::ParamRange(format!(
            "one-borrowed-wire split needs n >= 7, got n={n}"
        )));
    }
    let mut m1 = n.div_ceil(2);
    let mut m2 = n - m1 - 1;
    if m2 < 3 {
        m1 = n - 4;
        m2 = 3;
    }
    let w = n - 2;
    let t = n - 1;
    let a_controls: Vec<usize> = (0..m2).collect();
    let b_orig: Vec<usize> = (m2..n - 2).collect();
    let mut b_controls = b_orig.clone();
    b_controls.push(w);
    let a_work = b_orig[b_orig.len() - (m2 - 2)..].to_vec();
    let b_work = a_controls[a_controls.len() - (m1 - 2)..].to_vec();
    Ok((ladder_seq(&a_controls, &a_work, w), ladder_seq(&b_controls, &b_work, t)))
}

/// `(n−2)`-control NOT on `n` wires as `8(n−5)` Toffolis: controls
/// `0..n−2`, target `n−1`, and wire `n−2` borrowed in an arbitrary state
/// (restored). The schedule is A, B, A, B with the ladders from
/// [`split_plan`]; the A passes cancel the borrowed-wire toggle and the B
/// passes leave `target ^= AND(all controls)`. Requires `n ≥ 7`.
pub fn synth_mcx_split(n: usize) -> Result<Circuit> {
    let (a, b) = split_plan(n)?;
    let mut c = Circuit::new(n);
    for pass in [&a, &b, &a, &b] {
        for s in pass {
            c.push(Gate::toffoli(s.x1, s.x2, s.target));
        }
    }
    Ok(c)
}

/// Exact Toffoli on `(x1, x2) → t` as twenty basic gates: the five-gate
/// two-control network over `V = √σx` with each controlled root expanded
/// into its one-control network. Two diagonal factors are slid across
/// gates they commute with (a control-side phase passes its XOR) so the
/// seams expose maximal merge opportunities; sixteen gates survive
/// standalone pruning and neighbors in a larger schedule merge further.
fn exact_toffoli_gates(x1: usize, x2: usize, t: usize) -> Vec<Gate> {
    let v = unitary_root(&Unitary2::pauli_x(), 1);
    let p = c_u_parts(&v);
    vec![
        Gate::one_qubit(t, p.c),
        Gate::xor(x2, t),
        Gate::one_qubit(t, p.b),
        Gate::xor(x2, t),
        Gate::one_qubit(x2, p.e),
        Gate::one_qubit(t, p.a),
        Gate::xor(x1, x2),
        Gate::one_qubit(t, p.a.adjoint()),
        Gate::xor(x2, t),
        Gate::one_qubit(t, p.b.adjoint()),
        Gate::xor(x2, t),
        Gate::one_qubit(t, p.c.adjoint()),
        Gate::one_qubit(x2, p.e.adjoint()),
        Gate::xor(x1, x2),
        Gate::one_qubit(t, p.c),
        Gate::one_qubit(x1, p.e),
        Gate::xor(x1, t),
        Gate::one_qubit(t, p.b),
        Gate::xor(x1, t),
        Gate::one_qubit(t, p.a),
    ]
}

/// [`exact_toffoli_gates`] emitted time-reversed: order flipped and every
/// gate replaced by its adjoint. The block is self-inverse, so the
/// reversed form computes the same Toffoli — but it now opens with the
/// adjoint of the gate the forward form closes with, letting the merge
/// pass cancel one facing pair outright where two exact slots meet
/// instead of merely combining the pair into a product gate.
fn exact_toffoli_gates_reversed(x1: usize, x2: usize, t: usize) -> Vec<Gate> {
    exact_toffoli_gates(x1, x2, t).iter().rev().map(Gate::dagger).collect()
}

/// Basic-gate expansion of [`synth_mcx_split`]: exactly `48n − 204` basic
/// gates after pruning.
///
/// Each ladder-A slot becomes the seven-gate congruent network (the slot
/// writing the borrowed wire takes its controls in swapped roles), and
/// each inner ladder-B slot likewise; only ladder B's output slot — the
/// one Toffoli whose phase defect would reach the target — is expanded
/// exactly. Every congruent slot fires an even number of times between
/// sign-flipping boundaries, so the `|x1 x2⟩ = |10⟩` defects cancel and
/// the whole circuit equals the `(n−2)`-control NOT exactly.
///
/// The output slot fires four times, and its last firing is emitted
/// time-reversed so the final seam between exact blocks cancels a gate
/// pair rather than combining it; the wires between seams stop the
/// cancellation from cascading further.
pub fn expand_mcx_split(n: usize) -> Result<Circuit> {
    Ok(peephole::optimize(&expand_mcx_split_raw(n)?))
}

/// [`expand_mcx_split`] before the merge pass.
pub(crate) fn expand_mcx_split_raw(n: usize) -> Result<Circuit> {
    let (a, b) = split_plan(n)?;
    let mut c = Circuit::new(n);
    let mut exact_firings = 0;
    for pass in [&a, &b, &a, &b] {
        for s in pass {
            let gates = if !s.is_g1 {
                congruent_toffoli_gates(s.x1, s.x2, s.target)
            } else if s.target == n - 1 {
                exact_firings += 1;
                if exact_firings == 4 {
                    exact_toffoli_gates_reversed(s.x2, s.x1, s.target)
                } else {
                    exact_toffoli_gates(s.x2, s.x1, s.target)
                }
            } else {
                congruent_toffoli_gates(s.x2, s.x1, s.target)
            };
            for g in gates {
                c.push(g);
            }
        }
    }
    Ok(c)
}

/// Basic-gate `m`-control NOT on arbitrary wires inside an `n`-wire
/// circuit, dispatched by control count: bare NOT, XOR, the two-control
/// expansion, the gray-code expansion (also the fallback when no spare
/// wire exists), or the one-borrowed-wire split for `m ≥ 5`.
pub(crate) fn expand_mcx_onto(
    controls: &[usize],
    target: usize,
    free: Option<usize>,
    n: usize,
) -> Result<Vec<Gate>> {
    let m = controls.len();
    let x = Unitary2::pauli_x();
    match m {
        0 => Ok(vec![Gate::one_qubit(target, x)]),
        1 => Ok(vec![Gate::xor(controls[0], target)]),
        2 => {
            let canonical = expand_cc_u(&x);
            let map = [controls[0], controls[1], target];
            Ok(canonical.remap_wires(&map, n)?.gates)
        }
        3 | 4 => remap_expanded_graycode(controls, target, n),
        _ => match free {
            None => remap_expanded_graycode(controls, target, n),
            Some(w) => {
                let canonical = expand_mcx_split(m + 2)?;
                let mut map = Vec::with_capacity(m + 2);
                map.extend_from_slice(controls);
                map.push(w);
                map.push(target);
                Ok(canonical.remap_wires(&map, n)?.gates)
            }
        },
    }
}

fn remap_expanded_graycode(controls: &[usize], target: usize, n: usize) -> Result<Vec<Gate>> {
    let m = controls.len();
    let canonical = expand_graycode(m, &Unitary2::pauli_x())?;
    let mut map = Vec::with_capacity(m + 1);
    map.extend_from_slice(controls);
    map.push(target);
    Ok(canonical.remap_wires(&map, n)?.gates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{operator_distance, DenseUnitary};
    use crate::report::count_basic;
    use crate::C64;
    use nalgebra::DMatrix;

    /// The permutation `target ^= AND(controls)` as a dense matrix.
    fn mcx_matrix(n: usize, controls: &[usize], target: usize) -> DenseUnitary {
        let dim = 1usize << n;
        let bit = |w: usize| 1usize << (n - 1 - w);
        DenseUnitary::from_matrix_unchecked(DMatrix::from_fn(dim, dim, |r, c| {
            let fires = controls.iter().all(|&w| c & bit(w) != 0);
            let out = if fires { c ^ bit(target) } else { c };
            C64::new(if r == out { 1.0 } else { 0.0 }, 0.0)
        }))
    }

    #[test]
    fn ladder_counts_and_action_on_every_basis_state() {
        for (n, m) in [(5, 3), (6, 3), (7, 3), (7, 4), (9, 5)] {
            let c = synth_mcx_ladder(n, m).unwrap();
            let r = count_basic(&c);
            assert_eq!(r.toffoli, 4 * (m - 2), "n={n} m={m}");
            assert_eq!(r.toffoli, c.gates.len());
            let controls: Vec<usize> = (0..m).collect();
            let want = mcx_matrix(n, &controls, n - 1);
            let d = operator_distance(&c.simulate().unwrap(), &want).unwrap();
            assert!(d <= 1e-12, "n={n} m={m}: distance {d:.3e}");
        }
    }

    #[test]
    fn ladder_rejects_out_of_range_shapes() {
        assert!(synth_mcx_ladder(4, 3).is_err());
        assert!(synth_mcx_ladder(5, 2).is_err());
        assert!(synth_mcx_ladder(8, 5).is_err());
        assert!(synth_mcx_ladder(9, 5).is_ok());
    }

    #[test]
    fn split_count_and_permutation() {
        for n in 7..=10 {
            let c = synth_mcx_split(n).unwrap();
            let r = count_basic(&c);
            assert_eq!(r.toffoli, 8 * (n - 5), "n={n}");
            if n <= 9 {
                let controls: Vec<usize> = (0..n - 2).collect();
                let want = mcx_matrix(n, &controls, n - 1);
                let d = operator_distance(&c.simulate().unwrap(), &want).unwrap();
                assert!(d <= 1e-12, "n={n}: distance {d:.3e}");
            }
        }
        assert!(synth_mcx_split(6).is_err());
    }

    #[test]
    fn expanded_split_hits_the_closed_form_count() {
        for n in 7..=10 {
            let c = expand_mcx_split(n).unwrap();
            let r = count_basic(&c);
            assert_eq!(r.toffoli, 0);
            assert_eq!(r.controlled_v + r.other_controlled, 0);
            assert_eq!(r.total_basic, 48 * n - 204, "n={n}: {r:?}");
        }
    }

    #[test]
    fn expanded_split_is_exact() {
        for n in 7..=9 {
            let c = expand_mcx_split(n).unwrap();
            let controls: Vec<usize> = (0..n - 2).collect();
            let want = mcx_matrix(n, &controls, n - 1);
            let d = operator_distance(&c.simulate().unwrap(), &want).unwrap();
            assert!(d <= 1e-9, "n={n}: distance {d:.3e}");
        }
    }

    #[test]
    fn exact_toffoli_block_is_a_toffoli() {
        let mut c = Circuit::new(3);
        for g in exact_toffoli_gates(0, 1, 2) {
            c.push(g);
        }
        let want = mcx_matrix(3, &[0, 1], 2);
        let d = operator_distance(&c.simulate().unwrap(), &want).unwrap();
        assert!(d <= 1e-10, "distance {d:.3e}");
        let pruned = peephole::merge_adjacent(&c, peephole::IDENTITY_TOL);
        let r = count_basic(&pruned);
        assert_eq!((r.one_qubit, r.xor), (8, 8));
    }

    #[test]
    fn mcx_dispatch_is_exact_for_every_arm() {
        // (controls, target, free wire, total wires) covering each branch.
        let cases: Vec<(Vec<usize>, usize, Option<usize>, usize)> = vec![
            (vec![], 1, None, 2),
            (vec![1], 0, None, 2),
            (vec![2, 0], 1, None, 3),
            (vec![1, 2, 3], 0, None, 4),
            (vec![0, 1, 2, 4], 3, None, 5),
            (vec![0, 2, 3, 4, 6], 5, Some(1), 7),
            (vec![0, 1, 2, 3, 4], 5, None, 6),
        ];
        for (controls, target, free, n) in cases {
            let gates = expand_mcx_onto(&controls, target, free, n).unwrap();
            let mut c = Circuit::new(n);
            for g in gates {
                c.push(g);
            }
            let want = mcx_matrix(n, &controls, target);
            let d = operator_distance(&c.simulate().unwrap(), &want).unwrap();
            assert!(d <= 1e-9, "controls {controls:?}: distance {d:.3e}");
        }
    }
}
