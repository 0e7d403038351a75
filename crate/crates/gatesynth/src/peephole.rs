//! Peephole optimizer: merges mergeable gates, removes identities, and
//! optionally reorders commuting neighbours. Every rewrite is an exact
//! circuit identity, so optimization never changes the simulated matrix.
//!
//! Merging "sees through" intervening gates: a one-qubit gate combines with
//! the previous one-qubit gate on the same wire provided nothing in between
//! touches that wire, and a controlled gate combines with the previous gate
//! having the same controls and target provided everything in between is
//! disjoint from all of those wires. Adjacent inverse pairs (e.g. two equal
//! XORs) therefore cancel, and runs of rotations on one wire collapse to a
//! single gate.

use crate::circuit::{Circuit, Gate};
use crate::mat2::Unitary2;

/// Tolerance below which a payload counts as the identity and the gate is
/// dropped.
pub const IDENTITY_TOL: f64 = 1e-12;

/// One merging fixpoint: repeatedly sweeps the gate list, combining
/// mergeable gates and dropping any gate whose payload is within `tol` of
/// the identity, until a sweep makes no change.
pub fn merge_adjacent(c: &Circuit, tol: f64) -> Circuit {
    let mut gates = c.gates.clone();
    loop {
        let (next, changed) = merge_sweep(&gates, tol);
        gates = next;
        if !changed {
            break;
        }
    }
    Circuit { num_wires: c.num_wires, gates, ancillas: c.ancillas.clone() }
}

fn merge_sweep(gates: &[Gate], tol: f64) -> (Vec<Gate>, bool) {
    let mut out: Vec<Gate> = Vec::with_capacity(gates.len());
    let mut changed = false;
    'gates: for g in gates {
        if g.payload().is_identity(tol) {
            changed = true;
            continue;
        }
        if g.controls().is_empty() {
            let w = g.target();
            for j in (0..out.len()).rev() {
                if !out[j].touches(w) {
                    continue;
                }
                if out[j].controls().is_empty() {
                    // Same wire (it touches w and targets are its only wire).
                    let prod = g.payload().mul(out[j].payload());
                    out.remove(j);
                    if !prod.is_identity(tol) {
                        out.insert(j, Gate::one_qubit(w, prod));
                    }
                    changed = true;
                    continue 'gates;
                }
                break;
            }
        } else {
            for j in (0..out.len()).rev() {
                if out[j].disjoint(g) {
                    continue;
                }
                if out[j].controls() == g.controls() && out[j].target() == g.target() {
                    let prod = g.payload().mul(out[j].payload());
                    out.remove(j);
                    if !prod.is_identity(tol) {
                        out.insert(j, Gate::controlled(g.controls(), g.target(), prod));
                    }
                    changed = true;
                    continue 'gates;
                }
                break;
            }
        }
        out.push(g.clone());
    }
    (out, changed)
}

/// Swaps adjacent disjoint-support gates when the swap brings a mergeable
/// pair together. With see-through merging this is rarely needed, but it is
/// exposed for completeness and used by [`optimize`].
pub fn commute_window(c: &Circuit) -> Circuit {
    let mut gates = c.gates.clone();
    let mut i = 1;
    while i < gates.len() {
        if gates[i - 1].disjoint(&gates[i]) && i >= 2 && mergeable(&gates[i - 2], &gates[i]) {
            gates.swap(i - 1, i);
        }
        i += 1;
    }
    Circuit { num_wires: c.num_wires, gates, ancillas: c.ancillas.clone() }
}

fn mergeable(a: &Gate, b: &Gate) -> bool {
    if a.controls().is_empty() && b.controls().is_empty() {
        return a.target() == b.target();
    }
    a.controls() == b.controls() && a.target() == b.target()
}

/// Runs merging and commutation to a joint fixpoint.
pub fn optimize(c: &Circuit) -> Circuit {
    let mut cur = c.clone();
    for _ in 0..1000 {
        let merged = merge_adjacent(&cur, IDENTITY_TOL);
        let commuted = commute_window(&merged);
        if commuted.gates == cur.gates {
            return commuted;
        }
        cur = commuted;
    }
    cur
}

/// Identity payload check `||u - I|| <= tol`, re-exported for callers that
/// prune before pushing gates.
pub fn is_identity_payload(u: &Unitary2, tol: f64) -> bool {
    u.is_identity(tol)
}
