//! Synthesis of arbitrary dense unitaries.
//!
//! Any `2^n × 2^n` unitary factors into two-level rotations (each acting
//! on a pair of basis states) times a diagonal of phases. Each two-level
//! factor becomes a short chain of conditioned basis-state transpositions
//! around one fully-controlled single-qubit gate, and each residual phase
//! becomes one fully-controlled phase gate — so the whole pipeline bottoms
//! out in the multi-control constructions.

use crate::circuit::{Circuit, Gate};
use crate::dense::DenseUnitary;
use crate::mat2::{Unitary2, UNITARY_TOL};
use crate::peephole;
use crate::report::SynthesisReport;
use crate::synth::multi::synth_mcu_quadratic;
use crate::{Error, Result, C64};

/// Entries below this magnitude are treated as already eliminated.
const ELIM_TOL: f64 = 1e-13;

/// A unitary acting on the two basis states `x2 < x1` (identity
/// elsewhere); `block` row/column `0` corresponds to `x2`.
#[derive(Debug, Clone, Copy)]
pub struct TwoLevelRotation {
    pub x1: usize,
    pub x2: usize,
    pub block: Unitary2,
}

/// Unit-modulus diagonal left over after all two-level eliminations.
#[derive(Debug, Clone)]
pub struct DiagonalPhases {
    pub entries: Vec<C64>,
}

impl DiagonalPhases {
    /// True when every phase is within `tol` of `1`.
    pub fn is_trivial(&self, tol: f64) -> bool {
        self.entries.iter().all(|p| (p - C64::new(1.0, 0.0)).norm() <= tol)
    }
}

/// Factors `u` as `T_1 · T_2 · … · T_K · D` (matrix product): Givens
/// eliminations zero each column below the diagonal, working columns left
/// to right and rows bottom up. Entries already below [`ELIM_TOL`] emit
/// no rotation, so `K ≤ 2^{n−1}(2^n − 1)` with equality only for fully
/// dense inputs.
pub fn two_level_decompose(u: &DenseUnitary) -> Result<(Vec<TwoLevelRotation>, DiagonalPhases)> {
    let dim = u.dim();
    let mut m = u.matrix().clone();
    let mut ts = Vec::new();
    for col in 0..dim - 1 {
        for row in (col + 1..dim).rev() {
            let b = m[(row, col)];
            if b.norm() <= ELIM_TOL {
                continue;
            }
            let a = m[(col, col)];
            let rho = (a.norm_sqr() + b.norm_sqr()).sqrt();
            // G†·(a, b) = (ρ, 0); G has determinant one.
            let g = Unitary2::from_entries_unchecked([
                [a / rho, -b.conj() / rho],
                [b / rho, a.conj() / rho],
            ]);
            let gd = g.adjoint();
            for c in col..dim {
                let top = m[(col, c)];
                let bot = m[(row, c)];
                m[(col, c)] = gd.entry(0, 0) * top + gd.entry(0, 1) * bot;
                m[(row, c)] = gd.entry(1, 0) * top + gd.entry(1, 1) * bot;
            }
            ts.push(TwoLevelRotation { x1: row, x2: col, block: g });
        }
    }
    let entries: Vec<C64> = (0..dim).map(|i| m[(i, i)]).collect();
    for (i, p) in entries.iter().enumerate() {
        let off = (p.norm() - 1.0).abs();
        if off > dim as f64 * UNITARY_TOL {
            return Err(Error::FormMismatch(format!(
                "elimination left a non-phase diagonal entry at {i}: |{p}| - 1 = {off:.3e}"
            )));
        }
    }
    Ok((ts, DiagonalPhases { entries }))
}

/// States from `a` to `b` inclusive, flipping one differing bit per step,
/// least-significant first. Length is `popcount(a ^ b) + 1`.
pub fn gray_path(a: usize, b: usize) -> Vec<usize> {
    let mut path = vec![a];
    let mut cur = a;
    let mut diff = a ^ b;
    while diff != 0 {
        let bit = diff & diff.wrapping_neg();
        cur ^= bit;
        diff ^= bit;
        path.push(cur);
    }
    path
}

fn wire_of_bit(n: usize, bit: usize) -> usize {
    n - 1 - bit
}

/// Appends a `∧_{n−1}(payload)` conditioned on the bits of `state`: the
/// target is `target_wire`, every other wire is a control, and controls
/// reading `0` in `state` are NOT-conjugated.
fn push_conditioned_mcu(
    n: usize,
    state: usize,
    target_wire: usize,
    payload: &Unitary2,
    out: &mut Circuit,
) -> Result<()> {
    let controls: Vec<usize> = (0..n).filter(|&w| w != target_wire).collect();
    let bit = |w: usize| 1usize << (n - 1 - w);
    let zeros: Vec<usize> =
        controls.iter().copied().filter(|&w| state & bit(w) == 0).collect();
    let mut map = controls.clone();
    map.push(target_wire);
    let inner = synth_mcu_quadratic(n, payload)?.remap_wires(&map, n)?;
    for &w in &zeros {
        out.push(Gate::one_qubit(w, Unitary2::pauli_x()));
    }
    for g in inner.gates {
        out.push(g);
    }
    for &w in &zeros {
        out.push(Gate::one_qubit(w, Unitary2::pauli_x()));
    }
    Ok(())
}

fn push_two_level(n: usize, t: &TwoLevelRotation, out: &mut Circuit) -> Result<()> {
    let dim = 1usize << n;
    if t.x1 >= dim || t.x2 >= dim || t.x1 == t.x2 {
        return Err(Error::ParamRange(format!(
            "two-level states ({}, {}) out of range for {n} wires",
            t.x1, t.x2
        )));
    }
    let path = gray_path(t.x2, t.x1);
    let d = path.len() - 1;
    // Walk the x2 amplitude next to x1 with conditioned transpositions.
    let transpositions: Vec<(usize, usize)> = (1..d)
        .map(|i| {
            let b = (path[i - 1] ^ path[i]).trailing_zeros() as usize;
            (path[i], wire_of_bit(n, b))
        })
        .collect();
    for &(state, w) in &transpositions {
        push_conditioned_mcu(n, state, w, &Unitary2::pauli_x(), out)?;
    }
    // The final edge differs in one bit: one conditioned single-qubit
    // gate, oriented so block index 0 acts on the x2-side state.
    let b = (path[d - 1] ^ path[d]).trailing_zeros() as usize;
    let x = Unitary2::pauli_x();
    let payload = if (t.x1 >> b) & 1 == 1 { t.block } else { x.mul(&t.block).mul(&x) };
    push_conditioned_mcu(n, t.x1, wire_of_bit(n, b), &payload, out)?;
    for &(state, w) in transpositions.iter().rev() {
        push_conditioned_mcu(n, state, w, &Unitary2::pauli_x(), out)?;
    }
    Ok(())
}

/// One two-level rotation as a circuit on `n` wires.
pub fn synth_two_level(n: usize, t: &TwoLevelRotation) -> Result<Circuit> {
    let mut c = Circuit::new(n);
    push_two_level(n, t, &mut c)?;
    Ok(peephole::merge_adjacent(&c, peephole::IDENTITY_TOL))
}

/// Synthesizes an arbitrary dense unitary: the diagonal's nontrivial
/// phases first (one conditioned phase gate each), then the two-level
/// rotations in reverse elimination order.
pub fn synth_unitary(u: &DenseUnitary) -> Result<(Circuit, SynthesisReport)> {
    let c = peephole::merge_adjacent(&unitary_raw(u)?, peephole::IDENTITY_TOL);
    let report = SynthesisReport::for_method(&c, "general");
    Ok((c, report))
}

/// [`synth_unitary`] before the top-level merge pass (the per-rotation
/// circuits are still individually pruned).
pub(crate) fn unitary_raw(u: &DenseUnitary) -> Result<Circuit> {
    let n = u.num_wires();
    let (ts, diag) = two_level_decompose(u)?;
    let mut c = Circuit::new(n);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    for (x, phase) in diag.entries.iter().enumerate() {
        if (phase - one).norm() <= 1e-12 {
            continue;
        }
        // The phase lands exactly on basis state `x`: condition on its
        // bits and put e^{iφ} on whichever target level `x` occupies.
        let payload = if x & 1 == 0 {
            Unitary2::from_entries_unchecked([[*phase, zero], [zero, one]])
        } else {
            Unitary2::from_entries_unchecked([[one, zero], [zero, *phase]])
        };
        push_conditioned_mcu(n, x, n - 1, &payload, &mut c)?;
    }
    for t in ts.iter().rev() {
        push_two_level(n, t, &mut c)?;
    }
    Ok(c)
}
