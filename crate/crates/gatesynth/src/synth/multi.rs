//! Multi-control single-qubit gates.
//!
//! Five constructions with different cost/resource trade-offs:
//!
//! - [`synth_graycode`]: no spare wires, exponential cost — `2^m − 1`
//!   controlled roots plus `2^m − 2` XORs, expanding to `2^{m+1}`
//!   one-qubit gates and `3·2^m − 4` XORs.
//! - [`synth_mcu_quadratic`]: no spare wires, quadratic cost — each
//!   recursion level peels one control with two one-control roots and two
//!   many-control NOTs that borrow the idle target wire.
//! - [`synth_mcu_approx`]: quadratic recursion truncated once the dropped
//!   tail's operator-norm error fits the budget; cost falls to
//!   `O(n · log(1/eps))`.
//! - [`synth_mcsu2_linear`]: determinant-one payloads on `n` wires in
//!   linear cost with zero phase corrections.
//! - [`synth_mcu_ancilla`]: one zeroed ancilla buys the general payload at
//!   linear cost.

use crate::circuit::{Ancilla, Circuit, Gate};
use crate::mat2::{abc_decompose, unitary_root, Unitary2};
use crate::peephole;
use crate::synth::mcx::expand_mcx_onto;
use crate::synth::three_bit::expand_cc_u;
use crate::synth::two_bit::{c_u_gates, c_u_gates_dagger, c_u_parts, synth_c_su2};
use crate::{Error, Result};

/// Register size at which [`synth_mcu_quadratic`] switches from the
/// gray-code network to the quadratic recursion. Below this the
/// exponential network is still cheaper.
pub const DEFAULT_CROSSOVER: usize = 9;

/// Binary-reflected gray code: successive values differ in one bit.
fn brgc(k: usize) -> usize {
    k ^ (k >> 1)
}

fn high_bit(mask: usize) -> usize {
    debug_assert!(mask != 0);
    (usize::BITS - 1 - mask.leading_zeros()) as usize
}

/// `∧_m(U)` on `m + 1` wires (controls `0..m`, target `m`) from two-wire
/// gates only: `2^m − 1` one-control applications of `V^{±1}` with
/// `V^{2^{m−1}} = U`, one per nonempty control subset in gray-code order,
/// plus `2^m − 2` XORs that maintain the subset parity on a carrier wire.
///
/// Step `k` applies `V` when `brgc(k)` has odd weight (odd `k`) and `V†`
/// otherwise; the exponents sum to `2^{m−1} · AND(controls)` by
/// inclusion–exclusion, and every carrier wire ends restored.
pub fn synth_graycode(m: usize, u: &Unitary2) -> Result<Circuit> {
    if m < 2 {
        return Err(Error::ParamRange(format!(
            "gray-code network needs at least two controls, got m={m}"
        )));
    }
    if m > 24 {
        return Err(Error::ParamRange(format!(
            "gray-code network of m={m} controls would emit ~2^{} gates",
            m + 1
        )));
    }
    let v = unitary_root(u, (m - 1) as u32);
    let vd = v.adjoint();
    let mut c = Circuit::new(m + 1);
    for k in 1..(1usize << m) {
        let mask = brgc(k);
        let carrier = high_bit(mask);
        if k > 1 {
            let prev = brgc(k - 1);
            let prev_carrier = high_bit(prev);
            if carrier == prev_carrier {
                // Same carrier: fold the flipped control into the parity.
                let changed = high_bit(mask ^ prev);
                c.push(Gate::xor(changed, carrier));
            } else {
                // Carrier moved up: seed it with the parity accumulated so far.
                c.push(Gate::xor(prev_carrier, carrier));
            }
        }
        c.push(Gate::controlled(&[carrier], m, if k % 2 == 1 { v } else { vd }));
    }
    Ok(c)
}

/// Basic-gate expansion of [`synth_graycode`]: each controlled root
/// becomes its one-control network (the inverse steps use the mirrored
/// network), and the seams between consecutive blocks each merge one pair
/// of one-qubit gates, landing on exactly `2^{m+1}` one-qubit gates and
/// `3·2^m − 4` XORs.
pub fn expand_graycode(m: usize, u: &Unitary2) -> Result<Circuit> {
    Ok(peephole::optimize(&expand_graycode_raw(m, u)?))
}

/// [`expand_graycode`] before the merge pass: every controlled root spliced
/// in full, seam cancellations still present.
pub(crate) fn expand_graycode_raw(m: usize, u: &Unitary2) -> Result<Circuit> {
    let cv_level = synth_graycode(m, u)?;
    let v = unitary_root(u, (m - 1) as u32);
    let parts = c_u_parts(&v);
    let mut c = Circuit::new(m + 1);
    for g in &cv_level.gates {
        if g.tag() == crate::circuit::GateTag::Xor {
            c.push(g.clone());
        } else if g.payload().bit_eq(&v) {
            for h in c_u_gates(g.controls()[0], m, &parts) {
                c.push(h);
            }
        } else {
            for h in c_u_gates_dagger(g.controls()[0], m, &parts) {
                c.push(h);
            }
        }
    }
    Ok(c)
}

/// `∧_{n−1}(U)` on `n` wires with no spare wires at quadratic cost, using
/// the default gray-code crossover.
pub fn synth_mcu_quadratic(n: usize, u: &Unitary2) -> Result<Circuit> {
    synth_mcu_quadratic_with_crossover(n, u, DEFAULT_CROSSOVER)
}

/// [`synth_mcu_quadratic`] with an explicit crossover: registers smaller
/// than `crossover` use the gray-code expansion, larger ones recurse.
///
/// A recursion level on `s` active wires peels the top control `c`:
/// `∧_1(V)` on `(c → t)`, an `(s−2)`-control NOT onto `c` borrowing the
/// idle target `t`, `∧_1(V†)`, the NOT again, then the residual
/// `∧_{s−2}(V)` on the remaining actives — `V² = ` the current payload.
/// The exponent on the target telescopes to `2 · c · AND(rest)`.
pub fn synth_mcu_quadratic_with_crossover(
    n: usize,
    u: &Unitary2,
    crossover: usize,
) -> Result<Circuit> {
    Ok(peephole::optimize(&quadratic_raw(n, u, crossover)?))
}

/// [`synth_mcu_quadratic_with_crossover`] before the merge pass.
pub(crate) fn quadratic_raw(n: usize, u: &Unitary2, crossover: usize) -> Result<Circuit> {
    if n == 0 {
        return Err(Error::ParamRange("need at least one wire".into()));
    }
    if crossover < 4 {
        return Err(Error::ParamRange(format!(
            "crossover below 4 is meaningless (three-wire networks are exact), got {crossover}"
        )));
    }
    let active: Vec<usize> = (0..n).collect();
    let mut c = Circuit::new(n);
    quad_rec(&active, u, crossover, n, &mut c)?;
    Ok(c)
}

fn quad_rec(
    active: &[usize],
    w: &Unitary2,
    crossover: usize,
    n: usize,
    out: &mut Circuit,
) -> Result<()> {
    let s = active.len();
    match s {
        1 => out.push(Gate::one_qubit(active[0], *w)),
        2 => {
            let p = c_u_parts(w);
            for g in c_u_gates(active[0], active[1], &p) {
                out.push(g);
            }
        }
        3 => {
            for g in expand_cc_u(w).remap_wires(active, n)?.gates {
                out.push(g);
            }
        }
        s if s < crossover => {
            for g in expand_graycode(s - 1, w)?.remap_wires(active, n)?.gates {
                out.push(g);
            }
        }
        _ => {
            let v = unitary_root(w, 1);
            emit_peel_level(active, &v, n, out)?;
            let mut rest = active[..s - 2].to_vec();
            rest.push(active[s - 1]);
            quad_rec(&rest, &v, crossover, n, out)?;
        }
    }
    Ok(())
}

/// Emits `CV, MCX, CV†, MCX` for one recursion level: `c = active[s−2]`
/// is the peeled control, `t = active[s−1]` the target (borrowed by the
/// NOTs while it is idle).
fn emit_peel_level(active: &[usize], v: &Unitary2, n: usize, out: &mut Circuit) -> Result<()> {
    let s = active.len();
    let c = active[s - 2];
    let t = active[s - 1];
    let p = c_u_parts(v);
    for g in c_u_gates(c, t, &p) {
        out.push(g);
    }
    let mcx = expand_mcx_onto(&active[..s - 2], c, Some(t), n)?;
    for g in &mcx {
        out.push(g.clone());
    }
    for g in c_u_gates_dagger(c, t, &p) {
        out.push(g);
    }
    for g in mcx {
        out.push(g);
    }
    Ok(())
}

/// Number of root-halvings needed before dropping the residual gate keeps
/// the operator-norm error at or below `eps`.
fn approx_levels(eps: f64) -> Result<usize> {
    let valid = eps.is_finite() && eps > 0.0;
    if !valid {
        return Err(Error::ParamRange(format!("approximation budget must be positive, got {eps}")));
    }
    let k = (std::f64::consts::PI / eps).log2().ceil();
    Ok(if k <= 0.0 { 0 } else { k as usize })
}

/// Operator-norm error the circuit from [`synth_mcu_approx`] actually
/// incurs: zero when the recursion bottoms out exactly (`k ≥ n − 3`),
/// otherwise the distance from the dropped residual root to the identity
/// — at most `π / 2^k ≤ eps`.
pub fn approx_error_bound(n: usize, u: &Unitary2, eps: f64) -> Result<f64> {
    let k = approx_levels(eps)?;
    if n <= 3 || k >= n - 3 {
        return Ok(0.0);
    }
    Ok(unitary_root(u, k as u32).distance(&Unitary2::identity()))
}

/// `∧_{n−1}(U)` within operator-norm error `eps`: the quadratic recursion
/// with the residual tail dropped once its payload root is within `eps`
/// of the identity. `⌈log2(π/eps)⌉` levels always suffice, so the cost is
/// `O(n log(1/eps))` instead of quadratic; generous budgets can yield an
/// empty circuit.
pub fn synth_mcu_approx(n: usize, u: &Unitary2, eps: f64) -> Result<Circuit> {
    Ok(peephole::optimize(&approx_raw(n, u, eps)?))
}

/// [`synth_mcu_approx`] before the merge pass.
pub(crate) fn approx_raw(n: usize, u: &Unitary2, eps: f64) -> Result<Circuit> {
    if n == 0 {
        return Err(Error::ParamRange("need at least one wire".into()));
    }
    let k = approx_levels(eps)?;
    let active: Vec<usize> = (0..n).collect();
    let mut c = Circuit::new(n);
    approx_rec(&active, u, k, n, &mut c)?;
    Ok(c)
}

fn approx_rec(
    active: &[usize],
    w: &Unitary2,
    remaining: usize,
    n: usize,
    out: &mut Circuit,
) -> Result<()> {
    let s = active.len();
    match s {
        1 => out.push(Gate::one_qubit(active[0], *w)),
        2 => {
            let p = c_u_parts(w);
            for g in c_u_gates(active[0], active[1], &p) {
                out.push(g);
            }
        }
        3 => {
            for g in expand_cc_u(w).remap_wires(active, n)?.gates {
                out.push(g);
            }
        }
        _ => {
            if remaining == 0 {
                return Ok(()); // Drop the residual: its payload is within budget of I.
            }
            let v = unitary_root(w, 1);
            emit_peel_level(active, &v, n, out)?;
            let mut rest = active[..s - 2].to_vec();
            rest.push(active[s - 1]);
            approx_rec(&rest, &v, remaining - 1, n, out)?;
        }
    }
    Ok(())
}

/// `∧_{n−1}(W)` for a determinant-one payload at linear cost with zero
/// phase corrections: with `W = A·X·B·X·C` and `A·B·C = I`, run
/// `∧_1(C), MCX, ∧_1(B), MCX, ∧_1(A)` where the one-control gates sit on
/// `(n−2 → n−1)` and the NOTs take controls `0..n−2` onto the target,
/// borrowing the idle wire `n−2`. Either control block failing leaves the
/// product telescoping to the identity.
pub fn synth_mcsu2_linear(n: usize, w: &Unitary2) -> Result<Circuit> {
    Ok(peephole::optimize(&su2_linear_raw(n, w)?))
}

/// [`synth_mcsu2_linear`] before the merge pass.
pub(crate) fn su2_linear_raw(n: usize, w: &Unitary2) -> Result<Circuit> {
    if n < 2 {
        return Err(Error::ParamRange(format!(
            "a controlled gate needs at least two wires, got n={n}"
        )));
    }
    let det_err = (w.det() - crate::C64::new(1.0, 0.0)).norm();
    if det_err > 1e-9 {
        return Err(Error::NotSpecialUnitary(det_err));
    }
    let t = abc_decompose(w)?;
    let controls: Vec<usize> = (0..n - 2).collect();
    let mcx = expand_mcx_onto(&controls, n - 1, Some(n - 2), n)?;
    let mut c = Circuit::new(n);
    let push_block = |c: &mut Circuit, payload: &Unitary2| -> Result<()> {
        for g in synth_c_su2(payload)?.remap_wires(&[n - 2, n - 1], n)?.gates {
            c.push(g);
        }
        Ok(())
    };
    push_block(&mut c, &t.c)?;
    c.gates.extend(mcx.iter().cloned());
    push_block(&mut c, &t.b)?;
    c.gates.extend(mcx.iter().cloned());
    push_block(&mut c, &t.a)?;
    Ok(c)
}

/// `∧_{n−2}(U)` at linear cost using wire `n−2` as a zeroed, restored
/// ancilla: the controls are ANDed onto the ancilla by a many-control NOT
/// (borrowing the idle target), a one-control `U` fires off the ancilla,
/// and the NOT repeats to restore it.
pub fn synth_mcu_ancilla(n: usize, u: &Unitary2) -> Result<Circuit> {
    Ok(peephole::optimize(&ancilla_raw(n, u)?))
}

/// [`synth_mcu_ancilla`] before the merge pass.
pub(crate) fn ancilla_raw(n: usize, u: &Unitary2) -> Result<Circuit> {
    if n < 3 {
        return Err(Error::ParamRange(format!(
            "the ancilla construction needs n >= 3 wires, got n={n}"
        )));
    }
    let controls: Vec<usize> = (0..n - 2).collect();
    let mcx = expand_mcx_onto(&controls, n - 2, Some(n - 1), n)?;
    let mut c = Circuit::new(n);
    c.ancillas.push(Ancilla { wire: n - 2, restored: true });
    for g in &mcx {
        c.push(g.clone());
    }
    let p = c_u_parts(u);
    for g in c_u_gates(n - 2, n - 1, &p) {
        c.push(g);
    }
    for g in mcx {
        c.push(g);
    }
    Ok(c)
}
