//! One-control gates on two wires. The general network costs at most four
//! one-qubit gates and two XORs; special payload forms admit shorter
//! two-gate (plus NOT) networks, and recognizing those forms is part of
//! this module's contract.

use crate::circuit::{Circuit, Gate};
use crate::mat2::{abc_decompose, su2_phase_split, Unitary2};
use crate::peephole;
use crate::{Error, Result};

/// The pieces of the general one-control network for a payload `U`:
/// `U = Ph(delta) · W`, `W = A X B X C` with `A B C = I`, and the
/// conditional phase `E = diag(1, e^{i delta})` that absorbs `delta` onto
/// the control wire.
pub(crate) struct CuParts {
    pub e: Unitary2,
    pub a: Unitary2,
    pub b: Unitary2,
    pub c: Unitary2,
}

pub(crate) fn c_u_parts(u: &Unitary2) -> CuParts {
    let (delta, w) = su2_phase_split(u);
    let t = abc_decompose(&w).expect("phase-split factor has determinant one");
    CuParts { e: Unitary2::cond_phase(delta), a: t.a, b: t.b, c: t.c }
}

/// One-control gate for a determinant-one payload `W` on wires
/// `(control, target) = (0, 1)`: at most four one-qubit gates and two XORs,
/// with no phase correction needed.
///
/// The network runs `C, XOR, B, XOR, A` on the target; when all controls
/// read 1 the XORs conjugate `B` and `C` into `A X B X C = W`, and
/// otherwise the product telescopes to `A B C = I`.
pub fn synth_c_su2(w: &Unitary2) -> Result<Circuit> {
    let det_err = (w.det() - crate::C64::new(1.0, 0.0)).norm();
    if det_err > 1e-9 {
        return Err(Error::NotSpecialUnitary(det_err));
    }
    let t = abc_decompose(w)?;
    let mut c = Circuit::new(2);
    c.push(Gate::one_qubit(1, t.c));
    c.push(Gate::xor(0, 1));
    c.push(Gate::one_qubit(1, t.b));
    c.push(Gate::xor(0, 1));
    c.push(Gate::one_qubit(1, t.a));
    Ok(peephole::merge_adjacent(&c, peephole::IDENTITY_TOL))
}

/// One-control phase gate `∧_1(Ph(delta))`: a single one-qubit gate
/// `diag(1, e^{i delta})` on the control wire.
pub fn synth_c_phase(delta: f64) -> Circuit {
    let mut c = Circuit::new(2);
    c.push(Gate::one_qubit(0, Unitary2::cond_phase(delta)));
    peephole::merge_adjacent(&c, peephole::IDENTITY_TOL)
}

/// General one-control `U(2)` gate on wires `(0, 1)`: the determinant-one
/// network plus one conditional-phase gate on the control. At most four
/// one-qubit gates and two XORs after pruning.
pub fn synth_c_u(u: &Unitary2) -> Circuit {
    let parts = c_u_parts(u);
    let mut c = Circuit::new(2);
    c.push(Gate::one_qubit(0, parts.e));
    c.push(Gate::one_qubit(1, parts.c));
    c.push(Gate::xor(0, 1));
    c.push(Gate::one_qubit(1, parts.b));
    c.push(Gate::xor(0, 1));
    c.push(Gate::one_qubit(1, parts.a));
    peephole::merge_adjacent(&c, peephole::IDENTITY_TOL)
}

/// Detects the symmetric form `W = Rz(alpha) Ry(theta) Rz(alpha)` (with the
/// same z angle on both sides) and returns `(alpha, theta)` when `w` is
/// within `1e-9` of such a matrix.
///
/// For a determinant-one `W = [[w00, w01], [-conj(w01), conj(w00)]]` of this
/// form, `w01` is `e^{i·0}·sin(theta/2)`-real after factoring the symmetric
/// phases, so the angles can be read off directly: `theta` from the real
/// part of `w01` against `|w00|`, and `alpha` from `arg(w00)`.
fn detect_symmetric_zyz(w: &Unitary2) -> Option<(f64, f64)> {
    let w00 = w.entry(0, 0);
    let w01 = w.entry(0, 1);
    // Gauge: a global sign on (theta, alpha) is irrelevant; pick w01.re >= 0.
    let theta = 2.0 * w01.re.atan2(w00.norm());
    let alpha = if w00.norm() < 1e-12 { 0.0 } else { w00.arg() };
    let rebuilt = Unitary2::rz(alpha)
        .mul(&Unitary2::ry(theta))
        .mul(&Unitary2::rz(alpha));
    if rebuilt.distance(w) <= 1e-9 {
        Some((alpha, theta))
    } else {
        None
    }
}

/// One-control gate for payloads of the symmetric form
/// `W = Rz(alpha) Ry(theta) Rz(alpha)`: two one-qubit gates and two XORs,
/// `XOR, A†, XOR, A` with `A = Rz(alpha) Ry(theta/2)`.
///
/// Rejects payloads not of this form (e.g. the NOT gate, whose determinant
/// is -1, or any rotation with an x component).
pub fn synth_c_ab(w: &Unitary2) -> Result<Circuit> {
    let (alpha, theta) = detect_symmetric_zyz(w).ok_or_else(|| {
        Error::FormMismatch("payload is not of the symmetric rz-ry-rz form".to_string())
    })?;
    let a = Unitary2::rz(alpha).mul(&Unitary2::ry(theta / 2.0));
    let mut c = Circuit::new(2);
    c.push(Gate::xor(0, 1));
    c.push(Gate::one_qubit(1, a.adjoint()));
    c.push(Gate::xor(0, 1));
    c.push(Gate::one_qubit(1, a));
    Ok(peephole::merge_adjacent(&c, peephole::IDENTITY_TOL))
}

/// One-control gate for payloads `V` such that `V·X` has the symmetric
/// rz-ry-rz form: two one-qubit gates and one XOR, `A†, XOR, A`.
///
/// Writing `W = V·X = A X A†`, the network `A† then XOR then A` applies
/// `A X A† = W` against a NOT, i.e. `V` exactly, when the control is set,
/// and identity otherwise. NOT itself satisfies this with `A = I` (the bare
/// XOR); rotations about axes in the y-z plane conjugated suitably also
/// qualify, e.g. the Pauli y and z matrices.
pub fn synth_c_v(v: &Unitary2) -> Result<Circuit> {
    let w = v.mul(&Unitary2::pauli_x());
    let (alpha, theta) = detect_symmetric_zyz(&w).ok_or_else(|| {
        Error::FormMismatch("payload times NOT is not of the symmetric rz-ry-rz form".to_string())
    })?;
    // W = Rz(a) Ry(t) Rz(a) = A X A† X with A = Rz(a) Ry(t/2), so
    // V = W X = A X A†.
    let a = Unitary2::rz(alpha).mul(&Unitary2::ry(theta / 2.0));
    let mut c = Circuit::new(2);
    c.push(Gate::one_qubit(1, a.adjoint()));
    c.push(Gate::xor(0, 1));
    c.push(Gate::one_qubit(1, a));
    Ok(peephole::merge_adjacent(&c, peephole::IDENTITY_TOL))
}

/// Shared emission helper: the general one-control network as raw gates on
/// arbitrary wires, in execution order
/// `E(control), C(t), XOR, B(t), XOR, A(t)`.
pub(crate) fn c_u_gates(control: usize, target: usize, parts: &CuParts) -> Vec<Gate> {
    vec![
        Gate::one_qubit(control, parts.e),
        Gate::one_qubit(target, parts.c),
        Gate::xor(control, target),
        Gate::one_qubit(target, parts.b),
        Gate::xor(control, target),
        Gate::one_qubit(target, parts.a),
    ]
}

/// Mirror of [`c_u_gates`] implementing the adjoint network
/// `A†(t), XOR, B†(t), XOR, C†(t), E†(control)`.
pub(crate) fn c_u_gates_dagger(control: usize, target: usize, parts: &CuParts) -> Vec<Gate> {
    vec![
        Gate::one_qubit(target, parts.a.adjoint()),
        Gate::xor(control, target),
        Gate::one_qubit(target, parts.b.adjoint()),
        Gate::xor(control, target),
        Gate::one_qubit(target, parts.c.adjoint()),
        Gate::one_qubit(control, parts.e.adjoint()),
    ]
}
