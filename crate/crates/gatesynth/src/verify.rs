//! Verification of synthesized circuits against reference unitaries:
//! exact equality, equality up to one global phase, and congruence modulo
//! a diagonal of relative phases. Also the sanity audit that no exact
//! synthesis of a genuine (non-scalar) controlled gate lands below the
//! universal basic-gate floor.

use crate::circuit::Circuit;
use crate::dense::{operator_distance, DenseUnitary};
use crate::mat2::Unitary2;
use crate::report::count_basic;
use crate::{C64, Error, Result};

/// Outcome of a verification: the distance actually achieved plus the
/// phase/sign data that made the comparison succeed.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOutcome {
    /// Distance after the allowed correction was applied.
    pub distance: f64,
    /// Global phase used (global-phase mode only).
    pub phase: Option<f64>,
    /// Column sign pattern used (congruent mode only).
    pub signs: Option<Vec<i8>>,
}

/// Spectral-norm comparison: `||a - b||_2 <= tol`.
pub fn equal_within(a: &DenseUnitary, b: &DenseUnitary, tol: f64) -> Result<VerifyOutcome> {
    let d = operator_distance(a, b)?;
    if d <= tol {
        Ok(VerifyOutcome { distance: d, phase: None, signs: None })
    } else {
        Err(Error::ParamRange(format!("distance {d:.3e} exceeds tolerance {tol:.3e}")))
    }
}

/// Equality up to one global phase: finds the phase `p` minimizing
/// `||a - e^{ip} b||` (the argument of `tr(b* a)`) and compares within
/// `tol`.
pub fn equal_up_to_global_phase(
    a: &DenseUnitary,
    b: &DenseUnitary,
    tol: f64,
) -> Result<VerifyOutcome> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch(a.dim(), b.dim()));
    }
    let dim = a.dim();
    let mut tr = C64::new(0.0, 0.0);
    for i in 0..dim {
        for j in 0..dim {
            tr += b.entry(j, i).conj() * a.entry(j, i);
        }
    }
    let phase = tr.arg();
    let rot = C64::new(phase.cos(), phase.sin());
    let rotated = DenseUnitary::from_matrix_unchecked(
        nalgebra::DMatrix::from_fn(dim, dim, |i, j| b.entry(i, j) * rot),
    );
    let d = operator_distance(a, &rotated)?;
    if d <= tol {
        Ok(VerifyOutcome { distance: d, phase: Some(phase), signs: None })
    } else {
        Err(Error::ParamRange(format!(
            "distance {d:.3e} exceeds tolerance {tol:.3e} even at best phase {phase:.6}"
        )))
    }
}

/// Congruence modulo relative phases: checks `a = b · diag(s)` for a column
/// sign vector `s ∈ {+1, -1}^dim`, returning the signs. Each sign is read
/// off the inner product of corresponding columns.
pub fn congruent_mod_phases(
    a: &DenseUnitary,
    b: &DenseUnitary,
    tol: f64,
) -> Result<VerifyOutcome> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch(a.dim(), b.dim()));
    }
    let dim = a.dim();
    let mut signs = Vec::with_capacity(dim);
    for col in 0..dim {
        let mut dot = 0.0f64;
        for row in 0..dim {
            dot += (b.entry(row, col).conj() * a.entry(row, col)).re;
        }
        signs.push(if dot < 0.0 { -1i8 } else { 1i8 });
    }
    let scaled = DenseUnitary::from_matrix_unchecked(nalgebra::DMatrix::from_fn(dim, dim, |i, j| {
        b.entry(i, j) * C64::new(signs[j] as f64, 0.0)
    }));
    let d = operator_distance(a, &scaled)?;
    if d <= tol {
        Ok(VerifyOutcome { distance: d, phase: None, signs: Some(signs) })
    } else {
        Err(Error::ParamRange(format!(
            "distance {d:.3e} exceeds tolerance {tol:.3e} under any column signs"
        )))
    }
}

/// Universal floor audit. Any exact basic-gate network for an m-control
/// gate whose payload is not a scalar matrix must contain at least `n - 1`
/// basic gates on an `n`-wire register (each non-target wire must be
/// touched, and the target needs at least one gate). Returns an error if
/// the payload is scalar (the floor does not apply) and reports whether the
/// circuit meets the floor.
pub fn audit_lower_bound(c: &Circuit, payload: &Unitary2) -> Result<bool> {
    let u00 = payload.entry(0, 0);
    let scalar = Unitary2::identity().scale(u00);
    if payload.distance(&scalar) <= 1e-10 {
        return Err(Error::FormMismatch(
            "payload is a scalar matrix; the gate floor does not apply".to_string(),
        ));
    }
    let r = count_basic(c);
    Ok(r.total_basic >= c.num_wires - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{Circuit, Gate};
    use crate::sampling;

    #[test]
    fn global_phase_recovers_known_rotation() {
        let n = 2;
        let mut c = Circuit::new(n);
        c.push(Gate::one_qubit(0, Unitary2::ry(0.9)));
        let a = c.simulate().unwrap();
        let phase = 0.4f64;
        let mut c2 = Circuit::new(n);
        c2.push(Gate::one_qubit(0, Unitary2::ry(0.9)));
        c2.push(Gate::one_qubit(1, Unitary2::ph(-phase)));
        let b = c2.simulate().unwrap();
        // a = e^{i 0.4} b
        let out = equal_up_to_global_phase(&a, &b, 1e-10).unwrap();
        assert!((out.phase.unwrap() - phase).abs() <= 1e-10);
        assert!(out.distance <= 1e-12);
        // Exact comparison fails for the same pair.
        assert!(equal_within(&a, &b, 1e-10).is_err());
    }

    #[test]
    fn congruence_finds_column_signs() {
        let mut rng = sampling::rng_from_seed(41);
        let b = sampling::random_dense_unitary(3, &mut rng);
        let signs: Vec<i8> = vec![1, -1, 1, 1, -1, 1, -1, 1];
        let a = DenseUnitary::from_matrix_unchecked(nalgebra::DMatrix::from_fn(8, 8, |i, j| {
            b.entry(i, j) * C64::new(signs[j] as f64, 0.0)
        }));
        let out = congruent_mod_phases(&a, &b, 1e-10).unwrap();
        assert_eq!(out.signs.unwrap(), signs);
        assert!(out.distance <= 1e-12);
        // A non-sign perturbation is rejected.
        let bad = DenseUnitary::from_matrix_unchecked(nalgebra::DMatrix::from_fn(8, 8, |i, j| {
            b.entry(i, j) * C64::new(0.0, 1.0)
        }));
        // i * b is unitary but differs from b by a non-real column scale;
        // congruence mod ±1 signs must fail.
        assert!(congruent_mod_phases(&bad, &b, 1e-10).is_err());
    }

    #[test]
    fn audit_rejects_scalar_payload_and_accepts_floor() {
        let mut c = Circuit::new(3);
        c.push(Gate::xor(0, 1));
        c.push(Gate::xor(1, 2));
        assert!(audit_lower_bound(&c, &Unitary2::ph(0.3)).is_err());
        assert!(audit_lower_bound(&c, &Unitary2::pauli_x()).unwrap());
        // One gate on three wires is below the floor.
        let mut small = Circuit::new(3);
        small.push(Gate::xor(0, 2));
        assert!(!audit_lower_bound(&small, &Unitary2::pauli_x()).unwrap());
    }
}
