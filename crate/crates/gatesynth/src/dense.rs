//! Dense unitary matrices on a small register, used as the reference
//! semantics for circuits: simulation targets, verification baselines, and
//! the input format for full two-level synthesis.

use crate::{C64, Error, Result};
use nalgebra::DMatrix;

/// A dense `2^n x 2^n` unitary. Row/column index bit `n-1-w` corresponds to
/// wire `w`, so wire 0 is the most significant bit of a basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseUnitary {
    m: DMatrix<C64>,
}

impl DenseUnitary {
    /// Identity on `n` wires.
    pub fn identity(n: usize) -> Self {
        let dim = 1usize << n;
        Self { m: DMatrix::identity(dim, dim) }
    }

    /// Builds from row-major entries; the dimension must be a power of two
    /// and the matrix unitary within `dim * 1e-10` (Frobenius).
    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::ParamRange(format!("dimension {dim} is not a power of two")));
        }
        for r in &rows {
            if r.len() != dim {
                return Err(Error::DimMismatch(r.len(), dim));
            }
        }
        let m = DMatrix::from_fn(dim, dim, |i, j| rows[i][j]);
        let out = Self { m };
        let defect = out.unitarity_defect();
        let tol = dim as f64 * 1e-10;
        if defect > tol {
            return Err(Error::NotUnitary { defect, tol });
        }
        Ok(out)
    }

    /// Wraps an nalgebra matrix the caller guarantees unitary.
    pub(crate) fn from_matrix_unchecked(m: DMatrix<C64>) -> Self {
        Self { m }
    }

    /// Borrows the underlying matrix.
    pub(crate) fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    /// Matrix dimension (`2^n`).
    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    /// Number of wires (`log2` of the dimension).
    pub fn num_wires(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    /// Entry at `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.m[(row, col)]
    }

    /// Frobenius norm of `self* self - I`.
    pub fn unitarity_defect(&self) -> f64 {
        let dim = self.dim();
        let prod = self.m.adjoint() * &self.m;
        let mut acc = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                let want = if i == j { 1.0 } else { 0.0 };
                acc += (prod[(i, j)] - want).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimMismatch(self.dim(), rhs.dim()));
        }
        Ok(Self { m: &self.m * &rhs.m })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self { m: self.m.adjoint() }
    }

    /// Left-multiplies in place by the gate matrix of a one-qubit unitary
    /// embedded on `wire` (state-vector style column update).
    pub(crate) fn apply_one_qubit(&mut self, payload: &crate::mat2::Unitary2, wire: usize) {
        let dim = self.dim();
        let n = self.num_wires();
        let bit = 1usize << (n - 1 - wire);
        let u = payload.entries();
        for col in 0..dim {
            for base in 0..dim {
                if base & bit != 0 {
                    continue;
                }
                let hi = base | bit;
                let a = self.m[(base, col)];
                let b = self.m[(hi, col)];
                self.m[(base, col)] = u[0][0] * a + u[0][1] * b;
                self.m[(hi, col)] = u[1][0] * a + u[1][1] * b;
            }
        }
    }

    /// Left-multiplies in place by a controlled one-qubit gate: `payload` on
    /// `target` applied to rows where every wire in `controls` is 1.
    pub(crate) fn apply_controlled(
        &mut self,
        controls: &[usize],
        target: usize,
        payload: &crate::mat2::Unitary2,
    ) {
        let dim = self.dim();
        let n = self.num_wires();
        let tbit = 1usize << (n - 1 - target);
        let mut cmask = 0usize;
        for &c in controls {
            cmask |= 1usize << (n - 1 - c);
        }
        let u = payload.entries();
        for col in 0..dim {
            for base in 0..dim {
                if base & tbit != 0 || (base & cmask) != cmask {
                    continue;
                }
                let hi = base | tbit;
                let a = self.m[(base, col)];
                let b = self.m[(hi, col)];
                self.m[(base, col)] = u[0][0] * a + u[0][1] * b;
                self.m[(hi, col)] = u[1][0] * a + u[1][1] * b;
            }
        }
    }

    /// All entries, row-major (for serialization).
    pub fn rows(&self) -> Vec<Vec<C64>> {
        let dim = self.dim();
        (0..dim)
            .map(|i| (0..dim).map(|j| self.m[(i, j)]).collect())
            .collect()
    }
}

/// Spectral-norm distance `||a - b||_2` between two dense unitaries, via the
/// largest eigenvalue of the Hermitian matrix `(a-b)* (a-b)`.
pub fn operator_distance(a: &DenseUnitary, b: &DenseUnitary) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch(a.dim(), b.dim()));
    }
    let d = &a.m - &b.m;
    let h = d.adjoint() * &d;
    let eig = h.symmetric_eigen();
    let mut top = 0.0f64;
    for v in eig.eigenvalues.iter() {
        top = top.max(v.max(0.0));
    }
    Ok(top.sqrt())
}

/// Frobenius-norm distance `||a - b||_F`, a cheap upper bound on the
/// spectral distance.
pub fn frobenius_distance(a: &DenseUnitary, b: &DenseUnitary) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch(a.dim(), b.dim()));
    }
    Ok((&a.m - &b.m).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::Unitary2;

    #[test]
    fn distance_of_opposite_identities_is_two() {
        let n = 3;
        let id = DenseUnitary::identity(n);
        let neg = DenseUnitary::from_rows(
            (0..8)
                .map(|i| {
                    (0..8)
                        .map(|j| if i == j { C64::new(-1.0, 0.0) } else { C64::new(0.0, 0.0) })
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        let d = operator_distance(&id, &neg).unwrap();
        assert!((d - 2.0).abs() <= 1e-12, "distance {d}");
        assert!((frobenius_distance(&id, &neg).unwrap() - 2.0 * (8f64).sqrt()).abs() <= 1e-12);
    }

    #[test]
    fn dense_distance_matches_two_by_two_closed_form() {
        let mut rng = crate::sampling::rng_from_seed(21);
        for _ in 0..25 {
            let a = crate::sampling::random_unitary2(&mut rng);
            let b = crate::sampling::random_unitary2(&mut rng);
            let da = DenseUnitary::from_rows(vec![
                vec![a.entry(0, 0), a.entry(0, 1)],
                vec![a.entry(1, 0), a.entry(1, 1)],
            ])
            .unwrap();
            let db = DenseUnitary::from_rows(vec![
                vec![b.entry(0, 0), b.entry(0, 1)],
                vec![b.entry(1, 0), b.entry(1, 1)],
            ])
            .unwrap();
            let dd = operator_distance(&da, &db).unwrap();
            assert!((dd - a.distance(&b)).abs() <= 1e-10);
        }
    }

    #[test]
    fn one_qubit_application_respects_wire_order() {
        // X on wire 0 of two wires swaps the upper and lower halves.
        let mut m = DenseUnitary::identity(2);
        m.apply_one_qubit(&Unitary2::pauli_x(), 0);
        for col in 0..4 {
            for row in 0..4 {
                let want = if row ^ 0b10 == col { 1.0 } else { 0.0 };
                assert!((m.entry(row, col) - C64::new(want, 0.0)).norm() <= 1e-15);
            }
        }
    }

    #[test]
    fn rejects_non_unitary_rows() {
        let rows = vec![
            vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
            vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
        ];
        assert!(DenseUnitary::from_rows(rows).is_err());
    }
}
