//! Seeded random sampling of unitaries for tests, examples, and the
//! acceptance suite. All sampling goes through an explicit RNG so runs are
//! reproducible.

use crate::dense::DenseUnitary;
use crate::mat2::{su2_phase_split, Unitary2};
use crate::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A deterministic RNG for a given seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One standard complex Gaussian sample (Box-Muller).
fn gaussian_c64<R: Rng>(rng: &mut R) -> C64 {
    let u1: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let (s, c) = (2.0 * std::f64::consts::PI * u2).sin_cos();
    C64::new(r * c, r * s)
}

/// Haar-distributed 2x2 unitary: QR of a complex Gaussian matrix via
/// Gram-Schmidt with a positive-diagonal R factor.
pub fn random_unitary2<R: Rng>(rng: &mut R) -> Unitary2 {
    loop {
        let g = [
            [gaussian_c64(rng), gaussian_c64(rng)],
            [gaussian_c64(rng), gaussian_c64(rng)],
        ];
        // Columns of g, orthonormalized.
        let n1 = (g[0][0].norm_sqr() + g[1][0].norm_sqr()).sqrt();
        if n1 < 1e-12 {
            continue;
        }
        let q1 = [g[0][0] / n1, g[1][0] / n1];
        let proj = q1[0].conj() * g[0][1] + q1[1].conj() * g[1][1];
        let w = [g[0][1] - proj * q1[0], g[1][1] - proj * q1[1]];
        let n2 = (w[0].norm_sqr() + w[1].norm_sqr()).sqrt();
        if n2 < 1e-12 {
            continue;
        }
        let q2 = [w[0] / n2, w[1] / n2];
        return Unitary2::from_entries_unchecked([[q1[0], q2[0]], [q1[1], q2[1]]]);
    }
}

/// Haar-like random `SU(2)` matrix: a random unitary with its global phase
/// divided out.
pub fn random_su2<R: Rng>(rng: &mut R) -> Unitary2 {
    su2_phase_split(&random_unitary2(rng)).1
}

/// Random dense unitary on `n` wires (dimension `2^n`), via Gram-Schmidt on
/// a complex Gaussian matrix. Intended for small `n` (tests use `n <= 6`).
pub fn random_dense_unitary<R: Rng>(n: usize, rng: &mut R) -> DenseUnitary {
    let dim = 1usize << n;
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<C64> = (0..dim).map(|_| gaussian_c64(rng)).collect();
        for q in &cols {
            let proj: C64 = q.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
            for (vi, qi) in v.iter_mut().zip(q.iter()) {
                *vi -= proj * qi;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-9 {
            continue;
        }
        for vi in &mut v {
            *vi /= norm;
        }
        cols.push(v);
    }
    let mut rows = vec![vec![C64::new(0.0, 0.0); dim]; dim];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            rows[i][j] = *v;
        }
    }
    DenseUnitary::from_rows(rows).expect("gram-schmidt output is unitary")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::is_unitary;

    #[test]
    fn sampled_matrices_are_unitary_and_reproducible() {
        let mut rng = rng_from_seed(7);
        for _ in 0..100 {
            let u = random_unitary2(&mut rng);
            assert!(is_unitary(&u.entries(), 1e-12));
            let w = random_su2(&mut rng);
            assert!((w.det() - C64::new(1.0, 0.0)).norm() <= 1e-12);
        }
        let a = random_unitary2(&mut rng_from_seed(99));
        let b = random_unitary2(&mut rng_from_seed(99));
        assert!(a.bit_eq(&b));
    }

    #[test]
    fn dense_sampling_is_unitary() {
        let mut rng = rng_from_seed(8);
        let u = random_dense_unitary(3, &mut rng);
        assert!(u.unitarity_defect() <= 1e-12);
    }
}
