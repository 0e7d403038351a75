//! 2x2 unitary matrices and the decompositions every synthesis routine
//! builds on: phase/SU(2) splitting, z-y-z Euler angles, the conjugation
//! triple used by single-control networks, and principal 2^k-th roots.

use crate::{C64, Error, Result};

/// Default tolerance for unitarity checks.
pub const UNITARY_TOL: f64 = 1e-10;

/// A 2x2 complex matrix, stored row-major, that callers treat as unitary.
///
/// Constructors that take raw entries validate unitarity; the named
/// constructors ([`Unitary2::ry`], [`Unitary2::pauli_x`], ...) are exact by
/// construction. Products and adjoints of unitaries stay unitary, so no
/// re-validation happens on arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2 {
    e: [[C64; 2]; 2],
}

#[inline]
fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Measures how far `m` is from being unitary: the largest absolute
/// deviation of `m* m` from the identity, entry-wise.
pub fn unitarity_defect(m: &[[C64; 2]; 2]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            // (m* m)[i][j] = sum_k conj(m[k][i]) m[k][j]
            let mut s = C64::new(0.0, 0.0);
            for k in 0..2 {
                s += m[k][i].conj() * m[k][j];
            }
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((s - want).norm());
        }
    }
    worst
}

/// True when `m* m` is the identity within `tol`.
pub fn is_unitary(m: &[[C64; 2]; 2], tol: f64) -> bool {
    unitarity_defect(m) <= tol
}

impl Unitary2 {
    /// Builds from raw entries, validating unitarity within [`UNITARY_TOL`].
    pub fn from_entries(e: [[C64; 2]; 2]) -> Result<Self> {
        Self::from_entries_with_tol(e, UNITARY_TOL)
    }

    /// Builds from raw entries, validating unitarity within `tol`.
    pub fn from_entries_with_tol(e: [[C64; 2]; 2], tol: f64) -> Result<Self> {
        let defect = unitarity_defect(&e);
        if defect > tol {
            return Err(Error::NotUnitary { defect, tol });
        }
        Ok(Self { e })
    }

    /// Trusted constructor for matrices that are unitary by construction.
    pub(crate) fn from_entries_unchecked(e: [[C64; 2]; 2]) -> Self {
        Self { e }
    }

    /// Identity matrix.
    pub fn identity() -> Self {
        Self { e: [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]] }
    }

    /// Pauli x (the NOT gate): `[[0, 1], [1, 0]]`.
    pub fn pauli_x() -> Self {
        Self { e: [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]] }
    }

    /// Pauli y: `[[0, -i], [i, 0]]`.
    pub fn pauli_y() -> Self {
        Self { e: [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]] }
    }

    /// Pauli z: `diag(1, -1)`.
    pub fn pauli_z() -> Self {
        Self { e: [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]] }
    }

    /// Rotation about y: `[[cos t/2, sin t/2], [-sin t/2, cos t/2]]`.
    pub fn ry(theta: f64) -> Self {
        let (s, co) = (theta / 2.0).sin_cos();
        Self { e: [[c(co, 0.0), c(s, 0.0)], [c(-s, 0.0), c(co, 0.0)]] }
    }

    /// Rotation about z: `diag(e^{i a/2}, e^{-i a/2})`.
    pub fn rz(alpha: f64) -> Self {
        let (s, co) = (alpha / 2.0).sin_cos();
        Self { e: [[c(co, s), c(0.0, 0.0)], [c(0.0, 0.0), c(co, -s)]] }
    }

    /// Rotation about x: `[[cos t/2, i sin t/2], [i sin t/2, cos t/2]]`.
    pub fn rx(theta: f64) -> Self {
        let (s, co) = (theta / 2.0).sin_cos();
        Self { e: [[c(co, 0.0), c(0.0, s)], [c(0.0, s), c(co, 0.0)]] }
    }

    /// Global phase: `e^{i d} I`.
    pub fn ph(delta: f64) -> Self {
        let p = c(delta.cos(), delta.sin());
        Self { e: [[p, c(0.0, 0.0)], [c(0.0, 0.0), p]] }
    }

    /// The one-parameter family `i·Rx(theta)`; at `theta = pi` this is the
    /// NOT gate, making the three-wire controlled version a Toffoli.
    pub fn deutsch(theta: f64) -> Self {
        let (s, co) = (theta / 2.0).sin_cos();
        Self { e: [[c(0.0, co), c(-s, 0.0)], [c(-s, 0.0), c(0.0, co)]] }
    }

    /// Diagonal phase injector `diag(1, e^{i d})`, the single gate worth of
    /// conditioning a one-control network needs on its control wire.
    pub fn cond_phase(delta: f64) -> Self {
        Self {
            e: [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(delta.cos(), delta.sin())]],
        }
    }

    /// Entry at row `r`, column `col`.
    #[inline]
    pub fn entry(&self, r: usize, col: usize) -> C64 {
        self.e[r][col]
    }

    /// All four entries, row-major.
    pub fn entries(&self) -> [[C64; 2]; 2] {
        self.e
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let a = &self.e;
        let b = &rhs.e;
        let mut out = [[c(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self { e: out }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            e: [
                [self.e[0][0].conj(), self.e[1][0].conj()],
                [self.e[0][1].conj(), self.e[1][1].conj()],
            ],
        }
    }

    /// Determinant.
    pub fn det(&self) -> C64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    /// Trace.
    pub fn trace(&self) -> C64 {
        self.e[0][0] + self.e[1][1]
    }

    /// Spectral-norm distance `||self - other||_2`, computed in closed form
    /// from the Frobenius norm and determinant of the difference.
    pub fn distance(&self, other: &Self) -> f64 {
        let mut g = 0.0f64;
        let mut d = [[c(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                d[i][j] = self.e[i][j] - other.e[i][j];
                g += d[i][j].norm_sqr();
            }
        }
        let det = (d[0][0] * d[1][1] - d[0][1] * d[1][0]).norm_sqr();
        // Singular values s1 >= s2 of a 2x2 matrix satisfy
        // s1^2 + s2^2 = g and s1^2 s2^2 = |det|^2.
        let disc = (g * g - 4.0 * det).max(0.0).sqrt();
        ((g + disc) / 2.0).sqrt()
    }

    /// True when within `tol` (spectral norm) of the identity.
    pub fn is_identity(&self, tol: f64) -> bool {
        self.distance(&Self::identity()) <= tol
    }

    /// True when bitwise identical to `other` (used by the text format to
    /// decide whether a payload can be printed under a gate name).
    pub fn bit_eq(&self, other: &Self) -> bool {
        for i in 0..2 {
            for j in 0..2 {
                if self.e[i][j].re.to_bits() != other.e[i][j].re.to_bits()
                    || self.e[i][j].im.to_bits() != other.e[i][j].im.to_bits()
                {
                    return false;
                }
            }
        }
        true
    }

    /// Scales by a complex unit (internal helper; callers keep |s| = 1).
    pub(crate) fn scale(&self, s: C64) -> Self {
        let mut out = self.e;
        for row in &mut out {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        Self { e: out }
    }
}

impl std::ops::Mul for Unitary2 {
    type Output = Unitary2;
    fn mul(self, rhs: Unitary2) -> Unitary2 {
        Unitary2::mul(&self, &rhs)
    }
}

/// Spectral-norm distance between two 2x2 unitaries.
pub fn operator_distance(a: &Unitary2, b: &Unitary2) -> f64 {
    a.distance(b)
}

/// z-y-z Euler angles of a `U(2)` matrix:
/// `U = Ph(delta) · Rz(alpha) · Ry(theta) · Rz(beta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerDecomposition {
    /// Global phase, in `(-pi, pi]`.
    pub delta: f64,
    /// First z angle.
    pub alpha: f64,
    /// y angle, in `[0, pi]`.
    pub theta: f64,
    /// Second z angle.
    pub beta: f64,
}

/// Splits a `U(2)` matrix into a global phase and an `SU(2)` factor:
/// `U = Ph(delta) · W` with `det W = 1` and `delta` in `(-pi, pi]`.
///
/// `delta` is `arg(det U) / 2`, which lands in `(-pi/2, pi/2]`; for
/// determinant-one inputs this picks `delta = 0` rather than `pi`.
pub fn su2_phase_split(u: &Unitary2) -> (f64, Unitary2) {
    let delta = u.det().arg() / 2.0;
    let w = u.scale(C64::new(delta.cos(), -delta.sin()));
    (delta, w)
}

/// Computes z-y-z Euler angles. The reconstruction
/// `Ph(delta) Rz(alpha) Ry(theta) Rz(beta)` reproduces the input to
/// floating-point accuracy; the angle gauge at `theta ∈ {0, pi}` fixes
/// `beta = 0`.
pub fn euler_zyz(u: &Unitary2) -> EulerDecomposition {
    let (delta, w) = su2_phase_split(u);
    let w00 = w.entry(0, 0);
    let w01 = w.entry(0, 1);
    let (r00, r01) = (w00.norm(), w01.norm());
    let theta = 2.0 * r01.atan2(r00);
    let (alpha, beta) = if r01 == 0.0 {
        (2.0 * w00.arg(), 0.0)
    } else if r00 == 0.0 {
        (2.0 * w01.arg(), 0.0)
    } else {
        (w00.arg() + w01.arg(), w00.arg() - w01.arg())
    };
    EulerDecomposition { delta, alpha, theta, beta }
}

/// The conjugation triple for one-control networks: three `SU(2)` matrices
/// with `A · B · C = I` and `A · X · B · X · C = W`, where `X` is the NOT
/// gate. Requires `det W = 1`.
#[derive(Debug, Clone, Copy)]
pub struct AbcTriple {
    pub a: Unitary2,
    pub b: Unitary2,
    pub c: Unitary2,
}

/// Decomposes a determinant-one matrix `W` into its conjugation triple.
///
/// With Euler angles `W = Rz(alpha) Ry(theta) Rz(beta)`, the triple is
/// `A = Rz(alpha) Ry(theta/2)`, `B = Ry(-theta/2) Rz(-(alpha+beta)/2)`,
/// `C = Rz((beta-alpha)/2)`; conjugating `B` and `C` by NOT flips the signs
/// of their angles, which telescopes to `W`.
pub fn abc_decompose(w: &Unitary2) -> Result<AbcTriple> {
    let det_err = (w.det() - C64::new(1.0, 0.0)).norm();
    if det_err > 1e-9 {
        return Err(Error::NotSpecialUnitary(det_err));
    }
    let e = euler_zyz(w);
    let a = Unitary2::rz(e.alpha).mul(&Unitary2::ry(e.theta / 2.0));
    let b = Unitary2::ry(-e.theta / 2.0).mul(&Unitary2::rz(-(e.alpha + e.beta) / 2.0));
    let c = Unitary2::rz((e.beta - e.alpha) / 2.0);
    Ok(AbcTriple { a, b, c })
}

/// Eigendecomposition of a 2x2 unitary: unit eigenvalues and an orthonormal
/// eigenbasis. Scalar matrices use the trivial basis.
fn eigen_unitary(u: &Unitary2) -> ([C64; 2], [[C64; 2]; 2]) {
    let e = u.entries();
    let off = e[0][1].norm() + e[1][0].norm();
    let diag_gap = (e[0][0] - e[1][1]).norm();
    if off <= 1e-14 && diag_gap <= 1e-14 {
        // Scalar within noise: both eigenvalues equal the diagonal.
        return ([e[0][0], e[0][0]], [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
    }
    let tr = u.trace();
    let det = u.det();
    let disc = (tr * tr - det.scale(4.0)).sqrt();
    let l1 = (tr + disc).scale(0.5);
    let l2 = (tr - disc).scale(0.5);
    // Eigenvector for l1; pick the better-conditioned of the two columns of
    // (U - l1 I)'s kernel description.
    let cand_a = [e[0][1], l1 - e[0][0]];
    let cand_b = [l1 - e[1][1], e[1][0]];
    let na = (cand_a[0].norm_sqr() + cand_a[1].norm_sqr()).sqrt();
    let nb = (cand_b[0].norm_sqr() + cand_b[1].norm_sqr()).sqrt();
    let (v, n) = if na >= nb { (cand_a, na) } else { (cand_b, nb) };
    let v1 = [v[0] / n, v[1] / n];
    // A unitary is normal, so the orthogonal complement of an eigenvector is
    // the other eigenvector.
    let v2 = [-v1[1].conj(), v1[0].conj()];
    ([l1, l2], [v1, v2])
}

/// Principal `2^k`-th root: the unique unitary `V` with `V^(2^k) = U` whose
/// eigenvalue arguments are those of `U` divided by `2^k`. Consequently
/// `||V - I||_2 <= pi / 2^k`, and taking roots commutes with itself:
/// the root of the root is the root of order one deeper.
pub fn unitary_root(u: &Unitary2, k: u32) -> Unitary2 {
    roots_chain(u, k).pop().unwrap_or(*u)
}

/// The chain `V_1, V_2, ..., V_k` of principal roots with `V_j^(2^j) = U`,
/// computed from a single eigendecomposition so the chain is exactly
/// consistent (`V_{j+1}` is the principal square root of `V_j`).
pub fn roots_chain(u: &Unitary2, k: u32) -> Vec<Unitary2> {
    let (vals, vecs) = eigen_unitary(u);
    let args = [vals[0].arg(), vals[1].arg()];
    let mut out = Vec::with_capacity(k as usize);
    for j in 1..=k {
        let scale = (2.0f64).powi(j as i32);
        let r = [args[0] / scale, args[1] / scale];
        let rv = [C64::new(r[0].cos(), r[0].sin()), C64::new(r[1].cos(), r[1].sin())];
        // V = P diag(rv) P*
        let mut m = [[c(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for jj in 0..2 {
                // P[:, s] = vecs[s]; entry(i, jj) = sum_s vecs[s][i] rv[s] conj(vecs[s][jj])
                let mut acc = c(0.0, 0.0);
                for s in 0..2 {
                    acc += vecs[s][i] * rv[s] * vecs[s][jj].conj();
                }
                m[i][jj] = acc;
            }
        }
        out.push(Unitary2::from_entries_unchecked(m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use rand::SeedableRng;

    const EPS: f64 = 1e-12;

    fn assert_close(a: &Unitary2, b: &Unitary2, tol: f64) {
        let d = a.distance(b);
        assert!(d <= tol, "distance {d:.3e} > {tol:.3e}\n{a:?}\nvs\n{b:?}");
    }

    #[test]
    fn named_constructors_are_unitary() {
        for u in [
            Unitary2::identity(),
            Unitary2::pauli_x(),
            Unitary2::pauli_y(),
            Unitary2::pauli_z(),
            Unitary2::ry(0.7),
            Unitary2::rz(-2.1),
            Unitary2::rx(1.3),
            Unitary2::ph(2.9),
            Unitary2::deutsch(0.4),
            Unitary2::cond_phase(1.1),
        ] {
            assert!(is_unitary(&u.entries(), 1e-14));
        }
    }

    #[test]
    fn unitarity_check_accepts_scaled_hadamard_like_matrix() {
        // (1/2) [[1+i, 1-i], [1-i, 1+i]] is exactly unitary.
        let h = [
            [C64::new(0.5, 0.5), C64::new(0.5, -0.5)],
            [C64::new(0.5, -0.5), C64::new(0.5, 0.5)],
        ];
        assert!(is_unitary(&h, 1e-14));
        // Scaling any row breaks unitarity detectably.
        let mut bad = h;
        bad[0][0] *= 1.001;
        assert!(!is_unitary(&bad, 1e-6));
    }

    #[test]
    fn rotation_composition_matches_angle_addition() {
        let a = Unitary2::ry(0.3).mul(&Unitary2::ry(0.9));
        assert_close(&a, &Unitary2::ry(1.2), EPS);
        let b = Unitary2::rz(-0.4).mul(&Unitary2::rz(1.5));
        assert_close(&b, &Unitary2::rz(1.1), EPS);
    }

    #[test]
    fn deutsch_gate_at_pi_is_not_up_to_phase() {
        // i·Rx(pi) = [[0, -1], [-1, 0]]: a NOT gate carrying the global
        // phase -1.
        let d = Unitary2::deutsch(std::f64::consts::PI);
        let minus_not = Unitary2::pauli_x().scale(crate::C64::new(-1.0, 0.0));
        assert_close(&d, &minus_not, EPS);
    }

    #[test]
    fn phase_split_properties() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let u = sampling::random_unitary2(&mut rng);
            let (delta, w) = su2_phase_split(&u);
            assert!(delta > -std::f64::consts::PI && delta <= std::f64::consts::PI);
            assert!((w.det() - C64::new(1.0, 0.0)).norm() <= 1e-12);
            assert_close(&Unitary2::ph(delta).mul(&w), &u, 1e-12);
        }
        // Determinant-one input: delta = 0, not pi.
        let (delta, _) = su2_phase_split(&Unitary2::ry(0.8));
        assert_eq!(delta, 0.0);
    }

    #[test]
    fn euler_reconstructs_random_unitaries() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..1000 {
            let u = sampling::random_unitary2(&mut rng);
            let e = euler_zyz(&u);
            assert!((0.0..=std::f64::consts::PI).contains(&e.theta), "theta {}", e.theta);
            let r = Unitary2::ph(e.delta)
                .mul(&Unitary2::rz(e.alpha))
                .mul(&Unitary2::ry(e.theta))
                .mul(&Unitary2::rz(e.beta));
            assert_close(&r, &u, 1e-10);
        }
    }

    #[test]
    fn euler_corner_cases() {
        // Diagonal input: theta = 0, beta = 0.
        let e = euler_zyz(&Unitary2::rz(1.7));
        assert_eq!(e.theta, 0.0);
        assert_eq!(e.beta, 0.0);
        // Anti-diagonal input (NOT): theta = pi, delta = pi/2.
        let e = euler_zyz(&Unitary2::pauli_x());
        assert!((e.theta - std::f64::consts::PI).abs() <= EPS);
        assert!((e.delta - std::f64::consts::PI / 2.0).abs() <= EPS);
        assert_eq!(e.beta, 0.0);
        let r = Unitary2::ph(e.delta)
            .mul(&Unitary2::rz(e.alpha))
            .mul(&Unitary2::ry(e.theta))
            .mul(&Unitary2::rz(e.beta));
        assert_close(&r, &Unitary2::pauli_x(), 1e-12);
    }

    #[test]
    fn rotation_identities_used_by_control_networks() {
        // NOT conjugation flips rotation angles: X Ry(t) X = Ry(-t),
        // X Rz(a) X = Rz(-a).
        let x = Unitary2::pauli_x();
        for ang in [0.3, -1.2, 2.8] {
            assert_close(&x.mul(&Unitary2::ry(ang)).mul(&x), &Unitary2::ry(-ang), EPS);
            assert_close(&x.mul(&Unitary2::rz(ang)).mul(&x), &Unitary2::rz(-ang), EPS);
        }
        // The conditional phase gate factors as Rz(-d)·Ph(d/2).
        let d = 0.9;
        assert_close(
            &Unitary2::cond_phase(d),
            &Unitary2::rz(-d).mul(&Unitary2::ph(d / 2.0)),
            EPS,
        );
    }

    #[test]
    fn abc_triple_contract() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let x = Unitary2::pauli_x();
        for _ in 0..1000 {
            let w = sampling::random_su2(&mut rng);
            let t = abc_decompose(&w).unwrap();
            assert_close(&t.a.mul(&t.b).mul(&t.c), &Unitary2::identity(), 1e-10);
            assert_close(&t.a.mul(&x).mul(&t.b).mul(&x).mul(&t.c), &w, 1e-10);
        }
    }

    #[test]
    fn abc_rejects_non_special_unitary() {
        assert!(matches!(
            abc_decompose(&Unitary2::pauli_x()),
            Err(Error::NotSpecialUnitary(_))
        ));
    }

    #[test]
    fn principal_root_contract() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(14);
        for k in 1..=10u32 {
            let u = sampling::random_unitary2(&mut rng);
            let v = unitary_root(&u, k);
            // Smallness bound.
            let d = v.distance(&Unitary2::identity());
            assert!(
                d <= std::f64::consts::PI / (2.0f64).powi(k as i32) + 1e-12,
                "k={k}: ||V - I|| = {d}"
            );
            // Repeated squaring recovers U.
            let mut p = v;
            for _ in 0..k {
                p = p.mul(&p);
            }
            assert_close(&p, &u, 1e-9);
        }
    }

    #[test]
    fn root_of_not_gate_is_the_known_matrix() {
        // The principal square root of NOT is (1/2) [[1+i, 1-i], [1-i, 1+i]].
        let v = unitary_root(&Unitary2::pauli_x(), 1);
        let expect = Unitary2::from_entries([
            [C64::new(0.5, 0.5), C64::new(0.5, -0.5)],
            [C64::new(0.5, -0.5), C64::new(0.5, 0.5)],
        ])
        .unwrap();
        assert_close(&v, &expect, 1e-12);
    }

    #[test]
    fn roots_chain_is_consistent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(15);
        let u = sampling::random_unitary2(&mut rng);
        let chain = roots_chain(&u, 6);
        for j in 0..5 {
            let sq = chain[j + 1].mul(&chain[j + 1]);
            assert_close(&sq, &chain[j], 1e-12);
        }
        assert_close(&unitary_root(&unitary_root(&u, 1), 1), &unitary_root(&u, 2), 1e-12);
    }

    #[test]
    fn root_of_scalar_matrix() {
        let u = Unitary2::ph(2.4);
        let v = unitary_root(&u, 1);
        assert_close(&v, &Unitary2::ph(1.2), 1e-12);
    }

    #[test]
    fn spectral_distance_closed_form() {
        // Known case: || I - (-I) || = 2.
        let neg = Unitary2::ph(std::f64::consts::PI);
        assert!((Unitary2::identity().distance(&neg) - 2.0).abs() <= 1e-12);
        // Rank-one difference: || diag(1,1) - diag(e^{ip},1) || = |e^{ip} - 1|.
        let p = 0.7f64;
        let d = Unitary2::identity().distance(&Unitary2::cond_phase(p));
        assert!((d - (C64::new(p.cos(), p.sin()) - C64::new(1.0, 0.0)).norm()).abs() <= 1e-12);
    }
}
