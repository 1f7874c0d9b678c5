//! Dense complex linear algebra: Hermitian eigensolving, matrix exponentials,
//! operator norms, and seeded random matrices.
//!
//! Everything here treats matrices as `nalgebra::DMatrix<Complex64>`. The
//! Hermitian eigensolver goes through the real embedding
//! `H = A + iB  ↦  [[A, -B], [B, A]]`, which is symmetric whenever `H` is
//! Hermitian and has each eigenvalue of `H` twice. That keeps the hot path on
//! nalgebra's well-tested real symmetric solver.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Largest `|entry|` over the whole matrix.
pub fn max_abs_entry(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `‖M − M†‖_max`, the entrywise Hermiticity defect.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvectors as matrix columns.
pub fn eigh(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "eigh needs a square matrix");
    if n == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    debug_assert!(
        hermiticity_defect(m) <= 1e-9 * (1.0 + max_abs_entry(m)),
        "eigh input is not Hermitian"
    );

    // Real embedding, explicitly symmetrized to absorb roundoff.
    let mut big = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let a = 0.5 * (m[(i, j)].re + m[(j, i)].re);
            let b = 0.5 * (m[(i, j)].im - m[(j, i)].im);
            big[(i, j)] = a;
            big[(n + i, n + j)] = a;
            big[(i, n + j)] = -b;
            big[(n + i, j)] = b;
        }
    }
    let se = big.symmetric_eigen();

    let mut order: Vec<usize> = (0..2 * n).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).unwrap());

    let scale = se.eigenvalues.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let cluster_tol = 1e-9 * (1.0 + scale);

    // Each eigenvalue of `m` shows up twice; collapse pairs cluster by
    // cluster, complex-orthonormalizing inside each degenerate block.
    let mut vals = Vec::with_capacity(n);
    let mut vecs = CMatrix::zeros(n, n);
    let mut taken = 0usize;
    let mut idx = 0usize;
    while idx < 2 * n {
        let mut end = idx + 1;
        while end < 2 * n
            && (se.eigenvalues[order[end]] - se.eigenvalues[order[idx]]).abs() <= cluster_tol
        {
            end += 1;
        }
        let real_mult = end - idx;
        let complex_mult = real_mult / 2;
        let mut kept: Vec<CVector> = Vec::with_capacity(complex_mult);
        for &k in &order[idx..end] {
            if kept.len() == complex_mult {
                break;
            }
            let col = se.eigenvectors.column(k);
            let mut u = CVector::from_fn(n, |r, _| Complex64::new(col[r], col[n + r]));
            for w in &kept {
                let overlap = w.dotc(&u);
                u -= w * overlap;
            }
            let norm = u.norm();
            if norm > 0.25 {
                u /= Complex64::new(norm, 0.0);
                kept.push(u);
            }
        }
        assert_eq!(
            kept.len(),
            complex_mult,
            "real-embedding eigenvector pairing failed in a degenerate cluster"
        );
        let lambda = se.eigenvalues[order[idx]];
        for u in kept {
            vals.push(lambda);
            vecs.set_column(taken, &u);
            taken += 1;
        }
        idx = end;
    }
    assert_eq!(taken, n);
    (vals, vecs)
}

/// Spectral norm `‖M‖` of an arbitrary complex matrix (largest singular value).
pub fn op_norm(m: &CMatrix) -> f64 {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0.0;
    }
    // sqrt of the top eigenvalue of M†M, which is Hermitian PSD.
    let gram = m.adjoint() * m;
    let (vals, _) = eigh(&gram);
    vals.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// `exp(factor · H)` for Hermitian `H`, via the eigendecomposition.
pub fn expm_hermitian(h: &CMatrix, factor: Complex64) -> CMatrix {
    let (vals, vecs) = eigh(h);
    let n = h.nrows();
    let mut out = CMatrix::zeros(n, n);
    for (k, lambda) in vals.iter().enumerate() {
        let phase = (factor * Complex64::new(*lambda, 0.0)).exp();
        let col = vecs.column(k);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += phase * col[i] * col[j].conj();
            }
        }
    }
    out
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// `‖U†U − 1‖_max`, the unitarity defect.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let gram = u.adjoint() * u;
    max_abs_entry(&(gram - identity(u.ncols())))
}

/// Distance `min_φ ‖U − e^{iφ} V‖` between unitaries, ignoring global phase.
///
/// The phase is chosen to zero the trace phase of `V†U`, which is the
/// Frobenius-optimal alignment.
pub fn phase_aligned_distance(u: &CMatrix, v: &CMatrix) -> f64 {
    let tr = (v.adjoint() * u).trace();
    let phase = if tr.norm() < 1e-14 {
        ONE
    } else {
        tr / Complex64::new(tr.norm(), 0.0)
    };
    op_norm(&(u - v * phase))
}

/// Deterministic RNG for reproducible tests and sweeps.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random Hermitian matrix with entries of scale O(1).
pub fn random_hermitian(n: usize, rng: &mut impl Rng) -> CMatrix {
    let raw = CMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    (&raw + raw.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Haar-ish random unitary from the QR of a Gaussian-free complex matrix.
pub fn random_unitary(n: usize, rng: &mut impl Rng) -> CMatrix {
    // Orthonormalize random columns by modified Gram-Schmidt.
    let mut cols: Vec<CVector> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v = CVector::from_fn(n, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        for w in &cols {
            let overlap = w.dotc(&v);
            v -= w * overlap;
        }
        let norm = v.norm();
        if norm > 1e-6 {
            v /= Complex64::new(norm, 0.0);
            cols.push(v);
        }
    }
    CMatrix::from_columns(&cols)
}

/// Random unit vector, used as a test state.
pub fn random_state(dim: usize, rng: &mut impl Rng) -> CVector {
    let mut v = CVector::from_fn(dim, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let norm = v.norm();
    v /= Complex64::new(norm, 0.0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigh_reproduces_closed_form_two_level() {
        // [[0.5, 0.25], [0.25, -0.5]] has eigenvalues ±sqrt(0.3125).
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.5, 0.0),
                Complex64::new(0.25, 0.0),
                Complex64::new(0.25, 0.0),
                Complex64::new(-0.5, 0.0),
            ],
        );
        let (vals, vecs) = eigh(&m);
        let expect = 0.3125f64.sqrt();
        assert!((vals[0] + expect).abs() < 1e-12);
        assert!((vals[1] - expect).abs() < 1e-12);
        for k in 0..2 {
            let v = vecs.column(k).clone_owned();
            let resid = &m * &v - &v * Complex64::new(vals[k], 0.0);
            assert!(resid.norm() < 1e-12);
        }
    }

    #[test]
    fn eigh_residuals_on_random_hermitian() {
        let mut rng = seeded_rng(7);
        for n in [3usize, 8, 17] {
            let m = random_hermitian(n, &mut rng);
            let (vals, vecs) = eigh(&m);
            let scale = op_norm(&m);
            for k in 0..n {
                let v = vecs.column(k).clone_owned();
                let resid = &m * &v - &v * Complex64::new(vals[k], 0.0);
                assert!(
                    resid.norm() <= 1e-10 * (1.0 + scale),
                    "residual {} too large at n={n}",
                    resid.norm()
                );
            }
            // Orthonormality.
            let gram = vecs.adjoint() * &vecs;
            assert!(max_abs_entry(&(gram - identity(n))) < 1e-10);
            // Ascending order.
            for k in 1..n {
                assert!(vals[k] >= vals[k - 1] - 1e-12);
            }
        }
    }

    #[test]
    fn eigh_handles_degenerate_spectra() {
        // diag(1, 1, 1, -2) in a rotated basis.
        let mut rng = seeded_rng(13);
        let u = random_unitary(4, &mut rng);
        let d = CMatrix::from_diagonal(&CVector::from_vec(vec![
            ONE,
            ONE,
            ONE,
            Complex64::new(-2.0, 0.0),
        ]));
        let m = &u * d * u.adjoint();
        let (vals, vecs) = eigh(&m);
        assert!((vals[0] + 2.0).abs() < 1e-10);
        for k in 1..4 {
            assert!((vals[k] - 1.0).abs() < 1e-10);
        }
        let gram = vecs.adjoint() * &vecs;
        assert!(max_abs_entry(&(gram - identity(4))) < 1e-9);
    }

    #[test]
    fn expm_hermitian_gives_unitary_for_imaginary_factor() {
        let mut rng = seeded_rng(21);
        let h = random_hermitian(6, &mut rng);
        let u = expm_hermitian(&h, I * Complex64::new(0.37, 0.0));
        assert!(unitarity_defect(&u) < 1e-11);
    }

    #[test]
    fn op_norm_matches_known_values() {
        let x = CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]);
        assert!((op_norm(&x) - 1.0).abs() < 1e-12);
        let m = &x * Complex64::new(2.5, 0.0);
        assert!((op_norm(&m) - 2.5).abs() < 1e-12);
    }

    #[test]
    fn phase_alignment_ignores_global_phase() {
        let mut rng = seeded_rng(5);
        let u = random_unitary(4, &mut rng);
        let v = &u * Complex64::from_polar(1.0, 1.234);
        assert!(phase_aligned_distance(&u, &v) < 1e-12);
    }
}
