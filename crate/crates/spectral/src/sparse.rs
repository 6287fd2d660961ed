//! Minimal sparse machinery: CSR matrices, preconditioned conjugate
//! gradients, and a blocked shift-invert iteration for the lowest
//! eigenvalues of K f = lambda M f.

use nalgebra::DMatrix;

use crate::error::{Result, SpectralError};

#[derive(Debug, Clone)]
pub struct CsrMatrix {
    pub n: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<f64>,
}

impl CsrMatrix {
    pub fn from_triplets(n: usize, triplets: &[(usize, usize, f64)]) -> CsrMatrix {
        let mut counts = vec![0usize; n + 1];
        let mut entries: Vec<(usize, usize, f64)> = triplets.to_vec();
        entries.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        // merge duplicates
        let mut merged: Vec<(usize, usize, f64)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            if let Some(last) = merged.last_mut() {
                if last.0 == r && last.1 == c {
                    last.2 += v;
                    continue;
                }
            }
            merged.push((r, c, v));
        }
        for &(r, _, _) in &merged {
            counts[r + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let mut cols = Vec::with_capacity(merged.len());
        let mut vals = Vec::with_capacity(merged.len());
        for (_, c, v) in merged {
            cols.push(c);
            vals.push(v);
        }
        CsrMatrix {
            n,
            row_ptr: counts,
            cols,
            vals,
        }
    }

    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        for r in 0..self.n {
            let mut acc = 0.0;
            for idx in self.row_ptr[r]..self.row_ptr[r + 1] {
                acc += self.vals[idx] * x[self.cols[idx]];
            }
            y[r] = acc;
        }
    }

    pub fn row(&self, r: usize) -> (&[usize], &[f64]) {
        let range = self.row_ptr[r]..self.row_ptr[r + 1];
        (&self.cols[range.clone()], &self.vals[range])
    }

    pub fn diagonal(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.n];
        for r in 0..self.n {
            for idx in self.row_ptr[r]..self.row_ptr[r + 1] {
                if self.cols[idx] == r {
                    d[r] = self.vals[idx];
                }
            }
        }
        d
    }

    /// self + scale * other, assuming compatible dimensions.
    pub fn add_scaled(&self, other: &CsrMatrix, scale: f64) -> CsrMatrix {
        let mut triplets = Vec::with_capacity(self.vals.len() + other.vals.len());
        for r in 0..self.n {
            for idx in self.row_ptr[r]..self.row_ptr[r + 1] {
                triplets.push((r, self.cols[idx], self.vals[idx]));
            }
            for idx in other.row_ptr[r]..other.row_ptr[r + 1] {
                triplets.push((r, other.cols[idx], scale * other.vals[idx]));
            }
        }
        CsrMatrix::from_triplets(self.n, &triplets)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Jacobi-preconditioned conjugate gradients; returns iterations used.
pub fn conjugate_gradient(
    a: &CsrMatrix,
    diag: &[f64],
    b: &[f64],
    x: &mut [f64],
    rel_tol: f64,
    max_iter: usize,
) -> Result<usize> {
    let n = a.n;
    let mut r = vec![0.0; n];
    a.matvec(x, &mut r);
    for i in 0..n {
        r[i] = b[i] - r[i];
    }
    let b_norm = dot(b, b).sqrt().max(f64::MIN_POSITIVE);
    let mut z: Vec<f64> = r.iter().zip(diag).map(|(ri, di)| ri / di).collect();
    let mut p = z.clone();
    let mut rz = dot(&r, &z);
    let mut ap = vec![0.0; n];
    for it in 0..max_iter {
        if dot(&r, &r).sqrt() <= rel_tol * b_norm {
            return Ok(it);
        }
        a.matvec(&p, &mut ap);
        let alpha = rz / dot(&p, &ap);
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        for i in 0..n {
            z[i] = r[i] / diag[i];
        }
        let rz_new = dot(&r, &z);
        let beta = rz_new / rz;
        rz = rz_new;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    if dot(&r, &r).sqrt() <= rel_tol * b_norm * 100.0 {
        // Accept a slightly stale solve; the outer iteration corrects it.
        return Ok(max_iter);
    }
    Err(SpectralError::EigensolverDiverged {
        reason: "inner CG stalled".into(),
    })
}

fn xorshift(state: &mut u64) -> f64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    (x >> 11) as f64 / (1u64 << 53) as f64 - 0.5
}

/// Lowest `nev` eigenvalues of K f = lambda M f by blocked shift-invert
/// iteration with Rayleigh-Ritz; K positive semidefinite, M positive
/// definite.
pub fn lowest_eigenvalues(
    k: &CsrMatrix,
    m: &CsrMatrix,
    nev: usize,
    tol: f64,
    max_iter: usize,
) -> Result<Vec<f64>> {
    let n = k.n;
    let block = (nev + 4).min(n);
    let shift = 1.0;
    let a = k.add_scaled(m, shift);
    let diag = a.diagonal();
    let mut state = 0x9E3779B97F4A7C15u64;
    let mut x: Vec<Vec<f64>> = (0..block)
        .map(|_| (0..n).map(|_| xorshift(&mut state)).collect())
        .collect();
    m_orthonormalize(m, &mut x);
    let mut prev: Vec<f64> = vec![f64::INFINITY; nev];
    let mut mx = vec![0.0; n];
    for outer in 0..max_iter {
        // y_i = A^{-1} M x_i (warm started from x_i)
        let mut y = x.clone();
        for (xi, yi) in x.iter().zip(y.iter_mut()) {
            m.matvec(xi, &mut mx);
            conjugate_gradient(&a, &diag, &mx, yi, 1e-10, 40 * n.max(100))?;
        }
        m_orthonormalize(m, &mut y);
        // Rayleigh-Ritz on span(y).
        let mut t = DMatrix::<f64>::zeros(block, block);
        let mut ky = vec![0.0; n];
        let mut k_applied: Vec<Vec<f64>> = Vec::with_capacity(block);
        for yi in &y {
            k.matvec(yi, &mut ky);
            k_applied.push(ky.clone());
        }
        for i in 0..block {
            for j in i..block {
                let v = dot(&y[i], &k_applied[j]);
                t[(i, j)] = v;
                t[(j, i)] = v;
            }
        }
        let eig = nalgebra::SymmetricEigen::new(t);
        let mut order: Vec<usize> = (0..block).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
        let mut next: Vec<Vec<f64>> = Vec::with_capacity(block);
        let mut ritz = Vec::with_capacity(block);
        for &col in & order {
            ritz.push(eig.eigenvalues[col]);
            let mut v = vec![0.0; n];
            for (src, ysrc) in y.iter().enumerate() {
                let c = eig.eigenvectors[(src, col)];
                for (vi, yv) in v.iter_mut().zip(ysrc) {
                    *vi += c * yv;
                }
            }
            next.push(v);
        }
        x = next;
        let converged = (0..nev).all(|i| {
            let cur = ritz[i];
            let old = prev[i];
            (cur - old).abs() <= tol * cur.abs().max(1.0)
        });
        prev.copy_from_slice(&ritz[..nev]);
        if converged && outer >= 2 {
            return Ok(prev);
        }
    }
    Err(SpectralError::EigensolverDiverged {
        reason: format!("no convergence in {max_iter} outer iterations"),
    })
}

/// Modified Gram-Schmidt in the M inner product, applied twice.
fn m_orthonormalize(m: &CsrMatrix, x: &mut [Vec<f64>]) {
    let n = m.n;
    let mut mv = vec![0.0; n];
    for _ in 0..2 {
        for i in 0..x.len() {
            for j in 0..i {
                m.matvec(&x[j], &mut mv);
                let proj = dot(&x[i], &mv);
                let (left, right) = x.split_at_mut(i);
                for (xi, xj) in right[0].iter_mut().zip(&left[j]) {
                    *xi -= proj * xj;
                }
            }
            m.matvec(&x[i], &mut mv);
            let norm = dot(&x[i], &mv).sqrt();
            if norm > 1e-300 {
                for v in &mut x[i] {
                    *v /= norm;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cg_solves_small_spd_system() {
        // Tridiagonal [2, -1] system.
        let n = 50;
        let mut t = Vec::new();
        for i in 0..n {
            t.push((i, i, 2.0));
            if i + 1 < n {
                t.push((i, i + 1, -1.0));
                t.push((i + 1, i, -1.0));
            }
        }
        let a = CsrMatrix::from_triplets(n, &t);
        let b = vec![1.0; n];
        let mut x = vec![0.0; n];
        conjugate_gradient(&a, &a.diagonal(), &b, &mut x, 1e-12, 10_000).unwrap();
        let mut check = vec![0.0; n];
        a.matvec(&x, &mut check);
        for i in 0..n {
            assert!((check[i] - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn eigenvalues_of_discrete_laplacian() {
        // Dirichlet Laplacian on a path: eigenvalues 4 sin^2(k pi / (2(n+1))).
        let n = 60;
        let mut t = Vec::new();
        for i in 0..n {
            t.push((i, i, 2.0));
            if i + 1 < n {
                t.push((i, i + 1, -1.0));
                t.push((i + 1, i, -1.0));
            }
        }
        let k = CsrMatrix::from_triplets(n, &t);
        let m_triplets: Vec<(usize, usize, f64)> = (0..n).map(|i| (i, i, 1.0)).collect();
        let m = CsrMatrix::from_triplets(n, &m_triplets);
        let got = lowest_eigenvalues(&k, &m, 3, 1e-10, 200).unwrap();
        for (idx, lam) in got.iter().enumerate() {
            let kf = (idx + 1) as f64;
            let expected = 4.0 * (kf * std::f64::consts::PI / (2.0 * (n as f64 + 1.0))).sin().powi(2);
            assert!(
                (lam - expected).abs() < 1e-8,
                "mode {idx}: {lam} vs {expected}"
            );
        }
    }
}
