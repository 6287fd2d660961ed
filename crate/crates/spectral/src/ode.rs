//! Radial ODE profiles near a singular point, with Frobenius seeding and
//! exponent recovery.
//!
//! Every problem is brought to the form `rho^2 a'' + rho p(rho) a' + q(rho) a = 0`
//! with p, q analytic in rho^2; the indicial roots sigma solve
//! `sigma (sigma - 1) + p(0) sigma + q(0) = 0` and the solver seeds a branch
//! by its truncated Frobenius series at rho0 before integrating outward.

use crate::error::{Result, SpectralError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialKind {
    /// Flat edge model: Fourier mode of a harmonic section around the
    /// branch axis, with axial frequency pi n / (2 r_scale).
    EdgeFlat,
    /// Same model with the curvature corrections dropped; a pure Euler
    /// equation with exponents +/-(k + 1/2).
    EdgeFlatEuler,
    /// Radial equation of a vertex-link eigensection coefficient.
    VertexSphere,
    /// Radial equation of the d rho component near a vertex.
    VertexInhom,
}

#[derive(Debug, Clone)]
pub struct RadialOdeProblem {
    pub kind: RadialKind,
    /// Angular index for the edge kinds.
    pub k: i64,
    /// Axial index for the edge kinds.
    pub n: i64,
    /// Link eigenvalue for the vertex kinds.
    pub lambda: f64,
    /// Bulk eigenvalue E (vertex_inhom only).
    pub energy: f64,
    /// Chart radius entering the axial frequency.
    pub r_scale: f64,
    pub rho0: f64,
    pub rho1: f64,
}

impl RadialOdeProblem {
    pub fn edge_flat(k: i64, n: i64, r_scale: f64) -> Self {
        Self {
            kind: RadialKind::EdgeFlat,
            k,
            n,
            lambda: 0.0,
            energy: 0.0,
            r_scale,
            rho0: 1e-3,
            rho1: 0.5,
        }
    }

    pub fn edge_flat_euler(k: i64) -> Self {
        Self {
            kind: RadialKind::EdgeFlatEuler,
            ..Self::edge_flat(k, 0, 1.0)
        }
    }

    pub fn vertex_sphere(lambda: f64) -> Self {
        Self {
            kind: RadialKind::VertexSphere,
            k: 0,
            n: 0,
            lambda,
            energy: 0.0,
            r_scale: 1.0,
            rho0: 1e-3,
            rho1: 0.8,
        }
    }

    pub fn vertex_inhom(lambda: f64, energy: f64) -> Self {
        Self {
            kind: RadialKind::VertexInhom,
            lambda,
            energy,
            ..Self::vertex_sphere(lambda)
        }
    }

    fn validate(&self) -> Result<()> {
        let max_rho = match self.kind {
            RadialKind::EdgeFlat => 1.0,
            RadialKind::EdgeFlatEuler => f64::INFINITY,
            _ => std::f64::consts::FRAC_PI_2,
        };
        if !(self.rho0 > 0.0 && self.rho0 < self.rho1 && self.rho1 < max_rho) {
            return Err(SpectralError::IntegrationFailure {
                reason: format!("bad interval ({}, {})", self.rho0, self.rho1),
            });
        }
        if self.kind == RadialKind::VertexSphere || self.kind == RadialKind::VertexInhom {
            if self.lambda < 0.0 {
                return Err(SpectralError::NegativeLambda { lambda: self.lambda });
            }
        }
        Ok(())
    }

    fn axial_freq(&self) -> f64 {
        std::f64::consts::PI * self.n as f64 / (2.0 * self.r_scale)
    }

    /// Series coefficients of p and q in powers of rho^2 (three terms).
    fn pq_series(&self) -> ([f64; 3], [f64; 3]) {
        let kk = (self.k as f64 + 0.5).powi(2);
        match self.kind {
            RadialKind::EdgeFlatEuler => ([1.0, 0.0, 0.0], [-kk, 0.0, 0.0]),
            RadialKind::EdgeFlat => {
                let nu2 = self.axial_freq().powi(2);
                ([1.0, -2.0, -2.0], [-kk, -kk - nu2, -kk - 2.0 * nu2])
            }
            RadialKind::VertexSphere => {
                let l = self.lambda;
                (
                    [2.0, -2.0 / 3.0, -2.0 / 45.0],
                    [-l, -l / 3.0, -l / 15.0],
                )
            }
            RadialKind::VertexInhom => {
                let l = self.lambda;
                let e = self.energy;
                (
                    [4.0, -4.0 / 3.0, -4.0 / 45.0],
                    [2.0 - l, (2.0 - l) / 3.0 - 4.0 + e, (2.0 - l) / 15.0],
                )
            }
        }
    }

    /// Indicial roots (sigma_plus, sigma_minus), sigma_plus >= sigma_minus.
    pub fn indicial_roots(&self) -> (f64, f64) {
        let ([p0, _, _], [q0, _, _]) = self.pq_series();
        let b = p0 - 1.0;
        let disc = (b * b - 4.0 * q0).sqrt();
        ((-b + disc) / 2.0, (-b - disc) / 2.0)
    }

    /// a'' as a function of (rho, a, a'), using the full coefficients.
    fn acceleration(&self, rho: f64, a: f64, da: f64) -> f64 {
        let kk = (self.k as f64 + 0.5).powi(2);
        match self.kind {
            RadialKind::EdgeFlatEuler => (-da + kk / rho * a) / rho,
            RadialKind::EdgeFlat => {
                let nu2 = self.axial_freq().powi(2);
                let om = 1.0 - rho * rho;
                ((-(1.0 - 3.0 * rho * rho)) * da + (kk / rho + nu2 * rho / om) * a) / (rho * om)
            }
            RadialKind::VertexSphere => {
                let s = rho.sin();
                let c = rho.cos();
                -2.0 * c / s * da + self.lambda / (s * s) * a
            }
            RadialKind::VertexInhom => {
                let s = rho.sin();
                let c2 = (2.0 * rho).cos();
                let cot = rho.cos() / s;
                -4.0 * cot * da - (2.0 * c2 - self.lambda + self.energy * s * s) / (s * s) * a
            }
        }
    }

    /// Frobenius series value and derivative for exponent sigma at rho,
    /// truncated after three even corrections.
    pub fn frobenius_seed(&self, sigma: f64, rho: f64) -> (f64, f64) {
        let c = self.frobenius_coefficients(sigma);
        let mut val = 0.0;
        let mut der = 0.0;
        for (j2, cj) in c.iter().enumerate() {
            let e = sigma + 2.0 * j2 as f64;
            val += cj * rho.powf(e);
            der += cj * e * rho.powf(e - 1.0);
        }
        (val, der)
    }

    /// Even-order Frobenius coefficients c0 = 1, c2, c4, c6 for the branch
    /// with exponent sigma.
    fn frobenius_coefficients(&self, sigma: f64) -> [f64; 4] {
        let ([p0, p2, p4], [q0, q2, q4]) = self.pq_series();
        let f = |s: f64| s * (s - 1.0) + p0 * s + q0;
        let mut c = [1.0, 0.0, 0.0, 0.0];
        // index i holds the coefficient of rho^(sigma + 2 i)
        for i in 1..4 {
            let j = 2 * i as i32;
            let mut acc = 0.0;
            for step in 1..=i.min(2) {
                let (pi, qi) = match step {
                    1 => (p2, q2),
                    2 => (p4, q4),
                    _ => unreachable!(),
                };
                let prev = c[i - step];
                let e_prev = sigma + (j - 2 * step as i32) as f64;
                acc += (pi * e_prev + qi) * prev;
            }
            let denom = f(sigma + j as f64);
            if denom.abs() < 1e-9 {
                // Resonant index with vanishing numerator: the coefficient is
                // free; zero keeps the branch pure. A nonzero numerator would
                // need a logarithmic term, which these seeds avoid.
                if acc.abs() > 1e-9 {
                    c[i] = f64::NAN;
                } else {
                    c[i] = 0.0;
                }
            } else {
                c[i] = -acc / denom;
            }
        }
        c
    }
}

/// Which solution the integration starts on.
#[derive(Debug, Clone, Copy)]
pub enum BranchSeed {
    Regular,
    Singular,
    /// alpha * regular + beta * singular.
    Mixed { alpha: f64, beta: f64 },
}

#[derive(Debug, Clone)]
pub struct SolutionProfile {
    pub rho: Vec<f64>,
    pub values: Vec<f64>,
    pub derivatives: Vec<f64>,
    /// Indicial exponents (regular, singular) of the problem.
    pub exponents: (f64, f64),
    /// Dominant exponent recovered by the log-log window fit.
    pub fitted_exponent: f64,
    /// Coefficients of the two Frobenius branches fitted on the window.
    pub alpha: f64,
    pub beta: f64,
    /// Relative RMS residual of the two-branch fit on the window.
    pub fit_residual: f64,
    /// Number of leading samples inside the fit window.
    pub window_len: usize,
}

/// Integrate the problem from a Frobenius seed at rho0 and fit exponents on
/// the window [rho0, 10 rho0].
pub fn solve_radial_ode(problem: &RadialOdeProblem, seed: BranchSeed) -> Result<SolutionProfile> {
    solve_radial_ode_with_tol(problem, seed, 1e-4)
}

pub fn solve_radial_ode_with_tol(
    problem: &RadialOdeProblem,
    seed: BranchSeed,
    fit_tolerance: f64,
) -> Result<SolutionProfile> {
    problem.validate()?;
    let (sig_plus, sig_minus) = problem.indicial_roots();
    let (alpha0, beta0) = match seed {
        BranchSeed::Regular => (1.0, 0.0),
        BranchSeed::Singular => (0.0, 1.0),
        BranchSeed::Mixed { alpha, beta } => (alpha, beta),
    };
    let seed_at = |rho: f64| -> (f64, f64) {
        let (vr, dr) = problem.frobenius_seed(sig_plus, rho);
        let (vs, ds) = if beta0 != 0.0 {
            problem.frobenius_seed(sig_minus, rho)
        } else {
            (0.0, 0.0)
        };
        (alpha0 * vr + beta0 * vs, alpha0 * dr + beta0 * ds)
    };
    let (v0, d0) = seed_at(problem.rho0);
    if !v0.is_finite() || !d0.is_finite() {
        return Err(SpectralError::IntegrationFailure {
            reason: "resonant singular seed requires a log term".into(),
        });
    }

    // Sample grid: log-spaced window [rho0, 10 rho0], then log-spaced tail.
    let window_end = (10.0 * problem.rho0).min(problem.rho1);
    let mut grid = log_grid(problem.rho0, window_end, 40);
    let window_len = grid.len();
    if window_end < problem.rho1 {
        grid.extend(log_grid(window_end, problem.rho1, 24).into_iter().skip(1));
    }

    let mut values = Vec::with_capacity(grid.len());
    let mut derivatives = Vec::with_capacity(grid.len());
    let mut state = [v0, d0];
    values.push(state[0]);
    derivatives.push(state[1]);
    for w in grid.windows(2) {
        state = integrate_rkck(problem, state, w[0], w[1])?;
        values.push(state[0]);
        derivatives.push(state[1]);
    }

    // Two-branch least squares on the window, against the seeded series.
    let window_rho = &grid[..window_len];
    let window_val = &values[..window_len];
    let basis_r: Vec<f64> = window_rho
        .iter()
        .map(|&r| problem.frobenius_seed(sig_plus, r).0)
        .collect();
    let singular_ok = problem.frobenius_seed(sig_minus, problem.rho0).0.is_finite();
    let basis_s: Vec<f64> = window_rho
        .iter()
        .map(|&r| {
            if singular_ok {
                problem.frobenius_seed(sig_minus, r).0
            } else {
                0.0
            }
        })
        .collect();
    let (alpha, beta) = least_squares_2(&basis_r, &basis_s, window_val);
    let scale = window_val
        .iter()
        .fold(0.0_f64, |m, v| m.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    let mut ss = 0.0;
    for i in 0..window_len {
        let model = alpha * basis_r[i] + beta * basis_s[i];
        ss += (model - window_val[i]).powi(2);
    }
    let fit_residual = (ss / window_len as f64).sqrt() / scale;
    if fit_residual > fit_tolerance {
        return Err(SpectralError::FitResidualTooLarge {
            residual: fit_residual,
            tolerance: fit_tolerance,
        });
    }

    // Dominant exponent: linear fit of ln|a| = sigma ln rho + A + B rho^2.
    let fitted_exponent = fit_log_exponent(window_rho, window_val);

    Ok(SolutionProfile {
        rho: grid,
        values,
        derivatives,
        exponents: (sig_plus, sig_minus),
        fitted_exponent,
        alpha,
        beta,
        fit_residual,
        window_len,
    })
}

fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let la = a.ln();
    let lb = b.ln();
    (0..n)
        .map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Cash-Karp embedded RK45 with adaptive step.
fn integrate_rkck(
    problem: &RadialOdeProblem,
    mut y: [f64; 2],
    from: f64,
    to: f64,
) -> Result<[f64; 2]> {
    const A: [f64; 6] = [0.0, 0.2, 0.3, 0.6, 1.0, 0.875];
    const B: [[f64; 5]; 6] = [
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.2, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0],
        [0.3, -0.9, 1.2, 0.0, 0.0],
        [-11.0 / 54.0, 2.5, -70.0 / 27.0, 35.0 / 27.0, 0.0],
        [
            1631.0 / 55296.0,
            175.0 / 512.0,
            575.0 / 13824.0,
            44275.0 / 110592.0,
            253.0 / 4096.0,
        ],
    ];
    const C5: [f64; 6] = [37.0 / 378.0, 0.0, 250.0 / 621.0, 125.0 / 594.0, 0.0, 512.0 / 1771.0];
    const C4: [f64; 6] = [
        2825.0 / 27648.0,
        0.0,
        18575.0 / 48384.0,
        13525.0 / 55296.0,
        277.0 / 14336.0,
        0.25,
    ];
    let f = |rho: f64, y: &[f64; 2]| -> [f64; 2] { [y[1], problem.acceleration(rho, y[0], y[1])] };
    let rtol = 1e-12;
    let atol = 1e-14;
    let mut x = from;
    let mut h = (to - from).min(from * 0.1).max(1e-8);
    let hmin = 1e-13 * (to - from).max(from);
    let mut steps = 0usize;
    while x < to {
        if steps > 2_000_000 {
            return Err(SpectralError::IntegrationFailure {
                reason: "step budget exhausted".into(),
            });
        }
        steps += 1;
        h = h.min(to - x);
        let mut k: [[f64; 2]; 6] = [[0.0; 2]; 6];
        k[0] = f(x, &y);
        for s in 1..6 {
            let mut ys = y;
            for (j, kj) in k.iter().enumerate().take(s) {
                ys[0] += h * B[s][j] * kj[0];
                ys[1] += h * B[s][j] * kj[1];
            }
            k[s] = f(x + A[s] * h, &ys);
        }
        let mut y5 = y;
        let mut y4 = y;
        for s in 0..6 {
            y5[0] += h * C5[s] * k[s][0];
            y5[1] += h * C5[s] * k[s][1];
            y4[0] += h * C4[s] * k[s][0];
            y4[1] += h * C4[s] * k[s][1];
        }
        let err = {
            let e0 = (y5[0] - y4[0]).abs() / (atol + rtol * y5[0].abs().max(y[0].abs()));
            let e1 = (y5[1] - y4[1]).abs() / (atol + rtol * y5[1].abs().max(y[1].abs()));
            e0.max(e1)
        };
        if err <= 1.0 || h <= hmin {
            x += h;
            y = y5;
        }
        let factor = if err > 0.0 {
            0.9 * err.powf(-0.2)
        } else {
            5.0
        };
        h *= factor.clamp(0.2, 5.0);
        if h < hmin {
            h = hmin;
        }
        if !y[0].is_finite() || !y[1].is_finite() {
            return Err(SpectralError::IntegrationFailure {
                reason: format!("solution blew up near rho = {x}"),
            });
        }
    }
    Ok(y)
}

/// Fit ln|a| = sigma ln rho + A + B rho^2 by least squares; returns sigma.
fn fit_log_exponent(rho: &[f64], values: &[f64]) -> f64 {
    let pts: Vec<(f64, f64, f64)> = rho
        .iter()
        .zip(values)
        .filter(|(_, v)| v.abs() > 1e-280)
        .map(|(&r, &v)| (r.ln(), r * r, v.abs().ln()))
        .collect();
    if pts.len() < 3 {
        return f64::NAN;
    }
    // Normal equations for [sigma, A, B].
    let mut m = [[0.0f64; 3]; 3];
    let mut b = [0.0f64; 3];
    for &(lr, r2, lv) in &pts {
        let row = [lr, 1.0, r2];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += row[i] * row[j];
            }
            b[i] += row[i] * lv;
        }
    }
    solve3(m, b)[0]
}

fn solve3(mut m: [[f64; 3]; 3], mut b: [f64; 3]) -> [f64; 3] {
    for c in 0..3 {
        let p = (c..3)
            .max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs()))
            .unwrap();
        m.swap(c, p);
        b.swap(c, p);
        for i in 0..3 {
            if i != c {
                let f = m[i][c] / m[c][c];
                for j in 0..3 {
                    m[i][j] -= f * m[c][j];
                }
                b[i] -= f * b[c];
            }
        }
    }
    [b[0] / m[0][0], b[1] / m[1][1], b[2] / m[2][2]]
}

fn least_squares_2(b1: &[f64], b2: &[f64], y: &[f64]) -> (f64, f64) {
    let mut a11 = 0.0;
    let mut a12 = 0.0;
    let mut a22 = 0.0;
    let mut r1 = 0.0;
    let mut r2 = 0.0;
    for i in 0..y.len() {
        a11 += b1[i] * b1[i];
        a12 += b1[i] * b2[i];
        a22 += b2[i] * b2[i];
        r1 += b1[i] * y[i];
        r2 += b2[i] * y[i];
    }
    if a22 == 0.0 {
        return (r1 / a11, 0.0);
    }
    let det = a11 * a22 - a12 * a12;
    ((a22 * r1 - a12 * r2) / det, (a11 * r2 - a12 * r1) / det)
}

/// The singular branch is excluded (finite local mass) once the link
/// eigenvalue clears the threshold: true iff the threshold holds and the
/// fitted singular coefficient is below `beta_tol`.
pub fn verify_beta_exclusion(profile: &SolutionProfile, lambda: f64, beta_tol: f64) -> bool {
    let threshold = lambda >= 0.75;
    threshold && profile.beta.abs() < beta_tol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_equation_recovers_exact_exponent() {
        for k in [0i64, 1, 2] {
            let problem = RadialOdeProblem::edge_flat_euler(k);
            let profile = solve_radial_ode(&problem, BranchSeed::Regular).unwrap();
            let expected = k as f64 + 0.5;
            assert!(
                (profile.fitted_exponent - expected).abs() < 1e-8,
                "k = {k}: fitted {} vs {expected}",
                profile.fitted_exponent
            );
        }
    }

    #[test]
    fn edge_flat_full_equation_keeps_euler_exponents() {
        // The curvature and axial terms are analytic corrections; the
        // exponents stay at +/-(k + 1/2).
        for (k, n) in [(0i64, 0i64), (1, 1), (2, 3)] {
            let problem = RadialOdeProblem::edge_flat(k, n, 1.0);
            let profile = solve_radial_ode(&problem, BranchSeed::Regular).unwrap();
            let expected = k as f64 + 0.5;
            assert!(
                (profile.fitted_exponent - expected).abs() < 1e-6,
                "k = {k}, n = {n}: fitted {}",
                profile.fitted_exponent
            );
        }
    }

    #[test]
    fn vertex_sphere_lambda_two_gives_mu_one() {
        let problem = RadialOdeProblem::vertex_sphere(2.0);
        let profile = solve_radial_ode(&problem, BranchSeed::Regular).unwrap();
        assert!((profile.fitted_exponent - 1.0).abs() < 1e-6);
        assert!((profile.exponents.0 - 1.0).abs() < 1e-12);
        assert!((profile.exponents.1 + 2.0).abs() < 1e-12);
    }

    #[test]
    fn vertex_inhom_lambda_two_matches_vertex_indicial() {
        let problem = RadialOdeProblem::vertex_inhom(2.0, 0.0);
        let (plus, minus) = problem.indicial_roots();
        assert!((plus - 0.0).abs() < 1e-12);
        assert!((minus + 3.0).abs() < 1e-12);
        // The regular branch at lambda = 2 is rho^0-like: fit approaches 0.
        let profile = solve_radial_ode(&problem, BranchSeed::Regular).unwrap();
        assert!(profile.fitted_exponent.abs() < 1e-6);
    }

    #[test]
    fn beta_recovery_on_mixed_seed() {
        let problem = RadialOdeProblem::vertex_sphere(0.5);
        let profile = solve_radial_ode(
            &problem,
            BranchSeed::Mixed {
                alpha: 1.0,
                beta: 0.1,
            },
        )
        .unwrap();
        assert!(
            (profile.beta - 0.1).abs() / 0.1 < 0.05,
            "beta = {}",
            profile.beta
        );
        // Below the threshold the exclusion is never asserted.
        assert!(!verify_beta_exclusion(&profile, 0.5, 1e-6));
    }

    #[test]
    fn pure_regular_branch_has_tiny_beta() {
        let problem = RadialOdeProblem::vertex_sphere(1.0);
        let profile = solve_radial_ode(&problem, BranchSeed::Regular).unwrap();
        assert!(profile.beta.abs() < 1e-8, "beta = {}", profile.beta);
        assert!(verify_beta_exclusion(&profile, 1.0, 1e-6));
    }

    #[test]
    fn interval_validation() {
        let mut problem = RadialOdeProblem::vertex_sphere(1.0);
        problem.rho1 = 2.0;
        assert!(solve_radial_ode(&problem, BranchSeed::Regular).is_err());
        assert!(solve_radial_ode(&RadialOdeProblem::vertex_sphere(-1.0), BranchSeed::Regular).is_err());
    }
}
