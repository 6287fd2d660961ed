//! Gauss-Legendre nodes and product quadrature over spheres.

/// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1],
/// via Newton iteration on the Legendre polynomial.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Average of `f` over the unit 2-sphere: Gauss-Legendre in the polar cosine
/// and trapezoid in the azimuth (exact for trigonometric polynomials).
pub fn sphere_average<F: Fn(f64, f64) -> f64>(order: usize, f: F) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let n_phi = 2 * order;
    let mut total = 0.0;
    for (u, w) in nodes.iter().zip(&weights) {
        let theta = u.acos();
        let mut ring = 0.0;
        for j in 0..n_phi {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / n_phi as f64;
            ring += f(theta, phi);
        }
        total += w * ring / n_phi as f64;
    }
    total / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre(8);
        let integral: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(6)).sum();
        assert!((integral - 2.0 / 7.0).abs() < 1e-14);
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn sphere_average_of_coordinate_squared() {
        // avg of z^2 over S^2 is 1/3.
        let avg = sphere_average(32, |theta, _| theta.cos().powi(2));
        assert!((avg - 1.0 / 3.0).abs() < 1e-13);
        // avg of sin^2 theta cos^2 phi (x^2) is also 1/3.
        let avg = sphere_average(32, |theta, phi| (theta.sin() * phi.cos()).powi(2));
        assert!((avg - 1.0 / 3.0).abs() < 1e-13);
    }
}
