//! Sampled model fields and the Almgren frequency function.
//!
//! K(r) is the sphere-averaged field magnitude, N(r) = r K'(r)/K(r) its
//! logarithmic derivative; on an exactly homogeneous field N is the
//! homogeneity degree. The area convention follows the metric flag:
//! 4 pi r^2 on flat probes, 4 pi sin^2 r on spherical ones.

use crate::error::{Result, SpectralError};
use crate::quad::sphere_average;

/// Scalar model fields on R^3 (flat blowup charts) or S^3.
#[derive(Debug, Clone)]
pub enum FieldModel {
    /// Re(coeff * z^(d)) with z = x1 + i x2 and half-integer d, the branched
    /// planar model around the x3-axis; `degree_twice` stores 2d.
    HomogeneousBranch { degree_twice: i64, coeff: f64 },
    /// A coordinate function (degree-1 harmonic).
    Coordinate { axis: usize },
    Constant { value: f64 },
    Sum(Vec<FieldModel>),
}

impl FieldModel {
    pub fn eval(&self, x: [f64; 3]) -> f64 {
        match self {
            FieldModel::HomogeneousBranch { degree_twice, coeff } => {
                let rho = (x[0] * x[0] + x[1] * x[1]).sqrt();
                let theta = x[1].atan2(x[0]);
                let d = *degree_twice as f64 / 2.0;
                coeff * rho.powf(d) * (d * theta).cos()
            }
            FieldModel::Coordinate { axis } => x[*axis],
            FieldModel::Constant { value } => *value,
            FieldModel::Sum(parts) => parts.iter().map(|p| p.eval(x)).sum(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Flat,
    Spherical,
}

/// A deterministic evaluator together with its metric convention.
#[derive(Debug, Clone)]
pub enum SampledField {
    /// Field on R^3; probes are round spheres around `center`.
    Flat { model: FieldModel },
    /// Field on S^3 in R^4; probes are geodesic spheres.
    Spherical { model: SphericalModel },
}

#[derive(Debug, Clone)]
pub enum SphericalModel {
    Constant { value: f64 },
    /// Restriction of a coordinate of R^4 to the 3-sphere.
    Coordinate { axis: usize },
}

impl SphericalModel {
    pub fn eval(&self, x: [f64; 4]) -> f64 {
        match self {
            SphericalModel::Constant { value } => *value,
            SphericalModel::Coordinate { axis } => x[*axis],
        }
    }
}

#[derive(Debug, Clone)]
pub struct FrequencyData {
    pub radii: Vec<f64>,
    pub k_values: Vec<f64>,
    /// N at each radius, centered log-differences inside, one-sided at ends.
    pub n_values: Vec<f64>,
}

#[derive(Debug, Clone, Copy)]
pub struct FrequencyConfig {
    pub quadrature_order: usize,
    /// K below this floor is treated as a degenerate field.
    pub degeneracy_floor: f64,
}

impl Default for FrequencyConfig {
    fn default() -> Self {
        Self {
            quadrature_order: 64,
            degeneracy_floor: 1e-12,
        }
    }
}

/// K(r) over one probe sphere.
pub fn sphere_k(
    field: &SampledField,
    center: [f64; 3],
    radius: f64,
    config: &FrequencyConfig,
) -> Result<f64> {
    let avg = match field {
        SampledField::Flat { model } => sphere_average(config.quadrature_order, |theta, phi| {
            let n = [
                theta.sin() * phi.cos(),
                theta.sin() * phi.sin(),
                theta.cos(),
            ];
            let p = [
                center[0] + radius * n[0],
                center[1] + radius * n[1],
                center[2] + radius * n[2],
            ];
            model.eval(p).powi(2)
        }),
        SampledField::Spherical { model } => {
            // Geodesic sphere of radius r around the base point e1 of S^3:
            // cos r e1 + sin r v with v in the unit tangent sphere. The
            // `center` argument selects the tangent frame origin; only the
            // base point enters for the built-in models.
            let _ = center;
            sphere_average(config.quadrature_order, |theta, phi| {
                let v = [
                    theta.sin() * phi.cos(),
                    theta.sin() * phi.sin(),
                    theta.cos(),
                ];
                let p = [
                    radius.cos(),
                    radius.sin() * v[0],
                    radius.sin() * v[1],
                    radius.sin() * v[2],
                ];
                model.eval(p).powi(2)
            })
        }
    };
    let k = avg.max(0.0).sqrt();
    if k < config.degeneracy_floor {
        return Err(SpectralError::DegenerateField {
            value: k,
            floor: config.degeneracy_floor,
        });
    }
    Ok(k)
}

/// K and N over a grid of radii.
pub fn frequency_function(
    field: &SampledField,
    center: [f64; 3],
    radii: &[f64],
    config: &FrequencyConfig,
) -> Result<FrequencyData> {
    assert!(radii.len() >= 3, "need at least three radii for N");
    assert!(
        radii.windows(2).all(|w| w[0] < w[1]),
        "radii must be increasing"
    );
    if let SampledField::Spherical { .. } = field {
        for &r in radii {
            if r >= std::f64::consts::PI {
                return Err(SpectralError::ProbeOutsideDomain {
                    radius: r,
                    max: std::f64::consts::PI,
                });
            }
        }
    }
    let k_values: Vec<f64> = radii
        .iter()
        .map(|&r| sphere_k(field, center, r, config))
        .collect::<Result<_>>()?;
    let logs: Vec<f64> = k_values.iter().map(|k| k.ln()).collect();
    let lr: Vec<f64> = radii.iter().map(|r| r.ln()).collect();
    let n = radii.len();
    let mut n_values = vec![0.0; n];
    for i in 0..n {
        n_values[i] = if i == 0 {
            (logs[1] - logs[0]) / (lr[1] - lr[0])
        } else if i == n - 1 {
            (logs[n - 1] - logs[n - 2]) / (lr[n - 1] - lr[n - 2])
        } else {
            (logs[i + 1] - logs[i - 1]) / (lr[i + 1] - lr[i - 1])
        };
    }
    Ok(FrequencyData {
        radii: radii.to_vec(),
        k_values,
        n_values,
    })
}

/// Report of the rescaling identities for psi_lambda(x) = psi(lambda x)/K(lambda).
#[derive(Debug, Clone)]
pub struct RescalingReport {
    pub lambda: f64,
    /// max |K_lambda(r) K(lambda) / K(lambda r) - 1| over the probe grid.
    pub k_identity_deviation: f64,
    /// max |N_lambda(r) - N(lambda r)| over the probe grid.
    pub n_identity_deviation: f64,
    /// K_lambda(1), equal to 1 by normalization.
    pub k_at_one: f64,
}

/// Evaluate the blowup field psi_lambda and verify the two rescaling
/// identities numerically on the probe grid (flat fields only).
pub fn rescaled_blowup(
    model: &FieldModel,
    center: [f64; 3],
    lambda: f64,
    probe_radii: &[f64],
    config: &FrequencyConfig,
) -> Result<RescalingReport> {
    assert!(lambda > 0.0 && lambda <= 1.0, "lambda must be in (0, 1]");
    let base = SampledField::Flat {
        model: model.clone(),
    };
    let k_lambda_norm = sphere_k(&base, center, lambda, config)?;

    // psi_lambda probed at r equals (K-average of psi at lambda r)/K(lambda):
    // evaluate both sides on the shared grid.
    let scaled_radii: Vec<f64> = probe_radii.iter().map(|r| lambda * r).collect();
    let base_data = frequency_function(&base, center, &scaled_radii, config)?;

    let rescaled_model = RescaledEvaluator {
        model: model.clone(),
        lambda,
        norm: k_lambda_norm,
        center,
    };
    let mut k_dev = 0.0_f64;
    let mut k_lambda_values = Vec::with_capacity(probe_radii.len());
    for (i, &r) in probe_radii.iter().enumerate() {
        let k_l = rescaled_model.sphere_k(r, config)?;
        k_lambda_values.push(k_l);
        let identity = k_l * k_lambda_norm / base_data.k_values[i];
        k_dev = k_dev.max((identity - 1.0).abs());
    }
    // N_lambda on the probe grid vs N at lambda r: same log spacing, so the
    // difference quotients are directly comparable.
    let logs_l: Vec<f64> = k_lambda_values.iter().map(|k| k.ln()).collect();
    let lr: Vec<f64> = probe_radii.iter().map(|r| r.ln()).collect();
    let mut n_dev = 0.0_f64;
    for i in 1..probe_radii.len() - 1 {
        let n_lambda = (logs_l[i + 1] - logs_l[i - 1]) / (lr[i + 1] - lr[i - 1]);
        n_dev = n_dev.max((n_lambda - base_data.n_values[i]).abs());
    }
    let k_at_one = rescaled_model.sphere_k(1.0, config)?;
    Ok(RescalingReport {
        lambda,
        k_identity_deviation: k_dev,
        n_identity_deviation: n_dev,
        k_at_one,
    })
}

struct RescaledEvaluator {
    model: FieldModel,
    lambda: f64,
    norm: f64,
    center: [f64; 3],
}

impl RescaledEvaluator {
    fn sphere_k(&self, radius: f64, config: &FrequencyConfig) -> Result<f64> {
        let avg = sphere_average(config.quadrature_order, |theta, phi| {
            let n = [
                theta.sin() * phi.cos(),
                theta.sin() * phi.sin(),
                theta.cos(),
            ];
            let p = [
                self.center[0] + self.lambda * radius * n[0],
                self.center[1] + self.lambda * radius * n[1],
                self.center[2] + self.lambda * radius * n[2],
            ];
            (self.model.eval(p) / self.norm).powi(2)
        });
        let k = avg.max(0.0).sqrt();
        if k < config.degeneracy_floor {
            return Err(SpectralError::DegenerateField {
                value: k,
                floor: config.degeneracy_floor,
            });
        }
        Ok(k)
    }
}

pub fn log_radii(from: f64, to: f64, count: usize) -> Vec<f64> {
    let la = from.ln();
    let lb = to.ln();
    (0..count)
        .map(|i| (la + (lb - la) * i as f64 / (count - 1) as f64).exp())
        .collect()
}
