//! Fitted Frobenius exponents against the exact indicial oracles, across the
//! eigenvalue sweep, plus the frequency monotonicity surrogate.

use polyharmonic_spectral::frequency::{
    frequency_function, log_radii, FieldModel, FrequencyConfig, SampledField,
};
use polyharmonic_spectral::local::{indicial_edge, indicial_vertex, Lambda};
use polyharmonic_spectral::ode::{solve_radial_ode, BranchSeed, RadialOdeProblem};

const LAMBDAS: [(i64, i64); 5] = [(1, 2), (3, 4), (1, 1), (2, 1), (13, 4)];

#[test]
fn vertex_sphere_exponents_match_edge_indicial_oracle() {
    for (num, den) in LAMBDAS {
        let lambda = num as f64 / den as f64;
        let oracle = indicial_edge(&Lambda::from_ratio(num, den)).unwrap();
        let problem = RadialOdeProblem::vertex_sphere(lambda);
        let (plus, minus) = problem.indicial_roots();
        assert!(
            (plus - oracle.mu.to_f64()).abs() < 1e-12,
            "indicial mismatch at lambda = {lambda}"
        );
        assert!((minus + oracle.mu_prime.to_f64()).abs() < 1e-12);
        let profile = solve_radial_ode(&problem, BranchSeed::Regular).unwrap();
        assert!(
            (profile.fitted_exponent - oracle.mu.to_f64()).abs() < 1e-6,
            "lambda = {lambda}: fitted {} vs mu {}",
            profile.fitted_exponent,
            oracle.mu.to_f64()
        );
    }
}

#[test]
fn vertex_inhom_exponents_match_vertex_indicial_oracle() {
    for (num, den) in LAMBDAS {
        let lambda = num as f64 / den as f64;
        let oracle = indicial_vertex(&Lambda::from_ratio(num, den)).unwrap();
        let problem = RadialOdeProblem::vertex_inhom(lambda, 0.0);
        let (plus, minus) = problem.indicial_roots();
        assert!((plus - oracle.mu.to_f64()).abs() < 1e-12);
        assert!((minus + oracle.mu_prime.to_f64()).abs() < 1e-12);
        let profile = solve_radial_ode(&problem, BranchSeed::Regular).unwrap();
        assert!(
            (profile.fitted_exponent - oracle.mu.to_f64()).abs() < 1e-6,
            "lambda = {lambda}: fitted {} vs mu {}",
            profile.fitted_exponent,
            oracle.mu.to_f64()
        );
    }
}

#[test]
fn vertex_inhom_with_energy_keeps_indicial_exponents() {
    // The bulk eigenvalue enters only the analytic part, not the exponents.
    let oracle = indicial_vertex(&Lambda::from_ratio(2, 1)).unwrap();
    let problem = RadialOdeProblem::vertex_inhom(2.0, 1.5);
    let profile = solve_radial_ode(&problem, BranchSeed::Regular).unwrap();
    assert!((profile.fitted_exponent - oracle.mu.to_f64()).abs() < 1e-6);
}

#[test]
fn frequency_is_nondecreasing_on_single_and_mixed_branches() {
    let config = FrequencyConfig::default();
    // Single branch: constant N (nondecreasing within tolerance).
    let single = SampledField::Flat {
        model: FieldModel::HomogeneousBranch {
            degree_twice: 3,
            coeff: 1.0,
        },
    };
    let radii = log_radii(0.05, 2.0, 16);
    let data = frequency_function(&single, [0.0; 3], &radii, &config).unwrap();
    for w in data.n_values.windows(2) {
        assert!(w[1] >= w[0] - 1e-6, "single-branch N decreased: {w:?}");
    }
    // Mixed branches: N strictly increases from the smaller exponent toward
    // the larger one as r grows.
    let mixed = SampledField::Flat {
        model: FieldModel::Sum(vec![
            FieldModel::HomogeneousBranch {
                degree_twice: 1,
                coeff: 1.0,
            },
            FieldModel::HomogeneousBranch {
                degree_twice: 3,
                coeff: 1.0,
            },
        ]),
    };
    let data = frequency_function(&mixed, [0.0; 3], &radii, &config).unwrap();
    for w in data.n_values.windows(2) {
        assert!(w[1] >= w[0] - 1e-9, "mixed N decreased: {w:?}");
    }
    assert!(data.n_values[0] > 0.5 && data.n_values[0] < 1.0);
    let last = *data.n_values.last().unwrap();
    assert!(last > 1.0 && last < 1.5);
}
