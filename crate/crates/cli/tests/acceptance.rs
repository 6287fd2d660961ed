//! Acceptance suite: every criterion at its stated tolerance, one pass/fail
//! line per criterion. Runs sequentially so the per-criterion runtime
//! budgets are meaningful.

use std::time::{Duration, Instant};

use polyharmonic_cli::verify::{run_full_verification, VerifyConfig};
use polyharmonic_core::cache::{group_for, model_for};
use polyharmonic_core::cover::{
    lift_symmetry, presentation_generators, verify_splitting_certificate, verify_splitting_model,
    CoverModel, SplitVerdict,
};
use polyharmonic_core::error::CoreError;
use polyharmonic_core::exact::{ExactScalar, Quaternion};
use polyharmonic_core::polytope::{enumerate_facets, PolytopeKind};
use polyharmonic_core::symmetry::{census_edge_fixing, plane_edge_partition, Rotor};
use polyharmonic_spectral::frequency::{
    frequency_function, log_radii, rescaled_blowup, FieldModel, FrequencyConfig, SampledField,
};
use polyharmonic_spectral::link::{
    solve_link, solve_link_ladder, vertex_link_directions, LinkConfig, LinkProblem,
};
use polyharmonic_spectral::local::{
    beta_exclusion_threshold, indicial_edge, indicial_vertex, oneform_selection, scalar_selection,
    Lambda,
};
use polyharmonic_spectral::ode::{solve_radial_ode, BranchSeed, RadialOdeProblem};

const SEED: u64 = 0x706f6c79;

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Result<String, String>,
}

#[test]
fn acceptance_criteria() {
    let criteria = [
        Criterion {
            name: "criterion 1: polytope censuses (exact)",
            budget: Some(Duration::from_secs(30)),
            run: criterion_1_polytope_censuses,
        },
        Criterion {
            name: "criterion 2: symmetry censuses",
            budget: Some(Duration::from_secs(300)),
            run: criterion_2_symmetry_censuses,
        },
        Criterion {
            name: "criterion 3: cover construction and lift structure",
            budget: None,
            run: criterion_3_cover_and_lifts,
        },
        Criterion {
            name: "criterion 4: splitting verification",
            budget: None,
            run: criterion_4_splitting,
        },
        Criterion {
            name: "criterion 5: local-model tables",
            budget: None,
            run: criterion_5_local_tables,
        },
        Criterion {
            name: "criterion 6: indicial formulas (exact)",
            budget: None,
            run: criterion_6_indicial,
        },
        Criterion {
            name: "criterion 7: ODE exponent recovery",
            budget: Some(Duration::from_secs(10)),
            run: criterion_7_ode_recovery,
        },
        Criterion {
            name: "criterion 8: frequency function",
            budget: Some(Duration::from_secs(30)),
            run: criterion_8_frequency,
        },
        Criterion {
            name: "criterion 9: link eigensolver",
            budget: Some(Duration::from_secs(300)),
            run: criterion_9_link,
        },
        Criterion {
            name: "criterion 10: out-of-scope boundary",
            budget: None,
            run: criterion_10_scope,
        },
    ];

    let mut failures = Vec::new();
    for criterion in &criteria {
        let start = Instant::now();
        let outcome = (criterion.run)();
        let elapsed = start.elapsed();
        match &outcome {
            Ok(detail) => {
                let mut line = format!("PASS {} [{elapsed:.2?}]", criterion.name);
                if !detail.is_empty() {
                    line.push_str(&format!(" - {detail}"));
                }
                println!("{line}");
            }
            Err(reason) => {
                println!("FAIL {} [{elapsed:.2?}] - {reason}", criterion.name);
                failures.push(format!("{}: {reason}", criterion.name));
            }
        }
        if let Some(budget) = criterion.budget {
            if elapsed > budget {
                println!(
                    "FAIL {} - runtime {elapsed:.2?} exceeded budget {budget:.2?}",
                    criterion.name
                );
                failures.push(format!("{}: runtime budget exceeded", criterion.name));
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}

fn check(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn criterion_1_polytope_censuses() -> Result<String, String> {
    let phi_inv = ExactScalar::phi_inv();
    let expected: [(PolytopeKind, usize, usize, usize, ExactScalar, Option<usize>); 6] = [
        (
            PolytopeKind::Cell5,
            5,
            10,
            4,
            ExactScalar::from_ratio(5, 2),
            Some(5),
        ),
        (PolytopeKind::Cell8, 16, 32, 4, ExactScalar::from_int(4), Some(8)),
        (PolytopeKind::Cell16, 8, 24, 6, ExactScalar::from_int(2), None),
        (PolytopeKind::Cell24, 24, 96, 8, ExactScalar::one(), Some(24)),
        (
            PolytopeKind::Cell120,
            600,
            1200,
            4,
            {
                let three_minus_sqrt5 = ExactScalar::from_int(3) - ExactScalar::sqrt5();
                &three_minus_sqrt5 * &three_minus_sqrt5
            },
            None,
        ),
        (
            PolytopeKind::Cell600,
            120,
            720,
            12,
            &phi_inv * &phi_inv,
            Some(600),
        ),
    ];
    for (kind, v, e, valency, edge_sq, cells) in expected {
        let poly = model_for(kind).map_err(|err| err.to_string())?;
        check(poly.vertices.len() == v, &format!("{kind}: vertex count"))?;
        check(poly.edges.len() == e, &format!("{kind}: edge count"))?;
        let (_, uniform) = poly.valency_profile().map_err(|err| err.to_string())?;
        check(uniform == valency, &format!("{kind}: valency"))?;
        check(
            poly.edge_length_sq == edge_sq,
            &format!("{kind}: edge length squared"),
        )?;
        if let Some(cells) = cells {
            let facets = enumerate_facets(&poly).map_err(|err| err.to_string())?;
            check(facets.len() == cells, &format!("{kind}: cell count"))?;
        }
    }
    Ok("six kinds, zero tolerance".into())
}

fn criterion_2_symmetry_censuses() -> Result<String, String> {
    for (kind, order) in [
        (PolytopeKind::Cell5, 60usize),
        (PolytopeKind::Cell8, 192),
        (PolytopeKind::Cell24, 576),
        (PolytopeKind::Cell120, 7200),
        (PolytopeKind::Cell600, 7200),
    ] {
        let group = group_for(kind).map_err(|err| err.to_string())?;
        check(group.order() == order, &format!("{kind}: group order"))?;
    }
    for (kind, m, count) in [
        (PolytopeKind::Cell5, 3usize, 20usize),
        (PolytopeKind::Cell8, 3, 32),
        (PolytopeKind::Cell24, 3, 32),
        (PolytopeKind::Cell120, 3, 400),
        (PolytopeKind::Cell600, 5, 288),
    ] {
        let poly = model_for(kind).map_err(|err| err.to_string())?;
        let group = group_for(kind).map_err(|err| err.to_string())?;
        check(
            census_edge_fixing(&group, &poly, m) == count,
            &format!("{kind}: order-{m} edge-fixing census"),
        )?;
    }
    for (kind, planes, per_plane) in [
        (PolytopeKind::Cell24, 16usize, 6usize),
        (PolytopeKind::Cell120, 200, 6),
        (PolytopeKind::Cell600, 72, 10),
    ] {
        let poly = model_for(kind).map_err(|err| err.to_string())?;
        let part = plane_edge_partition(&poly).map_err(|err| err.to_string())?;
        check(
            part.classes.len() == planes && part.edges_per_plane == per_plane,
            &format!("{kind}: plane partition"),
        )?;
    }
    Ok("orders 60/192/576/7200/7200; censuses 20/32/32/400/288; partitions 16/200/72".into())
}

fn criterion_3_cover_and_lifts() -> Result<String, String> {
    for kind in [
        PolytopeKind::Cell5,
        PolytopeKind::Cell8,
        PolytopeKind::Cell24,
        PolytopeKind::Cell600,
    ] {
        let poly = model_for(kind).map_err(|err| err.to_string())?;
        let cover = CoverModel::build(&poly).map_err(|err| err.to_string())?;
        check(
            cover
                .complex
                .edge_cycles
                .iter()
                .all(|c| c.len() % 2 == 1),
            &format!("{kind}: odd edge cycles"),
        )?;
    }
    let poly16 = model_for(PolytopeKind::Cell16).map_err(|err| err.to_string())?;
    match CoverModel::build(&poly16) {
        Err(CoreError::CoverObstruction { r: 4, .. }) => {}
        other => {
            return Err(format!(
                "16-cell: expected the r = 4 obstruction, got {other:?}"
            ))
        }
    }
    // Lift pair structure on the 5-cell: Ad_q lifts with orders {3, 6}, the
    // order-6 lift acting on the ten sheets with cycle type (2, 2, 6), and
    // the two lifts differing exactly by the deck involution.
    let poly = model_for(PolytopeKind::Cell5).map_err(|err| err.to_string())?;
    let cover = CoverModel::build(&poly).map_err(|err| err.to_string())?;
    let adq = Rotor::adjoint(&Quaternion::hurwitz_q()).map_err(|err| err.to_string())?;
    let (plus, minus) = lift_symmetry(&cover, &poly, &adq).map_err(|err| err.to_string())?;
    check(plus.order() == 3 && minus.order() == 6, "Ad_q lift orders")?;
    check(
        minus.sheet_cycle_lengths() == vec![2, 2, 6],
        "order-6 lift cycle type",
    )?;
    check(minus == plus.deck_composed(), "lifts differ by the deck swap")?;
    // Odd-order generators lift with {m, 2m} on every modeled kind.
    for kind in [
        PolytopeKind::Cell5,
        PolytopeKind::Cell8,
        PolytopeKind::Cell24,
        PolytopeKind::Cell600,
    ] {
        let poly = model_for(kind).map_err(|err| err.to_string())?;
        let group = group_for(kind).map_err(|err| err.to_string())?;
        let cover = CoverModel::build(&poly).map_err(|err| err.to_string())?;
        let (pres, gens) =
            presentation_generators(kind, &poly, &group, SEED).map_err(|err| err.to_string())?;
        for (name, &g) in pres.generator_names.iter().zip(&gens) {
            let order = group.element_order(g);
            let (a, b) =
                lift_symmetry(&cover, &poly, &group.elements[g]).map_err(|err| err.to_string())?;
            let pair = (a.order().min(b.order()), a.order().max(b.order()));
            if order % 2 == 1 {
                check(
                    pair == (order, 2 * order),
                    &format!("{kind} {name}: odd lift orders"),
                )?;
            } else {
                check(
                    pair == (order, order),
                    &format!("{kind} {name}: even lift orders"),
                )?;
            }
        }
    }
    Ok("holonomy -1 on 5/8/24/600; 16-cell obstructed; (2,2,6) verified".into())
}

fn criterion_4_splitting() -> Result<String, String> {
    for kind in [
        PolytopeKind::Cell5,
        PolytopeKind::Cell8,
        PolytopeKind::Cell24,
        PolytopeKind::Cell600,
    ] {
        let poly = model_for(kind).map_err(|err| err.to_string())?;
        let group = group_for(kind).map_err(|err| err.to_string())?;
        let cover = CoverModel::build(&poly).map_err(|err| err.to_string())?;
        let (pres, gens) =
            presentation_generators(kind, &poly, &group, SEED).map_err(|err| err.to_string())?;
        let ledger = verify_splitting_model(&cover, &poly, &group, &pres, &gens)
            .map_err(|err| err.to_string())?;
        check(
            ledger.verdict == SplitVerdict::Split
                && ledger.relations.iter().all(|r| r.sign == 1),
            &format!("{kind}: model-mode splitting"),
        )?;
    }
    for kind in PolytopeKind::ADMISSIBLE {
        let poly = model_for(kind).map_err(|err| err.to_string())?;
        let group = group_for(kind).map_err(|err| err.to_string())?;
        let (pres, gens) =
            presentation_generators(kind, &poly, &group, SEED).map_err(|err| err.to_string())?;
        let ledger = verify_splitting_certificate(&poly, &group, &pres, &gens)
            .map_err(|err| err.to_string())?;
        check(
            ledger.verdict == SplitVerdict::Split,
            &format!("{kind}: certificate-mode splitting"),
        )?;
    }
    Ok("model mode on 5/8/24/600; certificate mode on all five".into())
}

fn criterion_5_local_tables() -> Result<String, String> {
    let m3 = scalar_selection(3).map_err(|err| err.to_string())?;
    check(m3.min_n0().twice() == 3, "scalar minimal N(0) at m = 3")?;
    let m5 = scalar_selection(5).map_err(|err| err.to_string())?;
    check(m5.min_n0().twice() == 5, "scalar minimal N(0) at m = 5")?;
    let one3 = oneform_selection(3).map_err(|err| err.to_string())?;
    check(
        one3.branches[0].closed && one3.branches[0].min_n0.twice() == 1,
        "one-form closed branch at m = 3",
    )?;
    for m in [3i64, 5, 7, 9] {
        let menu = scalar_selection(m).map_err(|err| err.to_string())?;
        let b = &menu.branches[0];
        for j in 0..8u64 {
            let k_section = b.min_k + j * m as u64;
            check(
                (2 * (k_section - 1) + 1) % m as u64 == 0,
                &format!("index consistency m = {m}, k = {k_section}"),
            )?;
        }
    }
    Ok("3/2, 5/2, 1/2; index conventions agree for m in {3,5,7,9}".into())
}

fn criterion_6_indicial() -> Result<String, String> {
    let vertex = indicial_vertex(&Lambda::from_ratio(1, 1)).map_err(|err| err.to_string())?;
    let mu = vertex
        .mu
        .exact()
        .ok_or("mu at lambda = 1 should be exact")?;
    let mu_prime = vertex
        .mu_prime
        .exact()
        .ok_or("mu' at lambda = 1 should be exact")?;
    let expected_mu = ExactScalar::from_ratio(-3, 2) + ExactScalar::sqrt5_ratio(1, 2);
    let expected_mu_prime = ExactScalar::from_ratio(3, 2) + ExactScalar::sqrt5_ratio(1, 2);
    check(*mu == expected_mu, "mu(1) = (-3+sqrt5)/2")?;
    check(*mu_prime == expected_mu_prime, "mu'(1) = (3+sqrt5)/2")?;
    check(*mu > ExactScalar::from_ratio(-2, 5), "mu(1) > -2/5 exactly")?;
    let edge = indicial_edge(&Lambda::from_ratio(3, 4)).map_err(|err| err.to_string())?;
    check(
        edge.mu.exact() == Some(&ExactScalar::from_ratio(1, 2))
            && edge.mu_prime.exact() == Some(&ExactScalar::from_ratio(3, 2)),
        "indicial_edge(3/4) = (1/2, 3/2)",
    )?;
    check(
        beta_exclusion_threshold(&Lambda::from_ratio(3, 4)).map_err(|err| err.to_string())?,
        "beta exclusion at the threshold",
    )?;
    Ok("exact values and the -2/5 comparison".into())
}

fn criterion_7_ode_recovery() -> Result<String, String> {
    let mut worst = 0.0_f64;
    for (num, den) in [(1i64, 2i64), (3, 4), (1, 1), (2, 1), (13, 4)] {
        let lambda = num as f64 / den as f64;
        let edge_oracle = indicial_edge(&Lambda::from_ratio(num, den))
            .map_err(|err| err.to_string())?
            .mu
            .to_f64();
        let profile = solve_radial_ode(
            &RadialOdeProblem::vertex_sphere(lambda),
            BranchSeed::Regular,
        )
        .map_err(|err| err.to_string())?;
        worst = worst.max((profile.fitted_exponent - edge_oracle).abs());
        let vertex_oracle = indicial_vertex(&Lambda::from_ratio(num, den))
            .map_err(|err| err.to_string())?
            .mu
            .to_f64();
        let profile = solve_radial_ode(
            &RadialOdeProblem::vertex_inhom(lambda, 0.0),
            BranchSeed::Regular,
        )
        .map_err(|err| err.to_string())?;
        worst = worst.max((profile.fitted_exponent - vertex_oracle).abs());
    }
    check(worst < 1e-6, &format!("max deviation {worst:.3e} >= 1e-6"))?;
    Ok(format!(
        "lambda sweep {{1/2, 3/4, 1, 2, 13/4}}, max deviation {worst:.3e}"
    ))
}

fn criterion_8_frequency() -> Result<String, String> {
    let config = FrequencyConfig::default();
    let radii = log_radii(0.05, 1.0, 12);
    let mut worst = 0.0_f64;
    for (twice, expected) in [(1i64, 0.5), (3, 1.5), (5, 2.5)] {
        let field = SampledField::Flat {
            model: FieldModel::HomogeneousBranch {
                degree_twice: twice,
                coeff: 1.0,
            },
        };
        let data =
            frequency_function(&field, [0.0; 3], &radii, &config).map_err(|err| err.to_string())?;
        for n in data.n_values {
            worst = worst.max((n - expected).abs());
        }
    }
    check(
        worst < 1e-6,
        &format!("homogeneous N deviation {worst:.3e} >= 1e-6"),
    )?;
    let mixed = FieldModel::Sum(vec![
        FieldModel::HomogeneousBranch {
            degree_twice: 1,
            coeff: 1.0,
        },
        FieldModel::HomogeneousBranch {
            degree_twice: 3,
            coeff: 1.0,
        },
    ]);
    let probe = log_radii(0.2, 2.0, 12);
    let mut rescale_worst = 0.0_f64;
    for lambda in [1.0, 0.5, 0.2] {
        let report = rescaled_blowup(&mixed, [0.0; 3], lambda, &probe, &config)
            .map_err(|err| err.to_string())?;
        rescale_worst = rescale_worst
            .max(report.k_identity_deviation)
            .max(report.n_identity_deviation);
    }
    check(
        rescale_worst < 1e-6,
        &format!("rescaling identity deviation {rescale_worst:.3e} >= 1e-6"),
    )?;
    Ok(format!(
        "N constant to {worst:.3e}; rescaling identities to {rescale_worst:.3e}"
    ))
}

fn criterion_9_link() -> Result<String, String> {
    let ladder = [24usize, 48, 96];
    // Antipodal control toward 3/4.
    let spectra =
        solve_link_ladder(&LinkProblem::antipodal_pair(), &ladder).map_err(|err| err.to_string())?;
    let finest = spectra.last().unwrap().eigenvalues[0];
    check(
        (finest - 0.75).abs() / 0.75 < 0.02,
        &format!("antipodal control {finest:.6} off 3/4 by more than 2%"),
    )?;
    check(
        spectra
            .windows(2)
            .all(|w| w[1].eigenvalues[0] <= w[0].eigenvalues[0] + 1e-9),
        "antipodal upper bounds must decrease",
    )?;
    // 5-cell vertex link in the Z/3 sector: margin above 1 at the two finest
    // levels, not collapsing.
    let poly = model_for(PolytopeKind::Cell5).map_err(|err| err.to_string())?;
    let dirs = vertex_link_directions(&poly, 0);
    let problem =
        LinkProblem::from_directions(&dirs, 0, Some(3)).map_err(|err| err.to_string())?;
    let spectra = solve_link_ladder(&problem, &ladder).map_err(|err| err.to_string())?;
    let margins: Vec<f64> = spectra.iter().map(|s| s.eigenvalues[0] - 1.0).collect();
    let n = margins.len();
    check(
        margins[n - 1] > 0.0 && margins[n - 2] > 0.0,
        &format!("sector margins not positive: {margins:?}"),
    )?;
    check(
        margins[n - 1] >= 0.5 * margins[n - 2],
        &format!("sector margin collapsed: {margins:?}"),
    )?;
    // Gauge invariance under cut relocation.
    let base = LinkProblem::from_directions(&dirs, 0, None).map_err(|err| err.to_string())?;
    let mut rerouted = base.clone();
    rerouted.pairing = vec![(0, 2), (1, 3)];
    let a = solve_link(&base, &LinkConfig::with_resolution(48)).map_err(|err| err.to_string())?;
    let b =
        solve_link(&rerouted, &LinkConfig::with_resolution(48)).map_err(|err| err.to_string())?;
    let rel = (a.eigenvalues[0] - b.eigenvalues[0]).abs() / a.eigenvalues[0];
    check(
        rel < 1e-3,
        &format!("gauge discrepancy {rel:.3e} >= 0.1%"),
    )?;
    Ok(format!(
        "control {finest:.4}; sector margins {:?}; gauge {rel:.1e}",
        margins
            .iter()
            .map(|m| (m * 1e4).round() / 1e4)
            .collect::<Vec<_>>()
    ))
}

fn criterion_10_scope() -> Result<String, String> {
    // The global harmonic sections and the analytic estimates stay out of
    // scope; their computable shadows are criteria 3 through 9. This check
    // asserts the full verification runner reports the same boundary.
    let config = VerifyConfig {
        mesh_ladder: vec![1],
        ..VerifyConfig::default()
    };
    let report = run_full_verification(&config);
    let skipped: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.skipped)
        .map(|c| c.name.as_str())
        .collect();
    check(
        !skipped.is_empty(),
        "a resolution ladder of [1] must skip the link checks",
    )?;
    check(
        report
            .checks
            .iter()
            .any(|c| c.name.contains("out-of-scope")),
        "scope row missing from the report",
    )?;
    Ok("analytic existence results excluded; shadows covered by 3-9".into())
}
