//! The full verification run: every acceptance check, timed and tagged with
//! its provenance.

use std::time::Instant;

use polyharmonic_core::cache::{group_for, model_for};
use polyharmonic_core::cover::{
    lift_symmetry, presentation_generators, verify_splitting_certificate, verify_splitting_model,
    CoverModel, SplitVerdict,
};
use polyharmonic_core::error::CoreError;
use polyharmonic_core::exact::ExactScalar;
use polyharmonic_core::polytope::PolytopeKind;
use polyharmonic_core::symmetry::{census_edge_fixing, plane_edge_partition};
use polyharmonic_spectral::frequency::{
    frequency_function, log_radii, rescaled_blowup, FieldModel, FrequencyConfig, SampledField,
};
use polyharmonic_spectral::link::{
    solve_link, solve_link_ladder, vertex_link_directions, LinkConfig, LinkProblem,
};
use polyharmonic_spectral::local::{
    indicial_edge, indicial_vertex, oneform_selection, scalar_selection, Lambda,
};
use polyharmonic_spectral::ode::{solve_radial_ode, BranchSeed, RadialOdeProblem};

use crate::report::{CheckRow, Provenance, VerificationReport};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub kinds: Vec<PolytopeKind>,
    pub mesh_ladder: Vec<usize>,
    pub seed: u64,
    pub ode_tolerance: f64,
    pub frequency_tolerance: f64,
    pub link_control_tolerance: f64,
    pub gauge_tolerance: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            kinds: PolytopeKind::ALL.to_vec(),
            mesh_ladder: vec![24, 48, 96],
            seed: 0x706f6c79,
            ode_tolerance: 1e-6,
            frequency_tolerance: 1e-6,
            link_control_tolerance: 0.02,
            gauge_tolerance: 1e-3,
        }
    }
}

struct Recorder {
    rows: Vec<CheckRow>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { rows: Vec::new() }
    }

    fn record<F>(&mut self, name: &str, provenance: Provenance, f: F)
    where
        F: FnOnce() -> (String, String, bool),
    {
        let start = Instant::now();
        let (expected, computed, pass) = f();
        self.rows.push(CheckRow {
            name: name.to_string(),
            provenance,
            expected,
            computed,
            pass,
            expected_fail: false,
            skipped: false,
            wall_ms: start.elapsed().as_millis() as u64,
        });
    }

    fn record_expected_fail<F>(&mut self, name: &str, provenance: Provenance, f: F)
    where
        F: FnOnce() -> (String, String, bool),
    {
        let start = Instant::now();
        let (expected, computed, pass) = f();
        self.rows.push(CheckRow {
            name: name.to_string(),
            provenance,
            expected,
            computed,
            pass,
            expected_fail: true,
            skipped: false,
            wall_ms: start.elapsed().as_millis() as u64,
        });
    }

    fn skip(&mut self, name: &str, provenance: Provenance, reason: &str) {
        self.rows.push(CheckRow {
            name: name.to_string(),
            provenance,
            expected: reason.to_string(),
            computed: "skipped".to_string(),
            pass: true,
            expected_fail: false,
            skipped: true,
            wall_ms: 0,
        });
    }
}

pub fn run_full_verification(config: &VerifyConfig) -> VerificationReport {
    let mut rec = Recorder::new();
    polytope_checks(&mut rec, config);
    symmetry_checks(&mut rec, config);
    cover_checks(&mut rec, config);
    splitting_checks(&mut rec, config);
    local_model_checks(&mut rec);
    indicial_checks(&mut rec);
    ode_checks(&mut rec, config);
    frequency_checks(&mut rec, config);
    link_checks(&mut rec, config);
    scope_check(&mut rec);
    let all_passed = rec.rows.iter().all(|r| r.effective_pass());
    VerificationReport {
        kinds: config.kinds.iter().map(|k| k.to_string()).collect(),
        mesh_ladder: config.mesh_ladder.clone(),
        seed: config.seed,
        checks: rec.rows,
        all_passed,
    }
}

fn has_kind(config: &VerifyConfig, kind: PolytopeKind) -> bool {
    config.kinds.contains(&kind)
}

fn polytope_checks(rec: &mut Recorder, config: &VerifyConfig) {
    for kind in PolytopeKind::ALL {
        if !has_kind(config, kind) {
            continue;
        }
        rec.record(
            &format!("polytope census {kind}"),
            Provenance::PaperCensus,
            || {
                let expected = format!(
                    "V={} E={} valency={} edge_len_sq={}",
                    kind.vertex_count(),
                    kind.edge_count(),
                    kind.valency(),
                    kind.edge_length_sq()
                );
                match model_for(kind) {
                    Ok(poly) => {
                        let valency = poly.valency_profile().map(|v| v.1).unwrap_or(0);
                        let computed = format!(
                            "V={} E={} valency={} edge_len_sq={}",
                            poly.vertices.len(),
                            poly.edges.len(),
                            valency,
                            poly.edge_length_sq
                        );
                        let pass = computed == expected;
                        (expected, computed, pass)
                    }
                    Err(e) => (expected, format!("error: {e}"), false),
                }
            },
        );
    }
    // Cell counts where facets are enumerated.
    for (kind, cells) in [
        (PolytopeKind::Cell5, 5usize),
        (PolytopeKind::Cell8, 8),
        (PolytopeKind::Cell24, 24),
        (PolytopeKind::Cell600, 600),
    ] {
        if !has_kind(config, kind) {
            continue;
        }
        rec.record(
            &format!("facet census {kind}"),
            Provenance::PaperCensus,
            || {
                let poly = model_for(kind).expect("model builds");
                let computed = polyharmonic_core::polytope::enumerate_facets(&poly)
                    .map(|f| f.len().to_string())
                    .unwrap_or_else(|e| format!("error: {e}"));
                (cells.to_string(), computed.clone(), computed == cells.to_string())
            },
        );
    }
}

fn symmetry_checks(rec: &mut Recorder, config: &VerifyConfig) {
    let orders = [
        (PolytopeKind::Cell5, 60usize),
        (PolytopeKind::Cell8, 192),
        (PolytopeKind::Cell24, 576),
        (PolytopeKind::Cell120, 7200),
        (PolytopeKind::Cell600, 7200),
    ];
    for (kind, order) in orders {
        if !has_kind(config, kind) {
            continue;
        }
        rec.record(
            &format!("group order {kind}"),
            Provenance::DerivedOracle,
            || match group_for(kind) {
                Ok(g) => (
                    order.to_string(),
                    g.order().to_string(),
                    g.order() == order,
                ),
                Err(e) => (order.to_string(), format!("error: {e}"), false),
            },
        );
    }
    let censuses = [
        (PolytopeKind::Cell5, 3usize, 20usize),
        (PolytopeKind::Cell8, 3, 32),
        (PolytopeKind::Cell24, 3, 32),
        (PolytopeKind::Cell120, 3, 400),
        (PolytopeKind::Cell600, 5, 288),
    ];
    for (kind, m, count) in censuses {
        if !has_kind(config, kind) {
            continue;
        }
        rec.record(
            &format!("order-{m} edge-fixing census {kind}"),
            Provenance::PaperCensus,
            || {
                let poly = model_for(kind).expect("model builds");
                let group = group_for(kind).expect("group builds");
                let computed = census_edge_fixing(&group, &poly, m);
                (count.to_string(), computed.to_string(), computed == count)
            },
        );
    }
    let partitions = [
        (PolytopeKind::Cell24, 16usize, 6usize),
        (PolytopeKind::Cell120, 200, 6),
        (PolytopeKind::Cell600, 72, 10),
    ];
    for (kind, planes, per_plane) in partitions {
        if !has_kind(config, kind) {
            continue;
        }
        rec.record(
            &format!("plane partition {kind}"),
            Provenance::PaperCensus,
            || {
                let poly = model_for(kind).expect("model builds");
                match plane_edge_partition(&poly) {
                    Ok(part) => {
                        let computed =
                            format!("{} planes x {} edges", part.classes.len(), part.edges_per_plane);
                        let expected = format!("{planes} planes x {per_plane} edges");
                        let pass = part.classes.len() == planes && part.edges_per_plane == per_plane;
                        (expected, computed, pass)
                    }
                    Err(e) => (
                        format!("{planes} planes x {per_plane} edges"),
                        format!("error: {e}"),
                        false,
                    ),
                }
            },
        );
    }
}

fn cover_checks(rec: &mut Recorder, config: &VerifyConfig) {
    for kind in [
        PolytopeKind::Cell5,
        PolytopeKind::Cell8,
        PolytopeKind::Cell24,
        PolytopeKind::Cell600,
    ] {
        if !has_kind(config, kind) {
            continue;
        }
        rec.record(
            &format!("double cover {kind}"),
            Provenance::Trivial,
            || {
                let poly = model_for(kind).expect("model builds");
                match CoverModel::build(&poly) {
                    Ok(cover) => {
                        let odd = cover
                            .complex
                            .edge_cycles
                            .iter()
                            .all(|c| c.len() % 2 == 1);
                        (
                            "holonomy -1 on all edge cycles".into(),
                            format!("{} facets, odd cycles: {odd}", cover.facet_count()),
                            odd,
                        )
                    }
                    Err(e) => (
                        "holonomy -1 on all edge cycles".into(),
                        format!("error: {e}"),
                        false,
                    ),
                }
            },
        );
    }
    if has_kind(config, PolytopeKind::Cell16) {
        rec.record_expected_fail(
            "double cover 16-cell obstruction",
            Provenance::PaperCensus,
            || {
                let poly = model_for(PolytopeKind::Cell16).expect("model builds");
                match CoverModel::build(&poly) {
                    Err(CoreError::CoverObstruction { r, .. }) => (
                        "r-even obstruction (r = 4)".into(),
                        format!("obstruction at r = {r}"),
                        r == 4,
                    ),
                    Ok(_) => (
                        "r-even obstruction (r = 4)".into(),
                        "cover built unexpectedly".into(),
                        false,
                    ),
                    Err(e) => (
                        "r-even obstruction (r = 4)".into(),
                        format!("unexpected error: {e}"),
                        false,
                    ),
                }
            },
        );
    }
    // Lift pair structure on the 5-cell figure.
    if has_kind(config, PolytopeKind::Cell5) {
        rec.record(
            "5-cell order-6 lift cycle type",
            Provenance::PaperCensus,
            || {
                let poly = model_for(PolytopeKind::Cell5).expect("model builds");
                let cover = CoverModel::build(&poly).expect("cover valid");
                let adq = polyharmonic_core::symmetry::Rotor::adjoint(
                    &polyharmonic_core::exact::Quaternion::hurwitz_q(),
                )
                .expect("Ad_q");
                let (plus, minus) = lift_symmetry(&cover, &poly, &adq).expect("liftable");
                let orders = (plus.order(), minus.order());
                let cycles = minus.sheet_cycle_lengths();
                let pass = orders == (3, 6) && cycles == vec![2, 2, 6];
                (
                    "orders {3, 6}; order-6 cycles (2, 2, 6)".into(),
                    format!("orders {{{}, {}}}; cycles {:?}", orders.0, orders.1, cycles),
                    pass,
                )
            },
        );
    }
    for kind in [PolytopeKind::Cell8, PolytopeKind::Cell24, PolytopeKind::Cell600] {
        if !has_kind(config, kind) {
            continue;
        }
        let seed = config.seed;
        rec.record(
            &format!("odd generator lift orders {kind}"),
            Provenance::DerivedOracle,
            || {
                let poly = model_for(kind).expect("model builds");
                let group = group_for(kind).expect("group builds");
                let cover = CoverModel::build(&poly).expect("cover valid");
                let (pres, gens) = presentation_generators(kind, &poly, &group, seed)
                    .expect("generators found");
                let mut ok = true;
                let mut description = Vec::new();
                for (name, &g) in pres.generator_names.iter().zip(&gens) {
                    let order = group.element_order(g);
                    let (a, b) = lift_symmetry(&cover, &poly, &group.elements[g])
                        .expect("liftable");
                    let (lo, hi) = (a.order().min(b.order()), a.order().max(b.order()));
                    if order % 2 == 1 {
                        ok &= (lo, hi) == (order, 2 * order);
                    } else {
                        ok &= lo == order && hi == order;
                    }
                    description.push(format!("{name}: {{{lo}, {hi}}}"));
                }
                (
                    "odd m lifts with orders {m, 2m}".into(),
                    description.join(", "),
                    ok,
                )
            },
        );
    }
}

fn splitting_checks(rec: &mut Recorder, config: &VerifyConfig) {
    for kind in [
        PolytopeKind::Cell5,
        PolytopeKind::Cell8,
        PolytopeKind::Cell24,
        PolytopeKind::Cell600,
    ] {
        if !has_kind(config, kind) {
            continue;
        }
        let seed = config.seed;
        rec.record(
            &format!("splitting (model mode) {kind}"),
            Provenance::PaperCensus,
            || {
                let poly = model_for(kind).expect("model builds");
                let group = group_for(kind).expect("group builds");
                let cover = CoverModel::build(&poly).expect("cover valid");
                match presentation_generators(kind, &poly, &group, seed)
                    .and_then(|(pres, gens)| {
                        verify_splitting_model(&cover, &poly, &group, &pres, &gens)
                    }) {
                    Ok(ledger) => {
                        let signs: Vec<i8> =
                            ledger.relations.iter().map(|r| r.sign).collect();
                        (
                            "split (all relation signs +1)".into(),
                            format!("{:?}, signs {:?}", ledger.verdict, signs),
                            ledger.verdict == SplitVerdict::Split,
                        )
                    }
                    Err(e) => (
                        "split (all relation signs +1)".into(),
                        format!("error: {e}"),
                        false,
                    ),
                }
            },
        );
    }
    for kind in PolytopeKind::ADMISSIBLE {
        if !has_kind(config, kind) {
            continue;
        }
        let seed = config.seed;
        rec.record(
            &format!("splitting (certificate mode) {kind}"),
            Provenance::PaperCensus,
            || {
                let poly = model_for(kind).expect("model builds");
                let group = group_for(kind).expect("group builds");
                match presentation_generators(kind, &poly, &group, seed)
                    .and_then(|(pres, gens)| {
                        verify_splitting_certificate(&poly, &group, &pres, &gens)
                    }) {
                    Ok(ledger) => (
                        "split".into(),
                        format!("{:?}", ledger.verdict),
                        ledger.verdict == SplitVerdict::Split,
                    ),
                    Err(e) => ("split".into(), format!("error: {e}"), false),
                }
            },
        );
    }
}

fn local_model_checks(rec: &mut Recorder) {
    rec.record(
        "scalar minimal N(0), m = 3 and m = 5",
        Provenance::PaperCensus,
        || {
            let m3 = scalar_selection(3).expect("odd m").min_n0();
            let m5 = scalar_selection(5).expect("odd m").min_n0();
            (
                "3/2 and 5/2".into(),
                format!("{m3} and {m5}"),
                m3.twice() == 3 && m5.twice() == 5,
            )
        },
    );
    rec.record(
        "one-form closed-branch minimal N(0), m = 3",
        Provenance::PaperCensus,
        || {
            let menu = oneform_selection(3).expect("odd m");
            let closed = &menu.branches[0];
            (
                "1/2 (closed branch)".into(),
                format!("{} (closed: {})", closed.min_n0, closed.closed),
                closed.min_n0.twice() == 1 && closed.closed,
            )
        },
    );
    rec.record(
        "index-convention consistency m in {3,5,7,9}",
        Provenance::DerivedOracle,
        || {
            let mut ok = true;
            for m in [3i64, 5, 7, 9] {
                let menu = scalar_selection(m).expect("odd m");
                let b = &menu.branches[0];
                for j in 0..8u64 {
                    let k_section = b.min_k + j * m as u64;
                    ok &= (2 * (k_section - 1) + 1) % m as u64 == 0;
                }
            }
            ("2 k_mode + 1 = 0 mod m".into(), format!("holds: {ok}"), ok)
        },
    );
    rec.record(
        "even m rejected by selection rules",
        Provenance::Trivial,
        || {
            let rejected = scalar_selection(4).is_err() && oneform_selection(6).is_err();
            ("rejection".into(), format!("rejected: {rejected}"), rejected)
        },
    );
}

fn indicial_checks(rec: &mut Recorder) {
    rec.record(
        "indicial_vertex(1) exact pair and -2/5 comparison",
        Provenance::PaperCensus,
        || {
            let pair = indicial_vertex(&Lambda::from_ratio(1, 1)).expect("lambda >= 0");
            let mu = pair.mu.exact().cloned();
            let mu_prime = pair.mu_prime.exact().cloned();
            let expected_mu = ExactScalar::from_ratio(-3, 2) + ExactScalar::sqrt5_ratio(1, 2);
            let expected_mu_prime =
                ExactScalar::from_ratio(3, 2) + ExactScalar::sqrt5_ratio(1, 2);
            let pass = mu.as_ref() == Some(&expected_mu)
                && mu_prime.as_ref() == Some(&expected_mu_prime)
                && mu.as_ref().is_some_and(|m| *m > ExactScalar::from_ratio(-2, 5));
            (
                "((-3+sqrt5)/2, (3+sqrt5)/2), mu > -2/5".into(),
                format!(
                    "({}, {}), mu > -2/5: {pass}",
                    pair.mu, pair.mu_prime
                ),
                pass,
            )
        },
    );
    rec.record(
        "indicial_edge(3/4) = (1/2, 3/2)",
        Provenance::Trivial,
        || {
            let pair = indicial_edge(&Lambda::from_ratio(3, 4)).expect("lambda >= 0");
            let pass = pair.mu.exact() == Some(&ExactScalar::from_ratio(1, 2))
                && pair.mu_prime.exact() == Some(&ExactScalar::from_ratio(3, 2));
            (
                "(1/2, 3/2)".into(),
                format!("({}, {})", pair.mu, pair.mu_prime),
                pass,
            )
        },
    );
}

fn ode_checks(rec: &mut Recorder, config: &VerifyConfig) {
    let tol = config.ode_tolerance;
    rec.record(
        "ODE exponent recovery across lambda sweep",
        Provenance::DerivedOracle,
        || {
            let lambdas = [(1i64, 2i64), (3, 4), (1, 1), (2, 1), (13, 4)];
            let mut worst = 0.0_f64;
            for (num, den) in lambdas {
                let lambda = num as f64 / den as f64;
                let edge_oracle = indicial_edge(&Lambda::from_ratio(num, den)).unwrap();
                let profile = solve_radial_ode(
                    &RadialOdeProblem::vertex_sphere(lambda),
                    BranchSeed::Regular,
                )
                .expect("integration succeeds");
                worst = worst.max((profile.fitted_exponent - edge_oracle.mu.to_f64()).abs());
                let vertex_oracle = indicial_vertex(&Lambda::from_ratio(num, den)).unwrap();
                let profile = solve_radial_ode(
                    &RadialOdeProblem::vertex_inhom(lambda, 0.0),
                    BranchSeed::Regular,
                )
                .expect("integration succeeds");
                worst = worst.max((profile.fitted_exponent - vertex_oracle.mu.to_f64()).abs());
            }
            (
                format!("max |fitted - oracle| < {tol:.0e}"),
                format!("max deviation {worst:.3e}"),
                worst < tol,
            )
        },
    );
    rec.record(
        "Euler-truncated edge mode exponents",
        Provenance::Trivial,
        || {
            let mut worst = 0.0_f64;
            for k in [0i64, 1, 2] {
                let profile = solve_radial_ode(
                    &RadialOdeProblem::edge_flat_euler(k),
                    BranchSeed::Regular,
                )
                .expect("integration succeeds");
                worst = worst.max((profile.fitted_exponent - (k as f64 + 0.5)).abs());
            }
            (
                "exponents k + 1/2 within 1e-8".into(),
                format!("max deviation {worst:.3e}"),
                worst < 1e-8,
            )
        },
    );
    rec.record(
        "singular-branch exclusion and recovery",
        Provenance::DerivedOracle,
        || {
            let pure = solve_radial_ode(
                &RadialOdeProblem::vertex_sphere(1.0),
                BranchSeed::Regular,
            )
            .expect("integration succeeds");
            let mixed = solve_radial_ode(
                &RadialOdeProblem::vertex_sphere(0.5),
                BranchSeed::Mixed { alpha: 1.0, beta: 0.1 },
            )
            .expect("integration succeeds");
            let pass = pure.beta.abs() < 1e-8
                && (mixed.beta - 0.1).abs() / 0.1 < 0.05
                && polyharmonic_spectral::ode::verify_beta_exclusion(&pure, 1.0, 1e-6)
                && !polyharmonic_spectral::ode::verify_beta_exclusion(&mixed, 0.5, 1e-6);
            (
                "beta < 1e-8 pure; beta = 0.1 recovered within 5%".into(),
                format!("pure beta {:.2e}, mixed beta {:.4}", pure.beta, mixed.beta),
                pass,
            )
        },
    );
}

fn frequency_checks(rec: &mut Recorder, config: &VerifyConfig) {
    let tol = config.frequency_tolerance;
    let quad = FrequencyConfig::default();
    rec.record(
        "frequency constant on homogeneous degrees 1/2, 3/2, 5/2",
        Provenance::DerivedOracle,
        || {
            let radii = log_radii(0.05, 1.0, 12);
            let mut worst = 0.0_f64;
            for (twice, expected) in [(1i64, 0.5), (3, 1.5), (5, 2.5)] {
                let field = SampledField::Flat {
                    model: FieldModel::HomogeneousBranch {
                        degree_twice: twice,
                        coeff: 1.0,
                    },
                };
                let data = frequency_function(&field, [0.0; 3], &radii, &quad)
                    .expect("probes valid");
                for n in data.n_values {
                    worst = worst.max((n - expected).abs());
                }
            }
            (
                format!("|N - degree| < {tol:.0e}"),
                format!("max deviation {worst:.3e}"),
                worst < tol,
            )
        },
    );
    rec.record(
        "trivial frequencies: N = 1 on x1, N = 0 on constants",
        Provenance::Trivial,
        || {
            let radii = log_radii(0.1, 1.5, 10);
            let coord = SampledField::Flat {
                model: FieldModel::Coordinate { axis: 0 },
            };
            let data = frequency_function(&coord, [0.0; 3], &radii, &quad).expect("valid");
            let mut worst = data
                .n_values
                .iter()
                .fold(0.0_f64, |m, n| m.max((n - 1.0).abs()));
            let constant = SampledField::Flat {
                model: FieldModel::Constant { value: 1.0 },
            };
            let data = frequency_function(&constant, [0.0; 3], &radii, &quad).expect("valid");
            worst = worst.max(data.n_values.iter().fold(0.0_f64, |m, n| m.max(n.abs())));
            (
                "exact degrees 1 and 0".into(),
                format!("max deviation {worst:.3e}"),
                worst < 1e-9,
            )
        },
    );
    rec.record(
        "rescaling identities on the mixed blowup model",
        Provenance::DerivedOracle,
        || {
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
            let radii = log_radii(0.2, 2.0, 12);
            let mut worst = 0.0_f64;
            for lambda in [1.0, 0.5, 0.2] {
                let report = rescaled_blowup(&mixed, [0.0; 3], lambda, &radii, &quad)
                    .expect("probes valid");
                worst = worst
                    .max(report.k_identity_deviation)
                    .max(report.n_identity_deviation);
            }
            (
                format!("K and N identities within {tol:.0e}"),
                format!("max deviation {worst:.3e}"),
                worst < tol,
            )
        },
    );
}

fn link_checks(rec: &mut Recorder, config: &VerifyConfig) {
    let ladder = &config.mesh_ladder;
    let insufficient = ladder.len() < 2 || *ladder.last().unwrap_or(&0) < 16;
    if insufficient {
        for name in [
            "link control: round sphere",
            "link control: antipodal pair",
            "link: 5-cell vertex sector margin",
            "link: cut relocation gauge",
        ] {
            rec.skip(name, Provenance::DerivedOracle, "insufficient refinement ladder");
        }
        return;
    }
    let finest = *ladder.last().unwrap();
    let ctrl_tol = config.link_control_tolerance;
    rec.record("link control: round sphere", Provenance::Trivial, || {
        let spec = solve_link(
            &LinkProblem::round_sphere(),
            &LinkConfig::with_resolution(finest.min(48)),
        )
        .expect("solver converges");
        let pass = spec.eigenvalues[0].abs() < 1e-6
            && (1..4).all(|i| (spec.eigenvalues[i] - 2.0).abs() / 2.0 < ctrl_tol);
        (
            "lambda_1 = 0, triple at 2 within 2%".into(),
            format!(
                "[{:.6}, {:.6}, {:.6}, {:.6}]",
                spec.eigenvalues[0], spec.eigenvalues[1], spec.eigenvalues[2], spec.eigenvalues[3]
            ),
            pass,
        )
    });
    rec.record(
        "link control: antipodal pair",
        Provenance::DerivedOracle,
        || {
            let spectra = solve_link_ladder(&LinkProblem::antipodal_pair(), ladder)
                .expect("solver converges");
            let finest_val = spectra.last().unwrap().eigenvalues[0];
            let monotone = spectra
                .windows(2)
                .all(|w| w[1].eigenvalues[0] <= w[0].eigenvalues[0] + 1e-9);
            let pass = (finest_val - 0.75).abs() / 0.75 < ctrl_tol && monotone;
            (
                "lambda_1 -> 3/4 within 2%, decreasing".into(),
                format!(
                    "ladder {:?} -> {:.6} (monotone: {monotone})",
                    ladder, finest_val
                ),
                pass,
            )
        },
    );
    rec.record(
        "link: 5-cell vertex sector margin",
        Provenance::PaperCensus,
        || {
            let poly = model_for(PolytopeKind::Cell5).expect("model builds");
            let dirs = vertex_link_directions(&poly, 0);
            let problem =
                LinkProblem::from_directions(&dirs, 0, Some(3)).expect("valid configuration");
            let spectra = solve_link_ladder(&problem, ladder).expect("solver converges");
            let margins: Vec<f64> = spectra
                .iter()
                .map(|s| s.eigenvalues[0] - 1.0)
                .collect();
            let n = margins.len();
            let positive = margins.iter().all(|&m| m > 0.0);
            let stable = margins[n - 1] >= 0.5 * margins[n - 2];
            (
                "lambda_1 > 1 with non-collapsing margin".into(),
                format!("margins {:?}", margins.iter().map(|m| (m * 1e6).round() / 1e6).collect::<Vec<_>>()),
                positive && stable,
            )
        },
    );
    rec.record("link: cut relocation gauge", Provenance::DerivedOracle, || {
        let poly = model_for(PolytopeKind::Cell5).expect("model builds");
        let dirs = vertex_link_directions(&poly, 0);
        let base = LinkProblem::from_directions(&dirs, 0, None).expect("valid configuration");
        let mut rerouted = base.clone();
        rerouted.pairing = vec![(0, 2), (1, 3)];
        let res = ladder[ladder.len() / 2];
        let a = solve_link(&base, &LinkConfig::with_resolution(res)).expect("solver converges");
        let b = solve_link(&rerouted, &LinkConfig::with_resolution(res)).expect("solver converges");
        let rel = (a.eigenvalues[0] - b.eigenvalues[0]).abs() / a.eigenvalues[0];
        (
            format!("lambda_1 discrepancy < {:.1e}", config.gauge_tolerance),
            format!("relative discrepancy {rel:.3e}"),
            rel < config.gauge_tolerance,
        )
    });
}

fn scope_check(rec: &mut Recorder) {
    rec.record(
        "out-of-scope surface acknowledged",
        Provenance::Trivial,
        || {
            (
                "global Z/2 harmonic sections and the analytic estimates stay out of scope".into(),
                "computable shadows covered by the cover/splitting/local/spectral checks".into(),
                true,
            )
        },
    );
}
