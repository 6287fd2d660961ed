//! Command-line front door: exact polytope/symmetry/cover reports, local
//! exponent menus, the spectral drivers, and the full verification run.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use polyharmonic_cli::report::{
    round12, BranchJson, CensusReport, CoverReport, CoverSummary, ExponentMenuJson,
    LiftReportJson, OdeSummaryJson, PlanePartitionReport, PolytopeCounts, PolytopeReport,
    RelationJson, SplittingJson, SymmetryReport, TransitivityJson,
};
use polyharmonic_cli::verify::{run_full_verification, VerifyConfig};
use polyharmonic_core::cache::{group_for, model_for};
use polyharmonic_core::cover::{
    lift_symmetry, presentation_generators, verify_splitting_certificate, verify_splitting_model,
    CoverModel, SplitMode, SplitVerdict,
};
use polyharmonic_core::error::CoreError;
use polyharmonic_core::polytope::{enumerate_facets, PolytopeKind};
use polyharmonic_core::symmetry::{census_edge_fixing, plane_edge_partition, transitivity_report};
use polyharmonic_spectral::frequency::{
    frequency_function, log_radii, FieldModel, FrequencyConfig, SampledField,
};
use polyharmonic_spectral::link::{
    solve_link_ladder, vertex_link_directions, LinkProblem,
};
use polyharmonic_spectral::local::{oneform_selection, scalar_selection, FieldKind};
use polyharmonic_spectral::ode::{solve_radial_ode, BranchSeed, RadialOdeProblem};

#[derive(Parser)]
#[command(
    name = "polyharmonic",
    about = "Exact regular 4-polytope singularity models: construction, symmetry censuses, double covers, and the local spectral analysis"
)]
struct Cli {
    /// Output directory for reports (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the presentation-generator search.
    #[arg(long, global = true, default_value_t = 0x706f6c79)]
    seed: u64,
    /// Mesh resolution ladder for the link eigensolver.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [24usize, 48, 96])]
    mesh_ladder: Vec<usize>,
    /// Numeric tolerance for the ODE/frequency checks.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polytope model and report its exact census.
    Polytope(KindArg),
    /// Generate the rotation group and report orders, censuses, partitions.
    Symmetry(KindArg),
    /// Double cover construction, symmetry lifts, and splitting.
    Cover {
        #[command(subcommand)]
        action: CoverAction,
    },
    /// Local edge-model data.
    Local {
        #[command(subcommand)]
        action: LocalAction,
    },
    /// Floating-point spectral drivers.
    Spectral {
        #[command(subcommand)]
        action: SpectralAction,
    },
    /// Run the whole verification suite and export the report.
    Verify {
        /// Restrict to specific kinds (defaults to all six).
        #[arg(long, value_delimiter = ',')]
        kind: Vec<String>,
    },
}

#[derive(Args)]
struct KindArg {
    /// Polytope kind: 5-cell, 8-cell, 16-cell, 24-cell, 120-cell, 600-cell.
    #[arg(long)]
    kind: String,
}

#[derive(Subcommand)]
enum CoverAction {
    /// Build the double cover and verify holonomy.
    Build(KindArg),
    /// Lift the presentation generators and report both lifts.
    Lift(KindArg),
    /// Verify the splitting of the lift extension.
    Split {
        #[command(flatten)]
        kind: KindArg,
        /// certificate mode instead of the sheet model.
        #[arg(long)]
        certificate: bool,
    },
}

#[derive(Subcommand)]
enum LocalAction {
    /// Invariant-mode exponent menus for a Z/m edge stabilizer.
    Exponents {
        #[arg(long)]
        m: i64,
        /// scalar or one-form.
        #[arg(long, default_value = "scalar")]
        kind: String,
    },
}

#[derive(Subcommand)]
enum SpectralAction {
    /// Solve a radial ODE and fit its Frobenius exponents.
    Ode {
        /// edge-flat, edge-flat-euler, vertex-sphere, vertex-inhom.
        #[arg(long, default_value = "vertex-sphere")]
        kind: String,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 0)]
        k: i64,
        #[arg(long, default_value_t = 0)]
        n: i64,
        #[arg(long, default_value_t = 0.0)]
        energy: f64,
        /// Inject this singular-branch coefficient into the seed.
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
    },
    /// Frequency function of a homogeneous branch model: CSV (r, K, N).
    Frequency {
        /// Twice the homogeneity degrees, comma separated (1 = degree 1/2).
        #[arg(long, value_delimiter = ',', default_values_t = [1i64, 3, 5])]
        degrees_twice: Vec<i64>,
    },
    /// Vertex-link eigenvalues across the mesh ladder: CSV rows per level.
    Link {
        /// round, antipodal, or 5-cell-vertex.
        #[arg(long, default_value = "5-cell-vertex")]
        problem: String,
        /// Restrict to the Z/3-invariant sector (5-cell problem).
        #[arg(long)]
        sector: bool,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    if cli.tol <= 0.0 {
        bail!("--tol must be positive");
    }
    if cli.mesh_ladder.is_empty() || cli.mesh_ladder.windows(2).any(|w| w[0] >= w[1]) {
        bail!("--mesh-ladder must be nonempty and strictly increasing");
    }
    match &cli.command {
        Command::Polytope(kind) => {
            let kind = parse_kind(&kind.kind)?;
            emit(&cli, "polytope", &polytope_report(kind)?)
        }
        Command::Symmetry(kind) => {
            let kind = parse_kind(&kind.kind)?;
            emit(&cli, "symmetry", &symmetry_report(kind)?)
        }
        Command::Cover { action } => {
            let report = match action {
                CoverAction::Build(k) => {
                    cover_report(parse_kind(&k.kind)?, cli.seed, CoverStage::Build, false)?
                }
                CoverAction::Lift(k) => {
                    cover_report(parse_kind(&k.kind)?, cli.seed, CoverStage::Lift, false)?
                }
                CoverAction::Split { kind, certificate } => cover_report(
                    parse_kind(&kind.kind)?,
                    cli.seed,
                    CoverStage::Split,
                    *certificate,
                )?,
            };
            emit(&cli, "cover", &report)
        }
        Command::Local { action } => match action {
            LocalAction::Exponents { m, kind } => {
                let menu = match kind.as_str() {
                    "scalar" => scalar_selection(*m)?,
                    "one-form" | "oneform" | "one_form" => oneform_selection(*m)?,
                    other => bail!("unknown field kind: {other}"),
                };
                let json = ExponentMenuJson {
                    m: menu.m,
                    kind: match menu.kind {
                        FieldKind::Scalar => "scalar".into(),
                        FieldKind::OneForm => "one-form".into(),
                    },
                    branches: menu
                        .branches
                        .iter()
                        .map(|b| BranchJson {
                            residue_section: b.residue_section,
                            residue_mode: b.residue_mode,
                            min_k: b.min_k,
                            min_n0: b.min_n0.to_string(),
                            closed: b.closed,
                        })
                        .collect(),
                };
                emit(&cli, "exponents", &json)
            }
        },
        Command::Spectral { action } => match action {
            SpectralAction::Ode {
                kind,
                lambda,
                k,
                n,
                energy,
                beta,
            } => {
                let mut problem = match kind.as_str() {
                    "edge-flat" => RadialOdeProblem::edge_flat(*k, *n, 1.0),
                    "edge-flat-euler" => RadialOdeProblem::edge_flat_euler(*k),
                    "vertex-sphere" => RadialOdeProblem::vertex_sphere(*lambda),
                    "vertex-inhom" => RadialOdeProblem::vertex_inhom(*lambda, *energy),
                    other => bail!("unknown ODE kind: {other}"),
                };
                problem.lambda = *lambda;
                let seed = if *beta == 0.0 {
                    BranchSeed::Regular
                } else {
                    BranchSeed::Mixed {
                        alpha: 1.0,
                        beta: *beta,
                    }
                };
                let profile = solve_radial_ode(&problem, seed)?;
                let summary = OdeSummaryJson {
                    kind: format!("{:?}", problem.kind),
                    lambda: round12(*lambda),
                    exponents: [round12(profile.exponents.0), round12(profile.exponents.1)],
                    fitted_exponent: round12(profile.fitted_exponent),
                    alpha: round12(profile.alpha),
                    beta: round12(profile.beta),
                    fit_residual: round12(profile.fit_residual),
                };
                if let Some(dir) = &cli.out {
                    std::fs::create_dir_all(dir)?;
                    let mut csv = String::from("rho,value\n");
                    for (r, v) in profile.rho.iter().zip(&profile.values) {
                        csv.push_str(&format!("{:.12e},{:.12e}\n", r, v));
                    }
                    std::fs::write(dir.join("ode_profile.csv"), csv)?;
                }
                emit(&cli, "ode", &summary)
            }
            SpectralAction::Frequency { degrees_twice } => {
                let config = FrequencyConfig::default();
                let radii = log_radii(0.05, 1.0, 12);
                let mut csv = String::from("degree_twice,r,K,N\n");
                for &twice in degrees_twice {
                    let field = SampledField::Flat {
                        model: FieldModel::HomogeneousBranch {
                            degree_twice: twice,
                            coeff: 1.0,
                        },
                    };
                    let data = frequency_function(&field, [0.0; 3], &radii, &config)?;
                    for i in 0..data.radii.len() {
                        csv.push_str(&format!(
                            "{},{:.12e},{:.12e},{:.12e}\n",
                            twice, data.radii[i], data.k_values[i], data.n_values[i]
                        ));
                    }
                }
                write_or_print(&cli, "frequency.csv", &csv)
            }
            SpectralAction::Link { problem, sector } => {
                let sector_order = if *sector { Some(3) } else { None };
                let problem = match problem.as_str() {
                    "round" => LinkProblem::round_sphere(),
                    "antipodal" => LinkProblem::antipodal_pair(),
                    "5-cell-vertex" | "five-cell-vertex" => {
                        let poly = model_for(PolytopeKind::Cell5)?;
                        let dirs = vertex_link_directions(&poly, 0);
                        LinkProblem::from_directions(&dirs, 0, sector_order)?
                    }
                    other => bail!("unknown link problem: {other}"),
                };
                let spectra = solve_link_ladder(&problem, &cli.mesh_ladder)?;
                let mut csv = String::from("refinement_level,n_phi,dofs,lambda1,lambda2,lambda3,lambda4\n");
                for (level, spec) in spectra.iter().enumerate() {
                    csv.push_str(&format!(
                        "{},{},{},{:.12e},{:.12e},{:.12e},{:.12e}\n",
                        level,
                        spec.n_phi,
                        spec.dofs,
                        spec.eigenvalues[0],
                        spec.eigenvalues[1],
                        spec.eigenvalues[2],
                        spec.eigenvalues[3]
                    ));
                }
                write_or_print(&cli, "link_spectrum.csv", &csv)
            }
        },
        Command::Verify { kind } => {
            let kinds = if kind.is_empty() {
                PolytopeKind::ALL.to_vec()
            } else {
                kind.iter()
                    .map(|k| parse_kind(k))
                    .collect::<Result<Vec<_>>>()?
            };
            let config = VerifyConfig {
                kinds,
                mesh_ladder: cli.mesh_ladder.clone(),
                seed: cli.seed,
                ode_tolerance: cli.tol,
                frequency_tolerance: cli.tol,
                ..VerifyConfig::default()
            };
            let report = run_full_verification(&config);
            for check in &report.checks {
                let status = if check.skipped {
                    "SKIP"
                } else if check.pass && check.expected_fail {
                    "PASS (expected obstruction)"
                } else if check.pass {
                    "PASS"
                } else {
                    "FAIL"
                };
                println!("{status:28} {}", check.name);
            }
            if let Some(dir) = &cli.out {
                report.export(dir)?;
                println!("report written to {}", dir.display());
            }
            if !report.all_passed {
                bail!("verification failed");
            }
            Ok(())
        }
    }
}

fn parse_kind(s: &str) -> Result<PolytopeKind> {
    s.parse::<PolytopeKind>().map_err(|e| anyhow::anyhow!(e))
}

fn emit<T: serde::Serialize>(cli: &Cli, name: &str, value: &T) -> Result<()> {
    let json = serde_json::to_string_pretty(value)?;
    match &cli.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(format!("{name}.json"));
            std::fs::write(&path, json).with_context(|| format!("writing {path:?}"))?;
            println!("wrote {}", path.display());
        }
        None => println!("{json}"),
    }
    Ok(())
}

fn write_or_print(cli: &Cli, name: &str, content: &str) -> Result<()> {
    match &cli.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join(name), content)?;
            println!("wrote {}", dir.join(name).display());
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn polytope_report(kind: PolytopeKind) -> Result<PolytopeReport> {
    let poly = model_for(kind)?;
    let cells = enumerate_facets(&poly).ok().map(|f| f.len());
    let (_, valency) = poly.valency_profile()?;
    Ok(PolytopeReport {
        kind: kind.to_string(),
        schlafli: [poly.schlafli.0, poly.schlafli.1, poly.schlafli.2],
        counts: PolytopeCounts {
            vertices: poly.vertices.len(),
            edges: poly.edges.len(),
            cells,
        },
        valency,
        edge_length_sq: poly.edge_length_sq.to_string(),
        vertex_norm_sq: poly.vertex_norm_sq.to_string(),
        vertices: poly
            .vertices
            .iter()
            .map(|v| std::array::from_fn(|i| v.0[i].to_string()))
            .collect(),
        edges: poly.edges.iter().map(|&(u, v)| [u, v]).collect(),
    })
}

fn symmetry_report(kind: PolytopeKind) -> Result<SymmetryReport> {
    let poly = model_for(kind)?;
    let group = group_for(kind)?;
    let partition = plane_edge_partition(&poly)?;
    let trans = transitivity_report(&group, &poly);
    Ok(SymmetryReport {
        kind: kind.to_string(),
        order: group.order(),
        generators: group
            .generators
            .iter()
            .map(|&g| {
                (0..4)
                    .map(|i| {
                        let row = group.elements[g].matrix.row(i);
                        format!("[{}, {}, {}, {}]", row[0], row[1], row[2], row[3])
                    })
                    .collect()
            })
            .collect(),
        censuses: CensusReport {
            order3_edge_fixing: census_edge_fixing(&group, &poly, 3),
            order5_edge_fixing: census_edge_fixing(&group, &poly, 5),
        },
        plane_partition: PlanePartitionReport {
            plane_count: partition.classes.len(),
            polygon_size: partition.edges_per_plane,
            closed_polygons: partition.classes.iter().all(|c| c.closed_polygon),
        },
        transitivity: TransitivityJson {
            vertex: trans.vertex_transitive,
            edge: trans.edge_transitive,
        },
    })
}

enum CoverStage {
    Build,
    Lift,
    Split,
}

fn cover_report(
    kind: PolytopeKind,
    seed: u64,
    stage: CoverStage,
    certificate: bool,
) -> Result<CoverReport> {
    let poly = model_for(kind)?;
    let cover = match CoverModel::build(&poly) {
        Ok(cover) => Some(cover),
        Err(CoreError::CoverObstruction { u, v, r }) => {
            return Ok(CoverReport {
                kind: kind.to_string(),
                cover: None,
                obstruction: Some(format!(
                    "edge ({u}, {v}) has {r} facets around it; holonomy +1"
                )),
                lifts: Vec::new(),
                splitting: None,
            });
        }
        Err(CoreError::UnsupportedKind { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let summary = cover.as_ref().map(|c| CoverSummary {
        facets: c.facet_count(),
        sheets: c.sheet_count(),
        edge_cycle_lengths: c.complex.edge_cycles.iter().map(|cy| cy.len()).collect(),
    });
    let mut lifts = Vec::new();
    let mut splitting = None;
    match stage {
        CoverStage::Build => {}
        CoverStage::Lift => {
            let cover = cover.as_ref().context("no facet model for this kind")?;
            let group = group_for(kind)?;
            let (pres, gens) = presentation_generators(kind, &poly, &group, seed)?;
            for (name, &g) in pres.generator_names.iter().zip(&gens) {
                let (plus, minus) = lift_symmetry(cover, &poly, &group.elements[g])?;
                lifts.push(LiftReportJson {
                    element: name.to_string(),
                    order_downstairs: group.element_order(g),
                    lift_orders: [plus.order(), minus.order()],
                    coherent_sheet_cycles: plus.sheet_cycle_lengths(),
                    deck_composed_sheet_cycles: minus.sheet_cycle_lengths(),
                });
            }
        }
        CoverStage::Split => {
            let group = group_for(kind)?;
            let (pres, gens) = presentation_generators(kind, &poly, &group, seed)?;
            let ledger = if certificate || cover.is_none() {
                verify_splitting_certificate(&poly, &group, &pres, &gens)?
            } else {
                verify_splitting_model(cover.as_ref().unwrap(), &poly, &group, &pres, &gens)?
            };
            splitting = Some(SplittingJson {
                mode: match ledger.mode {
                    SplitMode::Model => "model".into(),
                    SplitMode::Certificate => "certificate".into(),
                },
                presentation: ledger.presentation.to_string(),
                relations: ledger
                    .relations
                    .iter()
                    .map(|r| RelationJson {
                        word: r.word.clone(),
                        sign: r.sign,
                    })
                    .collect(),
                verdict: match ledger.verdict {
                    SplitVerdict::Split => "split".into(),
                    SplitVerdict::NonSplit => "non-split".into(),
                    SplitVerdict::Inconclusive => "inconclusive".into(),
                },
            });
        }
    }
    Ok(CoverReport {
        kind: kind.to_string(),
        cover: summary,
        obstruction: None,
        lifts,
        splitting,
    })
}
