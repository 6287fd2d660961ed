//! The branched vertex-link eigenproblem: Laplace-Beltrami on S^2 for
//! sections of the real line bundle with monodromy -1 around every branch
//! point, optionally restricted to the Z/m-invariant sector.
//!
//! Branch cuts are mesh-edge-aligned: a cut between two paired punctures is
//! a simple path in the dual graph, and the primal edges it crosses carry a
//! sign flip. Puncture vertices are Dirichlet (the eigensections vanish like
//! dist^(1/2)).

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Result, SpectralError};
use crate::mesh::{graded_rings, SphereMesh};
use crate::sparse::{lowest_eigenvalues, CsrMatrix};

#[derive(Debug, Clone, Copy)]
pub struct PolarPoint {
    pub theta: f64,
    pub phi: f64,
}

#[derive(Debug, Clone)]
pub struct LinkProblem {
    /// Branch points in polar coordinates of the mesh frame (axis = +z).
    pub punctures: Vec<PolarPoint>,
    /// Which punctures each cut connects.
    pub pairing: Vec<(usize, usize)>,
    /// Restrict to the invariant sector of the rotation by 2 pi / order
    /// about the polar axis.
    pub sector_order: Option<usize>,
}

impl LinkProblem {
    /// Control problem: no punctures, trivial bundle.
    pub fn round_sphere() -> Self {
        LinkProblem {
            punctures: Vec::new(),
            pairing: Vec::new(),
            sector_order: None,
        }
    }

    /// Two antipodal punctures at the poles.
    pub fn antipodal_pair() -> Self {
        LinkProblem {
            punctures: vec![
                PolarPoint { theta: 0.0, phi: 0.0 },
                PolarPoint {
                    theta: std::f64::consts::PI,
                    phi: 0.0,
                },
            ],
            pairing: vec![(0, 1)],
            sector_order: None,
        }
    }

    /// Branch points from unit directions: the direction `axis_index` goes
    /// to the north pole and the first remaining direction fixes phi = 0.
    pub fn from_directions(
        directions: &[[f64; 3]],
        axis_index: usize,
        sector_order: Option<usize>,
    ) -> Result<Self> {
        let axis = directions[axis_index];
        let other = directions
            .iter()
            .enumerate()
            .find(|(i, d)| *i != axis_index && cross(axis, **d).iter().any(|c| c.abs() > 1e-9))
            .map(|(_, d)| *d)
            .ok_or_else(|| SpectralError::BadBranchConfiguration {
                reason: "all directions are collinear with the axis".into(),
            })?;
        let ex = normalize(sub(other, scale(axis, dot3(other, axis))));
        let ey = cross(axis, ex);
        let mut punctures = Vec::with_capacity(directions.len());
        for d in directions {
            let z = dot3(*d, axis).clamp(-1.0, 1.0);
            let theta = z.acos();
            let phi = if theta < 1e-12 || theta > std::f64::consts::PI - 1e-12 {
                0.0
            } else {
                let raw = dot3(*d, ey).atan2(dot3(*d, ex));
                if raw < 0.0 {
                    raw + 2.0 * std::f64::consts::PI
                } else {
                    raw
                }
            };
            punctures.push(PolarPoint { theta, phi });
        }
        let n = punctures.len();
        if n % 2 != 0 {
            return Err(SpectralError::BadBranchConfiguration {
                reason: format!("{n} punctures: the branched bundle needs an even count"),
            });
        }
        let pairing = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
        Ok(LinkProblem {
            punctures,
            pairing,
            sector_order,
        })
    }
}

/// Unit tangent directions of the edges incident to a polytope vertex,
/// expressed in a deterministic orthonormal basis of the tangent space.
/// The returned list follows the vertex's sorted neighbor order.
pub fn vertex_link_directions(
    poly: &polyharmonic_core::polytope::Polytope,
    vertex: usize,
) -> Vec<[f64; 3]> {
    let v: Vec<f64> = poly.vertices[vertex].0.iter().map(|c| c.to_f64()).collect();
    let vn = (0..4).map(|i| v[i] * v[i]).sum::<f64>().sqrt();
    let v: Vec<f64> = v.iter().map(|c| c / vn).collect();
    // Orthonormal basis of the tangent space v^perp.
    let mut frame: Vec<[f64; 4]> = Vec::new();
    for axis in 0..4 {
        let mut e = [0.0; 4];
        e[axis] = 1.0;
        for i in 0..4 {
            e[i] -= v[i] * v[axis];
        }
        for f in &frame {
            let p: f64 = (0..4).map(|i| e[i] * f[i]).sum();
            for i in 0..4 {
                e[i] -= p * f[i];
            }
        }
        let n: f64 = (0..4).map(|i| e[i] * e[i]).sum::<f64>().sqrt();
        if n > 1e-9 {
            for x in e.iter_mut() {
                *x /= n;
            }
            frame.push(e);
            if frame.len() == 3 {
                break;
            }
        }
    }
    let adjacency = poly.adjacency();
    adjacency[vertex]
        .iter()
        .map(|&w| {
            let u: Vec<f64> = poly.vertices[w].0.iter().map(|c| c.to_f64()).collect();
            let proj: f64 = (0..4).map(|i| u[i] * v[i]).sum();
            let mut t = [0.0; 4];
            for i in 0..4 {
                t[i] = u[i] - proj * v[i];
            }
            let n: f64 = (0..4).map(|i| t[i] * t[i]).sum::<f64>().sqrt();
            let mut out = [0.0; 3];
            for (k, f) in frame.iter().enumerate() {
                out[k] = (0..4).map(|i| t[i] * f[i]).sum::<f64>() / n;
            }
            out
        })
        .collect()
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn scale(a: [f64; 3], s: f64) -> [f64; 3] {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    let n = dot3(a, a).sqrt();
    scale(a, 1.0 / n)
}

#[derive(Debug, Clone, Copy)]
pub struct LinkConfig {
    /// Azimuthal divisions; the polar ring count is n_phi / 2.
    pub n_phi: usize,
    /// Dyadic grading levels toward the puncture latitudes.
    pub grading_levels: usize,
    pub nev: usize,
    pub tol: f64,
    pub max_iterations: usize,
}

impl LinkConfig {
    pub fn with_resolution(n_phi: usize) -> Self {
        LinkConfig {
            n_phi,
            grading_levels: 4,
            nev: 4,
            tol: 1e-9,
            max_iterations: 400,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LinkSpectrum {
    pub n_phi: usize,
    pub dofs: usize,
    pub eigenvalues: Vec<f64>,
}

/// Assembled branched FEM system, exposed for the gauge tests.
pub struct LinkSystem {
    pub mesh: SphereMesh,
    pub puncture_vertices: Vec<usize>,
    pub stiffness: CsrMatrix,
    pub mass: CsrMatrix,
    pub dofs: usize,
}

pub fn solve_link(problem: &LinkProblem, config: &LinkConfig) -> Result<LinkSpectrum> {
    let system = assemble_link(problem, config)?;
    let eigenvalues = lowest_eigenvalues(
        &system.stiffness,
        &system.mass,
        config.nev,
        config.tol,
        config.max_iterations,
    )?;
    Ok(LinkSpectrum {
        n_phi: config.n_phi,
        dofs: system.dofs,
        eigenvalues,
    })
}

/// Solve across a strictly increasing resolution ladder.
pub fn solve_link_ladder(problem: &LinkProblem, ladder: &[usize]) -> Result<Vec<LinkSpectrum>> {
    if ladder.is_empty() || ladder.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SpectralError::BadResolutionLadder);
    }
    ladder
        .iter()
        .map(|&n_phi| solve_link(problem, &LinkConfig::with_resolution(n_phi)))
        .collect()
}

pub fn assemble_link(problem: &LinkProblem, config: &LinkConfig) -> Result<LinkSystem> {
    let n_phi = config.n_phi;
    if let Some(order) = problem.sector_order {
        if n_phi % order != 0 {
            return Err(SpectralError::BadBranchConfiguration {
                reason: format!("n_phi = {n_phi} is not divisible by the sector order {order}"),
            });
        }
    }
    // Ring latitudes: puncture rings inserted exactly, grading toward all
    // puncture latitudes (including the poles).
    let pi = std::f64::consts::PI;
    let mut required = Vec::new();
    let mut grade = Vec::new();
    for p in &problem.punctures {
        grade.push(p.theta);
        if p.theta > 1e-9 && p.theta < pi - 1e-9 {
            required.push(p.theta);
        }
    }
    let n_theta = (n_phi / 2).max(4);
    let rings = graded_rings(n_theta, &required, &grade, config.grading_levels);
    let mesh = SphereMesh::build(n_phi, rings, 0.0);

    // Locate puncture vertices on the mesh.
    let delta_phi = 2.0 * pi / n_phi as f64;
    let mut puncture_vertices = Vec::with_capacity(problem.punctures.len());
    for p in &problem.punctures {
        let v = if p.theta < 1e-9 {
            mesh.north()
        } else if p.theta > pi - 1e-9 {
            mesh.south()
        } else {
            let ring = mesh.ring_index(p.theta).ok_or_else(|| {
                SpectralError::BadBranchConfiguration {
                    reason: format!("no mesh ring at theta = {}", p.theta),
                }
            })?;
            let steps = (p.phi / delta_phi).round();
            if (p.phi - steps * delta_phi).abs() > 1e-8 {
                return Err(SpectralError::BadBranchConfiguration {
                    reason: format!("puncture phi = {} is off the azimuthal grid", p.phi),
                });
            }
            mesh.ring_vertex(ring, steps as usize % n_phi)
        };
        if puncture_vertices.contains(&v) {
            return Err(SpectralError::BadBranchConfiguration {
                reason: "punctures are not distinct on the mesh".into(),
            });
        }
        puncture_vertices.push(v);
    }

    let signs = build_cuts(&mesh, &puncture_vertices, &problem.pairing)?;
    let (stiffness, mass, dof_of) =
        assemble_forms(&mesh, &signs, &puncture_vertices)?;

    let (stiffness, mass, dofs) = match problem.sector_order {
        None => {
            let dofs = stiffness.n;
            (stiffness, mass, dofs)
        }
        Some(order) => {
            let perm = mesh.rotation_permutation(n_phi / order);
            let basis = sector_basis(&mesh, &signs, &perm, &puncture_vertices, order)?;
            let (k_p, m_p) = project(&stiffness, &mass, &dof_of, &basis);
            let dofs = k_p.n;
            (k_p, m_p, dofs)
        }
    };
    Ok(LinkSystem {
        mesh,
        puncture_vertices,
        stiffness,
        mass,
        dofs,
    })
}

/// Edge-sign cochain from dual-graph cut paths between paired punctures.
pub fn build_cuts(
    mesh: &SphereMesh,
    puncture_vertices: &[usize],
    pairing: &[(usize, usize)],
) -> Result<HashMap<(usize, usize), i8>> {
    let adjacency = mesh.triangle_adjacency();
    let mut incident: HashMap<usize, Vec<usize>> = HashMap::new();
    for (ti, t) in mesh.triangles.iter().enumerate() {
        for &v in t {
            incident.entry(v).or_default().push(ti);
        }
    }
    for tris in incident.values_mut() {
        tris.sort_unstable();
    }
    let mut signs: HashMap<(usize, usize), i8> = HashMap::new();
    for (edge, _) in mesh.edge_triangles() {
        signs.insert(edge, 1);
    }
    let mut used: HashSet<usize> = HashSet::new();
    for &(pa, pb) in pairing {
        let from = puncture_vertices[pa];
        let to = puncture_vertices[pb];
        let targets: HashSet<usize> = incident[&to].iter().copied().collect();
        // BFS in the dual graph avoiding triangles of earlier cuts.
        let mut parent: HashMap<usize, (usize, (usize, usize))> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut seen: HashSet<usize> = HashSet::new();
        for &t in &incident[&from] {
            if !used.contains(&t) {
                queue.push_back(t);
                seen.insert(t);
            }
        }
        let mut reached = None;
        'bfs: while let Some(t) = queue.pop_front() {
            if targets.contains(&t) {
                reached = Some(t);
                break 'bfs;
            }
            for &(next, edge) in &adjacency[t] {
                if !seen.contains(&next) && !used.contains(&next) {
                    seen.insert(next);
                    parent.insert(next, (t, edge));
                    queue.push_back(next);
                }
            }
        }
        let Some(mut cur) = reached else {
            return Err(SpectralError::IntersectingCuts);
        };
        let mut path = vec![cur];
        while let Some(&(prev, edge)) = parent.get(&cur) {
            *signs.get_mut(&edge).unwrap() *= -1;
            cur = prev;
            path.push(cur);
        }
        used.extend(path);
    }
    Ok(signs)
}

/// Cotangent stiffness and consistent mass with bundle signs; puncture
/// vertices removed (Dirichlet).
fn assemble_forms(
    mesh: &SphereMesh,
    signs: &HashMap<(usize, usize), i8>,
    puncture_vertices: &[usize],
) -> Result<(CsrMatrix, CsrMatrix, Vec<Option<usize>>)> {
    let punctures: HashSet<usize> = puncture_vertices.iter().copied().collect();
    let mut dof_of: Vec<Option<usize>> = vec![None; mesh.vertices.len()];
    let mut next = 0usize;
    for v in 0..mesh.vertices.len() {
        if !punctures.contains(&v) {
            dof_of[v] = Some(next);
            next += 1;
        }
    }
    let n_dof = next;
    let sign = |a: usize, b: usize| -> f64 {
        signs[&(a.min(b), a.max(b))] as f64
    };
    let mut k_triplets: Vec<(usize, usize, f64)> = Vec::new();
    let mut m_triplets: Vec<(usize, usize, f64)> = Vec::new();
    for t in &mesh.triangles {
        let p: Vec<[f64; 3]> = t.iter().map(|&v| mesh.vertices[v]).collect();
        let e0 = sub(p[2], p[1]);
        let e1 = sub(p[0], p[2]);
        let e2 = sub(p[1], p[0]);
        let area = 0.5 * dot3(cross(e1, e2), cross(e1, e2)).sqrt();
        if area < 1e-18 {
            return Err(SpectralError::BadBranchConfiguration {
                reason: "degenerate mesh triangle".into(),
            });
        }
        // cot at vertex i is between the two edges leaving vertex i.
        let cot = |u: [f64; 3], v: [f64; 3]| -> f64 {
            let c = cross(u, v);
            dot3(u, v) / dot3(c, c).sqrt()
        };
        let c0 = cot(scale(e1, -1.0), e2);
        let c1 = cot(scale(e2, -1.0), e0);
        let c2 = cot(scale(e0, -1.0), e1);
        let k_local = [
            [(c1 + c2) / 2.0, -c2 / 2.0, -c1 / 2.0],
            [-c2 / 2.0, (c0 + c2) / 2.0, -c0 / 2.0],
            [-c1 / 2.0, -c0 / 2.0, (c0 + c1) / 2.0],
        ];
        let m_local = {
            let a12 = area / 12.0;
            [
                [2.0 * a12, a12, a12],
                [a12, 2.0 * a12, a12],
                [a12, a12, 2.0 * a12],
            ]
        };
        let tau = [1.0, sign(t[0], t[1]), sign(t[0], t[2])];
        let incident = t.iter().any(|v| punctures.contains(v));
        if !incident {
            debug_assert_eq!(
                sign(t[1], t[2]),
                tau[1] * tau[2],
                "cut crossing parity violated on an interior triangle"
            );
        }
        for a in 0..3 {
            let Some(da) = dof_of[t[a]] else { continue };
            for b in 0..3 {
                let Some(db) = dof_of[t[b]] else { continue };
                let s = tau[a] * tau[b];
                k_triplets.push((da, db, s * k_local[a][b]));
                m_triplets.push((da, db, s * m_local[a][b]));
            }
        }
    }
    Ok((
        CsrMatrix::from_triplets(n_dof, &k_triplets),
        CsrMatrix::from_triplets(n_dof, &m_triplets),
        dof_of,
    ))
}

/// Basis of the invariant sector: solve the bundle-map signs eps over the
/// non-puncture vertices, normalize the lift to have order `order`, and
/// collect one column per vertex orbit.
fn sector_basis(
    mesh: &SphereMesh,
    signs: &HashMap<(usize, usize), i8>,
    perm: &[usize],
    puncture_vertices: &[usize],
    order: usize,
) -> Result<Vec<Vec<(usize, f64)>>> {
    let punctures: HashSet<usize> = puncture_vertices.iter().copied().collect();
    let nv = mesh.vertices.len();
    // Propagate eps over edges with both ends off the punctures.
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (a, b) in mesh.edge_triangles().keys() {
        if !punctures.contains(a) && !punctures.contains(b) {
            adjacency[*a].push(*b);
            adjacency[*b].push(*a);
        }
    }
    for a in &mut adjacency {
        a.sort_unstable();
    }
    let sgn = |a: usize, b: usize| -> i8 { signs[&(a.min(b), a.max(b))] };
    let mut eps: Vec<i8> = vec![0; nv];
    let seed = (0..nv).find(|v| !punctures.contains(v)).unwrap();
    eps[seed] = 1;
    let mut queue = VecDeque::from([seed]);
    while let Some(v) = queue.pop_front() {
        for &w in &adjacency[v] {
            let expected = eps[v] * sgn(v, w) * sgn(perm[v], perm[w]);
            if eps[w] == 0 {
                eps[w] = expected;
                queue.push_back(w);
            } else if eps[w] != expected {
                return Err(SpectralError::BadBranchConfiguration {
                    reason: "no equivariant lift over the cut system".into(),
                });
            }
        }
    }
    // Normalize the lift to order m: the deck sign of g^m is the eps product
    // along any orbit; flip globally if it is -1 (odd order).
    fn orbit_product(eps: &[i8], perm: &[usize], order: usize, v: usize) -> i8 {
        let mut prod = 1i8;
        let mut cur = v;
        for _ in 0..order {
            prod *= eps[cur];
            cur = perm[cur];
        }
        prod
    }
    let deck = orbit_product(&eps, perm, order, seed);
    if deck == -1 {
        assert!(order % 2 == 1, "even-order sector has no sign adjustment");
        for e in eps.iter_mut() {
            if *e != 0 {
                *e = -*e;
            }
        }
    }
    for v in 0..nv {
        if !punctures.contains(&v) {
            debug_assert_eq!(
                orbit_product(&eps, perm, order, v),
                1,
                "deck sign is constant"
            );
        }
    }

    // Orbits and their invariant columns (in vertex labels).
    let mut dof_of: Vec<Option<usize>> = vec![None; nv];
    let mut next = 0usize;
    for v in 0..nv {
        if !punctures.contains(&v) {
            dof_of[v] = Some(next);
            next += 1;
        }
    }
    let _ = next;
    let mut visited = vec![false; nv];
    let mut columns = Vec::new();
    for v in 0..nv {
        if punctures.contains(&v) || visited[v] {
            continue;
        }
        let mut orbit = vec![v];
        let mut cur = perm[v];
        while cur != v {
            orbit.push(cur);
            cur = perm[cur];
        }
        for &w in &orbit {
            visited[w] = true;
        }
        if orbit.len() == 1 {
            // Fixed vertex: invariance forces f(v) = eps(v) f(v).
            if eps[v] == 1 {
                columns.push(vec![(v, 1.0)]);
            }
            continue;
        }
        let mut weight = 1.0;
        let mut column = Vec::with_capacity(orbit.len());
        for &w in &orbit {
            column.push((w, weight));
            weight *= eps[w] as f64;
        }
        columns.push(column);
    }
    Ok(columns)
}

/// Project K and M onto the span of the sector columns.
fn project(
    k: &CsrMatrix,
    m: &CsrMatrix,
    dof_of: &[Option<usize>],
    columns: &[Vec<(usize, f64)>],
) -> (CsrMatrix, CsrMatrix) {
    let n = k.n;
    // Each full dof belongs to exactly one column.
    let mut owner: Vec<(usize, f64)> = vec![(usize::MAX, 0.0); n];
    for (ci, col) in columns.iter().enumerate() {
        for &(vertex, w) in col {
            let dof = dof_of[vertex].expect("columns avoid punctures");
            owner[dof] = (ci, w);
        }
    }
    let project_one = |mat: &CsrMatrix| -> CsrMatrix {
        let mut triplets = Vec::new();
        for r in 0..n {
            let (cr, wr) = owner[r];
            if cr == usize::MAX {
                continue;
            }
            let (cols_slice, vals_slice) = mat_row(mat, r);
            for (c, v) in cols_slice.iter().zip(vals_slice) {
                let (cc, wc) = owner[*c];
                if cc == usize::MAX {
                    continue;
                }
                triplets.push((cr, cc, wr * v * wc));
            }
        }
        CsrMatrix::from_triplets(columns.len(), &triplets)
    };
    (project_one(k), project_one(m))
}

fn mat_row(mat: &CsrMatrix, r: usize) -> (&[usize], &[f64]) {
    mat.row(r)
}
