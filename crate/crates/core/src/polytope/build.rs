//! Vertex models and exact edge detection.

use std::collections::BTreeSet;

use crate::error::{CoreError, Result};
use crate::exact::{ExactScalar, ExactVec4};
use crate::polytope::kind::PolytopeKind;

/// A regular 4-polytope model: exact vertices, detected edges, and optional
/// facet list (as vertex-index sets).
#[derive(Debug, Clone)]
pub struct Polytope {
    pub kind: PolytopeKind,
    pub vertices: Vec<ExactVec4>,
    pub edges: Vec<(usize, usize)>,
    pub facets: Option<Vec<Vec<usize>>>,
    pub schlafli: (u32, u32, u32),
    pub edge_length_sq: ExactScalar,
    pub vertex_norm_sq: ExactScalar,
}

impl Polytope {
    /// Build vertices and detect edges for the given kind.
    pub fn build(kind: PolytopeKind) -> Result<Self> {
        let vertices = build_vertices(kind);
        assert_eq!(vertices.len(), kind.vertex_count(), "vertex census");
        let norm = kind.vertex_norm_sq();
        for v in &vertices {
            assert_eq!(v.norm_sq(), norm, "vertex off the model sphere");
        }
        let mut poly = Polytope {
            kind,
            vertices,
            edges: Vec::new(),
            facets: None,
            schlafli: kind.schlafli(),
            edge_length_sq: kind.edge_length_sq(),
            vertex_norm_sq: norm,
        };
        poly.edges = detect_edges(&poly)?;
        Ok(poly)
    }

    pub fn vertex_index(&self, v: &ExactVec4) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.iter().any(|&e| e == key)
    }

    /// Adjacency list of the edge graph.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Per-vertex valency together with the uniform value.
    pub fn valency_profile(&self) -> Result<(Vec<usize>, usize)> {
        let mut val = vec![0usize; self.vertices.len()];
        for &(u, v) in &self.edges {
            val[u] += 1;
            val[v] += 1;
        }
        let first = val.first().copied().unwrap_or(0);
        for (vertex, &valency) in val.iter().enumerate() {
            if valency != first {
                return Err(CoreError::NonUniformValency { vertex, valency });
            }
        }
        Ok((val, first))
    }
}

/// All unordered pairs at the kind's exact edge length; errors unless that
/// length is also the minimal nonzero pairwise distance.
pub fn detect_edges(poly: &Polytope) -> Result<Vec<(usize, usize)>> {
    let prescribed = &poly.edge_length_sq;
    let n = poly.vertices.len();
    let mut edges = Vec::new();
    let mut min_nonzero: Option<ExactScalar> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let d2 = (&poly.vertices[i] - &poly.vertices[j]).norm_sq();
            debug_assert!(!d2.is_zero(), "duplicate vertices {i}, {j}");
            if d2 == *prescribed {
                edges.push((i, j));
            }
            match &min_nonzero {
                Some(m) if d2 >= *m => {}
                _ => min_nonzero = Some(d2),
            }
        }
    }
    let found = min_nonzero.expect("at least two vertices");
    if found != *prescribed {
        return Err(CoreError::EdgeLengthMismatch {
            found: found.to_string(),
            expected: prescribed.to_string(),
        });
    }
    Ok(edges)
}

fn build_vertices(kind: PolytopeKind) -> Vec<ExactVec4> {
    match kind {
        PolytopeKind::Cell5 => cell5_vertices(),
        PolytopeKind::Cell8 => cell8_vertices(),
        PolytopeKind::Cell16 => cell16_vertices(),
        PolytopeKind::Cell24 => cell24_vertices(),
        PolytopeKind::Cell120 => cell120_vertices(),
        PolytopeKind::Cell600 => cell600_vertices(),
    }
}

fn es(n: i64) -> ExactScalar {
    ExactScalar::from_int(n)
}

/// V1 = (1,0,0,0) and four vertices at height -1/4 with coordinates +/- s,
/// s = sqrt5/4, signed so that the coordinate 3-cycle permutes V3, V4, V5.
fn cell5_vertices() -> Vec<ExactVec4> {
    let q = ExactScalar::from_ratio(-1, 4);
    let s = ExactScalar::sqrt5_ratio(1, 4);
    let ns = -&s;
    vec![
        ExactVec4([es(1), es(0), es(0), es(0)]),
        ExactVec4([q.clone(), s.clone(), s.clone(), s.clone()]),
        ExactVec4([q.clone(), s.clone(), ns.clone(), ns.clone()]),
        ExactVec4([q.clone(), ns.clone(), s.clone(), ns.clone()]),
        ExactVec4([q, ns.clone(), ns, s]),
    ]
}

/// The 16 sign vectors, enumerated with + preceding - lexicographically.
fn cell8_vertices() -> Vec<ExactVec4> {
    let mut out = Vec::with_capacity(16);
    for bits in 0..16u32 {
        let coord = |b: u32| if (bits >> b) & 1 == 0 { es(1) } else { es(-1) };
        out.push(ExactVec4([coord(3), coord(2), coord(1), coord(0)]));
    }
    out
}

/// Standard cross-polytope: +/- the coordinate axes.
fn cell16_vertices() -> Vec<ExactVec4> {
    let mut out = Vec::with_capacity(8);
    for axis in 0..4 {
        for sign in [1i64, -1] {
            let mut c = [0i64; 4];
            c[axis] = sign;
            out.push(ExactVec4::from_ints(c));
        }
    }
    out
}

/// The 24 unit Hurwitz quaternions: 8 units then the 16 half-sums,
/// half-sums ordered by sign vector with + preceding -.
fn cell24_vertices() -> Vec<ExactVec4> {
    let mut out = Vec::with_capacity(24);
    for axis in 0..4 {
        for sign in [1i64, -1] {
            let mut c = [0i64; 4];
            c[axis] = sign;
            out.push(ExactVec4::from_ints(c));
        }
    }
    let h = ExactScalar::from_ratio(1, 2);
    let nh = ExactScalar::from_ratio(-1, 2);
    for bits in 0..16u32 {
        let coord = |b: u32| if (bits >> b) & 1 == 0 { h.clone() } else { nh.clone() };
        out.push(ExactVec4([coord(3), coord(2), coord(1), coord(0)]));
    }
    out
}

const ALL_PERMS: [[usize; 4]; 24] = [
    [0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1],
    [1, 0, 2, 3], [1, 0, 3, 2], [1, 2, 0, 3], [1, 2, 3, 0], [1, 3, 0, 2], [1, 3, 2, 0],
    [2, 0, 1, 3], [2, 0, 3, 1], [2, 1, 0, 3], [2, 1, 3, 0], [2, 3, 0, 1], [2, 3, 1, 0],
    [3, 0, 1, 2], [3, 0, 2, 1], [3, 1, 0, 2], [3, 1, 2, 0], [3, 2, 0, 1], [3, 2, 1, 0],
];

fn perm_parity(p: &[usize; 4]) -> bool {
    let mut inversions = 0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Expand a coordinate pattern over position permutations and independent
/// sign choices on the nonzero entries, deduplicated and sorted.
fn expand_family(pattern: [ExactScalar; 4], even_only: bool) -> BTreeSet<ExactVec4> {
    let mut out = BTreeSet::new();
    for perm in ALL_PERMS.iter() {
        if even_only && !perm_parity(perm) {
            continue;
        }
        let permuted: [ExactScalar; 4] = std::array::from_fn(|i| pattern[perm[i]].clone());
        let nonzero: Vec<usize> = (0..4).filter(|&i| !permuted[i].is_zero()).collect();
        for mask in 0..(1u32 << nonzero.len()) {
            let mut v = permuted.clone();
            for (b, &idx) in nonzero.iter().enumerate() {
                if (mask >> b) & 1 == 1 {
                    v[idx] = -&v[idx];
                }
            }
            out.insert(ExactVec4(v));
        }
    }
    out
}

/// The standard seven-family model with vertex norm 2*sqrt2; families kept in
/// their stated order, each sorted lexicographically.
fn cell120_vertices() -> Vec<ExactVec4> {
    let phi = ExactScalar::phi();
    let phi_inv = ExactScalar::phi_inv();
    let phi2 = &phi * &phi;
    let phi_inv2 = &phi_inv * &phi_inv;
    let sqrt5 = ExactScalar::sqrt5();
    let families: Vec<(([ExactScalar; 4], bool), usize)> = vec![
        (([es(2), es(2), es(0), es(0)], false), 24),
        (([sqrt5.clone(), es(1), es(1), es(1)], false), 64),
        (([phi_inv2.clone(), phi.clone(), phi.clone(), phi.clone()], false), 64),
        (([phi2.clone(), phi_inv.clone(), phi_inv.clone(), phi_inv.clone()], false), 64),
        (([phi2, phi_inv2, es(1), es(0)], true), 96),
        (([sqrt5, phi_inv.clone(), phi.clone(), es(0)], true), 96),
        (([es(2), es(1), phi, phi_inv], true), 192),
    ];
    let mut out = Vec::with_capacity(600);
    for ((pattern, even_only), expected) in families {
        let fam = expand_family(pattern, even_only);
        assert_eq!(fam.len(), expected, "120-cell family census");
        out.extend(fam);
    }
    out
}

/// The binary icosahedral group 2I: axis units, half-sums, and the even
/// permutations of (0, +/-1, +/-phi, +/-phi^-1)/2.
fn cell600_vertices() -> Vec<ExactVec4> {
    let half = ExactScalar::from_ratio(1, 2);
    let mut out = Vec::with_capacity(120);

    let a1 = expand_family([es(1), es(0), es(0), es(0)], false);
    assert_eq!(a1.len(), 8);
    out.extend(a1);

    let a2 = expand_family([half.clone(), half.clone(), half.clone(), half.clone()], false);
    assert_eq!(a2.len(), 16);
    out.extend(a2);

    let two = es(2);
    let a3 = expand_family(
        [
            es(0),
            half,
            &ExactScalar::phi() / &two,
            &ExactScalar::phi_inv() / &two,
        ],
        true,
    );
    assert_eq!(a3.len(), 96);
    out.extend(a3);
    out
}
