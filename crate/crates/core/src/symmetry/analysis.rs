//! Fixed planes, edge stabilizers, and the censuses over a generated group.

use std::collections::{BTreeSet, HashMap};

use crate::error::{CoreError, Result};
use crate::exact::{rank, rref, ExactScalar, ExactVec4};
use crate::polytope::Polytope;
use crate::symmetry::group::{perm_cycles, SymmetryGroup};
use crate::symmetry::rotor::Rotor;

/// Fixed-point set of a rotation on R^4, classified by kernel dimension.
/// Non-identity rotations admit only dimensions 0 and 2 (checked).
#[derive(Debug, Clone)]
pub enum FixedSpace {
    /// ker(M - I) is a 2-plane with the given basis.
    Plane { basis: [ExactVec4; 2] },
    /// The identity: everything is fixed.
    Full,
    /// Only the origin is fixed; empty intersection with S^3.
    EmptyOnSphere,
}

impl FixedSpace {
    pub fn plane_basis(&self) -> Option<&[ExactVec4; 2]> {
        match self {
            FixedSpace::Plane { basis } => Some(basis),
            _ => None,
        }
    }
}

pub fn fixed_plane(rotor: &Rotor) -> Result<FixedSpace> {
    let basis = rotor.matrix.fixed_space_basis();
    match basis.len() {
        0 => Ok(FixedSpace::EmptyOnSphere),
        2 => {
            let b: [ExactVec4; 2] = [basis[0].clone(), basis[1].clone()];
            debug_assert_eq!(rotor.apply(&b[0]), b[0]);
            debug_assert_eq!(rotor.apply(&b[1]), b[1]);
            Ok(FixedSpace::Plane { basis: b })
        }
        4 => Ok(FixedSpace::Full),
        dim => Err(CoreError::UnexpectedKernelDimension { dim }),
    }
}

/// Membership of a vector in the span of a 2-plane basis.
pub fn in_plane(basis: &[ExactVec4; 2], v: &ExactVec4) -> bool {
    if v.is_zero() {
        return true;
    }
    rank(&[basis[0].clone(), basis[1].clone(), v.clone()]) == 2
}

/// `2 + 2 cos(2 pi / r)` as an element of Q(sqrt5), for r = 3, 4, 5, 6, 10.
pub fn rotation_trace(r: usize) -> ExactScalar {
    match r {
        3 => ExactScalar::one(),
        4 => ExactScalar::from_int(2),
        5 => ExactScalar::from_ratio(3, 2) + ExactScalar::sqrt5_ratio(1, 2),
        6 => ExactScalar::from_int(3),
        10 => ExactScalar::from_ratio(5, 2) + ExactScalar::sqrt5_ratio(1, 2),
        _ => panic!("rotation trace not in Q(sqrt5) for r = {r}"),
    }
}

/// The pointwise stabilizer of an edge: all elements fixing both endpoints,
/// verified cyclic of order r with a generator rotating the normal plane by
/// 2 pi / r (checked on the exact trace).
#[derive(Debug, Clone)]
pub struct EdgeStabilizer {
    /// Element indices, identity included.
    pub elements: Vec<usize>,
    pub order: usize,
    /// Index of a generator whose trace is `2 + 2 cos(2 pi / r)`.
    pub generator: usize,
}

pub fn edge_stabilizer(
    group: &SymmetryGroup,
    poly: &Polytope,
    edge: (usize, usize),
) -> Result<EdgeStabilizer> {
    let r = poly.kind.edge_figure();
    let (u, v) = edge;
    let elements: Vec<usize> = (0..group.order())
        .filter(|&i| group.perms[i][u] as usize == u && group.perms[i][v] as usize == v)
        .collect();
    if elements.len() != r {
        return Err(CoreError::BadEdgeStabilizer {
            expected: r,
            found: elements.len(),
        });
    }
    // Cyclic: some member's powers exhaust the set.
    let member_set: BTreeSet<usize> = elements.iter().copied().collect();
    let mut generator = None;
    for &g in &elements {
        if group.element_order(g) == r {
            let mut powers = BTreeSet::new();
            let mut acc = group.identity_index();
            for _ in 0..r {
                powers.insert(acc);
                acc = group.multiply(g, acc);
            }
            if powers == member_set {
                // Prefer the generator rotating by exactly 2 pi / r.
                if group.elements[g].matrix.trace() == rotation_trace(r) {
                    generator = Some(g);
                    break;
                }
                if generator.is_none() {
                    generator = Some(g);
                }
            }
        }
    }
    let generator = generator.ok_or(CoreError::BadEdgeStabilizer {
        expected: r,
        found: elements.len(),
    })?;
    if group.elements[generator].matrix.trace() != rotation_trace(r) {
        return Err(CoreError::BadEdgeStabilizer {
            expected: r,
            found: elements.len(),
        });
    }
    // The generator's fixed plane is exactly the span of the edge.
    let fs = fixed_plane(&group.elements[generator])?;
    let basis = fs.plane_basis().ok_or(CoreError::UnexpectedKernelDimension { dim: 0 })?;
    if !in_plane(basis, &poly.vertices[u]) || !in_plane(basis, &poly.vertices[v]) {
        return Err(CoreError::BadEdgeStabilizer {
            expected: r,
            found: elements.len(),
        });
    }
    Ok(EdgeStabilizer {
        elements,
        order: r,
        generator,
    })
}

/// Number of order-m elements fixing at least one edge pointwise.
pub fn census_edge_fixing(group: &SymmetryGroup, poly: &Polytope, m: usize) -> usize {
    group
        .elements_of_order(m)
        .into_iter()
        .filter(|&g| {
            let perm = &group.perms[g];
            poly.edges
                .iter()
                .any(|&(u, v)| perm[u] as usize == u && perm[v] as usize == v)
        })
        .count()
}

/// Setwise stabilizer order of an edge (elements mapping {u,v} to itself).
pub fn setwise_edge_stabilizer_order(group: &SymmetryGroup, edge: (usize, usize)) -> usize {
    let (u, v) = edge;
    (0..group.order())
        .filter(|&i| {
            let p = &group.perms[i];
            let iu = p[u] as usize;
            let iv = p[v] as usize;
            (iu == u && iv == v) || (iu == v && iv == u)
        })
        .count()
}

/// Orbit size of an edge under the group.
pub fn edge_orbit_size(group: &SymmetryGroup, edge: (usize, usize)) -> usize {
    let (u, v) = edge;
    let mut orbit: BTreeSet<(usize, usize)> = BTreeSet::new();
    for p in &group.perms {
        let a = p[u] as usize;
        let b = p[v] as usize;
        orbit.insert((a.min(b), a.max(b)));
    }
    orbit.len()
}

/// The edges grouped by the 2-plane spanned by their endpoints.
#[derive(Debug, Clone)]
pub struct PlaneClass {
    /// Canonical (reduced row echelon) basis of the plane.
    pub basis: [ExactVec4; 2],
    /// Indices into `poly.edges`.
    pub edges: Vec<usize>,
    /// Polytope vertices lying in the plane.
    pub vertices: Vec<usize>,
    /// True when the plane's edges close into a single polygon on its
    /// vertices; false for a perfect matching.
    pub closed_polygon: bool,
}

#[derive(Debug, Clone)]
pub struct PlanePartition {
    pub classes: Vec<PlaneClass>,
    /// Uniform number of edges per plane.
    pub edges_per_plane: usize,
}

/// Partition the edge set by central 2-planes, verifying that each plane's
/// edges form either a single closed polygon or a perfect matching on the
/// plane's vertex set.
pub fn plane_edge_partition(poly: &Polytope) -> Result<PlanePartition> {
    let mut by_plane: HashMap<Vec<ExactVec4>, Vec<usize>> = HashMap::new();
    for (ei, &(u, v)) in poly.edges.iter().enumerate() {
        let key = rref(&[poly.vertices[u].clone(), poly.vertices[v].clone()]);
        assert_eq!(key.len(), 2, "edge endpoints span a plane");
        by_plane.entry(key).or_default().push(ei);
    }
    let mut classes: Vec<PlaneClass> = Vec::with_capacity(by_plane.len());
    for (key, edges) in by_plane {
        let basis: [ExactVec4; 2] = [key[0].clone(), key[1].clone()];
        let vertices: Vec<usize> = (0..poly.vertices.len())
            .filter(|&w| in_plane(&basis, &poly.vertices[w]))
            .collect();
        let mut degree: HashMap<usize, usize> = HashMap::new();
        for &ei in &edges {
            let (u, v) = poly.edges[ei];
            *degree.entry(u).or_insert(0) += 1;
            *degree.entry(v).or_insert(0) += 1;
        }
        let closed_polygon = if degree.values().all(|&d| d == 2) {
            // walk the cycle and require it to cover every incident vertex
            let adj: HashMap<usize, Vec<usize>> = {
                let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
                for &ei in &edges {
                    let (u, v) = poly.edges[ei];
                    adj.entry(u).or_default().push(v);
                    adj.entry(v).or_default().push(u);
                }
                adj
            };
            let start = *degree.keys().next().unwrap();
            let mut visited = BTreeSet::new();
            visited.insert(start);
            let mut prev = start;
            let mut cur = adj[&start][0];
            while cur != start {
                visited.insert(cur);
                let next = *adj[&cur].iter().find(|&&x| x != prev).unwrap();
                prev = cur;
                cur = next;
            }
            if visited.len() != degree.len() {
                let (u, v) = poly.edges[edges[0]];
                return Err(CoreError::BrokenPlanePolygon { u, v });
            }
            true
        } else if degree.values().all(|&d| d == 1) {
            false
        } else {
            let (u, v) = poly.edges[edges[0]];
            return Err(CoreError::BrokenPlanePolygon { u, v });
        };
        classes.push(PlaneClass {
            basis,
            edges,
            vertices,
            closed_polygon,
        });
    }
    let edges_per_plane = classes.first().map(|c| c.edges.len()).unwrap_or(0);
    for c in &classes {
        if c.edges.len() != edges_per_plane {
            let (u, v) = poly.edges[c.edges[0]];
            return Err(CoreError::BrokenPlanePolygon { u, v });
        }
    }
    classes.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(PlanePartition {
        classes,
        edges_per_plane,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct TransitivityReport {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
}

pub fn transitivity_report(group: &SymmetryGroup, poly: &Polytope) -> TransitivityReport {
    let vertex_orbit: BTreeSet<u16> = group.perms.iter().map(|p| p[0]).collect();
    let vertex_transitive = vertex_orbit.len() == poly.vertices.len();
    let edge_transitive = if poly.edges.is_empty() {
        true
    } else {
        edge_orbit_size(group, poly.edges[0]) == poly.edges.len()
    };
    TransitivityReport {
        vertex_transitive,
        edge_transitive,
    }
}

/// Cycle decomposition of an element's vertex action.
pub fn vertex_cycles(group: &SymmetryGroup, element: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
    perm_cycles(&group.perms[element])
}

/// The permutation a rotor induces on a facet list, as cycles; `None` if
/// some image set is not a facet.
pub fn facet_cycles(
    poly: &Polytope,
    facets: &[Vec<usize>],
    rotor: &Rotor,
) -> Option<(Vec<Vec<usize>>, Vec<usize>)> {
    let vertex_lookup: HashMap<&ExactVec4, usize> = poly
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let facet_lookup: HashMap<&[usize], usize> = facets
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut perm: Vec<u16> = Vec::with_capacity(facets.len());
    for f in facets {
        let mut image: Vec<usize> = f
            .iter()
            .map(|&vi| {
                let w = rotor.apply(&poly.vertices[vi]);
                vertex_lookup.get(&w).copied()
            })
            .collect::<Option<Vec<_>>>()?;
        image.sort_unstable();
        perm.push(*facet_lookup.get(image.as_slice())? as u16);
    }
    Some(perm_cycles(&perm))
}
