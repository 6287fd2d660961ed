//! Facet enumeration and the facet-adjacency (dual) complex.
//!
//! Each kind uses the construction its model supports: complements of a
//! vertex for the 5-cell, coordinate slabs for the 8-cell, the
//! common-neighbor procedure for the 24-cell, and 4-clique enumeration with a
//! hard count check for the tetrahedral-facet kinds (16- and 600-cell).
//! The 120-cell has dodecahedral cells and no facet list here.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{CoreError, Result};
use crate::exact::ExactScalar;
use crate::polytope::build::Polytope;
use crate::polytope::kind::PolytopeKind;

/// Facets as sorted vertex-index sets, with adjacency data and the cyclic
/// order of facets around every polytope edge.
#[derive(Debug, Clone)]
pub struct FacetComplex {
    pub facets: Vec<Vec<usize>>,
    /// Indices of facets adjacent to each facet (sharing a 2-face).
    pub neighbors: Vec<Vec<usize>>,
    /// For each edge of the polytope (same order as `poly.edges`), the
    /// incident facets arranged in a cycle of length r.
    pub edge_cycles: Vec<Vec<usize>>,
    /// Number of 2-faces (adjacent facet pairs).
    pub face_count: usize,
}

pub fn enumerate_facets(poly: &Polytope) -> Result<Vec<Vec<usize>>> {
    match poly.kind {
        PolytopeKind::Cell5 => {
            let n = poly.vertices.len();
            Ok((0..n)
                .map(|skip| (0..n).filter(|&i| i != skip).collect())
                .collect())
        }
        PolytopeKind::Cell8 => {
            let mut facets = Vec::with_capacity(8);
            for axis in 0..4 {
                for sign in [1i64, -1] {
                    let target = ExactScalar::from_int(sign);
                    let cell: Vec<usize> = poly
                        .vertices
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| v.0[axis] == target)
                        .map(|(i, _)| i)
                        .collect();
                    assert_eq!(cell.len(), 8);
                    facets.push(cell);
                }
            }
            Ok(facets)
        }
        PolytopeKind::Cell24 => cell24_facets(poly),
        PolytopeKind::Cell16 | PolytopeKind::Cell600 => {
            let expected = poly.kind.cell_count();
            let cliques = four_cliques(poly);
            if cliques.len() != expected {
                return Err(CoreError::FacetCountMismatch {
                    found: cliques.len(),
                    expected,
                });
            }
            Ok(cliques)
        }
        PolytopeKind::Cell120 => Err(CoreError::UnsupportedKind {
            kind: poly.kind.to_string(),
        }),
    }
}

/// Octahedral facets from the common-neighbor procedure: from an edge [u,v],
/// each pair {x,y} in N(u) cap N(v) completes to the six-vertex cell
/// {u, v, x, y} cup (N(u) cap N(x) cap N(y) minus {v}) cup (N(v) cap N(x) cap N(y) minus {u}).
fn cell24_facets(poly: &Polytope) -> Result<Vec<Vec<usize>>> {
    let adj = poly.adjacency();
    let nbr: Vec<BTreeSet<usize>> = adj.iter().map(|a| a.iter().copied().collect()).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for &(u, v) in &poly.edges {
        let common: Vec<usize> = nbr[u].intersection(&nbr[v]).copied().collect();
        assert_eq!(common.len(), 3, "24-cell edge link is a triangle");
        for a in 0..3 {
            for b in (a + 1)..3 {
                let (x, y) = (common[a], common[b]);
                let mut cell: BTreeSet<usize> = [u, v, x, y].into_iter().collect();
                let uxy: Vec<usize> = nbr[u]
                    .intersection(&nbr[x])
                    .copied()
                    .collect::<BTreeSet<_>>()
                    .intersection(&nbr[y])
                    .copied()
                    .filter(|&w| w != v)
                    .collect();
                let vxy: Vec<usize> = nbr[v]
                    .intersection(&nbr[x])
                    .copied()
                    .collect::<BTreeSet<_>>()
                    .intersection(&nbr[y])
                    .copied()
                    .filter(|&w| w != u)
                    .collect();
                assert_eq!(uxy.len(), 1, "opposite vertex across {u}");
                assert_eq!(vxy.len(), 1, "opposite vertex across {v}");
                cell.extend(uxy);
                cell.extend(vxy);
                assert_eq!(cell.len(), 6);
                found.insert(cell.into_iter().collect());
            }
        }
    }
    let facets: Vec<Vec<usize>> = found.into_iter().collect();
    if facets.len() != 24 {
        return Err(CoreError::FacetCountMismatch {
            found: facets.len(),
            expected: 24,
        });
    }
    Ok(facets)
}

/// All 4-cliques of the edge graph, via per-vertex adjacency bitmasks.
fn four_cliques(poly: &Polytope) -> Vec<Vec<usize>> {
    let n = poly.vertices.len();
    assert!(n <= 128, "bitmask clique search expects at most 128 vertices");
    let mut adj = vec![0u128; n];
    for &(u, v) in &poly.edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let above = |i: usize| -> u128 {
        if i + 1 >= 128 {
            0
        } else {
            !0u128 << (i + 1)
        }
    };
    let mut cliques = Vec::new();
    for &(u, v) in &poly.edges {
        let mut ws = adj[u] & adj[v] & above(v);
        while ws != 0 {
            let w = ws.trailing_zeros() as usize;
            ws &= ws - 1;
            let mut xs = adj[u] & adj[v] & adj[w] & above(w);
            while xs != 0 {
                let x = xs.trailing_zeros() as usize;
                xs &= xs - 1;
                cliques.push(vec![u, v, w, x]);
            }
        }
    }
    cliques
}

/// Assemble the dual complex: facet adjacency by shared 2-face (a common
/// vertex set of size p) and the r-cycle of facets around every edge.
pub fn facet_adjacency(poly: &Polytope, facets: &[Vec<usize>]) -> Result<FacetComplex> {
    let p = poly.schlafli.0 as usize;
    let r = poly.kind.edge_figure();
    let n = facets.len();
    let sets: Vec<BTreeSet<usize>> = facets.iter().map(|f| f.iter().copied().collect()).collect();

    let mut neighbors = vec![Vec::new(); n];
    let mut face_count = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            let shared = sets[i].intersection(&sets[j]).count();
            if shared == p {
                neighbors[i].push(j);
                neighbors[j].push(i);
                face_count += 1;
            }
        }
    }

    // Facets incident to each edge.
    let mut incident: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (fi, f) in sets.iter().enumerate() {
        let verts: Vec<usize> = f.iter().copied().collect();
        for a in 0..verts.len() {
            for b in (a + 1)..verts.len() {
                if poly.has_edge(verts[a], verts[b]) {
                    incident
                        .entry((verts[a], verts[b]))
                        .or_default()
                        .push(fi);
                }
            }
        }
    }

    let mut edge_cycles = Vec::with_capacity(poly.edges.len());
    for &(u, v) in &poly.edges {
        let around = incident.get(&(u, v)).cloned().unwrap_or_default();
        let cycle = order_cycle(&around, &neighbors).ok_or(CoreError::BrokenEdgeFigure {
            u,
            v,
            r,
        })?;
        if cycle.len() != r {
            return Err(CoreError::BrokenEdgeFigure { u, v, r });
        }
        edge_cycles.push(cycle);
    }

    Ok(FacetComplex {
        facets: facets.to_vec(),
        neighbors,
        edge_cycles,
        face_count,
    })
}

/// Order `members` into a single cycle under the restriction of `neighbors`;
/// `None` when the restricted graph is not a single cycle.
fn order_cycle(members: &[usize], neighbors: &[Vec<usize>]) -> Option<Vec<usize>> {
    let set: BTreeSet<usize> = members.iter().copied().collect();
    if set.len() != members.len() || members.len() < 3 {
        return None;
    }
    for &m in members {
        let deg = neighbors[m].iter().filter(|x| set.contains(x)).count();
        if deg != 2 {
            return None;
        }
    }
    let start = members[0];
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *neighbors[start].iter().find(|x| set.contains(x))?;
    while cur != start {
        cycle.push(cur);
        let next = *neighbors[cur]
            .iter()
            .find(|&&x| set.contains(&x) && x != prev)?;
        prev = cur;
        cur = next;
    }
    if cycle.len() == members.len() {
        Some(cycle)
    } else {
        None
    }
}

/// Distinct within-facet distances and the per-vertex edge count, checked
/// against the facet type: tetrahedron (1 distance, 3 edges/vertex),
/// octahedron (2, 4), cube (3, 3).
pub fn validate_facet_geometry(poly: &Polytope, facets: &[Vec<usize>]) -> Result<()> {
    let (expected_size, expected_distinct, edges_per_vertex) = match poly.schlafli {
        (3, 3, _) => (4usize, 1usize, 3usize),
        (4, 3, _) => (8, 3, 3),
        (3, 4, _) => (6, 2, 4),
        other => panic!("unexpected facet type {other:?}"),
    };
    for f in facets {
        assert_eq!(f.len(), expected_size, "facet size");
        let mut distances: BTreeSet<ExactScalar> = BTreeSet::new();
        let mut edge_deg = vec![0usize; f.len()];
        for a in 0..f.len() {
            for b in (a + 1)..f.len() {
                let d2 = (&poly.vertices[f[a]] - &poly.vertices[f[b]]).norm_sq();
                if d2 == poly.edge_length_sq {
                    edge_deg[a] += 1;
                    edge_deg[b] += 1;
                }
                distances.insert(d2);
            }
        }
        assert_eq!(distances.len(), expected_distinct, "facet distance values");
        assert_eq!(
            distances.iter().next().unwrap(),
            &poly.edge_length_sq,
            "shortest facet distance is the edge length"
        );
        assert!(
            edge_deg.iter().all(|&d| d == edges_per_vertex),
            "facet vertex-regularity"
        );
    }
    Ok(())
}

/// Euler characteristic of the boundary complex: V - E + F - C must vanish.
pub fn euler_check(poly: &Polytope, complex: &FacetComplex) -> bool {
    let v = poly.vertices.len() as i64;
    let e = poly.edges.len() as i64;
    let f = complex.face_count as i64;
    let c = complex.facets.len() as i64;
    v - e + f - c == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactVec4;

    fn built(kind: PolytopeKind) -> Polytope {
        Polytope::build(kind).unwrap()
    }

    #[test]
    fn cell5_is_k5() {
        let p = built(PolytopeKind::Cell5);
        let facets = enumerate_facets(&p).unwrap();
        assert_eq!(facets.len(), 5);
        let cx = facet_adjacency(&p, &facets).unwrap();
        for nb in &cx.neighbors {
            assert_eq!(nb.len(), 4);
        }
        assert_eq!(cx.face_count, 10);
        assert!(euler_check(&p, &cx));
        for cycle in &cx.edge_cycles {
            assert_eq!(cycle.len(), 3);
        }
        validate_facet_geometry(&p, &facets).unwrap();
    }

    #[test]
    fn cell8_slab_facets() {
        let p = built(PolytopeKind::Cell8);
        let facets = enumerate_facets(&p).unwrap();
        assert_eq!(facets.len(), 8);
        let cx = facet_adjacency(&p, &facets).unwrap();
        // C^i_eps adjacent to C^j_delta iff i != j: each cube meets 6 others.
        for nb in &cx.neighbors {
            assert_eq!(nb.len(), 6);
        }
        // Opposite slabs are not adjacent.
        assert!(!cx.neighbors[0].contains(&1));
        assert!(euler_check(&p, &cx));
        validate_facet_geometry(&p, &facets).unwrap();
    }

    #[test]
    fn cell24_common_neighbor_facets() {
        let p = built(PolytopeKind::Cell24);
        let facets = enumerate_facets(&p).unwrap();
        assert_eq!(facets.len(), 24);
        // The first octahedral facet through the edge [V1, V9] (1-based labels):
        // O1 = {V1, V7, V9, V11, V13, V15} (1-based).
        let o1: Vec<usize> = vec![0, 6, 8, 10, 12, 14];
        assert!(facets.contains(&o1));
        let cx = facet_adjacency(&p, &facets).unwrap();
        assert!(euler_check(&p, &cx));
        validate_facet_geometry(&p, &facets).unwrap();
    }

    #[test]
    fn cell600_clique_facets() {
        let p = built(PolytopeKind::Cell600);
        let facets = enumerate_facets(&p).unwrap();
        assert_eq!(facets.len(), 600);
        let cx = facet_adjacency(&p, &facets).unwrap();
        assert!(euler_check(&p, &cx));
        for cycle in &cx.edge_cycles {
            assert_eq!(cycle.len(), 5);
        }
        validate_facet_geometry(&p, &facets).unwrap();
    }

    #[test]
    fn cell16_clique_facets() {
        let p = built(PolytopeKind::Cell16);
        let facets = enumerate_facets(&p).unwrap();
        assert_eq!(facets.len(), 16);
        let cx = facet_adjacency(&p, &facets).unwrap();
        assert!(euler_check(&p, &cx));
        // Square edge figure: 4 facets around each edge.
        for cycle in &cx.edge_cycles {
            assert_eq!(cycle.len(), 4);
        }
        validate_facet_geometry(&p, &facets).unwrap();
    }

    #[test]
    fn cell120_facets_unsupported() {
        let p = built(PolytopeKind::Cell120);
        assert!(matches!(
            enumerate_facets(&p),
            Err(CoreError::UnsupportedKind { .. })
        ));
    }

    #[test]
    fn cell24_reference_neighbor_computation() {
        // N(V1) cap N(V9) = {V10, V11, V13} in 1-based labels.
        let p = built(PolytopeKind::Cell24);
        let adj = p.adjacency();
        let n1: BTreeSet<usize> = adj[0].iter().copied().collect();
        let n9: BTreeSet<usize> = adj[8].iter().copied().collect();
        let common: Vec<usize> = n1.intersection(&n9).copied().collect();
        assert_eq!(common, vec![9, 10, 12]);
        // And N(V1) itself is {V9,...,V16}.
        let expected: BTreeSet<usize> = (8..16).collect();
        assert_eq!(n1, expected);
        // Sanity: V1 = 1 and V9 = q are at distance 1.
        let d2 = (&p.vertices[0] - &p.vertices[8]).norm_sq();
        assert!(d2.is_one());
        let _ = ExactVec4::from_ints([1, 0, 0, 0]);
    }
}
