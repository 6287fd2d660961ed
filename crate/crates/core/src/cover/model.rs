//! The combinatorial double cover of S^3 minus the radial graph.
//!
//! Sheets live over open facets, transitions over open 2-faces, and the
//! relations come from the facet cycles around edges: the monodromy -1 on an
//! edge meridian forces the product of transitions around its r-cycle to be
//! -1. With the canonical cochain w = -1 on every dual edge, this holds
//! exactly when r is odd; the 16-cell (r = 4) is obstructed.

use std::collections::HashMap;

use crate::error::{CoreError, Result};
use crate::polytope::{enumerate_facets, facet_adjacency, FacetComplex, Polytope};
use crate::symmetry::Rotor;

#[derive(Debug)]
pub struct CoverModel {
    pub complex: FacetComplex,
    /// Transition signs on dual edges, keyed by ordered facet pairs.
    transitions: HashMap<(usize, usize), i8>,
}

impl CoverModel {
    /// Assign w = -1 on every dual edge and verify holonomy -1 around every
    /// per-edge facet cycle. Fails with the offending edge when r is even.
    pub fn build(poly: &Polytope) -> Result<CoverModel> {
        let facets = enumerate_facets(poly)?;
        let complex = facet_adjacency(poly, &facets)?;
        let mut transitions = HashMap::new();
        for (f, nbrs) in complex.neighbors.iter().enumerate() {
            for &g in nbrs {
                transitions.insert((f, g), -1i8);
            }
        }
        // Dual graph connectivity.
        let n = complex.facets.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1usize;
        while let Some(f) = stack.pop() {
            for &g in &complex.neighbors[f] {
                if !seen[g] {
                    seen[g] = true;
                    count += 1;
                    stack.push(g);
                }
            }
        }
        if count != n {
            return Err(CoreError::DisconnectedGraph);
        }
        // Holonomy around every edge cycle must be -1.
        for (ei, cycle) in complex.edge_cycles.iter().enumerate() {
            let mut holonomy = 1i8;
            for w in 0..cycle.len() {
                let a = cycle[w];
                let b = cycle[(w + 1) % cycle.len()];
                holonomy *= transitions[&(a, b)];
            }
            if holonomy != -1 {
                let (u, v) = poly.edges[ei];
                return Err(CoreError::CoverObstruction {
                    u,
                    v,
                    r: cycle.len(),
                });
            }
        }
        Ok(CoverModel {
            complex,
            transitions,
        })
    }

    pub fn facet_count(&self) -> usize {
        self.complex.facets.len()
    }

    pub fn sheet_count(&self) -> usize {
        2 * self.facet_count()
    }

    pub fn transition(&self, f: usize, g: usize) -> i8 {
        self.transitions[&(f, g)]
    }
}

/// Certify that a map permutes the arcs of the radial graph: every edge's
/// endpoint images must again form an edge. Since the monodromy character
/// assigns -1 to every meridian and edge-permuting maps permute meridian
/// classes, invariance of the character follows.
pub fn check_monodromy_invariance(rotor: &Rotor, poly: &Polytope) -> Result<bool> {
    let lookup: HashMap<&crate::exact::ExactVec4, usize> = poly
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut edge_set: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    for &(u, v) in &poly.edges {
        edge_set.insert((u.min(v), u.max(v)));
    }
    for &(u, v) in &poly.edges {
        let iu = rotor.apply(&poly.vertices[u]);
        let iv = rotor.apply(&poly.vertices[v]);
        let (Some(&a), Some(&b)) = (lookup.get(&iu), lookup.get(&iv)) else {
            return Err(CoreError::NotEdgePermuting);
        };
        if !edge_set.contains(&(a.min(b), a.max(b))) {
            return Err(CoreError::NotEdgePermuting);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cache::model_for;
    use crate::exact::Quaternion;
    use crate::polytope::PolytopeKind;

    #[test]
    fn covers_exist_for_odd_edge_figures() {
        for kind in [PolytopeKind::Cell5, PolytopeKind::Cell8, PolytopeKind::Cell24] {
            let poly = model_for(kind).unwrap();
            let cover = CoverModel::build(&poly).unwrap();
            assert_eq!(cover.facet_count(), kind.cell_count());
            for cycle in &cover.complex.edge_cycles {
                assert_eq!(cycle.len() % 2, 1, "{kind}");
            }
        }
    }

    #[test]
    fn cell16_is_obstructed() {
        let poly = model_for(PolytopeKind::Cell16).unwrap();
        match CoverModel::build(&poly) {
            Err(CoreError::CoverObstruction { r, .. }) => assert_eq!(r, 4),
            other => panic!("expected the r-even obstruction, got {other:?}"),
        }
    }

    #[test]
    fn cell600_cover_valid() {
        let poly = model_for(PolytopeKind::Cell600).unwrap();
        let cover = CoverModel::build(&poly).unwrap();
        assert_eq!(cover.facet_count(), 600);
        assert_eq!(cover.sheet_count(), 1200);
    }

    #[test]
    fn monodromy_invariance_certificates() {
        let poly = model_for(PolytopeKind::Cell5).unwrap();
        let adq = Rotor::adjoint(&Quaternion::hurwitz_q()).unwrap();
        assert!(check_monodromy_invariance(&adq, &poly).unwrap());
        assert!(check_monodromy_invariance(&Rotor::identity(), &poly).unwrap());
        // Left multiplication by q does not preserve the 5-cell.
        let left = Rotor::from_pair(Quaternion::hurwitz_q(), Quaternion::one()).unwrap();
        assert!(matches!(
            check_monodromy_invariance(&left, &poly),
            Err(CoreError::NotEdgePermuting)
        ));
    }
}
