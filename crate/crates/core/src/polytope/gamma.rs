//! The radial graph: projection of the 1-skeleton to S^3, with rays kept as
//! unnormalized exact vectors so arcs stay decidable.

use crate::error::{CoreError, Result};
use crate::exact::ExactVec4;
use crate::polytope::build::Polytope;
use crate::polytope::kind::PolytopeKind;

#[derive(Debug, Clone)]
pub struct GammaGraph {
    pub kind: PolytopeKind,
    /// One ray per polytope vertex (unnormalized direction).
    pub rays: Vec<ExactVec4>,
    /// Geodesic arcs as endpoint index pairs.
    pub arcs: Vec<(usize, usize)>,
    pub valencies: Vec<usize>,
    pub uniform_valency: usize,
}

impl GammaGraph {
    pub fn vertex_count(&self) -> usize {
        self.rays.len()
    }

    pub fn edge_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.rays.len()];
        for &(u, v) in &self.arcs {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.rays.is_empty() {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.rays.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.rays.len()
    }
}

/// Assemble the radial graph, rejecting any edge with antipodal endpoints
/// (such an edge would not project to a geodesic arc).
pub fn radial_graph(poly: &Polytope) -> Result<GammaGraph> {
    for &(u, v) in &poly.edges {
        if poly.vertices[u] == -&poly.vertices[v] {
            return Err(CoreError::AntipodalEdge { u, v });
        }
    }
    let (valencies, uniform_valency) = poly.valency_profile()?;
    Ok(GammaGraph {
        kind: poly.kind,
        rays: poly.vertices.clone(),
        arcs: poly.edges.clone(),
        valencies,
        uniform_valency,
    })
}
