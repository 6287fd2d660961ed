//! Rank of H^1 and the edge-loop decomposition of the radial graph.
//!
//! The decomposition walks greedily: start at the least vertex with unused
//! edges, follow unused edges until the start vertex reappears, repeat. With
//! all valencies even the walk can only halt at its start, and every edge
//! ends up in exactly one loop.

use crate::error::{CoreError, Result};
use crate::polytope::GammaGraph;

/// Closed edge paths covering each edge exactly once.
#[derive(Debug, Clone)]
pub struct EdgeLoopDecomposition {
    /// Each loop as a vertex sequence `v0, v1, ..., vk = v0` stored without
    /// the repeated endpoint.
    pub loops: Vec<Vec<usize>>,
}

impl EdgeLoopDecomposition {
    pub fn total_edges(&self) -> usize {
        self.loops.iter().map(|l| l.len()).sum()
    }
}

/// First-homology rank E - V + 1 of a connected graph.
pub fn h1_rank(gamma: &GammaGraph) -> Result<usize> {
    if !gamma.is_connected() {
        return Err(CoreError::DisconnectedGraph);
    }
    Ok(gamma.edge_count() - gamma.vertex_count() + 1)
}

/// The character sending every edge meridian to -1. It is well defined on
/// the complement of the graph exactly when every valency is even, and its
/// value on a loop transverse to the graph's spanning surfaces is the parity
/// of the loop's edge crossings.
#[derive(Debug, Clone)]
pub struct MonodromyCharacter {
    edge_count: usize,
}

impl MonodromyCharacter {
    pub fn new(gamma: &GammaGraph) -> Result<Self> {
        for (vertex, &valency) in gamma.valencies.iter().enumerate() {
            if valency % 2 != 0 {
                return Err(CoreError::OddValency { vertex, valency });
            }
        }
        Ok(Self {
            edge_count: gamma.edge_count(),
        })
    }

    pub fn value_on_meridian(&self, edge: usize) -> i8 {
        assert!(edge < self.edge_count, "edge index out of range");
        -1
    }

    /// Value on a loop recorded by its per-edge crossing counts.
    pub fn value_on_crossings(&self, crossings: &[usize]) -> i8 {
        assert_eq!(crossings.len(), self.edge_count);
        let total: usize = crossings.iter().sum();
        if total % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

pub fn edge_loop_decomposition(gamma: &GammaGraph) -> Result<EdgeLoopDecomposition> {
    for (vertex, &valency) in gamma.valencies.iter().enumerate() {
        if valency % 2 != 0 {
            return Err(CoreError::OddValency { vertex, valency });
        }
    }
    let n = gamma.vertex_count();
    // adjacency with edge indices, so each edge is crossed once
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (ei, &(u, v)) in gamma.arcs.iter().enumerate() {
        adj[u].push((v, ei));
        adj[v].push((u, ei));
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut used = vec![false; gamma.arcs.len()];
    let mut remaining = vec![0usize; n];
    for (v, a) in adj.iter().enumerate() {
        remaining[v] = a.len();
    }
    let mut loops = Vec::new();
    loop {
        let Some(start) = (0..n).find(|&v| remaining[v] > 0) else {
            break;
        };
        let mut walk = vec![start];
        let mut cur = start;
        loop {
            let &(next, ei) = adj[cur]
                .iter()
                .find(|&&(_, ei)| !used[ei])
                .expect("even valency guarantees an exit edge");
            used[ei] = true;
            remaining[cur] -= 1;
            remaining[next] -= 1;
            cur = next;
            if cur == start {
                break;
            }
            walk.push(cur);
        }
        loops.push(walk);
    }
    let decomposition = EdgeLoopDecomposition { loops };
    debug_assert_eq!(decomposition.total_edges(), gamma.arcs.len());
    Ok(decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{radial_graph, Polytope, PolytopeKind};

    fn triangle() -> GammaGraph {
        use crate::exact::ExactVec4;
        GammaGraph {
            kind: PolytopeKind::Cell5,
            rays: vec![
                ExactVec4::from_ints([1, 0, 0, 0]),
                ExactVec4::from_ints([0, 1, 0, 0]),
                ExactVec4::from_ints([0, 0, 1, 0]),
            ],
            arcs: vec![(0, 1), (1, 2), (0, 2)],
            valencies: vec![2, 2, 2],
            uniform_valency: 2,
        }
    }

    #[test]
    fn triangle_has_one_loop() {
        let g = triangle();
        assert_eq!(h1_rank(&g).unwrap(), 1);
        let d = edge_loop_decomposition(&g).unwrap();
        assert_eq!(d.loops.len(), 1);
        assert_eq!(d.loops[0].len(), 3);
    }

    #[test]
    fn odd_valency_rejected() {
        use crate::exact::ExactVec4;
        // A star with 3 leaves: center has valency 3.
        let g = GammaGraph {
            kind: PolytopeKind::Cell5,
            rays: (0..4).map(|i| {
                let mut c = [0i64; 4];
                c[i] = 1;
                ExactVec4::from_ints(c)
            }).collect(),
            arcs: vec![(0, 1), (0, 2), (0, 3)],
            valencies: vec![3, 1, 1, 1],
            uniform_valency: 3,
        };
        assert!(matches!(
            edge_loop_decomposition(&g),
            Err(CoreError::OddValency { vertex: 0, valency: 3 })
        ));
    }

    #[test]
    fn cell5_loops_cover_each_edge_once() {
        let p = Polytope::build(PolytopeKind::Cell5).unwrap();
        let g = radial_graph(&p).unwrap();
        assert_eq!(h1_rank(&g).unwrap(), 6);
        let d = edge_loop_decomposition(&g).unwrap();
        assert_eq!(d.total_edges(), 10);
        // Each loop is closed: consecutive pairs (cyclically) are arcs.
        for l in &d.loops {
            for i in 0..l.len() {
                let (u, v) = (l[i], l[(i + 1) % l.len()]);
                assert!(p.has_edge(u, v));
            }
        }
    }

    #[test]
    fn cell600_h1_rank() {
        let p = Polytope::build(PolytopeKind::Cell600).unwrap();
        let g = radial_graph(&p).unwrap();
        assert_eq!(h1_rank(&g).unwrap(), 601);
        let d = edge_loop_decomposition(&g).unwrap();
        assert_eq!(d.total_edges(), 720);
    }

    #[test]
    fn monodromy_character_well_defined_iff_even() {
        let g = triangle();
        let mu = MonodromyCharacter::new(&g).unwrap();
        assert_eq!(mu.value_on_meridian(0), -1);
        // A loop crossing each edge once is odd; crossing one edge twice is
        // even.
        assert_eq!(mu.value_on_crossings(&[1, 1, 1]), -1);
        assert_eq!(mu.value_on_crossings(&[2, 0, 0]), 1);
        use crate::exact::ExactVec4;
        let star = GammaGraph {
            kind: PolytopeKind::Cell5,
            rays: (0..4)
                .map(|i| {
                    let mut c = [0i64; 4];
                    c[i] = 1;
                    ExactVec4::from_ints(c)
                })
                .collect(),
            arcs: vec![(0, 1), (0, 2), (0, 3)],
            valencies: vec![3, 1, 1, 1],
            uniform_valency: 3,
        };
        assert!(MonodromyCharacter::new(&star).is_err());
    }

    #[test]
    fn loop_decomposition_boundary_crosses_each_edge_once() {
        // The union of the loops, read as a Z/2 chain of crossings, meets
        // every meridian with odd parity: each edge is crossed exactly once.
        let p = Polytope::build(PolytopeKind::Cell5).unwrap();
        let g = radial_graph(&p).unwrap();
        let mu = MonodromyCharacter::new(&g).unwrap();
        let d = edge_loop_decomposition(&g).unwrap();
        let mut crossings = vec![0usize; g.edge_count()];
        let edge_index: std::collections::HashMap<(usize, usize), usize> = g
            .arcs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((u.min(v), u.max(v)), i))
            .collect();
        for l in &d.loops {
            for i in 0..l.len() {
                let (u, v) = (l[i], l[(i + 1) % l.len()]);
                crossings[edge_index[&(u.min(v), u.max(v))]] += 1;
            }
        }
        assert!(crossings.iter().all(|&c| c == 1));
        // Each single-edge meridian sees -1.
        for e in 0..g.edge_count() {
            let mut one = vec![0usize; g.edge_count()];
            one[e] = 1;
            assert_eq!(mu.value_on_crossings(&one), -1);
        }
    }
}
