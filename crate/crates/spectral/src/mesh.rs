//! Latitude-longitude triangulations of S^2 with prescribed puncture
//! latitudes, dyadic ring grading toward the punctures, and an exact
//! combinatorial rotation symmetry about the polar axis.

use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct SphereMesh {
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[usize; 3]>,
    pub n_phi: usize,
    /// Polar angles of the vertex rings, strictly increasing in (0, pi).
    pub rings: Vec<f64>,
    pub phi_offset: f64,
}

impl SphereMesh {
    pub fn north(&self) -> usize {
        0
    }

    pub fn south(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ring_vertex(&self, ring: usize, j: usize) -> usize {
        1 + ring * self.n_phi + (j % self.n_phi)
    }

    /// Build the triangulation: polar fans at both caps and split quads
    /// between consecutive rings.
    pub fn build(n_phi: usize, rings: Vec<f64>, phi_offset: f64) -> SphereMesh {
        assert!(n_phi >= 3, "need at least 3 azimuthal divisions");
        assert!(rings.len() >= 2, "need at least two rings");
        assert!(rings.windows(2).all(|w| w[0] < w[1]));
        assert!(rings[0] > 0.0 && *rings.last().unwrap() < std::f64::consts::PI);
        let mut vertices = Vec::with_capacity(2 + rings.len() * n_phi);
        vertices.push([0.0, 0.0, 1.0]);
        for &theta in &rings {
            let (st, ct) = (theta.sin(), theta.cos());
            for j in 0..n_phi {
                let phi = phi_offset + 2.0 * std::f64::consts::PI * j as f64 / n_phi as f64;
                vertices.push([st * phi.cos(), st * phi.sin(), ct]);
            }
        }
        vertices.push([0.0, 0.0, -1.0]);
        let south = vertices.len() - 1;

        let mut triangles = Vec::new();
        let rv = |ring: usize, j: usize| 1 + ring * n_phi + (j % n_phi);
        for j in 0..n_phi {
            triangles.push([0, rv(0, j), rv(0, j + 1)]);
        }
        for i in 0..rings.len() - 1 {
            for j in 0..n_phi {
                // Uniform diagonal keeps the rotational symmetry intact.
                triangles.push([rv(i, j), rv(i + 1, j), rv(i + 1, j + 1)]);
                triangles.push([rv(i, j), rv(i + 1, j + 1), rv(i, j + 1)]);
            }
        }
        let last = rings.len() - 1;
        for j in 0..n_phi {
            triangles.push([south, rv(last, j + 1), rv(last, j)]);
        }
        SphereMesh {
            vertices,
            triangles,
            n_phi,
            rings,
            phi_offset,
        }
    }

    /// The vertex permutation of the rotation by `shift` azimuthal steps.
    pub fn rotation_permutation(&self, shift: usize) -> Vec<usize> {
        let mut perm = vec![0usize; self.vertices.len()];
        perm[self.north()] = self.north();
        perm[self.south()] = self.south();
        for ring in 0..self.rings.len() {
            for j in 0..self.n_phi {
                perm[self.ring_vertex(ring, j)] = self.ring_vertex(ring, j + shift);
            }
        }
        perm
    }

    /// Undirected edges with the two adjacent triangles of each.
    pub fn edge_triangles(&self) -> HashMap<(usize, usize), Vec<usize>> {
        let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (ti, t) in self.triangles.iter().enumerate() {
            for e in 0..3 {
                let (a, b) = (t[e], t[(e + 1) % 3]);
                map.entry((a.min(b), a.max(b))).or_default().push(ti);
            }
        }
        map
    }

    /// Triangle adjacency across shared edges, deterministically ordered.
    pub fn triangle_adjacency(&self) -> Vec<Vec<(usize, (usize, usize))>> {
        let mut adj = vec![Vec::new(); self.triangles.len()];
        for (edge, tris) in self.edge_triangles() {
            if tris.len() == 2 {
                adj[tris[0]].push((tris[1], edge));
                adj[tris[1]].push((tris[0], edge));
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Index of the ring whose polar angle equals `theta` (within 1e-9).
    pub fn ring_index(&self, theta: f64) -> Option<usize> {
        self.rings.iter().position(|&t| (t - theta).abs() < 1e-9)
    }
}

/// Ring latitudes: a uniform base grid, the required latitudes inserted
/// exactly, and dyadic grading toward each graded latitude (0 and pi grade
/// the polar caps).
pub fn graded_rings(
    n_theta: usize,
    required: &[f64],
    grade_near: &[f64],
    grading_levels: usize,
) -> Vec<f64> {
    let pi = std::f64::consts::PI;
    let delta = pi / n_theta as f64;
    let mut rings: Vec<f64> = (1..n_theta).map(|k| k as f64 * delta).collect();
    rings.extend_from_slice(required);
    for &center in grade_near {
        for level in 1..=grading_levels {
            let offset = delta / (1 << level) as f64;
            for candidate in [center - offset, center + offset] {
                if candidate > 1e-9 && candidate < pi - 1e-9 {
                    rings.push(candidate);
                }
            }
        }
    }
    rings.sort_by(|a, b| a.total_cmp(b));
    rings.dedup_by(|a, b| (*a - *b).abs() < 1e-10);
    rings
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mesh_is_a_closed_surface() {
        let rings = graded_rings(8, &[], &[0.0, std::f64::consts::PI], 2);
        let mesh = SphereMesh::build(12, rings, 0.0);
        // Euler characteristic 2 and every edge shared by two triangles.
        let e = mesh.edge_triangles();
        assert!(e.values().all(|t| t.len() == 2));
        let v = mesh.vertices.len() as i64;
        let f = mesh.triangles.len() as i64;
        let ed = e.len() as i64;
        assert_eq!(v - ed + f, 2);
        for p in &mesh.vertices {
            let norm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            assert!((norm - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn rotation_permutation_is_exact() {
        let rings = graded_rings(6, &[1.9106332362490186], &[1.9106332362490186], 2);
        let mesh = SphereMesh::build(12, rings, 0.3);
        let perm = mesh.rotation_permutation(4);
        // Rotating positions by 2 pi / 3 matches the permuted positions.
        let angle = 2.0 * std::f64::consts::PI / 3.0;
        let (s, c) = angle.sin_cos();
        for (v, p) in mesh.vertices.iter().enumerate() {
            let rotated = [c * p[0] - s * p[1], s * p[0] + c * p[1], p[2]];
            let q = mesh.vertices[perm[v]];
            for d in 0..3 {
                assert!((rotated[d] - q[d]).abs() < 1e-12);
            }
        }
        // Permutation order 3.
        let mut acc: Vec<usize> = (0..mesh.vertices.len()).collect();
        for _ in 0..3 {
            acc = acc.iter().map(|&v| perm[v]).collect();
        }
        assert!(acc.iter().enumerate().all(|(i, &v)| i == v));
    }

    #[test]
    fn required_ring_is_present() {
        let theta = 1.2345;
        let rings = graded_rings(10, &[theta], &[theta], 3);
        let mesh = SphereMesh::build(9, rings, 0.0);
        assert!(mesh.ring_index(theta).is_some());
    }
}
