//! Finite rotation groups by breadth-first closure.
//!
//! Elements carry both the exact matrix and the induced vertex permutation;
//! the permutation is the faithful canonical key (vertices span R^4), so
//! hashing and composition in the closure are cheap index operations while
//! matrices stay available for trace and fixed-plane queries.

use std::collections::{HashMap, VecDeque};

use crate::error::{CoreError, Result};
use crate::exact::{rank, solve_columns, ExactVec4, Quaternion};
use crate::polytope::{Polytope, PolytopeKind};
use crate::symmetry::rotor::Rotor;

pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

pub type VertexPerm = Vec<u16>;

#[derive(Debug)]
pub struct SymmetryGroup {
    pub elements: Vec<Rotor>,
    /// Vertex permutation of each element, aligned with `elements`.
    pub perms: Vec<VertexPerm>,
    /// Indices of the generators inside `elements`.
    pub generators: Vec<usize>,
    index: HashMap<VertexPerm, usize>,
    /// Element orders, memoized from permutation cycle structure.
    orders: Vec<usize>,
}

impl SymmetryGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of_perm(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    pub fn index_of(&self, rotor: &Rotor) -> Option<usize> {
        self.elements.iter().position(|e| e == rotor)
    }

    /// Index of the product `elements[i] * elements[j]` (i applied after j).
    pub fn multiply(&self, i: usize, j: usize) -> usize {
        let pi = &self.perms[i];
        let pj = &self.perms[j];
        let composed: VertexPerm = pj.iter().map(|&v| pi[v as usize]).collect();
        *self
            .index
            .get(&composed)
            .expect("group is closed under multiplication")
    }

    pub fn inverse(&self, i: usize) -> usize {
        let p = &self.perms[i];
        let mut inv = vec![0u16; p.len()];
        for (a, &b) in p.iter().enumerate() {
            inv[b as usize] = a as u16;
        }
        *self.index.get(&inv).expect("group contains inverses")
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i]
    }

    /// Indices of all elements of the given order.
    pub fn elements_of_order(&self, m: usize) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.orders[i] == m).collect()
    }

    /// Breadth-first closure of `generators` acting on `vertices`.
    ///
    /// Every generator must preserve the vertex set exactly; the closure
    /// aborts past `cap` elements.
    pub fn generate(generators: Vec<Rotor>, vertices: &[ExactVec4], cap: usize) -> Result<Self> {
        let vertex_index: HashMap<&ExactVec4, u16> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i as u16))
            .collect();
        let mut gen_perms: Vec<VertexPerm> = Vec::with_capacity(generators.len());
        for (gi, g) in generators.iter().enumerate() {
            let mut perm = Vec::with_capacity(vertices.len());
            for v in vertices {
                let image = g.apply(v);
                match vertex_index.get(&image) {
                    Some(&idx) => perm.push(idx),
                    None => return Err(CoreError::GeneratorNotPreserving { index: gi }),
                }
            }
            gen_perms.push(perm);
        }

        let identity_perm: VertexPerm = (0..vertices.len() as u16).collect();
        let mut elements = vec![Rotor::identity()];
        let mut perms = vec![identity_perm.clone()];
        let mut index = HashMap::new();
        index.insert(identity_perm, 0usize);

        let mut queue: VecDeque<usize> = VecDeque::new();
        queue.push_back(0);
        while let Some(e) = queue.pop_front() {
            for (g, gperm) in generators.iter().zip(&gen_perms) {
                let composed: VertexPerm =
                    perms[e].iter().map(|&v| gperm[v as usize]).collect();
                if index.contains_key(&composed) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(CoreError::ClosureCapExceeded { cap });
                }
                let rotor = g.compose(&elements[e]);
                index.insert(composed.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(rotor);
                perms.push(composed);
            }
        }

        let generator_indices: Vec<usize> = gen_perms
            .iter()
            .map(|p| *index.get(p).expect("generators are in their closure"))
            .collect();
        let orders = perms.iter().map(|p| perm_order(p)).collect();
        Ok(Self {
            elements,
            perms,
            generators: generator_indices,
            index,
            orders,
        })
    }
}

fn perm_order(perm: &[u16]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut order = 1usize;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur] as usize;
            len += 1;
        }
        order = num_integer::lcm(order, len);
    }
    order
}

/// Cycle decomposition of a permutation: nontrivial cycles plus fixed points.
pub fn perm_cycles(perm: &[u16]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    let mut fixed = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cycle.push(cur);
            cur = perm[cur] as usize;
        }
        if cycle.len() == 1 {
            fixed.push(start);
        } else {
            cycles.push(cycle);
        }
    }
    (cycles, fixed)
}

/// The unique linear map sending each vertex to its image under `perm`,
/// solved exactly from 4 independent vertices and verified on all of them;
/// rejected unless it is orientation-preserving and orthogonal.
pub fn realize_from_vertex_permutation(poly: &Polytope, perm: &[usize]) -> Result<Rotor> {
    let n = poly.vertices.len();
    assert_eq!(perm.len(), n, "permutation length");
    let mut chosen: Vec<usize> = Vec::with_capacity(4);
    let mut chosen_vecs: Vec<ExactVec4> = Vec::with_capacity(4);
    for i in 0..n {
        let mut trial = chosen_vecs.clone();
        trial.push(poly.vertices[i].clone());
        if rank(&trial) == trial.len() {
            chosen.push(i);
            chosen_vecs = trial;
            if chosen.len() == 4 {
                break;
            }
        }
    }
    if chosen.len() != 4 {
        return Err(CoreError::NonIsometricPermutation {
            reason: "vertices do not span R^4".into(),
        });
    }
    let m_cols: [ExactVec4; 4] = std::array::from_fn(|k| poly.vertices[chosen[k]].clone());
    let b_cols: [ExactVec4; 4] = std::array::from_fn(|k| poly.vertices[perm[chosen[k]]].clone());
    let matrix = solve_columns(&m_cols, &b_cols).ok_or_else(|| CoreError::NonIsometricPermutation {
        reason: "singular vertex system".into(),
    })?;
    for (i, v) in poly.vertices.iter().enumerate() {
        if matrix.apply(v) != poly.vertices[perm[i]] {
            return Err(CoreError::NonIsometricPermutation {
                reason: format!("vertex {i} maps off its target"),
            });
        }
    }
    Rotor::from_matrix(matrix)
}

/// The rotation group of each polytope model.
///
/// 5-cell: realized vertex permutations generating the even permutations.
/// 8-/16-cell: the explicit signed-permutation generators. 24-cell: the
/// standard rotation generators. 600-cell: quaternion pairs over the binary
/// icosahedral group. 120-cell: the same pair generators, checked at build
/// time to preserve the seven-family vertex set.
pub fn polytope_group(poly: &Polytope) -> Result<SymmetryGroup> {
    let cap = DEFAULT_CLOSURE_CAP;
    match poly.kind {
        PolytopeKind::Cell5 => {
            // s = (V3 V4 V5), r = (V1 V3)(V2 V4); together they generate A5.
            let s = realize_from_vertex_permutation(poly, &[0, 1, 3, 4, 2])?;
            let r = realize_from_vertex_permutation(poly, &[2, 3, 0, 1, 4])?;
            SymmetryGroup::generate(vec![s, r], &poly.vertices, cap)
        }
        PolytopeKind::Cell8 | PolytopeKind::Cell16 => {
            SymmetryGroup::generate(cell8_generators(), &poly.vertices, cap)
        }
        PolytopeKind::Cell24 => SymmetryGroup::generate(cell24_generators(), &poly.vertices, cap),
        PolytopeKind::Cell120 | PolytopeKind::Cell600 => {
            SymmetryGroup::generate(pair_generators()?, &poly.vertices, cap)
        }
    }
}

/// sigma1: (x1,x2,x3,x4) -> (-x2,x1,x3,x4), sigma2: -> (x3,x1,x2,x4),
/// sigma3 = Ad_q: -> (x1,x4,x2,x3).
pub fn cell8_generators() -> Vec<Rotor> {
    use crate::exact::ExactMatrix4;
    let sigma1 = Rotor::from_matrix(ExactMatrix4::from_int_rows([
        [0, -1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]))
    .expect("sigma1 is a rotation");
    let sigma2 = Rotor::from_matrix(ExactMatrix4::from_int_rows([
        [0, 0, 1, 0],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ]))
    .expect("sigma2 is a rotation");
    let sigma3 = Rotor::adjoint(&Quaternion::hurwitz_q()).expect("Ad_q");
    vec![sigma1, sigma2, sigma3]
}

/// sigma1 = Ad_q, sigma2: (x1,x2,x3,x4) -> (x1,x2,-x4,x3), and the
/// half-coefficient rotation sigma3 of the standard [3,4,3]+ generators.
pub fn cell24_generators() -> Vec<Rotor> {
    use crate::exact::{ExactMatrix4, ExactScalar};
    let sigma1 = Rotor::adjoint(&Quaternion::hurwitz_q()).expect("Ad_q");
    let sigma2 = Rotor::from_matrix(ExactMatrix4::from_int_rows([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, -1],
        [0, 0, 1, 0],
    ]))
    .expect("sigma2 is a rotation");
    let h = |n: i64| ExactScalar::from_ratio(n, 2);
    let sigma3 = Rotor::from_matrix(ExactMatrix4::from_rows([
        [h(1), h(1), h(1), h(1)],
        [h(1), h(1), h(-1), h(-1)],
        [h(1), h(-1), h(1), h(-1)],
        [h(-1), h(1), h(1), h(-1)],
    ]))
    .expect("sigma3 is a rotation");
    vec![sigma1, sigma2, sigma3]
}

/// Pi(p, 1), Pi(q, 1), Pi(1, p), Pi(1, q): left and right translations by
/// the two units generating the binary icosahedral group.
pub fn pair_generators() -> Result<Vec<Rotor>> {
    let p = Quaternion::icosian_p();
    let q = Quaternion::hurwitz_q();
    let one = Quaternion::one();
    Ok(vec![
        Rotor::from_pair(p.clone(), one.clone())?,
        Rotor::from_pair(q.clone(), one.clone())?,
        Rotor::from_pair(one.clone(), p)?,
        Rotor::from_pair(one, q)?,
    ])
}
