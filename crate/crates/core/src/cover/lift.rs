//! Lifts of symmetries to the double cover, as signed facet permutations.
//!
//! A lift of g maps the sheet (F, eps) to (gF, eps * s(F)); sheet continuity
//! across 2-faces pins s up to a global sign, so every liftable symmetry has
//! exactly two lifts, swapped by the deck involution.

use std::collections::HashMap;

use crate::error::{CoreError, Result};
use crate::exact::ExactVec4;
use crate::cover::model::CoverModel;
use crate::polytope::Polytope;
use crate::symmetry::Rotor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    /// Image facet of each facet.
    pub facet_perm: Vec<u16>,
    /// Sheet sign s(F) per facet.
    pub signs: Vec<i8>,
}

impl Lift {
    pub fn identity(n: usize) -> Self {
        Lift {
            facet_perm: (0..n as u16).collect(),
            signs: vec![1; n],
        }
    }

    /// The deck involution tau: identity downstairs, global sheet swap.
    pub fn deck(n: usize) -> Self {
        Lift {
            facet_perm: (0..n as u16).collect(),
            signs: vec![-1; n],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
            && self.facet_perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn is_deck(&self) -> bool {
        self.signs.iter().all(|&s| s == -1)
            && self.facet_perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// `self` after `other`: sheets flow through `other` first.
    pub fn compose(&self, other: &Lift) -> Lift {
        let n = self.facet_perm.len();
        let mut facet_perm = vec![0u16; n];
        let mut signs = vec![1i8; n];
        for f in 0..n {
            let mid = other.facet_perm[f] as usize;
            facet_perm[f] = self.facet_perm[mid];
            signs[f] = other.signs[f] * self.signs[mid];
        }
        Lift { facet_perm, signs }
    }

    pub fn inverse(&self) -> Lift {
        let n = self.facet_perm.len();
        let mut facet_perm = vec![0u16; n];
        let mut signs = vec![1i8; n];
        for f in 0..n {
            let img = self.facet_perm[f] as usize;
            facet_perm[img] = f as u16;
            signs[img] = self.signs[f];
        }
        Lift { facet_perm, signs }
    }

    /// Compose with the deck involution (either side).
    pub fn deck_composed(&self) -> Lift {
        Lift {
            facet_perm: self.facet_perm.clone(),
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }

    /// Order as a permutation of the 2n sheets.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut n = 1usize;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            n += 1;
            assert!(n <= 4 * self.facet_perm.len() + 4, "runaway lift order");
        }
        n
    }

    /// Cycle lengths of the sheet permutation, sorted.
    pub fn sheet_cycle_lengths(&self) -> Vec<usize> {
        let n = self.facet_perm.len();
        let step = |sheet: usize| -> usize {
            let f = sheet / 2;
            let eps = if sheet % 2 == 0 { 1i8 } else { -1 };
            let img_f = self.facet_perm[f] as usize;
            let img_eps = eps * self.signs[f];
            2 * img_f + usize::from(img_eps < 0)
        };
        let mut seen = vec![false; 2 * n];
        let mut lengths = Vec::new();
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = step(cur);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    /// The global sign of the induced bundle automorphism. With the canonical
    /// transition cochain the sheet signs are constant; composing with the
    /// deck involution negates the descriptor.
    pub fn bundle_sign(&self) -> i8 {
        let first = self.signs[0];
        assert!(
            self.signs.iter().all(|&s| s == first),
            "sheet signs are constant for the canonical cochain"
        );
        first
    }
}

/// The permutation a rotor induces on the facet list.
pub fn facet_permutation(poly: &Polytope, facets: &[Vec<usize>], rotor: &Rotor) -> Result<Vec<u16>> {
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
    let mut perm = Vec::with_capacity(facets.len());
    for f in facets {
        let mut image: Vec<usize> = f
            .iter()
            .map(|&vi| {
                vertex_lookup
                    .get(&rotor.apply(&poly.vertices[vi]))
                    .copied()
                    .ok_or(CoreError::NotEdgePermuting)
            })
            .collect::<Result<Vec<_>>>()?;
        image.sort_unstable();
        let idx = facet_lookup
            .get(image.as_slice())
            .copied()
            .ok_or(CoreError::NotEdgePermuting)?;
        perm.push(idx as u16);
    }
    Ok(perm)
}

/// Solve the sheet-compatibility system
/// `s(F) s(F') = w(F, F') w(gF, gF')` over the dual graph and return both
/// solutions (they differ by the global sheet swap).
pub fn lift_symmetry(cover: &CoverModel, poly: &Polytope, rotor: &Rotor) -> Result<(Lift, Lift)> {
    let facet_perm = facet_permutation(poly, &cover.complex.facets, rotor)?;
    let n = facet_perm.len();
    let mut signs: Vec<i8> = vec![0; n];
    signs[0] = 1;
    let mut stack = vec![0usize];
    while let Some(f) = stack.pop() {
        for &g in &cover.complex.neighbors[f] {
            let rhs = cover.transition(f, g)
                * cover.transition(facet_perm[f] as usize, facet_perm[g] as usize);
            let expected = signs[f] * rhs;
            if signs[g] == 0 {
                signs[g] = expected;
                stack.push(g);
            } else if signs[g] != expected {
                return Err(CoreError::InconsistentLift);
            }
        }
    }
    if signs.iter().any(|&s| s == 0) {
        return Err(CoreError::DisconnectedGraph);
    }
    let lift = Lift { facet_perm, signs };
    let other = lift.deck_composed();
    Ok((lift, other))
}
