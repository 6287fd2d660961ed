//! Exact SO(4) elements, optionally carrying a quaternion-pair witness.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{CoreError, Result};
use crate::exact::{matrix_from_pair, ExactMatrix4, ExactVec4, Quaternion};

/// An exact rotation of R^4. Canonicalized by its matrix: the optional pair
/// witness `(qL, qR)` is extra data (defined up to simultaneous sign change)
/// and never enters equality or hashing.
#[derive(Debug, Clone)]
pub struct Rotor {
    pub matrix: ExactMatrix4,
    pub pair: Option<(Quaternion, Quaternion)>,
}

impl Rotor {
    pub fn identity() -> Self {
        Self {
            matrix: ExactMatrix4::identity(),
            pair: Some((Quaternion::one(), Quaternion::one())),
        }
    }

    /// Wrap a matrix after an exact SO(4) check.
    pub fn from_matrix(matrix: ExactMatrix4) -> Result<Self> {
        if !matrix.is_orthogonal() {
            return Err(CoreError::NotARotation {
                reason: "columns are not orthonormal".into(),
            });
        }
        if !matrix.det().is_one() {
            return Err(CoreError::NotARotation {
                reason: format!("determinant {}", matrix.det()),
            });
        }
        Ok(Self { matrix, pair: None })
    }

    /// The rotation `p -> qL p qR^-1` with its pair witness retained.
    pub fn from_pair(q_left: Quaternion, q_right: Quaternion) -> Result<Self> {
        let matrix = matrix_from_pair(&q_left, &q_right)?;
        Ok(Self {
            matrix,
            pair: Some((q_left, q_right)),
        })
    }

    /// Adjoint rotation `x -> a x a^-1`.
    pub fn adjoint(a: &Quaternion) -> Result<Self> {
        Self::from_pair(a.clone(), a.clone())
    }

    pub fn apply(&self, v: &ExactVec4) -> ExactVec4 {
        self.matrix.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn compose(&self, rhs: &Rotor) -> Rotor {
        let pair = match (&self.pair, &rhs.pair) {
            (Some((al, ar)), Some((bl, br))) => Some((al * bl, ar * br)),
            _ => None,
        };
        Rotor {
            matrix: &self.matrix * &rhs.matrix,
            pair,
        }
    }

    pub fn inverse(&self) -> Rotor {
        let pair = self
            .pair
            .as_ref()
            .map(|(l, r)| (l.conj(), r.conj()));
        Rotor {
            matrix: self.matrix.transpose(),
            pair,
        }
    }

    /// Least n >= 1 with g^n = I, or `None` past the cap.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut acc = self.matrix.clone();
        for n in 1..=cap {
            if acc.is_identity() {
                return Some(n);
            }
            acc = &acc * &self.matrix;
        }
        None
    }

    /// When the pair witness is present, its matrix must agree.
    pub fn verify_pair_witness(&self) -> bool {
        match &self.pair {
            None => true,
            Some((l, r)) => matrix_from_pair(l, r).map(|m| m == self.matrix).unwrap_or(false),
        }
    }
}

impl PartialEq for Rotor {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for Rotor {}

impl Hash for Rotor {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Display for Rotor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}
