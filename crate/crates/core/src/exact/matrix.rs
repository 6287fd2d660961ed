//! Exact 4-vectors and 4x4 matrices over Q(sqrt5), plus the quaternion-pair
//! parametrization `Pi(qL, qR): p -> qL p qR^-1` of SO(4).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::exact::quaternion::Quaternion;
use crate::exact::scalar::ExactScalar;

/// A vector in R^4 with exact coordinates (basis `1, i, j, k`).
/// Ordered lexicographically by the exact order on Q(sqrt5).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactVec4(pub [ExactScalar; 4]);

impl ExactVec4 {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| ExactScalar::zero()))
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Self(c.map(ExactScalar::from_int))
    }

    pub fn dot(&self, rhs: &Self) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for i in 0..4 {
            acc += &(&self.0[i] * &rhs.0[i]);
        }
        acc
    }

    pub fn norm_sq(&self) -> ExactScalar {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn to_quaternion(&self) -> Quaternion {
        Quaternion::new(
            self.0[0].clone(),
            self.0[1].clone(),
            self.0[2].clone(),
            self.0[3].clone(),
        )
    }

    pub fn from_quaternion(q: &Quaternion) -> Self {
        Self(q.coords())
    }
}

impl Add<&ExactVec4> for &ExactVec4 {
    type Output = ExactVec4;
    fn add(self, rhs: &ExactVec4) -> ExactVec4 {
        ExactVec4(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub<&ExactVec4> for &ExactVec4 {
    type Output = ExactVec4;
    fn sub(self, rhs: &ExactVec4) -> ExactVec4 {
        ExactVec4(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &ExactVec4 {
    type Output = ExactVec4;
    fn neg(self) -> ExactVec4 {
        ExactVec4(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl fmt::Display for ExactVec4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// A 4x4 matrix with exact entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix4 {
    rows: [[ExactScalar; 4]; 4],
}

impl ExactMatrix4 {
    pub fn from_rows(rows: [[ExactScalar; 4]; 4]) -> Self {
        Self { rows }
    }

    pub fn from_int_rows(rows: [[i64; 4]; 4]) -> Self {
        Self {
            rows: rows.map(|r| r.map(ExactScalar::from_int)),
        }
    }

    pub fn identity() -> Self {
        Self {
            rows: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    if i == j {
                        ExactScalar::one()
                    } else {
                        ExactScalar::zero()
                    }
                })
            }),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &ExactScalar {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[ExactScalar; 4] {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> ExactVec4 {
        ExactVec4(std::array::from_fn(|i| self.rows[i][j].clone()))
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| self.rows[j][i].clone())),
        }
    }

    pub fn apply(&self, v: &ExactVec4) -> ExactVec4 {
        ExactVec4(std::array::from_fn(|i| {
            let mut acc = ExactScalar::zero();
            for j in 0..4 {
                acc += &(&self.rows[i][j] * &v.0[j]);
            }
            acc
        }))
    }

    pub fn trace(&self) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for i in 0..4 {
            acc += &self.rows[i][i];
        }
        acc
    }

    pub fn det(&self) -> ExactScalar {
        // Laplace expansion along the first row via 3x3 minors.
        let mut acc = ExactScalar::zero();
        for j in 0..4 {
            let minor = self.minor3(0, j);
            let term = &self.rows[0][j] * &minor;
            if j % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }

    fn minor3(&self, skip_row: usize, skip_col: usize) -> ExactScalar {
        let mut m: Vec<Vec<&ExactScalar>> = Vec::with_capacity(3);
        for i in 0..4 {
            if i == skip_row {
                continue;
            }
            let mut row = Vec::with_capacity(3);
            for j in 0..4 {
                if j == skip_col {
                    continue;
                }
                row.push(&self.rows[i][j]);
            }
            m.push(row);
        }
        let a = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let b = m[0][0] * m[1][2] - m[0][2] * m[1][0];
        let c = m[0][1] * m[1][2] - m[0][2] * m[1][1];
        m[2][2] * &a - m[2][1] * &b + m[2][0] * &c
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Exact orthogonality: M^T M = I.
    pub fn is_orthogonal(&self) -> bool {
        &self.transpose() * self == Self::identity()
    }

    /// Exact SO(4) membership: orthonormal columns and determinant +1.
    pub fn is_rotation(&self) -> bool {
        self.is_orthogonal() && self.det().is_one()
    }

    /// Basis of the fixed space ker(M - I), by exact Gaussian elimination.
    pub fn fixed_space_basis(&self) -> Vec<ExactVec4> {
        let mut m: Vec<[ExactScalar; 4]> = self.rows.clone().to_vec();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = &row[i] - &ExactScalar::one();
        }
        kernel_basis(&m)
    }
}

impl Mul<&ExactMatrix4> for &ExactMatrix4 {
    type Output = ExactMatrix4;
    fn mul(self, rhs: &ExactMatrix4) -> ExactMatrix4 {
        ExactMatrix4 {
            rows: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    let mut acc = ExactScalar::zero();
                    for k in 0..4 {
                        acc += &(&self.rows[i][k] * &rhs.rows[k][j]);
                    }
                    acc
                })
            }),
        }
    }
}

impl Mul for ExactMatrix4 {
    type Output = ExactMatrix4;
    fn mul(self, rhs: ExactMatrix4) -> ExactMatrix4 {
        &self * &rhs
    }
}

impl Neg for &ExactMatrix4 {
    type Output = ExactMatrix4;
    fn neg(self) -> ExactMatrix4 {
        ExactMatrix4 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| -&self.rows[i][j])),
        }
    }
}

impl fmt::Display for ExactMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..4 {
            writeln!(
                f,
                "[{}, {}, {}, {}]",
                self.rows[i][0], self.rows[i][1], self.rows[i][2], self.rows[i][3]
            )?;
        }
        Ok(())
    }
}

/// The SO(4) matrix of `p -> qL p qR^-1` in the basis (1, i, j, k).
///
/// `Pi(qL, qR) = Pi(-qL, -qR)`; both inputs must be units.
pub fn matrix_from_pair(q_left: &Quaternion, q_right: &Quaternion) -> Result<ExactMatrix4> {
    for q in [q_left, q_right] {
        if !q.is_unit() {
            return Err(CoreError::NonUnitQuaternion {
                norm: q.norm_sq().to_string(),
            });
        }
    }
    let r_inv = q_right.conj();
    let basis = [
        Quaternion::one(),
        Quaternion::i(),
        Quaternion::j(),
        Quaternion::k(),
    ];
    let mut rows: [[ExactScalar; 4]; 4] =
        std::array::from_fn(|_| std::array::from_fn(|_| ExactScalar::zero()));
    for (j, e) in basis.iter().enumerate() {
        let image = &(q_left * e) * &r_inv;
        let coords = image.coords();
        for (i, c) in coords.into_iter().enumerate() {
            rows[i][j] = c;
        }
    }
    let m = ExactMatrix4::from_rows(rows);
    debug_assert!(m.is_rotation());
    Ok(m)
}

/// Kernel basis of an n x 4 exact matrix (rows are equations), by
/// fraction-free-ish Gaussian elimination with exact division.
pub fn kernel_basis(rows: &[[ExactScalar; 4]]) -> Vec<ExactVec4> {
    let mut m: Vec<[ExactScalar; 4]> = rows.to_vec();
    let n = m.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..4 {
        let mut pivot = None;
        for i in r..n {
            if !m[i][c].is_zero() {
                pivot = Some(i);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for j in 0..4 {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..4 {
                    let sub = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..4).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = ExactVec4::zero();
        v.0[fc] = ExactScalar::one();
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            v.0[pc] = -&m[ri][fc];
        }
        basis.push(v);
    }
    basis
}

/// Rank of a set of exact 4-vectors.
pub fn rank(vectors: &[ExactVec4]) -> usize {
    let rows: Vec<[ExactScalar; 4]> = vectors.iter().map(|v| v.0.clone()).collect();
    4 - kernel_count_free(&rows)
}

fn kernel_count_free(rows: &[[ExactScalar; 4]]) -> usize {
    kernel_basis(rows).len()
}

/// Reduced row echelon form of a list of 4-vectors; canonical for the row
/// space, used to key 2-planes.
pub fn rref(vectors: &[ExactVec4]) -> Vec<ExactVec4> {
    let mut m: Vec<[ExactScalar; 4]> = vectors.iter().map(|v| v.0.clone()).collect();
    let n = m.len();
    let mut r = 0usize;
    for c in 0..4 {
        let mut pivot = None;
        for i in r..n {
            if !m[i][c].is_zero() {
                pivot = Some(i);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for j in 0..4 {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..4 {
                    let sub = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        r += 1;
        if r == n {
            break;
        }
    }
    m.truncate(r);
    m.into_iter().map(ExactVec4).collect()
}

/// The unique matrix R with `R * sources[k] = images[k]` for four
/// independent source vectors; `None` when the sources are dependent.
pub fn solve_columns(sources: &[ExactVec4; 4], images: &[ExactVec4; 4]) -> Option<ExactMatrix4> {
    // R V = W transposes to V^T R^T = W^T: Gauss-Jordan on [V^T | W^T],
    // rows indexed by source vectors.
    let mut aug: Vec<Vec<ExactScalar>> = (0..4)
        .map(|i| {
            let mut row: Vec<ExactScalar> = sources[i].0.to_vec();
            row.extend(images[i].0.iter().cloned());
            row
        })
        .collect();
    for c in 0..4 {
        let pivot = (c..4).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, pivot);
        let inv = aug[c][c].inv().ok()?;
        for j in 0..8 {
            aug[c][j] = &aug[c][j] * &inv;
        }
        for i in 0..4 {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..8 {
                    let sub = &aug[c][j] * &f;
                    aug[i][j] = &aug[i][j] - &sub;
                }
            }
        }
    }
    // Rows of the solved block are R^T's rows; transpose back.
    let rows: [[ExactScalar; 4]; 4] =
        std::array::from_fn(|i| std::array::from_fn(|j| aug[j][4 + i].clone()));
    Some(ExactMatrix4::from_rows(rows))
}
