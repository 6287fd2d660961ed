//! Equivariant mode selection near an edge with Z/m stabilizer, and the
//! indicial exponents of the radial equations.
//!
//! Two index conventions coexist in the local model: sections written with
//! `z^(k - 1/2)` (selection rules) and Fourier modes `e^(i (k + 1/2) theta)`
//! (radial equations). They are reconciled once and for all by
//! `k_mode = k_section - 1`; menus report both.

use std::fmt;

use polyharmonic_core::exact::ExactScalar;

use crate::error::{Result, SpectralError};

/// An exact half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_halves(twice: i64) -> Self {
        Self(twice)
    }

    pub fn from_int(n: i64) -> Self {
        Self(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_exact(self) -> ExactScalar {
        ExactScalar::from_ratio(self.0, 2)
    }

    /// True when the value lies in {1/2, 3/2, 5/2, ...}.
    pub fn is_positive_half_odd(self) -> bool {
        self.0 > 0 && self.0 % 2 != 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Scalar,
    OneForm,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Scalar => write!(f, "scalar"),
            FieldKind::OneForm => write!(f, "one-form"),
        }
    }
}

/// One admissible residue class of invariant modes.
#[derive(Debug, Clone)]
pub struct SelectionBranch {
    /// Residue of k modulo m in the `z^(k-1/2)` convention.
    pub residue_section: u64,
    /// Residue of the shifted index `k - 1` modulo m (Fourier convention).
    pub residue_mode: u64,
    /// Least positive admissible k (section convention).
    pub min_k: u64,
    /// Minimal invariant homogeneity `min_k - 1/2`.
    pub min_n0: HalfInt,
    /// Whether the associated 1-form is closed.
    pub closed: bool,
}

#[derive(Debug, Clone)]
pub struct ExponentMenu {
    pub m: u32,
    pub kind: FieldKind,
    pub branches: Vec<SelectionBranch>,
}

impl ExponentMenu {
    /// Smallest admissible homogeneity over all branches.
    pub fn min_n0(&self) -> HalfInt {
        self.branches
            .iter()
            .map(|b| b.min_n0)
            .min()
            .expect("menus have at least one branch")
    }
}

fn require_odd(m: i64) -> Result<u64> {
    if m < 3 || m % 2 == 0 {
        return Err(SpectralError::EvenStabilizerOrder { m });
    }
    Ok(m as u64)
}

fn branch(m: u64, residue_section: u64, closed: bool) -> SelectionBranch {
    let residue_section = residue_section % m;
    let min_k = if residue_section == 0 { m } else { residue_section };
    SelectionBranch {
        residue_section,
        residue_mode: (residue_section + m - 1) % m,
        min_k,
        min_n0: HalfInt::from_halves(2 * min_k as i64 - 1),
        closed,
    }
}

/// Invariant scalar modes: k = (m+1)/2 mod m.
///
/// In the shifted convention this is exactly the constraint
/// `2 k_mode + 1 = 0 mod m`, which `debug_assert`s below.
pub fn scalar_selection(m: i64) -> Result<ExponentMenu> {
    let m = require_odd(m)?;
    let b = branch(m, (m + 1) / 2, false);
    debug_assert_eq!((2 * b.residue_mode + 1) % m, 0);
    Ok(ExponentMenu {
        m: m as u32,
        kind: FieldKind::Scalar,
        branches: vec![b],
    })
}

/// Invariant 1-form modes: two branches, k = (m-1)/2 and k = (m+3)/2 mod m;
/// the first is the closed branch.
pub fn oneform_selection(m: i64) -> Result<ExponentMenu> {
    let m = require_odd(m)?;
    let b1 = branch(m, (m - 1) / 2, true);
    let b2 = branch(m, (m + 3) / 2, false);
    Ok(ExponentMenu {
        m: m as u32,
        kind: FieldKind::OneForm,
        branches: vec![b1, b2],
    })
}

/// An eigenvalue or exponent that is exact when it lives in Q(sqrt5).
#[derive(Debug, Clone)]
pub enum ExactOrFloat {
    Exact(ExactScalar),
    Float(f64),
}

impl ExactOrFloat {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExactOrFloat::Exact(x) => x.to_f64(),
            ExactOrFloat::Float(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&ExactScalar> {
        match self {
            ExactOrFloat::Exact(x) => Some(x),
            ExactOrFloat::Float(_) => None,
        }
    }
}

impl fmt::Display for ExactOrFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactOrFloat::Exact(x) => write!(f, "{x}"),
            ExactOrFloat::Float(x) => write!(f, "{x:.12e}"),
        }
    }
}

/// Eigenvalue input for the indicial formulas.
#[derive(Debug, Clone)]
pub enum Lambda {
    Exact(ExactScalar),
    Float(f64),
}

impl Lambda {
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Lambda::Exact(ExactScalar::from_ratio(num, den))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Lambda::Exact(x) => x.to_f64(),
            Lambda::Float(x) => *x,
        }
    }

    fn check_nonnegative(&self) -> Result<()> {
        let bad = match self {
            Lambda::Exact(x) => x.is_negative(),
            Lambda::Float(x) => *x < 0.0,
        };
        if bad {
            return Err(SpectralError::NegativeLambda { lambda: self.to_f64() });
        }
        Ok(())
    }

    /// sqrt(1 + 4 lambda), exact when possible.
    fn discriminant_sqrt(&self) -> ExactOrFloat {
        match self {
            Lambda::Exact(x) => {
                let disc = ExactScalar::one() + ExactScalar::from_int(4) * x;
                match disc.exact_sqrt() {
                    Some(root) => ExactOrFloat::Exact(root),
                    None => ExactOrFloat::Float(disc.to_f64().sqrt()),
                }
            }
            Lambda::Float(x) => ExactOrFloat::Float((1.0 + 4.0 * x).sqrt()),
        }
    }
}

/// The two Frobenius exponents of a radial equation: solutions behave like
/// `rho^mu` (regular) and `rho^-mu_prime` (singular).
#[derive(Debug, Clone)]
pub struct IndicialPair {
    pub mu: ExactOrFloat,
    pub mu_prime: ExactOrFloat,
}

impl IndicialPair {
    pub fn gap(&self) -> f64 {
        self.mu_prime.to_f64() - self.mu.to_f64()
    }
}

fn shift(root: &ExactOrFloat, num: i64, den: i64) -> ExactOrFloat {
    match root {
        ExactOrFloat::Exact(r) => ExactOrFloat::Exact(
            ExactScalar::from_ratio(num, den) + ExactScalar::from_ratio(1, 2) * r,
        ),
        ExactOrFloat::Float(r) => ExactOrFloat::Float(num as f64 / den as f64 + r / 2.0),
    }
}

/// Edge form: mu = (-1 + sqrt(1+4 lambda))/2, mu' = mu + 1.
pub fn indicial_edge(lambda: &Lambda) -> Result<IndicialPair> {
    lambda.check_nonnegative()?;
    let root = lambda.discriminant_sqrt();
    Ok(IndicialPair {
        mu: shift(&root, -1, 2),
        mu_prime: shift(&root, 1, 2),
    })
}

/// Vertex form: mu = -3/2 + sqrt(1+4 lambda)/2, mu' = mu + 3.
pub fn indicial_vertex(lambda: &Lambda) -> Result<IndicialPair> {
    lambda.check_nonnegative()?;
    let root = lambda.discriminant_sqrt();
    Ok(IndicialPair {
        mu: shift(&root, -3, 2),
        mu_prime: shift(&root, 3, 2),
    })
}

/// True when the singular branch must vanish: mu'(lambda) >= 3/2 for the
/// edge form, equivalently lambda >= 3/4. Decided exactly for exact input.
pub fn beta_exclusion_threshold(lambda: &Lambda) -> Result<bool> {
    lambda.check_nonnegative()?;
    Ok(match lambda {
        Lambda::Exact(x) => {
            let three_quarters = ExactScalar::from_ratio(3, 4);
            *x >= three_quarters
        }
        Lambda::Float(x) => *x >= 0.75,
    })
}
