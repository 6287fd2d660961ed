//! Exact quaternions over Q(sqrt5) with the Hamilton relations
//! i^2 = j^2 = k^2 = ijk = -1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::exact::scalar::ExactScalar;

/// `w + x i + y j + z k` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: ExactScalar,
    pub x: ExactScalar,
    pub y: ExactScalar,
    pub z: ExactScalar,
}

impl Quaternion {
    pub fn new(w: ExactScalar, x: ExactScalar, y: ExactScalar, z: ExactScalar) -> Self {
        Self { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::zero(),
        )
    }

    pub fn one() -> Self {
        Self::new(
            ExactScalar::one(),
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::zero(),
        )
    }

    pub fn i() -> Self {
        Self::new(
            ExactScalar::zero(),
            ExactScalar::one(),
            ExactScalar::zero(),
            ExactScalar::zero(),
        )
    }

    pub fn j() -> Self {
        Self::new(
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::one(),
            ExactScalar::zero(),
        )
    }

    pub fn k() -> Self {
        Self::new(
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::zero(),
            ExactScalar::one(),
        )
    }

    /// `q = (1 + i + j + k)/2`, the order-6 unit whose adjoint action is the
    /// order-3 coordinate rotation `(x1,x2,x3,x4) -> (x1,x4,x2,x3)`.
    pub fn hurwitz_q() -> Self {
        let h = ExactScalar::from_ratio(1, 2);
        Self::new(h.clone(), h.clone(), h.clone(), h)
    }

    /// `p = (phi + phi^-1 i + k)/2`, an order-10 unit in the binary
    /// icosahedral group; its adjoint action rotates its normal plane by 2pi/5.
    pub fn icosian_p() -> Self {
        let two = ExactScalar::from_int(2);
        Self::new(
            &ExactScalar::phi() / &two,
            &ExactScalar::phi_inv() / &two,
            ExactScalar::zero(),
            ExactScalar::from_ratio(1, 2),
        )
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm_sq(&self) -> ExactScalar {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn is_unit(&self) -> bool {
        self.norm_sq().is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        let n = self.norm_sq().inv()?;
        Ok(self.conj().scale(&n))
    }

    pub fn real_part(&self) -> &ExactScalar {
        &self.w
    }

    /// Imaginary part as a quaternion.
    pub fn imaginary(&self) -> Self {
        Self::new(ExactScalar::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    /// Coordinates in the ordered basis (1, i, j, k).
    pub fn coords(&self) -> [ExactScalar; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn from_coords(c: &[ExactScalar; 4]) -> Self {
        Self::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Quaternion::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Mul<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn mul(self, r: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w * &r.w - &self.x * &r.x - &self.y * &r.y - &self.z * &r.z,
            &self.w * &r.x + &self.x * &r.w + &self.y * &r.z - &self.z * &r.y,
            &self.w * &r.y - &self.x * &r.z + &self.y * &r.w + &self.z * &r.x,
            &self.w * &r.z + &self.x * &r.y - &self.y * &r.x + &self.z * &r.w,
        )
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

impl Add<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, r: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &r.w, &self.x + &r.x, &self.y + &r.y, &self.z + &r.z)
    }
}

impl Sub<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn sub(self, r: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &r.w, &self.x - &r.x, &self.y - &r.y, &self.z - &r.z)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})i + ({})j + ({})k", self.w, self.x, self.y, self.z)
    }
}

/// Adjoint action `x -> a x a^-1` of a unit quaternion.
///
/// For `a` outside {+1, -1} this fixes `span{1, Im a}` pointwise and rotates
/// the orthogonal plane by twice the half-angle of `a`.
pub fn ad_action(a: &Quaternion, x: &Quaternion) -> Result<Quaternion> {
    if !a.is_unit() {
        return Err(CoreError::NonUnitQuaternion {
            norm: a.norm_sq().to_string(),
        });
    }
    Ok(&(a * x) * &a.conj())
}
