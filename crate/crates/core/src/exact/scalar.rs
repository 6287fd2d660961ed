//! Exact arithmetic in the golden field Q(sqrt5).
//!
//! Every element is stored as `a + b*sqrt5` with `a`, `b` arbitrary-precision
//! rationals, so group closures and distance tables never lose precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{CoreError, Result};

/// An element `a + b*sqrt5` of Q(sqrt5), kept in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    a: BigRational,
    b: BigRational,
}

impl ExactScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// The rational `num/den`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `(num/den) * sqrt5`.
    pub fn sqrt5_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    pub fn sqrt5() -> Self {
        Self::sqrt5_ratio(1, 1)
    }

    /// The golden ratio `phi = (1 + sqrt5)/2`.
    pub fn phi() -> Self {
        Self::new(
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        )
    }

    /// `phi^-1 = phi - 1 = (-1 + sqrt5)/2`.
    pub fn phi_inv() -> Self {
        Self::new(
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b*sqrt5`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// Exact sign of `a + b*sqrt5`, decided by comparing `a^2` with `5 b^2`.
    pub fn sign(&self) -> Ordering {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // Mixed signs: |a| vs sqrt5 |b| decided on squares.
            (Ordering::Greater, Ordering::Less) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * BigRational::from_integer(BigInt::from(5));
                a2.cmp(&b2)
            }
            (Ordering::Less, Ordering::Greater) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * BigRational::from_integer(BigInt::from(5));
                b2.cmp(&a2)
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Field norm `a^2 - 5 b^2` (a rational).
    pub fn field_norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(5))
    }

    /// Multiplicative inverse. Fails on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        // 1/(a + b sqrt5) = (a - b sqrt5)/(a^2 - 5 b^2)
        let n = self.field_norm();
        Ok(Self::new(&self.a / &n, -(&self.b / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact square root in Q(sqrt5) when one exists; `None` otherwise.
    ///
    /// Writing the candidate as `c + d*sqrt5`, squaring gives the system
    /// `c^2 + 5 d^2 = a`, `2 c d = b`, which reduces to rational square roots.
    pub fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let five = BigRational::from_integer(BigInt::from(5));
        if self.b.is_zero() {
            // Either c^2 = a (d = 0) or d^2 = a/5 (c = 0).
            if let Some(c) = rational_sqrt(&self.a) {
                return Some(Self::new(c, BigRational::zero()));
            }
            if let Some(d) = rational_sqrt(&(&self.a / &five)) {
                return Some(Self::new(BigRational::zero(), d));
            }
            return None;
        }
        // c^2 is a root of u^2 - a u + 5 b^2 / 4 = 0.
        let disc = &self.a * &self.a - &five * &self.b * &self.b;
        let sqrt_disc = rational_sqrt(&disc)?;
        let two = BigRational::from_integer(BigInt::from(2));
        for sign in [BigRational::one(), -BigRational::one()] {
            let u = (&self.a + &sign * &sqrt_disc) / &two;
            if u.is_negative() {
                continue;
            }
            if let Some(c) = rational_sqrt(&u) {
                if c.is_zero() {
                    continue;
                }
                let d = &self.b / (&two * &c);
                let cand = Self::new(c, d);
                if cand.is_positive() && &cand * &cand == *self {
                    return Some(cand);
                }
                let cand = -cand;
                if cand.is_positive() && &cand * &cand == *self {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// Floating approximation. Quarantined to the numeric (spectral) boundary;
    /// never used for equality decisions in this crate.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * 5.0_f64.sqrt()
    }
}

fn rational_sign(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}
forward_binop!(Add, add);

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}
forward_binop!(Sub, sub);

impl Mul<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 5 b1 b2 + (a1 b2 + a2 b1) s
        let five = BigRational::from_integer(BigInt::from(5));
        ExactScalar::new(
            &self.a * &rhs.a + &five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}
forward_binop!(Mul, mul);

impl Div<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self.checked_div(rhs).expect("division by zero in Q(sqrt5)")
    }
}
forward_binop!(Div, div);

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactScalar {
    /// Canonical string form `a/b+c/d*sqrt5`, zero parts omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&fmt_rational(&self.a));
        }
        if !self.b.is_zero() {
            if !self.a.is_zero() && !self.b.is_negative() {
                out.push('+');
            }
            out.push_str(&fmt_rational(&self.b));
            out.push_str("*sqrt5");
        }
        write!(f, "{}", out)
    }
}

impl FromStr for ExactScalar {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty scalar".into());
        }
        // Split into at most two signed terms.
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                let prev = s[..i].chars().last().unwrap();
                if prev != '+' && prev != '-' && prev != '/' && prev != '*' {
                    terms.push(cur.clone());
                    cur.clear();
                }
            }
            cur.push(ch);
        }
        terms.push(cur);

        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        for t in terms {
            let t = t.trim();
            if t.is_empty() {
                continue;
            }
            if let Some(coeff) = t.strip_suffix("*sqrt5") {
                b += parse_rational(coeff)?;
            } else if t == "sqrt5" || t == "+sqrt5" {
                b += BigRational::one();
            } else if t == "-sqrt5" {
                b -= BigRational::one();
            } else {
                a += parse_rational(t)?;
            }
        }
        Ok(ExactScalar::new(a, b))
    }
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
        let d: BigInt = d.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|e| format!("bad integer: {e}"))?;
        Ok(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_satisfies_minimal_polynomial() {
        let phi = ExactScalar::phi();
        assert_eq!(&phi * &phi, &phi + &ExactScalar::one());
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let s = ExactScalar::sqrt5();
        assert_eq!(&s * &s, ExactScalar::from_int(5));
    }

    #[test]
    fn phi_inverse() {
        let phi = ExactScalar::phi();
        assert_eq!(phi.inv().unwrap(), &phi - &ExactScalar::one());
        assert_eq!(phi.inv().unwrap(), ExactScalar::phi_inv());
    }

    #[test]
    fn inverse_of_zero_is_error() {
        assert!(matches!(
            ExactScalar::zero().inv(),
            Err(CoreError::DivisionByZero)
        ));
    }

    #[test]
    fn sign_cases() {
        // 2 - sqrt5 < 0 since 4 < 5; 3 - sqrt5 > 0 since 9 > 5.
        let x = ExactScalar::from_int(2) - ExactScalar::sqrt5();
        assert!(x.is_negative());
        let y = ExactScalar::from_int(3) - ExactScalar::sqrt5();
        assert!(y.is_positive());
        assert_eq!(ExactScalar::zero().sign(), Ordering::Equal);
        // -1 + sqrt5 > 0, 1 - sqrt5 < 0.
        assert!((ExactScalar::sqrt5() - ExactScalar::one()).is_positive());
        assert!((ExactScalar::one() - ExactScalar::sqrt5()).is_negative());
    }

    #[test]
    fn total_order_is_consistent() {
        let phi = ExactScalar::phi();
        let one = ExactScalar::one();
        let two = ExactScalar::from_int(2);
        assert!(one < phi);
        assert!(phi < two);
        assert!(ExactScalar::phi_inv() < one);
    }

    #[test]
    fn exact_sqrt_detection() {
        // sqrt(5) = sqrt5
        assert_eq!(
            ExactScalar::from_int(5).exact_sqrt().unwrap(),
            ExactScalar::sqrt5()
        );
        // sqrt(9/4) = 3/2
        assert_eq!(
            ExactScalar::from_ratio(9, 4).exact_sqrt().unwrap(),
            ExactScalar::from_ratio(3, 2)
        );
        // sqrt(1 + 4) with 4*lambda = 4: 5 -> sqrt5 (lambda = 1 indicial case)
        // phi^2 = phi + 1, so sqrt(phi + 1) = phi.
        let phi = ExactScalar::phi();
        let target = &phi + &ExactScalar::one();
        assert_eq!(target.exact_sqrt().unwrap(), phi);
        // 2 is not a square in Q(sqrt5).
        assert!(ExactScalar::from_int(2).exact_sqrt().is_none());
        // Negative numbers have no square root.
        assert!(ExactScalar::from_int(-1).exact_sqrt().is_none());
        // A square with negative sqrt5 part: sqrt(9 - 4 sqrt5) = sqrt5 - 2.
        let x = ExactScalar::from_int(9) - ExactScalar::sqrt5_ratio(4, 1);
        let root = x.exact_sqrt().unwrap();
        assert_eq!(root, ExactScalar::sqrt5() - ExactScalar::from_int(2));
        assert!(root.is_positive());
        // phi^-2 = (3 - sqrt5)/2 has square root phi^-1.
        let phi_inv_sq = &ExactScalar::phi_inv() * &ExactScalar::phi_inv();
        assert_eq!(phi_inv_sq.exact_sqrt().unwrap(), ExactScalar::phi_inv());
    }

    #[test]
    fn display_round_trip() {
        let cases = [
            ExactScalar::zero(),
            ExactScalar::one(),
            ExactScalar::from_int(-3),
            ExactScalar::phi(),
            ExactScalar::phi_inv(),
            ExactScalar::sqrt5(),
            -ExactScalar::sqrt5(),
            ExactScalar::from_ratio(-7, 3) + ExactScalar::sqrt5_ratio(2, 5),
        ];
        for c in cases {
            let s = c.to_string();
            let back: ExactScalar = s.parse().unwrap();
            assert_eq!(back, c, "round trip failed for {s}");
        }
        assert_eq!(ExactScalar::phi().to_string(), "1/2+1/2*sqrt5");
        assert_eq!(ExactScalar::phi_inv().to_string(), "-1/2+1/2*sqrt5");
        assert_eq!(ExactScalar::zero().to_string(), "0");
    }

    #[test]
    fn to_f64_matches() {
        let phi = ExactScalar::phi().to_f64();
        assert!((phi - 1.618033988749895).abs() < 1e-12);
    }
}
