//! Exact arithmetic in the subring `Z[L]` of the Grothendieck ring of varieties.
//!
//! Every class handled by this crate is an integer polynomial in the Lefschetz
//! class `L = [A^1]`. Coefficients are arbitrary precision, so nothing here can
//! overflow or round.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A class `sum_i c_i L^i` with `c_i` exact integers.
///
/// Coefficients are stored densely, lowest degree first, with trailing zeros
/// trimmed. The zero class has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MotiveClass {
    coeffs: Vec<BigInt>,
}

impl MotiveClass {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The class of `n` disjoint points (or its formal negative).
    pub fn constant(n: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![n.into()])
    }

    /// `L`, the class of the affine line.
    pub fn lefschetz() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * L^degree`.
    pub fn monomial(degree: usize, c: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut class = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        class.trim();
        class
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `L^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero class.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Whether every coefficient is non-negative.
    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients as machine integers, if they all fit.
    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient `q` with `q * divisor == self`, by long division over `Z`.
    ///
    /// Fails with [`Error::DivisionNotExact`] as soon as a leading coefficient
    /// does not divide, or if a nonzero remainder is left.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok(Self::zero());
        };
        if nd < dd {
            return Err(Error::DivisionNotExact(format!(
                "dividend of degree {nd} has lower degree than divisor of degree {dd}"
            )));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::DivisionNotExact(format!(
                    "coefficient {top} of L^{} is not divisible by leading coefficient {lead}",
                    shift + dd
                )));
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &q * d;
            }
            quot[shift] = q;
        }
        if let Some(i) = rem.iter().position(|c| !c.is_zero()) {
            return Err(Error::DivisionNotExact(format!(
                "nonzero remainder starting at L^{i}"
            )));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// The specialisation `L -> q`.
    pub fn evaluate(&self, q: impl Into<BigInt>) -> BigInt {
        let q = q.into();
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &q + c)
    }

    /// Euler number: the class at `L = 1`.
    pub fn euler(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// `n`-th symmetric power through the zeta series
    /// `Z(L^i, t) = 1 / (1 - L^i t)`, multiplicative in sums.
    ///
    /// Only valid for effective (cell-built) classes.
    pub fn sym_power(&self, n: u32) -> Result<Self> {
        if let Some(index) = self.coeffs.iter().position(Signed::is_negative) {
            return Err(Error::NotEffective {
                index,
                coefficient: self.coeffs[index].to_string(),
            });
        }
        let n = n as usize;
        // series[j] is the t^j coefficient of the partial zeta product
        let mut series = vec![Self::zero(); n + 1];
        series[0] = Self::one();
        for (i, mult) in self.coeffs.iter().enumerate() {
            if mult.is_zero() {
                continue;
            }
            // (1 - L^i t)^(-mult) = sum_j C(mult + j - 1, j) L^(ij) t^j
            let mut factor = Vec::with_capacity(n + 1);
            let mut binom = BigInt::one();
            for j in 0..=n {
                if j > 0 {
                    binom = binom * (mult + BigInt::from(j - 1)) / BigInt::from(j);
                }
                factor.push(Self::monomial(i * j, binom.clone()));
            }
            let mut next = vec![Self::zero(); n + 1];
            for (a, sa) in series.iter().enumerate() {
                if sa.is_zero() {
                    continue;
                }
                for (b, fb) in factor.iter().enumerate().take(n + 1 - a) {
                    next[a + b] += sa * fb;
                }
            }
            series = next;
        }
        Ok(series.swap_remove(n))
    }
}

impl fmt::Debug for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotiveClass({self})")
    }
}

/// Ascending polynomial in `L`, e.g. `1 + 2L - L^3`.
impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("L")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for MotiveClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .to_i64_coeffs()
            .ok_or_else(|| S::Error::custom("coefficient does not fit in 64 bits"))?;
        coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MotiveClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<i64>::deserialize(deserializer)?;
        if coeffs.last() == Some(&0) {
            return Err(D::Error::custom("trailing zero coefficient"));
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl From<i64> for MotiveClass {
    fn from(n: i64) -> Self {
        Self::constant(n)
    }
}

fn add_into(dst: &mut Vec<BigInt>, src: &[BigInt], negate: bool) {
    if dst.len() < src.len() {
        dst.resize(src.len(), BigInt::zero());
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if negate {
            *d -= s;
        } else {
            *d += s;
        }
    }
}

impl AddAssign<&MotiveClass> for MotiveClass {
    fn add_assign(&mut self, rhs: &MotiveClass) {
        add_into(&mut self.coeffs, &rhs.coeffs, false);
        self.trim();
    }
}

impl SubAssign<&MotiveClass> for MotiveClass {
    fn sub_assign(&mut self, rhs: &MotiveClass) {
        add_into(&mut self.coeffs, &rhs.coeffs, true);
        self.trim();
    }
}

impl AddAssign for MotiveClass {
    fn add_assign(&mut self, rhs: MotiveClass) {
        *self += &rhs;
    }
}

impl SubAssign for MotiveClass {
    fn sub_assign(&mut self, rhs: MotiveClass) {
        *self -= &rhs;
    }
}

impl Add<&MotiveClass> for &MotiveClass {
    type Output = MotiveClass;
    fn add(self, rhs: &MotiveClass) -> MotiveClass {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MotiveClass> for &MotiveClass {
    type Output = MotiveClass;
    fn sub(self, rhs: &MotiveClass) -> MotiveClass {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MotiveClass> for &MotiveClass {
    type Output = MotiveClass;
    fn mul(self, rhs: &MotiveClass) -> MotiveClass {
        if self.is_zero() || rhs.is_zero() {
            return MotiveClass::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        MotiveClass::from_coeffs(coeffs)
    }
}

impl Neg for &MotiveClass {
    type Output = MotiveClass;
    fn neg(self) -> MotiveClass {
        MotiveClass {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for MotiveClass {
    type Output = MotiveClass;
    fn neg(self) -> MotiveClass {
        -&self
    }
}

impl MulAssign<&MotiveClass> for MotiveClass {
    fn mul_assign(&mut self, rhs: &MotiveClass) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for MotiveClass {
            type Output = MotiveClass;
            fn $method(self, rhs: MotiveClass) -> MotiveClass {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MotiveClass> for MotiveClass {
            type Output = MotiveClass;
            fn $method(self, rhs: &MotiveClass) -> MotiveClass {
                (&self).$method(rhs)
            }
        }
        impl $trait<MotiveClass> for &MotiveClass {
            type Output = MotiveClass;
            fn $method(self, rhs: MotiveClass) -> MotiveClass {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Sum for MotiveClass {
    fn sum<I: Iterator<Item = MotiveClass>>(iter: I) -> Self {
        iter.fold(MotiveClass::zero(), |mut acc, c| {
            acc += &c;
            acc
        })
    }
}

impl<'a> Sum<&'a MotiveClass> for MotiveClass {
    fn sum<I: Iterator<Item = &'a MotiveClass>>(iter: I) -> Self {
        iter.fold(MotiveClass::zero(), |mut acc, c| {
            acc += c;
            acc
        })
    }
}

/// Serde adapter writing a [`BigInt`] as a plain JSON integer.
pub mod json_int {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::ser::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        n.to_i64()
            .ok_or_else(|| S::Error::custom("integer does not fit in 64 bits"))?
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        i64::deserialize(d)
            .map(BigInt::from)
            .map_err(D::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(n: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match n {
                Some(n) => super::serialize(n, s),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            Ok(Option::<i64>::deserialize(d)?.map(BigInt::from))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(c: &[i64]) -> MotiveClass {
        MotiveClass::from_coeffs(c.iter().copied())
    }

    #[test]
    fn add_and_mul() {
        assert_eq!(class(&[1, 1]) + class(&[0, 1]), class(&[1, 2]));
        assert_eq!(class(&[1, 1, 1]) * class(&[1, 1]), class(&[1, 2, 2, 1]));
        let p2 = class(&[1, 1, 1]);
        let p13 = class(&[1; 14]);
        let m2 = &p2 * &p13;
        assert_eq!(m2.coeff(0), BigInt::from(1));
        assert_eq!(m2.degree(), Some(15));
    }

    #[test]
    fn trimming_and_zero() {
        let z = class(&[1, 2]) - class(&[1, 2]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(class(&[3, 0, 0]).coeffs().len(), 1);
        assert_eq!(z.euler(), BigInt::zero());
    }

    #[test]
    fn exact_division() {
        let a = class(&[1, 1]) * class(&[1, 2]);
        assert_eq!(a.exact_div(&class(&[1, 1])).unwrap(), class(&[1, 2]));
        assert_eq!(
            class(&[1, 2, 2, 1]).exact_div(&class(&[1, 1, 1])).unwrap(),
            class(&[1, 1])
        );
        assert!(matches!(
            class(&[1, 1]).exact_div(&class(&[1, 2])),
            Err(Error::DivisionNotExact(_))
        ));
        assert!(matches!(
            class(&[1, 1]).exact_div(&MotiveClass::zero()),
            Err(Error::DivisionByZero)
        ));
        // remainder survives even though every leading step divides
        assert!(class(&[2, 0, 1]).exact_div(&class(&[1, 1])).is_err());
        assert!(MotiveClass::zero()
            .exact_div(&class(&[5]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(class(&[1, 1, 1]).evaluate(1), BigInt::from(3));
        assert_eq!(class(&[1, 1, 1]).evaluate(2), BigInt::from(7));
        assert_eq!(class(&[-1, 0, 2]).evaluate(3), BigInt::from(17));
    }

    #[test]
    fn palindromes() {
        assert!(class(&[1, 2, 1]).is_palindromic());
        assert!(!class(&[1, 2]).is_palindromic());
        assert!(MotiveClass::zero().is_palindromic());
    }

    #[test]
    fn symmetric_square_of_plane() {
        let p2 = class(&[1, 1, 1]);
        let s = p2.sym_power(2).unwrap();
        assert_eq!(s, class(&[1, 1, 2, 1, 1]));
        assert_eq!(s.evaluate(2), BigInt::from(35));
        assert_eq!(MotiveClass::one().sym_power(7).unwrap(), MotiveClass::one());
        assert_eq!(p2.sym_power(0).unwrap(), MotiveClass::one());
        assert!(MotiveClass::zero().sym_power(3).unwrap().is_zero());
        assert!(matches!(
            class(&[1, -1]).sym_power(2),
            Err(Error::NotEffective { index: 1, .. })
        ));
    }

    #[test]
    fn sym_power_of_multiple_points() {
        // Sym^3 of 4 points: multisets of size 3 from 4 elements
        assert_eq!(MotiveClass::constant(4).sym_power(3).unwrap(), class(&[20]));
    }

    #[test]
    fn display() {
        assert_eq!(class(&[1, 2, 0, -1]).to_string(), "1 + 2L - L^3");
        assert_eq!(class(&[0, -3]).to_string(), "-3L");
        assert_eq!(MotiveClass::zero().to_string(), "0");
    }

    #[test]
    fn json_is_a_plain_array() {
        let c = class(&[1, -2, 3]);
        assert_eq!(serde_json::to_string(&c).unwrap(), "[1,-2,3]");
        let back: MotiveClass = serde_json::from_str("[1,-2,3]").unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<MotiveClass>("[1,0]").is_err());
    }
}
