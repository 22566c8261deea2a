//! Classes of the standard varieties the strata are built from.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::MotiveClass;

/// Largest `n` accepted by [`hilb_p2`].
pub const HILB_P2_MAX: u32 = 8;

/// A named variety with a known class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AtomKind {
    Affine(u32),
    Projective(u32),
    Grassmannian {
        k: u32,
        n: u32,
    },
    /// Hilbert scheme of `n` points on the plane.
    HilbP2(u32),
    /// Complete linear system `|dH|` of plane curves of degree `d`.
    LinearSystem(u32),
    /// Universal plane curve of degree `d` over `|dH|`.
    UniversalCurve(u32),
    /// Locus of `n` points of the plane lying on some curve of degree `k`.
    OmegaCurveLocus {
        k: u32,
        n: u32,
    },
}

impl AtomKind {
    /// Checks the parameter constraints, returning a description of the
    /// violation if any.
    pub fn validate(&self) -> std::result::Result<(), String> {
        match *self {
            AtomKind::Grassmannian { k, n } if k > n => Err(format!("Gr({k},{n}) needs k <= n")),
            AtomKind::HilbP2(n) if n > HILB_P2_MAX => Err(format!(
                "Hilb{n} exceeds the supported maximum {HILB_P2_MAX}"
            )),
            AtomKind::LinearSystem(0) => Err("Lin(d) needs d >= 1".into()),
            AtomKind::UniversalCurve(0) => Err("C(d) needs d >= 1".into()),
            AtomKind::OmegaCurveLocus { k, n } if !matches!((k, n), (1, 3) | (2, 6)) => Err(
                format!("Omega({k},{n}) is not available; only (1,3) and (2,6)"),
            ),
            _ => Ok(()),
        }
    }

    pub fn class(&self) -> Result<MotiveClass> {
        match *self {
            AtomKind::Affine(n) => Ok(affine(n)),
            AtomKind::Projective(n) => Ok(projective(n)),
            AtomKind::Grassmannian { k, n } => Ok(grassmannian(k, n)),
            AtomKind::HilbP2(n) => hilb_p2(n),
            AtomKind::LinearSystem(d) => Ok(linear_system(d)),
            AtomKind::UniversalCurve(d) => Ok(universal_curve(d)),
            AtomKind::OmegaCurveLocus { k, n } => omega_locus(k, n),
        }
    }
}

/// DSL spelling of the atom.
impl fmt::Display for AtomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AtomKind::Affine(n) => write!(f, "A{n}"),
            AtomKind::Projective(n) => write!(f, "P{n}"),
            AtomKind::Grassmannian { k, n } => write!(f, "Gr({k},{n})"),
            AtomKind::HilbP2(n) => write!(f, "Hilb{n}"),
            AtomKind::LinearSystem(d) => write!(f, "Lin({d})"),
            AtomKind::UniversalCurve(d) => write!(f, "C({d})"),
            AtomKind::OmegaCurveLocus { k, n } => write!(f, "Omega({k},{n})"),
        }
    }
}

/// `L^n`.
pub fn affine(n: u32) -> MotiveClass {
    MotiveClass::monomial(n as usize, 1)
}

/// `1 + L + ... + L^n`.
pub fn projective(n: u32) -> MotiveClass {
    MotiveClass::from_coeffs(vec![1; n as usize + 1])
}

/// Gaussian binomial `[n choose k]_L`, built with the Pascal-type recurrence
/// `[n, k] = [n-1, k-1] + L^k [n-1, k]` (cells of the Schubert decomposition).
/// Zero when `k > n`.
pub fn grassmannian(k: u32, n: u32) -> MotiveClass {
    if k > n {
        return MotiveClass::zero();
    }
    let k = k as usize;
    // row[j] holds [m, j] for the current m
    let mut row: Vec<MotiveClass> = vec![MotiveClass::zero(); k + 1];
    row[0] = MotiveClass::one();
    for m in 1..=n as usize {
        for j in (1..=k.min(m)).rev() {
            let shifted = &affine(j as u32) * &row[j];
            row[j] = &row[j - 1] + &shifted;
        }
    }
    row.swap_remove(k)
}

/// Class of `Hilb^n(P^2)` from the cell-count generating function
/// `prod_{m>=1} 1 / ((1 - L^(m-1) t^m)(1 - L^m t^m)(1 - L^(m+1) t^m))`.
pub fn hilb_p2(n: u32) -> Result<MotiveClass> {
    if n > HILB_P2_MAX {
        return Err(Error::OutOfRange {
            what: "Hilbert scheme length",
            value: n.into(),
            allowed: "0..=8",
        });
    }
    let n = n as usize;
    let mut series = vec![MotiveClass::zero(); n + 1];
    series[0] = MotiveClass::one();
    for m in 1..=n {
        for weight in [m - 1, m, m + 1] {
            // multiply by sum_j L^(weight*j) t^(m*j), truncated at t^n
            let mut next = series.clone();
            for deg in m..=n {
                let lower = &next[deg - m] * &affine(weight as u32);
                next[deg] += &lower;
            }
            series = next;
        }
    }
    Ok(series.swap_remove(n))
}

/// `|dH| = P^(d(d+3)/2)`.
pub fn linear_system(d: u32) -> MotiveClass {
    projective(d * (d + 3) / 2)
}

/// Universal curve of degree `d`: a `P^(d(d+3)/2 - 1)`-bundle over `P^2`
/// (curves through a fixed point). Zero for `d = 0`.
pub fn universal_curve(d: u32) -> MotiveClass {
    match (d * (d + 3) / 2).checked_sub(1) {
        Some(fiber) => &projective(2) * &projective(fiber),
        None => MotiveClass::zero(),
    }
}

/// Class of the curve locus `Omega_k^[n]`; only `(1,3)` and `(2,6)` exist here.
pub fn omega_locus(k: u32, n: u32) -> Result<MotiveClass> {
    match (k, n) {
        // three collinear points: a point of |H| and three points on that line
        (1, 3) => Ok(&projective(2) * &projective(3)),
        (2, 6) => Ok(MotiveClass::from_coeffs([
            1i64, 2, 6, 15, 28, 38, 39, 30, 18, 8, 3, 1,
        ])),
        _ => Err(Error::Unsupported(format!(
            "Omega({k},{n}): only (1,3) and (2,6) are available"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn class(c: &[i64]) -> MotiveClass {
        MotiveClass::from_coeffs(c.iter().copied())
    }

    #[test]
    fn affine_and_projective() {
        assert_eq!(affine(0), MotiveClass::one());
        assert_eq!(projective(2), class(&[1, 1, 1]));
        assert_eq!(projective(5).euler(), BigInt::from(6));
    }

    #[test]
    fn grassmannian_boxes() {
        assert_eq!(grassmannian(2, 4), class(&[1, 1, 2, 1, 1]));
        assert_eq!(grassmannian(2, 6), class(&[1, 1, 2, 2, 3, 2, 2, 1, 1]));
        assert_eq!(grassmannian(0, 7), MotiveClass::one());
        assert_eq!(grassmannian(7, 7), MotiveClass::one());
        assert!(grassmannian(3, 2).is_zero());
        assert_eq!(grassmannian(2, 6).evaluate(2), BigInt::from(651));
    }

    #[test]
    fn hilbert_schemes() {
        assert_eq!(hilb_p2(0).unwrap(), MotiveClass::one());
        assert_eq!(hilb_p2(1).unwrap(), class(&[1, 1, 1]));
        assert_eq!(hilb_p2(2).unwrap(), class(&[1, 2, 3, 2, 1]));
        assert_eq!(hilb_p2(3).unwrap(), class(&[1, 2, 5, 6, 5, 2, 1]));
        let eulers: Vec<BigInt> = (1..=6).map(|n| hilb_p2(n).unwrap().euler()).collect();
        let want: Vec<BigInt> = [3, 9, 22, 51, 108, 221]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(eulers, want);
        for n in 0..=HILB_P2_MAX {
            let h = hilb_p2(n).unwrap();
            assert_eq!(h.degree(), Some(2 * n as usize));
            assert!(h.is_palindromic());
        }
        assert!(matches!(hilb_p2(9), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn linear_systems_and_curves() {
        assert_eq!(linear_system(1), projective(2));
        assert_eq!(linear_system(2), projective(5));
        assert_eq!(linear_system(3), projective(9));
        assert_eq!(universal_curve(1), &projective(2) * &projective(1));
        assert_eq!(universal_curve(2).euler(), BigInt::from(15));
        let c3 = universal_curve(3);
        assert_eq!(c3.euler(), BigInt::from(27));
        assert_eq!(c3.degree(), Some(10));
    }

    #[test]
    fn omega_loci() {
        assert_eq!(omega_locus(1, 3).unwrap(), class(&[1, 2, 3, 3, 2, 1]));
        assert_eq!(omega_locus(1, 3).unwrap().euler(), BigInt::from(12));
        let o = omega_locus(2, 6).unwrap();
        assert_eq!(o.euler(), BigInt::from(189));
        assert_eq!(o.degree(), Some(11));
        assert!(matches!(omega_locus(2, 5), Err(Error::Unsupported(_))));
    }

    #[test]
    fn validation() {
        assert!(AtomKind::Grassmannian { k: 3, n: 2 }.validate().is_err());
        assert!(AtomKind::HilbP2(9).validate().is_err());
        assert!(AtomKind::OmegaCurveLocus { k: 1, n: 4 }.validate().is_err());
        assert!(AtomKind::LinearSystem(0).validate().is_err());
        assert!(AtomKind::OmegaCurveLocus { k: 2, n: 6 }.validate().is_ok());
    }
}
