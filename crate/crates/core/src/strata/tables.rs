//! Published classes the assemblies are checked against.

use num_bigint::BigInt;

use super::Target;
use crate::atoms::projective;
use crate::ring::MotiveClass;

const M41_BETTI: [i64; 18] = [
    1, 2, 6, 10, 14, 15, 16, 16, 16, 16, 16, 16, 15, 14, 10, 6, 2, 1,
];

const M5_BETTI: [i64; 27] = [
    1, 2, 6, 13, 26, 45, 68, 87, 100, 107, 111, 112, 113, 113, 113, 112, 111, 107, 100, 87, 68, 45,
    26, 13, 6, 2, 1,
];

// L^11 + 3L^10 + 8L^9 + 18L^8 + 30L^7 + 39L^6 + 38L^5 + 28L^4 + 15L^3 + 6L^2 + 2L + 1
const OMEGA26_DESCENDING: [i64; 12] = [1, 3, 8, 18, 30, 39, 38, 28, 15, 6, 2, 1];

/// Stated class of a target.
pub fn expected_class(target: Target) -> MotiveClass {
    match target {
        Target::M11 => projective(2),
        Target::M21 => projective(5),
        // P^8-bundle over P^2
        Target::M31 => &projective(2) * &projective(8),
        Target::M41 => MotiveClass::from_coeffs(M41_BETTI),
        Target::M51 | Target::M52 => MotiveClass::from_coeffs(M5_BETTI),
        Target::Omega26 => MotiveClass::from_coeffs(OMEGA26_DESCENDING.iter().rev().copied()),
    }
}

/// Stated Euler number of a target.
pub fn expected_euler(target: Target) -> BigInt {
    BigInt::from(match target {
        Target::M11 => 3,
        Target::M21 => 6,
        Target::M31 => 27,
        Target::M41 => 192,
        Target::M51 | Target::M52 => 1695,
        Target::Omega26 => 189,
    })
}
