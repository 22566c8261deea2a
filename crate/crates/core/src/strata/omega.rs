//! Sub-stratum assembly of the conic locus `Omega_2^[6]`.
//!
//! The relative Hilbert scheme of six points on the universal conic splits as
//! `R_0 + R_1 + R_2`, where `R_n` is a `P^n`-bundle over the stratum `S_n` of
//! `Omega_2^[6]` with `h^0(I(2)) = n + 1`. Each `R_n` collects
//!
//! * `n = 0` only: the integral-conic part, a `P^6`-bundle over `|2H| - Sym^2|H|`;
//! * double lines: `(sum_i S^i_n) x |H|`;
//! * line pairs: `H^x_n x (P2 x P2 - diagonal) + H^s_n x (Sym^2 P2 - diagonal)`.
//!
//! Sub-strata are routed to `n` by their subscripts, the integral part goes to
//! `R_0`, and `S_n = R_n / P^n` is recovered by exact division. The result is
//! compared with the stated class of `Omega_2^[6]`; a mismatch is reported, not
//! corrected, and the pinned stated class stays the one used by `W^5`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::tables::expected_class;
use super::{Registry, Target};
use crate::atoms::projective;
use crate::ring::MotiveClass;

const GROUP: &str = "omega26";
const INTEGRAL: &str = "omega26.integral";
const BASE_NON_REDUCED: &str = "omega26.baseN";
const BASE_ORDERED: &str = "omega26.baseOrdered";
const BASE_UNORDERED: &str = "omega26.baseUnordered";
const MAX_N: u32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubStratum {
    pub id: String,
    pub expr: String,
    pub class: MotiveClass,
    #[serde(with = "crate::ring::json_int")]
    pub euler: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionOutcome {
    pub divisor: MotiveClass,
    pub exact: bool,
    pub quotient: Option<MotiveClass>,
    pub error: Option<String>,
    /// `quotient * divisor == dividend`, when a quotient exists.
    pub round_trip: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRow {
    pub n: u32,
    pub integral: MotiveClass,
    pub non_reduced: MotiveClass,
    #[serde(with = "crate::ring::json_int")]
    pub non_reduced_euler: BigInt,
    pub reducible: MotiveClass,
    #[serde(with = "crate::ring::json_int")]
    pub reducible_euler: BigInt,
    /// `R_n`.
    pub total: MotiveClass,
    #[serde(with = "crate::ring::json_int")]
    pub total_euler: BigInt,
    pub division: DivisionOutcome,
    /// Euler number of `S_n`, when the division succeeded.
    #[serde(with = "crate::ring::json_int::option")]
    pub stratum_euler: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub sub_strata: Vec<SubStratum>,
    /// Registry ids the assembly needed but did not find.
    pub missing: Vec<String>,
    pub by_n: Vec<LevelRow>,
    #[serde(with = "crate::ring::json_int")]
    pub reducible_euler_total: BigInt,
    /// `sum_n S_n` over the levels whose division was exact.
    pub assembled: MotiveClass,
    #[serde(with = "crate::ring::json_int")]
    pub assembled_euler: BigInt,
    pub stated: MotiveClass,
    #[serde(with = "crate::ring::json_int")]
    pub stated_euler: BigInt,
    /// `assembled - stated`.
    pub difference: MotiveClass,
    #[serde(with = "crate::ring::json_int")]
    pub difference_euler: BigInt,
    pub complete: bool,
    pub matches: bool,
}

enum Role {
    DoubleLine { n: u32 },
    OrderedPair { n: u32 },
    SymmetricPair { n: u32 },
    Other,
}

fn classify(id: &str) -> Role {
    let suffix = id.strip_prefix("omega26.").unwrap_or(id);
    let level = |s: &str| s.parse::<u32>().ok().filter(|&n| n <= MAX_N);
    if let Some(rest) = suffix.strip_prefix("Hx") {
        if let Some(n) = level(rest) {
            return Role::OrderedPair { n };
        }
    } else if let Some(rest) = suffix.strip_prefix("Hs") {
        if let Some(n) = level(rest) {
            return Role::SymmetricPair { n };
        }
    } else if let Some(rest) = suffix.strip_prefix('S') {
        if let Some((_, n)) = rest.split_once('_') {
            if let Some(n) = level(n) {
                return Role::DoubleLine { n };
            }
        }
    }
    Role::Other
}

fn divide(dividend: &MotiveClass, n: u32) -> DivisionOutcome {
    let divisor = projective(n);
    match dividend.exact_div(&divisor) {
        Ok(q) => DivisionOutcome {
            round_trip: Some(&q * &divisor == *dividend),
            divisor,
            exact: true,
            quotient: Some(q),
            error: None,
        },
        Err(e) => DivisionOutcome {
            divisor,
            exact: false,
            quotient: None,
            error: Some(e.to_string()),
            round_trip: None,
        },
    }
}

/// Assembles `[Omega_2^[6]]` from the registered sub-strata and reports every
/// intermediate class next to the stated value.
pub fn omega26_assembled(registry: &Registry) -> (MotiveClass, ConsistencyReport) {
    let mut missing = Vec::new();
    let mut fetch = |id: &str| match registry.get(id) {
        Some(s) => s.class.clone(),
        None => {
            missing.push(id.to_string());
            MotiveClass::zero()
        }
    };
    let integral = fetch(INTEGRAL);
    let base_non_reduced = fetch(BASE_NON_REDUCED);
    let base_ordered = fetch(BASE_ORDERED);
    let base_unordered = fetch(BASE_UNORDERED);

    let mut double_line: BTreeMap<u32, MotiveClass> = BTreeMap::new();
    let mut ordered: BTreeMap<u32, MotiveClass> = BTreeMap::new();
    let mut symmetric: BTreeMap<u32, MotiveClass> = BTreeMap::new();
    let mut sub_strata = Vec::new();
    for s in registry.group(GROUP) {
        let bucket = match classify(&s.spec.id) {
            Role::DoubleLine { n } => Some(double_line.entry(n)),
            Role::OrderedPair { n } => Some(ordered.entry(n)),
            Role::SymmetricPair { n } => Some(symmetric.entry(n)),
            Role::Other => None,
        };
        if let Some(entry) = bucket {
            *entry.or_default() += &s.class;
        }
        sub_strata.push(SubStratum {
            id: s.spec.id.clone(),
            expr: s.expr.format(),
            euler: s.class.euler(),
            class: s.class.clone(),
        });
    }

    let mut by_n = Vec::new();
    let mut assembled = MotiveClass::zero();
    let mut complete = missing.is_empty();
    let mut reducible_euler_total = BigInt::default();
    for n in 0..=MAX_N {
        let at = |m: &BTreeMap<u32, MotiveClass>| m.get(&n).cloned().unwrap_or_default();
        let integral_part = if n == 0 {
            integral.clone()
        } else {
            MotiveClass::zero()
        };
        let non_reduced = &at(&double_line) * &base_non_reduced;
        let reducible = &(&at(&ordered) * &base_ordered) + &(&at(&symmetric) * &base_unordered);
        let total = &(&integral_part + &non_reduced) + &reducible;
        let division = divide(&total, n);
        match &division.quotient {
            Some(q) => assembled += q,
            None => complete = false,
        }
        reducible_euler_total += reducible.euler();
        by_n.push(LevelRow {
            n,
            integral: integral_part,
            non_reduced_euler: non_reduced.euler(),
            non_reduced,
            reducible_euler: reducible.euler(),
            reducible,
            total_euler: total.euler(),
            total,
            stratum_euler: division.quotient.as_ref().map(MotiveClass::euler),
            division,
        });
    }

    let stated = expected_class(Target::Omega26);
    let difference = &assembled - &stated;
    let report = ConsistencyReport {
        sub_strata,
        missing,
        by_n,
        reducible_euler_total,
        assembled_euler: assembled.euler(),
        stated_euler: stated.euler(),
        difference_euler: difference.euler(),
        matches: complete && difference.is_zero(),
        assembled: assembled.clone(),
        stated,
        difference,
        complete,
    };
    (assembled, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::omega_locus;
    use crate::dsl::eval_source;

    #[test]
    fn integral_part() {
        let reg = Registry::builtin();
        let want = eval_source("(P5 - Sym2(P2))*P6").unwrap();
        assert_eq!(reg.get(INTEGRAL).unwrap().class, want);
        let (_, report) = omega26_assembled(&reg);
        assert_eq!(report.by_n[0].integral, want);
    }

    #[test]
    fn report_is_complete() {
        let (assembled, report) = omega26_assembled(&Registry::builtin());
        assert!(report.missing.is_empty());
        assert_eq!(report.by_n.len(), 3);
        // nine double-line pieces, three + three line-pair pieces, integral, three bases
        assert_eq!(report.sub_strata.len(), 9 + 6 + 1 + 3);
        assert_eq!(report.stated, omega_locus(2, 6).unwrap());
        assert_eq!(report.stated_euler, BigInt::from(189));
        assert_eq!(report.reducible_euler_total, BigInt::from(189));
        assert_eq!(report.difference, &assembled - &report.stated);
        for row in &report.by_n {
            if let Some(q) = &row.division.quotient {
                assert_eq!(&(q * &row.division.divisor), &row.total);
                assert_eq!(row.division.round_trip, Some(true));
            }
        }
    }

    #[test]
    fn routing_by_subscript() {
        assert!(matches!(
            classify("omega26.S4_1"),
            Role::DoubleLine { n: 1 }
        ));
        assert!(matches!(
            classify("omega26.Hx2"),
            Role::OrderedPair { n: 2 }
        ));
        assert!(matches!(
            classify("omega26.Hs0"),
            Role::SymmetricPair { n: 0 }
        ));
        assert!(matches!(classify("omega26.Hs7"), Role::Other));
        assert!(matches!(classify("omega26.baseN"), Role::Other));
    }

    #[test]
    fn deterministic() {
        let reg = Registry::builtin();
        assert_eq!(omega26_assembled(&reg), omega26_assembled(&reg));
    }

    #[test]
    fn missing_pieces_are_listed() {
        let specs = Registry::builtin()
            .strata()
            .iter()
            .filter(|s| s.spec.id != INTEGRAL)
            .map(|s| s.spec.clone())
            .collect();
        let (_, report) = omega26_assembled(&Registry::from_specs(specs).unwrap());
        assert_eq!(report.missing, vec![INTEGRAL.to_string()]);
        assert!(!report.complete);
        assert!(!report.matches);
    }
}
