use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::omega::{omega26_assembled, ConsistencyReport};
use super::tables::{expected_class, expected_euler};
use super::{Registry, Target};
use crate::ring::MotiveClass;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumClass {
    pub id: String,
    pub expr: String,
    pub class: MotiveClass,
}

/// Predicates of a [`VerificationReport`]; each is recomputable from the
/// report's other fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub table_match: bool,
    pub euler_match: bool,
    pub palindrome: bool,
    pub degree_is_dimension: bool,
    pub nonnegative: bool,
    pub constant_term_one: bool,
    /// Every stratum with a stated class reproduces it.
    pub strata_match: bool,
}

impl Flags {
    pub fn all(&self) -> bool {
        self.table_match
            && self.euler_match
            && self.palindrome
            && self.degree_is_dimension
            && self.nonnegative
            && self.constant_term_one
            && self.strata_match
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: Target,
    pub title: String,
    pub strata: Vec<StratumClass>,
    pub assembled: MotiveClass,
    pub expected: MotiveClass,
    #[serde(with = "crate::ring::json_int")]
    pub euler_assembled: BigInt,
    #[serde(with = "crate::ring::json_int")]
    pub euler_expected: BigInt,
    /// Expected degree: `d^2 + 1`, or the stated degree for the curve locus.
    pub dimension: usize,
    pub flags: Flags,
    /// Informational reports never fail a run.
    pub hard: bool,
    pub pass: bool,
}

impl VerificationReport {
    fn build(target: Target, strata: Vec<StratumClass>, strata_match: bool) -> Self {
        let assembled: MotiveClass = strata.iter().map(|s| &s.class).sum();
        let expected = expected_class(target);
        let euler_expected = expected_euler(target);
        let dimension = target
            .dimension()
            .or(expected.degree())
            .expect("stated classes are nonzero");
        let euler_assembled = assembled.euler();
        let flags = Flags {
            table_match: assembled == expected,
            euler_match: euler_assembled == euler_expected,
            palindrome: assembled.is_palindromic(),
            degree_is_dimension: assembled.degree() == Some(dimension),
            nonnegative: assembled.is_effective(),
            constant_term_one: assembled.coeff(0).is_one(),
            strata_match,
        };
        Self {
            target,
            title: target.title().to_string(),
            strata,
            assembled,
            expected,
            euler_assembled,
            euler_expected,
            dimension,
            pass: flags.all(),
            hard: target != Target::Omega26,
            flags,
        }
    }
}

/// Sums the registered strata of `target` and checks the stated table.
///
/// For [`Target::Omega26`] the strata are the quotients `S_n` of the
/// sub-stratum assembly that divided exactly; the report is informational.
pub fn assemble(registry: &Registry, target: Target) -> VerificationReport {
    if target == Target::Omega26 {
        let (_, consistency) = omega26_assembled(registry);
        return omega_report(&consistency);
    }
    let mut strata_match = true;
    let strata = registry
        .group(target.id())
        .map(|s| {
            strata_match &= s.matches_expected();
            StratumClass {
                id: s.spec.id.clone(),
                expr: s.expr.format(),
                class: s.class.clone(),
            }
        })
        .collect();
    VerificationReport::build(target, strata, strata_match)
}

fn omega_report(consistency: &ConsistencyReport) -> VerificationReport {
    let strata = consistency
        .by_n
        .iter()
        .filter_map(|row| {
            row.division.quotient.as_ref().map(|q| StratumClass {
                id: format!("omega26.S{}", row.n),
                expr: format!("R{} / P{}", row.n, row.n),
                class: q.clone(),
            })
        })
        .collect();
    let all_divided = consistency.by_n.iter().all(|r| r.division.exact);
    VerificationReport::build(Target::Omega26, strata, all_divided)
}

/// Every moduli report plus the curve-locus diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSuite {
    pub schema: u32,
    pub reports: Vec<VerificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega26: Option<ConsistencyReport>,
}

impl VerificationSuite {
    pub const SCHEMA: u32 = 1;

    pub fn new(reports: Vec<VerificationReport>, omega26: Option<ConsistencyReport>) -> Self {
        Self {
            schema: Self::SCHEMA,
            reports,
            omega26,
        }
    }

    /// True iff every hard report passes.
    pub fn hard_pass(&self) -> bool {
        self.reports.iter().filter(|r| r.hard).all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Assembles all moduli targets (in parallel) plus the curve-locus diagnostic.
pub fn verify_all(registry: &Registry) -> VerificationSuite {
    let reports: Vec<VerificationReport> = Target::MODULI
        .par_iter()
        .map(|&t| assemble(registry, t))
        .collect();
    let (_, consistency) = omega26_assembled(registry);
    VerificationSuite::new(reports, Some(consistency))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_one_matches_table() {
        let r = assemble(&Registry::builtin(), Target::M41);
        assert_eq!(r.strata.len(), 3);
        assert!(r.pass, "{:?}", r.flags);
        assert_eq!(r.euler_assembled, BigInt::from(192));
        assert_eq!(r.assembled.degree(), Some(17));
    }

    #[test]
    fn five_one_and_five_two_agree() {
        let reg = Registry::builtin();
        let a = assemble(&reg, Target::M51);
        let b = assemble(&reg, Target::M52);
        assert!(a.pass && b.pass);
        assert_eq!(a.assembled, b.assembled);
        assert_eq!(a.euler_assembled, BigInt::from(1695));
    }

    #[test]
    fn a_broken_stratum_flips_the_flags() {
        let mut specs: Vec<_> = Registry::builtin()
            .strata()
            .iter()
            .map(|s| s.spec.clone())
            .collect();
        let m2 = specs.iter_mut().find(|s| s.id == "m41.M2").unwrap();
        m2.expr = "P2*P12".into();
        let r = assemble(&Registry::from_specs(specs).unwrap(), Target::M41);
        assert!(!r.pass);
        assert!(!r.flags.table_match);
        assert!(!r.flags.euler_match);
    }

    #[test]
    fn suite_pass_ignores_informational_reports() {
        let suite = verify_all(&Registry::builtin());
        assert_eq!(suite.reports.len(), 6);
        assert!(suite.hard_pass());
        assert!(suite.omega26.is_some());
        let order: Vec<Target> = suite.reports.iter().map(|r| r.target).collect();
        assert_eq!(order, Target::MODULI.to_vec());
    }
}
