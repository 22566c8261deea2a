//! Stratum registry and assembly of the moduli classes.
//!
//! Each stratum is stored as DSL text in `data/registry.json`. Assembling a
//! target sums its strata and checks the result against the published Betti
//! tables; the curve locus `Omega_2^[6]` additionally gets a sub-stratum
//! consistency report (see [`omega`]).

mod assembly;
pub mod omega;
pub mod render;
mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dsl::{self, VarietyExpr};
use crate::error::{Error, Result};
use crate::ring::MotiveClass;

pub use assembly::{
    assemble, verify_all, Flags, StratumClass, VerificationReport, VerificationSuite,
};
pub use omega::{omega26_assembled, ConsistencyReport};
pub use tables::{expected_class, expected_euler};

/// Moduli spaces (and one auxiliary locus) the pipeline can assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    M11,
    M21,
    M31,
    M41,
    M51,
    M52,
    Omega26,
}

impl Target {
    /// Targets whose checks are hard pass/fail criteria.
    pub const MODULI: [Target; 6] = [
        Target::M11,
        Target::M21,
        Target::M31,
        Target::M41,
        Target::M51,
        Target::M52,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Target::M11 => "m11",
            Target::M21 => "m21",
            Target::M31 => "m31",
            Target::M41 => "m41",
            Target::M51 => "m51",
            Target::M52 => "m52",
            Target::Omega26 => "omega26",
        }
    }

    /// Human-readable name, e.g. `M(4,1)`.
    pub fn title(self) -> &'static str {
        match self {
            Target::M11 => "M(1,1)",
            Target::M21 => "M(2,1)",
            Target::M31 => "M(3,1)",
            Target::M41 => "M(4,1)",
            Target::M51 => "M(5,1)",
            Target::M52 => "M(5,2)",
            Target::Omega26 => "Omega_2^[6]",
        }
    }

    /// Dimension `d^2 + 1` of the moduli space; `None` for the curve locus.
    pub fn dimension(self) -> Option<usize> {
        let d = match self {
            Target::M11 => 1,
            Target::M21 => 2,
            Target::M31 => 3,
            Target::M41 => 4,
            Target::M51 | Target::M52 => 5,
            Target::Omega26 => return None,
        };
        Some(d * d + 1)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Target::MODULI.as_slice(), &[Target::Omega26]]
            .concat()
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown target {s:?}")))
    }
}

/// One registry row as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumSpec {
    pub id: String,
    #[serde(rename = "paper_ref")]
    pub citation: String,
    pub expr: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<MotiveClass>,
}

impl StratumSpec {
    /// Group the stratum belongs to: the id up to the first `.`.
    pub fn group(&self) -> &str {
        self.id.split('.').next().unwrap_or(&self.id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub spec: StratumSpec,
    pub expr: VarietyExpr,
    pub class: MotiveClass,
}

impl Stratum {
    /// Whether the evaluated class agrees with the stated one (vacuously true
    /// when nothing is stated).
    pub fn matches_expected(&self) -> bool {
        self.spec.expected.as_ref().is_none_or(|e| *e == self.class)
    }
}

/// Parsed and evaluated stratum registry.
#[derive(Debug, Clone)]
pub struct Registry {
    strata: Vec<Stratum>,
}

const BUILTIN_REGISTRY: &str = include_str!("../../data/registry.json");

impl Registry {
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_REGISTRY).expect("bundled registry is well-formed")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let specs: Vec<StratumSpec> =
            serde_json::from_str(json).map_err(|e| Error::Registry(e.to_string()))?;
        Self::from_specs(specs)
    }

    pub fn from_specs(specs: Vec<StratumSpec>) -> Result<Self> {
        let mut strata = Vec::with_capacity(specs.len());
        for spec in specs {
            if strata.iter().any(|s: &Stratum| s.spec.id == spec.id) {
                return Err(Error::Registry(format!("duplicate id {}", spec.id)));
            }
            let expr =
                dsl::parse(&spec.expr).map_err(|e| Error::Registry(format!("{}: {e}", spec.id)))?;
            let class = expr
                .eval()
                .map_err(|e| Error::Registry(format!("{}: {e}", spec.id)))?;
            strata.push(Stratum { spec, expr, class });
        }
        Ok(Self { strata })
    }

    pub fn to_json(&self) -> String {
        let specs: Vec<&StratumSpec> = self.strata.iter().map(|s| &s.spec).collect();
        serde_json::to_string_pretty(&specs).expect("registry serializes")
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn group<'a>(&'a self, group: &'a str) -> impl Iterator<Item = &'a Stratum> + 'a {
        self.strata.iter().filter(move |s| s.spec.group() == group)
    }

    pub fn get(&self, id: &str) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.spec.id == id)
    }

    /// Ids of strata whose stated class disagrees with the evaluated one.
    pub fn mismatches(&self) -> Vec<&str> {
        self.strata
            .iter()
            .filter(|s| !s.matches_expected())
            .map(|s| s.spec.id.as_str())
            .collect()
    }
}

/// The bundled registry.
pub fn registry() -> Registry {
    Registry::builtin()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_registry_loads() {
        let reg = registry();
        assert!(reg.mismatches().is_empty());
        assert_eq!(reg.group("m41").count(), 3);
        assert_eq!(reg.group("m51").count(), 7);
        assert_eq!(reg.group("m52").count(), 5);
        assert_eq!(reg.group("m11").count(), 1);
    }

    #[test]
    fn every_expression_round_trips() {
        for s in registry().strata() {
            let printed = s.expr.format();
            assert_eq!(dsl::parse(&printed).unwrap(), s.expr, "{}", s.spec.id);
        }
    }

    #[test]
    fn json_round_trip() {
        let reg = registry();
        let again = Registry::from_json(&reg.to_json()).unwrap();
        assert_eq!(reg.strata(), again.strata());
    }

    #[test]
    fn bad_registries_are_rejected() {
        let bad_expr = r#"[{"id":"x","paper_ref":"","expr":"P2 +"}]"#;
        assert!(matches!(
            Registry::from_json(bad_expr),
            Err(Error::Registry(_))
        ));
        let dup =
            r#"[{"id":"x","paper_ref":"","expr":"P2"},{"id":"x","paper_ref":"","expr":"P1"}]"#;
        assert!(Registry::from_json(dup).is_err());
        let wrong = r#"[{"id":"x","paper_ref":"","expr":"P2","expected":[1,1]}]"#;
        assert_eq!(Registry::from_json(wrong).unwrap().mismatches(), vec!["x"]);
    }

    #[test]
    fn targets_parse() {
        assert_eq!("m41".parse::<Target>().unwrap(), Target::M41);
        assert!("m99".parse::<Target>().is_err());
        assert_eq!(Target::M52.dimension(), Some(26));
    }
}
