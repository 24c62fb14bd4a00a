//! The JSON envelope: `{"schema_version": 1, "kind": ..., <report fields>}`.

use cusp_atlas::json_int;
use cusp_atlas::{
    CriterionReport, CrossCheckDiff, EnumerationReport, FamilyId, FamilyInstance, FamilyMatch,
    KodairaHint, SingularityType,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: Body,
}

impl Document {
    pub fn new(body: Body) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            body,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Criterion(CriterionReport),
    Enumeration(EnumerationDoc),
    Crosscheck(CrossCheckDiff),
    Invariants(InvariantsReport),
    Families(FamiliesReport),
    Identify(IdentifyReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerationDoc {
    #[serde(flatten)]
    pub report: EnumerationReport,
    pub crosscheck: CrossCheckDiff,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantsReport {
    #[serde(rename = "type")]
    pub ntype: SingularityType,
    #[serde(with = "json_int::unsigned")]
    pub delta: u128,
    #[serde(with = "json_int::unsigned_vec")]
    pub generators: Vec<u128>,
    #[serde(with = "json_int::unsigned")]
    pub conductor: u128,
    /// `x = t^e0, y = t^e1 + t^e2`; two entries for a one-pair type.
    #[serde(with = "json_int::unsigned_vec")]
    pub parametrization_exponents: Vec<u128>,
    #[serde(with = "json_int::unsigned_opt", default)]
    pub degree: Option<u128>,
    #[serde(default)]
    pub degree_note: Option<String>,
    #[serde(with = "json_int::signed_opt", default)]
    pub cbar_sq: Option<i128>,
    #[serde(default)]
    pub kodaira_hint: Option<KodairaHint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamiliesReport {
    #[serde(with = "json_int::unsigned")]
    pub max_degree: u128,
    pub family: Option<FamilyId>,
    pub instances: Vec<FamilyInstance>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentifyReport {
    #[serde(rename = "type")]
    pub ntype: SingularityType,
    #[serde(with = "json_int::unsigned")]
    pub degree: u128,
    pub families: Vec<FamilyMatch>,
    pub exception: Option<String>,
}
