//! The JSON report document. Field order is fixed by the struct layout and
//! every collection is a vector, so serializing, parsing and re-serializing
//! a document is byte-identical.

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "mod2cohom/1";

#[derive(Serialize, Deserialize, PartialEq, Debug, Default)]
pub struct ReportDocument {
    pub schema: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub group: Option<GroupEcho>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub groups: Option<Vec<GroupEcho>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub triple: Option<TripleReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ring: Option<RingReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dims: Option<DimsReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub filtration: Option<FiltrationSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub steenrod: Option<Vec<SteenrodEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub homology: Option<HomologySection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<VerificationSection>,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        ReportDocument {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            ..Default::default()
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct GroupEcho {
    pub input: String,
    pub canonical: String,
    pub free_rank: usize,
    pub invariant_factors: Vec<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct TripleReport {
    /// dim A/2
    pub r: usize,
    /// dim of the 2-torsion subgroup
    pub s: usize,
    /// r x s matrix of the torsion-to-quotient map, one row per line of 0/1
    pub beta: Vec<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct RingReport {
    pub degree_one_generators: Vec<String>,
    pub degree_two_generators: Vec<String>,
    pub relations: Vec<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct DimsReport {
    pub max_degree: usize,
    pub rows: Vec<DimsRow>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct DimsRow {
    pub degree: usize,
    pub ring: u64,
    pub hilbert: u64,
    pub cokernel: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bar: Option<u64>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct FiltrationSection {
    pub degree: usize,
    pub phi_dims: Vec<usize>,
    pub quotient_dims: Vec<usize>,
    pub psi_quotient_dims: Vec<usize>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SteenrodEntry {
    pub element: String,
    pub k: usize,
    pub result: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct HomologySection {
    pub max_degree: usize,
    pub dims: Vec<u64>,
    pub psi_quotients: Vec<Vec<usize>>,
    pub h2_exact: bool,
    pub h3_exact: bool,
    pub series_factorization: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct WitnessSection {
    pub max_degree: usize,
    pub dims_left: Vec<u64>,
    pub dims_right: Vec<u64>,
    pub dims_agree: bool,
    pub squaring_rank_left: usize,
    pub squaring_rank_right: usize,
    pub verdict: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct VerificationSection {
    pub verdicts: Vec<Verdict>,
    pub overall: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Canonical rendering used both for files and the round-trip guarantee.
pub fn render_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}
