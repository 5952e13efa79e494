use crate::arrangements::WeightVector;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Feasible,
    NonFeasible,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Feasible => "Feasible",
            Status::NonFeasible => "NonFeasible",
            Status::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

/// One reduction step of a projection chain: the components forming the center, as counts
/// by dimension, and the weight vector of the projected configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionStep {
    pub center: Vec<usize>,
    pub child: WeightVector,
}

/// Machine-checkable reason for a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule")]
pub enum Certificate {
    /// Σ (i+1) l_i ≤ n + 3.
    CountingSufficient { sum: usize, bound: usize },
    /// Segre pattern with s free points and block sizes n_1 ≤ ... ≤ n_r.
    SegreIff { s: usize, dims: Vec<usize>, branch: String },
    /// Codimension-two table entry (p points, l codimension-two spaces).
    Codim2Table { p: usize, l: usize },
    /// Homogeneous configuration of l spaces of dimension i with n > i^2 + 5i + 1.
    HomogeneousFormula { i: usize, l: usize, bound: usize, branch: String },
    /// Table for l generic lines in P^n.
    LinesTable { n: usize, l: usize, branch: String },
    /// Table for one space in each dimension.
    OneEachTable { n: usize, branch: String },
    /// A constructed curve passed verification.
    WitnessVerified { digest: String, seed: u64, method: String },
    /// Σ (i+1)(n-1-i) l_i > (n+3)(n-1).
    ParameterCount { lhs: usize, rhs: usize },
    /// H(Λ,d) = H(Λ',d) + C(d+k,k) on every sample, with Σ l_i(i+1) - 1 > dn.
    BezoutWitness {
        d: usize,
        k: usize,
        gamma_index: usize,
        h_lambda: Vec<usize>,
        h_lambda_prime: Vec<usize>,
        binomial: usize,
        incidence: usize,
        dn: usize,
        seeds: Vec<u64>,
        generic_sample: bool,
    },
    /// Non-feasibility of a projected configuration, lifted back.
    ProjectionChain { steps: Vec<ProjectionStep>, child: Box<Certificate> },
    /// Family proved non-feasible by a specialization argument.
    KnownNonFeasibleTable { name: String },
    /// No rule applied.
    Unresolved { tried: Vec<String> },
}

impl Certificate {
    pub fn rule_name(&self) -> &'static str {
        match self {
            Certificate::CountingSufficient { .. } => "CountingSufficient",
            Certificate::SegreIff { .. } => "SegreIff",
            Certificate::Codim2Table { .. } => "Codim2Table",
            Certificate::HomogeneousFormula { .. } => "HomogeneousFormula",
            Certificate::LinesTable { .. } => "LinesTable",
            Certificate::OneEachTable { .. } => "OneEachTable",
            Certificate::WitnessVerified { .. } => "WitnessVerified",
            Certificate::ParameterCount { .. } => "ParameterCount",
            Certificate::BezoutWitness { .. } => "BezoutWitness",
            Certificate::ProjectionChain { .. } => "ProjectionChain",
            Certificate::KnownNonFeasibleTable { .. } => "KnownNonFeasibleTable",
            Certificate::Unresolved { .. } => "Unresolved",
        }
    }

    /// Hex SHA-256 of the JSON encoding.
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("certificates serialize");
        hex::encode(Sha256::digest(bytes))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub weight: WeightVector,
    pub status: Status,
    pub certificate: Certificate,
}
