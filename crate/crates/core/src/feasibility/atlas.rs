use super::certificate::{Certificate, Status};
use super::classify::{ClassifyOptions, Classifier};
use crate::arrangements::WeightVector;
use crate::error::Result;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Weight vectors in P^n with Σ (i+1)(n-1-i) l_i ≤ (n+3)(n-1), in lexicographic order.
pub fn enumerate_weights(n: usize) -> Result<Vec<WeightVector>> {
    let budget = (n + 3) * (n - 1);
    let cost: Vec<usize> = (0..n - 1).map(|i| (i + 1) * (n - 1 - i)).collect();
    let mut out = Vec::new();
    fn rec(i: usize, left: usize, cost: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cost.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..=left / cost[i] {
            cur.push(c);
            rec(i + 1, left - c * cost[i], cost, cur, out);
            cur.pop();
        }
    }
    rec(0, budget, &cost, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter().map(|c| WeightVector::new(n, c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRow {
    pub weight: WeightVector,
    pub status: Status,
    pub rule: String,
    pub digest: String,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasCounts {
    pub feasible: usize,
    pub non_feasible: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub n: usize,
    pub options: ClassifyOptions,
    pub counts: AtlasCounts,
    pub rows: Vec<AtlasRow>,
}

impl Atlas {
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let cols: Vec<String> = (0..self.n - 1).map(|i| format!("l{i}")).collect();
        let _ = writeln!(s, "{},status,rule,certificate_sha256", cols.join(","));
        for r in &self.rows {
            let w: Vec<String> = r.weight.counts().iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "{},{},{},{}", w.join(","), r.status, r.rule, r.digest);
        }
        s
    }
}

/// Classifies every weight vector below the parameter count bound in P^n.
pub fn atlas(n: usize, opts: &ClassifyOptions) -> Result<Atlas> {
    atlas_with(&Classifier::new(*opts), n)
}

/// Atlas computed with an existing classifier, reusing its memoized checks.
pub fn atlas_with(engine: &Classifier, n: usize) -> Result<Atlas> {
    let weights = enumerate_weights(n)?;
    let rows: Vec<AtlasRow> = weights
        .par_iter()
        .map(|l| {
            let v = engine.classify(l)?;
            Ok(AtlasRow {
                weight: v.weight,
                status: v.status,
                rule: v.certificate.rule_name().to_string(),
                digest: v.certificate.digest(),
                certificate: v.certificate,
            })
        })
        .collect::<Result<_>>()?;
    let mut counts = AtlasCounts::default();
    for r in &rows {
        match r.status {
            Status::Feasible => counts.feasible += 1,
            Status::NonFeasible => counts.non_feasible += 1,
            Status::Unknown => counts.unknown += 1,
        }
    }
    Ok(Atlas { n, options: *engine.options(), counts, rows })
}
