use super::certificate::{Certificate, ProjectionStep, Status, Verdict};
use super::rules::{
    check_bezout, check_codim2_table, check_counting, check_homogeneous, check_known_tables,
    check_parameter_count, check_segre_iff, projection_children, RuleResult,
};
use crate::arrangements::WeightVector;
use crate::error::Result;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    pub seed: u64,
    /// Largest hypersurface degree tried by the Bezout rule.
    pub d_max: usize,
    /// Number of successive projections explored.
    pub depth: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { seed: 0, d_max: 3, depth: 2 }
    }
}

pub const RULE_ORDER: [&str; 11] = [
    "CountingSufficient",
    "Codim2Table",
    "SegreIff",
    "HomogeneousTables",
    "ParameterCount",
    "Codim2Table negative",
    "SegreIff negative",
    "BezoutWitness",
    "ProjectionChain",
    "HomogeneousTables negative",
    "KnownNonFeasibleTable",
];

/// Classifier with memoized Bezout and projection checks.
///
/// Results depend only on the weight vector and the options, so one engine can be shared
/// across threads.
pub struct Classifier {
    opts: ClassifyOptions,
    base: Mutex<HashMap<WeightVector, RuleResult>>,
    bezout: Mutex<HashMap<WeightVector, RuleResult>>,
}

fn keep(r: RuleResult, want: Status) -> RuleResult {
    r.filter(|(s, _)| *s == want)
}

impl Classifier {
    pub fn new(opts: ClassifyOptions) -> Self {
        Classifier { opts, base: Mutex::new(HashMap::new()), bezout: Mutex::new(HashMap::new()) }
    }

    pub fn options(&self) -> &ClassifyOptions {
        &self.opts
    }

    pub fn bezout(&self, l: &WeightVector) -> Result<RuleResult> {
        if let Some(r) = self.bezout.lock().expect("memo").get(l) {
            return Ok(r.clone());
        }
        let r = check_bezout(l, self.opts.d_max, self.opts.seed)?;
        self.bezout.lock().expect("memo").insert(l.clone(), r.clone());
        Ok(r)
    }

    /// Non-feasibility rules applied to a projected configuration.
    fn base_nonfeasible(&self, l: &WeightVector) -> Result<RuleResult> {
        if let Some(r) = self.base.lock().expect("memo").get(l) {
            return Ok(r.clone());
        }
        let r = match check_parameter_count(l)
            .or_else(|| keep(check_codim2_table(l), Status::NonFeasible))
            .or_else(|| keep(check_segre_iff(l), Status::NonFeasible))
        {
            Some(r) => Some(r),
            None if check_counting(l).is_some() => None,
            None => self.bezout(l)?,
        };
        self.base.lock().expect("memo").insert(l.clone(), r.clone());
        Ok(r)
    }

    /// Breadth-first search over successive projections for a non-feasible descendant.
    pub fn projection(&self, l: &WeightVector) -> Result<RuleResult> {
        let mut frontier: Vec<(WeightVector, Vec<ProjectionStep>)> = vec![(l.clone(), vec![])];
        let mut seen = HashSet::new();
        for _ in 0..self.opts.depth {
            let mut next = Vec::new();
            for (node, steps) in &frontier {
                for (center, child) in projection_children(node) {
                    if !seen.insert(child.clone()) {
                        continue;
                    }
                    let mut chain = steps.clone();
                    chain.push(ProjectionStep { center, child: child.clone() });
                    if let Some((_, cert)) = self.base_nonfeasible(&child)? {
                        return Ok(Some((
                            Status::NonFeasible,
                            Certificate::ProjectionChain { steps: chain, child: Box::new(cert) },
                        )));
                    }
                    next.push((child, chain));
                }
            }
            frontier = next;
        }
        Ok(None)
    }

    pub fn classify(&self, l: &WeightVector) -> Result<Verdict> {
        let verdict = |(status, certificate): (Status, Certificate)| Verdict { weight: l.clone(), status, certificate };
        let homogeneous = check_homogeneous(l);
        let cheap = check_counting(l)
            .or_else(|| keep(check_codim2_table(l), Status::Feasible))
            .or_else(|| keep(check_segre_iff(l), Status::Feasible))
            .or_else(|| keep(homogeneous.clone(), Status::Feasible))
            .or_else(|| check_parameter_count(l))
            .or_else(|| keep(check_codim2_table(l), Status::NonFeasible))
            .or_else(|| keep(check_segre_iff(l), Status::NonFeasible));
        if let Some(r) = cheap {
            return Ok(verdict(r));
        }
        if let Some(r) = self.bezout(l)? {
            return Ok(verdict(r));
        }
        if let Some(r) = self.projection(l)? {
            return Ok(verdict(r));
        }
        if let Some(r) = keep(homogeneous.clone(), Status::NonFeasible).or_else(|| check_known_tables(l)) {
            return Ok(verdict(r));
        }
        if let Some(r) = keep(homogeneous, Status::Unknown) {
            return Ok(verdict(r));
        }
        let tried = RULE_ORDER.iter().map(|s| s.to_string()).collect();
        Ok(verdict((Status::Unknown, Certificate::Unresolved { tried })))
    }

    /// Every rule that applies, in rule order, with the status it proves.
    pub fn all_rules(&self, l: &WeightVector) -> Result<Vec<(Status, Certificate)>> {
        let mut out: Vec<(Status, Certificate)> = [
            check_counting(l),
            check_codim2_table(l),
            check_segre_iff(l),
            check_homogeneous(l),
            check_parameter_count(l),
        ]
        .into_iter()
        .flatten()
        .collect();
        out.extend(self.bezout(l)?);
        out.extend(self.projection(l)?);
        out.extend(check_known_tables(l));
        Ok(out)
    }
}

pub fn classify(l: &WeightVector, opts: &ClassifyOptions) -> Result<Verdict> {
    Classifier::new(*opts).classify(l)
}

/// Statuses proved by every applicable rule; Feasible and NonFeasible never both occur for a
/// consistent rule set.
pub fn classify_all_rules(l: &WeightVector, opts: &ClassifyOptions) -> Result<Vec<(Status, Certificate)>> {
    Classifier::new(*opts).all_rules(l)
}
