//! Defectivity of the Segre-Veronese variety P^1 × P^m × P^m embedded in multidegree
//! (2,1,1), read off from the degree-4 part of the ideal of a fat configuration in
//! P^{2m+1}: one double point, two triple (m-1)-spaces and s further double points.

use crate::arrangements::{generic_hilbert, ComponentShape, HilbertEvidence, HilbertOptions};
use crate::error::{Error, Result};
use crate::poly::binomial;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectQuery {
    pub m: usize,
    pub s: usize,
}

impl DefectQuery {
    pub fn new(m: usize, s: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("m must be at least 1".into()));
        }
        Ok(DefectQuery { m, s })
    }

    /// Ambient dimension 2m + 1.
    pub fn n(&self) -> usize {
        2 * self.m + 1
    }

    /// 3(m+1)^2, the dimension of the space of sections.
    pub fn big_n(&self) -> usize {
        3 * (self.m + 1) * (self.m + 1)
    }

    /// N - s(2m+2), which may be negative.
    pub fn expected(&self) -> i64 {
        self.big_n() as i64 - (self.s * (2 * self.m + 2)) as i64
    }

    pub fn shape(&self) -> Vec<ComponentShape> {
        let mut shape = vec![ComponentShape { dim: 0, mult: 2 }];
        shape.extend([ComponentShape { dim: self.m - 1, mult: 3 }; 2]);
        shape.extend(std::iter::repeat_n(ComponentShape { dim: 0, mult: 2 }, self.s));
        shape
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub m: usize,
    pub s: usize,
    pub n: usize,
    pub big_n: usize,
    /// N - s(2m+2), unclamped.
    pub expected: i64,
    /// dim (I_{W ∪ Z})_4 for a generic choice, the minimum over the samples.
    pub actual: usize,
    /// actual > max(expected, 0).
    pub defective: bool,
    pub seeds: Vec<u64>,
    pub values: Vec<usize>,
    pub seeds_agreed: bool,
    pub exact: bool,
}

pub fn defect_check(q: &DefectQuery, seed: u64, opts: &HilbertOptions) -> Result<DefectReport> {
    let n = q.n();
    let ev: HilbertEvidence = generic_hilbert(n, &q.shape(), 4, seed, opts)?;
    let total = binomial(n + 4, 4);
    let expected = q.expected();
    Ok(DefectReport {
        m: q.m,
        s: q.s,
        n,
        big_n: q.big_n(),
        expected,
        actual: ev.ideal_dim,
        defective: ev.ideal_dim as i64 > expected.max(0),
        seeds: ev.seeds,
        values: ev.values.iter().map(|h| total - h).collect(),
        seeds_agreed: ev.seeds_agreed,
        exact: ev.exact,
    })
}

/// Reports for s = 1, ..., 2m + 2.
pub fn defect_sweep(m: usize, seed: u64, opts: &HilbertOptions) -> Result<Vec<DefectReport>> {
    (1..=2 * m + 2)
        .into_par_iter()
        .map(|s| defect_check(&DefectQuery::new(m, s)?, seed, opts))
        .collect()
}
