use super::config::{sample_shape, Component, ComponentShape, Configuration};
use super::rank::{rank, RankBackend};
use crate::error::Result;
use crate::exactgeom::linalg::{self, Matrix};
use crate::exactgeom::scalar::primitive_integer_vector;
use crate::exactgeom::{derive_seed, LinearSubspace, Projectivity, Rng, Scalar};
use crate::poly::{binomial, MonomialBasis};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Rows of linear conditions on the coefficients of degree-d forms in n+1 variables,
/// grouped in blocks by component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionMatrix {
    pub n: usize,
    pub d: usize,
    pub rows: Vec<Vec<BigInt>>,
    /// (component index, first row, end row)
    pub blocks: Vec<(usize, usize, usize)>,
}

impl ConditionMatrix {
    pub fn ncols(&self) -> usize {
        binomial(self.n + self.d, self.d)
    }
}

type Poly = HashMap<Vec<u8>, BigInt>;

/// Conditions for F to vanish to order >= m along `space`, in degree d.
///
/// With x = M z, where the first columns of M span the space and the rest are standard
/// vectors, these are the coefficients of F(Mz) at monomials of degree < m in the
/// normal variables.
pub fn vanishing_conditions(space: &LinearSubspace, m: usize, d: usize) -> Vec<Vec<BigInt>> {
    let n = space.ambient_dim();
    let nv = n + 1;
    let k1 = space.basis().len();
    let basis: Vec<Vec<BigInt>> = space.basis().iter().map(|r| primitive_integer_vector(r)).collect();
    let normal: Vec<usize> = (0..nv).filter(|i| !space.pivots().contains(i)).collect();
    let lin: Vec<Vec<(usize, BigInt)>> = (0..nv)
        .map(|i| {
            let mut t: Vec<(usize, BigInt)> = basis
                .iter()
                .enumerate()
                .filter(|(_, b)| !b[i].is_zero())
                .map(|(a, b)| (a, b[i].clone()))
                .collect();
            if let Some(j) = normal.iter().position(|&c| c == i) {
                t.push((k1 + j, BigInt::one()));
            }
            t
        })
        .collect();
    let rows_basis = MonomialBasis::filtered(nv, d, |e| e[k1..].iter().map(|&x| x as usize).sum::<usize>() < m);
    let cols = MonomialBasis::new(nv, d);
    let mut rows = vec![vec![BigInt::zero(); cols.len()]; rows_basis.len()];
    let mul_linear = |p: &Poly, terms: &[(usize, BigInt)]| -> Poly {
        let mut out: Poly = HashMap::new();
        for (mono, c) in p {
            let wdeg: usize = mono[k1..].iter().map(|&x| x as usize).sum();
            for (v, a) in terms {
                if *v >= k1 && wdeg + 1 >= m {
                    continue;
                }
                let mut e = mono.clone();
                e[*v] += 1;
                *out.entry(e).or_insert_with(BigInt::zero) += c * a;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    };
    let mut exp = vec![0u8; nv];
    let mut start: Poly = HashMap::new();
    start.insert(vec![0u8; nv], BigInt::one());
    fn rec(
        i: usize,
        left: usize,
        p: Poly,
        exp: &mut Vec<u8>,
        lin: &[Vec<(usize, BigInt)>],
        mul: &dyn Fn(&Poly, &[(usize, BigInt)]) -> Poly,
        emit: &mut dyn FnMut(&[u8], &Poly),
    ) {
        let nv = exp.len();
        if i + 1 == nv {
            let mut q = p;
            for _ in 0..left {
                q = mul(&q, &lin[i]);
            }
            exp[i] = left as u8;
            emit(exp, &q);
            exp[i] = 0;
            return;
        }
        let mut q = p;
        for e in 0..=left {
            exp[i] = e as u8;
            rec(i + 1, left - e, q.clone(), exp, lin, mul, emit);
            if e < left {
                q = mul(&q, &lin[i]);
            }
        }
        exp[i] = 0;
    }
    let mut emit = |e: &[u8], p: &Poly| {
        let col = cols.index_of(e).expect("column monomial");
        for (mono, c) in p {
            if let Some(r) = rows_basis.index_of(mono) {
                rows[r][col] = c.clone();
            }
        }
    };
    rec(0, d, start, &mut exp, &lin, &mul_linear, &mut emit);
    rows
}

/// Conditions of all components, in component order.
pub fn condition_matrix(config: &Configuration, d: usize) -> ConditionMatrix {
    let blocks: Vec<Vec<Vec<BigInt>>> = config
        .components()
        .par_iter()
        .map(|c| vanishing_conditions(&c.space, c.mult, d))
        .collect();
    let mut rows = Vec::new();
    let mut spans = Vec::new();
    for (i, b) in blocks.into_iter().enumerate() {
        let start = rows.len();
        rows.extend(b);
        spans.push((i, start, rows.len()));
    }
    ConditionMatrix { n: config.n(), d, rows, blocks: spans }
}

/// Projectivity taking a greedily chosen independent subfamily of components, fattest and
/// largest first, to coordinate subspaces.
pub fn normalizing_projectivity(config: &Configuration) -> Projectivity {
    let n = config.n();
    let mut order: Vec<&Component> = config.components().iter().collect();
    order.sort_by(|a, b| b.mult.cmp(&a.mult).then(b.dim().cmp(&a.dim())));
    let mut cols: Matrix = Vec::new();
    for c in order {
        let mut trial = cols.clone();
        trial.extend(c.space.basis().iter().cloned());
        if trial.len() <= n + 1 && linalg::rank(&trial) == trial.len() {
            cols = trial;
        }
    }
    for i in 0..=n {
        if cols.len() == n + 1 {
            break;
        }
        let mut e = vec![Scalar::zero(); n + 1];
        e[i] = Scalar::one();
        let mut trial = cols.clone();
        trial.push(e);
        if linalg::rank(&trial) == trial.len() {
            cols = trial;
        }
    }
    Projectivity::new(linalg::transpose(&cols)).expect("columns form a basis").inverse()
}

/// Options for ideal dimension computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertOptions {
    pub backend: RankBackend,
    /// Move an independent subfamily of components to coordinate spaces first.
    pub normalize: bool,
    /// Seed for the modular primes.
    pub seed: u64,
}

impl Default for HilbertOptions {
    fn default() -> Self {
        HilbertOptions { backend: RankBackend::Exact, normalize: true, seed: 0 }
    }
}

/// Ideal dimension together with how its rank was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub ideal_dim: usize,
    pub rank: usize,
    pub columns: usize,
    pub exact: bool,
}

pub fn ideal_dimension_with(config: &Configuration, d: usize, opts: &HilbertOptions) -> IdealReport {
    let normalized;
    let cfg = if opts.normalize && !config.components().is_empty() {
        normalized = config.apply(&normalizing_projectivity(config));
        &normalized
    } else {
        config
    };
    let cm = condition_matrix(cfg, d);
    let columns = cm.ncols();
    let r = rank(cm.rows, opts.backend, opts.seed);
    IdealReport { ideal_dim: columns - r.rank, rank: r.rank, columns, exact: r.exact }
}

/// dim of the degree-d part of the ideal of the (fat) configuration.
pub fn ideal_dimension(config: &Configuration, d: usize) -> usize {
    ideal_dimension_with(config, d, &HilbertOptions::default()).ideal_dim
}

/// Hilbert function C(n+d, d) - ideal_dimension.
pub fn hilbert_function(config: &Configuration, d: usize) -> usize {
    ideal_dimension_with(config, d, &HilbertOptions::default()).rank
}

/// Hilbert function values of three independently seeded samples of one shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertEvidence {
    pub n: usize,
    pub d: usize,
    /// Maximum over the samples; the generic value is at least this.
    pub hf: usize,
    pub ideal_dim: usize,
    pub seeds: Vec<u64>,
    pub values: Vec<usize>,
    pub seeds_agreed: bool,
    pub exact: bool,
}

pub const EVIDENCE_SAMPLES: usize = 3;

pub fn sample_seeds(seed: u64, label: &str) -> Vec<u64> {
    (0..EVIDENCE_SAMPLES).map(|i| derive_seed(seed, &format!("{label}/{i}"))).collect()
}

/// Hilbert function of a generic configuration of the given shape, on three samples.
pub fn generic_hilbert(
    n: usize,
    shape: &[ComponentShape],
    d: usize,
    seed: u64,
    opts: &HilbertOptions,
) -> Result<HilbertEvidence> {
    let seeds = sample_seeds(seed, "hilbert");
    let reports: Vec<IdealReport> = seeds
        .par_iter()
        .map(|&s| {
            let cfg = sample_shape(n, shape, &mut Rng::new(s))?;
            Ok(ideal_dimension_with(&cfg, d, &HilbertOptions { seed: s, ..*opts }))
        })
        .collect::<Result<_>>()?;
    let values: Vec<usize> = reports.iter().map(|r| r.rank).collect();
    let hf = *values.iter().max().expect("samples");
    Ok(HilbertEvidence {
        n,
        d,
        hf,
        ideal_dim: binomial(n + d, d) - hf,
        seeds_agreed: values.iter().all(|&v| v == hf),
        exact: reports.iter().all(|r| r.exact),
        seeds,
        values,
    })
}
