//! Individual feasibility rules. Each returns the status it can prove and a certificate,
//! or `None` when it does not apply.

use super::certificate::{Certificate, Status};
use crate::arrangements::{
    ideal_dimension_with, sample_configuration, Configuration, HilbertOptions, RankBackend,
    WeightVector,
};
use crate::arrangements::hilbert::sample_seeds;
use crate::error::Result;
use crate::exactgeom::Rng;
use crate::poly::binomial;

pub type RuleResult = Option<(Status, Certificate)>;

pub fn check_counting(l: &WeightVector) -> RuleResult {
    let sum = l.incidence_sum();
    let bound = l.n() + 3;
    (sum <= bound).then_some((Status::Feasible, Certificate::CountingSufficient { sum, bound }))
}

pub fn check_parameter_count(l: &WeightVector) -> RuleResult {
    let n = l.n();
    let lhs: usize = l.counts().iter().enumerate().map(|(i, &c)| (i + 1) * (n - 1 - i) * c).sum();
    let rhs = (n + 3) * (n - 1);
    (lhs > rhs).then_some((Status::NonFeasible, Certificate::ParameterCount { lhs, rhs }))
}

/// Feasible pairs (p, l) of p points and l codimension-two spaces with p + l = n + 3.
pub fn check_codim2_table(l: &WeightVector) -> RuleResult {
    let n = l.n();
    if n < 3 {
        return None;
    }
    let c = l.counts();
    let p = c[0];
    let q = c[n - 2];
    if p == 0 || p + q != n + 3 || c[1..n - 2].iter().any(|&x| x != 0) {
        return None;
    }
    let cert = Certificate::Codim2Table { p, l: q };
    if p <= 3 || q <= 1 {
        Some((Status::Feasible, cert))
    } else {
        Some((Status::NonFeasible, cert))
    }
}

/// The Segre decomposition of a weight vector, if it has one: free points and block sizes.
///
/// Every positive-dimensional component is a block; the remaining blocks are points, chosen
/// so that the block sizes add up to n.
pub fn segre_pattern(l: &WeightVector) -> Option<(usize, Vec<usize>)> {
    let n = l.n();
    let positive: usize = l.counts().iter().enumerate().skip(1).map(|(i, &c)| (i + 1) * c).sum();
    if positive > n {
        return None;
    }
    let units = n - positive;
    let l0 = l.count(0);
    if units > l0 {
        return None;
    }
    let mut dims: Vec<usize> = std::iter::repeat_n(1, units)
        .chain(l.dims().into_iter().filter(|&d| d > 0).map(|d| d + 1))
        .collect();
    dims.sort_unstable();
    if dims.len() < 2 {
        return None;
    }
    Some((l0 - units, dims))
}

/// Largest number of free points a Segre pattern with these block sizes accepts.
pub fn segre_bound(dims: &[usize]) -> usize {
    let (n1, n2) = (dims[0], dims[1]);
    if 1 < n1 && n1 < n2 {
        n1 + 3
    } else {
        n2 + 2
    }
}

pub fn check_segre_iff(l: &WeightVector) -> RuleResult {
    let (s, dims) = segre_pattern(l)?;
    let bound = segre_bound(&dims);
    let (n1, n2) = (dims[0], dims[1]);
    let range = if 1 < n1 && n1 < n2 { "1<n1<n2" } else if n1 == 1 { "n1=1" } else { "n1=n2" };
    if s <= bound {
        let branch = format!("{range}, s<={bound}");
        Some((Status::Feasible, Certificate::SegreIff { s, dims, branch }))
    } else {
        let branch = format!("{range}, s>{bound}");
        Some((Status::NonFeasible, Certificate::SegreIff { s, dims, branch }))
    }
}

/// Tables for homogeneous weight vectors: l spaces of one dimension, or one space of each
/// dimension.
pub fn check_homogeneous(l: &WeightVector) -> RuleResult {
    let n = l.n();
    if n < 3 {
        return None;
    }
    let c = l.counts();
    if c.iter().all(|&x| x == 1) {
        let (status, branch) = match n {
            0..=5 => (Status::Feasible, "n<=5"),
            6 | 7 => (Status::Unknown, "open"),
            _ => (Status::NonFeasible, "n>=8"),
        };
        return Some((status, Certificate::OneEachTable { n, branch: branch.into() }));
    }
    let nonzero: Vec<usize> = (0..c.len()).filter(|&i| c[i] > 0).collect();
    let [i] = nonzero[..] else {
        return None;
    };
    let count = c[i];
    if i == 1 {
        let half = n / 2;
        let (status, branch) = if n == 3 {
            if count <= 6 { (Status::Feasible, "n=3, l<=6") } else { (Status::NonFeasible, "n=3, l>=7") }
        } else if count <= half + 2 {
            (Status::Feasible, "l<=n/2+2")
        } else if n == 5 {
            if count >= 6 { (Status::NonFeasible, "n=5, l>=6") } else { (Status::Unknown, "open") }
        } else if n == 7 {
            if count >= 7 { (Status::NonFeasible, "n=7, l>=7") } else { (Status::Unknown, "open") }
        } else {
            (Status::NonFeasible, "l>=n/2+3")
        };
        return Some((status, Certificate::LinesTable { n, l: count, branch: branch.into() }));
    }
    if n > i * i + 5 * i + 1 {
        let bound = (n + 3) / (i + 1);
        let ceil = (n + 3).div_ceil(i + 1);
        if count <= bound {
            let cert = Certificate::HomogeneousFormula { i, l: count, bound, branch: "l<=(n+3)/(i+1)".into() };
            return Some((Status::Feasible, cert));
        }
        if count > ceil {
            let cert =
                Certificate::HomogeneousFormula { i, l: count, bound: ceil, branch: "l>ceil((n+3)/(i+1))".into() };
            return Some((Status::NonFeasible, cert));
        }
    }
    None
}

/// Three lines and two codimension-three spaces in P^n, n >= 5.
pub fn check_known_tables(l: &WeightVector) -> RuleResult {
    let n = l.n();
    if n < 5 {
        return None;
    }
    let mut want = vec![0; n - 1];
    want[1] += 3;
    want[n - 3] += 2;
    (l.counts() == want.as_slice()).then(|| {
        (Status::NonFeasible, Certificate::KnownNonFeasibleTable { name: "three-lines-two-codim-three".into() })
    })
}

/// Removes the last component of dimension k.
fn drop_component(cfg: &Configuration, k: usize) -> Option<(usize, Configuration)> {
    let idx = cfg.components().iter().rposition(|c| c.dim() == k)?;
    let mut comps = cfg.components().to_vec();
    comps.remove(idx);
    Some((idx, Configuration::new(cfg.n(), comps).expect("subconfiguration")))
}

fn hf(cfg: &Configuration, d: usize, seed: u64, backend: RankBackend) -> usize {
    ideal_dimension_with(cfg, d, &HilbertOptions { backend, normalize: true, seed }).rank
}

/// Bezout obstruction: a degree-d hypersurface containing Λ' but not the component Γ of
/// dimension k meets the curve in more than dn points when Σ (i+1) l_i - 1 > dn.
///
/// The search uses ranks modulo a prime, which never exceed the rational ranks; a hit is
/// recomputed exactly before it is reported.
pub fn check_bezout(l: &WeightVector, d_max: usize, seed: u64) -> Result<RuleResult> {
    let n = l.n();
    let incidence = l.incidence_sum();
    if incidence == 0 {
        return Ok(None);
    }
    let dims_present: Vec<usize> = (0..l.counts().len()).filter(|&i| l.count(i) > 0).collect();
    let seeds = sample_seeds(seed, &format!("bezout/{l}"));
    let mut samples: Option<Vec<Configuration>> = None;
    for d in 1..=d_max {
        if incidence - 1 <= d * n {
            continue;
        }
        let total = binomial(n + d, d);
        let mut full: Vec<Option<usize>> = vec![None; seeds.len()];
        for &k in &dims_present {
            let binom = binomial(d + k, k);
            if binom > total {
                continue;
            }
            if samples.is_none() {
                samples = Some(
                    seeds
                        .iter()
                        .map(|&s| sample_configuration(l, &mut Rng::new(s)))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            let cfgs = samples.as_ref().expect("sampled");
            let mut candidate = true;
            for (j, (cfg, &s)) in cfgs.iter().zip(&seeds).enumerate() {
                let (_, sub) = drop_component(cfg, k).expect("dimension present");
                let h_sub = hf(&sub, d, s, RankBackend::Modular);
                if h_sub + binom > total {
                    candidate = false;
                    break;
                }
                let h = *full[j].get_or_insert_with(|| hf(cfg, d, s, RankBackend::Modular));
                if h != h_sub + binom {
                    candidate = false;
                    break;
                }
            }
            if !candidate {
                continue;
            }
            let values: Vec<(usize, usize, usize)> = cfgs
                .iter()
                .zip(&seeds)
                .map(|(cfg, &s)| {
                    let (idx, sub) = drop_component(cfg, k).expect("dimension present");
                    (idx, hf(cfg, d, s, RankBackend::Exact), hf(&sub, d, s, RankBackend::Exact))
                })
                .collect();
            if values.iter().all(|&(_, h, h_sub)| h == h_sub + binom) {
                return Ok(Some((
                    Status::NonFeasible,
                    Certificate::BezoutWitness {
                        d,
                        k,
                        gamma_index: values[0].0,
                        h_lambda: values.iter().map(|v| v.1).collect(),
                        h_lambda_prime: values.iter().map(|v| v.2).collect(),
                        binomial: binom,
                        incidence: incidence - 1,
                        dn: d * n,
                        seeds: seeds.clone(),
                        generic_sample: true,
                    },
                )));
            }
        }
    }
    Ok(None)
}

/// Weight vectors obtained by projecting from the span of a sub-multiset of components.
///
/// Returns (center counts, child). Components of dimension larger than n' - 2 are dropped.
pub fn projection_children(l: &WeightVector) -> Vec<(Vec<usize>, WeightVector)> {
    let n = l.n();
    let counts = l.counts();
    let mut out = Vec::new();
    let mut center = vec![0usize; counts.len()];
    fn rec(
        i: usize,
        t: usize,
        n: usize,
        counts: &[usize],
        center: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, WeightVector)>,
    ) {
        if i == counts.len() {
            if t == 0 || t + 2 > n {
                return;
            }
            let n2 = n - t;
            let child: Vec<usize> = (0..n2 - 1).map(|j| counts[j] - center[j]).collect();
            out.push((center.clone(), WeightVector::new(n2, child).expect("n' >= 2")));
            return;
        }
        for c in 0..=counts[i] {
            let t2 = t + c * (i + 1);
            if t2 + 1 > n {
                break;
            }
            center[i] = c;
            rec(i + 1, t2, n, counts, center, out);
        }
        center[i] = 0;
    }
    rec(0, 0, n, counts, &mut center, &mut out);
    out
}
