use super::certificate::Certificate;
use super::rules::segre_bound;
use crate::arrangements::{
    sample_configuration, sample_shape, weight_of, Component, ComponentShape, Configuration,
    WeightVector,
};
use crate::error::{Error, Result};
use crate::exactgeom::{derive_seed, LinearSubspace, ProjPoint, Rng};
use crate::rnc::{intersection_degree, is_rnc, rnc_through_points, RationalCurve};
use crate::segre::witness_curve;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// A curve together with the configuration it meets maximally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub weight: WeightVector,
    pub configuration: Configuration,
    pub curve: RationalCurve,
    pub method: String,
    pub seed: u64,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCheck {
    pub index: usize,
    pub dim: usize,
    pub expected: usize,
    pub got: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub ok: bool,
    pub is_rnc: bool,
    pub components: Vec<ComponentCheck>,
}

/// Checks that the curve is a rational normal curve of the right ambient dimension meeting
/// every component of dimension i in a scheme of length i + 1.
pub fn verify_witness(curve: &RationalCurve, config: &Configuration) -> Result<WitnessReport> {
    if config.components().iter().any(|c| c.mult > 1) {
        return Err(Error::FatComponentPresent);
    }
    if curve.ambient_dim() != config.n() {
        return Err(Error::DimensionMismatch { expected: config.n(), got: curve.ambient_dim() });
    }
    let rnc = is_rnc(curve);
    let components: Vec<ComponentCheck> = config
        .components()
        .iter()
        .enumerate()
        .map(|(index, c)| ComponentCheck {
            index,
            dim: c.dim(),
            expected: c.dim() + 1,
            got: if rnc { intersection_degree(curve, &c.space).ok() } else { None },
        })
        .collect();
    let ok = rnc && components.iter().all(|c| c.got == Some(c.expected));
    Ok(WitnessReport { ok, is_rnc: rnc, components })
}

const ATTEMPTS: usize = 16;

fn finish(weight: &WeightVector, config: Configuration, curve: RationalCurve, method: &str, seed: u64) -> Result<Option<Witness>> {
    if !verify_witness(&curve, &config)?.ok {
        return Ok(None);
    }
    let digest = hex::encode(Sha256::digest(serde_json::to_vec(&curve).expect("curves serialize")));
    let certificate = Certificate::WitnessVerified { digest, seed, method: method.into() };
    Ok(Some(Witness { weight: weight.clone(), configuration: config, curve, method: method.into(), seed, certificate }))
}

/// Curve through i + 1 points on each component, padded to n + 3 points.
fn by_counting(l: &WeightVector, seed: u64, rng: &mut Rng) -> Result<Option<Witness>> {
    let n = l.n();
    for _ in 0..ATTEMPTS {
        let cfg = sample_configuration(l, rng)?;
        let mut pts = Vec::with_capacity(n + 3);
        for c in cfg.components() {
            for _ in 0..=c.dim() {
                pts.push(c.space.random_point(rng)?);
            }
        }
        while pts.len() < n + 3 {
            pts.push(ProjPoint::new(rng.nonzero_vector(n + 1))?);
        }
        let curve = match rnc_through_points(&pts) {
            Ok((c, _)) => c,
            Err(Error::FrameDegenerate | Error::CoincidentParameters) => continue,
            Err(e) => return Err(e),
        };
        if let Some(w) = finish(l, cfg, curve, "counting", seed)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Block choices: counts c with Σ c_i (i+1) = n and at least two blocks.
fn block_choices(l: &WeightVector) -> Vec<Vec<usize>> {
    fn rec(i: usize, left: usize, counts: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == counts.len() {
            if left == 0 && cur.iter().sum::<usize>() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for c in (0..=counts[i].min(left / (i + 1))).rev() {
            cur[i] = c;
            rec(i + 1, left - c * (i + 1), counts, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, l.n(), l.counts(), &mut vec![0; l.counts().len()], &mut out);
    out
}

/// Segre construction: generic blocks spanning a hyperplane, and the remaining components
/// spanned by groups of the generic points the curve is forced through. Spans of generic
/// points are generic, so the whole configuration is.
fn by_segre(l: &WeightVector, seed: u64, rng: &mut Rng) -> Result<Option<Witness>> {
    let n = l.n();
    let mut applicable = false;
    for blocks in block_choices(l) {
        let rest: Vec<usize> = l.counts().iter().zip(&blocks).map(|(a, b)| a - b).collect();
        let s: usize = rest.iter().enumerate().map(|(i, &c)| (i + 1) * c).sum();
        let mut sizes: Vec<usize> =
            blocks.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c)).collect();
        sizes.sort_unstable();
        if s > segre_bound(&sizes) {
            continue;
        }
        applicable = true;
        let shape: Vec<ComponentShape> = sizes.iter().map(|&k| ComponentShape { dim: k - 1, mult: 1 }).collect();
        for _ in 0..ATTEMPTS {
            let block_cfg = sample_shape(n, &shape, rng)?;
            let points: Vec<ProjPoint> =
                (0..s).map(|_| ProjPoint::new(rng.nonzero_vector(n + 1))).collect::<Result<_>>()?;
            let curve = match witness_curve(&block_cfg.spaces(), &points, rng) {
                Ok(c) => c,
                Err(
                    Error::VerificationFailed(_)
                    | Error::GenericityExhausted { .. }
                    | Error::FrameDegenerate
                    | Error::CommonRootOfLeadForms(..)
                    | Error::DegenerateImage
                    | Error::DuplicateParameters,
                ) => continue,
                Err(e) => return Err(e),
            };
            let mut comps: Vec<Component> = block_cfg.components().to_vec();
            let mut next = 0;
            for (i, &c) in rest.iter().enumerate() {
                for _ in 0..c {
                    let rows = points[next..next + i + 1].iter().map(|p| p.coords().to_vec()).collect();
                    comps.push(Component::reduced(LinearSubspace::from_rows(n, rows)?));
                    next += i + 1;
                }
            }
            let mut cfg = Configuration::new(n, comps)?;
            if weight_of(&cfg)? != *l {
                continue;
            }
            cfg = sort_components(cfg);
            if let Some(w) = finish(l, cfg, curve, "segre", seed)? {
                return Ok(Some(w));
            }
        }
    }
    if applicable {
        Err(Error::VerificationFailed(format!("no sampled Segre construction for {l} verified")))
    } else {
        Ok(None)
    }
}

fn sort_components(cfg: Configuration) -> Configuration {
    let mut comps = cfg.components().to_vec();
    comps.sort_by_key(Component::dim);
    Configuration::new(cfg.n(), comps).expect("same components")
}

/// Builds and verifies a curve meeting a configuration of weight `l` maximally.
///
/// Uses a curve through points on the components when Σ (i+1) l_i ≤ n + 3, and a Segre
/// construction otherwise.
pub fn build_witness(l: &WeightVector, seed: u64) -> Result<Witness> {
    let mut rng = Rng::new(derive_seed(seed, &format!("witness/{l}")));
    if l.incidence_sum() <= l.n() + 3 {
        if let Some(w) = by_counting(l, seed, &mut rng)? {
            return Ok(w);
        }
        return Err(Error::VerificationFailed(format!("no sampled curve through points for {l} verified")));
    }
    if let Some(w) = by_segre(l, seed, &mut rng)? {
        return Ok(w);
    }
    Err(Error::NoConstructivePath(format!("{l} in P^{}", l.n())))
}
