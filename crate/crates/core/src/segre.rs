//! The birational map from a product of projective spaces to P^n that contracts the
//! hyperplane sections x_0^(i) = 0 onto complementary coordinate spaces, and the
//! construction of rational normal curves meeting such spaces maximally.

use crate::error::{Error, Result};
use crate::exactgeom::{adapted_alignment, coordinate_blocks, LinearSubspace, ProjPoint, Rng, Scalar};
use crate::rnc::{
    apply_projectivity, check_maximal_intersection, gcd2, is_rnc, rnc_through_points,
    rnc_with_assigned_preimages, standard_rnc, BinaryForm, ParamPoint, RationalCurve,
};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Factor dimensions n_1 <= ... <= n_r of P^{n_1} x ... x P^{n_r}, r >= 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegreContext {
    factor_dims: Vec<usize>,
}

impl SegreContext {
    pub fn new(factor_dims: Vec<usize>) -> Result<Self> {
        if factor_dims.len() < 2 {
            return Err(Error::InvalidInput("need at least two factors".into()));
        }
        if factor_dims.contains(&0) {
            return Err(Error::InvalidInput("factor dimensions must be positive".into()));
        }
        if factor_dims.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput("factor dimensions must be sorted".into()));
        }
        Ok(SegreContext { factor_dims })
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    pub fn r(&self) -> usize {
        self.factor_dims.len()
    }

    /// Target dimension n = Σ n_i.
    pub fn n(&self) -> usize {
        self.factor_dims.iter().sum()
    }

    /// Dimension N = Π(n_i + 1) - 1 of the Segre embedding.
    pub fn segre_dim(&self) -> usize {
        self.factor_dims.iter().map(|d| d + 1).product::<usize>() - 1
    }

    /// First target coordinate of block i.
    fn offset(&self, i: usize) -> usize {
        1 + self.factor_dims[..i].iter().sum::<usize>()
    }

    /// Largest number of generic points through which a product curve exists.
    pub fn point_bound(&self) -> usize {
        let (n1, n2) = (self.factor_dims[0], self.factor_dims[1]);
        if n1 > 1 && n1 < n2 {
            n1 + 3
        } else {
            n2 + 2
        }
    }
}

/// A point Q_1 x ... x Q_r of the product.
pub type MultiPoint = Vec<ProjPoint>;

/// One parametrization per factor, factor i of degree n_i.
pub type MultiCurve = Vec<RationalCurve>;

fn check_multipoint(ctx: &SegreContext, q: &[ProjPoint]) -> Result<()> {
    if q.len() != ctx.r() {
        return Err(Error::DimensionMismatch { expected: ctx.r(), got: q.len() });
    }
    for (p, &d) in q.iter().zip(ctx.factor_dims()) {
        if p.ambient_dim() != d {
            return Err(Error::DimensionMismatch { expected: d, got: p.ambient_dim() });
        }
    }
    Ok(())
}

/// The products of coordinates defining φ_T: y_0 = Π x_0^(j) and, for block i,
/// x_k^(i) Π_{j≠i} x_0^(j).
pub fn phi_t(ctx: &SegreContext, q: &[ProjPoint]) -> Result<ProjPoint> {
    check_multipoint(ctx, q)?;
    let heads: Vec<&Scalar> = q.iter().map(|p| &p.coords()[0]).collect();
    if heads.iter().filter(|h| h.is_zero()).count() >= 2 {
        return Err(Error::BaseLocus);
    }
    let mut y = vec![heads.iter().fold(Scalar::one(), |acc, h| acc * *h)];
    for (i, p) in q.iter().enumerate() {
        let others = heads
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Scalar::one(), |acc, (_, h)| acc * *h);
        y.extend(p.coords()[1..].iter().map(|x| x * &others));
    }
    ProjPoint::new(y)
}

/// Inverse of φ_T on the chart y_0 ≠ 0.
pub fn phi_t_inverse(ctx: &SegreContext, y: &ProjPoint) -> Result<MultiPoint> {
    if y.ambient_dim() != ctx.n() {
        return Err(Error::DimensionMismatch { expected: ctx.n(), got: y.ambient_dim() });
    }
    let c = y.coords();
    if c[0].is_zero() {
        return Err(Error::OnContractedLocus);
    }
    let inv = c[0].recip();
    (0..ctx.r())
        .map(|i| {
            let off = ctx.offset(i);
            let mut v = vec![Scalar::one()];
            v.extend(c[off..off + ctx.factor_dims[i]].iter().map(|x| x * &inv));
            ProjPoint::new(v)
        })
        .collect()
}

/// The spaces Λ_i onto which φ_T contracts {x_0^(i) = 0}.
pub fn canonical_contracted_spaces(ctx: &SegreContext) -> Vec<LinearSubspace> {
    coordinate_blocks(ctx.factor_dims())
}

/// Product curve through s multipoints.
///
/// Factor 1 goes through the first-factor points: it is the identity when n_1 = 1, the
/// curve through n_1+3 points when s = n_1+3, and otherwise the curve with parameters
/// `a` (default [1 : i-1]). The other factors take the same parameters. Returns the
/// factor curves and the parameters of the points.
pub fn product_curve(
    ctx: &SegreContext,
    a: Option<&[ParamPoint]>,
    q: &[MultiPoint],
) -> Result<(MultiCurve, Vec<ParamPoint>)> {
    let s = q.len();
    if s == 0 {
        return Err(Error::InvalidInput("product curve needs at least one point".into()));
    }
    if s > ctx.point_bound() {
        return Err(Error::BoundViolated { s, dims: ctx.factor_dims.clone() });
    }
    for p in q {
        check_multipoint(ctx, p)?;
    }
    if a.is_some_and(|a| a.len() != s) {
        return Err(Error::InvalidInput("one parameter per point".into()));
    }
    let first: Vec<ProjPoint> = q.iter().map(|p| p[0].clone()).collect();
    let n1 = ctx.factor_dims[0];
    let (psi1, params) = if n1 == 1 {
        (standard_rnc(1), first)
    } else if s == n1 + 3 {
        rnc_through_points(&first)?
    } else {
        let params: Vec<ParamPoint> = match a {
            Some(a) => a.to_vec(),
            None => (0..s).map(|i| crate::rnc::param(1, i as i64 - 1)).collect(),
        };
        (rnc_with_assigned_preimages(&params, &first)?.0, params)
    };
    let mut curves = vec![psi1];
    for j in 1..ctx.r() {
        let qj: Vec<ProjPoint> = q.iter().map(|p| p[j].clone()).collect();
        curves.push(rnc_with_assigned_preimages(&params, &qj)?.0);
    }
    Ok((curves, params))
}

/// The curve φ_T(ψ_1 x ... x ψ_r) given by the n+1 product forms.
pub fn compose_phi(ctx: &SegreContext, mc: &[RationalCurve]) -> Result<RationalCurve> {
    if mc.len() != ctx.r() {
        return Err(Error::DimensionMismatch { expected: ctx.r(), got: mc.len() });
    }
    for (c, &d) in mc.iter().zip(ctx.factor_dims()) {
        if c.ambient_dim() != d || c.degree() != d {
            return Err(Error::DimensionMismatch { expected: d, got: c.degree() });
        }
    }
    let heads: Vec<&BinaryForm> = mc.iter().map(|c| &c.forms()[0]).collect();
    for i in 0..heads.len() {
        for j in i + 1..heads.len() {
            if heads[i].is_zero() || heads[j].is_zero() || gcd2(heads[i], heads[j])?.degree() > 0 {
                return Err(Error::CommonRootOfLeadForms(i, j));
            }
        }
    }
    let one = BinaryForm::constant(Scalar::one());
    let mut forms = vec![heads.iter().fold(one.clone(), |acc, h| acc.mul(h))];
    for (i, c) in mc.iter().enumerate() {
        let others = heads
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(one.clone(), |acc, (_, h)| acc.mul(h));
        forms.extend(c.forms()[1..].iter().map(|f| f.mul(&others)));
    }
    let curve = RationalCurve::new(forms)?;
    if !is_rnc(&curve) {
        return Err(Error::DegenerateImage);
    }
    Ok(curve)
}

const WITNESS_ATTEMPTS: usize = 16;

/// Rational normal curve through `points` meeting each of `spaces` maximally.
///
/// The spaces must be disjoint and span a hyperplane; their dimensions n_i - 1 are taken in
/// any order. Fails with `BoundViolated` when there are too many points for the block sizes.
pub fn witness_curve(spaces: &[LinearSubspace], points: &[ProjPoint], rng: &mut Rng) -> Result<RationalCurve> {
    let mut order: Vec<usize> = (0..spaces.len()).collect();
    order.sort_by_key(|&i| spaces[i].dim());
    let sorted: Vec<LinearSubspace> = order.iter().map(|&i| spaces[i].clone()).collect();
    let dims: Vec<usize> = sorted.iter().map(|s| (s.dim() + 1).max(0) as usize).collect();
    let ctx = SegreContext::new(dims)?;
    if points.len() > ctx.point_bound() {
        return Err(Error::BoundViolated { s: points.len(), dims: ctx.factor_dims.clone() });
    }
    let g = adapted_alignment(&sorted)?;
    let n = ctx.n();
    let mut pts = points.to_vec();
    if pts.is_empty() {
        pts.push(ProjPoint::new(rng.nonzero_vector(n + 1))?);
    }
    let pulled: Vec<MultiPoint> = pts
        .iter()
        .map(|p| phi_t_inverse(&ctx, &g.apply_point(p)))
        .collect::<Result<_>>()?;
    let mut last_err = None;
    for attempt in 0..WITNESS_ATTEMPTS {
        let params: Option<Vec<ParamPoint>> = (attempt > 0).then(|| {
            (0..pulled.len())
                .map(|_| ProjPoint::new(rng.nonzero_vector(2)).expect("nonzero"))
                .collect()
        });
        let built = product_curve(&ctx, params.as_deref(), &pulled)
            .and_then(|(mc, _)| compose_phi(&ctx, &mc));
        let aligned = match built {
            Ok(c) => c,
            Err(e @ (Error::CommonRootOfLeadForms(..) | Error::DegenerateImage | Error::DuplicateParameters)) => {
                last_err = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        let curve = apply_projectivity(&aligned, &g.inverse());
        let mut comps = spaces.to_vec();
        comps.extend(points.iter().map(LinearSubspace::from_point));
        check_maximal_intersection(&curve, &comps)?;
        return Ok(curve);
    }
    Err(last_err.unwrap_or(Error::GenericityExhausted {
        attempts: WITNESS_ATTEMPTS,
        what: "product curve".into(),
    }))
}
