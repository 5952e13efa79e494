use super::binary_form::{gcd, BinaryForm, ParamPoint};
use crate::error::{Error, Result};
use crate::exactgeom::linalg::{self, Matrix};
use crate::exactgeom::scalar::{primitive_integer_vector, serde_q, to_scalars};
use crate::exactgeom::{
    derive_seed, is_frame, projectivity_from_frames, standard_frame, LinearSubspace, ProjPoint,
    Projection, Projectivity, Rng, Scalar,
};
use crate::poly::{HomogeneousForm, MonomialBasis};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Parametrized curve in P^n given by n+1 binary forms of a common degree.
///
/// Rational normal curves are the case degree = n with [`is_rnc`] true; projections can
/// produce other degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCurve {
    forms: Vec<BinaryForm>,
}

#[derive(Serialize, Deserialize)]
struct RawCurve {
    ambient_dim: usize,
    #[serde(with = "serde_q::matrix")]
    coefficients: Matrix,
}

impl Serialize for RationalCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawCurve { ambient_dim: self.ambient_dim(), coefficients: self.coefficient_matrix() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalCurve {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawCurve::deserialize(d)?;
        if raw.coefficients.len() != raw.ambient_dim + 1 {
            return Err(D::Error::custom("curve needs ambient_dim + 1 coordinate forms"));
        }
        let forms = raw.coefficients.into_iter().map(BinaryForm::new).collect();
        RationalCurve::new(forms).map_err(D::Error::custom)
    }
}

impl RationalCurve {
    /// Requires at least two forms of one degree, not all zero.
    pub fn new(forms: Vec<BinaryForm>) -> Result<Self> {
        if forms.len() < 2 {
            return Err(Error::InvalidInput("a curve needs at least two coordinate forms".into()));
        }
        let d = forms[0].degree();
        if let Some(f) = forms.iter().find(|f| f.degree() != d) {
            return Err(Error::DimensionMismatch { expected: d, got: f.degree() });
        }
        if forms.iter().all(BinaryForm::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(RationalCurve { forms })
    }

    pub fn ambient_dim(&self) -> usize {
        self.forms.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.forms[0].degree()
    }

    pub fn forms(&self) -> &[BinaryForm] {
        &self.forms
    }

    /// Row i holds the coefficients of the i-th coordinate form.
    pub fn coefficient_matrix(&self) -> Matrix {
        self.forms.iter().map(|f| f.coeffs().to_vec()).collect()
    }

    /// The same curve rescaled to integer coefficients with content 1.
    pub fn primitive(&self) -> RationalCurve {
        let d = self.degree() + 1;
        let flat: Vec<Scalar> = self.forms.iter().flat_map(|f| f.coeffs().iter().cloned()).collect();
        let ints = to_scalars(&primitive_integer_vector(&flat));
        RationalCurve { forms: ints.chunks(d).map(|c| BinaryForm::new(c.to_vec())).collect() }
    }

    /// Image of a parameter; `None` at a base point of the forms.
    pub fn try_evaluate(&self, a: &ParamPoint) -> Option<ProjPoint> {
        ProjPoint::new(self.forms.iter().map(|f| f.evaluate(a)).collect()).ok()
    }
}

/// The monomial curve (s^n, s^(n-1) t, ..., t^n).
pub fn standard_rnc(n: usize) -> RationalCurve {
    assert!(n >= 1);
    RationalCurve { forms: (0..=n).map(|i| BinaryForm::monomial(n, i)).collect() }
}

pub fn evaluate(c: &RationalCurve, a: &ParamPoint) -> ProjPoint {
    c.try_evaluate(a).expect("forms without common root do not vanish together")
}

pub fn is_rnc(c: &RationalCurve) -> bool {
    let n = c.ambient_dim();
    c.degree() == n
        && gcd(c.forms()).map(|g| g.degree() == 0).unwrap_or(false)
        && linalg::rank(&c.coefficient_matrix()) == n + 1
}

/// Substitutes the curve into each linear form.
fn substitute_linear(c: &RationalCurve, eqs: &[Vec<Scalar>]) -> Vec<BinaryForm> {
    eqs.iter().map(|l| BinaryForm::combination(l, c.forms())).collect()
}

/// Degree of the scheme-theoretic intersection of the curve with a linear subspace.
pub fn intersection_degree(c: &RationalCurve, l: &LinearSubspace) -> Result<usize> {
    if l.ambient_dim() != c.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: c.ambient_dim(), got: l.ambient_dim() });
    }
    let subs = substitute_linear(c, &l.equations());
    if subs.iter().all(BinaryForm::is_zero) {
        return Err(Error::CurveInSubspaceSpan);
    }
    Ok(gcd(&subs)?.degree())
}

/// The form F(c(s,t)), of degree deg(F) * deg(c).
pub fn restrict_form(f: &HomogeneousForm, c: &RationalCurve) -> BinaryForm {
    assert_eq!(f.nvars(), c.ambient_dim() + 1, "form and curve live in different spaces");
    let d = f.degree();
    let powers: Vec<Vec<BinaryForm>> = c
        .forms()
        .iter()
        .map(|x| {
            let mut p = vec![BinaryForm::constant(Scalar::one())];
            for k in 0..d {
                let next = p[k].mul(x);
                p.push(next);
            }
            p
        })
        .collect();
    let basis = MonomialBasis::new(f.nvars(), d);
    let mut out = BinaryForm::zero(d * c.degree());
    for (e, coef) in basis.exponents().iter().zip(f.coeffs()) {
        if coef.is_zero() {
            continue;
        }
        let mut term = BinaryForm::constant(coef.clone());
        for (j, &k) in e.iter().enumerate() {
            if k > 0 {
                term = term.mul(&powers[j][k as usize]);
            }
        }
        out = out.add(&term);
    }
    out
}

/// Checks that the curve is an rnc meeting each space in degree dim + 1.
pub fn check_maximal_intersection(c: &RationalCurve, spaces: &[LinearSubspace]) -> Result<()> {
    if !is_rnc(c) {
        return Err(Error::VerificationFailed("not a rational normal curve".into()));
    }
    for (i, l) in spaces.iter().enumerate() {
        let want = (l.dim() + 1) as usize;
        match intersection_degree(c, l) {
            Ok(d) if d == want => {}
            Ok(d) => {
                return Err(Error::VerificationFailed(format!(
                    "component {i} of dimension {} meets the curve in degree {d}, expected {want}",
                    l.dim()
                )))
            }
            Err(e) => return Err(Error::VerificationFailed(format!("component {i}: {e}"))),
        }
    }
    Ok(())
}

pub fn apply_projectivity(c: &RationalCurve, g: &Projectivity) -> RationalCurve {
    assert_eq!(g.ambient_dim(), c.ambient_dim());
    RationalCurve { forms: substitute_linear(c, g.matrix()) }
}

/// Composition of the curve with the projection from `center`.
///
/// A common factor of the projected forms marks parameters mapped into the center. It is
/// divided out, unless `strict` is set, in which case it is reported.
pub fn project_curve(c: &RationalCurve, center: &LinearSubspace, strict: bool) -> Result<RationalCurve> {
    if center.ambient_dim() != c.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: c.ambient_dim(), got: center.ambient_dim() });
    }
    let pr = Projection::new(center.clone());
    if pr.complement().len() < 2 {
        return Err(Error::InvalidInput("projection target has dimension < 1".into()));
    }
    let forms = substitute_linear(c, &pr.matrix());
    if forms.iter().all(BinaryForm::is_zero) {
        return Err(Error::CurveInSubspaceSpan);
    }
    let g = gcd(&forms)?;
    if g.degree() == 0 {
        return RationalCurve::new(forms);
    }
    if strict {
        return Err(Error::CenterMeetsCurve { degree: g.degree() });
    }
    let reduced = forms.iter().map(|f| f.divide(&g).expect("gcd divides")).collect();
    RationalCurve::new(reduced)
}

fn check_distinct(a: &[ParamPoint]) -> Result<()> {
    for i in 0..a.len() {
        for j in 0..i {
            if a[i] == a[j] {
                return Err(Error::DuplicateParameters);
            }
        }
    }
    Ok(())
}

/// True when every subset of at most n+1 of the points is independent.
fn in_general_position(q: &[ProjPoint]) -> bool {
    let n = q[0].ambient_dim();
    if q.len() <= n + 1 {
        let m: Matrix = q.iter().map(|p| p.coords().to_vec()).collect();
        linalg::rank(&m) == q.len()
    } else if q.len() == n + 2 {
        is_frame(q)
    } else {
        false
    }
}

fn input_seed(a: &[ParamPoint], q: &[ProjPoint]) -> u64 {
    let mut h = Sha256::new();
    h.update(serde_json::to_vec(&(a, q)).expect("points serialize"));
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().unwrap())
}

const PADDING_ATTEMPTS: usize = 16;

/// Curve of degree t in P^t with ψ(A_i) = Q_i, for m ≤ t+2 pairs.
///
/// Returns the curve and the projectivity that moves the (padded) points Q onto the
/// standard frame. Missing pairs are filled in with data derived from a hash of the input.
pub fn rnc_with_assigned_preimages(
    a: &[ParamPoint],
    q: &[ProjPoint],
) -> Result<(RationalCurve, Projectivity)> {
    if a.len() != q.len() || q.is_empty() {
        return Err(Error::InvalidInput("need equally many parameters and points".into()));
    }
    let t = q[0].ambient_dim();
    if q.iter().any(|p| p.ambient_dim() != t) {
        return Err(Error::InvalidInput("points in different spaces".into()));
    }
    if a.iter().any(|p| p.ambient_dim() != 1) {
        return Err(Error::InvalidInput("parameters must lie on P^1".into()));
    }
    if q.len() > t + 2 {
        return Err(Error::InvalidInput(format!("at most {} points in P^{t}", t + 2)));
    }
    check_distinct(a)?;
    if !in_general_position(q) {
        return Err(Error::FrameDegenerate);
    }
    let m = q.len();
    let mut rng = Rng::new(derive_seed(input_seed(a, q), "rnc-padding"));
    for _ in 0..PADDING_ATTEMPTS {
        let mut aa = a.to_vec();
        let mut qq = q.to_vec();
        while aa.len() < t + 2 {
            aa.push(ProjPoint::new(rng.nonzero_vector(2))?);
            qq.push(ProjPoint::new(rng.nonzero_vector(t + 1))?);
        }
        if m < t + 2 && (check_distinct(&aa).is_err() || !is_frame(&qq)) {
            continue;
        }
        let g = projectivity_from_frames(&qq, &standard_frame(t))?;
        let lin: Vec<BinaryForm> = aa[..=t].iter().map(BinaryForm::vanishing_at).collect();
        let last = &aa[t + 1];
        let forms: Vec<BinaryForm> = (0..=t)
            .map(|i| {
                let mut f = BinaryForm::constant(lin[i].evaluate(last));
                for (j, l) in lin.iter().enumerate() {
                    if j != i {
                        f = f.mul(l);
                    }
                }
                f
            })
            .collect();
        let normalized = RationalCurve::new(forms)?;
        let curve = apply_projectivity(&normalized, &g.inverse());
        return Ok((curve, g));
    }
    Err(Error::GenericityExhausted { attempts: PADDING_ATTEMPTS, what: "padding points".into() })
}

/// Curve of degree n through n+3 points of P^n, with the parameter of each point.
///
/// With D_i and E_i the Cramer numerators of q_(n+1) and q_(n+2) in the basis q_0..q_n, the
/// curve is Σ_i D_i E_i q_i Π_(j≠i) (E_j s - D_j t). It sends [D_i : E_i] to q_i, [1 : 0] to
/// q_(n+1) and [0 : 1] to q_(n+2).
pub fn rnc_through_points(q: &[ProjPoint]) -> Result<(RationalCurve, Vec<ParamPoint>)> {
    let n = q.first().ok_or(Error::FrameDegenerate)?.ambient_dim();
    if q.len() != n + 3 || q.iter().any(|p| p.ambient_dim() != n) {
        return Err(Error::InvalidInput(format!("need {} points of P^{n}", n + 3)));
    }
    let pts: Vec<Vec<BigInt>> = q.iter().map(|p| primitive_integer_vector(p.coords())).collect();
    let cramer = |rhs: &[BigInt]| -> Vec<BigInt> {
        (0..=n)
            .map(|i| {
                let cols: Vec<&[BigInt]> = (0..=n).map(|j| if j == i { rhs } else { &pts[j][..] }).collect();
                let m: Vec<Vec<BigInt>> = (0..=n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
                linalg::integer_det(&m)
            })
            .collect()
    };
    let basis: Vec<Vec<BigInt>> = (0..=n).map(|r| (0..=n).map(|j| pts[j][r].clone()).collect()).collect();
    if linalg::integer_det(&basis).is_zero() {
        return Err(Error::FrameDegenerate);
    }
    let d = cramer(&pts[n + 1]);
    if d.iter().any(Zero::is_zero) {
        return Err(Error::FrameDegenerate);
    }
    let e = cramer(&pts[n + 2]);
    if e.iter().any(Zero::is_zero) {
        return Err(Error::CoincidentParameters);
    }
    for i in 0..=n {
        for j in 0..i {
            if &d[i] * &e[j] == &d[j] * &e[i] {
                return Err(Error::CoincidentParameters);
            }
        }
    }
    let mut coeffs = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        let mut prod = vec![&d[i] * &e[i]];
        for j in (0..=n).filter(|&j| j != i) {
            let mut next = vec![BigInt::zero(); prod.len() + 1];
            for (k, c) in prod.iter().enumerate() {
                next[k] += c * &e[j];
                next[k + 1] -= c * &d[j];
            }
            prod = next;
        }
        for (row, x) in coeffs.iter_mut().zip(&pts[i]) {
            for (o, c) in row.iter_mut().zip(&prod) {
                *o += x * c;
            }
        }
    }
    let forms = coeffs.iter().map(|row| BinaryForm::new(to_scalars(row))).collect();
    let curve = RationalCurve::new(forms)?.primitive();
    let mut pre: Vec<ParamPoint> = d
        .into_iter()
        .zip(e)
        .map(|(di, ei)| ProjPoint::new(vec![Scalar::from_integer(di), Scalar::from_integer(ei)]))
        .collect::<Result<_>>()?;
    pre.push(ProjPoint::coordinate(1, 0));
    pre.push(ProjPoint::coordinate(1, 1));
    Ok((curve, pre))
}
