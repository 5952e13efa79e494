use crate::error::{Error, Result};
use crate::exactgeom::scalar::{make_primitive, primitive_integer_vector, serde_q, to_scalars};
use crate::exactgeom::{ProjPoint, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// A point of P^1, written [s : t].
pub type ParamPoint = ProjPoint;

pub fn param(s: i64, t: i64) -> ParamPoint {
    ProjPoint::from_ints(&[s, t]).expect("nonzero parameter")
}

pub fn param_q(s: Scalar, t: Scalar) -> Result<ParamPoint> {
    ProjPoint::new(vec![s, t])
}

/// Homogeneous form in (s, t); `coeffs[i]` multiplies s^(d-i) t^i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BinaryForm {
    #[serde(with = "serde_q::vec")]
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a form of degree d has d+1 coefficients");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![Scalar::zero(); degree + 1] }
    }

    pub fn constant(c: Scalar) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// The monomial s^(d-i) t^i.
    pub fn monomial(degree: usize, i: usize) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i] = Scalar::one();
        f
    }

    /// The linear form b*s - a*t vanishing at [a : b].
    pub fn vanishing_at(a: &ParamPoint) -> Self {
        let c = a.coords();
        BinaryForm { coeffs: vec![c[1].clone(), -c[0].clone()] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn evaluate(&self, a: &ParamPoint) -> Scalar {
        self.evaluate_at(&a.coords()[0], &a.coords()[1])
    }

    pub fn evaluate_at(&self, s: &Scalar, t: &Scalar) -> Scalar {
        // (s, t) = lambda (S, T) with coprime integers S, T; the sum runs over a common denominator.
        let st = primitive_integer_vector(&[s.clone(), t.clone()]);
        let (big_s, big_t) = (&st[0], &st[1]);
        if big_s.is_zero() && big_t.is_zero() {
            return Scalar::zero();
        }
        let lambda = if big_s.is_zero() { t / big_t } else { s / big_s };
        let d = self.degree();
        let mut den = BigInt::one();
        for c in &self.coeffs {
            if !c.is_zero() {
                den = den.lcm(c.denom());
            }
        }
        let mut spow = vec![BigInt::one(); d + 1];
        let mut tpow = vec![BigInt::one(); d + 1];
        for i in 1..=d {
            spow[i] = &spow[i - 1] * big_s;
            tpow[i] = &tpow[i - 1] * big_t;
        }
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c.numer() * (&den / c.denom()) * &spow[d - i] * &tpow[i];
            }
        }
        Scalar::new(acc, den) * num_traits::pow(lambda, d)
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), other.degree(), "adding forms of different degrees");
        BinaryForm { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> BinaryForm {
        BinaryForm { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, k: usize) -> BinaryForm {
        let mut acc = BinaryForm::constant(Scalar::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Linear combination Σ c_j f_j of forms of equal degree.
    pub fn combination(coeffs: &[Scalar], forms: &[BinaryForm]) -> BinaryForm {
        let d = forms[0].degree();
        let mut out = vec![Scalar::zero(); d + 1];
        for (c, f) in coeffs.iter().zip(forms) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&f.coeffs) {
                *o += c * x;
            }
        }
        BinaryForm { coeffs: out }
    }

    /// Exponent of t dividing the form, and of s.
    fn t_and_s_orders(&self) -> (usize, usize) {
        let d = self.degree();
        let t_ord = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(d);
        let s_ord = self.coeffs.iter().rev().position(|c| !c.is_zero()).unwrap_or(d);
        (t_ord, s_ord)
    }

    /// Dehomogenization at s = 1: ascending coefficients of a polynomial in t.
    fn chart_t(&self) -> Vec<Scalar> {
        let mut p = self.coeffs.clone();
        trim(&mut p);
        p
    }

    /// Rescales so the first nonzero coefficient is 1.
    pub fn normalized(&self) -> BinaryForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Exact quotient by a nonzero divisor; `None` if the division leaves a remainder.
    pub fn divide(&self, divisor: &BinaryForm) -> Option<BinaryForm> {
        if divisor.is_zero() || divisor.degree() > self.degree() {
            return None;
        }
        if self.is_zero() {
            return Some(BinaryForm::zero(self.degree() - divisor.degree()));
        }
        let (dt, ds) = divisor.t_and_s_orders();
        let (st, ss) = self.t_and_s_orders();
        if st < dt || ss < ds {
            return None;
        }
        let (q, r) = divrem(&self.chart_t(), &divisor.chart_t());
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let qd = self.degree() - divisor.degree();
        let mut coeffs = vec![Scalar::zero(); qd + 1];
        for (i, c) in q.into_iter().enumerate() {
            if i > qd {
                if !c.is_zero() {
                    return None;
                }
                continue;
            }
            coeffs[i] = c;
        }
        Some(BinaryForm { coeffs })
    }
}

fn trim(p: &mut Vec<Scalar>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Division with remainder of ascending-coefficient polynomials; divisor nonzero.
fn divrem(a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Scalar::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &lead_inv;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn trim_int(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Primitive part of the pseudo-remainder of `a` by `b` (ascending coefficients, `b` nonzero).
fn primitive_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().cloned().unwrap_or_default();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &lr * bi;
        }
        r.pop();
        trim_int(&mut r);
        make_primitive(&mut r);
    }
    r
}

/// Gcd over Q of ascending-coefficient polynomials via primitive remainder sequences over Z.
fn poly_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let prim = |p: &[Scalar]| {
        let mut v = primitive_integer_vector(p);
        trim_int(&mut v);
        v
    };
    let mut x = prim(a);
    let mut y = prim(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive_prem(&x, &y);
        x = y;
        y = r;
    }
    to_scalars(&x)
}

/// Greatest common divisor, normalized with first nonzero coefficient 1.
///
/// The zero form acts as a neutral element; the gcd of only zero forms is an error.
pub fn gcd(forms: &[BinaryForm]) -> Result<BinaryForm> {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::InvalidInput("gcd of zero forms".into()));
    }
    let s_ord = nonzero.iter().map(|f| f.t_and_s_orders().1).min().unwrap();
    let mut g = nonzero[0].chart_t();
    for f in &nonzero[1..] {
        if g.len() == 1 {
            break;
        }
        g = poly_gcd(&g, &f.chart_t());
    }
    // g is a polynomial in t of degree e; the form gets s^(s_ord) on top
    let e = g.len() - 1;
    let d = e + s_ord;
    let mut coeffs = vec![Scalar::zero(); d + 1];
    for (i, c) in g.into_iter().enumerate() {
        coeffs[i] = c;
    }
    Ok(BinaryForm { coeffs }.normalized())
}

pub fn gcd2(a: &BinaryForm, b: &BinaryForm) -> Result<BinaryForm> {
    gcd(&[a.clone(), b.clone()])
}
