//! Monomial bases and dense homogeneous forms in several variables.

use crate::exactgeom::Scalar;
use num_traits::Zero;
use std::collections::HashMap;

/// Binomial coefficient C(n, k) as `usize`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All monomials of a fixed degree in `nvars` variables, in descending lexicographic order.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    nvars: usize,
    degree: usize,
    exps: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: usize) -> Self {
        Self::filtered(nvars, degree, |_| true)
    }

    /// Monomials of the given degree satisfying `keep`.
    pub fn filtered(nvars: usize, degree: usize, keep: impl Fn(&[u8]) -> bool) -> Self {
        let mut exps = Vec::new();
        let mut cur = vec![0u8; nvars];
        fn rec(i: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>, keep: &dyn Fn(&[u8]) -> bool) {
            if i + 1 == cur.len() {
                cur[i] = left as u8;
                if keep(cur) {
                    out.push(cur.clone());
                }
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u8;
                rec(i + 1, left - e, cur, out, keep);
            }
            cur[i] = 0;
        }
        if nvars > 0 {
            rec(0, degree, &mut cur, &mut exps, &keep);
        } else if degree == 0 {
            exps.push(Vec::new());
        }
        let index = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        MonomialBasis { nvars, degree, exps, index }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn exponents(&self) -> &[Vec<u8>] {
        &self.exps
    }

    pub fn index_of(&self, e: &[u8]) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// Homogeneous polynomial stored densely over a [`MonomialBasis`].
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousForm {
    nvars: usize,
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl HomogeneousForm {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        let len = binomial(nvars + degree - 1, degree);
        HomogeneousForm { nvars, degree, coeffs: vec![Scalar::zero(); len] }
    }

    /// Coefficients in the order of `MonomialBasis::new(nvars, degree)`.
    pub fn from_coeffs(nvars: usize, degree: usize, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), binomial(nvars + degree - 1, degree));
        HomogeneousForm { nvars, degree, coeffs }
    }

    pub fn from_terms(nvars: usize, degree: usize, terms: &[(Vec<u8>, Scalar)]) -> Self {
        let basis = MonomialBasis::new(nvars, degree);
        let mut f = Self::zero(nvars, degree);
        for (e, c) in terms {
            let i = basis.index_of(e).expect("monomial of the form's degree");
            f.coeffs[i] += c;
        }
        f
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn terms(&self) -> Vec<(Vec<u8>, Scalar)> {
        let basis = MonomialBasis::new(self.nvars, self.degree);
        basis
            .exponents()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect()
    }

    pub fn evaluate(&self, x: &[Scalar]) -> Scalar {
        self.terms()
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, xi)| acc * num_traits::pow(xi.clone(), k as usize))
            })
            .fold(Scalar::zero(), |a, b| a + b)
    }
}
