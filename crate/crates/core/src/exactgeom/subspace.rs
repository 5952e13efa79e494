use super::linalg::{self, Matrix};
use super::point::ProjPoint;
use super::rng::Rng;
use super::scalar::{serde_q, Scalar};
use crate::error::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Linear subspace of P^n, stored by the reduced row echelon form of a basis.
///
/// The stored basis is canonical, so structural equality is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSubspace", into = "RawSubspace")]
pub struct LinearSubspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawSubspace {
    ambient_dim: usize,
    #[serde(with = "serde_q::matrix")]
    basis: Matrix,
}

impl TryFrom<RawSubspace> for LinearSubspace {
    type Error = Error;
    fn try_from(r: RawSubspace) -> Result<Self> {
        LinearSubspace::from_rows(r.ambient_dim, r.basis)
    }
}

impl From<LinearSubspace> for RawSubspace {
    fn from(s: LinearSubspace) -> Self {
        RawSubspace { ambient_dim: s.ambient, basis: s.basis }
    }
}

impl LinearSubspace {
    /// Span of the given coordinate vectors (they need not be independent).
    pub fn from_rows(ambient: usize, rows: Matrix) -> Result<Self> {
        for r in &rows {
            if r.len() != ambient + 1 {
                return Err(Error::DimensionMismatch { expected: ambient, got: r.len().saturating_sub(1) });
            }
        }
        let (basis, pivots) = linalg::rref(&rows);
        Ok(LinearSubspace { ambient, basis, pivots })
    }

    pub fn empty(ambient: usize) -> Self {
        LinearSubspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(ambient: usize) -> Self {
        Self::from_rows(ambient, linalg::identity(ambient + 1)).expect("square identity")
    }

    pub fn from_point(p: &ProjPoint) -> Self {
        Self::from_rows(p.ambient_dim(), vec![p.coords().to_vec()]).expect("consistent length")
    }

    /// Span of the coordinate points with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let id = linalg::identity(ambient + 1);
        Self::from_rows(ambient, indices.iter().map(|&i| id[i].clone()).collect())
            .expect("coordinate rows")
    }

    /// Subspace cut out by the given linear forms.
    pub fn from_equations(ambient: usize, eqs: &[Vec<Scalar>]) -> Result<Self> {
        Self::from_rows(ambient, linalg::nullspace(eqs, ambient + 1))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Projective dimension; -1 for the empty subspace.
    pub fn dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Linear forms cutting out the subspace (a basis of the annihilator).
    pub fn equations(&self) -> Matrix {
        linalg::nullspace(&self.basis, self.ambient + 1)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.equations().iter().all(|eq| {
            eq.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b).is_zero()
        })
    }

    pub fn contains_point(&self, p: &ProjPoint) -> bool {
        self.contains_vector(p.coords())
    }

    pub fn contains(&self, other: &LinearSubspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Image of a seeded random combination of the basis: a generic point of the subspace.
    pub fn random_point(&self, rng: &mut Rng) -> Result<ProjPoint> {
        if self.is_empty() {
            return Err(Error::InvalidInput("empty subspace has no points".into()));
        }
        loop {
            let w = rng.nonzero_vector(self.basis.len());
            let mut v = vec![Scalar::zero(); self.ambient + 1];
            for (c, row) in w.iter().zip(&self.basis) {
                for (x, y) in v.iter_mut().zip(row) {
                    *x += c * y;
                }
            }
            if let Ok(p) = ProjPoint::new(v) {
                return Ok(p);
            }
        }
    }
}

pub fn sample_generic_subspace(n: usize, k: usize, rng: &mut Rng) -> LinearSubspace {
    assert!(k < n.max(1) || (n == 0 && k == 0), "0 <= k <= n-1 required");
    loop {
        let rows: Matrix = (0..=k).map(|_| rng.vector(n + 1)).collect();
        let s = LinearSubspace::from_rows(n, rows).expect("lengths match");
        if s.dim() == k as isize {
            return s;
        }
    }
}

/// Anything that can be spanned: points and subspaces.
pub trait Spannable {
    fn rows(&self) -> Matrix;
    fn ambient(&self) -> usize;
}

impl Spannable for ProjPoint {
    fn rows(&self) -> Matrix {
        vec![self.coords().to_vec()]
    }
    fn ambient(&self) -> usize {
        self.ambient_dim()
    }
}

impl Spannable for LinearSubspace {
    fn rows(&self) -> Matrix {
        self.basis.clone()
    }
    fn ambient(&self) -> usize {
        self.ambient
    }
}

/// Smallest subspace containing all parts.
pub fn span(ambient: usize, parts: &[&dyn Spannable]) -> Result<LinearSubspace> {
    let mut rows = Vec::new();
    for p in parts {
        if p.ambient() != ambient {
            return Err(Error::DimensionMismatch { expected: ambient, got: p.ambient() });
        }
        rows.extend(p.rows());
    }
    LinearSubspace::from_rows(ambient, rows)
}

pub fn span2(a: &LinearSubspace, b: &LinearSubspace) -> Result<LinearSubspace> {
    span(a.ambient, &[a, b])
}

pub fn meet(a: &LinearSubspace, b: &LinearSubspace) -> Result<LinearSubspace> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch { expected: a.ambient, got: b.ambient });
    }
    if a.is_empty() || b.is_empty() {
        return Ok(LinearSubspace::empty(a.ambient));
    }
    // Kernel of [A^T | -B^T]: pairs (x, y) with x.A = y.B.
    let ka = a.basis.len();
    let cols: Matrix = a
        .basis
        .iter()
        .cloned()
        .chain(b.basis.iter().map(|r| r.iter().map(|x| -x.clone()).collect()))
        .collect();
    let m = linalg::transpose(&cols);
    let ker = linalg::nullspace(&m, cols.len());
    let rows: Matrix = ker
        .iter()
        .map(|k| {
            let mut v = vec![Scalar::zero(); a.ambient + 1];
            for (c, row) in k[..ka].iter().zip(&a.basis) {
                for (x, y) in v.iter_mut().zip(row) {
                    *x += c * y;
                }
            }
            v
        })
        .collect();
    LinearSubspace::from_rows(a.ambient, rows)
}
