use super::linalg::Matrix;
use super::point::ProjPoint;
use super::scalar::Scalar;
use super::subspace::LinearSubspace;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Linear projection P^n --> P^{n-k-1} from a k-dimensional center.
///
/// Target coordinates are the standard coordinates whose indices are not pivot
/// columns of the center's reduced basis, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Projection {
    center: LinearSubspace,
    complement: Vec<usize>,
}

impl Projection {
    pub fn new(center: LinearSubspace) -> Self {
        let n = center.ambient_dim();
        let complement = (0..=n).filter(|i| !center.pivots().contains(i)).collect();
        Projection { center, complement }
    }

    pub fn center(&self) -> &LinearSubspace {
        &self.center
    }

    /// Standard coordinate indices kept by the projection.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn target_dim(&self) -> usize {
        self.complement.len() - 1
    }

    /// Reduces `v` modulo the center and keeps the complement coordinates.
    pub fn apply_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in self.center.basis().iter().zip(self.center.pivots()) {
            let f = w[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        self.complement.iter().map(|&i| w[i].clone()).collect()
    }

    /// Matrix of the projection, of size (n-k) x (n+1).
    pub fn matrix(&self) -> Matrix {
        let n = self.center.ambient_dim();
        let cols: Vec<Vec<Scalar>> = (0..=n)
            .map(|j| {
                let mut e = vec![Scalar::zero(); n + 1];
                e[j] = Scalar::one();
                self.apply_vector(&e)
            })
            .collect();
        (0..self.complement.len())
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    pub fn point(&self, x: &ProjPoint) -> Result<ProjPoint> {
        ProjPoint::new(self.apply_vector(x.coords())).map_err(|_| Error::InCenter)
    }

    pub fn subspace(&self, s: &LinearSubspace) -> LinearSubspace {
        let rows = s.basis().iter().map(|r| self.apply_vector(r)).collect();
        LinearSubspace::from_rows(self.target_dim(), rows).expect("target length")
    }
}

pub fn project_point(center: &LinearSubspace, x: &ProjPoint) -> Result<ProjPoint> {
    Projection::new(center.clone()).point(x)
}

pub fn project_subspace(center: &LinearSubspace, s: &LinearSubspace) -> LinearSubspace {
    Projection::new(center.clone()).subspace(s)
}
