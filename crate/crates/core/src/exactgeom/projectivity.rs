use super::linalg::{self, Matrix};
use super::point::ProjPoint;
use super::scalar::{serde_q, Scalar};
use super::subspace::{span, LinearSubspace, Spannable};
use crate::error::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Invertible linear map of P^n acting on column vectors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Projectivity {
    #[serde(with = "serde_q::matrix")]
    matrix: Matrix,
}

impl Projectivity {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let n = matrix.len();
        if n < 2 || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("projectivity needs a square matrix of size >= 2".into()));
        }
        if linalg::det(&matrix).is_zero() {
            return Err(Error::InvalidInput("singular matrix".into()));
        }
        Ok(Projectivity { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Projectivity { matrix: linalg::identity(n + 1) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.matrix.len() - 1
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        linalg::mat_vec(&self.matrix, v)
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(self.apply_vector(p.coords())).expect("invertible map keeps points nonzero")
    }

    pub fn apply_subspace(&self, s: &LinearSubspace) -> LinearSubspace {
        let rows = s.basis().iter().map(|r| self.apply_vector(r)).collect();
        LinearSubspace::from_rows(s.ambient_dim(), rows).expect("same ambient")
    }

    pub fn inverse(&self) -> Projectivity {
        Projectivity { matrix: linalg::inverse(&self.matrix).expect("projectivity is invertible") }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Projectivity) -> Projectivity {
        Projectivity { matrix: linalg::mat_mul(&self.matrix, &other.matrix) }
    }

    /// Equality as projective maps (matrices proportional).
    pub fn projectively_eq(&self, other: &Projectivity) -> bool {
        let a: Vec<&Scalar> = self.matrix.iter().flatten().collect();
        let b: Vec<&Scalar> = other.matrix.iter().flatten().collect();
        if a.len() != b.len() {
            return false;
        }
        let Some(i) = a.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if b[i].is_zero() {
            return false;
        }
        let ratio = b[i] / a[i];
        a.iter().zip(&b).all(|(x, y)| &(*x * &ratio) == *y)
    }
}

/// Matrix sending e_i to a multiple of frame[i] (i <= n) and [1..1] to frame[n+1].
fn frame_matrix(frame: &[ProjPoint]) -> Result<Matrix> {
    let n = frame[0].ambient_dim();
    if frame.len() != n + 2 || frame.iter().any(|p| p.ambient_dim() != n) {
        return Err(Error::InvalidInput(format!("a frame of P^{n} has {} points", n + 2)));
    }
    let cols: Matrix = frame[..=n].iter().map(|p| p.coords().to_vec()).collect();
    let a = linalg::transpose(&cols);
    let lambda = linalg::solve(&a, frame[n + 1].coords()).ok_or(Error::FrameDegenerate)?;
    if lambda.iter().any(|l| l.is_zero()) {
        return Err(Error::FrameDegenerate);
    }
    let scaled: Matrix = cols
        .iter()
        .zip(&lambda)
        .map(|(c, l)| c.iter().map(|x| x * l).collect())
        .collect();
    Ok(linalg::transpose(&scaled))
}

/// Checks that every n+1 of the n+2 points are independent.
pub fn is_frame(frame: &[ProjPoint]) -> bool {
    frame_matrix(frame).is_ok()
}

/// The projectivity mapping `src[i]` to `dst[i]` for the n+2 points of two frames.
pub fn projectivity_from_frames(src: &[ProjPoint], dst: &[ProjPoint]) -> Result<Projectivity> {
    let a = frame_matrix(src)?;
    let b = frame_matrix(dst)?;
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len() - 1, got: b.len() - 1 });
    }
    let a_inv = linalg::inverse(&a).ok_or(Error::FrameDegenerate)?;
    Ok(Projectivity { matrix: linalg::mat_mul(&b, &a_inv) })
}

/// Standard frame e_0, ..., e_n, [1..1] of P^n.
pub fn standard_frame(n: usize) -> Vec<ProjPoint> {
    (0..=n).map(|i| ProjPoint::coordinate(n, i)).chain(std::iter::once(ProjPoint::unit(n))).collect()
}

/// Projectivity moving disjoint spaces that span a hyperplane onto coordinate blocks.
///
/// With block sizes `n_i = dim(spaces[i]) + 1`, the image of `spaces[i]` is the span of
/// the coordinate points of block i, where coordinate 0 is reserved and blocks follow in
/// input order. The preimage of e_0 is the first standard basis vector outside the span.
pub fn adapted_alignment(spaces: &[LinearSubspace]) -> Result<Projectivity> {
    let n = spaces
        .first()
        .ok_or_else(|| Error::NotComplementary("no spaces given".into()))?
        .ambient_dim();
    if spaces.iter().any(|s| s.ambient_dim() != n) {
        return Err(Error::NotComplementary("mixed ambient dimensions".into()));
    }
    let total: isize = spaces.iter().map(|s| s.dim() + 1).sum();
    if total != n as isize || spaces.iter().any(|s| s.is_empty()) {
        return Err(Error::NotComplementary(format!(
            "block sizes sum to {total}, expected {n}"
        )));
    }
    let parts: Vec<&dyn Spannable> = spaces.iter().map(|s| s as &dyn Spannable).collect();
    let hyper = span(n, &parts)?;
    if hyper.dim() != n as isize - 1 {
        return Err(Error::NotComplementary("spaces are not disjoint".into()));
    }
    let outside = (0..=n)
        .map(|i| ProjPoint::coordinate(n, i))
        .find(|p| !hyper.contains_point(p))
        .expect("a hyperplane misses some coordinate point");
    let mut cols: Matrix = vec![outside.coords().to_vec()];
    for s in spaces {
        cols.extend(s.basis().iter().cloned());
    }
    let m = linalg::transpose(&cols);
    let inv = linalg::inverse(&m).ok_or_else(|| Error::NotComplementary("dependent bases".into()))?;
    Ok(Projectivity { matrix: inv })
}

/// Canonical block spaces produced by [`adapted_alignment`] for the given block sizes.
pub fn coordinate_blocks(block_sizes: &[usize]) -> Vec<LinearSubspace> {
    let n: usize = block_sizes.iter().sum();
    let mut start = 1;
    block_sizes
        .iter()
        .map(|&b| {
            let idx: Vec<usize> = (start..start + b).collect();
            start += b;
            LinearSubspace::coordinate(n, &idx)
        })
        .collect()
}
