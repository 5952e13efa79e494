use super::scalar::{serde_q, Scalar};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Point of P^n in homogeneous coordinates, normalized so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
}

impl ProjPoint {
    pub fn new(mut coords: Vec<Scalar>) -> Result<Self> {
        let lead = coords.iter().find(|x| !x.is_zero()).cloned().ok_or(Error::ZeroVector)?;
        if !lead.is_one() {
            let inv = lead.recip();
            for x in coords.iter_mut() {
                *x *= &inv;
            }
        }
        if coords.len() < 2 {
            return Err(Error::InvalidInput("a projective point needs at least two coordinates".into()));
        }
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(v: &[i64]) -> Result<Self> {
        Self::new(super::scalar::ints(v))
    }

    /// Coordinate point e_i of P^n.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut c = vec![Scalar::zero(); n + 1];
        c[i] = Scalar::one();
        ProjPoint { coords: c }
    }

    /// The point [1, ..., 1].
    pub fn unit(n: usize) -> Self {
        ProjPoint { coords: vec![Scalar::one(); n + 1] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_q::vec::serialize(&self.coords, s)
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_q::vec::deserialize(d)?;
        ProjPoint::new(v).map_err(serde::de::Error::custom)
    }
}
