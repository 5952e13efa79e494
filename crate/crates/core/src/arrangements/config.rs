use crate::error::{Error, Result};
use crate::exactgeom::{meet, sample_generic_subspace, LinearSubspace, Projectivity, Rng};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Counts l_0, ..., l_{n-2} of generic linear spaces of each dimension in P^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector {
    n: usize,
    counts: Vec<usize>,
}

impl WeightVector {
    pub fn new(n: usize, counts: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput("weight vectors need n >= 2".into()));
        }
        if counts.len() != n - 1 {
            return Err(Error::DimensionMismatch { expected: n - 1, got: counts.len() });
        }
        Ok(WeightVector { n, counts })
    }

    /// Parses comma-separated counts such as `5,1` for P^3.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("'{x}': {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, counts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, dim: usize) -> usize {
        self.counts.get(dim).copied().unwrap_or(0)
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Dimensions of the components, ascending.
    pub fn dims(&self) -> Vec<usize> {
        self.counts.iter().enumerate().flat_map(|(i, &l)| std::iter::repeat_n(i, l)).collect()
    }

    pub fn from_dims(n: usize, dims: &[usize]) -> Result<Self> {
        let mut counts = vec![0; n.saturating_sub(1)];
        for &d in dims {
            if d + 2 > n {
                return Err(Error::InvalidInput(format!("component of dimension {d} in P^{n}")));
            }
            counts[d] += 1;
        }
        Self::new(n, counts)
    }

    /// Σ (i+1) l_i, the number of conditions a maximal intersection imposes on points of
    /// the curve.
    pub fn incidence_sum(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, &l)| (i + 1) * l).sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Counts only; the ambient dimension is their number plus one.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let k = t.split(',').count();
        Self::parse(k + 1, t)
    }
}

/// A linear space with a vanishing multiplicity (1 = reduced).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub space: LinearSubspace,
    pub mult: usize,
}

impl Component {
    pub fn reduced(space: LinearSubspace) -> Self {
        Component { space, mult: 1 }
    }

    pub fn fat(space: LinearSubspace, mult: usize) -> Self {
        Component { space, mult }
    }

    pub fn dim(&self) -> usize {
        self.space.dim().max(0) as usize
    }
}

/// Dimension and multiplicity of one component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentShape {
    pub dim: usize,
    pub mult: usize,
}

/// A union of (possibly fat) linear spaces in P^n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawConfiguration")]
pub struct Configuration {
    n: usize,
    components: Vec<Component>,
}

#[derive(Deserialize)]
struct RawConfiguration {
    n: usize,
    components: Vec<Component>,
}

impl TryFrom<RawConfiguration> for Configuration {
    type Error = Error;
    fn try_from(r: RawConfiguration) -> Result<Self> {
        Configuration::new(r.n, r.components)
    }
}

impl Configuration {
    pub fn new(n: usize, components: Vec<Component>) -> Result<Self> {
        for c in &components {
            if c.space.ambient_dim() != n {
                return Err(Error::DimensionMismatch { expected: n, got: c.space.ambient_dim() });
            }
            if c.mult == 0 {
                return Err(Error::InvalidInput("multiplicity must be at least 1".into()));
            }
            if c.space.is_empty() {
                return Err(Error::InvalidInput("empty component".into()));
            }
        }
        Ok(Configuration { n, components })
    }

    pub fn reduced(n: usize, spaces: Vec<LinearSubspace>) -> Result<Self> {
        Self::new(n, spaces.into_iter().map(Component::reduced).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn spaces(&self) -> Vec<LinearSubspace> {
        self.components.iter().map(|c| c.space.clone()).collect()
    }

    pub fn shape(&self) -> Vec<ComponentShape> {
        self.components.iter().map(|c| ComponentShape { dim: c.dim(), mult: c.mult }).collect()
    }

    pub fn with_component(&self, c: Component) -> Result<Self> {
        let mut comps = self.components.clone();
        comps.push(c);
        Self::new(self.n, comps)
    }

    pub fn apply(&self, g: &Projectivity) -> Self {
        Configuration {
            n: self.n,
            components: self
                .components
                .iter()
                .map(|c| Component { space: g.apply_subspace(&c.space), mult: c.mult })
                .collect(),
        }
    }
}

/// Numbers of reduced components by dimension.
pub fn weight_of(config: &Configuration) -> Result<WeightVector> {
    if config.components.iter().any(|c| c.mult > 1) {
        return Err(Error::FatComponentPresent);
    }
    WeightVector::from_dims(config.n, &config.components.iter().map(Component::dim).collect::<Vec<_>>())
}

const SAMPLE_ATTEMPTS: usize = 16;

/// True when every pair of spaces meets in the expected dimension max(-1, a + b - n).
pub fn pairwise_general(spaces: &[LinearSubspace]) -> bool {
    for i in 0..spaces.len() {
        for j in 0..i {
            let (a, b) = (&spaces[i], &spaces[j]);
            let n = a.ambient_dim() as isize;
            let want = (a.dim() + b.dim() - n).max(-1);
            match meet(a, b) {
                Ok(m) if m.dim() == want => {}
                _ => return false,
            }
        }
    }
    true
}

/// Seeded configuration with the given component shapes, validated pairwise.
pub fn sample_shape(n: usize, shape: &[ComponentShape], rng: &mut Rng) -> Result<Configuration> {
    if let Some(s) = shape.iter().find(|s| s.dim >= n) {
        return Err(Error::InvalidInput(format!("component of dimension {} in P^{n}", s.dim)));
    }
    for _ in 0..SAMPLE_ATTEMPTS {
        let spaces: Vec<LinearSubspace> =
            shape.iter().map(|s| sample_generic_subspace(n, s.dim, rng)).collect();
        if pairwise_general(&spaces) {
            let comps = spaces
                .into_iter()
                .zip(shape)
                .map(|(space, s)| Component::fat(space, s.mult))
                .collect();
            return Configuration::new(n, comps);
        }
    }
    Err(Error::GenericityExhausted { attempts: SAMPLE_ATTEMPTS, what: "configuration".into() })
}

/// Seeded generic configuration of weight `l`, components in ascending dimension.
pub fn sample_configuration(l: &WeightVector, rng: &mut Rng) -> Result<Configuration> {
    let shape: Vec<ComponentShape> = l.dims().into_iter().map(|dim| ComponentShape { dim, mult: 1 }).collect();
    sample_shape(l.n(), &shape, rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_by_dimension() {
        let mut rng = Rng::new(1);
        let mut spaces: Vec<LinearSubspace> = (0..5).map(|_| sample_generic_subspace(3, 0, &mut rng)).collect();
        spaces.push(sample_generic_subspace(3, 1, &mut rng));
        let c = Configuration::reduced(3, spaces).unwrap();
        assert_eq!(weight_of(&c).unwrap().counts(), &[5, 1]);
        assert_eq!(weight_of(&Configuration::reduced(4, vec![]).unwrap()).unwrap().counts(), &[0, 0, 0]);
        let l = WeightVector::new(6, vec![0, 3, 0, 2, 0]).unwrap();
        let c = sample_configuration(&l, &mut rng).unwrap();
        assert_eq!(weight_of(&c).unwrap(), l);
    }

    #[test]
    fn fat_components_have_no_weight() {
        let p = LinearSubspace::coordinate(3, &[0]);
        let c = Configuration::new(3, vec![Component::fat(p, 2)]).unwrap();
        assert_eq!(weight_of(&c).unwrap_err(), Error::FatComponentPresent);
    }

    #[test]
    fn sampling_is_deterministic_and_general() {
        let l = WeightVector::new(5, vec![2, 1, 1, 1]).unwrap();
        let a = sample_configuration(&l, &mut Rng::new(3)).unwrap();
        let b = sample_configuration(&l, &mut Rng::new(3)).unwrap();
        assert_eq!(a, b);
        assert!(pairwise_general(&a.spaces()));
        assert_eq!(a.components().iter().map(Component::dim).collect::<Vec<_>>(), vec![0, 0, 1, 2, 3]);
    }

    #[test]
    fn parsing_and_display() {
        let w: WeightVector = "(5,1)".parse().unwrap();
        assert_eq!(w.n(), 3);
        assert_eq!(w.to_string(), "(5,1)");
        assert!(WeightVector::parse(4, "1,x,0").is_err());
        assert!(WeightVector::parse(4, "1,0").is_err());
    }
}
