//! Exact rationals and their JSON encoding as `[num, den]` integer pairs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar; always stored in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn ints(vals: &[i64]) -> Vec<Scalar> {
    vals.iter().map(|&v| int(v)).collect()
}

/// Scales a rational vector to a primitive integer vector spanning the same line.
///
/// The result has content 1 and its first nonzero entry positive.
pub fn primitive_integer_vector(v: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| (x.numer() * &lcm) / x.denom()).collect();
    make_primitive(&mut out);
    out
}

/// Divides an integer vector by its content and makes the leading nonzero entry positive.
pub fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let neg = v.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    if neg {
        g = -g;
    }
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

pub fn to_scalars(v: &[BigInt]) -> Vec<Scalar> {
    v.iter().cloned().map(Scalar::from_integer).collect()
}

/// Serde adapters writing rationals as `[num, den]` JSON integer pairs of arbitrary size.
pub mod serde_q {
    use super::Scalar;
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::str::FromStr;

    fn number(v: &BigInt) -> serde_json::Number {
        serde_json::Number::from_str(&v.to_str_radix(10)).expect("integer literal")
    }

    fn parse(n: &serde_json::Number) -> Result<BigInt, String> {
        BigInt::from_str(n.as_str()).map_err(|e| format!("bad integer {}: {e}", n.as_str()))
    }

    pub fn to_pair(q: &Scalar) -> [serde_json::Number; 2] {
        [number(q.numer()), number(q.denom())]
    }

    pub fn from_pair(p: &[serde_json::Number; 2]) -> Result<Scalar, String> {
        let num = parse(&p[0])?;
        let den = parse(&p[1])?;
        if den == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(Scalar::new(num, den))
    }

    pub fn serialize<S: Serializer>(q: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        to_pair(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let p = <[serde_json::Number; 2]>::deserialize(d)?;
        from_pair(&p).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(to_pair).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Scalar>, D::Error> {
            let raw = Vec::<[serde_json::Number; 2]>::deserialize(d)?;
            raw.iter().map(|p| from_pair(p).map_err(D::Error::custom)).collect()
        }
    }

    pub mod matrix {
        use super::*;

        pub fn serialize<S: Serializer>(m: &[Vec<Scalar>], s: S) -> Result<S::Ok, S::Error> {
            m.iter()
                .map(|row| row.iter().map(to_pair).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Scalar>>, D::Error> {
            let raw = Vec::<Vec<[serde_json::Number; 2]>>::deserialize(d)?;
            raw.iter()
                .map(|row| {
                    row.iter()
                        .map(|p| from_pair(p).map_err(D::Error::custom))
                        .collect()
                })
                .collect()
        }
    }
}
