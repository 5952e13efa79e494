//! Exact and modular ranks of integer matrices.

use crate::exactgeom::derive_seed;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// How ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum RankBackend {
    /// Exact rank. A modular rank that is already maximal is accepted as proof; otherwise
    /// fraction-free elimination over the integers decides.
    #[default]
    Exact,
    /// Rank modulo one random prime: a lower bound that is exact with high probability.
    Modular,
}

impl std::str::FromStr for RankBackend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(RankBackend::Exact),
            "modular" => Ok(RankBackend::Modular),
            other => Err(format!("unknown rank backend '{other}' (exact|modular)")),
        }
    }
}

/// Rank and how it was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub rank: usize,
    pub exact: bool,
    pub primes: Vec<u64>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= p {
        if p.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Deterministic random primes in [2^30, 2^31).
pub fn random_primes(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, "primes"));
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = rng.random_range((1u64 << 30)..(1u64 << 31)) | 1;
        if is_prime(p) && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank over Z/p; never exceeds the rank over Q.
pub fn modular_rank(rows: &[Vec<BigInt>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        let pivot_row: Vec<u64> = m[rank].iter().map(|&x| x * inv % p).collect();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..ncols {
                if pivot_row[j] != 0 {
                    row[j] = (row[j] + p - f * pivot_row[j] % p) % p;
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Exact rank by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    crate::exactgeom::linalg::integer_rank(rows)
}

/// Removes columns forced to zero by single-entry rows.
///
/// Returns the number of such columns and the remaining rows restricted to the other
/// columns; the rank of the input is their sum plus the rank of the remainder.
pub fn peel_unit_rows(rows: Vec<Vec<BigInt>>) -> (usize, Vec<Vec<BigInt>>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut forced = vec![false; ncols];
    let mut rest = Vec::new();
    for r in rows {
        let mut nz = r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, _)| j);
        match (nz.next(), nz.next()) {
            (None, _) => {}
            (Some(j), None) => forced[j] = true,
            _ => rest.push(r),
        }
    }
    let keep: Vec<usize> = (0..ncols).filter(|&j| !forced[j]).collect();
    let count = ncols - keep.len();
    let rest: Vec<Vec<BigInt>> = rest
        .into_iter()
        .map(|r| keep.iter().map(|&j| r[j].clone()).collect::<Vec<_>>())
        .filter(|r: &Vec<BigInt>| r.iter().any(|x| !x.is_zero()))
        .collect();
    (count, rest)
}

/// Rank of an integer matrix.
pub fn rank(rows: Vec<Vec<BigInt>>, backend: RankBackend, seed: u64) -> RankReport {
    let (mut forced, mut rest) = peel_unit_rows(rows);
    loop {
        let (more, next) = peel_unit_rows(rest);
        rest = next;
        forced += more;
        if more == 0 {
            break;
        }
    }
    let full = rest.len().min(rest.first().map_or(0, Vec::len));
    if rest.is_empty() {
        return RankReport { rank: forced, exact: true, primes: vec![] };
    }
    let primes = random_primes(seed, 1);
    let r = modular_rank(&rest, primes[0]);
    if r == full {
        return RankReport { rank: forced + r, exact: true, primes };
    }
    match backend {
        RankBackend::Modular => RankReport { rank: forced + r, exact: false, primes },
        RankBackend::Exact => RankReport { rank: forced + bareiss_rank(&rest), exact: true, primes },
    }
}
