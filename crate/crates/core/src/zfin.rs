//! Admissible pairs and binary necklaces.
//!
//! An admissible pair `(J, n)` is a bead string of length `n` with black beads
//! at the positions in `J`. Two pairs have the same necklace type when one is
//! a rotation of the other. Reflections are not identified.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finset::FinSet;

/// `(J, n)` with `n ≥ 1` and `J ⊆ {0, …, n−1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair", into = "RawPair")]
pub struct AdmissiblePair {
    j: FinSet,
    n: i64,
}

#[derive(Serialize, Deserialize)]
struct RawPair {
    #[serde(rename = "J")]
    j: FinSet,
    n: i64,
}

impl TryFrom<RawPair> for AdmissiblePair {
    type Error = Error;
    fn try_from(raw: RawPair) -> Result<Self> {
        AdmissiblePair::new(raw.j, raw.n)
    }
}

impl From<AdmissiblePair> for RawPair {
    fn from(p: AdmissiblePair) -> Self {
        RawPair { j: p.j, n: p.n }
    }
}

impl AdmissiblePair {
    pub fn new(j: FinSet, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid(format!("admissible pair needs n >= 1, got {n}")));
        }
        if let Some(bad) = j.iter().find(|&e| !(0..n).contains(&e)) {
            return Err(Error::invalid(format!(
                "admissible pair needs J ⊆ [0, {n}), but {bad} ∈ {j}"
            )));
        }
        Ok(AdmissiblePair { j, n })
    }

    pub fn set(&self) -> &FinSet {
        &self.j
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// The complement `{0, …, n−1} ∖ J`.
    pub fn complement(&self) -> FinSet {
        FinSet::interval(0, self.n).difference(&self.j)
    }

    /// `(J + shift) mod n`.
    pub fn rotate(&self, shift: i64) -> AdmissiblePair {
        let j = self.j.iter().map(|e| (e + shift).rem_euclid(self.n)).collect();
        AdmissiblePair { j, n: self.n }
    }

    /// Every admissible pair of size `n`, in bitmask order.
    pub fn all(n: i64) -> Result<Vec<AdmissiblePair>> {
        if !(1..=30).contains(&n) {
            return Err(Error::invalid(format!("cannot list all pairs for n = {n}")));
        }
        Ok((0u64..1 << n)
            .map(|mask| AdmissiblePair {
                j: (0..n).filter(|b| mask >> b & 1 == 1).collect(),
                n,
            })
            .collect())
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.j, self.n)
    }
}

/// A necklace type, stored as its rotation-minimal representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NecklaceClass {
    representative: AdmissiblePair,
}

impl NecklaceClass {
    pub fn representative(&self) -> &AdmissiblePair {
        &self.representative
    }
}

impl fmt::Display for NecklaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.representative.n;
        let beads: String = (0..n)
            .map(|i| if self.representative.j.contains(i) { '●' } else { '○' })
            .collect();
        write!(f, "{} {}", self.representative, beads)
    }
}

/// The rotation of `p` whose sorted element tuple is lexicographically least.
pub fn necklace_canonical(p: &AdmissiblePair) -> NecklaceClass {
    let best = (0..p.n)
        .map(|shift| p.rotate(shift))
        .min_by(|a, b| a.j.to_vec().cmp(&b.j.to_vec()))
        .expect("n >= 1");
    NecklaceClass { representative: best }
}

/// Whether two admissible pairs have the same necklace type.
pub fn same_necklace(p: &AdmissiblePair, q: &AdmissiblePair) -> bool {
    p.n == q.n && necklace_canonical(p) == necklace_canonical(q)
}

fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Number of binary necklaces of length `n`: `(1/n) Σ_{d|n} φ(d) 2^{n/d}`.
pub fn necklace_count(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("necklace_count needs n >= 1"));
    }
    let mut total = BigUint::from(0u32);
    for d in (1..=n).filter(|&d| n.is_multiple_of(d)) {
        total += BigUint::from(totient(d)) << (n / d) as usize;
    }
    let (q, r) = total.div_rem(&BigUint::from(n));
    debug_assert_eq!(r, BigUint::from(0u32));
    Ok(q)
}

/// All necklace classes of length `n`, sorted by representative.
pub fn necklace_enumerate(n: i64) -> Result<Vec<NecklaceClass>> {
    if !(1..=24).contains(&n) {
        return Err(Error::invalid(format!(
            "necklace_enumerate supports 1 <= n <= 24, got {n}"
        )));
    }
    let classes: BTreeSet<NecklaceClass> = AdmissiblePair::all(n)?
        .iter()
        .map(necklace_canonical)
        .collect();
    Ok(classes.into_iter().collect())
}
