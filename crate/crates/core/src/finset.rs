//! Finite sets of integers with exclusive-or as the group law.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite subset of the integers.
///
/// Under [`FinSet::symmetric_difference`] these form an elementary abelian
/// 2-group with identity the empty set. Serializes as a strictly increasing
/// JSON integer array.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FinSet(BTreeSet<i64>);

impl FinSet {
    pub fn new() -> Self {
        FinSet(BTreeSet::new())
    }

    pub fn singleton(j: i64) -> Self {
        FinSet(BTreeSet::from([j]))
    }

    /// The half-open integer interval `[lo, hi)`.
    pub fn interval(lo: i64, hi: i64) -> Self {
        (lo..hi).collect()
    }

    /// The set Δ with `ι_Δ A ≅ A⟨shift⟩`: `{0, …, shift−1}` for positive
    /// shifts and `{shift, …, −1}` for negative ones.
    pub fn shift_delta(shift: i64) -> Self {
        if shift >= 0 {
            FinSet::interval(0, shift)
        } else {
            FinSet::interval(shift, 0)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, j: i64) -> bool {
        self.0.contains(&j)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    pub fn min_element(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn max_element(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// Elements in increasing order.
    pub fn to_vec(&self) -> Vec<i64> {
        self.iter().collect()
    }

    pub fn insert(&mut self, j: i64) -> bool {
        self.0.insert(j)
    }

    /// Adds `j` if absent, removes it if present.
    pub fn toggle(&mut self, j: i64) {
        if !self.0.remove(&j) {
            self.0.insert(j);
        }
    }

    /// `(K ∪ J) ∖ (K ∩ J)`.
    pub fn symmetric_difference(&self, other: &FinSet) -> FinSet {
        FinSet(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        FinSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &FinSet) -> FinSet {
        FinSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &FinSet) -> FinSet {
        FinSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// `{scale·j + offset : j ∈ J}`. The scale must be nonzero.
    pub fn affine_image(&self, scale: i64, offset: i64) -> Result<FinSet> {
        if scale == 0 {
            return Err(Error::invalid("affine_image: scale must be nonzero"));
        }
        Ok(self.map_injective(|j| scale * j + offset))
    }

    /// `J + offset`.
    pub fn translate(&self, offset: i64) -> FinSet {
        self.map_injective(|j| j + offset)
    }

    /// `−1 − J`, the reflection induced by conjugation with ω.
    pub fn reflect(&self) -> FinSet {
        self.map_injective(|j| -1 - j)
    }

    fn map_injective(&self, f: impl Fn(i64) -> i64) -> FinSet {
        FinSet(self.0.iter().map(|&j| f(j)).collect())
    }

    /// `J^n_i = {j : nj + i ∈ J}`.
    pub fn slice(&self, n: i64, i: i64) -> Result<FinSet> {
        check_modulus(n)?;
        if !(0..n).contains(&i) {
            return Err(Error::invalid(format!("slice: residue {i} outside [0, {n})")));
        }
        Ok(self
            .iter()
            .filter(|j| j.rem_euclid(n) == i)
            .map(|j| j.div_euclid(n))
            .collect())
    }

    /// Every residue class `i ∈ [0, n)` paired with its slice.
    pub fn slices(&self, n: i64) -> Result<Vec<FinSet>> {
        check_modulus(n)?;
        let mut out = vec![FinSet::new(); n as usize];
        for j in self.iter() {
            out[j.rem_euclid(n) as usize].insert(j.div_euclid(n));
        }
        Ok(out)
    }

    /// The boundary operator `∂_n J = J ⊕ (J − n)`.
    pub fn boundary(&self, n: i64) -> Result<FinSet> {
        check_modulus(n)?;
        Ok(self.symmetric_difference(&self.translate(-n)))
    }

    /// The unique `K` with `∂_n K = J`.
    ///
    /// Each residue class is handled independently: its slice is split into
    /// consecutive pairs `a < b`, and every pair contributes `{a+1, …, b}`.
    pub fn inverse_boundary(&self, n: i64) -> Result<FinSet> {
        let slices = self.slices(n)?;
        let mut out = FinSet::new();
        for (i, slice) in slices.iter().enumerate() {
            if slice.len() % 2 == 1 {
                return Err(Error::NotInImage {
                    set: self.to_string(),
                    n,
                    residue: i as i64,
                });
            }
            let elems = slice.to_vec();
            for pair in elems.chunks(2) {
                for k in pair[0] + 1..=pair[1] {
                    out.insert(n * k + i as i64);
                }
            }
        }
        Ok(out)
    }
}

fn check_modulus(n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::invalid(format!("modulus must be positive, got {n}")));
    }
    Ok(())
}

impl FromIterator<i64> for FinSet {
    fn from_iter<T: IntoIterator<Item = i64>>(iter: T) -> Self {
        FinSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[i64; N]> for FinSet {
    fn from(a: [i64; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<&[i64]> for FinSet {
    fn from(a: &[i64]) -> Self {
        a.iter().copied().collect()
    }
}

impl BitXor for &FinSet {
    type Output = FinSet;
    fn bitxor(self, rhs: &FinSet) -> FinSet {
        self.symmetric_difference(rhs)
    }
}

impl BitXor for FinSet {
    type Output = FinSet;
    fn bitxor(self, rhs: FinSet) -> FinSet {
        self.symmetric_difference(&rhs)
    }
}

impl BitXorAssign<&FinSet> for FinSet {
    fn bitxor_assign(&mut self, rhs: &FinSet) {
        for j in rhs.iter() {
            self.toggle(j);
        }
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, j) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "}}")
    }
}

/// Accepts `{1,3}`, `1,3`, `{}` and the empty string.
impl std::str::FromStr for FinSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<FinSet> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(FinSet::new());
        }
        inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::invalid(format!("bad integer {:?} in set {s:?}", tok.trim())))
            })
            .collect()
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<const N: usize>(a: [i64; N]) -> FinSet {
        FinSet::from(a)
    }

    #[test]
    fn parse() {
        assert_eq!("{1, 3}".parse::<FinSet>().unwrap(), s([1, 3]));
        assert_eq!("-2,0".parse::<FinSet>().unwrap(), s([-2, 0]));
        assert_eq!("{}".parse::<FinSet>().unwrap(), FinSet::new());
        assert!("{1,x}".parse::<FinSet>().is_err());
        let t = s([-4, 0, 9]);
        assert_eq!(t.to_string().parse::<FinSet>().unwrap(), t);
    }

    #[test]
    fn xor_examples() {
        assert_eq!(s([0, 1]) ^ s([1, 2]), s([0, 2]));
        assert_eq!(s([4, 7]) ^ FinSet::new(), s([4, 7]));
        assert_eq!(s([0, 3]) ^ s([0, 3]), FinSet::new());
    }

    #[test]
    fn affine_examples() {
        assert_eq!(s([0, 1]).affine_image(1, 3).unwrap(), s([3, 4]));
        assert_eq!(s([0, 1]).affine_image(2, 0).unwrap(), s([0, 2]));
        assert_eq!(s([0]).affine_image(-1, -1).unwrap(), s([-1]));
        assert_eq!(s([0]).reflect(), s([-1]));
        assert!(s([0]).affine_image(0, 1).is_err());
    }

    #[test]
    fn slice_examples() {
        assert_eq!(s([0, 3, 5]).slice(2, 0).unwrap(), s([0]));
        assert_eq!(s([0, 3, 5]).slice(2, 1).unwrap(), s([1, 2]));
        assert_eq!(FinSet::new().slice(3, 2).unwrap(), FinSet::new());
        assert_eq!(s([-1, -4]).slice(3, 2).unwrap(), s([-1, -2]));
        assert!(s([1]).slice(2, 2).is_err());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(s([1, 2, 3]).boundary(1).unwrap(), s([0, 3]));
        assert_eq!(s([2]).boundary(2).unwrap(), s([0, 2]));
        assert_eq!(FinSet::new().boundary(5).unwrap(), FinSet::new());
        assert!(s([1]).boundary(0).is_err());
    }

    #[test]
    fn inverse_boundary_examples() {
        assert_eq!(s([0, 3]).inverse_boundary(1).unwrap(), s([1, 2, 3]));
        assert_eq!(s([0, 2]).inverse_boundary(2).unwrap(), s([2]));
        assert!(matches!(
            s([0]).inverse_boundary(1),
            Err(Error::NotInImage { residue: 0, .. })
        ));
        // even total size but an odd residue class
        assert!(matches!(
            s([0, 1]).inverse_boundary(2),
            Err(Error::NotInImage { residue: 0, .. })
        ));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(s([3, -1, 0]).to_string(), "{-1,0,3}");
        assert_eq!(serde_json::to_string(&s([3, -1, 0])).unwrap(), "[-1,0,3]");
        let back: FinSet = serde_json::from_str("[5,2]").unwrap();
        assert_eq!(back, s([2, 5]));
    }

    #[test]
    fn shift_delta_sets() {
        assert_eq!(FinSet::shift_delta(3), s([0, 1, 2]));
        assert_eq!(FinSet::shift_delta(-2), s([-2, -1]));
        assert_eq!(FinSet::shift_delta(0), FinSet::new());
    }
}
