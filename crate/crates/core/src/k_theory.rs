//! Graded `K_0` of `A`: direct sums of rank-one projectives.
//!
//! Every rank-one graded projective is `ι_J A` for a unique finite `J`, and
//! `A⟨m⟩ ≅ ι_Δ A` with `Δ = {0,…,m−1}` or `{m,…,−1}`. Sums obey
//! `ι_J A ⊕ ι_K A ≅ ι_{J∪K} A ⊕ ι_{J∩K} A`, so every sum has a unique chain
//! form `J_1 ⊆ … ⊆ J_m`, and that form is a complete invariant.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::lattice::to_dset;
use crate::picard::PicElement;

/// `ι_J(A)⟨shift⟩`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    #[serde(rename = "J")]
    pub set: FinSet,
    #[serde(default)]
    pub shift: i64,
}

impl Summand {
    pub fn new(set: FinSet, shift: i64) -> Self {
        Summand { set, shift }
    }

    /// `A⟨m⟩`.
    pub fn free(m: i64) -> Self {
        Summand::new(FinSet::new(), m)
    }

    pub fn iota(set: FinSet) -> Self {
        Summand::new(set, 0)
    }

    /// The single set `K` with `ι_J(A)⟨s⟩ ≅ ι_K A`.
    pub fn absorbed(&self) -> FinSet {
        to_dset(&self.set, self.shift).exceptions
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.set.is_empty(), self.shift) {
            (true, 0) => write!(f, "A"),
            (true, s) => write!(f, "A<{s}>"),
            (false, 0) => write!(f, "i{}A", self.set),
            (false, s) => write!(f, "i{}A<{s}>", self.set),
        }
    }
}

/// `A`, `A<s>`, `i{1,3}A`, `i{1,3}A<s>`, or a bare set `{1,3}`.
impl FromStr for Summand {
    type Err = Error;

    fn from_str(s: &str) -> Result<Summand> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, shift) = match t.strip_suffix('>').and_then(|r| r.rsplit_once('<')) {
            Some((b, sh)) => (
                b,
                sh.parse::<i64>()
                    .map_err(|_| Error::invalid(format!("bad shift in {s:?}")))?,
            ),
            None => (t.as_str(), 0),
        };
        let body = body.strip_suffix('A').unwrap_or(body);
        let body = body.strip_prefix('i').unwrap_or(body);
        let set = if body.is_empty() {
            FinSet::new()
        } else if body.starts_with('{') {
            body.parse()?
        } else {
            return Err(Error::invalid(format!("cannot read summand {s:?}")));
        };
        Ok(Summand::new(set, shift))
    }
}

/// A finite direct sum of rank-one graded projectives.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProjectiveSum {
    pub summands: Vec<Summand>,
}

impl ProjectiveSum {
    pub fn new(summands: Vec<Summand>) -> Self {
        ProjectiveSum { summands }
    }

    pub fn of_sets(sets: impl IntoIterator<Item = FinSet>) -> Self {
        ProjectiveSum::new(sets.into_iter().map(Summand::iota).collect())
    }

    pub fn of_shifts(shifts: impl IntoIterator<Item = i64>) -> Self {
        ProjectiveSum::new(shifts.into_iter().map(Summand::free).collect())
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    /// `P ⊕ Q`.
    pub fn direct_sum(&self, other: &ProjectiveSum) -> ProjectiveSum {
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        ProjectiveSum { summands }
    }

    /// The absorbed sets, in order.
    pub fn sets(&self) -> Vec<FinSet> {
        self.summands.iter().map(Summand::absorbed).collect()
    }

    /// Whether the absorbed sets form a chain in the listed order.
    pub fn is_chain(&self) -> bool {
        self.sets().windows(2).all(|w| w[0].is_subset(&w[1]))
    }

    /// For each integer `t`, the number of summands whose set contains `t`.
    pub fn membership_counts(&self) -> BTreeMap<i64, usize> {
        let mut counts = BTreeMap::new();
        for set in self.sets() {
            for t in set.iter() {
                *counts.entry(t).or_insert(0) += 1;
            }
        }
        counts
    }
}

impl fmt::Display for ProjectiveSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (k, s) in self.summands.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Summands separated by `+`.
impl FromStr for ProjectiveSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProjectiveSum> {
        if s.trim().is_empty() || s.trim() == "0" {
            return Ok(ProjectiveSum::default());
        }
        Ok(ProjectiveSum::new(s.split('+').map(str::parse).collect::<Result<_>>()?))
    }
}

/// Chain form, by literal rewriting of incomparable pairs `(J, K)` into
/// `(J∩K, J∪K)`. The result has zero shifts and increasing sets.
pub fn normalize_sum(sum: &ProjectiveSum) -> ProjectiveSum {
    normalize_with(sum, |_| 0)
}

/// As [`normalize_sum`], with `pick` choosing which incomparable pair to
/// rewrite among the `len` available ones. Every choice leads to the same
/// chain form.
pub fn normalize_with(sum: &ProjectiveSum, mut pick: impl FnMut(usize) -> usize) -> ProjectiveSum {
    let mut sets = sum.sets();
    loop {
        let bad: Vec<(usize, usize)> = (0..sets.len())
            .flat_map(|i| (i + 1..sets.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| !sets[i].is_subset(&sets[j]) && !sets[j].is_subset(&sets[i]))
            .collect();
        if bad.is_empty() {
            break;
        }
        let (i, j) = bad[pick(bad.len()) % bad.len()];
        let meet = sets[i].intersection(&sets[j]);
        let join = sets[i].union(&sets[j]);
        sets[i] = meet;
        sets[j] = join;
    }
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    ProjectiveSum::of_sets(sets)
}

/// Chain form read directly off membership counts: the `k`-th largest set
/// holds every `t` lying in at least `k` summands.
pub fn chain_from_counts(sum: &ProjectiveSum) -> ProjectiveSum {
    let counts = sum.membership_counts();
    let m = sum.rank();
    ProjectiveSum::of_sets((1..=m).rev().map(|k| {
        counts.iter().filter(|(_, &c)| c >= k).map(|(&t, _)| t).collect()
    }))
}

pub fn iso_test(p: &ProjectiveSum, q: &ProjectiveSum) -> bool {
    normalize_sum(p) == normalize_sum(q)
}

/// Shift lists `adds`, `result` with `ι_J A ⊕ ⊕_{l∈adds} A⟨l⟩ ≅ ⊕_{m∈result} A⟨m⟩`.
///
/// Peel `m = max J`: `ι_J A ⊕ A⟨m⟩ ≅ ι_{J∖{m}} A ⊕ A⟨m+1⟩`, then recurse.
pub fn stably_free_witness(set: &FinSet) -> Result<(Vec<i64>, Vec<i64>)> {
    if set.min_element().is_some_and(|m| m < 1) {
        return Err(Error::invalid(format!(
            "{set} is not a set of positive integers; shift it first"
        )));
    }
    let mut rest = set.clone();
    let mut adds = Vec::new();
    let mut result = Vec::new();
    while let Some(m) = rest.max_element() {
        adds.push(m);
        result.push(m + 1);
        rest = rest.difference(&FinSet::singleton(m));
    }
    result.push(0);
    Ok((adds, result))
}

/// Some `(l, m, n)` with `ι_J A ⊕ A⟨l⟩ ≅ A⟨m⟩ ⊕ A⟨n⟩` and all of `|l|, |m|, |n| ≤ bound`.
pub fn single_complement_search(set: &FinSet, bound: i64) -> Option<(i64, i64, i64)> {
    let targets: BTreeMap<ProjectiveSum, (i64, i64)> = (-bound..=bound)
        .flat_map(|m| (m..=bound).map(move |n| (m, n)))
        .map(|(m, n)| (normalize_sum(&ProjectiveSum::of_shifts([m, n])), (m, n)))
        .collect();
    (-bound..=bound).find_map(|l| {
        let p = ProjectiveSum::new(vec![Summand::iota(set.clone()), Summand::free(l)]);
        targets.get(&normalize_sum(&p)).map(|&(m, n)| (l, m, n))
    })
}

impl PartialOrd for ProjectiveSum {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjectiveSum {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.summands.cmp(&other.summands)
    }
}

/// `Σ c_n [A⟨n⟩]` in `K_0 ≅ Z^(Z)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct K0Class {
    coefficients: BTreeMap<i64, i64>,
}

impl K0Class {
    pub fn zero() -> Self {
        K0Class::default()
    }

    /// `[A⟨n⟩]`.
    pub fn basis(n: i64) -> Self {
        K0Class::from_coefficients([(n, 1)])
    }

    pub fn from_coefficients(c: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut out = K0Class::zero();
        for (n, v) in c {
            out.add_term(n, v);
        }
        out
    }

    fn add_term(&mut self, n: i64, v: i64) {
        let e = self.coefficients.entry(n).or_insert(0);
        *e += v;
        if *e == 0 {
            self.coefficients.remove(&n);
        }
    }

    pub fn coefficients(&self) -> &BTreeMap<i64, i64> {
        &self.coefficients
    }

    pub fn coefficient(&self, n: i64) -> i64 {
        self.coefficients.get(&n).copied().unwrap_or(0)
    }

    /// `[ι_J A]`, using `[ι_{t} A] = [A] ± ([A⟨t+1⟩] − [A⟨t⟩])` (sign `+` for
    /// `t ≥ 0`) and additivity over disjoint pieces.
    pub fn of_set(set: &FinSet) -> Self {
        let mut c = K0Class::basis(0);
        for t in set.iter() {
            let sign = if t >= 0 { 1 } else { -1 };
            c.add_term(t + 1, sign);
            c.add_term(t, -sign);
        }
        c
    }

    pub fn of_sum(sum: &ProjectiveSum) -> Self {
        sum.sets().iter().map(K0Class::of_set).fold(K0Class::zero(), |a, b| &a + &b)
    }

    /// `Σ c_J [ι_J A]`.
    pub fn from_combination<'a>(terms: impl IntoIterator<Item = (&'a FinSet, i64)>) -> Self {
        terms
            .into_iter()
            .fold(K0Class::zero(), |acc, (set, c)| &acc + &K0Class::of_set(set).scale(c))
    }

    pub fn scale(&self, k: i64) -> Self {
        K0Class::from_coefficients(self.coefficients.iter().map(|(&n, &v)| (n, k * v)))
    }

    pub fn rank(&self) -> i64 {
        self.coefficients.values().sum()
    }

    /// The image in `K_0/([A])`: the coefficient of `[A]` is dropped.
    pub fn reduced(&self) -> Self {
        let mut c = self.clone();
        c.coefficients.remove(&0);
        c
    }
}

impl Add for &K0Class {
    type Output = K0Class;
    fn add(self, rhs: &K0Class) -> K0Class {
        let mut out = self.clone();
        for (&n, &v) in &rhs.coefficients {
            out.add_term(n, v);
        }
        out
    }
}

impl Neg for &K0Class {
    type Output = K0Class;
    fn neg(self) -> K0Class {
        self.scale(-1)
    }
}

impl Sub for &K0Class {
    type Output = K0Class;
    fn sub(self, rhs: &K0Class) -> K0Class {
        self + &-rhs
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (k, (n, c)) in self.coefficients.iter().enumerate() {
            let (sign, abs) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            match (k, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            write!(f, "[A<{n}>]")?;
        }
        Ok(())
    }
}

impl Serialize for K0Class {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<String, i64> =
            self.coefficients.iter().map(|(n, c)| (n.to_string(), *c)).collect();
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for K0Class {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let m = BTreeMap::<String, i64>::deserialize(d)?;
        let terms = m
            .into_iter()
            .map(|(k, v)| k.parse::<i64>().map(|n| (n, v)).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(K0Class::from_coefficients(terms))
    }
}

/// `θ`: `[ι_J A] ↦ ι_J`, well defined on `K_0/([A])` and factoring through
/// reduction mod 2. Equals `ι_Δ` where `Δ` is the sum of `Δ_n` over odd `c_n`.
pub fn theta_map(c: &K0Class) -> PicElement {
    let set = c
        .coefficients
        .iter()
        .filter(|(_, &v)| v % 2 != 0)
        .fold(FinSet::new(), |acc, (&n, _)| acc ^ FinSet::shift_delta(n));
    PicElement::iota(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s<const N: usize>(a: [i64; N]) -> FinSet {
        FinSet::from(a)
    }

    fn sum<const N: usize>(sets: [FinSet; N]) -> ProjectiveSum {
        ProjectiveSum::of_sets(sets)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_sum(&sum([s([1, 3]), s([0, 1, 2])])), sum([s([1]), s([0, 1, 2, 3])]));
        assert_eq!(normalize_sum(&sum([s([5, -2])])), sum([s([5, -2])]));
        assert_eq!(normalize_sum(&sum([s([0]), s([1])])), sum([FinSet::new(), s([0, 1])]));
        let p = ProjectiveSum::of_shifts([3, -1]);
        assert_eq!(normalize_sum(&p), sum([FinSet::new(), s([-1, 0, 1, 2])]));
    }

    #[test]
    fn iso_examples() {
        let p = sum([s([1, 3]), s([0, 1, 2]), s([0])]);
        let q = sum([s([0, 1, 2, 3]), s([0, 1]), FinSet::new()]);
        assert!(iso_test(&p, &q));
        assert!(!iso_test(&p, &ProjectiveSum::of_shifts([4, 2])));
        assert!(!iso_test(&sum([s([0])]), &sum([FinSet::new()])));
        assert!(iso_test(&p, &p));
        assert!(iso_test(&sum([s([0])]), &ProjectiveSum::of_shifts([1])));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(stably_free_witness(&s([1, 3])).unwrap(), (vec![3, 1], vec![4, 2, 0]));
        assert_eq!(stably_free_witness(&FinSet::new()).unwrap(), (vec![], vec![0]));
        assert_eq!(stably_free_witness(&s([1])).unwrap(), (vec![1], vec![2, 0]));
        assert!(stably_free_witness(&s([0, 2])).is_err());
        for set in [s([1]), s([1, 3]), s([2, 3, 7]), s([1, 2, 4, 5, 9])] {
            let (adds, result) = stably_free_witness(&set).unwrap();
            let lhs = ProjectiveSum::new(vec![Summand::iota(set)]).direct_sum(&ProjectiveSum::of_shifts(adds));
            assert!(iso_test(&lhs, &ProjectiveSum::of_shifts(result)));
        }
    }

    #[test]
    fn no_single_complement() {
        assert_eq!(single_complement_search(&s([1, 3]), 8), None);
        // a single interval does have one
        assert!(single_complement_search(&s([1, 2]), 4).is_some());
    }

    #[test]
    fn theta_examples() {
        let j = s([0, 3]);
        let c = &K0Class::of_set(&j) - &K0Class::basis(0);
        assert_eq!(theta_map(&c), PicElement::iota(j.clone()));
        assert!(theta_map(&(&K0Class::of_set(&j).scale(2) - &K0Class::basis(0).scale(2))).is_identity());
        assert!(theta_map(&K0Class::zero()).is_identity());
        assert_eq!(theta_map(&c.reduced()), theta_map(&c));
    }

    #[test]
    fn class_of_shift() {
        for m in -4..=4 {
            assert_eq!(K0Class::of_set(&FinSet::shift_delta(m)), K0Class::basis(m));
        }
    }

    #[test]
    fn summand_parse() {
        assert_eq!("A<3>".parse::<Summand>().unwrap(), Summand::free(3));
        assert_eq!("i{1,3}A".parse::<Summand>().unwrap(), Summand::iota(s([1, 3])));
        assert_eq!("{0} < -2 >".parse::<Summand>().unwrap(), Summand::new(s([0]), -2));
        assert!("B".parse::<Summand>().is_err());
        let p: ProjectiveSum = "i{1,3}A + A<3> + A<1>".parse().unwrap();
        assert_eq!(p.to_string().parse::<ProjectiveSum>().unwrap(), p);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v[0]["J"], serde_json::json!([1, 3]));
        assert_eq!(v[1]["shift"], 3);
    }

    #[test]
    fn k0_json() {
        let c = K0Class::from_coefficients([(-1, 2), (3, -1)]);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v, serde_json::json!({"-1": 2, "3": -1}));
        assert_eq!(serde_json::from_value::<K0Class>(v).unwrap(), c);
        assert_eq!(c.to_string(), "2[A<-1>] - [A<3>]");
    }

    fn arb_set() -> impl Strategy<Value = FinSet> {
        prop::collection::btree_set(-4i64..=4, 0..5).prop_map(|b| b.into_iter().collect())
    }

    fn arb_sum() -> impl Strategy<Value = ProjectiveSum> {
        prop::collection::vec((arb_set(), -3i64..=3), 0..5)
            .prop_map(|v| ProjectiveSum::new(v.into_iter().map(|(j, s)| Summand::new(j, s)).collect()))
    }

    proptest! {
        #[test]
        fn normal_form_is_chain_and_keeps_counts(p in arb_sum()) {
            let n = normalize_sum(&p);
            prop_assert!(n.is_chain());
            prop_assert_eq!(n.rank(), p.rank());
            prop_assert_eq!(n.membership_counts(), p.membership_counts());
            prop_assert_eq!(normalize_sum(&n), n.clone());
            prop_assert_eq!(n, chain_from_counts(&p));
        }

        #[test]
        fn confluent(p in arb_sum(), picks in prop::collection::vec(0usize..100, 64)) {
            let mut it = picks.into_iter().cycle();
            prop_assert_eq!(normalize_with(&p, |_| it.next().unwrap()), normalize_sum(&p));
        }

        #[test]
        fn cancellation(p in arb_sum(), q in arb_sum(), q2 in arb_sum(), same in any::<bool>()) {
            let q2 = if same { normalize_sum(&q) } else { q2 };
            prop_assert_eq!(iso_test(&p.direct_sum(&q), &p.direct_sum(&q2)), iso_test(&q, &q2));
        }

        #[test]
        fn iso_iff_same_class(p in arb_sum(), q in arb_sum()) {
            prop_assert_eq!(iso_test(&p, &q), K0Class::of_sum(&p) == K0Class::of_sum(&q) && p.rank() == q.rank());
        }

        #[test]
        fn theta_is_homomorphism(p in arb_sum(), q in arb_sum()) {
            let a = K0Class::of_sum(&p);
            let b = K0Class::of_sum(&q);
            prop_assert_eq!(theta_map(&(&a + &b)), theta_map(&a).compose(&theta_map(&b)));
            prop_assert_eq!(theta_map(&(&a - &b)), theta_map(&a).compose(&theta_map(&b)));
            prop_assert!(theta_map(&a).is_even() && theta_map(&a).shift_exponent() == 0);
        }

        #[test]
        fn theta_hits_every_iota(j in arb_set()) {
            let c = &K0Class::of_set(&j) - &K0Class::basis(0);
            prop_assert_eq!(theta_map(&c), PicElement::iota(j));
        }
    }
}
