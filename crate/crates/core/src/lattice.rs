//! Rank-one graded right A-submodules of `D`, stored degreewise.
//!
//! A lattice `L` has `L_m = g_m(z)·k[z]·x^m` for monic rational functions
//! `g_m`. Outside a finite window `[lo, hi]` the tails are forced:
//! `g_m = g_hi` for `m > hi`, and `g_m = g_{m+1}·(z+m)` for `m < lo`.
//!
//! Internally each `g_m` is stored relative to the generator `a_m` of `A`
//! itself (`a_m = 1` for `m ≥ 0`, `a_m = (z−1)⋯(z+m)` for `m < 0`). With the
//! window pinned to contain 0, both tails of `h_m = g_m / a_m` are constant,
//! so degrees stay small and equality of values is equality of lattices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::poly::{Poly, Rat};
use crate::ratfunc::RationalPoly;
use crate::simple::SimpleLabel;
use crate::skew::SkewElement;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedLattice {
    lo: i64,
    rel: Vec<RationalPoly>,
}

fn lin(a: i64) -> RationalPoly {
    RationalPoly::linear(a)
}

/// `∏_{k ∈ [lo, hi)} (z+k)`.
fn interval_product(lo: i64, hi: i64) -> Poly {
    Poly::product_of_linear(lo..hi)
}

/// `a_m`, the degree-`m` generator of `A`.
fn unit_generator(m: i64) -> Poly {
    interval_product(m, 0)
}

/// `a_{m−s}(z+s) / a_m`, the relative generator of `x^s·A` in degree `m`.
fn shift_ratio(m: i64, s: i64) -> RationalPoly {
    RationalPoly::from_coprime(
        interval_product(m.max(0), s),
        interval_product(m.max(s), 0),
    )
}

/// `a_m / a_{m+1}`: `z+m` below zero and `1` from zero on.
fn step(m: i64) -> RationalPoly {
    if m < 0 {
        lin(m)
    } else {
        RationalPoly::one()
    }
}

impl GradedLattice {
    /// Builds a lattice from generators `g_lo, g_{lo+1}, …`, read with the
    /// tail rules above.
    ///
    /// Generators are normalized to monic form. Module conditions are not
    /// checked here; see [`GradedLattice::is_a_module`].
    pub fn from_generators(lo: i64, gens: Vec<RationalPoly>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::invalid("a lattice needs at least one generator"));
        }
        if gens.iter().any(RationalPoly::is_zero) {
            return Err(Error::invalid("lattice generators must be nonzero"));
        }
        let hi = lo + gens.len() as i64 - 1;
        let g = |m: i64| -> RationalPoly {
            if m > hi {
                gens[gens.len() - 1].clone()
            } else if m >= lo {
                gens[(m - lo) as usize].clone()
            } else {
                &gens[0] * &RationalPoly::from(interval_product(m, lo))
            }
        };
        Ok(Self::build(lo.min(0), hi.max(0), |m| {
            &g(m) / &RationalPoly::from(unit_generator(m))
        }))
    }

    /// Trims a relative window `[lo, lo + rel.len())` containing 0.
    fn canonical(mut lo: i64, mut rel: Vec<RationalPoly>) -> Self {
        debug_assert!(lo <= 0 && lo + rel.len() as i64 > 0);
        while lo + (rel.len() as i64) - 1 > 0 && rel[rel.len() - 2] == rel[rel.len() - 1] {
            rel.pop();
        }
        let mut start = 0;
        while lo < 0 && rel[start] == rel[start + 1] {
            start += 1;
            lo += 1;
        }
        rel.drain(..start);
        GradedLattice { lo, rel }
    }

    /// Relative generators over `[lo, hi] ∋ 0` from a closure.
    fn build(lo: i64, hi: i64, f: impl Fn(i64) -> RationalPoly) -> Self {
        let (lo, hi) = (lo.min(0), hi.max(0));
        Self::canonical(lo, (lo..=hi).map(|m| f(m).monic()).collect())
    }

    /// The Weyl algebra `A` itself: `g_m = 1` for `m ≥ 0`.
    pub fn unit() -> Self {
        GradedLattice {
            lo: 0,
            rel: vec![RationalPoly::one()],
        }
    }

    /// The right A-submodule of `D` generated by homogeneous elements `c·x^d`.
    pub fn generated_by(gens: &[(i64, RationalPoly)]) -> Result<Self> {
        let gens: Vec<_> = gens.iter().filter(|(_, c)| !c.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::invalid("a lattice needs a nonzero generator"));
        }
        let lo = gens.iter().map(|(d, _)| *d).min().expect("nonempty");
        let hi = gens.iter().map(|(d, _)| *d).max().expect("nonempty");
        Ok(Self::build(lo, hi, |m| {
            gens.iter()
                .map(|(d, c)| c * &shift_ratio(m, *d))
                .reduce(|a, b| RationalPoly::ideal_sum(&a, &b))
                .expect("nonempty")
        }))
    }

    /// Lowest degree of the stored window (never above 0).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest degree of the stored window (never below 0).
    pub fn hi(&self) -> i64 {
        self.lo + self.rel.len() as i64 - 1
    }

    /// `h_m = g_m / a_m`.
    fn relative(&self, m: i64) -> &RationalPoly {
        let k = (m - self.lo).clamp(0, self.rel.len() as i64 - 1);
        &self.rel[k as usize]
    }

    /// `g_m`, including the forced tails.
    pub fn generator(&self, m: i64) -> RationalPoly {
        self.relative(m) * &RationalPoly::from(unit_generator(m))
    }

    /// The stored window as `(degree, g_m)` pairs.
    pub fn window(&self) -> impl Iterator<Item = (i64, RationalPoly)> + '_ {
        (self.lo..=self.hi()).map(|m| (m, self.generator(m)))
    }

    fn union_window(&self, other: &GradedLattice) -> (i64, i64) {
        (self.lo.min(other.lo), self.hi().max(other.hi()))
    }

    /// Degreewise intersection.
    pub fn intersect(&self, other: &GradedLattice) -> GradedLattice {
        let (lo, hi) = self.union_window(other);
        Self::build(lo, hi, |m| {
            RationalPoly::ideal_intersection(self.relative(m), other.relative(m))
        })
    }

    /// Degreewise sum.
    pub fn sum(&self, other: &GradedLattice) -> GradedLattice {
        let (lo, hi) = self.union_window(other);
        Self::build(lo, hi, |m| RationalPoly::ideal_sum(self.relative(m), other.relative(m)))
    }

    /// `f·L` for a nonzero degree-0 element `f`.
    pub fn scale(&self, f: &RationalPoly) -> Result<GradedLattice> {
        if f.is_zero() {
            return Err(Error::invalid("cannot scale a lattice by zero"));
        }
        Ok(Self::canonical(self.lo, self.rel.iter().map(|h| (h * f).monic()).collect()))
    }

    /// `x^s·L`, which is isomorphic to `L⟨s⟩`.
    pub fn shift(&self, s: i64) -> GradedLattice {
        Self::build(self.lo + s.min(0), self.hi() + s.max(0), |m| {
            &self.relative(m - s).shift(s) * &shift_ratio(m, s)
        })
    }

    /// Closure under `·x` and `·y` at every degree.
    ///
    /// The tails satisfy both conditions automatically, so it suffices to look
    /// one step past each end of the window.
    pub fn is_a_module(&self) -> bool {
        (self.lo - 1..=self.hi() + 1).all(|m| {
            let h = self.relative(m);
            // g_{m+1} | g_m
            let closed_x = self.relative(m + 1).divides(&(h * &step(m)));
            // g_{m-1} | g_m·(z+m−1)
            let closed_y =
                (self.relative(m - 1) * &step(m - 1)).divides(&(h * &lin(m - 1)));
            closed_x && closed_y
        })
    }

    /// Whether `c·x^m ∈ L` for every term of `u`.
    pub fn contains(&self, u: &SkewElement) -> bool {
        u.terms().iter().all(|(&m, c)| self.generator(m).divides(c))
    }

    pub fn is_subset(&self, other: &GradedLattice) -> bool {
        let (lo, hi) = self.union_window(other);
        (lo..=hi).all(|m| other.relative(m).divides(self.relative(m)))
    }

    /// Whether `g_j = g_{j+1}`, i.e. `F_j(L) = X(j)`.
    fn x_side(&self, j: i64) -> bool {
        &(self.relative(j) * &step(j)) == self.relative(j + 1)
    }

    /// `F_j(L)`: `X(j)` when `g_j = g_{j+1}`, and `Y(j)` when `g_j = (z+j)·g_{j+1}`.
    pub fn simple_factor(&self, j: i64) -> SimpleLabel {
        if self.x_side(j) {
            SimpleLabel::x(j)
        } else {
            SimpleLabel::y(j)
        }
    }

    /// `D(L) = {j : F_j(L) = X(j)}`, encoded against `[0, ∞)`.
    pub fn dset(&self) -> DSet {
        let exceptions = (self.lo - 1..=self.hi() + 1)
            .filter(|&j| self.x_side(j) != (j >= 0))
            .collect();
        DSet { exceptions }
    }

    /// `ι_j L`: the maximal submodule whose quotient is `F_j(L)`.
    pub fn involution(&self, j: i64) -> GradedLattice {
        let x_side = self.x_side(j);
        let factor = lin(j);
        Self::build(self.lo.min(j), self.hi().max(j + 1), |m| {
            let h = self.relative(m);
            if (m <= j) == x_side {
                h * &factor
            } else {
                h.clone()
            }
        })
    }

    /// `ι_J L`, one index at a time.
    pub fn involution_set(&self, set: &FinSet) -> GradedLattice {
        set.iter().fold(self.clone(), |l, j| l.involution(j))
    }

    /// `ι_J^{-1} L = f_J^{-1}·ι_J L` with `f_J = ∏_{j∈J}(z+j)`.
    pub fn inverse_involution_set(&self, set: &FinSet) -> GradedLattice {
        let f_j = RationalPoly::from(Poly::product_of_linear(set.iter()));
        self.involution_set(set)
            .scale(&f_j.recip().expect("nonzero"))
            .expect("nonzero")
    }
}

/// The lattice of `ι_i A`, read off from its generators: `(z+i)` and `x^{i+1}`
/// for `i ≥ 1`, `x` for `i = 0`, `y` for `i = −1`, `(z+i)` and `y^{−i}` for
/// `i ≤ −2`.
pub fn single_iota_lattice(i: i64) -> GradedLattice {
    let one = RationalPoly::one;
    let gens = match i {
        0 => vec![(1, one())],
        -1 => vec![(-1, lin(-1))],
        i if i >= 1 => vec![(0, lin(i)), (i + 1, one())],
        _ => {
            let y_pow = SkewElement::y_pow(-i);
            let (&d, c) = y_pow.terms().iter().next().expect("nonzero");
            vec![(0, lin(i)), (d, c.clone())]
        }
    };
    GradedLattice::generated_by(&gens).expect("nonzero generators")
}

/// The lattice of `ι_J(A)⟨shift⟩`: the intersection of the `ι_i A` for
/// `i ∈ J`, then shifted.
pub fn iota_lattice(set: &FinSet, shift: i64) -> GradedLattice {
    set.iter()
        .map(single_iota_lattice)
        .fold(GradedLattice::unit(), |acc, l| acc.intersect(&l))
        .shift(shift)
}

pub fn lattice_intersect(a: &GradedLattice, b: &GradedLattice) -> GradedLattice {
    a.intersect(b)
}

pub fn lattice_scale(l: &GradedLattice, f: &RationalPoly) -> Result<GradedLattice> {
    l.scale(f)
}

pub fn is_a_module(l: &GradedLattice) -> bool {
    l.is_a_module()
}

pub fn simple_factor(l: &GradedLattice, j: i64) -> SimpleLabel {
    l.simple_factor(j)
}

/// Monic generator of `{q ∈ k(z) : q·P ⊆ Q}`.
pub fn hom_generator(p: &GradedLattice, q: &GradedLattice) -> RationalPoly {
    let (lo, hi) = p.union_window(q);
    (lo..=hi)
        .map(|m| q.relative(m) / p.relative(m))
        .reduce(|a, b| RationalPoly::ideal_intersection(&a, &b))
        .expect("nonempty window")
}

/// `h·g^P_m / g^Q_m` for the maximal embedding `h`: a polynomial whose roots
/// describe `Q_m / h·P_m`.
fn cokernel_orders<'a>(p: &'a GradedLattice, q: &'a GradedLattice) -> impl Fn(i64) -> Poly + 'a {
    let h = hom_generator(p, q);
    move |m| {
        let r = &(&h * p.relative(m)) / q.relative(m);
        r.as_polynomial().expect("maximal embedding lands in Q").clone()
    }
}

/// Composition factors of `Q / h·P` for the maximal embedding `h`.
///
/// An integral point `−n` contributes `X(n)` with the multiplicity of `−n` in
/// degree `n` and `Y(n)` with its multiplicity in degree `n+1`. Any other root
/// `−λ` is reported as `M(λ)` with its largest multiplicity over all degrees.
pub fn cokernel_factors(p: &GradedLattice, q: &GradedLattice) -> Vec<(SimpleLabel, u32)> {
    let order = cokernel_orders(p, q);
    let (lo, hi) = p.union_window(q);
    let mut integral = BTreeSet::new();
    let mut other: BTreeMap<Rat, u32> = BTreeMap::new();
    for m in lo - 1..=hi + 1 {
        for (root, mult) in order(m).rational_roots() {
            if root.is_integer() {
                let n: i64 = (-root.to_integer()).try_into().expect("small root");
                integral.insert(n);
            } else {
                let e = other.entry(root).or_insert(0);
                *e = (*e).max(mult);
            }
        }
    }
    let mut out = Vec::new();
    for n in integral {
        let point = Rat::from_integer((-n).into());
        let xs = order(n).multiplicity(&point);
        let ys = order(n + 1).multiplicity(&point);
        if xs > 0 {
            out.push((SimpleLabel::x(n), xs));
        }
        if ys > 0 {
            out.push((SimpleLabel::y(n), ys));
        }
    }
    for (root, mult) in other {
        out.push((SimpleLabel::m(-root).expect("non-integral"), mult));
    }
    out
}

/// The support multiset of `Q / h·P`: `(point, count)` sorted by point.
pub fn cokernel_support(p: &GradedLattice, q: &GradedLattice) -> Vec<(Rat, u32)> {
    let mut acc: BTreeMap<Rat, u32> = BTreeMap::new();
    for (label, count) in cokernel_factors(p, q) {
        *acc.entry(label.support()).or_insert(0) += count;
    }
    acc.into_iter().collect()
}

pub fn to_dset(set: &FinSet, shift: i64) -> DSet {
    DSet {
        exceptions: &set.translate(shift) ^ &FinSet::shift_delta(shift),
    }
}

/// An isomorphism class of rank-one graded projectives, via the set
/// `D(P) = [0, ∞) ⊕ exceptions` of degrees `j` with `F_j(P) = X(j)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DSet {
    pub exceptions: FinSet,
}

impl DSet {
    pub fn new(exceptions: FinSet) -> Self {
        DSet { exceptions }
    }

    /// `D(A) = [0, ∞)`.
    pub fn free() -> Self {
        DSet::default()
    }

    pub fn contains(&self, j: i64) -> bool {
        (j >= 0) != self.exceptions.contains(j)
    }

    /// `D + s`.
    pub fn shift(&self, s: i64) -> DSet {
        to_dset(&self.exceptions, s)
    }

    /// `D ⊕ J`.
    pub fn flip(&self, set: &FinSet) -> DSet {
        DSet {
            exceptions: &self.exceptions ^ set,
        }
    }

    /// `Z ∖ (−1 − D)`.
    pub fn reflect(&self) -> DSet {
        DSet {
            exceptions: self.exceptions.reflect(),
        }
    }

    /// The smallest element of `D`.
    pub fn min_element(&self) -> i64 {
        let below = self.exceptions.iter().filter(|&j| j < 0).min();
        match below {
            Some(j) => j,
            None => (0..).find(|&j| !self.exceptions.contains(j)).expect("finite"),
        }
    }
}

impl fmt::Display for DSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[0,∞) ⊕ {}", self.exceptions)
    }
}

impl fmt::Display for GradedLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m < {}: g_m = g_(m+1)·(z+m)", self.lo)?;
        for (m, g) in self.window() {
            writeln!(f, "m = {m}: {g}")?;
        }
        write!(f, "m > {}: g_m = g_{}", self.hi(), self.hi())
    }
}

impl fmt::Debug for GradedLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.window().map(|(m, g)| (m, g.to_string())))
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct RawLattice {
    lo: i64,
    hi: i64,
    gens: BTreeMap<String, RationalPoly>,
}

impl Serialize for GradedLattice {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawLattice {
            lo: self.lo,
            hi: self.hi(),
            gens: self.window().map(|(m, g)| (m.to_string(), g)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedLattice {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawLattice::deserialize(d)?;
        if raw.hi < raw.lo {
            return Err(D::Error::custom("lattice window has hi < lo"));
        }
        let gens = (raw.lo..=raw.hi)
            .map(|m| {
                raw.gens
                    .get(&m.to_string())
                    .cloned()
                    .ok_or_else(|| D::Error::custom(format!("missing generator for degree {m}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if raw.gens.len() != gens.len() {
            return Err(D::Error::custom("generator outside the window"));
        }
        GradedLattice::from_generators(raw.lo, gens).map_err(D::Error::custom)
    }
}
