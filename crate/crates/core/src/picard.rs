//! The Picard group of gr-A in normal form `S^b ∘ ι_J ∘ ω^ε`.
//!
//! `S` is the shift, `ι_J` the involution swapping `X⟨j⟩ ↔ Y⟨j⟩` for `j ∈ J`,
//! and `ω` the odd autoequivalence induced by `x ↦ y, y ↦ −x`. Composition is
//! right to left, as for functors.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::lattice::DSet;
use crate::poly::Rat;
use crate::simple::SimpleLabel;
use crate::zfin::AdmissiblePair;

/// `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(a: i64) -> Result<Sign> {
        match a {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::invalid(format!("sign must be 1 or -1, got {a}"))),
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// `(a, b, J)` denoting `S^b ∘ ι_J` when `a = +1` and `S^b ∘ ι_J ∘ ω` when
/// `a = −1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPic", into = "RawPic")]
pub struct PicElement {
    a: Sign,
    b: i64,
    j: FinSet,
}

#[derive(Serialize, Deserialize)]
struct RawPic {
    a: i64,
    b: i64,
    #[serde(rename = "J")]
    j: FinSet,
}

impl TryFrom<RawPic> for PicElement {
    type Error = Error;
    fn try_from(raw: RawPic) -> Result<Self> {
        Ok(PicElement {
            a: Sign::from_value(raw.a)?,
            b: raw.b,
            j: raw.j,
        })
    }
}

impl From<PicElement> for RawPic {
    fn from(f: PicElement) -> Self {
        RawPic {
            a: f.a.value(),
            b: f.b,
            j: f.j,
        }
    }
}

/// `J ↦ J` for `+1` and `J ↦ −1 − J` for `−1`.
fn tau(a: Sign, set: &FinSet) -> FinSet {
    match a {
        Sign::Plus => set.clone(),
        Sign::Minus => set.reflect(),
    }
}

impl PicElement {
    pub fn new(a: Sign, b: i64, j: FinSet) -> Self {
        PicElement { a, b, j }
    }

    pub fn identity() -> Self {
        PicElement::new(Sign::Plus, 0, FinSet::new())
    }

    /// `S^b`.
    pub fn shift(b: i64) -> Self {
        PicElement::new(Sign::Plus, b, FinSet::new())
    }

    /// `ι_J`.
    pub fn iota(j: FinSet) -> Self {
        PicElement::new(Sign::Plus, 0, j)
    }

    /// `ω`.
    pub fn omega() -> Self {
        PicElement::new(Sign::Minus, 0, FinSet::new())
    }

    /// `S^n ∘ ι_J` for an admissible pair.
    pub fn from_pair(p: &AdmissiblePair) -> Self {
        PicElement::new(Sign::Plus, p.n(), p.set().clone())
    }

    pub fn sign(&self) -> Sign {
        self.a
    }

    /// The exponent of `S` in the normal form.
    pub fn shift_exponent(&self) -> i64 {
        self.b
    }

    pub fn twist(&self) -> &FinSet {
        &self.j
    }

    pub fn is_identity(&self) -> bool {
        *self == PicElement::identity()
    }

    pub fn is_even(&self) -> bool {
        self.a == Sign::Plus
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PicElement) -> PicElement {
        let ab = self.a.value() * other.b;
        PicElement {
            a: self.a * other.a,
            b: self.b + ab,
            j: &self.j.translate(-ab) ^ &tau(self.a, &other.j),
        }
    }

    pub fn inverse(&self) -> PicElement {
        match self.a {
            Sign::Plus => PicElement::new(Sign::Plus, -self.b, self.j.translate(self.b)),
            Sign::Minus => PicElement::new(Sign::Minus, self.b, self.j.translate(self.b).reflect()),
        }
    }

    /// `self^e` for any integer `e`.
    pub fn pow(&self, e: i64) -> PicElement {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = PicElement::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &PicElement) -> PicElement {
        g.compose(self).compose(&g.inverse())
    }

    /// `(a, rank)`: the image in `D∞`, acting on indices of simples by
    /// `n ↦ a·n + rank`. For odd elements the rank is `b − 1`, since `ω` itself
    /// has rank `−1`.
    pub fn sign_rank(&self) -> (i64, i64) {
        match self.a {
            Sign::Plus => (1, self.b),
            Sign::Minus => (-1, self.b - 1),
        }
    }

    /// The rank `b` of `sign_rank`.
    pub fn rank(&self) -> i64 {
        self.sign_rank().1
    }

    /// Generative exactly when even of nonzero rank.
    pub fn is_generative(&self) -> bool {
        self.a == Sign::Plus && self.b != 0
    }

    pub fn act_on_simple(&self, s: &SimpleLabel) -> SimpleLabel {
        let after_omega = match (self.a, s) {
            (Sign::Plus, _) => s.clone(),
            (Sign::Minus, SimpleLabel::X { n }) => SimpleLabel::y(-n - 1),
            (Sign::Minus, SimpleLabel::Y { n }) => SimpleLabel::x(-n - 1),
            (Sign::Minus, SimpleLabel::M { lambda }) => SimpleLabel::M {
                lambda: -lambda - Rat::from_integer(1.into()),
            },
        };
        let after_iota = match after_omega {
            SimpleLabel::X { n } if self.j.contains(n) => SimpleLabel::y(n),
            SimpleLabel::Y { n } if self.j.contains(n) => SimpleLabel::x(n),
            other => other,
        };
        match after_iota {
            SimpleLabel::X { n } => SimpleLabel::x(n + self.b),
            SimpleLabel::Y { n } => SimpleLabel::y(n + self.b),
            SimpleLabel::M { lambda } => SimpleLabel::M {
                lambda: lambda + Rat::from_integer(self.b.into()),
            },
        }
    }

    /// Image of a rank-one projective class.
    pub fn act_on_dset(&self, d: &DSet) -> DSet {
        let d = match self.a {
            Sign::Plus => d.clone(),
            Sign::Minus => d.reflect(),
        };
        d.flip(&self.j).shift(self.b)
    }

    /// Uniform random element with `|b| ≤ max_b` and `J` a random subset of
    /// `[lo, hi]` of size at most `max_len`.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        odd: bool,
        max_b: i64,
        (lo, hi): (i64, i64),
        max_len: usize,
    ) -> PicElement {
        let a = if odd && rng.gen_bool(0.5) { Sign::Minus } else { Sign::Plus };
        let b = rng.gen_range(-max_b..=max_b);
        let len = rng.gen_range(0..=max_len);
        let j = (0..len).map(|_| rng.gen_range(lo..=hi)).collect();
        PicElement { a, b, j }
    }
}

/// The sets `J_j = Γ_j ⊕ Δ_j` with `F^j A ≅ ι_{J_j} A` for `F = S^n ι_I`,
/// `0 < |j| ≤ window`.
pub fn coverage_witness(pair: &AdmissiblePair, window: i64) -> Result<BTreeMap<i64, FinSet>> {
    if window < 1 {
        return Err(Error::invalid("coverage window must be positive"));
    }
    let (i, n) = (pair.set(), pair.n());
    let mut out = BTreeMap::new();
    for j in (-window..=window).filter(|&j| j != 0) {
        let ks: Vec<i64> = if j > 0 { (1..=j).collect() } else { (j + 1..=0).collect() };
        let gamma = ks
            .iter()
            .fold(FinSet::new(), |acc, k| &acc ^ &i.translate(k * n));
        out.insert(j, &gamma ^ &FinSet::shift_delta(n * j));
    }
    Ok(out)
}

/// Whether the witness sets cover `[−n·window + n, n·window − n]`.
pub fn coverage_holds(pair: &AdmissiblePair, window: i64) -> Result<bool> {
    let sets = coverage_witness(pair, window)?;
    let n = pair.n();
    Ok((-n * window + n..=n * window - n).all(|t| sets.values().any(|s| s.contains(t))))
}

impl fmt::Display for PicElement {
    /// Expression syntax, e.g. `S^2 * i{0,2} * w`, or `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.b {
            0 => {}
            1 => parts.push("S".to_string()),
            b => parts.push(format!("S^{b}")),
        }
        if !self.j.is_empty() {
            parts.push(format!("i{}", self.j));
        }
        if self.a == Sign::Minus {
            parts.push("w".to_string());
        }
        if parts.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", parts.join(" * "))
        }
    }
}

impl fmt::Debug for PicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:+}, {}, {})", self.a.value(), self.b, self.j)
    }
}
