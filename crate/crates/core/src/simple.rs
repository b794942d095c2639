//! Graded simple A-modules up to isomorphism.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{parse_rat, rat_to_string, Rat};

/// `X(n)` and `Y(n)` are the shifted simples `X⟨n⟩`, `Y⟨n⟩`, both supported
/// at `−n`. `M(λ)` is `M_λ = A/(z+λ)A` for a non-integral rational `λ`,
/// supported at `−λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SimpleLabel {
    X { n: i64 },
    Y { n: i64 },
    M {
        #[serde(with = "rat_string")]
        lambda: Rat,
    },
}

mod rat_string {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        use serde::de::Error as _;
        let s = String::deserialize(d)?;
        let q = parse_rat(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))?;
        if q.is_integer() {
            return Err(D::Error::custom("M-label needs a non-integral parameter"));
        }
        Ok(q)
    }
}

impl SimpleLabel {
    pub fn x(n: i64) -> Self {
        SimpleLabel::X { n }
    }

    pub fn y(n: i64) -> Self {
        SimpleLabel::Y { n }
    }

    pub fn m(lambda: Rat) -> Result<Self> {
        if lambda.is_integer() {
            return Err(Error::invalid(format!(
                "M-label needs a non-integral parameter, got {}",
                rat_to_string(&lambda)
            )));
        }
        Ok(SimpleLabel::M { lambda })
    }

    /// The point of `k` where the simple is supported.
    pub fn support(&self) -> Rat {
        match self {
            SimpleLabel::X { n } | SimpleLabel::Y { n } => Rat::from_integer((-n).into()),
            SimpleLabel::M { lambda } => -lambda.clone(),
        }
    }

    pub fn is_integral(&self) -> bool {
        !matches!(self, SimpleLabel::M { .. })
    }
}

/// `dim ext¹(S, T)` in gr-A for graded simples.
///
/// Nonzero exactly for the two cross pairs `(X(n), Y(n))`, `(Y(n), X(n))` and
/// for `(M_λ, M_λ)`, where it is one-dimensional.
pub fn ext_dim_simples(s: &SimpleLabel, t: &SimpleLabel) -> u32 {
    use SimpleLabel::*;
    match (s, t) {
        (X { n: a }, Y { n: b }) | (Y { n: a }, X { n: b }) => u32::from(a == b),
        (M { lambda: a }, M { lambda: b }) => u32::from(a == b),
        _ => 0,
    }
}

/// `dim hom(S, T)` in gr-A: simples have only scalar endomorphisms.
pub fn hom_dim_simples(s: &SimpleLabel, t: &SimpleLabel) -> u32 {
    u32::from(s == t)
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleLabel::X { n } => write!(f, "X({n})"),
            SimpleLabel::Y { n } => write!(f, "Y({n})"),
            SimpleLabel::M { lambda } => write!(f, "M({})", rat_to_string(lambda)),
        }
    }
}

impl fmt::Debug for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SimpleLabel {
    type Err = Error;

    /// Accepts `X(n)`, `Y(n)` and `M(p/q)`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse {
            position: 0,
            message: format!("expected X(n), Y(n) or M(p/q), got {s:?}"),
        };
        let kind = t.chars().next().ok_or_else(bad)?;
        let inner = t
            .get(1..)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        match kind {
            'X' | 'x' => Ok(SimpleLabel::x(inner.parse().map_err(|_| bad())?)),
            'Y' | 'y' => Ok(SimpleLabel::y(inner.parse().map_err(|_| bad())?)),
            'M' | 'm' => SimpleLabel::m(parse_rat(inner).ok_or_else(bad)?),
            _ => Err(bad()),
        }
    }
}

/// Non-integral rationals with denominator 2 or 3 in `(−4, 4)`, for sweeps.
pub fn sample_non_integers() -> Vec<Rat> {
    let mut out = Vec::new();
    for den in [2i64, 3] {
        for num in -7i64..=7 {
            let q = Rat::new(num.into(), den.into());
            if !q.is_integer() && !out.contains(&q) {
                out.push(q);
            }
        }
    }
    out
}
