//! Rational functions in `z` over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{rat, Poly, Rat};

/// A reduced fraction `num / den` with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    num: Poly,
    den: Poly,
}

impl RationalPoly {
    /// Builds `num / den` in lowest terms. Fails when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("rational function with zero denominator"));
        }
        Ok(Self::reduce(num, den))
    }

    /// `num / den` for coprime `num` and monic `den`, skipping the gcd.
    pub(crate) fn from_coprime(num: Poly, den: Poly) -> Self {
        debug_assert!(den.is_monic() && num.gcd(&den).is_one());
        RationalPoly { num, den }
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalPoly::zero();
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let lead = den.leading().expect("nonzero").recip();
        RationalPoly {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn zero() -> Self {
        RationalPoly {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Poly::one().into()
    }

    pub fn z() -> Self {
        Poly::z().into()
    }

    pub fn constant(c: Rat) -> Self {
        Poly::constant(c).into()
    }

    /// `z + a`.
    pub fn linear(a: i64) -> Self {
        Poly::linear(a).into()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// The associate with monic numerator (and denominator).
    pub fn monic(&self) -> Self {
        RationalPoly {
            num: self.num.monic(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        RationalPoly::new(self.den.clone(), self.num.clone())
    }

    /// `f(z + m)`.
    pub fn shift(&self, m: i64) -> Self {
        let m = rat(m);
        Self::reduce(self.num.shift(&m), self.den.shift(&m))
    }

    /// Whether `self / other` is a polynomial, i.e. `other·k[z] ⊆ self·k[z]`
    /// as fractional ideals. Zero divides only zero.
    pub fn divides(&self, other: &RationalPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        (other / self).is_polynomial()
    }

    /// Monic generator of `a·k[z] ∩ b·k[z]`.
    pub fn ideal_intersection(a: &RationalPoly, b: &RationalPoly) -> RationalPoly {
        if a.is_zero() || b.is_zero() {
            return RationalPoly::zero();
        }
        let d = a.den.lcm(&b.den);
        let an = &a.num * &d.div_rem(&a.den).0;
        let bn = &b.num * &d.div_rem(&b.den).0;
        Self::reduce(an.lcm(&bn), d).monic()
    }

    /// Monic generator of `a·k[z] + b·k[z]`.
    pub fn ideal_sum(a: &RationalPoly, b: &RationalPoly) -> RationalPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let d = a.den.lcm(&b.den);
        let an = &a.num * &d.div_rem(&a.den).0;
        let bn = &b.num * &d.div_rem(&b.den).0;
        Self::reduce(an.gcd(&bn), d).monic()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_strings(), "den": self.den.to_strings() })
    }
}

impl From<Poly> for RationalPoly {
    fn from(p: Poly) -> Self {
        RationalPoly {
            num: p,
            den: Poly::one(),
        }
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        if self.den == rhs.den {
            return RationalPoly::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalPoly::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        self + &(-rhs)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        RationalPoly::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalPoly {
    type Output = RationalPoly;
    /// Panics when dividing by zero.
    fn div(self, rhs: &RationalPoly) -> RationalPoly {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalPoly::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let num = if self.num.is_constant() {
                self.num.to_string()
            } else {
                format!("({})", self.num)
            };
            write!(f, "{num}/({})", self.den)
        }
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct RawRationalPoly {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for RationalPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawRationalPoly {
            num: self.num.to_strings(),
            den: self.den.to_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawRationalPoly::deserialize(d)?;
        let num = Poly::from_strings(&raw.num).ok_or_else(|| D::Error::custom("bad coefficient"))?;
        let den = Poly::from_strings(&raw.den).ok_or_else(|| D::Error::custom("bad coefficient"))?;
        RationalPoly::new(num, den).map_err(D::Error::custom)
    }
}

impl Zero for RationalPoly {
    fn zero() -> Self {
        RationalPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: RationalPoly) -> RationalPoly {
        &self + &rhs
    }
}

impl Mul for RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: RationalPoly) -> RationalPoly {
        &self * &rhs
    }
}

impl One for RationalPoly {
    fn one() -> Self {
        RationalPoly::one()
    }
}
