//! Graded elements of the skew Laurent ring `D = k(z)[x, x⁻¹; σ]`, `σ(z) = z+1`.
//!
//! Elements are written `Σ c_m(z)·x^m` with coefficients on the left. The
//! only commutation rule needed is `x^m·f(z) = f(z+m)·x^m`. The Weyl algebra
//! sits inside `D` via `x ↦ x`, `y ↦ (z−1)·x⁻¹`, so that `z = xy`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::poly::Poly;
use crate::ratfunc::RationalPoly;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SkewElement {
    terms: BTreeMap<i64, RationalPoly>,
}

/// `f(z+m)`, the coefficient transport `x^m·f = f(z+m)·x^m`.
pub fn conjugate_by_power(f: &RationalPoly, m: i64) -> RationalPoly {
    f.shift(m)
}

/// `∏_{i=0}^{m−1} (z+i)`, the coefficient with `x^m = ∏(z+i)·y^{−m}`.
pub fn rising_factorial(m: i64) -> Poly {
    Poly::product_of_linear(0..m)
}

/// `∏_{i=1}^{r} (z−i)`, the coefficient with `y^r = ∏(z−i)·x^{−r}`.
pub fn falling_factorial(r: i64) -> Poly {
    Poly::product_of_linear((1..=r).map(|i| -i))
}

/// The factor `c` with `x^m = c·y^{−m}` (inverse of the `y^r` rule when `m < 0`).
pub fn x_to_y_factor(m: i64) -> RationalPoly {
    if m >= 0 {
        rising_factorial(m).into()
    } else {
        RationalPoly::new(Poly::one(), falling_factorial(-m)).expect("nonzero")
    }
}

impl SkewElement {
    pub fn zero() -> Self {
        SkewElement::default()
    }

    pub fn one() -> Self {
        SkewElement::monomial(RationalPoly::one(), 0)
    }

    /// `c(z)·x^m`.
    pub fn monomial(c: RationalPoly, m: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SkewElement { terms }
    }

    /// A degree-0 element `c(z)`.
    pub fn scalar(c: RationalPoly) -> Self {
        SkewElement::monomial(c, 0)
    }

    pub fn z() -> Self {
        SkewElement::scalar(RationalPoly::z())
    }

    pub fn x() -> Self {
        SkewElement::x_pow(1)
    }

    pub fn x_pow(m: i64) -> Self {
        SkewElement::monomial(RationalPoly::one(), m)
    }

    /// `y = (z−1)·x⁻¹`.
    pub fn y() -> Self {
        SkewElement::y_pow(1)
    }

    /// `y^r` for any integer `r`: `(z−1)⋯(z−r)·x^{−r}` when `r ≥ 0` and
    /// `(∏_{i=0}^{|r|−1}(z+i))⁻¹·x^{|r|}` when `r < 0`.
    pub fn y_pow(r: i64) -> Self {
        SkewElement::monomial(x_to_y_factor(-r).recip().expect("nonzero"), -r)
    }

    /// `h(z)·y^p`.
    pub fn y_form(h: RationalPoly, p: i64) -> Self {
        &SkewElement::scalar(h) * &SkewElement::y_pow(p)
    }

    pub fn terms(&self) -> &BTreeMap<i64, RationalPoly> {
        &self.terms
    }

    pub fn coefficient(&self, m: i64) -> RationalPoly {
        self.terms.get(&m).cloned().unwrap_or_else(RationalPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single `(degree, coefficient)` term of a nonzero homogeneous element.
    pub fn as_homogeneous(&self) -> Option<(i64, &RationalPoly)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&m, c)| (m, c))
        } else {
            None
        }
    }

    /// For a homogeneous `c·x^m`, the pair `(h, p)` with `c·x^m = h·y^p`.
    pub fn to_y_form(&self) -> Option<(RationalPoly, i64)> {
        let (m, c) = self.as_homogeneous()?;
        Some((c * &x_to_y_factor(m), -m))
    }

    /// Whether every term lies in the Weyl algebra: `c_m ∈ k[z]` for `m ≥ 0`
    /// and `(z−1)⋯(z−r) | c_{−r}` in `k[z]` for `r > 0`.
    pub fn weyl_membership(&self) -> bool {
        self.terms.iter().all(|(&m, c)| {
            if m >= 0 {
                c.is_polynomial()
            } else {
                let q = c / &RationalPoly::from(falling_factorial(-m));
                q.is_polynomial()
            }
        })
    }

    fn insert_add(terms: &mut BTreeMap<i64, RationalPoly>, m: i64, c: RationalPoly) {
        if c.is_zero() {
            return;
        }
        match terms.remove(&m) {
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    terms.insert(m, sum);
                }
            }
            None => {
                terms.insert(m, c);
            }
        }
    }

    /// `[u, v] = uv − vu`.
    pub fn commutator(&self, other: &SkewElement) -> SkewElement {
        &(self * other) - &(other * self)
    }

    pub fn scale(&self, c: &RationalPoly) -> SkewElement {
        &SkewElement::scalar(c.clone()) * self
    }

    pub fn pow(&self, e: u32) -> SkewElement {
        (0..e).fold(SkewElement::one(), |acc, _| &acc * self)
    }
}

/// The bilinear extension of `(f·x^m)(g·x^n) = f·g(z+m)·x^{m+n}`.
pub fn skew_multiply(u: &SkewElement, v: &SkewElement) -> SkewElement {
    let mut terms = BTreeMap::new();
    for (&m, f) in &u.terms {
        for (&n, g) in &v.terms {
            SkewElement::insert_add(&mut terms, m + n, f * &conjugate_by_power(g, m));
        }
    }
    SkewElement { terms }
}

impl Mul for &SkewElement {
    type Output = SkewElement;
    fn mul(self, rhs: &SkewElement) -> SkewElement {
        skew_multiply(self, rhs)
    }
}

impl Add for &SkewElement {
    type Output = SkewElement;
    fn add(self, rhs: &SkewElement) -> SkewElement {
        let mut terms = self.terms.clone();
        for (&m, c) in &rhs.terms {
            SkewElement::insert_add(&mut terms, m, c.clone());
        }
        SkewElement { terms }
    }
}

impl Neg for &SkewElement {
    type Output = SkewElement;
    fn neg(self) -> SkewElement {
        SkewElement {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for &SkewElement {
    type Output = SkewElement;
    fn sub(self, rhs: &SkewElement) -> SkewElement {
        self + &(-rhs)
    }
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match m {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·x")?,
                _ => write!(f, "({c})·x^{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewElement({self})")
    }
}

impl Serialize for SkewElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, &RationalPoly> =
            self.terms.iter().map(|(m, c)| (m.to_string(), c)).collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, RationalPoly>::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for (k, c) in raw {
            let m: i64 = k.parse().map_err(D::Error::custom)?;
            SkewElement::insert_add(&mut terms, m, c);
        }
        Ok(SkewElement { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lin(a: i64) -> RationalPoly {
        RationalPoly::linear(a)
    }

    #[test]
    fn weyl_relation() {
        let (x, y) = (SkewElement::x(), SkewElement::y());
        assert_eq!(&x * &y, SkewElement::z());
        assert_eq!(&y * &x, SkewElement::scalar(lin(-1)));
        assert_eq!(x.commutator(&y), SkewElement::one());
        assert_eq!(&x * &SkewElement::z(), SkewElement::monomial(lin(1), 1));
    }

    #[test]
    fn y_powers() {
        let y = SkewElement::y();
        for r in 0..5u32 {
            assert_eq!(y.pow(r), SkewElement::y_pow(r as i64));
        }
        assert_eq!(&SkewElement::y_pow(3) * &SkewElement::y_pow(-3), SkewElement::one());
        assert_eq!(&SkewElement::y_pow(-2) * &SkewElement::y_pow(2), SkewElement::one());
        // x^n = ∏(z+i)·y^{-n}
        for n in 0..5 {
            let rhs = SkewElement::y_form(rising_factorial(n).into(), -n);
            assert_eq!(SkewElement::x_pow(n), rhs);
        }
    }

    #[test]
    fn x_pow_times_y_pow_is_rising_factorial() {
        // x^m y^m = z(z+1)⋯(z+m−1); m = 2 by hand: x·z·y = x·y·(z+1) = z(z+1)
        assert_eq!(
            &SkewElement::x_pow(2) * &SkewElement::y_pow(2),
            SkewElement::scalar((&lin(0) * &lin(1)).clone())
        );
        for m in 1..=6 {
            let prod = &SkewElement::x_pow(m) * &SkewElement::y_pow(m);
            assert_eq!(prod, SkewElement::scalar(rising_factorial(m).into()), "m = {m}");
        }
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(conjugate_by_power(&RationalPoly::z(), 1), lin(1));
        let z2 = &RationalPoly::z() * &RationalPoly::z();
        assert_eq!(conjugate_by_power(&z2, -2), &lin(-2) * &lin(-2));
        assert_eq!(conjugate_by_power(&z2, 0), z2);
    }

    #[test]
    fn membership_examples() {
        assert!(SkewElement::z().weyl_membership());
        assert!(SkewElement::y().weyl_membership());
        assert!(!SkewElement::x_pow(-1).weyl_membership());
        assert!(!SkewElement::scalar(&RationalPoly::one() / &lin(0)).weyl_membership());
        assert!(SkewElement::y_pow(4).weyl_membership());
        assert!(!SkewElement::y_pow(-1).weyl_membership());
    }

    #[test]
    fn y_form_round_trip() {
        let u = SkewElement::y_form(lin(3), 4);
        assert_eq!(u.to_y_form(), Some((lin(3), 4)));
        let v = SkewElement::y_form(lin(-2), -3);
        assert_eq!(v.to_y_form(), Some((lin(-2), -3)));
    }

    #[test]
    fn json_keys_are_strings() {
        let u = &SkewElement::x() + &SkewElement::y();
        let v = serde_json::to_value(&u).unwrap();
        assert!(v.get("1").is_some() && v.get("-1").is_some());
        let back: SkewElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, u);
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(-10i64..=10, 0..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
    }

    fn small_ratfunc() -> impl Strategy<Value = RationalPoly> {
        (small_poly(2), prop::collection::vec(-3i64..=3, 0..=1)).prop_map(|(num, roots)| {
            RationalPoly::new(num, Poly::product_of_linear(roots)).unwrap()
        })
    }

    fn element() -> impl Strategy<Value = SkewElement> {
        prop::collection::vec((-3i64..=3, small_ratfunc()), 0..=3).prop_map(|terms| {
            terms.into_iter().fold(SkewElement::zero(), |acc, (m, c)| {
                &acc + &SkewElement::monomial(c, m)
            })
        })
    }

    /// Elements of A built from x, y and polynomial coefficients.
    fn weyl_element() -> impl Strategy<Value = SkewElement> {
        prop::collection::vec((-3i64..=3, small_poly(2)), 0..=3).prop_map(|terms| {
            terms.into_iter().fold(SkewElement::zero(), |acc, (m, c)| {
                let gen = if m >= 0 {
                    SkewElement::x_pow(m)
                } else {
                    SkewElement::y_pow(-m)
                };
                &acc + &(&SkewElement::scalar(c.into()) * &gen)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn associative(u in element(), v in element(), w in element()) {
            prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        }

        #[test]
        fn distributive(u in element(), v in element(), w in element()) {
            prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
            prop_assert_eq!(&(&u + &v) * &w, &(&u * &w) + &(&v * &w));
        }

        #[test]
        fn weyl_closed_under_products(u in weyl_element(), v in weyl_element()) {
            prop_assert!(u.weyl_membership() && v.weyl_membership());
            prop_assert!((&u * &v).weyl_membership());
        }

        #[test]
        fn shift_composes(p in small_poly(4), a in -5i64..5, b in -5i64..5) {
            let f = RationalPoly::from(p);
            prop_assert_eq!(conjugate_by_power(&conjugate_by_power(&f, a), b),
                            conjugate_by_power(&f, a + b));
        }
    }
}
