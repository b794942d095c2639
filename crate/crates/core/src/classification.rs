//! Conjugacy classes of generative autoequivalences.
//!
//! Every generative `F` is conjugate to some `S^n ι_J` with `(J, n)`
//! admissible, and two such forms are conjugate exactly when the pairs have
//! the same necklace type. Conjugacy is the same as graded Morita equivalence
//! of the associated twisted endomorphism rings.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::picard::PicElement;
use crate::zfin::{necklace_canonical, necklace_count, AdmissiblePair, NecklaceClass};

/// An admissible form together with the conjugator that reaches it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub pair: AdmissiblePair,
    pub conjugator: PicElement,
}

impl CanonicalForm {
    /// `g ∘ F ∘ g⁻¹ == S^n ι_J`.
    pub fn verifies(&self, f: &PicElement) -> bool {
        f.conjugate_by(&self.conjugator) == PicElement::from_pair(&self.pair)
    }

    pub fn necklace(&self) -> NecklaceClass {
        necklace_canonical(&self.pair)
    }
}

fn require_generative(f: &PicElement) -> Result<()> {
    if f.is_generative() {
        Ok(())
    } else {
        Err(Error::NotGenerative(format!(
            "{f:?} ({}, rank {})",
            if f.is_even() { "even" } else { "odd" },
            f.rank()
        )))
    }
}

/// The admissible pair `(J, n)` and a conjugator `g` with `g F g⁻¹ = S^n ι_J`.
///
/// Negative ranks are first conjugated by `ω`. For `F = S^n ι_K` with `n > 0`,
/// `J` collects the residues whose slice of `K` is odd, and `g = ι_I` for the
/// unique `I` with `∂_n I = J ⊕ K`.
pub fn canonical_admissible(f: &PicElement) -> Result<CanonicalForm> {
    require_generative(f)?;
    let (pre, g0) = if f.shift_exponent() < 0 {
        let w = PicElement::omega();
        (f.conjugate_by(&w), w)
    } else {
        (f.clone(), PicElement::identity())
    };
    let n = pre.shift_exponent();
    let k = pre.twist();
    let j: FinSet = k
        .slices(n)?
        .iter()
        .enumerate()
        .filter(|(_, s)| s.len() % 2 == 1)
        .map(|(i, _)| i as i64)
        .collect();
    let i = (&j ^ k).inverse_boundary(n)?;
    Ok(CanonicalForm {
        pair: AdmissiblePair::new(j, n)?,
        conjugator: PicElement::iota(i).compose(&g0),
    })
}

/// Whether `F` and `G` are conjugate, i.e. their rings are graded Morita
/// equivalent.
pub fn same_morita_class(f: &PicElement, g: &PicElement) -> Result<bool> {
    let cf = canonical_admissible(f)?;
    let cg = canonical_admissible(g)?;
    Ok(cf.necklace() == cg.necklace())
}

/// Number of graded Morita classes of rank `n` generative equivalences.
pub fn morita_class_count(n: u64) -> Result<BigUint> {
    necklace_count(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::Sign;
    use rand::{rngs::StdRng, SeedableRng};
    use std::collections::BTreeSet;

    fn s<const N: usize>(a: [i64; N]) -> FinSet {
        FinSet::from(a)
    }

    fn even<const N: usize>(b: i64, j: [i64; N]) -> PicElement {
        PicElement::new(Sign::Plus, b, s(j))
    }

    #[test]
    fn canonical_examples() {
        let f = even(2, [0, 2]);
        let c = canonical_admissible(&f).unwrap();
        assert_eq!(c.pair, AdmissiblePair::new(FinSet::new(), 2).unwrap());
        assert_eq!(c.conjugator, PicElement::iota(s([2])));
        assert!(c.verifies(&f));

        let f = even(1, [0]);
        let c = canonical_admissible(&f).unwrap();
        assert_eq!(c.pair, AdmissiblePair::new(s([0]), 1).unwrap());
        assert!(c.conjugator.is_identity());

        let f = even(-2, [0]);
        let c = canonical_admissible(&f).unwrap();
        assert_eq!(c.pair, AdmissiblePair::new(s([1]), 2).unwrap());
        assert_eq!(c.conjugator, PicElement::iota(s([1])).compose(&PicElement::omega()));
        assert!(!c.conjugator.is_even());
        assert!(c.verifies(&f));
    }

    #[test]
    fn non_generative_rejected() {
        for f in [PicElement::omega(), PicElement::iota(s([0, 5])), PicElement::identity()] {
            assert!(matches!(canonical_admissible(&f), Err(Error::NotGenerative(_))));
        }
        assert!(same_morita_class(&PicElement::shift(1), &PicElement::omega()).is_err());
    }

    #[test]
    fn morita_examples() {
        assert!(same_morita_class(&even(2, [0]), &even(2, [1])).unwrap());
        assert!(!same_morita_class(&PicElement::shift(1), &PicElement::shift(2)).unwrap());
        let f = even(3, [-4, 1, 7]);
        assert!(same_morita_class(&f, &f).unwrap());
        let counts: Vec<u64> =
            [1, 2, 4].iter().map(|&n| morita_class_count(n).unwrap().try_into().unwrap()).collect();
        assert_eq!(counts, vec![2, 3, 6]);
    }

    #[test]
    fn random_witnesses() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..500 {
            let f = PicElement::random(&mut rng, false, 4, (-4, 4), 6);
            if !f.is_generative() {
                continue;
            }
            let c = canonical_admissible(&f).unwrap();
            assert!(c.verifies(&f), "{f:?}");
            assert_eq!(c.pair.n(), f.rank().abs());
            let g = PicElement::random(&mut rng, true, 4, (-4, 4), 4);
            assert!(same_morita_class(&f, &f.conjugate_by(&g)).unwrap());
        }
    }

    #[test]
    fn completeness() {
        for n in 1..=8 {
            let classes: BTreeSet<_> = AdmissiblePair::all(n)
                .unwrap()
                .iter()
                .map(|p| canonical_admissible(&PicElement::from_pair(p)).unwrap().necklace())
                .collect();
            let count: u64 = morita_class_count(n as u64).unwrap().try_into().unwrap();
            assert_eq!(classes.len() as u64, count);
        }
    }
}
