//! The rings `S(J, n) = k[z] + f_J·W(f_{J̄}, n)` inside `D`.
//!
//! `W(f, n)` is the generalized Weyl algebra on `X = f·y^{−n}`, `Y = y^n`
//! and `z`. Its degree-`j` piece (degree `nj` in `D`) is reported in the form
//! `h(z)·y^p·k[z]`. A second, independent route computes the same pieces from
//! lattices `M(j)` built out of involutions applied to `A`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::lattice::GradedLattice;
use crate::poly::{Poly, Rat};
use crate::ratfunc::RationalPoly;
use crate::skew::{x_to_y_factor, SkewElement};
use crate::zfin::AdmissiblePair;

/// `f_J = ∏_{j∈J} (z+j)`.
pub fn f_of(set: &FinSet) -> Poly {
    Poly::product_of_linear(set.iter())
}

/// Generators and relations of `W(f_{J̄}, n)`, plus the idealizer factor `f_J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwaPresentation {
    pub n: i64,
    pub f: Poly,
    #[serde(rename = "fJ")]
    pub idealizer_factor: Poly,
    pub relations: Vec<String>,
}

impl fmt::Display for GwaPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "S = k[z] + ({})·W({}, {})", self.idealizer_factor, self.f, self.n)?;
        for r in &self.relations {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

pub fn present(set: &FinSet, n: i64) -> Result<GwaPresentation> {
    let pair = AdmissiblePair::new(set.clone(), n)?;
    let f = f_of(&pair.complement());
    let shifted = f.shift_int(-n);
    Ok(GwaPresentation {
        n,
        relations: vec![
            format!("Xz - zX = {}X", if n == 1 { String::new() } else { n.to_string() }),
            format!("Yz - zY = -{}Y", if n == 1 { String::new() } else { n.to_string() }),
            format!("XY = {f}"),
            format!("YX = {shifted}"),
        ],
        f,
        idealizer_factor: f_of(pair.set()),
    })
}

/// Whether `W(f, n)` is simple hereditary: `f` splits over the rationals with
/// distinct roots, no two of which differ by a multiple of `n`.
pub fn gwa_root_test(f: &Poly, n: i64) -> bool {
    let roots = f.rational_roots();
    let total: u32 = roots.iter().map(|(_, m)| m).sum();
    if Some(total as usize) != f.degree() || roots.iter().any(|(_, m)| *m > 1) {
        return false;
    }
    let n = Rat::from_integer(n.into());
    roots.iter().enumerate().all(|(k, (r, _))| {
        roots[k + 1..]
            .iter()
            .all(|(s, _)| !((r - s) / &n).is_integer())
    })
}

/// `h(z)·y^p·k[z]`, a cyclic piece of `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub h: RationalPoly,
    pub p: i64,
}

impl Piece {
    /// `h·y^p`.
    pub fn element(&self) -> SkewElement {
        SkewElement::y_form(self.h.clone(), self.p)
    }

    /// The piece spanned by a homogeneous `c·x^m`.
    pub fn from_x_form(c: &RationalPoly, m: i64) -> Piece {
        Piece {
            h: (c * &x_to_y_factor(m)).monic(),
            p: -m,
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = if self.h.is_one() { String::new() } else { format!("({})·", self.h) };
        match self.p {
            0 => write!(f, "{h}k[z]"),
            1 => write!(f, "{h}y·k[z]"),
            p => write!(f, "{h}y^{p}·k[z]"),
        }
    }
}

/// `S_j` for `j ∈ [min, max]`, indexed by `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingPieces {
    pub pieces: BTreeMap<i64, Piece>,
}

impl fmt::Display for RingPieces {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, piece) in &self.pieces {
            writeln!(f, "S_{j} = {piece}")?;
        }
        Ok(())
    }
}

/// The degree-`m` piece of `A` itself in y-form.
pub fn weyl_piece(m: i64) -> Piece {
    Piece::from_x_form(&GradedLattice::unit().generator(m), m)
}

/// `S_j` from the closed forms: `k[z]` for `j = 0`, `f_J·y^{−nj}·k[z]` for
/// `j < 0`, and `f_J·(f_{J̄}·y^{−n})^j·k[z]` for `j > 0`.
pub fn graded_piece_closed_form(set: &FinSet, n: i64, j: i64) -> Result<Piece> {
    let pair = AdmissiblePair::new(set.clone(), n)?;
    let f_j = RationalPoly::from(f_of(pair.set()));
    let piece = match j {
        0 => Piece { h: RationalPoly::one(), p: 0 },
        j if j < 0 => Piece { h: f_j, p: -n * j },
        j => {
            let gen = SkewElement::y_form(f_of(&pair.complement()).into(), -n);
            let u = &SkewElement::scalar(f_j) * &gen.pow(j as u32);
            let (h, p) = u.to_y_form().expect("homogeneous");
            debug_assert_eq!(p, -n * j);
            Piece { h: h.monic(), p }
        }
    };
    Ok(piece)
}

/// `M(j)`: `∏_{i=1}^{j} ι_{J+ni}^{-1} A` for `j ≥ 1` and `∏_{i=0}^{−j−1} ι_{J−ni} A`
/// for `j ≤ −1`, as a lattice.
pub fn endo_lattice(set: &FinSet, n: i64, j: i64) -> Result<GradedLattice> {
    let pair = AdmissiblePair::new(set.clone(), n)?;
    let set = pair.set();
    let mut l = GradedLattice::unit();
    if j > 0 {
        for i in 1..=j {
            l = l.inverse_involution_set(&set.translate(n * i));
        }
    } else {
        for i in 0..-j {
            l = l.involution_set(&set.translate(-n * i));
        }
    }
    Ok(l)
}

/// `S_j` read off as the degree-`nj` part of the lattice `M(j)`.
pub fn twisted_endo_piece_oracle(set: &FinSet, n: i64, j: i64) -> Result<Piece> {
    let m = endo_lattice(set, n, j)?;
    Ok(Piece::from_x_form(&m.generator(n * j), n * j))
}

pub fn ring_pieces(set: &FinSet, n: i64, min: i64, max: i64) -> Result<RingPieces> {
    collect_pieces(min, max, |j| graded_piece_closed_form(set, n, j))
}

pub fn oracle_pieces(set: &FinSet, n: i64, min: i64, max: i64) -> Result<RingPieces> {
    collect_pieces(min, max, |j| twisted_endo_piece_oracle(set, n, j))
}

fn collect_pieces(min: i64, max: i64, f: impl Fn(i64) -> Result<Piece>) -> Result<RingPieces> {
    if min > max {
        return Err(Error::invalid(format!("empty range [{min}, {max}]")));
    }
    let pieces = (min..=max).map(|j| Ok((j, f(j)?))).collect::<Result<_>>()?;
    Ok(RingPieces { pieces })
}

/// Whether `S_i·S_j ⊆ S_{i+j}` for all `|i|, |j|, |i+j| ≤ window`.
pub fn verify_ring_closure(set: &FinSet, n: i64, window: i64) -> Result<bool> {
    let pieces = ring_pieces(set, n, -window, window)?;
    let elems: BTreeMap<i64, SkewElement> =
        pieces.pieces.iter().map(|(&j, p)| (j, p.element())).collect();
    for i in -window..=window {
        for j in -window..=window {
            if (i + j).abs() > window {
                continue;
            }
            let prod = &elems[&i] * &elems[&j];
            let target = &pieces.pieces[&(i + j)];
            match prod.to_y_form() {
                Some((h, p)) if p == target.p && target.h.divides(&h) => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// Whether `X = f_{J̄}·y^{−n}`, `Y = y^n` and `z` satisfy the four relations of
/// `W(f_{J̄}, n)` in `D`, together with `x^n = ∏_{i<n}(z+i)·y^{−n}`.
pub fn verify_gwa_embedding(set: &FinSet, n: i64) -> Result<bool> {
    let pres = present(set, n)?;
    let f = RationalPoly::from(pres.f.clone());
    let x = SkewElement::y_form(f.clone(), -n);
    let y = SkewElement::y_pow(n);
    let z = SkewElement::z();
    let nn = RationalPoly::constant(Rat::from_integer(n.into()));
    let checks = [
        x.commutator(&z) == x.scale(&nn),
        y.commutator(&z) == y.scale(&-&nn),
        &x * &y == SkewElement::scalar(f.clone()),
        &y * &x == SkewElement::scalar(f.shift(-n)),
        SkewElement::x_pow(n) == SkewElement::y_form(Poly::product_of_linear(0..n).into(), -n),
        gwa_root_test(&pres.f, n),
    ];
    Ok(checks.iter().all(|&c| c))
}
