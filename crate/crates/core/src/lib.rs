//! Exact computations in the category of graded right modules over the first
//! Weyl algebra `A = k⟨x, y⟩/(xy − yx − 1)`, graded by `deg x = 1`, `deg y = −1`.
//!
//! All arithmetic is over the rationals, with no floating point anywhere.
//!
//! * [`finset`], [`zfin`]: finite integer sets, the boundary operator and binary necklaces.
//! * [`poly`], [`ratfunc`], [`skew`]: `k[z]`, `k(z)` and the skew Laurent ring `D = k(z)[x^{±1}; σ]`.
//! * [`lattice`], [`simple`]: rank-one graded modules as lattices in `D`, and graded simples.
//! * [`picard`], [`expr`]: the group of autoequivalences and its text syntax.
//! * [`classification`]: conjugacy classes of generative autoequivalences.
//! * [`gwa`]: the rings `S(J, n)` graded equivalent to `A`.
//! * [`k_theory`]: graded `K_0` and sums of rank-one projectives.
//! * [`verify`], [`cli`]: invariant sweeps and the command line.
//!
//! ```
//! use weylgraded::{canonical_admissible, parse_expression};
//!
//! let f = parse_expression("S^2 * i{0,2}").unwrap();
//! let c = canonical_admissible(&f).unwrap();
//! assert_eq!(c.pair.to_string(), "({}, 2)");
//! assert!(c.verifies(&f));
//! ```

pub mod error;
pub mod finset;
pub mod poly;
pub mod ratfunc;
pub mod skew;
pub mod zfin;
pub mod lattice;
pub mod simple;
pub mod picard;
pub mod classification;
pub mod gwa;
pub mod k_theory;
pub mod expr;
pub mod verify;
pub mod cli;

pub use classification::{canonical_admissible, morita_class_count, same_morita_class, CanonicalForm};
pub use error::{Error, Result};
pub use expr::parse_expression;
pub use finset::FinSet;
pub use gwa::{
    graded_piece_closed_form, present, twisted_endo_piece_oracle, verify_gwa_embedding,
    verify_ring_closure, GwaPresentation, Piece, RingPieces,
};
pub use k_theory::{
    iso_test, normalize_sum, stably_free_witness, theta_map, K0Class, ProjectiveSum, Summand,
};
pub use lattice::{
    cokernel_support, hom_generator, iota_lattice, lattice_intersect, lattice_scale,
    simple_factor, to_dset, DSet, GradedLattice,
};
pub use picard::{PicElement, Sign};
pub use poly::{Poly, Rat};
pub use ratfunc::RationalPoly;
pub use simple::{ext_dim_simples, SimpleLabel};
pub use skew::{skew_multiply, SkewElement};
pub use zfin::{necklace_canonical, necklace_count, necklace_enumerate, AdmissiblePair, NecklaceClass};
