//! Invariant sweeps over every module, shared by `verify --suite` and the
//! acceptance tests.

use std::collections::BTreeSet;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::classification::{canonical_admissible, same_morita_class};
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::gwa::{
    graded_piece_closed_form, gwa_root_test, present, twisted_endo_piece_oracle,
    verify_gwa_embedding, verify_ring_closure, weyl_piece, Piece,
};
use crate::k_theory::{
    chain_from_counts, iso_test, normalize_sum, normalize_with, single_complement_search,
    stably_free_witness, theta_map, K0Class, ProjectiveSum, Summand,
};
use crate::lattice::{
    cokernel_factors, cokernel_support, hom_generator, iota_lattice, single_iota_lattice,
    to_dset, DSet, GradedLattice,
};
use crate::picard::{coverage_holds, PicElement, Sign};
use crate::poly::Poly;
use crate::ratfunc::RationalPoly;
use crate::simple::{ext_dim_simples, sample_non_integers, SimpleLabel};
use crate::skew::SkewElement;
use crate::zfin::{necklace_canonical, necklace_count, necklace_enumerate, AdmissiblePair};

pub const SUITES: [&str; 7] = ["zfin", "skew", "lattices", "picard", "classification", "rings", "k_theory"];

/// Environment variable capping every sweep window.
pub const MAX_WINDOW_VAR: &str = "WEYLGRADED_MAX_WINDOW";

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub window: i64,
    pub seed: u64,
    pub picard_samples: usize,
    pub classification_samples: usize,
    pub k_theory_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            window: 3,
            seed: 0,
            picard_samples: 10_000,
            classification_samples: 500,
            k_theory_samples: 1_000,
        }
    }
}

impl VerifyConfig {
    /// Applies the cap from [`MAX_WINDOW_VAR`], if set.
    pub fn capped(mut self) -> Result<Self> {
        if let Ok(v) = std::env::var(MAX_WINDOW_VAR) {
            let cap: i64 = v
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("{MAX_WINDOW_VAR} must be an integer, got {v:?}")))?;
            self.window = self.window.min(cap);
        }
        if self.window < 1 {
            return Err(Error::invalid("window must be at least 1"));
        }
        Ok(self)
    }

    fn rng(&self, salt: u64) -> StdRng {
        StdRng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
    }
}

/// Pass/fail counts for one named property.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// The first few failing cases.
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), ..Check::default() }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(detail());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.ok() { "ok  " } else { "FAIL" };
        write!(f, "{tag} {:<44} {} passed, {} failed", self.name, self.passed, self.failed)?;
        for d in &self.failures {
            write!(f, "\n       {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}]", self.suite)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn run(name: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    let names: Vec<&str> = if name == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&name) {
        vec![name]
    } else {
        return Err(Error::invalid(format!(
            "unknown suite {name:?}; expected all or one of {}",
            SUITES.join(", ")
        )));
    };
    names
        .into_iter()
        .map(|n| {
            let checks = match n {
                "zfin" => zfin_checks(cfg),
                "skew" => skew_checks(cfg),
                "lattices" => lattice_checks(cfg),
                "picard" => picard_checks(cfg),
                "classification" => classification_checks(cfg),
                "rings" => ring_checks(cfg),
                _ => k_theory_checks(cfg),
            }?;
            Ok(SuiteReport { suite: n.to_string(), checks })
        })
        .collect()
}

fn random_set<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_len: usize) -> FinSet {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// Every subset of `[lo, hi]` with at most `max_len` elements.
pub fn subsets(lo: i64, hi: i64, max_len: usize) -> Vec<FinSet> {
    let width = (hi - lo + 1).max(0) as u32;
    (0u64..1 << width)
        .filter(|mask| mask.count_ones() as usize <= max_len)
        .map(|mask| (0..width as i64).filter(|b| mask >> b & 1 == 1).map(|b| lo + b).collect())
        .collect()
}

// zfin

pub fn zfin_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let w = cfg.window;
    let mut rng = cfg.rng(1);
    let mut count = Check::new("necklace count = enumeration size");
    for n in 1..=(4 * w).min(16) {
        let listed = necklace_enumerate(n)?.len();
        let formula = necklace_count(n as u64)?;
        count.record(formula == listed.into(), || format!("n = {n}: {formula} vs {listed}"));
    }
    let mut linear = Check::new("boundary is additive");
    let mut inverse = Check::new("inverse boundary inverts boundary");
    let mut image = Check::new("image of boundary = even slices");
    for _ in 0..200 {
        let n = rng.gen_range(1..=w + 2);
        let i = random_set(&mut rng, -3 * w, 3 * w, 6);
        let j = random_set(&mut rng, -3 * w, 3 * w, 6);
        let lhs = (&i ^ &j).boundary(n)?;
        let rhs = &i.boundary(n)? ^ &j.boundary(n)?;
        linear.record(lhs == rhs, || format!("{i} {j} n = {n}"));
        inverse.record(i.boundary(n)?.inverse_boundary(n)? == i, || format!("{i} n = {n}"));
        let even = j.slices(n)?.iter().all(|s| s.len() % 2 == 0);
        image.record(even == j.inverse_boundary(n).is_ok(), || format!("{j} n = {n}"));
    }
    let mut rotation = Check::new("necklace canonical form is rotation invariant");
    for n in 1..=w + 3 {
        for p in AdmissiblePair::all(n)? {
            let c = necklace_canonical(&p);
            let ok = (0..n).all(|r| necklace_canonical(&p.rotate(r)) == c)
                && necklace_canonical(c.representative()) == c;
            rotation.record(ok, || p.to_string());
        }
    }
    Ok(vec![count, linear, inverse, image, rotation])
}

// skew

fn random_coefficient<R: Rng>(rng: &mut R) -> RationalPoly {
    let coeffs: Vec<i64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(-10..=10)).collect();
    let num = Poly::from_ints(&coeffs);
    if rng.gen_bool(0.2) {
        let den = Poly::linear(rng.gen_range(-3..=3));
        RationalPoly::new(num, den).expect("nonzero denominator")
    } else {
        num.into()
    }
}

fn random_skew<R: Rng>(rng: &mut R) -> SkewElement {
    (0..rng.gen_range(1..=3)).fold(SkewElement::zero(), |acc, _| {
        let m = rng.gen_range(-3..=3);
        &acc + &SkewElement::monomial(random_coefficient(rng), m)
    })
}

/// A random element of `A`: `Σ f_m·x^m` over `m ≥ 0` and `Σ f_m·y^{−m}` over `m < 0`.
fn random_weyl<R: Rng>(rng: &mut R) -> SkewElement {
    (0..rng.gen_range(1..=3)).fold(SkewElement::zero(), |acc, _| {
        let m = rng.gen_range(-3i64..=3);
        let coeffs: Vec<i64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(-5..=5)).collect();
        let f = SkewElement::scalar(Poly::from_ints(&coeffs).into());
        let basis = if m >= 0 { SkewElement::x_pow(m) } else { SkewElement::y_pow(-m) };
        &acc + &(&f * &basis)
    })
}

pub fn skew_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut rng = cfg.rng(2);
    let samples = 60 * cfg.window as usize;
    let mut assoc = Check::new("skew product is associative");
    let mut distrib = Check::new("skew product distributes over sums");
    for _ in 0..samples {
        let (u, v, w) = (random_skew(&mut rng), random_skew(&mut rng), random_skew(&mut rng));
        assoc.record(&(&u * &v) * &w == &u * &(&v * &w), || format!("{u} | {v} | {w}"));
        distrib.record(&u * &(&v + &w) == &(&u * &v) + &(&u * &w), || format!("{u} | {v} | {w}"));
    }
    let mut weyl = Check::new("xy - yx = 1 and x^m y^m = z(z+1)..(z+m-1)");
    let (x, y) = (SkewElement::x(), SkewElement::y());
    weyl.record(&(&x * &y) - &(&y * &x) == SkewElement::one(), || "xy - yx".into());
    for m in 1..=2 * cfg.window {
        let prod = &SkewElement::x_pow(m) * &SkewElement::y_pow(m);
        let want = SkewElement::scalar(Poly::product_of_linear(0..m).into());
        weyl.record(prod == want, || format!("m = {m}: {prod}"));
    }
    let mut closed = Check::new("A is closed under the skew product");
    for _ in 0..samples {
        let (u, v) = (random_weyl(&mut rng), random_weyl(&mut rng));
        let ok = u.weyl_membership() && v.weyl_membership() && (&u * &v).weyl_membership();
        closed.record(ok, || format!("{u} | {v}"));
    }
    closed.record(!SkewElement::x_pow(-1).weyl_membership(), || "x^-1 reported in A".into());
    Ok(vec![assoc, distrib, weyl, closed])
}

// lattices

pub fn lattice_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let w = cfg.window;
    let mut form = Check::new("iota lattice = intersection of singles");
    for set in subsets(-w.min(2), w.min(2), 3) {
        let folded = set
            .iter()
            .map(single_iota_lattice)
            .reduce(|a, b| a.intersect(&b))
            .unwrap_or_else(GradedLattice::unit);
        form.record(folded == iota_lattice(&set, 0), || set.to_string());
    }
    let mut module = Check::new("iota lattices are A-modules");
    let mut duality = Check::new("X/Y dichotomy matches DSet and cokernel");
    let jr = w + 2;
    for set in subsets(-w, w, 3) {
        for s in -2..=2 {
            let p = iota_lattice(&set, s);
            module.record(p.is_a_module(), || format!("{set} <{s}>"));
            let d = to_dset(&set, s);
            for j in -jr..=jr {
                let f = p.simple_factor(j);
                let sub = p.involution(j);
                let ok = (f == SimpleLabel::x(j)) == d.contains(j)
                    && (f == SimpleLabel::x(j) || f == SimpleLabel::y(j))
                    && hom_generator(&sub, &p).is_one()
                    && cokernel_factors(&sub, &p) == vec![(f.clone(), 1)];
                duality.record(ok, || format!("{set} <{s}> j = {j}: {f}"));
            }
        }
    }
    let mut iota_sq = Check::new("iota_j twice is multiplication by z+j");
    let mut rng = cfg.rng(3);
    for _ in 0..20 {
        let set = random_set(&mut rng, -w, w, 3);
        let p = iota_lattice(&set, rng.gen_range(-2..=2));
        let j = rng.gen_range(-w..=w);
        let twice = p.involution(j).involution(j);
        iota_sq.record(twice == p.scale(&RationalPoly::linear(j))?, || format!("{set} j = {j}"));
    }
    let mut schanuel = Check::new("sum isomorphism cokernel supports agree");
    for j in subsets(0, w, 4) {
        for k in subsets(0, w, 4) {
            let lhs = cokernel_support(&iota_lattice(&k, 0), &iota_lattice(&j.union(&k), 0));
            let rhs = cokernel_support(&iota_lattice(&j.intersection(&k), 0), &iota_lattice(&j, 0));
            schanuel.record(lhs == rhs, || format!("J = {j}, K = {k}"));
        }
    }
    let mut ext = Check::new("ext table for graded simples");
    let mut labels: Vec<SimpleLabel> = (-3..=3).flat_map(|n| [SimpleLabel::x(n), SimpleLabel::y(n)]).collect();
    labels.extend(sample_non_integers().into_iter().map(|q| SimpleLabel::m(q).expect("non-integer")));
    for s in &labels {
        for t in &labels {
            let want = match (s, t) {
                (SimpleLabel::X { n: a }, SimpleLabel::Y { n: b })
                | (SimpleLabel::Y { n: a }, SimpleLabel::X { n: b }) => u32::from(a == b),
                (SimpleLabel::M { .. }, SimpleLabel::M { .. }) => u32::from(s == t),
                _ => 0,
            };
            ext.record(ext_dim_simples(s, t) == want, || format!("ext({s}, {t})"));
        }
    }
    Ok(vec![form, module, duality, iota_sq, schanuel, ext])
}

// picard

fn random_pic<R: Rng>(rng: &mut R) -> PicElement {
    PicElement::random(rng, true, 10, (-10, 10), 4)
}

/// `(a, b)` with `n ↦ an + b`, composed as affine maps.
fn affine_compose(f: (i64, i64), g: (i64, i64)) -> (i64, i64) {
    (f.0 * g.0, f.0 * g.1 + f.1)
}

pub fn picard_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut rng = cfg.rng(4);
    let e = PicElement::identity();
    let mut group = Check::new("group axioms");
    let mut hom = Check::new("sign and rank form a homomorphism");
    let mut kernel = Check::new("kernel of sign and rank is the involutions");
    let mut fourth = Check::new("odd elements have order dividing 4");
    let mut action = Check::new("actions on simples and DSets compose");
    for _ in 0..cfg.picard_samples {
        let (f, g, h) = (random_pic(&mut rng), random_pic(&mut rng), random_pic(&mut rng));
        let ok = f.compose(&g).compose(&h) == f.compose(&g.compose(&h))
            && f.compose(&e) == f
            && e.compose(&f) == f
            && f.compose(&f.inverse()).is_identity()
            && f.inverse().compose(&f).is_identity();
        group.record(ok, || format!("{f:?} {g:?} {h:?}"));
        hom.record(
            f.compose(&g).sign_rank() == affine_compose(f.sign_rank(), g.sign_rank()),
            || format!("{f:?} {g:?}"),
        );
        let k = f.compose(&g);
        let in_kernel = k.sign_rank() == (1, 0);
        kernel.record(
            in_kernel == (k.is_even() && k.shift_exponent() == 0)
                && (!in_kernel || k == PicElement::iota(k.twist().clone())),
            || format!("{k:?}"),
        );
        if !f.is_even() {
            let sq = PicElement::new(
                Sign::Plus,
                0,
                &f.twist().translate(f.shift_exponent()) ^ &f.twist().reflect(),
            );
            fourth.record(f.pow(2) == sq && f.pow(4).is_identity(), || format!("{f:?}"));
        }
        let d = DSet::new(random_set(&mut rng, -6, 6, 4));
        let s = SimpleLabel::x(rng.gen_range(-6..=6));
        action.record(
            f.compose(&g).act_on_dset(&d) == f.act_on_dset(&g.act_on_dset(&d))
                && f.compose(&g).act_on_simple(&s) == f.act_on_simple(&g.act_on_simple(&s)),
            || format!("{f:?} {g:?} {d}"),
        );
    }
    let ww = PicElement::omega().compose(&PicElement::omega());
    group.record(ww.is_identity(), || "w*w".into());
    let mut onto = Check::new("sign and rank reach every tested value");
    let w = cfg.window;
    for a in [1, -1] {
        for b in -3 * w..=3 * w {
            let g = if a == 1 { PicElement::shift(b) } else { PicElement::shift(b + 1).compose(&PicElement::omega()) };
            onto.record(g.sign_rank() == (a, b), || format!("({a}, {b})"));
        }
    }
    let mut oracle = Check::new("DSet action matches lattices");
    for set in subsets(-2, 2, 5) {
        for b in -2..=2 {
            let f = PicElement::new(Sign::Plus, b, set.clone());
            let predicted = f.act_on_dset(&DSet::free());
            let lattice = GradedLattice::unit().involution_set(&set).shift(b);
            oracle.record(predicted == lattice.dset(), || format!("{f:?}"));
        }
    }
    let f = PicElement::new(Sign::Plus, 1, FinSet::singleton(0));
    let mut l = GradedLattice::unit();
    for n in 1..=5 {
        l = l.involution(0).shift(1);
        let want = iota_lattice(&FinSet::from([0, n]), 0).dset();
        oracle.record(
            l.dset() == want && f.pow(n).act_on_dset(&DSet::free()) == want,
            || format!("F^{n} A"),
        );
    }
    let mut coverage = Check::new("coverage witness spans the window");
    for n in 1..=w {
        for p in AdmissiblePair::all(n)? {
            coverage.record(coverage_holds(&p, w)?, || p.to_string());
        }
    }
    Ok(vec![group, hom, kernel, fourth, action, onto, oracle, coverage])
}

// classification

/// Brute-force conjugacy of admissible forms `S^n ι_J`, `S^n ι_K` over
/// `g = ι_I S^c` with `c ∈ [0, n)` and `I ⊆ [0, 2n)`, which suffices since
/// `S^c` rotates `J` into `[0, 2n)` and `ι_I` then adds `I ⊕ (I − n)`.
/// Odd conjugators negate the rank, so they never relate two such forms.
pub fn conjugate_by_search(f: &PicElement, g: &PicElement) -> bool {
    let n = f.shift_exponent();
    if n <= 0 || n != g.shift_exponent() || n > 6 {
        return false;
    }
    let shifts: Vec<PicElement> = (0..n).map(PicElement::shift).collect();
    subsets(0, 2 * n - 1, usize::MAX).into_iter().any(|i| {
        let iota = PicElement::iota(i);
        shifts.iter().any(|s| f.conjugate_by(&iota.compose(s)) == *g)
    })
}

pub fn classification_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut witness = Check::new("canonical form conjugator verifies");
    let mut agree = Check::new("Morita test agrees with brute-force conjugacy");
    let nmax = (cfg.window + 1).min(4);
    for n in 1..=nmax {
        let pairs = AdmissiblePair::all(n)?;
        for p in &pairs {
            let f = PicElement::from_pair(p);
            let c = canonical_admissible(&f)?;
            witness.record(c.verifies(&f) && c.pair == *p, || p.to_string());
        }
        for p in &pairs {
            for q in &pairs {
                let (f, g) = (PicElement::from_pair(p), PicElement::from_pair(q));
                let fast = same_morita_class(&f, &g)?;
                agree.record(fast == conjugate_by_search(&f, &g), || format!("{p} vs {q}"));
            }
        }
    }
    let mut random = Check::new("random generative elements");
    let mut rng = cfg.rng(5);
    let mut seen = 0;
    while seen < cfg.classification_samples {
        let f = PicElement::random(&mut rng, false, 4, (-4, 4), 6);
        if !f.is_generative() {
            continue;
        }
        seen += 1;
        let c = canonical_admissible(&f)?;
        let g = PicElement::random(&mut rng, true, 4, (-4, 4), 4);
        let conj = f.conjugate_by(&g);
        let ok = c.verifies(&f)
            && c.pair.n() == f.rank().abs()
            && same_morita_class(&f, &conj)?;
        random.record(ok, || format!("{f:?}"));
    }
    let mut rejects = Check::new("non-generative elements are rejected");
    for f in [PicElement::omega(), PicElement::iota(FinSet::from([0, 5])), PicElement::identity()] {
        rejects.record(canonical_admissible(&f).is_err(), || format!("{f:?}"));
    }
    Ok(vec![witness, agree, random, rejects])
}

// rings

pub fn ring_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let w = cfg.window;
    let mut oracle = Check::new("lattice oracle = closed-form pieces");
    for n in 1..=w.min(3) {
        for p in AdmissiblePair::all(n)? {
            for j in -w..=w {
                let a = twisted_endo_piece_oracle(p.set(), n, j)?;
                let b = graded_piece_closed_form(p.set(), n, j)?;
                oracle.record(a == b, || format!("{p} j = {j}: {a} vs {b}"));
            }
        }
    }
    let z: RationalPoly = Poly::z().into();
    for j in -w..=w {
        let want = if j == 0 {
            Piece { h: RationalPoly::one(), p: 0 }
        } else {
            Piece { h: z.clone(), p: -j }
        };
        let got = twisted_endo_piece_oracle(&FinSet::singleton(0), 1, j)?;
        oracle.record(got == want, || format!("S({{0}},1) j = {j}: {got}"));
    }
    let mut veronese = Check::new("S(empty, n) pieces are Veronese pieces");
    for n in 1..=w + 1 {
        for j in -(w + 1)..=w + 1 {
            let got = graded_piece_closed_form(&FinSet::new(), n, j)?;
            veronese.record(got == weyl_piece(n * j), || format!("n = {n} j = {j}"));
        }
    }
    let mut closure = Check::new("pieces close under multiplication");
    let mut embed = Check::new("GWA relations hold in D");
    let mut roots = Check::new("GWA parameter passes the simplicity root test");
    for n in 1..=w + 1 {
        for p in AdmissiblePair::all(n)? {
            closure.record(verify_ring_closure(p.set(), n, w)?, || p.to_string());
            embed.record(verify_gwa_embedding(p.set(), n)?, || p.to_string());
            let pres = present(p.set(), n)?;
            let full = &pres.f * &pres.idealizer_factor;
            roots.record(
                gwa_root_test(&pres.f, n) && full == Poly::product_of_linear(0..n),
                || p.to_string(),
            );
        }
    }
    Ok(vec![oracle, veronese, closure, embed, roots])
}

// k_theory

fn random_sum<R: Rng>(rng: &mut R) -> ProjectiveSum {
    let len = rng.gen_range(0..=5);
    ProjectiveSum::new(
        (0..len)
            .map(|_| Summand::new(random_set(rng, -4, 4, 4), rng.gen_range(-3..=3)))
            .collect(),
    )
}

pub fn k_theory_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut witness = Check::new("stably free witness for {1,3}");
    let set = FinSet::from([1, 3]);
    let (adds, result) = stably_free_witness(&set)?;
    witness.record(adds == [3, 1] && result == [4, 2, 0], || format!("{adds:?} {result:?}"));
    for t in subsets(1, 2 * cfg.window, 4) {
        let (adds, result) = stably_free_witness(&t)?;
        let lhs = ProjectiveSum::new(vec![Summand::iota(t.clone())]).direct_sum(&ProjectiveSum::of_shifts(adds));
        witness.record(iso_test(&lhs, &ProjectiveSum::of_shifts(result)), || t.to_string());
    }
    let mut negative = Check::new("no single free complement for {1,3}");
    let bound = (2 * cfg.window + 2).min(8);
    let found = single_complement_search(&set, bound);
    negative.record(found.is_none(), || format!("{found:?} within {bound}"));
    let mut rng = cfg.rng(6);
    let mut confluent = Check::new("normalization is confluent and keeps counts");
    let mut cancel = Check::new("cancellation");
    let mut classes = Check::new("iso iff equal K0 class");
    let mut theta = Check::new("theta is a homomorphism onto involutions");
    for _ in 0..cfg.k_theory_samples {
        let (p, q) = (random_sum(&mut rng), random_sum(&mut rng));
        let n = normalize_sum(&p);
        let seed: u64 = rng.gen();
        let mut pick_rng = StdRng::seed_from_u64(seed);
        let other = normalize_with(&p, |len| pick_rng.gen_range(0..len));
        confluent.record(
            n.is_chain() && other == n && n == chain_from_counts(&p) && n.membership_counts() == p.membership_counts(),
            || p.to_string(),
        );
        let q2 = if rng.gen_bool(0.5) { normalize_sum(&q) } else { random_sum(&mut rng) };
        cancel.record(
            iso_test(&p.direct_sum(&q), &p.direct_sum(&q2)) == iso_test(&q, &q2),
            || format!("{p} | {q} | {q2}"),
        );
        let same_class = K0Class::of_sum(&p) == K0Class::of_sum(&q) && p.rank() == q.rank();
        classes.record(iso_test(&p, &q) == same_class, || format!("{p} | {q}"));
        let (a, b) = (K0Class::of_sum(&p), K0Class::of_sum(&q));
        let ok = theta_map(&(&a + &b)) == theta_map(&a).compose(&theta_map(&b))
            && theta_map(&a.reduced()) == theta_map(&a)
            && theta_map(&a).sign_rank() == (1, 0);
        theta.record(ok, || format!("{p} | {q}"));
    }
    let images: BTreeSet<FinSet> = subsets(-2, 2, 5)
        .iter()
        .map(|j| theta_map(&(&K0Class::of_set(j) - &K0Class::basis(0))).twist().clone())
        .collect();
    theta.record(images.len() == 32, || format!("{} images", images.len()));
    Ok(vec![witness, negative, confluent, cancel, classes, theta])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            window: 2,
            seed: 1,
            picard_samples: 200,
            classification_samples: 50,
            k_theory_samples: 100,
        }
    }

    #[test]
    fn all_suites_pass_small() {
        for report in run("all", &small()).unwrap() {
            assert!(report.ok(), "{report}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run("nope", &small()).is_err());
    }

    #[test]
    fn brute_force_conjugacy() {
        let f = PicElement::new(Sign::Plus, 2, FinSet::from([0]));
        let g = PicElement::new(Sign::Plus, 2, FinSet::from([1]));
        let h = PicElement::shift(2);
        assert!(conjugate_by_search(&f, &g));
        assert!(!conjugate_by_search(&f, &h));
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(0, 3, 4).len(), 16);
        assert_eq!(subsets(-1, 1, 1).len(), 4);
    }

    #[test]
    fn check_reports() {
        let mut c = Check::new("x");
        assert!(!c.ok());
        c.record(true, String::new);
        assert!(c.ok());
        c.record(false, || "bad".into());
        assert!(!c.ok());
        assert!(c.to_string().contains("bad"));
    }
}
