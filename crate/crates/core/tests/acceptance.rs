//! Acceptance gate: one PASS/FAIL line per criterion, then a single assertion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use weylgraded::gwa::{endo_lattice, weyl_piece};
use weylgraded::k_theory::{chain_from_counts, normalize_with, single_complement_search};
use weylgraded::verify::{self, conjugate_by_search, subsets, Check, VerifyConfig};
use weylgraded::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn checks_pass(checks: &[Check], names: &[&str]) -> std::result::Result<u64, String> {
    let mut total = 0;
    for name in names {
        let c = checks
            .iter()
            .find(|c| c.name == *name)
            .ok_or_else(|| format!("no check named {name:?}"))?;
        ensure(c.ok(), || c.to_string())?;
        total += c.passed;
    }
    Ok(total)
}

fn set<const N: usize>(a: [i64; N]) -> FinSet {
    FinSet::from(a)
}

fn poly<const N: usize>(roots_at_minus: [i64; N]) -> RationalPoly {
    Poly::product_of_linear(roots_at_minus).into()
}

/// Necklaces of length `n` by brute force over bitmasks.
fn necklaces_by_bitmask(n: u32) -> usize {
    let mask = (1u32 << n) - 1;
    let rotate = |b: u32, r: u32| ((b << r) | (b >> (n - r))) & mask;
    (0..=mask)
        .filter(|&b| (1..n).all(|r| rotate(b, r) >= b))
        .count()
}

fn necklaces() -> Outcome {
    let expected = [2u64, 3, 4, 6, 8, 14];
    for (n, &want) in (1..=6).zip(&expected) {
        let count: u64 = necklace_count(n).map_err(|e| e.to_string())?.try_into().unwrap();
        ensure(count == want, || format!("count({n}) = {count}, want {want}"))?;
    }
    for n in 1..=12 {
        let count: u64 = necklace_count(n as u64).unwrap().try_into().unwrap();
        let listed = necklace_enumerate(n).unwrap().len();
        let brute = necklaces_by_bitmask(n as u32);
        ensure(count as usize == listed && listed == brute, || {
            format!("n = {n}: formula {count}, enumeration {listed}, bitmask {brute}")
        })?;
    }
    Ok("counts 2,3,4,6,8,14; formula = enumeration = bitmask brute force for n <= 12".into())
}

/// Rotation classes computed directly, for comparing with the library.
fn rotation_class(p: &AdmissiblePair) -> BTreeSet<Vec<i64>> {
    let n = p.n();
    (0..n)
        .map(|r| {
            let mut v: Vec<i64> = p.set().iter().map(|j| (j + r).rem_euclid(n)).collect();
            v.sort();
            v
        })
        .collect()
}

fn classification() -> Outcome {
    let mut verified = 0;
    for n in 1..=4 {
        let pairs = AdmissiblePair::all(n).unwrap();
        for p in &pairs {
            let f = PicElement::from_pair(p);
            let c = canonical_admissible(&f).map_err(|e| e.to_string())?;
            let lhs = c.conjugator.compose(&f).compose(&c.conjugator.inverse());
            ensure(lhs == PicElement::from_pair(&c.pair), || format!("{p}: bad conjugator"))?;
            verified += 1;
        }
        for p in &pairs {
            for q in &pairs {
                let (f, g) = (PicElement::from_pair(p), PicElement::from_pair(q));
                let fast = same_morita_class(&f, &g).unwrap();
                let necklace = rotation_class(p) == rotation_class(q);
                let brute = conjugate_by_search(&f, &g);
                ensure(fast == necklace && fast == brute, || {
                    format!("{p} vs {q}: library {fast}, necklace {necklace}, search {brute}")
                })?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(2024);
    let mut seen = 0;
    let mut sample = Vec::new();
    while seen < 500 {
        let f = PicElement::random(&mut rng, false, 4, (-4, 4), 6);
        if !f.is_generative() {
            continue;
        }
        seen += 1;
        let c = canonical_admissible(&f).map_err(|e| e.to_string())?;
        let lhs = c.conjugator.compose(&f).compose(&c.conjugator.inverse());
        ensure(lhs == PicElement::from_pair(&c.pair), || format!("{f:?}: bad conjugator"))?;
        ensure(c.pair.n() == f.shift_exponent().abs(), || format!("{f:?}: wrong n"))?;
        sample.push((f, c.pair));
    }
    for w in sample.windows(2) {
        let ((f, p), (g, q)) = (&w[0], &w[1]);
        let want = p.n() == q.n() && rotation_class(p) == rotation_class(q);
        ensure(same_morita_class(f, g).unwrap() == want, || format!("{f:?} vs {g:?}"))?;
    }
    Ok(format!("{verified} admissible forms and 500 random elements verified"))
}

fn ring_oracle() -> Outcome {
    let mut compared = 0;
    for n in 1..=3 {
        for p in AdmissiblePair::all(n).unwrap() {
            for j in -3..=3 {
                let a = twisted_endo_piece_oracle(p.set(), n, j).unwrap();
                let b = graded_piece_closed_form(p.set(), n, j).unwrap();
                ensure(a == b, || format!("{p} j = {j}: oracle {a}, closed form {b}"))?;
                compared += 1;
            }
        }
    }
    // S({0},1): z y^-j k[z] for j != 0 and k[z] in degree 0
    for j in -3..=3 {
        let got = twisted_endo_piece_oracle(&set([0]), 1, j).unwrap();
        let want = if j == 0 { Piece { h: RationalPoly::one(), p: 0 } } else { Piece { h: poly([0]), p: -j } };
        ensure(got == want, || format!("S({{0}},1) degree {j}: {got}"))?;
    }
    // S(empty, 2) against A in degree 2j: x^m = z(z+1)..(z+m-1) y^-m and y^r
    for j in -3..=3 {
        let m = 2 * j;
        let want = if m >= 0 {
            Piece { h: Poly::product_of_linear(0..m).into(), p: -m }
        } else {
            Piece { h: RationalPoly::one(), p: -m }
        };
        let got = twisted_endo_piece_oracle(&FinSet::new(), 2, j).unwrap();
        ensure(got == want && weyl_piece(m) == want, || format!("Veronese degree {j}: {got}"))?;
    }
    // M(1) for ({0},2) really is a lattice of A-module type
    ensure(endo_lattice(&set([0]), 2, 1).unwrap().is_a_module(), || "M(1) is not a module".into())?;
    Ok(format!("{compared} pieces agree; displayed S({{0}},1) and Veronese pieces reproduced"))
}

fn ring_structure() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        for p in AdmissiblePair::all(n).unwrap() {
            ensure(verify_ring_closure(p.set(), n, 3).unwrap(), || format!("closure fails for {p}"))?;
            ensure(verify_gwa_embedding(p.set(), n).unwrap(), || format!("GWA relations fail for {p}"))?;
            count += 1;
        }
    }
    Ok(format!("closure and GWA relations hold for all {count} admissible pairs with n <= 4"))
}

fn picard() -> Outcome {
    let cfg = VerifyConfig { seed: 5, ..VerifyConfig::default() };
    let checks = verify::picard_checks(&cfg).map_err(|e| e.to_string())?;
    let n = checks_pass(
        &checks,
        &[
            "group axioms",
            "sign and rank form a homomorphism",
            "kernel of sign and rank is the involutions",
            "odd elements have order dividing 4",
            "sign and rank reach every tested value",
        ],
    )?;
    let w = PicElement::omega();
    ensure(w.compose(&w).is_identity(), || "w^2 != e".into())?;
    // the kernel is FinSet under symmetric difference
    let mut rng = StdRng::seed_from_u64(11);
    let all = subsets(-5, 5, 11);
    for _ in 0..1000 {
        let j = all[rng.gen_range(0..all.len())].clone();
        let k = all[rng.gen_range(0..all.len())].clone();
        let prod = PicElement::iota(j.clone()).compose(&PicElement::iota(k.clone()));
        ensure(prod == PicElement::iota(&j ^ &k), || format!("iota {j} iota {k}"))?;
    }
    Ok(format!("{n} randomized group checks passed"))
}

fn action_oracle() -> Outcome {
    let mut count = 0;
    for j in subsets(-2, 2, 5) {
        for b in -2..=2 {
            let f = PicElement::new(Sign::Plus, b, j.clone());
            let predicted = f.act_on_dset(&DSet::free());
            let l = GradedLattice::unit().involution_set(&j).shift(b);
            for t in -8..=8 {
                let is_x = l.simple_factor(t) == SimpleLabel::x(t);
                ensure(is_x == predicted.contains(t), || format!("{f:?} at {t}"))?;
            }
            count += 1;
        }
    }
    let f = parse_expression("S * i{0}").unwrap();
    let mut l = GradedLattice::unit();
    for n in 1..=5 {
        l = l.involution(0).shift(1);
        let want = iota_lattice(&set([0, n]), 0).dset();
        ensure(l.dset() == want, || format!("lattice F^{n} A"))?;
        ensure(f.pow(n).act_on_dset(&DSet::free()) == want, || format!("action F^{n} A"))?;
    }
    Ok(format!("{count} elements match lattice simple factors; F^n A = i{{0,n}}A for n <= 5"))
}

fn simples_and_duality() -> Outcome {
    let x = SimpleLabel::x;
    let y = SimpleLabel::y;
    let m = |p: i64, q: i64| SimpleLabel::m(Rat::new(p.into(), q.into())).unwrap();
    let table = [
        (x(0), y(0), 1),
        (y(0), x(0), 1),
        (x(2), y(2), 1),
        (x(0), y(1), 0),
        (x(0), x(0), 0),
        (y(0), y(0), 0),
        (x(1), x(3), 0),
        (m(1, 2), m(1, 2), 1),
        (m(1, 2), m(3, 2), 0),
        (m(1, 3), m(1, 2), 0),
        (m(1, 2), x(0), 0),
        (x(0), m(1, 2), 0),
        (m(-2, 3), y(1), 0),
        (y(-1), m(5, 2), 0),
    ];
    for (s, t, want) in &table {
        ensure(ext_dim_simples(s, t) == *want, || format!("ext({s}, {t})"))?;
    }
    let mut count = 0;
    for j in subsets(-3, 3, 3) {
        for s in -2..=2 {
            let p = iota_lattice(&j, s);
            let d = to_dset(&j, s);
            for t in -5..=5 {
                let f = p.simple_factor(t);
                let is_x = f == x(t);
                ensure(is_x != (f == y(t)), || format!("{j}<{s}> at {t}: {f}"))?;
                // P/iota_t P is the simple factor and the inclusion is maximal
                let sub = p.involution(t);
                let support = cokernel_support(&sub, &p);
                ensure(
                    hom_generator(&sub, &p).is_one() && support == vec![(Rat::from_integer((-t).into()), 1)],
                    || format!("{j}<{s}> at {t}: cokernel {support:?}"),
                )?;
                ensure(is_x == d.contains(t), || format!("{j}<{s}> at {t}: DSet disagrees"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{} ext entries; dichotomy holds in {count} cases", table.len()))
}

fn k_theory() -> Outcome {
    let (adds, result) = stably_free_witness(&set([1, 3])).map_err(|e| e.to_string())?;
    ensure(adds == [3, 1] && result == [4, 2, 0], || format!("{adds:?} {result:?}"))?;
    let lhs: ProjectiveSum = "i{1,3}A + A<3> + A<1>".parse().unwrap();
    ensure(iso_test(&lhs, &ProjectiveSum::of_shifts([4, 2, 0])), || "witness not isomorphic".into())?;
    let found = single_complement_search(&set([1, 3]), 8);
    ensure(found.is_none(), || format!("unexpected complement {found:?}"))?;
    let mut rng = StdRng::seed_from_u64(99);
    let random_sum = |rng: &mut StdRng| {
        let len = rng.gen_range(0..=5);
        ProjectiveSum::new(
            (0..len)
                .map(|_| {
                    let j: FinSet = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(-4..=4)).collect();
                    Summand::new(j, rng.gen_range(-3..=3))
                })
                .collect(),
        )
    };
    for _ in 0..1000 {
        let (p, q) = (random_sum(&mut rng), random_sum(&mut rng));
        let n = normalize_sum(&p);
        let other = normalize_with(&p, |len| len / 2);
        ensure(n.is_chain() && n == other && n == chain_from_counts(&p), || format!("confluence: {p}"))?;
        let q2 = if rng.gen_bool(0.5) { normalize_sum(&q) } else { random_sum(&mut rng) };
        ensure(
            iso_test(&p.direct_sum(&q), &p.direct_sum(&q2)) == iso_test(&q, &q2),
            || format!("cancellation: {p} | {q} | {q2}"),
        )?;
    }
    Ok("witness [3,1] -> [4,2,0]; no single complement within 8; 1000 random sums".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("necklace counts", necklaces),
        ("classification pipeline", classification),
        ("ring piece oracle", ring_oracle),
        ("ring structure", ring_structure),
        ("picard group", picard),
        ("action oracle", action_oracle),
        ("simples and duality", simples_and_duality),
        ("k-theory", k_theory),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", k + 1),
            Err(why) => {
                println!("FAIL {} {name}: {why}", k + 1);
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
