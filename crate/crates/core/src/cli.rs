//! The `weylgraded` command line.
//!
//! [`run_command`] parses arguments and returns the exit code with the text
//! to print, so it can be driven from tests without a process. Exit codes are
//! 0 on success, 1 on a domain error and 2 on a usage or parse error.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::classification::{canonical_admissible, morita_class_count, same_morita_class};
use crate::error::{Error, Result};
use crate::expr::parse_expression;
use crate::finset::FinSet;
use crate::gwa::{
    gwa_root_test, oracle_pieces, present, ring_pieces, verify_gwa_embedding, verify_ring_closure,
};
use crate::k_theory::{
    iso_test, normalize_sum, stably_free_witness, theta_map, K0Class, ProjectiveSum, Summand,
};
use crate::lattice::{cokernel_factors, cokernel_support, hom_generator, iota_lattice, DSet};
use crate::picard::PicElement;
use crate::poly::rat_to_string;
use crate::verify::{self, VerifyConfig};
use crate::zfin::{necklace_count, necklace_enumerate};

#[derive(Parser, Debug)]
#[command(
    name = "weylgraded",
    version,
    about = "Exact computations with graded modules over the first Weyl algebra"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Sweep window for ring and verification commands.
    #[arg(long, global = true, default_value_t = 3, allow_negative_numbers = true)]
    window: i64,

    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Picard group elements, written like `S^2 * i{0,2} * w`.
    #[command(subcommand)]
    Pic(PicCmd),
    /// Graded Morita classification of generative elements.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Binary necklaces indexing the Morita classes.
    #[command(subcommand)]
    Necklace(NecklaceCmd),
    /// The rings S(J, n).
    #[command(subcommand)]
    Ring(RingCmd),
    /// Rank-one graded modules as lattices in D, written like `i{0,3}A<2>`.
    #[command(subcommand)]
    Mod(ModCmd),
    /// Graded K_0: sums of rank-one projectives, written like `i{1,3}A + A<3>`.
    #[command(subcommand)]
    K0(K0Cmd),
    /// Run invariant sweeps.
    Verify {
        /// all, or one of zfin, skew, lattices, picard, classification, rings, k_theory.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
enum PicCmd {
    /// Normal form, sign, rank and the image of A.
    Eval { expr: String },
    /// F^k.
    Pow {
        expr: String,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// F^-1.
    Inv { expr: String },
    /// G F G^-1.
    Conj { expr: String, by: String },
    /// Admissible form and conjugator.
    Canonical { expr: String },
}

#[derive(Subcommand, Debug)]
enum ClassifyCmd {
    /// Admissible form, conjugator and necklace class.
    Canonical { expr: String },
    /// Whether two generative elements give graded Morita equivalent rings.
    SameClass { first: String, second: String },
}

#[derive(Subcommand, Debug)]
enum NecklaceCmd {
    /// Number of necklace classes of length n.
    Count { n: u64 },
    /// The necklace classes of length n.
    Enum { n: i64 },
}

#[derive(Args, Debug)]
struct PairArgs {
    /// The set J, e.g. `0,2` or `{0,2}`.
    #[arg(long = "J", default_value = "", allow_hyphen_values = true)]
    set: FinSet,
    #[arg(long)]
    n: i64,
}

#[derive(Args, Debug)]
struct RangeArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Lowest degree j (defaults to -window).
    #[arg(long, allow_negative_numbers = true)]
    min: Option<i64>,
    /// Highest degree j (defaults to window).
    #[arg(long, allow_negative_numbers = true)]
    max: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum RingCmd {
    /// The generalized Weyl algebra presentation.
    Present(PairArgs),
    /// Graded pieces from the closed form.
    Pieces(RangeArgs),
    /// Graded pieces from the lattice construction.
    Oracle(RangeArgs),
    /// Closure, GWA relations and the simplicity root test.
    Verify(PairArgs),
}

#[derive(Subcommand, Debug)]
enum ModCmd {
    /// The X-side simple factors of a rank-one projective.
    Dset { module: String },
    /// Generators of the lattice.
    Lattice { module: String },
    /// Generator of Hom(P, Q) inside k(z).
    Hom { p: String, q: String },
    /// Composition factors of Q / hP for the maximal embedding h.
    Coker { p: String, q: String },
}

#[derive(Subcommand, Debug)]
enum K0Cmd {
    /// Chain form of a direct sum.
    Normalize { sum: String },
    /// Whether two sums are isomorphic.
    Iso { first: String, second: String },
    /// Free modules completing i_J A to a free module; J must be positive.
    Witness { set: FinSet },
    /// The involution attached to an integer combination like `i{0,3}A - A`.
    Theta {
        #[arg(allow_hyphen_values = true)]
        combination: String,
    },
}

fn pic(text: &str) -> Result<PicElement> {
    parse_expression(text)
}

fn pic_json(f: &PicElement) -> Value {
    let mut v = serde_json::to_value(f).expect("serializable");
    v["expression"] = json!(f.to_string());
    v
}

fn summand(text: &str) -> Result<Summand> {
    text.parse()
}

/// Signed terms `c·P` separated by `+` and `-` outside braces and brackets.
pub fn parse_combination(text: &str) -> Result<K0Class> {
    let t = text.trim();
    if t == "0" || t.is_empty() {
        return Ok(K0Class::zero());
    }
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut sign = 1;
    for (i, c) in t.char_indices() {
        match c {
            '{' | '<' => depth += 1,
            '}' | '>' => depth -= 1,
            '+' | '-' if depth == 0 => {
                if !t[start..i].trim().is_empty() {
                    terms.push((sign, &t[start..i]));
                } else if i != 0 && start != 0 {
                    return Err(Error::Parse { position: i, message: "missing term".into() });
                }
                sign = if c == '-' { -1 } else { 1 };
                start = i + 1;
            }
            _ => {}
        }
    }
    terms.push((sign, &t[start..]));
    let mut total = K0Class::zero();
    for (sign, term) in terms {
        let term = term.trim();
        let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
        let coeff: i64 = if digits == 0 { 1 } else { term[..digits].parse().map_err(|_| Error::invalid("coefficient too large"))? };
        let rest = term[digits..].trim().trim_start_matches('*').trim();
        let s = summand(rest)?;
        total = &total + &K0Class::of_set(&s.absorbed()).scale(sign * coeff);
    }
    Ok(total)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn necklace_value(n: u64) -> Result<Value> {
    let c = necklace_count(n)?;
    Ok(match u64::try_from(&c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    })
}

/// Output of a successful command, as text and as JSON.
struct Output {
    text: String,
    json: Value,
    /// Set when the command ran but its check failed.
    failed: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, failed: false }
    }
}

fn run_pic(cmd: &PicCmd) -> Result<Output> {
    Ok(match cmd {
        PicCmd::Eval { expr } => {
            let f = pic(expr)?;
            let (a, r) = f.sign_rank();
            let d = f.act_on_dset(&DSet::free());
            let text = format!(
                "{f}\nnormal form (a, b, J) = {f:?}\nsign {a:+}, rank {r}\ngenerative: {}\nD(F(A)) = {d}",
                yes_no(f.is_generative())
            );
            Output::new(
                text,
                json!({"element": pic_json(&f), "sign": a, "rank": r,
                       "generative": f.is_generative(), "dset_of_image": d}),
            )
        }
        PicCmd::Pow { expr, k } => {
            let g = pic(expr)?.pow(*k);
            Output::new(format!("{g}\n{g:?}"), pic_json(&g))
        }
        PicCmd::Inv { expr } => {
            let g = pic(expr)?.inverse();
            Output::new(format!("{g}\n{g:?}"), pic_json(&g))
        }
        PicCmd::Conj { expr, by } => {
            let g = pic(expr)?.conjugate_by(&pic(by)?);
            Output::new(format!("{g}\n{g:?}"), pic_json(&g))
        }
        PicCmd::Canonical { expr } => canonical_output(expr, false)?,
    })
}

fn canonical_output(expr: &str, with_class: bool) -> Result<Output> {
    let f = pic(expr)?;
    let c = canonical_admissible(&f)?;
    let neck = c.necklace();
    let mut text = format!(
        "admissible pair: {}\nconjugator g = {}  {:?}\ng F g^-1 = {}",
        c.pair,
        c.conjugator,
        c.conjugator,
        PicElement::from_pair(&c.pair)
    );
    let mut v = json!({"pair": c.pair, "conjugator": pic_json(&c.conjugator), "verified": c.verifies(&f)});
    if with_class {
        text.push_str(&format!("\nnecklace class: {neck}"));
        v["necklace"] = json!(neck.representative());
    }
    Ok(Output::new(text, v))
}

fn run_classify(cmd: &ClassifyCmd) -> Result<Output> {
    Ok(match cmd {
        ClassifyCmd::Canonical { expr } => canonical_output(expr, true)?,
        ClassifyCmd::SameClass { first, second } => {
            let (f, g) = (pic(first)?, pic(second)?);
            let same = same_morita_class(&f, &g)?;
            let (cf, cg) = (canonical_admissible(&f)?, canonical_admissible(&g)?);
            let text = format!(
                "{}\n{f}: {}\n{g}: {}",
                if same { "same graded Morita class" } else { "different graded Morita classes" },
                cf.necklace(),
                cg.necklace()
            );
            Output::new(
                text,
                json!({"same_class": same, "first": cf.necklace().representative(),
                       "second": cg.necklace().representative()}),
            )
        }
    })
}

fn run_necklace(cmd: &NecklaceCmd) -> Result<Output> {
    Ok(match cmd {
        NecklaceCmd::Count { n } => {
            let c = necklace_count(*n)?;
            Output::new(c.to_string(), json!({"n": n, "count": necklace_value(*n)?, "classes": morita_class_count(*n)?.to_string()}))
        }
        NecklaceCmd::Enum { n } => {
            let classes = necklace_enumerate(*n)?;
            let text = classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n");
            Output::new(text, json!(classes))
        }
    })
}

fn window_range(r: &RangeArgs, window: i64) -> (i64, i64) {
    (r.min.unwrap_or(-window), r.max.unwrap_or(window))
}

fn run_ring(cmd: &RingCmd, window: i64) -> Result<Output> {
    Ok(match cmd {
        RingCmd::Present(p) => {
            let pres = present(&p.set, p.n)?;
            Output::new(pres.to_string().trim_end(), json!(pres))
        }
        RingCmd::Pieces(r) => {
            let (lo, hi) = window_range(r, window);
            let pieces = ring_pieces(&r.pair.set, r.pair.n, lo, hi)?;
            Output::new(pieces.to_string().trim_end(), json!(pieces))
        }
        RingCmd::Oracle(r) => {
            let (lo, hi) = window_range(r, window);
            let pieces = oracle_pieces(&r.pair.set, r.pair.n, lo, hi)?;
            let closed = ring_pieces(&r.pair.set, r.pair.n, lo, hi)?;
            let agree = pieces == closed;
            let text = format!("{}agrees with closed form: {}", pieces, yes_no(agree));
            let mut out = Output::new(text, json!({"pieces": pieces, "agrees": agree}));
            out.failed = !agree;
            out
        }
        RingCmd::Verify(p) => {
            let closure = verify_ring_closure(&p.set, p.n, window)?;
            let embedding = verify_gwa_embedding(&p.set, p.n)?;
            let simple = gwa_root_test(&present(&p.set, p.n)?.f, p.n);
            let text = format!(
                "ring closure (window {window}): {}\nGWA relations: {}\nsimple hereditary root test: {}",
                yes_no(closure),
                yes_no(embedding),
                yes_no(simple)
            );
            let mut out = Output::new(
                text,
                json!({"closure": closure, "embedding": embedding, "root_test": simple, "window": window}),
            );
            out.failed = !(closure && embedding && simple);
            out
        }
    })
}

fn run_mod(cmd: &ModCmd) -> Result<Output> {
    let lattice = |text: &str| -> Result<_> {
        let s = summand(text)?;
        Ok((iota_lattice(&s.set, s.shift), s))
    };
    Ok(match cmd {
        ModCmd::Dset { module } => {
            let (l, s) = lattice(module)?;
            let d = l.dset();
            Output::new(format!("D({s}) = {d}"), json!({"module": s, "dset": d}))
        }
        ModCmd::Lattice { module } => {
            let (l, s) = lattice(module)?;
            Output::new(format!("{s}:\n{l}"), json!(l))
        }
        ModCmd::Hom { p, q } => {
            let ((lp, sp), (lq, sq)) = (lattice(p)?, lattice(q)?);
            let h = hom_generator(&lp, &lq);
            Output::new(format!("Hom({sp}, {sq}) = ({h})·k[z]"), json!({"generator": h}))
        }
        ModCmd::Coker { p, q } => {
            let ((lp, sp), (lq, sq)) = (lattice(p)?, lattice(q)?);
            let h = hom_generator(&lp, &lq);
            let factors = cokernel_factors(&lp, &lq);
            let support = cokernel_support(&lp, &lq);
            let listed: Vec<String> = factors
                .iter()
                .map(|(l, c)| if *c == 1 { l.to_string() } else { format!("{l}^{c}") })
                .collect();
            let text = format!(
                "{sq} / ({h})·{sp}: {}",
                if listed.is_empty() { "0".to_string() } else { listed.join(" + ") }
            );
            let support: Vec<Value> =
                support.iter().map(|(p, c)| json!({"point": rat_to_string(p), "count": c})).collect();
            let factors: Vec<Value> =
                factors.iter().map(|(l, c)| json!({"simple": l, "count": c})).collect();
            Output::new(text, json!({"embedding": h, "factors": factors, "support": support}))
        }
    })
}

fn run_k0(cmd: &K0Cmd) -> Result<Output> {
    Ok(match cmd {
        K0Cmd::Normalize { sum } => {
            let p: ProjectiveSum = sum.parse()?;
            let n = normalize_sum(&p);
            let class = K0Class::of_sum(&p);
            Output::new(format!("{n}\nclass: {class}"), json!({"chain": n, "class": class}))
        }
        K0Cmd::Iso { first, second } => {
            let (p, q): (ProjectiveSum, ProjectiveSum) = (first.parse()?, second.parse()?);
            let iso = iso_test(&p, &q);
            Output::new(
                format!("{}\n{}\n{}", yes_no(iso), normalize_sum(&p), normalize_sum(&q)),
                json!({"isomorphic": iso, "first": normalize_sum(&p), "second": normalize_sum(&q)}),
            )
        }
        K0Cmd::Witness { set } => {
            let (adds, result) = stably_free_witness(set)?;
            let lhs = ProjectiveSum::new(vec![Summand::iota(set.clone())])
                .direct_sum(&ProjectiveSum::of_shifts(adds.clone()));
            let rhs = ProjectiveSum::of_shifts(result.clone());
            let text = format!("{lhs} ≅ {rhs}");
            Output::new(text, json!({"adds": adds, "result": result, "verified": iso_test(&lhs, &rhs)}))
        }
        K0Cmd::Theta { combination } => {
            let c = parse_combination(combination)?;
            let t = theta_map(&c);
            Output::new(
                format!("theta({}) = {t}  {t:?}", c.reduced()),
                json!({"class": c, "reduced": c.reduced(), "theta": pic_json(&t)}),
            )
        }
    })
}

fn run_verify(suite: &str, cfg: VerifyConfig) -> Result<Output> {
    let cfg = cfg.capped()?;
    let reports = verify::run(suite, &cfg)?;
    let ok = reports.iter().all(|r| r.ok());
    let (passed, failed) = reports
        .iter()
        .flat_map(|r| &r.checks)
        .fold((0, 0), |(p, f), c| (p + c.passed, f + c.failed));
    let mut text: String = reports.iter().map(|r| r.to_string()).collect();
    text.push_str(&format!(
        "window {}, seed {}: {passed} passed, {failed} failed: {}",
        cfg.window,
        cfg.seed,
        if ok { "OK" } else { "FAILED" }
    ));
    let mut out = Output::new(
        text,
        json!({"window": cfg.window, "seed": cfg.seed, "passed": passed, "failed": failed, "ok": ok, "suites": reports}),
    );
    out.failed = !ok;
    Ok(out)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}

/// Runs the command line `argv` (including the program name) and returns the
/// exit code and the text to print.
pub fn run_command<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string().trim_end().to_string());
        }
    };
    let result = match &cli.command {
        Command::Pic(c) => run_pic(c),
        Command::Classify(c) => run_classify(c),
        Command::Necklace(c) => run_necklace(c),
        Command::Ring(c) => run_ring(c, cli.window),
        Command::Mod(c) => run_mod(c),
        Command::K0(c) => run_k0(c),
        Command::Verify { suite } => run_verify(
            suite,
            VerifyConfig { window: cli.window, seed: cli.seed, ..VerifyConfig::default() },
        ),
    };
    match result {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("serializable")
            } else {
                out.text
            };
            (i32::from(out.failed), text)
        }
        Err(e) => {
            let text = if cli.json {
                json!({"error": e.to_string()}).to_string()
            } else {
                format!("error: {e}")
            };
            (exit_code(&e), text)
        }
    }
}
