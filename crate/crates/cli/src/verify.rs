//! Built-in verification suites and the case runner behind `flagquant verify`.

use std::path::Path;

use clap::ValueEnum;
use flagquant::bbw::{bbw, duality_check, BbwResult};
use flagquant::berezin::{word_string, Cp1Model, Generator, OperatorMatrix};
use flagquant::parabolic::ParabolicData;
use flagquant::rational::q;
use flagquant::rootsys::{Family, RootSystem, Weight};
use flagquant::starprod::{
    associativity_defect, berezin_asymptotics, build_left_operator, poisson, sl2_operator_checks, star,
    test_functions, StarContext,
};
use flagquant::symbolic::gauss::{gi, gq, GaussRational};
use flagquant::symbolic::{parse_expr, FormalOperator, RationalExpr};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::input::{usage, Failure};
use crate::jobfile;
use crate::output::envelope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Rootsys,
    Bbw,
    Duality,
    Berezin,
    Star,
    Asymptotics,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Rootsys,
        Suite::Bbw,
        Suite::Duality,
        Suite::Berezin,
        Suite::Star,
        Suite::Asymptotics,
    ];
}

pub type Outcome = Result<String, String>;
type Check = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Case {
    pub suite: String,
    pub id: String,
    check: Check,
}

impl Case {
    pub fn new(suite: impl Into<String>, id: impl Into<String>, check: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Self {
            suite: suite.into(),
            id: id.into(),
            check: Box::new(check),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Record {
    pub suite: String,
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

pub struct Summary {
    records: Vec<Record>,
}

const BOX: (i64, i64) = (-3, 3);

fn bbw_systems() -> Vec<(Family, usize)> {
    use Family::*;
    vec![(A, 1), (A, 2), (A, 3), (B, 2), (B, 3), (C, 3), (G, 2)]
}

fn rootsys_systems() -> Vec<(Family, usize)> {
    use Family::*;
    vec![(A, 1), (A, 2), (A, 3), (A, 4), (B, 2), (B, 3), (C, 3), (C, 4), (D, 4), (G, 2), (F, 4)]
}

fn subsets(rank: usize) -> Vec<Vec<usize>> {
    (0u32..1 << rank)
        .map(|mask| (0..rank).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// All integral weights in the box with zero coordinates on `fixed`.
fn box_weights(rank: usize, lo: i64, hi: i64, fixed: &[usize]) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for i in 0..rank {
        let range: Vec<i64> = if fixed.contains(&i) { vec![0] } else { (lo..=hi).collect() };
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                range.iter().map(move |&c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.iter().map(|c| Weight::from_ints(c)).collect()
}

fn err(e: flagquant::Error) -> String {
    e.to_string()
}

fn theta_label(theta: &[usize]) -> String {
    let t: Vec<String> = theta.iter().map(|i| (i + 1).to_string()).collect();
    format!("Θ={{{}}}", t.join(","))
}

fn rootsys_case(family: Family, rank: usize) -> Case {
    Case::new("rootsys", format!("{}{rank}", family.letter()), move || {
        let sys = RootSystem::from_type(family, rank).map_err(err)?;
        let npos = sys.positive_roots().len();
        let w0 = sys.longest_element();
        if w0.len() != npos {
            return Err(format!("w0 has length {} but there are {npos} positive roots", w0.len()));
        }
        let rho = Weight::rho(rank);
        if sys.apply_word(&w0, &rho).map_err(err)? != rho.neg() {
            return Err("w0 does not send δ to −δ".into());
        }
        let weights = box_weights(rank, -2, 2, &[]);
        for lam in &weights {
            for i in 0..rank {
                let s = sys.simple_reflection(i, lam).map_err(err)?;
                if sys.simple_reflection(i, &s).map_err(err)? != *lam {
                    return Err(format!("s_{} is not an involution at {lam}", i + 1));
                }
                let mut before: Vec<_> = sys.pairings(lam).map_err(err)?.into_iter().map(|p| p.abs()).collect();
                let mut after: Vec<_> = sys.pairings(&s).map_err(err)?.into_iter().map(|p| p.abs()).collect();
                before.sort();
                after.sort();
                if before != after {
                    return Err(format!("s_{} does not permute roots up to sign at {lam}", i + 1));
                }
            }
            if lam.is_dominant() {
                let dual = sys.negate_by_w0(lam).map_err(err)?;
                if sys.weyl_dim(lam).map_err(err)? != sys.weyl_dim(&dual).map_err(err)? {
                    return Err(format!("dim V({lam}) ≠ dim V({dual})"));
                }
            }
        }
        Ok(format!("{npos} positive roots, {} weights", weights.len()))
    })
}

/// Checks a BBW answer against the Weyl-chamber data of `λ + δ`.
pub fn bbw_consistent(pd: &ParabolicData, lam: &Weight) -> Outcome {
    let sys = pd.system();
    let rho = Weight::rho(pd.rank());
    let shifted = lam.add(&rho);
    let pairings = sys.pairings(&shifted).map_err(err)?;
    let singular = pairings.iter().any(|p| p.is_zero());
    let negative = pairings.iter().filter(|p| *p < &q(0, 1)).count();
    match bbw(pd, lam).map_err(err)? {
        BbwResult::Vanishes if singular => Ok("vanishes".into()),
        BbwResult::Vanishes => Err(format!("{lam}: vanishes although λ+δ is regular")),
        BbwResult::Cohomology { .. } if singular => Err(format!("{lam}: nonzero although λ+δ is singular")),
        BbwResult::Cohomology {
            degree,
            highest_weight,
            dim,
            word,
        } => {
            let image = sys.apply_word(&word, &shifted).map_err(err)?.sub(&rho);
            if degree != negative || word.len() != degree {
                return Err(format!("{lam}: degree {degree}, word length {}, {negative} inversions", word.len()));
            }
            if image != highest_weight || !highest_weight.is_dominant() {
                return Err(format!("{lam}: ζ = {highest_weight} but w(λ+δ)−δ = {image}"));
            }
            if sys.weyl_dim(&highest_weight).map_err(err)? != dim {
                return Err(format!("{lam}: dim {dim} ≠ Weyl dimension of {highest_weight}"));
            }
            Ok(format!("H^{degree} = V({highest_weight}), dim {dim}"))
        }
    }
}

fn parabolic(family: Family, rank: usize, theta: &[usize]) -> Result<ParabolicData, String> {
    let sys = RootSystem::from_type(family, rank).map_err(err)?;
    ParabolicData::new(sys, theta.iter().copied()).map_err(err)
}

fn bbw_case(family: Family, rank: usize, theta: Vec<usize>) -> Case {
    let id = format!("{}{rank} {}", family.letter(), theta_label(&theta));
    Case::new("bbw", id, move || {
        let pd = parabolic(family, rank, &theta)?;
        let weights = box_weights(rank, BOX.0, BOX.1, &theta);
        let mut nonzero = 0;
        for lam in &weights {
            if bbw_consistent(&pd, lam)? != "vanishes" {
                nonzero += 1;
            }
        }
        Ok(format!("{} weights, {nonzero} nonvanishing", weights.len()))
    })
}

pub fn duality_outcome(pd: &ParabolicData, lam: &Weight) -> Outcome {
    let rep = duality_check(pd, lam).map_err(err)?;
    if rep.passed() {
        Ok(format!("{:?}", rep.outcome))
    } else {
        Err(format!("{lam}: {:?}", rep.outcome))
    }
}

fn duality_case(family: Family, rank: usize, theta: Vec<usize>) -> Case {
    let id = format!("{}{rank} {}", family.letter(), theta_label(&theta));
    Case::new("duality", id, move || {
        let pd = parabolic(family, rank, &theta)?;
        let canonical = pd.canonical_weight();
        match bbw(&pd, &canonical).map_err(err)? {
            BbwResult::Cohomology {
                degree,
                highest_weight,
                dim,
                ..
            } if degree == pd.m() && highest_weight == Weight::zero(rank) && dim == 1u32.into() => {}
            other => return Err(format!("canonical bundle {canonical}: {other:?}")),
        }
        let weights = box_weights(rank, BOX.0, BOX.1, &theta);
        for lam in &weights {
            duality_outcome(&pd, lam)?;
        }
        Ok(format!("{} weights, canonical {canonical} in degree {}", weights.len(), pd.m()))
    })
}

fn standard_words(max_len: usize) -> Vec<Vec<Generator>> {
    let mut words = vec![vec![]];
    let mut frontier: Vec<Vec<Generator>> = vec![vec![]];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w| {
                Generator::STANDARD.into_iter().map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        words.extend(frontier.iter().cloned());
    }
    words
}

pub fn trace_outcome(n: u32, word: &[Generator]) -> Outcome {
    let c = Cp1Model::new(n).trace_identity_check(word).map_err(err)?;
    if c.passed() {
        Ok(c.lhs.to_string())
    } else {
        Err(format!("n={n} u={}: {} vs {}", word_string(word), c.lhs, c.rhs))
    }
}

pub fn symbol_outcome(n: u32, word: &[Generator]) -> Outcome {
    let m = Cp1Model::new(n);
    let sigma = m.sigma_word(word);
    let cov = m.covariant_symbol(&m.tau_word(word)).map_err(err)?;
    if sigma == cov {
        Ok(sigma.to_string())
    } else {
        Err(format!("n={n} u={}: σ = {sigma}, covariant symbol {cov}", word_string(word)))
    }
}

fn fixed_matrix(dim: usize) -> OperatorMatrix {
    let rows = (0..dim)
        .map(|j| {
            (0..dim)
                .map(|k| gi(j as i64 + 2 * k as i64 - 3, j as i64 - k as i64) * gq(1, k as i64 + 1))
                .collect()
        })
        .collect();
    OperatorMatrix::from_rows(rows).expect("square by construction")
}

const PAIRING_FUNCTIONS: [&str; 5] = [
    "z*zbar/(1 + z*zbar)",
    "z + zbar",
    "(1 - z*zbar)/(1 + z*zbar)",
    "i*(z - zbar)/(1 + z*zbar)",
    "z^2*zbar/(1 + z*zbar)^2",
];

fn berezin_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=5u32 {
        out.push(Case::new("berezin", format!("trace n={n}"), move || {
            let words = standard_words(3);
            for w in &words {
                trace_outcome(n, w)?;
            }
            Ok(format!("{} words", words.len()))
        }));
        out.push(Case::new("berezin", format!("symbols n={n}"), move || {
            let words = standard_words(3);
            for w in &words {
                symbol_outcome(n, w)?;
            }
            Ok(format!("{} words", words.len()))
        }));
    }
    for n in 1..=4u32 {
        out.push(Case::new("berezin", format!("toeplitz n={n}"), move || {
            let m = Cp1Model::new(n);
            let a = fixed_matrix(m.dim());
            for s in PAIRING_FUNCTIONS {
                let g = parse_expr(s).map_err(err)?;
                let c = m.toeplitz_pairing_check(&a, &g).map_err(err)?;
                if !c.passed() {
                    return Err(format!("g={g}: {} vs {}", c.lhs, c.rhs));
                }
            }
            Ok(format!("{} functions", PAIRING_FUNCTIONS.len()))
        }));
    }
    out
}

pub fn axioms_outcome(ctx: &StarContext, f: &RationalExpr, g: &RationalExpr) -> Outcome {
    let fg = star(ctx, f, g).map_err(err)?;
    let gf = star(ctx, g, f).map_err(err)?;
    if fg.coeff(0) != &(f * g) {
        return Err(format!("C0({f}, {g}) = {} ≠ fg", fg.coeff(0)));
    }
    if fg.order() >= 1 {
        let bracket = poisson(ctx, f, g).scale(&gi(0, 1));
        if fg.coeff(1) - gf.coeff(1) != bracket {
            return Err(format!("C1({f}, {g}) − C1({g}, {f}) ≠ i{{f, g}} = {bracket}"));
        }
    }
    Ok(fg.to_string())
}

pub fn associativity_outcome(ctx: &StarContext, f: &RationalExpr, g: &RationalExpr, h: &RationalExpr) -> Outcome {
    let d = associativity_defect(ctx, f, g, h).map_err(err)?;
    match d.iter().position(|x| !x.is_zero()) {
        Some(r) => Err(format!("defect at ν^{r} for ({f}, {g}, {h}): {}", d[r])),
        None => Ok(format!("associative through ν^{}", ctx.order())),
    }
}

fn star_cases() -> Vec<Case> {
    let mut out = Vec::new();
    let names: Vec<&'static str> = test_functions().into_iter().map(|(n, _)| n).collect();
    for (i, nf) in names.iter().enumerate() {
        for (j, ng) in names.iter().enumerate() {
            out.push(Case::new("star", format!("axioms ({nf}, {ng})"), move || {
                let fs = test_functions();
                axioms_outcome(&StarContext::unit(2), &fs[i].1, &fs[j].1)
            }));
        }
    }
    for (i, nf) in names.iter().enumerate() {
        out.push(Case::new("star", format!("associativity ({nf}, ·, ·)"), move || {
            let fs = test_functions();
            let ctx = StarContext::unit(2);
            for (_, g) in &fs {
                for (_, h) in &fs {
                    associativity_outcome(&ctx, &fs[i].1, g, h)?;
                }
            }
            Ok(format!("{} triples", fs.len() * fs.len()))
        }));
    }
    out.push(Case::new("star", "separation of variables", || {
        let ctx = StarContext::unit(3);
        for s in ["1 + 2*z - z^3/3", "i*z^2", "(2 - i)*z"] {
            let a = parse_expr(s).map_err(err)?;
            if build_left_operator(&ctx, &a).map_err(err)? != FormalOperator::mult(a.clone()).truncate(3) {
                return Err(format!("L_a ≠ a for a = {a}"));
            }
        }
        for s in ["zbar^2 - i*zbar", "3 + zbar^3"] {
            let b = parse_expr(s).map_err(err)?;
            for (nf, f) in test_functions() {
                let p = star(&ctx, &f, &b).map_err(err)?;
                if p.coeff(0) != &(&f * &b) || !(1..=3).all(|r| p.coeff(r).is_zero()) {
                    return Err(format!("f ⋆ b ≠ fb for b = {b}, f = {nf}"));
                }
            }
        }
        Ok("3 holomorphic, 2 antiholomorphic".into())
    }));
    out.push(Case::new("star", "sl2 operators, unit potential", || {
        operator_outcome(StarContext::unit(3), &[q(1, 1)])
    }));
    out.push(Case::new("star", "sl2 operators, deformed potential", || {
        let lams = [q(-1, 1), q(-2, 1)];
        operator_outcome(StarContext::fubini_study_series(&lams, 3).map_err(err)?, &lams)
    }));
    out
}

fn operator_outcome(ctx: StarContext, lams: &[flagquant::rational::Rational]) -> Outcome {
    let checks = sl2_operator_checks(&ctx, lams).map_err(err)?;
    if let Some(c) = checks.iter().find(|c| !c.passed) {
        return Err(format!("{}: {}", c.label, c.detail));
    }
    Ok(format!("{} checks", checks.len()))
}

pub fn asymptotics_outcome(
    f: &RationalExpr,
    g: &RationalExpr,
    ns: &[u32],
    points: &[GaussRational],
    factor: &flagquant::rational::Rational,
) -> Outcome {
    let rep = berezin_asymptotics(f, g, ns, points).map_err(err)?;
    let f2 = factor * factor;
    let ratios: Vec<String> = rep
        .ratios
        .iter()
        .map(|r| match r.ratio() {
            Some(x) => format!("{x:.4}"),
            None => "0/0".into(),
        })
        .collect();
    if let Some(r) = rep.ratios.iter().find(|r| &f2 * &r.next_error_sq > r.error_sq) {
        return Err(format!("n={}→{}: error ratio below {factor} [{}]", r.n, r.next_n, ratios.join(", ")));
    }
    Ok(format!("ratios [{}]", ratios.join(", ")))
}

fn asymptotics_cases() -> Vec<Case> {
    [
        ("f_H/n", "(1 - z*zbar)/(1 + z*zbar)"),
        ("(f_H/n)^2", "(1 - z*zbar)^2/(1 + z*zbar)^2"),
    ]
    .into_iter()
    .map(|(name, s)| {
        Case::new("asymptotics", name, move || {
            let f = parse_expr(s).map_err(err)?;
            asymptotics_outcome(&f, &f, &[8, 16, 32, 64], &[gq(1, 2), gq(1, 1), gq(2, 1)], &q(7, 2))
        })
    })
    .collect()
}

pub fn suite_cases(suite: Suite) -> Vec<Case> {
    match suite {
        Suite::All => Suite::EACH.into_iter().flat_map(suite_cases).collect(),
        Suite::Rootsys => rootsys_systems().into_iter().map(|(f, r)| rootsys_case(f, r)).collect(),
        Suite::Bbw => bbw_systems()
            .into_iter()
            .flat_map(|(f, r)| subsets(r).into_iter().map(move |t| bbw_case(f, r, t)))
            .collect(),
        Suite::Duality => bbw_systems()
            .into_iter()
            .flat_map(|(f, r)| subsets(r).into_iter().map(move |t| duality_case(f, r, t)))
            .collect(),
        Suite::Berezin => berezin_cases(),
        Suite::Star => star_cases(),
        Suite::Asymptotics => asymptotics_cases(),
    }
}

/// Runs the cases on a pool of `jobs` threads; records keep case order.
pub fn execute(cases: &[Case], jobs: usize) -> Result<Vec<Record>, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    Ok(pool.install(|| {
        cases
            .par_iter()
            .map(|c| {
                let (passed, detail) = match (c.check)() {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                Record {
                    suite: c.suite.clone(),
                    id: c.id.clone(),
                    passed,
                    detail,
                }
            })
            .collect()
    }))
}

pub fn run(suite: Option<Suite>, jobfile: Option<&Path>, jobs: usize) -> Result<Summary, Failure> {
    if jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let mut cases = Vec::new();
    if let Some(path) = jobfile {
        cases.extend(jobfile::load(path)?);
    }
    if let Some(s) = suite.or(if jobfile.is_none() { Some(Suite::All) } else { None }) {
        cases.extend(suite_cases(s));
    }
    Ok(Summary {
        records: execute(&cases, jobs)?,
    })
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    fn first_failure(&self) -> Option<&Record> {
        self.records.iter().find(|r| !r.passed)
    }

    /// Per-suite (name, cases, failed) in first-seen order.
    fn tallies(&self) -> Vec<(&str, usize, usize)> {
        let mut out: Vec<(&str, usize, usize)> = Vec::new();
        for r in &self.records {
            let pos = match out.iter().position(|t| t.0 == r.suite) {
                Some(p) => p,
                None => {
                    out.push((&r.suite, 0, 0));
                    out.len() - 1
                }
            };
            out[pos].1 += 1;
            out[pos].2 += usize::from(!r.passed);
        }
        out
    }

    fn record_json(r: &Record) -> Value {
        json!({"suite": r.suite, "id": r.id, "passed": r.passed, "detail": r.detail})
    }

    pub fn records_json(&self) -> Value {
        envelope(
            "verify",
            json!({
                "passed": self.passed(),
                "records": self.records.iter().map(Self::record_json).collect::<Vec<_>>(),
            }),
        )
    }

    pub fn summary_json(&self) -> Value {
        let suites: Vec<Value> = self
            .tallies()
            .into_iter()
            .map(|(s, n, f)| json!({"suite": s, "cases": n, "passed": n - f, "failed": f}))
            .collect();
        let failed = self.records.iter().filter(|r| !r.passed).count();
        envelope(
            "verify",
            json!({
                "passed": self.passed(),
                "cases": self.records.len(),
                "failed": failed,
                "suites": suites,
                "first_failure": self.first_failure().map(Self::record_json),
            }),
        )
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for (s, n, f) in self.tallies() {
            let status = if f == 0 { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {s:<12} {:>4}/{n} cases\n", n - f));
        }
        if let Some(r) = self.first_failure() {
            out.push_str(&format!("first failure: [{}] {}: {}\n", r.suite, r.id, r.detail));
        }
        out.push_str(if self.passed() { "all cases passed\n" } else { "verification FAILED\n" });
        out
    }
}
