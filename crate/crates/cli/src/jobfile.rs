//! JSON job files for `flagquant verify --jobfile`.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "jobs": [
//!     {"kind": "bbw", "family": "A", "rank": 2, "theta": [1], "weight": "0,-3", "degree": 2},
//!     {"kind": "star", "f": "zbar", "g": "z", "order": 1, "expect": ["z*zbar", "(1 + z*zbar)^2"]},
//!     {"kind": "suite", "suite": "berezin"}
//!   ]
//! }
//! ```
//!
//! Every job is parsed and validated before any is run.

use std::path::Path;

use flagquant::berezin::parse_word;
use flagquant::rational::{parse_rational, q};
use flagquant::rootsys::Weight;
use flagquant::starprod::{star, StarContext, DEFAULT_ORDER};
use flagquant::symbolic::RationalExpr;
use serde::Deserialize;

use crate::input::{self, usage, Failure};
use crate::output::SCHEMA_VERSION;
use crate::verify::{self, Case, Suite};
use crate::SystemArgs;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JobFile {
    schema_version: u32,
    jobs: Vec<Job>,
}

fn default_order() -> u32 {
    DEFAULT_ORDER
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum Job {
    /// A built-in suite.
    Suite { suite: Suite },
    /// BBW consistency and duality, with optional expectations.
    Bbw {
        family: String,
        rank: usize,
        #[serde(default)]
        theta: Vec<usize>,
        weight: String,
        #[serde(default)]
        vanishes: Option<bool>,
        #[serde(default)]
        degree: Option<usize>,
        #[serde(default)]
        highest_weight: Option<String>,
    },
    /// Trace identity and covariant symbol of a word on `O(n)`.
    Word {
        n: u32,
        word: String,
        #[serde(default)]
        symbol: Option<String>,
    },
    /// Star-product axioms, and the coefficients when given.
    Star {
        f: String,
        g: String,
        #[serde(default = "default_order")]
        order: u32,
        #[serde(default)]
        scale: Option<String>,
        #[serde(default)]
        expect: Option<Vec<String>>,
    },
    Associativity {
        f: String,
        g: String,
        h: String,
        #[serde(default = "default_order")]
        order: u32,
    },
    Asymptotics {
        f: String,
        g: String,
        ns: Vec<u32>,
        points: Vec<String>,
        #[serde(default = "default_factor")]
        factor: String,
    },
}

fn default_factor() -> String {
    "7/2".into()
}

pub fn load(path: &Path) -> Result<Vec<Case>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        Failure::Usage(m) => Failure::Usage(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn parse(text: &str) -> Result<Vec<Case>, Failure> {
    let file: JobFile = serde_json::from_str(text).map_err(|e| usage(e.to_string()))?;
    if file.schema_version != SCHEMA_VERSION {
        return Err(usage(format!(
            "unsupported schema_version {}, expected {SCHEMA_VERSION}",
            file.schema_version
        )));
    }
    let mut cases = Vec::new();
    for (i, job) in file.jobs.into_iter().enumerate() {
        let compiled = compile(i, job).map_err(|e| match e {
            Failure::Usage(m) => Failure::Usage(format!("job {i}: {m}")),
            other => other,
        })?;
        cases.extend(compiled);
    }
    Ok(cases)
}

fn compile(i: usize, job: Job) -> Result<Vec<Case>, Failure> {
    let id = |s: String| format!("job {i}: {s}");
    Ok(match job {
        Job::Suite { suite } => verify::suite_cases(suite),
        Job::Bbw {
            family,
            rank,
            theta,
            weight,
            vanishes,
            degree,
            highest_weight,
        } => {
            let theta = theta.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",");
            let pd = input::parabolic(&SystemArgs {
                family: family.clone(),
                rank,
                theta: theta.clone(),
            })?;
            let lam = input::weight(&weight, rank)?;
            if !pd.is_w_theta_invariant(&lam) {
                return Err(usage(format!("weight {lam} is not integral and zero on Θ")));
            }
            let zeta = highest_weight.map(|s| input::weight(&s, rank)).transpose()?;
            let label = id(format!("bbw {family}{rank} Θ={{{theta}}} λ=({weight})"));
            vec![Case::new("jobfile", label, move || {
                let detail = verify::bbw_consistent(&pd, &lam)?;
                verify::duality_outcome(&pd, &lam)?;
                let res = flagquant::bbw::bbw(&pd, &lam).map_err(|e| e.to_string())?;
                if vanishes.is_some_and(|v| v != res.vanishes()) {
                    return Err(format!("vanishing is {}, expected {}", res.vanishes(), !res.vanishes()));
                }
                if degree.is_some() && res.degree() != degree {
                    return Err(format!("degree {:?}, expected {degree:?}", res.degree()));
                }
                if let Some(z) = &zeta {
                    if res.highest_weight() != Some(z) {
                        return Err(format!("highest weight {:?}, expected {z}", res.highest_weight().map(Weight::to_string)));
                    }
                }
                Ok(detail)
            })]
        }
        Job::Word { n, word, symbol } => {
            let w = parse_word(&word)?;
            let expected = symbol.as_deref().map(input::expr).transpose()?;
            vec![Case::new("jobfile", id(format!("word n={n} u={word}")), move || {
                verify::trace_outcome(n, &w)?;
                let got = verify::symbol_outcome(n, &w)?;
                if let Some(e) = &expected {
                    let sigma = flagquant::berezin::Cp1Model::new(n).sigma_word(&w);
                    if &sigma != e {
                        return Err(format!("symbol {sigma}, expected {e}"));
                    }
                }
                Ok(got)
            })]
        }
        Job::Star {
            f,
            g,
            order,
            scale,
            expect,
        } => {
            let scale = scale.as_deref().map(parse_rational).transpose()?.unwrap_or_else(|| q(1, 1));
            let ctx = StarContext::fubini_study(scale, order)?;
            let (fe, ge) = (input::expr(&f)?, input::expr(&g)?);
            let expect: Option<Vec<RationalExpr>> = expect
                .map(|v| v.iter().map(|s| input::expr(s)).collect::<Result<_, _>>())
                .transpose()?;
            vec![Case::new("jobfile", id(format!("star f={f} g={g} order {order}")), move || {
                let detail = verify::axioms_outcome(&ctx, &fe, &ge)?;
                if let Some(want) = &expect {
                    let s = star(&ctx, &fe, &ge).map_err(|e| e.to_string())?;
                    for (r, w) in want.iter().enumerate() {
                        if r > s.order() || s.coeff(r) != w {
                            return Err(format!("C{r} differs from {w}"));
                        }
                    }
                }
                Ok(detail)
            })]
        }
        Job::Associativity { f, g, h, order } => {
            let (fe, ge, he) = (input::expr(&f)?, input::expr(&g)?, input::expr(&h)?);
            let ctx = StarContext::unit(order);
            vec![Case::new("jobfile", id(format!("associativity ({f}, {g}, {h})")), move || {
                verify::associativity_outcome(&ctx, &fe, &ge, &he)
            })]
        }
        Job::Asymptotics {
            f,
            g,
            ns,
            points,
            factor,
        } => {
            let (fe, ge) = (input::expr(&f)?, input::expr(&g)?);
            let points = points.iter().map(|p| input::constant(p)).collect::<Result<Vec<_>, _>>()?;
            let factor = parse_rational(&factor)?;
            if ns.len() < 2 {
                return Err(usage("asymptotics needs at least two sizes"));
            }
            vec![Case::new("jobfile", id(format!("asymptotics f={f} g={g}")), move || {
                verify::asymptotics_outcome(&fe, &ge, &ns, &points, &factor)
            })]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn usage_message(text: &str) -> String {
        match parse(text) {
            Err(Failure::Usage(m)) => m,
            Err(Failure::Internal(m)) => panic!("internal: {m}"),
            Ok(_) => panic!("accepted {text}"),
        }
    }

    #[test]
    fn rejects_unknown_fields_and_versions() {
        assert!(usage_message(r#"{"schema_version": 1, "jobs": [], "extra": 1}"#).contains("extra"));
        assert!(usage_message(r#"{"schema_version": 2, "jobs": []}"#).contains("schema_version"));
        let m = usage_message(r#"{"schema_version": 1, "jobs": [{"kind": "word", "n": 2, "word": "EF", "x": 1}]}"#);
        assert!(m.contains('x'), "{m}");
    }

    #[test]
    fn validates_before_running() {
        let m = usage_message(
            r#"{"schema_version": 1, "jobs": [
                {"kind": "word", "n": 2, "word": "EF"},
                {"kind": "bbw", "family": "A", "rank": 2, "theta": [3], "weight": "0,0"}
            ]}"#,
        );
        assert!(m.starts_with("job 1"), "{m}");
    }

    #[test]
    fn compiles_each_kind() {
        let cases = parse(
            r#"{"schema_version": 1, "jobs": [
                {"kind": "bbw", "family": "A", "rank": 2, "theta": [1], "weight": "0,-3", "degree": 2},
                {"kind": "word", "n": 2, "word": "H"},
                {"kind": "star", "f": "zbar", "g": "z", "order": 1},
                {"kind": "associativity", "f": "z", "g": "zbar", "h": "z*zbar", "order": 1},
                {"kind": "asymptotics", "f": "z", "g": "zbar", "ns": [4, 8], "points": ["1"]}
            ]}"#,
        )
        .unwrap();
        assert_eq!(cases.len(), 5);
    }
}
