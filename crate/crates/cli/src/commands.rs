use std::path::Path;

use flagquant::bbw::{bbw as run_bbw, duality_check, BbwResult, DualityOutcome};
use flagquant::berezin::{parse_word, word_string, Cp1Model, OperatorMatrix};
use flagquant::parabolic::ParabolicData;
use flagquant::rational::{parse_rational, q, Rational};
use flagquant::rootsys::Weight;
use flagquant::smodule::{Inertia, SModulePoint};
use flagquant::starprod::{asymptotics_at, first_order_symbols, ratio_checks, star as run_star, StarContext};
use flagquant::symbolic::gauss::{self, GaussRational};
use flagquant::symbolic::RationalExpr;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::input::{self, usage, Failure};
use crate::output::{envelope, Report};
use crate::{SystemArgs, WeightArgs};

pub fn weight_json(w: &Weight) -> Value {
    w.coords().iter().map(|c| Value::String(c.to_string())).collect()
}

pub fn gauss_json(c: &GaussRational) -> Value {
    Value::String(gauss::Display(c).to_string())
}

fn system_json(pd: &ParabolicData) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("system".into(), pd.spec().to_string().into());
    m.insert("theta".into(), pd.theta().iter().map(|i| i + 1).collect());
    m
}

pub fn bbw_json(r: &BbwResult) -> Value {
    match r {
        BbwResult::Vanishes => json!({"vanishes": true}),
        BbwResult::Cohomology {
            degree,
            highest_weight,
            dim,
            word,
        } => json!({
            "vanishes": false,
            "degree": degree,
            "highest_weight": weight_json(highest_weight),
            "dim": dim.to_string(),
            "weyl_word": word.to_string(),
        }),
    }
}

fn weight_input(args: &WeightArgs) -> Result<(ParabolicData, Weight), Failure> {
    let pd = input::parabolic(&args.system)?;
    let lam = input::weight(&args.weight, pd.rank())?;
    Ok((pd, lam))
}

pub fn bbw(args: &WeightArgs, dual: bool) -> Result<Report, Failure> {
    let (pd, lam) = weight_input(args)?;
    let res = run_bbw(&pd, &lam)?;
    let mut body = system_json(&pd);
    body.insert("weight".into(), weight_json(&lam));
    body.insert("result".into(), bbw_json(&res));
    let mut passed = true;
    if dual {
        let rep = duality_check(&pd, &lam)?;
        passed = rep.passed();
        let outcome = match &rep.outcome {
            DualityOutcome::BothVanish => "both vanish".to_string(),
            DualityOutcome::Dual => "dual".to_string(),
            DualityOutcome::Mismatch(why) => format!("mismatch: {why}"),
        };
        body.insert(
            "duality".into(),
            json!({
                "dual_weight": weight_json(&rep.lambda_dual),
                "m": rep.m,
                "dual_result": bbw_json(&rep.dual),
                "outcome": outcome,
                "passed": passed,
            }),
        );
    }
    Ok(Report {
        json: envelope("bbw", Value::Object(body)),
        passed,
    })
}

fn smodule(args: &WeightArgs) -> Result<SModulePoint, Failure> {
    let (pd, lam) = weight_input(args)?;
    Ok(SModulePoint::new(pd, lam)?)
}

fn inertia_json(i: Inertia) -> Value {
    match i {
        Inertia::Index(k) => k.into(),
        Inertia::Degenerate => "degenerate".into(),
    }
}

pub fn inertia(args: &WeightArgs) -> Result<Report, Failure> {
    let s = smodule(args)?;
    let mut body = system_json(s.parabolic());
    body.insert("weight".into(), weight_json(s.lam()));
    body.insert("m".into(), s.parabolic().m().into());
    body.insert("inertia".into(), inertia_json(s.inertia_index()));
    Ok(Report::ok("inertia", Value::Object(body)))
}

pub fn dual(args: &WeightArgs) -> Result<Report, Failure> {
    let s = smodule(args)?;
    let d = s.dual();
    let mut body = system_json(s.parabolic());
    body.insert("weight".into(), weight_json(s.lam()));
    body.insert("dual_weight".into(), weight_json(d.lam()));
    body.insert("inertia".into(), inertia_json(s.inertia_index()));
    body.insert("dual_inertia".into(), inertia_json(d.inertia_index()));
    Ok(Report::ok("dual", Value::Object(body)))
}

pub fn canonical(args: &SystemArgs) -> Result<Report, Failure> {
    let pd = input::parabolic(args)?;
    let mut body = system_json(&pd);
    body.insert("m".into(), pd.m().into());
    body.insert("canonical_weight".into(), weight_json(&pd.canonical_weight()));
    Ok(Report::ok("canonical", Value::Object(body)))
}

fn read_matrix(path: &Path) -> Result<OperatorMatrix, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let rows: Vec<Vec<String>> =
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: expected an array of rows of strings: {e}", path.display())))?;
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| input::constant(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OperatorMatrix::from_rows(rows)?)
}

fn evaluate(e: &RationalExpr, at: Option<&str>) -> Result<Option<Value>, Failure> {
    let Some(s) = at else { return Ok(None) };
    let (z, zbar) = input::point(s)?;
    Ok(Some(gauss_json(&e.eval(&z, &zbar)?)))
}

pub fn symbol(n: u32, word: Option<&str>, matrix: Option<&Path>, at: Option<&str>) -> Result<Report, Failure> {
    let model = Cp1Model::new(n);
    let mut body = Map::new();
    body.insert("n".into(), n.into());
    let sym = match (word, matrix) {
        (Some(w), _) => {
            let w = parse_word(w)?;
            body.insert("word".into(), word_string(&w).into());
            model.sigma_word(&w)
        }
        (None, Some(path)) => {
            let a = read_matrix(path)?;
            body.insert("matrix_file".into(), path.display().to_string().into());
            model.covariant_symbol(&a)?
        }
        (None, None) => return Err(usage("one of --word or --matrix-file is required")),
    };
    body.insert("symbol".into(), sym.to_string().into());
    if let Some(v) = evaluate(&sym, at)? {
        body.insert("value".into(), v);
    }
    Ok(Report::ok("symbol", Value::Object(body)))
}

pub fn star(n: Option<&str>, f: &str, g: &str, order: u32, at: Option<&str>) -> Result<Report, Failure> {
    let scale = match n {
        Some(s) => parse_rational(s)?,
        None => q(1, 1),
    };
    let ctx = StarContext::fubini_study(scale.clone(), order)?;
    let (fe, ge) = (input::expr(f)?, input::expr(g)?);
    let series = run_star(&ctx, &fe, &ge)?;
    let mut coeffs = Map::new();
    let mut values = Map::new();
    for (r, c) in series.coeffs().iter().enumerate() {
        coeffs.insert(format!("C{r}"), c.to_string().into());
        if let Some(v) = evaluate(c, at)? {
            values.insert(format!("C{r}"), v);
        }
    }
    let mut body = Map::new();
    body.insert("potential_scale".into(), scale.to_string().into());
    body.insert("order".into(), order.into());
    body.insert("f".into(), fe.to_string().into());
    body.insert("g".into(), ge.to_string().into());
    body.insert("coefficients".into(), Value::Object(coeffs));
    if at.is_some() {
        body.insert("values".into(), Value::Object(values));
    }
    Ok(Report::ok("star", Value::Object(body)))
}

pub struct AsymptoticsOutput {
    pub output: Report,
    pub passed: bool,
    rows: Vec<(u32, String, f64)>,
}

fn sqrt_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::INFINITY).sqrt()
}

pub fn asymptotics(f: &str, g: &str, ns: &str, points: &str, factor: &str) -> Result<AsymptoticsOutput, Failure> {
    let (fe, ge) = (input::expr(f)?, input::expr(g)?);
    let ns = input::list(ns, ',', |t| t.parse::<u32>().map_err(|_| usage(format!("`{t}` is not a size"))))?;
    let points = input::list(points, ';', input::constant)?;
    let factor = parse_rational(factor)?;
    let (c0, c1) = first_order_symbols(&fe, &ge)?;
    let mut samples = Vec::new();
    for &n in &ns {
        samples.extend(asymptotics_at(&fe, &ge, &c0, &c1, n, &points)?);
    }
    let ratios = ratio_checks(&samples, &factor);
    let passed = ratios.iter().all(|r| r.passed);
    let rows: Vec<(u32, String, f64)> = samples
        .iter()
        .map(|s| (s.n, gauss::Display(&s.point).to_string(), sqrt_f64(&s.error_sq)))
        .collect();
    let sample_json: Vec<Value> = rows
        .iter()
        .map(|(n, p, e)| json!({"n": n, "point": p, "error": format!("{e:.6e}")}))
        .collect();
    let ratio_json: Vec<Value> = ratios
        .iter()
        .map(|r| {
            json!({
                "point": gauss_json(&r.point),
                "n": r.n,
                "next_n": r.next_n,
                "ratio": match r.ratio() {
                    Some(x) => format!("{x:.4}"),
                    None if r.error_sq.is_zero() => "0/0".to_string(),
                    None => "inf".to_string(),
                },
                "passed": r.passed,
            })
        })
        .collect();
    let body = json!({
        "f": fe.to_string(),
        "g": ge.to_string(),
        "C0": c0.to_string(),
        "C1": c1.to_string(),
        "factor": factor.to_string(),
        "samples": sample_json,
        "ratios": ratio_json,
        "passed": passed,
    });
    Ok(AsymptoticsOutput {
        output: Report {
            json: envelope("asymptotics", body),
            passed,
        },
        passed,
        rows,
    })
}

pub fn asymptotics_csv(rep: &AsymptoticsOutput) -> String {
    let mut out = String::from("n,point,error\n");
    for (n, p, e) in &rep.rows {
        out.push_str(&format!("{n},{p},{e:.6e}\n"));
    }
    out
}
