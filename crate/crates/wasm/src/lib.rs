//! Browser bindings for the flagquant demo page.
//!
//! Each export takes plain strings and returns a JSON string, so the logic is
//! testable natively through the `*_json` functions.

use flagquant::bbw::{bbw, duality_check, BbwResult};
use flagquant::berezin::{parse_word, Cp1Model};
use flagquant::parabolic::ParabolicData;
use flagquant::rational::{parse_rational, q, Rational};
use flagquant::rootsys::{Family, RootSystem, Weight};
use flagquant::smodule::{Inertia, SModulePoint};
use flagquant::starprod::{asymptotics_at, first_order_symbols};
use flagquant::symbolic::gauss::{self, GaussRational};
use flagquant::symbolic::parse_expr;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

type Res<T> = Result<T, String>;

fn err(e: flagquant::Error) -> String {
    e.to_string()
}

fn weight_strings(w: &Weight) -> Vec<String> {
    w.coords().iter().map(|c| c.to_string()).collect()
}

fn cohomology(r: &BbwResult) -> Value {
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
            "highest_weight": weight_strings(highest_weight),
            "dim": dim.to_string(),
            "weyl_word": word.to_string(),
        }),
    }
}

fn theta(s: &str, rank: usize) -> Res<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
            _ => Err(format!("`{t}` is not a root index in 1..={rank}")),
        })
        .collect()
}

/// BBW, duality and inertia for one weight; `theta` holds 1-based indices.
pub fn bbw_json(family: &str, rank: usize, theta_list: &str, weight: &str) -> Res<Value> {
    let family: Family = family.parse().map_err(err)?;
    let sys = RootSystem::from_type(family, rank).map_err(err)?;
    let pd = ParabolicData::new(sys, theta(theta_list, rank)?).map_err(err)?;
    let lam: Weight = weight.parse().map_err(err)?;
    if lam.rank() != rank {
        return Err(format!("weight has {} coordinates, rank is {rank}", lam.rank()));
    }
    let res = bbw(&pd, &lam).map_err(err)?;
    let dual = duality_check(&pd, &lam).map_err(err)?;
    let inertia = match SModulePoint::new(pd.clone(), lam.clone()) {
        Ok(s) => match (s.inertia_index(), s.dual().inertia_index()) {
            (Inertia::Index(a), Inertia::Index(b)) => json!({"inertia": a, "dual_inertia": b}),
            _ => json!({"degenerate": true}),
        },
        Err(_) => Value::Null,
    };
    Ok(json!({
        "system": pd.spec().to_string(),
        "m": pd.m(),
        "positive_roots": pd.system().positive_roots().len(),
        "canonical_weight": weight_strings(&pd.canonical_weight()),
        "weight": weight_strings(&lam),
        "result": cohomology(&res),
        "dual_weight": weight_strings(&dual.lambda_dual),
        "dual_result": cohomology(&dual.dual),
        "duality_holds": dual.passed(),
        "smodule": inertia,
    }))
}

/// Real and imaginary parts of `σ_u` on a `size × size` grid over
/// `[−extent, extent]²` in the chart `z = x + iy`.
pub fn heatmap_json(n: u32, word: &str, size: usize, extent: &str) -> Res<Value> {
    if !(2..=101).contains(&size) {
        return Err("grid size must be in 2..=101".into());
    }
    let w = parse_word(word).map_err(err)?;
    let r = parse_rational(extent).map_err(err)?;
    let sym = Cp1Model::new(n).sigma_word(&w);
    let step = |k: usize| -> Rational { &r * q(2 * k as i64 - (size as i64 - 1), size as i64 - 1) };
    let mut re = Vec::with_capacity(size * size);
    let mut im = Vec::with_capacity(size * size);
    for row in 0..size {
        let y = step(size - 1 - row);
        for col in 0..size {
            let z = GaussRational::new(step(col), y.clone());
            let v = sym.eval_at(&z).map_err(err)?;
            let (a, b) = gauss::to_f64(&v);
            re.push(a);
            im.push(b);
        }
    }
    Ok(json!({"symbol": sym.to_string(), "size": size, "extent": r.to_string(), "re": re, "im": im}))
}

/// Error of `C₀ + C₁/n` against the exact operator product at one point,
/// for each `n` in the comma-separated list.
pub fn asymptotics_json(f: &str, g: &str, ns: &str, point: &str) -> Res<Value> {
    let f = parse_expr(f).map_err(err)?;
    let g = parse_expr(g).map_err(err)?;
    let w = parse_expr(point)
        .map_err(err)?
        .as_constant()
        .ok_or_else(|| format!("`{point}` is not a constant"))?;
    let ns: Vec<u32> = ns
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("`{t}` is not a size")))
        .collect::<Res<_>>()?;
    let (c0, c1) = first_order_symbols(&f, &g).map_err(err)?;
    let mut errors = Vec::new();
    for &n in &ns {
        let s = asymptotics_at(&f, &g, &c0, &c1, n, std::slice::from_ref(&w)).map_err(err)?;
        errors.push(s[0].error_sq.to_f64().unwrap_or(f64::INFINITY).sqrt());
    }
    Ok(json!({"C0": c0.to_string(), "C1": c1.to_string(), "ns": ns, "errors": errors}))
}

fn respond(r: Res<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

#[wasm_bindgen]
pub fn explore_bbw(family: &str, rank: usize, theta: &str, weight: &str) -> String {
    respond(bbw_json(family, rank, theta, weight))
}

#[wasm_bindgen]
pub fn symbol_heatmap(n: u32, word: &str, size: usize, extent: &str) -> String {
    respond(heatmap_json(n, word, size, extent))
}

#[wasm_bindgen]
pub fn asymptotics_curve(f: &str, g: &str, ns: &str, point: &str) -> String {
    respond(asymptotics_json(f, g, ns, point))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explorer_reports_duality() {
        let v = bbw_json("A", 2, "1", "0,-3").unwrap();
        assert_eq!(v["result"]["degree"], 2);
        assert_eq!(v["dual_weight"], json!(["0", "0"]));
        assert_eq!(v["dual_result"]["degree"], 0);
        assert_eq!(v["duality_holds"], true);
        assert!(bbw_json("A", 2, "4", "0,0").is_err());
    }

    #[test]
    fn heatmap_of_h_is_real() {
        let v = heatmap_json(1, "H", 5, "2").unwrap();
        let re: Vec<f64> = serde_json::from_value(v["re"].clone()).unwrap();
        let im: Vec<f64> = serde_json::from_value(v["im"].clone()).unwrap();
        assert_eq!(re.len(), 25);
        assert!(im.iter().all(|x| *x == 0.0));
        // centre z = 0 gives σ_H = 1
        assert_eq!(re[12], 1.0);
        // z = 2 gives (1 − 4)/(1 + 4)
        assert!((re[14] + 0.6).abs() < 1e-12);
    }

    #[test]
    fn curve_decays() {
        let f = "(1 - z*zbar)^2/(1 + z*zbar)^2";
        let v = asymptotics_json(f, f, "4,8,16", "1").unwrap();
        let e: Vec<f64> = serde_json::from_value(v["errors"].clone()).unwrap();
        assert!(e[0] > 3.5 * e[1] && e[1] > 3.5 * e[2], "{e:?}");
    }

    #[test]
    fn errors_become_json() {
        let s = explore_bbw("Q", 1, "", "1");
        assert!(s.contains("\"error\""));
    }
}
