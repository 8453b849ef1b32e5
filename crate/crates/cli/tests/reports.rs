//! Report documents over the whole test corpus: schema, lossless round trip,
//! and text/JSON agreement.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use clap::Parser;
use drg_spectral_cli::report::ReportDocument;
use drg_spectral_cli::{json, run, Cli};
use serde_json::Value;

fn outcome(args: &[&str], stdin: &str) -> (String, u8) {
    let cli =
        Cli::try_parse_from(std::iter::once("drg-spectral").chain(args.iter().copied())).unwrap();
    let out = run(&cli, &mut stdin.as_bytes()).unwrap();
    (out.stdout, out.code)
}

fn is_number_array(v: &Value) -> bool {
    v.as_array().is_some_and(|a| a.iter().all(Value::is_number))
}

/// Structural check of the documented schema.
fn check_schema(v: &Value) -> Result<(), String> {
    let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
    need(v["schema"] == 1, "schema")?;
    need(
        v["tool"]["name"].is_string() && v["tool"]["version"].is_string(),
        "tool",
    )?;
    let g = &v["graph"];
    need(
        g["n"].is_u64() && g["edges"].is_u64() && g["regular"].is_boolean(),
        "graph",
    )?;
    need(
        g["degree"].is_u64() || g["degree"].is_null(),
        "graph.degree",
    )?;
    need(
        g["mean_degree"].is_f64() && g["mean_square_degree"].is_f64(),
        "graph stats",
    )?;

    let s = &v["spectrum"];
    let n = g["n"].as_u64().unwrap() as usize;
    need(
        is_number_array(&s["raw"]) && s["raw"].as_array().unwrap().len() == n,
        "spectrum.raw",
    )?;
    need(
        is_number_array(&s["thetas"]) && is_number_array(&s["phis"]),
        "spectrum.thetas",
    )?;
    let d = s["thetas"].as_array().unwrap().len() - 1;
    need(
        s["multiplicities"].as_array().map(Vec::len) == Some(d + 1),
        "multiplicities",
    )?;
    need(
        s["min_gap"].is_f64() || (d == 0 && s["min_gap"].is_null()),
        "min_gap",
    )?;
    need(s["max_cluster_width"].is_f64(), "max_cluster_width")?;

    let p = &v["predistance"];
    let coeffs = p["coefficients"].as_array().ok_or("coefficients")?;
    need(coeffs.len() == d + 1, "coefficient count")?;
    for (i, c) in coeffs.iter().enumerate() {
        need(
            is_number_array(c) && c.as_array().unwrap().len() == i + 1,
            "coefficient degree",
        )?;
    }
    need(p["alpha"].as_array().map(Vec::len) == Some(d + 1), "alpha")?;
    need(p["beta"].as_array().map(Vec::len) == Some(d), "beta")?;
    need(p["gamma"].as_array().map(Vec::len) == Some(d), "gamma")?;
    need(
        is_number_array(&v["hoffman"]["coefficients"]) && v["hoffman"]["residual"].is_f64(),
        "hoffman",
    )?;

    let e = &v["excess"];
    need(
        e["d"].as_u64() == Some(d as u64) && e["diameter"].is_u64(),
        "excess.d",
    )?;
    for key in [
        "average_excess",
        "spectral_excess",
        "spectral_excess_closed_form",
        "equality_gap",
        "relative_gap",
    ] {
        need(e[key].is_f64(), key)?;
    }
    need(
        e["per_vertex_excess"].as_array().map(Vec::len) == Some(n),
        "per_vertex_excess",
    )?;
    need(
        e["distance_two_counts"].as_array().map(Vec::len) == Some(n),
        "distance_two_counts",
    )?;
    need(
        e["identity_residuals"].as_array().map(Vec::len) == Some(d + 1),
        "identity_residuals",
    )?;
    let verdict = e["verdict"].as_str().ok_or("verdict")?;
    need(
        ["distance_regular", "not_distance_regular", "inconclusive"].contains(&verdict),
        "verdict value",
    )?;
    match e["oracle"]["status"].as_str() {
        Some("distance_regular") => {
            need(e["oracle"]["intersection_array"]["b"].is_array(), "array")?
        }
        Some("refused") => need(e["oracle"]["refusal"]["reason"].is_string(), "refusal")?,
        _ => return Err("oracle".into()),
    }
    let t = &v["tolerances"];
    need(
        t["eig"].is_f64() && t["eq"].is_f64() && t["oracle"].is_boolean(),
        "tolerances",
    )
}

#[test]
fn every_corpus_report_is_valid_and_consistent() {
    let corpus = common::full_corpus();
    for (name, g) in &corpus {
        let edges = g.to_edge_list();
        let (json_out, json_code) = outcome(&["analyze", "-", "--json"], &edges);
        let (text_out, text_code) = outcome(&["analyze", "-"], &edges);

        let v: Value = serde_json::from_str(&json_out).unwrap();
        check_schema(&v).unwrap_or_else(|what| panic!("{name}: schema violation at {what}"));

        let doc: ReportDocument = serde_json::from_str(&json_out).unwrap();
        assert_eq!(
            json::to_string(&doc).unwrap() + "\n",
            json_out,
            "{name}: round trip"
        );

        let verdict = v["excess"]["verdict"].as_str().unwrap();
        assert!(
            text_out.contains(&format!("verdict: {verdict}\n")),
            "{name}"
        );
        assert_eq!(json_code, text_code, "{name}");
        let want = match verdict {
            "distance_regular" => 0,
            "not_distance_regular" => 1,
            _ => 2,
        };
        assert_eq!(json_code, want, "{name}");
    }
}

#[test]
fn random_graph_reports_round_trip() {
    for seed in 0..20u64 {
        let g = common::random_connected(12 + seed as usize, 0.4, seed);
        let (out, _) = outcome(&["analyze", "-", "--json"], &g.to_edge_list());
        let v: Value = serde_json::from_str(&out).unwrap();
        check_schema(&v).unwrap();
        let doc: ReportDocument = serde_json::from_str(&out).unwrap();
        assert_eq!(json::to_string(&doc).unwrap() + "\n", out);
    }
}
