use std::fmt::Write as _;

use serde_json::json;

use quandle_core::graph::{DirectedGraph, ExportFormat, GraphAnalysis};
use quandle_core::quandle::Quandle;
use quandle_core::verify::{run_suite, SuiteConfig, TheoremId};

use crate::spec::{Family, QuandleSpec};
use crate::{CliError, Outcome, QuandleArgs, VerifyArgs};

fn quandle_spec(args: &QuandleArgs) -> Result<QuandleSpec, CliError> {
    let flags_used = args.family.is_some()
        || args.group.is_some()
        || args.phi.is_some()
        || args.n.is_some()
        || args.raw_path.is_some();
    match (&args.spec, flags_used) {
        (Some(_), true) => Err(CliError::Usage(
            "give either a compact spec or --family and friends, not both".into(),
        )),
        (Some(text), false) => text.parse(),
        (None, _) => {
            let family: Family = args
                .family
                .as_deref()
                .ok_or_else(|| CliError::Usage("missing quandle spec or --family".into()))?
                .parse()?;
            QuandleSpec::from_parts(
                family,
                args.group.as_deref(),
                args.phi.as_deref(),
                args.n,
                args.raw_path.clone(),
            )
        }
    }
}

fn build_quandle(args: &QuandleArgs) -> Result<Quandle, CliError> {
    quandle_spec(args)?.build()
}

pub fn build(args: &QuandleArgs) -> Result<Outcome, CliError> {
    let q = build_quandle(args)?;
    Ok(Outcome::ok(q.to_json() + "\n"))
}

pub fn analyze(args: &QuandleArgs, export: Option<&str>, as_json: bool) -> Result<Outcome, CliError> {
    let q = build_quandle(args)?;
    let format: Option<ExportFormat> = export.map(str::parse).transpose()?;
    let analysis = GraphAnalysis::of(&q);
    let graph_text = format.map(|f| DirectedGraph::cayley(&q).export(f));
    let output = if as_json {
        let mut value = serde_json::to_value(&analysis).expect("analysis serializes");
        value["summary"] = json!(analysis.summary());
        if let Some(text) = graph_text {
            value["export"] = json!(text);
        }
        value.to_string() + "\n"
    } else {
        let mut out = analysis.to_text();
        if let Some(text) = graph_text {
            out.push('\n');
            out.push_str(&text);
            if !text.ends_with('\n') {
                out.push('\n');
            }
        }
        out
    };
    Ok(Outcome::ok(output))
}

pub fn export(args: &QuandleArgs, format: &str) -> Result<Outcome, CliError> {
    let format: ExportFormat = format.parse()?;
    let q = build_quandle(args)?;
    let mut text = DirectedGraph::cayley(&q).export(format);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(Outcome::ok(text))
}

/// `a..b` or `a..=b`, both inclusive.
fn parse_range(text: &str) -> Result<[usize; 2], CliError> {
    let bad = || CliError::Usage(format!("bad range {text:?}, expected a..b"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    Ok([lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?])
}

pub fn verify(args: &VerifyArgs, as_json: bool) -> Result<Outcome, CliError> {
    let mut config = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            SuiteConfig::from_json(&text)?
        }
        None => SuiteConfig::default(),
    };
    if !args.checks.is_empty() {
        config.checks = args
            .checks
            .iter()
            .map(|c| c.parse::<TheoremId>())
            .collect::<Result<_, _>>()?;
    }
    if let Some(range) = &args.range {
        let r = parse_range(range)?;
        config.dihedral_range = r;
        config.dihedral_group_range = r;
    }

    let mut reports = run_suite(&config)?;
    if !args.timings {
        for r in &mut reports {
            r.elapsed = Default::default();
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let passed = reports.len() - failed;
    let output = if as_json {
        json!({ "reports": reports, "passed": passed, "failed": failed }).to_string() + "\n"
    } else {
        let mut out = String::new();
        for r in &reports {
            out.push_str(&r.summary_line(args.timings));
            out.push('\n');
        }
        let noun = if reports.len() == 1 { "report" } else { "reports" };
        let _ = writeln!(out, "{} {noun}: {passed} passed, {failed} failed", reports.len());
        out
    };
    Ok(Outcome {
        output,
        exit_code: if failed == 0 { 0 } else { 1 },
    })
}

pub fn isomorphic(first: &str, second: &str, as_json: bool) -> Result<Outcome, CliError> {
    let a = first.parse::<QuandleSpec>()?.build()?;
    let b = second.parse::<QuandleSpec>()?.build()?;
    let ga = DirectedGraph::cayley(&a);
    let gb = DirectedGraph::cayley(&b);
    let map = ga.is_isomorphic(&gb)?;
    let pairs: Vec<[&str; 2]> = map
        .iter()
        .flatten()
        .enumerate()
        .map(|(u, &v)| [ga.name(u), gb.name(v)])
        .collect();
    let output = if as_json {
        json!({ "isomorphic": map.is_some(), "map": map.as_ref().map(|_| &pairs) }).to_string() + "\n"
    } else if map.is_some() {
        let mut out = String::from("isomorphic\n");
        for [u, v] in pairs {
            let _ = writeln!(out, "  {u} -> {v}");
        }
        out
    } else {
        "not isomorphic\n".to_string()
    };
    Ok(Outcome::ok(output))
}
