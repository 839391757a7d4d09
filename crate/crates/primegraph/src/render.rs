//! JSON and plain-text renderings of every report.
//!
//! Each renderer builds both forms from the same values, so the text and
//! JSON outputs of a command carry the same numbers.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use num_bigint::BigUint;
use primegraph_core::census::{BoundReport, CensusReport, Table1Row};
use primegraph_core::coincidence::{
    CoincidenceVerdict, CoincidenceWitness, GoldbachReport, GrowthReport,
};
use primegraph_core::families::{
    CheckVerdict, CompositeWitness, DeltaSurvey, FamilyCertificate, GeneratorOutcome,
    GeneratorReport, Mod144Report,
};
use primegraph_core::graph::PrimeGraph;
use serde_json::{json, Value};

/// One report in every form the CLI can print.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub text: String,
    pub json: Value,
    /// Only graphs have a DOT form.
    pub dot: Option<String>,
}

impl Rendered {
    fn new(text: String, json: Value) -> Self {
        Rendered {
            text,
            json,
            dot: None,
        }
    }
}

/// Numbers that fit in 64 bits are JSON numbers; larger ones are decimal
/// strings so no reader loses precision.
pub fn big(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `{"vertices": [...], "edges": [[p, q], ...], "degrees": [...]}`.
pub fn graph_json(g: &PrimeGraph) -> Value {
    let edges: Vec<[u64; 2]> = g.edges().into_iter().map(|(p, q)| [p, q]).collect();
    json!({
        "vertices": g.vertices(),
        "edges": edges,
        "degrees": g.degree_pattern().0,
    })
}

/// Inverse of [`graph_json`]. The degree list, when present, must agree
/// with the edges.
pub fn graph_from_json(text: &str) -> Result<PrimeGraph> {
    let value: Value = serde_json::from_str(text).context("graph JSON is not valid JSON")?;
    let vertices: Vec<u64> = serde_json::from_value(
        value
            .get("vertices")
            .cloned()
            .context("missing \"vertices\"")?,
    )
    .context("\"vertices\" must be an array of integers")?;
    let edges: Vec<(u64, u64)> =
        serde_json::from_value(value.get("edges").cloned().context("missing \"edges\"")?)
            .context("\"edges\" must be an array of [p, q] pairs")?;
    let g = PrimeGraph::from_edges(&vertices, &edges)?;
    if let Some(degrees) = value.get("degrees") {
        let degrees: Vec<u32> = serde_json::from_value(degrees.clone())
            .context("\"degrees\" must be an array of integers")?;
        if degrees != g.degree_pattern().0 {
            bail!("\"degrees\" does not match the edge list");
        }
    }
    Ok(g)
}

pub fn graph(g: &PrimeGraph) -> Rendered {
    let mut text = String::new();
    let _ = writeln!(text, "vertices: {}", join(g.vertices(), " "));
    let _ = writeln!(text, "degrees: {}", join(&g.degree_pattern().0, " "));
    let _ = writeln!(text, "edges:");
    for (p, q) in g.edges() {
        let _ = writeln!(text, "  {p} -- {q}");
    }
    Rendered {
        text,
        json: graph_json(g),
        dot: Some(g.to_dot()),
    }
}

pub fn degree_pattern(g: &PrimeGraph) -> Rendered {
    let degrees = g.degree_pattern().0;
    let pairs: Vec<String> = g
        .vertices()
        .iter()
        .zip(&degrees)
        .map(|(p, d)| format!("{p}:{d}"))
        .collect();
    Rendered::new(
        format!("{}\n", pairs.join(" ")),
        json!({ "vertices": g.vertices(), "degrees": degrees }),
    )
}

/// A coincidence verdict plus, for alternating groups, the closed-form
/// prediction when one applies.
#[derive(Debug, Clone, Copy)]
pub struct Comparison {
    pub verdict: CoincidenceVerdict,
    pub predicted: Option<bool>,
}

pub fn comparison(c: &Comparison) -> Rendered {
    let v = &c.verdict;
    let mut text = format!(
        "{} ({})",
        if v.equal { "equal" } else { "not equal" },
        v.rule.as_str()
    );
    let witness = match v.witness {
        None => Value::Null,
        Some(CoincidenceWitness::Prime(p)) => {
            let _ = write!(text, ": {p}");
            json!(p)
        }
        Some(CoincidenceWitness::Pair(p, q)) => {
            let _ = write!(text, ": {p} -- {q}");
            json!([p, q])
        }
    };
    text.push('\n');
    if let Some(pred) = c.predicted {
        let _ = writeln!(
            text,
            "predicted: {}",
            if pred { "equal" } else { "not equal" }
        );
    }
    Rendered::new(
        text,
        json!({
            "equal": v.equal,
            "rule": v.rule.as_str(),
            "witness": witness,
            "predicted": c.predicted,
        }),
    )
}

pub fn goldbach(r: &GoldbachReport) -> Rendered {
    let sampled = r.sampled_witnesses();
    let mut text = format!("frontier: {}\n", r.frontier);
    match r.counterexample {
        Some(n) => {
            let _ = writeln!(text, "counterexample: {n}");
        }
        None => text.push_str("counterexample: none\n"),
    }
    text.push_str("witnesses:\n");
    for &(n, p, q) in &sampled {
        let _ = writeln!(text, "  {n} = {p} + {q}");
    }
    let witnesses: Vec<[u64; 3]> = sampled.iter().map(|&(n, p, q)| [n, p, q]).collect();
    Rendered::new(
        text,
        json!({
            "frontier": r.frontier,
            "counterexample": r.counterexample,
            "witnesses_sampled": witnesses,
        }),
    )
}

pub fn growth(r: &GrowthReport) -> Rendered {
    let mismatches = if r.mismatches.is_empty() {
        "none".to_string()
    } else {
        join(&r.mismatches, " ")
    };
    Rendered::new(
        format!(
            "limit: {}\nchecked: {}\nholds: {}\nmismatches: {mismatches}\n",
            r.limit,
            r.checked,
            yes_no(r.holds())
        ),
        json!({
            "limit": r.limit,
            "checked": r.checked,
            "holds": r.holds(),
            "mismatches": r.mismatches,
        }),
    )
}

pub fn census(r: &CensusReport) -> Rendered {
    let mut text = format!("target: {}\n", r.target);
    let width = r
        .branches
        .iter()
        .map(|b| b.label.chars().count())
        .max()
        .unwrap_or(0);
    for b in &r.branches {
        let pad = width - b.label.chars().count();
        let _ = writeln!(
            text,
            "  {}{}  {:>3}  {}",
            b.label,
            " ".repeat(pad),
            b.count,
            b.witnesses
        );
    }
    let _ = writeln!(text, "total: {}", r.total);
    let branches: Vec<Value> = r
        .branches
        .iter()
        .map(|b| json!({ "label": b.label, "count": b.count, "witnesses": b.witnesses }))
        .collect();
    Rendered::new(
        text,
        json!({ "target": r.target.to_string(), "total": r.total, "branches": branches }),
    )
}

pub fn bound(r: &BoundReport) -> Rendered {
    let mut text = format!("target: {}\n", r.target);
    match (&r.lower_bound, r.basis) {
        (Some(lb), Some(basis)) => {
            let _ = writeln!(text, "lower bound: {lb} ({})", basis.as_str());
        }
        _ => text.push_str("lower bound: none (preconditions fail)\n"),
    }
    let _ = writeln!(text, "deduplicated: {}", yes_no(r.deduplicated));
    text.push_str("preconditions:\n");
    for c in &r.preconditions {
        let _ = writeln!(
            text,
            "  [{}] {}: {}",
            if c.holds { "ok" } else { "fail" },
            c.condition.as_str(),
            c.detail
        );
    }
    if !r.witness_families.is_empty() {
        text.push_str("witness families:\n");
        for w in &r.witness_families {
            let _ = writeln!(text, "  {}: {} ({})", w.name, w.size, w.basis.as_str());
        }
    }
    let preconditions: Vec<Value> = r
        .preconditions
        .iter()
        .map(|c| json!({ "condition": c.condition.as_str(), "holds": c.holds, "detail": c.detail }))
        .collect();
    let families: Vec<Value> = r
        .witness_families
        .iter()
        .map(|w| json!({ "name": w.name, "size": big(&w.size), "basis": w.basis.as_str() }))
        .collect();
    Rendered::new(
        text,
        json!({
            "target": r.target.to_string(),
            "lower_bound": r.lower_bound.as_ref().map(big),
            "basis": r.basis.map(|b| b.as_str()),
            "deduplicated": r.deduplicated,
            "preconditions": preconditions,
            "witness_families": families,
        }),
    )
}

/// Aligned columns: `m`, `m - 4`, `l_m`, `Δ(m)`, `π(Δ(m)!)`, `ν(m)`.
pub fn table1(rows: &[Table1Row]) -> Rendered {
    let header = ["m", "m - 4", "l_m", "Δ(m)", "π(Δ(m)!)", "ν(m)"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                format!("{} = {}", r.m, r.m_factorization),
                format!("{} = {}", r.m - 4, r.m_minus_4_factorization),
                r.largest_prime.to_string(),
                r.delta.to_string(),
                format!("{{{}}}", join(&r.delta_factorial_primes, ", ")),
                r.nu.map_or_else(|| "-".to_string(), |v| v.to_string()),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |items: &[&str]| {
        let padded: Vec<String> = items
            .iter()
            .zip(widths)
            .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut text = line(&header);
    for row in &cells {
        let refs: Vec<&str> = row.iter().map(String::as_str).collect();
        text.push_str(&line(&refs));
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "m": r.m,
                "m_factorization": r.m_factorization.to_string(),
                "m_minus_4": r.m - 4,
                "m_minus_4_factorization": r.m_minus_4_factorization.to_string(),
                "largest_prime": r.largest_prime,
                "delta": r.delta,
                "delta_factorial_primes": r.delta_factorial_primes,
                "nu": r.nu,
            })
        })
        .collect();
    Rendered::new(text, Value::Array(json_rows))
}

pub fn mod144(r: &Mod144Report) -> Rendered {
    let mut text = format!("n: {}\n", r.n);
    for c in &r.congruences {
        let _ = writeln!(
            text,
            "  n mod {} = {} (want {}) {}",
            c.modulus,
            c.actual,
            c.residue,
            if c.holds() { "ok" } else { "fail" }
        );
    }
    let _ = writeln!(text, "all hold: {}", yes_no(r.all_hold()));
    let congruences: Vec<Value> = r
        .congruences
        .iter()
        .map(|c| {
            json!({
                "modulus": c.modulus,
                "residue": c.residue,
                "actual": c.actual,
                "holds": c.holds(),
            })
        })
        .collect();
    Rendered::new(
        text,
        json!({ "n": r.n, "congruences": congruences, "all_hold": r.all_hold() }),
    )
}

fn witness_json(w: &CompositeWitness) -> Value {
    match w {
        CompositeWitness::Factor(f) => json!({ "kind": "factor", "factor": big(f) }),
        CompositeWitness::DifferenceOfSquares { low, high } => json!({
            "kind": "difference-of-squares",
            "low": big(low),
            "high": big(high),
        }),
        CompositeWitness::MillerRabinBase(a) => {
            json!({ "kind": "miller-rabin-base", "base": big(a) })
        }
    }
}

fn witness_text(w: &CompositeWitness) -> String {
    match w {
        CompositeWitness::Factor(f) => format!("factor {f}"),
        CompositeWitness::DifferenceOfSquares { low, high } => format!("{low} × {high}"),
        CompositeWitness::MillerRabinBase(a) => format!("fails Miller-Rabin to base {a}"),
    }
}

fn verdict_parts(v: &CheckVerdict) -> (&'static str, Option<&CompositeWitness>) {
    match v {
        CheckVerdict::Composite(w) => ("composite", Some(w)),
        CheckVerdict::Prime => ("prime", None),
        CheckVerdict::ProbablePrime => ("probably-prime", None),
    }
}

fn certificate_parts(c: &FamilyCertificate) -> (String, Value) {
    let mut text = format!(
        "m: {}^{} = {}\nstatus: {}\n",
        c.p,
        c.n,
        c.m,
        c.status.as_str()
    );
    let mut checks = Vec::new();
    for check in &c.checks {
        let (verdict, witness) = verdict_parts(&check.verdict);
        let _ = write!(text, "  m - {} = {}: {verdict}", check.offset, check.value);
        if let Some(w) = witness {
            let _ = write!(text, ", {}", witness_text(w));
        }
        text.push('\n');
        checks.push(json!({
            "offset": check.offset,
            "value": big(&check.value),
            "verdict": verdict,
            "witness": witness.map(witness_json),
        }));
    }
    let json = json!({
        "p": c.p,
        "n": c.n,
        "m": big(&c.m),
        "status": c.status.as_str(),
        "checks": checks,
    });
    (text, json)
}

pub fn certificate(c: &FamilyCertificate) -> Rendered {
    let (text, json) = certificate_parts(c);
    Rendered::new(text, json)
}

pub fn survey(s: &DeltaSurvey) -> Rendered {
    let mut text = format!("p: {}\nn max: {}\n", s.p, s.n_max);
    let mut certs = Vec::new();
    for c in &s.certificates {
        let (t, j) = certificate_parts(c);
        text.push_str(&t);
        certs.push(j);
    }
    Rendered::new(
        text,
        json!({ "p": s.p, "n_max": s.n_max, "certificates": certs }),
    )
}

pub fn generator(r: &GeneratorReport) -> Rendered {
    let mut text = format!("a: {}\nb: {}\n", r.a, r.b);
    let json = match &r.outcome {
        GeneratorOutcome::Found {
            k,
            q,
            q_primality,
            terms,
        } => {
            let _ = writeln!(text, "k: {k}\nq: {q} ({})", q_primality.as_str());
            let mut json_terms = Vec::new();
            for t in terms {
                let _ = writeln!(
                    text,
                    "  m = {}: exponent {}, q divides: {}, value above q: {}",
                    t.m,
                    t.exponent,
                    yes_no(t.divisible),
                    yes_no(t.exceeds_q)
                );
                json_terms.push(json!({
                    "m": t.m,
                    "exponent": big(&t.exponent),
                    "divisible": t.divisible,
                    "exceeds_q": t.exceeds_q,
                }));
            }
            json!({
                "a": r.a,
                "b": r.b,
                "outcome": "found",
                "k": k,
                "q": big(q),
                "q_primality": q_primality.as_str(),
                "terms": json_terms,
            })
        }
        GeneratorOutcome::NoPrimeFound { search_bound } => {
            let _ = writeln!(text, "no prime a^k - b above a for k up to {search_bound}");
            json!({
                "a": r.a,
                "b": r.b,
                "outcome": "no-prime-found",
                "search_bound": search_bound,
            })
        }
    };
    Rendered::new(text, json)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_single_vertex_json() {
        let g = PrimeGraph::from_edges(&[2], &[]).unwrap();
        assert_eq!(
            serde_json::to_string(&graph_json(&g)).unwrap(),
            r#"{"vertices":[2],"edges":[],"degrees":[0]}"#
        );
    }

    #[test]
    fn json_round_trip_and_rejections() {
        for n in [5, 13, 27, 100] {
            let g = PrimeGraph::symmetric(n).unwrap();
            let text = serde_json::to_string(&graph_json(&g)).unwrap();
            assert_eq!(graph_from_json(&text).unwrap(), g);
        }
        assert!(graph_from_json(r#"{"vertices":[2,3],"edges":[],"degrees":[1,1]}"#).is_err());
        assert!(graph_from_json(r#"{"vertices":[4],"edges":[]}"#).is_err());
        assert!(graph_from_json(r#"{"vertices":[2,3],"edges":[[2,5]]}"#).is_err());
        assert!(graph_from_json("[").is_err());
    }

    #[test]
    fn big_values_switch_to_strings() {
        assert_eq!(big(&BigUint::from(u64::MAX)), json!(u64::MAX));
        let huge = BigUint::from(u64::MAX) + 1u32;
        assert_eq!(big(&huge), json!("18446744073709551616"));
    }
}
