//! JSON documents and their plain-text renderings.

use std::io::Write;

use qchromatic::algebra::{RatFunc, Ring, UniPoly, UniRat};
use qchromatic::expansion::{e_expansion, hl_expansion, macdonald_expansion};
use qchromatic::interval::Hessenberg;
use qchromatic::oracles::{chi_from_f, chromatic_symmetric, f_via_operators_checked};
use qchromatic::partitions::{partitions_of, Partition};
use qchromatic::symfunc::{Basis, SymFunc};
use qchromatic::tableaux::{enumerate_syt, StripTableau};
use qchromatic::verify::VerifyReport;
use qchromatic::Result;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::{ExpandBasis, Format, Method, OracleBasis};

pub const SCHEMA_VERSION: &str = "1";

/// A JSON document and its text rendering.
pub struct Doc {
    pub json: Value,
    pub text: String,
}

pub fn emit(out: &mut dyn Write, format: Format, doc: Doc) -> Result<()> {
    let written = match format {
        Format::Json => {
            let s = serde_json::to_string_pretty(&doc.json).expect("documents are valid JSON");
            writeln!(out, "{s}")
        }
        Format::Text => write!(out, "{}", doc.text),
    };
    written.map_err(|e| qchromatic::Error::Parse(format!("write failed: {e}")))
}

fn coeff_json<C: Ring>(c: &C) -> Value {
    let (num, den) = c.num_den_strings();
    json!({ "num": num, "den": den })
}

fn header(kind: &str, e: &Hessenberg) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("kind".into(), json!(kind));
    m.insert("hessenberg".into(), json!(e.values()));
    m.insert("dyck".into(), json!(e.to_dyck().to_string()));
    m
}

/// A coefficient with its optional per-tableau summands.
type Row<C> = (Partition, C, Option<Vec<(StripTableau, C)>>);

/// `partition -> (coefficient, optional per-tableau summands)` rendered as
/// `terms` and a flat `coefficients` map.
fn expansion_body<C: Ring + std::fmt::Display>(
    doc: &mut Map<String, Value>,
    basis: &str,
    degree: usize,
    rows: &[Row<C>],
) -> String {
    let mut text = format!("{} basis={basis}\n", e_label(doc));
    let mut flat = Map::new();
    let mut terms = Vec::new();
    for (lambda, c, breakdown) in rows {
        flat.insert(lambda.to_string(), json!(c.to_string()));
        text.push_str(&format!("{lambda}: {c}\n"));
        let mut term = json!({ "partition": lambda, "coeff": coeff_json(c) });
        if let Some(b) = breakdown {
            let summands: Vec<Value> = b
                .iter()
                .map(|(t, s)| json!({ "tableau": t.to_json(), "summand": coeff_json(s) }))
                .collect();
            for (t, s) in b {
                text.push_str(&format!("  {}  {s}\n", tableau_inline(t)));
            }
            term["breakdown"] = json!(summands);
        }
        terms.push(term);
    }
    doc.insert("basis".into(), json!(basis));
    doc.insert("degree".into(), json!(degree));
    doc.insert("terms".into(), json!(terms));
    doc.insert("coefficients".into(), Value::Object(flat));
    text
}

fn e_label(doc: &Map<String, Value>) -> String {
    let vals: Vec<String> = doc["hessenberg"]
        .as_array()
        .map(|a| a.iter().map(|v| v.to_string()).collect())
        .unwrap_or_default();
    format!("e=({})", vals.join(","))
}

/// Rows bottom first, separated by `/`.
fn tableau_inline(t: &StripTableau) -> String {
    t.rows()
        .iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

pub fn expand(e: &Hessenberg, basis: ExpandBasis, breakdown: bool) -> Result<Doc> {
    let mut doc = header("expansion", e);
    let n = e.n();
    let text = match basis {
        ExpandBasis::E => {
            let ex = e_expansion(e)?;
            let rows: Vec<_> = ex
                .coeffs
                .iter()
                .map(|(l, c)| {
                    let b = breakdown.then(|| {
                        ex.breakdown[l]
                            .iter()
                            .map(|(t, s)| (t.clone(), s.clone()))
                            .collect::<Vec<_>>()
                    });
                    (l.clone(), UniRat::from_poly(c.clone()), b)
                })
                .collect();
            expansion_body(&mut doc, "e", n, &rows)
        }
        ExpandBasis::Hl => {
            let ex = hl_expansion(e)?;
            let rows: Vec<_> = ex
                .coeffs
                .iter()
                .map(|(l, c)| {
                    (
                        l.clone(),
                        c.clone(),
                        breakdown.then(|| ex.breakdown[l].clone()),
                    )
                })
                .collect();
            expansion_body(&mut doc, "hl", n, &rows)
        }
        ExpandBasis::Macdonald => {
            // every μ ⊢ n is listed, with 0 where SYT^e_μ is empty
            let mut ex = macdonald_expansion(e)?;
            let mut rows: Vec<_> = partitions_of(n)
                .into_iter()
                .map(|l| match ex.remove(&l) {
                    Some(term) => (l, term.coeff, breakdown.then_some(term.breakdown)),
                    None => (l, RatFunc::zero(), breakdown.then(Vec::new)),
                })
                .collect();
            rows.sort_by(|a, b| a.0.cmp(&b.0));
            expansion_body(&mut doc, "macdonald", n, &rows)
        }
    };
    Ok(Doc {
        json: Value::Object(doc),
        text,
    })
}

pub fn oracle(e: &Hessenberg, method: Method, basis: OracleBasis) -> Result<Doc> {
    let mut doc = header("oracle", e);
    let n = e.n();
    let chi = match method {
        Method::Colorings => chromatic_symmetric(e)?,
        Method::Operators => {
            let (f, report) = f_via_operators_checked(e)?;
            doc.insert("operator_report".into(), json!(report));
            chi_from_f(&f, n)?
        }
    };
    let chi = match basis {
        OracleBasis::M => chi.to_basis(Basis::M),
        OracleBasis::E => chi.to_basis(Basis::E),
    };
    doc.insert(
        "method".into(),
        json!(match method {
            Method::Colorings => "colorings",
            Method::Operators => "operators",
        }),
    );
    let text = symfunc_body(&mut doc, &chi);
    Ok(Doc {
        json: Value::Object(doc),
        text,
    })
}

fn symfunc_body(doc: &mut Map<String, Value>, f: &SymFunc<UniPoly>) -> String {
    let rows: Vec<_> = f
        .terms()
        .iter()
        .map(|(l, c)| (l.clone(), c.clone(), None))
        .collect();
    expansion_body(doc, f.basis().symbol(), f.degree_cap(), &rows)
}

pub fn tableaux(e: &Hessenberg, shape: &Partition, star: bool) -> Result<Doc> {
    let mut doc = header("tableaux", e);
    let all = enumerate_syt(e, shape)?;
    let kept: Vec<StripTableau> = all
        .into_iter()
        .filter(|t| !star || t.satisfies_star(e))
        .collect();
    let mut text = format!("{} shape={shape} count={}\n", e_label(&doc), kept.len());
    let list: Vec<Value> = kept
        .iter()
        .map(|t| {
            text.push_str(&format!("{t}\n\n"));
            let mut v = t.to_json();
            v["star"] = json!(t.satisfies_star(e));
            v
        })
        .collect();
    doc.insert("shape".into(), json!(shape));
    doc.insert("star_only".into(), json!(star));
    doc.insert("count".into(), json!(kept.len()));
    doc.insert("tableaux".into(), json!(list));
    Ok(Doc {
        json: Value::Object(doc),
        text,
    })
}

pub fn verify(report: &VerifyReport) -> Doc {
    let mut json = serde_json::to_value(report).expect("report serializes");
    json["schema_version"] = json!(SCHEMA_VERSION);
    json["kind"] = json!("verify");
    let mut text = String::new();
    for r in &report.results {
        text.push_str(&r.summary_line());
        text.push('\n');
    }
    text.push_str(if report.passed {
        "all checks passed\n"
    } else {
        "some checks failed\n"
    });
    Doc { json, text }
}

/// One JSON line per Hessenberg function of size `n`, in enumeration order.
pub fn sweep(n: usize) -> Result<Vec<String>> {
    Hessenberg::enumerate(n)
        .par_iter()
        .map(|e| {
            let ex = e_expansion(e)?;
            let mut doc = header("sweep-record", e);
            let coeffs: Map<String, Value> = ex
                .coeffs
                .iter()
                .map(|(l, c)| (l.to_string(), json!(c.to_string())))
                .collect();
            doc.insert("basis".into(), json!("e"));
            doc.insert("coefficients".into(), Value::Object(coeffs));
            Ok(serde_json::to_string(&Value::Object(doc)).expect("documents are valid JSON"))
        })
        .collect()
}
