use std::fmt::Write as _;

use eliminant::{Ideal, Poly, PolyRing, RationalField, Ring};
use serde::Serialize;

use crate::eval::Value;

/// The JSON document printed for every run; `docs/output.schema.json`
/// describes it.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: Option<String>,
    pub inputs: Inputs,
    pub result: Option<ResultDoc>,
    pub algorithm: Option<String>,
    #[serde(rename = "coordinateChanges")]
    pub coordinate_changes: usize,
    pub seed: u64,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorDoc>,
}

/// The script as parsed, printed canonically.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Inputs {
    pub ring: Option<String>,
    pub bindings: Vec<BindingDoc>,
    pub command: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BindingDoc {
    pub name: String,
    pub expr: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorDoc {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

impl From<&eliminant::Error> for ErrorDoc {
    fn from(e: &eliminant::Error) -> Self {
        let (line, column, message) = match e {
            eliminant::Error::Parse { line, column, message } => (Some(*line), Some(*column), message.clone()),
            other => (None, None, other.to_string()),
        };
        ErrorDoc { code: e.code().to_string(), message, line, column }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealDoc {
    pub ring: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ResultDoc {
    /// An element of the coefficient domain (possibly a polynomial in the
    /// parameters).
    Scalar { domain: String, value: String },
    Polynomial { ring: Vec<String>, value: String },
    Integer { value: String },
    Boolean { value: bool },
    Ideal(IdealDoc),
    Map { source: Vec<String>, target: Vec<String>, images: Vec<String> },
    Plucker {
        k: usize,
        n: usize,
        rep: String,
        degree: Option<u32>,
        #[serde(skip_serializing_if = "Option::is_none")]
        source_dim: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        source_degree: Option<u64>,
    },
    Cayley { segre: IdealDoc, xresultant: IdealDoc },
}

/// Reduced Gröbner basis, each generator scaled to primitive integer form,
/// in increasing order of leading terms.
fn ideal_doc(i: &Ideal<RationalField>) -> eliminant::Result<IdealDoc> {
    let ring = i.ring().clone();
    let mut gens: Vec<Poly<RationalField>> = i.groebner_basis()?.iter().map(|g| g.primitive()).collect();
    gens.sort_by(|a, b| match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => ring.cmp(x, y),
        (x, y) => x.is_some().cmp(&y.is_some()),
    });
    Ok(IdealDoc { ring: ring.vars().to_vec(), generators: gens.iter().map(|g| g.to_string()).collect() })
}

pub fn result_doc<R: Ring>(v: &Value<R>, ring: &PolyRing<R>) -> eliminant::Result<ResultDoc> {
    Ok(match v {
        Value::Scalar(c) => {
            let k = ring.coeffs();
            ResultDoc::Scalar { domain: k.domain().to_string(), value: k.display(c).to_string() }
        }
        Value::Poly(p) => ResultDoc::Polynomial { ring: ring.vars().to_vec(), value: p.to_string() },
        Value::Stiefel(p) => ResultDoc::Polynomial { ring: p.ring().vars().to_vec(), value: p.to_string() },
        Value::Int(n) => ResultDoc::Integer { value: n.to_string() },
        Value::Bool(b) => ResultDoc::Boolean { value: *b },
        Value::Ideal(i) => ResultDoc::Ideal(ideal_doc(i)?),
        Value::Map(m) => ResultDoc::Map {
            source: m.source().vars().to_vec(),
            target: m.target().vars().to_vec(),
            images: m.images().iter().map(|p| p.to_string()).collect(),
        },
        Value::Plucker(w) => ResultDoc::Plucker {
            k: w.plucker_ring().k(),
            n: w.plucker_ring().n(),
            rep: w.to_string(),
            degree: w.degree(),
            source_dim: None,
            source_degree: None,
        },
        Value::Chow(c) => ResultDoc::Plucker {
            k: c.element.plucker_ring().k(),
            n: c.element.plucker_ring().n(),
            rep: c.element.to_string(),
            degree: c.element.degree(),
            source_dim: Some(c.source_dim),
            source_degree: Some(c.source_degree),
        },
        Value::Cayley { segre, xresultant } => {
            ResultDoc::Cayley { segre: ideal_doc(segre)?, xresultant: ideal_doc(xresultant)? }
        }
    })
}

fn ideal_text(out: &mut String, i: &IdealDoc) {
    for g in &i.generators {
        let _ = writeln!(out, "{g}");
    }
}

/// Plain-text rendering of a result: canonical polynomial forms, one per
/// line.
pub fn render_text(doc: &ResultDoc) -> String {
    let mut out = String::new();
    match doc {
        ResultDoc::Scalar { value, .. } | ResultDoc::Polynomial { value, .. } | ResultDoc::Integer { value } => {
            let _ = writeln!(out, "{value}");
        }
        ResultDoc::Boolean { value } => {
            let _ = writeln!(out, "{value}");
        }
        ResultDoc::Ideal(i) => ideal_text(&mut out, i),
        ResultDoc::Map { source, images, .. } => {
            for (x, img) in source.iter().zip(images) {
                let _ = writeln!(out, "{x} -> {img}");
            }
        }
        ResultDoc::Plucker { k, n, rep, .. } => {
            let _ = writeln!(out, "# G({k}, {n})");
            let _ = writeln!(out, "{rep}");
        }
        ResultDoc::Cayley { segre, xresultant } => {
            out.push_str("# segre\n");
            ideal_text(&mut out, segre);
            out.push_str("# xresultant\n");
            ideal_text(&mut out, xresultant);
        }
    }
    out
}
