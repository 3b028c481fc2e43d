//! Batch front end: parses a script, runs its command and produces a
//! [`Report`] that prints as JSON or plain text.

mod eval;
mod report;

use std::sync::Arc;
use std::time::{Duration, Instant};

use eliminant::syntax::{parse_script, BaseDomain, Script};
use eliminant::{
    budget, Error, IntegerRing, PolyDomain, PolyRing, PrimeField, RationalField, ResultantOptions,
};

pub use eval::{ScriptDomain, Session, Stats, Value};
pub use report::{render_text, BindingDoc, ErrorDoc, IdealDoc, Inputs, Report, ResultDoc};

#[derive(Debug, Clone, Default)]
pub struct Flags {
    pub options: ResultantOptions,
    /// Wall-clock budget for the whole command.
    pub timeout: Option<Duration>,
}

/// Process exit status for a report: 0 ok, 2 parse errors, 1 anything else.
pub fn exit_code(report: &Report) -> i32 {
    match &report.error {
        None => 0,
        Some(e) if e.code == "PARSE_ERROR" => 2,
        Some(_) => 1,
    }
}

fn inputs(script: &Script) -> Inputs {
    Inputs {
        ring: Some(script.ring.to_string()),
        bindings: script
            .bindings
            .iter()
            .map(|b| BindingDoc { name: b.name.clone(), expr: b.expr.to_string() })
            .collect(),
        command: script.command.as_ref().map(|c| c.to_string()),
    }
}

fn execute<R: ScriptDomain>(
    ring: Arc<PolyRing<R>>,
    script: &Script,
    flags: &Flags,
) -> eliminant::Result<(Option<ResultDoc>, Stats)> {
    let mut session = Session::new(ring.clone(), flags.options.clone());
    let value = session.run(script)?;
    let doc = value.map(|v| report::result_doc(&v, &ring)).transpose()?;
    Ok((doc, session.stats))
}

fn dispatch(script: &Script, flags: &Flags) -> eliminant::Result<(Option<ResultDoc>, Stats)> {
    let decl = &script.ring;
    let vars = decl.vars.clone();
    macro_rules! over {
        ($base:expr) => {
            match &decl.params {
                None => execute(PolyRing::grevlex(vars, $base), script, flags),
                Some(p) => {
                    let params = PolyRing::grevlex(p.clone(), $base);
                    execute(PolyRing::grevlex(vars, PolyDomain::new(params)), script, flags)
                }
            }
        };
    }
    match decl.base {
        BaseDomain::Integers => over!(IntegerRing),
        BaseDomain::Rationals => over!(RationalField),
        BaseDomain::PrimeField(p) => {
            let k = PrimeField::new(p).ok_or_else(|| Error::InvalidInput(format!("{p} is not a usable prime")))?;
            over!(k)
        }
    }
}

/// Parses and runs `src`. Never fails: errors end up in the report.
pub fn run_source(src: &str, flags: &Flags) -> Report {
    let start = Instant::now();
    let mut report = Report {
        command: None,
        inputs: Inputs::default(),
        result: None,
        algorithm: None,
        coordinate_changes: 0,
        seed: flags.options.seed,
        elapsed_ms: 0.0,
        error: None,
    };
    let outcome = parse_script(src).and_then(|script| {
        report.inputs = inputs(&script);
        report.command = script.command.as_ref().and_then(|c| match &c.kind {
            eliminant::syntax::ExprKind::Call(name, _) => Some(name.clone()),
            _ => None,
        });
        match flags.timeout {
            Some(limit) => budget::with_deadline(limit, || dispatch(&script, flags)),
            None => dispatch(&script, flags),
        }
    });
    match outcome {
        Ok((doc, stats)) => {
            report.result = doc;
            report.algorithm = stats.algorithm.map(|a| a.name().to_string());
            report.coordinate_changes = stats.coordinate_changes;
        }
        Err(e) => report.error = Some(ErrorDoc::from(&e)),
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}
