//! Classification reports: every predicate on one matrix, as JSON or text.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::{vector_from_json, vector_to_json, Matrix};
use crate::predicates::{evaluate, EvalConfig, Predicate};
use crate::rational::{format_rational, format_vector};
use crate::verdict::Verdict;

pub const SCHEMA_VERSION: &str = "1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateReport {
    pub predicate: Predicate,
    pub verdict: Verdict,
    /// Microseconds; zero when timings are suppressed.
    pub wall_time_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub version: String,
    pub matrix: Matrix,
    pub config: EvalConfig,
    pub skipped: Vec<Predicate>,
    pub predicates: Vec<PredicateReport>,
}

/// Evaluates every predicate not in `skip`; order follows [`Predicate::ALL`].
pub fn classify(a: &Matrix, config: &EvalConfig, skip: &[Predicate], timings: bool) -> Result<ClassificationReport> {
    let n = a.order()?;
    if n > config.cap {
        return Err(Error::TooLarge { n, cap: config.cap });
    }
    let todo: Vec<Predicate> = Predicate::ALL.iter().copied().filter(|p| !skip.contains(p)).collect();
    let predicates = todo
        .par_iter()
        .map(|&p| {
            let start = Instant::now();
            let verdict = evaluate(p, a, config)?;
            let wall_time_us = if timings { start.elapsed().as_micros() as u64 } else { 0 };
            Ok(PredicateReport {
                predicate: p,
                verdict,
                wall_time_us,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut skipped = skip.to_vec();
    skipped.sort();
    skipped.dedup();
    Ok(ClassificationReport {
        version: TOOL_VERSION.to_string(),
        matrix: a.clone(),
        config: config.clone(),
        skipped,
        predicates,
    })
}

fn config_to_json(c: &EvalConfig) -> Value {
    json!({
        "cap": c.cap,
        "hint_d": c.hint_ds.iter().map(|d| vector_to_json(d)).collect::<Vec<_>>(),
        "max_candidates": c.max_candidates,
        "seed": c.seed,
    })
}

fn config_from_json(v: &Value) -> Result<EvalConfig> {
    let num = |k: &str| {
        v.get(k)
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse(format!("config.{k} must be a nonnegative integer")))
    };
    let hint_ds = match v.get("hint_d") {
        Some(Value::Array(ds)) => ds.iter().map(|d| vector_from_json(d, "config.hint_d")).collect::<Result<_>>()?,
        _ => return Err(Error::Parse("config.hint_d must be an array".into())),
    };
    Ok(EvalConfig {
        seed: num("seed")?,
        max_candidates: num("max_candidates")? as usize,
        hint_ds,
        cap: num("cap")? as usize,
    })
}

impl ClassificationReport {
    /// Keys serialize in sorted order, so equal reports give identical bytes.
    pub fn to_json(&self) -> Value {
        let predicates: Vec<Value> = self
            .predicates
            .iter()
            .map(|r| {
                let mut v = r.verdict.to_json();
                let obj = v.as_object_mut().expect("verdict serializes to an object");
                obj.insert("name".into(), json!(r.predicate.name()));
                obj.insert("wall_time_us".into(), json!(r.wall_time_us));
                v
            })
            .collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "tool": "kara",
            "version": self.version,
            "seed": self.config.seed,
            "config": config_to_json(&self.config),
            "matrix": self.matrix.to_json(),
            "skipped": self.skipped.iter().map(|p| p.name()).collect::<Vec<_>>(),
            "predicates": predicates,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report is valid JSON")
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |k: &str| value.get(k).ok_or_else(|| Error::Parse(format!("report: missing `{k}`")));
        let schema = field("schema_version")?.as_str().unwrap_or_default();
        if schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!("report: unsupported schema_version `{schema}`")));
        }
        let predicate = |v: &Value| {
            v.as_str()
                .and_then(Predicate::parse)
                .ok_or_else(|| Error::Parse(format!("report: unknown predicate {v}")))
        };
        let array = |k: &str| -> Result<Vec<Value>> {
            field(k)?
                .as_array()
                .cloned()
                .ok_or_else(|| Error::Parse(format!("report: `{k}` must be an array")))
        };
        let predicates = array("predicates")?
            .iter()
            .map(|p| {
                Ok(PredicateReport {
                    predicate: predicate(p.get("name").unwrap_or(&Value::Null))?,
                    verdict: Verdict::from_json(p)?,
                    wall_time_us: p.get("wall_time_us").and_then(Value::as_u64).unwrap_or(0),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            version: field("version")?.as_str().unwrap_or_default().to_string(),
            matrix: Matrix::from_json_value(field("matrix")?)?,
            config: config_from_json(field("config")?)?,
            skipped: array("skipped")?.iter().map(predicate).collect::<Result<_>>()?,
            predicates,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }

    pub fn get(&self, p: Predicate) -> Option<&Verdict> {
        self.predicates.iter().find(|r| r.predicate == p).map(|r| &r.verdict)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("kara {}  seed {}\n", self.version, self.config.seed));
        for i in 0..self.matrix.rows() {
            let row: Vec<String> = self.matrix.row(i).iter().map(format_rational).collect();
            out.push_str(&format!("  [{}]\n", row.join(", ")));
        }
        let width = self.predicates.iter().map(|r| r.predicate.name().len()).max().unwrap_or(0);
        for r in &self.predicates {
            let mut line = format!("{:width$}  {:13}  {}", r.predicate.name(), r.verdict.status.as_str(), r.verdict.summary());
            if let Some(c) = &r.verdict.certificate {
                for w in &c.witnesses {
                    line.push_str(&format!("  {}", format_vector(w)));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}
