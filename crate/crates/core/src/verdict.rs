//! Three-valued verdicts for semi-decided classes, with certificates.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::{vector_from_json, vector_to_json};
use crate::rational::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Yes,
    No,
    Unknown,
    NotApplicable,
}

impl Status {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Status::Yes
        } else {
            Status::No
        }
    }

    pub fn is_decisive(self) -> bool {
        matches!(self, Status::Yes | Status::No)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Yes => "Yes",
            Status::No => "No",
            Status::Unknown => "Unknown",
            Status::NotApplicable => "NotApplicable",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "Yes" => Status::Yes,
            "No" => Status::No,
            "Unknown" => Status::Unknown,
            "NotApplicable" => Status::NotApplicable,
            _ => return None,
        })
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Identifier of the argument that settled a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// A complete decision procedure rather than a sufficient condition.
    Exact,
    KTrivial,
    HomogeneousNonzero,
    RankOne,
    Class2x2,
    NonnegPosDiag,
    PMatrix,
    StrictCopositiveOnK,
    StrictlySemimonotone,
    SemimonotoneHomogeneous,
    AlmostSemimonotone,
    ZNotP,
    NFirstCategory,
    CandidateD,
    RangeMonotoneZ,
    ZAndP,
    StrictCopositive,
    KaramardianInvertible,
    NonpositiveRow,
    NonnegZeroDiag,
    UnsolvableSample,
}

impl Rule {
    pub const ALL: &'static [Rule] = &[
        Rule::Exact,
        Rule::KTrivial,
        Rule::HomogeneousNonzero,
        Rule::RankOne,
        Rule::Class2x2,
        Rule::NonnegPosDiag,
        Rule::PMatrix,
        Rule::StrictCopositiveOnK,
        Rule::StrictlySemimonotone,
        Rule::SemimonotoneHomogeneous,
        Rule::AlmostSemimonotone,
        Rule::ZNotP,
        Rule::NFirstCategory,
        Rule::CandidateD,
        Rule::RangeMonotoneZ,
        Rule::ZAndP,
        Rule::StrictCopositive,
        Rule::KaramardianInvertible,
        Rule::NonpositiveRow,
        Rule::NonnegZeroDiag,
        Rule::UnsolvableSample,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::Exact => "EXACT",
            Rule::KTrivial => "K_TRIVIAL",
            Rule::HomogeneousNonzero => "HOMOGENEOUS_NONZERO",
            Rule::RankOne => "RANK_ONE",
            Rule::Class2x2 => "CLASS_2X2",
            Rule::NonnegPosDiag => "NONNEG_POS_DIAG",
            Rule::PMatrix => "P_MATRIX",
            Rule::StrictCopositiveOnK => "STRICT_COPOSITIVE_ON_K",
            Rule::StrictlySemimonotone => "NONSINGULAR_STRICTLY_SEMIMONOTONE",
            Rule::SemimonotoneHomogeneous => "NONSINGULAR_SEMIMONOTONE_HOMOGENEOUS",
            Rule::AlmostSemimonotone => "ALMOST_SEMIMONOTONE",
            Rule::ZNotP => "Z_NOT_P",
            Rule::NFirstCategory => "N_FIRST_CATEGORY",
            Rule::CandidateD => "CANDIDATE_D",
            Rule::RangeMonotoneZ => "RANGE_MONOTONE_Z",
            Rule::ZAndP => "Z_AND_P",
            Rule::StrictCopositive => "STRICT_COPOSITIVE",
            Rule::KaramardianInvertible => "KARAMARDIAN_INVERTIBLE",
            Rule::NonpositiveRow => "NONPOSITIVE_ROW",
            Rule::NonnegZeroDiag => "NONNEG_ZERO_DIAG",
            Rule::UnsolvableSample => "UNSOLVABLE_SAMPLE",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Rule::ALL.iter().copied().find(|r| r.id() == s)
    }
}


impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub rule: Rule,
    pub note: String,
    pub witnesses: Vec<Vector>,
}

/// What was tried before giving up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub seed: u64,
    pub tried: Vec<Vector>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub certificate: Option<Certificate>,
    pub evidence: Option<Evidence>,
}

impl Verdict {
    fn decided(status: Status, rule: Rule, note: impl Into<String>, witnesses: Vec<Vector>) -> Self {
        Self {
            status,
            certificate: Some(Certificate {
                rule,
                note: note.into(),
                witnesses,
            }),
            evidence: None,
        }
    }

    pub fn yes(rule: Rule, note: impl Into<String>, witnesses: Vec<Vector>) -> Self {
        Self::decided(Status::Yes, rule, note, witnesses)
    }

    pub fn no(rule: Rule, note: impl Into<String>, witnesses: Vec<Vector>) -> Self {
        Self::decided(Status::No, rule, note, witnesses)
    }

    pub fn unknown(evidence: Evidence) -> Self {
        Self {
            status: Status::Unknown,
            certificate: None,
            evidence: Some(evidence),
        }
    }

    pub fn rule(&self) -> Option<Rule> {
        self.certificate.as_ref().map(|c| c.rule)
    }

    pub fn to_json(&self) -> Value {
        let mut out = serde_json::Map::new();
        out.insert("status".into(), json!(self.status.as_str()));
        if let Some(c) = &self.certificate {
            out.insert(
                "certificate".into(),
                json!({
                    "rule": c.rule.id(),
                    "note": c.note,
                    "witnesses": c.witnesses.iter().map(|w| vector_to_json(w)).collect::<Vec<_>>(),
                }),
            );
        }
        if let Some(e) = &self.evidence {
            out.insert(
                "evidence".into(),
                json!({
                    "seed": e.seed,
                    "note": e.note,
                    "tried": e.tried.iter().map(|w| vector_to_json(w)).collect::<Vec<_>>(),
                }),
            );
        }
        Value::Object(out)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("verdict: {what}"));
        let status = value
            .get("status")
            .and_then(Value::as_str)
            .and_then(Status::parse)
            .ok_or_else(|| bad("bad `status`"))?;
        let vectors = |v: Option<&Value>, field: &str| -> Result<Vec<Vector>> {
            match v {
                Some(Value::Array(xs)) => xs.iter().map(|x| vector_from_json(x, field)).collect(),
                _ => Err(bad(&format!("`{field}` must be an array"))),
            }
        };
        let text = |v: &Value, field: &str| v.get(field).and_then(Value::as_str).unwrap_or_default().to_string();
        let certificate = match value.get("certificate") {
            None | Some(Value::Null) => None,
            Some(c) => Some(Certificate {
                rule: c
                    .get("rule")
                    .and_then(Value::as_str)
                    .and_then(Rule::parse)
                    .ok_or_else(|| bad("unknown rule"))?,
                note: text(c, "note"),
                witnesses: vectors(c.get("witnesses"), "witnesses")?,
            }),
        };
        let evidence = match value.get("evidence") {
            None | Some(Value::Null) => None,
            Some(e) => Some(Evidence {
                seed: e.get("seed").and_then(Value::as_u64).ok_or_else(|| bad("bad `seed`"))?,
                tried: vectors(e.get("tried"), "tried")?,
                note: text(e, "note"),
            }),
        };
        Ok(Self {
            status,
            certificate,
            evidence,
        })
    }

    /// One-line summary for text reports.
    pub fn summary(&self) -> String {
        match (&self.certificate, &self.evidence) {
            (Some(c), _) if c.note.is_empty() => c.rule.id().to_string(),
            (Some(c), _) => format!("{} ({})", c.rule.id(), c.note),
            (None, Some(e)) => format!("{} candidates tried, seed {}", e.tried.len(), e.seed),
            (None, None) => String::new(),
        }
    }
}
