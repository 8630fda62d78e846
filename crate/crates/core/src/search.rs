//! Seeded random hunts for counterexamples to the two open questions.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::conelcp::{cone_k, is_karamardian, KaramardianConfig};
use crate::error::{Error, Result};
use crate::lcp_classes::p_hash_violation;
use crate::matrix::Matrix;
use crate::minors::has_property_c;
use crate::rational::{int, Rational};
use crate::verdict::{Rule, Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// P#, K ≠ {0}, and the Karamardian cascade cannot decide.
    PHashNotKaramardian,
    /// Z with property c but not P#.
    PropCNotPHash,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::PHashNotKaramardian => "phash-not-karamardian",
            Target::PropCNotPHash => "propc-not-phash",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "phash-not-karamardian" => Some(Target::PHashNotKaramardian),
            "propc-not-phash" => Some(Target::PropCNotPHash),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub target: Target,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    /// Probability `num/den` that an off-diagonal entry is nonzero.
    pub density: (u32, u32),
    pub entry_bound: i64,
    pub max_candidates: usize,
    pub cap: usize,
}

impl SearchConfig {
    pub fn new(target: Target, n: usize, trials: u64, seed: u64) -> Self {
        Self {
            target,
            n,
            trials,
            seed,
            density: (1, 1),
            entry_bound: 3,
            max_candidates: 16,
            cap: crate::minors::DEFAULT_CAP,
        }
    }

    fn validate(&self) -> Result<()> {
        let (p, q) = self.density;
        if q == 0 || p > q {
            return Err(Error::Parse(format!("density {p}/{q} must lie in [0, 1]")));
        }
        if self.entry_bound < 1 {
            return Err(Error::Parse("entry bound must be at least 1".into()));
        }
        if self.n == 0 {
            return Err(Error::Parse("n must be at least 1".into()));
        }
        if self.n > self.cap {
            return Err(Error::TooLarge { n: self.n, cap: self.cap });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub trial: u64,
    pub matrix: Matrix,
    /// Named verdicts establishing the hit.
    pub evidence: Vec<(String, Verdict)>,
}

impl Hit {
    pub fn to_json(&self, target: Target) -> Value {
        let evidence: serde_json::Map<String, Value> =
            self.evidence.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        json!({
            "target": target.name(),
            "trial": self.trial,
            "matrix": self.matrix.to_json(),
            "evidence": evidence,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub trials: u64,
    /// Trials that passed the cheap structural filter.
    pub screened: u64,
    pub hits: Vec<Hit>,
}

impl SearchOutcome {
    pub fn to_json_lines(&self, target: Target) -> String {
        self.hits.iter().map(|h| format!("{}\n", h.to_json(target))).collect()
    }
}

fn entry(rng: &mut ChaCha8Rng, config: &SearchConfig, lo: i64, hi: i64) -> Rational {
    let (p, q) = config.density;
    if p == 0 || !rng.gen_ratio(p, q) {
        return int(0);
    }
    int(rng.gen_range(lo..=hi))
}

/// Trial `t` draws from its own ChaCha stream, so results do not depend on
/// scheduling.
pub fn random_matrix(config: &SearchConfig, trial: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial);
    let b = config.entry_bound;
    let n = config.n;
    match config.target {
        Target::PHashNotKaramardian => Matrix::from_fn(n, n, |_, _| entry(&mut rng, config, -b, b)),
        Target::PropCNotPHash => {
            // Z pattern, then a diagonal making A x = 0 for a positive x half
            // the time, so singular M-matrices are common.
            let a = Matrix::from_fn(n, n, |i, j| if i == j { int(0) } else { entry(&mut rng, config, -b, 0) });
            let singular = rng.gen_bool(0.5);
            let x: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(1..=b))).collect();
            let rows: Vec<Vec<Rational>> = (0..n)
                .map(|i| {
                    let mut row = a.row(i).to_vec();
                    row[i] = if singular {
                        let off: Rational = (0..n).map(|j| &row[j] * &x[j]).sum();
                        -off / &x[i]
                    } else {
                        int(rng.gen_range(0..=b))
                    };
                    row
                })
                .collect();
            Matrix::from_rows(rows).expect("square")
        }
    }
}

fn exact_verdict(b: bool, note: &str) -> Verdict {
    if b {
        Verdict::yes(Rule::Exact, note, vec![])
    } else {
        Verdict::no(Rule::Exact, note, vec![])
    }
}

/// Screens one matrix: whether it passed the structural filter, and the hit if any.
pub fn examine(a: &Matrix, config: &SearchConfig, trial: u64) -> Result<(bool, Option<Hit>)> {
    match config.target {
        Target::PHashNotKaramardian => {
            let k = cone_k(a)?;
            if k.is_trivial() {
                return Ok((false, None));
            }
            if p_hash_violation(a, config.cap)?.is_some() {
                return Ok((false, None));
            }
            let kc = KaramardianConfig {
                max_candidates: config.max_candidates,
                seed: config.seed,
                cap: config.cap,
                ..KaramardianConfig::default()
            };
            let v = is_karamardian(a, &kc)?;
            if v.status != Status::Unknown {
                return Ok((true, None));
            }
            let evidence = vec![
                ("p_hash".to_string(), exact_verdict(true, "orthant LPs")),
                ("k_nontrivial".to_string(), Verdict::yes(Rule::Exact, "K ≠ {0}", k.witness.into_iter().collect())),
                ("karamardian".to_string(), v),
            ];
            Ok((true, Some(Hit { trial, matrix: a.clone(), evidence })))
        }
        Target::PropCNotPHash => {
            if !a.is_z_matrix() || !has_property_c(a, config.cap)? {
                return Ok((false, None));
            }
            let Some(x) = p_hash_violation(a, config.cap)? else {
                return Ok((true, None));
            };
            let evidence = vec![
                ("z_matrix".to_string(), exact_verdict(true, "entrywise")),
                ("property_c".to_string(), exact_verdict(true, "M-matrix with rank A = rank A^2")),
                ("p_hash".to_string(), Verdict::no(Rule::Exact, "orthant LPs", vec![x])),
            ];
            Ok((true, Some(Hit { trial, matrix: a.clone(), evidence })))
        }
    }
}

/// Recomputes the defining predicates of a hit from scratch.
pub fn reverify(hit: &Hit, config: &SearchConfig) -> Result<bool> {
    let a = &hit.matrix;
    Ok(match config.target {
        Target::PHashNotKaramardian => {
            !cone_k(a)?.is_trivial()
                && p_hash_violation(a, config.cap)?.is_none()
                && hit.evidence.iter().any(|(k, v)| k == "karamardian" && v.status == Status::Unknown)
        }
        Target::PropCNotPHash => {
            let witness_ok = hit.evidence.iter().any(|(k, v)| {
                k == "p_hash"
                    && v.certificate.as_ref().is_some_and(|c| {
                        c.witnesses.first().is_some_and(|x| crate::lcp_classes::is_p_hash_violation(a, x))
                    })
            });
            a.is_z_matrix() && has_property_c(a, config.cap)? && witness_ok
        }
    })
}

pub fn run_search(config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let results = (0..config.trials)
        .into_par_iter()
        .map(|t| examine(&random_matrix(config, t), config, t))
        .collect::<Result<Vec<_>>>()?;
    let screened = results.iter().filter(|(s, _)| *s).count() as u64;
    let hits = results.into_iter().filter_map(|(_, h)| h).collect();
    Ok(SearchOutcome {
        trials: config.trials,
        screened,
        hits,
    })
}
