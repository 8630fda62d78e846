//! Complementarity over `K(A) = R(A) ∩ R^n_+` and the Karamardian
//! semi-decision.
//!
//! The dual cone is `K* = R^n_+ + N(Aᵀ)`, and `LCP(A, K, d)` asks for
//! `x ∈ K` with `Ax + d ∈ K*` and `xᵀ(Ax + d) = 0`.

use std::collections::HashSet;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geninv::{moore_penrose, require_group_inverse};
use crate::lcp::{Complementarity, LcpSolutionSet};
use crate::lcp_classes::{
    copositivity_on_cone, is_almost_semimonotone, is_semimonotone, is_strictly_semimonotone, ConeRep, Copositivity,
};
use crate::linalg::{is_invertible, rank, range_membership_rows, solve_linear};
use crate::lp::{lp_feasible, lp_optimize, LinearSystem, LpOutcome, Sense};
use crate::matrix::Matrix;
use crate::minors::{check_cap, minor_class, positive_entry_in_each_column, subset_of, DEFAULT_CAP};
use crate::monotone::is_range_monotone;
use crate::rational::{dot, frac, int, is_unisigned, is_zero_vector, one, ones, zero, Rational, Vector};
use crate::verdict::{Evidence, Rule, Verdict};

/// `K(A)` in constraint form plus a point of it when it is nontrivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeData {
    /// Basis of `N(Aᵀ)`; `x ∈ R(A)` iff `w · x = 0` for each.
    pub w: Vec<Vector>,
    /// Some `x ∈ K` with `eᵀx = 1`.
    pub witness: Option<Vector>,
}

impl ConeData {
    pub fn is_trivial(&self) -> bool {
        self.witness.is_none()
    }
}

fn normalized_slice(w: &[Vector], n: usize) -> LinearSystem {
    let mut sys = LinearSystem::nonnegative(n);
    for row in w {
        sys.add_eq(row.clone(), zero());
    }
    sys.add_eq(ones(n), one());
    sys
}

pub fn cone_k(a: &Matrix) -> Result<ConeData> {
    let n = a.order()?;
    let w = range_membership_rows(a);
    let witness = match lp_feasible(&normalized_slice(&w, n)) {
        LpOutcome::Feasible(x) => Some(x),
        _ => None,
    };
    Ok(ConeData { w, witness })
}

/// Extreme rays of `K(A)`, one per vertex of `{x ∈ K : eᵀx = 1}`.
pub fn k_generators(a: &Matrix, cap: usize) -> Result<Vec<Vector>> {
    let n = a.order()?;
    check_cap(n, cap)?;
    let w = range_membership_rows(a);
    let found: Vec<Option<Vector>> = (1usize..1 << n)
        .into_par_iter()
        .map(|mask| {
            let s = subset_of(mask, n);
            let mut rows: Vec<Vector> = w.iter().map(|row| s.iter().map(|&i| row[i].clone()).collect()).collect();
            rows.push(ones(s.len()));
            let mut rhs = vec![zero(); w.len()];
            rhs.push(one());
            let m = Matrix::from_rows(rows).ok()?;
            let sol = solve_linear(&m, &rhs).ok()??;
            if !sol.null_basis.is_empty() || !sol.particular.iter().all(|x| x.is_positive()) {
                return None;
            }
            let mut x = vec![zero(); n];
            for (k, &i) in s.iter().enumerate() {
                x[i] = sol.particular[k].clone();
            }
            Some(x)
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

pub fn cone_rep(a: &Matrix, cap: usize) -> Result<ConeRep> {
    let n = a.order()?;
    Ok(ConeRep {
        ambient_dim: n,
        generators: k_generators(a, cap)?,
        subspace_rows: Some(range_membership_rows(a)),
    })
}

fn check_d(a: &Matrix, d: &[Rational]) -> Result<usize> {
    let n = a.order()?;
    if d.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: d.len(),
        });
    }
    Ok(n)
}

/// Writes `y = p + b` with `p >= 0` and `b ∈ N(Aᵀ)` when `y ∈ K*`.
pub fn dual_membership(a: &Matrix, y: &[Rational]) -> Result<Option<(Vector, Vector)>> {
    check_d(a, y)?;
    Ok(dual_split(&range_membership_rows(a), y, false))
}

/// Writes `d = p + b` with `p > 0` and `b ∈ N(Aᵀ)` when `d` is interior to `K*`.
pub fn int_dual_membership(a: &Matrix, d: &[Rational]) -> Result<Option<(Vector, Vector)>> {
    check_d(a, d)?;
    Ok(dual_split(&range_membership_rows(a), d, true))
}

/// Variables `c` (free, one per `w`) and `t`: `y_i - (Wc)_i >= t`.
/// Plain membership fixes `t = 0`; interior membership needs `t > 0`.
fn dual_split(w: &[Vector], y: &[Rational], strict: bool) -> Option<(Vector, Vector)> {
    let n = y.len();
    let p = w.len();
    let mut sys = LinearSystem::new(p + 1);
    if !strict {
        sys.fix(p, zero());
    }
    for i in 0..n {
        let mut row: Vector = w.iter().map(|wk| wk[i].clone()).collect();
        row.push(one());
        sys.add_le(row, y[i].clone());
    }
    let mut obj = vec![zero(); p + 1];
    obj[p] = one();
    let c = match lp_optimize(&obj, &sys, Sense::Maximize) {
        LpOutcome::OptimumBounded { value, witness } if !strict || value.is_positive() => witness,
        LpOutcome::Unbounded { witness, ray } if strict => {
            // Step along the ray until the slack is positive.
            let step = if witness[p].is_positive() { zero() } else { one() - &witness[p] / &ray[p] };
            witness.iter().zip(&ray).map(|(x, r)| x + r * &step).collect()
        }
        LpOutcome::Feasible(x) => x,
        _ => return None,
    };
    let b: Vector = (0..n).map(|i| w.iter().zip(&c).map(|(wk, ck)| &wk[i] * ck).sum()).collect();
    let rest: Vector = y.iter().zip(&b).map(|(yi, bi)| yi - bi).collect();
    Some((rest, b))
}

/// Every solution of `LCP(A, K, d)`; families are flagged as in the standard LCP.
pub fn cone_lcp_solutions(a: &Matrix, d: &[Rational], cap: usize) -> Result<LcpSolutionSet> {
    check_d(a, d)?;
    let w = range_membership_rows(a);
    Complementarity { a, q: d, w: &w }.solutions(cap)
}

/// Some nonzero solution of `LCP(A, K, d)`.
pub fn cone_lcp_nonzero(a: &Matrix, d: &[Rational], cap: usize) -> Result<Option<Vector>> {
    check_d(a, d)?;
    let w = range_membership_rows(a);
    Complementarity { a, q: d, w: &w }.nonzero_solution(cap)
}

pub fn cone_lcp_only_zero(a: &Matrix, d: &[Rational], cap: usize) -> Result<bool> {
    Ok(cone_lcp_nonzero(a, d, cap)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankOneClasses {
    pub p_hash: bool,
    pub karamardian: bool,
}

/// Closed forms for `uvᵀ`: P# iff `vᵀu > 0`; Karamardian iff additionally
/// `u` is unisigned (otherwise `K` is trivial).
pub fn rank_one_classification(u: &[Rational], v: &[Rational]) -> Result<RankOneClasses> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    if is_zero_vector(u) || is_zero_vector(v) {
        return Err(Error::ZeroVector);
    }
    let p_hash = dot(u, v).is_positive();
    Ok(RankOneClasses {
        p_hash,
        karamardian: p_hash && is_unisigned(u),
    })
}

/// `A = uvᵀ` with `u` a nonzero column of a rank-one `A`.
pub fn rank_one_factors(a: &Matrix) -> Option<(Vector, Vector)> {
    if rank(a) != 1 {
        return None;
    }
    let j = (0..a.cols()).find(|&j| !is_zero_vector(&a.col(j)))?;
    let u = a.col(j);
    let i = u.iter().position(|x| !x.is_zero())?;
    let v = a.row(i).iter().map(|x| x / &u[i]).collect();
    Some((u, v))
}

/// Closed-form Karamardian classification of `2 x 2` matrices.
pub fn classify_2x2(a: &Matrix) -> Result<Verdict> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Not2x2 {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let (p, b, c, d) = (&a[(0, 0)], &a[(0, 1)], &a[(1, 0)], &a[(1, 1)]);
    let verdict = |yes: bool, case: &str| {
        if yes {
            Verdict::yes(Rule::Class2x2, case, vec![])
        } else {
            Verdict::no(Rule::Class2x2, case, vec![])
        }
    };
    if a.is_zero() {
        return Ok(Verdict::no(Rule::KTrivial, "zero matrix", vec![]));
    }
    if let Some((u, v)) = rank_one_factors(a) {
        if !is_unisigned(&u) {
            return Ok(Verdict::no(Rule::KTrivial, "rank one, mixed column signs", vec![]));
        }
        return Ok(verdict(dot(&u, &v).is_positive(), "rank one"));
    }
    let pos = |x: &Rational| x.is_positive();
    let neg = |x: &Rational| x.is_negative();
    let det = p * d - b * c;
    Ok(match (p.is_zero(), b.is_zero(), c.is_zero(), d.is_zero()) {
        (_, true, true, _) => verdict(pos(p) && pos(d), "diagonal"),
        (true, _, _, true) => verdict(false, "antidiagonal"),
        (_, true, _, _) | (_, _, true, _) => verdict(pos(p) && pos(d), "triangular"),
        (true, _, _, _) => verdict(neg(c) && pos(b) && pos(d), "zero leading diagonal entry"),
        (_, _, _, true) => verdict(neg(b) && pos(c) && pos(p), "zero trailing diagonal entry"),
        _ => {
            let negs = [neg(p), neg(b), neg(c), neg(d)];
            let count = negs.iter().filter(|&&x| x).count();
            if count == 0 {
                verdict(true, "positive")
            } else if (negs[0] && negs[1]) || (negs[2] && negs[3]) {
                verdict(false, "negative row")
            } else if count == 1 {
                verdict(negs[1] || negs[2], "one negative entry")
            } else if negs[0] && negs[3] {
                verdict(false, "negative diagonal")
            } else if negs[1] && negs[2] {
                verdict(det.is_positive(), "negative off-diagonal")
            } else {
                verdict(det.is_positive(), "negative column")
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaramardianConfig {
    /// Tried first, in order.
    pub candidate_ds: Vec<Vector>,
    /// Budget for generated candidates beyond the hints.
    pub max_candidates: usize,
    pub seed: u64,
    pub cap: usize,
    /// Rank-one and `2 x 2` closed forms.
    pub closed_forms: bool,
    /// Sufficient conditions from matrix classes.
    pub theorem_rules: bool,
}

impl Default for KaramardianConfig {
    fn default() -> Self {
        Self {
            candidate_ds: Vec::new(),
            max_candidates: 16,
            seed: 0,
            cap: DEFAULT_CAP,
            closed_forms: true,
            theorem_rules: true,
        }
    }
}

impl KaramardianConfig {
    /// Only the homogeneous test and the candidate search.
    pub fn candidate_only(seed: u64) -> Self {
        Self {
            seed,
            closed_forms: false,
            theorem_rules: false,
            ..Self::default()
        }
    }

    pub fn with_hints(mut self, hints: Vec<Vector>) -> Self {
        self.candidate_ds = hints;
        self
    }
}

/// Is there `d ∈ int K*` such that `LCP(A, K, 0)` and `LCP(A, K, d)` have only
/// the zero solution? Decided by the first firing rule; `Unknown` lists the
/// candidates tried.
pub fn is_karamardian(a: &Matrix, config: &KaramardianConfig) -> Result<Verdict> {
    let n = a.order()?;
    check_cap(n, config.cap)?;
    let cone = cone_k(a)?;
    let Some(witness) = cone.witness.clone() else {
        return Ok(Verdict::no(Rule::KTrivial, "", vec![]));
    };
    let zero_d = vec![zero(); n];
    if let Some(x) = cone_lcp_nonzero(a, &zero_d, config.cap)? {
        return Ok(Verdict::no(Rule::HomogeneousNonzero, "", vec![x]));
    }
    if config.closed_forms {
        if let Some((u, v)) = rank_one_factors(a) {
            let yes = rank_one_classification(&u, &v)?.karamardian;
            let note = "uᵀv sign";
            return Ok(if yes {
                Verdict::yes(Rule::RankOne, note, vec![u, v])
            } else {
                Verdict::no(Rule::RankOne, note, vec![u, v])
            });
        }
        if n == 2 {
            return classify_2x2(a);
        }
    }
    if config.theorem_rules {
        if let Some(v) = theorem_rules(a, config)? {
            return Ok(v);
        }
    }
    candidate_search(a, &cone.w, &witness, config)
}

fn theorem_rules(a: &Matrix, config: &KaramardianConfig) -> Result<Option<Verdict>> {
    let n = a.rows();
    let cap = config.cap;
    if a.is_nonnegative() && a.diagonal_entries().iter().all(|x| x.is_positive()) {
        return Ok(Some(Verdict::yes(Rule::NonnegPosDiag, "", vec![ones(n)])));
    }
    let minors = minor_class(a, cap)?;
    if minors.is_p {
        return Ok(Some(Verdict::yes(Rule::PMatrix, "", vec![ones(n)])));
    }
    let rep = cone_rep(a, cap)?;
    if !rep.generators.is_empty() && rep.generators.len() <= cap {
        if let Ok(Copositivity::StrictlyCopositive) = copositivity_on_cone(a, &rep, cap) {
            return Ok(Some(Verdict::yes(Rule::StrictCopositiveOnK, "", vec![])));
        }
    }
    let invertible = is_invertible(a);
    if invertible && is_strictly_semimonotone(a, cap)? {
        return Ok(Some(Verdict::yes(Rule::StrictlySemimonotone, "", vec![ones(n)])));
    }
    // The homogeneous problem was already found to have only the zero solution.
    if invertible && is_semimonotone(a, cap)? {
        return Ok(Some(Verdict::yes(Rule::SemimonotoneHomogeneous, "", vec![ones(n)])));
    }
    if is_almost_semimonotone(a, cap)? {
        return Ok(Some(Verdict::no(Rule::AlmostSemimonotone, "", vec![])));
    }
    if invertible && a.is_z_matrix() && !minors.is_p {
        return Ok(Some(Verdict::no(Rule::ZNotP, "", vec![])));
    }
    if minors.n_first_category && positive_entry_in_each_column(a) {
        // Three solutions for every positive q, so no positive d works and
        // every interior d of the orthant has the same problem.
        return Ok(Some(Verdict::no(Rule::NFirstCategory, "", vec![ones(n)])));
    }
    Ok(None)
}

/// Default candidate directions, hints first, deduplicated modulo `N(Aᵀ)`.
pub fn candidate_ds(a: &Matrix, w: &[Vector], witness: &[Rational], config: &KaramardianConfig) -> Vec<Vector> {
    let n = a.rows();
    let projector = a * &moore_penrose(a);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |d: Vector, out: &mut Vec<Vector>| {
        if d.len() == n && dual_split(w, &d, true).is_some() && seen.insert(projector.mul_vec(&d)) {
            out.push(d);
        }
    };
    for d in &config.candidate_ds {
        push(d.clone(), &mut out);
    }
    let budget = out.len() + config.max_candidates;
    let mut generated = vec![ones(n)];
    for eps in [one(), frac(1, 2)] {
        generated.push(witness.iter().map(|x| if x.is_zero() { eps.clone() } else { x.clone() }).collect());
    }
    let mut sys = LinearSystem::new(n);
    for i in 0..n {
        let mut e = vec![zero(); n];
        e[i] = one();
        sys.add_ge(e, one());
        sys.add_ge(a.row(i).to_vec(), zero());
    }
    if let LpOutcome::Feasible(x) = lp_feasible(&sys) {
        generated.push(a.mul_vec(&x));
        generated.push(x);
    }
    for d in generated {
        if out.len() >= budget {
            return out;
        }
        push(d, &mut out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let combo = |rng: &mut ChaCha8Rng, base: Vector| -> Vector {
        w.iter().fold(base, |acc, wk| {
            let c = int(rng.gen_range(-3..=3));
            acc.iter().zip(wk).map(|(x, y)| x + y * &c).collect()
        })
    };
    for attempt in 0..config.max_candidates * 4 {
        if out.len() >= budget {
            break;
        }
        let base = if attempt % 2 == 0 { ones(n) } else { (0..n).map(|_| int(rng.gen_range(1..=6))).collect() };
        let d = combo(&mut rng, base);
        push(d, &mut out);
    }
    out
}

fn candidate_search(a: &Matrix, w: &[Vector], witness: &[Rational], config: &KaramardianConfig) -> Result<Verdict> {
    let candidates = candidate_ds(a, w, witness, config);
    let cap = config.cap;
    let hit = candidates.par_iter().find_map_first(|d| {
        let c = Complementarity { a, q: d, w };
        match c.nonzero_solution(cap) {
            Ok(None) => Some(d.clone()),
            _ => None,
        }
    });
    Ok(match hit {
        Some(d) => Verdict::yes(Rule::CandidateD, "", vec![d]),
        None => Verdict::unknown(Evidence {
            seed: config.seed,
            tried: candidates,
            note: "every candidate admits a nonzero solution".into(),
        }),
    })
}

/// Karamardian status of `A#`; a range monotone Z-matrix with nontrivial
/// `K` settles it directly.
pub fn karamardian_of_group_inverse(a: &Matrix, config: &KaramardianConfig) -> Result<Verdict> {
    let g = require_group_inverse(a)?;
    if a.is_z_matrix() && !cone_k(a)?.is_trivial() && is_range_monotone(a)? {
        return Ok(Verdict::yes(Rule::RangeMonotoneZ, "", vec![]));
    }
    is_karamardian(&g, config)
}

/// Re-checks a `Yes` carried by a candidate direction.
pub fn verify_candidate(a: &Matrix, d: &[Rational], cap: usize) -> Result<bool> {
    Ok(int_dual_membership(a, d)?.is_some() && cone_lcp_only_zero(a, d, cap)?)
}
