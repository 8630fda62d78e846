//! Standard LCP by complementary-support enumeration and the Q-matrix
//! semi-decision.

use std::collections::HashSet;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::conelcp::{is_karamardian, KaramardianConfig};
use crate::error::{Error, Result};
use crate::lcp_classes::{copositivity_on_cone, ConeRep, Copositivity};
use crate::linalg::{is_invertible, solve_linear};
use crate::lp::{lp_feasible, lp_optimize, LinearSystem, LpOutcome, Sense};
use crate::matrix::Matrix;
use crate::minors::{check_cap, has_nonpositive_row, minor_class, positive_entry_in_each_column, subset_of};
use crate::rational::{add_vectors, int, is_nonnegative, is_zero_vector, one, unit, zero, Rational, Vector};
use crate::verdict::{Evidence, Rule, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LcpSolutionSet {
    pub solutions: Vec<Vector>,
    /// Supports whose solution set is positive-dimensional; one
    /// representative of each is included in `solutions`.
    pub degenerate_supports: Vec<Vec<usize>>,
    pub complete: bool,
}

impl LcpSolutionSet {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }

    pub fn has_nonzero(&self) -> bool {
        !self.degenerate_supports.is_empty() || self.solutions.iter().any(|x| !is_zero_vector(x))
    }
}

/// Complementarity problem `x ∈ K, y = Ax + q ∈ K*, xᵀy = 0` where
/// `K = R^n_+ ∩ {x : w·x = 0}` and `K* = R^n_+ + span(W)` for the stored
/// vectors `W`. The standard LCP has `W` empty.
pub(crate) struct Complementarity<'a> {
    pub a: &'a Matrix,
    pub q: &'a [Rational],
    pub w: &'a [Vector],
}

pub(crate) enum SupportResult {
    Point(Vector),
    Family(Vector),
}

impl Complementarity<'_> {
    fn n(&self) -> usize {
        self.a.rows()
    }

    /// Variables `x` (n, nonnegative, zero off the support) then `c` (free).
    /// `u = Ax + q - Wc` must be nonnegative and vanish on the support.
    fn system(&self, mask: usize) -> LinearSystem {
        let n = self.n();
        let p = self.w.len();
        let mut sys = LinearSystem::new(n + p);
        for i in 0..n {
            sys.set_nonneg(i);
            if mask >> i & 1 == 0 {
                sys.fix(i, zero());
            }
        }
        for w in self.w {
            let mut row = w.clone();
            row.resize(n + p, zero());
            sys.add_eq(row, zero());
        }
        for i in 0..n {
            let mut row = self.a.row(i).to_vec();
            row.extend(self.w.iter().map(|w| -&w[i]));
            let rhs = -&self.q[i];
            if mask >> i & 1 == 1 {
                sys.add_eq(row, rhs);
            } else {
                sys.add_ge(row, rhs);
            }
        }
        sys
    }

    fn solve_support(&self, mask: usize) -> Option<SupportResult> {
        let n = self.n();
        if self.w.is_empty() {
            if let Some(r) = self.fast_support(mask) {
                return r;
            }
        }
        let sys = self.system(mask);
        let x0 = match lp_feasible(&sys) {
            LpOutcome::Feasible(x) => x[..n].to_vec(),
            _ => return None,
        };
        let support = subset_of(mask, n);
        let moves = support.iter().any(|&j| {
            let mut obj = vec![zero(); sys.variable_count()];
            obj[j] = one();
            let hi = lp_optimize(&obj, &sys, Sense::Maximize);
            let lo = lp_optimize(&obj, &sys, Sense::Minimize);
            match (hi, lo) {
                (LpOutcome::OptimumBounded { value: h, .. }, LpOutcome::OptimumBounded { value: l, .. }) => h != l,
                _ => true,
            }
        });
        Some(if moves { SupportResult::Family(x0) } else { SupportResult::Point(x0) })
    }

    /// Standard LCP with a nonsingular principal block: one linear solve.
    fn fast_support(&self, mask: usize) -> Option<Option<SupportResult>> {
        let n = self.n();
        let s = subset_of(mask, n);
        let mut x = vec![zero(); n];
        if !s.is_empty() {
            let block = self.a.principal(&s);
            let rhs: Vector = s.iter().map(|&i| -&self.q[i]).collect();
            let sol = solve_linear(&block, &rhs).ok()?;
            match sol {
                None => return Some(None),
                Some(sol) if sol.null_basis.is_empty() => {
                    for (k, &i) in s.iter().enumerate() {
                        x[i] = sol.particular[k].clone();
                    }
                }
                Some(_) => return None,
            }
        }
        let y = add_vectors(&self.a.mul_vec(&x), self.q);
        let ok = is_nonnegative(&x) && (0..n).all(|i| mask >> i & 1 == 1 || !y[i].is_negative());
        Some(ok.then_some(SupportResult::Point(x)))
    }

    pub fn solutions(&self, cap: usize) -> Result<LcpSolutionSet> {
        let n = self.n();
        check_cap(n, cap)?;
        let results: Vec<(usize, Option<SupportResult>)> =
            (0usize..1 << n).into_par_iter().map(|mask| (mask, self.solve_support(mask))).collect();
        let mut set = LcpSolutionSet {
            complete: true,
            ..Default::default()
        };
        let mut seen = HashSet::new();
        for (mask, r) in results {
            let x = match r {
                None => continue,
                Some(SupportResult::Point(x)) => x,
                Some(SupportResult::Family(x)) => {
                    set.degenerate_supports.push(subset_of(mask, n));
                    x
                }
            };
            if seen.insert(x.clone()) {
                set.solutions.push(x);
            }
        }
        Ok(set)
    }

    /// Some nonzero solution, scanning supports in increasing bitmask order.
    pub fn nonzero_solution(&self, cap: usize) -> Result<Option<Vector>> {
        let n = self.n();
        check_cap(n, cap)?;
        Ok((1usize..1 << n).into_par_iter().find_map_first(|mask| {
            let sys = self.system(mask);
            let mut obj = vec![zero(); sys.variable_count()];
            for i in subset_of(mask, n) {
                obj[i] = one();
            }
            match lp_optimize(&obj, &sys, Sense::Maximize) {
                LpOutcome::OptimumBounded { value, witness } if value.is_positive() => Some(witness[..n].to_vec()),
                LpOutcome::Unbounded { witness, ray } => Some(add_vectors(&witness[..n], &ray[..n])),
                _ => None,
            }
        }))
    }
}

fn check_q(a: &Matrix, q: &[Rational]) -> Result<usize> {
    let n = a.order()?;
    if q.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: q.len(),
        });
    }
    Ok(n)
}

/// Every solution of `x >= 0, Ax + q >= 0, xᵀ(Ax + q) = 0`.
pub fn lcp_solutions(a: &Matrix, q: &[Rational], cap: usize) -> Result<LcpSolutionSet> {
    check_q(a, q)?;
    Complementarity { a, q, w: &[] }.solutions(cap)
}

/// Exact check of the three LCP conditions.
pub fn is_lcp_solution(a: &Matrix, q: &[Rational], x: &[Rational]) -> bool {
    let y = add_vectors(&a.mul_vec(x), q);
    is_nonnegative(x) && is_nonnegative(&y) && crate::rational::dot(x, &y).is_zero()
}

/// For `q >= 0`: zero is the only solution and no solution family exists.
pub fn lcp_unique_zero(a: &Matrix, q: &[Rational], cap: usize) -> Result<bool> {
    check_q(a, q)?;
    if !is_nonnegative(q) {
        return Err(Error::QNotNonnegative);
    }
    Ok(Complementarity { a, q, w: &[] }.nonzero_solution(cap)?.is_none())
}

/// LCP(A, q) has no solution at all.
pub fn lcp_unsolvable(a: &Matrix, q: &[Rational], cap: usize) -> Result<bool> {
    check_q(a, q)?;
    let n = a.rows();
    check_cap(n, cap)?;
    let c = Complementarity { a, q, w: &[] };
    Ok(!(0usize..1 << n).into_par_iter().any(|mask| c.solve_support(mask).is_some()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QConfig {
    pub samples: usize,
    pub seed: u64,
    pub bound: i64,
    pub cap: usize,
    pub use_karamardian: bool,
}

impl Default for QConfig {
    fn default() -> Self {
        Self {
            samples: 200,
            seed: 0,
            bound: 10,
            cap: crate::minors::DEFAULT_CAP,
            use_karamardian: true,
        }
    }
}

/// Sample vectors: `-e`, `±e_i`, then seeded draws from `[-bound, bound]^n`.
fn q_samples(n: usize, config: &QConfig) -> Vec<Vector> {
    let mut out = vec![vec![int(-1); n]];
    for i in 0..n {
        out.push(unit(n, i).into_iter().map(|x| -x).collect());
        out.push(unit(n, i));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    while out.len() < config.samples.max(out.len()) {
        out.push((0..n).map(|_| int(rng.gen_range(-config.bound..=config.bound))).collect());
    }
    out
}

/// Semi-decision of "LCP(A, q) is solvable for every q".
pub fn is_q_matrix(a: &Matrix, config: &QConfig) -> Result<Verdict> {
    let n = a.order()?;
    check_cap(n, config.cap)?;
    let minors = minor_class(a, config.cap)?;

    if let Some(i) = (0..n).find(|&i| a.row(i).iter().all(|x| !x.is_positive())) {
        let q: Vector = unit(n, i).into_iter().map(|x| -x).collect();
        return Ok(Verdict::no(Rule::NonpositiveRow, format!("row {i}"), vec![q]));
    }
    let diag = a.diagonal_entries();
    if a.is_nonnegative() {
        if diag.iter().all(|d| d.is_positive()) {
            return Ok(Verdict::yes(Rule::NonnegPosDiag, "", vec![]));
        }
        return Ok(Verdict::no(Rule::NonnegZeroDiag, "", vec![]));
    }
    if a.is_z_matrix() {
        return Ok(if minors.is_p {
            Verdict::yes(Rule::ZAndP, "", vec![])
        } else {
            Verdict::no(Rule::ZNotP, "", vec![])
        });
    }
    if minors.is_p {
        return Ok(Verdict::yes(Rule::PMatrix, "", vec![]));
    }
    if copositivity_on_cone(a, &ConeRep::nonnegative_orthant(n), config.cap)? == Copositivity::StrictlyCopositive {
        return Ok(Verdict::yes(Rule::StrictCopositive, "", vec![]));
    }
    if minors.n_first_category && positive_entry_in_each_column(a) {
        return Ok(Verdict::yes(Rule::NFirstCategory, "", vec![]));
    }
    if config.use_karamardian && is_invertible(a) {
        let kc = KaramardianConfig {
            seed: config.seed,
            cap: config.cap,
            ..Default::default()
        };
        if is_karamardian(a, &kc)?.status == crate::verdict::Status::Yes {
            return Ok(Verdict::yes(Rule::KaramardianInvertible, "", vec![]));
        }
    }
    let samples = q_samples(n, config);
    let hit = samples
        .par_iter()
        .find_map_first(|q| lcp_unsolvable(a, q, config.cap).ok().filter(|&b| b).map(|_| q.clone()));
    if let Some(q) = hit {
        return Ok(Verdict::no(Rule::UnsolvableSample, "", vec![q]));
    }
    debug_assert!(!has_nonpositive_row(a));
    Ok(Verdict::unknown(Evidence {
        seed: config.seed,
        tried: samples,
        note: "every sampled q admits a solution".into(),
    }))
}
