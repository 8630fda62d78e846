//! Acceptance criteria 1-10. Prints one line per criterion; exits nonzero when
//! the set of failures differs from the documented one.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use kara_core::conelcp::{
    classify_2x2, cone_lcp_nonzero, int_dual_membership, is_karamardian, rank_one_classification, KaramardianConfig,
};
use kara_core::construct::{border_karamardian, border_m_matrix, cayley_g_epsilon};
use kara_core::corpus::corpus_entries;
use kara_core::geninv::{group_equations_hold, group_inverse, moore_penrose, penrose_equations_hold};
use kara_core::lcp::{lcp_solutions, lcp_unsolvable};
use kara_core::lcp_classes::is_p_hash;
use kara_core::linalg::{determinant, inverse};
use kara_core::minors::{has_property_c, minor_class, DEFAULT_CAP};
use kara_core::monotone::{group_inverse_nonneg_on_k, is_range_monotone, k_has_no_nonpositive_image};
use kara_core::lcp_classes::is_strictly_range_semimonotone;
use kara_core::rational::{dot, format_vector, frac, int, is_zero_vector};
use kara_core::search::{reverify, run_search, SearchConfig, Target};
use kara_core::{Matrix, Rational, Status};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: usize = DEFAULT_CAP;

/// Criterion 3 cannot pass: the tridiagonal matrix has a nonzero solution for
/// every interior `d` tried, including the recorded one.
const KNOWN_FAILURES: &[(u32, &[&str])] = &[(3, &["beta=1 tridiagonal"])];

struct Outcome {
    mismatches: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new(mismatches: Vec<String>, detail: impl Into<String>) -> Self {
        Self {
            mismatches,
            detail: detail.into(),
        }
    }
}

fn m(rows: &[&[i64]]) -> Matrix {
    let n = rows.len();
    Matrix::from_fn(n, rows[0].len(), |i, j| int(rows[i][j]))
}

fn karamardian(a: &Matrix, hints: &[&[i64]]) -> Status {
    let config = KaramardianConfig::default().with_hints(hints.iter().map(|h| vector(h)).collect());
    is_karamardian(a, &config).unwrap().status
}

fn entry(id: &str) -> Matrix {
    corpus_entries().into_iter().find(|e| e.id == id).unwrap_or_else(|| panic!("{id}")).matrix
}

fn check<T: PartialEq + std::fmt::Debug>(out: &mut Vec<String>, label: &str, got: T, want: T) {
    if got != want {
        out.push(format!("{label}: got {got:?}, want {want:?}"));
    }
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    let mut cases: Vec<(String, Matrix, Matrix)> = (2..=6)
        .map(|n| {
            let a = Matrix::from_fn(n, n, |_, _| int(1));
            let g = a.scale(&frac(1, (n * n) as i64));
            (format!("all-ones {n}"), a, g)
        })
        .collect();
    cases.push(("phashex1".into(), m(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 0]]), m(&[&[1, -1, -1], &[0, 1, 1], &[0, 0, 0]])));
    cases.push((
        "rangemoneg".into(),
        m(&[&[1, -1, 0], &[-1, 1, 0], &[0, 0, 3]]),
        Matrix::from_rows(vec![
            vec![int(1), int(-1), int(0)],
            vec![int(-1), int(1), int(0)],
            vec![int(0), int(0), frac(4, 3)],
        ])
        .unwrap()
        .scale(&frac(1, 4)),
    ));
    cases.push((
        "rmonkarcor".into(),
        m(&[&[0, -1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, -1], &[0, 0, -1, 2]]),
        m(&[&[0, -1, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 1], &[0, 0, 1, 1]]),
    ));
    for (label, a, want) in &cases {
        let got = group_inverse(a).unwrap().inverse;
        check(&mut bad, label, got.as_ref(), Some(want));
        if !group_equations_hold(a, want) || !penrose_equations_hold(a, &moore_penrose(a)) {
            bad.push(format!("{label}: defining equations fail"));
        }
    }
    Outcome::new(bad, format!("{} group inverses exact", cases.len()))
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    let cases = [
        ("M3", entry("Remark_pnotphash_M3"), true),
        ("M1", entry("Remark_pnotphash_M1"), false),
        ("M3^T", entry("Remark_pnotphash_C"), false),
        ("[[2,1],[-2,-1]]", m(&[&[2, 1], &[-2, -1]]), true),
        ("phashex1", entry("Example_phashex1"), true),
        ("algo2 B", entry("Prop_algo2_example"), true),
        ("algo2rem B alpha=7", entry("Remark_algo2rem_nonsymmetric"), true),
        ("(1/3)-Laplacian", entry("Remark_singirrphash"), true),
        ("[[0,-1],[0,0]]", m(&[&[0, -1], &[0, 0]]), false),
    ];
    for (label, a, want) in &cases {
        check(&mut bad, label, is_p_hash(a, CAP).unwrap(), *want);
    }
    Outcome::new(bad, format!("{} verdicts", cases.len()))
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let zandrangemon_sharp = group_inverse(&m(&[&[1, -1, 0], &[0, 1, -1], &[0, 0, 0]])).unwrap().inverse.unwrap();
    let rangemoneg = m(&[&[1, -1, 0], &[-1, 1, 0], &[0, 0, 3]]);
    let tridiag = m(&[&[0, -1, 0], &[-1, 0, -1], &[0, -1, 0]]);
    let cases: Vec<(&str, Matrix, &[&[i64]], Status)> = vec![
        ("positive 2x2", m(&[&[1, 2], &[1, 1]]), &[], Status::Yes),
        ("its inverse", m(&[&[-1, 2], &[1, -1]]), &[], Status::No),
        ("Qnotkar", entry("Example_Qnotkar"), &[], Status::No),
        ("stcopex", entry("Example_stcopex"), &[], Status::Yes),
        ("beta=1 tridiagonal", tridiag.clone(), &[&[3, 1, -1]], Status::Yes),
        ("rangemoneg A", rangemoneg.clone(), &[], Status::Yes),
        ("rangemoneg A#", group_inverse(&rangemoneg).unwrap().inverse.unwrap(), &[], Status::Yes),
        ("zandrangemon A#", zandrangemon_sharp, &[], Status::Yes),
        ("4x4 zero diagonal", entry("Example_nonneg_zero_diagonal"), &[&[1, 4, 3, 1]], Status::Yes),
        ("singular irreducible M", m(&[&[1, -1], &[-1, 1]]), &[], Status::No),
        ("E-block n=1", entry("Example_E_block_1"), &[], Status::No),
        ("E-block n=2", entry("Example_E_block_2"), &[], Status::No),
        ("E-block n=3", entry("Example_E_block_3"), &[], Status::No),
        ("quadruple A", m(&[&[0, -1], &[0, 1]]), &[], Status::No),
        ("quadruple B", m(&[&[0, 1], &[0, 1]]), &[], Status::Yes),
        ("quadruple C", m(&[&[0, 1], &[1, 0]]), &[], Status::No),
        ("quadruple D", m(&[&[0, 1], &[-1, 1]]), &[], Status::Yes),
        ("karconstruct B", m(&[&[0, 1, 1], &[-1, 1, 2], &[1, 2, 1]]), &[], Status::Yes),
    ];
    for (label, a, hints, want) in &cases {
        let got = karamardian(a, hints);
        if got != *want {
            bad.push(format!("{label}: got {got}, want {want}"));
        }
    }
    // Independent evidence against the tridiagonal claim.
    let d = vector(&[3, 1, -1]);
    let interior = int_dual_membership(&tridiag, &d).unwrap().is_some();
    let witness = cone_lcp_nonzero(&tridiag, &d, CAP).unwrap();
    let detail = match witness {
        Some(x) if interior => format!(
            "{} matrices; d = (3,1,-1) is interior to K* yet x = {} is a nonzero solution",
            cases.len(),
            format_vector(&x)
        ),
        _ => format!("{} matrices", cases.len()),
    };
    Outcome::new(bad, detail)
}

/// Decides the two-negative-column family independently: a candidate `d`
/// proves Yes, and an unsolvable `q` proves No (an invertible Karamardian
/// matrix is a Q-matrix). Lopsided hints `(t, 1)` and `(1, t)` cover the
/// thin cones of good `d` that default candidates miss.
fn oracle_2x2(a: &Matrix) -> Status {
    let hints = [1, 2, 3, 5, 8, 13, 21, 50, 100]
        .into_iter()
        .flat_map(|t| [vector(&[t, 1]), vector(&[1, t])])
        .collect();
    let config = KaramardianConfig::candidate_only(0).with_hints(hints);
    let v = is_karamardian(a, &config).unwrap().status;
    if v.is_decisive() {
        return v;
    }
    if inverse(a).unwrap().is_some() {
        for q in [[-1, 0], [0, -1], [-1, -1], [-1, 1], [1, -1]] {
            if lcp_unsolvable(a, &vector(&q), CAP).unwrap() {
                return Status::No;
            }
        }
    }
    Status::Unknown
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let (mut decisive, mut agree) = (0, 0);
    for i in 0..10_000u64 {
        let a = rng_matrix(&mut rng, 2, 6, 3);
        let closed = classify_2x2(&a).unwrap().status;
        if !closed.is_decisive() {
            bad.push(format!("closed form undecided on {}", a.to_json()));
            continue;
        }
        let cascade = is_karamardian(&a, &KaramardianConfig::candidate_only(i)).unwrap().status;
        if cascade.is_decisive() {
            decisive += 1;
            if cascade == closed {
                agree += 1;
            } else if bad.len() < 10 {
                bad.push(format!("{}: closed form {closed}, cascade {cascade}", a.to_json()));
            }
        }
    }
    // det > 0 is the correct side of the two-negative-entries-in-a-column case.
    let (mut grid, mut resolved) = (0, 0);
    for alpha in 1..=10 {
        for beta in 1..=10 {
            for gamma in 1..=10 {
                for delta in 1..=10 {
                    let a = m(&[&[-alpha, beta], &[-gamma, delta]]);
                    grid += 1;
                    let det = determinant(&a).unwrap();
                    let closed = classify_2x2(&a).unwrap().status;
                    let oracle = oracle_2x2(&a);
                    if oracle.is_decisive() {
                        resolved += 1;
                        if oracle != closed {
                            bad.push(format!("grid {}: closed {closed}, oracle {oracle}", a.to_json()));
                        }
                    } else if !det.is_zero() {
                        bad.push(format!("grid {}: oracle undecided with det {det}", a.to_json()));
                    }
                    if !det.is_zero() && closed != Status::from_bool(det.is_positive()) {
                        bad.push(format!("grid {}: closed form is not sign(det)", a.to_json()));
                    }
                }
            }
        }
    }
    Outcome::new(
        bad,
        format!("random: {agree}/{decisive} decisive agree; grid: {resolved}/{grid} resolved by oracle"),
    )
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let config = KaramardianConfig {
        closed_forms: false,
        ..KaramardianConfig::default()
    };
    let (mut decisive, mut done) = (0, 0);
    while done < 1000 {
        let n = rng.gen_range(1..=6);
        let u: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(-3..=3))).collect();
        let v: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(-3..=3))).collect();
        if is_zero_vector(&u) || is_zero_vector(&v) {
            continue;
        }
        done += 1;
        let a = Matrix::outer(&u, &v);
        let closed = rank_one_classification(&u, &v).unwrap();
        if closed.p_hash != dot(&u, &v).is_positive() || is_p_hash(&a, CAP).unwrap() != closed.p_hash {
            bad.push(format!("P# mismatch on u={}, v={}", format_vector(&u), format_vector(&v)));
        }
        let cascade = is_karamardian(&a, &config).unwrap().status;
        if cascade.is_decisive() {
            decisive += 1;
            if cascade != Status::from_bool(closed.karamardian) {
                bad.push(format!("Karamardian mismatch on u={}, v={}", format_vector(&u), format_vector(&v)));
            }
        }
    }
    Outcome::new(bad, format!("1000 pairs, cascade decisive on {decisive}"))
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let a = entry("Example_Qnotkar");
    check(&mut bad, "q = e", lcp_solutions(&a, &vector(&[1, 1, 1]), CAP).unwrap().count(), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..20 {
        let q: Vec<Rational> = (0..3).map(|_| frac(rng.gen_range(1..=9), rng.gen_range(1..=3))).collect();
        check(&mut bad, &format!("q = {}", format_vector(&q)), lcp_solutions(&a, &q, CAP).unwrap().count(), 3);
    }
    let mut done = 0;
    while done < 20 {
        let q: Vec<Rational> = (0..3).map(|_| frac(rng.gen_range(-9..=9), rng.gen_range(1..=3))).collect();
        if q.iter().all(|x| !x.is_negative()) {
            continue;
        }
        done += 1;
        check(&mut bad, &format!("q = {}", format_vector(&q)), lcp_solutions(&a, &q, CAP).unwrap().count(), 1);
    }
    Outcome::new(bad, "41 right-hand sides")
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut counts = [0usize; 5];
    for i in 0..2000 {
        let n = rng.gen_range(1..=4);
        let a = match i % 4 {
            0 => rng_singular_m(&mut rng, n, 3, false),
            1 => {
                // Symmetric Z.
                let z = rng_z_matrix(&mut rng, n, 3);
                Matrix::from_fn(n, n, |i, j| if i <= j { z.row(i)[j].clone() } else { z.row(j)[i].clone() })
            }
            _ => rng_z_matrix(&mut rng, n, 3),
        };
        let s = [
            is_p_hash(&a, CAP).unwrap(),
            has_property_c(&a, CAP).unwrap(),
            is_range_monotone(&a).unwrap(),
            group_inverse_nonneg_on_k(&a, CAP).unwrap(),
            k_has_no_nonpositive_image(&a).unwrap(),
        ];
        for (c, &b) in counts.iter_mut().zip(&s) {
            *c += usize::from(b);
        }
        let ok = (!s[0] || s[1]) && s[1] == s[2] && s[2] == s[3] && (!s[3] || s[4]);
        let symmetric_ok = !a.is_symmetric()
            || (s[0] == s[1] && s[1] == is_strictly_range_semimonotone(&a, CAP).unwrap());
        if !(ok && symmetric_ok) && bad.len() < 10 {
            bad.push(format!("{}: (a..e) = {s:?}", a.to_json()));
        }
    }
    Outcome::new(bad, format!("2000 Z-matrices; true counts (a..e) = {counts:?}"))
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut decisive = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=4);
        let a = rng_matrix(&mut rng, n, 3, 2);
        let p = rng_permutation(&mut rng, n);
        let x = karamardian(&a, &[]);
        let y = karamardian(&a.permute_similar(&p), &[]);
        if x.is_decisive() && y.is_decisive() {
            decisive += 1;
            if x != y {
                bad.push(format!("{} under {p:?}: {x} vs {y}", a.to_json()));
            }
        }
    }
    Outcome::new(bad, format!("500 pairs, {decisive} decisive on both sides"))
}

fn symmetric_irreducible_m(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let off = Matrix::from_fn(n, n, |_, _| int(rng.gen_range(1..=3)));
    let extra = int(rng.gen_range(1..=3));
    Matrix::from_fn(n, n, |i, j| {
        let (x, y) = (i.min(j), i.max(j));
        if i == j {
            (0..n).filter(|&k| k != i).map(|k| off.row(i.min(k))[i.max(k)].clone()).sum::<Rational>() + &extra
        } else {
            -off.row(x)[y].clone()
        }
    })
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..200 {
        let n = rng.gen_range(2..=3);
        let a = symmetric_irreducible_m(&mut rng, n);
        let mut u: Vec<Rational> = (0..n).map(|_| int(-rng.gen_range(0..=3))).collect();
        if is_zero_vector(&u) {
            u[0] = int(-1);
        }
        let b = border_m_matrix(&a, &u, CAP).unwrap();
        if !b.p_hash || !is_p_hash(&b.matrix, CAP).unwrap() {
            bad.push(format!("bordered M-matrix {} is not P#", b.matrix.to_json()));
        }
    }
    let bases = [
        m(&[&[0, 1], &[-1, 1]]),
        m(&[&[1, 2], &[1, 1]]),
        m(&[&[2, -1], &[-1, 2]]),
        m(&[&[1, 0], &[0, 1]]),
        m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
    ];
    let config = KaramardianConfig::default();
    let mut built = 0;
    while built < 200 {
        let a = &bases[rng.gen_range(0..bases.len())];
        let n = a.rows();
        let u: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(0..=3))).collect();
        let alpha = frac(rng.gen_range(1..=12), rng.gen_range(1..=2));
        let inv = inverse(a).unwrap().unwrap();
        if alpha == dot(&u, &inv.mul_vec(&u)) {
            continue;
        }
        built += 1;
        let b = border_karamardian(a, &u, &alpha, &config).unwrap();
        let v = is_karamardian(&b, &config).unwrap().status;
        if v != Status::Yes {
            bad.push(format!("bordered Karamardian {} gave {v}", b.to_json()));
        }
    }
    let m3 = entry("Remark_pnotphash_M3");
    let c = cayley_g_epsilon(&m3, &frac(1, 8)).unwrap();
    let corner = c.i_plus_g.row(0)[0].clone();
    if !corner.is_negative() {
        bad.push(format!("(I + G)_11 = {corner}, expected negative"));
    }
    if minor_class(&c.i_plus_g, CAP).unwrap().is_p {
        bad.push("I + G is P".into());
    }
    Outcome::new(bad, format!("200 + 200 bordered matrices; (I + G)_11 = {corner}"))
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    let config = SearchConfig::new(Target::PropCNotPHash, 3, 100_000, 0);
    let outcome = run_search(&config).unwrap();
    if !outcome.hits.is_empty() {
        bad.push(format!("{} hits at n = 3", outcome.hits.len()));
    }
    let config4 = SearchConfig::new(Target::PropCNotPHash, 4, 5_000, 0);
    let outcome4 = run_search(&config4).unwrap();
    for hit in &outcome4.hits {
        if !reverify(hit, &config4).unwrap() {
            bad.push(format!("n = 4 hit at trial {} fails re-verification", hit.trial));
        }
    }
    Outcome::new(
        bad,
        format!(
            "n=3: {} screened, {} hits; n=4: {} screened, {} hits",
            outcome.screened,
            outcome.hits.len(),
            outcome4.screened,
            outcome4.hits.len()
        ),
    )
}

/// `(id, name, budget in seconds, check)`.
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "generalized-inverse exactness", 1, criterion_1),
        (2, "P# corpus", 1, criterion_2),
        (3, "Karamardian corpus", 10, criterion_3),
        (4, "2x2 oracle equivalence", 300, criterion_4),
        (5, "rank-one closed forms", 60, criterion_5),
        (6, "LCP solution counts", 5, criterion_6),
        (7, "Z-matrix implication chain", 300, criterion_7),
        (8, "permutation invariance", 120, criterion_8),
        (9, "construction guarantees", 180, criterion_9),
        (10, "conjecture search soundness", 600, criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let pass = outcome.mismatches.is_empty() && in_time;
        println!(
            "criterion {id:>2} {} {name} ({:.2}s, budget {budget}s): {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            outcome.detail
        );
        for m in &outcome.mismatches {
            println!("    mismatch: {m}");
        }
        if !in_time {
            println!("    over time budget");
        }
        let known: Vec<&str> = KNOWN_FAILURES.iter().find(|(k, _)| *k == id).map_or(vec![], |(_, l)| l.to_vec());
        let labels: Vec<&str> = outcome.mismatches.iter().map(|m| m.split(':').next().unwrap_or("")).collect();
        if labels != known || !in_time {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: results match the documented expectations");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
