//! Embedded catalogue of worked examples with their expected verdicts.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::construct::{border_m_matrix, cayley_g_epsilon, direct_sum, householder_like, stochastic_shift};
use crate::error::{Error, Result};
use crate::geninv::group_inverse;
use crate::matrix::{vector_from_json, vector_to_json, Matrix};
use crate::minors::DEFAULT_CAP;
use crate::predicates::{evaluate, EvalConfig, Predicate};
use crate::rational::{frac, int, vector_from_ints, Vector};
use crate::verdict::{Rule, Status, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub matrix: Matrix,
    pub expected: BTreeMap<Predicate, Status>,
    pub expected_rules: BTreeMap<Predicate, Rule>,
    pub expected_group_inverse: Option<Matrix>,
    pub hint_d: Vec<Vector>,
    pub tags: Vec<String>,
    pub note: String,
}

impl CorpusEntry {
    fn new(id: &str, matrix: Matrix, tags: &[&str]) -> Self {
        Self {
            id: id.to_string(),
            matrix,
            expected: BTreeMap::new(),
            expected_rules: BTreeMap::new(),
            expected_group_inverse: None,
            hint_d: Vec::new(),
            tags: tags.iter().map(|t| t.to_string()).collect(),
            note: String::new(),
        }
    }

    fn expect(mut self, p: Predicate, s: Status) -> Self {
        self.expected.insert(p, s);
        self
    }

    fn yes(self, ps: &[Predicate]) -> Self {
        ps.iter().fold(self, |e, &p| e.expect(p, Status::Yes))
    }

    fn no(self, ps: &[Predicate]) -> Self {
        ps.iter().fold(self, |e, &p| e.expect(p, Status::No))
    }

    fn rule(mut self, p: Predicate, r: Rule) -> Self {
        self.expected_rules.insert(p, r);
        self
    }

    fn hint(mut self, d: &[i64]) -> Self {
        self.hint_d.push(vector_from_ints(d));
        self
    }

    fn group_inverse(mut self, g: Matrix) -> Self {
        self.expected_group_inverse = Some(g);
        self
    }

    fn note(mut self, text: &str) -> Self {
        self.note = text.to_string();
        self
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    pub fn to_json(&self) -> Value {
        let expected: serde_json::Map<String, Value> =
            self.expected.iter().map(|(p, s)| (p.name().to_string(), json!(s.as_str()))).collect();
        let rules: serde_json::Map<String, Value> =
            self.expected_rules.iter().map(|(p, r)| (p.name().to_string(), json!(r.id()))).collect();
        json!({
            "id": self.id,
            "matrix": self.matrix.to_json(),
            "expected": expected,
            "expected_rules": rules,
            "expected_group_inverse": self.expected_group_inverse.as_ref().map(Matrix::to_json),
            "hint_d": self.hint_d.iter().map(|d| vector_to_json(d)).collect::<Vec<_>>(),
            "tags": self.tags,
            "note": self.note,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |name: &str| value.get(name).ok_or_else(|| Error::Parse(format!("missing field `{name}`")));
        let id = field("id")?.as_str().ok_or_else(|| Error::Parse("`id` must be a string".into()))?;
        let matrix = Matrix::from_json_value(field("matrix")?)?;
        let mut entry = CorpusEntry::new(id, matrix, &[]);
        let object = |name: &str| -> Result<serde_json::Map<String, Value>> {
            match value.get(name) {
                None | Some(Value::Null) => Ok(Default::default()),
                Some(Value::Object(m)) => Ok(m.clone()),
                Some(_) => Err(Error::Parse(format!("`{name}` must be an object"))),
            }
        };
        for (k, v) in object("expected")? {
            let p = Predicate::parse(&k).ok_or_else(|| Error::Parse(format!("expected: unknown predicate `{k}`")))?;
            let s = v
                .as_str()
                .and_then(Status::parse)
                .ok_or_else(|| Error::Parse(format!("expected.{k}: bad status")))?;
            entry.expected.insert(p, s);
        }
        for (k, v) in object("expected_rules")? {
            let p = Predicate::parse(&k).ok_or_else(|| Error::Parse(format!("expected_rules: unknown predicate `{k}`")))?;
            let r = v
                .as_str()
                .and_then(Rule::parse)
                .ok_or_else(|| Error::Parse(format!("expected_rules.{k}: unknown rule")))?;
            entry.expected_rules.insert(p, r);
        }
        match value.get("expected_group_inverse") {
            None | Some(Value::Null) => {}
            Some(g) => entry.expected_group_inverse = Some(Matrix::from_json_value(g)?),
        }
        if let Some(Value::Array(ds)) = value.get("hint_d") {
            entry.hint_d = ds.iter().map(|d| vector_from_json(d, "hint_d")).collect::<Result<_>>()?;
        }
        if let Some(Value::Array(tags)) = value.get("tags") {
            entry.tags = tags.iter().filter_map(|t| t.as_str().map(String::from)).collect();
        }
        if let Some(note) = value.get("note").and_then(Value::as_str) {
            entry.note = note.to_string();
        }
        Ok(entry)
    }
}

fn m<const N: usize>(rows: &[[i64; N]]) -> Matrix {
    Matrix::from_ints(rows)
}

fn all_ones(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| int(1))
}

fn e_block(n: usize) -> Matrix {
    Matrix::from_fn(2 * n, 2 * n, |i, j| int(i64::from(i < n || j < n)))
}

fn m3() -> Matrix {
    m(&[[0, -1, -2], [0, 1, 2], [1, 1, 1]])
}

/// Every worked example, in the order it appears in the source text.
pub fn corpus_entries() -> Vec<CorpusEntry> {
    use Predicate::*;
    let mut out = Vec::new();

    out.push(
        CorpusEntry::new("Intro_group_inverse_nilpotent", m(&[[0, 1], [0, 0]]), &["ginv"])
            .no(&[GroupInverseExists, PHash]),
    );
    out.push(
        CorpusEntry::new("Intro_not_property_c", m(&[[0, -1], [0, 0]]), &["phash", "minor"])
            .yes(&[MMatrix])
            .no(&[PropertyC, GroupInverseExists, PHash]),
    );
    for n in 2..=6 {
        let a = all_ones(n);
        let g = a.scale(&frac(1, (n * n) as i64));
        out.push(
            CorpusEntry::new(&format!("Example_allones_{n}"), a, &["phash", "ginv", "q"])
                .yes(&[PHash, QMatrix])
                .no(&[P])
                .group_inverse(g),
        );
    }
    out.push(
        CorpusEntry::new(
            "Remark_genidem_householder",
            householder_like(&vector_from_ints(&[1, 1]), &vector_from_ints(&[1, 0])).expect("vᵀu = 1"),
            &["phash", "construct"],
        )
        .yes(&[PHash]),
    );
    out.push(CorpusEntry::new("Remark_pnotphash_M3", m3(), &["phash"]).yes(&[PHash]).no(&[P0]));
    out.push(
        CorpusEntry::new("Remark_pnotphash_M1", m(&[[1, 1, 0], [1, 1, 0], [0, 1, 0]]), &["phash"])
            .yes(&[P0])
            .no(&[PHash, GroupInverseExists]),
    );
    out.push(CorpusEntry::new("Remark_pnotphash_C", m3().transpose(), &["phash"]).no(&[PHash]));
    let cayley = cayley_g_epsilon(&m3(), &frac(1, 8)).expect("εI + M3 is invertible");
    out.push(
        CorpusEntry::new("Remark_aplusep_I_plus_G", cayley.i_plus_g, &["phash", "construct"]).no(&[P, PHash]),
    );
    out.push(
        CorpusEntry::new("Example_diag", m(&[[2, 1], [-2, -1]]), &["phash", "karamardian"])
            .yes(&[PHash])
            .no(&[P0, Adequate, Karamardian]),
    );
    out.push(
        CorpusEntry::new(
            "Example_diag_shift",
            &m(&[[2, 1], [-2, -1]]) + &Matrix::identity(2).scale(&frac(1, 2)),
            &["phash"],
        )
        .no(&[P, PHash]),
    );
    let laplacian = stochastic_shift(&Matrix::from_fn(3, 3, |_, _| frac(1, 3))).expect("stochastic");
    out.push(
        CorpusEntry::new("Remark_singirrphash", laplacian, &["phash", "karamardian", "minor"])
            .yes(&[PHash, PropertyC, MMatrix, Irreducible])
            .no(&[Karamardian])
            .rule(Karamardian, Rule::KTrivial),
    );
    let u = vector_from_ints(&[-1, -1]);
    let algo2 = border_m_matrix(&m(&[[1, -1], [-1, 2]]), &u, DEFAULT_CAP).expect("M-matrix bordering");
    out.push(
        CorpusEntry::new("Prop_algo2_example", algo2.matrix, &["phash", "construct"]).yes(&[PHash, ZMatrix]),
    );
    out.push(
        CorpusEntry::new("Remark_algo2rem_nonsymmetric", m(&[[1, -1, -1], [-2, 3, -1], [-1, -1, 7]]), &["phash", "construct"])
            .yes(&[PHash]),
    );
    out.push(
        CorpusEntry::new("Remark_algo2rem_reducible", m(&[[1, -1, -1], [0, 2, -1], [-1, -1, 2]]), &["phash", "construct"])
            .yes(&[PHash]),
    );
    out.push(
        CorpusEntry::new("Example_phashex1", m(&[[1, 1, 1], [0, 1, 1], [0, 0, 0]]), &["phash", "ginv"])
            .yes(&[PHash])
            .group_inverse(m(&[[1, -1, -1], [0, 1, 1], [0, 0, 0]])),
    );
    out.push(
        CorpusEntry::new("Example_phashex1_group_inverse", m(&[[1, -1, -1], [0, 1, 1], [0, 0, 0]]), &["phash"])
            .yes(&[PHash]),
    );
    out.push(
        CorpusEntry::new("Example_Qnotkar", m(&[[-1, -2, 1], [-1, -1, 3], [2, 1, -1]]), &["karamardian", "q"])
            .yes(&[N, NFirstCategory, QMatrix])
            .no(&[Karamardian]),
    );
    out.push(
        CorpusEntry::new("Remark_ZK_upper_triangular", m(&[[1, -1, -1], [0, 0, -1], [0, 0, 0]]), &["karamardian", "monotone"])
            .no(&[Karamardian, RangeMonotone])
            .rule(Karamardian, Rule::HomogeneousNonzero),
    );
    out.push(
        CorpusEntry::new("Remark_nonutZK", m(&[[0, -1, 0], [-1, 0, -1], [0, -1, 0]]), &["karamardian", "monotone", "disputed"])
            .no(&[RangeMonotone])
            .hint(&[3, 1, -1])
            .note(
                "karamardian omitted: for d = (3,1,-1), x = (1/2,1,1/2) lies in K and Ax + d = (2,0,-2) lies in N(Aᵀ), \
                 so LCP(A,K,d) has a nonzero solution; the same construction works for every interior d",
            ),
    );
    let stcopex = m(&[[1, -1, 0], [-1, 1, 0], [0, 0, 1]]);
    out.push(
        CorpusEntry::new("Example_stcopex", stcopex, &["karamardian", "monotone", "q"])
            .yes(&[Karamardian, RangeMonotone, ZMatrix])
            .no(&[QMatrix])
            .rule(Karamardian, Rule::StrictCopositiveOnK),
    );
    out.push(
        CorpusEntry::new("Example_zandrangemon", m(&[[1, -1, 0], [0, 1, -1], [0, 0, 0]]), &["karamardian", "monotone", "q", "ginv"])
            .yes(&[ZMatrix, RangeMonotone, KaramardianGroupInverse])
            .no(&[QMatrix]),
    );
    let b = m(&[[0, -1], [0, 1]]);
    let c = m(&[[1, -1], [-1, 2]]);
    let bc = direct_sum(&b, &c).expect("square blocks");
    let bc_sharp = m(&[[0, -1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]]);
    out.push(
        CorpusEntry::new("Cor_rmonkarcor_example", bc, &["karamardian", "ginv", "construct"])
            .yes(&[ZMatrix, RangeMonotone, KaramardianGroupInverse])
            .group_inverse(bc_sharp.clone()),
    );
    out.push(
        CorpusEntry::new("Cor_rmonkarcor_group_inverse", bc_sharp, &["karamardian", "q"])
            .yes(&[Karamardian])
            .no(&[QMatrix])
            .hint(&[1, 1, 1, 1]),
    );
    out.push(
        CorpusEntry::new("Cor_rmonkarcor_counterexample", direct_sum(&b, &b).expect("square"), &["karamardian", "ginv"])
            .yes(&[PropertyC])
            .no(&[Karamardian, KaramardianGroupInverse])
            .rule(Karamardian, Rule::KTrivial),
    );
    let rangemoneg = m(&[[1, -1, 0], [-1, 1, 0], [0, 0, 3]]);
    let rangemoneg_sharp = Matrix::from_rows(vec![
        vec![frac(1, 4), frac(-1, 4), int(0)],
        vec![frac(-1, 4), frac(1, 4), int(0)],
        vec![int(0), int(0), frac(1, 3)],
    ])
    .expect("rectangular");
    out.push(
        CorpusEntry::new("Example_rangemoneg", rangemoneg, &["karamardian", "monotone", "ginv", "q"])
            .yes(&[Symmetric, ZMatrix, RangeMonotone, Karamardian, KaramardianGroupInverse])
            .no(&[QMatrix])
            .group_inverse(rangemoneg_sharp.clone()),
    );
    out.push(
        CorpusEntry::new("Example_rangemoneg_group_inverse", rangemoneg_sharp, &["karamardian"]).yes(&[Karamardian]),
    );
    out.push(
        CorpusEntry::new("Example_singirrnotkar", m(&[[1, -1], [-1, 1]]), &["karamardian", "minor"])
            .yes(&[MMatrix, PropertyC, Irreducible])
            .no(&[Karamardian])
            .rule(Karamardian, Rule::KTrivial),
    );
    for n in 1..=3 {
        out.push(
            CorpusEntry::new(&format!("Example_E_block_{n}"), e_block(n), &["karamardian"])
                .no(&[Karamardian])
                .rule(Karamardian, Rule::HomogeneousNonzero),
        );
    }
    out.push(
        CorpusEntry::new("Example_nonneg_zero_diagonal", m(&[[0, 0, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 1, 0]]), &["karamardian"])
            .yes(&[Nonnegative, Karamardian])
            .hint(&[1, 4, 3, 1]),
    );
    out.push(
        CorpusEntry::new("Remark_invertibleK_positive", m(&[[1, 2], [1, 1]]), &["karamardian", "2x2"])
            .yes(&[Karamardian]),
    );
    out.push(
        CorpusEntry::new("Remark_invertibleK_inverse", m(&[[-1, 2], [1, -1]]), &["karamardian", "2x2"])
            .yes(&[NFirstCategory])
            .no(&[Karamardian]),
    );
    out.push(
        CorpusEntry::new("Remark_semimonotone_A", m(&[[0, -1], [0, 1]]), &["karamardian", "2x2"])
            .yes(&[Semimonotone, PropertyC])
            .no(&[Karamardian]),
    );
    out.push(
        CorpusEntry::new("Remark_semimonotone_B", m(&[[0, 1], [0, 1]]), &["karamardian", "2x2"])
            .yes(&[Semimonotone, Karamardian]),
    );
    out.push(
        CorpusEntry::new("Remark_semimonotone_C", m(&[[0, 1], [1, 0]]), &["karamardian", "2x2"])
            .yes(&[Semimonotone])
            .no(&[StrictlySemimonotone, Karamardian]),
    );
    out.push(
        CorpusEntry::new("Remark_semimonotone_D", m(&[[0, 1], [-1, 1]]), &["karamardian", "2x2"])
            .yes(&[Semimonotone, Karamardian])
            .no(&[StrictlySemimonotone, P])
            .note("also the converse-of-P example and the base of the bordering example"),
    );
    out.push(
        CorpusEntry::new("Prop_karconstruct_example", m(&[[0, 1, 1], [-1, 1, 2], [1, 2, 1]]), &["karamardian", "construct", "disputed"])
            .yes(&[Karamardian])
            .note("uᵀA⁻¹u = 1 for A = [[0,1],[-1,1]], u = (1,2), so α = 1 is the excluded value and B is singular; B is still Karamardian"),
    );
    // Upper triangular singular Z-matrices with nonnegative diagonal.
    let zk_yes: [(&str, Matrix); 4] = [
        ("Thm_ZKrangemonotone_type1", m(&[[0, 0, -1], [0, 1, -2], [0, 0, 1]])),
        ("Thm_ZKrangemonotone_type2", m(&[[0, -1, 0], [0, 1, 0], [0, 0, 2]])),
        ("Thm_ZKrangemonotone_type3", m(&[[1, -1, -2], [0, 0, -1], [0, 0, 1]])),
        ("Thm_ZKrangemonotone_type4", m(&[[1, -1, -1], [0, 2, -1], [0, 0, 0]])),
    ];
    for (id, a) in zk_yes {
        out.push(CorpusEntry::new(id, a, &["karamardian", "monotone"]).yes(&[ZMatrix, Karamardian, RangeMonotone]));
    }
    let zk_no: [(&str, Matrix); 6] = [
        ("Thm_ZKrangemonotone_zero_diagonal", m(&[[0, -1, -1], [0, 0, -1], [0, 0, 0]])),
        ("Thm_ZKrangemonotone_two_zero_A1", m(&[[1, -1, -1], [0, 0, -1], [0, 0, 0]])),
        ("Thm_ZKrangemonotone_two_zero_A2", m(&[[0, -1, -1], [0, 1, -1], [0, 0, 0]])),
        ("Thm_ZKrangemonotone_two_zero_A3", m(&[[0, -1, -1], [0, 0, -1], [0, 0, 1]])),
        ("Thm_ZKrangemonotone_trivial_K_A1", m(&[[0, -1, -1], [0, 1, -1], [0, 0, 1]])),
        ("Thm_ZKrangemonotone_trivial_K_A2", m(&[[0, -1, -1], [0, 1, -1], [0, 0, 2]])),
    ];
    for (id, a) in zk_no {
        out.push(CorpusEntry::new(id, a, &["karamardian"]).no(&[Karamardian]));
    }
    out.extend(two_by_two_entries());
    out
}

/// One or more instances of every case of the `2 x 2` classification.
fn two_by_two_entries() -> Vec<CorpusEntry> {
    let cases: &[(&str, [[i64; 2]; 2], bool)] = &[
        ("Thm_2x2_singular_zero_row_1_yes", [[0, 0], [1, 2]], true),
        ("Thm_2x2_singular_zero_row_1_no", [[0, 0], [1, -1]], false),
        ("Thm_2x2_singular_zero_row_2_yes", [[2, 3], [0, 0]], true),
        ("Thm_2x2_singular_zero_col_1_yes", [[1, 0], [2, 0]], true),
        ("Thm_2x2_singular_zero_col_1_no", [[1, 0], [-1, 0]], false),
        ("Thm_2x2_singular_zero_col_2_yes", [[0, 1], [0, 2]], true),
        ("Thm_2x2_singular_full_yes", [[1, 2], [2, 4]], true),
        ("Thm_2x2_singular_full_negative_column_yes", [[-1, 2], [-2, 4]], true),
        ("Thm_2x2_singular_full_no", [[1, -2], [-1, 2]], false),
        ("Thm_2x2_diagonal_yes", [[1, 0], [0, 2]], true),
        ("Thm_2x2_diagonal_no", [[1, 0], [0, -2]], false),
        ("Thm_2x2_diagonal_singular_no", [[0, 0], [0, -1]], false),
        ("Thm_2x2_antidiagonal_no", [[0, 1], [2, 0]], false),
        ("Thm_2x2_triangular_yes", [[1, 2], [0, 3]], true),
        ("Thm_2x2_triangular_no", [[1, 2], [0, -3]], false),
        ("Thm_2x2_one_zero_diagonal_no", [[0, 1], [1, 1]], false),
        ("Thm_presummary1_1", [[-1, 2], [3, -4]], false),
        ("Thm_presummary1_2_yes", [[2, -1], [-1, 2]], true),
        ("Thm_presummary1_2_no", [[1, -2], [-3, 1]], false),
        ("Thm_presummary1_3_first_yes", [[-1, 3], [-1, 2]], true),
        ("Thm_presummary1_3_first_no", [[-1, 2], [-1, 3]], false),
        ("Thm_presummary1_3_second_yes", [[2, -1], [3, -1]], true),
        ("Thm_presummary1_3_second_no", [[3, -1], [2, -1]], false),
        ("Thm_presummary2_upper_yes", [[1, -1], [1, 1]], true),
        ("Thm_presummary2_lower_yes", [[1, 1], [-1, 1]], true),
        ("Thm_presummary2_diagonal_no", [[-1, 1], [1, 1]], false),
    ];
    cases
        .iter()
        .map(|(id, rows, yes)| {
            let e = CorpusEntry::new(id, m(rows), &["karamardian", "2x2"]);
            if *yes {
                e.yes(&[Predicate::Karamardian])
            } else {
                e.no(&[Predicate::Karamardian])
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub predicate: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryResult {
    pub id: String,
    pub checks: Vec<Check>,
}

impl EntryResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn evaluate_predicates(entry: &CorpusEntry, config: &EvalConfig) -> Result<BTreeMap<Predicate, Verdict>> {
    let mut preds: Vec<Predicate> = entry.expected.keys().copied().collect();
    preds.extend(entry.expected_rules.keys().copied());
    preds.sort();
    preds.dedup();
    let mut cfg = config.clone();
    cfg.hint_ds = entry.hint_d.clone();
    preds.into_iter().map(|p| Ok((p, evaluate(p, &entry.matrix, &cfg)?))).collect()
}

pub fn evaluate_entry(entry: &CorpusEntry, config: &EvalConfig) -> Result<EntryResult> {
    let verdicts = evaluate_predicates(entry, config)?;
    let mut checks = Vec::new();
    for (p, s) in &entry.expected {
        let actual = verdicts[p].status;
        checks.push(Check {
            predicate: p.name().to_string(),
            expected: s.as_str().to_string(),
            actual: actual.as_str().to_string(),
            pass: actual == *s,
        });
    }
    for (p, r) in &entry.expected_rules {
        let actual = verdicts[p].rule().map_or("none", Rule::id);
        checks.push(Check {
            predicate: format!("{}.rule", p.name()),
            expected: r.id().to_string(),
            actual: actual.to_string(),
            pass: actual == r.id(),
        });
    }
    if let Some(g) = &entry.expected_group_inverse {
        let actual = group_inverse(&entry.matrix)?.inverse;
        checks.push(Check {
            predicate: "group_inverse".into(),
            expected: g.to_json().to_string(),
            actual: actual.as_ref().map_or("none".into(), |x| x.to_json().to_string()),
            pass: actual.as_ref() == Some(g),
        });
    }
    Ok(EntryResult {
        id: entry.id.clone(),
        checks,
    })
}

/// Evaluates entries in parallel; results keep the input order.
pub fn verify_corpus(entries: &[CorpusEntry], config: &EvalConfig) -> Result<Vec<EntryResult>> {
    entries.par_iter().map(|e| evaluate_entry(e, config)).collect()
}

pub fn corpus_to_json(entries: &[CorpusEntry]) -> Value {
    json!({
        "schema_version": "1",
        "entries": entries.iter().map(CorpusEntry::to_json).collect::<Vec<_>>(),
    })
}

pub fn corpus_from_json(text: &str) -> Result<Vec<CorpusEntry>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let entries = value
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing array `entries`".into()))?;
    entries.iter().map(CorpusEntry::from_json).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_expectations_decisive() {
        let entries = corpus_entries();
        let ids: HashSet<_> = entries.iter().map(|e| e.id.clone()).collect();
        assert_eq!(ids.len(), entries.len());
        for e in &entries {
            assert!(e.expected.values().all(|s| s.is_decisive()), "{}", e.id);
        }
    }

    #[test]
    fn hints_are_interior_to_the_dual_cone() {
        for e in corpus_entries() {
            for d in &e.hint_d {
                assert!(crate::conelcp::int_dual_membership(&e.matrix, d).unwrap().is_some(), "{}", e.id);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let entries = corpus_entries();
        let text = corpus_to_json(&entries).to_string();
        assert_eq!(corpus_from_json(&text).unwrap(), entries);
    }
}

#[cfg(test)]
mod engine_check {
    use super::*;

    #[test]
    fn every_entry_matches_the_engine() {
        let results = verify_corpus(&corpus_entries(), &EvalConfig::default()).unwrap();
        let failures: Vec<String> = results
            .iter()
            .flat_map(|r| {
                r.checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(move |c| format!("{}: {} expected {} got {}", r.id, c.predicate, c.expected, c.actual))
            })
            .collect();
        assert!(failures.is_empty(), "{}", failures.join("\n"));
    }
}
