//! Named predicates with a uniform verdict interface, shared by reports and
//! the corpus.

use std::fmt;

use crate::conelcp::{is_karamardian, karamardian_of_group_inverse, KaramardianConfig};
use crate::error::{Error, Result};
use crate::geninv::{group_inverse, is_range_symmetric};
use crate::lcp::{is_q_matrix, QConfig};
use crate::lcp_classes::{
    is_almost_semimonotone, is_semimonotone, is_strictly_semimonotone, p_hash_violation,
    semipositive_witness, strict_range_semimonotone_violation,
};
use crate::matrix::Matrix;
use crate::minors::{has_property_c, is_h_matrix_positive_diag, is_irreducible, is_m_matrix, minor_class, MMatrixKind};
use crate::monotone::{
    is_almost_monotone, is_gi_semimonotone, is_group_monotone, is_monotone, is_row_monotone, range_monotone_violation,
};
use crate::rational::Vector;
use crate::verdict::{Rule, Status, Verdict};

macro_rules! predicates {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Predicate { $($variant),* }

        impl Predicate {
            pub const ALL: &'static [Predicate] = &[$(Predicate::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(Predicate::$variant => $name),* }
            }

            pub fn parse(s: &str) -> Option<Self> {
                match s { $($name => Some(Predicate::$variant),)* _ => None }
            }
        }
    };
}

predicates! {
    Symmetric => "symmetric",
    Nonnegative => "nonnegative",
    ZMatrix => "z_matrix",
    Irreducible => "irreducible",
    P => "p",
    P0 => "p0",
    N => "n",
    NFirstCategory => "n_first_category",
    Adequate => "adequate",
    MMatrix => "m_matrix",
    PropertyC => "property_c",
    HMatrix => "h_matrix_positive_diag",
    Semipositive => "semipositive",
    Semimonotone => "semimonotone",
    StrictlySemimonotone => "strictly_semimonotone",
    AlmostSemimonotone => "almost_semimonotone",
    PHash => "p_hash",
    StrictlyRangeSemimonotone => "strictly_range_semimonotone",
    Monotone => "monotone",
    RangeMonotone => "range_monotone",
    RowMonotone => "row_monotone",
    GroupMonotone => "group_monotone",
    GiSemimonotone => "gi_semimonotone",
    AlmostMonotone => "almost_monotone",
    GroupInverseExists => "group_inverse_exists",
    RangeSymmetric => "range_symmetric",
    QMatrix => "q_matrix",
    Karamardian => "karamardian",
    KaramardianGroupInverse => "karamardian_group_inverse",
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Knobs for the semi-decided predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalConfig {
    pub seed: u64,
    pub max_candidates: usize,
    pub hint_ds: Vec<Vector>,
    pub cap: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_candidates: 16,
            hint_ds: Vec::new(),
            cap: crate::minors::DEFAULT_CAP,
        }
    }
}

impl EvalConfig {
    pub fn karamardian(&self) -> KaramardianConfig {
        KaramardianConfig {
            candidate_ds: self.hint_ds.clone(),
            max_candidates: self.max_candidates,
            seed: self.seed,
            cap: self.cap,
            ..KaramardianConfig::default()
        }
    }

    pub fn q(&self) -> QConfig {
        QConfig {
            seed: self.seed,
            cap: self.cap,
            ..QConfig::default()
        }
    }
}

fn exact(b: bool, note: &str) -> Verdict {
    exact_with(b, note, None)
}

/// Exact decision; a counterexample, when known, rides along on `No`.
fn exact_with(b: bool, note: &str, witness: Option<Vector>) -> Verdict {
    let w = witness.into_iter().collect();
    if b {
        Verdict::yes(Rule::Exact, note, vec![])
    } else {
        Verdict::no(Rule::Exact, note, w)
    }
}

fn not_applicable() -> Verdict {
    Verdict {
        status: Status::NotApplicable,
        certificate: None,
        evidence: None,
    }
}

pub fn evaluate(p: Predicate, a: &Matrix, config: &EvalConfig) -> Result<Verdict> {
    let n = a.order()?;
    let cap = config.cap;
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    use Predicate::*;
    Ok(match p {
        Symmetric => exact(a.is_symmetric(), "entrywise"),
        Nonnegative => exact(a.is_nonnegative(), "entrywise"),
        ZMatrix => exact(a.is_z_matrix(), "entrywise"),
        Irreducible => exact(is_irreducible(a)?, "digraph strong connectivity"),
        P | P0 | N | NFirstCategory | Adequate => {
            let m = minor_class(a, cap)?;
            let b = match p {
                P => m.is_p,
                P0 => m.is_p0,
                N => m.is_n,
                NFirstCategory => m.n_first_category,
                _ => m.is_adequate,
            };
            exact(b, "principal minors")
        }
        MMatrix => match is_m_matrix(a, cap)? {
            MMatrixKind::NotM => exact(false, "Z and P0 test"),
            MMatrixKind::SingularM => exact(true, "singular"),
            MMatrixKind::NonsingularM => exact(true, "nonsingular"),
        },
        PropertyC => exact(has_property_c(a, cap)?, "M-matrix with rank A = rank A^2"),
        HMatrix => exact(is_h_matrix_positive_diag(a)?, "LP"),
        Semipositive => match semipositive_witness(a) {
            Some(x) => Verdict::yes(Rule::Exact, "LP", vec![x]),
            None => exact(false, "LP"),
        },
        Semimonotone => exact(is_semimonotone(a, cap)?, "principal submatrices"),
        StrictlySemimonotone => exact(is_strictly_semimonotone(a, cap)?, "principal submatrices"),
        AlmostSemimonotone => exact(is_almost_semimonotone(a, cap)?, "principal submatrices"),
        PHash => {
            let v = p_hash_violation(a, cap)?;
            exact_with(v.is_none(), "orthant LPs", v)
        }
        StrictlyRangeSemimonotone => {
            let v = strict_range_semimonotone_violation(a, cap)?;
            exact_with(v.is_none(), "orthant LPs", v)
        }
        Monotone => exact(is_monotone(a)?, "inverse sign"),
        RangeMonotone => {
            let v = range_monotone_violation(a)?;
            exact_with(v.is_none(), "LP", v)
        }
        RowMonotone => exact(is_row_monotone(a)?, "LP"),
        GroupMonotone => exact(is_group_monotone(a)?, "group inverse sign"),
        GiSemimonotone => exact(is_gi_semimonotone(a)?, "Moore-Penrose inverse sign"),
        AlmostMonotone => exact(is_almost_monotone(a)?, "LP"),
        GroupInverseExists => exact(group_inverse(a)?.exists(), "rank A = rank A^2"),
        RangeSymmetric => exact(is_range_symmetric(a)?, "R(A) = R(A^T)"),
        QMatrix => is_q_matrix(a, &config.q())?,
        Karamardian => is_karamardian(a, &config.karamardian())?,
        KaramardianGroupInverse => match karamardian_of_group_inverse(a, &config.karamardian()) {
            Err(Error::NoGroupInverse) => not_applicable(),
            other => other?,
        },
    })
}

/// Status only, for callers that do not need certificates.
pub fn status(p: Predicate, a: &Matrix, config: &EvalConfig) -> Result<Status> {
    Ok(evaluate(p, a, config)?.status)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for &p in Predicate::ALL {
            assert_eq!(Predicate::parse(p.name()), Some(p));
        }
        assert_eq!(Predicate::parse("bogus"), None);
    }

    #[test]
    fn m3_report() {
        let m3 = Matrix::from_ints(&[[0, -1, -2], [0, 1, 2], [1, 1, 1]]);
        let c = EvalConfig::default();
        assert_eq!(status(Predicate::PHash, &m3, &c).unwrap(), Status::Yes);
        assert_eq!(status(Predicate::P0, &m3, &c).unwrap(), Status::No);
        let v = evaluate(Predicate::PHash, &m3.transpose(), &c).unwrap();
        assert_eq!(v.status, Status::No);
        assert_eq!(v.certificate.unwrap().witnesses.len(), 1);
    }

    #[test]
    fn group_inverse_predicates_are_not_applicable_without_one() {
        let a = Matrix::from_ints(&[[0, 1], [0, 0]]);
        let c = EvalConfig::default();
        assert_eq!(status(Predicate::KaramardianGroupInverse, &a, &c).unwrap(), Status::NotApplicable);
        assert_eq!(status(Predicate::GroupInverseExists, &a, &c).unwrap(), Status::No);
    }
}
