//! Exact rational decision procedures for the matrix classes of linear
//! complementarity theory.

pub mod conelcp;
pub mod corpus;
pub mod construct;
pub mod error;
pub mod geninv;
pub mod lcp;
pub mod lcp_classes;
pub mod linalg;
pub mod lp;
pub mod matrix;
pub mod minors;
pub mod monotone;
pub mod predicates;
pub mod report;
pub mod search;
pub mod rational;
pub mod verdict;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use rational::{Rational, Vector};
pub use verdict::{Rule, Status, Verdict};
