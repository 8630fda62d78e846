//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs may also be ints or strings such as `"3/4"` or `"0.25"`.

use kara_core::conelcp::{classify_2x2, cone_lcp_solutions, int_dual_membership};
use kara_core::corpus::{corpus_entries, verify_corpus};
use kara_core::geninv::{group_inverse, moore_penrose};
use kara_core::lcp::{lcp_solutions, LcpSolutionSet};
use kara_core::minors::DEFAULT_CAP;
use kara_core::predicates::{evaluate, EvalConfig, Predicate};
use kara_core::rational::parse_rational;
use kara_core::report::classify as classify_report;
use kara_core::{Error, Rational, Vector};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Parse(_) | Error::NonSquare { .. } | Error::DimensionMismatch { .. } | Error::TooLarge { .. } => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn rational_from_py(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text: String = match obj.extract::<String>() {
        Ok(s) => s,
        Err(_) => obj.str()?.to_string(),
    };
    parse_rational(&text).map_err(to_py_err)
}

fn rational_to_py<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    fraction.call1((r.to_string(),))
}

fn vector_from_py(obj: &Bound<'_, PyAny>) -> PyResult<Vector> {
    obj.try_iter()?.map(|x| rational_from_py(&x?)).collect()
}

fn vector_to_py<'py>(py: Python<'py>, v: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = v.iter().map(|x| rational_to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Square or rectangular matrix of exact rationals.
#[pyclass(name = "Matrix", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMatrix {
    inner: kara_core::Matrix,
}

#[pymethods]
impl PyMatrix {
    #[new]
    fn new(rows: &Bound<'_, PyAny>) -> PyResult<Self> {
        let rows = rows.try_iter()?.map(|r| vector_from_py(&r?)).collect::<PyResult<Vec<_>>>()?;
        let inner = kara_core::Matrix::from_rows(rows).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: kara_core::Matrix::from_json_str(text).map_err(to_py_err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.inner.rows(), self.inner.cols())
    }

    fn tolist<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let rows = self.inner.to_rows().iter().map(|r| vector_to_py(py, r)).collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, rows)
    }

    fn transpose(&self) -> Self {
        Self {
            inner: self.inner.transpose(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Matrix({})", self.to_json())
    }
}

/// Outcome of one predicate, with the rule that decided it.
#[pyclass(name = "Verdict", frozen)]
struct PyVerdict {
    inner: kara_core::Verdict,
}

#[pymethods]
impl PyVerdict {
    #[getter]
    fn status(&self) -> &'static str {
        self.inner.status.as_str()
    }

    #[getter]
    fn rule(&self) -> Option<&'static str> {
        self.inner.rule().map(|r| r.id())
    }

    #[getter]
    fn witnesses<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyList>>> {
        self.inner
            .certificate
            .iter()
            .flat_map(|c| &c.witnesses)
            .map(|w| vector_to_py(py, w))
            .collect()
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __bool__(&self) -> bool {
        self.inner.status == kara_core::Status::Yes
    }

    fn __repr__(&self) -> String {
        format!("Verdict({}, {})", self.status(), self.inner.summary())
    }
}

fn config(seed: u64, max_candidates: usize, hint_d: Option<&Bound<'_, PyAny>>, cap: usize) -> PyResult<EvalConfig> {
    let hint_ds = match hint_d {
        Some(ds) => ds.try_iter()?.map(|d| vector_from_py(&d?)).collect::<PyResult<_>>()?,
        None => Vec::new(),
    };
    Ok(EvalConfig {
        seed,
        max_candidates,
        hint_ds,
        cap,
    })
}

fn predicate(name: &str) -> PyResult<Predicate> {
    Predicate::parse(name).ok_or_else(|| PyValueError::new_err(format!("unknown predicate `{name}`")))
}

/// Names accepted by `evaluate`.
#[pyfunction]
fn predicates() -> Vec<&'static str> {
    Predicate::ALL.iter().map(|p| p.name()).collect()
}

#[pyfunction]
#[pyo3(name = "evaluate", signature = (name, matrix, seed = 0, max_candidates = 16, hint_d = None, cap = DEFAULT_CAP))]
fn evaluate_predicate(
    py: Python<'_>,
    name: &str,
    matrix: &PyMatrix,
    seed: u64,
    max_candidates: usize,
    hint_d: Option<&Bound<'_, PyAny>>,
    cap: usize,
) -> PyResult<PyVerdict> {
    let p = predicate(name)?;
    let c = config(seed, max_candidates, hint_d, cap)?;
    let a = matrix.inner.clone();
    let inner = py.detach(move || evaluate(p, &a, &c)).map_err(to_py_err)?;
    Ok(PyVerdict { inner })
}

/// Full classification report as JSON text (schema version 1).
#[pyfunction]
#[pyo3(signature = (matrix, seed = 0, max_candidates = 16, hint_d = None, cap = DEFAULT_CAP, skip = Vec::new()))]
fn classify(
    py: Python<'_>,
    matrix: &PyMatrix,
    seed: u64,
    max_candidates: usize,
    hint_d: Option<&Bound<'_, PyAny>>,
    cap: usize,
    skip: Vec<String>,
) -> PyResult<String> {
    let c = config(seed, max_candidates, hint_d, cap)?;
    let skip = skip.iter().map(|s| predicate(s)).collect::<PyResult<Vec<_>>>()?;
    let a = matrix.inner.clone();
    let report = py.detach(move || classify_report(&a, &c, &skip, false)).map_err(to_py_err)?;
    Ok(report.to_json_string())
}

#[pyfunction]
fn karamardian_2x2(matrix: &PyMatrix) -> PyResult<PyVerdict> {
    Ok(PyVerdict {
        inner: classify_2x2(&matrix.inner).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn group_inverse_of(matrix: &PyMatrix) -> PyResult<Option<PyMatrix>> {
    let g = group_inverse(&matrix.inner).map_err(to_py_err)?;
    Ok(g.inverse.map(|inner| PyMatrix { inner }))
}

#[pyfunction]
fn pseudoinverse(matrix: &PyMatrix) -> PyMatrix {
    PyMatrix {
        inner: moore_penrose(&matrix.inner),
    }
}

fn solution_list<'py>(py: Python<'py>, set: &LcpSolutionSet) -> PyResult<Vec<Bound<'py, PyList>>> {
    set.solutions.iter().map(|x| vector_to_py(py, x)).collect()
}

/// Every solution of LCP(A, q); one representative per degenerate family.
#[pyfunction]
#[pyo3(signature = (matrix, q, cone = false, cap = DEFAULT_CAP))]
fn lcp<'py>(
    py: Python<'py>,
    matrix: &PyMatrix,
    q: &Bound<'py, PyAny>,
    cone: bool,
    cap: usize,
) -> PyResult<Vec<Bound<'py, PyList>>> {
    let q = vector_from_py(q)?;
    let a = &matrix.inner;
    let set = if cone {
        cone_lcp_solutions(a, &q, cap)
    } else {
        lcp_solutions(a, &q, cap)
    }
    .map_err(to_py_err)?;
    solution_list(py, &set)
}

#[pyfunction]
fn in_dual_interior(matrix: &PyMatrix, d: &Bound<'_, PyAny>) -> PyResult<bool> {
    let d = vector_from_py(d)?;
    Ok(int_dual_membership(&matrix.inner, &d).map_err(to_py_err)?.is_some())
}

/// Ids of corpus entries whose verdicts disagree with the engine.
#[pyfunction]
fn corpus_failures(py: Python<'_>) -> PyResult<Vec<String>> {
    let results = py
        .detach(|| verify_corpus(&corpus_entries(), &EvalConfig::default()))
        .map_err(to_py_err)?;
    Ok(results.into_iter().filter(|r| !r.passed()).map(|r| r.id).collect())
}

#[pyfunction]
fn corpus_ids() -> Vec<String> {
    corpus_entries().into_iter().map(|e| e.id).collect()
}

#[pymodule]
fn kara(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(predicates, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_predicate, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(karamardian_2x2, m)?)?;
    m.add_function(wrap_pyfunction!(group_inverse_of, m)?)?;
    m.add_function(wrap_pyfunction!(pseudoinverse, m)?)?;
    m.add_function(wrap_pyfunction!(lcp, m)?)?;
    m.add_function(wrap_pyfunction!(in_dual_interior, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_failures, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_ids, m)?)?;
    Ok(())
}
