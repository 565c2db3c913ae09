//! Python bindings for `sptlab-core`.
//!
//! Rational values cross the boundary as `fractions.Fraction`, series as
//! lists of Python ints indexed by exponent.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sptlab_core::oracle::{self, Oracle, Partition};
use sptlab_core::rational::{self, Rational};
use sptlab_core::spt;
use sptlab_core::verify::{self as checks, ComputeStat, CongruenceStat, Outcome, Precomputed};
use sptlab_core::{qseries, stats, Error, Series, Status, Variant, VerificationReport};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer().clone(), r.denom().clone()))
}

fn ints(s: Series<BigInt>) -> Vec<BigInt> {
    s.into_coeffs()
}

fn parse_variant(v: Option<&str>) -> PyResult<Option<Variant>> {
    v.map(|s| s.parse::<Variant>()).transpose().map_err(py_err)
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(py_err)
}

/// Outcome of one identity or congruence check.
#[pyclass(name = "Report", frozen)]
struct PyReport {
    inner: VerificationReport,
    expected: Option<Status>,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn identity(&self) -> &str {
        &self.inner.identity
    }

    #[getter]
    fn variant(&self) -> &'static str {
        self.inner.variant_name()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order
    }

    #[getter]
    fn status(&self) -> &'static str {
        status_name(self.inner.status)
    }

    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }

    /// Status the registry expects, or None for ad hoc checks.
    #[getter]
    fn expected(&self) -> Option<&'static str> {
        self.expected.map(status_name)
    }

    /// True when the status matches the expected one (or when the check passed,
    /// if nothing was expected).
    #[getter]
    fn met(&self) -> bool {
        match self.expected {
            Some(e) => e == self.inner.status,
            None => self.inner.passed(),
        }
    }

    #[getter]
    fn runtime_ms(&self) -> u64 {
        self.inner.runtime_ms
    }

    #[getter]
    fn detail(&self) -> Option<&str> {
        self.inner.detail.as_deref()
    }

    /// `{"n", "lhs", "rhs", "diff"}` with Fraction values, or None.
    #[getter]
    fn first_failure<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyDict>>> {
        let Some(f) = &self.inner.first_failure else { return Ok(None) };
        let d = PyDict::new(py);
        d.set_item("n", f.n)?;
        d.set_item("lhs", fraction(py, &f.lhs)?)?;
        d.set_item("rhs", fraction(py, &f.rhs)?)?;
        d.set_item("diff", fraction(py, &f.diff)?)?;
        Ok(Some(d))
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        format!("<Report {}>", self.inner.to_string().split_whitespace().collect::<Vec<_>>().join(" "))
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

impl From<Outcome> for PyReport {
    fn from(o: Outcome) -> Self {
        PyReport { inner: o.report, expected: Some(o.expected) }
    }
}

/// Rank or crank counts `N(m, n)` / `M(m, n)` for `n <= upto`.
#[pyclass(name = "StatTable", frozen)]
struct PyStatTable {
    inner: stats::StatTable,
}

#[pymethods]
impl PyStatTable {
    #[getter]
    fn upto(&self) -> usize {
        self.inner.upto()
    }

    fn count(&self, m: i64, n: usize) -> PyResult<BigInt> {
        self.inner.count(m, n).map_err(py_err)
    }

    /// `{m: count}` for the nonzero entries of row `n`.
    fn row<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (m, c) in self.inner.row(n).map_err(py_err)?.terms() {
            d.set_item(m, c.clone())?;
        }
        Ok(d)
    }

    fn moment<'py>(&self, py: Python<'py>, k: u32, n: usize) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.moment(k, n).map_err(py_err)?)
    }

    fn symmetrized_moment<'py>(&self, py: Python<'py>, k: u32, n: usize) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.symmetrized_moment(k, n).map_err(py_err)?)
    }

    fn __repr__(&self) -> String {
        format!("<StatTable upto={}>", self.inner.upto())
    }
}

/// Coefficients of P(q) = 1/(q)_inf, i.e. p(0..=order).
#[pyfunction]
fn euler_p(py: Python<'_>, order: usize) -> Vec<BigInt> {
    py.detach(|| ints(qseries::euler_p(order)))
}

/// Coefficients of sum n^i q^n / (1 - q^n).
#[pyfunction]
fn lambert_phi(py: Python<'_>, i: u32, order: usize) -> Vec<BigInt> {
    py.detach(|| ints(qseries::lambert_phi(i, order)))
}

/// Coefficients of the spt_j, spt_j_star or spt_j_plus generating function.
#[pyfunction]
fn spt_series(py: Python<'_>, kind: &str, j: usize, order: usize) -> PyResult<Vec<BigInt>> {
    if j == 0 {
        return Err(PyValueError::new_err("j must be at least 1"));
    }
    let f = match kind {
        "spt" | "spt_j" => spt::spt_j_series::<BigInt>,
        "spt_star" | "spt_j_star" => spt::spt_j_star_series::<BigInt>,
        "spt_plus" | "spt_j_plus" => spt::spt_j_plus_series::<BigInt>,
        other => return Err(PyValueError::new_err(format!("unknown spt kind `{other}`"))),
    };
    Ok(py.detach(|| ints(f(j, order))))
}

/// Coefficients of SPT+(q), the sum over j of the spt_j_plus series.
#[pyfunction]
fn spt_plus(py: Python<'_>, order: usize) -> Vec<BigInt> {
    py.detach(|| ints(spt::spt_plus_series(order)))
}

#[pyfunction]
fn rank_table(py: Python<'_>, upto: usize) -> PyStatTable {
    PyStatTable { inner: py.detach(|| stats::rank_table(upto)) }
}

#[pyfunction]
fn crank_table(py: Python<'_>, upto: usize) -> PyStatTable {
    PyStatTable { inner: py.detach(|| stats::crank_table(upto)) }
}

/// `[(n, Fraction)]` for n = 0..=upto.
#[pyfunction]
#[pyo3(signature = (stat, upto, j=None, k=None))]
fn compute<'py>(
    py: Python<'py>,
    stat: &str,
    upto: usize,
    j: Option<usize>,
    k: Option<u32>,
) -> PyResult<Vec<(usize, Bound<'py, PyAny>)>> {
    let stat: ComputeStat = stat.parse().map_err(py_err)?;
    let rows = py.detach(|| checks::compute(stat, upto, j, k)).map_err(py_err)?;
    rows.iter().map(|(n, v)| Ok((*n, fraction(py, v)?))).collect()
}

/// Runs one registered identity. `params` takes four strings such as "1/2".
#[pyfunction]
#[pyo3(signature = (identity, order=None, variant=None, params=None))]
fn verify(
    py: Python<'_>,
    identity: &str,
    order: Option<usize>,
    variant: Option<&str>,
    params: Option<[String; 4]>,
) -> PyResult<PyReport> {
    let variant = parse_variant(variant)?;
    let params = params
        .map(|p| -> PyResult<[Rational; 4]> {
            let [a, b, c, d] = p.map(|s| rational::parse(&s));
            Ok([a.map_err(py_err)?, b.map_err(py_err)?, c.map_err(py_err)?, d.map_err(py_err)?])
        })
        .transpose()?;
    let outcome = py.detach(|| checks::run_identity(identity, order, variant, params)).map_err(py_err)?;
    Ok(outcome.into())
}

/// Every registered identity, both variants where they exist.
#[pyfunction]
#[pyo3(signature = (order=None))]
fn verify_all(py: Python<'_>, order: Option<usize>) -> PyResult<Vec<PyReport>> {
    let outcomes = py.detach(|| checks::run_all(order)).map_err(py_err)?;
    Ok(outcomes.into_iter().map(PyReport::from).collect())
}

/// Checks stat(stride * n) = 0 (mod modulus) for stride * n <= upto.
#[pyfunction]
fn congruence(py: Python<'_>, stat: &str, modulus: u64, stride: usize, upto: usize) -> PyResult<PyReport> {
    let stat: CongruenceStat = stat.parse().map_err(py_err)?;
    let report = py
        .detach(|| checks::check_congruence(&Precomputed::new(upto), stat, modulus, stride, upto))
        .map_err(py_err)?;
    Ok(PyReport { inner: report, expected: None })
}

/// All partitions of `n` (n <= 40), largest parts first.
#[pyfunction]
fn partitions(n: usize) -> PyResult<Vec<Vec<usize>>> {
    let iter = Oracle::default().enumerate(n).map_err(py_err)?;
    Ok(iter.map(|p| p.parts().to_vec()).collect())
}

#[pyfunction]
fn rank_of(parts: Vec<usize>) -> PyResult<i64> {
    Ok(oracle::rank_of(&partition(parts)?))
}

#[pyfunction]
fn crank_of(parts: Vec<usize>) -> PyResult<i64> {
    oracle::crank_of(&partition(parts)?).map_err(py_err)
}

/// spt(n) by enumeration (n <= 40).
#[pyfunction]
fn spt_oracle(n: usize) -> PyResult<u64> {
    Oracle::default().spt(n).map_err(py_err)
}

#[pymodule]
pub fn sptlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyReport>()?;
    m.add_class::<PyStatTable>()?;
    m.add_function(wrap_pyfunction!(euler_p, m)?)?;
    m.add_function(wrap_pyfunction!(lambert_phi, m)?)?;
    m.add_function(wrap_pyfunction!(spt_series, m)?)?;
    m.add_function(wrap_pyfunction!(spt_plus, m)?)?;
    m.add_function(wrap_pyfunction!(rank_table, m)?)?;
    m.add_function(wrap_pyfunction!(crank_table, m)?)?;
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(congruence, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(rank_of, m)?)?;
    m.add_function(wrap_pyfunction!(crank_of, m)?)?;
    m.add_function(wrap_pyfunction!(spt_oracle, m)?)?;
    Ok(())
}
