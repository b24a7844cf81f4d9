//! Python bindings: coefficients, value sets, densities, averages, k_min
//! and the reference tables. Exact rationals are returned as
//! `fractions.Fraction`, large witnesses as Python integers.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cyclo_core::coeff::{self as core_coeff, CoeffQuery, Engine, Sign};
use cyclo_core::stats::{self, DensityTable, Route, ValueSetReport};
use cyclo_core::tables::{self, TableValue};
use cyclo_core::{Error, Rat};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::ZeroArgument
        | Error::InvalidArgument(_)
        | Error::RouteMismatch { .. }
        | Error::ParseRational(_)
        | Error::NotFoundBelowCeiling { .. } => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rat) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn sign(eps: i64) -> PyResult<Sign> {
    Sign::from_i64(eps).map_err(py_err)
}

fn engine(name: &str) -> PyResult<Engine> {
    name.parse().map_err(py_err)
}

/// `a_n^eps(k)`: the coefficient of `x^k` in `prod_{d|n} (1 - x^d)^{eps mu(n/d)}`.
#[pyfunction]
#[pyo3(signature = (n, k, eps = 1, engine = "gt"))]
fn coeff(n: u64, k: u64, eps: i64, engine: &str) -> PyResult<i64> {
    let q = CoeffQuery::new(n, k, sign(eps)?).map_err(py_err)?;
    core_coeff::coeff(q, self::engine(engine)?).map_err(py_err)
}

/// `a_n^eps(0..=order)` through the naive series product.
#[pyfunction]
#[pyo3(signature = (n, order, eps = 1))]
fn coeff_series(n: u64, order: usize, eps: i64) -> PyResult<Vec<i64>> {
    Ok(core_coeff::coeff_naive(n, sign(eps)?, order).map_err(py_err)?.values)
}

/// The coefficient of `x^k` in `Phi_n(x)` (with `Phi_1 = x - 1`).
#[pyfunction]
fn cyclotomic_coeff(n: u64, k: u64) -> PyResult<i64> {
    core_coeff::cyclotomic_coeff(n, k).map_err(py_err)
}

/// The coefficient of `x^k` in the power series of `1 / Phi_n(x)`.
#[pyfunction]
fn inverse_cyclotomic_coeff(n: u64, k: u64) -> PyResult<i64> {
    core_coeff::inverse_cyclotomic_coeff(n, k).map_err(py_err)
}

/// The coefficients of `Phi_n(x)`, constant term first.
#[pyfunction]
fn cyclotomic_poly(n: u64) -> PyResult<Vec<num_bigint::BigInt>> {
    Ok(cyclo_core::numtheory::cyclotomic_poly(n)
        .map_err(py_err)?
        .coeffs()
        .to_vec())
}

/// The set of values of `a_n(k)` over all `n`, with its parity decomposition.
#[pyclass(frozen, get_all, module = "cyclo")]
struct ValueSet {
    k: u64,
    values: Vec<i64>,
    height: u64,
    height_plus: i64,
    height_minus: i64,
    convex: bool,
    symmetric: bool,
    /// Values attained at even `n`.
    parity_even: Vec<i64>,
    /// Values attained at odd `n`.
    parity_odd: Vec<i64>,
    /// Values attained only at odd `n`.
    diff: Vec<i64>,
}

#[pymethods]
impl ValueSet {
    fn __contains__(&self, v: i64) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    fn __len__(&self) -> usize {
        self.values.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "ValueSet(k={}, height={}, values={}..={})",
            self.k,
            self.height,
            self.values.first().copied().unwrap_or(0),
            self.values.last().copied().unwrap_or(0)
        )
    }
}

impl From<ValueSetReport> for ValueSet {
    fn from(r: ValueSetReport) -> Self {
        ValueSet {
            k: r.k,
            values: r.values,
            height: r.a,
            height_plus: r.a_plus,
            height_minus: r.a_minus,
            convex: r.convex,
            symmetric: r.symmetric,
            parity_even: r.parity_even,
            parity_odd: r.parity_odd,
            diff: r.diff,
        }
    }
}

#[pyfunction]
fn value_set(k: u64) -> PyResult<ValueSet> {
    Ok(stats::value_set(k).map_err(py_err)?.into())
}

/// `{v: n}` with `a_n(k) = v`, one witness index per value.
#[pyfunction]
#[pyo3(signature = (k, odd_only = false))]
fn value_set_witnesses(k: u64, odd_only: bool) -> PyResult<BTreeMap<i64, num_bigint::BigUint>> {
    Ok(stats::value_set_with_witnesses(k, odd_only)
        .map_err(py_err)?
        .into_iter()
        .map(|(v, w)| (v, w.0.value().clone()))
        .collect())
}

fn density_dict<'py>(py: Python<'py>, d: &DensityTable) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for (v, x) in &d.scaled {
        out.set_item(v, fraction(py, x)?)?;
    }
    Ok(out)
}

/// `{v: zeta(2) * density of n with a_n(k) = v}` over the nonzero values.
#[pyfunction]
fn density<'py>(py: Python<'py>, k: u64) -> PyResult<Bound<'py, PyDict>> {
    density_dict(py, &stats::density(k).map_err(py_err)?)
}

/// The natural density of `n` with `a_n(k) = 0`, as a float.
#[pyfunction]
fn zero_density(k: u64) -> PyResult<f64> {
    Ok(stats::density(k).map_err(py_err)?.zero_density_f64())
}

/// The zeta(2)-scaled average `e_k`, through the given route.
#[pyfunction]
#[pyo3(signature = (k, route = "divisor"))]
fn average<'py>(py: Python<'py>, k: u64, route: &str) -> PyResult<Bound<'py, PyAny>> {
    let route: Route = route.parse().map_err(py_err)?;
    fraction(py, &stats::average_e(k, route).map_err(py_err)?)
}

/// `{"e": e_k, "f": f_k, "g": g_k}`.
#[pyfunction]
fn averages<'py>(py: Python<'py>, k: u64) -> PyResult<Bound<'py, PyDict>> {
    let r = stats::twisted_averages(k).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("e", fraction(py, &r.e)?)?;
    out.set_item("f", fraction(py, &r.f)?)?;
    out.set_item("g", fraction(py, &r.g)?)?;
    Ok(out)
}

/// `(k_min, n)`: the smallest `k` with `a_n(k) = v` for some `n`, and such an `n`.
#[pyfunction]
#[pyo3(signature = (v, ceiling = stats::DEFAULT_KMIN_CEILING))]
fn kmin(v: i64, ceiling: u64) -> PyResult<(u64, num_bigint::BigUint)> {
    let e = stats::kmin(v, ceiling).map_err(py_err)?;
    Ok((e.k, e.n.0.value().clone()))
}

/// `(average, frequency)` of `a_n(k)` over `1 <= n <= x`; the frequency of
/// `v` is `None` when no value is given.
#[pyfunction]
#[pyo3(signature = (k, x, v = None))]
fn empirical<'py>(
    py: Python<'py>,
    k: u64,
    x: u64,
    v: Option<i64>,
) -> PyResult<(Bound<'py, PyAny>, Option<Bound<'py, PyAny>>)> {
    let s = stats::empirical_stats(k, x, v).map_err(py_err)?;
    let freq = s.freq.as_ref().map(|f| fraction(py, f)).transpose()?;
    Ok((fraction(py, &s.avg)?, freq))
}

/// Rows `(row, column, value)` of a reference table; numbers are fractions,
/// sets are lists.
#[pyfunction]
#[pyo3(signature = (id, kmax = None))]
fn table<'py>(py: Python<'py>, id: u8, kmax: Option<u64>) -> PyResult<Vec<(String, String, Bound<'py, PyAny>)>> {
    tables::compute_table(id, kmax)
        .map_err(py_err)?
        .into_iter()
        .map(|row| {
            let value = match &row.value {
                TableValue::Number(r) => fraction(py, r)?,
                TableValue::Set(vs) => vs.clone().into_pyobject(py)?.into_any(),
            };
            Ok((row.row_key, row.col_key, value))
        })
        .collect()
}

/// Whether every reference table matches its embedded fixture.
#[pyfunction]
fn verify_tables() -> PyResult<bool> {
    for id in tables::TABLE_IDS {
        if !tables::compare_table(id).map_err(py_err)?.passed() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(name, k)` of each failed identity check.
type FailedChecks = Vec<(String, u64)>;

/// Runs the identity checks for `k <= kmax`; returns the failed checks and
/// the see-saw violations.
#[pyfunction]
fn verify_identities(kmax: u64) -> PyResult<(FailedChecks, Vec<u64>)> {
    let r = stats::verify_identities(kmax).map_err(py_err)?;
    let failures = r.failures().iter().map(|c| (c.name.to_string(), c.k)).collect();
    Ok((failures, r.seesaw.violations))
}

/// Number of `(n, k, eps)` where the three coefficient engines disagree.
#[pyfunction]
fn engine_disagreements(n_max: u64, k_max: u64) -> PyResult<usize> {
    Ok(core_coeff::engine_agreement(n_max, k_max).map_err(py_err)?.disagreements.len())
}

#[pymodule]
pub fn cyclo(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<ValueSet>()?;
    m.add_function(wrap_pyfunction!(coeff, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_series, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_cyclotomic_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_poly, m)?)?;
    m.add_function(wrap_pyfunction!(value_set, m)?)?;
    m.add_function(wrap_pyfunction!(value_set_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(density, m)?)?;
    m.add_function(wrap_pyfunction!(zero_density, m)?)?;
    m.add_function(wrap_pyfunction!(average, m)?)?;
    m.add_function(wrap_pyfunction!(averages, m)?)?;
    m.add_function(wrap_pyfunction!(kmin, m)?)?;
    m.add_function(wrap_pyfunction!(empirical, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(verify_tables, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identities, m)?)?;
    m.add_function(wrap_pyfunction!(engine_disagreements, m)?)?;
    Ok(())
}
