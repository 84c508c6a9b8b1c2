//! Python module `capdisc`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use capdisc::constants;
use capdisc::curves;
use capdisc::discrepancy::{self, DiscrepancyReport, Method};
use capdisc::lattice::{self, LatticeName, LatticeSpec};
use capdisc::pointgen::{self, CurveKind, CurveSpec};
use capdisc::{Error, SeedSpec};
use pyo3::exceptions::{PyArithmeticError, PyOSError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(_) => PyOSError::new_err(e.to_string()),
        Error::Pole { .. } | Error::Corruption(_) | Error::Truncation { .. } => {
            PyArithmeticError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Serializes through JSON into plain Python dicts and lists.
fn to_object<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn parse_lattice(name: &str) -> PyResult<LatticeSpec> {
    let name: LatticeName = name.parse().map_err(to_py)?;
    Ok(LatticeSpec::new(name))
}

/// Unit vectors on `S^d` with positive weights summing to one.
#[pyclass(name = "PointConfiguration", module = "capdisc", frozen)]
struct PyConfig {
    inner: pointgen::PointConfiguration,
}

#[pymethods]
impl PyConfig {
    #[new]
    #[pyo3(signature = (d, points, weights=None))]
    fn new(d: usize, points: Vec<Vec<f64>>, weights: Option<Vec<f64>>) -> PyResult<Self> {
        let inner = match weights {
            Some(w) => pointgen::PointConfiguration::with_weights(d, points, w),
            None => pointgen::PointConfiguration::new(d, points),
        }
        .map_err(to_py)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (d, n, seed=0))]
    fn random(d: usize, n: usize, seed: u64) -> PyResult<Self> {
        Ok(Self {
            inner: pointgen::random_uniform(d, n, SeedSpec::new(seed)).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn fibonacci(n: usize) -> PyResult<Self> {
        Ok(Self {
            inner: pointgen::fibonacci_sphere(n).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn cross_polytope(d: usize) -> PyResult<Self> {
        Ok(Self {
            inner: pointgen::cross_polytope(d).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn simplex(d: usize) -> PyResult<Self> {
        Ok(Self {
            inner: pointgen::simplex_vertices(d).map_err(to_py)?,
        })
    }

    /// Discretized great circle (`length=None`) or spiral of the given length.
    #[staticmethod]
    #[pyo3(signature = (length=None, resolution=CurveSpec::DEFAULT_RESOLUTION, d=2))]
    fn curve(length: Option<f64>, resolution: f64, d: usize) -> PyResult<Self> {
        let spec = curve_spec(length, resolution);
        Ok(Self {
            inner: pointgen::curve_points(&spec, d).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn read(path: PathBuf) -> PyResult<Self> {
        Ok(Self {
            inner: pointgen::read_config_file(&path).map_err(to_py)?,
        })
    }

    fn write(&self, path: PathBuf) -> PyResult<()> {
        pointgen::write_config_file(&self.inner, &path).map_err(to_py)
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn points(&self) -> Vec<Vec<f64>> {
        self.inner.points().map(<[f64]>::to_vec).collect()
    }

    #[getter]
    fn weights(&self) -> Vec<f64> {
        self.inner.weights().to_vec()
    }

    #[getter]
    fn is_uniform(&self) -> bool {
        self.inner.is_uniform()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("PointConfiguration(d={}, n={})", self.inner.dim(), self.inner.len())
    }
}

fn curve_spec(length: Option<f64>, resolution: f64) -> CurveSpec {
    match length {
        Some(l) => CurveSpec {
            kind: CurveKind::Spiral,
            target_length: l,
            resolution,
        },
        None => CurveSpec::great_circle(resolution),
    }
}

#[pyclass(name = "DiscrepancyReport", module = "capdisc", frozen, get_all)]
struct PyReport {
    value: f64,
    method: &'static str,
    stderr: f64,
    n: usize,
    d: usize,
    squared: f64,
    squared_stderr: f64,
    bounds: BTreeMap<String, f64>,
    samples: Option<usize>,
    json: String,
}

impl From<DiscrepancyReport> for PyReport {
    fn from(r: DiscrepancyReport) -> Self {
        Self {
            json: r.to_json(),
            value: r.value,
            method: match r.method {
                Method::Stolarsky => "stolarsky",
                Method::MonteCarlo => "monte_carlo",
            },
            stderr: r.stderr,
            n: r.n,
            d: r.d,
            squared: r.squared,
            squared_stderr: r.squared_stderr,
            bounds: r.bounds,
            samples: r.samples,
        }
    }
}

#[pymethods]
impl PyReport {
    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "DiscrepancyReport(value={}, method='{}', n={}, d={})",
            self.value, self.method, self.n, self.d
        )
    }
}

#[pyfunction]
fn cap_discrepancy_stolarsky(config: &PyConfig) -> PyResult<PyReport> {
    Ok(discrepancy::cap_discrepancy_stolarsky(&config.inner)
        .map_err(to_py)?
        .into())
}

#[pyfunction]
#[pyo3(signature = (config, samples=1_000_000, seed=0))]
fn cap_discrepancy_montecarlo(
    py: Python<'_>,
    config: &PyConfig,
    samples: usize,
    seed: u64,
) -> PyResult<PyReport> {
    let inner = &config.inner;
    let r = py
        .detach(|| discrepancy::cap_discrepancy_montecarlo(inner, samples, SeedSpec::new(seed)))
        .map_err(to_py)?;
    Ok(r.into())
}

/// Continuous minus discrete Riesz `alpha`-energy, as a dict.
#[pyfunction]
fn energy_deficit<'py>(py: Python<'py>, config: &PyConfig, alpha: f64) -> PyResult<Bound<'py, PyAny>> {
    let e = discrepancy::energy_deficit(&config.inner, alpha).map_err(to_py)?;
    to_object(py, &e)
}

/// `S(0), ..., S(m_max)`.
#[pyfunction]
fn moment_sums(config: &PyConfig, m_max: usize) -> Vec<f64> {
    discrepancy::moment_sums(&config.inner, m_max)
}

/// Rows `{m, parity, s, scaled, m_over_n}` for `m = 1..=m_max`.
#[pyfunction]
fn moment_table<'py>(py: Python<'py>, config: &PyConfig, m_max: usize) -> PyResult<Bound<'py, PyAny>> {
    to_object(py, &discrepancy::moment_table(&config.inner, m_max))
}

#[pyfunction]
fn beck_bound_ladder<'py>(py: Python<'py>, config: &PyConfig) -> PyResult<Bound<'py, PyAny>> {
    let l = discrepancy::beck_bound_ladder(&config.inner).map_err(to_py)?;
    to_object(py, &l)
}

#[pyfunction]
fn stolarsky_constant(d: usize) -> f64 {
    constants::stolarsky_constant(d)
}

#[pyfunction]
fn c_uniform(d: usize) -> PyResult<f64> {
    constants::c_uniform(d).map_err(to_py)
}

#[pyfunction]
fn c_asymptotic(d: usize) -> PyResult<f64> {
    constants::c_asymptotic(d).map_err(to_py)
}

#[pyfunction]
fn c_conjectured(lattice: &str) -> PyResult<f64> {
    constants::c_conjectured(&parse_lattice(lattice)?).map_err(to_py)
}

#[pyfunction]
fn c_alpha_asymptotic(alpha: f64, d: usize) -> PyResult<f64> {
    constants::c_alpha_asymptotic(alpha, d).map_err(to_py)
}

#[pyfunction]
fn c_alpha_conjectured(alpha: f64, lattice: &str) -> PyResult<f64> {
    constants::c_alpha_conjectured(alpha, &parse_lattice(lattice)?).map_err(to_py)
}

#[pyfunction]
fn table1(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    to_object(py, &constants::table1().map_err(to_py)?)
}

/// Epstein zeta of a named lattice; `method` is `closed`, `direct` or `theta`.
/// The direct sum defaults to a ball of about 10^6 vectors.
#[pyfunction]
#[pyo3(signature = (lattice, s, method="closed", radius=None))]
fn epstein_zeta(lattice: &str, s: f64, method: &str, radius: Option<f64>) -> PyResult<f64> {
    let spec = parse_lattice(lattice)?;
    let radius = radius.unwrap_or_else(|| spec.radius_for_count(1e6));
    let own = match method {
        "closed" => return lattice::epstein_zeta_closed(&spec, s).map_err(to_py),
        "direct" => lattice::epstein_zeta_direct(&spec, s, radius).map(|r| r.value()),
        "theta" => lattice::epstein_zeta_theta(&spec, s),
        _ => return Err(PyValueError::new_err(format!("unknown method '{method}'"))),
    }
    .map_err(to_py)?;
    // report in the closed forms' normalization (D4 at covolume 1)
    Ok(if spec.closed_form_covolume() == spec.covolume {
        own
    } else {
        lattice::rescale_to_unit_covolume(own, s, spec.covolume, spec.dim)
    })
}

#[pyfunction]
#[pyo3(signature = (length=None, resolution=CurveSpec::DEFAULT_RESOLUTION))]
fn curve_discrepancy(length: Option<f64>, resolution: f64) -> PyResult<PyReport> {
    Ok(curves::curve_discrepancy(&curve_spec(length, resolution))
        .map_err(to_py)?
        .into())
}

#[pyfunction]
#[pyo3(signature = (lengths, resolution=CurveSpec::DEFAULT_RESOLUTION))]
fn curve_scaling_study<'py>(
    py: Python<'py>,
    lengths: Vec<f64>,
    resolution: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let study = py
        .detach(|| curves::curve_scaling_study(&lengths, resolution))
        .map_err(to_py)?;
    to_object(py, &study)
}

#[pymodule]
#[pyo3(name = "capdisc")]
fn capdisc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyConfig>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(cap_discrepancy_stolarsky, m)?)?;
    m.add_function(wrap_pyfunction!(cap_discrepancy_montecarlo, m)?)?;
    m.add_function(wrap_pyfunction!(energy_deficit, m)?)?;
    m.add_function(wrap_pyfunction!(moment_sums, m)?)?;
    m.add_function(wrap_pyfunction!(moment_table, m)?)?;
    m.add_function(wrap_pyfunction!(beck_bound_ladder, m)?)?;
    m.add_function(wrap_pyfunction!(stolarsky_constant, m)?)?;
    m.add_function(wrap_pyfunction!(c_uniform, m)?)?;
    m.add_function(wrap_pyfunction!(c_asymptotic, m)?)?;
    m.add_function(wrap_pyfunction!(c_conjectured, m)?)?;
    m.add_function(wrap_pyfunction!(c_alpha_asymptotic, m)?)?;
    m.add_function(wrap_pyfunction!(c_alpha_conjectured, m)?)?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    m.add_function(wrap_pyfunction!(epstein_zeta, m)?)?;
    m.add_function(wrap_pyfunction!(curve_discrepancy, m)?)?;
    m.add_function(wrap_pyfunction!(curve_scaling_study, m)?)?;
    Ok(())
}
