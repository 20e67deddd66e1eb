//! Python bindings for the residuum crate.
//!
//! Exposes the analysis entry points as plain functions taking (n, a, r)
//! plus an `Analysis` record class; errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use residuum::cli::analyze_design;
use residuum::{build_design, DesignParams, RenderStyle};

fn to_value_error(err: residuum::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn params(n: u64, a: u64, r: f64) -> PyResult<DesignParams> {
    DesignParams::new(n, a, r).map_err(to_value_error)
}

/// Full numeric report for one design.
#[pyclass(frozen, module = "residuum_py")]
struct Analysis {
    #[pyo3(get)]
    n: u64,
    #[pyo3(get)]
    a: u64,
    #[pyo3(get)]
    r: f64,
    #[pyo3(get)]
    gross: f64,
    #[pyo3(get)]
    net: f64,
    #[pyo3(get)]
    approx: f64,
    #[pyo3(get)]
    m: u64,
    #[pyo3(get)]
    generator: u64,
    #[pyo3(get)]
    g1: u64,
    #[pyo3(get)]
    g2: u64,
    #[pyo3(get)]
    doubled_count: u64,
    #[pyo3(get)]
    degenerate_count: u64,
    #[pyo3(get)]
    string_count: u64,
    #[pyo3(get)]
    is_prime: bool,
    #[pyo3(get)]
    is_primitive_root: Option<bool>,
}

#[pymethods]
impl Analysis {
    fn __repr__(&self) -> String {
        format!(
            "Analysis(n={}, a={}, r={}, gross={}, net={}, approx={}, m={}, generator={}, \
             g1={}, g2={}, doubled_count={}, degenerate_count={}, string_count={}, \
             is_prime={}, is_primitive_root={})",
            self.n,
            self.a,
            self.r,
            self.gross,
            self.net,
            self.approx,
            self.m,
            self.generator,
            self.g1,
            self.g2,
            self.doubled_count,
            self.degenerate_count,
            self.string_count,
            if self.is_prime { "True" } else { "False" },
            match self.is_primitive_root {
                Some(true) => "True",
                Some(false) => "False",
                None => "None",
            },
        )
    }
}

/// Gross, net, and approximate lengths plus subgroup structure and the
/// minimum number of strings for the design (n, a) at radius r.
#[pyfunction]
#[pyo3(signature = (n, a, r = 1.0))]
fn analyze(n: u64, a: u64, r: f64) -> PyResult<Analysis> {
    let record = analyze_design(&params(n, a, r)?);
    Ok(Analysis {
        n: record.n,
        a: record.a,
        r: record.r,
        gross: record.gross,
        net: record.net,
        approx: record.approx,
        m: record.m,
        generator: record.generator,
        g1: record.g1,
        g2: record.g2,
        doubled_count: record.doubled_count,
        degenerate_count: record.degenerate_count,
        string_count: record.string_count,
        is_prime: record.is_prime_n,
        is_primitive_root: record.is_primitive_root_a,
    })
}

/// Sum of all n chord lengths, doubled chords counted twice.
#[pyfunction]
#[pyo3(signature = (n, a, r = 1.0))]
fn gross_length(n: u64, a: u64, r: f64) -> PyResult<f64> {
    Ok(residuum::gross_length(&params(n, a, r)?))
}

/// Physical thread length, doubled chords counted once.
#[pyfunction]
#[pyo3(signature = (n, a, r = 1.0))]
fn net_length(n: u64, a: u64, r: f64) -> PyResult<f64> {
    Ok(residuum::net_length(&params(n, a, r)?).net)
}

/// The estimate (4n - 2m) r / pi.
#[pyfunction]
#[pyo3(signature = (n, a, r = 1.0))]
fn approx_length(n: u64, a: u64, r: f64) -> PyResult<f64> {
    Ok(residuum::approx_length(&params(n, a, r)?))
}

/// Length of the chord spanning j of the n arcs on a circle of radius r.
#[pyfunction]
fn chord_length(r: f64, n: u64, j: u64) -> f64 {
    residuum::chord_length(r, n, j)
}

/// Closed form for sin(theta) + sin(2 theta) + ... + sin(m theta).
/// Raises ValueError when theta is a multiple of 2 pi.
#[pyfunction]
fn lagrange_sum(m: u64, theta: f64) -> PyResult<f64> {
    residuum::lagrange_sum(m, theta).map_err(to_value_error)
}

/// Ascending members of H = {s : a^2 s = s (mod n)}, the sources of doubled
/// or degenerate chords.
#[pyfunction]
fn enumerate_h(n: u64, a: u64) -> PyResult<Vec<u64>> {
    Ok(residuum::enumerate_h(&params(n, a, 1.0)?))
}

/// Structure of H as (m, generator, g1, g2).
#[pyfunction]
fn subgroup(n: u64, a: u64) -> PyResult<(u64, u64, u64, u64)> {
    let info = residuum::doubled_subgroup(&params(n, a, 1.0)?);
    Ok((info.m, info.generator, info.g1, info.g2))
}

/// Deterministic primality test (exact for all 64-bit integers).
#[pyfunction]
fn is_prime(n: u64) -> bool {
    residuum::is_prime(n)
}

/// Least k >= 1 with a^k = 1 (mod n); raises ValueError unless gcd(a, n) = 1
/// and n >= 2.
#[pyfunction]
fn multiplicative_order(a: u64, n: u64) -> PyResult<u64> {
    residuum::multiplicative_order(a, n).map_err(to_value_error)
}

/// Whether a generates the full group of units mod the prime p; raises
/// ValueError when p is not prime or a is not a unit.
#[pyfunction]
fn is_primitive_root(a: u64, p: u64) -> PyResult<bool> {
    residuum::is_primitive_root(a, p).map_err(to_value_error)
}

/// Minimum number of continuous strings needed to sew the design.
#[pyfunction]
fn string_count(n: u64, a: u64) -> PyResult<u64> {
    Ok(residuum::string_count(&build_design(&params(n, a, 1.0)?)))
}

/// One nail sequence per string, covering every chord exactly once.
#[pyfunction]
fn route(n: u64, a: u64) -> PyResult<Vec<Vec<u64>>> {
    Ok(residuum::route(&build_design(&params(n, a, 1.0)?)).strings)
}

/// Standalone SVG document for the design.
#[pyfunction]
#[pyo3(signature = (
    n,
    a,
    canvas_size = 800.0,
    margin = 40.0,
    stroke_width = 1.0,
    highlight_doubled = false,
    show_labels = false,
    label_every = 1,
))]
#[allow(clippy::too_many_arguments)]
fn render_svg(
    n: u64,
    a: u64,
    canvas_size: f64,
    margin: f64,
    stroke_width: f64,
    highlight_doubled: bool,
    show_labels: bool,
    label_every: u64,
) -> PyResult<String> {
    let style = RenderStyle {
        canvas_size,
        margin,
        stroke_width,
        highlight_doubled,
        show_labels,
        label_every,
    };
    residuum::to_svg(&build_design(&params(n, a, 1.0)?), &style).map_err(to_value_error)
}

#[pymodule]
fn residuum_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Analysis>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(gross_length, m)?)?;
    m.add_function(wrap_pyfunction!(net_length, m)?)?;
    m.add_function(wrap_pyfunction!(approx_length, m)?)?;
    m.add_function(wrap_pyfunction!(chord_length, m)?)?;
    m.add_function(wrap_pyfunction!(lagrange_sum, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_h, m)?)?;
    m.add_function(wrap_pyfunction!(subgroup, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicative_order, m)?)?;
    m.add_function(wrap_pyfunction!(is_primitive_root, m)?)?;
    m.add_function(wrap_pyfunction!(string_count, m)?)?;
    m.add_function(wrap_pyfunction!(route, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    Ok(())
}
