//! Python bindings. Rationals cross the boundary as canonical text such as
//! `"7/3"`, which `fractions.Fraction` parses directly.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use wedge_core::construction;
use wedge_core::geometry::{self, IdentityCheck};
use wedge_core::proofs::{self, DEFAULT_BOUND};
use wedge_core::sexagesimal::{self, SexValue};
use wedge_core::svg::{render_svg, SvgOptions};
use wedge_core::{QuadValue, Rational};

/// `(id or command, lhs or expected, rhs or actual, holds)`.
type Row = (String, String, String, bool);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(text: &str) -> PyResult<Rational> {
    text.parse().map_err(value_error)
}

fn sex(text: &str) -> PyResult<SexValue> {
    sexagesimal::parse_sex(text).map_err(value_error)
}

/// An executed construction: named points, segments and triangles.
#[pyclass(name = "Figure", module = "wedge", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFigure(geometry::Figure);

#[pymethods]
impl PyFigure {
    #[getter]
    fn side(&self) -> Option<String> {
        self.0.side().map(|s| s.to_string())
    }

    /// `{name: (x, y)}` with coordinates as rational text.
    fn points(&self) -> Vec<(String, (String, String))> {
        self.0.points().iter().map(|(n, p)| (n.clone(), (p.x.to_string(), p.y.to_string()))).collect()
    }

    fn segments(&self) -> Vec<(String, String)> {
        self.0.segments().to_vec()
    }

    fn triangles(&self) -> Vec<(String, [String; 3])> {
        self.0.triangles().iter().map(|t| (t.name.clone(), t.vertices.clone())).collect()
    }

    fn area(&self, name: &str) -> PyResult<String> {
        let t = self.0.triangle(name).map_err(value_error)?;
        Ok(self.0.area(t).map_err(value_error)?.to_string())
    }

    fn areas(&self) -> Vec<(String, String)> {
        self.0.areas().into_iter().map(|(n, a)| (n.to_string(), a.to_string())).collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[pyo3(signature = (shade = false))]
    fn to_svg(&self, shade: bool) -> String {
        render_svg(&self.0, &SvgOptions { shade })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "Figure(side={}, points={}, triangles={})",
            self.side().unwrap_or_else(|| "None".into()),
            self.0.points().len(),
            self.0.triangles().len()
        )
    }
}

#[pyfunction]
fn bm15285_figure(side: &str) -> PyResult<PyFigure> {
    geometry::build_bm15285_figure(&rational(side)?).map(PyFigure).map_err(value_error)
}

#[pyfunction]
fn ybc7289_figure(side: &str) -> PyResult<PyFigure> {
    geometry::build_ybc7289_figure(&rational(side)?).map(PyFigure).map_err(value_error)
}

fn identity_rows(checks: &[IdentityCheck]) -> Vec<Row> {
    checks.iter().map(|c| (c.id.to_string(), c.lhs.to_string(), c.rhs.to_string(), c.holds)).collect()
}

/// Problem-xii identities for the figure at `side`, as
/// `(t, lm_sq, mn_sq, ln_sq, [(id, lhs, rhs, holds)])`.
#[pyfunction]
fn verify_problem_xii(side: &str) -> PyResult<(String, String, String, String, Vec<Row>)> {
    let fig = geometry::build_bm15285_figure(&rational(side)?).map_err(value_error)?;
    let r = geometry::problem_xii_report(&fig).map_err(value_error)?;
    Ok((
        r.t.to_string(),
        r.lm_sq.to_string(),
        r.mn_sq.to_string(),
        r.ln_sq.to_string(),
        identity_rows(&r.identities),
    ))
}

/// YBC 7289 checks at `side`: `(diag_sq, [(id, lhs, rhs, holds)], all_hold)`.
#[pyfunction]
fn verify_ybc7289(side: &str) -> PyResult<(String, Vec<Row>, bool)> {
    let fig = geometry::build_ybc7289_figure(&rational(side)?).map_err(value_error)?;
    let r = geometry::ybc7289_report(&fig).map_err(value_error)?;
    Ok((r.diag_sq.to_string(), identity_rows(&r.identities), r.all_hold()))
}

/// Runs a construction script. Returns the figure and one
/// `(command, expected, actual, passed)` row per assertion.
#[pyfunction]
fn execute_script(text: &str) -> PyResult<(PyFigure, Vec<Row>)> {
    let exec = construction::execute_text(text).map_err(value_error)?;
    let rows = exec
        .assertions
        .iter()
        .map(|a| (a.command.clone(), a.expected.to_string(), a.actual.to_string(), a.passed()))
        .collect();
    Ok((PyFigure(exec.figure), rows))
}

#[pyfunction]
fn builtin_script(name: &str, side: &str) -> PyResult<String> {
    construction::builtin_script(name, &rational(side)?)
        .ok_or_else(|| PyValueError::new_err(format!("unknown builtin {name:?}")))
}

/// Canonical form and exact value of a base-60 numeral.
#[pyfunction]
fn parse_sex(text: &str) -> PyResult<(String, String)> {
    let v = sex(text)?;
    Ok((v.to_string(), v.to_rational().to_string()))
}

#[pyfunction]
fn rational_to_sex(value: &str, digits: usize) -> PyResult<String> {
    Ok(sexagesimal::rational_to_sex(&rational(value)?, digits).to_string())
}

#[pyfunction]
fn best_sex_approx(n: u64, digits: usize) -> PyResult<String> {
    sexagesimal::best_sex_approx(n, digits).map(|v| v.to_string()).map_err(value_error)
}

#[pyfunction]
fn best_sex_approx_recip(n: u64, digits: usize) -> PyResult<String> {
    sexagesimal::best_sex_approx_recip(n, digits).map(|v| v.to_string()).map_err(value_error)
}

#[pyfunction]
fn sex_scale(text: &str, c: u64, digits: usize) -> PyResult<String> {
    Ok(sexagesimal::sex_scale(&sex(text)?, c, digits).to_string())
}

/// Heron iterates for `√n` from `x0` and whether a fixed point was reached.
#[pyfunction]
#[pyo3(signature = (n, x0, digits, max_iter = 32))]
fn heron_sqrt_sex(n: u64, x0: &str, digits: usize, max_iter: usize) -> PyResult<(Vec<String>, bool)> {
    let run = sexagesimal::heron_sqrt_sex(n, &sex(x0)?, digits, max_iter).map_err(value_error)?;
    Ok((run.iterates.iter().map(SexValue::to_string).collect(), run.converged))
}

/// `√n` rounded half away from zero to `digits` places, exactly.
#[pyfunction]
fn approx_sqrt(n: u64, digits: usize) -> PyResult<String> {
    Ok(QuadValue::sqrt(n).map_err(value_error)?.approx_decimal(digits))
}

#[pyclass(name = "Certificate", module = "wedge", frozen, skip_from_py_object)]
struct PyCertificate(proofs::IrrationalityCertificate);

#[pymethods]
impl PyCertificate {
    #[getter]
    fn n(&self) -> u64 {
        self.0.n
    }

    #[getter]
    fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    fn check(&self) -> bool {
        self.0.check()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __repr__(&self) -> String {
        let verdict = if self.0.is_rational() { "rational" } else { "irrational" };
        format!("Certificate(n={}, {verdict})", self.0.n)
    }
}

#[pyfunction]
#[pyo3(signature = (n, bound = DEFAULT_BOUND))]
fn decide_sqrt_rational(n: u64, bound: u64) -> PyResult<PyCertificate> {
    proofs::decide_sqrt_rational(n, bound).map(PyCertificate).map_err(value_error)
}

/// The exact gap check for `p/q` against `√2`: `(bound, gap_decimal, strict)`.
#[pyfunction]
fn verify_gap(p: u64, q: u64) -> PyResult<(String, String, bool)> {
    let g = proofs::verify_gap(p, q).map_err(value_error)?;
    Ok((g.bound.to_string(), g.gap.approx_decimal(12), g.strict()))
}

#[pymodule]
fn wedge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFigure>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(bm15285_figure, m)?)?;
    m.add_function(wrap_pyfunction!(ybc7289_figure, m)?)?;
    m.add_function(wrap_pyfunction!(verify_problem_xii, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ybc7289, m)?)?;
    m.add_function(wrap_pyfunction!(execute_script, m)?)?;
    m.add_function(wrap_pyfunction!(builtin_script, m)?)?;
    m.add_function(wrap_pyfunction!(parse_sex, m)?)?;
    m.add_function(wrap_pyfunction!(rational_to_sex, m)?)?;
    m.add_function(wrap_pyfunction!(best_sex_approx, m)?)?;
    m.add_function(wrap_pyfunction!(best_sex_approx_recip, m)?)?;
    m.add_function(wrap_pyfunction!(sex_scale, m)?)?;
    m.add_function(wrap_pyfunction!(heron_sqrt_sex, m)?)?;
    m.add_function(wrap_pyfunction!(approx_sqrt, m)?)?;
    m.add_function(wrap_pyfunction!(decide_sqrt_rational, m)?)?;
    m.add_function(wrap_pyfunction!(verify_gap, m)?)?;
    Ok(())
}
