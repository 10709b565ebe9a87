//! Python bindings. The extension module is importable as `quintic_moduli`.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use quintic_moduli::catalog::{self, Filter};
use quintic_moduli::weights::{ideal_degree5, Character, OneParamSubgroup};
use quintic_moduli::{homology, tables, tangent, Error};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn lambda_of(l: Option<(i64, i64, i64)>) -> OneParamSubgroup {
    l.map_or(OneParamSubgroup::DEFAULT, |(a, b, c)| {
        OneParamSubgroup::new(a, b, c)
    })
}

fn all_components() -> PyResult<Vec<catalog::FixedComponent>> {
    catalog::enumerate_all().map_err(py_err)
}

#[pyclass(name = "Component", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyComponent {
    id: String,
    stratum: String,
    family: String,
    kind: String,
    dimension: usize,
    /// Parameter name to monomial, e.g. `{"q1": "X2"}`.
    params: BTreeMap<String, String>,
    eval_vector: (i64, i64, i64),
}

#[pymethods]
impl PyComponent {
    fn __repr__(&self) -> String {
        format!("Component({:?}, kind={:?})", self.id, self.kind)
    }
}

impl From<&catalog::FixedComponent> for PyComponent {
    fn from(c: &catalog::FixedComponent) -> Self {
        let [a, b, e] = c.eval_vector(OneParamSubgroup::DEFAULT).entries();
        PyComponent {
            id: c.id.clone(),
            stratum: c.stratum.to_string(),
            family: c.family.to_string(),
            kind: c.kind.to_string(),
            dimension: c.dimension(),
            params: c
                .params
                .iter()
                .map(|p| (p.name.to_string(), p.value.to_monomial()))
                .collect(),
            eval_vector: (a, b, e),
        }
    }
}

#[pyclass(name = "TangentModel", frozen, get_all)]
struct PyTangent {
    component_id: String,
    /// `((i, j, k), multiplicity)` pairs in canonical order.
    weights: Vec<((i64, i64, i64), usize)>,
    chi0_multiplicity: usize,
    normal_chi0_multiplicity: usize,
    limit: String,
}

#[pyclass(name = "PoincareSummary", frozen, get_all)]
struct PySummary {
    lambda_: (i64, i64, i64),
    betti: Vec<u64>,
    euler: u64,
    hodge_diagonal: Vec<u64>,
    census: (usize, usize, usize),
    polynomial: String,
}

#[pymethods]
impl PySummary {
    fn __repr__(&self) -> String {
        format!(
            "PoincareSummary(euler={}, P(x) = {})",
            self.euler, self.polynomial
        )
    }
}

/// Components of the fixed locus, optionally filtered.
#[pyfunction]
#[pyo3(signature = (stratum=None, family=None, kind=None))]
fn components(
    stratum: Option<&str>,
    family: Option<&str>,
    kind: Option<&str>,
) -> PyResult<Vec<PyComponent>> {
    let filter = Filter {
        stratum: stratum.map(str::parse).transpose().map_err(py_err)?,
        family: family.map(str::parse).transpose().map_err(py_err)?,
        kind: kind.map(str::parse).transpose().map_err(py_err)?,
        param: None,
    };
    let all = all_components()?;
    Ok(catalog::filter(&all, &filter)
        .into_iter()
        .map(PyComponent::from)
        .collect())
}

/// `(points, lines, surfaces)`.
#[pyfunction]
fn census() -> PyResult<(usize, usize, usize)> {
    let c = catalog::census(&all_components()?);
    Ok((c.points, c.lines, c.surfaces))
}

#[pyfunction]
fn tangent_weights(component_id: &str) -> PyResult<PyTangent> {
    let all = all_components()?;
    let c = catalog::find(&all, component_id).map_err(py_err)?;
    let t = tangent::tangent_weights(c).map_err(py_err)?;
    Ok(PyTangent {
        component_id: t.component_id.clone(),
        weights: t
            .weights
            .iter()
            .map(|(w, n)| ((w.i, w.j, w.k), n))
            .collect(),
        chi0_multiplicity: t.chi0_multiplicity,
        normal_chi0_multiplicity: t.normal_chi0_multiplicity,
        limit: tangent::classify_limit(c).map_err(py_err)?.to_string(),
    })
}

#[pyfunction]
#[pyo3(signature = (lambda_=None))]
fn poincare(lambda_: Option<(i64, i64, i64)>) -> PyResult<PySummary> {
    let lambda = lambda_of(lambda_);
    let s = homology::poincare(&all_components()?, lambda).map_err(py_err)?;
    let [a, b, c] = lambda.entries();
    Ok(PySummary {
        lambda_: (a, b, c),
        hodge_diagonal: s.hodge_diagonal(),
        polynomial: s.polynomial_text(),
        census: (s.census.points, s.census.lines, s.census.surfaces),
        betti: s.betti,
        euler: s.euler,
    })
}

/// `(check, passed, detail)`.
type CheckRow = (String, bool, String);

/// Runs every invariant; returns `(passed, [(check, passed, detail), ...])`.
#[pyfunction]
#[pyo3(signature = (lambda_=None))]
fn verify(lambda_: Option<(i64, i64, i64)>) -> PyResult<(bool, Vec<CheckRow>)> {
    let report = homology::verify(&all_components()?, lambda_of(lambda_));
    let checks = report
        .checks
        .iter()
        .map(|c| {
            let detail = match &c.counterexample {
                Some(ce) => format!("{} [{ce}]", c.detail),
                None => c.detail.clone(),
            };
            (c.name.to_string(), c.passed, detail)
        })
        .collect();
    Ok((report.passed(), checks))
}

/// Differences between regenerated table `n` and the reference; empty when they agree.
#[pyfunction]
fn table_diffs(n: u8) -> PyResult<Vec<String>> {
    Ok(tables::diff(n)
        .map_err(py_err)?
        .iter()
        .map(ToString::to_string)
        .collect())
}

/// Quintic monomials in the ideal generated by monomials such as `"X2"` or `"XY"`.
#[pyfunction]
fn ideal_quintics(generators: Vec<String>) -> PyResult<Vec<String>> {
    let gens = generators
        .iter()
        .map(|g| Character::parse_monomial(g))
        .collect::<Result<Vec<_>, _>>()
        .map_err(py_err)?;
    let degree = gens.first().map_or(0, |g| g.degree());
    let ideal = ideal_degree5(&gens.into_iter().collect(), degree).map_err(py_err)?;
    Ok(ideal.iter_expanded().map(Character::to_monomial).collect())
}

#[pymodule]
#[pyo3(name = "quintic_moduli")]
fn quintic_moduli_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComponent>()?;
    m.add_class::<PyTangent>()?;
    m.add_class::<PySummary>()?;
    m.add_function(wrap_pyfunction!(components, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(tangent_weights, m)?)?;
    m.add_function(wrap_pyfunction!(poincare, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(table_diffs, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_quintics, m)?)?;
    Ok(())
}
