//! Python bindings for `rbx_core`.
//!
//! Matrices cross the boundary as lists of rows indexed by the source basis,
//! with entries given as ints or strings (`"1/2"`) and returned as canonical
//! strings. Instances travel as JSON documents.

use pyo3::exceptions::{PyArithmeticError, PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use rbx_core::algebra::assoc_check;
use rbx_core::flows::{addexp_check, exp_flow, flow_intertwiner};
use rbx_core::gerstenhaber::is_square_zero;
use rbx_core::instances;
use rbx_core::operators::{
    check_operator, graph_check, is_nijenhuis, is_reynolds, is_rota_baxter, search_operators, structure_residual,
    SearchKind, DEFAULT_BUDGET,
};
use rbx_core::structures::{check_dendriform, check_ns, dendriform_from_grb, ns_from_trb};
use rbx_core::{Algebra, Document, Error, Field, LinearMap, OperatorInstance, Scalar, Verdict, Witness};

fn err(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Characteristic { .. } => PyArithmeticError::new_err(msg),
        Error::Capacity(_) => PyOverflowError::new_err(msg),
        Error::Input(_) | Error::Precondition(_) => PyValueError::new_err(msg),
    }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_canonical_string()).collect()
}

fn parse_matrix(field: Field, rows: &Bound<'_, PyAny>, source: usize, target: usize) -> PyResult<LinearMap> {
    let mut out = vec![];
    for row in rows.try_iter()? {
        let mut parsed = vec![];
        for entry in row?.try_iter()? {
            parsed.push(field.parse(&entry?.str()?.to_string()).map_err(err)?);
        }
        out.push(parsed);
    }
    LinearMap::from_rows(field, source, target, out).map_err(err)
}

#[pyclass(name = "Field", frozen, eq, from_py_object, module = "rbx")]
#[derive(Clone, Copy, PartialEq, Eq)]
struct PyField(Field);

#[pymethods]
impl PyField {
    /// `"Q"` for the rationals, `"F5"` (or `"GF(5)"`) for a prime field.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        spec.parse().map(PyField).map_err(err)
    }

    #[getter]
    fn characteristic(&self) -> u64 {
        self.0.characteristic()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Field('{}')", self.0)
    }
}

/// Outcome of an identity check; truthy when the identity holds.
#[pyclass(name = "Verdict", frozen, module = "rbx")]
struct PyVerdict(Verdict);

fn witness_dict<'py>(py: Python<'py>, w: &Witness) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("label", &w.label)?;
    d.set_item("indices", w.indices.clone())?;
    d.set_item("lhs", strings(&w.lhs))?;
    d.set_item("rhs", strings(&w.rhs))?;
    Ok(d)
}

#[pymethods]
impl PyVerdict {
    #[getter]
    fn holds(&self) -> bool {
        self.0.holds()
    }

    fn __bool__(&self) -> bool {
        self.0.holds()
    }

    /// First failure of each violated identity, as dicts.
    #[getter]
    fn failures<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let items = self.0.failures.iter().map(|w| witness_dict(py, w)).collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, items)
    }

    #[getter]
    fn witness<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyDict>>> {
        self.0.witness().map(|w| witness_dict(py, w)).transpose()
    }

    fn __repr__(&self) -> String {
        match self.0.witness() {
            None => "Verdict(pass)".into(),
            Some(w) => format!("Verdict(fail: {w})"),
        }
    }
}

#[pyclass(name = "Algebra", frozen, module = "rbx")]
struct PyAlgebra(Algebra);

#[pymethods]
impl PyAlgebra {
    /// A named catalog algebra, e.g. `Algebra.catalog("dual_numbers", Field("F2"))`.
    #[staticmethod]
    fn catalog(name: &str, field: PyField) -> PyResult<Self> {
        instances::algebra(name, field.0).map(PyAlgebra).map_err(err)
    }

    /// Reads the `algebra` section of a JSON document.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Document::from_json(text).and_then(|d| d.algebra()).map(PyAlgebra).map_err(err)
    }

    fn to_json(&self) -> String {
        let mut doc = Document::new(self.0.field());
        doc.set_algebra(&self.0);
        doc.to_json()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn field(&self) -> PyField {
        PyField(self.0.field())
    }

    fn is_associative(&self) -> PyResult<PyVerdict> {
        assoc_check(self.0.product()).map(PyVerdict).map_err(err)
    }

    fn is_rota_baxter(&self, matrix: &Bound<'_, PyAny>) -> PyResult<PyVerdict> {
        let m = self.endo(matrix)?;
        is_rota_baxter(&self.0, &m).map(PyVerdict).map_err(err)
    }

    fn is_reynolds(&self, matrix: &Bound<'_, PyAny>) -> PyResult<PyVerdict> {
        let m = self.endo(matrix)?;
        is_reynolds(&self.0, &m).map(PyVerdict).map_err(err)
    }

    fn is_nijenhuis(&self, matrix: &Bound<'_, PyAny>) -> PyResult<PyVerdict> {
        let m = self.endo(matrix)?;
        is_nijenhuis(&self.0, &m).map(PyVerdict).map_err(err)
    }

    /// Exhaustive search over a prime field.
    ///
    /// `kind` is one of `grb`, `rb`, `reynolds`, `nijenhuis`, `aybe`; GRB
    /// searches run on the dual module when `dual` is set. Each solution is
    /// its list of coefficients in enumeration order.
    #[pyo3(signature = (kind, dual = false, budget = None))]
    fn search(&self, kind: &str, dual: bool, budget: Option<u64>) -> PyResult<Vec<Vec<String>>> {
        let kind = match kind {
            "grb" => SearchKind::Grb,
            "rb" => SearchKind::Rb,
            "reynolds" => SearchKind::Reynolds,
            "nijenhuis" => SearchKind::Nijenhuis,
            "aybe" => SearchKind::Aybe,
            other => return Err(PyValueError::new_err(format!("unknown search kind '{other}'"))),
        };
        let module = instances::module(&self.0, dual);
        let found = search_operators(&self.0, &module, &kind, budget.unwrap_or(DEFAULT_BUDGET)).map_err(err)?;
        Ok(found.iter().map(|s| strings(s.coefficients())).collect())
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, field={})", self.0.dim(), self.0.field())
    }
}

impl PyAlgebra {
    fn endo(&self, matrix: &Bound<'_, PyAny>) -> PyResult<LinearMap> {
        parse_matrix(self.0.field(), matrix, self.0.dim(), self.0.dim())
    }
}

/// An operator `π: M → A`, optionally twisted by a 2-cocycle `φ`.
#[pyclass(name = "Instance", frozen, module = "rbx")]
struct PyInstance(OperatorInstance);

#[pymethods]
impl PyInstance {
    /// Catalog instances: the twisted Rota-Baxter examples, `times_x` and
    /// `truncated_polynomial` (of the given degree).
    #[staticmethod]
    #[pyo3(signature = (name, field, degree = 4))]
    fn catalog(name: &str, field: PyField, degree: usize) -> PyResult<Self> {
        let inst = match name {
            "times_x" => instances::times_x(field.0),
            "truncated_polynomial" => instances::truncated_polynomial(field.0, degree).map(|t| t.instance),
            _ => instances::trb_instance(name, field.0),
        };
        inst.map(PyInstance).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (text, pi = "pi", phi = None))]
    fn from_json(text: &str, pi: &str, phi: Option<&str>) -> PyResult<Self> {
        Document::from_json(text).and_then(|d| d.instance(pi, phi)).map(PyInstance).map_err(err)
    }

    fn to_json(&self) -> String {
        Document::from_instance(&self.0).to_json()
    }

    /// The same algebra, module and cocycle with another map.
    fn with_pi(&self, matrix: &Bound<'_, PyAny>) -> PyResult<Self> {
        let (m, a) = (self.0.module().dim(), self.0.algebra().dim());
        let pi = parse_matrix(self.0.field(), matrix, m, a)?;
        self.0.with_pi(pi).map(PyInstance).map_err(err)
    }

    #[getter]
    fn field(&self) -> PyField {
        PyField(self.0.field())
    }

    #[getter]
    fn pi(&self) -> Vec<Vec<String>> {
        self.0.pi().rows().iter().map(|r| strings(r)).collect()
    }

    #[getter]
    fn twisted(&self) -> bool {
        self.0.phi().is_some()
    }

    /// The twisted Rota-Baxter identity, or the plain one without a cocycle.
    fn check(&self) -> PyResult<PyVerdict> {
        check_operator(&self.0).map(PyVerdict).map_err(err)
    }

    /// Whether the graph of `π` is a subalgebra of the (twisted) extension.
    fn graph_closed(&self) -> PyResult<bool> {
        graph_check(&self.0).map(|c| c.is_closed()).map_err(err)
    }

    /// `(residual is zero, intermediate identity holds)`; needs `1/6`.
    fn structure_residual(&self) -> PyResult<(bool, bool)> {
        let r = structure_residual(&self.0).map_err(err)?;
        Ok((r.is_zero(), r.intermediate_identity_holds()))
    }

    /// Runs the exponential flow and reports its invariants as a dict.
    fn flow<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let flow = exp_flow(&self.0).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("fourth_term_zero", flow.fourth.is_zero())?;
        d.set_item("sum_square_zero", is_square_zero(&flow.sum).map_err(err)?)?;
        d.set_item("intertwiner", PyVerdict(flow_intertwiner(&self.0, &flow).map_err(err)?))?;
        let report = addexp_check(&self.0).map_err(err)?;
        d.set_item("truncation_equal", report.equal)?;
        d.set_item("addexp", report.holds())?;
        Ok(d)
    }

    /// The induced dendriform structure on `M` as a JSON document.
    fn dendriform(&self) -> PyResult<String> {
        let d = dendriform_from_grb(&self.0).map_err(err)?;
        let v = check_dendriform(&d);
        if let Some(w) = v.witness() {
            return Err(PyValueError::new_err(format!("not dendriform: {w}")));
        }
        let mut doc = Document::new(self.0.field());
        doc.set_dendriform(&d);
        Ok(doc.to_json())
    }

    /// The induced NS-algebra structure on `M` as a JSON document.
    fn ns(&self) -> PyResult<String> {
        let t = ns_from_trb(&self.0).map_err(err)?;
        let v = check_ns(&t);
        if let Some(w) = v.witness() {
            return Err(PyValueError::new_err(format!("not an NS-algebra: {w}")));
        }
        let mut doc = Document::new(self.0.field());
        doc.set_ns(&t);
        Ok(doc.to_json())
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(dim A={}, dim M={}, field={}, twisted={})",
            self.0.algebra().dim(),
            self.0.module().dim(),
            self.0.field(),
            self.0.phi().is_some()
        )
    }
}

/// Names accepted by `Algebra.catalog` and `Instance.catalog`.
#[pyfunction]
fn catalog<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("algebras", instances::ALGEBRAS.to_vec())?;
    let mut insts = instances::TRB_INSTANCES.to_vec();
    insts.extend(["times_x", "truncated_polynomial"]);
    d.set_item("instances", insts)?;
    Ok(d)
}

#[pymodule]
fn rbx(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyVerdict>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyInstance>()?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    Ok(())
}
