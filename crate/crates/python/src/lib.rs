//! Python module `homquiver`.

use std::sync::{Arc, OnceLock};

use homquiver::schubert::SchubertCalculus;
use homquiver::stability::TangentStability;
use homquiver::{
    boundary_2d, cone_membership, simplicity_report, tangent_rep, ArrowMode, ParabolicData, RootSystemData,
    Surd, Weight, DEFAULT_BUDGET,
};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(homquiver, BudgetExceededError, PyRuntimeError);

fn py_err(e: homquiver::Error) -> PyErr {
    match e {
        homquiver::Error::BudgetExceeded { .. } => BudgetExceededError::new_err(e.to_string()),
        homquiver::Error::Overflow => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn coords(w: &Weight) -> Vec<i64> {
    w.coords2().to_vec()
}

/// A simply-laced root system; weights are lists of doubled ε-coordinates.
#[pyclass(frozen, module = "homquiver")]
struct RootSystem {
    inner: Arc<RootSystemData>,
}

#[pymethods]
impl RootSystem {
    #[new]
    fn new(series: &str, rank: usize) -> PyResult<Self> {
        let inner = RootSystemData::from_name(series, rank).map_err(py_err)?;
        Ok(RootSystem { inner: Arc::new(inner) })
    }

    #[getter]
    fn series(&self) -> String {
        self.inner.series().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn simple_roots(&self) -> Vec<Vec<i64>> {
        self.inner.simple_roots().iter().map(coords).collect()
    }

    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().iter().map(coords).collect()
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.cartan_matrix().to_vec()
    }

    fn fundamental_coords(&self, weight2: Vec<i64>) -> PyResult<Vec<i64>> {
        Ok(self.inner.fundamental_coords(&self.checked(weight2)?))
    }

    /// Structure constant `N_{α,β}` of the Chevalley basis.
    fn chevalley(&self, alpha2: Vec<i64>, beta2: Vec<i64>) -> PyResult<i8> {
        let (a, b) = (self.checked(alpha2)?, self.checked(beta2)?);
        self.inner.chevalley_constant(&a, &b).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}', {})", self.inner.series(), self.inner.rank())
    }
}

impl RootSystem {
    fn checked(&self, coords2: Vec<i64>) -> PyResult<Weight> {
        if coords2.len() != self.inner.ambient_dim() {
            return Err(PyValueError::new_err(format!(
                "expected {} coordinates, got {}",
                self.inner.ambient_dim(),
                coords2.len()
            )));
        }
        Ok(self.inner.weight2(coords2))
    }
}

#[pyclass(frozen, get_all, module = "homquiver")]
struct SimplicityReport {
    multiplicity_free: bool,
    connected_components: usize,
    hom_dimension: usize,
    dominant_sums: Vec<Vec<i64>>,
    verdict: String,
}

#[pymethods]
impl SimplicityReport {
    fn __repr__(&self) -> String {
        format!("SimplicityReport(verdict={}, hom_dimension={})", self.verdict, self.hom_dimension)
    }
}

#[pyclass(frozen, get_all, module = "homquiver")]
struct ConeInequality {
    subbundle: Vec<usize>,
    polynomial: String,
    monomials: Vec<(Vec<u32>, i128)>,
}

#[pymethods]
impl ConeInequality {
    fn __repr__(&self) -> String {
        format!("ConeInequality({:?}: {} > 0)", self.subbundle, self.polynomial)
    }
}

#[pyclass(frozen, get_all, module = "homquiver")]
struct KingVerdict {
    semistable: bool,
    stable: bool,
    witness: Option<Vec<usize>>,
}

#[pymethods]
impl KingVerdict {
    fn __repr__(&self) -> String {
        format!(
            "KingVerdict(semistable={}, stable={}, witness={:?})",
            self.semistable, self.stable, self.witness
        )
    }
}

type SurdTuple = (i128, i128, i128, i128, String, f64);

fn surd_tuple(s: Surd) -> SurdTuple {
    (s.p, s.q, s.r, s.s, s.to_string(), s.to_f64())
}

/// `G/P` for the parabolic that removes the simple roots `sigma` (1-based).
/// Omitting `sigma` gives the Borel subgroup.
#[pyclass(frozen, module = "homquiver")]
struct Parabolic {
    inner: ParabolicData,
    budget: usize,
    stability: OnceLock<TangentStability>,
}

#[pymethods]
impl Parabolic {
    #[new]
    #[pyo3(signature = (series, rank, sigma=None, budget=DEFAULT_BUDGET))]
    fn new(series: &str, rank: usize, sigma: Option<Vec<usize>>, budget: usize) -> PyResult<Self> {
        let system = Arc::new(RootSystemData::from_name(series, rank).map_err(py_err)?);
        let inner = match sigma {
            None => ParabolicData::borel(system),
            Some(s) => ParabolicData::new(system, &s).map_err(py_err)?,
        };
        Ok(Parabolic {
            inner,
            budget,
            stability: OnceLock::new(),
        })
    }

    #[getter]
    fn sigma(&self) -> Vec<usize> {
        self.inner.sigma().to_vec()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn picard_rank(&self) -> usize {
        self.inner.picard_rank()
    }

    fn tangent_weights(&self) -> Vec<Vec<i64>> {
        self.inner.tangent_weights().iter().map(coords).collect()
    }

    /// `(highest_weight, rank)` of each irreducible Levi summand of the tangent space.
    fn levi_components(&self) -> PyResult<Vec<(Vec<i64>, usize)>> {
        Ok(self
            .inner
            .levi_components()
            .map_err(py_err)?
            .iter()
            .map(|c| (coords(&c.highest_weight), c.rank))
            .collect())
    }

    fn simplicity(&self) -> PyResult<SimplicityReport> {
        let r = simplicity_report(&self.inner).map_err(py_err)?;
        Ok(SimplicityReport {
            multiplicity_free: r.multiplicity_free,
            connected_components: r.connected_components,
            hom_dimension: r.hom_dimension,
            dominant_sums: r.dominant_sums.iter().map(coords).collect(),
            verdict: r.verdict.to_string(),
        })
    }

    /// Graphviz source of the tangent quiver; `mode` is `"full"` or `"reduced"`.
    #[pyo3(signature = (mode="full", levi=false))]
    fn quiver_dot(&self, mode: &str, levi: bool) -> PyResult<String> {
        let mode: ArrowMode = mode.parse().map_err(py_err)?;
        let t = tangent_rep(&self.inner).map_err(py_err)?;
        let rep = if levi { t.levi_rep } else { t.rep };
        let rep = match mode {
            ArrowMode::Full => rep,
            ArrowMode::Reduced => rep.reduced_view().map_err(py_err)?,
        };
        Ok(rep.to_dot())
    }

    /// First Chern class of the tangent bundle in the Schubert divisor basis.
    fn c1(&self, py: Python<'_>) -> PyResult<Vec<i64>> {
        Ok(self.stability(py)?.c1.clone())
    }

    fn intersection_number(&self, exponents: Vec<u32>) -> PyResult<i128> {
        let calc = SchubertCalculus::new(&self.inner, self.budget).map_err(py_err)?;
        calc.intersection_number(&exponents).map_err(py_err)
    }

    /// Nonzero top intersection numbers as `(exponents, value)` pairs.
    fn intersection_table(&self, py: Python<'_>) -> PyResult<Vec<(Vec<u32>, i128)>> {
        let p = &self.inner;
        let budget = self.budget;
        let table = py
            .detach(|| SchubertCalculus::new(p, budget).and_then(|c| c.intersection_table()))
            .map_err(py_err)?;
        Ok(table.into_iter().filter(|(_, v)| *v != 0).collect())
    }

    fn cone(&self, py: Python<'_>) -> PyResult<Vec<ConeInequality>> {
        let ineqs = self.stability(py)?.inequalities().map_err(py_err)?;
        Ok(ineqs
            .into_iter()
            .map(|i| ConeInequality {
                subbundle: i.subbundle,
                polynomial: i.polynomial.to_string(),
                monomials: i.polynomial.terms().map(|(e, c)| (e.to_vec(), c)).collect(),
            })
            .collect())
    }

    /// `"STABLE"`, `"STRICTLY_SEMISTABLE_BOUNDARY"` or `"UNSTABLE"`.
    fn cone_verdict(&self, py: Python<'_>, polarization: Vec<i64>) -> PyResult<String> {
        let ineqs = self.stability(py)?.inequalities().map_err(py_err)?;
        Ok(cone_membership(&ineqs, &polarization).map_err(py_err)?.to_string())
    }

    /// Stable slopes `b/a` as `(lower, upper)`; each bound is
    /// `(p, q, r, s, text, float)` for `(p + q√r)/s`, or `None` for `0` and `∞`.
    fn boundary(&self, py: Python<'_>) -> PyResult<(Option<SurdTuple>, Option<SurdTuple>)> {
        let ineqs = self.stability(py)?.inequalities().map_err(py_err)?;
        let b = boundary_2d(&ineqs).map_err(py_err)?;
        Ok((b.lower.map(surd_tuple), b.upper.map(surd_tuple)))
    }

    fn king(&self, py: Python<'_>, polarization: Vec<i64>) -> PyResult<KingVerdict> {
        let k = self.stability(py)?.king(&polarization).map_err(py_err)?;
        Ok(KingVerdict {
            semistable: k.semistable,
            stable: k.stable,
            witness: k.witness,
        })
    }

    fn __repr__(&self) -> String {
        let s = self.inner.system();
        format!("Parabolic('{}', {}, {:?})", s.series(), s.rank(), self.inner.sigma())
    }
}

impl Parabolic {
    fn stability(&self, py: Python<'_>) -> PyResult<&TangentStability> {
        if let Some(st) = self.stability.get() {
            return Ok(st);
        }
        let (p, budget) = (&self.inner, self.budget);
        let st = py.detach(|| TangentStability::new(p, budget)).map_err(py_err)?;
        Ok(self.stability.get_or_init(|| st))
    }
}

#[pymodule]
#[pyo3(name = "homquiver")]
fn homquiver_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootSystem>()?;
    m.add_class::<Parabolic>()?;
    m.add_class::<SimplicityReport>()?;
    m.add_class::<ConeInequality>()?;
    m.add_class::<KingVerdict>()?;
    m.add("BudgetExceededError", m.py().get_type::<BudgetExceededError>())?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    Ok(())
}
