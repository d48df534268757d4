//! Python module `qplane_py`. Reports come back as plain dicts and lists.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::Value;

use qplane::circlerep::circle_relation_suite;
use qplane::dynamics::{
    hamiltonian_symmetry_checks, heisenberg_identity_check, stationary_residual, stationary_state,
    zero_scaling_report, RadialGrid, StationarySpec, DEFAULT_FD_STEP,
};
use qplane::hopf::axioms::hopf_suite;
use qplane::hopf::{HopfConsistent, PairingConvention};
use qplane::planefun::{exact_algebra_suite, Axis};
use qplane::qcalc::{DeformationParams, QScalar};
use qplane::uncertainty::{
    eigen_check, factorization_check, five_point_superposition, gaussian_packet_report, minimal_radial_packet_report,
    momentum_report, PlaneWaveSpec, WaveKind,
};
use qplane::QError;

create_exception!(qplane_py, QPlaneError, PyValueError);

fn err(e: QError) -> PyErr {
    QPlaneError::new_err(e.to_string())
}

fn value_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(xs) => {
            let list = PyList::empty(py);
            for x in xs {
                list.append(value_to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(m) => {
            let d = PyDict::new(py);
            for (k, x) in m {
                d.set_item(k, value_to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn to_py<'py, T: Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(x).map_err(|e| QPlaneError::new_err(e.to_string()))?;
    value_to_py(py, &v)
}

fn params(q: f64) -> PyResult<DeformationParams> {
    DeformationParams::unit(q).map_err(err)
}

fn axis(name: &str) -> PyResult<Axis> {
    match name {
        "x" => Ok(Axis::X),
        "y" => Ok(Axis::Y),
        _ => Err(QPlaneError::new_err(format!("axis must be 'x' or 'y', not {name:?}"))),
    }
}

#[pyfunction]
fn version() -> &'static str {
    qplane::VERSION
}

/// Exact algebra and Hamiltonian symmetry identities on monomials of degree ≤ `degree`.
#[pyfunction]
#[pyo3(signature = (degree=6))]
fn algebra_suite(py: Python<'_>, degree: u32) -> PyResult<Bound<'_, PyAny>> {
    if degree > 8 {
        return Err(QPlaneError::new_err(format!("degree {degree} above 8")));
    }
    let (hbar, mass) = (QScalar::ratio(3, 7), QScalar::ratio(2, 5));
    let mut suite = exact_algebra_suite(degree, &hbar);
    suite.extend(hamiltonian_symmetry_checks(degree, &hbar, &mass));
    to_py(py, &suite)
}

#[pyfunction]
#[pyo3(signature = (seed=7, random=100))]
fn hopf_axioms(py: Python<'_>, seed: u64, random: usize) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &hopf_suite::<HopfConsistent>(seed, random, PairingConvention::RESOLVED))
}

#[pyfunction]
#[pyo3(signature = (q, big_j=64))]
fn circle_relations(py: Python<'_>, q: f64, big_j: i64) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &circle_relation_suite(params(q)?, big_j).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (q, eps=1.0))]
fn gaussian_report(py: Python<'_>, q: f64, eps: f64) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &gaussian_packet_report(eps, &params(q)?).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (q, j=1, cmag=1.0))]
fn minimal_report(py: Python<'_>, q: f64, j: i64, cmag: f64) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &minimal_radial_packet_report(j, cmag, &params(q)?).map_err(err)?)
}

/// Eigen and factorization checks plus the momentum-pair bound on the
/// five-point family; momenta are exact fractions (numerator, denominator).
#[pyfunction]
#[pyo3(signature = (q, p_plus=(1, 2), p_minus=(1, 1), degree=12, envelope=2.0, minus=false))]
fn plane_wave_report(
    py: Python<'_>,
    q: f64,
    p_plus: (i64, i64),
    p_minus: (i64, i64),
    degree: u32,
    envelope: f64,
    minus: bool,
) -> PyResult<Bound<'_, PyAny>> {
    if p_plus.1 == 0 || p_minus.1 == 0 {
        return Err(QPlaneError::new_err("zero denominator"));
    }
    let spec = PlaneWaveSpec {
        kind: if minus { WaveKind::Minus } else { WaveKind::Plus },
        p_plus: QScalar::ratio(p_plus.0, p_plus.1),
        p_minus: QScalar::ratio(p_minus.0, p_minus.1),
        hbar: QScalar::one(),
    };
    let p = params(q)?;
    let family = five_point_superposition(&spec, degree.min(12)).map_err(err)?;
    let out = serde_json::json!({
        "eigen": eigen_check(&spec, degree).map_err(err)?,
        "factorization_printed_order": factorization_check(&spec, degree, false).map_err(err)?,
        "factorization_reversed_order": factorization_check(&spec, degree, true).map_err(err)?,
        "momentum": momentum_report(&family, &p, Some(envelope)).map_err(err)?,
    });
    value_to_py(py, &out)
}

/// Returns (r, psi, max relative residual) for the Bessel stationary state.
#[pyfunction]
#[pyo3(signature = (q, j=0, energy=1.0, grid=401, r_max=None))]
fn stationary(q: f64, j: u32, energy: f64, grid: usize, r_max: Option<f64>) -> PyResult<(Vec<f64>, Vec<f64>, f64)> {
    let spec = StationarySpec { j, energy, q, mass: 1.0, hbar: 1.0 };
    let r_max = r_max.unwrap_or(15.0 / spec.k());
    let state = stationary_state(&spec, &RadialGrid { size: grid, r_max }).map_err(err)?;
    let res = stationary_residual(&state, DEFAULT_FD_STEP).map_err(err)?;
    Ok((state.r, state.psi, res.max_relative))
}

#[pyfunction]
#[pyo3(signature = (q, jmax=5, energy=1.0))]
fn zero_scaling(py: Python<'_>, q: f64, jmax: u32, energy: f64) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &zero_scaling_report(jmax, q, energy, 1.0, 1.0).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (axis_name, q, degree=4))]
fn heisenberg<'py>(py: Python<'py>, axis_name: &str, q: f64, degree: u32) -> PyResult<Bound<'py, PyAny>> {
    let r = heisenberg_identity_check(axis(axis_name)?, degree, &params(q)?, &QScalar::one(), &QScalar::one())
        .map_err(err)?;
    to_py(py, &r)
}

#[pymodule]
fn qplane_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("QPlaneError", m.py().get_type::<QPlaneError>())?;
    m.add_function(wrap_pyfunction!(version, m)?)?;
    m.add_function(wrap_pyfunction!(algebra_suite, m)?)?;
    m.add_function(wrap_pyfunction!(hopf_axioms, m)?)?;
    m.add_function(wrap_pyfunction!(circle_relations, m)?)?;
    m.add_function(wrap_pyfunction!(gaussian_report, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_report, m)?)?;
    m.add_function(wrap_pyfunction!(plane_wave_report, m)?)?;
    m.add_function(wrap_pyfunction!(stationary, m)?)?;
    m.add_function(wrap_pyfunction!(zero_scaling, m)?)?;
    m.add_function(wrap_pyfunction!(heisenberg, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_values_round_trip_into_python() {
        pyo3::prepare_freethreaded_python();
        Python::with_gil(|py| {
            let v = serde_json::json!({ "a": [1, 2.5, null, true], "b": "s" });
            let obj = value_to_py(py, &v).unwrap();
            let back: String = py.import("json").unwrap().call_method1("dumps", (obj,)).unwrap().extract().unwrap();
            let parsed: Value = serde_json::from_str(&back).unwrap();
            assert_eq!(parsed, v);
        });
    }

    #[test]
    fn bad_inputs_become_qplane_errors() {
        pyo3::prepare_freethreaded_python();
        Python::with_gil(|py| {
            assert!(axis("z").unwrap_err().is_instance_of::<QPlaneError>(py));
            assert!(params(1.5).unwrap_err().is_instance_of::<PyValueError>(py));
            assert!(stationary(0.9, 0, -1.0, 401, None).is_err());
        });
    }
}
