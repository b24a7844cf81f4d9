//! Exercises the Python module through an embedded interpreter.

use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &std::ffi::CStr) {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(cyclo::cyclo)(py);
        let globals = PyDict::new(py);
        globals.set_item("cyclo", module).unwrap();
        if let Err(e) = py.run(code, Some(&globals), None) {
            e.print(py);
            panic!("python assertion failed");
        }
    });
}

#[test]
fn coefficients() {
    run(c"
assert cyclo.coeff(105, 7) == -2
assert cyclo.coeff(6, 3, eps=-1) == -1
assert cyclo.coeff(105, 7, engine='partition') == -2
assert cyclo.cyclotomic_coeff(1, 0) == -1
assert cyclo.inverse_cyclotomic_coeff(6, 3) == -1
assert cyclo.cyclotomic_poly(6) == [1, -1, 1]
assert cyclo.coeff_series(2, 3, eps=-1) == [1, -1, 1, -1]
try:
    cyclo.coeff(0, 1)
    raise AssertionError('n = 0 accepted')
except ValueError:
    pass
");
}

#[test]
fn statistics() {
    run(c"
from fractions import Fraction
vs = cyclo.value_set(7)
assert vs.values == [-2, -1, 0, 1, 2] and vs.height == 2 and -2 in vs
assert vs.symmetric and vs.convex
w = cyclo.value_set_witnesses(7)
assert w[-2] == 105
assert cyclo.density(7)[-2] == Fraction(1, 576)
assert 0 < cyclo.zero_density(7) < 1
assert cyclo.average(10) == Fraction(31, 160)
assert cyclo.average(13, route='prime') == Fraction(13, 288)
avg = cyclo.averages(11)
assert avg['f'] == Fraction(-25, 96) and avg['g'] == Fraction(1, 16)
assert cyclo.kmin(-2) == (7, 105)
mean, freq = cyclo.empirical(1, 10, v=1)
assert mean == Fraction(3, 10) and freq is not None
");
}

#[test]
fn tables_and_verification() {
    run(c"
from fractions import Fraction
rows = {(r, c): v for r, c, v in cyclo.table(2)}
assert rows[('16', 'e')] == Fraction(733, 4032)
diff = {r: v for r, c, v in cyclo.table(5)}
assert diff['47'] == [-9, -8]
assert cyclo.verify_tables()
failures, seesaw = cyclo.verify_identities(12)
assert failures == [] and seesaw == []
assert cyclo.engine_disagreements(200, 10) == 0
");
}
