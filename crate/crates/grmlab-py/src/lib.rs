use pyo3::prelude::*;

#[pymodule]
fn grmlab_py(_m: &Bound<PyModule>) -> PyResult<()> {
    Ok(())
}
