//! SVD-backed rank and null space for the float backend.

use nalgebra::DMatrix;

use super::matrix::Matrix;

fn to_dmatrix(m: &Matrix<f64>, pad_rows: usize) -> DMatrix<f64> {
    let rows = m.rows().max(pad_rows);
    DMatrix::from_fn(rows, m.cols(), |i, j| if i < m.rows() { m[(i, j)] } else { 0.0 })
}

pub(crate) fn svd_rank(m: &Matrix<f64>, tol: f64) -> usize {
    let svd = to_dmatrix(m, 0).svd(false, false);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if sigma_max == 0.0 {
        return 0;
    }
    svd.singular_values.iter().filter(|&&s| s > tol * sigma_max).count()
}

pub(crate) fn svd_nullspace(m: &Matrix<f64>, tol: f64) -> Vec<Vec<f64>> {
    let n = m.cols();
    // pad to at least n rows so that V is complete
    let svd = to_dmatrix(m, n).svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    (0..v_t.nrows())
        .filter(|&i| sigma_max == 0.0 || svd.singular_values[i] <= tol * sigma_max)
        .map(|i| v_t.row(i).iter().cloned().collect())
        .collect()
}
