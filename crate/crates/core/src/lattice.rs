/// Placeholder during scaffold.
#[derive(Debug, Clone)]
pub struct ChainSpec {
    pub n_sites: usize,
}

#[cfg(test)]
mod tests {
    use ndarray::array;
    use ndarray_linalg::{Eigh, UPLO, SVD, Determinant, Inverse};
    use num_complex::Complex64;

    #[test]
    fn lapack_backend_smoke() {
        let a = array![[2.0, 1.0], [1.0, 2.0]];
        let (w, _v): (ndarray::Array1<f64>, ndarray::Array2<f64>) = a.eigh(UPLO::Lower).unwrap();
        assert!((w[0] - 1.0).abs() < 1e-12 && (w[1] - 3.0).abs() < 1e-12);

        let (u, s, vt) = a.svd(true, true).unwrap();
        assert!(u.is_some() && vt.is_some());
        assert!((s[0] - 3.0).abs() < 1e-12);

        let c = array![
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)],
            [Complex64::new(0.0, -1.0), Complex64::new(2.0, 0.0)]
        ];
        let d = c.det().unwrap();
        assert!((d - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let ci = c.inv().unwrap();
        let id = c.dot(&ci);
        assert!((id[[0, 0]] - Complex64::new(1.0, 0.0)).norm() < 1e-12);

        let (cw, _cv): (ndarray::Array1<f64>, ndarray::Array2<Complex64>) = c.eigh(UPLO::Lower).unwrap();
        assert!(cw[0] < cw[1]);
        let (_cu, cs, _cvt) = c.svd(true, true).unwrap();
        assert!(cs[0] >= cs[1]);
    }
}
