//! Expectation values and second moments of observables in a pure state.

use num_complex::Complex64;

use super::linalg::{check_dims, dot, norm_sqr, Matrix};

use super::{scaled_tol, Observable, QuantumState, TOL_EIG};
use crate::error::{Error, Result};

/// `Re <xi|A|xi>`.
pub fn expectation(a: &Observable, xi: &QuantumState) -> Result<f64> {
    check_dims(a.dim(), xi.dim())?;
    let m = dot(xi.amplitudes(), &a.apply_state(xi)?);
    let allowed = scaled_tol(TOL_EIG, a.norm());
    if m.im.abs() > allowed {
        return Err(Error::PhaseViolation {
            what: "expectation",
            part: "imaginary",
            value: m.im,
        });
    }
    Ok(m.re)
}

/// `<xi|M|xi>` for an arbitrary square matrix.
pub fn matrix_mean(m: &Matrix, xi: &QuantumState) -> Result<Complex64> {
    m.sandwich(xi.amplitudes(), xi.amplitudes())
}

/// `(A - <A>) |xi>`; always orthogonal to `|xi>`.
pub fn deviation_vector(a: &Observable, xi: &QuantumState) -> Result<Vec<Complex64>> {
    let mean = expectation(a, xi)?;
    let mut v = a.apply_state(xi)?;
    for (vi, x) in v.iter_mut().zip(xi.amplitudes()) {
        *vi -= mean * x;
    }
    Ok(v)
}

/// `<A^2> - <A>^2`, with `<A^2> = |A xi|^2`. Round-off below zero is clamped.
pub fn variance(a: &Observable, xi: &QuantumState) -> Result<f64> {
    let mean = expectation(a, xi)?;
    let second = norm_sqr(&a.apply_state(xi)?);
    Ok((second - mean * mean).max(0.0))
}

pub fn std_dev(a: &Observable, xi: &QuantumState) -> Result<f64> {
    Ok(variance(a, xi)?.sqrt())
}

/// `<XY> - <X><Y>`. Complex unless X and Y commute.
pub fn covariance(x: &Observable, y: &Observable, xi: &QuantumState) -> Result<Complex64> {
    check_dims(x.dim(), y.dim())?;
    check_dims(x.dim(), xi.dim())?;
    let xy = product_mean(x, y, xi)?;
    Ok(xy - expectation(x, xi)? * expectation(y, xi)?)
}

/// `(Cov(A,B) + Cov(B,A)) / 2`, real for Hermitian inputs.
pub fn quantum_covariance(a: &Observable, b: &Observable, xi: &QuantumState) -> Result<f64> {
    let sym = (covariance(a, b, xi)? + covariance(b, a, xi)?) * 0.5;
    let allowed = scaled_tol(TOL_EIG, a.norm() * b.norm());
    if sym.im.abs() > allowed {
        return Err(Error::PhaseViolation {
            what: "quantum covariance",
            part: "imaginary",
            value: sym.im,
        });
    }
    Ok(sym.re)
}

/// `<xi|X (Y|xi>)>`, without forming the product matrix.
fn product_mean(x: &Observable, y: &Observable, xi: &QuantumState) -> Result<Complex64> {
    check_dims(x.dim(), y.dim())?;
    x.matrix().sandwich(xi.amplitudes(), &y.apply_state(xi)?)
}

/// `<[A,B]>`, purely imaginary.
pub fn commutator_mean(a: &Observable, b: &Observable, xi: &QuantumState) -> Result<Complex64> {
    let m = product_mean(a, b, xi)? - product_mean(b, a, xi)?;
    if m.re.abs() > scaled_tol(TOL_EIG, a.norm() * b.norm()) {
        return Err(Error::PhaseViolation {
            what: "commutator",
            part: "real",
            value: m.re,
        });
    }
    Ok(m)
}

/// `<{A,B}>`, purely real.
pub fn anticommutator_mean(a: &Observable, b: &Observable, xi: &QuantumState) -> Result<Complex64> {
    let m = product_mean(a, b, xi)? + product_mean(b, a, xi)?;
    if m.im.abs() > scaled_tol(TOL_EIG, a.norm() * b.norm()) {
        return Err(Error::PhaseViolation {
            what: "anticommutator",
            part: "imaginary",
            value: m.im,
        });
    }
    Ok(m)
}

/// True iff `|(A - <A>) xi|^2 <= tol`.
pub fn is_eigenstate(a: &Observable, xi: &QuantumState, tol: f64) -> Result<bool> {
    Ok(norm_sqr(&deviation_vector(a, xi)?) <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::linalg::{inner_product, ONE};
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    fn qubit_state(alpha: f64) -> QuantumState {
        QuantumState::new(vec![
            Complex64::from(FRAC_1_SQRT_2),
            Complex64::from_polar(FRAC_1_SQRT_2, alpha),
        ])
        .unwrap()
    }

    fn alphas() -> impl Iterator<Item = f64> {
        (0..24).map(|k| 2.0 * PI * k as f64 / 24.0)
    }

    #[test]
    fn qubit_expectations() {
        let (x, z) = (Observable::pauli_x(), Observable::pauli_z());
        for alpha in alphas() {
            let xi = qubit_state(alpha);
            assert!(expectation(&z, &xi).unwrap().abs() < 1e-15);
            assert!((expectation(&x, &xi).unwrap() - alpha.cos()).abs() < 1e-15);
            let id = Observable::identity(2).unwrap();
            assert!((expectation(&id, &xi).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn deviation_vectors() {
        let (x, z) = (Observable::pauli_x(), Observable::pauli_z());
        let zero = QuantumState::basis(2, 0).unwrap();
        assert!(deviation_vector(&z, &zero).unwrap().iter().all(|c| c.norm() == 0.0));
        let d = deviation_vector(&x, &zero).unwrap();
        assert_eq!(d, vec![Complex64::from(0.0), ONE]);
        for alpha in alphas() {
            let xi = qubit_state(alpha);
            let dev = deviation_vector(&x, &xi).unwrap();
            assert!(inner_product(xi.amplitudes(), &dev).unwrap().norm() < 1e-15);
            assert!((norm_sqr(&dev) - variance(&x, &xi).unwrap()).abs() < 1e-15);
        }
    }

    #[test]
    fn qubit_variances() {
        let (x, z) = (Observable::pauli_x(), Observable::pauli_z());
        for alpha in alphas() {
            let xi = qubit_state(alpha);
            assert!((variance(&z, &xi).unwrap() - 1.0).abs() < 1e-15);
            assert!((variance(&x, &xi).unwrap() - alpha.sin().powi(2)).abs() < 1e-15);
        }
        assert_eq!(variance(&z, &QuantumState::basis(2, 1).unwrap()).unwrap(), 0.0);
    }

    #[test]
    fn qubit_covariances_and_commutators() {
        let (x, z) = (Observable::pauli_x(), Observable::pauli_z());
        for alpha in alphas() {
            let xi = qubit_state(alpha);
            assert!(quantum_covariance(&x, &z, &xi).unwrap().abs() < 1e-15);
            let comm = commutator_mean(&x, &z, &xi).unwrap();
            assert!((comm - Complex64::new(0.0, -2.0 * alpha.sin())).norm() < 1e-15);
            assert!((comm.norm_sqr() - 4.0 * alpha.sin().powi(2)).abs() < 1e-14);
            let zx = matrix_mean(&z.matrix().matmul(x.matrix()).unwrap(), &xi).unwrap();
            assert!((zx - Complex64::new(0.0, alpha.sin())).norm() < 1e-15);
            assert_eq!(commutator_mean(&x, &x, &xi).unwrap().norm(), 0.0);
            let cov_xx = quantum_covariance(&x, &x, &xi).unwrap();
            assert!((cov_xx - variance(&x, &xi).unwrap()).abs() < 1e-15);
        }
    }

    #[test]
    fn commuting_diagonals() {
        // <AB> = 1, <A> = 0, <B> = 1 on |+>
        let a = Observable::diagonal(&[1.0, -1.0]).unwrap();
        let b = Observable::diagonal(&[2.0, 0.0]).unwrap();
        let xi = qubit_state(0.0);
        let cov = covariance(&a, &b, &xi).unwrap();
        assert!((cov - Complex64::from(1.0)).norm() < 1e-15);
        assert_eq!(quantum_covariance(&a, &b, &xi).unwrap(), cov.re);

        // <AB> = -1 with the second diagonal reversed
        let b = Observable::diagonal(&[0.0, 2.0]).unwrap();
        let cov = covariance(&a, &b, &xi).unwrap();
        assert!((cov - Complex64::from(-1.0)).norm() < 1e-15);
        assert_eq!(quantum_covariance(&a, &b, &xi).unwrap(), cov.re);
    }

    #[test]
    fn eigenstate_detection() {
        let (x, z) = (Observable::pauli_x(), Observable::pauli_z());
        assert!(is_eigenstate(&z, &QuantumState::basis(2, 0).unwrap(), 1e-12).unwrap());
        assert!(is_eigenstate(&x, &qubit_state(0.0), 1e-12).unwrap());
        assert!(!is_eigenstate(&x, &qubit_state(FRAC_PI_2), 1e-12).unwrap());
    }

    #[test]
    fn dimension_mismatch_everywhere() {
        let xi3 = QuantumState::basis(3, 0).unwrap();
        let x = Observable::pauli_x();
        let id3 = Observable::identity(3).unwrap();
        assert!(expectation(&x, &xi3).is_err());
        assert!(variance(&x, &xi3).is_err());
        assert!(covariance(&x, &id3, &xi3).is_err());
        assert!(commutator_mean(&x, &id3, &xi3).is_err());
        assert!(is_eigenstate(&x, &xi3, 1e-12).is_err());
    }
}
