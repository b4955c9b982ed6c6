//! Trigonometric polynomials on the unit circle.
//!
//! A [`TorusFunction`] of degree `N` is `f(t) = sum_{|n| <= N} c_n e^{int}`,
//! stored by its coefficients. Norms are computed by evaluating on a uniform
//! power-of-two grid with an FFT and applying the rectangle rule, which is
//! exact for trigonometric polynomials of degree below the grid size.
//!
//! ```
//! use num_complex::Complex64;
//! use riesz_bounds::torus::{lp_norm, Part, TorusFunction};
//!
//! // 2 cos t = e^{it} + e^{-it}
//! let f = TorusFunction::from_terms(1, &[(-1, Complex64::new(1.0, 0.0)), (1, Complex64::new(1.0, 0.0))]).unwrap();
//! assert!((lp_norm(&f, 4.0, 64).unwrap() - 6f64.powf(0.25)).abs() < 1e-12);
//! assert_eq!(f.project(Part::Minus).coefficient(-1), Complex64::new(1.0, 0.0));
//! ```

mod norms;
mod scan;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use norms::{
    default_grid_size, lp_norm, mixed_norm, ratio_forward, ratio_reverse, NormReport, TorusGrid,
};
pub use scan::{random_polynomial, scan_ratios, write_scan_csv, ScanRow};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum TorusError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("the function is identically zero")]
    ZeroFunction,
    #[error("bad grid: {0}")]
    Grid(String),
    #[error("bad coefficient data: {0}")]
    Format(String),
}

/// Which Riesz projection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    /// Frequencies `n >= 0`.
    Plus,
    /// Frequencies `n < 0`.
    Minus,
}

/// A trigonometric polynomial of degree at most `degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusFunction {
    degree: usize,
    /// `coeffs[n + degree]` is the coefficient of `e^{int}`.
    coeffs: Vec<Complex64>,
}

impl TorusFunction {
    pub fn zero(degree: usize) -> Self {
        TorusFunction { degree, coeffs: vec![Complex64::new(0.0, 0.0); 2 * degree + 1] }
    }

    /// From the dense list `c_{-N}, ..., c_N`.
    pub fn from_dense(degree: usize, coeffs: Vec<Complex64>) -> Result<Self, TorusError> {
        if coeffs.len() != 2 * degree + 1 {
            return Err(TorusError::Format(format!("degree {degree} needs {} coefficients, got {}", 2 * degree + 1, coeffs.len())));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(TorusError::Format("coefficients must be finite".into()));
        }
        Ok(TorusFunction { degree, coeffs })
    }

    /// From `(n, c_n)` terms; repeated frequencies add up.
    pub fn from_terms(degree: usize, terms: &[(i64, Complex64)]) -> Result<Self, TorusError> {
        let mut f = TorusFunction::zero(degree);
        for &(n, c) in terms {
            if n.unsigned_abs() as usize > degree {
                return Err(TorusError::Format(format!("frequency {n} exceeds degree {degree}")));
            }
            f.coeffs[(n + degree as i64) as usize] += c;
        }
        TorusFunction::from_dense(degree, f.coeffs)
    }

    /// `e^{int}`, of degree `|n|`.
    pub fn monomial(n: i64) -> Self {
        let degree = n.unsigned_abs() as usize;
        TorusFunction::from_terms(degree, &[(n, Complex64::new(1.0, 0.0))]).expect("frequency within degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `c_{-N}, ..., c_N`.
    pub fn dense(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `c_n`, zero outside `[-N, N]`.
    pub fn coefficient(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.degree {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[(n + self.degree as i64) as usize]
    }

    /// Nonzero terms as `(n, c_n)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let d = self.degree as i64;
        self.coeffs.iter().enumerate().filter(|(_, c)| **c != Complex64::new(0.0, 0.0)).map(move |(i, c)| (i as i64 - d, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == Complex64::new(0.0, 0.0))
    }

    /// The same function seen with a larger degree (zero padding).
    pub fn padded(&self, degree: usize) -> Self {
        if degree <= self.degree {
            return self.clone();
        }
        let mut out = TorusFunction::zero(degree);
        let off = degree - self.degree;
        out.coeffs[off..off + self.coeffs.len()].copy_from_slice(&self.coeffs);
        out
    }

    /// Riesz projection: `Plus` keeps `n >= 0`, `Minus` keeps `n < 0`.
    pub fn project(&self, part: Part) -> Self {
        let d = self.degree as i64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let keep = match part {
                    Part::Plus => i as i64 - d >= 0,
                    Part::Minus => i as i64 - d < 0,
                };
                if keep {
                    *c
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        TorusFunction { degree: self.degree, coeffs }
    }

    pub fn add(&self, other: &TorusFunction) -> Self {
        let degree = self.degree.max(other.degree);
        let (a, b) = (self.padded(degree), other.padded(degree));
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        TorusFunction { degree, coeffs }
    }

    pub fn scale(&self, k: f64) -> Self {
        TorusFunction { degree: self.degree, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// `f(e^{it})` by direct summation.
    pub fn eval(&self, t: f64) -> Complex64 {
        self.terms().map(|(n, c)| c * Complex64::from_polar(1.0, n as f64 * t)).sum()
    }

    /// Coefficient `l2` norm, equal to the `L^2` norm by Parseval.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Reads the JSON format `{"degree": N, "coefficients": [[n, re, im], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, TorusError> {
        let file: CoefficientFile = serde_json::from_str(text).map_err(|e| TorusError::Format(e.to_string()))?;
        let terms: Vec<(i64, Complex64)> =
            file.coefficients.iter().map(|&(n, re, im)| (n, Complex64::new(re, im))).collect();
        TorusFunction::from_terms(file.degree, &terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("coefficient file serializes")
    }
}

/// Serializes in the coefficient file format.
impl Serialize for TorusFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CoefficientFile { degree: self.degree, coefficients: self.terms().map(|(n, c)| (n, c.re, c.im)).collect() }
            .serialize(serializer)
    }
}

#[derive(Serialize, Deserialize)]
struct CoefficientFile {
    degree: usize,
    coefficients: Vec<(i64, f64, f64)>,
}
