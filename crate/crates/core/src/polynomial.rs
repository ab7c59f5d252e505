//! Real and complex polynomials stored highest degree first.

use std::fmt;
use std::ops::{Add, Mul};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::ensure_finite;

/// Real-coefficient polynomial, `coeffs[0]` is the leading coefficient.
///
/// Leading zeros are kept as given. Only [`Polynomial::monic_normalize`]
/// strips them, so the stored length always reflects what the caller wrote.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

/// Complex-coefficient polynomial, highest degree first. Used for the
/// constituent factors, whose coefficients may be complex even for real input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

fn horner<T>(coeffs: &[T], x: T, zero: T) -> T
where
    T: Copy + Add<Output = T> + Mul<Output = T>,
{
    coeffs.iter().fold(zero, |acc, &c| acc * x + c)
}

/// In-place Taylor shift on highest-first coefficients: returns `Q(x) = P(x + r)`.
fn taylor_shift<T>(coeffs: &mut [T], r: T)
where
    T: Copy + Add<Output = T> + Mul<Output = T>,
{
    let n = coeffs.len();
    if n < 2 {
        return;
    }
    // Repeated synthetic division by (x - r); after pass i the trailing
    // i + 1 coefficients are final.
    for i in 0..n - 1 {
        for j in 1..n - i {
            coeffs[j] = coeffs[j] + r * coeffs[j - 1];
        }
    }
}

/// `a + b` as an unevaluated sum `(s, e)` with `s = fl(a + b)`.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Taylor shift of real coefficients carried in double-double, so each
/// output coefficient is rounded once instead of accumulating one rounding
/// per synthetic-division step.
fn taylor_shift_compensated(coeffs: &mut [f64], r: f64) {
    let n = coeffs.len();
    let mut lo = vec![0.0; n];
    for i in 0..n.saturating_sub(1) {
        for j in 1..n - i {
            let (h, l) = (coeffs[j - 1], lo[j - 1]);
            let p = r * h;
            let p_err = r.mul_add(h, -p) + r * l;
            let (s, e) = two_sum(coeffs[j], p);
            let tail = e + lo[j] + p_err;
            let (hi, rest) = two_sum(s, tail);
            coeffs[j] = hi;
            lo[j] = rest;
        }
    }
}

fn multiply<T>(a: &[T], b: &[T], zero: T) -> Vec<T>
where
    T: Copy + Add<Output = T> + Mul<Output = T>,
{
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

impl Polynomial {
    /// Builds a polynomial from highest-first coefficients. Every coefficient
    /// must be finite and the list must not be empty.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NumericOverflow {
                context: "polynomial coefficients",
            });
        }
        Ok(Self { coeffs })
    }

    /// Monic polynomial `x^N + tail[0] x^{N-1} + ... + tail[N-1]`.
    pub fn monic_from_tail(tail: &[f64]) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(1.0);
        coeffs.extend_from_slice(tail);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    fn leading_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| **c == 0.0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.leading_zeros() == self.coeffs.len()
    }

    /// Degree ignoring leading zeros; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        let stripped = self.coeffs.len() - self.leading_zeros();
        stripped.saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.first() == Some(&1.0)
    }

    /// Monic coefficients below the leading one, `[a_{N-1}, ..., a_0]`.
    pub fn tail(&self) -> &[f64] {
        &self.coeffs[1..]
    }

    /// `max(1, max |a_j|)` over all stored coefficients.
    pub fn coefficient_scale(&self) -> f64 {
        crate::numeric::unit_scale(&self.coeffs)
    }

    pub fn evaluate(&self, x: Complex64) -> Result<Complex64> {
        let lifted: Vec<Complex64> = self.coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
        ensure_finite(horner(&lifted, x, Complex64::new(0.0, 0.0)), "polynomial evaluation")
    }

    pub fn evaluate_real(&self, x: f64) -> f64 {
        horner(&self.coeffs, x, 0.0)
    }

    /// Strips leading zeros and divides through by the leading coefficient.
    pub fn monic_normalize(&self) -> Result<Polynomial> {
        let skip = self.leading_zeros();
        if skip == self.coeffs.len() {
            return Err(Error::ZeroPolynomial);
        }
        let lead = self.coeffs[skip];
        let coeffs: Vec<f64> = std::iter::once(1.0)
            .chain(self.coeffs[skip + 1..].iter().map(|c| c / lead))
            .collect();
        Polynomial::new(coeffs)
    }

    /// `Q(x) = P(x + r)` by Taylor shift.
    pub fn shift(&self, r: f64) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        taylor_shift_compensated(&mut coeffs, r);
        Polynomial { coeffs }
    }

    /// Divides out `(x - root)` by synthetic division.
    ///
    /// Fails with [`Error::NotARoot`] when `|P(root)|` exceeds
    /// `eps_residual * coefficient_scale`. The remainder is discarded.
    pub fn deflate(&self, root: Complex64, eps_residual: f64) -> Result<ComplexPolynomial> {
        let residual = self.evaluate(root)?.norm();
        let allowed = eps_residual * self.coefficient_scale();
        if residual > allowed {
            return Err(Error::NotARoot { residual, allowed });
        }
        ComplexPolynomial::from_real(self).deflate_unchecked(root)
    }

    pub fn derivative(&self) -> Polynomial {
        let n = self.coeffs.len();
        if n <= 1 {
            return Polynomial { coeffs: vec![0.0] };
        }
        let coeffs = self.coeffs[..n - 1]
            .iter()
            .enumerate()
            .map(|(i, c)| c * (n - 1 - i) as f64)
            .collect();
        Polynomial { coeffs }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        Polynomial {
            coeffs: multiply(&self.coeffs, &other.coeffs, 0.0),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_polynomial(self, 17))
    }
}

impl ComplexPolynomial {
    /// Leading coefficient must be nonzero.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        match coeffs.first() {
            None => Err(Error::ZeroPolynomial),
            Some(c) if c.re == 0.0 && c.im == 0.0 && coeffs.len() > 1 => Err(Error::ZeroPolynomial),
            Some(_) => {
                crate::numeric::ensure_all_finite(&coeffs, "complex polynomial coefficients")?;
                Ok(Self { coeffs })
            }
        }
    }

    pub fn from_real(poly: &Polynomial) -> Self {
        Self {
            coeffs: poly.coeffs().iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let one = Complex64::new(1.0, 0.0);
        let coeffs = roots.iter().fold(vec![one], |acc, &r| multiply(&acc, &[one, -r], Complex64::new(0.0, 0.0)));
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn evaluate(&self, x: Complex64) -> Result<Complex64> {
        ensure_finite(horner(&self.coeffs, x, Complex64::new(0.0, 0.0)), "polynomial evaluation")
    }

    pub fn mul(&self, other: &ComplexPolynomial) -> ComplexPolynomial {
        ComplexPolynomial {
            coeffs: multiply(&self.coeffs, &other.coeffs, Complex64::new(0.0, 0.0)),
        }
    }

    /// `Q(x) = P(x + r)`.
    pub fn shift(&self, r: f64) -> ComplexPolynomial {
        let mut coeffs = self.coeffs.clone();
        taylor_shift(&mut coeffs, Complex64::new(r, 0.0));
        ComplexPolynomial { coeffs }
    }

    pub(crate) fn deflate_unchecked(&self, root: Complex64) -> Result<ComplexPolynomial> {
        let n = self.coeffs.len();
        if n < 2 {
            return Err(Error::UnsupportedDegree {
                degree: 0,
                min: 1,
                max: usize::MAX,
            });
        }
        let mut quotient = Vec::with_capacity(n - 1);
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in &self.coeffs[..n - 1] {
            acc = acc * root + c;
            quotient.push(acc);
        }
        ComplexPolynomial::new(quotient)
    }

    /// Largest `|self_j - other_j|` over aligned coefficients; `None` on degree mismatch.
    pub fn max_deviation_from(&self, other: &Polynomial) -> Option<f64> {
        if self.coeffs.len() != other.coeffs().len() {
            return None;
        }
        Some(
            self.coeffs
                .iter()
                .zip(other.coeffs())
                .map(|(a, &b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }
}
