//! Integer polynomial certificates for the obtuse and acute solutions.
//!
//! Each solution's arc parameter is `t₀ = 2·arctan α` where `α` is the
//! smallest positive root of an even, palindromic integer polynomial. The
//! polynomials are evaluated in `w = z²` with compensated Horner, carrying an
//! a-priori error bound so every sign used in a bracket is certified.

use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficients in `w = z²`, highest degree first; degree 24 in `z`.
const OBTUSE_W: [i64; 13] = [16, -992, 9689, -36232, 100908, -197080, 238166, -197080, 100908, -36232, 9689, -992, 16];

/// Coefficients in `w = z²`, highest degree first; degree 52 in `z`.
const ACUTE_W: [i64; 27] = [
    131072,
    -30081024,
    715784192,
    -10181738496,
    83609604096,
    -443259328512,
    1410471953408,
    -1858643071488,
    18137673285920,
    -14367112128688,
    56162265469488,
    -73041229883512,
    73382345772378,
    -122601623733111,
    73382345772378,
    -73041229883512,
    56162265469488,
    -14367112128688,
    18137673285920,
    -1858643071488,
    1410471953408,
    -443259328512,
    83609604096,
    -10181738496,
    715784192,
    -30081024,
    131072,
];

/// Width below which a sign-change bracket counts as certified.
pub const BRACKET_WIDTH: f64 = 1e-12;
/// Step of the scan showing no smaller positive root exists.
pub const SMALLEST_ROOT_SCAN_STEP: f64 = 1e-4;
/// Furthest a candidate may sit from the polynomial's root.
pub const MAX_CANDIDATE_OFFSET: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Obtuse,
    Acute,
}

impl CertificateKind {
    fn w_coefficients(&self) -> &'static [i64] {
        match self {
            CertificateKind::Obtuse => &OBTUSE_W,
            CertificateKind::Acute => &ACUTE_W,
        }
    }

    /// Degree in `z`.
    pub fn degree(&self) -> usize {
        2 * (self.w_coefficients().len() - 1)
    }

    /// All `degree + 1` coefficients in `z`, highest degree first, with the
    /// odd-degree zeros included.
    pub fn coefficients(&self) -> Vec<i64> {
        let w = self.w_coefficients();
        let mut out = Vec::with_capacity(2 * w.len() - 1);
        for (i, c) in w.iter().enumerate() {
            if i > 0 {
                out.push(0);
            }
            out.push(*c);
        }
        out
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Compensated Horner evaluation of `coeffs` (highest degree first) at `x`,
/// with the bound `|result - p(x)| ≤ bound`.
pub fn compensated_horner(coeffs: &[i64], x: f64) -> (f64, f64) {
    let u = f64::EPSILON / 2.0;
    let n = coeffs.len().saturating_sub(1) as f64;
    let gamma = |k: f64| k * u / (1.0 - k * u);

    let mut s = coeffs[0] as f64;
    let mut c = 0.0;
    let mut abs_sum = (coeffs[0] as f64).abs();
    for &a in &coeffs[1..] {
        let (p, pi) = two_prod(s, x);
        let (sn, sigma) = two_sum(p, a as f64);
        s = sn;
        c = c * x + (pi + sigma);
        abs_sum = abs_sum * x.abs() + (a as f64).abs();
    }
    let value = s + c;
    let g = gamma(2.0 * n);
    let bound = u * value.abs() + (g * g * abs_sum) * (1.0 + 2.0 * u);
    (value, bound)
}

fn eval_z(kind: CertificateKind, z: f64) -> (f64, f64) {
    compensated_horner(kind.w_coefficients(), z * z)
}

/// `Some(sign)` once the sign at `z` is certified by the error bound.
fn certified_sign(kind: CertificateKind, z: f64) -> Option<f64> {
    let (v, bound) = eval_z(kind, z);
    (v.abs() > bound).then(|| v.signum())
}

/// Evaluates the certificate polynomial at `z`.
pub fn evaluate(kind: CertificateKind, z: f64) -> f64 {
    eval_z(kind, z).0
}

/// Derivative in `z`, by plain Horner on the `w` coefficients.
fn derivative_z(kind: CertificateKind, z: f64) -> f64 {
    let w = z * z;
    let coeffs = kind.w_coefficients();
    let deg = coeffs.len() - 1;
    // d/dz P(z²) = 2z · P'(w)
    let mut acc = 0.0;
    for (i, c) in coeffs[..deg].iter().enumerate() {
        acc = acc * w + (*c as f64) * (deg - i) as f64;
    }
    2.0 * z * acc
}

/// A sign-change bracket of width below [`BRACKET_WIDTH`] around the
/// smallest positive root of a certificate polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolynomialCertificate {
    pub kind: CertificateKind,
    pub degree: usize,
    pub coefficients: Vec<i64>,
    /// The candidate that was checked.
    pub candidate: f64,
    /// Midpoint of the certified bracket.
    pub root: f64,
    pub bracket: (f64, f64),
    pub value_at_candidate: f64,
    /// True once `(0, bracket.0)` was scanned without finding a sign change.
    pub smallest_positive: bool,
}

impl PolynomialCertificate {
    pub fn bracket_width(&self) -> f64 {
        self.bracket.1 - self.bracket.0
    }

    pub fn contains(&self, z: f64) -> bool {
        self.bracket.0 <= z && z <= self.bracket.1
    }
}

/// True when the coefficient list reads the same reversed and every
/// odd-degree coefficient is zero.
pub fn is_even_palindrome(coefficients: &[i64]) -> bool {
    let n = coefficients.len();
    let palindromic = coefficients.iter().eq(coefficients.iter().rev());
    // Highest degree first, so the odd powers sit at odd indices when n - 1 is even.
    let even = (n - 1).is_multiple_of(2) && coefficients.iter().skip(1).step_by(2).all(|c| *c == 0);
    palindromic && even
}

/// Certifies that `candidate` is (to within [`MAX_CANDIDATE_OFFSET`]) the
/// smallest positive root of the `kind` polynomial.
pub fn verify_certificate(kind: CertificateKind, candidate: f64) -> Result<PolynomialCertificate> {
    let coefficients = kind.coefficients();
    if !is_even_palindrome(&coefficients) {
        return Err(Error::CertificateFailure("coefficients are not an even palindrome".into()));
    }
    if candidate <= 0.0 || !candidate.is_finite() {
        return Err(Error::CertificateFailure(format!("candidate {candidate} is not positive")));
    }

    let value_at_candidate = evaluate(kind, candidate);
    let slope = derivative_z(kind, candidate);
    let newton_step = (value_at_candidate / slope).abs();
    if newton_step.is_nan() || newton_step > MAX_CANDIDATE_OFFSET {
        return Err(Error::CertificateFailure(format!(
            "residual {value_at_candidate:e} puts the nearest root {newton_step:e} away"
        )));
    }

    let (mut lo, mut hi, mut s_lo) = initial_bracket(kind, candidate)?;
    while hi - lo >= BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match certified_sign(kind, mid) {
            Some(s) if s == s_lo => {
                lo = mid;
                s_lo = s;
            }
            Some(_) => hi = mid,
            None => break,
        }
    }
    if hi - lo >= BRACKET_WIDTH {
        return Err(Error::CertificateFailure(format!(
            "could not narrow the bracket below {BRACKET_WIDTH:e} (got {:e})",
            hi - lo
        )));
    }

    let smallest_positive = no_sign_change_below(kind, lo)?;
    Ok(PolynomialCertificate {
        kind,
        degree: kind.degree(),
        coefficients,
        candidate,
        root: 0.5 * (lo + hi),
        bracket: (lo, hi),
        value_at_candidate,
        smallest_positive,
    })
}

/// Symmetric bracket about the candidate, widened until the signs differ.
fn initial_bracket(kind: CertificateKind, candidate: f64) -> Result<(f64, f64, f64)> {
    let mut h = 0.4 * BRACKET_WIDTH;
    while h <= MAX_CANDIDATE_OFFSET {
        let (lo, hi) = (candidate - h, candidate + h);
        if let (Some(a), Some(b)) = (certified_sign(kind, lo), certified_sign(kind, hi)) {
            if a != b {
                return Ok((lo, hi, a));
            }
        }
        h *= 2.0;
    }
    Err(Error::CertificateFailure(format!("no certified sign change within {MAX_CANDIDATE_OFFSET:e} of {candidate}")))
}

fn no_sign_change_below(kind: CertificateKind, upto: f64) -> Result<bool> {
    let base =
        certified_sign(kind, 0.0).ok_or_else(|| Error::CertificateFailure("sign at 0 is not certified".into()))?;
    let steps = (upto / SMALLEST_ROOT_SCAN_STEP).floor() as usize;
    let grid = (1..=steps).map(|i| i as f64 * SMALLEST_ROOT_SCAN_STEP).chain([upto]);
    for z in grid {
        match certified_sign(kind, z) {
            Some(s) if s == base => {}
            Some(_) => return Err(Error::CertificateFailure(format!("sign change below the candidate, near z = {z}"))),
            None => return Err(Error::CertificateFailure(format!("sign at z = {z} is not certified"))),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_lists_are_even_palindromes() {
        for kind in [CertificateKind::Obtuse, CertificateKind::Acute] {
            let c = kind.coefficients();
            assert_eq!(c.len(), kind.degree() + 1);
            let rev: Vec<_> = c.iter().rev().copied().collect();
            assert_eq!(rev, c);
            assert!(c.iter().skip(1).step_by(2).all(|v| *v == 0));
            assert!(is_even_palindrome(&c));
        }
        assert_eq!(CertificateKind::Obtuse.degree(), 24);
        assert_eq!(CertificateKind::Acute.degree(), 52);
        assert!(!is_even_palindrome(&[1, 2, 1]));
        assert!(!is_even_palindrome(&[1, 0, 2]));
    }

    #[test]
    fn coefficients_match_leading_terms() {
        let c = CertificateKind::Obtuse.coefficients();
        assert_eq!(&c[..5], &[16, 0, -992, 0, 9689]);
        assert_eq!(c[12], 238166);
        let c = CertificateKind::Acute.coefficients();
        assert_eq!(c[0], 131072);
        assert_eq!(c[26], -122601623733111);
    }

    #[test]
    fn compensated_horner_is_exact_on_integers() {
        // (w - 3)(w + 2) = w² - w - 6
        assert_eq!(compensated_horner(&[1, -1, -6], 3.0).0, 0.0);
        assert_eq!(compensated_horner(&[1, -1, -6], 5.0).0, 14.0);
    }

    #[test]
    fn palindrome_gives_reciprocal_symmetry() {
        for kind in [CertificateKind::Obtuse, CertificateKind::Acute] {
            for z in [0.3, 0.7, 1.1] {
                let deg = kind.degree() as i32;
                let lhs = evaluate(kind, z);
                let rhs = z.powi(deg) * evaluate(kind, 1.0 / z);
                assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0));
            }
        }
    }

    #[test]
    fn certifies_obtuse_root() {
        let cert = verify_certificate(CertificateKind::Obtuse, 0.140_112_185_203_362_26).unwrap();
        assert!(cert.bracket_width() < BRACKET_WIDTH);
        assert!(cert.contains(0.140_112_185_203_362_26));
        assert!(cert.smallest_positive);
        assert!((cert.root - 0.140112).abs() < 1e-6);
    }

    #[test]
    fn certifies_acute_root() {
        let cert = verify_certificate(CertificateKind::Acute, 0.069_912_813_072_796_02).unwrap();
        assert!(cert.bracket_width() < BRACKET_WIDTH);
        assert!(cert.contains(0.069_912_813_072_796_02));
        assert!(cert.smallest_positive);
    }

    #[test]
    fn rejects_bad_candidates() {
        assert!(matches!(verify_certificate(CertificateKind::Obtuse, 0.15), Err(Error::CertificateFailure(_))));
        // A genuine root that is not the smallest one.
        let second = 0.382849;
        let err = verify_certificate(CertificateKind::Obtuse, second);
        assert!(matches!(err, Err(Error::CertificateFailure(_))));
        assert!(matches!(verify_certificate(CertificateKind::Acute, -0.0699), Err(Error::CertificateFailure(_))));
    }

    #[test]
    fn rejects_larger_root_even_when_accurate() {
        // Refine the second positive root of the obtuse polynomial first.
        let root = crate::numeric::bisect(|z| evaluate(CertificateKind::Obtuse, z), 0.38, 0.385, 1e-15).unwrap();
        let err = verify_certificate(CertificateKind::Obtuse, root).unwrap_err();
        assert!(err.to_string().contains("sign change below"), "{err}");
    }
}
