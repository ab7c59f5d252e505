//! JSON and text views of solve reports.
//!
//! Both renderings draw on the same values: JSON carries full precision, text
//! shows 9 significant digits. Negative zero is printed as zero so that the
//! output does not depend on how a zero was reached.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

use crate::parse::{format_polynomial, format_real};
use crate::polynomial::ComplexPolynomial;
use crate::report::{DecompositionPlan, DecompositionTrace, Factorization, SolveReport};
use crate::verify::MatchReport;

/// Significant digits in text output.
pub const TEXT_DIGITS: usize = 9;

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexView {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexView {
    fn from(z: Complex64) -> Self {
        Self {
            re: clean(z.re),
            im: clean(z.im),
        }
    }
}

fn views(zs: &[Complex64]) -> Vec<ComplexView> {
    zs.iter().copied().map(ComplexView::from).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceView {
    pub plan: DecompositionPlan,
    pub shift_applied: f64,
    pub b: Vec<ComplexView>,
    pub c: Vec<ComplexView>,
    pub p: ComplexView,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f1: Option<ComplexView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f2: Option<ComplexView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolvent: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub resolvent_roots: Vec<ComplexView>,
    pub branch_note: String,
    pub special_case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inner: Option<Box<TraceView>>,
}

impl From<&DecompositionTrace> for TraceView {
    fn from(t: &DecompositionTrace) -> Self {
        Self {
            plan: t.plan,
            shift_applied: clean(t.shift_applied),
            b: views(&t.b),
            c: views(&t.c),
            p: t.p.into(),
            f1: t.f1.map(Into::into),
            f2: t.f2.map(Into::into),
            resolvent: t.resolvent.as_ref().map(|r| r.coeffs().iter().copied().map(clean).collect()),
            resolvent_roots: views(&t.resolvent_roots),
            branch_note: t.branch_note.clone(),
            special_case: t.special_case.as_str().to_string(),
            inner: t.inner.as_deref().map(|i| Box::new(i.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorizationView {
    pub factor1: Vec<ComplexView>,
    pub factor2: Vec<ComplexView>,
    pub identity_residual: f64,
}

impl From<&Factorization> for FactorizationView {
    fn from(f: &Factorization) -> Self {
        Self {
            factor1: views(f.factor1.coeffs()),
            factor2: views(f.factor2.coeffs()),
            identity_residual: f.identity_residual,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportView {
    pub degree: usize,
    pub method: String,
    pub roots: Vec<ComplexView>,
    pub max_residual: f64,
    pub special_case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationView>,
}

impl ReportView {
    /// Roots are sorted for display; the trace is included only on request.
    pub fn new(report: &SolveReport, with_trace: bool) -> Self {
        Self {
            degree: report.degree(),
            method: report.method.as_str().to_string(),
            roots: views(&report.sorted_roots()),
            max_residual: report.max_residual,
            special_case: report.special_case().as_str().to_string(),
            trace: report.trace.as_ref().filter(|_| with_trace).map(Into::into),
            factorization: report.factorization.as_ref().map(Into::into),
        }
    }
}

/// Pretty-printed JSON of a view. Views hold only finite numbers.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("views serialize")
}

pub fn report_json(report: &SolveReport, with_trace: bool) -> String {
    to_json(&ReportView::new(report, with_trace))
}

pub fn num(x: f64) -> String {
    format_real(x, TEXT_DIGITS)
}

/// `a + bi`, `a - bi`, or just `a` when the imaginary part is exactly zero.
pub fn complex(z: Complex64) -> String {
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        return num(re);
    }
    let sign = if im < 0.0 { '-' } else { '+' };
    if re == 0.0 {
        let mag = num(im.abs());
        return if im < 0.0 { format!("-{mag}i") } else { format!("{mag}i") };
    }
    format!("{} {sign} {}i", num(re), num(im.abs()))
}

fn complex_list(zs: &[Complex64]) -> String {
    zs.iter().map(|z| complex(*z)).collect::<Vec<_>>().join(", ")
}

fn complex_poly(p: &ComplexPolynomial) -> String {
    let n = p.degree();
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| match n - i {
            0 => format!("({})", complex(*c)),
            1 => format!("({}) x", complex(*c)),
            k => format!("({}) x^{k}", complex(*c)),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn write_trace(out: &mut String, t: &DecompositionTrace, indent: usize) {
    let pad = " ".repeat(indent);
    let mut line = |label: &str, value: String| {
        let _ = writeln!(out, "{pad}{label:<34}{value}");
    };
    let DecompositionPlan { n, m, k } = t.plan;
    line("plan (N, M, K):", format!("({n}, {m}, {k})"));
    line("special case:", t.special_case.to_string());
    line("shift applied (x -> x + r):", num(t.shift_applied));
    if let Some(f1) = t.f1 {
        line("f1 = b0 + c0:", complex(f1));
    }
    if let Some(f2) = t.f2 {
        line("f2 = b0 c0:", complex(f2));
    }
    for (j, b) in t.b.iter().enumerate() {
        line(&format!("b{j} (coefficient of V):"), complex(*b));
    }
    for (j, c) in t.c.iter().enumerate() {
        line(&format!("c{j} (coefficient of W):"), complex(*c));
    }
    line("p:", complex(t.p));
    if let Some(r) = &t.resolvent {
        line("resolvent cubic in b1:", format_polynomial(r, TEXT_DIGITS));
    }
    if !t.resolvent_roots.is_empty() {
        line("resolvent roots:", complex_list(&t.resolvent_roots));
    }
    if !t.branch_note.is_empty() {
        line("branch:", t.branch_note.clone());
    }
    if let Some(inner) = &t.inner {
        let _ = writeln!(out, "{pad}inner solve:");
        write_trace(out, inner, indent + 2);
    }
}

/// Human-readable report: sorted roots, residual, and optionally the trace.
pub fn report_text(report: &SolveReport, with_trace: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polynomial: {}", format_polynomial(&report.input, TEXT_DIGITS));
    let _ = writeln!(out, "degree: {}", report.degree());
    let _ = writeln!(out, "method: {}", report.method);
    let _ = writeln!(out, "special case: {}", report.special_case());
    let _ = writeln!(out, "roots:");
    for (i, z) in report.sorted_roots().iter().enumerate() {
        let _ = writeln!(out, "  x{} = {}", i + 1, complex(*z));
    }
    let _ = writeln!(out, "max residual: {}", num(report.max_residual));
    if let Some(f) = &report.factorization {
        let _ = writeln!(out, "factor 1: {}", complex_poly(&f.factor1));
        let _ = writeln!(out, "factor 2: {}", complex_poly(&f.factor2));
        let _ = writeln!(out, "identity residual: {}", num(f.identity_residual));
    }
    if with_trace {
        if let Some(t) = &report.trace {
            let _ = writeln!(out, "trace:");
            write_trace(&mut out, t, 2);
        }
    }
    out
}

/// One line per pair: `unified vs aberth: matched (max distance 1.2e-15)`.
pub fn match_line(left: &str, right: &str, m: &MatchReport, tol: f64) -> String {
    format!(
        "{left} vs {right}: {} (max distance {}, tolerance {})",
        if m.matched { "agree" } else { "DISAGREE" },
        num(m.max_distance),
        num(tol)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::Polynomial;
    use crate::unified::solve_unified;

    #[test]
    fn complex_formatting() {
        assert_eq!(complex(Complex64::new(1.0, 0.0)), "1");
        assert_eq!(complex(Complex64::new(-0.0, -0.0)), "0");
        assert_eq!(complex(Complex64::new(1.5, -2.0)), "1.5 - 2i");
        assert_eq!(complex(Complex64::new(0.0, 1.0)), "1i");
        assert_eq!(complex(Complex64::new(0.0, -1.0)), "-1i");
        assert_eq!(complex(Complex64::new(-1.0 / 3.0, 2.0)), "-0.333333333 + 2i");
    }

    #[test]
    fn json_keys_and_sorted_roots() {
        let report = solve_unified(&Polynomial::new(vec![1.0, -3.0, 2.0]).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report_json(&report, false)).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["degree", "factorization", "max_residual", "method", "roots", "special_case"]);
        assert_eq!(v["roots"][0]["re"], 1.0);
        assert_eq!(v["roots"][1]["re"], 2.0);
        assert_eq!(v["method"], "unified");
        let with_trace: serde_json::Value = serde_json::from_str(&report_json(&report, true)).unwrap();
        assert_eq!(with_trace["trace"]["plan"]["k"], 2);
    }

    #[test]
    fn text_and_json_agree_at_nine_digits() {
        let poly = Polynomial::new(vec![1.0, -2.049888, 3.1010205, 11.313708]).unwrap();
        let report = solve_unified(&poly).unwrap();
        let text = report_text(&report, true);
        let view = ReportView::new(&report, true);
        for r in &view.roots {
            assert!(text.contains(&num(r.re)), "{text}");
            assert!(text.contains(&num(r.im.abs())), "{text}");
        }
        assert!(text.contains("f1 = b0 + c0:"));
        assert!(text.contains(&num(view.max_residual)));
    }
}
