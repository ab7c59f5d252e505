//! Reading and writing univariate polynomials in the usual textbook notation.
//!
//! Grammar, whitespace insensitive:
//!
//! ```text
//! poly   := sign? term (('+' | '-') term)*
//! term   := number ('*'? 'x' ('^' uint)?)? | 'x' ('^' uint)?
//! number := digits ('.' digits?)? (('e' | 'E') sign? digits)? | '.' digits ...
//! ```
//!
//! Implicit (`3x`) and explicit (`3*x`) products are both accepted. The only
//! variable is `x`. Terms with the same power accumulate.

use std::fmt;

use crate::error::Result;
use crate::polynomial::Polynomial;

/// Largest exponent the parser accepts.
pub const MAX_EXPONENT: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownVariable,
}

/// Where and why parsing failed. `position` is a character offset into the
/// input and never exceeds its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub position: usize,
    pub message: String,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseDiagnostic {}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Self {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, position: usize, message: impl Into<String>) -> ParseDiagnostic {
        ParseDiagnostic {
            position: position.min(self.chars.len()),
            message: message.into(),
            kind: ParseErrorKind::Syntax,
        }
    }

    fn unexpected(&self, position: usize) -> ParseDiagnostic {
        match self.chars.get(position) {
            None => self.error(position, "unexpected end of input"),
            Some('x') => self.error(position, "unexpected 'x', expected an operator"),
            Some(c) if c.is_alphabetic() => ParseDiagnostic {
                position,
                message: format!("unknown variable '{c}', only 'x' is supported"),
                kind: ParseErrorKind::UnknownVariable,
            },
            Some(c) => self.error(position, format!("unexpected character '{c}'")),
        }
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.pos - start
    }

    /// Decimal literal starting at the current (non-whitespace) position.
    fn number(&mut self) -> std::result::Result<f64, ParseDiagnostic> {
        let start = self.pos;
        let mut mantissa_digits = self.digits();
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            mantissa_digits += self.digits();
        }
        if mantissa_digits == 0 {
            return Err(self.error(start, "malformed number"));
        }
        // An exponent marker only counts when digits follow; otherwise the
        // 'e' is left for the caller to report as a stray variable.
        if matches!(self.chars.get(self.pos), Some('e' | 'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.chars.get(self.pos), Some('+' | '-')) {
                self.pos += 1;
            }
            if self.digits() == 0 {
                self.pos = save;
            }
        }
        let literal: String = self.chars[start..self.pos].iter().collect();
        literal
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| self.error(start, format!("number '{literal}' is out of range")))
    }

    fn exponent(&mut self) -> std::result::Result<usize, ParseDiagnostic> {
        let start = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.pos,
            _ => return Err(self.error(self.pos, "malformed exponent: expected a nonnegative integer after '^'")),
        };
        self.digits();
        if self.chars.get(self.pos) == Some(&'.') {
            return Err(self.error(self.pos, "malformed exponent: exponents must be integers"));
        }
        let literal: String = self.chars[start..self.pos].iter().collect();
        match literal.parse::<usize>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(e),
            _ => Err(self.error(start, format!("malformed exponent: largest supported power is {MAX_EXPONENT}"))),
        }
    }

    /// One term without its sign: returns (coefficient, power).
    fn term(&mut self) -> std::result::Result<(f64, usize), ParseDiagnostic> {
        let coefficient = match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '.' => Some(self.number()?),
            _ => None,
        };
        let mut saw_star = false;
        if coefficient.is_some() && self.peek() == Some('*') {
            self.pos += 1;
            saw_star = true;
        }
        if self.peek() == Some('x') {
            self.pos += 1;
            let power = if self.peek() == Some('^') {
                self.pos += 1;
                self.exponent()?
            } else {
                1
            };
            return Ok((coefficient.unwrap_or(1.0), power));
        }
        match coefficient {
            Some(c) if !saw_star => Ok((c, 0)),
            Some(_) => Err(self.error(self.pos, "expected 'x' after '*'")),
            None => {
                let at = self.pos;
                Err(self.unexpected(at))
            }
        }
    }
}

/// Parses text such as `"x^3 - 2.049888x^2 + 3.1010205x + 11.313708"` into
/// highest-first coefficients. The result is not normalized.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let mut parser = Parser::new(text);
    if parser.peek().is_none() {
        return Err(parser.error(parser.pos, "empty input").into());
    }

    let mut terms: Vec<(f64, usize)> = Vec::new();
    let mut sign = match parser.peek() {
        Some('-') => {
            parser.pos += 1;
            -1.0
        }
        Some('+') => {
            parser.pos += 1;
            1.0
        }
        _ => 1.0,
    };
    loop {
        let (coefficient, power) = parser.term()?;
        terms.push((sign * coefficient, power));
        match parser.peek() {
            None => break,
            Some('+') => sign = 1.0,
            Some('-') => sign = -1.0,
            Some(_) => {
                let at = parser.pos;
                return Err(parser.unexpected(at).into());
            }
        }
        parser.pos += 1;
    }

    let degree = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut coeffs = vec![0.0; degree + 1];
    for (c, power) in terms {
        coeffs[degree - power] += c;
    }
    Polynomial::new(coeffs)
}

/// Renders a positive finite value with `sig` significant digits, as a plain
/// decimal when the exponent is moderate and in `e` notation otherwise.
fn format_magnitude(value: f64, sig: usize) -> String {
    let sci = format!("{:.*e}", sig - 1, value);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    let mut digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    while digits.len() > 1 && digits.ends_with('0') {
        digits.pop();
    }
    if !(-7..=20).contains(&exp) {
        let (head, rest) = digits.split_at(1);
        return if rest.is_empty() {
            format!("{head}e{exp}")
        } else {
            format!("{head}.{rest}e{exp}")
        };
    }
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        return format!("0.{zeros}{digits}");
    }
    let int_len = exp as usize + 1;
    if digits.len() <= int_len {
        format!("{digits}{}", "0".repeat(int_len - digits.len()))
    } else {
        format!("{}.{}", &digits[..int_len], &digits[int_len..])
    }
}

/// Signed version of the magnitude formatter used for polynomial terms;
/// zero (of either sign) prints as `0`.
pub fn format_real(value: f64, sig_digits: usize) -> String {
    let sig = sig_digits.clamp(1, 17);
    if value == 0.0 {
        "0".to_string()
    } else if !value.is_finite() {
        value.to_string()
    } else if value < 0.0 {
        format!("-{}", format_magnitude(-value, sig))
    } else {
        format_magnitude(value, sig)
    }
}

/// Canonical descending-power rendering, e.g. `x^2 - 3x + 2`.
///
/// Zero terms are dropped and unit coefficients on `x` terms are elided. At
/// 17 significant digits the output parses back to identical coefficients.
pub fn format_polynomial(poly: &Polynomial, sig_digits: usize) -> String {
    let sig = sig_digits.clamp(1, 17);
    let coeffs = poly.coeffs();
    let degree = coeffs.len() - 1;
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let power = degree - i;
        let negative = c < 0.0;
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = c.abs();
        if power == 0 || magnitude != 1.0 {
            out.push_str(&format_magnitude(magnitude, sig));
        }
        match power {
            0 => {}
            1 => out.push('x'),
            _ => {
                out.push_str("x^");
                out.push_str(&power.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
