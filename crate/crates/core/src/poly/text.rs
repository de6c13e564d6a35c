//! Plain-text polynomial syntax.
//!
//! Variables are `x1`, `x2`, ...; coefficients are integers or fractions
//! `p/q`; powers use `^`; `*` between factors is optional. An ideal is a
//! comma-separated list of polynomials (newlines are whitespace, `#` starts a
//! comment). Printing goes through [`Polynomial`]'s `Display`, and
//! `parse_polynomial(&p.to_string())` returns `p` again.

use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use super::polynomial::{Polynomial, Term};
use super::rational::Rational;
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn peek(&mut self) -> Option<u8> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn digits(&mut self) -> &'a str {
        self.peek();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            input: self.src.to_string(),
            position: self.pos,
            message: msg.into(),
        }
    }
}

fn parse_term(lx: &mut Lexer<'_>) -> Result<Term> {
    let mut coeff = Rational::ONE;
    let mut mono = Monomial::one();
    let mut factors = 0;
    loop {
        match lx.peek() {
            Some(b'0'..=b'9') => {
                let num = lx.digits();
                let mut text = num.to_string();
                if lx.peek() == Some(b'/') {
                    lx.bump();
                    let den = lx.digits();
                    if den.is_empty() {
                        return Err(lx.error("expected denominator after `/`"));
                    }
                    text = format!("{num}/{den}");
                }
                let r: Rational = text.parse().map_err(|_| lx.error("bad number"))?;
                coeff = &coeff * &r;
            }
            Some(b'x') => {
                lx.bump();
                let idx = lx.digits();
                let i: usize = idx
                    .parse()
                    .map_err(|_| lx.error("expected variable index after `x`"))?;
                if i == 0 || i > MAX_VARS {
                    return Err(lx.error(format!("variable index must be in 1..={MAX_VARS}")));
                }
                let mut e = 1u32;
                if lx.peek() == Some(b'^') {
                    lx.bump();
                    e = lx
                        .digits()
                        .parse()
                        .map_err(|_| lx.error("expected exponent after `^`"))?;
                }
                mono = mono.mul(&Monomial::var_pow(i - 1, e));
            }
            _ => break,
        }
        factors += 1;
        if lx.peek() == Some(b'*') {
            lx.bump();
            if !matches!(lx.peek(), Some(b'0'..=b'9') | Some(b'x')) {
                return Err(lx.error("expected factor after `*`"));
            }
        }
    }
    if factors == 0 {
        return Err(lx.error("expected a term"));
    }
    Ok((mono, coeff))
}

fn parse_sum(lx: &mut Lexer<'_>) -> Result<Polynomial> {
    let mut terms = Vec::new();
    let mut sign = Rational::ONE;
    if lx.peek() == Some(b'-') {
        lx.bump();
        sign = -Rational::ONE;
    } else if lx.peek() == Some(b'+') {
        lx.bump();
    }
    loop {
        let (m, c) = parse_term(lx)?;
        terms.push((m, &c * &sign));
        match lx.peek() {
            Some(b'+') => {
                lx.bump();
                sign = Rational::ONE;
            }
            Some(b'-') => {
                lx.bump();
                sign = -Rational::ONE;
            }
            _ => break,
        }
    }
    let n = terms
        .iter()
        .map(|t| t.0.nvars_used())
        .max()
        .unwrap_or(1)
        .max(1);
    Ok(Polynomial::from_terms(terms, &MonomialOrder::grevlex(n)))
}

pub fn parse_polynomial(s: &str) -> Result<Polynomial> {
    let mut lx = Lexer { src: s, pos: 0 };
    let p = parse_sum(&mut lx)?;
    if lx.peek().is_some() {
        return Err(lx.error("unexpected trailing input"));
    }
    Ok(p)
}

fn strip_comments(s: &str) -> String {
    s.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses a comma-separated generator list.
pub fn parse_polynomial_list(s: &str) -> Result<Vec<Polynomial>> {
    let clean = strip_comments(s);
    let trimmed = clean.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    inner
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(parse_polynomial)
        .collect()
}

pub fn format_polynomial_list(polys: &[Polynomial]) -> String {
    polys
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_common_shapes() {
        let p = parse_polynomial("x3^2 - x1*x4").unwrap();
        assert_eq!(p.to_string(), "x3^2 - x1*x4");
        let q = parse_polynomial("2x1x2 + -3/4 *x2^2 - 1").unwrap_err();
        assert!(matches!(q, Error::Parse { .. }));
        let r = parse_polynomial(" -x1*x4 + x3^2 ").unwrap();
        assert_eq!(r, p);
        let s = parse_polynomial("2x1x2 - 3/4*x2^2 - 1 + 1").unwrap();
        assert_eq!(s.to_string(), "2*x1*x2 - 3/4*x2^2");
        assert_eq!(parse_polynomial("0").unwrap().to_string(), "0");
        assert_eq!(parse_polynomial("x1 - x1").unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x0", "x1 +", "x1 ** x2", "y1", "x1^", "1/0", "x13"] {
            assert!(parse_polynomial(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn ideal_lists() {
        let gens = parse_polynomial_list("(x5^2, x4*x5,\n # comment\n x3^2 - x1*x4)").unwrap();
        assert_eq!(gens.len(), 3);
        assert_eq!(format_polynomial_list(&gens), "x5^2, x4*x5, x3^2 - x1*x4");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (
            proptest::collection::vec(0u32..4, 1..5),
            -20i64..20,
            1i64..7,
        );
        proptest::collection::vec(term, 0..6).prop_map(|ts| {
            let o = MonomialOrder::grevlex(5);
            Polynomial::from_terms(
                ts.into_iter()
                    .map(|(e, n, d)| (Monomial::from_exponents(&e), Rational::new(n, d)))
                    .collect(),
                &o,
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_poly()) {
            let text = p.to_string();
            let back = parse_polynomial(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
