//! The shared element grammar and canonical printing.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! element := ['-'] term (('+'|'-') term)*
//! term    := coef | [coef '*'] factor ('*' factor)*
//! factor  := ('x'|'d'|'s') INDEX ['^' NAT]
//! coef    := NAT ['/' NAT]
//! ```
//!
//! Indices are 1-based and bounded by the ring signature. Factors may appear
//! in any order; products are taken as written and normally ordered, so
//! `d1*x1` parses to `x1*d1 + 1`. Canonical printing sorts terms descending
//! under the default order and factors as x-block, d-block, s-block.

use crate::monomial::Monomial;
use crate::poly::{CommPoly, Rational};
use crate::weyl::{RingSignature, WeylElement};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("index out of range at byte {pos}: {var} (ring has {max})")]
    IndexOutOfRange { pos: usize, var: String, max: usize },
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn error(&self, msg: &str) -> ParseError {
        ParseError::SyntaxError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn natural(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let numer = self.natural()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let denom = self.natural()?;
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.natural()?;
            u32::try_from(e).map_err(|_| self.error("exponent too large"))
        } else {
            Ok(1)
        }
    }
}

/// One parsed factor: which generator, and its power.
enum Factor {
    Var { index: usize, pow: u32 },
    Coef(Rational),
}

fn parse_factor(
    sc: &mut Scanner,
    sig: RingSignature,
    allow: &FactorSet,
) -> Result<Factor, ParseError> {
    match sc.peek() {
        Some(c) if c.is_ascii_digit() => Ok(Factor::Coef(sc.coefficient()?)),
        Some(c @ (b'x' | b'd' | b's')) => {
            let at = sc.pos;
            sc.bump();
            let idx_big = sc.natural()?;
            let idx = usize::try_from(&idx_big).map_err(|_| sc.error("index too large"))?;
            let (max, base) = match c {
                b'x' if allow.x => (sig.n, 0),
                b'd' if allow.d => (sig.n, sig.n),
                b's' if allow.s => (sig.r, 2 * sig.n),
                _ => {
                    return Err(ParseError::SyntaxError {
                        pos: at,
                        msg: format!("factor '{}' not allowed here", c as char),
                    })
                }
            };
            if idx == 0 || idx > max {
                return Err(ParseError::IndexOutOfRange {
                    pos: at,
                    var: format!("{}{}", c as char, idx_big),
                    max,
                });
            }
            let pow = sc.exponent()?;
            Ok(Factor::Var {
                index: base + idx - 1,
                pow,
            })
        }
        _ => Err(sc.error("expected a coefficient or a factor")),
    }
}

struct FactorSet {
    x: bool,
    d: bool,
    s: bool,
}

fn parse_with(src: &str, sig: RingSignature, allow: FactorSet) -> Result<WeylElement, ParseError> {
    let mut sc = Scanner::new(src);
    let mut acc = WeylElement::zero(sig);
    let mut first = true;
    loop {
        let sign = match sc.peek() {
            Some(b'+') if !first => {
                sc.bump();
                Rational::one()
            }
            Some(b'-') => {
                sc.bump();
                -Rational::one()
            }
            Some(_) if first => Rational::one(),
            Some(_) => return Err(sc.error("expected '+' or '-' between terms")),
            None if first => return Err(sc.error("empty element")),
            None => break,
        };
        first = false;
        // one term: product of factors in written order
        let mut term = WeylElement::constant(sig, sign);
        loop {
            match parse_factor(&mut sc, sig, &allow)? {
                Factor::Coef(c) => term = term.scale(&c),
                Factor::Var { index, pow } => {
                    let f = WeylElement::term(
                        sig,
                        Monomial::var_pow(sig.nvars(), index, pow),
                        Rational::one(),
                    );
                    term = term.mul(&f);
                }
            }
            if sc.peek() == Some(b'*') {
                sc.bump();
            } else {
                break;
            }
        }
        acc = acc.add(&term);
        if sc.peek().is_none() {
            break;
        }
    }
    Ok(acc)
}

/// Parse an element of the relative Weyl algebra.
pub fn parse_element(src: &str, sig: RingSignature) -> Result<WeylElement, ParseError> {
    parse_with(
        src,
        sig,
        FactorSet {
            x: true,
            d: true,
            s: true,
        },
    )
}

/// Parse a polynomial in Q[x_1..x_n] (no d or s factors).
pub fn parse_x_poly(src: &str, n: usize) -> Result<CommPoly, ParseError> {
    let sig = RingSignature::new(n, 0);
    let e = parse_with(
        src,
        sig,
        FactorSet {
            x: true,
            d: false,
            s: false,
        },
    )?;
    Ok(weyl_x_to_comm(&e))
}

/// Parse a polynomial in Q[x_1..x_n, s_1] (the f^s numerator ring).
pub fn parse_xs_poly(src: &str, n: usize) -> Result<CommPoly, ParseError> {
    let sig = RingSignature::new(n, 1);
    let e = parse_with(
        src,
        sig,
        FactorSet {
            x: true,
            d: false,
            s: true,
        },
    )?;
    // repack [x | d | s] exponents into [x | s] with the d-block zero
    let mut out = CommPoly::zero(n + 1);
    for (m, c) in e.terms() {
        let mut exps = vec![0u32; n + 1];
        for i in 0..n {
            exps[i] = m.exp(i);
        }
        exps[n] = m.exp(2 * n);
        out = out.add(&CommPoly::term(n + 1, Monomial::new(exps), c.clone()));
    }
    Ok(out)
}

fn weyl_x_to_comm(e: &WeylElement) -> CommPoly {
    let n = e.signature().n;
    let mut out = CommPoly::zero(n);
    for (m, c) in e.terms() {
        let exps: Vec<u32> = (0..n).map(|i| m.exp(i)).collect();
        out = out.add(&CommPoly::term(n, Monomial::new(exps), c.clone()));
    }
    out
}

fn push_coef(out: &mut String, c: &Rational, lead: bool, has_factors: bool) {
    let abs = c.abs();
    if lead {
        if c.is_negative() {
            out.push('-');
        }
    } else if c.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if abs.is_one() && has_factors {
        return;
    }
    out.push_str(&abs.to_string());
    if has_factors {
        out.push('*');
    }
}

fn push_factors(out: &mut String, mon: &Monomial, name: &dyn Fn(usize) -> String) {
    let mut first = true;
    for v in 0..mon.nvars() {
        let e = mon.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&name(v));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

fn print_terms(terms: Vec<(&Monomial, &Rational)>, name: &dyn Fn(usize) -> String) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        push_coef(&mut out, c, i == 0, !m.is_one());
        push_factors(&mut out, m, name);
    }
    out
}

/// Canonical form: terms descending under the default order; factors printed
/// x-block, d-block, s-block with 1-based indices.
pub fn print_element(e: &WeylElement) -> String {
    let sig = e.signature();
    let order = sig.default_order();
    let mut terms: Vec<(&Monomial, &Rational)> = e.terms().collect();
    terms.sort_by(|(a, _), (b, _)| order.cmp_mon(b, a));
    let n = sig.n;
    let name = move |v: usize| -> String {
        if v < n {
            format!("x{}", v + 1)
        } else if v < 2 * n {
            format!("d{}", v - n + 1)
        } else {
            format!("s{}", v - 2 * n + 1)
        }
    };
    print_terms(terms, &name)
}

/// Canonical form of a polynomial with caller-supplied variable names.
pub fn print_poly_with(p: &CommPoly, name: &dyn Fn(usize) -> String) -> String {
    let order = crate::order::MonomialOrder::degrevlex(p.nvars());
    let mut terms: Vec<(&Monomial, &Rational)> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| order.cmp_mon(b, a));
    print_terms(terms, name)
}

/// Canonical form of a polynomial in Q[x_1..x_n].
pub fn print_x_poly(p: &CommPoly) -> String {
    print_poly_with(p, &|v| format!("x{}", v + 1))
}

/// Canonical form of a polynomial in Q[x_1..x_n, s_1] (s is the last variable).
pub fn print_xs_poly(p: &CommPoly) -> String {
    let n = p.nvars() - 1;
    print_poly_with(p, &move |v| {
        if v < n {
            format!("x{}", v + 1)
        } else {
            "s1".to_string()
        }
    })
}

/// Canonical form in the graded ring Q[x_1..x_n, xi_1..xi_n, s_1..s_r].
pub fn print_graded_poly(p: &CommPoly, n: usize) -> String {
    print_poly_with(p, &move |v| {
        if v < n {
            format!("x{}", v + 1)
        } else if v < 2 * n {
            format!("xi{}", v - n + 1)
        } else {
            format!("s{}", v - 2 * n + 1)
        }
    })
}
