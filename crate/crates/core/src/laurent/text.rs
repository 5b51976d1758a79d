//! Text grammar for Laurent polynomials and factored display.
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := digits ['/' digits]
//! factor := 't' digits ['^' ['-'] digits]
//! ```
//!
//! Whitespace is ignored. In a one-variable ring `t` is accepted as an alias
//! for `t1`, and is also how that variable is printed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{gcd, LaurentPoly, Monomial};
use crate::error::{Error, Result};
use crate::exact::Rational;

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    nvars: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, nvars: usize) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            idx: 0,
            nvars,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.src.len(), |&(p, _)| p)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.idx;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.idx += 1;
        }
        if start == self.idx {
            return None;
        }
        let s: String = self.chars[start..self.idx].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.idx += 1;
                Some(false)
            }
            Some('-') | Some('−') => {
                self.idx += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn factor(&mut self, exps: &mut [i64]) -> Result<()> {
        let start = self.pos();
        if self.peek() != Some('t') {
            return Err(self.err("expected a variable `tK`"));
        }
        self.idx += 1;
        let index = match self.digits() {
            Some(k) => k,
            None if self.nvars == 1 => BigInt::one(),
            None => return Err(self.err("expected variable index after `t`")),
        };
        let var = usize::try_from(&index).ok().filter(|&k| k >= 1 && k <= self.nvars);
        let Some(var) = var else {
            return Err(Error::UnknownVariable {
                name: format!("t{index}"),
                nvars: self.nvars,
            });
        };
        let mut e = 1i64;
        if self.peek() == Some('^') {
            self.idx += 1;
            let neg = match self.peek() {
                Some('-') | Some('−') => {
                    self.idx += 1;
                    true
                }
                _ => false,
            };
            let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            e = i64::try_from(&d).map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent out of range".into(),
            })?;
            if neg {
                e = -e;
            }
        }
        exps[var - 1] += e;
        Ok(())
    }

    fn term(&mut self) -> Result<(Vec<i64>, Rational)> {
        let mut exps = vec![0; self.nvars];
        let mut coeff = Rational::one();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.digits().unwrap();
            let d = if self.peek() == Some('/') {
                self.idx += 1;
                self.digits().ok_or_else(|| self.err("expected denominator"))?
            } else {
                BigInt::one()
            };
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            coeff = Rational::new(n, d);
            if self.peek() != Some('*') {
                return Ok((exps, coeff));
            }
            self.idx += 1;
        }
        self.factor(&mut exps)?;
        while self.peek() == Some('*') {
            self.idx += 1;
            self.factor(&mut exps)?;
        }
        Ok((exps, coeff))
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.nvars);
        if self.peek().is_none() {
            return Err(self.err("empty polynomial"));
        }
        let mut first = true;
        loop {
            let neg = match self.sign() {
                Some(n) => n,
                None if first => false,
                None => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let (e, c) = self.term()?;
            out.add_term(Monomial(e), if neg { -c } else { c });
            if self.peek().is_none() {
                return Ok(out);
            }
        }
    }
}

impl LaurentPoly {
    /// Parses the polynomial grammar over `nvars` variables.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        Parser::new(text, nvars).poly()
    }

    fn var_name(&self, i: usize) -> String {
        if self.nvars == 1 {
            "t".to_string()
        } else {
            format!("t{}", i + 1)
        }
    }

    fn render(&self, spaced: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.grlex_key().cmp(&a.0.grlex_key()));
        let mut s = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg, spaced) {
                (0, true, _) => s.push('-'),
                (0, false, _) => {}
                (_, true, true) => s.push_str(" - "),
                (_, false, true) => s.push_str(" + "),
                (_, true, false) => s.push('-'),
                (_, false, false) => s.push('+'),
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.var_name(i)),
                    _ => factors.push(format!("{}^{e}", self.var_name(i))),
                }
            }
            if factors.is_empty() || !mag.is_one() {
                factors.insert(0, mag.to_string());
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// Compact rendering without spaces, as used inside factored output.
    pub fn to_compact_string(&self) -> String {
        self.render(false)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

/// Square-free decomposition of a polynomial primitive in `t_v` (Yun).
fn squarefree_in(f: &LaurentPoly, v: usize) -> Vec<(LaurentPoly, u32)> {
    let mut out = Vec::new();
    let df = f.derivative(v);
    let b = gcd::poly_gcd(f, &df);
    let mut c = gcd::poly_exact_div(f, &b).expect("gcd divides");
    let mut d = &gcd::poly_exact_div(&df, &b).expect("gcd divides") - &c.derivative(v);
    let mut i = 1;
    while !c.is_constant() {
        let a = gcd::poly_gcd(&c, &d);
        c = gcd::poly_exact_div(&c, &a).expect("gcd divides");
        d = &gcd::poly_exact_div(&d, &a).expect("gcd divides") - &c.derivative(v);
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Splits a normalized polynomial into contents along successive variables.
fn content_pieces(p: &LaurentPoly, out: &mut Vec<LaurentPoly>) {
    if p.is_constant() {
        return;
    }
    let v = (0..p.nvars)
        .rev()
        .find(|&v| p.terms.keys().any(|m| m.0[v] > 0))
        .expect("non-constant polynomial has a variable");
    let c = gcd::content_in(p, v);
    let pp = gcd::poly_exact_div(p, &c).expect("content divides").normalize_unit();
    content_pieces(&c, out);
    if !pp.is_constant() {
        out.push(pp);
    }
}

/// Factored text for a polynomial up to units, e.g. `(t1-1)*(t2-1)^2`.
///
/// Factors come from content splitting and square-free decomposition, so they
/// are not necessarily irreducible. Zero prints as `0`, units as `1`.
pub fn factor_display(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let p = p.normalize_unit();
    let mut pieces = Vec::new();
    content_pieces(&p, &mut pieces);
    let mut mult: BTreeMap<(usize, i64, String), (LaurentPoly, u32)> = BTreeMap::new();
    for piece in pieces {
        let v = (0..piece.nvars)
            .rev()
            .find(|&v| piece.terms.keys().any(|m| m.0[v] > 0))
            .unwrap();
        for (f, k) in squarefree_in(&piece, v) {
            let f = f.normalize_unit();
            let deg = f.grlex_leading().map_or(0, |(m, _)| m.total_degree());
            let key = (f.num_terms(), deg, f.to_compact_string());
            mult.entry(key).or_insert((f, 0)).1 += k;
        }
    }
    if mult.is_empty() {
        return "1".into();
    }
    let mut keys: Vec<_> = mult.into_iter().collect();
    keys.sort_by(|a, b| (a.0 .1, &a.0 .2).cmp(&(b.0 .1, &b.0 .2)));
    keys.into_iter()
        .map(|(_, (f, k))| {
            let body = if f.num_terms() > 1 {
                format!("({})", f.to_compact_string())
            } else {
                f.to_compact_string()
            };
            if k > 1 {
                format!("{body}^{k}")
            } else {
                body
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}
