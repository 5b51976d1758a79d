//! Division and gcd for Laurent polynomials.
//!
//! Both reduce to ordinary polynomials by a unit shift. The gcd is the
//! classical recursive content / primitive-part scheme: pick the highest
//! variable present, split off contents (gcds of coefficient polynomials in
//! the remaining variables, computed recursively), and run a primitive
//! pseudo-remainder sequence in the main variable.

use std::collections::BTreeMap;

use super::LaurentPoly;

/// Exact division of polynomials with nonnegative exponents, by repeated
/// cancellation of lex-leading terms.
pub(super) fn poly_exact_div(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let (lm_b, lc_b) = b.terms.last_key_value()?;
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero(a.nvars);
    while let Some((m, c)) = rem.terms.last_key_value() {
        let e: Vec<i64> = m.0.iter().zip(&lm_b.0).map(|(x, y)| x - y).collect();
        if e.iter().any(|&x| x < 0) {
            return None;
        }
        let coef = c / lc_b;
        let step = LaurentPoly::monomial(a.nvars, e, coef);
        rem = &rem - &(&step * b);
        quot = &quot + &step;
    }
    Some(quot)
}

pub(super) fn laurent_exact_div(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() || a.nvars != b.nvars {
        return None;
    }
    if a.is_zero() {
        return Some(a.clone());
    }
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let q = poly_exact_div(&a.shift_to_polynomial(), &b.shift_to_polynomial())?;
    let back: Vec<i64> = ma.iter().zip(&mb).map(|(x, y)| x - y).collect();
    Some(q.mul_monomial(&back))
}

fn degree_in(p: &LaurentPoly, v: usize) -> i64 {
    p.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
}

/// Highest-index variable with positive degree in either argument.
fn main_var(a: &LaurentPoly, b: &LaurentPoly) -> Option<usize> {
    (0..a.nvars)
        .rev()
        .find(|&v| degree_in(a, v) > 0 || degree_in(b, v) > 0)
}

/// Coefficients of `p` as a polynomial in `t_v`, keyed by the power of `t_v`.
fn split_var(p: &LaurentPoly, v: usize) -> BTreeMap<i64, LaurentPoly> {
    let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (m, c) in &p.terms {
        let mut rest = m.clone();
        rest.0[v] = 0;
        out.entry(m.0[v])
            .or_insert_with(|| LaurentPoly::zero(p.nvars))
            .add_term(rest, c.clone());
    }
    out
}

fn leading_coeff_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    split_var(p, v)
        .pop_last()
        .map(|(_, c)| c)
        .unwrap_or_else(|| LaurentPoly::zero(p.nvars))
}

/// Content of `p` with respect to `t_v`: gcd of its coefficient polynomials.
pub(super) fn content_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero(p.nvars);
    for c in split_var(p, v).into_values() {
        g = poly_gcd(&g, &c);
        if g.is_constant() && !g.is_zero() {
            break;
        }
    }
    g
}

pub(super) fn primitive_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    poly_exact_div(p, &content_in(p, v)).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` in `t_v`.
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> LaurentPoly {
    let db = degree_in(b, v);
    let lb = leading_coeff_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() && degree_in(&r, v) >= db {
        let dr = degree_in(&r, v);
        let lr = leading_coeff_in(&r, v);
        let mut shift = vec![0; a.nvars];
        shift[v] = dr - db;
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift));
    }
    r
}

/// Gcd of polynomials with nonnegative exponents, returned normalized.
pub(super) fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.normalize_unit();
    }
    if b.is_zero() {
        return a.normalize_unit();
    }
    let Some(v) = main_var(a, b) else {
        return LaurentPoly::one(a.nvars);
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let content = poly_gcd(&ca, &cb);
    let mut f = poly_exact_div(a, &ca).expect("content divides");
    let mut g = poly_exact_div(b, &cb).expect("content divides");
    if degree_in(&f, v) < degree_in(&g, v) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, v);
        f = g;
        g = primitive_in(&r, v);
    }
    (&content * &primitive_in(&f, v)).normalize_unit()
}

pub(super) fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    poly_gcd(&a.shift_to_polynomial(), &b.shift_to_polynomial())
}
