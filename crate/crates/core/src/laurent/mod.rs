//! The Laurent polynomial ring `Q[t_1^±1, …, t_s^±1]`.
//!
//! Polynomials are sparse maps from exponent vectors to nonzero rational
//! coefficients. Units of the ring are the nonzero scalar multiples of
//! monomials, so most answers (gcds, characteristic polynomials) are only
//! defined up to a unit; [`LaurentPoly::normalize_unit`] picks the canonical
//! representative used throughout the crate.

mod gcd;
mod text;
mod torsion;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

pub use text::factor_display;
pub use torsion::{torsion_points, TorsionPoint};

/// Exponent vector of a Laurent monomial; negative entries allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Graded-lex key: total degree first, then lexicographic.
    fn grlex_key(&self) -> (i64, &[i64]) {
        (self.total_degree(), &self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `t_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exponents: Vec<i64>, coeff: Rational) -> Self {
        assert_eq!(exponents.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exponents), coeff);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero scalars and zero.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e == 0))
    }

    /// True for the units of the ring: a single nonzero term.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, exponents: &[i64]) -> Rational {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(format!(
                "polynomials over {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exponents: &[i64]) -> Self {
        let shift = Monomial(exponents.to_vec());
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.mul(&shift), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Componentwise minimum exponent over all terms (zeros for the zero polynomial).
    pub fn min_exponents(&self) -> Vec<i64> {
        let mut mins: Option<Vec<i64>> = None;
        for m in self.terms.keys() {
            match &mut mins {
                None => mins = Some(m.0.clone()),
                Some(v) => v.iter_mut().zip(&m.0).for_each(|(a, &b)| *a = (*a).min(b)),
            }
        }
        mins.unwrap_or_else(|| vec![0; self.nvars])
    }

    /// Multiplies by the monomial that makes every variable's minimum exponent zero.
    pub fn shift_to_polynomial(&self) -> Self {
        let neg: Vec<i64> = self.min_exponents().iter().map(|e| -e).collect();
        self.mul_monomial(&neg)
    }

    /// Leading term in graded-lex order.
    pub fn grlex_leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| a.0.grlex_key().cmp(&b.0.grlex_key()))
    }

    /// Canonical representative of the unit class: minimum exponents zero,
    /// integer coefficients with content one, positive graded-lex leading
    /// coefficient.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let shifted = self.shift_to_polynomial();
        let den_lcm = shifted
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let content = shifted
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&den_lcm / c.denom()))));
        let mut out = shifted.scale(&Rational::new(den_lcm, content));
        if out.grlex_leading().is_some_and(|(_, c)| c.is_negative()) {
            out = -out;
        }
        out
    }

    /// Formal partial derivative in variable `v`.
    pub fn derivative(&self, v: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e != 0 {
                let mut m2 = m.clone();
                m2.0[v] -= 1;
                out.add_term(m2, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Exact quotient in the Laurent ring, or `None` if `divisor` does not divide.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        gcd::laurent_exact_div(self, divisor)
    }

    /// True iff `self` divides `other` in the Laurent ring.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.exact_div(self).is_some()
    }

    /// Normalized greatest common divisor (unit class). `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(gcd::laurent_gcd(self, other))
    }

    /// Substitutes `t_j = exp(-2πi·beta_j)` exactly.
    pub fn evaluate_at_torsion(&self, point: &TorsionPoint) -> Result<crate::exact::CyclotomicNumber> {
        torsion::evaluate(self, point)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
