use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{parse_rational, Rational};

/// Dense univariate polynomial with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Exact division by a monic divisor. Returns `None` when a remainder is left.
    pub fn div_exact_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        assert!(divisor.coeffs[dd].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return rem.iter().all(Zero::is_zero).then(|| IntPoly::new(Vec::new()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{mag}*x^{e}")?,
            }
        }
        Ok(())
    }
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cyclotomic_shared(n: u64) -> Arc<IntPoly> {
    if let Some(p) = cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut acc = IntPoly::x_pow_minus_one(n as usize);
    for d in (1..n).filter(|d| n % d == 0) {
        acc = acc
            .div_exact_monic(&cyclotomic_shared(d))
            .expect("cyclotomic polynomials of divisors divide x^n - 1");
    }
    let acc = Arc::new(acc);
    cache().write().unwrap().insert(n, acc.clone());
    acc
}

/// The `n`-th cyclotomic polynomial, obtained from `x^n - 1` by dividing out
/// the cyclotomic polynomials of all proper divisors.
pub fn cyclotomic_poly(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic_poly requires n >= 1");
    (*cyclotomic_shared(n)).clone()
}

/// Element of the cyclotomic field `Q(zeta_N)`, stored as the reduced
/// remainder of a polynomial in `zeta_N` modulo `Phi_N`.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    conductor: u64,
    coeffs: Vec<Rational>,
}

fn reduce_mod_phi(mut poly: Vec<Rational>, n: u64) -> Vec<Rational> {
    let phi = cyclotomic_shared(n);
    let dd = phi.degree().unwrap();
    if poly.len() > dd {
        for k in (dd..poly.len()).rev() {
            let c = std::mem::take(&mut poly[k]);
            if c.is_zero() {
                continue;
            }
            // x^k = x^(k-dd) * (x^dd), and x^dd = -(lower terms of Phi)
            for (j, pj) in phi.coeffs()[..dd].iter().enumerate() {
                if !pj.is_zero() {
                    poly[k - dd + j] -= &c * Rational::from_integer(pj.clone());
                }
            }
        }
    }
    poly.resize(dd, Rational::zero());
    poly
}

impl CyclotomicNumber {
    pub fn zero(conductor: u64) -> Self {
        let dim = euler_phi(conductor) as usize;
        CyclotomicNumber {
            conductor,
            coeffs: vec![Rational::zero(); dim],
        }
    }

    pub fn from_rational(conductor: u64, q: Rational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    /// `zeta_N^k` for any integer `k`.
    pub fn zeta_pow(conductor: u64, k: i64) -> Self {
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Self::from_poly(conductor, v)
    }

    /// Reduces an arbitrary polynomial in `zeta_N` (lowest degree first).
    pub fn from_poly(conductor: u64, poly: Vec<Rational>) -> Self {
        assert!(conductor >= 1);
        CyclotomicNumber {
            conductor,
            coeffs: reduce_mod_phi(poly, conductor),
        }
    }

    /// Builds `sum_k c_k zeta_N^k` from a vector indexed by `k mod N`.
    pub fn from_power_sums(conductor: u64, sums: Vec<Rational>) -> Self {
        Self::from_poly(conductor, sums)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-expresses the element in `Q(zeta_L)` for a multiple `L` of the conductor.
    pub fn lift(&self, target: u64) -> Self {
        assert!(target % self.conductor == 0, "lift target must be a multiple");
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); step * self.coeffs.len().max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Self::from_poly(target, poly)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = self.conductor.lcm(&other.conductor);
        (self.lift(l), other.lift(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CyclotomicNumber {
            conductor: a.conductor,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::from_poly(a.conductor, prod)
    }

    /// Multiplicative inverse; `None` for zero. Uses the extended Euclidean
    /// algorithm against `Phi_N`, which is irreducible over the rationals.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi: Vec<Rational> = cyclotomic_shared(self.conductor)
            .coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // invariant: s_i * self ≡ r_i (mod phi)
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = qpoly_divrem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant because Phi_N is irreducible
        let c = r1[0].recip();
        let s: Vec<Rational> = s1.into_iter().map(|x| x * &c).collect();
        Some(Self::from_poly(self.conductor, s))
    }

    fn to_wire(&self) -> CyclotomicWire {
        CyclotomicWire {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn qpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn qpoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &lead;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &c * y;
        }
        quot[k] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor;
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => format!("{c}"),
                1 => format!("({c})*z{n}"),
                _ => format!("({c})*z{n}^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicWire {
    conductor: u64,
    coeffs: Vec<String>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = CyclotomicWire::deserialize(d)?;
        if w.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let coeffs = w
            .coeffs
            .iter()
            .map(|c| parse_rational(c).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() != euler_phi(w.conductor) as usize {
            return Err(D::Error::custom("coefficient count must equal phi(conductor)"));
        }
        Ok(CyclotomicNumber::from_poly(w.conductor, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), ip(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ip(&[1, 1]));
        assert_eq!(cyclotomic_poly(5), ip(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly(6), ip(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ip(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(6).to_string(), "x^2 - x + 1");
    }

    #[test]
    fn phi_values() {
        let expect = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e);
        }
        assert_eq!(euler_phi(30), 8);
    }

    #[test]
    fn roots_of_unity_relations() {
        for n in [1u64, 2, 3, 5, 6, 7, 12] {
            assert_eq!(CyclotomicNumber::zeta_pow(n, n as i64), CyclotomicNumber::one(n));
            assert_eq!(
                CyclotomicNumber::zeta_pow(n, 1).mul(&CyclotomicNumber::zeta_pow(n, -1)),
                CyclotomicNumber::one(n)
            );
        }
        // zeta_5^{-1} - 1 is nonzero
        let z = CyclotomicNumber::zeta_pow(5, -1).sub(&CyclotomicNumber::one(5));
        assert!(!z.is_zero());
    }

    #[test]
    fn mixed_conductors_embed() {
        // zeta_6^2 = zeta_3 and zeta_4^2 = -1 = zeta_2
        assert_eq!(CyclotomicNumber::zeta_pow(6, 2), CyclotomicNumber::zeta_pow(3, 1));
        assert_eq!(CyclotomicNumber::zeta_pow(4, 2), CyclotomicNumber::zeta_pow(2, 1));
        let s = CyclotomicNumber::zeta_pow(3, 1).add(&CyclotomicNumber::zeta_pow(4, 1));
        assert_eq!(s.conductor(), 12);
        assert_eq!(
            s.sub(&CyclotomicNumber::zeta_pow(4, 1)),
            CyclotomicNumber::zeta_pow(3, 1)
        );
    }

    #[test]
    fn inverses() {
        let a = CyclotomicNumber::from_poly(7, vec![rat(2, 1), rat(-1, 3), rat(0, 1), rat(5, 2)]);
        let b = a.inv().unwrap();
        assert_eq!(a.mul(&b), CyclotomicNumber::one(7));
        assert!(CyclotomicNumber::zero(5).inv().is_none());
        let c = CyclotomicNumber::from_rational(1, rat(3, 4));
        assert_eq!(c.inv().unwrap(), CyclotomicNumber::from_rational(1, rat(4, 3)));
    }

    #[test]
    fn json_shape() {
        let z = CyclotomicNumber::zeta_pow(5, 1);
        let js = serde_json::to_string(&z).unwrap();
        assert_eq!(js, r#"{"conductor":5,"coeffs":["0","1","0","0"]}"#);
        let back: CyclotomicNumber = serde_json::from_str(&js).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<CyclotomicNumber>(r#"{"conductor":5,"coeffs":["1"]}"#).is_err());
    }
}
