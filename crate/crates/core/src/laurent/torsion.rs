use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::exact::{frac_part, CyclotomicNumber, Rational};

/// A torus point of finite order, `lambda_j = exp(-2πi·beta_j)`, stored by
/// its residue classes `beta_j ∈ [0, 1)` with `level·beta_j` integral.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorsionPoint {
    level: u64,
    beta: Vec<Rational>,
}

impl TorsionPoint {
    /// Point with `beta_j = numerators[j] / level`, reduced mod 1.
    pub fn new(level: u64, numerators: &[i64]) -> Self {
        assert!(level >= 1, "level must be positive");
        let beta = numerators
            .iter()
            .map(|&k| Rational::new(BigInt::from(k.rem_euclid(level as i64)), BigInt::from(level)))
            .collect();
        TorsionPoint { level, beta }
    }

    /// Accepts arbitrary rationals whose denominators divide `level`.
    pub fn from_beta(level: u64, beta: &[Rational]) -> Result<Self> {
        if level == 0 {
            return Err(Error::Precondition("torsion level must be positive".into()));
        }
        let lvl = BigInt::from(level);
        let mut out = Vec::with_capacity(beta.len());
        for b in beta {
            if !(&lvl % b.denom()).is_zero() {
                return Err(Error::Precondition(format!(
                    "beta component {b} is not of level {level}"
                )));
            }
            out.push(frac_part(b));
        }
        Ok(TorsionPoint { level, beta: out })
    }

    /// Smallest level at which `beta` (taken mod 1) is torsion.
    pub fn from_beta_minimal(beta: &[Rational]) -> Self {
        let level = beta
            .iter()
            .fold(BigInt::from(1), |acc, b| acc.lcm(b.denom()))
            .to_u64()
            .expect("level fits in u64");
        TorsionPoint {
            level,
            beta: beta.iter().map(frac_part).collect(),
        }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn beta(&self) -> &[Rational] {
        &self.beta
    }

    pub fn dim(&self) -> usize {
        self.beta.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.beta.iter().all(Zero::is_zero)
    }

    /// `level·beta_j` as integers in `0..level`.
    pub fn numerators(&self) -> Vec<i64> {
        let lvl = Rational::from_integer(BigInt::from(self.level));
        self.beta
            .iter()
            .map(|b| (b * &lvl).to_integer().to_i64().unwrap())
            .collect()
    }

    /// The point `beta ↦ -beta mod 1` (complex conjugate / inverse).
    pub fn inverse(&self) -> Self {
        let nums: Vec<i64> = self.numerators().iter().map(|k| -k).collect();
        TorsionPoint::new(self.level, &nums)
    }

    pub fn beta_strings(&self) -> Vec<String> {
        self.beta.iter().map(|b| b.to_string()).collect()
    }
}

impl fmt::Display for TorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.beta_strings().join(","))
    }
}

impl Serialize for TorsionPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.beta_strings().serialize(s)
    }
}

/// All `level^dim` points of level `level`, in lexicographic order of beta.
pub fn torsion_points(level: u64, dim: usize) -> Vec<TorsionPoint> {
    assert!(level >= 1, "level must be positive");
    let total = (level as usize).pow(dim as u32);
    let mut out = Vec::with_capacity(total);
    let mut nums = vec![0i64; dim];
    for _ in 0..total {
        out.push(TorsionPoint::new(level, &nums));
        for j in (0..dim).rev() {
            nums[j] += 1;
            if nums[j] < level as i64 {
                break;
            }
            nums[j] = 0;
        }
    }
    out
}

pub(super) fn evaluate(p: &LaurentPoly, point: &TorsionPoint) -> Result<CyclotomicNumber> {
    if p.nvars() != point.dim() {
        return Err(Error::Dimension(format!(
            "polynomial in {} variables evaluated at a point of dimension {}",
            p.nvars(),
            point.dim()
        )));
    }
    let n = point.level;
    let nums = point.numerators();
    let mut sums = vec![Rational::zero(); n as usize];
    for (m, c) in p.terms() {
        // t^e ↦ zeta_N^{-Σ e_j·k_j}
        let e: i128 = m
            .exponents()
            .iter()
            .zip(&nums)
            .map(|(&a, &k)| a as i128 * k as i128)
            .sum();
        let idx = (-e).rem_euclid(n as i128) as usize;
        sums[idx] += c;
    }
    Ok(CyclotomicNumber::from_power_sums(n, sums))
}
