//! Residues along the divisors of a resolution, as integer linear forms in
//! the free parameters `α_1..α_r`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{is_positive_integer, Rational};
use crate::json;

/// Default shift bound for [`ResidueSystem::admissible_search`].
pub const DEFAULT_BOUND: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueRow {
    pub label: String,
    pub coeffs: Vec<i64>,
    /// Irreducible component of the divisor (as opposed to an exceptional divisor).
    pub is_component: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSystem {
    nparams: usize,
    rows: Vec<ResidueRow>,
}

/// Residue parameters `α_1..α_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueChoice(pub Vec<Rational>);

impl ResidueChoice {
    pub fn zero(r: usize) -> Self {
        ResidueChoice(vec![Rational::zero(); r])
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.0
    }
}

impl ResidueSystem {
    pub fn new(nparams: usize, rows: Vec<ResidueRow>) -> Result<Self> {
        if let Some(row) = rows.iter().find(|r| r.coeffs.len() != nparams) {
            return Err(Error::Dimension(format!(
                "row `{}` has {} coefficients, expected {nparams}",
                row.label,
                row.coeffs.len()
            )));
        }
        Ok(ResidueSystem { nparams, rows })
    }

    /// Unit rows `V1..Vs` plus the row at infinity `-(d_1,…,d_s)`.
    pub fn affine(degrees: &[i64]) -> Self {
        let s = degrees.len();
        let mut rows: Vec<ResidueRow> = (0..s)
            .map(|j| ResidueRow {
                label: format!("V{}", j + 1),
                coeffs: (0..s).map(|i| i64::from(i == j)).collect(),
                is_component: true,
            })
            .collect();
        rows.push(ResidueRow {
            label: "V0".into(),
            coeffs: degrees.iter().map(|d| -d).collect(),
            is_component: true,
        });
        ResidueSystem { nparams: s, rows }
    }

    pub fn with_row(mut self, label: &str, coeffs: Vec<i64>, is_component: bool) -> Result<Self> {
        self.rows.push(ResidueRow { label: label.into(), coeffs, is_component });
        ResidueSystem::new(self.nparams, self.rows)
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn rows(&self) -> &[ResidueRow] {
        &self.rows
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.nparams {
            return Err(Error::Dimension(format!(
                "residue choice has {len} entries, system has {} parameters",
                self.nparams
            )));
        }
        Ok(())
    }

    /// `ρ_i = Σ_j n_ij α_j` for every row, in row order.
    pub fn residues(&self, alpha: &ResidueChoice) -> Result<Vec<Rational>> {
        self.check_len(alpha.0.len())?;
        Ok(self.rows.iter().map(|row| dot(&row.coeffs, &alpha.0)).collect())
    }

    /// No residue is a strictly positive integer.
    pub fn is_admissible(&self, alpha: &ResidueChoice) -> Result<bool> {
        self.check_len(alpha.0.len())?;
        Ok(self.rows.iter().all(|row| !is_positive_integer(&dot(&row.coeffs, &alpha.0))))
    }

    /// First admissible `α = β + k` with integer shifts `|k_j| ≤ bound`,
    /// trying shifts by increasing `|k|₁`, then lexicographically.
    ///
    /// `None` only means nothing was found in the box.
    pub fn admissible_search(&self, beta: &[Rational], bound: u32) -> Result<Option<ResidueChoice>> {
        self.check_len(beta.len())?;
        let r = self.nparams;
        let b = bound as i64;
        for total in 0..=(b * r as i64) {
            let mut found = None;
            for_each_shift(r, b, total, &mut |k| {
                let alpha = ResidueChoice(
                    beta.iter()
                        .zip(k)
                        .map(|(x, &kj)| x + Rational::from_integer(BigInt::from(kj)))
                        .collect(),
                );
                if self.rows.iter().all(|row| !is_positive_integer(&dot(&row.coeffs, &alpha.0))) {
                    found = Some(alpha);
                    true
                } else {
                    false
                }
            });
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    pub fn from_json(v: &Value, ptr: &str) -> Result<Self> {
        let nparams = json::as_usize(json::field(v, ptr, "nparams")?, &json::child(ptr, "nparams"))?;
        let rptr = json::child(ptr, "rows");
        let mut rows = Vec::new();
        for (i, row) in json::as_array(json::field(v, ptr, "rows")?, &rptr)?.iter().enumerate() {
            let p = json::child(&rptr, i);
            let label = json::as_str(json::field(row, &p, "label")?, &json::child(&p, "label"))?.to_string();
            let cptr = json::child(&p, "coeffs");
            let coeffs = json::as_array(json::field(row, &p, "coeffs")?, &cptr)?
                .iter()
                .enumerate()
                .map(|(j, c)| json::as_i64(c, &json::child(&cptr, j)))
                .collect::<Result<Vec<_>>>()?;
            if coeffs.len() != nparams {
                return Err(Error::schema(cptr, format!("expected {nparams} coefficients")));
            }
            let is_component = match json::opt_field(row, "component") {
                Some(c) => json::as_bool(c, &json::child(&p, "component"))?,
                None => true,
            };
            rows.push(ResidueRow { label, coeffs, is_component });
        }
        Ok(ResidueSystem { nparams, rows })
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| json!({"label": r.label, "coeffs": r.coeffs, "component": r.is_component}))
            .collect();
        json!({"nparams": self.nparams, "rows": rows})
    }
}

/// The constant vector `(k/D, …, k/D)` of length `r`.
pub fn equimonodromic_beta(d: u64, k: u64, r: usize) -> Vec<Rational> {
    assert!(d >= 1 && k < d, "need 0 <= k < D");
    vec![Rational::new(BigInt::from(k), BigInt::from(d)); r]
}

fn dot(coeffs: &[i64], alpha: &[Rational]) -> Rational {
    coeffs
        .iter()
        .zip(alpha)
        .filter(|(c, _)| **c != 0)
        .map(|(&c, a)| a * Rational::from_integer(BigInt::from(c)))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Calls `f` on every `k ∈ [-b, b]^r` with `|k|₁ = total` in lexicographic
/// order, stopping early when `f` returns true.
fn for_each_shift(r: usize, b: i64, total: i64, f: &mut dyn FnMut(&[i64]) -> bool) -> bool {
    fn rec(k: &mut Vec<i64>, r: usize, b: i64, left: i64, f: &mut dyn FnMut(&[i64]) -> bool) -> bool {
        let pos = k.len();
        if pos == r {
            return left == 0 && f(k);
        }
        let rest = (r - pos - 1) as i64;
        for x in -b.min(left)..=b.min(left) {
            let remain = left - x.abs();
            if remain > rest * b {
                continue;
            }
            k.push(x);
            let stop = rec(k, r, b, remain, f);
            k.pop();
            if stop {
                return true;
            }
        }
        false
    }
    rec(&mut Vec::with_capacity(r), r, b, total, f)
}

/// `|k|₁` of the shift taking `beta` to `alpha`.
pub fn shift_norm(beta: &[Rational], alpha: &ResidueChoice) -> i64 {
    beta.iter()
        .zip(&alpha.0)
        .map(|(b, a)| {
            let d = (a - b).abs();
            num_traits::ToPrimitive::to_i64(&d.to_integer()).unwrap_or(i64::MAX)
        })
        .sum()
}
