//! End-to-end invariants of a scenario: twisted cohomology at torsion local
//! systems, characteristic-variety scans, Milnor monodromy polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::aomoto::{GradedAlgebra, OneForm};
use crate::error::{Error, Result};
use crate::exact::{cyclotomic_poly, Rational};
use crate::exec::Execution;
use crate::json;
use crate::laurent::{torsion_points, TorsionPoint};
use crate::residue::{equimonodromic_beta, ResidueChoice, ResidueSystem};

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub components: usize,
    pub degrees: Vec<u64>,
    pub algebra: GradedAlgebra,
    pub residue_system: ResidueSystem,
    /// `r × dim A^1`: row `j` is the one-form contributed by `α_j`.
    pub omega_map: Vec<Vec<Rational>>,
    pub include_infinity: bool,
    pub intersection_points: Option<Vec<Vec<i64>>>,
    /// Largest shift any residue may receive, whatever bound the caller asks for.
    pub max_shift: Option<u32>,
}

/// Twisted cohomology together with the residues used to compute it.
#[derive(Clone, Debug, PartialEq)]
pub struct Twisted {
    pub alpha: ResidueChoice,
    pub dims: Vec<usize>,
}

impl Scenario {
    pub fn from_json(v: &Value) -> Result<Self> {
        let name = json::as_str(json::field(v, "", "name")?, "/name")?.to_string();
        let components = json::as_usize(json::field(v, "", "components")?, "/components")?;
        let degrees = json::as_array(json::field(v, "", "degrees")?, "/degrees")?
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let p = json::child("/degrees", i);
                match json::as_u64(d, &p)? {
                    0 => Err(Error::schema(p, "degrees must be positive")),
                    d => Ok(d),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if degrees.len() != components {
            return Err(Error::schema("/degrees", format!("expected {components} entries")));
        }
        let algebra = GradedAlgebra::from_json(json::field(v, "", "algebra")?, "/algebra")?;
        let residue_system = ResidueSystem::from_json(json::field(v, "", "residue_system")?, "/residue_system")?;
        let r = residue_system.nparams();
        let n1 = algebra.dim(1);
        let rows = json::as_array(json::field(v, "", "omega_map")?, "/omega_map")?;
        if rows.len() != r {
            return Err(Error::schema("/omega_map", format!("expected {r} rows")));
        }
        let mut omega_map = Vec::with_capacity(r);
        for (i, row) in rows.iter().enumerate() {
            let p = json::child("/omega_map", i);
            let row = json::as_array(row, &p)?;
            if row.len() != n1 {
                return Err(Error::schema(&p, format!("expected {n1} entries (dim A^1)")));
            }
            omega_map.push(
                row.iter()
                    .enumerate()
                    .map(|(j, c)| json::as_rational(c, &json::child(&p, j)))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let include_infinity = match json::opt_field(v, "milnor") {
            Some(m) => match json::opt_field(m, "include_infinity") {
                Some(b) => json::as_bool(b, "/milnor/include_infinity")?,
                None => false,
            },
            None => false,
        };
        let intersection_points = match json::opt_field(v, "intersection_points") {
            Some(pts) => {
                let mut out = Vec::new();
                for (i, pt) in json::as_array(pts, "/intersection_points")?.iter().enumerate() {
                    let p = json::child("/intersection_points", i);
                    let ks = json::as_array(pt, &p)?
                        .iter()
                        .enumerate()
                        .map(|(j, k)| json::as_i64(k, &json::child(&p, j)))
                        .collect::<Result<Vec<_>>>()?;
                    if ks.len() != components {
                        return Err(Error::schema(p, format!("expected {components} multiplicities")));
                    }
                    out.push(ks);
                }
                Some(out)
            }
            None => None,
        };
        let max_shift = match json::opt_field(v, "max_shift") {
            Some(m) => Some(json::as_u64(m, "/max_shift")? as u32),
            None => None,
        };
        Ok(Scenario {
            name,
            components,
            degrees,
            algebra,
            residue_system,
            omega_map,
            include_infinity,
            intersection_points,
            max_shift,
        })
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Scenario::from_json(&serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "components": self.components,
            "degrees": self.degrees,
            "algebra": self.algebra.to_json(),
            "residue_system": self.residue_system.to_json(),
            "omega_map": self.omega_map.iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "milnor": {"include_infinity": self.include_infinity},
        });
        if let Some(pts) = &self.intersection_points {
            v["intersection_points"] = json!(pts);
        }
        if let Some(m) = self.max_shift {
            v["max_shift"] = json!(m);
        }
        v
    }

    /// Schema checks beyond parsing plus graded-commutativity of the algebra.
    pub fn validate(&self) -> Result<()> {
        self.algebra.validate()
    }

    pub fn nparams(&self) -> usize {
        self.residue_system.nparams()
    }

    pub fn betti(&self) -> Vec<usize> {
        self.algebra.betti()
    }

    /// `Σ d_j`, plus one when the line at infinity counts.
    pub fn milnor_order(&self) -> u64 {
        self.degrees.iter().sum::<u64>() + u64::from(self.include_infinity)
    }

    pub fn effective_bound(&self, bound: u32) -> u32 {
        self.max_shift.map_or(bound, |m| m.min(bound))
    }

    /// `ω_α = Σ_j α_j · omega_map[j]`.
    pub fn one_form(&self, alpha: &ResidueChoice) -> Result<OneForm> {
        if alpha.0.len() != self.nparams() {
            return Err(Error::Dimension(format!(
                "{} residue parameters given, scenario has {}",
                alpha.0.len(),
                self.nparams()
            )));
        }
        let mut w = vec![Rational::zero(); self.algebra.dim(1)];
        for (a, row) in alpha.0.iter().zip(&self.omega_map) {
            if a.is_zero() {
                continue;
            }
            for (wi, c) in w.iter_mut().zip(row) {
                *wi += a * c;
            }
        }
        Ok(OneForm(w))
    }

    /// Aomoto cohomology for a given residue choice, admissible or not.
    pub fn aomoto_dims(&self, alpha: &ResidueChoice) -> Result<Vec<usize>> {
        self.algebra.cohomology_dims(&self.one_form(alpha)?)
    }

    /// `dim H^*(U, L_λ)` at the local system with residue classes `beta`.
    pub fn twisted_cohomology(&self, beta: &[Rational], bound: u32) -> Result<Twisted> {
        let bound = self.effective_bound(bound);
        let alpha = self
            .residue_system
            .admissible_search(beta, bound)?
            .ok_or_else(|| Error::Inconclusive { beta: beta.to_vec(), bound })?;
        let dims = self.aomoto_dims(&alpha)?;
        Ok(Twisted { alpha, dims })
    }

    pub fn charvar_scan(&self, level: u64, degree: usize, bound: u32) -> Result<CharVarScan> {
        self.charvar_scan_with(level, degree, bound, Execution::default())
    }

    /// Buckets every level-`level` torsion point by `dim H^degree`.
    pub fn charvar_scan_with(&self, level: u64, degree: usize, bound: u32, exec: Execution) -> Result<CharVarScan> {
        let top = self.algebra.top_degree();
        if degree < 1 || degree > top {
            return Err(Error::Precondition(format!("degree must lie in 1..={top}")));
        }
        if level == 0 {
            return Err(Error::Precondition("level must be positive".into()));
        }
        let points = torsion_points(level, self.nparams());
        let results = exec.map(&points, |p| self.twisted_cohomology(p.beta(), bound));
        let mut buckets: BTreeMap<usize, Vec<TorsionPoint>> = BTreeMap::new();
        let mut inconclusive = Vec::new();
        for (p, res) in points.into_iter().zip(results) {
            match res {
                Ok(t) => buckets.entry(t.dims[degree]).or_default().push(p),
                Err(Error::Inconclusive { .. }) => inconclusive.push(p),
                Err(e) => return Err(e),
            }
        }
        Ok(CharVarScan { level, degree, buckets, inconclusive })
    }

    pub fn milnor_charpoly(&self, m: usize, bound: u32) -> Result<MonodromyPolynomial> {
        self.milnor_charpoly_with(m, bound, Execution::default())
    }

    /// `Δ^m(t)` from the equimonodromic local systems `β = (k/D, …, k/D)`.
    pub fn milnor_charpoly_with(&self, m: usize, bound: u32, exec: Execution) -> Result<MonodromyPolynomial> {
        let top = self.algebra.top_degree();
        if m > top {
            return Err(Error::Precondition(format!("degree must lie in 0..={top}")));
        }
        let d = self.milnor_order();
        let r = self.nparams();
        let ks: Vec<u64> = (0..d).collect();
        let results = exec.map(&ks, |&k| self.twisted_cohomology(&equimonodromic_beta(d, k, r), bound));
        let multiplicities = results
            .into_iter()
            .map(|res| res.map(|t| t.dims[m]))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonodromyPolynomial { order: d, multiplicities })
    }

    /// `ε` of the added-line criterion, using the scenario's intersection data.
    pub fn epsilon(&self, point: &TorsionPoint) -> Result<u8> {
        let pts = self
            .intersection_points
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("scenario `{}` has no intersection points", self.name)))?;
        epsilon_line(pts, point)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVarScan {
    pub level: u64,
    pub degree: usize,
    /// `dim H^degree` ↦ points with that dimension, in lexicographic order.
    pub buckets: BTreeMap<usize, Vec<TorsionPoint>>,
    pub inconclusive: Vec<TorsionPoint>,
}

impl CharVarScan {
    /// Points with `dim ≥ i`, in lexicographic order.
    pub fn at_least(&self, i: usize) -> Vec<TorsionPoint> {
        let mut out: Vec<TorsionPoint> = self.buckets.range(i..).flat_map(|(_, v)| v.iter().cloned()).collect();
        out.sort();
        out
    }

    /// `V^{i,k}_t ∩ μ_N`: points with `dim > i`.
    pub fn jumping_locus(&self, i: usize) -> Vec<TorsionPoint> {
        self.at_least(i + 1)
    }

    pub fn total(&self) -> usize {
        self.buckets.values().map(Vec::len).sum::<usize>() + self.inconclusive.len()
    }
}

/// Characteristic polynomial of the monodromy, as the multiplicity `b(k)`
/// of each root `exp(-2πik/D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyPolynomial {
    pub order: u64,
    pub multiplicities: Vec<usize>,
}

impl MonodromyPolynomial {
    pub fn degree(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Multiplicity of `Φ_e` for each `e | D`, if `b` is constant on roots of
    /// the same order.
    pub fn cyclotomic_exponents(&self) -> Option<BTreeMap<u64, usize>> {
        let d = self.order;
        let mut by_order: BTreeMap<u64, usize> = BTreeMap::new();
        for (k, &b) in self.multiplicities.iter().enumerate() {
            let e = d / (k as u64).gcd(&d);
            match by_order.get(&e) {
                Some(&prev) if prev != b => return None,
                _ => {
                    by_order.insert(e, b);
                }
            }
        }
        Some(by_order)
    }

    /// Exponents `m_d` with `Δ = Π_{d|D} (t^d - 1)^{m_d}`, if all are nonnegative.
    pub fn binomial_exponents(&self) -> Option<BTreeMap<u64, usize>> {
        let phi = self.cyclotomic_exponents()?;
        let mut out = BTreeMap::new();
        for &d in phi.keys() {
            // Φ_e = Π_{d|e} (t^d - 1)^{μ(e/d)}
            let m: i64 = phi
                .iter()
                .filter(|(&e, _)| e % d == 0)
                .map(|(&e, &c)| mobius(e / d) * c as i64)
                .sum();
            if m < 0 {
                return None;
            }
            if m > 0 {
                out.insert(d, m as usize);
            }
        }
        Some(out)
    }

    /// Coefficients of `Δ(t)`, low degree first, when it has rational coefficients.
    pub fn coefficients(&self) -> Option<Vec<Rational>> {
        let phi = self.cyclotomic_exponents()?;
        let mut acc = vec![Rational::one()];
        for (&e, &c) in &phi {
            let f = cyclotomic_poly(e);
            for _ in 0..c {
                let mut next = vec![Rational::zero(); acc.len() + f.coeffs().len() - 1];
                for (i, a) in acc.iter().enumerate() {
                    for (j, b) in f.coeffs().iter().enumerate() {
                        next[i + j] += a * Rational::from_integer(b.clone());
                    }
                }
                acc = next;
            }
        }
        Some(acc)
    }
}

impl fmt::Display for MonodromyPolynomial {
    /// `(t-1)^2*(t^5-1)` when possible, else a product of cyclotomic
    /// polynomials, else `[k/D]^b` linear factors for the roots `exp(-2πik/D)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |base: String, e: usize| if e == 1 { base } else { format!("{base}^{e}") };
        if let Some(bin) = self.binomial_exponents() {
            if bin.is_empty() {
                return write!(f, "1");
            }
            let parts: Vec<String> = bin
                .iter()
                .map(|(&d, &m)| {
                    let base = if d == 1 { "(t-1)".to_string() } else { format!("(t^{d}-1)") };
                    power(base, m)
                })
                .collect();
            return write!(f, "{}", parts.join("*"));
        }
        if let Some(phi) = self.cyclotomic_exponents() {
            let parts: Vec<String> = phi
                .iter()
                .filter(|(_, &c)| c > 0)
                .map(|(&e, &c)| {
                    let text = cyclotomic_poly(e).to_string().replace('x', "t").replace(' ', "");
                    power(format!("({text})"), c)
                })
                .collect();
            return write!(f, "{}", parts.join("*"));
        }
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(k, &b)| power(format!("[{k}/{}]", self.order), b))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

fn mobius(n: u64) -> i64 {
    let (mut n, mut sign, mut p) = (n, 1i64, 2u64);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Level-`level` points with `λ_1^{d_1}⋯λ_s^{d_s} = 1`, i.e. `Σ d_j β_j ∈ Z`.
pub fn projective_points(degrees: &[u64], level: u64) -> Vec<TorsionPoint> {
    torsion_points(level, degrees.len())
        .into_iter()
        .filter(|p| {
            let nums = p.numerators();
            let s: i128 = nums.iter().zip(degrees).map(|(&k, &d)| k as i128 * d as i128).sum();
            s % level as i128 == 0
        })
        .collect()
}

/// `0` if some point has `Π λ_j^{k_j} ≠ 1`, else `1`.
pub fn epsilon_line(points: &[Vec<i64>], lambda: &TorsionPoint) -> Result<u8> {
    let lvl = BigInt::from(lambda.level());
    for p in points {
        if p.len() != lambda.dim() {
            return Err(Error::Dimension(format!(
                "multiplicity vector of length {} for a point of dimension {}",
                p.len(),
                lambda.dim()
            )));
        }
        let s: BigInt = p
            .iter()
            .zip(lambda.numerators())
            .map(|(&k, n)| BigInt::from(k) * BigInt::from(n))
            .sum();
        if !(s % &lvl).is_zero() {
            return Ok(0);
        }
    }
    Ok(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn monodromy_display() {
        let p = |order, m: &[usize]| MonodromyPolynomial { order, multiplicities: m.to_vec() }.to_string();
        assert_eq!(p(5, &[1, 0, 0, 0, 0]), "(t-1)");
        assert_eq!(p(5, &[3, 1, 1, 1, 1]), "(t-1)^2*(t^5-1)");
        assert_eq!(p(5, &[2, 1, 1, 1, 1]), "(t-1)*(t^5-1)");
        assert_eq!(p(5, &[4, 2, 2, 2, 2]), "(t-1)^2*(t^5-1)^2");
        assert_eq!(p(5, &[0; 5]), "1");
        assert_eq!(p(6, &[0, 0, 1, 0, 1, 0]), "(t^2+t+1)");
        assert_eq!(p(6, &[1, 0, 0, 1, 0, 0]), "(t^2-1)");
        assert_eq!(p(6, &[0, 1, 1, 1, 1, 1]), "(t+1)*(t^2+t+1)*(t^2-t+1)");
        assert_eq!(p(5, &[0, 1, 0, 0, 2]), "[1/5]*[4/5]^2");
    }

    #[test]
    fn monodromy_coefficients() {
        let p = MonodromyPolynomial { order: 5, multiplicities: vec![2, 1, 1, 1, 1] };
        // (t-1)(t^5-1) = t^6 - t^5 - t + 1
        let want: Vec<Rational> = [1, -1, 0, 0, 0, -1, 1].iter().map(|&c| rat(c, 1)).collect();
        assert_eq!(p.coefficients().unwrap(), want);
        assert_eq!(p.degree(), 6);
    }

    #[test]
    fn mobius_values() {
        let got: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn projective_counts() {
        assert_eq!(projective_points(&[1, 3], 5).len(), 5);
        assert_eq!(projective_points(&[1], 4), vec![TorsionPoint::new(4, &[0])]);
        assert_eq!(projective_points(&[1, 1, 2], 5).len(), 25);
    }

    #[test]
    fn epsilon_examples() {
        let pts = vec![vec![1, 0, 2], vec![0, 1, 0]];
        assert_eq!(epsilon_line(&pts, &TorsionPoint::new(5, &[0, 0, 0])).unwrap(), 1);
        assert_eq!(epsilon_line(&pts, &TorsionPoint::new(5, &[1, 1, 1])).unwrap(), 0);
        let beta = TorsionPoint::from_beta(5, &[rat(1, 5), rat(0, 1), rat(2, 5)]).unwrap();
        assert_eq!(epsilon_line(&pts, &beta).unwrap(), 1);
        assert!(epsilon_line(&pts, &TorsionPoint::new(5, &[1, 1])).is_err());
    }
}
