//! Finitely presented modules over the Laurent polynomial ring.
//!
//! A [`Presentation`] is an `n × m` matrix whose columns are relations,
//! `R^m → R^n → A → 0`. From it we get the elementary ideals `E_i(A)`
//! (generated by the `(n-i)`-minors), the characteristic polynomials
//! `Δ_i(A) = gcd E_i(A)`, and torsion-point scans of the support and of the
//! Fitting-stratified characteristic varieties.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::json;
use crate::laurent::{torsion_points, LaurentPoly, TorsionPoint};

/// Generators of an ideal of `R_s`. The empty list is the zero ideal; a unit
/// generator means the whole ring.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealGenerators {
    nvars: usize,
    gens: Vec<LaurentPoly>,
}

impl IdealGenerators {
    pub fn zero(nvars: usize) -> Self {
        IdealGenerators {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn full(nvars: usize) -> Self {
        IdealGenerators {
            nvars,
            gens: vec![LaurentPoly::one(nvars)],
        }
    }

    pub fn from_gens(nvars: usize, gens: impl IntoIterator<Item = LaurentPoly>) -> Self {
        IdealGenerators {
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        }
    }

    pub fn gens(&self) -> &[LaurentPoly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_full_ring(&self) -> bool {
        self.gens.iter().any(LaurentPoly::is_unit)
    }

    /// Normalized gcd of the generators: `0` for the zero ideal, `1` for the ring.
    pub fn gcd(&self) -> LaurentPoly {
        let mut g = LaurentPoly::zero(self.nvars);
        for p in &self.gens {
            g = g.gcd(p).expect("generators share the ring");
            if g.is_unit() {
                break;
            }
        }
        g
    }

    /// True iff every generator vanishes at the point.
    pub fn vanishes_at(&self, point: &TorsionPoint) -> Result<bool> {
        for g in &self.gens {
            if !g.evaluate_at_torsion(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    nvars: usize,
    generators: usize,
    relations: usize,
    /// `generators` rows of `relations` entries each.
    matrix: Vec<Vec<LaurentPoly>>,
}

impl Presentation {
    pub fn new(nvars: usize, generators: usize, relations: usize, matrix: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        if matrix.len() != generators {
            return Err(Error::Dimension(format!(
                "presentation has {} rows, expected {generators}",
                matrix.len()
            )));
        }
        for (r, row) in matrix.iter().enumerate() {
            if row.len() != relations {
                return Err(Error::Dimension(format!(
                    "row {r} has {} entries, expected {relations}",
                    row.len()
                )));
            }
            if let Some(p) = row.iter().find(|p| p.nvars() != nvars) {
                return Err(Error::Dimension(format!(
                    "entry over {} variables in a presentation over {nvars}",
                    p.nvars()
                )));
            }
        }
        Ok(Presentation {
            nvars,
            generators,
            relations,
            matrix,
        })
    }

    /// The free module `R^rank`.
    pub fn free(nvars: usize, rank: usize) -> Self {
        Presentation {
            nvars,
            generators: rank,
            relations: 0,
            matrix: vec![Vec::new(); rank],
        }
    }

    /// `R/(g_1, …, g_k)`: one generator, one relation per ideal generator.
    pub fn cyclic(nvars: usize, gens: Vec<LaurentPoly>) -> Result<Self> {
        let m = gens.len();
        Presentation::new(nvars, 1, m, vec![gens])
    }

    /// Diagonal presentation of `R/(d_1) ⊕ … ⊕ R/(d_k)`.
    pub fn diagonal(nvars: usize, diag: Vec<LaurentPoly>) -> Result<Self> {
        let k = diag.len();
        let mut matrix = vec![vec![LaurentPoly::zero(nvars); k]; k];
        for (i, d) in diag.into_iter().enumerate() {
            matrix[i][i] = d;
        }
        Presentation::new(nvars, k, k, matrix)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> usize {
        self.relations
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.matrix[row][col]
    }

    pub fn is_cyclic(&self) -> bool {
        self.generators == 1
    }

    /// Block-diagonal presentation of the direct sum.
    pub fn direct_sum(&self, other: &Presentation) -> Result<Presentation> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(format!(
                "direct sum of modules over {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        let n = self.generators + other.generators;
        let m = self.relations + other.relations;
        let mut matrix = vec![vec![LaurentPoly::zero(self.nvars); m]; n];
        for (r, row) in self.matrix.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                matrix[r][c] = p.clone();
            }
        }
        for (r, row) in other.matrix.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                matrix[self.generators + r][self.relations + c] = p.clone();
            }
        }
        Presentation::new(self.nvars, n, m, matrix)
    }

    /// `R/I ⊗ R/J = R/(I + J)` for two cyclic presentations.
    pub fn tensor_cyclic(&self, other: &Presentation) -> Result<Presentation> {
        if !self.is_cyclic() || !other.is_cyclic() {
            return Err(Error::Precondition(
                "tensor_cyclic needs two cyclic presentations".into(),
            ));
        }
        if self.nvars != other.nvars {
            return Err(Error::Dimension("tensor of modules over different rings".into()));
        }
        let gens = self.matrix[0].iter().chain(&other.matrix[0]).cloned().collect();
        Presentation::cyclic(self.nvars, gens)
    }

    /// `E_i`: the `(n-i)`-minors, with `E_i = R` for `i ≥ n` and `E_i = 0`
    /// when `n - i > m`.
    pub fn elementary_ideal(&self, i: usize) -> IdealGenerators {
        let n = self.generators;
        if i >= n {
            return IdealGenerators::full(self.nvars);
        }
        let k = n - i;
        if k > self.relations {
            return IdealGenerators::zero(self.nvars);
        }
        let mut gens = Vec::new();
        for rows in combinations(n, k) {
            for cols in combinations(self.relations, k) {
                let minor = laplace_det(&self.matrix, &rows, &cols, self.nvars);
                if !minor.is_zero() {
                    gens.push(minor);
                }
            }
        }
        IdealGenerators::from_gens(self.nvars, gens)
    }

    /// `Δ_i`, normalized up to units.
    pub fn char_poly(&self, i: usize) -> LaurentPoly {
        self.elementary_ideal(i).gcd()
    }

    pub fn in_support(&self, point: &TorsionPoint) -> Result<bool> {
        self.elementary_ideal(0).vanishes_at(point)
    }

    pub fn support_scan(&self, level: u64) -> Result<Vec<TorsionPoint>> {
        self.support_scan_with(level, Execution::default())
    }

    pub fn support_scan_with(&self, level: u64, exec: Execution) -> Result<Vec<TorsionPoint>> {
        scan_ideal(&self.elementary_ideal(0), self.nvars, level, exec)
    }

    /// Torsion points of `V_i`, the zero locus of `E_{i-1}` (`i ≥ 1`).
    pub fn fitting_variety_scan(&self, i: usize, level: u64) -> Result<Vec<TorsionPoint>> {
        self.fitting_variety_scan_with(i, level, Execution::default())
    }

    pub fn fitting_variety_scan_with(&self, i: usize, level: u64, exec: Execution) -> Result<Vec<TorsionPoint>> {
        if i == 0 {
            return Err(Error::Precondition("characteristic variety index starts at 1".into()));
        }
        scan_ideal(&self.elementary_ideal(i - 1), self.nvars, level, exec)
    }

    /// Parses `{"nvars", "generators", "relations", "matrix"}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let nvars = json::as_usize(json::field(v, "", "nvars")?, "/nvars")?;
        let n = json::as_usize(json::field(v, "", "generators")?, "/generators")?;
        let m = json::as_usize(json::field(v, "", "relations")?, "/relations")?;
        let rows = json::as_array(json::field(v, "", "matrix")?, "/matrix")?;
        if rows.len() != n && !(m == 0 && rows.is_empty()) {
            return Err(Error::schema("/matrix", format!("expected {n} rows, found {}", rows.len())));
        }
        let mut matrix = Vec::with_capacity(n);
        for r in 0..n {
            let Some(row) = rows.get(r) else {
                matrix.push(Vec::new());
                continue;
            };
            let rptr = format!("/matrix/{r}");
            let row = json::as_array(row, &rptr)?;
            if row.len() != m {
                return Err(Error::schema(rptr, format!("expected {m} entries, found {}", row.len())));
            }
            let mut out = Vec::with_capacity(m);
            for (c, e) in row.iter().enumerate() {
                let eptr = format!("/matrix/{r}/{c}");
                let text = json::as_str(e, &eptr)?;
                out.push(LaurentPoly::parse(text, nvars).map_err(|err| match err {
                    Error::Syntax { pos, msg } => Error::schema(eptr, format!("syntax error at position {pos}: {msg}")),
                    other => Error::schema(eptr, other.to_string()),
                })?);
            }
            matrix.push(out);
        }
        Presentation::new(nvars, n, m, matrix)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nvars": self.nvars,
            "generators": self.generators,
            "relations": self.relations,
            "matrix": self.matrix.iter()
                .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

fn scan_ideal(ideal: &IdealGenerators, nvars: usize, level: u64, exec: Execution) -> Result<Vec<TorsionPoint>> {
    if level == 0 {
        return Err(Error::Precondition("torsion level must be positive".into()));
    }
    let points = torsion_points(level, nvars);
    let hits = exec.map(&points, |p| ideal.vanishes_at(p));
    let mut out = Vec::new();
    for (p, hit) in points.into_iter().zip(hits) {
        if hit? {
            out.push(p);
        }
    }
    Ok(out)
}

/// All increasing `k`-subsets of `0..n`, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Determinant of the submatrix on `rows × cols` by cofactor expansion along
/// the first row, skipping zero entries.
fn laplace_det(m: &[Vec<LaurentPoly>], rows: &[usize], cols: &[usize], nvars: usize) -> LaurentPoly {
    match rows.len() {
        0 => return LaurentPoly::one(nvars),
        1 => return m[rows[0]][cols[0]].clone(),
        _ => {}
    }
    let r0 = rows[0];
    let rest = &rows[1..];
    let mut acc = LaurentPoly::zero(nvars);
    for (j, &c) in cols.iter().enumerate() {
        let a = &m[r0][c];
        if a.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &c)| c).collect();
        let term = a * &laplace_det(m, rest, &sub_cols, nvars);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
