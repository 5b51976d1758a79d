//! Finite graded-commutative algebras and the Aomoto complex `(A^*, ω ∧ ·)`.
//!
//! An algebra is given by a labeled basis in each degree and by the structure
//! constants of left multiplication by degree-one elements,
//! `A^1 × A^p → A^{p+1}`. That is all the wedge-by-ω differential needs.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, Rational};
use crate::json;

/// A degree-one element, by coordinates in the degree-one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm(pub Vec<Rational>);

impl OneForm {
    pub fn zero(dim: usize) -> Self {
        OneForm(vec![Rational::zero(); dim])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        OneForm(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra {
    basis: Vec<Vec<String>>,
    /// `table[p][a][b]` = coordinates of `e_a ∧ basis[p][b]` in degree `p + 1`.
    table: Vec<Vec<Vec<Vec<Rational>>>>,
}

impl GradedAlgebra {
    /// Algebra with the given basis, unit `basis[0][0]`, and all other
    /// products zero.
    pub fn new(basis: Vec<Vec<String>>) -> Result<Self> {
        if basis.len() < 2 {
            return Err(Error::Precondition("algebra needs degrees 0 and 1".into()));
        }
        if basis[0].len() != 1 {
            return Err(Error::Precondition("degree 0 must be spanned by the unit".into()));
        }
        let mut seen = BTreeSet::new();
        for label in basis.iter().flatten() {
            if !seen.insert(label.as_str()) {
                return Err(Error::Precondition(format!("duplicate basis label `{label}`")));
            }
        }
        let n1 = basis[1].len();
        let top = basis.len() - 1;
        let mut table = Vec::with_capacity(top);
        for p in 0..top {
            let target = basis[p + 1].len();
            table.push(vec![vec![vec![Rational::zero(); target]; basis[p].len()]; n1]);
        }
        for a in 0..n1 {
            table[0][a][0][a] = Rational::one();
        }
        Ok(GradedAlgebra { basis, table })
    }

    /// Exterior algebra on `n` generators `e1..en`, truncated at degree `top`.
    pub fn exterior(n: usize, top: usize) -> Self {
        let subsets: Vec<Vec<Vec<usize>>> = (0..=top)
            .map(|k| crate::modules::combinations(n, k))
            .collect();
        let label = |s: &[usize]| -> String {
            if s.is_empty() {
                "1".into()
            } else {
                let sep = if n >= 10 { "_" } else { "" };
                format!("e{}", s.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(sep))
            }
        };
        let basis: Vec<Vec<String>> = subsets.iter().map(|ss| ss.iter().map(|s| label(s)).collect()).collect();
        let mut alg = GradedAlgebra::new(basis).expect("exterior basis is well formed");
        for p in 1..top {
            let index: HashMap<&Vec<usize>, usize> = subsets[p + 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
            for a in 0..n {
                for (b, s) in subsets[p].iter().enumerate() {
                    if s.contains(&a) {
                        continue;
                    }
                    let pos = s.iter().filter(|&&x| x < a).count();
                    let mut t = s.clone();
                    t.insert(pos, a);
                    let sign = if pos % 2 == 0 { Rational::one() } else { -Rational::one() };
                    alg.table[p][a][b][index[&t]] = sign;
                }
            }
        }
        alg
    }

    pub fn top_degree(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn dim(&self, p: usize) -> usize {
        self.basis.get(p).map_or(0, Vec::len)
    }

    /// `(dim A^0, …, dim A^top)`.
    pub fn betti(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, p: usize) -> &[String] {
        &self.basis[p]
    }

    /// Degree and index of a basis label.
    pub fn locate(&self, label: &str) -> Option<(usize, usize)> {
        self.basis
            .iter()
            .enumerate()
            .find_map(|(p, b)| b.iter().position(|l| l == label).map(|i| (p, i)))
    }

    /// Sets `e_a ∧ basis[p][b]` for a degree-one `e_a`.
    pub fn set_product(&mut self, a: usize, p: usize, b: usize, value: Vec<Rational>) -> Result<()> {
        if p >= self.top_degree() || a >= self.dim(1) || b >= self.dim(p) || value.len() != self.dim(p + 1) {
            return Err(Error::Dimension("product outside the algebra".into()));
        }
        self.table[p][a][b] = value;
        Ok(())
    }

    /// Structure constants of `e_a ∧ basis[p][b]`.
    pub fn product(&self, a: usize, p: usize, b: usize) -> &[Rational] {
        &self.table[p][a][b]
    }

    /// Checks antisymmetry and `e_i ∧ e_i = 0` in degree one, and
    /// `u ∧ (u ∧ v) = 0` for every degree-one basis `u` and basis `v`.
    pub fn validate(&self) -> Result<()> {
        let n1 = self.dim(1);
        let lbl = |p: usize, i: usize| self.basis[p][i].clone();
        let violation = |u: String, v: String, degree: usize, msg: &str| Error::AlgebraViolation {
            left: u,
            right: v,
            degree,
            msg: msg.into(),
        };
        if self.top_degree() >= 2 {
            for i in 0..n1 {
                if self.table[1][i][i].iter().any(|c| !c.is_zero()) {
                    return Err(violation(lbl(1, i), lbl(1, i), 1, "square of a degree-one element is nonzero"));
                }
                for j in i + 1..n1 {
                    let ok = self.table[1][i][j]
                        .iter()
                        .zip(&self.table[1][j][i])
                        .all(|(x, y)| (x + y).is_zero());
                    if !ok {
                        return Err(violation(lbl(1, i), lbl(1, j), 1, "product is not antisymmetric"));
                    }
                }
            }
        }
        for p in 0..self.top_degree().saturating_sub(1) {
            for u in 0..n1 {
                for v in 0..self.dim(p) {
                    let once = &self.table[p][u][v];
                    let twice = self.left_mul(u, p + 1, once);
                    if twice.iter().any(|c| !c.is_zero()) {
                        return Err(violation(lbl(1, u), lbl(p, v), p, "u ∧ (u ∧ v) is nonzero"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `e_a ∧ v` for `v ∈ A^p` given in coordinates.
    fn left_mul(&self, a: usize, p: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim(p + 1)];
        if p >= self.top_degree() {
            return out;
        }
        for (b, vb) in v.iter().enumerate() {
            if vb.is_zero() {
                continue;
            }
            for (k, c) in self.table[p][a][b].iter().enumerate() {
                if !c.is_zero() {
                    out[k] += vb * c;
                }
            }
        }
        out
    }

    fn check_form(&self, omega: &OneForm) -> Result<()> {
        if omega.0.len() != self.dim(1) {
            return Err(Error::Dimension(format!(
                "one-form has {} coefficients, algebra has dim A^1 = {}",
                omega.0.len(),
                self.dim(1)
            )));
        }
        Ok(())
    }

    /// `ω ∧ v` for `v ∈ A^p`.
    pub fn wedge(&self, omega: &OneForm, p: usize, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_form(omega)?;
        if p >= self.top_degree() {
            return Err(Error::Dimension(format!("degree {p} has no successor")));
        }
        if v.len() != self.dim(p) {
            return Err(Error::Dimension("vector length does not match degree".into()));
        }
        let mut out = vec![Rational::zero(); self.dim(p + 1)];
        for (a, w) in omega.0.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for (k, c) in self.left_mul(a, p, v).into_iter().enumerate() {
                out[k] += w * c;
            }
        }
        Ok(out)
    }

    /// Matrix of `ω ∧ ·: A^p → A^{p+1}`; column `b` is the image of `basis[p][b]`.
    pub fn differential_matrix(&self, omega: &OneForm, p: usize) -> Result<ExactMatrix<Rational>> {
        self.check_form(omega)?;
        if p >= self.top_degree() {
            return Err(Error::Dimension(format!("degree {p} has no successor")));
        }
        let (rows, cols) = (self.dim(p + 1), self.dim(p));
        let mut m = ExactMatrix::zeros(rows, cols);
        for (a, w) in omega.0.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for b in 0..cols {
                for (k, c) in self.table[p][a][b].iter().enumerate() {
                    if !c.is_zero() {
                        let v = m.get(k, b) + w * c;
                        m.set(k, b, v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Dimensions of the cohomology of `(A^*, ω ∧ ·)`.
    ///
    /// Fails with [`Error::Inconsistent`] if `ω ∧ ω ∧ · ≠ 0`.
    pub fn cohomology_dims(&self, omega: &OneForm) -> Result<Vec<usize>> {
        self.check_form(omega)?;
        let top = self.top_degree();
        let diffs = (0..top)
            .map(|p| self.differential_matrix(omega, p))
            .collect::<Result<Vec<_>>>()?;
        for p in 0..top.saturating_sub(1) {
            if !diffs[p + 1].mul(&diffs[p])?.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "d∘d ≠ 0 from degree {p} to {}: the algebra is not graded-commutative",
                    p + 2
                )));
            }
        }
        let ranks: Vec<usize> = diffs.iter().map(ExactMatrix::rank).collect();
        Ok((0..=top)
            .map(|p| {
                let out = ranks.get(p).copied().unwrap_or(0);
                let inc = if p == 0 { 0 } else { ranks[p - 1] };
                self.dim(p) - out - inc
            })
            .collect())
    }

    /// Parses the algebra JSON schema; `ptr` is the pointer of `v` in its document.
    pub fn from_json(v: &Value, ptr: &str) -> Result<Self> {
        let top = json::as_usize(json::field(v, ptr, "top_degree")?, &json::child(ptr, "top_degree"))?;
        let bptr = json::child(ptr, "basis");
        let bobj = json::field(v, ptr, "basis")?
            .as_object()
            .ok_or_else(|| Error::schema(&bptr, "expected an object keyed by degree"))?;
        let mut basis = Vec::with_capacity(top + 1);
        for p in 0..=top {
            let key = p.to_string();
            let labels = match bobj.get(&key) {
                Some(arr) => json::as_array(arr, &json::child(&bptr, &key))?
                    .iter()
                    .enumerate()
                    .map(|(i, l)| json::as_str(l, &format!("{bptr}/{key}/{i}")).map(str::to_string))
                    .collect::<Result<Vec<_>>>()?,
                None if p <= 1 => return Err(Error::schema(json::child(&bptr, &key), "missing required degree")),
                None => Vec::new(),
            };
            basis.push(labels);
        }
        if let Some(extra) = bobj.keys().find(|k| k.parse::<usize>().map_or(true, |d| d > top)) {
            return Err(Error::schema(json::child(&bptr, extra), "degree outside 0..=top_degree"));
        }
        let mut alg = GradedAlgebra::new(basis).map_err(|e| Error::schema(&bptr, e.to_string()))?;

        let pptr = json::child(ptr, "products");
        let products = match json::opt_field(v, "products") {
            Some(p) => json::as_array(p, &pptr)?.clone(),
            None => Vec::new(),
        };
        // (a, p, b) slots that were given explicitly
        let mut explicit: HashMap<(usize, usize, usize), Vec<Rational>> = HashMap::new();
        for (k, prod) in products.iter().enumerate() {
            let eptr = json::child(&pptr, k);
            let left = json::as_str(json::field(prod, &eptr, "left")?, &json::child(&eptr, "left"))?;
            let right = json::as_str(json::field(prod, &eptr, "right")?, &json::child(&eptr, "right"))?;
            let (dl, il) = alg
                .locate(left)
                .ok_or_else(|| Error::schema(json::child(&eptr, "left"), format!("unknown basis label `{left}`")))?;
            let (dr, ir) = alg
                .locate(right)
                .ok_or_else(|| Error::schema(json::child(&eptr, "right"), format!("unknown basis label `{right}`")))?;
            let target = dl + dr;
            if target > top || (dl != 1 && dr != 1) || dl == 0 || dr == 0 {
                return Err(Error::schema(
                    &eptr,
                    "products must pair a degree-one element with a positive-degree element below the top degree",
                ));
            }
            let vptr = json::child(&eptr, "value");
            let mut value = vec![Rational::zero(); alg.dim(target)];
            for (t, item) in json::as_array(json::field(prod, &eptr, "value")?, &vptr)?.iter().enumerate() {
                let iptr = json::child(&vptr, t);
                let lbl = json::as_str(json::field(item, &iptr, "basis")?, &json::child(&iptr, "basis"))?;
                let c = json::as_rational(json::field(item, &iptr, "coeff")?, &json::child(&iptr, "coeff"))?;
                match alg.locate(lbl) {
                    Some((d, i)) if d == target => value[i] += c,
                    _ => {
                        return Err(Error::schema(
                            json::child(&iptr, "basis"),
                            format!("`{lbl}` is not a basis element of degree {target}"),
                        ))
                    }
                }
            }
            // v ∧ u = (-1)^p u ∧ v for u of degree one and v of degree p
            let (slot, value) = if dl == 1 {
                ((il, dr, ir), value)
            } else {
                let sign = if dl % 2 == 0 { Rational::one() } else { -Rational::one() };
                ((ir, dl, il), value.into_iter().map(|x| x * &sign).collect())
            };
            // degree-one pairs keep both orders as given; antisymmetry is validated later
            let shared_slot = dl != 1 || dr != 1;
            if let Some(prev) = explicit.get(&slot).filter(|_| shared_slot) {
                if *prev != value {
                    return Err(Error::schema(&eptr, "conflicts with an earlier product"));
                }
            }
            explicit.insert(slot, value);
        }
        for (&(a, p, b), value) in &explicit {
            alg.table[p][a][b] = value.clone();
            if p == 1 && !explicit.contains_key(&(b, 1, a)) {
                alg.table[1][b][a] = value.iter().map(|x| -x).collect();
            }
        }
        Ok(alg)
    }

    /// Serializes to the JSON schema, listing every nonzero product of a
    /// degree-one element with a basis element of degree ≥ 1.
    pub fn to_json(&self) -> Value {
        let mut basis = Map::new();
        for (p, b) in self.basis.iter().enumerate() {
            basis.insert(p.to_string(), json!(b));
        }
        let mut products = Vec::new();
        for p in 1..self.top_degree() {
            for a in 0..self.dim(1) {
                for b in 0..self.dim(p) {
                    let v = &self.table[p][a][b];
                    if v.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let value: Vec<Value> = v
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| json!({"basis": self.basis[p + 1][k], "coeff": c.to_string()}))
                        .collect();
                    products.push(json!({"left": self.basis[1][a], "right": self.basis[p][b], "value": value}));
                }
            }
        }
        json!({"top_degree": self.top_degree(), "basis": basis, "products": products})
    }
}

/// Orlik-Solomon algebra of an affine line arrangement.
///
/// `points` lists the multiple points as sets of (1-based) line indices. The
/// degree-two basis has, for each point with lines `j_1 < … < j_k`, the
/// classes `e_{j_1} ∧ e_{j_b}` for `b ≥ 2`; other products at the point are
/// rewritten with `e_a ∧ e_b = e_{j_1} ∧ e_b - e_{j_1} ∧ e_a`.
pub fn os_algebra_lines(lines: usize, points: &[Vec<usize>]) -> Result<GradedAlgebra> {
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pts: Vec<Vec<usize>> = Vec::with_capacity(points.len());
    for (pi, p) in points.iter().enumerate() {
        let mut p = p.clone();
        p.sort_unstable();
        p.dedup();
        if p.len() < 2 {
            return Err(Error::Precondition(format!("point {pi} has fewer than two lines")));
        }
        if p.iter().any(|&l| l == 0 || l > lines) {
            return Err(Error::Precondition(format!("point {pi} names a line outside 1..={lines}")));
        }
        for (i, &a) in p.iter().enumerate() {
            for &b in &p[i + 1..] {
                if owner.insert((a, b), pi).is_some() {
                    return Err(Error::Precondition(format!("lines {a} and {b} meet in two points")));
                }
            }
        }
        pts.push(p);
    }
    for a in 1..=lines {
        for b in a + 1..=lines {
            if !owner.contains_key(&(a, b)) {
                return Err(Error::Precondition(format!("lines {a} and {b} meet in no listed point")));
            }
        }
    }
    let sep = if lines >= 10 { "_" } else { "" };
    let mut deg2 = Vec::new();
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    for p in &pts {
        for &b in &p[1..] {
            index.insert((p[0], b), deg2.len());
            deg2.push(format!("e{}{sep}{b}", p[0]));
        }
    }
    let basis = vec![
        vec!["1".to_string()],
        (1..=lines).map(|i| format!("e{i}")).collect(),
        deg2,
    ];
    let mut alg = GradedAlgebra::new(basis)?;
    let dim2 = alg.dim(2);
    for (&(a, b), &pi) in &owner {
        let root = pts[pi][0];
        let mut v = vec![Rational::zero(); dim2];
        v[index[&(root, b)]] += Rational::one();
        if a != root {
            v[index[&(root, a)]] -= Rational::one();
        }
        let neg = v.iter().map(|x| -x).collect();
        alg.set_product(a - 1, 1, b - 1, v)?;
        alg.set_product(b - 1, 1, a - 1, neg)?;
    }
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn example_41() -> GradedAlgebra {
        let v = serde_json::json!({
            "top_degree": 2,
            "basis": {"0": ["1"], "1": ["eta1", "eta2", "eta3"], "2": ["eta12", "eta23"]},
            "products": [
                {"left": "eta1", "right": "eta2", "value": [{"basis": "eta12", "coeff": "1"}]},
                {"left": "eta2", "right": "eta3", "value": [{"basis": "eta23", "coeff": "1"}]},
                {"left": "eta1", "right": "eta3", "value": [
                    {"basis": "eta12", "coeff": "1"}, {"basis": "eta23", "coeff": "1/2"}]}
            ]
        });
        GradedAlgebra::from_json(&v, "").unwrap()
    }

    fn form(v: &[(i64, i64)]) -> OneForm {
        OneForm(v.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn validation() {
        assert!(example_41().validate().is_ok());
        assert!(GradedAlgebra::exterior(2, 2).validate().is_ok());
        assert!(GradedAlgebra::exterior(4, 4).validate().is_ok());

        let bad = serde_json::json!({
            "top_degree": 2,
            "basis": {"0": ["1"], "1": ["eta1", "eta2"], "2": ["eta12"]},
            "products": [
                {"left": "eta1", "right": "eta2", "value": [{"basis": "eta12", "coeff": "1"}]},
                {"left": "eta2", "right": "eta1", "value": [{"basis": "eta12", "coeff": "1"}]}
            ]
        });
        let alg = GradedAlgebra::from_json(&bad, "").unwrap();
        match alg.validate() {
            Err(Error::AlgebraViolation { left, right, degree, .. }) => {
                assert_eq!((left.as_str(), right.as_str(), degree), ("eta1", "eta2", 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wedge_examples() {
        let a = example_41();
        let w = a.wedge(&form(&[(1, 1), (0, 1), (0, 1)]), 1, &[rat(0, 1), rat(0, 1), rat(1, 1)]).unwrap();
        assert_eq!(w, vec![rat(1, 1), rat(1, 2)]);
        let w0 = a.wedge(&OneForm::zero(3), 1, &[rat(1, 1), rat(2, 1), rat(3, 1)]).unwrap();
        assert_eq!(w0, vec![rat(0, 1), rat(0, 1)]);
        let w1 = a.wedge(&form(&[(1, 1), (0, 1), (0, 1)]), 1, &[rat(1, 1), rat(0, 1), rat(0, 1)]).unwrap();
        assert_eq!(w1, vec![rat(0, 1), rat(0, 1)]);
        assert!(a.wedge(&OneForm::zero(3), 2, &[rat(1, 1), rat(0, 1)]).is_err());
        assert!(a.wedge(&OneForm::zero(2), 1, &[rat(1, 1), rat(0, 1), rat(0, 1)]).is_err());
    }

    #[test]
    fn differential_matrices() {
        let a = example_41();
        let m = a.differential_matrix(&form(&[(1, 1), (0, 1), (0, 1)]), 1).unwrap();
        let expect = ExactMatrix::from_rows(vec![
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
            vec![rat(0, 1), rat(0, 1), rat(1, 2)],
        ])
        .unwrap();
        assert_eq!(m, expect);
        let m = a.differential_matrix(&form(&[(-4, 5), (1, 5), (1, 5)]), 1).unwrap();
        let expect = ExactMatrix::from_rows(vec![
            vec![rat(-2, 5), rat(-4, 5), rat(-4, 5)],
            vec![rat(-1, 10), rat(-1, 5), rat(-1, 5)],
        ])
        .unwrap();
        assert_eq!(m, expect);
        assert_eq!(m.rank(), 1);
        assert!(a.differential_matrix(&OneForm::zero(3), 0).unwrap().is_zero());
    }

    #[test]
    fn cohomology_examples() {
        let a = example_41();
        assert_eq!(a.cohomology_dims(&OneForm::zero(3)).unwrap(), vec![1, 3, 2]);
        assert_eq!(a.cohomology_dims(&form(&[(-4, 5), (1, 5), (1, 5)])).unwrap(), vec![0, 1, 1]);
        assert_eq!(a.cohomology_dims(&form(&[(1, 1), (0, 1), (0, 1)])).unwrap(), vec![0, 0, 0]);
        let t = GradedAlgebra::exterior(2, 2);
        assert_eq!(t.cohomology_dims(&form(&[(1, 2), (1, 3)])).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn inconsistent_algebra_detected() {
        // u ∧ (u ∧ 1) ≠ 0 in degree 2 breaks d∘d = 0
        let mut alg = GradedAlgebra::new(vec![
            vec!["1".into()],
            vec!["u".into()],
            vec!["x".into()],
        ])
        .unwrap();
        alg.set_product(0, 1, 0, vec![rat(1, 1)]).unwrap();
        assert!(alg.validate().is_err());
        assert!(matches!(
            alg.cohomology_dims(&form(&[(1, 1)])),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn os_builder() {
        let g = os_algebra_lines(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(g.betti(), vec![1, 3, 3]);
        assert!(g.validate().is_ok());
        let c = os_algebra_lines(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(c.betti(), vec![1, 3, 2]);
        assert!(c.validate().is_ok());
        // e2 ∧ e3 = e13 - e12
        assert_eq!(c.product(1, 1, 2), &[rat(-1, 1), rat(1, 1)]);
        let one = os_algebra_lines(1, &[]).unwrap();
        assert_eq!(one.betti(), vec![1, 1, 0]);
        assert!(os_algebra_lines(3, &[vec![1, 2], vec![1, 3]]).is_err());
        assert!(os_algebra_lines(3, &[vec![1, 2, 3], vec![1, 2]]).is_err());
        assert!(os_algebra_lines(2, &[vec![1]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = example_41();
        let back = GradedAlgebra::from_json(&a.to_json(), "").unwrap();
        assert_eq!(back, a);
        let c = os_algebra_lines(4, &[vec![1, 2, 3], vec![1, 4], vec![2, 4], vec![3, 4]]).unwrap();
        assert_eq!(GradedAlgebra::from_json(&c.to_json(), "").unwrap(), c);
    }

    #[test]
    fn json_schema_errors() {
        let v = serde_json::json!({"top_degree": 2, "basis": {"0": ["1"]}});
        match GradedAlgebra::from_json(&v, "/algebra") {
            Err(Error::Schema { pointer, .. }) => assert_eq!(pointer, "/algebra/basis/1"),
            other => panic!("unexpected {other:?}"),
        }
        let v = serde_json::json!({
            "top_degree": 2, "basis": {"0": ["1"], "1": ["a"], "2": ["b"]},
            "products": [{"left": "a", "right": "zz", "value": []}]
        });
        match GradedAlgebra::from_json(&v, "") {
            Err(Error::Schema { pointer, .. }) => assert_eq!(pointer, "/products/0/right"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
