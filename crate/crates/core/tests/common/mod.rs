#![allow(dead_code)]

use alexinv::exact::{rat, Rational};
use alexinv::laurent::LaurentPoly;
use alexinv::modules::Presentation;
use alexinv::pipeline::Scenario;
use proptest::prelude::*;

pub fn scenario(name: &str) -> Scenario {
    alexinv::scenario::load(name).expect("bundled").expect("parses")
}

pub fn poly(text: &str, nvars: usize) -> LaurentPoly {
    LaurentPoly::parse(text, nvars).unwrap()
}

pub fn rats(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// Sparse Laurent polynomial with small exponents and integer coefficients.
pub fn laurent(nvars: usize, max_terms: usize, exp: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-exp..=exp, nvars), -3i64..=3), 0..=max_terms)
        .prop_map(move |terms| {
            LaurentPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, rat(c, 1))))
        })
}

/// Nonzero polynomial (not a Laurent polynomial): exponents in `0..=deg`.
pub fn nonzero_poly(nvars: usize, max_terms: usize, deg: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(0..=deg, nvars), -3i64..=3), 1..=max_terms)
        .prop_map(move |terms| {
            LaurentPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, rat(c, 1))))
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// Products of factors `t_j - 1`, `t_j + 1`, `t_1 t_2 - 1`: the kind of
/// entries presentations of Alexander modules have.
pub fn alexander_entry(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    let mut atoms: Vec<String> = Vec::new();
    for j in 1..=nvars {
        atoms.push(format!("t{j} - 1"));
        atoms.push(format!("t{j} + 1"));
    }
    if nvars >= 2 {
        atoms.push("t1*t2 - 1".into());
    }
    atoms.push("1".into());
    atoms.push("0".into());
    let n = atoms.len();
    prop::collection::vec(0..n, 1..=2).prop_map(move |idx| {
        idx.iter().fold(LaurentPoly::one(nvars), |acc, &i| &acc * &poly(&atoms[i], nvars))
    })
}

pub fn presentation(nvars: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = Presentation> {
    (1..=max_n, 0..=max_m).prop_flat_map(move |(n, m)| {
        prop::collection::vec(prop::collection::vec(alexander_entry(nvars), m), n)
            .prop_map(move |matrix| Presentation::new(nvars, n, m, matrix).unwrap())
    })
}

pub fn cyclic(nvars: usize) -> impl Strategy<Value = Presentation> {
    prop::collection::vec(alexander_entry(nvars), 0..=2)
        .prop_map(move |gens| Presentation::cyclic(nvars, gens).unwrap())
}
