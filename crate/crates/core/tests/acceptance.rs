//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints a PASS/FAIL line regardless of output capture.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use alexinv::aomoto::{GradedAlgebra, OneForm};
use alexinv::exact::{cyclotomic_poly, rat, Rational};
use alexinv::laurent::{torsion_points, LaurentPoly, TorsionPoint};
use alexinv::modules::Presentation;
use alexinv::residue::{ResidueChoice, DEFAULT_BOUND};
use alexinv::scenario;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use common::{cyclic, laurent, nonzero_poly, poly, presentation, rats, scenario as load};

type Outcome = Result<(), String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Outcome {
    check(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

/// Level-5 points with `k_1 + 2k_2 + 2k_3 ≡ 0 (mod 5)`, by integer arithmetic.
fn torus_component_oracle() -> Vec<TorsionPoint> {
    let mut out = Vec::new();
    for a in 0..5i64 {
        for b in 0..5 {
            for c in 0..5 {
                if (a + 2 * b + 2 * c) % 5 == 0 {
                    out.push(TorsionPoint::new(5, &[a, b, c]));
                }
            }
        }
    }
    out
}

fn c1() -> Outcome {
    let sc = load("example_4_1");
    eq(sc.algebra.cohomology_dims(&OneForm::zero(3)).map_err(|e| e.to_string())?, vec![1, 3, 2], "untwisted dims")
}

fn c2() -> Outcome {
    let sc = load("example_4_1");
    let good = ResidueChoice(rats(&[(-4, 5), (1, 5), (1, 5)]));
    let bad = ResidueChoice(rats(&[(1, 5), (1, 5), (1, 5)]));
    check(sc.residue_system.is_admissible(&good).unwrap(), || "(-4/5,1/5,1/5) rejected".into())?;
    eq(sc.aomoto_dims(&good).unwrap(), vec![0, 1, 1], "dims at (-4/5,1/5,1/5)")?;
    check(!sc.residue_system.is_admissible(&bad).unwrap(), || "(1/5,1/5,1/5) accepted".into())
}

fn c3() -> Outcome {
    let sc = load("example_4_1");
    let want = ["(t-1)", "(t-1)^2*(t^5-1)", "(t-1)*(t^5-1)"];
    for (m, w) in want.iter().enumerate() {
        let p = sc.milnor_charpoly(m, 3).map_err(|e| e.to_string())?;
        eq(p.order, 5, "monodromy order")?;
        eq(p.to_string().as_str(), *w, &format!("Δ^{m}"))?;
    }
    Ok(())
}

fn c4() -> Outcome {
    let sc = load("example_4_1");
    let oracle = torus_component_oracle();
    eq(oracle.len(), 25, "oracle size")?;
    let trivial = vec![TorsionPoint::new(5, &[0, 0, 0])];
    for k in [1, 2] {
        let scan = sc.charvar_scan(5, k, DEFAULT_BOUND).map_err(|e| e.to_string())?;
        eq(scan.inconclusive.len(), 0, "inconclusive points")?;
        eq(scan.at_least(1), oracle.clone(), &format!("dim H^{k} >= 1"))?;
        eq(scan.at_least(2), trivial.clone(), &format!("dim H^{k} >= 2"))?;
    }
    Ok(())
}

fn c5() -> Outcome {
    let sc = load("example_4_2");
    for p in torsion_points(5, 3).into_iter().filter(|p| !p.is_trivial()) {
        let dims = sc.twisted_cohomology(p.beta(), DEFAULT_BOUND).map_err(|e| e.to_string())?.dims;
        eq(dims, vec![0, 0, 2], &format!("dims at {p}"))?;
    }
    eq(sc.milnor_charpoly(1, 3).unwrap().to_string().as_str(), "(t-1)^3", "Δ^1")?;
    eq(sc.milnor_charpoly(2, 3).unwrap().to_string().as_str(), "(t-1)^2*(t^5-1)^2", "Δ^2")?;
    let scan = sc.charvar_scan(5, 2, DEFAULT_BOUND).unwrap();
    eq(scan.jumping_locus(0).len(), 125, "V^{0,2} points")?;
    eq(scan.jumping_locus(1).len(), 125, "V^{1,2} points")
}

fn c6() -> Outcome {
    let sc = load("example_5_3");
    for k in 1..=4 {
        let dims = sc.twisted_cohomology(&rats(&[(k, 5)]), DEFAULT_BOUND).map_err(|e| e.to_string())?.dims;
        eq(dims, vec![0, 0, 2, 1], &format!("dims at ({k}/5)"))?;
    }
    let scan = sc.charvar_scan(5, 2, DEFAULT_BOUND).unwrap();
    eq(scan.at_least(2), torsion_points(5, 1), "dim H^2 >= 2 at level 5")
}

fn c7() -> Outcome {
    let l1 = poly("t1*t2 - t1 - t2 + 1", 2);
    let l2 = poly("t2 - 1", 2);
    let m = Presentation::free(2, 1)
        .direct_sum(&Presentation::cyclic(2, vec![l1.clone()]).unwrap())
        .and_then(|p| p.direct_sum(&Presentation::cyclic(2, vec![l2.clone()]).unwrap()))
        .map_err(|e| e.to_string())?;
    let want = [LaurentPoly::zero(2), &l1 * &l2, l2.clone(), LaurentPoly::one(2)];
    for (i, w) in want.iter().enumerate() {
        eq(m.char_poly(i).normalize_unit(), w.normalize_unit(), &format!("Δ_{i}"))?;
    }
    Ok(())
}

fn run_prop<S: Strategy>(name: &str, strat: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 256, failure_persistence: None, ..Config::default() });
    runner.run(&strat, f).map_err(|e| format!("{name}: {e}"))
}

fn c8() -> Outcome {
    run_prop("Δ_{i+1} | Δ_i", presentation(2, 3, 3), |p| {
        for i in 0..=p.generators() {
            prop_assert!(p.char_poly(i + 1).divides(&p.char_poly(i)));
        }
        Ok(())
    })?;
    run_prop("Δ_0 multiplicative", (presentation(2, 3, 3), presentation(2, 3, 3)), |(a, b)| {
        let lhs = a.direct_sum(&b).unwrap().char_poly(0).normalize_unit();
        prop_assert_eq!(lhs, (&a.char_poly(0) * &b.char_poly(0)).normalize_unit());
        Ok(())
    })?;
    run_prop("tensor support", (cyclic(2), cyclic(2), 1u64..=6), |(a, b, n)| {
        let sa: BTreeSet<_> = a.support_scan(n).unwrap().into_iter().collect();
        let sb: BTreeSet<_> = b.support_scan(n).unwrap().into_iter().collect();
        let st: BTreeSet<_> = a.tensor_cyclic(&b).unwrap().support_scan(n).unwrap().into_iter().collect();
        prop_assert_eq!(st, sa.intersection(&sb).cloned().collect::<BTreeSet<_>>());
        Ok(())
    })?;
    let algebras: Vec<GradedAlgebra> = scenario::all().into_iter().map(|s| s.algebra).collect();
    let n_alg = algebras.len();
    let form = prop::collection::vec((-6i64..=6, 1i64..=6), 4);
    run_prop("Euler and scaling invariance, d^2 = 0", (0..n_alg, form, 1i64..=9), |(i, w, c)| {
        let alg = &algebras[i];
        let w = OneForm(w[..alg.dim(1)].iter().map(|&(n, d)| rat(n, d)).collect());
        let dims = alg.cohomology_dims(&w).unwrap();
        let chi = |v: &[usize]| v.iter().enumerate().map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) }).sum::<i64>();
        prop_assert_eq!(chi(&dims), chi(&alg.betti()));
        prop_assert_eq!(alg.cohomology_dims(&w.scale(&rat(-c, 7))).unwrap(), dims);
        for p in 0..alg.top_degree() - 1 {
            let d = alg.differential_matrix(&w, p + 1).unwrap().mul(&alg.differential_matrix(&w, p).unwrap()).unwrap();
            prop_assert!(d.is_zero());
        }
        Ok(())
    })?;
    let mut checked = 0usize;
    for name in ["example_4_1", "example_4_2"] {
        let sc = load(name);
        for p in torsion_points(5, 3) {
            let mut seen = BTreeSet::new();
            for k in 0..343usize {
                let shift = [(k % 7) as i64 - 3, (k / 7 % 7) as i64 - 3, (k / 49) as i64 - 3];
                let alpha = ResidueChoice(
                    p.beta().iter().zip(shift).map(|(b, s)| b + Rational::from_integer(BigInt::from(s))).collect(),
                );
                if sc.residue_system.is_admissible(&alpha).unwrap() {
                    seen.insert(sc.aomoto_dims(&alpha).unwrap());
                    checked += 1;
                }
            }
            check(seen.len() == 1, || format!("{name} at {p}: admissible choices disagree {seen:?}"))?;
        }
    }
    check(checked >= 200, || format!("only {checked} admissible choices checked"))?;
    run_prop("gcd divisibility", (nonzero_poly(2, 3, 2), nonzero_poly(2, 3, 2), nonzero_poly(2, 2, 1)), |(p, q, r)| {
        let (a, b) = (&p * &r, &q * &r);
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a) && g.divides(&b) && r.divides(&g));
        Ok(())
    })?;
    run_prop("evaluation morphism", (laurent(2, 4, 3), laurent(2, 4, 3), 1u64..=8, 0i64..8, 0i64..8), |(p, q, n, a, b)| {
        let pt = TorsionPoint::new(n, &[a, b]);
        let ev = |f: &LaurentPoly| f.evaluate_at_torsion(&pt).unwrap();
        prop_assert_eq!(ev(&(&p * &q)), ev(&p).mul(&ev(&q)));
        Ok(())
    })?;
    for n in 1..=30u64 {
        let mut prod = vec![1i64];
        for d in (1..=n).filter(|d| n % d == 0) {
            let f: Vec<i64> = cyclotomic_poly(d).coeffs().iter().map(|c| c.to_i64().unwrap()).collect();
            let mut next = vec![0i64; prod.len() + f.len() - 1];
            for (i, x) in prod.iter().enumerate() {
                for (j, y) in f.iter().enumerate() {
                    next[i + j] += x * y;
                }
            }
            prod = next;
        }
        let mut want = vec![0i64; n as usize + 1];
        want[0] = -1;
        want[n as usize] = 1;
        eq(prod, want, &format!("Π Φ_d for N = {n}"))?;
    }
    Ok(())
}

fn c9() -> Outcome {
    let module = Presentation::cyclic(3, vec![poly("t1*t2^2*t3^2 - 1", 3)]).unwrap();
    let support = module.support_scan(5).map_err(|e| e.to_string())?;
    let scan = load("example_4_1").charvar_scan(5, 1, DEFAULT_BOUND).map_err(|e| e.to_string())?;
    eq(support.len(), 25, "support size")?;
    eq(support, scan.at_least(1), "support vs dim H^1 >= 1")
}

fn c10() -> Outcome {
    let alg = GradedAlgebra::exterior(2, 2);
    run_prop("Koszul vanishing", ((-20i64..=20, 1i64..=9), (-20i64..=20, 1i64..=9)), |((a, b), (c, d))| {
        let w = OneForm(vec![rat(a, b), rat(c, d)]);
        prop_assume!(!w.is_zero());
        prop_assert_eq!(alg.cohomology_dims(&w).unwrap(), vec![0, 0, 0]);
        Ok(())
    })
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("untwisted cohomology of example_4_1 is (1,3,2)", c1),
        ("example_4_1 admissible and non-admissible residues", c2),
        ("example_4_1 monodromy polynomials", c3),
        ("example_4_1 jumping loci at level 5", c4),
        ("example_4_2 dims, monodromy and level-5 scan", c5),
        ("example_5_3 dims (0,0,2,1) on nontrivial level-5 points", c6),
        ("characteristic polynomials of R + R/(l1) + R/(l2)", c7),
        ("property suites", c8),
        ("module support equals the H^1 jumping set", c9),
        ("Koszul vanishing on the exterior algebra", c10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
