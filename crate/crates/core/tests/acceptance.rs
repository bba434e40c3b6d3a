//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ado_core::catalog;
use ado_core::checker::independent_nilradical;
use ado_core::embed::jordan_chevalley;
use ado_core::json::lattice_from_str;
use ado_core::linalg::{q, frac, unit_vec, Domain, Matrix, Submodule, Q};
use ado_core::nilrep::{monomial_count, nilpotent_faithful_rep, within_burde_bound};
use ado_core::pbw::{Monomial, TruncatedUEA};
use ado_core::poly::minimal_polynomial;
use ado_core::{ado_representation, embed_splittable, verify_certificate, verify_representation, AdoOptions, LieLattice};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x05ee_dad0;
const ADO_TIME_LIMIT: Duration = Duration::from_secs(60);
const NILREP_TIME_LIMIT: Duration = Duration::from_secs(10);
const EMBED_TIME_LIMIT: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn catalog_all() -> Vec<(&'static str, LieLattice)> {
    catalog::NAMES.iter().map(|&n| (n, catalog::lookup(n).unwrap())).collect()
}

fn nilpotent_catalog() -> Vec<(&'static str, LieLattice)> {
    catalog_all().into_iter().filter(|(_, l)| l.is_nilpotent()).collect()
}

fn strict() -> AdoOptions {
    AdoOptions { strict: true, ..AdoOptions::default() }
}

fn mat_bracket(l: &LieLattice, u: &[Q], v: &[Q]) -> Vec<Q> {
    l.bracket(u, v).unwrap()
}

fn criterion_1() -> Outcome {
    let mut summary = Vec::new();
    for (name, l) in catalog_all() {
        let t0 = Instant::now();
        let (rep, report, _) = ado_representation(&l, strict()).map_err(|e| format!("{name}: {e}"))?;
        let elapsed = t0.elapsed();
        ensure!(report.verification.all_passed(), "{name}: {:?}", report.verification.failures());
        ensure!(Q::from_integer(rep.degree().into()) <= report.bound, "{name}: degree {} above bound", rep.degree());
        ensure!(elapsed < ADO_TIME_LIMIT, "{name}: {elapsed:?}");
        summary.push(format!("{name}={}", rep.degree()));
    }
    Ok(summary.join(" "))
}

fn criterion_2() -> Outcome {
    let t0 = Instant::now();
    let h3 = nilpotent_faithful_rep(&catalog::heisenberg3()).map_err(|e| e.to_string())?;
    ensure!(h3.degree() == 7, "h3 degree {}", h3.degree());
    ensure!(within_burde_bound(7, 3), "7 exceeds B(3)");
    ensure!(t0.elapsed() < NILREP_TIME_LIMIT, "h3 took {:?}", t0.elapsed());
    for r in 1..=6 {
        let t0 = Instant::now();
        let d = nilpotent_faithful_rep(&catalog::abelian(r)).map_err(|e| e.to_string())?.degree();
        ensure!(d == r + 1, "abelian_{r}: degree {d}");
        ensure!(t0.elapsed() < NILREP_TIME_LIMIT, "abelian_{r} took {:?}", t0.elapsed());
    }
    for (name, l) in nilpotent_catalog() {
        let c = monomial_count(&l).map_err(|e| e.to_string())?;
        ensure!(within_burde_bound(c, l.rank()), "{name}: {c} monomials");
    }
    Ok("h3=7, abelian_r=r+1".into())
}

/// Rewrites a word in the tensor algebra to ordered monomials using
/// `ab -> ba + [a,b]` whenever `a > b`.
fn tensor_normal_form(l: &LieLattice, word: &[usize]) -> BTreeMap<Vec<usize>, Q> {
    let mut todo: Vec<(Vec<usize>, Q)> = vec![(word.to_vec(), Q::one())];
    let mut done: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
    while let Some((w, c)) = todo.pop() {
        match (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1]) {
            None => *done.entry(w).or_insert_with(Q::zero) += c,
            Some(p) => {
                let (a, b) = (w[p], w[p + 1]);
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                todo.push((swapped, c.clone()));
                for (k, s) in l.bracket_basis(a, b).iter().enumerate() {
                    if !s.is_zero() {
                        let mut nw = w[..p].to_vec();
                        nw.push(k);
                        nw.extend_from_slice(&w[p + 2..]);
                        todo.push((nw, &c * s));
                    }
                }
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let lattices: Vec<_> = nilpotent_catalog()
        .into_iter()
        .filter(|(_, l)| l.rank() <= 3 && l.nilpotency_class().unwrap() <= 3)
        .collect();
    ensure!(!lattices.is_empty(), "no lattices");
    for n in 0..500 {
        let (name, l) = &lattices[n % lattices.len()];
        let t = TruncatedUEA::at_class(l).unwrap();
        let a = t.basis().adapted();
        let weights = t.basis().weights();
        let len = rng.gen_range(0..=5);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..a.rank())).collect();
        let mut expected = vec![Q::zero(); t.dim()];
        for (w, c) in tensor_normal_form(a, &word) {
            let mut m = Monomial::one(a.rank());
            for &x in &w {
                m.0[x] += 1;
            }
            if m.weight(weights) > t.cutoff() {
                continue;
            }
            let idx = t.index_of(&m).ok_or_else(|| format!("{name}: missing monomial {m:?}"))?;
            expected[idx] += c;
        }
        ensure!(t.straighten(&word) == expected, "{name}: word {word:?}");
    }
    Ok(format!("500 words over {} lattices", lattices.len()))
}

fn is_derivation(l: &LieLattice, d: &Matrix) -> bool {
    let r = l.rank();
    (0..r).all(|i| {
        (0..r).all(|j| {
            let (ei, ej) = (unit_vec(r, i), unit_vec(r, j));
            let lhs = d.mul_vec(&mat_bracket(l, &ei, &ej));
            let a = mat_bracket(l, &d.mul_vec(&ei), &ej);
            let b = mat_bracket(l, &ei, &d.mul_vec(&ej));
            lhs.iter().zip(a.iter().zip(&b)).all(|(x, (y, z))| *x == y + z)
        })
    })
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let lattices: Vec<_> = nilpotent_catalog().into_iter().filter(|(_, l)| l.rank() <= 5).collect();
    let prepared: Vec<_> = lattices
        .iter()
        .map(|(n, l)| (*n, l, TruncatedUEA::at_class(l).unwrap(), l.derivation_basis()))
        .collect();
    let (mut inner, mut outer) = (0, 0);
    for n in 0..200 {
        let (name, l, t, ders) = &prepared[n % prepared.len()];
        let r = l.rank();
        let d = if n % 2 == 0 {
            inner += 1;
            let x: Vec<Q> = (0..r).map(|_| q(rng.gen_range(-3..=3))).collect();
            l.ad(&x)
        } else {
            outer += 1;
            let mut d = Matrix::zeros(r, r);
            for b in ders {
                d = &d + &b.scale(&q(rng.gen_range(-2..=2)));
            }
            d
        };
        ensure!(is_derivation(l, &d), "{name}: sample {n} is not a derivation");
        let ds = t.derivation_star(&d).map_err(|e| format!("{name}: {e}"))?;
        for j in 0..t.dim() {
            for i in 0..t.dim() {
                ensure!(
                    ds.get(i, j).is_zero() || t.monomial_weight(i) >= t.monomial_weight(j),
                    "{name}: D* lowers weight at ({i}, {j})"
                );
            }
        }
        for k in 0..r {
            let e = unit_vec(r, k);
            let lk = t.left_mult_matrix(&e);
            let lhs = &(&ds * &lk) - &(&lk * &ds);
            ensure!(lhs == t.left_mult_matrix(&d.mul_vec(&e)), "{name}: commutator identity fails for basis {k}");
        }
    }
    Ok(format!("{inner} inner, {outer} solved"))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    for _ in 0..3 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            let k = q(rng.gen_range(-2..=2));
            for j in 0..n {
                let v = m.get(b, j) + m.get(a, j) * &k;
                m.set(b, j, v);
            }
        }
    }
    m
}

fn jordan_structured(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut j = Matrix::zeros(n, n);
    let mut i = 0;
    while i < n {
        let size = rng.gen_range(1..=(n - i).min(3));
        let ev = q(rng.gen_range(-2..=2));
        for k in i..i + size {
            j.set(k, k, ev.clone());
            if k + 1 < i + size {
                j.set(k, k + 1, q(1));
            }
        }
        i += size;
    }
    let p = random_unimodular(rng, n);
    &(&p * &j) * &p.inverse().unwrap()
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    for n in 0..300 {
        let size = 1 + n % 6;
        let a = if n % 3 == 0 {
            jordan_structured(&mut rng, size)
        } else {
            let data = (0..size * size).map(|_| random_rational(&mut rng)).collect();
            Matrix::from_vec(size, size, data)
        };
        let (s, nn) = jordan_chevalley(&a);
        ensure!(&s + &nn == a, "sample {n}: S + N != A");
        ensure!(&s * &nn == &nn * &s, "sample {n}: S and N do not commute");
        ensure!(nn.pow(6).is_zero() && nn.pow(size as u64).is_zero(), "sample {n}: N not nilpotent");
        ensure!(minimal_polynomial(&s).is_squarefree(), "sample {n}: S not semisimple");
        let mut powers = Vec::with_capacity(size);
        let mut p = Matrix::identity(size);
        for _ in 0..size {
            powers.push(p.vectorize());
            p = &p * &a;
        }
        let system = Matrix::from_rows(&powers, size * size);
        ensure!(system.solve_left(&s.vectorize()).is_some(), "sample {n}: S not a polynomial in A");
    }
    Ok("300 matrices".into())
}

fn criterion_6_7() -> (Outcome, Outcome) {
    let t0 = Instant::now();
    let mut certs = Vec::new();
    for (name, l) in catalog_all() {
        let cert = match embed_splittable(&l, ado_core::embed::DEFAULT_MAX_SCALAR) {
            Ok(c) => c,
            Err(e) => {
                let msg = format!("{name}: {e}");
                return (Err(msg.clone()), Err(msg));
            }
        };
        certs.push((name, l, cert));
    }
    let c6 = (|| {
        for (name, l, cert) in &certs {
            let rep = verify_certificate(cert);
            ensure!(rep.all_passed(), "{name}: {rep:?}");
            ensure!(cert.nilpotent_rank == l.solvable_radical().unwrap().rank(), "{name}: rank mismatch");
        }
        let churkin = certs.iter().find(|(n, _, _)| *n == "churkin_sl2_t2").ok_or("churkin missing")?;
        ensure!(churkin.1.nilradical().unwrap().rank() < churkin.2.nilpotent_rank, "churkin: extension does not enlarge the nilradical");
        ensure!(t0.elapsed() < EMBED_TIME_LIMIT, "took {:?}", t0.elapsed());
        Ok(format!("{} certificates, {:?}", certs.len(), t0.elapsed()))
    })();
    let c7 = (|| {
        let mut steps = 0;
        for (name, l, cert) in &certs {
            let mut expected = l.nilradical().unwrap().rank();
            for (k, step) in cert.trace.iter().enumerate() {
                ensure!(step.solvable_dim == cert.nilpotent_rank, "{name} step {k}: nilpotent part changed size");
                ensure!(step.nilradical_before == expected, "{name} step {k}: trace is not contiguous");
                ensure!(step.nilradical_after == step.nilradical_before + 1, "{name} step {k}: radical grew by {}", step.nilradical_after as i64 - step.nilradical_before as i64);
                expected = step.nilradical_after;
                steps += 1;
            }
            let final_rank = independent_nilradical(&cert.expanded).rank();
            ensure!(final_rank == expected && expected == cert.nilpotent_rank, "{name}: final radical rank {final_rank}");
        }
        Ok(format!("{steps} expansion steps"))
    })();
    (c6, c7)
}

fn criterion_8() -> Outcome {
    for (name, l) in catalog_all() {
        let (rep, _, _) = ado_representation(&l, strict()).map_err(|e| format!("{name}: {e}"))?;
        let n = rep.degree() as u64;
        for x in independent_nilradical(&l).basis_vectors() {
            ensure!(rep.image(&x).pow(n).is_zero(), "{name}: {x:?} acts non-nilpotently");
        }
    }
    Ok("all catalog entries".into())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let algebras: Vec<_> = nilpotent_catalog()
        .into_iter()
        .filter(|(_, l)| l.rank() <= 5)
        .map(|(n, l)| (n, TruncatedUEA::at_class(&l).unwrap()))
        .collect();
    let weight = |t: &TruncatedUEA, u: &[Q]| -> Option<usize> {
        u.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| t.monomials()[i].weight(t.basis().weights())).min()
    };
    let mut nonzero = 0;
    for n in 0..1000 {
        let (name, t) = &algebras[n % algebras.len()];
        let mut sparse = || {
            let mut v = vec![Q::zero(); t.dim()];
            for _ in 0..rng.gen_range(1..=3) {
                v[rng.gen_range(0..t.dim())] = q(rng.gen_range(1..=3));
            }
            v
        };
        let (u, v) = (sparse(), sparse());
        let uv = t.multiply(&u, &v);
        if let (Some(a), Some(b), Some(c)) = (weight(t, &u), weight(t, &v), weight(t, &uv)) {
            nonzero += 1;
            ensure!(c >= a + b, "{name}: weight {c} < {a} + {b}");
        }
    }
    Ok(format!("1000 products, {nonzero} nonzero"))
}

fn criterion_10() -> Outcome {
    let h3 = catalog::heisenberg3();
    let rep = verify_representation(&h3, &h3.adjoint_rep());
    ensure!(!rep.faithful && !rep.all_passed(), "adjoint of h3 accepted");
    let kernel = Submodule::from_rows(Domain::Rational, &rep.kernel, 3);
    ensure!(kernel.same_span(&Submodule::from_rows(Domain::Rational, &[vec![q(0), q(0), q(1)]], 3)), "kernel {:?}", rep.kernel);

    let corrupted = r#"{"rank":3,"names":["x","y","z"],"brackets":[
        {"i":0,"j":1,"coeffs":["0","0","1"]},
        {"i":1,"j":0,"coeffs":["0","0","1"]}]}"#;
    let bad = lattice_from_str(corrupted).map_err(|e| e.to_string())?;
    ensure!(!bad.validate().is_valid(), "corrupted antisymmetry accepted");
    let jacobi = r#"{"rank":3,"names":["x","y","z"],"brackets":[
        {"i":0,"j":1,"coeffs":["0","0","1"]},
        {"i":0,"j":2,"coeffs":["1","0","0"]},
        {"i":1,"j":2,"coeffs":["0","1","0"]}]}"#;
    let bad = lattice_from_str(jacobi).map_err(|e| e.to_string())?;
    let report = bad.validate();
    ensure!(!report.jacobi.is_empty(), "Jacobi violation accepted");
    ensure!(ado_representation(&bad, AdoOptions::default()).is_err(), "pipeline accepted an invalid lattice");
    Ok("adjoint(h3) kernel <z>; corrupted files rejected".into())
}

fn run(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let t0 = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
    });
    report(name, outcome, t0.elapsed())
}

fn report(name: &str, outcome: Outcome, elapsed: Duration) -> bool {
    match outcome {
        Ok(detail) => {
            println!("criterion {name}: PASS ({detail}) [{:.1}s]", elapsed.as_secs_f64());
            true
        }
        Err(why) => {
            println!("criterion {name}: FAIL ({why}) [{:.1}s]", elapsed.as_secs_f64());
            false
        }
    }
}

fn main() {
    let mut ok = true;
    ok &= run("1 (strict pipeline within r + B(r))", criterion_1);
    ok &= run("2 (nilpotent degrees)", criterion_2);
    ok &= run("3 (straightening vs tensor rewriting)", criterion_3);
    ok &= run("4 (extended derivations)", criterion_4);
    ok &= run("5 (Jordan-Chevalley)", criterion_5);
    let t0 = Instant::now();
    let (c6, c7) = catch_unwind(criterion_6_7).unwrap_or_else(|_| (Err("panicked".into()), Err("panicked".into())));
    let elapsed = t0.elapsed();
    ok &= report("6 (embedding certificates)", c6, elapsed);
    ok &= report("7 (expansion loop variant)", c7, elapsed);
    ok &= run("8 (nil-representation)", criterion_8);
    ok &= run("9 (weight superadditivity)", criterion_9);
    ok &= run("10 (negative controls)", criterion_10);
    if !ok {
        std::process::exit(1);
    }
}
