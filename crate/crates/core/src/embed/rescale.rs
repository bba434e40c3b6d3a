//! Passing from the rational expansion back to an integral splittable
//! extension.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::LieLattice;
use crate::linalg::{lcm_denominators_vec, zero_vec, Domain, Submodule, Q};

use super::expansion::ExpansionState;
use super::EmbeddingCertificate;

fn lcm_all<'a>(it: impl Iterator<Item = &'a Q>) -> BigInt {
    it.fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn describe(dens: &[BigInt]) -> String {
    dens.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Builds the integral extension from a finished expansion.
pub fn integral_rescale(l: &LieLattice, state: &ExpansionState, max_scalar: u64) -> Result<EmbeddingCertificate> {
    if !state.is_done() {
        return Err(Error::Invariant("expansion has not terminated".into()));
    }
    let k = &state.algebra;
    let d = state.dim();
    let s = state.base;
    let nx = state.x_count;
    let nd = s + nx;
    let emb = &state.embedding;
    let r = l.rank();
    let bound = BigInt::from(max_scalar);

    let x_brackets: Vec<Vec<Q>> = (s..nd)
        .flat_map(|j| (0..r).map(move |i| (j, i)))
        .map(|(j, i)| k.bracket_vec(&crate::linalg::unit_vec(d, j), emb.row(i)))
        .collect();
    for w in &x_brackets {
        if w[s..].iter().any(|c| !c.is_zero()) {
            return Err(Error::Invariant("added generator brackets outside the nilradical".into()));
        }
    }
    let xx: Vec<Vec<Q>> = (s..nd)
        .flat_map(|i| (i + 1..nd).map(move |j| (i, j)))
        .map(|(i, j)| k.bracket_basis(i, j).to_vec())
        .collect();
    let mut mu = lcm_all(x_brackets.iter().flatten()).lcm(&lcm_all(xx.iter().flat_map(|w| w[s..nd].iter())));
    loop {
        if mu > bound {
            return Err(Error::ScalarSearchExceeded {
                which: "mu",
                bound: max_scalar,
                denominators: describe(&[mu.clone()]),
            });
        }
        let muq = Q::from_integer(mu.clone());
        let mu2 = &muq * &muq;
        let mut missing = Vec::new();
        for w in &xx {
            for c in &w[..s] {
                let v = c * &mu2;
                if !v.is_integer() {
                    missing.push(v.denom().clone());
                }
            }
        }
        if missing.is_empty() {
            break;
        }
        mu *= missing.iter().fold(BigInt::one(), |a, b| a.lcm(b));
    }
    let muq = Q::from_integer(mu.clone());

    // N = <x_1..x_s, mu x'_1..mu x'_k>
    let mut nrows: Vec<Vec<Q>> = Vec::with_capacity(nd);
    for i in 0..nd {
        let mut v = zero_vec(d);
        v[i] = if i < s { Q::one() } else { muq.clone() };
        nrows.push(v);
    }
    let n_module = Submodule::from_rows(Domain::Integer, &nrows, d);

    // lambda: emb(L) ⊆ (1/lambda) N ⊕ S̄
    let mut ncoords: Vec<Q> = Vec::new();
    let mut srows: Vec<Vec<Q>> = Vec::new();
    for i in 0..r {
        let row = emb.row(i);
        for (a, c) in row[..nd].iter().enumerate() {
            ncoords.push(if a < s { c.clone() } else { c / &muq });
        }
        let mut sv = zero_vec(d);
        sv[nd..].clone_from_slice(&row[nd..]);
        srows.push(sv);
    }
    let lambda = lcm_denominators_vec(&ncoords);
    if lambda > bound {
        return Err(Error::ScalarSearchExceeded {
            which: "lambda",
            bound: max_scalar,
            denominators: describe(&ncoords.iter().map(|c| c.denom().clone()).filter(|x| !x.is_one()).collect::<Vec<_>>()),
        });
    }
    let lq = Q::from_integer(lambda.clone());
    let s_bar = Submodule::from_rows(Domain::Integer, &srows, d);

    // N̄ = Σ λ^{-i} N_i
    let mut terms = vec![n_module.clone()];
    while !terms.last().unwrap().is_zero() {
        if terms.len() > d + 1 {
            return Err(Error::NotNilpotent);
        }
        let next = k.with_domain(Domain::Integer).bracket_span(terms.last().unwrap(), &n_module);
        terms.push(next);
    }
    let mut nbar_rows: Vec<Vec<Q>> = Vec::new();
    let mut scale = Q::one();
    for t in &terms {
        scale /= &lq;
        for v in t.basis_vectors() {
            nbar_rows.push(v.iter().map(|c| c * &scale).collect());
        }
    }
    let n_bar = Submodule::from_rows(Domain::Integer, &nbar_rows, d);
    if n_bar.rank() != nd || s_bar.rank() != d - nd {
        return Err(Error::Invariant("rescaled parts have the wrong rank".into()));
    }
    let basis = n_bar.basis().vstack(s_bar.basis());
    let mut extension = k.restrict(&basis, Domain::Integer)?;
    let names = (0..nd).map(|i| format!("n{}", i + 1)).chain((0..d - nd).map(|i| format!("s{}", i + 1))).collect();
    extension = extension.with_names(names);
    let injection = emb * &basis.inverse().expect("basis of the expansion");
    if !injection.is_integral() {
        return Err(Error::IntegralityViolated("injection into the extension".into()));
    }
    Ok(EmbeddingCertificate {
        original: l.clone(),
        extension,
        injection,
        nilpotent_rank: nd,
        mu,
        lambda,
        expanded: k.clone(),
        nilpotent_basis: n_bar.basis().clone(),
        complement_basis: s_bar.basis().clone(),
        trace: state.trace.clone(),
    })
}
