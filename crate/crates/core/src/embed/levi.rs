//! Levi decomposition over the rationals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{LieLattice, LieSubmodule};
use crate::linalg::{add_scaled, dot, is_zero_vec, unit_vec, zero_vec, Domain, Matrix, Submodule, Q};

/// Rational derived series `R ⊋ [R,R] ⊋ ... ⊋ 0` of a solvable subalgebra.
fn rational_derived_series(l: &LieLattice, r: &Submodule) -> Vec<Submodule> {
    let mut out = vec![r.rational_span()];
    while !out.last().unwrap().is_zero() {
        let last = out.last().unwrap();
        let next = l.bracket_span(last, last).rational_span();
        if &next == last {
            break;
        }
        out.push(next);
    }
    out
}

/// Returns `(R_s, S)` with `S` a semisimple subalgebra complementary to the
/// solvable radical, both over the rationals.
pub fn levi_decomposition(l: &LieLattice) -> Result<(LieSubmodule, LieSubmodule)> {
    let lq = l.with_domain(Domain::Rational);
    let n = lq.rank();
    let radical = lq.solvable_radical()?;
    let rbasis = radical.module.basis_vectors();
    let mut complement: Vec<Vec<Q>> = Vec::new();
    let mut chosen = rbasis.clone();
    for i in 0..n {
        let e = unit_vec(n, i);
        let mut trial = chosen.clone();
        trial.push(e.clone());
        if Matrix::from_rows(&trial, n).rank() == trial.len() {
            chosen = trial;
            complement.push(e);
        }
    }
    let t = complement.len();
    if t == 0 {
        return Ok((radical, LieSubmodule::new(&lq, Submodule::zero(Domain::Rational, n))));
    }
    let full = Matrix::from_rows(&chosen, n);
    let p = rbasis.len();
    // quotient structure constants: [v_i, v_j] = Σ c_ij^l v_l mod R
    let coords = |w: &[Q]| full.solve_left(w).expect("basis of L");
    let mut quot = vec![vec![zero_vec(t); t]; t];
    for i in 0..t {
        for j in 0..t {
            let c = coords(&lq.bracket_vec(&complement[i], &complement[j]));
            quot[i][j] = c[p..].to_vec();
        }
    }
    let series = rational_derived_series(&lq, &radical.module);
    let mut v = complement;
    for w in series.windows(2).map(|w| (w[0].clone(), w[1].clone())).chain(
        series.last().filter(|s| !s.is_zero()).map(|s| (s.clone(), Submodule::zero(Domain::Rational, n))),
    ) {
        let (a, b) = w;
        v = lift_step(&lq, &v, &quot, &a, &b)?;
    }
    let levi = Submodule::from_rows(Domain::Rational, &v, n);
    let levi_sub = LieSubmodule::new(&lq, levi);
    if !levi_sub.is_subalgebra || levi_sub.rank() != t {
        return Err(Error::LeviLift(t));
    }
    let restricted = lq.restrict(levi_sub.basis(), Domain::Rational)?;
    if restricted.killing_form().determinant().is_zero() {
        return Err(Error::Invariant("Levi factor has degenerate Killing form".into()));
    }
    if !levi_sub.module.intersect(&radical.module.rational_span()).is_zero() {
        return Err(Error::Invariant("Levi factor meets the radical".into()));
    }
    Ok((radical, levi_sub))
}

/// Corrects `v_i -> v_i + ρ_i` with `ρ_i ∈ A` so that the defect of the
/// quotient brackets moves from `A` into `B`.
fn lift_step(l: &LieLattice, v: &[Vec<Q>], quot: &[Vec<Vec<Q>>], a: &Submodule, b: &Submodule) -> Result<Vec<Vec<Q>>> {
    let n = l.rank();
    let t = v.len();
    let abasis = a.basis_vectors();
    let da = abasis.len();
    // linear functionals vanishing exactly on B
    let ann: Vec<Vec<Q>> = b.basis().transpose().left_kernel().row_vecs();
    let defect = |i: usize, j: usize, v: &[Vec<Q>]| {
        let mut d = l.bracket_vec(&v[i], &v[j]);
        for (lidx, c) in quot[i][j].iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut d, &v[lidx], &-c.clone());
            }
        }
        d
    };
    let unknowns = t * da;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            let d = defect(i, j, v);
            // coefficient of unknown (p, q) = ρ_p's q-th coordinate in A
            let mut contrib: Vec<Vec<Q>> = vec![zero_vec(n); unknowns];
            for (qi, aq) in abasis.iter().enumerate() {
                // [v_i, ρ_j]
                add_scaled(&mut contrib[j * da + qi], &l.bracket_vec(&v[i], aq), &Q::from_integer(1.into()));
                // -[v_j, ρ_i]
                add_scaled(&mut contrib[i * da + qi], &l.bracket_vec(&v[j], aq), &Q::from_integer((-1).into()));
                // -Σ_l c_ij^l ρ_l
                for (lidx, c) in quot[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        add_scaled(&mut contrib[lidx * da + qi], aq, &-c.clone());
                    }
                }
            }
            for w in &ann {
                rows.push(contrib.iter().map(|col| dot(w, col)).collect());
                rhs.push(-dot(w, &d));
            }
        }
    }
    let mut out = v.to_vec();
    if rows.is_empty() || da == 0 {
        return Ok(out);
    }
    let system = Matrix::from_rows(&rows, unknowns).transpose();
    let sol = system.solve_left(&rhs).ok_or(Error::LeviLift(t))?;
    for i in 0..t {
        for (qi, aq) in abasis.iter().enumerate() {
            add_scaled(&mut out[i], aq, &sol[i * da + qi]);
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            let d = defect(i, j, &out);
            if !is_zero_vec(&d) && !b.contains_vector(&d) {
                return Err(Error::LeviLift(t));
            }
        }
    }
    Ok(out)
}
