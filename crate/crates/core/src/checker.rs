//! Independent verification of representations and embedding certificates.
//!
//! Everything here is recomputed from raw structure constants with the
//! exact linear algebra kernel only; no constructor code is reused.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::embed::EmbeddingCertificate;
use crate::lie::LieLattice;
use crate::linalg::{elementary_divisors, kernel_basis, Domain, EchelonBasis, Matrix, Submodule, Q};
use crate::nilrep::{burde_bound, within_burde_bound};
use crate::rep::LinearRep;

/// Structure constants read off a lattice, with local bracket code.
struct Table {
    r: usize,
    c: Vec<Q>,
}

impl Table {
    fn of(l: &LieLattice) -> Self {
        Table { r: l.rank(), c: l.constants().to_vec() }
    }

    fn c(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.c[(i * self.r + j) * self.r + k]
    }

    fn br(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.r];
        for i in 0..self.r {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.r {
                if v[j].is_zero() {
                    continue;
                }
                let s = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    fn ad(&self, v: &[Q]) -> Matrix {
        let mut m = Matrix::zeros(self.r, self.r);
        for j in 0..self.r {
            let mut e = vec![Q::zero(); self.r];
            e[j] = Q::from_integer(1.into());
            for (k, x) in self.br(v, &e).into_iter().enumerate() {
                m.set(k, j, x);
            }
        }
        m
    }

    fn unit(&self, i: usize) -> Vec<Q> {
        let mut e = vec![Q::zero(); self.r];
        e[i] = Q::from_integer(1.into());
        e
    }

    fn ads(&self) -> Vec<Matrix> {
        (0..self.r).map(|i| self.ad(&self.unit(i))).collect()
    }

    /// `{x : tr(ad_x a) = 0 for all a in the associative envelope of ad L}`,
    /// the largest ideal acting nilpotently, i.e. the nilradical.
    fn nilradical(&self) -> Submodule {
        let ads = self.ads();
        let mut env = EchelonBasis::new(self.r * self.r);
        let mut elems = Vec::new();
        let mut frontier: Vec<Matrix> = Vec::new();
        for a in &ads {
            if env.insert(&a.vectorize()) {
                elems.push(a.clone());
                frontier.push(a.clone());
            }
        }
        while let Some(x) = frontier.pop() {
            for a in &ads {
                let p = &x * a;
                if env.insert(&p.vectorize()) {
                    elems.push(p.clone());
                    frontier.push(p);
                }
            }
        }
        let mut m = Matrix::zeros(self.r, elems.len().max(1));
        for (i, a) in ads.iter().enumerate() {
            for (j, e) in elems.iter().enumerate() {
                m.set(i, j, (a * e).trace());
            }
        }
        kernel_basis(&m, Domain::Integer)
    }

    /// Killing-orthogonal complement of `[L, L]`.
    fn solvable_radical(&self) -> Submodule {
        let ads = self.ads();
        let mut derived = Vec::new();
        for i in 0..self.r {
            for j in i + 1..self.r {
                derived.push(self.br(&self.unit(i), &self.unit(j)));
            }
        }
        let d = Matrix::from_rows(&derived, self.r);
        let mut m = Matrix::zeros(self.r, d.rows().max(1));
        for i in 0..self.r {
            for (k, row) in d.row_vecs().iter().enumerate() {
                let adv = row.iter().enumerate().fold(Matrix::zeros(self.r, self.r), |acc, (j, c)| {
                    if c.is_zero() {
                        acc
                    } else {
                        &acc + &ads[j].scale(c)
                    }
                });
                m.set(i, k, (&ads[i] * &adv).trace());
            }
        }
        kernel_basis(&m, Domain::Integer)
    }

    /// Whether the span of `rows` is a nilpotent ideal.
    fn is_nilpotent_ideal(&self, rows: &[Vec<Q>]) -> bool {
        let sub = Submodule::from_rows(Domain::Rational, rows, self.r);
        for v in rows {
            for i in 0..self.r {
                if !sub.contains_vector(&self.br(v, &self.unit(i))) {
                    return false;
                }
            }
        }
        let mut cur = sub.clone();
        for _ in 0..=self.r {
            if cur.is_zero() {
                return true;
            }
            let mut next = Vec::new();
            for u in cur.basis_vectors() {
                for v in rows {
                    next.push(self.br(&u, v));
                }
            }
            cur = Submodule::from_rows(Domain::Rational, &next, self.r);
        }
        cur.is_zero()
    }
}

/// Outcome of [`verify_representation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationReport {
    pub rank: usize,
    pub degree: usize,
    pub homomorphism: bool,
    pub homomorphism_failure: Option<(usize, usize)>,
    pub integral: bool,
    pub faithful: bool,
    /// Basis of the kernel when not faithful.
    pub kernel: Vec<Vec<Q>>,
    pub elementary_divisors: Vec<BigInt>,
    pub nil_representation: bool,
    pub nil_failure: Option<usize>,
    pub nilradical_rank: usize,
    pub degree_within_bound: bool,
    /// `r + B(r)`.
    pub bound: Q,
}

impl RepresentationReport {
    pub fn all_passed(&self) -> bool {
        self.homomorphism && self.integral && self.faithful && self.nil_representation && self.degree_within_bound
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.homomorphism {
            out.push("homomorphism");
        }
        if !self.integral {
            out.push("integrality");
        }
        if !self.faithful {
            out.push("faithfulness");
        }
        if !self.nil_representation {
            out.push("nil-representation");
        }
        if !self.degree_within_bound {
            out.push("degree bound");
        }
        out
    }
}

/// Checks a representation against the lattice: homomorphism, integrality,
/// faithfulness, nilpotency on the nilradical and the degree bound.
pub fn verify_representation(l: &LieLattice, rep: &LinearRep) -> RepresentationReport {
    let t = Table::of(l);
    let r = t.r;
    let n = rep.degree();
    let mats = rep.matrices();
    assert_eq!(mats.len(), r, "one matrix per basis vector");
    let image = |v: &[Q]| {
        v.iter().zip(mats).fold(Matrix::zeros(n, n), |acc, (c, m)| if c.is_zero() { acc } else { &acc + &m.scale(c) })
    };

    let mut homomorphism_failure = None;
    'outer: for i in 0..r {
        for j in i + 1..r {
            let lhs = image(&t.br(&t.unit(i), &t.unit(j)));
            let rhs = &(&mats[i] * &mats[j]) - &(&mats[j] * &mats[i]);
            if lhs != rhs {
                homomorphism_failure = Some((i, j));
                break 'outer;
            }
        }
    }

    let integral = l.domain() == Domain::Rational || mats.iter().all(Matrix::is_integral);

    let stacked = Matrix::from_rows(&mats.iter().map(Matrix::vectorize).collect::<Vec<_>>(), n * n);
    let faithful = stacked.rank() == r;
    let kernel = if faithful { Vec::new() } else { kernel_basis(&stacked, Domain::Integer).basis_vectors() };
    let elementary_divisors = if stacked.is_integral() { elementary_divisors(&stacked).unwrap_or_default() } else { Vec::new() };

    let rn = t.nilradical();
    let mut nil_failure = None;
    for (idx, v) in rn.basis_vectors().iter().enumerate() {
        if !image(v).pow(n as u64).is_zero() {
            nil_failure = Some(idx);
            break;
        }
    }

    let (degree_within_bound, bound) = if r == 0 {
        (n <= 1, Q::from_integer(1.into()))
    } else {
        let ok = n <= r || within_burde_bound(n - r, r);
        (ok, Q::from_integer(r.into()) + burde_bound(r))
    };

    RepresentationReport {
        rank: r,
        degree: n,
        homomorphism: homomorphism_failure.is_none(),
        homomorphism_failure,
        integral,
        faithful,
        kernel,
        elementary_divisors,
        nil_representation: nil_failure.is_none(),
        nil_failure,
        nilradical_rank: rn.rank(),
        degree_within_bound,
        bound,
    }
}

/// Outcome of [`verify_certificate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificateReport {
    pub extension_valid: bool,
    pub extension_integral: bool,
    pub injection_integral: bool,
    pub injection_homomorphism: bool,
    pub injection_injective: bool,
    pub nilpotent_part_is_ideal: bool,
    pub nilpotent_part_is_radical: bool,
    pub complement_is_subalgebra: bool,
    pub radical_image_contained: bool,
    pub solvable_radical_rank: usize,
    pub nilpotent_rank: usize,
    pub rank_matches: bool,
}

impl CertificateReport {
    pub fn all_passed(&self) -> bool {
        self.extension_valid
            && self.extension_integral
            && self.injection_integral
            && self.injection_homomorphism
            && self.injection_injective
            && self.nilpotent_part_is_ideal
            && self.nilpotent_part_is_radical
            && self.complement_is_subalgebra
            && self.radical_image_contained
            && self.rank_matches
    }
}

/// Re-verifies an embedding certificate from its raw data.
pub fn verify_certificate(cert: &EmbeddingCertificate) -> CertificateReport {
    let mut rep = CertificateReport::default();
    let l = Table::of(&cert.original);
    let e = Table::of(&cert.extension);
    let inj = &cert.injection;
    let nr = cert.nilpotent_rank;
    let d = e.r;
    rep.nilpotent_rank = nr;
    if inj.rows() != l.r || inj.cols() != d || nr > d {
        return rep;
    }
    rep.extension_valid = cert.extension.validate().is_valid();
    rep.extension_integral = cert.extension.is_integral();
    rep.injection_integral = inj.is_integral();
    rep.injection_injective = inj.rank() == l.r;
    rep.injection_homomorphism = (0..l.r).all(|i| {
        (i + 1..l.r).all(|j| inj.vec_mul(&l.br(&l.unit(i), &l.unit(j))) == e.br(inj.row(i), inj.row(j)))
    });

    let nrows: Vec<Vec<Q>> = (0..nr).map(|i| e.unit(i)).collect();
    rep.nilpotent_part_is_ideal = e.is_nilpotent_ideal(&nrows);
    let nbar = Submodule::from_rows(Domain::Integer, &nrows, d);
    rep.nilpotent_part_is_radical = e.nilradical().same_span(&nbar);
    rep.complement_is_subalgebra = (nr..d).all(|a| {
        (a + 1..d).all(|b| {
            let w = e.br(&e.unit(a), &e.unit(b));
            w[..nr].iter().all(Zero::is_zero)
        })
    });
    rep.radical_image_contained = l
        .nilradical()
        .basis_vectors()
        .iter()
        .all(|v| inj.vec_mul(v)[nr..].iter().all(Zero::is_zero));
    rep.solvable_radical_rank = l.solvable_radical().rank();
    rep.rank_matches = rep.solvable_radical_rank == nr;
    rep
}

/// Nilradical computed by the checker's own route, for cross-checks.
pub fn independent_nilradical(l: &LieLattice) -> Submodule {
    Table::of(l).nilradical()
}

/// Solvable radical computed by the checker's own route.
pub fn independent_solvable_radical(l: &LieLattice) -> Submodule {
    Table::of(l).solvable_radical()
}
