//! Truncated universal enveloping algebras of nilpotent lattices.
//!
//! The quotient `U(L) / U^m(L)` has as basis the ordered monomials of
//! weight at most `m` in a basis adapted to the lower central series.
//! Products are put in normal form by rewriting `x_j x_i = x_i x_j - [x_i, x_j]`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::LieLattice;
use crate::linalg::{Domain, Matrix, Submodule, Q};

/// Exponent vector of an ordered monomial `x_1^a_1 ... x_r^a_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(r: usize) -> Self {
        Monomial(vec![0; r])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weight(&self, weights: &[usize]) -> usize {
        self.0.iter().zip(weights).map(|(&a, &w)| a as usize * w).sum()
    }

    fn first_index(&self) -> Option<usize> {
        self.0.iter().position(|&a| a > 0)
    }

    /// Letters in nondecreasing index order.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(i, a as usize));
        }
        out
    }
}

/// A basis of a nilpotent lattice adapted to its isolated lower central
/// series, deepest term first, with the weight of each element.
#[derive(Clone, Debug)]
pub struct WeightedPBWBasis {
    lattice: LieLattice,
    adapted: LieLattice,
    change: Matrix,
    change_inv: Matrix,
    weights: Vec<usize>,
    class: usize,
}

impl WeightedPBWBasis {
    pub fn new(lattice: &LieLattice) -> Result<Self> {
        let series = lattice.lower_central_series();
        if !series.last().unwrap().module.is_zero() {
            return Err(Error::NotNilpotent);
        }
        let r = lattice.rank();
        let class = series.len() - 1;
        let mut rows: Vec<Vec<Q>> = Vec::with_capacity(r);
        let mut weights = Vec::with_capacity(r);
        let mut inner = Submodule::zero(lattice.domain(), r);
        for (t, term) in series.iter().enumerate().rev().skip(1) {
            let added = inner.complement_in(&term.module);
            weights.extend(std::iter::repeat_n(t + 1, added.len()));
            rows.extend(added);
            inner = term.module.clone();
        }
        let change = Matrix::from_rows(&rows, r);
        let change_inv = change.inverse().ok_or_else(|| Error::Invariant("adapted basis is singular".into()))?;
        if lattice.domain() == Domain::Integer && !change_inv.is_integral() {
            return Err(Error::Invariant("adapted basis is not unimodular".into()));
        }
        let names = rows
            .iter()
            .map(|row| {
                let nz: Vec<usize> = (0..r).filter(|&k| !row[k].is_zero()).collect();
                if nz.len() == 1 && row[nz[0]] == Q::from_integer(1.into()) {
                    lattice.names()[nz[0]].clone()
                } else {
                    format!("u{}", rows.iter().position(|x| x == row).unwrap())
                }
            })
            .collect();
        let adapted = lattice.change_basis(&change, lattice.domain())?.with_names(names);
        Ok(WeightedPBWBasis { lattice: lattice.clone(), adapted, change, change_inv, weights, class })
    }

    pub fn lattice(&self) -> &LieLattice {
        &self.lattice
    }

    /// The lattice written in the adapted basis.
    pub fn adapted(&self) -> &LieLattice {
        &self.adapted
    }

    /// Rows are the adapted basis vectors in original coordinates.
    pub fn change(&self) -> &Matrix {
        &self.change
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    /// Adapted coordinates of a vector given in original coordinates.
    pub fn to_adapted(&self, v: &[Q]) -> Vec<Q> {
        self.change_inv.vec_mul(v)
    }

    /// Position in the adapted order of the basis element with this name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.adapted.names().iter().position(|n| n == name)
    }
}

type Sparse = Arc<Vec<(usize, Q)>>;

/// `U(L) / U^m(L)` with its monomial basis.
#[derive(Debug)]
pub struct TruncatedUEA {
    basis: WeightedPBWBasis,
    cutoff: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    memo: Mutex<HashMap<(usize, usize), Sparse>>,
}

impl Clone for TruncatedUEA {
    fn clone(&self) -> Self {
        TruncatedUEA::from_basis(self.basis.clone(), self.cutoff)
    }
}

/// All exponent vectors of weight at most `m`, by weight and then by
/// exponent vector in decreasing lexicographic order.
pub fn enumerate_monomials(weights: &[usize], m: usize) -> Vec<Monomial> {
    fn rec(weights: &[usize], pos: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == weights.len() {
            out.push(Monomial(cur.clone()));
            return;
        }
        let mut a = 0;
        while a as usize * weights[pos] <= left {
            cur.push(a);
            rec(weights, pos + 1, left - a as usize * weights[pos], cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, m, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.weight(weights).cmp(&b.weight(weights)).then_with(|| b.0.cmp(&a.0)));
    out
}

impl TruncatedUEA {
    pub fn new(lattice: &LieLattice, cutoff: usize) -> Result<Self> {
        Ok(TruncatedUEA::from_basis(WeightedPBWBasis::new(lattice)?, cutoff))
    }

    /// Truncation at the nilpotency class.
    pub fn at_class(lattice: &LieLattice) -> Result<Self> {
        let basis = WeightedPBWBasis::new(lattice)?;
        let c = basis.class().max(1);
        Ok(TruncatedUEA::from_basis(basis, c))
    }

    pub fn from_basis(basis: WeightedPBWBasis, cutoff: usize) -> Self {
        let monomials = enumerate_monomials(basis.weights(), cutoff);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        TruncatedUEA { basis, cutoff, monomials, index, memo: Mutex::new(HashMap::new()) }
    }

    pub fn basis(&self) -> &WeightedPBWBasis {
        &self.basis
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn monomial_weight(&self, idx: usize) -> usize {
        self.monomials[idx].weight(self.basis.weights())
    }

    /// Human-readable form such as `x^2*y`.
    pub fn monomial_label(&self, idx: usize) -> String {
        let names = self.basis.adapted().names();
        let parts: Vec<String> = self.monomials[idx]
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { names[i].clone() } else { format!("{}^{a}", names[i]) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    fn unit(&self, idx: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[idx] = Q::from_integer(1.into());
        v
    }

    /// `x_i * x^alpha` for the adapted generator `i` and monomial `idx`.
    fn left_basis(&self, i: usize, idx: usize) -> Sparse {
        if let Some(hit) = self.memo.lock().unwrap().get(&(i, idx)) {
            return hit.clone();
        }
        let result = Arc::new(self.left_basis_uncached(i, idx));
        self.memo.lock().unwrap().insert((i, idx), result.clone());
        result
    }

    fn left_basis_uncached(&self, i: usize, idx: usize) -> Vec<(usize, Q)> {
        let alpha = &self.monomials[idx];
        let k = match alpha.first_index() {
            Some(k) if k < i => k,
            _ => {
                let mut up = alpha.clone();
                up.0[i] += 1;
                return match self.index.get(&up) {
                    Some(&j) => vec![(j, Q::from_integer(1.into()))],
                    None => Vec::new(),
                };
            }
        };
        // x_i x_k x^beta = x_k (x_i x^beta) - [x_k, x_i] x^beta
        let mut beta = alpha.clone();
        beta.0[k] -= 1;
        let b = self.index[&beta];
        let mut acc = vec![Q::zero(); self.dim()];
        for (g, c) in self.left_basis(i, b).iter() {
            for (t, d) in self.left_basis(k, *g).iter() {
                acc[*t] += c * d;
            }
        }
        let adapted = self.basis.adapted();
        for l in 0..adapted.rank() {
            let c = adapted.constant(k, i, l);
            if c.is_zero() {
                continue;
            }
            for (t, d) in self.left_basis(l, b).iter() {
                acc[*t] -= c * d;
            }
        }
        if adapted.domain() == Domain::Integer {
            assert!(acc.iter().all(Q::is_integer), "non-integral straightening coefficient");
        }
        acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// `x_i * u` for an element `u` in monomial coordinates.
    pub fn left_mult_generator(&self, i: usize, u: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (idx, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, d) in self.left_basis(i, idx).iter() {
                out[*t] += c * d;
            }
        }
        out
    }

    /// Normal form of the product of the adapted generators in `word`.
    pub fn straighten(&self, word: &[usize]) -> Vec<Q> {
        let mut u = self.unit(0);
        for &i in word.iter().rev() {
            u = self.left_mult_generator(i, &u);
        }
        u
    }

    /// Product `u * v` of two elements in monomial coordinates.
    pub fn multiply(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (idx, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut w = v.to_vec();
            for &i in self.monomials[idx].letters().iter().rev() {
                w = self.left_mult_generator(i, &w);
            }
            for (o, x) in out.iter_mut().zip(w) {
                *o += c * x;
            }
        }
        out
    }

    /// Matrix of `x_i *` in the monomial basis, for the adapted generator `i`.
    pub fn generator_matrix(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (t, c) in self.left_basis(i, j).iter() {
                m.set(*t, j, c.clone());
            }
        }
        m
    }

    /// Matrix of left multiplication by `v`, given in original coordinates.
    pub fn left_mult_matrix(&self, v: &[Q]) -> Matrix {
        let w = self.basis.to_adapted(v);
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in w.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &self.generator_matrix(i).scale(c);
            }
        }
        m
    }

    /// Matrix of the extension `D*` of a derivation `D` (original
    /// coordinates) to the truncated enveloping algebra.
    pub fn derivation_star(&self, d: &Matrix) -> Result<Matrix> {
        self.basis.lattice().check_derivation(d)?;
        let p = self.basis.change();
        let da = &(&self.basis.change_inv.transpose() * d) * &p.transpose();
        let n = self.dim();
        let r = self.basis.rank();
        let mut out = Matrix::zeros(n, n);
        for j in 0..n {
            let letters = self.monomials[j].letters();
            let mut col = vec![Q::zero(); n];
            for pos in 0..letters.len() {
                let suffix = {
                    let mut s = Monomial::one(r);
                    for &l in &letters[pos + 1..] {
                        s.0[l] += 1;
                    }
                    s
                };
                let Some(&si) = self.index.get(&suffix) else { continue };
                let mut w = vec![Q::zero(); n];
                for l in 0..r {
                    let c = da.get(l, letters[pos]);
                    if c.is_zero() {
                        continue;
                    }
                    for (t, e) in self.left_basis(l, si).iter() {
                        w[*t] += c * e;
                    }
                }
                for &l in letters[..pos].iter().rev() {
                    w = self.left_mult_generator(l, &w);
                }
                for (a, b) in col.iter_mut().zip(w) {
                    *a += b;
                }
            }
            for (t, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    out.set(t, j, c);
                }
            }
        }
        Ok(out)
    }

    /// Least weight of a supported monomial; `None` for zero.
    pub fn weight_of(&self, u: &[Q]) -> Option<usize> {
        u.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| self.monomial_weight(i))
            .min()
    }

    /// Whether `m` maps every monomial of weight `w` into weights `>= w + shift`.
    pub fn raises_weight(&self, m: &Matrix, shift: usize) -> bool {
        (0..self.dim()).all(|j| {
            let w = self.monomial_weight(j);
            (0..self.dim()).all(|t| m.get(t, j).is_zero() || self.monomial_weight(t) >= w + shift)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{q, unit_vec};

    fn h3() -> TruncatedUEA {
        TruncatedUEA::new(&catalog::heisenberg3(), 2).unwrap()
    }

    fn coeff(t: &TruncatedUEA, u: &[Q], label: &str) -> Q {
        let i = (0..t.dim()).find(|&i| t.monomial_label(i) == label).unwrap();
        u[i].clone()
    }

    #[test]
    fn adapted_basis_of_heisenberg() {
        let b = WeightedPBWBasis::new(&catalog::heisenberg3()).unwrap();
        let names: Vec<&str> = b.adapted().names().iter().map(String::as_str).collect();
        assert_eq!(names, ["z", "x", "y"]);
        assert_eq!(b.weights(), &[2, 1, 1]);
        assert_eq!(b.class(), 2);
        let a = WeightedPBWBasis::new(&catalog::abelian(2)).unwrap();
        assert_eq!(a.weights(), &[1, 1]);
        assert_eq!(a.class(), 1);
        assert!(matches!(WeightedPBWBasis::new(&catalog::solv2()), Err(Error::NotNilpotent)));
    }

    #[test]
    fn monomial_list_of_heisenberg() {
        let t = h3();
        let labels: Vec<String> = (0..t.dim()).map(|i| t.monomial_label(i)).collect();
        assert_eq!(labels, ["1", "x", "y", "z", "x^2", "x*y", "y^2"]);
    }

    #[test]
    fn straighten_examples() {
        let t = h3();
        let (x, y) = (t.basis().index_of("x").unwrap(), t.basis().index_of("y").unwrap());
        let yx = t.straighten(&[y, x]);
        assert_eq!(coeff(&t, &yx, "x*y"), q(1));
        assert_eq!(coeff(&t, &yx, "z"), q(-1));
        assert_eq!(yx.iter().filter(|c| !c.is_zero()).count(), 2);
        let xy = t.straighten(&[x, y]);
        assert_eq!(xy, t.unit(t.index_of(&Monomial(vec![0, 1, 1])).unwrap()));
        assert!(t.straighten(&[y, x, x]).iter().all(Zero::is_zero));
    }

    #[test]
    fn left_multiplication_examples() {
        let t = h3();
        let h = catalog::heisenberg3();
        let lx = t.left_mult_matrix(&unit_vec(3, 0));
        let col = |m: &Matrix, label: &str| {
            let j = (0..t.dim()).find(|&i| t.monomial_label(i) == label).unwrap();
            m.col_vec(j)
        };
        assert_eq!(coeff(&t, &col(&lx, "1"), "x"), q(1));
        assert_eq!(coeff(&t, &col(&lx, "y"), "x*y"), q(1));
        assert!(col(&lx, "z").iter().all(Zero::is_zero));
        assert_eq!(coeff(&t, &col(&lx, "x"), "x^2"), q(1));
        assert!(t.left_mult_matrix(&[q(0), q(0), q(0)]).is_zero());
        assert_eq!(h.rank(), 3);

        let a = TruncatedUEA::new(&catalog::abelian(1), 1).unwrap();
        assert_eq!(a.left_mult_matrix(&[q(1)]), Matrix::from_i64(2, 2, &[0, 0, 1, 0]));
    }

    #[test]
    fn derivation_star_examples() {
        let t = h3();
        let h = catalog::heisenberg3();
        assert!(t.derivation_star(&Matrix::zeros(3, 3)).unwrap().is_zero());
        let ds = t.derivation_star(&h.ad_basis(0)).unwrap();
        let y = (0..t.dim()).find(|&i| t.monomial_label(i) == "y").unwrap();
        let xy = (0..t.dim()).find(|&i| t.monomial_label(i) == "x*y").unwrap();
        assert_eq!(coeff(&t, &ds.col_vec(y), "z"), q(1));
        assert!(ds.col_vec(xy).iter().all(Zero::is_zero));
        assert!(ds.col_vec(0).iter().all(Zero::is_zero));
        assert!(t.derivation_star(&Matrix::identity(3)).is_err());

        let a = TruncatedUEA::new(&catalog::abelian(2), 1).unwrap();
        let d = Matrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let dsa = a.derivation_star(&d).unwrap();
        assert_eq!(dsa.submatrix(1..3, 1..3), d);
        assert!(dsa.col_vec(0).iter().all(Zero::is_zero));
    }

    #[test]
    fn weights_of_elements() {
        let t = h3();
        assert_eq!(t.weight_of(&vec![q(0); 7]), None);
        let (x, y) = (t.basis().index_of("x").unwrap(), t.basis().index_of("y").unwrap());
        assert_eq!(t.weight_of(&t.straighten(&[y, x])), Some(2));
        assert_eq!(t.weight_of(&t.straighten(&[x])), Some(1));
    }

    #[test]
    fn heisenberg5_degree() {
        assert_eq!(TruncatedUEA::at_class(&catalog::heisenberg5()).unwrap().dim(), 16);
    }
}
