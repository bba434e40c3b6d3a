use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::normal_form::{hnf_rows, snf_rows};
use super::{Matrix, Q};

/// Coefficient domain of a computation: the integers or their fraction field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    #[serde(rename = "Z")]
    Integer,
    #[serde(rename = "Q")]
    Rational,
}

/// A submodule of `D^n` held in canonical form.
///
/// Over the integers the basis is the row Hermite form of the generators
/// (denominators allowed, so fractional lattices inside `Q^n` are
/// representable); over the rationals it is the reduced row echelon form.
/// Equality of two submodules is therefore equality of their bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    ambient: usize,
    domain: Domain,
    basis: Matrix,
}

fn hnf_of_rational_rows(gens: &Matrix) -> Matrix {
    let d = gens.lcm_denominators();
    let dq = Q::from_integer(d.clone());
    let scaled = gens.scale(&dq);
    let rows = scaled.to_integer_rows().expect("scaled rows are integral");
    let (h, _, rank) = hnf_rows(rows, gens.cols());
    let h = Matrix::from_int_rows(&h[..rank], gens.cols());
    h.scale(&Q::from_integer(d).recip())
}

impl Submodule {
    /// The `domain`-span of the rows of `generators`.
    pub fn span(domain: Domain, generators: &Matrix) -> Self {
        let ambient = generators.cols();
        let basis = match domain {
            Domain::Integer => hnf_of_rational_rows(generators),
            Domain::Rational => {
                let (r, piv) = generators.rref();
                r.select_rows(&(0..piv.len()).collect::<Vec<_>>())
            }
        };
        Submodule { ambient, domain, basis }
    }

    pub fn from_rows(domain: Domain, rows: &[Vec<Q>], ambient: usize) -> Self {
        Submodule::span(domain, &Matrix::from_rows(rows, ambient))
    }

    pub fn zero(domain: Domain, ambient: usize) -> Self {
        Submodule { ambient, domain, basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(domain: Domain, ambient: usize) -> Self {
        Submodule { ambient, domain, basis: Matrix::identity(ambient) }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_full(&self) -> bool {
        match self.domain {
            Domain::Rational => self.rank() == self.ambient,
            Domain::Integer => self.basis == Matrix::identity(self.ambient),
        }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Q>> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` with respect to the basis, if `v` lies in the
    /// rational span. Integral coordinates are not enforced here.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        if self.rank() == 0 {
            return if v.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
        }
        self.basis.solve_left(v)
    }

    pub fn contains_vector(&self, v: &[Q]) -> bool {
        match self.coordinates(v) {
            None => false,
            Some(c) => match self.domain {
                Domain::Rational => true,
                Domain::Integer => c.iter().all(|x| x.is_integer()),
            },
        }
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        (0..other.rank()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        assert_eq!(self.ambient, other.ambient);
        Submodule::span(self.domain, &self.basis.vstack(&other.basis))
    }

    /// The same generators, viewed over the other domain.
    pub fn with_domain(&self, domain: Domain) -> Submodule {
        Submodule::span(domain, &self.basis)
    }

    /// Rational span, for comparisons that ignore the lattice structure.
    pub fn rational_span(&self) -> Submodule {
        self.with_domain(Domain::Rational)
    }

    pub fn same_span(&self, other: &Submodule) -> bool {
        self.rational_span() == other.rational_span()
    }

    /// Intersection of rational spans (over the integers the result is
    /// then intersected with `Z^n` by saturating).
    pub fn intersect(&self, other: &Submodule) -> Submodule {
        assert_eq!(self.ambient, other.ambient);
        if self.rank() == 0 || other.rank() == 0 {
            return Submodule::zero(self.domain, self.ambient);
        }
        let stacked = self.basis.vstack(&(-&other.basis));
        let k = stacked.left_kernel();
        let left = k.submatrix(0..k.rows(), 0..self.rank());
        let vecs = &left * &self.basis;
        let q = Submodule::span(Domain::Rational, &vecs);
        match self.domain {
            Domain::Rational => q,
            Domain::Integer => q.with_domain(Domain::Integer).saturate(),
        }
    }

    /// Isolated closure: the rational span intersected with `Z^n`.
    /// Over the rationals this is the identity.
    pub fn saturate(&self) -> Submodule {
        if self.domain == Domain::Rational || self.rank() == 0 {
            return self.clone();
        }
        let d = Q::from_integer(self.basis.lcm_denominators());
        let rows = self.basis.scale(&d).to_integer_rows().expect("scaled rows are integral");
        let k = rows.len();
        let (_, _, v) = snf_rows(rows, self.ambient);
        // rows = U^{-1} D V^{-1}, so the rational row space is spanned by the
        // first k rows of V^{-1}, which extend to a unimodular matrix.
        let vmat = Matrix::from_int_rows(&v, self.ambient);
        let vinv = vmat.inverse().expect("unimodular");
        let gens = vinv.select_rows(&(0..k).collect::<Vec<_>>());
        Submodule::span(Domain::Integer, &gens)
    }

    pub fn is_saturated(&self) -> bool {
        self.domain == Domain::Rational || self.saturate() == *self
    }

    /// Index of this lattice in its saturation (1 when isolated).
    pub fn saturation_index(&self) -> BigInt {
        if self.domain == Domain::Rational || self.rank() == 0 {
            return BigInt::one();
        }
        let sat = self.saturate();
        let coords: Vec<Vec<Q>> = (0..self.rank())
            .map(|i| sat.coordinates(self.basis.row(i)).expect("inside saturation"))
            .collect();
        let m = Matrix::from_rows(&coords, sat.rank());
        m.determinant().abs().to_integer()
    }

    /// Extends a basis of `self` (a saturated sublattice of `outer`) to a
    /// basis of `outer`, returning only the added vectors.
    pub fn complement_in(&self, outer: &Submodule) -> Vec<Vec<Q>> {
        let mut chosen: Vec<Vec<Q>> = self.basis_vectors();
        let mut added = Vec::new();
        for cand in outer.basis_vectors() {
            if chosen.len() == outer.rank() {
                break;
            }
            let mut trial = chosen.clone();
            trial.push(cand.clone());
            let tm = Matrix::from_rows(&trial, self.ambient);
            if tm.rank() < trial.len() {
                continue;
            }
            let sp = Submodule::span(self.domain, &tm);
            let ok = match self.domain {
                Domain::Rational => true,
                Domain::Integer => {
                    // the partial family must be isolated inside `outer`
                    sp.rational_span().intersect_lattice(outer) == sp
                }
            };
            if ok {
                chosen = trial;
                added.push(cand);
            }
        }
        if chosen.len() == outer.rank() {
            return added;
        }
        // greedy choice got stuck: fall back to a Smith-form completion
        self.smith_complement_in(outer)
    }

    fn smith_complement_in(&self, outer: &Submodule) -> Vec<Vec<Q>> {
        let b = outer.rank();
        let a = self.rank();
        let coords: Vec<Vec<Q>> = (0..a)
            .map(|i| outer.coordinates(self.basis.row(i)).expect("sublattice"))
            .collect();
        let p = Matrix::from_rows(&coords, b);
        let rows = p.to_integer_rows().expect("integral coordinates");
        let (_, _, v) = snf_rows(rows, b);
        let vinv = Matrix::from_int_rows(&v, b).inverse().expect("unimodular");
        (a..b)
            .map(|i| outer.basis.vec_mul(vinv.row(i)))
            .collect()
    }

    /// `Q`-span of self intersected with the lattice `outer`.
    fn intersect_lattice(&self, outer: &Submodule) -> Submodule {
        // coordinates of the rational span inside outer's basis, saturated there
        let coords: Vec<Vec<Q>> = (0..self.rank())
            .map(|i| outer.coordinates(self.basis.row(i)).expect("inside outer span"))
            .collect();
        let sat = Submodule::from_rows(Domain::Integer, &coords, outer.rank()).saturate();
        let back = &sat.basis * &outer.basis;
        Submodule::span(Domain::Integer, &back)
    }
}

/// Basis of `{v : v * m = 0}`; over the integers the saturated kernel lattice.
pub fn kernel_basis(m: &Matrix, domain: Domain) -> Submodule {
    let k = m.left_kernel();
    let s = Submodule::span(domain, &k);
    match domain {
        Domain::Rational => s,
        Domain::Integer => {
            let d = Q::from_integer(k.lcm_denominators());
            Submodule::span(Domain::Integer, &k.scale(&d)).saturate()
        }
    }
}

/// Isolated closure of a submodule of `Z^n`.
pub fn saturate(s: &Submodule) -> Submodule {
    s.saturate()
}
