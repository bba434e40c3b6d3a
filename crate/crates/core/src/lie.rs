//! Lie lattices over the integers and Lie algebras over the rationals,
//! given by structure constants.
//!
//! Matrices of linear maps act on column coordinate vectors: the matrix of
//! `ad_{x_i}` has entry `(k, j)` equal to `c[i][j][k]`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vec, kernel_basis, q, unit_vec, zero_vec, Domain, EchelonBasis, Matrix, Submodule, Q};
use crate::rep::{LinearRep, Provenance};

/// Lie ring of finite rank over `Z` (or Lie algebra over `Q`) in a fixed
/// basis: `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
/// `[x_i, x_j] = sum coeff * x_k`, as `(i, j, [(k, coeff)])`.
pub type IntBracket<'a> = (usize, usize, &'a [(usize, i64)]);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieLattice {
    rank: usize,
    names: Vec<String>,
    domain: Domain,
    constants: Vec<Q>,
}

/// Every violated instance of the Lie lattice axioms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// `(i, j, k)` with `c[i][j][k] != -c[j][i][k]` (including `i == j`).
    pub antisymmetry: Vec<(usize, usize, usize)>,
    /// Triples `i < j < k` where the Jacobi sum is nonzero.
    pub jacobi: Vec<(usize, usize, usize)>,
    /// `(i, j, k)` with a fractional constant in a lattice over `Z`.
    pub non_integral: Vec<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty() && self.non_integral.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if let Some(t) = self.antisymmetry.first() {
            parts.push(format!("antisymmetry fails at {t:?} ({} total)", self.antisymmetry.len()));
        }
        if let Some(t) = self.jacobi.first() {
            parts.push(format!("Jacobi fails at {t:?} ({} total)", self.jacobi.len()));
        }
        if let Some(t) = self.non_integral.first() {
            parts.push(format!("non-integral constant at {t:?}"));
        }
        if parts.is_empty() {
            "valid".to_string()
        } else {
            parts.join("; ")
        }
    }
}

/// A submodule of a lattice together with the structural flags verified
/// against that lattice when it was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSubmodule {
    pub module: Submodule,
    pub is_subalgebra: bool,
    pub is_ideal: bool,
    pub is_isolated: bool,
}

impl LieSubmodule {
    pub fn new(parent: &LieLattice, module: Submodule) -> Self {
        let rows = module.basis_vectors();
        let is_subalgebra = rows.iter().enumerate().all(|(a, u)| {
            rows[a + 1..].iter().all(|v| module.contains_vector(&parent.bracket_vec(u, v)))
        });
        let is_ideal = rows.iter().all(|u| {
            (0..parent.rank).all(|j| module.contains_vector(&parent.bracket_vec(u, &unit_vec(parent.rank, j))))
        });
        let is_isolated = module.is_saturated();
        LieSubmodule { module, is_subalgebra, is_ideal, is_isolated }
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    pub fn basis(&self) -> &Matrix {
        self.module.basis()
    }
}

fn default_names(r: usize) -> Vec<String> {
    (0..r).map(|i| format!("e{i}")).collect()
}

impl LieLattice {
    /// Raw constructor; call [`LieLattice::validate`] to check the axioms.
    pub fn from_constants(names: Vec<String>, domain: Domain, constants: Vec<Q>) -> Self {
        let rank = names.len();
        assert_eq!(constants.len(), rank * rank * rank, "structure tensor has wrong size");
        LieLattice { rank, names, domain, constants }
    }

    /// Builds the lattice from brackets `[x_i, x_j]` for the listed pairs,
    /// filling `[x_j, x_i] = -[x_i, x_j]`.
    pub fn from_brackets(names: Vec<String>, domain: Domain, brackets: &[(usize, usize, Vec<Q>)]) -> Self {
        let r = names.len();
        let mut lat = LieLattice::from_constants(names, domain, vec![Q::zero(); r * r * r]);
        for (i, j, v) in brackets {
            assert_eq!(v.len(), r);
            for k in 0..r {
                lat.constants[(i * r + j) * r + k] = v[k].clone();
                lat.constants[(j * r + i) * r + k] = -v[k].clone();
            }
        }
        lat
    }

    /// Convenience for integer brackets given as `(i, j, [(k, coeff)])`.
    pub fn from_int_brackets(names: &[&str], brackets: &[IntBracket<'_>]) -> Self {
        let r = names.len();
        let br: Vec<(usize, usize, Vec<Q>)> = brackets
            .iter()
            .map(|(i, j, terms)| {
                let mut v = zero_vec(r);
                for &(k, c) in terms.iter() {
                    v[k] += q(c);
                }
                (*i, *j, v)
            })
            .collect();
        LieLattice::from_brackets(names.iter().map(|s| s.to_string()).collect(), Domain::Integer, &br)
    }

    pub fn abelian(r: usize, domain: Domain) -> Self {
        LieLattice::from_constants(default_names(r), domain, vec![Q::zero(); r * r * r])
    }

    /// Validates and returns the lattice, or the failure summary.
    pub fn checked(self) -> Result<Self> {
        let rep = self.validate();
        if rep.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidLattice(rep.summary()))
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.constants[(i * self.rank + j) * self.rank + k]
    }

    pub fn constants(&self) -> &[Q] {
        &self.constants
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Q] {
        let r = self.rank;
        &self.constants[(i * r + j) * r..(i * r + j + 1) * r]
    }

    /// The same structure constants over the other domain.
    pub fn with_domain(&self, domain: Domain) -> LieLattice {
        LieLattice { domain, ..self.clone() }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.rank);
        self.names = names;
        self
    }

    pub fn is_integral(&self) -> bool {
        self.constants.iter().all(|c| c.is_integer())
    }

    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Result<Vec<Q>> {
        if u.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: u.len() });
        }
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: v.len() });
        }
        Ok(self.bracket_vec(u, v))
    }

    pub(crate) fn bracket_vec(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = zero_vec(self.rank);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                add_scaled(&mut out, self.bracket_basis(i, j), &(a * b));
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let r = self.rank;
        let mut rep = ValidationReport::default();
        for i in 0..r {
            for j in i..r {
                for k in 0..r {
                    let a = self.constant(i, j, k);
                    let b = self.constant(j, i, k);
                    if !(a + b).is_zero() {
                        rep.antisymmetry.push((i, j, k));
                    }
                }
            }
        }
        if self.domain == Domain::Integer {
            for i in 0..r {
                for j in 0..r {
                    for k in 0..r {
                        if !self.constant(i, j, k).is_integer() {
                            rep.non_integral.push((i, j, k));
                        }
                    }
                }
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                for k in j + 1..r {
                    let (xi, xj, xk) = (unit_vec(r, i), unit_vec(r, j), unit_vec(r, k));
                    let mut s = self.bracket_vec(&self.bracket_vec(&xi, &xj), &xk);
                    let t = self.bracket_vec(&self.bracket_vec(&xj, &xk), &xi);
                    let u = self.bracket_vec(&self.bracket_vec(&xk, &xi), &xj);
                    add_scaled(&mut s, &t, &q(1));
                    add_scaled(&mut s, &u, &q(1));
                    if !is_zero_vec(&s) {
                        rep.jacobi.push((i, j, k));
                    }
                }
            }
        }
        rep
    }

    /// Matrix of `ad_{x_i}`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let r = self.rank;
        let mut m = Matrix::zeros(r, r);
        for j in 0..r {
            for k in 0..r {
                let c = self.constant(i, j, k);
                if !c.is_zero() {
                    m.set(k, j, c.clone());
                }
            }
        }
        m
    }

    /// Matrix of `ad_v`.
    pub fn ad(&self, v: &[Q]) -> Matrix {
        let r = self.rank;
        let mut m = Matrix::zeros(r, r);
        for (i, a) in v.iter().enumerate() {
            if !a.is_zero() {
                m = &m + &self.ad_basis(i).scale(a);
            }
        }
        m
    }

    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.rank).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(self.rank, self.rank);
        for i in 0..self.rank {
            for j in i..self.rank {
                let t = ads[i].trace_product(&ads[j]);
                k.set(i, j, t.clone());
                k.set(j, i, t);
            }
        }
        k
    }

    /// Span (over the lattice's domain) of all brackets `[a, b]`.
    pub fn bracket_span(&self, a: &Submodule, b: &Submodule) -> Submodule {
        let mut rows = Vec::new();
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                let w = self.bracket_vec(&u, &v);
                if !is_zero_vec(&w) {
                    rows.push(w);
                }
            }
        }
        Submodule::from_rows(self.domain, &rows, self.rank)
    }

    pub fn full(&self) -> Submodule {
        Submodule::full(self.domain, self.rank)
    }

    /// `L_1 = L`, `L_{i+1} = sat([L_i, L])`, until two consecutive terms agree.
    /// The last term is the stationary one (zero exactly when nilpotent).
    pub fn lower_central_series(&self) -> Vec<LieSubmodule> {
        let full = self.full();
        let mut terms = vec![full.clone()];
        if self.rank == 0 {
            return vec![LieSubmodule::new(self, full)];
        }
        loop {
            let next = self.bracket_span(terms.last().unwrap(), &full).saturate();
            if &next == terms.last().unwrap() {
                break;
            }
            let done = next.is_zero();
            terms.push(next);
            if done {
                break;
            }
        }
        terms.into_iter().map(|m| LieSubmodule::new(self, m)).collect()
    }

    /// `L ⊇ sat([L,L]) ⊇ sat([L',L']) ⊇ ...` with the same stopping rule.
    pub fn derived_series(&self) -> Vec<LieSubmodule> {
        let mut terms = vec![self.full()];
        if self.rank == 0 {
            return terms.into_iter().map(|m| LieSubmodule::new(self, m)).collect();
        }
        loop {
            let last = terms.last().unwrap();
            let next = self.bracket_span(last, last).saturate();
            if &next == last {
                break;
            }
            let done = next.is_zero();
            terms.push(next);
            if done {
                break;
            }
        }
        terms.into_iter().map(|m| LieSubmodule::new(self, m)).collect()
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.lower_central_series();
        if s.last().unwrap().module.is_zero() {
            Some(s.len() - 1)
        } else {
            None
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().module.is_zero()
    }

    pub fn center(&self) -> LieSubmodule {
        let r = self.rank;
        let mut m = Matrix::zeros(r, r * r);
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    m.set(i, j * r + k, self.constant(i, j, k).clone());
                }
            }
        }
        LieSubmodule::new(self, kernel_basis(&m, self.domain))
    }

    /// Solvable radical via the Cartan criterion: the Killing-orthogonal of
    /// `[L, L]`, saturated, and checked solvable.
    pub fn solvable_radical(&self) -> Result<LieSubmodule> {
        let derived = self.bracket_span(&self.full(), &self.full()).rational_span();
        let module = if derived.is_zero() {
            self.full()
        } else {
            let kd = &self.killing_form() * &derived.basis().transpose();
            kernel_basis(&kd, self.domain)
        };
        if !self.submodule_is_solvable(&module) {
            return Err(Error::NotSolvable);
        }
        Ok(LieSubmodule::new(self, module))
    }

    /// Derived series of a subalgebra, computed inside the ambient coordinates.
    pub fn submodule_is_solvable(&self, s: &Submodule) -> bool {
        let mut cur = s.rational_span();
        for _ in 0..=self.rank {
            if cur.is_zero() {
                return true;
            }
            let next = self.bracket_span(&cur, &cur).rational_span();
            if next == cur {
                return false;
            }
            cur = next;
        }
        cur.is_zero()
    }

    /// Lower central series of a subalgebra, inside ambient coordinates.
    pub fn submodule_is_nilpotent(&self, s: &Submodule) -> bool {
        let s = s.rational_span();
        let mut cur = s.clone();
        for _ in 0..=self.rank {
            if cur.is_zero() {
                return true;
            }
            let next = self.bracket_span(&cur, &s).rational_span();
            if next == cur {
                return false;
            }
            cur = next;
        }
        cur.is_zero()
    }

    /// Largest nilpotent ideal.
    ///
    /// Inside the solvable radical `R`, the associative envelope `A` of
    /// `ad(R)` is triangularizable, so its radical is the radical of the
    /// trace form; the nilradical is `{x ∈ R : tr(ad_x a) = 0 ∀ a ∈ A}`.
    pub fn nilradical(&self) -> Result<LieSubmodule> {
        let rs = self.solvable_radical()?;
        let rvecs = rs.module.basis_vectors();
        if rvecs.is_empty() {
            return Ok(LieSubmodule::new(self, Submodule::zero(self.domain, self.rank)));
        }
        let gens: Vec<Matrix> = rvecs.iter().map(|v| self.ad(v)).collect();
        let envelope = associative_envelope(&gens);
        // t_p such that Σ_p t_p tr(ad_{r_p} a_q) = 0 for every q
        let mut m = Matrix::zeros(gens.len(), envelope.len().max(1));
        for (p, g) in gens.iter().enumerate() {
            for (qi, a) in envelope.iter().enumerate() {
                m.set(p, qi, g.trace_product(a));
            }
        }
        let t = m.left_kernel();
        let vecs = &t * rs.module.basis();
        let module = match self.domain {
            Domain::Rational => Submodule::span(Domain::Rational, &vecs),
            Domain::Integer => {
                let d = Q::from_integer(vecs.lcm_denominators());
                Submodule::span(Domain::Integer, &vecs.scale(&d)).saturate()
            }
        };
        if !self.submodule_is_nilpotent(&module) {
            return Err(Error::Invariant("computed nilradical is not nilpotent".into()));
        }
        Ok(LieSubmodule::new(self, module))
    }

    pub fn adjoint_rep(&self) -> LinearRep {
        let mats = (0..self.rank).map(|i| self.ad_basis(i)).collect();
        LinearRep::new(self.rank, mats, Provenance::Adjoint).expect("square ad matrices")
    }

    /// Checks the Leibniz rule `D[x,y] = [Dx, y] + [x, Dy]` on basis pairs,
    /// returning the first failing pair.
    pub fn derivation_failure(&self, d: &Matrix) -> Option<(usize, usize)> {
        let r = self.rank;
        if d.rows() != r || d.cols() != r {
            return Some((0, 0));
        }
        let cols: Vec<Vec<Q>> = (0..r).map(|j| d.col_vec(j)).collect();
        for i in 0..r {
            for j in i + 1..r {
                let lhs = d.mul_vec(self.bracket_basis(i, j));
                let mut rhs = self.bracket_vec(&cols[i], &unit_vec(r, j));
                add_scaled(&mut rhs, &self.bracket_vec(&unit_vec(r, i), &cols[j]), &q(1));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_derivation(&self, d: &Matrix) -> bool {
        self.derivation_failure(d).is_none()
    }

    pub fn check_derivation(&self, d: &Matrix) -> Result<()> {
        match self.derivation_failure(d) {
            None => Ok(()),
            Some((i, j)) => Err(Error::NotDerivation { i, j }),
        }
    }

    /// Basis of the derivation algebra (over `Z`: a basis of the lattice of
    /// integral derivations).
    pub fn derivation_basis(&self) -> Vec<Matrix> {
        let r = self.rank;
        let n = r * r;
        // unknown D[m][k] at index m*r + k
        let mut eqs: Vec<Vec<Q>> = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                for m in 0..r {
                    let mut row = zero_vec(n);
                    for k in 0..r {
                        let c = self.constant(i, j, k);
                        if !c.is_zero() {
                            row[m * r + k] += c;
                        }
                        // -[D x_i, x_j]_m = -Σ_k D[k][i] c[k][j][m]
                        let c1 = self.constant(k, j, m);
                        if !c1.is_zero() {
                            row[k * r + i] -= c1;
                        }
                        let c2 = self.constant(i, k, m);
                        if !c2.is_zero() {
                            row[k * r + j] -= c2;
                        }
                    }
                    if !is_zero_vec(&row) {
                        eqs.push(row);
                    }
                }
            }
        }
        let a = Matrix::from_rows(&eqs, n);
        let ker = kernel_basis(&a.transpose(), self.domain);
        ker.basis_vectors()
            .into_iter()
            .map(|v| Matrix::from_vec(r, r, v))
            .collect()
    }

    /// Structure constants with respect to the basis given by the rows of `p`.
    pub fn change_basis(&self, p: &Matrix, domain: Domain) -> Result<LieLattice> {
        let pinv = p.inverse().ok_or_else(|| Error::Invariant("change of basis is singular".into()))?;
        let r = self.rank;
        let rows = p.row_vecs();
        let mut constants = vec![Q::zero(); r * r * r];
        for a in 0..r {
            for b in a + 1..r {
                let w = pinv.vec_mul(&self.bracket_vec(&rows[a], &rows[b]));
                for k in 0..r {
                    constants[(a * r + b) * r + k] = w[k].clone();
                    constants[(b * r + a) * r + k] = -w[k].clone();
                }
            }
        }
        let out = LieLattice::from_constants(default_names(r), domain, constants);
        if domain == Domain::Integer && !out.is_integral() {
            return Err(Error::IntegralityViolated("structure constants after change of basis".into()));
        }
        Ok(out)
    }

    /// The subalgebra spanned by the rows of `basis`, in that basis.
    pub fn restrict(&self, basis: &Matrix, domain: Domain) -> Result<LieLattice> {
        let k = basis.rows();
        let rows = basis.row_vecs();
        let mut constants = vec![Q::zero(); k * k * k];
        for a in 0..k {
            for b in a + 1..k {
                let w = self.bracket_vec(&rows[a], &rows[b]);
                let c = if is_zero_vec(&w) {
                    zero_vec(k)
                } else {
                    basis
                        .solve_left(&w)
                        .ok_or_else(|| Error::Invariant("restriction is not closed under the bracket".into()))?
                };
                for t in 0..k {
                    constants[(a * k + b) * k + t] = c[t].clone();
                    constants[(b * k + a) * k + t] = -c[t].clone();
                }
            }
        }
        let out = LieLattice::from_constants(default_names(k), domain, constants);
        if domain == Domain::Integer && !out.is_integral() {
            return Err(Error::IntegralityViolated("restricted structure constants".into()));
        }
        Ok(out)
    }

    /// Killing form nondegenerate and trivial center.
    pub fn is_semisimple(&self) -> bool {
        self.rank > 0 && !self.killing_form().determinant().is_zero() && self.center().module.is_zero()
    }
}

/// Basis of the associative algebra generated by `gens` (no unit adjoined).
pub fn associative_envelope(gens: &[Matrix]) -> Vec<Matrix> {
    let Some(first) = gens.first() else { return Vec::new() };
    let n = first.rows();
    let mut basis = EchelonBasis::new(n * n);
    let mut elems: Vec<Matrix> = Vec::new();
    let mut queue: Vec<Matrix> = Vec::new();
    for g in gens {
        if basis.insert(&g.vectorize()) {
            elems.push(g.clone());
            queue.push(g.clone());
        }
    }
    while let Some(a) = queue.pop() {
        for g in gens {
            let p = g * &a;
            if basis.insert(&p.vectorize()) {
                elems.push(p.clone());
                queue.push(p);
            }
        }
    }
    elems
}

/// Semidirect product `N ⋊ S`: basis of `N` first, then `S`, with
/// `[s_a, n] = action[a](n)`.
pub fn semidirect_assemble(n: &LieLattice, s: &LieLattice, action: &[Matrix]) -> Result<LieLattice> {
    let (rn, rs) = (n.rank(), s.rank());
    if action.len() != rs {
        return Err(Error::DimensionMismatch { expected: rs, found: action.len() });
    }
    for d in action {
        n.check_derivation(d)?;
    }
    let r = rn + rs;
    let mut constants = vec![Q::zero(); r * r * r];
    let mut put = |i: usize, j: usize, v: &[Q]| {
        for (k, c) in v.iter().enumerate() {
            constants[(i * r + j) * r + k] = c.clone();
            constants[(j * r + i) * r + k] = -c.clone();
        }
    };
    for i in 0..rn {
        for j in i + 1..rn {
            let mut v = zero_vec(r);
            v[..rn].clone_from_slice(n.bracket_basis(i, j));
            put(i, j, &v);
        }
    }
    for a in 0..rs {
        for b in a + 1..rs {
            let mut v = zero_vec(r);
            v[rn..].clone_from_slice(s.bracket_basis(a, b));
            put(rn + a, rn + b, &v);
        }
        for j in 0..rn {
            let mut v = zero_vec(r);
            v[..rn].clone_from_slice(&action[a].col_vec(j));
            put(rn + a, j, &v);
        }
    }
    let integral = n.domain() == Domain::Integer
        && s.domain() == Domain::Integer
        && action.iter().all(Matrix::is_integral);
    let domain = if integral { Domain::Integer } else { Domain::Rational };
    let names = n.names().iter().chain(s.names()).cloned().collect();
    LieLattice::from_constants(names, domain, constants).checked()
}
