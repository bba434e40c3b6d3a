//! Embedding an integral Lie lattice into a splittable one, `N̄ ⋊ S̄` with
//! `N̄` the nilpotent radical.

pub mod expansion;
pub mod jordan;
pub mod levi;
pub mod rescale;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lie::{LieLattice, LieSubmodule};
use crate::linalg::{unit_vec, Domain, Matrix, Submodule};

pub use expansion::{elementary_expansion, expand_fully, ExpansionState, ExpansionStep};
pub use jordan::jordan_chevalley;
pub use levi::levi_decomposition;
pub use rescale::integral_rescale;

/// Default bound on the scalars `mu` and `lambda`.
pub const DEFAULT_MAX_SCALAR: u64 = 1 << 40;

/// A splittable extension of an integral lattice and the injection into it.
///
/// The extension's basis lists `N̄` first (`nilpotent_rank` vectors), then `S̄`.
#[derive(Clone, Debug)]
pub struct EmbeddingCertificate {
    pub original: LieLattice,
    pub extension: LieLattice,
    /// Row `i`: coordinates of the `i`-th basis vector of `original`.
    pub injection: Matrix,
    pub nilpotent_rank: usize,
    pub mu: BigInt,
    pub lambda: BigInt,
    /// The rational algebra built by the expansions.
    pub expanded: LieLattice,
    /// Bases of `N̄` and `S̄` in coordinates of `expanded`.
    pub nilpotent_basis: Matrix,
    pub complement_basis: Matrix,
    pub trace: Vec<ExpansionStep>,
}

impl EmbeddingCertificate {
    pub fn complement_rank(&self) -> usize {
        self.extension.rank() - self.nilpotent_rank
    }

    fn unit_span(&self, idx: std::ops::Range<usize>) -> LieSubmodule {
        let d = self.extension.rank();
        let rows: Vec<_> = idx.map(|i| unit_vec(d, i)).collect();
        LieSubmodule::new(&self.extension, Submodule::from_rows(Domain::Integer, &rows, d))
    }

    pub fn nilpotent_part(&self) -> LieSubmodule {
        self.unit_span(0..self.nilpotent_rank)
    }

    pub fn complement(&self) -> LieSubmodule {
        self.unit_span(self.nilpotent_rank..self.extension.rank())
    }

    /// `(N̄, S̄, action)` with `action[a]` the matrix of `ad_{s_a}` on `N̄`.
    pub fn split(&self) -> Result<(LieLattice, LieLattice, Vec<Matrix>)> {
        let e = &self.extension;
        let d = e.rank();
        let nr = self.nilpotent_rank;
        let nbasis = Matrix::identity(d).select_rows(&(0..nr).collect::<Vec<_>>());
        let sbasis = Matrix::identity(d).select_rows(&(nr..d).collect::<Vec<_>>());
        let n = e.restrict(&nbasis, Domain::Integer)?;
        let s = e.restrict(&sbasis, Domain::Integer)?;
        let mut action = Vec::with_capacity(d - nr);
        for a in nr..d {
            let ad = e.ad_basis(a);
            if (nr..d).any(|row| (0..nr).any(|col| !num_traits::Zero::is_zero(ad.get(row, col)))) {
                return Err(Error::Invariant("nilpotent part is not an ideal".into()));
            }
            action.push(ad.submatrix(0..nr, 0..nr));
        }
        Ok((n.with_names(e.names()[..nr].to_vec()), s.with_names(e.names()[nr..].to_vec()), action))
    }
}

/// The finished rational expansion of `L`.
pub fn expand(l: &LieLattice) -> Result<ExpansionState> {
    let rn = l.nilradical()?;
    let (rs, levi) = levi_decomposition(l)?;
    let rs_z = l.solvable_radical()?;
    debug_assert!(rs.module.same_span(&rs_z.module));
    let state = ExpansionState::initial(l, &rn.module, &rs_z.module, &levi.module)?;
    expand_fully(state)
}

/// Embeds `L` into a splittable lattice `N̄ ⋊ S̄` with `rk N̄ = rk R_s(L)`.
pub fn embed_splittable(l: &LieLattice, max_scalar: u64) -> Result<EmbeddingCertificate> {
    if l.domain() != Domain::Integer {
        return Err(Error::Invariant("embedding needs a lattice over Z".into()));
    }
    let state = expand(l)?;
    log::info!("{} expansion step(s); rescaling", state.trace.len());
    integral_rescale(l, &state, max_scalar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::q;

    #[test]
    fn solv2_extension_matches_hand_computation() {
        let st = expand(&catalog::solv2()).unwrap();
        assert_eq!(st.trace.len(), 1);
        let step = &st.trace[0];
        assert!(step.nilpotent.is_zero());
        assert_eq!((step.nilradical_before, step.nilradical_after), (1, 2));
        // basis [b, x', z']: [z', b] = b, x' central
        assert_eq!(st.algebra.bracket_basis(2, 0), &[q(1), q(0), q(0)]);
        assert!(st.algebra.ad_basis(1).is_zero());
        // a -> x' + z', b -> b
        assert_eq!(st.embedding, Matrix::from_i64(2, 3, &[1, 0, 0, 0, 1, 1]));
    }

    #[test]
    fn weights_example_splits_eigenvalues() {
        let st = expand(&catalog::solv3_weights()).unwrap();
        assert_eq!(st.trace.len(), 1);
        assert!(st.trace[0].nilpotent.is_zero());
        assert!(st.algebra.restrict(&st.solvable_part().basis().clone(), Domain::Rational).unwrap().constants().iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn nilpotent_input_is_its_own_extension() {
        for l in [catalog::heisenberg3(), catalog::h3_plus_z()] {
            let c = embed_splittable(&l, DEFAULT_MAX_SCALAR).unwrap();
            assert!(c.trace.is_empty());
            assert_eq!(c.complement_rank(), 0);
            assert_eq!(c.nilpotent_rank, l.rank());
            assert_eq!(c.mu, BigInt::from(1));
            assert_eq!(c.lambda, BigInt::from(1));
        }
    }

    #[test]
    fn every_catalog_entry_embeds() {
        for name in catalog::NAMES {
            let l = catalog::lookup(name).unwrap();
            let c = embed_splittable(&l, DEFAULT_MAX_SCALAR).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(c.nilpotent_rank, l.solvable_radical().unwrap().rank(), "{name}");
            let (n, _, _) = c.split().unwrap();
            assert!(n.is_nilpotent(), "{name}");
        }
    }
}
