//! Representations of split extensions `N ⋊ S` with `N` nilpotent: `N` acts
//! by left multiplication on `U(N) / U^c(N)` and `S` by the lifted
//! derivations.

use crate::error::{Error, Result};
use crate::lie::{semidirect_assemble, LieLattice};
use crate::linalg::Matrix;
use crate::nilrep::regular_rep;
use crate::pbw::TruncatedUEA;
use crate::rep::{LinearRep, Provenance};

/// Representation of `N ⋊ S` (basis of `N` first) where `s_a` acts on `N`
/// through `action[a]`.
pub fn splittable_rep(n: &LieLattice, s: &LieLattice, action: &[Matrix]) -> Result<LinearRep> {
    if action.len() != s.rank() {
        return Err(Error::DimensionMismatch { expected: s.rank(), found: action.len() });
    }
    for d in action {
        n.check_derivation(d)?;
    }
    semidirect_assemble(n, s, action)?;
    let t = TruncatedUEA::at_class(n)?;
    let mut mats = regular_rep(&t).matrices().to_vec();
    for d in action {
        mats.push(t.derivation_star(d)?);
    }
    LinearRep::new(t.dim(), mats, Provenance::Zassenhaus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{q, unit_vec, Domain};
    use crate::nilrep::nilpotent_faithful_rep;

    #[test]
    fn embedded_two_dim_example() {
        // N = <b, x'> abelian, z' acts by b -> b, x' -> 0
        let n = LieLattice::abelian(2, Domain::Integer);
        let s = LieLattice::abelian(1, Domain::Integer);
        let d = Matrix::from_i64(2, 2, &[1, 0, 0, 0]);
        let rep = splittable_rep(&n, &s, &[d]).unwrap();
        assert_eq!(rep.degree(), 3);
        assert_eq!(rep.matrices()[2], Matrix::from_i64(3, 3, &[0, 0, 0, 0, 1, 0, 0, 0, 0]));
        assert_eq!(rep.matrices()[0], Matrix::from_i64(3, 3, &[0, 0, 0, 1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn trivial_complement_gives_regular_rep() {
        let h = catalog::heisenberg3();
        let rep = splittable_rep(&h, &LieLattice::abelian(0, Domain::Integer), &[]).unwrap();
        assert_eq!(rep.matrices(), nilpotent_faithful_rep(&h).unwrap().matrices());
    }

    #[test]
    fn lifted_inner_derivation_intertwines() {
        let h = catalog::heisenberg3();
        let s = LieLattice::abelian(1, Domain::Integer);
        let d = h.ad_basis(1);
        let rep = splittable_rep(&h, &s, std::slice::from_ref(&d)).unwrap();
        let dstar = &rep.matrices()[3];
        for i in 0..3 {
            let lhs = dstar.commutator(&rep.matrices()[i]);
            let rhs = rep.image(&[d.col_vec(i), vec![q(0)]].concat());
            assert_eq!(lhs, rhs);
        }
        assert!(splittable_rep(&h, &s, &[Matrix::identity(3)]).is_err());
        assert_eq!(unit_vec(1, 0), vec![q(1)]);
    }
}
