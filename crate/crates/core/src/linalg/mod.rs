//! Exact integer and rational linear algebra.
//!
//! No floating point is used anywhere: rationals are `BigRational`,
//! integer normal forms run on `BigInt`.

mod matrix;
mod normal_form;
mod submodule;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use matrix::{add_scaled, dot, is_zero_vec, lcm_denominators as lcm_denominators_vec, EchelonBasis, Matrix};
pub use normal_form::{elementary_divisors, hnf, snf};
pub use submodule::{kernel_basis, saturate, Domain, Submodule};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(n: usize) -> Vec<Q> {
    vec![q(0); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Q> {
    let mut v = zero_vec(n);
    v[i] = q(1);
    v
}

/// Least positive `d` such that `d * m` is integral.
pub fn lcm_denominators(m: &Matrix) -> BigInt {
    m.lcm_denominators()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_denominator_examples() {
        let m = Matrix::from_vec(1, 2, vec![frac(1, 2), frac(1, 3)]);
        assert_eq!(lcm_denominators(&m), BigInt::from(6));
        assert_eq!(lcm_denominators(&Matrix::identity(3)), BigInt::from(1));
        let m = Matrix::from_vec(2, 1, vec![frac(5, 6), frac(1, 4)]);
        assert_eq!(lcm_denominators(&m), BigInt::from(12));
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = Matrix::from_i64(3, 2, &[1, 2, 2, 4, 0, 1]);
        let k = m.left_kernel();
        assert_eq!(k.rows(), 1);
        assert!((&k * &m).is_zero());
    }

    #[test]
    fn echelon_basis_membership() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&[q(1), q(1), q(0)]));
        assert!(e.insert(&[q(0), q(1), q(1)]));
        assert!(!e.insert(&[q(1), q(2), q(1)]));
        assert!(e.contains(&[q(2), q(0), q(-2)]));
        assert_eq!(e.len(), 2);
    }
}
