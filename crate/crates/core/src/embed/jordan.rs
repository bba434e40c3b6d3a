//! Additive Jordan–Chevalley decomposition over the rationals.

use crate::linalg::Matrix;
use crate::poly::{minimal_polynomial, Poly};

/// `A = S + N` with `S` semisimple, `N` nilpotent, both polynomials in `A`.
///
/// `S = p(A)` where `p` solves `f(p) = 0 mod m` by Newton iteration from
/// `p = T`; `m` is the minimal polynomial of `A` and `f` its squarefree part.
pub fn jordan_chevalley(a: &Matrix) -> (Matrix, Matrix) {
    let (p, _) = semisimple_polynomial(a);
    let s = p.eval_matrix(a);
    let n = a - &s;
    (s, n)
}

/// The polynomial `p` with `S = p(A)`, and the minimal polynomial of `A`.
pub fn semisimple_polynomial(a: &Matrix) -> (Poly, Poly) {
    assert!(a.is_square(), "Jordan-Chevalley needs a square matrix");
    if a.rows() == 0 {
        return (Poly::zero(), Poly::one());
    }
    let m = minimal_polynomial(a);
    let f = m.squarefree_part();
    let df = f.derivative();
    let mut p = Poly::x().rem(&m);
    loop {
        let fp = f.compose_mod(&p, &m);
        if fp.is_zero() {
            return (p, m);
        }
        let inv = df
            .compose_mod(&p, &m)
            .inverse_mod(&m)
            .expect("f' is invertible modulo the minimal polynomial along the iteration");
        p = p.sub(&fp.mul(&inv)).rem(&m);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_jordan_block() {
        let a = Matrix::from_i64(2, 2, &[1, 1, 0, 1]);
        let (s, n) = jordan_chevalley(&a);
        assert_eq!(s, Matrix::identity(2));
        assert_eq!(n, Matrix::from_i64(2, 2, &[0, 1, 0, 0]));
    }

    #[test]
    fn diagonal_and_nilpotent_inputs() {
        let d = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 2, 0, 0, 0, 2]);
        let (s, n) = jordan_chevalley(&d);
        assert_eq!(s, d);
        assert!(n.is_zero());
        let nil = Matrix::from_i64(2, 2, &[0, 1, 0, 0]);
        let (s, n) = jordan_chevalley(&nil);
        assert!(s.is_zero());
        assert_eq!(n, nil);
    }

    #[test]
    fn mixed_blocks_commute() {
        // rotation-like block (irreducible T^2 + 1) with a unipotent twist
        let a = Matrix::from_i64(4, 4, &[0, -1, 1, 0, 1, 0, 0, 1, 0, 0, 0, -1, 0, 0, 1, 0]);
        let (s, n) = jordan_chevalley(&a);
        assert_eq!(&s + &n, a);
        assert_eq!(&s * &n, &n * &s);
        assert!(n.pow(4).is_zero());
        assert!(minimal_polynomial(&s).is_squarefree());
        assert!(!n.is_zero());
    }
}
