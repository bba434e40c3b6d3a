//! Faithful representations of nilpotent lattices on truncated enveloping
//! algebras, and the monomial-count bound `eta * 2^r / sqrt(r)`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Pow, ToPrimitive};

use crate::error::Result;
use crate::lie::LieLattice;
use crate::linalg::{unit_vec, Q};
use crate::pbw::TruncatedUEA;
use crate::rep::{LinearRep, Provenance};

/// Left-regular representation of the lattice on `T`.
pub fn regular_rep(t: &TruncatedUEA) -> LinearRep {
    let r = t.basis().rank();
    let mats = (0..r).map(|i| t.left_mult_matrix(&unit_vec(r, i))).collect();
    LinearRep::new(t.dim(), mats, Provenance::RegularTruncated).expect("square matrices")
}

/// The representation on `U(L) / U^c(L)`, `c` the nilpotency class.
pub fn nilpotent_faithful_rep(l: &LieLattice) -> Result<LinearRep> {
    Ok(regular_rep(&TruncatedUEA::at_class(l)?))
}

/// Number of ordered monomials of weight at most the class.
pub fn monomial_count(l: &LieLattice) -> Result<usize> {
    Ok(TruncatedUEA::at_class(l)?.dim())
}

/// Rational lower and upper bounds for `eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaEnclosure {
    pub lo: Q,
    pub hi: Q,
}

impl EtaEnclosure {
    pub fn approx(&self) -> f64 {
        ((&self.lo + &self.hi) / Q::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }
}

const SQRT_SCALE_DIGITS: u32 = 30;
const PRODUCT_TERMS: u32 = 40;

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// `[lo, hi]` containing `sqrt(x)` for a positive rational `x`, with
/// absolute width about `10^-digits`.
pub fn sqrt_enclosure(x: &Q, digits: u32) -> (Q, Q) {
    let scale = BigInt::from(10).pow(digits);
    let s2 = &scale * &scale;
    let floor = (x.numer() * &s2) / x.denom();
    let lo_int = floor.sqrt();
    let ceil = (x.numer() * &s2 + x.denom() - BigInt::one()) / x.denom();
    let mut hi_int = ceil.sqrt();
    if &hi_int * &hi_int < ceil {
        hi_int += 1;
    }
    (Q::new(lo_int, scale.clone()), Q::new(hi_int, scale))
}

/// Certified enclosure of `eta = sqrt(2/pi) * prod_{l>=1} 2^l / (2^l - 1)`.
///
/// The product is taken up to `l = 40` exactly; the remaining factors
/// multiply to less than `1 + 2^-38`.
pub fn eta_enclosure() -> &'static EtaEnclosure {
    static ETA: OnceLock<EtaEnclosure> = OnceLock::new();
    ETA.get_or_init(|| {
        let mut prod = Q::one();
        for l in 1..=PRODUCT_TERMS {
            prod *= Q::new(pow2(l), pow2(l) - 1);
        }
        let pi_lo = Q::new(BigInt::from(314_159_265_358_979u64), BigInt::from(10).pow(14u32));
        let pi_hi = Q::new(BigInt::from(314_159_265_358_980u64), BigInt::from(10).pow(14u32));
        let two = Q::from_integer(2.into());
        let (s_lo, _) = sqrt_enclosure(&(&two / &pi_hi), SQRT_SCALE_DIGITS);
        let (_, s_hi) = sqrt_enclosure(&(&two / &pi_lo), SQRT_SCALE_DIGITS);
        let tail = Q::one() + Q::new(BigInt::one(), pow2(38));
        EtaEnclosure { lo: &s_lo * &prod, hi: s_hi * prod * tail }
    })
}

/// Rational `B(r)` with `eta 2^r / sqrt(r) <= B(r)`, exceeding it by far
/// less than `0.01 * 2^r / sqrt(r)`.
pub fn burde_bound(r: usize) -> Q {
    assert!(r >= 1, "rank must be positive");
    let eta = eta_enclosure();
    let rq = Q::from_integer(r.into());
    let (_, sqrt_hi) = sqrt_enclosure(&rq.recip(), SQRT_SCALE_DIGITS);
    &eta.hi * Q::from_integer(pow2(r as u32)) * sqrt_hi
}

/// Decides `count <= eta 2^r / sqrt(r)` soundly, using `count^2 r <= eta_lo^2 4^r`.
pub fn within_burde_bound(count: usize, r: usize) -> bool {
    if r == 0 {
        return count <= 1;
    }
    let eta = eta_enclosure();
    let c = Q::from_integer(count.into());
    let lhs = &c * &c * Q::from_integer(r.into());
    let rhs = &eta.lo * &eta.lo * Q::from_integer(pow2(2 * r as u32));
    lhs <= rhs
}

/// The classical bounds `(d^{c+1} - 1) / (d - 1)` and `binomial(d + c, c)`
/// for a lattice of rank `d` and class `c`, reported for comparison.
pub fn birkhoff_bounds(d: usize, c: usize) -> (BigInt, BigInt) {
    let geometric = if d == 1 {
        BigInt::from(c + 1)
    } else {
        (BigInt::from(d).pow(c as u32 + 1) - 1) / BigInt::from(d - 1)
    };
    let mut binom = BigInt::one();
    for k in 1..=c {
        binom = binom * BigInt::from(d + k) / BigInt::from(k);
    }
    (geometric, binom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{frac, Matrix};

    #[test]
    fn degrees() {
        assert_eq!(nilpotent_faithful_rep(&catalog::heisenberg3()).unwrap().degree(), 7);
        let a1 = nilpotent_faithful_rep(&catalog::abelian(1)).unwrap();
        assert_eq!(a1.matrices()[0], Matrix::from_i64(2, 2, &[0, 0, 1, 0]));
        for r in 1..=5 {
            assert_eq!(monomial_count(&catalog::abelian(r)).unwrap(), r + 1);
        }
        assert_eq!(monomial_count(&catalog::abelian(3)).unwrap(), 4);
        assert!(nilpotent_faithful_rep(&catalog::sl2()).is_err());
    }

    #[test]
    fn eta_is_near_2763() {
        let e = eta_enclosure();
        assert!(e.lo <= e.hi);
        assert!(&e.hi - &e.lo < frac(1, 1_000_000_000));
        assert!(e.lo > frac(2762, 1000) && e.hi < frac(2765, 1000));
    }

    #[test]
    fn bound_values() {
        assert!((burde_bound(3).to_f64().unwrap() - 12.762).abs() < 0.01);
        assert!((burde_bound(1).to_f64().unwrap() - 5.527).abs() < 0.01);
        assert!((burde_bound(4).to_f64().unwrap() - 22.105).abs() < 0.01);
        for r in 2..30 {
            assert!(burde_bound(r) <= burde_bound(r + 1));
        }
    }

    #[test]
    fn sound_comparison() {
        assert!(within_burde_bound(7, 3));
        assert!(within_burde_bound(12, 3));
        assert!(!within_burde_bound(13, 3));
        assert!(within_burde_bound(22, 4));
        assert!(!within_burde_bound(23, 4));
    }

    #[test]
    fn birkhoff() {
        assert_eq!(birkhoff_bounds(3, 2), (BigInt::from(13), BigInt::from(10)));
        assert_eq!(birkhoff_bounds(1, 4), (BigInt::from(5), BigInt::from(5)));
    }
}
