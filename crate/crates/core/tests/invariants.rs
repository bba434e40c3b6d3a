use ado_core::catalog;
use ado_core::checker::{independent_nilradical, independent_solvable_radical};
use ado_core::linalg::{hnf, q, saturate, snf, Domain, Matrix, Submodule, Q};
use ado_core::pbw::TruncatedUEA;
use ado_core::LieLattice;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn int_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-20i64..=20, r * c).prop_map(move |v| Matrix::from_i64(r, c, &v))
    })
}

fn is_hnf(h: &Matrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.rows() {
        match (0..h.cols()).find(|&j| !h.get(i, j).is_zero()) {
            None => seen_zero = true,
            Some(p) => {
                if seen_zero || last_pivot.is_some_and(|lp| p <= lp) || !h.get(i, p).is_positive() {
                    return false;
                }
                for k in 0..i {
                    let e = h.get(k, p);
                    if e.is_negative() || e >= h.get(i, p) {
                        return false;
                    }
                }
                last_pivot = Some(p);
            }
        }
    }
    true
}

fn unimodular(m: &Matrix) -> bool {
    m.determinant().abs().is_one()
}

/// Unimodular matrix built from elementary operations.
fn unimodular_strategy(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec((0..n, 0..n, -3i64..=3), 0..12).prop_map(move |ops| {
        let mut m = Matrix::identity(n);
        for (a, b, k) in ops {
            if a == b {
                m.swap_rows(a, (a + 1) % n);
                continue;
            }
            for j in 0..n {
                let v = m.get(b, j) + m.get(a, j) * q(k);
                m.set(b, j, v);
            }
        }
        m
    })
}

fn small_catalog() -> Vec<LieLattice> {
    catalog::NAMES.iter().map(|n| catalog::lookup(n).unwrap()).filter(|l| l.rank() <= 4).collect()
}

fn nilpotent_small() -> Vec<LieLattice> {
    catalog::NAMES.iter().map(|n| catalog::lookup(n).unwrap()).filter(|l| l.is_nilpotent() && l.rank() <= 4).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_canonical(m in int_matrix(8)) {
        let (h, u) = hnf(&m).unwrap();
        prop_assert_eq!(&(&u * &m), &h);
        prop_assert!(unimodular(&u));
        prop_assert!(is_hnf(&h));
        prop_assert_eq!(hnf(&h).unwrap().0, h);
    }

    #[test]
    fn snf_is_diagonal_with_divisibility(m in int_matrix(8)) {
        let (s, u, v) = snf(&m).unwrap();
        prop_assert_eq!(&(&(&u * &m) * &v), &s);
        prop_assert!(unimodular(&u) && unimodular(&v));
        let mut prev: Option<Q> = None;
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                if i != j {
                    prop_assert!(s.get(i, j).is_zero());
                }
            }
            if i < s.cols() {
                let d = s.get(i, i).clone();
                prop_assert!(!d.is_negative());
                if let Some(p) = &prev {
                    if p.is_zero() {
                        prop_assert!(d.is_zero());
                    } else {
                        prop_assert!((&d / p).is_integer());
                    }
                }
                prev = Some(d);
            }
        }
    }

    #[test]
    fn saturation_is_idempotent(m in int_matrix(6)) {
        let s = Submodule::span(Domain::Integer, &m);
        let sat = saturate(&s);
        prop_assert!(sat.contains(&s));
        prop_assert_eq!(sat.rank(), s.rank());
        prop_assert!(sat.is_saturated());
        prop_assert_eq!(saturate(&sat), sat);
    }

    #[test]
    fn pbw_product_is_associative(idx in 0usize..8, seed in proptest::collection::vec(-3i64..=3, 48)) {
        let ls = nilpotent_small();
        let l = &ls[idx % ls.len()];
        let t = TruncatedUEA::at_class(l).unwrap();
        let d = t.dim();
        let elt = |off: usize| -> Vec<Q> { (0..d).map(|i| q(seed[(off + i) % seed.len()])).collect() };
        let (a, b, c) = (elt(0), elt(7), elt(19));
        prop_assert_eq!(t.multiply(&t.multiply(&a, &b), &c), t.multiply(&a, &t.multiply(&b, &c)));
    }

    #[test]
    fn pbw_defining_relation(idx in 0usize..8) {
        let ls = nilpotent_small();
        let l = &ls[idx % ls.len()];
        let t = TruncatedUEA::at_class(l).unwrap();
        let a = t.basis().adapted();
        let r = a.rank();
        for i in 0..r {
            for j in 0..r {
                let lhs: Vec<Q> = t.straighten(&[i, j]).iter().zip(t.straighten(&[j, i])).map(|(x, y)| x - y).collect();
                let mut rhs = vec![Q::zero(); t.dim()];
                for (k, c) in a.bracket_basis(i, j).iter().enumerate() {
                    for (acc, v) in rhs.iter_mut().zip(t.straighten(&[k])) {
                        *acc += c * v;
                    }
                }
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn radicals_behave_under_basis_change(idx in 0usize..16, p in unimodular_strategy(4)) {
        let ls = small_catalog();
        let l0 = &ls[idx % ls.len()];
        let r = l0.rank();
        let p = p.submatrix(0..r, 0..r);
        prop_assume!(unimodular(&p));
        let l = l0.change_basis(&p, Domain::Integer).unwrap();
        prop_assert!(l.validate().is_valid());

        let kernel = ado_core::verify_representation(&l, &l.adjoint_rep()).kernel;
        let kernel = Submodule::from_rows(Domain::Rational, &kernel, r);
        prop_assert!(kernel.same_span(&l.center().module.rational_span()));

        let rs = l.solvable_radical().unwrap();
        let rn = l.nilradical().unwrap();
        prop_assert!(rs.module.contains(&rn.module));
        prop_assert!(rn.module.contains(&l.bracket_span(&rs.module, &l.full())));
        prop_assert_eq!(&rn.module, &independent_nilradical(&l));
        prop_assert_eq!(&rs.module, &independent_solvable_radical(&l));
        prop_assert_eq!(rs.rank(), l0.solvable_radical().unwrap().rank());
    }
}

#[test]
fn heisenberg_pbw_order() {
    let t = TruncatedUEA::at_class(&catalog::heisenberg3()).unwrap();
    let labels: Vec<String> = (0..t.dim()).map(|i| t.monomial_label(i)).collect();
    assert_eq!(labels, ["1", "x", "y", "z", "x^2", "x*y", "y^2"]);
    assert!(t.monomials().iter().all(|m| m.degree() <= 2));
}
