//! Named Lie lattices used in examples, tests and benchmarks.

use crate::lie::LieLattice;
use crate::linalg::Domain;

/// Names accepted by [`lookup`], besides the `abelian_<n>` family.
pub const NAMES: &[&str] = &[
    "heisenberg3",
    "heisenberg5",
    "abelian_1",
    "abelian_2",
    "abelian_3",
    "sl2",
    "t2_upper",
    "n3_strictly_upper",
    "solv2",
    "solv3_weights",
    "solv3_jordan",
    "churkin_sl2_t2",
    "filiform4",
    "h3_plus_z",
    "gl2",
    "sl2_plus_h3",
];

pub fn lookup(name: &str) -> Option<LieLattice> {
    let l = match name {
        "heisenberg3" => heisenberg3(),
        "heisenberg5" => heisenberg5(),
        "sl2" => sl2(),
        "t2_upper" => t2_upper(),
        "n3_strictly_upper" => n3_strictly_upper(),
        "solv2" => solv2(),
        "solv3_weights" => solv3_weights(),
        "solv3_jordan" => solv3_jordan(),
        "churkin_sl2_t2" => churkin_sl2_t2(),
        "filiform4" => filiform4(),
        "h3_plus_z" => h3_plus_z(),
        "gl2" => gl2(),
        "sl2_plus_h3" => sl2_plus_h3(),
        _ => {
            let n: usize = name.strip_prefix("abelian_")?.parse().ok()?;
            if n == 0 || n > 64 {
                return None;
            }
            abelian(n)
        }
    };
    Some(l)
}

/// `[x, y] = z`.
pub fn heisenberg3() -> LieLattice {
    LieLattice::from_int_brackets(&["x", "y", "z"], &[(0, 1, &[(2, 1)])])
}

/// `[x1, y1] = [x2, y2] = z`, basis `(x1, x2, y1, y2, z)`.
pub fn heisenberg5() -> LieLattice {
    LieLattice::from_int_brackets(&["x1", "x2", "y1", "y2", "z"], &[(0, 2, &[(4, 1)]), (1, 3, &[(4, 1)])])
}

pub fn abelian(n: usize) -> LieLattice {
    let names = (1..=n).map(|i| format!("a{i}")).collect();
    LieLattice::abelian(n, Domain::Integer).with_names(names)
}

/// Chevalley basis `(e, h, f)`.
pub fn sl2() -> LieLattice {
    LieLattice::from_int_brackets(
        &["e", "h", "f"],
        &[(1, 0, &[(0, 2)]), (1, 2, &[(2, -2)]), (0, 2, &[(1, 1)])],
    )
}

/// Upper triangular 2x2 matrices, basis `(E11, E22, E12)`.
pub fn t2_upper() -> LieLattice {
    LieLattice::from_int_brackets(&["E11", "E22", "E12"], &[(0, 2, &[(2, 1)]), (1, 2, &[(2, -1)])])
}

/// Strictly upper triangular 3x3 matrices, basis `(E12, E23, E13)`.
pub fn n3_strictly_upper() -> LieLattice {
    LieLattice::from_int_brackets(&["E12", "E23", "E13"], &[(0, 1, &[(2, 1)])])
}

/// `[a, b] = b`, basis `(b, a)`.
pub fn solv2() -> LieLattice {
    LieLattice::from_int_brackets(&["b", "a"], &[(1, 0, &[(0, 1)])])
}

/// `[a, b] = b`, `[a, c] = 2c`, basis `(b, c, a)`.
pub fn solv3_weights() -> LieLattice {
    LieLattice::from_int_brackets(&["b", "c", "a"], &[(2, 0, &[(0, 1)]), (2, 1, &[(1, 2)])])
}

/// `[a, b] = b`, `[a, c] = b + c`, basis `(b, c, a)`.
pub fn solv3_jordan() -> LieLattice {
    LieLattice::from_int_brackets(&["b", "c", "a"], &[(2, 0, &[(0, 1)]), (2, 1, &[(0, 1), (1, 1)])])
}

/// `sl2 ⊕ t2` in the doubled bases `E = 2e, H = 2h, F = 2f` and
/// `A = 2E11, B = 2E22, C = 2E12`.
pub fn churkin_sl2_t2() -> LieLattice {
    LieLattice::from_int_brackets(
        &["E", "H", "F", "A", "B", "C"],
        &[
            (1, 0, &[(0, 4)]),
            (1, 2, &[(2, -4)]),
            (0, 2, &[(1, 2)]),
            (3, 5, &[(5, 2)]),
            (4, 5, &[(5, -2)]),
        ],
    )
}

/// `[x1, x2] = x3`, `[x1, x3] = x4`.
pub fn filiform4() -> LieLattice {
    LieLattice::from_int_brackets(&["x1", "x2", "x3", "x4"], &[(0, 1, &[(2, 1)]), (0, 2, &[(3, 1)])])
}

/// Heisenberg lattice plus a central direct summand.
pub fn h3_plus_z() -> LieLattice {
    LieLattice::from_int_brackets(&["x", "y", "z", "w"], &[(0, 1, &[(2, 1)])])
}

/// All 2x2 matrices, basis `(E11, E12, E21, E22)`.
pub fn gl2() -> LieLattice {
    LieLattice::from_int_brackets(
        &["E11", "E12", "E21", "E22"],
        &[
            (0, 1, &[(1, 1)]),
            (0, 2, &[(2, -1)]),
            (1, 2, &[(0, 1), (3, -1)]),
            (1, 3, &[(1, 1)]),
            (2, 3, &[(2, -1)]),
        ],
    )
}

/// `sl2 ⊕ h3`, basis `(e, h, f, x, y, z)`.
pub fn sl2_plus_h3() -> LieLattice {
    LieLattice::from_int_brackets(
        &["e", "h", "f", "x", "y", "z"],
        &[(1, 0, &[(0, 2)]), (1, 2, &[(2, -2)]), (0, 2, &[(1, 1)]), (3, 4, &[(5, 1)])],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_is_valid() {
        for name in NAMES {
            let l = lookup(name).unwrap();
            assert!(l.validate().is_valid(), "{name}: {}", l.validate().summary());
            assert!(l.rank() <= 6);
        }
        assert_eq!(lookup("abelian_9").unwrap().rank(), 9);
        assert!(lookup("abelian_0").is_none());
        assert!(lookup("nope").is_none());
    }

    #[test]
    fn gl2_has_center_identity() {
        use crate::linalg::q;
        let c = gl2().center();
        assert_eq!(c.module.basis_vectors(), vec![vec![q(1), q(0), q(0), q(1)]]);
    }
}
