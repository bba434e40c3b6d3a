use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};

/// How a representation was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    RegularTruncated,
    Adjoint,
    Zassenhaus,
    DirectSum,
    Restriction,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::RegularTruncated => "regular-truncated",
            Provenance::Adjoint => "adjoint",
            Provenance::Zassenhaus => "zassenhaus",
            Provenance::DirectSum => "direct-sum",
            Provenance::Restriction => "restriction",
        }
    }
}

/// A degree-`n` matrix representation: one `n x n` matrix per basis vector
/// of the lattice, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRep {
    degree: usize,
    matrices: Vec<Matrix>,
    provenance: Provenance,
}

impl LinearRep {
    pub fn new(degree: usize, matrices: Vec<Matrix>, provenance: Provenance) -> Result<Self> {
        for m in &matrices {
            if m.rows() != degree || m.cols() != degree {
                return Err(Error::DimensionMismatch { expected: degree, found: m.rows() });
            }
        }
        Ok(LinearRep { degree, matrices, provenance })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Number of basis vectors represented.
    pub fn lattice_rank(&self) -> usize {
        self.matrices.len()
    }

    /// Image of the coordinate vector `v` under the linear extension.
    pub fn image(&self, v: &[Q]) -> Matrix {
        assert_eq!(v.len(), self.matrices.len());
        let mut acc = Matrix::zeros(self.degree, self.degree);
        for (c, m) in v.iter().zip(&self.matrices) {
            if !num_traits::Zero::is_zero(c) {
                acc = &acc + &m.scale(c);
            }
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.matrices.iter().all(Matrix::is_integral)
    }

    /// Block-diagonal direct sum with another representation of the same lattice.
    pub fn direct_sum(&self, other: &LinearRep) -> Result<LinearRep> {
        if self.matrices.len() != other.matrices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.matrices.len(),
                found: other.matrices.len(),
            });
        }
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        LinearRep::new(self.degree + other.degree, matrices, Provenance::DirectSum)
    }

    /// Pulls back along a linear map: basis vector `i` of the new lattice is
    /// sent to `Σ_k coords[i][k] * M_k`.
    pub fn restrict(&self, coords: &Matrix) -> Result<LinearRep> {
        if coords.cols() != self.matrices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.matrices.len(),
                found: coords.cols(),
            });
        }
        let matrices = (0..coords.rows()).map(|i| self.image(coords.row(i))).collect();
        LinearRep::new(self.degree, matrices, Provenance::Restriction)
    }
}
