//! Exact construction and certification of faithful integral matrix
//! representations of Lie lattices over the integers.

pub mod ado;
pub mod catalog;
pub mod checker;
pub mod embed;
pub mod error;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod nilrep;
pub mod pbw;
pub mod poly;
pub mod rep;
pub mod zassenhaus;

pub use ado::{ado_representation, degree_bound, AdoOptions, AdoReport, Route};
pub use checker::{verify_certificate, verify_representation, CertificateReport, RepresentationReport};
pub use embed::{embed_splittable, EmbeddingCertificate};
pub use error::{Error, Result};
pub use lie::{LieLattice, LieSubmodule, ValidationReport};
pub use linalg::{Domain, Matrix, Submodule, Q};
pub use rep::{LinearRep, Provenance};
