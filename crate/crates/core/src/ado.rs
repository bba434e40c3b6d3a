//! Faithful integral representations of arbitrary Lie lattices with the
//! degree bound `r + eta 2^r / sqrt(r)`.

use num_bigint::BigInt;

use crate::checker::{verify_representation, RepresentationReport};
use crate::embed::{embed_splittable, EmbeddingCertificate, DEFAULT_MAX_SCALAR};
use crate::error::{Error, Result};
use crate::lie::LieLattice;
use crate::linalg::Q;
use crate::nilrep::{birkhoff_bounds, burde_bound, nilpotent_faithful_rep, within_burde_bound};
use crate::rep::LinearRep;
use crate::zassenhaus::splittable_rep;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdoOptions {
    /// Always run the full construction, skipping the nilpotent and
    /// semisimple shortcuts.
    pub strict: bool,
    pub max_scalar: u64,
}

impl Default for AdoOptions {
    fn default() -> Self {
        AdoOptions { strict: false, max_scalar: DEFAULT_MAX_SCALAR }
    }
}

/// Which construction produced the representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Nilpotent,
    Semisimple,
    Extension,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Nilpotent => "nilpotent",
            Route::Semisimple => "semisimple",
            Route::Extension => "extension",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AdoReport {
    pub route: Route,
    pub rank: usize,
    pub degree: usize,
    /// Degree of the part coming from the splittable extension (0 on shortcuts
    /// that do not use it).
    pub extension_degree: usize,
    pub solvable_radical_rank: usize,
    pub nilradical_rank: usize,
    /// `r + B(r)`.
    pub bound: Q,
    /// Degree bounds `(d^{c+1}-1)/(d-1)` and `binomial(d+c, c)` for nilpotent input.
    pub birkhoff: Option<(BigInt, BigInt)>,
    pub verification: RepresentationReport,
}

/// Certified rational upper bound `r + B(r)`.
pub fn degree_bound(r: usize) -> Q {
    Q::from_integer(r.into()) + burde_bound(r)
}

/// Builds a faithful representation, verifies it and reports.
pub fn ado_representation(l: &LieLattice, opts: AdoOptions) -> Result<(LinearRep, AdoReport, Option<EmbeddingCertificate>)> {
    let r = l.rank();
    if r == 0 {
        return Err(Error::InvalidLattice("rank must be positive".into()));
    }
    let validation = l.validate();
    if !validation.is_valid() {
        return Err(Error::InvalidLattice(validation.summary()));
    }
    let rs = l.solvable_radical()?.rank();
    let rn = l.nilradical()?.rank();
    let class = l.nilpotency_class();

    let (rep, route, ext_degree, cert) = if !opts.strict && class.is_some() {
        let rep = nilpotent_faithful_rep(l)?;
        let n = rep.degree();
        (rep, Route::Nilpotent, n, None)
    } else if !opts.strict && l.is_semisimple() {
        (l.adjoint_rep(), Route::Semisimple, 0, None)
    } else {
        let cert = embed_splittable(l, opts.max_scalar)?;
        let (n, s, action) = cert.split()?;
        let phi = splittable_rep(&n, &s, &action)?;
        if rs >= 1 && !within_burde_bound(phi.degree(), rs) {
            return Err(Error::Invariant(format!(
                "extension representation has degree {} above the bound for rank {rs}",
                phi.degree()
            )));
        }
        let restricted = phi.restrict(&cert.injection)?;
        let rep = restricted.direct_sum(&l.adjoint_rep())?;
        (rep, Route::Extension, phi.degree(), Some(cert))
    };

    let verification = verify_representation(l, &rep);
    log::info!("route {}, degree {}, checks failing: {:?}", route.as_str(), rep.degree(), verification.failures());
    if !verification.all_passed() {
        return Err(Error::Invariant(format!("verification failed: {}", verification.failures().join(", "))));
    }
    let report = AdoReport {
        route,
        rank: r,
        degree: rep.degree(),
        extension_degree: ext_degree,
        solvable_radical_rank: rs,
        nilradical_rank: rn,
        bound: degree_bound(r),
        birkhoff: class.map(|c| birkhoff_bounds(r, c)),
        verification,
    };
    Ok((rep, report, cert))
}
