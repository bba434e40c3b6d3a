//! JSON encodings. All numbers are decimal strings `"num"` or `"num/den"`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::ado::AdoReport;
use crate::checker::{CertificateReport, RepresentationReport};
use crate::embed::EmbeddingCertificate;
use crate::error::{Error, Result};
use crate::lie::{LieLattice, LieSubmodule, ValidationReport};
use crate::linalg::{Domain, Matrix, Submodule, Q};
use crate::rep::{LinearRep, Provenance};

pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Format(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        None => Ok(Q::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Format(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
    }
}

fn vec_to_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(q_to_string).collect()
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| json!(vec_to_strings(m.row(i)))).collect())
}

fn rows_to_matrix(rows: &[Vec<String>], cols: usize) -> Result<Matrix> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != cols {
            return Err(Error::Format(format!("row of length {} where {cols} expected", row.len())));
        }
        out.push(row.iter().map(|s| parse_q(s)).collect::<Result<Vec<Q>>>()?);
    }
    Ok(Matrix::from_rows(&out, cols))
}

#[derive(Serialize, Deserialize)]
struct BracketJson {
    i: usize,
    j: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    rank: usize,
    #[serde(default)]
    names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    domain: Option<Domain>,
    brackets: Vec<BracketJson>,
}

pub fn lattice_to_value(l: &LieLattice) -> Value {
    let r = l.rank();
    let mut brackets = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let w = l.bracket_basis(i, j);
            if w.iter().any(|c| !c.is_zero()) {
                brackets.push(BracketJson { i, j, coeffs: vec_to_strings(w) });
            }
        }
    }
    let domain = if l.domain() == Domain::Rational { Some(Domain::Rational) } else { None };
    serde_json::to_value(LatticeJson { rank: r, names: Some(l.names().to_vec()), domain, brackets })
        .expect("serializable")
}

/// Parses a lattice. Brackets `[x_j, x_i]` not listed are filled in by
/// antisymmetry; listed ones are kept as given so that `validate` can see
/// inconsistencies. Without a `domain` field the domain is `Z` exactly when
/// every constant is an integer.
pub fn lattice_from_str(s: &str) -> Result<LieLattice> {
    let raw: LatticeJson = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    let r = raw.rank;
    let names = match raw.names {
        Some(n) if n.len() != r => {
            return Err(Error::Format(format!("{} names for rank {r}", n.len())));
        }
        Some(n) => n,
        None => (0..r).map(|i| format!("e{i}")).collect(),
    };
    let mut c = vec![Q::zero(); r * r * r];
    let mut given = HashSet::new();
    for b in &raw.brackets {
        if b.i >= r || b.j >= r {
            return Err(Error::Format(format!("bracket index ({}, {}) out of range", b.i, b.j)));
        }
        if b.coeffs.len() != r {
            return Err(Error::Format(format!("bracket ({}, {}) has {} coefficients", b.i, b.j, b.coeffs.len())));
        }
        if !given.insert((b.i, b.j)) {
            return Err(Error::Format(format!("bracket ({}, {}) listed twice", b.i, b.j)));
        }
        for (k, s) in b.coeffs.iter().enumerate() {
            c[(b.i * r + b.j) * r + k] = parse_q(s)?;
        }
    }
    for &(i, j) in &given {
        if !given.contains(&(j, i)) && i != j {
            for k in 0..r {
                c[(j * r + i) * r + k] = -c[(i * r + j) * r + k].clone();
            }
        }
    }
    let domain = raw
        .domain
        .unwrap_or(if c.iter().all(Q::is_integer) { Domain::Integer } else { Domain::Rational });
    Ok(LieLattice::from_constants(names, domain, c))
}

pub fn lattice_to_string(l: &LieLattice, pretty: bool) -> String {
    to_string(&lattice_to_value(l), pretty)
}

pub fn to_string(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("serializable")
    } else {
        serde_json::to_string(v).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    degree: usize,
    matrices: Vec<Vec<Vec<String>>>,
    provenance: Provenance,
}

pub fn rep_to_value(rep: &LinearRep) -> Value {
    let matrices = rep
        .matrices()
        .iter()
        .map(|m| (0..m.rows()).map(|i| vec_to_strings(m.row(i))).collect())
        .collect();
    serde_json::to_value(RepJson { degree: rep.degree(), matrices, provenance: rep.provenance() }).expect("serializable")
}

pub fn rep_from_str(s: &str) -> Result<LinearRep> {
    let raw: RepJson = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    let mut mats = Vec::with_capacity(raw.matrices.len());
    for m in &raw.matrices {
        if m.len() != raw.degree {
            return Err(Error::Format(format!("matrix with {} rows in a degree-{} representation", m.len(), raw.degree)));
        }
        mats.push(rows_to_matrix(m, raw.degree)?);
    }
    LinearRep::new(raw.degree, mats, raw.provenance).map_err(|e| Error::Format(e.to_string()))
}

pub fn validation_to_value(rep: &ValidationReport) -> Value {
    json!({
        "valid": rep.is_valid(),
        "antisymmetry": rep.antisymmetry,
        "jacobi": rep.jacobi,
        "non_integral": rep.non_integral,
    })
}

pub fn submodule_to_value(s: &Submodule) -> Value {
    json!({ "rank": s.rank(), "basis": matrix_to_json(s.basis()) })
}

fn lie_submodule_to_value(s: &LieSubmodule) -> Value {
    let mut v = submodule_to_value(&s.module);
    v["is_ideal"] = json!(s.is_ideal);
    v["is_isolated"] = json!(s.is_isolated);
    v
}

/// Center, radicals and both series.
pub fn radicals_to_value(l: &LieLattice) -> Result<Value> {
    Ok(json!({
        "center": lie_submodule_to_value(&l.center()),
        "solvable_radical": lie_submodule_to_value(&l.solvable_radical()?),
        "nilradical": lie_submodule_to_value(&l.nilradical()?),
        "lower_central": l.lower_central_series().iter().map(lie_submodule_to_value).collect::<Vec<_>>(),
        "derived": l.derived_series().iter().map(lie_submodule_to_value).collect::<Vec<_>>(),
        "nilpotency_class": l.nilpotency_class(),
    }))
}

pub fn representation_report_to_value(r: &RepresentationReport) -> Value {
    json!({
        "rank": r.rank,
        "degree": r.degree,
        "all_passed": r.all_passed(),
        "homomorphism": r.homomorphism,
        "homomorphism_failure": r.homomorphism_failure,
        "integral": r.integral,
        "faithful": r.faithful,
        "kernel": r.kernel.iter().map(|v| vec_to_strings(v)).collect::<Vec<_>>(),
        "elementary_divisors": r.elementary_divisors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "nil_representation": r.nil_representation,
        "nil_failure": r.nil_failure,
        "nilradical_rank": r.nilradical_rank,
        "degree_within_bound": r.degree_within_bound,
        "bound": q_to_string(&r.bound),
        "bound_approx": approx(&r.bound),
    })
}

fn approx(x: &Q) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

pub fn ado_report_to_value(r: &AdoReport) -> Value {
    json!({
        "route": r.route.as_str(),
        "rank": r.rank,
        "degree": r.degree,
        "extension_degree": r.extension_degree,
        "solvable_radical_rank": r.solvable_radical_rank,
        "nilradical_rank": r.nilradical_rank,
        "bound": q_to_string(&r.bound),
        "bound_approx": approx(&r.bound),
        "birkhoff": r.birkhoff.as_ref().map(|(a, b)| json!([a.to_string(), b.to_string()])),
        "verification": representation_report_to_value(&r.verification),
    })
}

pub fn certificate_to_value(c: &EmbeddingCertificate) -> Value {
    let trace: Vec<Value> = c
        .trace
        .iter()
        .map(|s| {
            json!({
                "y": vec_to_strings(&s.y),
                "semisimple": matrix_to_json(&s.semisimple),
                "nilpotent": matrix_to_json(&s.nilpotent),
                "solvable_dim": s.solvable_dim,
                "nilradical_before": s.nilradical_before,
                "nilradical_after": s.nilradical_after,
            })
        })
        .collect();
    json!({
        "original": lattice_to_value(&c.original),
        "extension": lattice_to_value(&c.extension),
        "injection": matrix_to_json(&c.injection),
        "nilpotent_rank": c.nilpotent_rank,
        "complement_rank": c.complement_rank(),
        "mu": c.mu.to_string(),
        "lambda": c.lambda.to_string(),
        "expanded": lattice_to_value(&c.expanded),
        "nilpotent_basis": matrix_to_json(&c.nilpotent_basis),
        "complement_basis": matrix_to_json(&c.complement_basis),
        "trace": trace,
    })
}

pub fn certificate_report_to_value(r: &CertificateReport) -> Value {
    json!({
        "all_passed": r.all_passed(),
        "extension_valid": r.extension_valid,
        "extension_integral": r.extension_integral,
        "injection_integral": r.injection_integral,
        "injection_homomorphism": r.injection_homomorphism,
        "injection_injective": r.injection_injective,
        "nilpotent_part_is_ideal": r.nilpotent_part_is_ideal,
        "nilpotent_part_is_radical": r.nilpotent_part_is_radical,
        "complement_is_subalgebra": r.complement_is_subalgebra,
        "radical_image_contained": r.radical_image_contained,
        "solvable_radical_rank": r.solvable_radical_rank,
        "nilpotent_rank": r.nilpotent_rank,
        "rank_matches": r.rank_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::frac;

    #[test]
    fn rationals_round_trip() {
        for x in [frac(3, 4), frac(-5, 1), frac(0, 1), frac(7, -21)] {
            assert_eq!(parse_q(&q_to_string(&x)).unwrap(), x);
        }
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn catalog_round_trip() {
        for name in catalog::NAMES {
            let l = catalog::lookup(name).unwrap();
            let back = lattice_from_str(&lattice_to_string(&l, false)).unwrap();
            assert_eq!(back, l, "{name}");
        }
    }

    #[test]
    fn explicit_conflicting_entry_is_kept() {
        let s = r#"{"rank":2,"names":["a","b"],"brackets":[
            {"i":0,"j":1,"coeffs":["1","0"]},{"i":1,"j":0,"coeffs":["1","0"]}]}"#;
        let l = lattice_from_str(s).unwrap();
        assert_eq!(l.validate().antisymmetry, vec![(0, 1, 0)]);
    }

    #[test]
    fn fractional_input_is_rational() {
        let s = r#"{"rank":2,"brackets":[{"i":0,"j":1,"coeffs":["1/2","0"]}]}"#;
        assert_eq!(lattice_from_str(s).unwrap().domain(), Domain::Rational);
        assert!(lattice_from_str("{").is_err());
        assert!(lattice_from_str(r#"{"rank":1,"brackets":[{"i":0,"j":3,"coeffs":["1"]}]}"#).is_err());
    }

    #[test]
    fn representation_round_trip() {
        let rep = catalog::heisenberg3().adjoint_rep();
        let text = serde_json::to_string(&rep_to_value(&rep)).unwrap();
        assert_eq!(rep_from_str(&text).unwrap(), rep);
    }
}
