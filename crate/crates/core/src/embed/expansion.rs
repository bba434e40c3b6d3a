//! Elementary expansions: replacing a non-nilpotent direction `y` of the
//! solvable part by the nilpotent and semisimple parts of `ad_y`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{LieLattice, LieSubmodule};
use crate::linalg::{is_zero_vec, unit_vec, zero_vec, Domain, Matrix, Submodule, Q};

use super::jordan::jordan_chevalley;

/// Record of one expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionStep {
    /// The chosen `y`, in coordinates of the algebra before the step.
    pub y: Vec<Q>,
    /// Semisimple and nilpotent parts of `ad_y` (basis with `y` last).
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
    pub solvable_dim: usize,
    pub nilradical_before: usize,
    pub nilradical_after: usize,
}

/// A rational Lie algebra `K = N ⊕ S` containing an image of the input.
///
/// Basis layout: `[J | X | Levi | Z]` where `J` lies in the image of the
/// solvable radical of the input and starts with its nilradical (`base`
/// vectors), `X` holds the added nilpotent generators and `Z` the added
/// semisimple ones. `N = J ⊕ X`, `S = Levi ⊕ Z`.
#[derive(Clone, Debug)]
pub struct ExpansionState {
    /// The input, over the rationals.
    pub source: LieLattice,
    pub algebra: LieLattice,
    pub base: usize,
    pub j_dim: usize,
    pub x_count: usize,
    pub levi_dim: usize,
    /// Row `i` holds the image of the `i`-th basis vector of the input.
    pub embedding: Matrix,
    pub trace: Vec<ExpansionStep>,
}

impl ExpansionState {
    /// Starts from `L ⊗ Q` in the basis `[R_n | complement in R_s | Levi]`.
    pub fn initial(l: &LieLattice, nilradical: &Submodule, radical: &Submodule, levi: &Submodule) -> Result<Self> {
        let r = l.rank();
        let mut rows = nilradical.basis_vectors();
        rows.extend(nilradical.complement_in(radical));
        rows.extend(levi.basis_vectors().into_iter().map(primitive));
        let p = Matrix::from_rows(&rows, r);
        let algebra = l.change_basis(&p, Domain::Rational)?;
        let embedding = p.inverse().ok_or_else(|| Error::Invariant("radical and Levi factor do not span".into()))?;
        Ok(ExpansionState {
            source: l.with_domain(Domain::Rational),
            algebra,
            base: nilradical.rank(),
            j_dim: radical.rank(),
            x_count: 0,
            levi_dim: levi.rank(),
            embedding,
            trace: Vec::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.rank()
    }

    pub fn n_dim(&self) -> usize {
        self.j_dim + self.x_count
    }

    pub fn is_done(&self) -> bool {
        self.j_dim == self.base
    }

    fn span(&self, idx: impl Iterator<Item = usize>) -> LieSubmodule {
        let d = self.dim();
        let rows: Vec<Vec<Q>> = idx.map(|i| unit_vec(d, i)).collect();
        LieSubmodule::new(&self.algebra, Submodule::from_rows(Domain::Rational, &rows, d))
    }

    pub fn solvable_part(&self) -> LieSubmodule {
        self.span(0..self.n_dim())
    }

    pub fn reductive_part(&self) -> LieSubmodule {
        self.span(self.n_dim()..self.dim())
    }

    /// The expected nilradical: the input's nilradical plus the added `x'`.
    pub fn nilradical_part(&self) -> LieSubmodule {
        self.span((0..self.base).chain(self.j_dim..self.n_dim()))
    }

    pub fn x_indices(&self) -> std::ops::Range<usize> {
        self.j_dim..self.n_dim()
    }

    pub fn z_indices(&self) -> std::ops::Range<usize> {
        self.n_dim() + self.levi_dim..self.dim()
    }

    pub fn levi_indices(&self) -> std::ops::Range<usize> {
        self.n_dim()..self.n_dim() + self.levi_dim
    }
}

fn primitive(v: Vec<Q>) -> Vec<Q> {
    let d = Q::from_integer(crate::linalg::lcm_denominators_vec(&v));
    let scaled: Vec<Q> = v.iter().map(|x| x * &d).collect();
    let g = scaled
        .iter()
        .filter(|x| !x.is_zero())
        .fold(num_bigint::BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x.numer()));
    if g.is_zero() {
        return scaled;
    }
    let g = Q::from_integer(g);
    scaled.into_iter().map(|x| x / &g).collect()
}

/// One expansion step; fails if the solvable part is already nilpotent.
pub fn elementary_expansion(state: &ExpansionState) -> Result<ExpansionState> {
    if state.is_done() {
        return Err(Error::Invariant("solvable part is already nilpotent".into()));
    }
    let k = &state.algebra;
    let d = state.dim();
    let (jd, s) = (state.j_dim, state.base);

    // centralizer of S inside J
    let s_idx: Vec<usize> = (state.n_dim()..d).collect();
    let mut m = Matrix::zeros(jd, d * s_idx.len());
    for i in 0..jd {
        for (bi, &b) in s_idx.iter().enumerate() {
            for (t, c) in k.bracket_basis(i, b).iter().enumerate() {
                m.set(i, bi * d + t, c.clone());
            }
        }
    }
    let cent = if s_idx.is_empty() { Matrix::identity(jd) } else { m.left_kernel() };
    let y_short = cent
        .row_vecs()
        .into_iter()
        .find(|v| v[s..].iter().any(|c| !c.is_zero()))
        .ok_or(Error::NoCentralizingElement)?;
    let q = (s..jd).find(|&i| !y_short[i].is_zero()).unwrap();
    let mut y = zero_vec(d);
    y[..jd].clone_from_slice(&y_short);

    // basis [J \ e_q, X, Levi, Z, y]
    let mut rows: Vec<Vec<Q>> = (0..d).filter(|&i| i != q).map(|i| unit_vec(d, i)).collect();
    rows.push(y.clone());
    let p = Matrix::from_rows(&rows, d);
    let k2 = k.change_basis(&p, Domain::Rational)?;
    let emb2 = &state.embedding * &p.inverse().expect("y is independent of the remaining basis");
    let yi = d - 1;
    let ad_y = k2.ad_basis(yi);
    let (ds, dn) = jordan_chevalley(&ad_y);
    k2.check_derivation(&ds)?;
    k2.check_derivation(&dn)?;
    for a in 0..yi {
        for b in a + 1..yi {
            if !k2.constant(a, b, yi).is_zero() {
                return Err(Error::Invariant("brackets of the remaining basis involve y".into()));
            }
        }
    }
    if (0..d).any(|c| !ds.get(yi, c).is_zero() || !dn.get(yi, c).is_zero()) {
        return Err(Error::Invariant("Jordan parts of ad_y leave the ideal".into()));
    }

    // K' basis: [J', X, x', Levi, Z, z']
    let nd = jd - 1 + state.x_count;
    let x_new = nd;
    let z_new = d;
    let map = |a: usize| if a < nd { a } else { a + 1 };
    let d2 = d + 1;
    let lift = |v: &[Q]| {
        let mut out = zero_vec(d2);
        for a in 0..yi {
            out[map(a)] = v[a].clone();
        }
        out
    };
    let mut brackets: Vec<(usize, usize, Vec<Q>)> = Vec::new();
    for a in 0..yi {
        for b in a + 1..yi {
            let w = k2.bracket_basis(a, b);
            if !is_zero_vec(w) {
                brackets.push((map(a), map(b), lift(w)));
            }
        }
        let dn_a = dn.col_vec(a);
        if !is_zero_vec(&dn_a) {
            brackets.push((x_new, map(a), lift(&dn_a)));
        }
        let ds_a = ds.col_vec(a);
        if !is_zero_vec(&ds_a) {
            brackets.push((z_new, map(a), lift(&ds_a)));
        }
    }
    let names = (0..d2).map(|i| format!("k{i}")).collect();
    let next = LieLattice::from_brackets(names, Domain::Rational, &brackets).checked()?;
    let mut embedding = Matrix::zeros(emb2.rows(), d2);
    for i in 0..emb2.rows() {
        let mut row = lift(emb2.row(i));
        row[x_new] = emb2.get(i, yi).clone();
        row[z_new] = emb2.get(i, yi).clone();
        for (c, v) in row.into_iter().enumerate() {
            embedding.set(i, c, v);
        }
    }

    let before = k.nilradical()?.rank();
    let mut trace = state.trace.clone();
    let out = ExpansionState {
        source: state.source.clone(),
        algebra: next,
        base: s,
        j_dim: jd - 1,
        x_count: state.x_count + 1,
        levi_dim: state.levi_dim,
        embedding,
        trace: Vec::new(),
    };
    let after = out.algebra.nilradical()?;
    if after.module != out.nilradical_part().module {
        return Err(Error::Invariant(format!(
            "nilradical after expansion has dimension {} instead of {}",
            after.rank(),
            out.nilradical_part().rank()
        )));
    }
    trace.push(ExpansionStep {
        y,
        semisimple: ds,
        nilpotent: dn,
        solvable_dim: out.n_dim(),
        nilradical_before: before,
        nilradical_after: after.rank(),
    });
    let out = ExpansionState { trace, ..out };
    check_embedding(&out)?;
    Ok(out)
}

/// Checks that the new embedding is a homomorphism and that the added
/// generators satisfy the bracket conditions needed for rescaling.
fn check_embedding(st: &ExpansionState) -> Result<()> {
    let k = &st.algebra;
    let emb = &st.embedding;
    let r = emb.rows();
    if emb.rank() != r {
        return Err(Error::Invariant("embedding lost injectivity".into()));
    }
    for i in 0..r {
        for j in i + 1..r {
            let lhs = k.bracket_vec(emb.row(i), emb.row(j));
            if lhs != emb.vec_mul(st.source.bracket_basis(i, j)) {
                return Err(Error::Invariant("embedding is not a homomorphism".into()));
            }
        }
    }
    let zs: Vec<usize> = st.z_indices().collect();
    for &z in &zs {
        for other in st.levi_indices().chain(zs.iter().copied()) {
            if !is_zero_vec(k.bracket_basis(z, other)) {
                return Err(Error::Invariant("added semisimple generator does not centralize S".into()));
            }
        }
    }
    for x in st.x_indices() {
        for i in 0..r {
            let w = k.bracket_vec(&unit_vec(k.rank(), x), emb.row(i));
            if w[st.base..].iter().any(|c| !c.is_zero()) {
                return Err(Error::Invariant("added nilpotent generator leaves the input nilradical".into()));
            }
        }
    }
    Ok(())
}

/// Runs expansions until the solvable part is nilpotent.
pub fn expand_fully(mut state: ExpansionState) -> Result<ExpansionState> {
    while !state.is_done() {
        let before = state.n_dim();
        state = elementary_expansion(&state)?;
        debug_assert_eq!(before, state.n_dim());
        log::debug!(
            "expansion {}: dim N = {}, dim R_n = {}",
            state.trace.len(),
            state.n_dim(),
            state.trace.last().unwrap().nilradical_after
        );
    }
    Ok(state)
}
