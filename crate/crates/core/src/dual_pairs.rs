//! The three basic dual pairs, the compact-group action on `W`, invariant
//! graded pieces, and the Hilbert-map pullback.
//!
//! The models follow the classical invariant-theory realizations:
//!
//! - `sp-o`: `W` = s×ℓ matrix variables `z[a,i]`, `O(s)` acting on the row
//!   index by its standard real representation;
//! - `u-pq`: `W` = (s×p variables `u`) ⊕ (s×q variables `v`), `U(s)` acting
//!   standardly on `u` and by the conjugate representation on `v`;
//! - `ostar-sp`: `W` = 2s×n variables, `Sp(s)` acting by its standard
//!   2s-dimensional complex representation preserving the split skew form.
//!
//! Invariance under the connected part is the joint kernel of the
//! Lie-algebra derivations (complexified, which leaves polynomial kernels
//! unchanged); the disconnected `O(s)` additionally imposes one reflection.
//! Generators that act diagonally on monomials (the Cartan directions and
//! the reflection) are applied as filters, which keeps the elimination
//! blocks small; the remaining generators are stacked and solved exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{sparse_rref, SparseRow};
use crate::poly::{hol_monomials, ExpVec, Poly, VarKind};
use crate::scalar::Scalar;

/// Which of the three basic dual pairs a spec belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairCase {
    SpO,
    Upq,
    OstarSp,
}

impl PairCase {
    pub fn tag(&self) -> &'static str {
        match self {
            PairCase::SpO => "sp-o",
            PairCase::Upq => "u-pq",
            PairCase::OstarSp => "ostar-sp",
        }
    }
}

/// One of the three basic dual pairs with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairSpec {
    SpO { l: usize, s: usize },
    Upq { p: usize, q: usize, s: usize },
    OstarSp { n: usize, s: usize },
}

impl PairSpec {
    pub fn sp_o(l: usize, s: usize) -> Result<Self> {
        if l < 1 || s < 1 || s > l {
            return Err(Error::InvalidPair(format!(
                "sp-o requires 1 <= s <= l, got l={l}, s={s}"
            )));
        }
        Ok(PairSpec::SpO { l, s })
    }

    pub fn u_pq(p: usize, q: usize, s: usize) -> Result<Self> {
        if p < 1 || q < 1 || s < 1 || s > q || q > p {
            return Err(Error::InvalidPair(format!(
                "u-pq requires 1 <= s <= q <= p, got p={p}, q={q}, s={s}"
            )));
        }
        Ok(PairSpec::Upq { p, q, s })
    }

    pub fn ostar_sp(n: usize, s: usize) -> Result<Self> {
        if n < 2 || s < 1 || s > n / 2 {
            return Err(Error::InvalidPair(format!(
                "ostar-sp requires 1 <= s <= floor(n/2), got n={n}, s={s}"
            )));
        }
        Ok(PairSpec::OstarSp { n, s })
    }

    pub fn case(&self) -> PairCase {
        match self {
            PairSpec::SpO { .. } => PairCase::SpO,
            PairSpec::Upq { .. } => PairCase::Upq,
            PairSpec::OstarSp { .. } => PairCase::OstarSp,
        }
    }

    /// The compact-group size parameter `s`.
    pub fn s_param(&self) -> usize {
        match *self {
            PairSpec::SpO { s, .. } | PairSpec::Upq { s, .. } | PairSpec::OstarSp { s, .. } => s,
        }
    }

    /// The real rank of the noncompact member: ℓ, q, or floor(n/2).
    pub fn real_rank(&self) -> usize {
        match *self {
            PairSpec::SpO { l, .. } => l,
            PairSpec::Upq { q, .. } => q,
            PairSpec::OstarSp { n, .. } => n / 2,
        }
    }

    /// The same case and size parameters with `s` replaced by `s_new`.
    pub fn with_s(&self, s_new: usize) -> Result<Self> {
        match *self {
            PairSpec::SpO { l, .. } => PairSpec::sp_o(l, s_new),
            PairSpec::Upq { p, q, .. } => PairSpec::u_pq(p, q, s_new),
            PairSpec::OstarSp { n, .. } => PairSpec::ostar_sp(n, s_new),
        }
    }

    /// Number of complex coordinates of `W`.
    pub fn m(&self) -> usize {
        match *self {
            PairSpec::SpO { l, s } => s * l,
            PairSpec::Upq { p, q, s } => s * (p + q),
            PairSpec::OstarSp { n, s } => 2 * s * n,
        }
    }

    /// Dimension of the symmetric constituent: ℓ(ℓ+1)/2, pq, or n(n-1)/2.
    pub fn p_dim(&self) -> usize {
        match *self {
            PairSpec::SpO { l, .. } => l * (l + 1) / 2,
            PairSpec::Upq { p, q, .. } => p * q,
            PairSpec::OstarSp { n, .. } => n * (n - 1) / 2,
        }
    }

    /// Canonical coordinate list of the symmetric constituent: symmetric
    /// pairs `(i<=j)`, general pairs `(i,j)`, or antisymmetric pairs `(i<j)`,
    /// all zero-based.
    pub fn p_coords(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.p_dim());
        match *self {
            PairSpec::SpO { l, .. } => {
                for i in 0..l {
                    for j in i..l {
                        out.push((i, j));
                    }
                }
            }
            PairSpec::Upq { p, q, .. } => {
                for i in 0..q {
                    for j in 0..p {
                        out.push((i, j));
                    }
                }
            }
            PairSpec::OstarSp { n, .. } => {
                for i in 0..n {
                    for j in i + 1..n {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    pub fn params_string(&self) -> String {
        match *self {
            PairSpec::SpO { l, s } => format!("l={l},s={s}"),
            PairSpec::Upq { p, q, s } => format!("p={p},q={q},s={s}"),
            PairSpec::OstarSp { n, s } => format!("n={n},s={s}"),
        }
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.case().tag(), self.params_string())
    }
}

impl FromStr for PairSpec {
    type Err = Error;

    /// Parses `sp-o:l=3,s=2`, `u-pq:p=2,q=2,s=1`, `ostar-sp:n=4,s=1`.
    fn from_str(text: &str) -> Result<Self> {
        let (tag, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing `:` in pair spec `{text}`")))?;
        let mut params: BTreeMap<&str, usize> = BTreeMap::new();
        for kv in rest.split(',') {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad parameter `{kv}`")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad value in `{kv}`")))?;
            params.insert(k.trim(), v);
        }
        let get = |k: &str| -> Result<usize> {
            params
                .get(k)
                .copied()
                .ok_or_else(|| Error::Parse(format!("missing parameter `{k}` in `{text}`")))
        };
        match tag.trim() {
            "sp-o" => PairSpec::sp_o(get("l")?, get("s")?),
            "u-pq" => PairSpec::u_pq(get("p")?, get("q")?, get("s")?),
            "ostar-sp" => PairSpec::ostar_sp(get("n")?, get("s")?),
            other => Err(Error::Parse(format!("unknown pair case `{other}`"))),
        }
    }
}

/// A sparse linear map on the holomorphic coordinates, applied to
/// polynomials as a derivation: `D(p) = Σ_j D(z_j) · ∂p/∂z_j` where
/// `D(z_j) = Σ rows[j]`.
#[derive(Debug, Clone)]
pub struct CoordMap {
    m: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl CoordMap {
    pub fn new(m: usize) -> Self {
        CoordMap {
            m,
            rows: vec![Vec::new(); m],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn push(&mut self, from: usize, to: usize, coeff: Scalar) {
        if !coeff.is_zero() {
            self.rows[from].push((to, coeff));
        }
    }

    /// Image of one monomial under the derivation, as sparse terms.
    pub fn apply_to_monomial(&self, e: &ExpVec) -> Vec<(ExpVec, Scalar)> {
        let mut out = Vec::new();
        for j in 0..self.m {
            let a = e.hol()[j];
            if a == 0 {
                continue;
            }
            let lowered = e.lowered(j, VarKind::Hol).unwrap();
            let mult = Scalar::from_int(a as i64);
            for (l, c) in &self.rows[j] {
                let target = lowered.mul(&ExpVec::var(self.m, *l, VarKind::Hol));
                out.push((target, &mult * c));
            }
        }
        out
    }

    /// Derivation action on a holomorphic polynomial.
    pub fn apply(&self, p: &Poly) -> Poly {
        debug_assert!(p.is_holomorphic());
        let mut terms: BTreeMap<ExpVec, Scalar> = BTreeMap::new();
        for (e, c) in p.terms() {
            for (target, coeff) in self.apply_to_monomial(e) {
                let entry = terms.entry(target).or_insert_with(Scalar::zero);
                *entry += &(&coeff * c);
            }
        }
        Poly::from_terms(self.m, terms)
    }

    /// Dense matrix form `M[j][l]` with `D(z_j) = Σ_l M[j][l] z_l`.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.m]; self.m];
        for (j, row) in self.rows.iter().enumerate() {
            for (l, c) in row {
                out[j][*l] += c;
            }
        }
        out
    }
}

/// The concrete model of `W` with the compact-group action split into
/// diagonal data (torus weights, reflection parity) and off-diagonal
/// derivation generators.
pub struct WModel {
    spec: PairSpec,
    m: usize,
    /// Column group of each variable; every generator preserves the
    /// per-group degrees, which splits kernel computations into blocks.
    col_group: Vec<usize>,
    num_groups: usize,
    /// Cartan weights per variable; invariants must have weight zero.
    weight_filters: Vec<Vec<i64>>,
    /// Variables negated by the `O(s)` reflection, if the case has one.
    parity_vars: Option<Vec<bool>>,
    /// Generators with a non-diagonal derivation matrix.
    offdiag: Vec<CoordMap>,
    /// Every Lie-algebra generator, Cartan directions included.
    all_generators: Vec<CoordMap>,
}

impl WModel {
    pub fn spec(&self) -> PairSpec {
        self.spec
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generators(&self) -> &[CoordMap] {
        &self.all_generators
    }

    pub fn has_reflection(&self) -> bool {
        self.parity_vars.is_some()
    }

    /// The `O(s)` reflection applied as an algebra automorphism; identity
    /// for the connected cases.
    pub fn apply_reflection(&self, p: &Poly) -> Poly {
        let Some(parity) = &self.parity_vars else {
            return p.clone();
        };
        Poly::from_terms(
            p.m(),
            p.terms().map(|(e, c)| {
                let odd: u32 = (0..p.m())
                    .filter(|&j| parity[j])
                    .map(|j| e.hol()[j] + e.antihol()[j])
                    .sum();
                let sign = if odd % 2 == 1 {
                    -&Scalar::one()
                } else {
                    Scalar::one()
                };
                (e.clone(), &sign * c)
            }),
        )
    }

    /// Whether the polynomial is exactly invariant under the full group.
    pub fn is_invariant(&self, p: &Poly) -> bool {
        if self.apply_reflection(p) != *p {
            return false;
        }
        self.all_generators.iter().all(|g| g.apply(p).is_zero())
    }

    fn keep_monomial(&self, e: &ExpVec) -> bool {
        for w in &self.weight_filters {
            let total: i64 = (0..self.m).map(|j| e.hol()[j] as i64 * w[j]).sum();
            if total != 0 {
                return false;
            }
        }
        if let Some(parity) = &self.parity_vars {
            let odd: u32 = (0..self.m).filter(|&j| parity[j]).map(|j| e.hol()[j]).sum();
            if odd % 2 == 1 {
                return false;
            }
        }
        true
    }

    fn block_key(&self, e: &ExpVec) -> Vec<u32> {
        let mut key = vec![0u32; self.num_groups];
        for j in 0..self.m {
            key[self.col_group[j]] += e.hol()[j];
        }
        key
    }

    /// Human-readable description of `W` and the group action.
    pub fn describe(&self) -> String {
        match self.spec {
            PairSpec::SpO { l, s } => format!(
                "W = {s}x{l} matrix variables z[a,i] ({} coordinates); \
                 H = O({s}) acts on the row index by its standard real representation",
                self.m
            ),
            PairSpec::Upq { p, q, s } => format!(
                "W = ({s}x{p} variables u) + ({s}x{q} variables v) ({} coordinates); \
                 H = U({s}) acts standardly on u and by the conjugate representation on v",
                self.m
            ),
            PairSpec::OstarSp { n, s } => format!(
                "W = {}x{n} matrix variables z[a,i] ({} coordinates); \
                 H = Sp({s}) acts on the row index preserving the split skew form",
                2 * s,
                self.m
            ),
        }
    }
}

/// Flat variable index of `z[a,i]` in the sp-o and ostar-sp layouts.
fn rc(a: usize, i: usize, ncols: usize) -> usize {
    a * ncols + i
}

/// Builds the `W` model and the split compact-group action for a spec.
pub fn w_model(spec: &PairSpec) -> WModel {
    match *spec {
        PairSpec::SpO { l, s } => {
            let m = s * l;
            let col_group = (0..m).map(|j| j % l).collect();
            // so(s): elementary antisymmetric E_ab - E_ba, none diagonal
            let mut gens = Vec::new();
            for a in 0..s {
                for b in a + 1..s {
                    let mut g = CoordMap::new(m);
                    for i in 0..l {
                        g.push(rc(a, i, l), rc(b, i, l), Scalar::one());
                        g.push(rc(b, i, l), rc(a, i, l), Scalar::from_int(-1));
                    }
                    gens.push(g);
                }
            }
            // the non-identity component of O(s): negate the first row
            let parity = (0..m).map(|j| j / l == 0).collect();
            WModel {
                spec: *spec,
                m,
                col_group,
                num_groups: l,
                weight_filters: Vec::new(),
                parity_vars: Some(parity),
                offdiag: gens.clone(),
                all_generators: gens,
            }
        }
        PairSpec::Upq { p, q, s } => {
            let m = s * (p + q);
            let u_idx = |a: usize, j: usize| a * p + j;
            let v_idx = |a: usize, i: usize| s * p + a * q + i;
            let mut col_group = vec![0usize; m];
            for a in 0..s {
                for j in 0..p {
                    col_group[u_idx(a, j)] = j;
                }
                for i in 0..q {
                    col_group[v_idx(a, i)] = p + i;
                }
            }
            // gl(s) complexified: E_ab sends u_a -> u_b and v_b -> -v_a
            let mut offdiag = Vec::new();
            let mut all = Vec::new();
            let mut filters = Vec::new();
            for a in 0..s {
                for b in 0..s {
                    let mut g = CoordMap::new(m);
                    for j in 0..p {
                        g.push(u_idx(a, j), u_idx(b, j), Scalar::one());
                    }
                    for i in 0..q {
                        g.push(v_idx(b, i), v_idx(a, i), Scalar::from_int(-1));
                    }
                    if a == b {
                        let mut w = vec![0i64; m];
                        for j in 0..p {
                            w[u_idx(a, j)] = 1;
                        }
                        for i in 0..q {
                            w[v_idx(a, i)] = -1;
                        }
                        filters.push(w);
                    } else {
                        offdiag.push(g.clone());
                    }
                    all.push(g);
                }
            }
            WModel {
                spec: *spec,
                m,
                col_group,
                num_groups: p + q,
                weight_filters: filters,
                parity_vars: None,
                offdiag,
                all_generators: all,
            }
        }
        PairSpec::OstarSp { n, s } => {
            let m = 2 * s * n;
            let col_group = (0..m).map(|j| j % n).collect();
            let mut offdiag = Vec::new();
            let mut all = Vec::new();
            let mut filters = Vec::new();
            // sp(2s) in the split basis: P-block pairs E_ab - E_{s+b,s+a},
            // plus the symmetric raising (Q) and lowering (R) blocks
            for a in 0..s {
                for b in 0..s {
                    let mut g = CoordMap::new(m);
                    for i in 0..n {
                        g.push(rc(a, i, n), rc(b, i, n), Scalar::one());
                        g.push(rc(s + b, i, n), rc(s + a, i, n), Scalar::from_int(-1));
                    }
                    if a == b {
                        let mut w = vec![0i64; m];
                        for i in 0..n {
                            w[rc(a, i, n)] = 1;
                            w[rc(s + a, i, n)] = -1;
                        }
                        filters.push(w);
                    } else {
                        offdiag.push(g.clone());
                    }
                    all.push(g);
                }
            }
            for a in 0..s {
                for b in a..s {
                    let mut up = CoordMap::new(m);
                    let mut down = CoordMap::new(m);
                    for i in 0..n {
                        up.push(rc(a, i, n), rc(s + b, i, n), Scalar::one());
                        down.push(rc(s + a, i, n), rc(b, i, n), Scalar::one());
                        if a != b {
                            up.push(rc(b, i, n), rc(s + a, i, n), Scalar::one());
                            down.push(rc(s + b, i, n), rc(a, i, n), Scalar::one());
                        }
                    }
                    offdiag.push(up.clone());
                    offdiag.push(down.clone());
                    all.push(up);
                    all.push(down);
                }
            }
            WModel {
                spec: *spec,
                m,
                col_group,
                num_groups: n,
                weight_filters: filters,
                parity_vars: None,
                offdiag,
                all_generators: all,
            }
        }
    }
}

/// An exact basis of the degree-`k` invariants `F_k^H`.
pub fn invariant_basis(spec: &PairSpec, k: u32) -> Result<Vec<Poly>> {
    let model = w_model(spec);
    let m = model.m;

    // block the degree-k monomials by the column multidegree every
    // generator preserves
    let mut blocks: BTreeMap<Vec<u32>, Vec<ExpVec>> = BTreeMap::new();
    for e in hol_monomials(m, k) {
        blocks.entry(model.block_key(&e)).or_default().push(e);
    }

    let block_list: Vec<Vec<ExpVec>> = blocks.into_values().collect();
    let per_block: Vec<Vec<Poly>> = block_list
        .par_iter()
        .map(|monomials| invariant_block_kernel(&model, monomials))
        .collect();

    let mut out = Vec::new();
    for b in per_block {
        out.extend(b);
    }
    Ok(out)
}

/// `dim F_k^H`, the kernel dimension over all generator matrices.
pub fn invariant_dim(spec: &PairSpec, k: u32) -> Result<usize> {
    Ok(invariant_basis(spec, k)?.len())
}

fn invariant_block_kernel(model: &WModel, monomials: &[ExpVec]) -> Vec<Poly> {
    // diagonal directions (Cartan weights, reflection) cut the block down
    let kept: Vec<&ExpVec> = monomials.iter().filter(|e| model.keep_monomial(e)).collect();
    if kept.is_empty() {
        return Vec::new();
    }
    // stacked generator matrix, one row per (generator, target monomial)
    let mut rows: Vec<SparseRow> = Vec::new();
    for g in &model.offdiag {
        let mut by_target: BTreeMap<ExpVec, SparseRow> = BTreeMap::new();
        for (col, e) in kept.iter().enumerate() {
            for (target, coeff) in g.apply_to_monomial(e) {
                by_target.entry(target).or_default().push((col, coeff));
            }
        }
        rows.extend(by_target.into_values());
    }
    let rref = sparse_rref(kept.len(), rows);
    rref.nullspace()
        .into_iter()
        .map(|v| {
            Poly::from_terms(model.m, v.into_iter().map(|(col, c)| (kept[col].clone(), c)))
        })
        .collect()
}

/// The quadratic invariant attached to one coordinate of the symmetric
/// constituent (an entry of the classical Hilbert map).
pub fn hilbert_pullback(spec: &PairSpec, coord: usize) -> Result<Poly> {
    let coords = spec.p_coords();
    let &(i, j) = coords.get(coord).ok_or(Error::InvalidCoordinate {
        index: coord,
        dim: coords.len(),
    })?;
    let m = spec.m();
    let mut out = Poly::zero(m);
    match *spec {
        PairSpec::SpO { l, s } => {
            for a in 0..s {
                let t = &Poly::var(m, rc(a, i, l), VarKind::Hol)
                    * &Poly::var(m, rc(a, j, l), VarKind::Hol);
                out = &out + &t;
            }
        }
        PairSpec::Upq { p, q, s } => {
            let u_idx = |a: usize, jj: usize| a * p + jj;
            let v_idx = |a: usize, ii: usize| s * p + a * q + ii;
            for a in 0..s {
                let t = &Poly::var(m, v_idx(a, i), VarKind::Hol)
                    * &Poly::var(m, u_idx(a, j), VarKind::Hol);
                out = &out + &t;
            }
        }
        PairSpec::OstarSp { n, s } => {
            for a in 0..s {
                let plus = &Poly::var(m, rc(a, i, n), VarKind::Hol)
                    * &Poly::var(m, rc(s + a, j, n), VarKind::Hol);
                let minus = &Poly::var(m, rc(s + a, i, n), VarKind::Hol)
                    * &Poly::var(m, rc(a, j, n), VarKind::Hol);
                out = &(&out + &plus) - &minus;
            }
        }
    }
    Ok(out)
}

/// The degree-`k` substitution data of the Hilbert map: each degree-`k`
/// monomial in the coordinates of the symmetric constituent maps to a
/// degree-`2k` invariant.
pub struct PullbackGraded {
    /// Degree-`k` monomials in the symmetric-constituent coordinates.
    pub p_monomials: Vec<ExpVec>,
    /// Their images, degree-`2k` invariant polynomials on `W`.
    pub images: Vec<Poly>,
    pub rank: usize,
    pub kernel_dim: usize,
    /// Rank equals `dim F_{2k}^H`, checked exactly.
    pub surjective: bool,
}

pub fn pullback_graded(spec: &PairSpec, k: u32) -> Result<PullbackGraded> {
    let model = w_model(spec);
    let n_coords = spec.p_dim();
    let pullbacks: Vec<Poly> = (0..n_coords)
        .map(|c| hilbert_pullback(spec, c))
        .collect::<Result<_>>()?;
    for p in &pullbacks {
        if !model.is_invariant(p) {
            return Err(Error::Internal(format!(
                "pullback image is not invariant: {p}"
            )));
        }
    }
    let p_monomials = hol_monomials(n_coords, k);
    let images: Vec<Poly> = p_monomials
        .par_iter()
        .map(|e| {
            let mut acc = Poly::one(model.m());
            for (c, &exp) in e.hol().iter().enumerate() {
                for _ in 0..exp {
                    acc = &acc * &pullbacks[c];
                }
            }
            acc
        })
        .collect();

    // rank of the image family in the degree-2k monomial basis
    let mut index: BTreeMap<ExpVec, usize> = BTreeMap::new();
    for img in &images {
        for (e, _) in img.terms() {
            let next = index.len();
            index.entry(e.clone()).or_insert(next);
        }
    }
    let rows: Vec<SparseRow> = images
        .iter()
        .map(|img| {
            let mut row: SparseRow = img.terms().map(|(e, c)| (index[e], c.clone())).collect();
            row.sort_by_key(|(j, _)| *j);
            row
        })
        .collect();
    let rank = sparse_rref(index.len(), rows).rank();
    let invariants = invariant_dim(spec, 2 * k)?;
    Ok(PullbackGraded {
        kernel_dim: p_monomials.len() - rank,
        p_monomials,
        images,
        rank,
        surjective: rank == invariants,
    })
}

// ---------------------------------------------------------------------------
// the centralizer action
// ---------------------------------------------------------------------------

/// A generator of the centralizer Lie algebra in its natural matrix form:
/// one ℓ×ℓ (or n×n) matrix, or a `u(p) ⊕ u(q)` pair.
#[derive(Debug, Clone)]
pub enum KGenerator {
    Single(Vec<Vec<Scalar>>),
    Pair(Vec<Vec<Scalar>>, Vec<Vec<Scalar>>),
}

/// The elementary anti-hermitian basis of the centralizer.
pub fn k_generator_basis(spec: &PairSpec) -> Vec<KGenerator> {
    match *spec {
        PairSpec::SpO { l, .. } => crate::fock::anti_hermitian_basis(l)
            .into_iter()
            .map(KGenerator::Single)
            .collect(),
        PairSpec::Upq { p, q, .. } => {
            let zero = |d: usize| vec![vec![Scalar::zero(); d]; d];
            let mut out = Vec::new();
            for a in crate::fock::anti_hermitian_basis(p) {
                out.push(KGenerator::Pair(a, zero(q)));
            }
            for b in crate::fock::anti_hermitian_basis(q) {
                out.push(KGenerator::Pair(zero(p), b));
            }
            out
        }
        PairSpec::OstarSp { n, .. } => crate::fock::anti_hermitian_basis(n)
            .into_iter()
            .map(KGenerator::Single)
            .collect(),
    }
}

/// The complexified central direction (identity matrices); acts on the
/// degree-`k` graded piece of the reduced ring as the scalar `2k`.
pub fn k_central(spec: &PairSpec) -> KGenerator {
    let eye = |d: usize| {
        let mut x = vec![vec![Scalar::zero(); d]; d];
        for j in 0..d {
            x[j][j] = Scalar::one();
        }
        x
    };
    match *spec {
        PairSpec::SpO { l, .. } => KGenerator::Single(eye(l)),
        PairSpec::Upq { p, q, .. } => KGenerator::Pair(eye(p), eye(q)),
        PairSpec::OstarSp { n, .. } => KGenerator::Single(eye(n)),
    }
}

/// Lifts a centralizer generator to its derivation on the coordinates of
/// `W` (acting on the column index, commuting with the compact group).
pub fn k_to_w(spec: &PairSpec, x: &KGenerator) -> Result<CoordMap> {
    let m = spec.m();
    let mut map = CoordMap::new(m);
    match (*spec, x) {
        (PairSpec::SpO { l, s }, KGenerator::Single(mat)) => {
            check_square(mat, l)?;
            for a in 0..s {
                for i in 0..l {
                    for t in 0..l {
                        map.push(rc(a, i, l), rc(a, t, l), mat[i][t].clone());
                    }
                }
            }
        }
        (PairSpec::OstarSp { n, s }, KGenerator::Single(mat)) => {
            check_square(mat, n)?;
            for a in 0..2 * s {
                for i in 0..n {
                    for t in 0..n {
                        map.push(rc(a, i, n), rc(a, t, n), mat[i][t].clone());
                    }
                }
            }
        }
        (PairSpec::Upq { p, q, s }, KGenerator::Pair(mat_u, mat_v)) => {
            check_square(mat_u, p)?;
            check_square(mat_v, q)?;
            let u_idx = |a: usize, j: usize| a * p + j;
            let v_idx = |a: usize, i: usize| s * p + a * q + i;
            for a in 0..s {
                for j in 0..p {
                    for t in 0..p {
                        map.push(u_idx(a, j), u_idx(a, t), mat_u[j][t].clone());
                    }
                }
                for i in 0..q {
                    for t in 0..q {
                        map.push(v_idx(a, i), v_idx(a, t), mat_v[i][t].clone());
                    }
                }
            }
        }
        _ => {
            return Err(Error::Internal(
                "centralizer generator shape does not match the pair case".into(),
            ))
        }
    }
    Ok(map)
}

fn check_square(mat: &[Vec<Scalar>], d: usize) -> Result<()> {
    if mat.len() != d || mat.iter().any(|r| r.len() != d) {
        return Err(Error::Internal(format!(
            "expected a {d}x{d} centralizer matrix"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> PairSpec {
        text.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for t in ["sp-o:l=3,s=2", "u-pq:p=2,q=2,s=1", "ostar-sp:n=4,s=1"] {
            assert_eq!(spec(t).to_string(), t);
        }
        assert!("sp-o:l=1,s=2".parse::<PairSpec>().is_err());
        assert!("u-pq:p=1,q=2,s=1".parse::<PairSpec>().is_err());
        assert!("ostar-sp:n=2,s=2".parse::<PairSpec>().is_err());
        assert!("sp-x:l=1,s=1".parse::<PairSpec>().is_err());
    }

    #[test]
    fn model_shapes() {
        let m1 = w_model(&spec("sp-o:l=2,s=1"));
        assert_eq!(m1.m(), 2);
        assert!(m1.has_reflection());
        assert!(m1.generators().is_empty());

        let m2 = w_model(&spec("u-pq:p=1,q=1,s=1"));
        assert_eq!(m2.m(), 2);

        let m3 = w_model(&spec("ostar-sp:n=2,s=1"));
        assert_eq!(m3.m(), 4);
        // sp(2) for s=1: one Cartan filter, one raising, one lowering
        assert_eq!(m3.weight_filters.len(), 1);
        assert_eq!(m3.offdiag.len(), 2);
    }

    #[test]
    fn sp_o_invariants_are_even_polynomials() {
        let sp = spec("sp-o:l=2,s=1");
        let basis = invariant_basis(&sp, 2).unwrap();
        assert_eq!(basis.len(), 3);
        let texts: Vec<String> = basis.iter().map(|p| p.to_text()).collect();
        for t in ["z1^2", "z1*z2", "z2^2"] {
            assert!(texts.iter().any(|s| s.contains(t)), "missing {t} in {texts:?}");
        }
        assert_eq!(invariant_dim(&sp, 3).unwrap(), 0);
    }

    #[test]
    fn u11_invariants_balance_weights() {
        let sp = spec("u-pq:p=1,q=1,s=1");
        let basis = invariant_basis(&sp, 2).unwrap();
        assert_eq!(basis.len(), 1);
        // u·v in the flat layout is z1*z2
        assert_eq!(basis[0].to_text(), "1*z1*z2");
        assert_eq!(invariant_dim(&sp, 1).unwrap(), 0);
    }

    #[test]
    fn hilbert_pullback_examples() {
        let sp = spec("sp-o:l=2,s=1");
        // x_{11} -> z_1^2
        assert_eq!(hilbert_pullback(&sp, 0).unwrap().to_text(), "1*z1^2");

        let up = spec("u-pq:p=1,q=1,s=1");
        assert_eq!(hilbert_pullback(&up, 0).unwrap().to_text(), "1*z1*z2");

        let os = spec("ostar-sp:n=2,s=1");
        // x_{12} -> z[1,1] z[2,2] - z[2,1] z[1,2]
        let p = hilbert_pullback(&os, 0).unwrap();
        let expected = Poly::parse_text(4, "z1*z4 - z2*z3").unwrap();
        assert_eq!(p, expected);

        assert!(matches!(
            hilbert_pullback(&sp, 99),
            Err(Error::InvalidCoordinate { .. })
        ));
    }

    #[test]
    fn pullback_images_are_invariant_everywhere() {
        for t in ["sp-o:l=2,s=2", "u-pq:p=2,q=1,s=1", "ostar-sp:n=3,s=1"] {
            let sp = spec(t);
            let model = w_model(&sp);
            for c in 0..sp.p_dim() {
                let p = hilbert_pullback(&sp, c).unwrap();
                assert!(model.is_invariant(&p), "{t} coordinate {c}");
            }
        }
    }

    #[test]
    fn pullback_graded_ranks() {
        let sp = spec("sp-o:l=2,s=1");
        let g = pullback_graded(&sp, 1).unwrap();
        assert_eq!(g.rank, 3);
        assert!(g.surjective);

        let g0 = pullback_graded(&sp, 0).unwrap();
        assert_eq!(g0.rank, 1);

        let sp22 = spec("sp-o:l=2,s=2");
        let g22 = pullback_graded(&sp22, 1).unwrap();
        assert_eq!(g22.rank, 3);
        assert_eq!(g22.kernel_dim, 0);
    }

    #[test]
    fn rank_one_locus_has_a_kernel() {
        // s = 1 < l = 2: the symmetric determinant vanishes on the image,
        // so degree-2 monomials in the coordinates drop rank by one
        let sp = spec("sp-o:l=2,s=1");
        let g = pullback_graded(&sp, 2).unwrap();
        assert_eq!(g.p_monomials.len(), 6);
        assert_eq!(g.rank, 5);
        assert_eq!(g.kernel_dim, 1);
        assert!(g.surjective);
    }

    #[test]
    fn centralizer_commutes_with_group_action() {
        for t in ["sp-o:l=2,s=2", "u-pq:p=2,q=1,s=1", "ostar-sp:n=2,s=1"] {
            let sp = spec(t);
            let model = w_model(&sp);
            for x in k_generator_basis(&sp) {
                let xw = k_to_w(&sp, &x).unwrap();
                // invariants stay invariant under the centralizer derivation
                for b in invariant_basis(&sp, 2).unwrap() {
                    let image = xw.apply(&b);
                    assert!(model.is_invariant(&image), "{t}");
                }
            }
        }
    }

    #[test]
    fn ostar_minimal_case_dimensions() {
        let os = spec("ostar-sp:n=2,s=1");
        // Λ²C² is one line: one invariant in each even degree
        for k in 0..=3u32 {
            assert_eq!(invariant_dim(&os, 2 * k).unwrap(), 1, "degree {}", 2 * k);
            if k > 0 {
                assert_eq!(invariant_dim(&os, 2 * k - 1).unwrap(), 0);
            }
        }
    }
}
