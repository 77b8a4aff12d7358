//! Determinantal and Pfaffian models of the orbit-closure coordinate rings:
//! graded dimensions, the restriction chain, the reduced energy spectrum,
//! and the centralizer action on graded pieces.
//!
//! The stratum-`s'` closure is the rank locus cut out, inside the symmetric
//! constituent, by the size-(s'+1) minors (symmetric or generic case) or the
//! order-(2s'+2) principal Pfaffians (antisymmetric case). These ideals are
//! prime and generated in that single degree, so the degree-`k` piece of the
//! ideal is exactly the span of generator multiples and graded dimensions
//! reduce to one exact rank computation. A randomized evaluation rank at
//! points of the matrix parametrization serves as an independent oracle;
//! the two methods are compared, never silently reconciled.

use std::collections::BTreeMap;
use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dual_pairs::{CoordMap, KGenerator, PairSpec};
use crate::error::{Error, Result};
use crate::linalg::{exact_rank, sparse_rref, RankAccumulator, SparseRow, SparseRref};
use crate::poly::{hol_monomials, ExpVec, Poly, VarKind};
use crate::rng;
use crate::scalar::Scalar;

/// A validated stratum of the closure chain `{0} = O_0 ⊆ ... ⊆ O_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitStratum {
    spec: PairSpec,
    s_prime: usize,
}

impl OrbitStratum {
    pub fn new(spec: PairSpec, s_prime: usize) -> Result<Self> {
        check_stratum(&spec, s_prime)?;
        Ok(OrbitStratum { spec, s_prime })
    }

    pub fn spec(&self) -> PairSpec {
        self.spec
    }

    pub fn index(&self) -> usize {
        self.s_prime
    }

    /// Whether this stratum's closure contains the other one.
    pub fn contains(&self, other: &OrbitStratum) -> bool {
        self.spec == other.spec && other.s_prime <= self.s_prime
    }
}

fn check_stratum(spec: &PairSpec, s_prime: usize) -> Result<()> {
    let rank = spec.real_rank();
    if s_prime > rank {
        return Err(Error::StratumOutOfRange { s_prime, rank });
    }
    Ok(())
}

/// The `(i, j)` entry of the generic symmetric / general / antisymmetric
/// coordinate matrix, as a polynomial in the canonical coordinates.
pub fn p_entry(spec: &PairSpec, i: usize, j: usize) -> Poly {
    let coords = spec.p_coords();
    let n_vars = coords.len();
    let position = |a: usize, b: usize| -> usize {
        coords
            .iter()
            .position(|&(x, y)| (x, y) == (a, b))
            .expect("coordinate exists")
    };
    match spec {
        PairSpec::SpO { .. } => {
            let (a, b) = (i.min(j), i.max(j));
            Poly::var(n_vars, position(a, b), VarKind::Hol)
        }
        PairSpec::Upq { .. } => Poly::var(n_vars, position(i, j), VarKind::Hol),
        PairSpec::OstarSp { .. } => {
            if i == j {
                Poly::zero(n_vars)
            } else if i < j {
                Poly::var(n_vars, position(i, j), VarKind::Hol)
            } else {
                Poly::var(n_vars, position(j, i), VarKind::Hol).neg()
            }
        }
    }
}

fn det_poly(mat: &[Vec<Poly>]) -> Poly {
    let n = mat.len();
    if n == 0 {
        return Poly::one(0);
    }
    let n_vars = mat[0][0].m();
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = Poly::zero(n_vars);
    for (col, entry) in mat[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry.try_mul(&det_poly(&minor)).expect("same arity");
        acc = if col % 2 == 0 {
            &acc + &cofactor
        } else {
            &acc - &cofactor
        };
    }
    acc
}

/// Minor of the generic coordinate matrix on the given row and column sets.
pub fn generic_minor(spec: &PairSpec, rows: &[usize], cols: &[usize]) -> Poly {
    let mat: Vec<Vec<Poly>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| p_entry(spec, i, j)).collect())
        .collect();
    det_poly(&mat)
}

/// Pfaffian of the principal antisymmetric submatrix on `subset` (even size),
/// by the standard first-row expansion.
pub fn principal_pfaffian(spec: &PairSpec, subset: &[usize]) -> Poly {
    let n_vars = spec.p_dim();
    fn pf(spec: &PairSpec, idx: &[usize], n_vars: usize) -> Poly {
        if idx.is_empty() {
            return Poly::one(n_vars);
        }
        let mut acc = Poly::zero(n_vars);
        for t in 1..idx.len() {
            let entry = p_entry(spec, idx[0], idx[t]);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx
                .iter()
                .enumerate()
                .filter(|(pos, _)| *pos != 0 && *pos != t)
                .map(|(_, &v)| v)
                .collect();
            let term = entry.try_mul(&pf(spec, &rest, n_vars)).expect("same arity");
            // sign (-1)^t for removing position t after position 0
            acc = if t % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    assert!(subset.len() % 2 == 0, "Pfaffian needs an even index set");
    pf(spec, subset, n_vars)
}

/// Generators of the stratum ideal: size-(s'+1) minors or order-(2s'+2)
/// principal Pfaffians; the top stratum has none.
pub fn ideal_generators(spec: &PairSpec, s_prime: usize) -> Result<Vec<Poly>> {
    check_stratum(spec, s_prime)?;
    let mut out = Vec::new();
    match *spec {
        PairSpec::SpO { l, .. } => {
            let size = s_prime + 1;
            if size <= l {
                // det on (R, C) equals det on (C, R) for a symmetric matrix;
                // keep one representative per unordered pair
                for rows in (0..l).combinations(size) {
                    for cols in (0..l).combinations(size) {
                        if rows <= cols {
                            out.push(generic_minor(spec, &rows, &cols));
                        }
                    }
                }
            }
        }
        PairSpec::Upq { p, q, .. } => {
            let size = s_prime + 1;
            if size <= q && size <= p {
                for rows in (0..q).combinations(size) {
                    for cols in (0..p).combinations(size) {
                        out.push(generic_minor(spec, &rows, &cols));
                    }
                }
            }
        }
        PairSpec::OstarSp { n, .. } => {
            let size = 2 * s_prime + 2;
            if size <= n {
                for subset in (0..n).combinations(size) {
                    out.push(principal_pfaffian(spec, &subset));
                }
            }
        }
    }
    Ok(out)
}

/// The degree-`k` piece of the stratum ideal as RREF data over the
/// degree-`k` monomial basis, plus the quotient (standard-monomial) basis.
pub struct QuotientPiece {
    /// All degree-`k` monomials in the symmetric-constituent coordinates.
    pub monomials: Vec<ExpVec>,
    index: HashMap<ExpVec, usize>,
    ideal_rref: SparseRref,
    /// Positions (into `monomials`) of the standard monomials that span the
    /// quotient.
    pub standard: Vec<usize>,
}

impl QuotientPiece {
    pub fn new(spec: &PairSpec, s_prime: usize, k: u32) -> Result<Self> {
        check_stratum(spec, s_prime)?;
        let n_vars = spec.p_dim();
        let monomials = hol_monomials(n_vars, k);
        let index: HashMap<ExpVec, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let generators = ideal_generators(spec, s_prime)?;
        let mut rows: Vec<SparseRow> = Vec::new();
        for g in &generators {
            let d = g.total_degree();
            if d > k {
                continue;
            }
            for cofactor in hol_monomials(n_vars, k - d) {
                let product = g
                    .try_mul(&Poly::monomial(cofactor, Scalar::one()))
                    .expect("same arity");
                rows.push(poly_to_row(&product, &index));
            }
        }
        let ideal_rref = sparse_rref(monomials.len(), rows);
        let pivot_cols: Vec<usize> = ideal_rref.pivot_columns().collect();
        let standard = (0..monomials.len())
            .filter(|c| pivot_cols.binary_search(c).is_err())
            .collect();
        Ok(QuotientPiece {
            monomials,
            index,
            ideal_rref,
            standard,
        })
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal_rref.rank()
    }

    /// Coordinates of `p` in the standard-monomial basis of the quotient.
    pub fn reduce(&self, p: &Poly) -> Result<Vec<Scalar>> {
        let row = poly_to_row(p, &self.index);
        let residual = self.ideal_rref.reduce(row);
        let mut out = vec![Scalar::zero(); self.standard.len()];
        for (col, c) in residual {
            let slot = self
                .standard
                .binary_search(&col)
                .map_err(|_| Error::Internal("residual touches a pivot column".into()))?;
            out[slot] = c;
        }
        Ok(out)
    }

    /// Whether `p` lies in the degree-`k` ideal piece.
    pub fn contains_in_ideal(&self, p: &Poly) -> bool {
        self.ideal_rref.reduce(poly_to_row(p, &self.index)).is_empty()
    }

    pub fn standard_monomials(&self) -> impl Iterator<Item = &ExpVec> {
        self.standard.iter().map(|&c| &self.monomials[c])
    }
}

fn poly_to_row(p: &Poly, index: &HashMap<ExpVec, usize>) -> SparseRow {
    let mut row: SparseRow = p
        .terms()
        .map(|(e, c)| (*index.get(e).expect("degree matches the basis"), c.clone()))
        .collect();
    row.sort_by_key(|(j, _)| *j);
    row
}

/// Graded dimension of the stratum coordinate ring by the primary method:
/// monomial count minus the exact rank of the generator multiples.
pub fn graded_dim(spec: &PairSpec, s_prime: usize, k: u32) -> Result<u64> {
    check_stratum(spec, s_prime)?;
    let n_vars = spec.p_dim();
    let monomials = hol_monomials(n_vars, k);
    let index: HashMap<ExpVec, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let generators = ideal_generators(spec, s_prime)?;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in &generators {
        let d = g.total_degree();
        if d > k {
            continue;
        }
        for cofactor in hol_monomials(n_vars, k - d) {
            let product = g
                .try_mul(&Poly::monomial(cofactor, Scalar::one()))
                .expect("same arity");
            let mut row = vec![Scalar::zero(); monomials.len()];
            for (e, c) in product.terms() {
                row[index[e]] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank = exact_rank(&rows)?;
    Ok((monomials.len() - rank) as u64)
}

/// Independent oracle: rank of the evaluation matrix of degree-`k` monomials
/// at random points of the rank-`s'` matrix parametrization, with points
/// added until the rank holds still for three consecutive additions.
pub fn graded_dim_eval(spec: &PairSpec, s_prime: usize, k: u32, seed: u64, height: u32) -> Result<u64> {
    check_stratum(spec, s_prime)?;
    let coords = spec.p_coords();
    let n_vars = coords.len();
    let monomials = hol_monomials(n_vars, k);
    let mut rng = rng::seeded(seed);
    let mut acc = RankAccumulator::new(monomials.len());
    let mut stable = 0usize;
    while stable < 3 {
        let point = sample_point(spec, s_prime, &mut rng, height);
        let row: SparseRow = monomials
            .iter()
            .enumerate()
            .filter_map(|(col, e)| {
                let mut v = Scalar::one();
                for (var, &exp) in e.hol().iter().enumerate() {
                    for _ in 0..exp {
                        v *= &point[var];
                    }
                }
                (!v.is_zero()).then_some((col, v))
            })
            .collect();
        if acc.insert(row) {
            stable = 0;
        } else {
            stable += 1;
        }
    }
    Ok(acc.rank() as u64)
}

/// Values of the canonical coordinates at one random point of the
/// parametrization of the rank-`s'` locus.
fn sample_point(
    spec: &PairSpec,
    s_prime: usize,
    rng: &mut impl rand::Rng,
    height: u32,
) -> Vec<Scalar> {
    let coords = spec.p_coords();
    let mut rand_mat = |rows: usize, cols: usize| -> Vec<Vec<Scalar>> {
        (0..rows)
            .map(|_| (0..cols).map(|_| rng::scalar(rng, height)).collect())
            .collect()
    };
    match *spec {
        PairSpec::SpO { l, .. } => {
            // x = A·Aᵀ with A random l×s'
            let a = rand_mat(l, s_prime);
            coords
                .iter()
                .map(|&(i, j)| dot(&a[i], &a[j]))
                .collect()
        }
        PairSpec::Upq { p, q, .. } => {
            // x = B·C with B random q×s', C random s'×p (columns of Cᵀ)
            let b = rand_mat(q, s_prime);
            let ct = rand_mat(p, s_prime);
            coords
                .iter()
                .map(|&(i, j)| dot(&b[i], &ct[j]))
                .collect()
        }
        PairSpec::OstarSp { n, .. } => {
            // x = A·J·Aᵀ with A random n×2s' and J the split skew form
            let a = rand_mat(n, 2 * s_prime);
            coords
                .iter()
                .map(|&(i, j)| {
                    let mut acc = Scalar::zero();
                    for t in 0..s_prime {
                        acc += &(&a[i][t] * &a[j][s_prime + t]);
                        acc -= &(&a[i][s_prime + t] * &a[j][t]);
                    }
                    acc
                })
                .collect()
        }
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Primary and oracle methods together; disagreement is an error, never
/// silently resolved.
pub fn graded_dim_cross_checked(
    spec: &PairSpec,
    s_prime: usize,
    k: u32,
    seed: u64,
    height: u32,
) -> Result<u64> {
    let ideal = graded_dim(spec, s_prime, k)?;
    let eval = graded_dim_eval(spec, s_prime, k, seed, height)?;
    if ideal != eval {
        return Err(Error::MethodDisagreement {
            s_prime,
            degree: k as usize,
            ideal,
            eval,
        });
    }
    Ok(ideal)
}

/// Kernel dimension of the restriction from stratum `s'` onto `s''`.
pub fn restriction_kernel_dim(
    spec: &PairSpec,
    s_prime: usize,
    s_second: usize,
    k: u32,
) -> Result<u64> {
    if s_second >= s_prime {
        return Err(Error::BadRestriction {
            upper: s_prime,
            lower: s_second,
        });
    }
    let upper = graded_dim(spec, s_prime, k)?;
    let lower = graded_dim(spec, s_second, k)?;
    upper.checked_sub(lower).ok_or(Error::Internal(format!(
        "restriction is not surjective at degree {k}: {upper} < {lower}"
    )))
}

/// `[(2k, dim_k)]` for `0 <= k <= k_max`: the reduced energy operator acts on
/// the degree-`k` graded piece as multiplication by `2k` because the Hilbert
/// pullback doubles degree and the unreduced operator is the Euler operator.
pub fn reduced_energy_spectrum(
    spec: &PairSpec,
    s_prime: usize,
    k_max: u32,
) -> Result<Vec<(u64, u64)>> {
    (0..=k_max)
        .map(|k| Ok((2 * k as u64, graded_dim(spec, s_prime, k)?)))
        .collect()
}

/// The centralizer generator acting on the degree-`k` quotient piece.
pub struct ReducedAction {
    /// Standard monomials spanning the quotient.
    pub basis: Vec<ExpVec>,
    /// `matrix[r][c]` = coefficient of `basis[r]` in the image of `basis[c]`.
    pub matrix: Vec<Vec<Scalar>>,
}

/// Derivation of a centralizer generator on the coordinates of the
/// symmetric constituent: `x ↦ X·x + x·Xᵀ` in matrix form (with the
/// `u(p) ⊕ u(q)` pair acting by `B·x + x·Aᵀ`).
pub fn k_action_on_coords(spec: &PairSpec, x: &KGenerator) -> Result<CoordMap> {
    let coords = spec.p_coords();
    let n_vars = coords.len();
    let mut map = CoordMap::new(n_vars);
    // resolve a (possibly reordered/signed) matrix entry to a coordinate
    let resolve = |a: usize, b: usize| -> Option<(usize, Scalar)> {
        match spec {
            PairSpec::SpO { .. } => {
                let key = (a.min(b), a.max(b));
                coords.iter().position(|&c| c == key).map(|p| (p, Scalar::one()))
            }
            PairSpec::Upq { .. } => coords
                .iter()
                .position(|&c| c == (a, b))
                .map(|p| (p, Scalar::one())),
            PairSpec::OstarSp { .. } => {
                if a == b {
                    None
                } else if a < b {
                    coords.iter().position(|&c| c == (a, b)).map(|p| (p, Scalar::one()))
                } else {
                    coords
                        .iter()
                        .position(|&c| c == (b, a))
                        .map(|p| (p, -&Scalar::one()))
                }
            }
        }
    };
    let (left, right): (&Vec<Vec<Scalar>>, &Vec<Vec<Scalar>>) = match (spec, x) {
        (PairSpec::SpO { .. }, KGenerator::Single(mat))
        | (PairSpec::OstarSp { .. }, KGenerator::Single(mat)) => (mat, mat),
        (PairSpec::Upq { .. }, KGenerator::Pair(mat_a, mat_b)) => (mat_b, mat_a),
        _ => {
            return Err(Error::Internal(
                "centralizer generator shape does not match the pair case".into(),
            ))
        }
    };
    for (c, &(i, j)) in coords.iter().enumerate() {
        // (X x)_{ij} = Σ_t X_{it} x_{tj}
        for (t, coeff) in left[i].iter().enumerate() {
            if let Some((target, sign)) = resolve(t, j) {
                map.push(c, target, coeff * &sign);
            }
        }
        // (x Xᵀ)_{ij} = Σ_t x_{it} X_{jt}
        for (t, coeff) in right[j].iter().enumerate() {
            if let Some((target, sign)) = resolve(i, t) {
                map.push(c, target, coeff * &sign);
            }
        }
    }
    Ok(map)
}

/// Matrix of the derivation action of a centralizer generator on the
/// degree-`k` graded piece of the stratum ring, computed modulo the ideal.
/// The ideal piece is checked to be stable under the action first.
pub fn reduced_k_action(
    spec: &PairSpec,
    s_prime: usize,
    x: &KGenerator,
    k: u32,
) -> Result<ReducedAction> {
    let piece = QuotientPiece::new(spec, s_prime, k)?;
    let action = k_action_on_coords(spec, x)?;

    // stability: the derivation must carry each generator into the ideal
    let generators = ideal_generators(spec, s_prime)?;
    if !generators.is_empty() {
        let d = generators[0].total_degree();
        let gen_piece = QuotientPiece::new(spec, s_prime, d)?;
        for g in &generators {
            if !gen_piece.contains_in_ideal(&action.apply(g)) {
                return Err(Error::Internal(
                    "stratum ideal is not stable under the centralizer action".into(),
                ));
            }
        }
    }

    let basis: Vec<ExpVec> = piece.standard_monomials().cloned().collect();
    let mut matrix = vec![vec![Scalar::zero(); basis.len()]; basis.len()];
    for (c, e) in basis.iter().enumerate() {
        let image = action.apply(&Poly::monomial(e.clone(), Scalar::one()));
        let reduced = piece.reduce(&image)?;
        for (r, v) in reduced.into_iter().enumerate() {
            matrix[r][c] = v;
        }
    }
    Ok(ReducedAction { basis, matrix })
}

/// The canonical surjection between quotient pieces of nested strata, as a
/// matrix from the `s'`-standard basis to the `s''`-standard basis.
pub fn restriction_matrix(
    spec: &PairSpec,
    s_prime: usize,
    s_second: usize,
    k: u32,
) -> Result<Vec<Vec<Scalar>>> {
    if s_second >= s_prime {
        return Err(Error::BadRestriction {
            upper: s_prime,
            lower: s_second,
        });
    }
    let upper = QuotientPiece::new(spec, s_prime, k)?;
    let lower = QuotientPiece::new(spec, s_second, k)?;
    let mut out = vec![vec![Scalar::zero(); upper.standard.len()]; lower.standard.len()];
    for (c, e) in upper.standard_monomials().enumerate() {
        let reduced = lower.reduce(&Poly::monomial(e.clone(), Scalar::one()))?;
        for (r, v) in reduced.into_iter().enumerate() {
            out[r][c] = v;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// graded tables
// ---------------------------------------------------------------------------

/// How a graded dimension was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DimMethod {
    IdealRank,
    Evaluation,
    RepresentationCount,
}

impl DimMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            DimMethod::IdealRank => "ideal-rank",
            DimMethod::Evaluation => "evaluation",
            DimMethod::RepresentationCount => "representation-count",
        }
    }
}

/// The `(stratum, degree) → dimension` table for one pair spec.
#[derive(Debug, Clone)]
pub struct GradedTable {
    spec: PairSpec,
    entries: BTreeMap<(usize, u32), (u64, DimMethod)>,
}

impl GradedTable {
    /// Computes all cells for `stratum <= r`, `degree <= k_max` with the
    /// requested method. Cells are independent and evaluated in parallel;
    /// assembly is order-independent.
    pub fn compute(
        spec: &PairSpec,
        k_max: u32,
        method: DimMethod,
        seed: u64,
        height: u32,
    ) -> Result<Self> {
        let r = spec.real_rank();
        let cells: Vec<(usize, u32)> = (0..=r)
            .flat_map(|s| (0..=k_max).map(move |k| (s, k)))
            .collect();
        let computed: Vec<Result<((usize, u32), u64)>> = cells
            .par_iter()
            .map(|&(s, k)| {
                let dim = match method {
                    DimMethod::IdealRank => graded_dim(spec, s, k)?,
                    DimMethod::Evaluation => graded_dim_eval(spec, s, k, seed, height)?,
                    DimMethod::RepresentationCount => {
                        crate::hw_reps::stratum_rep_count(spec, s, k)?
                    }
                };
                Ok(((s, k), dim))
            })
            .collect();
        let mut entries = BTreeMap::new();
        for c in computed {
            let ((s, k), dim) = c?;
            entries.insert((s, k), (dim, method));
        }
        Ok(GradedTable {
            spec: *spec,
            entries,
        })
    }

    /// Assembles a table from cells computed elsewhere (for example through
    /// a cache).
    pub fn from_cells(
        spec: &PairSpec,
        cells: impl IntoIterator<Item = (usize, u32, u64, DimMethod)>,
    ) -> Self {
        GradedTable {
            spec: *spec,
            entries: cells
                .into_iter()
                .map(|(s, k, dim, method)| ((s, k), (dim, method)))
                .collect(),
        }
    }

    pub fn spec(&self) -> PairSpec {
        self.spec
    }

    pub fn get(&self, s_prime: usize, k: u32) -> Option<u64> {
        self.entries.get(&(s_prime, k)).map(|&(d, _)| d)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, u64, DimMethod)> + '_ {
        self.entries.iter().map(|(&(s, k), &(d, m))| (s, k, d, m))
    }

    /// Structural invariants: dimensions never decrease with the stratum,
    /// every stratum has a one-dimensional degree-0 piece, and the origin
    /// carries nothing in positive degree.
    pub fn check_consistency(&self) -> Result<()> {
        for (&(s, k), &(dim, _)) in &self.entries {
            if k == 0 && dim != 1 {
                return Err(Error::Internal(format!(
                    "degree-0 piece of stratum {s} has dimension {dim}"
                )));
            }
            if s == 0 && k > 0 && dim != 0 {
                return Err(Error::Internal(format!(
                    "origin stratum has dimension {dim} in degree {k}"
                )));
            }
            if s > 0 {
                if let Some(&(below, _)) = self.entries.get(&(s - 1, k)) {
                    if below > dim {
                        return Err(Error::Internal(format!(
                            "dimension drops from {below} to {dim} between strata {} and {s} \
                             at degree {k}",
                            s - 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// CSV with columns `case,params,stratum,degree,dim,method`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("case,params,stratum,degree,dim,method\n");
        for (s, k, dim, method) in self.iter() {
            out.push_str(&format!(
                "{},\"{}\",{},{},{},{}\n",
                self.spec.case().tag(),
                self.spec.params_string(),
                s,
                k,
                dim,
                method.tag()
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "case": self.spec.case().tag(),
            "params": self.spec.params_string(),
            "entries": self
                .iter()
                .map(|(s, k, dim, method)| {
                    serde_json::json!({
                        "stratum": s,
                        "degree": k,
                        "dim": dim,
                        "method": method.tag(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}
