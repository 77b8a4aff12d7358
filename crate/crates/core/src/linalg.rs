//! Exact linear algebra over the Gaussian rationals.
//!
//! [`exact_rank`] runs fraction-free (Bareiss) elimination on a dense copy of
//! the input. The sparse reduced-row-echelon machinery below backs kernel
//! computations whose matrices are large but have only a handful of nonzero
//! entries per row; both paths are deterministic for a fixed input order.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Rank over the Gaussian-rational field by fraction-free elimination.
pub fn exact_rank(rows: &[Vec<Scalar>]) -> Result<usize> {
    if rows.is_empty() {
        return Ok(0);
    }
    let ncols = rows[0].len();
    for (i, r) in rows.iter().enumerate() {
        if r.len() != ncols {
            return Err(Error::RaggedMatrix {
                row: i,
                len: r.len(),
                expected: ncols,
            });
        }
    }
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let nrows = a.len();
    let mut prev_pivot = Scalar::one();
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let t = &(&pivot * &a[r][c]) - &(&a[r][col] * &a[rank][c]);
                a[r][c] = &t / &prev_pivot;
            }
            a[r][col] = Scalar::zero();
        }
        prev_pivot = pivot;
        rank += 1;
    }
    Ok(rank)
}

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Reduced row echelon form held as normalized pivot rows.
pub struct SparseRref {
    ncols: usize,
    /// `(pivot column, row)` with the pivot entry equal to 1, sorted by column.
    pivots: Vec<(usize, SparseRow)>,
}

impl SparseRref {
    pub fn new(ncols: usize) -> Self {
        SparseRref {
            ncols,
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.iter().map(|(c, _)| *c)
    }

    /// Reduces `row` against the current pivots; the residual has no support
    /// on any pivot column.
    pub fn reduce(&self, row: SparseRow) -> SparseRow {
        let mut work: BTreeMap<usize, Scalar> = row.into_iter().collect();
        for (pc, prow) in &self.pivots {
            let Some(c) = work.get(pc).cloned() else {
                continue;
            };
            if c.is_zero() {
                work.remove(pc);
                continue;
            }
            for (j, v) in prow {
                let delta = &c * v;
                match work.entry(*j) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-&delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        work.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Reduces and, if a residual survives, installs it as a new pivot row.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let residual = self.reduce(row);
        let Some((pc, lead)) = residual.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("leading entry is nonzero");
        let new_row: SparseRow = residual.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
        // keep full reduction: clear the new pivot column from existing rows
        for (_, prow) in &mut self.pivots {
            let Some(pos) = prow.iter().position(|(j, _)| *j == pc) else {
                continue;
            };
            let factor = prow[pos].1.clone();
            let mut merged: BTreeMap<usize, Scalar> = prow.drain(..).collect();
            for (j, v) in &new_row {
                let delta = &factor * v;
                match merged.entry(*j) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-&delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            *prow = merged.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        let at = self.pivots.partition_point(|(c, _)| *c < pc);
        self.pivots.insert(at, (pc, new_row));
        true
    }

    /// Basis of the nullspace `{x : Mx = 0}` of the matrix this RREF was
    /// built from, one sparse vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<SparseRow> {
        let pivot_cols: Vec<usize> = self.pivot_columns().collect();
        let mut basis = Vec::new();
        for f in 0..self.ncols {
            if pivot_cols.binary_search(&f).is_ok() {
                continue;
            }
            let mut v: SparseRow = vec![(f, Scalar::one())];
            for (pc, prow) in &self.pivots {
                if let Some((_, c)) = prow.iter().find(|(j, _)| *j == f) {
                    v.push((*pc, -c));
                }
            }
            v.sort_by_key(|(j, _)| *j);
            basis.push(v);
        }
        basis
    }
}

/// RREF of a matrix given by sparse rows.
pub fn sparse_rref(ncols: usize, rows: impl IntoIterator<Item = SparseRow>) -> SparseRref {
    let mut rref = SparseRref::new(ncols);
    for row in rows {
        rref.insert(row);
    }
    rref
}

/// Dense wrapper: basis of `{x : Mx = 0}` where `rows` are the rows of `M`.
pub fn kernel_basis(ncols: usize, rows: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    for (i, r) in rows.iter().enumerate() {
        if r.len() != ncols {
            return Err(Error::RaggedMatrix {
                row: i,
                len: r.len(),
                expected: ncols,
            });
        }
    }
    let rref = sparse_rref(ncols, rows.iter().map(|r| to_sparse(r)));
    Ok(rref
        .nullspace()
        .into_iter()
        .map(|v| to_dense(ncols, &v))
        .collect())
}

/// Solves `Σ_j x_j · cols[j] = target` exactly; `None` if inconsistent.
pub fn solve_columns(cols: &[Vec<Scalar>], target: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let n = cols.len();
    let height = target.len();
    for (i, c) in cols.iter().enumerate() {
        if c.len() != height {
            return Err(Error::RaggedMatrix {
                row: i,
                len: c.len(),
                expected: height,
            });
        }
    }
    // rows of the augmented system [A | target], eliminated densely
    let mut rref = SparseRref::new(n + 1);
    for r in 0..height {
        let mut row: SparseRow = Vec::new();
        for (j, col) in cols.iter().enumerate() {
            if !col[r].is_zero() {
                row.push((j, col[r].clone()));
            }
        }
        if !target[r].is_zero() {
            row.push((n, target[r].clone()));
        }
        rref.insert(row);
    }
    // inconsistent iff some pivot sits in the augmented column
    if rref.pivot_columns().any(|c| c == n) {
        return Ok(None);
    }
    // particular solution: free variables zero, pivot variables read off
    let mut x = vec![Scalar::zero(); n];
    for (pc, prow) in &rref.pivots {
        if let Some((_, c)) = prow.iter().find(|(j, _)| *j == n) {
            x[*pc] = c.clone();
        }
    }
    Ok(Some(x))
}

/// Rank-only accumulator for dense rational rows, such as evaluation
/// matrices. Incoming rows are scaled to Gaussian-integer form and swept by
/// fraction-free (Bareiss) elimination over raw integer pairs: every step
/// multiplies by the current pivot and divides exactly by the previous one,
/// so entries stay the size of minors and no gcd normalization ever runs.
pub struct RankAccumulator {
    ncols: usize,
    /// `(lead column, row)` in insertion order; each row has zeros at the
    /// lead columns of all earlier pivots.
    pivots: Vec<(usize, Vec<GaussInt>)>,
}

/// A Gaussian integer, kept outside `Scalar` to avoid rational reduction.
#[derive(Clone, PartialEq, Eq)]
struct GaussInt(num_bigint::BigInt, num_bigint::BigInt);

impl GaussInt {
    fn zero() -> Self {
        use num_traits::Zero;
        GaussInt(num_bigint::BigInt::zero(), num_bigint::BigInt::zero())
    }

    fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.0.is_zero() && self.1.is_zero()
    }

    fn mul(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt(
            &self.0 * &rhs.0 - &self.1 * &rhs.1,
            &self.0 * &rhs.1 + &self.1 * &rhs.0,
        )
    }

    fn sub(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt(&self.0 - &rhs.0, &self.1 - &rhs.1)
    }

    /// Exact division, valid whenever `rhs` divides `self` (which the
    /// Bareiss identity guarantees in the sweep below).
    fn exact_div(&self, rhs: &GaussInt) -> GaussInt {
        let norm = &rhs.0 * &rhs.0 + &rhs.1 * &rhs.1;
        let re = &self.0 * &rhs.0 + &self.1 * &rhs.1;
        let im = &self.1 * &rhs.0 - &self.0 * &rhs.1;
        GaussInt(re / &norm, im / &norm)
    }
}

impl RankAccumulator {
    pub fn new(ncols: usize) -> Self {
        RankAccumulator {
            ncols,
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Sweeps the row and installs the residual if it is nonzero. Returns
    /// whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        use num_traits::{One, Zero};
        let cleared = clear_denominators(row);
        let mut work = vec![GaussInt::zero(); self.ncols];
        for (j, v) in &cleared {
            work[*j] = GaussInt(v.re().numer().clone(), v.im().numer().clone());
        }
        let one = GaussInt(num_bigint::BigInt::one(), num_bigint::BigInt::zero());
        let mut prev_pivot = one.clone();
        for (col, prow) in &self.pivots {
            let eliminated = work[*col].clone();
            let lead = prow[*col].clone();
            for t in 0..self.ncols {
                let combined = lead.mul(&work[t]).sub(&eliminated.mul(&prow[t]));
                work[t] = if prev_pivot == one {
                    combined
                } else {
                    combined.exact_div(&prev_pivot)
                };
            }
            prev_pivot = lead;
        }
        let Some(col) = work.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        self.pivots.push((col, work));
        true
    }
}

/// Scales a row by the least common multiple of its denominators; rank is
/// unchanged by row scaling.
fn clear_denominators(row: SparseRow) -> SparseRow {
    use num_bigint::BigInt;
    use num_traits::One;
    let mut lcm = BigInt::one();
    for (_, v) in &row {
        lcm = num_integer::Integer::lcm(&lcm, v.re().denom());
        lcm = num_integer::Integer::lcm(&lcm, v.im().denom());
    }
    if lcm.is_one() {
        return row;
    }
    let factor = Scalar::from_bigint(lcm);
    row.into_iter().map(|(j, v)| (j, &v * &factor)).collect()
}

pub fn to_sparse(row: &[Scalar]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(j, v)| (j, v.clone()))
        .collect()
}

pub fn to_dense(ncols: usize, row: &SparseRow) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); ncols];
    for (j, v) in row {
        out[*j] = v.clone();
    }
    out
}
