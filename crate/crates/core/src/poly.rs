//! Sparse multivariate polynomials in paired variables `z_1..z_m` and
//! `zb_1..zb_m` (the formal conjugates), with exact Gaussian-rational
//! coefficients.
//!
//! `z_j` and `zb_j` are independent formal variables; whether a point is
//! "real" (`zb = conj(z)`) is a caller-side contract. The canonical term
//! order is graded lexicographic on the concatenated exponent vector, which
//! makes equality, display, and matrix construction deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which half of a variable pair an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Hol,
    Antihol,
}

/// Exponent vector of a monomial: `hol[j]` is the power of `z_{j+1}`,
/// `antihol[j]` the power of `zb_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpVec {
    hol: Vec<u32>,
    antihol: Vec<u32>,
}

impl ExpVec {
    pub fn new(hol: Vec<u32>, antihol: Vec<u32>) -> Self {
        assert_eq!(hol.len(), antihol.len(), "paired exponent vectors");
        ExpVec { hol, antihol }
    }

    /// The constant monomial in `m` variables.
    pub fn unit(m: usize) -> Self {
        ExpVec {
            hol: vec![0; m],
            antihol: vec![0; m],
        }
    }

    /// Purely holomorphic monomial with the given exponents.
    pub fn hol_only(hol: Vec<u32>) -> Self {
        let m = hol.len();
        ExpVec {
            hol,
            antihol: vec![0; m],
        }
    }

    pub fn var(m: usize, j: usize, kind: VarKind) -> Self {
        let mut e = ExpVec::unit(m);
        match kind {
            VarKind::Hol => e.hol[j] = 1,
            VarKind::Antihol => e.antihol[j] = 1,
        }
        e
    }

    pub fn m(&self) -> usize {
        self.hol.len()
    }

    pub fn hol(&self) -> &[u32] {
        &self.hol
    }

    pub fn antihol(&self) -> &[u32] {
        &self.antihol
    }

    pub fn exp(&self, j: usize, kind: VarKind) -> u32 {
        match kind {
            VarKind::Hol => self.hol[j],
            VarKind::Antihol => self.antihol[j],
        }
    }

    pub fn hol_degree(&self) -> u32 {
        self.hol.iter().sum()
    }

    pub fn antihol_degree(&self) -> u32 {
        self.antihol.iter().sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.hol_degree() + self.antihol_degree()
    }

    pub fn is_holomorphic(&self) -> bool {
        self.antihol.iter().all(|&e| e == 0)
    }

    /// Product of monomials (exponents add).
    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        ExpVec {
            hol: self.hol.iter().zip(&other.hol).map(|(a, b)| a + b).collect(),
            antihol: self
                .antihol
                .iter()
                .zip(&other.antihol)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Decrements one exponent; `None` if it is already zero.
    pub fn lowered(&self, j: usize, kind: VarKind) -> Option<ExpVec> {
        let mut e = self.clone();
        let slot = match kind {
            VarKind::Hol => &mut e.hol[j],
            VarKind::Antihol => &mut e.antihol[j],
        };
        if *slot == 0 {
            return None;
        }
        *slot -= 1;
        Some(e)
    }

    /// Swaps the holomorphic and antiholomorphic halves.
    pub fn swapped(&self) -> ExpVec {
        ExpVec {
            hol: self.antihol.clone(),
            antihol: self.hol.clone(),
        }
    }
}

impl Ord for ExpVec {
    /// Graded lexicographic on `(hol, antihol)` concatenated.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.hol.cmp(&other.hol))
            .then_with(|| self.antihol.cmp(&other.antihol))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial in canonical form: no stored coefficient is zero, and
/// two polynomials are equal iff their term maps are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    m: usize,
    terms: BTreeMap<ExpVec, Scalar>,
}

impl Poly {
    pub fn zero(m: usize) -> Self {
        Poly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Poly::constant(m, Scalar::one())
    }

    pub fn constant(m: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(m);
        p.add_term(ExpVec::unit(m), c);
        p
    }

    /// The variable `z_{j+1}` (kind `Hol`) or `zb_{j+1}` (kind `Antihol`).
    pub fn var(m: usize, j: usize, kind: VarKind) -> Self {
        assert!(j < m, "variable index {j} out of bounds for m = {m}");
        Poly::monomial(ExpVec::var(m, j, kind), Scalar::one())
    }

    pub fn monomial(exp: ExpVec, coeff: Scalar) -> Self {
        let mut p = Poly::zero(exp.m());
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (ExpVec, Scalar)>) -> Self {
        let mut p = Poly::zero(m);
        for (e, c) in terms {
            assert_eq!(e.m(), m, "term arity mismatch");
            p.add_term(e, c);
        }
        p
    }

    /// Adds `coeff * exp` into the map, keeping canonical form.
    fn add_term(&mut self, exp: ExpVec, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExpVec) -> Scalar {
        self.terms.get(exp).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(ExpVec::total_degree).max().unwrap_or(0)
    }

    pub fn hol_degree(&self) -> u32 {
        self.terms.keys().map(ExpVec::hol_degree).max().unwrap_or(0)
    }

    pub fn antihol_degree(&self) -> u32 {
        self.terms.keys().map(ExpVec::antihol_degree).max().unwrap_or(0)
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(ExpVec::is_holomorphic)
    }

    fn check_m(&self, other: &Poly) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.m, other.m))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_m(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_m(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_m(other)?;
        let mut out = Poly::zero(self.m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.m);
        }
        Poly {
            m: self.m,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Formal partial derivative, treating `z_j` and `zb_j` as independent.
    pub fn diff(&self, j: usize, kind: VarKind) -> Poly {
        assert!(j < self.m, "variable index {j} out of bounds for m = {}", self.m);
        let mut out = Poly::zero(self.m);
        for (e, c) in &self.terms {
            let k = e.exp(j, kind);
            if k > 0 {
                let lowered = e.lowered(j, kind).unwrap();
                out.add_term(lowered, c * &Scalar::from_int(k as i64));
            }
        }
        out
    }

    /// Formal conjugate: swap `z ↔ zb` and conjugate every coefficient.
    pub fn formal_conjugate(&self) -> Poly {
        Poly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.swapped(), c.conj()))
                .collect(),
        }
    }

    /// Whether the polynomial equals its formal conjugate (a "real" function
    /// once `zb = conj(z)` is imposed).
    pub fn is_formally_real(&self) -> bool {
        *self == self.formal_conjugate()
    }

    /// Exact substitution; `point[j]` supplies the values of `(z_j, zb_j)`.
    /// When the point is meant to be real the caller passes conjugate pairs.
    pub fn eval(&self, point: &[(Scalar, Scalar)]) -> Scalar {
        assert_eq!(point.len(), self.m, "point arity mismatch");
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for j in 0..self.m {
                term *= &pow(&point[j].0, e.hol()[j]);
                term *= &pow(&point[j].1, e.antihol()[j]);
            }
            acc += &term;
        }
        acc
    }

    /// The homogeneous degree-`k` part.
    pub fn homogeneous_part(&self, k: u32) -> Poly {
        Poly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }
}

fn pow(base: &Scalar, e: u32) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// The Poisson bracket extending `{z_j, zb_k} = -2i δ_jk` as a bi-derivation:
/// `-2i Σ_j (∂p/∂z_j ∂q/∂zb_j - ∂p/∂zb_j ∂q/∂z_j)`.
pub fn poisson(p: &Poly, q: &Poly) -> Result<Poly> {
    if p.m() != q.m() {
        return Err(Error::DimensionMismatch(p.m(), q.m()));
    }
    let m = p.m();
    let mut acc = Poly::zero(m);
    for j in 0..m {
        let a = p.diff(j, VarKind::Hol).try_mul(&q.diff(j, VarKind::Antihol))?;
        let b = p.diff(j, VarKind::Antihol).try_mul(&q.diff(j, VarKind::Hol))?;
        acc = acc.try_add(&a.try_sub(&b)?)?;
    }
    Ok(acc.scale(&(Scalar::from_int(-2) * Scalar::i())))
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomial arity mismatch")
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomial arity mismatch")
    }
}

/// All purely holomorphic monomials of total degree exactly `k` in `m`
/// variables, in a fixed deterministic (lexicographic, `z_1`-major) order.
pub fn hol_monomials(m: usize, k: u32) -> Vec<ExpVec> {
    fn rec(m: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == m {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            rec(m, k - e, prefix, out);
            prefix.pop();
        }
    }
    if m == 0 {
        return if k == 0 { vec![ExpVec::unit(0)] } else { Vec::new() };
    }
    let mut raw = Vec::new();
    rec(m, k, &mut Vec::new(), &mut raw);
    raw.into_iter().map(ExpVec::hol_only).collect()
}

// ---------------------------------------------------------------------------
// canonical text form
// ---------------------------------------------------------------------------

impl fmt::Display for Poly {
    /// Canonical text form, leading term first: `2*z1^2*zb1 + -1/2*z2`.
    /// Negative real coefficients fold into the separator: `z1^2 - 1/2*z2`
    /// never appears because the coefficient is always printed; the form is
    /// `coeff` or `coeff*factors` joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let (sep, coeff) = if idx == 0 {
                ("", c.clone())
            } else if c.is_real() && c.re() < &num_rational::BigRational::from_integer(0.into()) {
                (" - ", -c)
            } else {
                (" + ", c.clone())
            };
            write!(f, "{sep}{coeff}")?;
            for j in 0..self.m {
                match e.hol()[j] {
                    0 => {}
                    1 => write!(f, "*z{}", j + 1)?,
                    k => write!(f, "*z{}^{}", j + 1, k)?,
                }
            }
            for j in 0..self.m {
                match e.antihol()[j] {
                    0 => {}
                    1 => write!(f, "*zb{}", j + 1)?,
                    k => write!(f, "*zb{}^{}", j + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses the canonical text form back into a polynomial in `m`
    /// variables. Accepts any term order and implicit unit coefficients.
    pub fn parse_text(m: usize, input: &str) -> Result<Poly> {
        let mut out = Poly::zero(m);
        for (sign, term) in split_terms(input)? {
            let (coeff, exp) = parse_term(m, term)?;
            let coeff = if sign < 0 { -&coeff } else { coeff };
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

/// Splits at top-level `+`/`-` (depth tracked through parentheses).
fn split_terms(input: &str) -> Result<Vec<(i32, &str)>> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial text".into()));
    }
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut sign = 1i32;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?
            }
            '+' | '-' if depth == 0 && idx > start => {
                // an operator inside an exponent like `z1^-2` never occurs
                parts.push((sign, s[start..idx].trim()));
                sign = if ch == '-' { -1 } else { 1 };
                start = idx + 1;
            }
            '-' if depth == 0 && idx == start => {
                sign = -sign;
                start = idx + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    parts.push((sign, s[start..].trim()));
    Ok(parts)
}

fn parse_term(m: usize, term: &str) -> Result<(Scalar, ExpVec)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = Scalar::one();
    let mut exp = ExpVec::unit(m);
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{term}`")));
        }
        if let Some(rest) = factor.strip_prefix("zb").or_else(|| {
            factor
                .strip_prefix('z')
                .filter(|r| r.chars().next().is_some_and(|c| c.is_ascii_digit()))
        }) {
            let antihol = factor.starts_with("zb");
            let (idx_str, pow_str) = match rest.split_once('^') {
                Some((i, p)) => (i, Some(p)),
                None => (rest, None),
            };
            let j: usize = idx_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
            if j == 0 || j > m {
                return Err(Error::Parse(format!(
                    "variable index {j} out of range 1..={m}"
                )));
            }
            let k: u32 = match pow_str {
                Some(p) => p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                None => 1,
            };
            let kind = if antihol { VarKind::Antihol } else { VarKind::Hol };
            exp = exp.mul(&{
                let mut e = ExpVec::unit(m);
                match kind {
                    VarKind::Hol => e.hol[j - 1] = k,
                    VarKind::Antihol => e.antihol[j - 1] = k,
                }
                e
            });
        } else {
            let c: Scalar = factor.parse()?;
            coeff *= &c;
        }
    }
    Ok((coeff, exp))
}

// ---------------------------------------------------------------------------
// JSON term list
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermRepr {
    hol: Vec<u32>,
    antihol: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    m: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    hol: e.hol().to_vec(),
                    antihol: e.antihol().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut out = Poly::zero(repr.m);
        for t in repr.terms {
            if t.hol.len() != repr.m || t.antihol.len() != repr.m {
                return Err(D::Error::custom("exponent vector arity mismatch"));
            }
            let coeff: Scalar = t.coeff.parse().map_err(D::Error::custom)?;
            out.add_term(ExpVec::new(t.hol, t.antihol), coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: usize, j: usize) -> Poly {
        Poly::var(m, j, VarKind::Hol)
    }

    fn zb(m: usize, j: usize) -> Poly {
        Poly::var(m, j, VarKind::Antihol)
    }

    #[test]
    fn ring_identities() {
        let m = 1;
        let sum = (&z(m, 0) + &zb(m, 0)).try_add(&(&z(m, 0) - &zb(m, 0))).unwrap();
        assert_eq!(sum, z(m, 0).scale(&Scalar::from_int(2)));

        let prod = &z(m, 0) * &zb(m, 0);
        assert_eq!(prod.to_text(), "1*z1*zb1");

        let diff_of_squares = &(&z(m, 0) + &Poly::one(m)) * &(&z(m, 0) - &Poly::one(m));
        let expected = (&z(m, 0) * &z(m, 0)).try_sub(&Poly::one(m)).unwrap();
        assert_eq!(diff_of_squares, expected);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let err = z(1, 0).try_add(&z(2, 0)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch(1, 2));
        assert!(poisson(&z(1, 0), &z(2, 1)).is_err());
    }

    #[test]
    fn derivatives() {
        let m = 2;
        let sq = &z(m, 0) * &z(m, 0);
        assert_eq!(sq.diff(0, VarKind::Hol), z(m, 0).scale(&Scalar::from_int(2)));
        let mixed = &z(m, 0) * &zb(m, 0);
        assert_eq!(mixed.diff(0, VarKind::Antihol), z(m, 0));
        assert!(zb(m, 1).diff(0, VarKind::Hol).is_zero());
    }

    #[test]
    fn coordinate_brackets() {
        let m = 2;
        // {z_1, zb_1} = -2i
        let b = poisson(&z(m, 0), &zb(m, 0)).unwrap();
        assert_eq!(b, Poly::constant(m, Scalar::from_int(-2) * Scalar::i()));
        // {z_1, z_2} = 0
        assert!(poisson(&z(m, 0), &z(m, 1)).unwrap().is_zero());
        // off-diagonal pairs vanish
        assert!(poisson(&z(m, 0), &zb(m, 1)).unwrap().is_zero());
    }

    #[test]
    fn bracket_hand_oracle() {
        // {z_1 zb_1 / 2, z_1} = i z_1, expanding the bi-derivation by hand:
        // -2i * (-(1/2) z_1 * 1) = i z_1
        let m = 1;
        let e = (&z(m, 0) * &zb(m, 0)).scale(&Scalar::from_ratio(1, 2));
        let b = poisson(&e, &z(m, 0)).unwrap();
        assert_eq!(b, z(m, 0).scale(&Scalar::i()));
    }

    #[test]
    fn evaluation() {
        let m = 1;
        let sq = &z(m, 0) * &z(m, 0);
        let three = Scalar::from_int(3);
        assert_eq!(sq.eval(&[(three.clone(), three)]), Scalar::from_int(9));

        // |1+i|^2 via the caller-side conjugate-pair contract
        let p = &z(m, 0) * &zb(m, 0);
        let v = Scalar::from_parts(1, 1, 1, 1);
        assert_eq!(p.eval(&[(v.clone(), v.conj())]), Scalar::from_int(2));

        assert_eq!(Poly::zero(m).eval(&[(Scalar::i(), Scalar::i())]), Scalar::zero());
    }

    #[test]
    fn canonical_text_roundtrip() {
        let m = 2;
        let p = Poly::from_terms(
            m,
            [
                (ExpVec::new(vec![2, 0], vec![1, 0]), Scalar::from_int(2)),
                (ExpVec::new(vec![0, 1], vec![0, 0]), Scalar::from_ratio(-1, 2)),
                (ExpVec::unit(m), Scalar::from_parts(0, 1, 1, 3)),
            ],
        );
        let text = p.to_text();
        assert_eq!(Poly::parse_text(m, &text).unwrap(), p);
        assert_eq!(Poly::parse_text(1, "0").unwrap(), Poly::zero(1));
        // parser accepts implicit coefficients and any order
        assert_eq!(
            Poly::parse_text(1, "z1^2 - z1").unwrap(),
            (&z(1, 0) * &z(1, 0)).try_sub(&z(1, 0)).unwrap()
        );
    }

    #[test]
    fn json_roundtrip() {
        let m = 2;
        let p = Poly::from_terms(
            m,
            [
                (ExpVec::new(vec![1, 1], vec![0, 2]), Scalar::from_parts(5, 3, -7, 11)),
                (ExpVec::unit(m), Scalar::from_int(4)),
            ],
        );
        let s = serde_json::to_string(&p).unwrap();
        let q: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn formal_conjugation() {
        let m = 1;
        let f = &(&z(m, 0) * &zb(m, 0)) + &Poly::one(m); // |z|^2 + 1, formally real
        assert!(f.is_formally_real());
        let g = z(m, 0).scale(&Scalar::i());
        assert!(!g.is_formally_real());
        assert_eq!(g.formal_conjugate(), zb(m, 0).scale(&-&Scalar::i()));
    }
}
