//! The unreduced quantum model: polarized states `φ·ψ0`, the prequantization
//! operator, unitary-symmetry momentum observables, and the Dirac-condition
//! test surface.
//!
//! A polarized state is determined by its holomorphic weight polynomial `φ`;
//! the Gaussian factor `ψ0 = e^{-z·zb/4}` is never evaluated. Differentiation
//! acts on weight polynomials through the rule
//! `∂(p·ψ0)/∂zb_j = (∂p/∂zb_j - p·z_j/4)·ψ0` (and symmetrically with
//! `-zb_j/4` in `z_j`), which keeps every computation exact.

use std::fmt;

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{poisson, ExpVec, Poly, VarKind};
use crate::scalar::Scalar;

/// A polarized state `φ(z)·ψ0` with holomorphic `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockState {
    phi: Poly,
}

impl FockState {
    /// Wraps a holomorphic weight polynomial.
    pub fn new(phi: Poly) -> Result<Self> {
        if !phi.is_holomorphic() {
            return Err(Error::Internal(format!(
                "weight polynomial is not holomorphic: {phi}"
            )));
        }
        Ok(FockState { phi })
    }

    /// The ground state `ψ0` (weight polynomial 1).
    pub fn vacuum(m: usize) -> Self {
        FockState { phi: Poly::one(m) }
    }

    /// The monomial state `z^exps · ψ0`.
    pub fn monomial(exps: Vec<u32>) -> Self {
        FockState {
            phi: Poly::monomial(ExpVec::hol_only(exps), Scalar::one()),
        }
    }

    pub fn zero(m: usize) -> Self {
        FockState { phi: Poly::zero(m) }
    }

    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    pub fn m(&self) -> usize {
        self.phi.m()
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.phi.total_degree()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        FockState {
            phi: self.phi.scale(c),
        }
    }

    pub fn try_add(&self, other: &FockState) -> Result<FockState> {
        Ok(FockState {
            phi: self.phi.try_add(&other.phi)?,
        })
    }

    pub fn try_sub(&self, other: &FockState) -> Result<FockState> {
        Ok(FockState {
            phi: self.phi.try_sub(&other.phi)?,
        })
    }
}

impl fmt::Display for FockState {
    /// A state prints as its weight polynomial in canonical text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phi)
    }
}

/// A classical polynomial observable with its reality flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observable {
    f: Poly,
    is_real: bool,
}

impl Observable {
    pub fn new(f: Poly) -> Self {
        let is_real = f.is_formally_real();
        Observable { f, is_real }
    }

    pub fn constant(m: usize, c: Scalar) -> Self {
        Observable::new(Poly::constant(m, c))
    }

    /// The harmonic-oscillator energy `f_E = Σ_j z_j zb_j / 2`.
    pub fn energy(m: usize) -> Self {
        let mut f = Poly::zero(m);
        for j in 0..m {
            let t = &Poly::var(m, j, VarKind::Hol) * &Poly::var(m, j, VarKind::Antihol);
            f = &f + &t;
        }
        Observable::new(f.scale(&Scalar::from_ratio(1, 2)))
    }

    pub fn poly(&self) -> &Poly {
        &self.f
    }

    pub fn m(&self) -> usize {
        self.f.m()
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }
}

/// Whether `f` is directly quantizable in the holomorphic polarization:
/// `{z_k, {z_j, f}} = 0` for all `j, k`.
pub fn is_quantizable(f: &Observable) -> bool {
    let m = f.m();
    for j in 0..m {
        let inner = match poisson(&Poly::var(m, j, VarKind::Hol), f.poly()) {
            Ok(p) => p,
            Err(_) => return false,
        };
        if inner.is_zero() {
            continue;
        }
        for k in 0..m {
            let outer = poisson(&Poly::var(m, k, VarKind::Hol), &inner)
                .expect("arity is consistent");
            if !outer.is_zero() {
                return false;
            }
        }
    }
    true
}

/// The Poisson potential applied to `df`:
/// `Σ_j (∂f/∂z_j · z_j + ∂f/∂zb_j · zb_j) / 2`.
pub fn theta_df(f: &Observable) -> Poly {
    let m = f.m();
    let mut acc = Poly::zero(m);
    for j in 0..m {
        let hz = &f.poly().diff(j, VarKind::Hol) * &Poly::var(m, j, VarKind::Hol);
        let az = &f.poly().diff(j, VarKind::Antihol) * &Poly::var(m, j, VarKind::Antihol);
        acc = &acc + &(&hz + &az);
    }
    acc.scale(&Scalar::from_ratio(1, 2))
}

/// `∂(p·ψ0)` along one variable, as a weight polynomial.
fn weighted_diff(p: &Poly, j: usize, kind: VarKind) -> Poly {
    let m = p.m();
    let correction = match kind {
        // ∂ψ0/∂z_j = -zb_j/4 · ψ0
        VarKind::Hol => Poly::var(m, j, VarKind::Antihol),
        // ∂ψ0/∂zb_j = -z_j/4 · ψ0
        VarKind::Antihol => Poly::var(m, j, VarKind::Hol),
    };
    &p.diff(j, kind) - &(&correction * p).scale(&Scalar::from_ratio(1, 4))
}

/// A quantizable observable with its derivatives and Poisson-potential
/// multiplier precomputed, so that repeated applications avoid re-deriving
/// anything per state.
struct PreparedOperator {
    m: usize,
    diff_hol: Vec<Poly>,
    diff_antihol: Vec<Poly>,
    multiplier: Poly,
}

impl PreparedOperator {
    fn new(f: &Observable) -> Result<Self> {
        if !is_quantizable(f) {
            return Err(Error::NotQuantizable);
        }
        let m = f.m();
        Ok(PreparedOperator {
            m,
            diff_hol: (0..m).map(|j| f.poly().diff(j, VarKind::Hol)).collect(),
            diff_antihol: (0..m).map(|j| f.poly().diff(j, VarKind::Antihol)).collect(),
            multiplier: f.poly().try_sub(&theta_df(f))?,
        })
    }

    fn apply(&self, s: &FockState) -> Result<FockState> {
        if self.m != s.m() {
            return Err(Error::DimensionMismatch(self.m, s.m()));
        }
        let mut bracket = Poly::zero(self.m);
        for j in 0..self.m {
            let a = self
                .diff_hol[j]
                .try_mul(&weighted_diff(s.phi(), j, VarKind::Antihol))?;
            let b = self
                .diff_antihol[j]
                .try_mul(&weighted_diff(s.phi(), j, VarKind::Hol))?;
            bracket = bracket.try_add(&a.try_sub(&b)?)?;
        }
        // -i · (-2i Σ ...) = -2 Σ ...
        let result = bracket
            .scale(&Scalar::from_int(-2))
            .try_add(&self.multiplier.try_mul(s.phi())?)?;
        if !result.is_holomorphic() {
            // cannot happen for quantizable f; guards the implementation
            return Err(Error::Internal(format!(
                "quantization left a non-holomorphic residue: {result}"
            )));
        }
        FockState::new(result)
    }
}

/// The prequantization operator `f̂(ψ) = -i{f,ψ} + (f - ϑ(df))ψ` applied to a
/// polarized state. Rejects non-quantizable observables.
pub fn quantize(f: &Observable, s: &FockState) -> Result<FockState> {
    if f.m() != s.m() {
        return Err(Error::DimensionMismatch(f.m(), s.m()));
    }
    PreparedOperator::new(f)?.apply(s)
}

/// The infinitesimal quantum symmetry `f̃ = i·f̂`.
pub fn symmetry(f: &Observable, s: &FockState) -> Result<FockState> {
    Ok(quantize(f, s)?.scale(&Scalar::i()))
}

/// `Π_j 2^(a_j) · (a_j)!` — the squared norm of the monomial state `z^a ψ0`.
fn monomial_weight(e: &ExpVec) -> BigInt {
    let mut acc = BigInt::from(1);
    for &a in e.hol() {
        for t in 1..=a as u64 {
            acc *= BigInt::from(2 * t);
        }
    }
    acc
}

/// The Fock inner product, linear in the first slot and conjugate-linear in
/// the second: `⟨z^a ψ0, z^b ψ0⟩ = δ_ab · Π_j 2^(a_j) (a_j)!`.
pub fn inner(s: &FockState, t: &FockState) -> Result<Scalar> {
    if s.m() != t.m() {
        return Err(Error::DimensionMismatch(s.m(), t.m()));
    }
    let mut acc = Scalar::zero();
    for (e, a) in s.phi().terms() {
        let b = t.phi().coeff(e);
        if b.is_zero() {
            continue;
        }
        let w = Scalar::from_bigint(monomial_weight(e));
        acc += &(&(a * &b.conj()) * &w);
    }
    Ok(acc)
}

/// The momentum observable `μ^X = (i/2) Σ x_jk zb_j z_k` of an anti-hermitian
/// matrix `X`. Checks `X + X^† = 0` exactly.
pub fn momentum_u(x: &[Vec<Scalar>]) -> Result<Observable> {
    let m = x.len();
    for (j, row) in x.iter().enumerate() {
        if row.len() != m {
            return Err(Error::RaggedMatrix {
                row: j,
                len: row.len(),
                expected: m,
            });
        }
    }
    for j in 0..m {
        for k in 0..m {
            if !(&x[j][k] + &x[k][j].conj()).is_zero() {
                return Err(Error::NotAntiHermitian);
            }
        }
    }
    let half_i = Scalar::i() * Scalar::from_ratio(1, 2);
    let mut f = Poly::zero(m);
    for j in 0..m {
        for k in 0..m {
            if x[j][k].is_zero() {
                continue;
            }
            let term = &Poly::var(m, j, VarKind::Antihol) * &Poly::var(m, k, VarKind::Hol);
            f = &f + &term.scale(&(&x[j][k] * &half_i));
        }
    }
    Ok(Observable::new(f))
}

struct PreparedDefect {
    op_f: PreparedOperator,
    op_g: PreparedOperator,
    op_bracket: PreparedOperator,
}

impl PreparedDefect {
    fn new(f: &Observable, g: &Observable, flip_bracket: bool) -> Result<Self> {
        let mut fg_bracket = poisson(f.poly(), g.poly())?;
        if flip_bracket {
            fg_bracket = fg_bracket.neg();
        }
        Ok(PreparedDefect {
            op_f: PreparedOperator::new(f)?,
            op_g: PreparedOperator::new(g)?,
            op_bracket: PreparedOperator::new(&Observable::new(fg_bracket))?,
        })
    }

    fn defect(&self, s: &FockState) -> Result<FockState> {
        let lhs = self.op_bracket.apply(s)?;
        let fg = self.op_f.apply(&self.op_g.apply(s)?)?;
        let gf = self.op_g.apply(&self.op_f.apply(s)?)?;
        let commutator = fg.try_sub(&gf)?.scale(&Scalar::i());
        lhs.try_sub(&commutator)
    }
}

fn dirac_defect_impl(
    f: &Observable,
    g: &Observable,
    s: &FockState,
    flip_bracket: bool,
) -> Result<FockState> {
    PreparedDefect::new(f, g, flip_bracket)?.defect(s)
}

/// The Dirac-condition defect
/// `{f,g}̂(s) - i·(f̂ĝ - ĝf̂)(s)`, which must vanish identically.
pub fn dirac_defect(f: &Observable, g: &Observable, s: &FockState) -> Result<FockState> {
    dirac_defect_impl(f, g, s, false)
}

/// Self-test canary: the same defect computed with the sign of `{f, g}`
/// flipped. A healthy suite must see this fail.
pub fn dirac_defect_mutated(f: &Observable, g: &Observable, s: &FockState) -> Result<FockState> {
    dirac_defect_impl(f, g, s, true)
}

/// All monomial states of total degree at most `max_degree`.
pub fn monomial_states(m: usize, max_degree: u32) -> Vec<FockState> {
    let mut out = Vec::new();
    for k in 0..=max_degree {
        for e in crate::poly::hol_monomials(m, k) {
            out.push(FockState {
                phi: Poly::monomial(e, Scalar::one()),
            });
        }
    }
    out
}

/// A random quantizable observable of total degree ≤ 2 (antiholomorphic
/// degree ≤ 1), with small-height Gaussian-rational coefficients.
pub fn random_quantizable(rng: &mut impl Rng, m: usize, height: u32) -> Observable {
    let mut f = Poly::constant(m, crate::rng::scalar(rng, height));
    for j in 0..m {
        f = &f + &Poly::var(m, j, VarKind::Hol).scale(&crate::rng::scalar(rng, height));
        f = &f + &Poly::var(m, j, VarKind::Antihol).scale(&crate::rng::scalar(rng, height));
        for k in j..m {
            let zz = &Poly::var(m, j, VarKind::Hol) * &Poly::var(m, k, VarKind::Hol);
            f = &f + &zz.scale(&crate::rng::scalar(rng, height));
        }
        for k in 0..m {
            let bz = &Poly::var(m, j, VarKind::Antihol) * &Poly::var(m, k, VarKind::Hol);
            f = &f + &bz.scale(&crate::rng::scalar(rng, height));
        }
    }
    Observable::new(f)
}

/// A random formally real quantizable observable
/// `a + b·z + conj(b)·zb + zb·C·z` with hermitian `C`.
pub fn random_real_quantizable(rng: &mut impl Rng, m: usize, height: u32) -> Observable {
    let mut f = Poly::constant(m, crate::rng::real_scalar(rng, height));
    for j in 0..m {
        let b = crate::rng::scalar(rng, height);
        f = &f + &Poly::var(m, j, VarKind::Hol).scale(&b);
        f = &f + &Poly::var(m, j, VarKind::Antihol).scale(&b.conj());
    }
    for j in 0..m {
        let diag = &Poly::var(m, j, VarKind::Antihol) * &Poly::var(m, j, VarKind::Hol);
        f = &f + &diag.scale(&crate::rng::real_scalar(rng, height));
        for k in j + 1..m {
            let c = crate::rng::scalar(rng, height);
            let jk = &Poly::var(m, j, VarKind::Antihol) * &Poly::var(m, k, VarKind::Hol);
            let kj = &Poly::var(m, k, VarKind::Antihol) * &Poly::var(m, j, VarKind::Hol);
            f = &f + &jk.scale(&c);
            f = &f + &kj.scale(&c.conj());
        }
    }
    Observable::new(f)
}

/// The elementary anti-hermitian basis of `u(m)`:
/// `i·E_jj`, `E_jk - E_kj`, `i·(E_jk + E_kj)` for `j < k`.
pub fn anti_hermitian_basis(m: usize) -> Vec<Vec<Vec<Scalar>>> {
    let mut out = Vec::new();
    let mat = |entries: &[(usize, usize, Scalar)]| {
        let mut x = vec![vec![Scalar::zero(); m]; m];
        for (j, k, v) in entries {
            x[*j][*k] = v.clone();
        }
        x
    };
    for j in 0..m {
        out.push(mat(&[(j, j, Scalar::i())]));
    }
    for j in 0..m {
        for k in j + 1..m {
            out.push(mat(&[(j, k, Scalar::one()), (k, j, Scalar::from_int(-1))]));
            out.push(mat(&[(j, k, Scalar::i()), (k, j, Scalar::i())]));
        }
    }
    out
}

/// One failing instance of the Dirac suite, for diagnostics.
#[derive(Debug, Clone)]
pub struct DiracFailure {
    pub f: Observable,
    pub g: Observable,
    pub state: FockState,
    pub defect: FockState,
}

/// Runs `pairs` random quantizable pairs against every monomial state of
/// degree ≤ `state_degree` and collects nonzero defects. With `mutated` the
/// bracket sign is flipped, which a healthy suite must detect.
pub fn dirac_suite(
    m: usize,
    state_degree: u32,
    pairs: usize,
    seed: u64,
    height: u32,
    mutated: bool,
) -> Result<Vec<DiracFailure>> {
    let mut rng = crate::rng::seeded(seed);
    let states = monomial_states(m, state_degree);
    let mut failures = Vec::new();
    for _ in 0..pairs {
        let f = random_quantizable(&mut rng, m, height);
        let g = random_quantizable(&mut rng, m, height);
        let prepared = PreparedDefect::new(&f, &g, mutated)?;
        for s in &states {
            let defect = prepared.defect(s)?;
            if !defect.is_zero() {
                failures.push(DiracFailure {
                    f: f.clone(),
                    g: g.clone(),
                    state: s.clone(),
                    defect,
                });
            }
        }
    }
    Ok(failures)
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
    fn quantizability() {
        let m = 2;
        assert!(is_quantizable(&Observable::energy(m)));
        assert!(is_quantizable(&Observable::constant(m, Scalar::one())));
        // zb_1^2 fails: {z_1, {z_1, zb_1^2}} is a nonzero constant
        let bad = Observable::new(&zb(m, 0) * &zb(m, 0));
        assert!(!is_quantizable(&bad));
        let inner1 = poisson(&z(m, 0), bad.poly()).unwrap();
        let outer = poisson(&z(m, 0), &inner1).unwrap();
        assert_eq!(outer, Poly::constant(m, Scalar::from_int(-8)));
    }

    #[test]
    fn quantizable_iff_antihol_degree_le_1() {
        let m = 2;
        let good = Observable::new(&(&z(m, 0) * &z(m, 0)) * &zb(m, 1));
        assert!(is_quantizable(&good));
        assert_eq!(good.poly().antihol_degree(), 1);
        let bad = Observable::new(&(&zb(m, 0) * &zb(m, 1)) * &z(m, 0));
        assert!(!is_quantizable(&bad));
    }

    #[test]
    fn poisson_potential() {
        let m = 1;
        assert_eq!(
            theta_df(&Observable::new(z(m, 0))),
            z(m, 0).scale(&Scalar::from_ratio(1, 2))
        );
        let fe = Observable::energy(3);
        assert_eq!(theta_df(&fe), fe.poly().clone());
        assert!(theta_df(&Observable::constant(m, Scalar::from_int(7))).is_zero());
    }

    #[test]
    fn euler_operator_on_monomials() {
        // quantize(f_E, z^k ψ0) = k z^k ψ0
        for m in 1..=2 {
            let fe = Observable::energy(m);
            for k in 0..=4u32 {
                let mut exps = vec![0u32; m];
                exps[0] = k;
                let s = FockState::monomial(exps);
                let out = quantize(&fe, &s).unwrap();
                assert_eq!(out, s.scale(&Scalar::from_int(k as i64)));
            }
        }
    }

    #[test]
    fn constants_act_by_multiplication() {
        let m = 2;
        let r = Scalar::from_ratio(3, 7);
        let s = FockState::monomial(vec![2, 1]);
        let out = quantize(&Observable::constant(m, r.clone()), &s).unwrap();
        assert_eq!(out, s.scale(&r));
    }

    #[test]
    fn annihilation_is_twice_the_derivative() {
        // quantize(zb_1, φ ψ0) = 2 ∂φ/∂z_1 ψ0, by the weighted product rule
        let m = 2;
        let phi = &(&z(m, 0) * &z(m, 0)) * &z(m, 1);
        let s = FockState::new(phi.clone()).unwrap();
        let out = quantize(&Observable::new(zb(m, 0)), &s).unwrap();
        let expected = phi.diff(0, VarKind::Hol).scale(&Scalar::from_int(2));
        assert_eq!(out.phi(), &expected);
    }

    #[test]
    fn creation_is_multiplication() {
        let m = 1;
        let s = FockState::monomial(vec![3]);
        let out = quantize(&Observable::new(z(m, 0)), &s).unwrap();
        assert_eq!(out.phi(), &(&z(m, 0) * s.phi()));
    }

    #[test]
    fn rejects_non_quantizable() {
        let m = 1;
        let bad = Observable::new(&zb(m, 0) * &zb(m, 0));
        assert_eq!(
            quantize(&bad, &FockState::vacuum(m)).unwrap_err(),
            Error::NotQuantizable
        );
    }

    #[test]
    fn symmetry_is_i_times_quantize() {
        let m = 1;
        let s = FockState::monomial(vec![1]);
        let fe = Observable::energy(m);
        assert_eq!(symmetry(&fe, &s).unwrap(), s.scale(&Scalar::i()));
        let zero = Observable::constant(m, Scalar::zero());
        assert!(symmetry(&zero, &s).unwrap().is_zero());
    }

    #[test]
    fn inner_product_oracle() {
        // one-variable radial integral: ∫_0^∞ r^(2a+1) e^(-r²/2) dr = 2^a a!,
        // derived by the recurrence I_a = 2a·I_{a-1}, I_0 = 1
        fn radial(a: u64) -> BigInt {
            (1..=a).fold(BigInt::from(1), |acc, t| acc * BigInt::from(2 * t))
        }
        let m = 1;
        assert_eq!(
            inner(&FockState::vacuum(m), &FockState::vacuum(m)).unwrap(),
            Scalar::one()
        );
        for a in 0..=5u64 {
            let s = FockState::monomial(vec![a as u32]);
            assert_eq!(
                inner(&s, &s).unwrap(),
                Scalar::from_bigint(radial(a)),
                "‖z^{a}‖²"
            );
        }
        // distinct monomials are orthogonal
        let s = FockState::monomial(vec![1, 0]);
        let t = FockState::monomial(vec![0, 1]);
        assert_eq!(inner(&s, &t).unwrap(), Scalar::zero());
        // ⟨z² , z²⟩ = 2²·2! = 8
        let u = FockState::monomial(vec![2]);
        assert_eq!(inner(&u, &u).unwrap(), Scalar::from_int(8));
    }

    #[test]
    fn inner_is_conjugate_symmetric_and_positive() {
        let m = 2;
        let s = FockState::new(
            &z(m, 0).scale(&Scalar::from_parts(1, 2, 3, 1)) + &(&z(m, 1) * &z(m, 1)),
        )
        .unwrap();
        let t = FockState::new(&z(m, 0) + &Poly::one(m)).unwrap();
        assert_eq!(inner(&s, &t).unwrap(), inner(&t, &s).unwrap().conj());
        let n = inner(&s, &s).unwrap();
        assert!(n.is_real());
        assert!(n.re() > &num_rational::BigRational::from_integer(0.into()));
    }

    #[test]
    fn momentum_of_minus_i_identity_is_energy() {
        let m = 3;
        let mut x = vec![vec![Scalar::zero(); m]; m];
        for j in 0..m {
            x[j][j] = -&Scalar::i();
        }
        let mu = momentum_u(&x).unwrap();
        assert_eq!(mu.poly(), Observable::energy(m).poly());
        assert!(mu.is_real());
        assert!(is_quantizable(&mu));
    }

    #[test]
    fn momentum_of_elementary_diagonal() {
        // X = -i E_11 gives zb_1 z_1 / 2
        let m = 2;
        let mut x = vec![vec![Scalar::zero(); m]; m];
        x[0][0] = -&Scalar::i();
        let mu = momentum_u(&x).unwrap();
        let expected = (&zb(m, 0) * &z(m, 0)).scale(&Scalar::from_ratio(1, 2));
        assert_eq!(mu.poly(), &expected);
    }

    #[test]
    fn momentum_rejects_non_anti_hermitian() {
        let m = 1;
        let x = vec![vec![Scalar::one()]];
        assert_eq!(momentum_u(&x).unwrap_err(), Error::NotAntiHermitian);
        let zero = momentum_u(&[vec![Scalar::zero()]]).unwrap();
        assert!(zero.poly().is_zero());
    }

    #[test]
    fn dirac_defect_examples() {
        let m = 2;
        let fe = Observable::energy(m);
        let z1 = Observable::new(z(m, 0));
        for s in monomial_states(m, 3) {
            assert!(dirac_defect(&fe, &z1, &s).unwrap().is_zero());
            // antisymmetry makes (f, f) trivial
            assert!(dirac_defect(&fe, &fe, &s).unwrap().is_zero());
        }
    }

    #[test]
    fn dirac_suite_passes_and_canary_fails() {
        let clean = dirac_suite(2, 3, 8, 7, 4, false).unwrap();
        assert!(clean.is_empty());
        let mutated = dirac_suite(2, 3, 8, 7, 4, true).unwrap();
        assert!(!mutated.is_empty(), "sign-flipped bracket must be detected");
    }

    #[test]
    fn momentum_bracket_closes_with_fixed_sign() {
        // {μ^X, μ^Y} = μ^{c[X,Y]}; the elementary oracle fixes c = +1 and the
        // sign is then asserted on every basis pair
        let m = 2;
        let basis = anti_hermitian_basis(m);
        let commutator = |x: &Vec<Vec<Scalar>>, y: &Vec<Vec<Scalar>>| {
            let mut c = vec![vec![Scalar::zero(); m]; m];
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        c[j][k] += &(&x[j][l] * &y[l][k]);
                        c[j][k] -= &(&y[j][l] * &x[l][k]);
                    }
                }
            }
            c
        };
        for x in &basis {
            for y in &basis {
                let lhs = poisson(
                    momentum_u(x).unwrap().poly(),
                    momentum_u(y).unwrap().poly(),
                )
                .unwrap();
                let rhs = momentum_u(&commutator(x, y)).unwrap();
                assert_eq!(&lhs, rhs.poly());
            }
        }
    }
}
