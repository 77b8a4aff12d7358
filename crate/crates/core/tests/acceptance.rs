//! Acceptance suite: every check is an exact (zero-tolerance) equality at
//! desk scale. One test per criterion; each prints a PASS line on success.
//!
//! Criterion grid: sp-o with l <= 3 and s <= l; u-pq with p, q <= 2 and
//! s <= q <= p; ostar-sp with n <= 4 and s <= 2. Degrees run to k <= 3
//! unless a criterion says otherwise.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use sfock_core::dual_pairs::{self, PairSpec};
use sfock_core::fock::{self, FockState, Observable};
use sfock_core::hw_reps;
use sfock_core::orbit_rings::{self, QuotientPiece};
use sfock_core::poly::{hol_monomials, poisson, Poly};
use sfock_core::rng;
use sfock_core::Scalar;

fn spec(text: &str) -> PairSpec {
    text.parse().unwrap()
}

/// The main acceptance grid (criteria 4-8).
fn main_grid() -> Vec<PairSpec> {
    [
        "sp-o:l=1,s=1",
        "sp-o:l=2,s=1",
        "sp-o:l=2,s=2",
        "sp-o:l=3,s=1",
        "sp-o:l=3,s=2",
        "sp-o:l=3,s=3",
        "u-pq:p=1,q=1,s=1",
        "u-pq:p=2,q=1,s=1",
        "u-pq:p=2,q=2,s=1",
        "u-pq:p=2,q=2,s=2",
        "ostar-sp:n=2,s=1",
        "ostar-sp:n=3,s=1",
        "ostar-sp:n=4,s=1",
        "ostar-sp:n=4,s=2",
    ]
    .iter()
    .map(|t| spec(t))
    .collect()
}

/// The wider grid of criterion 3 (l, p, q <= 3; n <= 4).
fn odd_vanishing_grid() -> Vec<PairSpec> {
    let mut out = main_grid();
    for t in [
        "u-pq:p=3,q=1,s=1",
        "u-pq:p=3,q=2,s=1",
        "u-pq:p=3,q=2,s=2",
        "u-pq:p=3,q=3,s=1",
        "u-pq:p=3,q=3,s=2",
        "u-pq:p=3,q=3,s=3",
    ] {
        out.push(spec(t));
    }
    out
}

/// Invariant dimensions are the expensive cells; share them across criteria.
fn inv_dim(sp: &PairSpec, degree: u32) -> usize {
    static MEMO: OnceLock<Mutex<HashMap<(PairSpec, u32), usize>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&d) = memo.lock().unwrap().get(&(*sp, degree)) {
        return d;
    }
    let d = dual_pairs::invariant_dim(sp, degree).unwrap();
    memo.lock().unwrap().insert((*sp, degree), d);
    d
}

#[test]
fn criterion_1_dirac_condition() {
    // 200 randomized pairs of quantizable observables of degree <= 2 across
    // m = 1..3, against every monomial state of degree <= 4
    let mut checked_pairs = 0usize;
    for (m, pairs) in [(1usize, 66usize), (2, 67), (3, 67)] {
        let failures = fock::dirac_suite(m, 4, pairs, 0xD1AC + m as u64, 6, false).unwrap();
        assert!(
            failures.is_empty(),
            "m={m}: {} nonzero Dirac defects, first: f={}, g={}, state={}",
            failures.len(),
            failures[0].f.poly(),
            failures[0].g.poly(),
            failures[0].state,
        );
        checked_pairs += pairs;
    }
    assert_eq!(checked_pairs, 200);
    println!("criterion 1 (Dirac condition, 200 random pairs, m <= 3): PASS");
}

#[test]
fn criterion_2_energy_spectrum() {
    // the energy operator acts on degree-k monomial states as k·Id, k <= 6
    for m in 1..=3usize {
        let f_e = Observable::energy(m);
        for k in 0..=6u32 {
            for e in hol_monomials(m, k) {
                let state = FockState::monomial(e.hol().to_vec());
                let out = fock::quantize(&f_e, &state).unwrap();
                assert_eq!(
                    out,
                    state.scale(&Scalar::from_int(k as i64)),
                    "m={m}, k={k}"
                );
            }
        }
    }
    println!("criterion 2 (energy spectrum k·Id on degree-k states, k <= 6): PASS");
}

#[test]
fn criterion_3_odd_section_vanishing() {
    for sp in odd_vanishing_grid() {
        for k in 1..=2u32 {
            let degree = 2 * k - 1;
            assert_eq!(inv_dim(&sp, degree), 0, "{sp} at odd degree {degree}");
        }
    }
    println!("criterion 3 (odd-degree invariants vanish): PASS");
}

#[test]
fn criterion_4_quantization_commutes_with_reduction() {
    // triple equality: invariant dimension = graded dimension of the
    // s-parameter stratum = highest-weight representation count
    for sp in main_grid() {
        let s = sp.s_param();
        for k in 0..=3u32 {
            let invariants = inv_dim(&sp, 2 * k) as u64;
            let graded = orbit_rings::graded_dim(&sp, s, k).unwrap();
            let reps = hw_reps::stratum_rep_count(&sp, s, k).unwrap();
            assert_eq!(invariants, graded, "{sp} k={k}: invariants vs graded");
            assert_eq!(graded, reps, "{sp} k={k}: graded vs representation count");
        }
    }
    // the frozen chain for sp-o l=2, s=1: dimensions 1, 3, 5
    let frozen = spec("sp-o:l=2,s=1");
    for (k, expected) in [(0u32, 1u64), (1, 3), (2, 5)] {
        assert_eq!(inv_dim(&frozen, 2 * k) as u64, expected);
        assert_eq!(orbit_rings::graded_dim(&frozen, 1, k).unwrap(), expected);
        assert_eq!(hw_reps::stratum_rep_count(&frozen, 1, k).unwrap(), expected);
    }
    println!("criterion 4 (triple equality, quantization commutes with reduction): PASS");
}

#[test]
fn criterion_5_costratified_chain() {
    for sp in main_grid() {
        let r = sp.real_rank();
        for s_prime in 1..=r {
            for k in 0..=3u32 {
                let kernel =
                    orbit_rings::restriction_kernel_dim(&sp, s_prime, s_prime - 1, k).unwrap();
                let reps = hw_reps::kernel_rep_count(&sp, s_prime, k).unwrap();
                assert_eq!(kernel, reps, "{sp} stratum {s_prime} degree {k}");
            }
            // degree-1 pieces are constant across strata >= 1
            assert_eq!(
                orbit_rings::graded_dim(&sp, s_prime, 1).unwrap(),
                sp.p_dim() as u64,
                "{sp} stratum {s_prime}"
            );
        }
    }
    println!("criterion 5 (costratified chain kernels match representation counts): PASS");
}

#[test]
fn criterion_6_even_reduced_spectrum() {
    for sp in main_grid() {
        for s_prime in 0..=sp.real_rank() {
            let spectrum = orbit_rings::reduced_energy_spectrum(&sp, s_prime, 3).unwrap();
            for (idx, &(eigenvalue, multiplicity)) in spectrum.iter().enumerate() {
                let k = idx as u64;
                assert_eq!(eigenvalue % 2, 0, "{sp}: odd eigenvalue {eigenvalue}");
                assert_eq!(eigenvalue, 2 * k);
                assert_eq!(
                    multiplicity,
                    orbit_rings::graded_dim(&sp, s_prime, k as u32).unwrap(),
                    "{sp} stratum {s_prime} eigenvalue {eigenvalue}"
                );
                assert_eq!(
                    multiplicity,
                    hw_reps::stratum_rep_count(&sp, s_prime, k as u32).unwrap(),
                    "{sp} stratum {s_prime} eigenvalue {eigenvalue}"
                );
            }
        }
    }
    println!("criterion 6 (reduced spectrum is even with graded multiplicities): PASS");
}

#[test]
fn criterion_7_oracle_agreement() {
    for sp in main_grid() {
        for s_prime in 0..=sp.real_rank() {
            for k in 0..=3u32 {
                let ideal = orbit_rings::graded_dim(&sp, s_prime, k).unwrap();
                for seed in 0..3u64 {
                    let eval =
                        orbit_rings::graded_dim_eval(&sp, s_prime, k, seed, 10).unwrap();
                    assert_eq!(ideal, eval, "{sp} stratum {s_prime} degree {k} seed {seed}");
                }
            }
        }
    }
    println!("criterion 7 (ideal-rank and evaluation-rank methods agree, 3 seeds): PASS");
}

#[test]
fn criterion_8_intertwining() {
    for sp in main_grid() {
        let s = sp.s_param();
        for k in 0..=2u32 {
            // transported invariant action: the Hilbert map intertwines the
            // coordinate derivation with the negative of the quantum
            // symmetry operator (the symmetry flows functions backward)
            let pg = dual_pairs::pullback_graded(&sp, k).unwrap();
            let piece = QuotientPiece::new(&sp, s, k).unwrap();
            for x in dual_pairs::k_generator_basis(&sp) {
                let reduced = orbit_rings::reduced_k_action(&sp, s, &x, k).unwrap();
                let mu = fock::momentum_u(&dual_pairs::k_to_w(&sp, &x).unwrap().to_dense())
                    .unwrap();
                for (col, &pos) in piece.standard.iter().enumerate() {
                    let state = FockState::new(pg.images[pos].clone()).unwrap();
                    let transported = fock::symmetry(&mu, &state).unwrap().phi().neg();
                    let mut expected = Poly::zero(sp.m());
                    for (row, &rpos) in piece.standard.iter().enumerate() {
                        let c = &reduced.matrix[row][col];
                        if !c.is_zero() {
                            expected = expected
                                .try_add(&pg.images[rpos].scale(c))
                                .unwrap();
                        }
                    }
                    assert_eq!(transported, expected, "{sp} k={k}");
                }
            }
        }
        // restriction maps intertwine the reduced actions along the chain
        for s_prime in 1..=sp.real_rank() {
            for k in 0..=2u32 {
                let rest = orbit_rings::restriction_matrix(&sp, s_prime, s_prime - 1, k).unwrap();
                for x in dual_pairs::k_generator_basis(&sp) {
                    let upper = orbit_rings::reduced_k_action(&sp, s_prime, &x, k).unwrap();
                    let lower = orbit_rings::reduced_k_action(&sp, s_prime - 1, &x, k).unwrap();
                    assert_eq!(
                        mat_mul(&rest, &upper.matrix),
                        mat_mul(&lower.matrix, &rest),
                        "{sp} stratum {s_prime} degree {k}"
                    );
                }
            }
        }
    }
    println!("criterion 8 (reduced actions intertwine with transport and restriction): PASS");
}

#[test]
fn criterion_9_calculus_laws() {
    // randomized exact bracket laws
    let mut rng = rng::seeded(9);
    for m in 1..=3usize {
        for _ in 0..20 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut p = Poly::zero(m);
                for _ in 0..4 {
                    let hol: Vec<u32> = (0..m)
                        .map(|_| rand::Rng::gen_range(&mut *rng, 0..=1u32))
                        .collect();
                    let antihol: Vec<u32> = (0..m)
                        .map(|_| rand::Rng::gen_range(&mut *rng, 0..=1u32))
                        .collect();
                    let e = sfock_core::ExpVec::new(hol, antihol);
                    if e.total_degree() > 3 {
                        continue;
                    }
                    p = p
                        .try_add(&Poly::monomial(e, rng::scalar(rng, 4)))
                        .unwrap();
                }
                p
            };
            let p = rand_poly(&mut rng);
            let q = rand_poly(&mut rng);
            let r = rand_poly(&mut rng);
            // antisymmetry
            assert_eq!(
                poisson(&p, &q).unwrap(),
                poisson(&q, &p).unwrap().neg()
            );
            // Leibniz
            let lhs = poisson(&p.try_mul(&q).unwrap(), &r).unwrap();
            let rhs = p
                .try_mul(&poisson(&q, &r).unwrap())
                .unwrap()
                .try_add(&poisson(&p, &r).unwrap().try_mul(&q).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            // Jacobi
            let cycle = |a: &Poly, b: &Poly, c: &Poly| {
                poisson(a, &poisson(b, c).unwrap()).unwrap()
            };
            let total = cycle(&p, &q, &r)
                .try_add(&cycle(&q, &r, &p))
                .unwrap()
                .try_add(&cycle(&r, &p, &q))
                .unwrap();
            assert!(total.is_zero());
        }
    }

    // hermiticity of quantized real observables on degree <= 4 pieces
    for m in 1..=2usize {
        let states = fock::monomial_states(m, 4);
        let mut rng = rng::seeded(90 + m as u64);
        for _ in 0..2 {
            let f = fock::random_real_quantizable(&mut rng, m, 5);
            for s in &states {
                let fs = fock::quantize(&f, s).unwrap();
                for t in &states {
                    let ft = fock::quantize(&f, t).unwrap();
                    assert_eq!(fock::inner(&fs, t).unwrap(), fock::inner(s, &ft).unwrap());
                }
            }
        }
    }

    // skewness of symmetry operators on degree <= 4 pieces
    for m in 1..=2usize {
        let states = fock::monomial_states(m, 4);
        for x in fock::anti_hermitian_basis(m) {
            let mu = fock::momentum_u(&x).unwrap();
            for s in &states {
                let xs = fock::symmetry(&mu, s).unwrap();
                for t in &states {
                    let xt = fock::symmetry(&mu, t).unwrap();
                    let total = &fock::inner(&xs, t).unwrap() + &fock::inner(s, &xt).unwrap();
                    assert!(total.is_zero());
                }
            }
        }
    }
    println!("criterion 9 (bracket laws, hermiticity, skewness, all exact): PASS");
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner > 0 { b[0].len() } else { 0 };
    let mut out = vec![vec![Scalar::zero(); cols]; rows];
    for r in 0..rows {
        for c in 0..cols {
            for t in 0..inner {
                out[r][c] += &(&a[r][t] * &b[t][c]);
            }
        }
    }
    out
}
