//! Highest-weight bookkeeping: the weighted-degree monomials in the
//! determinant/Pfaffian highest-weight vectors, their centralizer weights,
//! Weyl dimensions, and the stratum-wise representation counts.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dual_pairs::PairSpec;
use crate::error::{Error, Result};

/// Exponents `(a_1, ..., a_{s'})` of a product of the fundamental
/// highest-weight vectors; its weighted degree is `Σ i·a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaMonomial(pub Vec<u32>);

impl DeltaMonomial {
    pub fn weighted_degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u32 + 1) * a)
            .sum()
    }
}

/// A dominant polynomial highest weight: one weakly-decreasing vector, or a
/// pair of them for the product-group case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HWeight {
    Single(Vec<u64>),
    Pair(Vec<u64>, Vec<u64>),
}

/// All solutions of `a_1 + 2 a_2 + ... + s' a_{s'} = k` with `a_i >= 0`, in
/// lexicographic order.
pub fn enumerate_delta(s_prime: usize, k: u32) -> Vec<DeltaMonomial> {
    assert!(s_prime >= 1, "enumerate_delta needs at least one generator");
    fn rec(
        remaining: u32,
        weight: u32,
        max_weight: u32,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if weight == max_weight {
            // the last exponent is forced when it divides evenly
            if remaining % weight == 0 {
                prefix.push(remaining / weight);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for a in 0..=remaining / weight {
            prefix.push(a);
            rec(remaining - a * weight, weight + 1, max_weight, prefix, out);
            prefix.pop();
        }
    }
    // ascending recursion over a_1, a_2, ... emits lexicographic order
    let mut raw = Vec::new();
    rec(k, 1, s_prime as u32, &mut Vec::new(), &mut raw);
    raw.into_iter().map(DeltaMonomial).collect()
}

/// The centralizer highest weight of a delta monomial:
///
/// - `sp-o`: the `i`-th generator contributes 2 to the first `i` slots;
/// - `u-pq`: contributes 1 to the first `i` slots of both factors;
/// - `ostar-sp`: contributes 1 to the first `2i` slots.
pub fn delta_weight(spec: &PairSpec, exps: &DeltaMonomial) -> Result<HWeight> {
    let len = exps.0.len();
    let bound = spec.real_rank();
    if len > bound {
        return Err(Error::DeltaTooLong { len, bound });
    }
    let cum = |slot: usize, stride: usize| -> u64 {
        // total contribution of generators i with stride·i > slot index
        exps.0
            .iter()
            .enumerate()
            .filter(|(i, _)| stride * (i + 1) > slot)
            .map(|(_, &a)| a as u64)
            .sum()
    };
    Ok(match *spec {
        PairSpec::SpO { l, .. } => {
            HWeight::Single((0..l).map(|j| 2 * cum(j, 1)).collect())
        }
        PairSpec::Upq { p, q, .. } => HWeight::Pair(
            (0..p).map(|j| cum(j, 1)).collect(),
            (0..q).map(|j| cum(j, 1)).collect(),
        ),
        PairSpec::OstarSp { n, .. } => {
            HWeight::Single((0..n).map(|j| cum(j, 2)).collect())
        }
    })
}

/// Weyl dimension of the polynomial `U(rank)`-representation with highest
/// weight `lambda` (padded with zeros):
/// `Π_{i<j} (λ_i - λ_j + j - i) / (j - i)`, an exact integer.
pub fn weyl_dim(rank: usize, lambda: &[u64]) -> Result<BigInt> {
    if lambda.len() > rank {
        return Err(Error::NonDominantWeight(
            lambda.iter().map(|&x| x as i64).collect(),
        ));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonDominantWeight(
            lambda.iter().map(|&x| x as i64).collect(),
        ));
    }
    let lam = |i: usize| -> i64 {
        lambda.get(i).copied().unwrap_or(0) as i64
    };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..rank {
        for j in i + 1..rank {
            num *= BigInt::from(lam(i) - lam(j) + (j as i64 - i as i64));
            den *= BigInt::from(j as i64 - i as i64);
        }
    }
    let (quot, rem) = num_integer::Integer::div_rem(&num, &den);
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "Weyl quotient is not integral for {lambda:?}"
        )));
    }
    if !quot.is_positive() {
        return Err(Error::Internal(format!(
            "Weyl dimension is not positive for {lambda:?}"
        )));
    }
    Ok(quot)
}

/// Dimension of the irreducible centralizer representation with the given
/// highest weight; the product-group case multiplies both factors.
pub fn hweight_dim(spec: &PairSpec, w: &HWeight) -> Result<BigInt> {
    match (spec, w) {
        (PairSpec::SpO { l, .. }, HWeight::Single(lam)) => weyl_dim(*l, lam),
        (PairSpec::OstarSp { n, .. }, HWeight::Single(lam)) => weyl_dim(*n, lam),
        (PairSpec::Upq { p, q, .. }, HWeight::Pair(lam_p, lam_q)) => {
            Ok(weyl_dim(*p, lam_p)? * weyl_dim(*q, lam_q)?)
        }
        _ => Err(Error::Internal(
            "weight shape does not match the pair case".into(),
        )),
    }
}

fn delta_dim_sum(
    spec: &PairSpec,
    s_prime: usize,
    k: u32,
    filter: impl Fn(&DeltaMonomial) -> bool,
) -> Result<u64> {
    let mut total = BigInt::zero();
    for d in enumerate_delta(s_prime, k) {
        if !filter(&d) {
            continue;
        }
        let w = delta_weight(spec, &d)?;
        total += hweight_dim(spec, &w)?;
    }
    u64::try_from(total).map_err(|_| Error::Internal("representation count overflow".into()))
}

/// Total dimension of the centralizer representations indexed by the
/// degree-`k` delta monomials of stratum `s'`.
pub fn stratum_rep_count(spec: &PairSpec, s_prime: usize, k: u32) -> Result<u64> {
    let rank = spec.real_rank();
    if s_prime > rank {
        return Err(Error::StratumOutOfRange { s_prime, rank });
    }
    if s_prime == 0 {
        return Ok(u64::from(k == 0));
    }
    delta_dim_sum(spec, s_prime, k, |_| true)
}

/// Dimension of the span of constituents whose monomial involves the top
/// generator (`a_{s'} >= 1`): the kernel of restriction to the next stratum.
pub fn kernel_rep_count(spec: &PairSpec, s_prime: usize, k: u32) -> Result<u64> {
    let rank = spec.real_rank();
    if s_prime < 1 || s_prime > rank {
        return Err(Error::StratumOutOfRange { s_prime, rank });
    }
    delta_dim_sum(spec, s_prime, k, |d| d.0[s_prime - 1] >= 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> PairSpec {
        text.parse().unwrap()
    }

    #[test]
    fn delta_enumeration() {
        let two = enumerate_delta(2, 2);
        assert_eq!(
            two,
            vec![DeltaMonomial(vec![0, 1]), DeltaMonomial(vec![2, 0])]
        );
        assert_eq!(enumerate_delta(1, 3), vec![DeltaMonomial(vec![3])]);
        assert_eq!(enumerate_delta(3, 0), vec![DeltaMonomial(vec![0, 0, 0])]);
        for d in enumerate_delta(3, 5) {
            assert_eq!(d.weighted_degree(), 5);
        }
    }

    #[test]
    fn delta_weights_per_case() {
        let sp = spec("sp-o:l=3,s=2");
        assert_eq!(
            delta_weight(&sp, &DeltaMonomial(vec![1, 0])).unwrap(),
            HWeight::Single(vec![2, 0, 0])
        );
        assert_eq!(
            delta_weight(&sp, &DeltaMonomial(vec![0, 1])).unwrap(),
            HWeight::Single(vec![2, 2, 0])
        );

        let os = spec("ostar-sp:n=4,s=1");
        assert_eq!(
            delta_weight(&os, &DeltaMonomial(vec![1])).unwrap(),
            HWeight::Single(vec![1, 1, 0, 0])
        );

        let up = spec("u-pq:p=2,q=2,s=2");
        assert_eq!(
            delta_weight(&up, &DeltaMonomial(vec![1, 1])).unwrap(),
            HWeight::Pair(vec![2, 1], vec![2, 1])
        );

        assert!(matches!(
            delta_weight(&spec("sp-o:l=2,s=1"), &DeltaMonomial(vec![0, 0, 1])),
            Err(Error::DeltaTooLong { .. })
        ));
    }

    #[test]
    fn weyl_dimension_formula() {
        // brute-force oracle: dim of the degree-d symmetric power of C^2 is
        // the monomial count d+1, which is weyl_dim(2, (d, 0))
        for d in 0..6u64 {
            assert_eq!(
                weyl_dim(2, &[d, 0]).unwrap(),
                BigInt::from(crate::poly::hol_monomials(2, d as u32).len())
            );
        }
        assert_eq!(weyl_dim(2, &[2, 2]).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dim(4, &[0, 0, 0, 0]).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dim(2, &[4, 0]).unwrap(), BigInt::from(5));
        assert_eq!(weyl_dim(4, &[2, 2, 0, 0]).unwrap(), BigInt::from(20));
        assert!(weyl_dim(2, &[1, 3]).is_err());
    }

    #[test]
    fn rep_counts() {
        let sp = spec("sp-o:l=2,s=2");
        assert_eq!(stratum_rep_count(&sp, 1, 2).unwrap(), 5);
        assert_eq!(stratum_rep_count(&sp, 2, 2).unwrap(), 6);
        assert_eq!(stratum_rep_count(&sp, 2, 0).unwrap(), 1);
        assert_eq!(stratum_rep_count(&sp, 0, 0).unwrap(), 1);
        assert_eq!(stratum_rep_count(&sp, 0, 3).unwrap(), 0);

        assert_eq!(kernel_rep_count(&sp, 2, 2).unwrap(), 1);
        assert_eq!(kernel_rep_count(&sp, 1, 0).unwrap(), 0);
        assert_eq!(kernel_rep_count(&sp, 1, 2).unwrap(), 5);
    }

    #[test]
    fn hardcoded_weights_match_the_torus_action() {
        // provenance check: the fundamental highest-weight vector of each
        // stratum is a leading principal minor or Pfaffian, and the diagonal
        // centralizer generators must scale it by exactly the hard-coded
        // weight entries
        use crate::dual_pairs::KGenerator;
        use crate::orbit_rings::{generic_minor, k_action_on_coords, principal_pfaffian};
        use crate::scalar::Scalar;

        let e_jj = |d: usize, j: usize| {
            let mut m = vec![vec![Scalar::zero(); d]; d];
            m[j][j] = Scalar::one();
            m
        };
        for t in ["sp-o:l=3,s=3", "u-pq:p=3,q=2,s=2", "ostar-sp:n=4,s=2"] {
            let sp: PairSpec = t.parse().unwrap();
            for i in 1..=sp.real_rank() {
                let mut exps = vec![0u32; i];
                exps[i - 1] = 1;
                let weight = delta_weight(&sp, &DeltaMonomial(exps)).unwrap();
                let leading: Vec<usize> = (0..i).collect();
                let (delta, torus): (_, Vec<(KGenerator, u64)>) = match (&sp, &weight) {
                    (PairSpec::SpO { l, .. }, HWeight::Single(lam)) => (
                        generic_minor(&sp, &leading, &leading),
                        (0..*l)
                            .map(|j| (KGenerator::Single(e_jj(*l, j)), lam[j]))
                            .collect(),
                    ),
                    (PairSpec::OstarSp { n, .. }, HWeight::Single(lam)) => (
                        principal_pfaffian(&sp, &(0..2 * i).collect::<Vec<_>>()),
                        (0..*n)
                            .map(|j| (KGenerator::Single(e_jj(*n, j)), lam[j]))
                            .collect(),
                    ),
                    (PairSpec::Upq { p, q, .. }, HWeight::Pair(lam_p, lam_q)) => {
                        let zero = |d: usize| vec![vec![Scalar::zero(); d]; d];
                        let mut gens = Vec::new();
                        for j in 0..*p {
                            gens.push((KGenerator::Pair(e_jj(*p, j), zero(*q)), lam_p[j]));
                        }
                        for j in 0..*q {
                            gens.push((KGenerator::Pair(zero(*p), e_jj(*q, j)), lam_q[j]));
                        }
                        (generic_minor(&sp, &leading, &leading), gens)
                    }
                    _ => unreachable!(),
                };
                for (x, expected) in torus {
                    let action = k_action_on_coords(&sp, &x).unwrap();
                    let image = action.apply(&delta);
                    assert_eq!(
                        image,
                        delta.scale(&Scalar::from_int(expected as i64)),
                        "{t}, generator {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn partition_identity() {
        // counting all monomials minus those missing the top generator
        for t in ["sp-o:l=3,s=3", "u-pq:p=2,q=2,s=2", "ostar-sp:n=4,s=2"] {
            let sp = spec(t);
            for s_prime in 1..=sp.real_rank() {
                for k in 0..=4u32 {
                    let full = stratum_rep_count(&sp, s_prime, k).unwrap();
                    let below = stratum_rep_count(&sp, s_prime - 1, k).unwrap();
                    let kernel = kernel_rep_count(&sp, s_prime, k).unwrap();
                    assert_eq!(full - below, kernel, "{t} s'={s_prime} k={k}");
                }
            }
        }
    }
}
