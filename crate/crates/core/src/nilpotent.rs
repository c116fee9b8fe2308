//! Nilpotent orbits of gl_n as partitions: Richardson orbits, orbit
//! dimensions, and the determinantal rank conditions generating the
//! defining ideal of an orbit closure.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::CoreError;
use crate::partitions::Partition;

/// One rank condition: all `(r + 1)`-minors of `X^k` vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCondition {
    pub power: u32,
    pub max_rank: u32,
    /// Number of `(r+1) x (r+1)` minors of an n x n matrix.
    pub generator_count: u128,
    /// True when the bound is already implied by the earlier conditions
    /// together with nilpotency, so it cuts nothing out of N.
    pub vacuous_on_nilpotent_cone: bool,
}

/// The standard determinantal generating set for the closure of the orbit
/// with Jordan type `λ`.
#[derive(Clone, Debug)]
pub struct RankConditions {
    pub n: u32,
    pub jordan_type: Partition,
    pub conditions: Vec<RankCondition>,
}

impl RankConditions {
    pub fn nontrivial(&self) -> impl Iterator<Item = &RankCondition> {
        self.conditions.iter().filter(|c| !c.vacuous_on_nilpotent_cone)
    }
}

/// `rank(X^k) <= n - (λ'_1 + ... + λ'_k)` for X of Jordan type λ.
pub fn rank_bound(lambda: &Partition, k: u32) -> u32 {
    let n = lambda.size();
    let conj = lambda.transpose();
    let head: u32 = conj.parts().iter().take(k as usize).sum();
    n - head
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rank conditions for `1 <= k <= λ_1`, with redundancy flags.
///
/// The condition at k is redundant on the nilpotent cone exactly when the
/// bound is no stronger than what the earlier bounds force for any nilpotent
/// matrix: `r_k >= min_{0 <= j < k}(r_j + j) - k` (with `r_0 = n`).
pub fn rank_conditions(lambda: &Partition) -> RankConditions {
    let n = lambda.size();
    let lam1 = lambda.parts().first().copied().unwrap_or(0);
    let mut conditions = Vec::new();
    let mut best_prev = i64::from(n); // min over j < k of r_j + j
    for k in 1..=lam1 {
        let r = rank_bound(lambda, k);
        let implied_cap = best_prev - i64::from(k);
        let vacuous = i64::from(r) >= implied_cap;
        conditions.push(RankCondition {
            power: k,
            max_rank: r,
            generator_count: binomial(u128::from(n), u128::from(r) + 1).pow(2),
            vacuous_on_nilpotent_cone: vacuous,
        });
        best_prev = best_prev.min(i64::from(r) + i64::from(k));
    }
    RankConditions {
        n,
        jordan_type: lambda.clone(),
        conditions,
    }
}

/// The Levi block composition of `I ⊆ {s_1, ..., s_{n-1}}` (maximal runs of
/// consecutive indices give blocks, isolated positions give 1's).
pub fn levi_composition(subset: &[usize], n: usize) -> Result<Vec<u32>, CoreError> {
    let mut present = vec![false; n.saturating_sub(1)];
    for &s in subset {
        if s == 0 || s >= n {
            return Err(CoreError::Invalid(format!(
                "simple reflection index {s} out of range 1..={}",
                n - 1
            )));
        }
        present[s - 1] = true;
    }
    let mut blocks = Vec::new();
    let mut current = 1u32;
    for &p in &present {
        if p {
            current += 1;
        } else {
            blocks.push(current);
            current = 1;
        }
    }
    blocks.push(current);
    debug_assert_eq!(blocks.iter().sum::<u32>() as usize, n);
    Ok(blocks)
}

/// The Richardson orbit attached to `I`: transpose of the sorted Levi block
/// composition.  The dimension identity `2 dim n_I = dim C_I` is asserted.
pub fn richardson_orbit(subset: &[usize], n: usize) -> Result<Partition, CoreError> {
    let blocks = levi_composition(subset, n)?;
    let sorted = Partition::from_unsorted(blocks.clone());
    let orbit = sorted.transpose();
    let dim_n_i = (n * (n - 1)) as i64 / 2
        - blocks
            .iter()
            .map(|&b| (b as i64) * (b as i64 - 1) / 2)
            .sum::<i64>();
    debug_assert_eq!(
        2 * dim_n_i,
        orbit_dim(&orbit) as i64,
        "Richardson dimension identity"
    );
    Ok(orbit)
}

/// `dim C_λ = n^2 - Σ (λ'_i)^2`.
pub fn orbit_dim(lambda: &Partition) -> u64 {
    let n = u64::from(lambda.size());
    let conj = lambda.transpose();
    n * n - conj.parts().iter().map(|&c| u64::from(c) * u64::from(c)).sum::<u64>()
}

/// Exact rank by fraction-free (Bareiss) elimination: the rational input is
/// scaled row-wise to integers first.
pub fn rank_exact(matrix: &[Vec<BigRational>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let term = &a[i][k] * &b[k][j];
                out[i][j] = &out[i][j] + &term;
            }
        }
    }
    out
}

/// Point test for the reduced orbit closure: `X^n = 0` and
/// `rank(X^k) <= r_k` for all k.
pub fn contains_point(lambda: &Partition, matrix: &[Vec<BigRational>]) -> Result<bool, CoreError> {
    let n = lambda.size() as usize;
    if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
        return Err(CoreError::NotSquare {
            rows: matrix.len(),
            cols: matrix.first().map_or(0, Vec::len),
        });
    }
    let conds = rank_conditions(lambda);
    let mut power = matrix.to_vec();
    let mut k = 1u32;
    for cond in &conds.conditions {
        while k < cond.power {
            power = mat_mul(&power, matrix);
            k += 1;
        }
        if rank_exact(&power) > cond.max_rank as usize {
            return Ok(false);
        }
    }
    // nilpotency: X^n = 0
    while k < n as u32 {
        power = mat_mul(&power, matrix);
        k += 1;
    }
    if n > 0 && !power.iter().all(|row| row.iter().all(Zero::is_zero)) {
        return Ok(false);
    }
    Ok(true)
}

/// Jordan block matrix of type `λ` over the rationals.
pub fn jordan_matrix(lambda: &Partition) -> Vec<Vec<BigRational>> {
    let n = lambda.size() as usize;
    let mut m = vec![vec![BigRational::zero(); n]; n];
    let mut offset = 0usize;
    for &p in lambda.parts() {
        for i in 0..(p as usize - 1) {
            m[offset + i][offset + i + 1] = BigRational::one();
        }
        offset += p as usize;
    }
    m
}

/// All partitions of n, in a deterministic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        let top = max.min(n);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn richardson_examples() {
        assert_eq!(richardson_orbit(&[1, 2], 3).unwrap(), part(&[1, 1, 1]));
        assert_eq!(richardson_orbit(&[], 3).unwrap(), part(&[3]));
        assert_eq!(richardson_orbit(&[1], 3).unwrap(), part(&[2, 1]));
        assert!(richardson_orbit(&[3], 3).is_err());
    }

    #[test]
    fn richardson_dimension_identity_up_to_n6() {
        for n in 2..=6usize {
            let positions: Vec<usize> = (1..n).collect();
            for mask in 0..(1u32 << positions.len()) {
                let subset: Vec<usize> = positions
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &s)| s)
                    .collect();
                let blocks = levi_composition(&subset, n).unwrap();
                let orbit = richardson_orbit(&subset, n).unwrap();
                let dim_n_i = (n * (n - 1)) as i64 / 2
                    - blocks.iter().map(|&b| (b as i64) * (b as i64 - 1) / 2).sum::<i64>();
                assert_eq!(2 * dim_n_i, orbit_dim(&orbit) as i64);
            }
        }
    }

    #[test]
    fn orbit_dims() {
        assert_eq!(orbit_dim(&part(&[3])), 6);
        assert_eq!(orbit_dim(&part(&[1, 1, 1])), 0);
        assert_eq!(orbit_dim(&part(&[2, 1])), 4);
        for n in 1..=6u64 {
            assert_eq!(orbit_dim(&Partition::row(n as u32)), n * n - n);
        }
    }

    #[test]
    fn rank_condition_examples() {
        // n=2, (1,1): one essential condition, all entries vanish
        let rc = rank_conditions(&part(&[1, 1]));
        let essential: Vec<_> = rc.nontrivial().collect();
        assert_eq!(essential.len(), 1);
        assert_eq!(essential[0].power, 1);
        assert_eq!(essential[0].max_rank, 0);
        assert_eq!(essential[0].generator_count, 4);

        // n=3, (2,1): rank X <= 1 essential; k=2 condition implied
        let rc = rank_conditions(&part(&[2, 1]));
        assert_eq!(
            rc.conditions,
            vec![
                RankCondition {
                    power: 1,
                    max_rank: 1,
                    generator_count: 9,
                    vacuous_on_nilpotent_cone: false
                },
                RankCondition {
                    power: 2,
                    max_rank: 0,
                    generator_count: 9,
                    vacuous_on_nilpotent_cone: true
                }
            ]
        );

        // n=2, (2): the full cone, no essential conditions
        let rc = rank_conditions(&part(&[2]));
        assert_eq!(rc.nontrivial().count(), 0);
    }

    #[test]
    fn jordan_rank_arithmetic() {
        // rank(J_λ^k) = n - sum of first k conjugate parts
        for n in 1..=5u32 {
            for lam in partitions_of(n) {
                let j = jordan_matrix(&lam);
                let mut power = j.clone();
                for k in 1..=lam.parts().first().copied().unwrap_or(0) {
                    assert_eq!(rank_exact(&power) as u32, rank_bound(&lam, k), "{lam} k={k}");
                    power = mat_mul(&power, &j);
                }
            }
        }
    }

    #[test]
    fn closure_order_matches_dominance() {
        for n in 1..=5u32 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let inside = contains_point(&lam, &jordan_matrix(&mu)).unwrap();
                    assert_eq!(
                        inside,
                        mu.dominance_leq(&lam).unwrap(),
                        "J_{mu} in closure({lam})?"
                    );
                }
            }
        }
    }

    #[test]
    fn contains_point_examples() {
        let zero = vec![vec![BigRational::zero(); 3]; 3];
        for lam in partitions_of(3) {
            assert!(contains_point(&lam, &zero).unwrap());
        }
        // a rank-1 nilpotent 3x3 matrix lies in closure((2,1))
        let mut m = vec![vec![BigRational::zero(); 3]; 3];
        m[0][2] = BigRational::one();
        assert!(contains_point(&part(&[2, 1]), &m).unwrap());
        assert!(!contains_point(&part(&[1, 1, 1]), &m).unwrap());
        // non-square rejected
        assert!(contains_point(&part(&[2]), &m).is_err());
    }
}
