//! Brute-force and classical references for the counting and LIS results.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::bijection::IncreasingSubsequence;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub const DEFAULT_ENUMERATION_BUDGET: usize = 1 << 20;
pub const BRUTEFORCE_LIS_MAX_N: usize = 12;

/// All increasing subsequences of one permutation, `()` included.
pub type SubsequenceSet = BTreeSet<IncreasingSubsequence>;

/// Enumerates every increasing subsequence by positional backtracking.
pub fn enumerate_increasing(rho: &Permutation, budget: usize) -> Result<SubsequenceSet> {
    let mut out = BTreeSet::new();
    let mut stack = Vec::new();
    out.insert(IncreasingSubsequence::empty());
    extend(rho, 0, &mut stack, &mut out, budget)?;
    Ok(out)
}

fn extend(
    rho: &Permutation,
    from: usize,
    stack: &mut Vec<usize>,
    out: &mut SubsequenceSet,
    budget: usize,
) -> Result<()> {
    let values = rho.values();
    for (pos, &value) in values.iter().enumerate().skip(from) {
        if stack.last().is_some_and(|&last| last >= value) {
            continue;
        }
        if out.len() >= budget {
            return Err(Error::BudgetExceeded(budget));
        }
        stack.push(value);
        out.insert(IncreasingSubsequence::new(rho, stack.clone())?);
        extend(rho, pos + 1, stack, out, budget)?;
        stack.pop();
    }
    Ok(())
}

/// Number of increasing subsequences, `()` included:
/// `1 + sum_i f(i)` with `f(i) = 1 + sum_{j < i, rho_j < rho_i} f(j)`.
pub fn count_increasing(rho: &Permutation) -> BigUint {
    let values = rho.values();
    let mut ending_at: Vec<BigUint> = Vec::with_capacity(values.len());
    for (i, &v) in values.iter().enumerate() {
        let mut f = BigUint::from(1u32);
        for j in 0..i {
            if values[j] < v {
                f += &ending_at[j];
            }
        }
        ending_at.push(f);
    }
    ending_at.iter().fold(BigUint::from(1u32), |acc, f| acc + f)
}

/// Longest increasing subsequence length by patience sorting.
pub fn lis_patience(rho: &Permutation) -> usize {
    let mut tops: Vec<usize> = Vec::new();
    for &v in rho.values() {
        match tops.binary_search(&v) {
            Ok(_) => unreachable!("permutation values are distinct"),
            Err(pile) if pile == tops.len() => tops.push(v),
            Err(pile) => tops[pile] = v,
        }
    }
    tops.len()
}

/// Longest increasing subsequence length by checking all `2^n` subsets.
pub fn lis_bruteforce(rho: &Permutation) -> Result<usize> {
    let n = rho.len();
    if n > BRUTEFORCE_LIS_MAX_N {
        return Err(Error::SizeLimit {
            n,
            limit: BRUTEFORCE_LIS_MAX_N,
        });
    }
    let values = rho.values();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let len = mask.count_ones() as usize;
        if len <= best {
            continue;
        }
        let picked: Vec<usize> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| values[i])
            .collect();
        if picked.windows(2).all(|w| w[0] < w[1]) {
            best = len;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::make_permutation;

    fn perm(v: &[usize]) -> Permutation {
        make_permutation(v).unwrap()
    }

    fn values(set: &SubsequenceSet) -> Vec<Vec<usize>> {
        set.iter().map(|s| s.values().to_vec()).collect()
    }

    #[test]
    fn enumeration_examples() {
        let set = enumerate_increasing(&perm(&[2, 3, 1]), DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(
            values(&set),
            vec![vec![], vec![1], vec![2], vec![2, 3], vec![3]]
        );
        let set = enumerate_increasing(&perm(&[1]), DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(values(&set), vec![vec![], vec![1]]);
        let set = enumerate_increasing(&perm(&[2, 1]), DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(values(&set), vec![vec![], vec![1], vec![2]]);
    }

    #[test]
    fn enumeration_budget() {
        let id = Permutation::identity(10).unwrap();
        assert_eq!(enumerate_increasing(&id, 1024).unwrap().len(), 1024);
        assert_eq!(
            enumerate_increasing(&id, 1000).unwrap_err(),
            Error::BudgetExceeded(1000)
        );
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_increasing(&perm(&[2, 3, 1])), BigUint::from(5u32));
        assert_eq!(
            count_increasing(&Permutation::identity(10).unwrap()),
            BigUint::from(1024u32)
        );
        assert_eq!(
            count_increasing(&Permutation::identity(64).unwrap()),
            BigUint::from(1u8) << 64
        );
        for n in 1..=9 {
            assert_eq!(
                count_increasing(&Permutation::reversal(n).unwrap()),
                BigUint::from(n + 1)
            );
        }
    }

    #[test]
    fn lis_examples() {
        assert_eq!(lis_patience(&perm(&[2, 3, 1])), 2);
        assert_eq!(lis_patience(&Permutation::identity(9).unwrap()), 9);
        assert_eq!(lis_patience(&Permutation::reversal(9).unwrap()), 1);
        assert_eq!(lis_bruteforce(&perm(&[2, 3, 1])).unwrap(), 2);
        assert_eq!(lis_bruteforce(&perm(&[1])).unwrap(), 1);
        assert_eq!(lis_bruteforce(&perm(&[2, 4, 3, 5, 1])).unwrap(), 3);
        assert!(matches!(
            lis_bruteforce(&Permutation::identity(13).unwrap()),
            Err(Error::SizeLimit { n: 13, .. })
        ));
    }
}
