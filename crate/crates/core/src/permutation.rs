use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
    // positions[v - 1] is the 1-based position of value v
    positions: Vec<usize>,
}

impl Permutation {
    /// Validates that `values` is a bijection of `{1, ..., n}`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut positions = vec![0; n];
        for (pos, &v) in values.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if positions[v - 1] != 0 {
                return Err(Error::DuplicateValue(v));
            }
            positions[v - 1] = pos + 1;
        }
        Ok(Permutation { values, positions })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub fn reversal(n: usize) -> Result<Self> {
        Self::new((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `rho_i` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The 1-based position at which `value` occurs.
    pub fn position_of(&self, value: usize) -> usize {
        self.positions[value - 1]
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            values: self.positions.clone(),
            positions: self.values.clone(),
        }
    }

    /// The entries `<= m`, kept in their relative order and viewed as a
    /// permutation of `{1, ..., m}`.
    pub fn restrict_to_values(&self, m: usize) -> Result<Permutation> {
        Permutation::new(self.values.iter().copied().filter(|&v| v <= m).collect())
    }

    /// The permutation with the largest value `n` removed.
    pub fn without_max(&self) -> Result<Permutation> {
        self.restrict_to_values(self.len() - 1)
    }

    /// The prefix `(rho_1, ..., rho_{k-1})` where `rho_k = n`, relabelled
    /// order-preservingly onto `{1, ..., k-1}`.
    pub fn prefix_before_max(&self) -> Result<Permutation> {
        let k = self.position_of(self.len());
        let prefix = &self.values[..k - 1];
        let mut sorted = prefix.to_vec();
        sorted.sort_unstable();
        Permutation::new(
            prefix
                .iter()
                .map(|v| sorted.binary_search(v).unwrap() + 1)
                .collect(),
        )
    }

    /// All permutations of `{1, ..., n}` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: if n == 0 {
                None
            } else {
                Some((1..=n).collect())
            },
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub fn make_permutation(values: &[usize]) -> Result<Permutation> {
    Permutation::new(values.to_vec())
}

pub fn invert(rho: &Permutation) -> Permutation {
    rho.inverse()
}

/// Lexicographic enumeration of `S_n`.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut a = current.clone();
        if next_permutation(&mut a) {
            self.next = Some(a);
        }
        Some(Permutation::new(current).expect("enumerated permutations are valid"))
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
