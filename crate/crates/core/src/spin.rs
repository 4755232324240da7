//! Spin configurations and the elementary transition maps.
//!
//! A configuration of `n` spins is driven up by `U`, which flips the
//! lowest-indexed `-1` spin, and driven down by `D`, which flips the first
//! `+1` spin met when the sites are scanned in the order `rho_1, rho_2, ...`.
//! `U` fixes `omega` (all `+1`) and `D` fixes `alpha` (all `-1`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    Down,
    Up,
}

impl Spin {
    pub fn flipped(self) -> Spin {
        match self {
            Spin::Down => Spin::Up,
            Spin::Up => Spin::Down,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Spin::Down => -1,
            Spin::Up => 1,
        }
    }

    fn sign(self) -> char {
        match self {
            Spin::Down => '-',
            Spin::Up => '+',
        }
    }
}

/// A 1-based spin site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinIndex(usize);

impl SpinIndex {
    pub fn new(i: usize) -> Option<SpinIndex> {
        (i >= 1).then_some(SpinIndex(i))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for SpinIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A point of `{-1, +1}^n`.
///
/// Ordering is lexicographic on the spins read left to right with
/// `-1 < +1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinConfig {
    spins: Box<[Spin]>,
}

impl SpinConfig {
    pub fn from_spins(spins: Vec<Spin>) -> SpinConfig {
        SpinConfig {
            spins: spins.into_boxed_slice(),
        }
    }

    /// Builds a configuration from `-1`/`+1` values.
    pub fn from_values(values: &[i8]) -> Result<SpinConfig> {
        values
            .iter()
            .map(|&v| match v {
                -1 => Ok(Spin::Down),
                1 => Ok(Spin::Up),
                other => Err(Error::Parse(format!("spin value {other} is not -1 or +1"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SpinConfig::from_spins)
    }

    pub fn alpha(n: usize) -> SpinConfig {
        SpinConfig::from_spins(vec![Spin::Down; n])
    }

    pub fn omega(n: usize) -> SpinConfig {
        SpinConfig::from_spins(vec![Spin::Up; n])
    }

    pub fn len(&self) -> usize {
        self.spins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spins.is_empty()
    }

    /// Spin at the 1-based site `i`.
    pub fn spin(&self, i: usize) -> Spin {
        self.spins[i - 1]
    }

    pub fn spins(&self) -> &[Spin] {
        &self.spins
    }

    pub fn values(&self) -> Vec<i8> {
        self.spins.iter().map(|s| s.value()).collect()
    }

    pub fn is_alpha(&self) -> bool {
        self.spins.iter().all(|&s| s == Spin::Down)
    }

    pub fn is_omega(&self) -> bool {
        self.spins.iter().all(|&s| s == Spin::Up)
    }

    pub fn up_count(&self) -> usize {
        self.spins.iter().filter(|&&s| s == Spin::Up).count()
    }

    /// The configuration with site `i` flipped.
    pub fn flip(&self, i: usize) -> SpinConfig {
        let mut spins = self.spins.clone();
        spins[i - 1] = spins[i - 1].flipped();
        SpinConfig { spins }
    }

    pub fn with_spin(&self, i: usize, spin: Spin) -> SpinConfig {
        let mut spins = self.spins.clone();
        spins[i - 1] = spin;
        SpinConfig { spins }
    }

    /// Drops the last spin.
    pub fn truncate_last(&self) -> SpinConfig {
        SpinConfig::from_spins(self.spins[..self.spins.len() - 1].to_vec())
    }

    /// Sign-string form, e.g. `"+-+"` for `(1, -1, 1)`.
    pub fn sign_string(&self) -> String {
        self.spins.iter().map(|s| s.sign()).collect()
    }

    pub fn parse_signs(text: &str, n: usize) -> Result<SpinConfig> {
        let spins = text
            .chars()
            .map(|c| match c {
                '+' => Ok(Spin::Up),
                '-' => Ok(Spin::Down),
                other => Err(Error::IllegalCharacter(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        if spins.len() != n {
            return Err(Error::WrongLength {
                expected: n,
                got: spins.len(),
            });
        }
        Ok(SpinConfig::from_spins(spins))
    }

    /// Canonical vertex order: number of `+1` spins, then the spin sequence.
    pub fn canonical_cmp(&self, other: &SpinConfig) -> std::cmp::Ordering {
        self.up_count()
            .cmp(&other.up_count())
            .then_with(|| self.cmp(other))
    }
}

impl fmt::Display for SpinConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sign_string())
    }
}

impl FromStr for SpinConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpinConfig> {
        SpinConfig::parse_signs(s, s.chars().count())
    }
}

fn check_dims(sigma: &SpinConfig, rho: &Permutation) -> Result<()> {
    if sigma.len() != rho.len() {
        return Err(Error::DimensionMismatch {
            config: sigma.len(),
            perm: rho.len(),
        });
    }
    Ok(())
}

/// Smallest site holding `-1`; `None` exactly for `omega`.
pub fn i_plus(sigma: &SpinConfig) -> Option<SpinIndex> {
    sigma
        .spins()
        .iter()
        .position(|&s| s == Spin::Down)
        .map(|p| SpinIndex(p + 1))
}

/// First site in scan order `rho_1, rho_2, ...` holding `+1`; `None`
/// exactly for `alpha`.
pub fn i_minus(sigma: &SpinConfig, rho: &Permutation) -> Result<Option<SpinIndex>> {
    check_dims(sigma, rho)?;
    Ok(rho
        .values()
        .iter()
        .find(|&&site| sigma.spin(site) == Spin::Up)
        .map(|&site| SpinIndex(site)))
}

/// One `U` step. Returns the new state and the flipped site, or `None` at
/// the fixed point `omega`.
pub fn step_up(sigma: &SpinConfig) -> Option<(SpinConfig, SpinIndex)> {
    i_plus(sigma).map(|i| (sigma.flip(i.get()), i))
}

/// One `D` step. Returns the new state and the flipped site, or `None` at
/// the fixed point `alpha`.
pub fn step_down(sigma: &SpinConfig, rho: &Permutation) -> Result<Option<(SpinConfig, SpinIndex)>> {
    Ok(i_minus(sigma, rho)?.map(|i| (sigma.flip(i.get()), i)))
}

pub fn apply_u(sigma: &SpinConfig, rho: &Permutation) -> Result<SpinConfig> {
    check_dims(sigma, rho)?;
    Ok(step_up(sigma).map_or_else(|| sigma.clone(), |(next, _)| next))
}

pub fn apply_d(sigma: &SpinConfig, rho: &Permutation) -> Result<SpinConfig> {
    Ok(step_down(sigma, rho)?.map_or_else(|| sigma.clone(), |(next, _)| next))
}

/// `U^times sigma`.
pub fn apply_u_n(sigma: &SpinConfig, rho: &Permutation, times: usize) -> Result<SpinConfig> {
    (0..times).try_fold(sigma.clone(), |s, _| apply_u(&s, rho))
}

/// `D^times sigma`.
pub fn apply_d_n(sigma: &SpinConfig, rho: &Permutation, times: usize) -> Result<SpinConfig> {
    (0..times).try_fold(sigma.clone(), |s, _| apply_d(&s, rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::make_permutation;

    fn cfg(v: &[i8]) -> SpinConfig {
        SpinConfig::from_values(v).unwrap()
    }

    fn rho231() -> Permutation {
        make_permutation(&[2, 3, 1]).unwrap()
    }

    #[test]
    fn i_plus_examples() {
        assert_eq!(i_plus(&SpinConfig::alpha(3)).map(SpinIndex::get), Some(1));
        assert_eq!(i_plus(&SpinConfig::omega(3)), None);
        assert_eq!(i_plus(&cfg(&[1, -1, 1])).map(SpinIndex::get), Some(2));
    }

    #[test]
    fn i_minus_examples() {
        let rho = rho231();
        assert_eq!(i_minus(&SpinConfig::alpha(3), &rho).unwrap(), None);
        assert_eq!(
            i_minus(&cfg(&[1, 1, -1]), &rho)
                .unwrap()
                .map(SpinIndex::get),
            Some(2)
        );
        assert_eq!(
            i_minus(&cfg(&[1, -1, 1]), &rho)
                .unwrap()
                .map(SpinIndex::get),
            Some(3)
        );
        assert!(matches!(
            i_minus(&cfg(&[1, 1]), &rho),
            Err(Error::DimensionMismatch { config: 2, perm: 3 })
        ));
    }

    #[test]
    fn apply_u_examples() {
        let rho = rho231();
        assert_eq!(
            apply_u(&SpinConfig::alpha(3), &rho).unwrap(),
            cfg(&[1, -1, -1])
        );
        assert_eq!(
            apply_u(&SpinConfig::omega(3), &rho).unwrap(),
            SpinConfig::omega(3)
        );
        assert_eq!(
            apply_u(&cfg(&[1, -1, 1]), &rho).unwrap(),
            SpinConfig::omega(3)
        );
        assert!(apply_u(&cfg(&[1]), &rho).is_err());
    }

    #[test]
    fn apply_d_examples() {
        let rho = rho231();
        assert_eq!(
            apply_d(&SpinConfig::alpha(3), &rho).unwrap(),
            SpinConfig::alpha(3)
        );
        assert_eq!(
            apply_d(&SpinConfig::omega(3), &rho).unwrap(),
            cfg(&[1, -1, 1])
        );
        assert_eq!(apply_d(&cfg(&[1, 1, -1]), &rho).unwrap(), cfg(&[1, -1, -1]));
    }

    #[test]
    fn sign_strings() {
        assert_eq!(cfg(&[1, -1, 1]).sign_string(), "+-+");
        assert_eq!(
            SpinConfig::parse_signs("---", 3).unwrap(),
            SpinConfig::alpha(3)
        );
        assert_eq!(
            SpinConfig::parse_signs("+0-", 3).unwrap_err().to_string(),
            "illegal character '0'"
        );
        assert_eq!(
            SpinConfig::parse_signs("+-", 3).unwrap_err(),
            Error::WrongLength {
                expected: 3,
                got: 2
            }
        );
    }

    #[test]
    fn ordering_puts_down_before_up() {
        assert!(cfg(&[-1, 1]) < cfg(&[1, -1]));
        assert_eq!(
            cfg(&[1, -1, -1]).canonical_cmp(&cfg(&[-1, 1, 1])),
            std::cmp::Ordering::Less
        );
    }
}
