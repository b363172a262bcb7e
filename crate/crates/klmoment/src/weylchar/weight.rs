//! Highest weights of `SL_{n+1}` and their partitions.

use super::WeylError;
use std::fmt;
use std::str::FromStr;

/// Largest `|λ| = Σλᵢ` accepted by the moment engine.
pub const MAX_WEIGHT_SIZE: u32 = 12;

/// A dominant weight `λ = (λ₁, …, λ_n)` of `SL_{n+1}`, stored without
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HighestWeight {
    lambda: Vec<u32>,
}

impl HighestWeight {
    /// Builds a weight from its coordinates; trailing zeros are dropped.
    pub fn new(lambda: &[u32]) -> Self {
        let mut lambda = lambda.to_vec();
        while lambda.last() == Some(&0) {
            lambda.pop();
        }
        Self { lambda }
    }

    /// The weight `(k, 0, …, 0)` of `Sym^k`.
    pub fn sym(k: u32) -> Self {
        Self::new(&[k])
    }

    /// Coordinates without trailing zeros.
    pub fn coords(&self) -> &[u32] {
        &self.lambda
    }

    /// Coordinates padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.lambda.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// `|λ| = Σλᵢ`.
    pub fn size(&self) -> u32 {
        self.lambda.iter().sum()
    }

    /// The partition `μ(λ) = (λ₁+…+λ_n, λ₂+…+λ_n, …, λ_n)` without zero
    /// parts.
    pub fn mu(&self) -> Vec<usize> {
        let mut parts: Vec<usize> = (0..self.lambda.len())
            .map(|i| self.lambda[i..].iter().map(|&x| x as usize).sum())
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        parts
    }

    /// `|μ(λ)| = Σ i·λᵢ`, the number of boxes of the Young diagram.
    pub fn boxes(&self) -> u32 {
        self.lambda
            .iter()
            .enumerate()
            .map(|(i, &x)| (i as u32 + 1) * x)
            .sum()
    }

    /// Weight `n·|μ(λ)| + 1` of the motive attached to `Kl_{n+1}^λ`.
    pub fn motive_weight(&self, nplus1: u32) -> u32 {
        (nplus1 - 1) * self.boxes() + 1
    }

    /// Checks that `λ` is a weight of `SL_{n+1}` within the size guard.
    pub fn validate(&self, nplus1: u32) -> Result<(), WeylError> {
        if nplus1 < 2 || self.lambda.len() > nplus1 as usize - 1 {
            return Err(WeylError::TooManyRows {
                rows: self.lambda.len() + 1,
                max: nplus1 as usize,
            });
        }
        if self.size() > MAX_WEIGHT_SIZE {
            return Err(WeylError::WeightTooLarge {
                size: self.size(),
                max: MAX_WEIGHT_SIZE,
            });
        }
        Ok(())
    }

    /// Dimension of the irreducible representation, by the hook-content
    /// formula for `s_μ(1, …, 1)` in `n+1` variables.
    pub fn dimension(&self, nplus1: u32) -> u128 {
        let mu = self.mu();
        let conj = conjugate(&mu);
        let (mut num, mut den) = (1u128, 1u128);
        for (i, &row) in mu.iter().enumerate() {
            for (j, &col) in conj.iter().enumerate().take(row) {
                num *= (nplus1 as i64 + j as i64 - i as i64) as u128;
                den *= (row - j + col - i - 1) as u128;
            }
        }
        num / den
    }
}

/// The conjugate (transposed) partition.
pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let len = parts.first().copied().unwrap_or(0);
    (0..len)
        .map(|j| parts.iter().filter(|&&x| x > j).count())
        .collect()
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lambda.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.lambda.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for HighestWeight {
    type Err = WeylError;

    /// Parses comma-separated non-negative integers, for example `2,2`.
    fn from_str(s: &str) -> Result<Self, WeylError> {
        let coords = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| WeylError::BadWeight(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(&coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_and_weights() {
        let w = HighestWeight::new(&[2, 1, 0]);
        assert_eq!(w.coords(), &[2, 1]);
        assert_eq!(w.mu(), vec![3, 1]);
        assert_eq!(w.boxes(), 4);
        assert_eq!(w.motive_weight(3), 9);
        assert_eq!(HighestWeight::new(&[2, 2]).mu(), vec![4, 2]);
        assert_eq!(HighestWeight::sym(4).motive_weight(3), 9);
        assert_eq!(HighestWeight::new(&[0, 0]).mu(), Vec::<usize>::new());
    }

    #[test]
    fn dimensions() {
        assert_eq!(HighestWeight::sym(3).dimension(3), 10);
        assert_eq!(HighestWeight::new(&[1, 1]).dimension(3), 8);
        assert_eq!(HighestWeight::new(&[2, 1]).dimension(3), 15);
        assert_eq!(HighestWeight::new(&[2, 2]).dimension(3), 27);
        assert_eq!(HighestWeight::sym(4).dimension(4), 35);
        assert_eq!(HighestWeight::default().dimension(5), 1);
    }

    #[test]
    fn parse_round_trip() {
        let w: HighestWeight = "2,2".parse().unwrap();
        assert_eq!(w.to_string(), "2,2");
        assert_eq!("4".parse::<HighestWeight>().unwrap(), HighestWeight::sym(4));
        assert!("2,x".parse::<HighestWeight>().is_err());
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
    }
}
