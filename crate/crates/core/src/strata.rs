//! Final types and Young types: the two combinatorial encodings of a
//! symmetric BT1 group scheme, their conversions and numeric invariants.
//!
//! A final type of dimension `g` is a sequence `nu_1..nu_g` with
//! `nu_{i-1} <= nu_i <= nu_{i-1} + 1` (reading `nu_0 = 0`). A Young type is a
//! strictly decreasing partition with parts in `1..=g`. The map between them is
//! `mu_j = #{ i : j <= i - nu_i }`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_g(g: usize) -> Result<()> {
    if g == 0 {
        return Err(Error::InvalidDimension(0));
    }
    Ok(())
}

/// Returns whether `nu` is a valid final type of dimension `g`.
///
/// A length mismatch is reported as an error rather than `false`.
pub fn validate_final_type(g: usize, nu: &[u32]) -> Result<bool> {
    check_g(g)?;
    if nu.len() != g {
        return Err(Error::LengthMismatch {
            expected: g,
            actual: nu.len(),
        });
    }
    let mut prev = 0u32;
    for &v in nu {
        if v < prev || v > prev + 1 {
            return Ok(false);
        }
        prev = v;
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinalType {
    g: usize,
    nu: Vec<u32>,
}

impl FinalType {
    pub fn new(g: usize, nu: Vec<u32>) -> Result<Self> {
        if validate_final_type(g, &nu)? {
            Ok(Self { g, nu })
        } else {
            Err(Error::InvalidFinalType { g, nu })
        }
    }

    /// `[1, 2, ..., g]`, the ordinary type.
    pub fn ordinary(g: usize) -> Result<Self> {
        check_g(g)?;
        Ok(Self {
            g,
            nu: (1..=g as u32).collect(),
        })
    }

    /// `[0, ..., 0]`, the superspecial type.
    pub fn superspecial(g: usize) -> Result<Self> {
        check_g(g)?;
        Ok(Self { g, nu: vec![0; g] })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn nu(&self) -> &[u32] {
        &self.nu
    }

    /// `nu_i` with 1-based `i`; `nu_0 = 0`.
    pub fn at(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.nu[i - 1]
        }
    }

    /// Positions `i` (1-based) where `nu_i = nu_{i-1} + 1`.
    pub fn jumps(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.g).map(move |i| self.at(i) == self.at(i - 1) + 1)
    }

    pub fn to_young(&self) -> YoungType {
        final_to_young(self)
    }

    pub fn p_rank(&self) -> usize {
        p_rank_of_final(self)
    }

    pub fn a_number(&self) -> usize {
        a_number_of_final(self)
    }

    pub fn dim(&self) -> usize {
        stratum_dim(self)
    }
}

impl fmt::Display for FinalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.nu.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungType {
    g: usize,
    mu: Vec<u32>,
}

impl YoungType {
    /// Builds a Young type; `mu` must be strictly decreasing with parts in `1..=g`.
    pub fn new(g: usize, mu: Vec<u32>) -> Result<Self> {
        check_g(g)?;
        let reject = |reason| Error::InvalidYoungType {
            g,
            mu: mu.clone(),
            reason,
        };
        if mu.contains(&0) {
            return Err(reject("parts must be positive"));
        }
        if mu.first().is_some_and(|&m| m as usize > g) {
            return Err(reject("largest part exceeds g"));
        }
        if mu.windows(2).any(|w| w[0] <= w[1]) {
            return Err(reject("parts must be strictly decreasing"));
        }
        Ok(Self { g, mu })
    }

    pub fn empty(g: usize) -> Result<Self> {
        Self::new(g, Vec::new())
    }

    /// `{g, g-1, ..., 1}`, the superspecial type.
    pub fn staircase(g: usize) -> Result<Self> {
        Self::new(g, (1..=g as u32).rev().collect())
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn parts(&self) -> &[u32] {
        &self.mu
    }

    /// `mu_j` with 1-based `j`, zero past the last part.
    pub fn part(&self, j: usize) -> u32 {
        if j == 0 {
            return 0;
        }
        self.mu.get(j - 1).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    pub fn to_final(&self) -> FinalType {
        young_to_final(self)
    }

    pub fn codim(&self) -> usize {
        stratum_codim(self)
    }

    /// Human rendering with `∅` for the empty type.
    pub fn pretty(&self) -> String {
        if self.mu.is_empty() {
            "∅".to_string()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for YoungType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.mu.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// All `2^g` final types in lexicographic order on `nu`.
pub fn enumerate_final_types(g: usize) -> Result<Vec<FinalType>> {
    check_g(g)?;
    if g >= usize::BITS as usize {
        return Err(Error::InvalidDimension(g as i64));
    }
    // Step bits, most significant first: reading the step sequence as a binary
    // number orders the resulting nu lexicographically.
    let mut out = Vec::with_capacity(1 << g);
    for code in 0u64..(1u64 << g) {
        let mut nu = Vec::with_capacity(g);
        let mut acc = 0u32;
        for i in (0..g).rev() {
            acc += ((code >> i) & 1) as u32;
            nu.push(acc);
        }
        out.push(FinalType { g, nu });
    }
    Ok(out)
}

pub fn final_to_young(nu: &FinalType) -> YoungType {
    let g = nu.g;
    let defect: Vec<u32> = (1..=g).map(|i| i as u32 - nu.at(i)).collect();
    let mut mu = Vec::new();
    for j in 1.. {
        let count = defect.iter().filter(|&&d| d >= j).count() as u32;
        if count == 0 {
            break;
        }
        mu.push(count);
    }
    YoungType { g, mu }
}

/// Inverse of [`final_to_young`]. Part `mu_j` means the defect `i - nu_i`
/// first reaches `j` at position `g + 1 - mu_j`.
pub fn young_to_final(mu: &YoungType) -> FinalType {
    let g = mu.g;
    let starts: Vec<usize> = mu.mu.iter().map(|&m| g + 1 - m as usize).collect();
    let nu = (1..=g)
        .map(|i| (i - starts.iter().filter(|&&s| s <= i).count()) as u32)
        .collect();
    FinalType { g, nu }
}

/// `max { i : nu_i = i }`, with 0 for the empty set.
pub fn p_rank_of_final(nu: &FinalType) -> usize {
    (1..=nu.g)
        .filter(|&i| nu.at(i) as usize == i)
        .max()
        .unwrap_or(0)
}

pub fn a_number_of_final(nu: &FinalType) -> usize {
    nu.g - nu.at(nu.g) as usize
}

/// `(f, a) = (g - mu_1, number of parts)`.
pub fn invariants_of_young(mu: &YoungType) -> (usize, usize) {
    (mu.g - mu.part(1) as usize, mu.mu.len())
}

pub fn stratum_dim(nu: &FinalType) -> usize {
    nu.nu.iter().map(|&v| v as usize).sum()
}

pub fn stratum_codim(mu: &YoungType) -> usize {
    mu.mu.iter().map(|&m| m as usize).sum()
}

/// Every numeric invariant of one stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub final_type: FinalType,
    pub young_type: YoungType,
    pub p_rank: usize,
    pub a_number: usize,
    pub dim: usize,
    pub codim: usize,
    pub name: Option<String>,
}

impl StratumRecord {
    pub fn from_final(nu: &FinalType) -> Self {
        let mu = final_to_young(nu);
        Self {
            final_type: nu.clone(),
            p_rank: p_rank_of_final(nu),
            a_number: a_number_of_final(nu),
            dim: stratum_dim(nu),
            codim: stratum_codim(&mu),
            young_type: mu,
            name: None,
        }
    }

    pub fn g(&self) -> usize {
        self.final_type.g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ft(g: usize, nu: &[u32]) -> FinalType {
        FinalType::new(g, nu.to_vec()).unwrap()
    }

    fn yt(g: usize, mu: &[u32]) -> YoungType {
        YoungType::new(g, mu.to_vec()).unwrap()
    }

    #[test]
    fn validator_examples() {
        assert!(validate_final_type(2, &[1, 2]).unwrap());
        assert!(!validate_final_type(2, &[0, 2]).unwrap());
        assert!(validate_final_type(3, &[1, 1, 2]).unwrap());
        assert!(!validate_final_type(1, &[2]).unwrap());
        assert_eq!(
            validate_final_type(3, &[1, 2]),
            Err(Error::LengthMismatch {
                expected: 3,
                actual: 2
            })
        );
        assert!(validate_final_type(0, &[]).is_err());
    }

    #[test]
    fn enumeration_order_and_counts() {
        let one = enumerate_final_types(1).unwrap();
        assert_eq!(one, vec![ft(1, &[0]), ft(1, &[1])]);
        let two: Vec<Vec<u32>> = enumerate_final_types(2)
            .unwrap()
            .into_iter()
            .map(|t| t.nu)
            .collect();
        assert_eq!(two, vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
        let four = enumerate_final_types(4).unwrap();
        assert_eq!(four.len(), 16);
        assert!(four.windows(2).all(|w| w[0].nu < w[1].nu));
        assert_eq!(four[0], FinalType::superspecial(4).unwrap());
        assert_eq!(four[15], FinalType::ordinary(4).unwrap());
        assert!(enumerate_final_types(0).is_err());
    }

    #[test]
    fn conversions() {
        assert_eq!(final_to_young(&ft(3, &[1, 1, 2])), yt(3, &[2]));
        assert_eq!(final_to_young(&ft(4, &[0, 0, 1, 1])), yt(4, &[4, 3, 1]));
        for g in 1..=6 {
            assert!(final_to_young(&FinalType::ordinary(g).unwrap()).is_empty());
            assert_eq!(
                young_to_final(&YoungType::empty(g).unwrap()),
                FinalType::ordinary(g).unwrap()
            );
        }
        assert_eq!(young_to_final(&yt(3, &[2])), ft(3, &[1, 1, 2]));
        assert_eq!(young_to_final(&yt(4, &[4, 3, 1])), ft(4, &[0, 0, 1, 1]));
    }

    #[test]
    fn young_rejections() {
        assert!(YoungType::new(3, vec![2, 2]).is_err());
        assert!(YoungType::new(3, vec![1, 2]).is_err());
        assert!(YoungType::new(3, vec![4]).is_err());
        assert!(YoungType::new(3, vec![2, 0]).is_err());
    }

    #[test]
    fn invariants() {
        assert_eq!(p_rank_of_final(&ft(3, &[1, 2, 2])), 2);
        assert_eq!(p_rank_of_final(&ft(2, &[0, 1])), 0);
        assert_eq!(p_rank_of_final(&FinalType::ordinary(5).unwrap()), 5);
        assert_eq!(a_number_of_final(&ft(3, &[0, 1, 1])), 2);
        assert_eq!(a_number_of_final(&ft(4, &[0, 0, 0, 0])), 4);
        assert_eq!(a_number_of_final(&FinalType::ordinary(5).unwrap()), 0);
        assert_eq!(invariants_of_young(&yt(3, &[3, 1])), (0, 2));
        assert_eq!(invariants_of_young(&yt(2, &[])), (2, 0));
        assert_eq!(invariants_of_young(&yt(4, &[4, 3, 2, 1])), (0, 4));
    }

    #[test]
    fn dimensions() {
        assert_eq!(stratum_dim(&ft(3, &[1, 1, 2])), 4);
        assert_eq!(stratum_codim(&yt(3, &[2])), 2);
        assert_eq!(stratum_dim(&ft(4, &[1, 2, 2, 3])), 8);
        assert_eq!(stratum_codim(&yt(4, &[2])), 2);
        for g in 1..=6 {
            assert_eq!(stratum_dim(&FinalType::superspecial(g).unwrap()), 0);
            assert_eq!(
                stratum_codim(&YoungType::staircase(g).unwrap()),
                g * (g + 1) / 2
            );
        }
    }

    #[test]
    fn exhaustive_properties() {
        for g in 1..=10 {
            let all = enumerate_final_types(g).unwrap();
            assert_eq!(all.len(), 1 << g);
            let mut images = std::collections::BTreeSet::new();
            for nu in &all {
                let mu = final_to_young(nu);
                // image is a valid strict partition
                YoungType::new(g, mu.mu.clone()).unwrap();
                assert_eq!(&young_to_final(&mu), nu);
                assert_eq!(stratum_dim(nu) + stratum_codim(&mu), g * (g + 1) / 2);
                let (f, a) = invariants_of_young(&mu);
                assert_eq!((p_rank_of_final(nu), a_number_of_final(nu)), (f, a));
                assert!(f <= g && a <= g - f);
                images.insert(mu.mu);
            }
            assert_eq!(images.len(), 1 << g);
        }
    }
}
