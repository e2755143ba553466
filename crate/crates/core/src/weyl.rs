//! The Weyl group `W_g` of `Sp_{2g}`, realized as the permutations `w` of
//! `{1..2g}` with `w(i) + w(2g+1-i) = 2g+1`.
//!
//! Words are evaluated leftmost letter first: the word `s1 s2` is the map
//! `x -> s2(s1(x))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::strata::{young_to_final, YoungType};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement {
    g: usize,
    /// One-line notation, `perm[i - 1] = w(i)`.
    perm: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylWord {
    g: usize,
    letters: Vec<usize>,
}

impl WeylElement {
    pub fn identity(g: usize) -> Self {
        Self {
            g,
            perm: (1..=2 * g).collect(),
        }
    }

    /// Validates one-line notation against the bijection and symplectic conditions.
    pub fn from_oneline(g: usize, perm: Vec<usize>) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidDimension(0));
        }
        let n = 2 * g;
        if perm.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: perm.len(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &perm {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidWeylElement {
                    g,
                    reason: format!("{perm:?} is not a permutation of 1..={n}"),
                });
            }
            seen[v] = true;
        }
        for i in 1..=g {
            if perm[i - 1] + perm[n - i] != n + 1 {
                return Err(Error::InvalidWeylElement {
                    g,
                    reason: format!("w({i}) + w({}) != {}", n + 1 - i, n + 1),
                });
            }
        }
        Ok(Self { g, perm })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn oneline(&self) -> &[usize] {
        &self.perm
    }

    /// `w(x)` for `x` in `1..=2g`.
    pub fn apply(&self, x: usize) -> usize {
        self.perm[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// The map `x -> other(self(x))`.
    pub fn then(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.g, other.g);
        WeylElement {
            g: self.g,
            perm: self.perm.iter().map(|&v| other.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0; self.perm.len()];
        for (k, &v) in self.perm.iter().enumerate() {
            perm[v - 1] = k + 1;
        }
        WeylElement { g: self.g, perm }
    }

    /// Whether `self` composed with `s_i` applied first is shorter.
    fn has_descent(&self, i: usize) -> bool {
        self.perm[i - 1] > self.perm[i]
    }

    /// `#{ x <= i : w(x) >= j }` for all `1 <= i, j <= 2g`, row-major.
    fn rank_matrix(&self) -> Vec<u32> {
        let n = self.perm.len();
        let mut r = vec![0u32; n * n];
        for i in 1..=n {
            let v = self.perm[i - 1];
            for j in 1..=n {
                let above = if i > 1 { r[(i - 2) * n + (j - 1)] } else { 0 };
                r[(i - 1) * n + (j - 1)] = above + u32::from(v >= j);
            }
        }
        r
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, v) in self.perm.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

impl WeylWord {
    pub fn new(g: usize, letters: Vec<usize>) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidDimension(0));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i > g) {
            return Err(Error::GeneratorOutOfRange { g, index: bad });
        }
        Ok(Self { g, letters })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses `"s1*s2*s3"`, `"s1s2s3"` or `"1"` (identity).
    pub fn parse(g: usize, text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "1" || t.is_empty() {
            return Self::new(g, Vec::new());
        }
        let mut letters = Vec::new();
        let bytes = t.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            if bytes[pos] == b'*' && !letters.is_empty() {
                pos += 1;
            }
            if pos >= bytes.len() || bytes[pos] != b's' {
                return Err(Error::Syntax {
                    pos,
                    message: "expected generator 's<i>'".into(),
                });
            }
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let index: usize = t[start..pos].parse().map_err(|_| Error::Syntax {
                pos: start,
                message: "expected generator index".into(),
            })?;
            letters.push(index);
        }
        Self::new(g, letters)
    }
}

/// Renders as `s1*s2*s3`, or `1` for the empty word.
impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// `s_i = (i,i+1)(2g-i,2g+1-i)` for `i < g` and `s_g = (g,g+1)`.
pub fn generator(g: usize, i: usize) -> Result<WeylElement> {
    if g == 0 {
        return Err(Error::InvalidDimension(0));
    }
    if i == 0 || i > g {
        return Err(Error::GeneratorOutOfRange { g, index: i });
    }
    let mut w = WeylElement::identity(g);
    w.perm.swap(i - 1, i);
    if i < g {
        w.perm.swap(2 * g - i - 1, 2 * g - i);
    }
    Ok(w)
}

pub fn evaluate_word(word: &WeylWord) -> WeylElement {
    let g = word.g;
    let mut w = WeylElement::identity(g);
    for &i in &word.letters {
        // letters were range-checked on construction
        w = w.then(&generator(g, i).expect("valid letter"));
    }
    w
}

/// The Weyl element of a Young type, read off the associated final type:
/// a jump `nu_i = nu_{i-1} + 1` sends `i` to `g + (jumps so far)`, a stay
/// `nu_i = nu_{i-1}` sends `i` to `(stays so far)`. The second half follows
/// from `w(2g+1-i) = 2g+1-w(i)`.
pub fn from_young(mu: &YoungType) -> WeylElement {
    let nu = young_to_final(mu);
    let g = nu.g();
    let mut perm = vec![0; 2 * g];
    let (mut jumps, mut stays) = (0, 0);
    for (k, jump) in nu.jumps().enumerate() {
        perm[k] = if jump {
            jumps += 1;
            g + jumps
        } else {
            stays += 1;
            stays
        };
    }
    for i in 1..=g {
        perm[2 * g - i] = 2 * g + 1 - perm[i - 1];
    }
    WeylElement { g, perm }
}

/// A reduced word by greedy descent, taking the smallest descent index first.
pub fn reduced_word(w: &WeylElement) -> WeylWord {
    let g = w.g;
    let mut letters = Vec::new();
    let mut cur = w.clone();
    while let Some(i) = (1..=g).find(|&i| cur.has_descent(i)) {
        letters.push(i);
        // cur = (cur with s_i applied first); then w = s_i-first word of cur'
        cur = generator(g, i).expect("valid index").then(&cur);
    }
    WeylWord { g, letters }
}

pub fn length(w: &WeylElement) -> usize {
    reduced_word(w).len()
}

/// Bruhat order inherited from `S_{2g}`: `u <= w` iff every entry of the rank
/// matrix `#{ x <= i : u(x) >= j }` is bounded by the one for `w`.
pub fn bruhat_leq(u: &WeylElement, w: &WeylElement) -> Result<bool> {
    if u.g != w.g {
        return Err(Error::DimensionMismatch(u.g, w.g));
    }
    let (ru, rw) = (u.rank_matrix(), w.rank_matrix());
    Ok(ru.iter().zip(&rw).all(|(a, b)| a <= b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn word(g: usize, letters: &[usize]) -> WeylWord {
        WeylWord::new(g, letters.to_vec()).unwrap()
    }

    fn yt(g: usize, mu: &[u32]) -> YoungType {
        YoungType::new(g, mu.to_vec()).unwrap()
    }

    /// Word lengths of every element of `W_g` by breadth-first search over the
    /// Cayley graph.
    fn bfs_lengths(g: usize) -> HashMap<Vec<usize>, usize> {
        let gens: Vec<_> = (1..=g).map(|i| generator(g, i).unwrap()).collect();
        let id = WeylElement::identity(g);
        let mut dist = HashMap::from([(id.perm.clone(), 0)]);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w.perm];
            for s in &gens {
                let next = w.then(s);
                if !dist.contains_key(&next.perm) {
                    dist.insert(next.perm.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        dist
    }

    #[test]
    fn generators() {
        assert_eq!(generator(2, 1).unwrap().perm, vec![2, 1, 4, 3]);
        assert_eq!(generator(2, 2).unwrap().perm, vec![1, 3, 2, 4]);
        assert_eq!(generator(4, 4).unwrap().perm, vec![1, 2, 3, 5, 4, 6, 7, 8]);
        assert!(generator(3, 0).is_err());
        assert!(generator(3, 4).is_err());
        for g in 1..=5 {
            for i in 1..=g {
                let s = generator(g, i).unwrap();
                assert!(s.then(&s).is_identity());
                WeylElement::from_oneline(g, s.perm.clone()).unwrap();
            }
        }
    }

    #[test]
    fn word_evaluation() {
        assert_eq!(evaluate_word(&word(2, &[1, 2])).perm, vec![3, 1, 4, 2]);
        assert_eq!(evaluate_word(&word(2, &[2, 1, 2])).perm, vec![3, 4, 1, 2]);
        assert!(evaluate_word(&word(3, &[])).is_identity());
        assert!(WeylWord::new(2, vec![3]).is_err());
    }

    #[test]
    fn word_parse_and_render() {
        let w = WeylWord::parse(3, "s1*s2*s3").unwrap();
        assert_eq!(w.letters(), &[1, 2, 3]);
        assert_eq!(w.to_string(), "s1*s2*s3");
        assert_eq!(WeylWord::parse(3, "s3s2").unwrap().letters(), &[3, 2]);
        assert!(WeylWord::parse(3, "1").unwrap().is_empty());
        assert_eq!(word(3, &[]).to_string(), "1");
        assert!(WeylWord::parse(3, "s4").is_err());
        assert!(WeylWord::parse(3, "t1").is_err());
    }

    #[test]
    fn young_to_weyl_anchors() {
        for g in 1..=6 {
            let ord = from_young(&YoungType::empty(g).unwrap());
            let expected: Vec<usize> = (g + 1..=2 * g).chain(1..=g).collect();
            assert_eq!(ord.perm, expected);
            assert!(from_young(&YoungType::staircase(g).unwrap()).is_identity());
        }
        assert_eq!(from_young(&yt(2, &[2])), generator(2, 2).unwrap());
        assert_eq!(from_young(&yt(2, &[1])).perm, vec![3, 1, 4, 2]);
    }

    #[test]
    fn from_young_is_symplectic() {
        for g in 1..=8 {
            for nu in crate::strata::enumerate_final_types(g).unwrap() {
                let w = from_young(&nu.to_young());
                WeylElement::from_oneline(g, w.perm).unwrap();
            }
        }
    }

    #[test]
    fn lengths_and_reduced_words() {
        let id = WeylElement::identity(3);
        assert_eq!(length(&id), 0);
        assert!(reduced_word(&id).is_empty());
        let w = from_young(&yt(3, &[3, 2]));
        assert_eq!(reduced_word(&w).letters(), &[3]);
        assert_eq!(length(&from_young(&YoungType::empty(4).unwrap())), 10);
    }

    #[test]
    fn greedy_length_matches_cayley_graph() {
        for g in 1..=4 {
            let dist = bfs_lengths(g);
            assert_eq!(dist.len(), (1 << g) * (1..=g).product::<usize>());
            for (perm, d) in dist {
                let w = WeylElement::from_oneline(g, perm).unwrap();
                let rw = reduced_word(&w);
                assert_eq!(rw.len(), d);
                assert_eq!(evaluate_word(&rw), w);
            }
        }
    }

    #[test]
    fn length_equals_stratum_dimension() {
        for g in 1..=6 {
            for nu in crate::strata::enumerate_final_types(g).unwrap() {
                let w = from_young(&nu.to_young());
                assert_eq!(length(&w), nu.dim());
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let g = 2;
        let s2 = generator(g, 2).unwrap();
        let s1s2 = evaluate_word(&word(g, &[1, 2]));
        assert!(bruhat_leq(&WeylElement::identity(g), &s1s2).unwrap());
        assert!(bruhat_leq(&s2, &s1s2).unwrap());
        assert!(!bruhat_leq(&s1s2, &s2).unwrap());
        let a = from_young(&yt(4, &[4]));
        let b = from_young(&yt(4, &[3, 1]));
        assert!(!bruhat_leq(&a, &b).unwrap());
        assert!(!bruhat_leq(&b, &a).unwrap());
        assert!(bruhat_leq(&s2, &WeylElement::identity(3)).is_err());
    }

    #[test]
    fn prank_family_shape() {
        // w(f+1) = 1 and the remaining first half increases into g+1..2g-1
        for g in 1..=6 {
            for f in 0..g {
                let w = from_young(&yt(g, &[(g - f) as u32]));
                assert_eq!(w.apply(f + 1), 1);
                let rest: Vec<usize> = (1..=g)
                    .filter(|&i| i != f + 1)
                    .map(|i| w.apply(i))
                    .collect();
                assert!(rest.windows(2).all(|p| p[0] < p[1]));
                assert!(rest.iter().all(|&v| v > g && v < 2 * g));
            }
        }
    }

    #[test]
    fn superspecial_family_shape() {
        for g in 1..=6 {
            for f in 1..=g {
                let a = g - f;
                let mu: Vec<u32> = (1..=a as u32).rev().collect();
                let w = from_young(&yt(g, &mu));
                let expected: Vec<usize> = (g + 1..=g + f)
                    .chain(1..=a)
                    .chain(g + f + 1..=2 * g)
                    .chain(a + 1..=g)
                    .collect();
                assert_eq!(w.perm, expected);
            }
        }
    }
}
