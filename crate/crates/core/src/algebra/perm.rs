//! Permutations of {1..l} in one-line notation.

use std::fmt;

use crate::{Error, Result};

/// A bijection on {1..l}; `images[i-1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(l: usize) -> Self {
        Permutation {
            images: (1..=l).collect(),
        }
    }

    /// Longest element, w0(i) = l+1−i.
    pub fn w0(l: usize) -> Self {
        Permutation {
            images: (1..=l).rev().collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let l = images.len();
        let mut seen = vec![false; l + 1];
        for &v in &images {
            if v == 0 || v > l || seen[v] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The permutation whose one-line word has the same relative order as
    /// `values`: σ(i) is the rank of values[i-1]. Values must be distinct.
    pub fn sorting<T: Ord>(values: &[T]) -> Result<Self> {
        let l = values.len();
        let mut idx: Vec<usize> = (0..l).collect();
        idx.sort_by(|&a, &b| values[a].cmp(&values[b]));
        for w in idx.windows(2) {
            if values[w[0]] == values[w[1]] {
                return Err(Error::TiedGaps);
            }
        }
        let mut images = vec![0; l];
        for (rank, &pos) in idx.iter().enumerate() {
            images[pos] = rank + 1;
        }
        Ok(Permutation { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut n = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// s_i·σ, the one-line word with values i and i+1 exchanged.
    pub fn swap_values(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        for v in images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Permutation { images }
    }

    /// σ·s_i, the one-line word with positions i and i+1 exchanged.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Permute a vector: output position σ(i) holds v[i].
    pub fn permute<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.size());
        let mut out = v.to_vec();
        for (i, &s) in self.images.iter().enumerate() {
            out[s - 1] = v[i].clone();
        }
        out
    }

    /// True when σ(i) > σ(i+1), 1 ≤ i < l.
    pub fn descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// All permutations of {1..l} in lexicographic order.
    pub fn all(l: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut used = vec![false; l + 1];
        fn rec(l: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == l {
                out.push(Permutation {
                    images: cur.clone(),
                });
                return;
            }
            for v in 1..=l {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(l, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(l, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.images
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_inverse_length() {
        let s = Permutation::from_images(vec![2, 4, 1, 3]).unwrap();
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(4));
        assert_eq!(s.inverse().compose(&s), Permutation::identity(4));
        assert_eq!(Permutation::w0(4).length(), 6);
        assert_eq!(s.length(), 3);
    }

    #[test]
    fn sorting_ranks() {
        // relative order of (.44, .86, .28, .70) is (2, 4, 1, 3)
        let s = Permutation::sorting(&[44, 86, 28, 70]).unwrap();
        assert_eq!(s.images(), &[2, 4, 1, 3]);
        assert!(Permutation::sorting(&[1, 1]).is_err());
    }

    #[test]
    fn permute_is_position_map() {
        let s = Permutation::from_images(vec![2, 4, 1, 3]).unwrap();
        // entry j lands at position σ(j)
        assert_eq!(s.permute(&[0i64, 1, 2, 1]), vec![2, 0, 1, 1]);
    }

    #[test]
    fn swap_values_vs_positions() {
        let s = Permutation::from_images(vec![3, 1, 2]).unwrap();
        assert_eq!(s.swap_values(1).images(), &[3, 2, 1]);
        assert_eq!(s.swap_positions(1).images(), &[1, 3, 2]);
    }

    #[test]
    fn all_enumerates() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(1).len(), 1);
    }
}
