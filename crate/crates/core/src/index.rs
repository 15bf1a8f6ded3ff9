//! Multi-indices `n = (n_1, ..., n_r)` of nonnegative integers.

use std::fmt;
use std::ops::Index;

/// A multi-index; `|n|` is the component sum, written `total()` here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(components: Vec<usize>) -> MultiIndex {
        assert!(!components.is_empty(), "MultiIndex: r must be at least 1");
        MultiIndex(components)
    }

    /// The zero index of length `r`.
    pub fn zeros(r: usize) -> MultiIndex {
        MultiIndex::new(vec![0; r])
    }

    /// Number of components `r`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|n| = n_1 + ... + n_r`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn components(&self) -> &[usize] {
        &self.0
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `self >= other`.
    pub fn geq(&self, other: &MultiIndex) -> bool {
        other.leq(self)
    }

    /// `n + e_k` (0-based component).
    pub fn plus_e(&self, k: usize) -> MultiIndex {
        let mut v = self.0.clone();
        v[k] += 1;
        MultiIndex(v)
    }

    /// `n - e_k`, or `None` if component `k` is zero.
    pub fn minus_e(&self, k: usize) -> Option<MultiIndex> {
        let mut v = self.0.clone();
        if v[k] == 0 {
            return None;
        }
        v[k] -= 1;
        Some(MultiIndex(v))
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; `None` if any component would go negative.
    pub fn minus(&self, other: &MultiIndex) -> Option<MultiIndex> {
        assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// All indices `0 <= n <= nmax` componentwise, in lexicographic order.
    pub fn box_iter(nmax: &MultiIndex) -> impl Iterator<Item = MultiIndex> {
        let limits = nmax.0.clone();
        let r = limits.len();
        let mut current = Some(vec![0usize; r]);
        std::iter::from_fn(move || {
            let value = current.take()?;
            let mut next = value.clone();
            // odometer increment, last component fastest
            let mut pos = r;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if next[pos] < limits[pos] {
                    next[pos] += 1;
                    for c in next.iter_mut().skip(pos + 1) {
                        *c = 0;
                    }
                    current = Some(next);
                    break;
                }
            }
            Some(MultiIndex(value))
        })
    }
}

impl Index<usize> for MultiIndex {
    type Output = usize;
    fn index(&self, k: usize) -> &usize {
        &self.0[k]
    }
}

impl From<Vec<usize>> for MultiIndex {
    fn from(v: Vec<usize>) -> MultiIndex {
        MultiIndex::new(v)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Shorthand for tests and examples.
pub fn idx(components: &[usize]) -> MultiIndex {
    MultiIndex::new(components.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_and_order() {
        let n = idx(&[2, 1]);
        assert_eq!(n.total(), 3);
        assert!(idx(&[1, 1]).leq(&n));
        assert!(!n.leq(&idx(&[1, 1])));
        assert_eq!(n.plus_e(1), idx(&[2, 2]));
        assert_eq!(n.minus_e(1), Some(idx(&[2, 0])));
        assert_eq!(idx(&[0, 1]).minus_e(0), None);
    }

    #[test]
    fn box_iteration_is_lexicographic() {
        let all: Vec<MultiIndex> = MultiIndex::box_iter(&idx(&[1, 2])).collect();
        let expected: Vec<MultiIndex> = [
            [0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2],
        ]
        .iter()
        .map(|c| idx(c))
        .collect();
        assert_eq!(all, expected);
    }

    #[test]
    fn display_form() {
        assert_eq!(idx(&[2, 0, 1]).to_string(), "(2,0,1)");
    }
}
