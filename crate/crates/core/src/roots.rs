//! Root multisets: the compact `(root, multiplicity)` form of a monic
//! polynomial's zero set, with the multiset algebra (lcm, quotient, product)
//! used when funneling per-component perturbations through a common
//! numerator or denominator.

use thiserror::Error;

use crate::poly::Poly;
use crate::rat::Rat;

/// A list of pairwise-distinct roots with positive multiplicities. The
/// expanded form repeats each root consecutively, in compact-form order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RootList {
    entries: Vec<(Rat, u32)>,
}

/// A root quotient would need a negative multiplicity.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("root quotient underflow: divisor multiplicity exceeds dividend at root {root}")]
pub struct NegativeMultiplicity {
    pub root: Rat,
}

impl RootList {
    /// The empty multiset (the constant polynomial 1).
    pub fn empty() -> RootList {
        RootList::default()
    }

    /// Builds from `(root, multiplicity)` pairs, merging duplicate roots and
    /// dropping zero multiplicities. First-occurrence order is kept.
    pub fn new(pairs: Vec<(Rat, u32)>) -> RootList {
        let mut entries: Vec<(Rat, u32)> = Vec::new();
        for (root, mult) in pairs {
            if mult == 0 {
                continue;
            }
            match entries.iter_mut().find(|(r, _)| *r == root) {
                Some((_, m)) => *m += mult,
                None => entries.push((root, mult)),
            }
        }
        RootList { entries }
    }

    pub fn single(root: Rat) -> RootList {
        RootList {
            entries: vec![(root, 1)],
        }
    }

    pub fn from_ints(roots: &[(i64, u32)]) -> RootList {
        RootList::new(
            roots
                .iter()
                .map(|&(r, m)| (Rat::from_int(r), m))
                .collect(),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Rat, u32)] {
        &self.entries
    }

    /// Total degree `N = sum of multiplicities`.
    pub fn total_degree(&self) -> usize {
        self.entries.iter().map(|(_, m)| *m as usize).sum()
    }

    pub fn multiplicity_of(&self, root: &Rat) -> u32 {
        self.entries
            .iter()
            .find(|(r, _)| r == root)
            .map_or(0, |(_, m)| *m)
    }

    /// Expanded roots with prior-occurrence counters: each root repeated
    /// consecutively `multiplicity` times, paired with the number of earlier
    /// occurrences of the same root.
    pub fn expanded(&self) -> Vec<(Rat, usize)> {
        let mut out = Vec::with_capacity(self.total_degree());
        for (root, mult) in &self.entries {
            for l in 0..*mult as usize {
                out.push((root.clone(), l));
            }
        }
        out
    }

    /// The monic polynomial with exactly these roots.
    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::one();
        for (root, mult) in &self.entries {
            let factor = Poly::from_coeffs(vec![-root, Rat::one()]);
            for _ in 0..*mult {
                p = &p * &factor;
            }
        }
        p
    }

    /// Per-root maximum of multiplicities; roots of `self` first, then roots
    /// only in `other`, each in their original order.
    pub fn lcm(&self, other: &RootList) -> RootList {
        let mut entries: Vec<(Rat, u32)> = self
            .entries
            .iter()
            .map(|(r, m)| (r.clone(), (*m).max(other.multiplicity_of(r))))
            .collect();
        for (r, m) in &other.entries {
            if self.multiplicity_of(r) == 0 {
                entries.push((r.clone(), *m));
            }
        }
        RootList { entries }
    }

    /// Per-root sum of multiplicities (polynomial product).
    pub fn product(&self, other: &RootList) -> RootList {
        let mut pairs = self.entries.clone();
        pairs.extend(other.entries.iter().cloned());
        RootList::new(pairs)
    }

    /// Per-root difference of multiplicities; errors if `other` has a root
    /// with higher multiplicity than `self`.
    pub fn quotient(&self, other: &RootList) -> Result<RootList, NegativeMultiplicity> {
        for (r, m) in &other.entries {
            if self.multiplicity_of(r) < *m {
                return Err(NegativeMultiplicity { root: r.clone() });
            }
        }
        let entries = self
            .entries
            .iter()
            .map(|(r, m)| (r.clone(), m - other.multiplicity_of(r)))
            .filter(|(_, m)| *m > 0)
            .collect();
        Ok(RootList { entries })
    }
}
