//! Multi-index sequences: paths, frames, and the admissibility test.
//!
//! The determinantal constructions consume a sequence of multi-indices
//! running from a start index towards a target. A path steps one component
//! at a time all the way to the target; a frame visits every index reachable
//! from the start by moving along a single component, ordered by distance;
//! an admissible sequence is anything satisfying the strict-growth witness
//! condition that guarantees linear independence of the bordering
//! polynomials. Paths and frames are always admissible.

use thiserror::Error;

use crate::index::MultiIndex;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// Order of components among frame entries at the same distance level.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TieBreak {
    /// Ascending component id at every level, so consecutive entries
    /// alternate components.
    Interleaved,
    /// Descending component id at every level.
    ComponentMajor,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("step multiset does not match the endpoints: component {component} needs {needed} steps, got {got}")]
    BadStepMultiset {
        component: usize,
        needed: usize,
        got: usize,
    },
    #[error("endpoints are not componentwise comparable")]
    NotComparable,
    #[error("sequence entries have mismatched lengths")]
    MixedLengths,
    #[error("sequence is empty")]
    Empty,
}

/// A sequence of multi-indices with a declared direction. Entry 0 is the
/// start index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSeq {
    direction: Direction,
    entries: Vec<MultiIndex>,
}

impl IndexSeq {
    /// A path from `from` to `to` taking the 0-based components of
    /// `step_order` one at a time. The multiset of steps must match the
    /// componentwise difference exactly.
    pub fn path(
        from: &MultiIndex,
        to: &MultiIndex,
        step_order: &[usize],
    ) -> Result<IndexSeq, SeqError> {
        let direction = direction_of(from, to)?;
        for k in 0..from.len() {
            let needed = from[k].abs_diff(to[k]);
            let got = step_order.iter().filter(|&&s| s == k).count();
            if needed != got {
                return Err(SeqError::BadStepMultiset {
                    component: k,
                    needed,
                    got,
                });
            }
        }
        let mut entries = vec![from.clone()];
        let mut cur = from.clone();
        for &k in step_order {
            cur = match direction {
                Direction::Increasing => cur.plus_e(k),
                Direction::Decreasing => cur.minus_e(k).ok_or(SeqError::NotComparable)?,
            };
            entries.push(cur.clone());
        }
        Ok(IndexSeq { direction, entries })
    }

    /// The frame from `from` towards `to`: all indices reached by moving a
    /// single component, ordered by distance, with `tie` fixing the order
    /// within a distance level. The frame does not pass through `to` itself
    /// (except the degenerate `from == to` singleton).
    pub fn frame(from: &MultiIndex, to: &MultiIndex, tie: TieBreak) -> Result<IndexSeq, SeqError> {
        let direction = direction_of(from, to)?;
        let r = from.len();
        let max_level = (0..r).map(|k| from[k].abs_diff(to[k])).max().unwrap_or(0);
        let mut entries = vec![from.clone()];
        for level in 1..=max_level {
            let components: Vec<usize> = match tie {
                TieBreak::Interleaved => (0..r).collect(),
                TieBreak::ComponentMajor => (0..r).rev().collect(),
            };
            for k in components {
                if level <= from[k].abs_diff(to[k]) {
                    let mut v = from.components().to_vec();
                    match direction {
                        Direction::Increasing => v[k] += level,
                        Direction::Decreasing => v[k] -= level,
                    }
                    entries.push(MultiIndex::new(v));
                }
            }
        }
        Ok(IndexSeq { direction, entries })
    }

    /// Wraps explicitly given entries; they are validated for shape only.
    /// Use [`IndexSeq::is_admissible`] for the real check.
    pub fn explicit(direction: Direction, entries: Vec<MultiIndex>) -> Result<IndexSeq, SeqError> {
        let first = entries.first().ok_or(SeqError::Empty)?;
        if entries.iter().any(|e| e.len() != first.len()) {
            return Err(SeqError::MixedLengths);
        }
        Ok(IndexSeq { direction, entries })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn entries(&self) -> &[MultiIndex] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn start(&self) -> &MultiIndex {
        &self.entries[0]
    }

    /// Admissibility from `from` towards `to`: the sequence starts at
    /// `from`, stays within the box spanned by `from` and `to`, and for
    /// every position `j >= 1` some component `k_j` grows strictly beyond
    /// every earlier offset. Returns the 0-based witnesses `k_j` (smallest
    /// valid component per position) or `None`.
    ///
    /// Each position's witness only constrains that position against its
    /// predecessors, so the exhaustive search decomposes per position.
    pub fn is_admissible(&self, from: &MultiIndex, to: &MultiIndex) -> Option<Vec<usize>> {
        let r = from.len();
        if self.entries.is_empty() || self.entries[0] != *from {
            return None;
        }
        let offset = |e: &MultiIndex| -> Option<Vec<usize>> {
            match self.direction {
                Direction::Increasing => e.minus(from).map(|d| d.components().to_vec()),
                Direction::Decreasing => from.minus(e).map(|d| d.components().to_vec()),
            }
        };
        let span: Vec<usize> = match self.direction {
            Direction::Increasing => to.minus(from)?.components().to_vec(),
            Direction::Decreasing => from.minus(to)?.components().to_vec(),
        };
        let mut witnesses = Vec::with_capacity(self.entries.len().saturating_sub(1));
        // running componentwise maximum of earlier offsets
        let mut max_prior = vec![0usize; r];
        for (j, e) in self.entries.iter().enumerate() {
            let s = offset(e)?;
            if s.iter().zip(&span).any(|(a, b)| a > b) {
                return None;
            }
            if j > 0 {
                let k = (0..r).find(|&k| s[k] > max_prior[k])?;
                witnesses.push(k);
            }
            for k in 0..r {
                max_prior[k] = max_prior[k].max(s[k]);
            }
        }
        Some(witnesses)
    }
}

fn direction_of(from: &MultiIndex, to: &MultiIndex) -> Result<Direction, SeqError> {
    if from.len() != to.len() {
        return Err(SeqError::MixedLengths);
    }
    if from.leq(to) {
        Ok(Direction::Increasing)
    } else if to.leq(from) {
        Ok(Direction::Decreasing)
    } else {
        Err(SeqError::NotComparable)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::idx;

    #[test]
    fn step_line_path() {
        let seq = IndexSeq::path(&idx(&[0, 0]), &idx(&[3, 3]), &[0, 1, 0, 1, 0, 1]).unwrap();
        let expected: Vec<MultiIndex> = [
            [0, 0], [1, 0], [1, 1], [2, 1], [2, 2], [3, 2], [3, 3],
        ]
        .iter()
        .map(|c| idx(c))
        .collect();
        assert_eq!(seq.entries(), &expected[..]);
        assert!(seq.is_admissible(&idx(&[0, 0]), &idx(&[3, 3])).is_some());
    }

    #[test]
    fn scalar_path_is_unique() {
        let seq = IndexSeq::path(&idx(&[2]), &idx(&[5]), &[0, 0, 0]).unwrap();
        let expected: Vec<MultiIndex> = [[2], [3], [4], [5]].iter().map(|c| idx(c)).collect();
        assert_eq!(seq.entries(), &expected[..]);
        // frame over one component coincides with the path
        let frame = IndexSeq::frame(&idx(&[2]), &idx(&[5]), TieBreak::Interleaved).unwrap();
        assert_eq!(frame.entries(), seq.entries());
    }

    #[test]
    fn singleton_path() {
        let seq = IndexSeq::path(&idx(&[1, 1]), &idx(&[1, 1]), &[]).unwrap();
        assert_eq!(seq.len(), 1);
        assert!(seq.is_admissible(&idx(&[1, 1]), &idx(&[1, 1])).is_some());
    }

    #[test]
    fn path_validates_step_multiset() {
        let err = IndexSeq::path(&idx(&[0, 0]), &idx(&[2, 1]), &[0, 1, 1]).unwrap_err();
        assert_eq!(
            err,
            SeqError::BadStepMultiset {
                component: 0,
                needed: 2,
                got: 1
            }
        );
    }

    #[test]
    fn increasing_frame_interleaved() {
        let seq = IndexSeq::frame(&idx(&[0, 0]), &idx(&[3, 3]), TieBreak::Interleaved).unwrap();
        let expected: Vec<MultiIndex> = [
            [0, 0], [1, 0], [0, 1], [2, 0], [0, 2], [3, 0], [0, 3],
        ]
        .iter()
        .map(|c| idx(c))
        .collect();
        assert_eq!(seq.entries(), &expected[..]);
        assert!(seq.is_admissible(&idx(&[0, 0]), &idx(&[3, 3])).is_some());
    }

    #[test]
    fn decreasing_frame_tie_breaks() {
        let inter = IndexSeq::frame(&idx(&[1, 1]), &idx(&[0, 0]), TieBreak::Interleaved).unwrap();
        let expected: Vec<MultiIndex> = [[1, 1], [0, 1], [1, 0]].iter().map(|c| idx(c)).collect();
        assert_eq!(inter.entries(), &expected[..]);

        let major = IndexSeq::frame(&idx(&[1, 1]), &idx(&[0, 0]), TieBreak::ComponentMajor).unwrap();
        let expected: Vec<MultiIndex> = [[1, 1], [1, 0], [0, 1]].iter().map(|c| idx(c)).collect();
        assert_eq!(major.entries(), &expected[..]);
    }

    #[test]
    fn admissibility_with_alternating_witnesses() {
        // a sequence that is neither a path nor a frame but still admissible,
        // with witnesses alternating between the two components
        let entries: Vec<MultiIndex> = [
            [0, 0], [1, 0], [0, 1], [2, 1], [1, 2], [3, 0], [1, 3],
        ]
        .iter()
        .map(|c| idx(c))
        .collect();
        let seq = IndexSeq::explicit(Direction::Increasing, entries).unwrap();
        let witnesses = seq.is_admissible(&idx(&[0, 0]), &idx(&[3, 3])).unwrap();
        assert_eq!(witnesses, vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn repeated_entry_is_not_admissible() {
        let entries: Vec<MultiIndex> = [[0, 0], [1, 0], [1, 0]].iter().map(|c| idx(c)).collect();
        let seq = IndexSeq::explicit(Direction::Increasing, entries).unwrap();
        assert!(seq.is_admissible(&idx(&[0, 0]), &idx(&[3, 3])).is_none());
    }

    #[test]
    fn out_of_box_is_not_admissible() {
        let entries: Vec<MultiIndex> = [[0, 0], [1, 0], [2, 0]].iter().map(|c| idx(c)).collect();
        let seq = IndexSeq::explicit(Direction::Increasing, entries).unwrap();
        assert!(seq.is_admissible(&idx(&[0, 0]), &idx(&[1, 1])).is_none());
    }

    #[test]
    fn generated_sequences_are_admissible() {
        // every path and frame in a small box passes the witness search
        let corners: Vec<(MultiIndex, MultiIndex)> = vec![
            (idx(&[0, 0]), idx(&[2, 3])),
            (idx(&[1, 2]), idx(&[3, 2])),
            (idx(&[2, 2]), idx(&[0, 0])),
            (idx(&[3, 1]), idx(&[1, 0])),
            (idx(&[0, 1, 2]), idx(&[2, 2, 2])),
        ];
        for (from, to) in corners {
            for tie in [TieBreak::Interleaved, TieBreak::ComponentMajor] {
                let frame = IndexSeq::frame(&from, &to, tie).unwrap();
                assert!(
                    frame.is_admissible(&from, &to).is_some(),
                    "frame {:?} -> {:?}",
                    from,
                    to
                );
            }
            // component-ascending canonical path
            let mut order = Vec::new();
            for k in 0..from.len() {
                order.extend(std::iter::repeat_n(k, from[k].abs_diff(to[k])));
            }
            let path = IndexSeq::path(&from, &to, &order).unwrap();
            assert!(path.is_admissible(&from, &to).is_some());
        }
    }
}
