//! Integer partitions, the dominance order and the level function.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Mutex;
use thiserror::Error;

/// Partition of a positive integer: weakly decreasing positive parts.
/// `a_i = 0` for `i > len` by convention.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("dominance compares partitions of equal totals ({0} vs {1})")]
    UnequalTotals(u32, u32),
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::NotAPartition(parts))
        }
    }

    /// Sorts the given parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Dominance: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.total() != other.total() {
            return Err(PartitionError::UnequalTotals(self.total(), other.total()));
        }
        let k = self.len().max(other.len());
        let mut sa = 0u32;
        let mut sb = 0u32;
        for i in 0..k {
            sa += self.part(i);
            sb += other.part(i);
            if sa < sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn strictly_dominates(&self, other: &Partition) -> Result<bool, PartitionError> {
        Ok(self != other && self.dominates(other)?)
    }

    /// The partitions directly below `self` in dominance order.
    ///
    /// Both cover families amount to moving one unit from position `k` to a
    /// later position `q`: either to the adjacent slot, or past a run of
    /// equal parts. Overlapping shapes are deduplicated.
    pub fn preceding(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        let n = self.len();
        // Family 1: b_k = a_k - 1 > a_{k+1}, b_{k+1} = a_{k+1} + 1.
        for k in 0..n {
            let ak = self.part(k);
            let next = self.part(k + 1);
            if ak >= 1 && ak - 1 > next {
                let mut parts: Vec<u32> = (0..n.max(k + 2))
                    .map(|i| self.part(i))
                    .collect();
                parts[k] -= 1;
                parts[k + 1] += 1;
                out.insert(Partition::from_unsorted(parts));
            }
        }
        // Family 2: a_k - 1 = a_{k+1} = ... = a_{k+l} = a_{k+l+1} + 1.
        for k in 0..n {
            let ak = self.part(k);
            if ak < 2 {
                continue;
            }
            for l in 1..=n - k {
                let run_ok = (1..=l).all(|j| self.part(k + j) == ak - 1);
                if !run_ok {
                    continue;
                }
                if self.part(k + l + 1) + 1 == ak - 1 {
                    let mut parts: Vec<u32> = (0..n.max(k + l + 2))
                        .map(|i| self.part(i))
                        .collect();
                    parts[k] -= 1;
                    parts[k + l + 1] += 1;
                    out.insert(Partition::from_unsorted(parts));
                }
            }
        }
        out
    }

    /// Length of the longest strictly descending dominance chain below
    /// `self`; zero on the minimal partition `(1, ..., 1)`. Memoized.
    pub fn level(&self) -> u32 {
        static MEMO: Mutex<Option<HashMap<Vec<u32>, u32>>> = Mutex::new(None);
        if let Some(v) = MEMO
            .lock()
            .unwrap()
            .get_or_insert_with(HashMap::new)
            .get(&self.parts)
        {
            return *v;
        }
        let value = self
            .preceding()
            .iter()
            .map(|b| b.level() + 1)
            .max()
            .unwrap_or(0);
        MEMO.lock()
            .unwrap()
            .get_or_insert_with(HashMap::new)
            .insert(self.parts.clone(), value);
        value
    }

    /// Componentwise sum; the empty partition is the neutral element.
    pub fn sum(parts: &[Partition]) -> Partition {
        let len = parts.iter().map(Partition::len).max().unwrap_or(0);
        let mut out = vec![0u32; len];
        for p in parts {
            for (i, slot) in out.iter_mut().enumerate() {
                *slot += p.part(i);
            }
        }
        Partition::from_unsorted(out)
    }

    pub fn add(&self, other: &Partition) -> Partition {
        Partition::sum(&[self.clone(), other.clone()])
    }

    /// All partitions of `n` in reverse-lexicographic order, `(n)` first.
    pub fn enumerate(n: u32) -> Vec<Partition> {
        assert!(n >= 1);
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            let top = remaining.min(max);
            for p in (1..=top).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `3,2,1` or `(3,2,1)`.
pub fn parse_partition(text: &str) -> Result<Partition, PartitionError> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Result<Vec<u32>, _> = inner
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect();
    let parts = parts.map_err(|_| PartitionError::NotAPartition(vec![]))?;
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute-force cover set computed from dominance alone.
    fn brute_covers(a: &Partition, all: &[Partition]) -> BTreeSet<Partition> {
        let below: Vec<&Partition> = all
            .iter()
            .filter(|b| a.strictly_dominates(b).unwrap())
            .collect();
        below
            .iter()
            .filter(|b| {
                !below
                    .iter()
                    .any(|c| c != *b && c.strictly_dominates(b).unwrap())
            })
            .map(|b| (*b).clone())
            .collect()
    }

    fn brute_level(a: &Partition, all: &[Partition], memo: &mut HashMap<Partition, u32>) -> u32 {
        if let Some(v) = memo.get(a) {
            return *v;
        }
        let v = all
            .iter()
            .filter(|b| a.strictly_dominates(b).unwrap())
            .map(|b| brute_level(b, all, memo) + 1)
            .max()
            .unwrap_or(0);
        memo.insert(a.clone(), v);
        v
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])).unwrap());
        assert_eq!(
            p(&[3]).dominates(&p(&[2, 2])),
            Err(PartitionError::UnequalTotals(3, 4))
        );
    }

    #[test]
    fn preceding_examples() {
        assert_eq!(
            p(&[3, 1]).preceding(),
            BTreeSet::from([p(&[2, 2])])
        );
        assert!(p(&[1, 1, 1]).preceding().is_empty());
        assert_eq!(
            p(&[3, 3]).preceding(),
            BTreeSet::from([p(&[3, 2, 1])])
        );
    }

    #[test]
    fn preceding_matches_brute_force_up_to_12() {
        for n in 1..=12 {
            let all = Partition::enumerate(n);
            for a in &all {
                assert_eq!(a.preceding(), brute_covers(a, &all), "covers of {a}");
            }
        }
    }

    #[test]
    fn level_matches_brute_force_up_to_10() {
        for n in 1..=10 {
            let all = Partition::enumerate(n);
            let mut memo = HashMap::new();
            for a in &all {
                assert_eq!(a.level(), brute_level(a, &all, &mut memo), "level of {a}");
            }
        }
    }

    #[test]
    fn level_examples() {
        assert_eq!(p(&[2, 1, 1]).level(), 1);
        assert_eq!(p(&[1, 1, 1, 1]).level(), 0);
        assert_eq!(p(&[3, 2]).level(), 4);
        assert_eq!(p(&[3, 3]).level(), 5);
    }

    #[test]
    fn level_extremes() {
        for n in 2..=10 {
            let all = Partition::enumerate(n);
            let max = all.iter().map(Partition::level).max().unwrap();
            assert_eq!(p(&[n]).level(), max);
            assert_eq!(Partition::new(vec![1; n as usize]).unwrap().level(), 0);
        }
    }

    #[test]
    fn sums() {
        assert_eq!(p(&[2]).add(&p(&[1, 1])), p(&[3, 1]));
        assert_eq!(Partition::sum(&[p(&[2, 1])]), p(&[2, 1]));
        assert_eq!(Partition::sum(&[]), Partition::from_unsorted(vec![]));
        assert_eq!(p(&[2, 1]).add(&p(&[2, 1])), p(&[4, 2]));
    }

    #[test]
    fn enumeration() {
        let p3 = Partition::enumerate(3);
        assert_eq!(p3, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(Partition::enumerate(1), vec![p(&[1])]);
        assert_eq!(Partition::enumerate(5).len(), 7);
    }

    #[test]
    fn partial_order_properties_small() {
        for n in 2..=7 {
            let all = Partition::enumerate(n);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    if a.dominates(b).unwrap() && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if a.dominates(b).unwrap() && b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        assert_eq!(parse_partition("(3,2,1)").unwrap(), p(&[3, 2, 1]));
        assert_eq!(parse_partition("3,2,1").unwrap(), p(&[3, 2, 1]));
        assert!(parse_partition("1,2").is_err());
        assert_eq!(p(&[3, 2, 1]).to_string(), "(3,2,1)");
    }
}
