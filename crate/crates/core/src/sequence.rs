//! Non-increasing sequences of positive integers (integer partitions in
//! Ferrers-diagram form) and the parameters read off `κ̂`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("entries must be positive, found 0 at position {0}")]
    ZeroEntry(usize),
    #[error("entries must be non-increasing, but {prev} is followed by {next}")]
    Increasing { prev: usize, next: usize },
    #[error("operation needs a non-empty sequence")]
    Empty,
    #[error("cannot parse `{0}` as a sequence")]
    Parse(String),
}

/// Finite non-increasing sequence of positive integers.
///
/// Indexing past the end reads as 0, which matches `κ_l = 0` for `l ≥ θ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartitionSequence(Vec<usize>);

impl PartitionSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self, SequenceError> {
        if let Some(i) = entries.iter().position(|&e| e == 0) {
            return Err(SequenceError::ZeroEntry(i));
        }
        if let Some(w) = entries.windows(2).find(|w| w[0] < w[1]) {
            return Err(SequenceError::Increasing { prev: w[0], next: w[1] });
        }
        Ok(PartitionSequence(entries))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut entries: Vec<usize>) -> Self {
        entries.retain(|&e| e > 0);
        entries.sort_unstable_by(|a, b| b.cmp(a));
        PartitionSequence(entries)
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(PartitionSequence::new(entries.clone()).is_ok(), "{entries:?}");
        PartitionSequence(entries)
    }

    pub fn empty() -> Self {
        PartitionSequence(Vec::new())
    }

    /// `[r]^s`: `s` copies of `r`.
    pub fn constant(r: usize, s: usize) -> Self {
        if r == 0 {
            return Self::empty();
        }
        PartitionSequence(vec![r; s])
    }

    /// Expands run-length pairs `(value, multiplicity)`.
    pub fn from_runs(runs: &[(usize, usize)]) -> Result<Self, SequenceError> {
        Self::new(runs.iter().flat_map(|&(v, m)| std::iter::repeat_n(v, m)).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry `i`, or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(value, multiplicity)` pairs with strictly decreasing values.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &e in &self.0 {
            match runs.last_mut() {
                Some((v, m)) if *v == e => *m += 1,
                _ => runs.push((e, 1)),
            }
        }
        runs
    }

    /// Entrywise sum, padding the shorter sequence with zeros.
    pub fn entrywise_add(&self, other: &Self) -> Self {
        let (long, short) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut out = long.0.clone();
        for (o, &s) in out.iter_mut().zip(&short.0) {
            *o += s;
        }
        PartitionSequence(out)
    }

    /// The `*` operation: concatenate and sort non-increasingly.
    pub fn star_merge(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        PartitionSequence(out)
    }

    /// Reflection of the Ferrers diagram: entry `j` counts the entries `≥ j + 1`.
    pub fn conjugate(&self) -> Self {
        let width = self.get(0);
        let mut out = vec![0; width];
        // Entries are sorted, so entry j is the number of rows reaching column j.
        let mut rows = self.len();
        for (j, slot) in out.iter_mut().enumerate() {
            while rows > 0 && self.0[rows - 1] <= j {
                rows -= 1;
            }
            *slot = rows;
        }
        PartitionSequence(out)
    }

    /// `κ_l`, reading this sequence as `κ̂(G)`.
    pub fn kappa_at(&self, l: usize) -> usize {
        self.get(l)
    }

    /// `G` is (k,l)-colourable iff `κ_l(G) ≤ k`.
    pub fn is_kl_colourable(&self, k: usize, l: usize) -> bool {
        self.kappa_at(l) <= k
    }

    /// Least `r` such that every split `k + l = r` is colourable:
    /// `max_l (κ_l + l)` over `l < θ`.
    pub fn bichromatic_number(&self) -> Result<usize, SequenceError> {
        self.0.iter().enumerate().map(|(l, &k)| k + l).max().ok_or(SequenceError::Empty)
    }

    /// Least `r` such that some split `k + l = r` is colourable:
    /// `min_l (κ_l + l)` over `l ≤ θ`.
    pub fn cochromatic_number(&self) -> Result<usize, SequenceError> {
        if self.is_empty() {
            return Err(SequenceError::Empty);
        }
        Ok((0..=self.len()).map(|l| self.kappa_at(l) + l).min().unwrap())
    }

    /// Run-length text, e.g. `3^2,1^1`.
    pub fn to_run_length_string(&self) -> String {
        self.runs().iter().map(|(v, m)| format!("{v}^{m}")).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for PartitionSequence {
    /// Compact text, e.g. `3,3,1`; the empty sequence prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for PartitionSequence {
    type Err = SequenceError;

    /// Accepts `3,3,1`, `(3,3,1)`, run-length `3^2,1^1`, or mixtures.
    fn from_str(s: &str) -> Result<Self, SequenceError> {
        let bad = || SequenceError::Parse(s.to_string());
        let body = s.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body).trim();
        if body.is_empty() {
            return Ok(Self::empty());
        }
        let mut out = Vec::new();
        for item in body.split(',') {
            let item = item.trim();
            let (value, mult) = match item.split_once('^') {
                Some((v, m)) => (v.trim(), m.trim().parse::<usize>().map_err(|_| bad())?),
                None => (item, 1),
            };
            let value = value.parse::<usize>().map_err(|_| bad())?;
            out.extend(std::iter::repeat_n(value, mult));
        }
        Self::new(out)
    }
}

impl TryFrom<Vec<usize>> for PartitionSequence {
    type Error = SequenceError;

    fn try_from(v: Vec<usize>) -> Result<Self, SequenceError> {
        Self::new(v)
    }
}

impl From<PartitionSequence> for Vec<usize> {
    fn from(s: PartitionSequence) -> Vec<usize> {
        s.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[usize]) -> PartitionSequence {
        PartitionSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn entrywise_add_examples() {
        assert_eq!(seq(&[3, 2, 2, 1]).entrywise_add(&seq(&[3, 2, 1])), seq(&[6, 4, 3, 1]));
        assert_eq!(seq(&[4, 1]).entrywise_add(&seq(&[])), seq(&[4, 1]));
        assert_eq!(seq(&[1]).entrywise_add(&seq(&[1])), seq(&[2]));
    }

    #[test]
    fn star_merge_examples() {
        assert_eq!(seq(&[3, 2, 2, 1]).star_merge(&seq(&[3, 2, 1])), seq(&[3, 3, 2, 2, 2, 1, 1]));
        assert_eq!(seq(&[2, 2]).star_merge(&seq(&[])), seq(&[2, 2]));
        assert_eq!(seq(&[1]).star_merge(&seq(&[1])), seq(&[1, 1]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(seq(&[3, 3, 1]).conjugate(), seq(&[3, 2, 2]));
        assert_eq!(seq(&[]).conjugate(), seq(&[]));
        assert_eq!(seq(&[5]).conjugate(), seq(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn kappa_at_and_colourability() {
        let s = seq(&[3, 3, 1]);
        assert_eq!(s.kappa_at(0), 3);
        assert_eq!(s.kappa_at(2), 1);
        assert_eq!(s.kappa_at(5), 0);
        assert!(!s.is_kl_colourable(2, 1));
        assert!(s.is_kl_colourable(3, 0));
        // P3 is a split graph with κ̂ = (2,1)
        assert!(seq(&[2, 1]).is_kl_colourable(1, 1));
    }

    #[test]
    fn bichromatic_and_cochromatic() {
        assert_eq!(seq(&[3, 3, 1]).bichromatic_number(), Ok(4));
        assert_eq!(seq(&[1]).bichromatic_number(), Ok(1));
        assert_eq!(PartitionSequence::constant(4, 3).bichromatic_number(), Ok(4 + 3 - 1));
        assert_eq!(seq(&[]).bichromatic_number(), Err(SequenceError::Empty));
        assert_eq!(seq(&[1]).cochromatic_number(), Ok(1));
        assert_eq!(seq(&[3, 3]).cochromatic_number(), Ok(2));
        assert_eq!(seq(&[3, 3, 1]).cochromatic_number(), Ok(3));
        assert_eq!(seq(&[]).cochromatic_number(), Err(SequenceError::Empty));
    }

    #[test]
    fn validation() {
        assert_eq!(PartitionSequence::new(vec![2, 3]), Err(SequenceError::Increasing { prev: 2, next: 3 }));
        assert_eq!(PartitionSequence::new(vec![2, 0]), Err(SequenceError::ZeroEntry(1)));
        assert_eq!(PartitionSequence::from_unsorted(vec![1, 0, 3, 2]), seq(&[3, 2, 1]));
        assert!(serde_json::from_str::<PartitionSequence>("[1,2]").is_err());
        assert_eq!(serde_json::from_str::<PartitionSequence>("[2,1]").unwrap(), seq(&[2, 1]));
        assert_eq!(serde_json::to_string(&seq(&[3, 3, 1])).unwrap(), "[3,3,1]");
    }

    #[test]
    fn text_forms() {
        assert_eq!("3,3,1".parse::<PartitionSequence>().unwrap(), seq(&[3, 3, 1]));
        assert_eq!("3^2,1^1".parse::<PartitionSequence>().unwrap(), seq(&[3, 3, 1]));
        assert_eq!("(6, 4, 3, 1)".parse::<PartitionSequence>().unwrap(), seq(&[6, 4, 3, 1]));
        assert_eq!("".parse::<PartitionSequence>().unwrap(), seq(&[]));
        assert!("3,x".parse::<PartitionSequence>().is_err());
        assert!("1,2".parse::<PartitionSequence>().is_err());
        assert_eq!(seq(&[3, 3, 1]).to_string(), "3,3,1");
        assert_eq!(seq(&[3, 3, 1]).to_run_length_string(), "3^2,1^1");
        assert_eq!(seq(&[3, 3, 1]).runs(), vec![(3, 2), (1, 1)]);
        assert_eq!(PartitionSequence::from_runs(&[(3, 2), (1, 1)]).unwrap(), seq(&[3, 3, 1]));
    }

    fn partition() -> impl Strategy<Value = PartitionSequence> {
        proptest::collection::vec(1usize..12, 0..12).prop_map(PartitionSequence::from_unsorted)
    }

    /// Definition of conjugation, independent of the implementation's scan.
    fn conjugate_by_definition(s: &PartitionSequence) -> Vec<usize> {
        (0..s.get(0)).map(|j| s.entries().iter().filter(|&&e| e > j).count()).collect()
    }

    proptest! {
        #[test]
        fn conjugate_matches_definition_and_is_an_involution(s in partition()) {
            let c = s.conjugate();
            prop_assert_eq!(c.entries(), &conjugate_by_definition(&s)[..]);
            prop_assert_eq!(c.conjugate(), s.clone());
            prop_assert_eq!(c.sum(), s.sum());
        }

        #[test]
        fn add_and_star_are_conjugate(a in partition(), b in partition()) {
            // Adding rows of the diagrams corresponds to merging their columns.
            prop_assert_eq!(a.entrywise_add(&b).conjugate(), a.conjugate().star_merge(&b.conjugate()));
            prop_assert_eq!(a.star_merge(&b).len(), a.len() + b.len());
        }

        #[test]
        fn text_round_trip(s in partition()) {
            prop_assert_eq!(s.to_string().parse::<PartitionSequence>().unwrap(), s.clone());
            prop_assert_eq!(s.to_run_length_string().parse::<PartitionSequence>().unwrap(), s);
        }
    }
}
