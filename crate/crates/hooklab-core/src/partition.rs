//! Partitions, their basic statistics, and streaming enumeration.
//!
//! Enumeration is by successor in decreasing lexicographic order and never
//! materializes a full list of partitions; consumers fold over the stream.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and non-increasing")]
    InvalidParts,
    #[error("statistic undefined for the empty partition")]
    EmptyPartition,
    #[error("index {0} is outside the diagram")]
    IndexOutsideDiagram(usize),
}

/// A partition: non-increasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::InvalidParts)
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts the given positive parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::InvalidParts);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero-padded beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            panic!("parts are 1-indexed");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ'_j` with 1-based `j`, zero-padded: the number of parts ≥ j.
    pub fn conj_part(&self, j: usize) -> usize {
        if j == 0 {
            panic!("columns are 1-indexed");
        }
        // parts are sorted descending, so this is a prefix count
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::with_capacity(self.first_part());
        for j in 1..=self.first_part() {
            cols.push(self.conj_part(j));
        }
        Partition { parts: cols }
    }

    /// Side length of the largest square sub-diagram.
    pub fn durfee(&self) -> usize {
        let mut m = 0;
        while self.part(m + 1) > m {
            m += 1;
        }
        m
    }

    /// Arm/leg pairs `(a, b)` of the diagonal hooks: `a = λ_i - i + 1`,
    /// `b = λ'_i - i`, one pair per Durfee index.
    pub fn nested_hooks(&self) -> Vec<(usize, usize)> {
        (1..=self.durfee())
            .map(|i| (self.part(i) - i + 1, self.conj_part(i) - i))
            .collect()
    }

    /// `r_j(λ) = λ_j - λ'_j`. Defined while the index touches the diagram in
    /// at least one direction; errors when `j` exceeds both the length and
    /// the first part.
    pub fn rank_j(&self, j: usize) -> Result<i64, PartitionError> {
        if j == 0 || (j > self.len() && j > self.first_part()) {
            return Err(PartitionError::IndexOutsideDiagram(j));
        }
        Ok(self.part(j) as i64 - self.conj_part(j) as i64)
    }

    /// `λ_1 - ℓ(λ)`, with the empty partition assigned rank 0.
    pub fn rank(&self) -> i64 {
        self.first_part() as i64 - self.len() as i64
    }

    /// `⌈λ_1/2⌉ - ℓ(λ)`; errors on the empty partition.
    pub fn m2_rank(&self) -> Result<i64, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        Ok((self.first_part() as i64 + 1) / 2 - self.len() as i64)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// `λ = δ_r = (r, r-1, ..., 1)` for some `r ≥ 0`.
    pub fn is_staircase(&self) -> bool {
        let r = self.len();
        self.parts.iter().enumerate().all(|(i, &p)| p == r - i)
    }

    /// Containment in `δ_r`: `λ_i ≤ r + 1 - i` for every row.
    pub fn contained_in_staircase(&self, r: usize) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p + i < r + 1)
    }

    /// Removes the first row and first column (the outer hook). Empty input
    /// stays empty.
    pub fn remove_outer_hook(&self) -> Partition {
        let parts = self
            .parts
            .iter()
            .skip(1)
            .filter(|&&p| p >= 2)
            .map(|&p| p - 1)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn all_partitions(n: usize) -> AllPartitions {
    AllPartitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct AllPartitions {
    current: Option<Vec<usize>>,
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        self.current = successor(&out);
        Some(Partition { parts: out })
    }
}

// Decreasing-lex successor: decrement the last part greater than 1, then
// redistribute the freed units greedily.
fn successor(v: &[usize]) -> Option<Vec<usize>> {
    let i = v.iter().rposition(|&p| p > 1)?;
    let val = v[i] - 1;
    let mut rest = v.len() - 1 - i + 1; // trailing ones plus the unit removed
    let mut next = v[..i].to_vec();
    next.push(val);
    while rest >= val {
        next.push(val);
        rest -= val;
    }
    if rest > 0 {
        next.push(rest);
    }
    Some(next)
}

/// Partitions of `n` into distinct parts, decreasing lexicographic order.
pub fn distinct_partitions(n: usize) -> DistinctPartitions {
    DistinctPartitions {
        stack: if n == 0 {
            Vec::new()
        } else {
            vec![Frame { rem: n, cand: n }]
        },
        prefix: Vec::new(),
        pending_empty: n == 0,
    }
}

/// Partitions of `n` into distinct even parts (halved parts are a distinct
/// partition of `n/2`), decreasing lexicographic order.
pub fn distinct_even_partitions(n: usize) -> impl Iterator<Item = Partition> {
    let stream = if n.is_multiple_of(2) {
        Some(distinct_partitions(n / 2))
    } else {
        None
    };
    stream.into_iter().flatten().map(|p| Partition {
        parts: p.parts.iter().map(|&x| 2 * x).collect(),
    })
}

struct Frame {
    rem: usize,
    cand: usize,
}

pub struct DistinctPartitions {
    stack: Vec<Frame>,
    prefix: Vec<usize>,
    pending_empty: bool,
}

impl Iterator for DistinctPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(Partition::empty());
        }
        loop {
            let top = self.stack.last_mut()?;
            let cand = top.cand.min(top.rem);
            // distinct parts ≤ cand sum to at most cand(cand+1)/2
            if cand == 0 || cand * (cand + 1) / 2 < top.rem {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.prefix.pop();
                }
                continue;
            }
            if cand == top.rem {
                top.cand = cand - 1;
                let mut parts = self.prefix.clone();
                parts.push(cand);
                return Some(Partition { parts });
            }
            let child_rem = top.rem - cand;
            top.cand = cand - 1;
            self.prefix.push(cand);
            self.stack.push(Frame {
                rem: child_rem,
                cand: cand - 1,
            });
        }
    }
}
