//! Diagram-profile statistics: bit strings and their inversion sums, hook
//! sums, Ferrers matrices, x-ray lists, and staircase containment counts.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::cells::CellView;
use crate::families::{enumerate, FamilySpec};
use crate::partition::{all_partitions, Partition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("not a valid x-ray list: {0}")]
    InvalidXray(String),
    #[error("triangle counts disagree at n={n}, r={r}: by x-ray {by_xray}, by containment {by_containment}")]
    TriangleMismatch {
        n: usize,
        r: usize,
        by_xray: usize,
        by_containment: usize,
    },
}

/// Profile word of a diagram, read SW to NE: a 1 for each step right, a 0
/// for each step up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitString {
    bits: Vec<u8>,
}

impl BitString {
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn zeros(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 0).count()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Walks the outer profile from the SW corner: the bottom row contributes
/// `λ_ℓ` right-steps, then each higher row adds its overhang, with one
/// up-step between rows.
pub fn bit_string(lambda: &Partition) -> BitString {
    let mut bits = Vec::with_capacity(lambda.first_part() + lambda.len());
    let ell = lambda.len();
    for i in (1..=ell).rev() {
        let run = lambda.part(i) - lambda.part(i + 1);
        bits.extend(std::iter::repeat_n(1, run));
        bits.push(0);
    }
    BitString { bits }
}

/// `Σ (j - i)` over pairs `i < j` with `w_i = 1`, `w_j = 0`.
pub fn inversion_sum(w: &BitString) -> u64 {
    let mut ones = 0u64;
    let mut ones_pos_sum = 0u64;
    let mut total = 0u64;
    for (idx, &b) in w.bits.iter().enumerate() {
        let pos = idx as u64 + 1;
        if b == 1 {
            ones += 1;
            ones_pos_sum += pos;
        } else {
            total += ones * pos - ones_pos_sum;
        }
    }
    total
}

/// Sum of all hook lengths of the diagram.
pub fn hook_sum(lambda: &Partition) -> u64 {
    let view = CellView::new(lambda);
    lambda
        .cells()
        .map(|(i, j)| view.hook(crate::cells::Cell::new(i, j)).unwrap() as u64)
        .sum()
}

/// `m × m` 0/1 incidence matrix with `m = max(λ_1, ℓ(λ))`.
pub fn ferrers_matrix(lambda: &Partition) -> Vec<Vec<u8>> {
    let m = lambda.first_part().max(lambda.len());
    (1..=m)
        .map(|i| (1..=m).map(|j| u8::from(lambda.contains_cell(i, j))).collect())
        .collect()
}

/// Anti-diagonal sums of the Ferrers matrix, all `2m - 1` of them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XrayList {
    entries: Vec<usize>,
}

impl XrayList {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Trailing-zero-trimmed form used for equality and length.
    pub fn trimmed(&self) -> &[usize] {
        let end = self
            .entries
            .iter()
            .rposition(|&e| e != 0)
            .map_or(0, |i| i + 1);
        &self.entries[..end]
    }

    /// Number of non-zero entries.
    pub fn len_nonzero(&self) -> usize {
        self.trimmed().len()
    }

    pub fn same_class(&self, other: &XrayList) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl fmt::Display for XrayList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub fn xray(lambda: &Partition) -> XrayList {
    let m = lambda.first_part().max(lambda.len());
    let entries = if m == 0 {
        Vec::new()
    } else {
        (1..=2 * m - 1)
            .map(|d| {
                (1..=d.min(m))
                    .filter(|&i| lambda.part(i) >= d + 1 - i)
                    .count()
            })
            .collect()
    };
    XrayList { entries }
}

// Lemma-shape check: a strictly increasing prefix 1, 2, ..., p followed by a
// non-increasing tail bounded by p. Returns the trimmed slice.
fn validate_xray(entries: &[usize]) -> Result<&[usize], DiagramError> {
    let end = entries.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
    let y = &entries[..end];
    if y.is_empty() {
        return Ok(y);
    }
    let mut p = 0;
    while p < y.len() && y[p] == p + 1 {
        p += 1;
    }
    if p == 0 {
        return Err(DiagramError::InvalidXray(format!(
            "must start with 1, got {}",
            y[0]
        )));
    }
    let mut prev = p;
    for &e in &y[p..] {
        if e == 0 || e > prev {
            return Err(DiagramError::InvalidXray(format!(
                "tail entry {e} breaks the non-increasing bound {prev}"
            )));
        }
        prev = e;
    }
    Ok(y)
}

/// Top-justified refill: places the i-th anti-diagonal's ones starting in
/// row 1. Valid x-ray lists produce a partition with distinct parts whose
/// x-ray is the input.
pub fn phi(entries: &[usize]) -> Result<Partition, DiagramError> {
    let y = validate_xray(entries)?;
    let max = y.iter().copied().max().unwrap_or(0);
    let parts: Vec<usize> = (1..=max)
        .map(|k| y.iter().filter(|&&e| e >= k).count())
        .collect();
    let partition =
        Partition::new(parts).map_err(|_| DiagramError::InvalidXray("refill failed".into()))?;
    debug_assert!(
        partition.parts().windows(2).all(|w| w[0] > w[1]),
        "refill of a valid x-ray must have distinct parts"
    );
    Ok(partition)
}

/// The distinct x-ray lists over all `λ ⊢ n`, keyed by trimmed form, with
/// the distinct-part representative produced by the refill map.
pub fn xray_classes(n: usize) -> Vec<(Vec<usize>, Partition)> {
    let mut classes: BTreeMap<Vec<usize>, Partition> = BTreeMap::new();
    for lambda in all_partitions(n) {
        let x = xray(&lambda);
        let key = x.trimmed().to_vec();
        classes
            .entry(key.clone())
            .or_insert_with(|| phi(&key).expect("computed x-rays are valid"));
    }
    classes.into_iter().collect()
}

/// Row `n` holds, for `r = 1..=n`, the number of partitions of `n` maximally
/// contained in `δ_r`. Both counting routes (x-ray length and staircase
/// containment) are computed and must agree.
pub fn staircase_triangle(rows: usize) -> Result<Vec<Vec<usize>>, DiagramError> {
    let mut triangle = Vec::with_capacity(rows);
    for n in 1..=rows {
        let mut by_xray = vec![0usize; n + 1];
        let mut by_containment = vec![0usize; n + 1];
        for lambda in all_partitions(n) {
            let len = xray(&lambda).len_nonzero();
            if len <= n {
                by_xray[len] += 1;
            }
        }
        for r in 1..=n {
            by_containment[r] = enumerate(n, FamilySpec::MaximalInStaircase(r)).count();
            if by_xray[r] != by_containment[r] {
                return Err(DiagramError::TriangleMismatch {
                    n,
                    r,
                    by_xray: by_xray[r],
                    by_containment: by_containment[r],
                });
            }
        }
        triangle.push(by_containment[1..].to_vec());
    }
    Ok(triangle)
}
