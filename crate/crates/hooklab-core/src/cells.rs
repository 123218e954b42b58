//! Per-cell statistics: hook lengths, contents, symplectic and orthogonal
//! contents, the hook-content dimension products, and the predicates and
//! straightening bijection built on them.
//!
//! `CellView` caches the conjugate partition for the duration of a pass, so
//! repeated content lookups stay O(1) after one O(λ₁) setup.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::partition::Partition;
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CellError {
    #[error("cell ({row},{col}) is not a cell of the partition")]
    InvalidCell { row: usize, col: usize },
    #[error("partition length {len} exceeds the rank bound {bound}")]
    LengthBound { len: usize, bound: usize },
    #[error("symplectic rank must be a positive even integer, got {0}")]
    OddSymplecticRank(usize),
    #[error("partition is not in the domain of the map: {0}")]
    NotInDomain(&'static str),
}

/// 1-indexed cell of a Young diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// A partition together with its cached conjugate.
pub struct CellView<'a> {
    lambda: &'a Partition,
    conj: Vec<usize>,
}

impl<'a> CellView<'a> {
    pub fn new(lambda: &'a Partition) -> Self {
        let conj = lambda.conjugate().parts().to_vec();
        CellView { lambda, conj }
    }

    pub fn partition(&self) -> &Partition {
        self.lambda
    }

    fn lam(&self, i: usize) -> i64 {
        self.lambda.part(i) as i64
    }

    fn con(&self, j: usize) -> i64 {
        self.conj.get(j - 1).copied().unwrap_or(0) as i64
    }

    fn check(&self, c: Cell) -> Result<(), CellError> {
        if self.lambda.contains_cell(c.row, c.col) {
            Ok(())
        } else {
            Err(CellError::InvalidCell {
                row: c.row,
                col: c.col,
            })
        }
    }

    /// `h(i,j) = λ_i + λ'_j - i - j + 1`.
    pub fn hook(&self, c: Cell) -> Result<usize, CellError> {
        self.check(c)?;
        Ok((self.lam(c.row) + self.con(c.col) - c.row as i64 - c.col as i64 + 1) as usize)
    }

    /// `c(i,j) = j - i`.
    pub fn content(&self, c: Cell) -> Result<i64, CellError> {
        self.check(c)?;
        Ok(c.col as i64 - c.row as i64)
    }

    /// Symplectic content: `λ_i + λ_j - i - j + 2` below the diagonal,
    /// `i + j - λ'_i - λ'_j` on or above it.
    pub fn symplectic_content(&self, c: Cell) -> Result<i64, CellError> {
        self.check(c)?;
        let (i, j) = (c.row as i64, c.col as i64);
        Ok(if c.row > c.col {
            self.lam(c.row) + self.lam(c.col) - i - j + 2
        } else {
            i + j - self.con(c.row) - self.con(c.col)
        })
    }

    /// Orthogonal content: `λ_i + λ_j - i - j` on or below the diagonal,
    /// `i + j - λ'_i - λ'_j - 2` above it.
    pub fn orthogonal_content(&self, c: Cell) -> Result<i64, CellError> {
        self.check(c)?;
        let (i, j) = (c.row as i64, c.col as i64);
        Ok(if c.row >= c.col {
            self.lam(c.row) + self.lam(c.col) - i - j
        } else {
            i + j - self.con(c.row) - self.con(c.col) - 2
        })
    }
}

pub fn hook_length(lambda: &Partition, c: Cell) -> Result<usize, CellError> {
    CellView::new(lambda).hook(c)
}

pub fn content(lambda: &Partition, c: Cell) -> Result<i64, CellError> {
    CellView::new(lambda).content(c)
}

pub fn symplectic_content(lambda: &Partition, c: Cell) -> Result<i64, CellError> {
    CellView::new(lambda).symplectic_content(c)
}

pub fn orthogonal_content(lambda: &Partition, c: Cell) -> Result<i64, CellError> {
    CellView::new(lambda).orthogonal_content(c)
}

// Product of (n + stat)/hook over all cells, accumulated as a single
// numerator/denominator pair and reduced once.
fn hook_content_product<F>(lambda: &Partition, stat: F) -> Rational
where
    F: Fn(&CellView, Cell) -> i64,
{
    let view = CellView::new(lambda);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in lambda.cells() {
        let c = Cell::new(i, j);
        num *= BigInt::from(stat(&view, c));
        den *= BigInt::from(view.hook(c).expect("cell from diagram iterator") as i64);
    }
    Rational::new(num, den)
}

/// `dim GL(n) = ∏ (n + c)/h`; requires `ℓ(λ) ≤ n`.
pub fn dim_gl(lambda: &Partition, n: usize) -> Result<Rational, CellError> {
    if lambda.len() > n {
        return Err(CellError::LengthBound {
            len: lambda.len(),
            bound: n,
        });
    }
    let d = hook_content_product(lambda, |v, c| n as i64 + v.content(c).unwrap());
    assert!(
        d.denom().is_one() && d.numer().is_positive(),
        "GL dimension product must be a positive integer"
    );
    Ok(d)
}

/// `dim Sp(2n) = ∏ (2n + c_sp)/h`; requires `2n` even and `ℓ(λ) ≤ n`.
pub fn dim_sp(lambda: &Partition, two_n: usize) -> Result<Rational, CellError> {
    if !two_n.is_multiple_of(2) || two_n == 0 {
        return Err(CellError::OddSymplecticRank(two_n));
    }
    if lambda.len() > two_n / 2 {
        return Err(CellError::LengthBound {
            len: lambda.len(),
            bound: two_n / 2,
        });
    }
    let d = hook_content_product(lambda, |v, c| {
        two_n as i64 + v.symplectic_content(c).unwrap()
    });
    assert!(
        d.denom().is_one() && d.numer().is_positive(),
        "Sp dimension product must be a positive integer"
    );
    Ok(d)
}

/// `dim SO(n) = ∏ (n + c_O)/h`; requires `ℓ(λ) ≤ ⌊n/2⌋`.
pub fn dim_so(lambda: &Partition, n: usize) -> Result<Rational, CellError> {
    if lambda.len() > n / 2 {
        return Err(CellError::LengthBound {
            len: lambda.len(),
            bound: n / 2,
        });
    }
    let d = hook_content_product(lambda, |v, c| n as i64 + v.orthogonal_content(c).unwrap());
    assert!(
        d.denom().is_one() && d.numer().is_positive(),
        "SO dimension product must be a positive integer"
    );
    Ok(d)
}

/// Definition scan: no cell has symplectic content zero.
pub fn is_syp0_scan(lambda: &Partition) -> bool {
    let view = CellView::new(lambda);
    lambda
        .cells()
        .all(|(i, j)| view.symplectic_content(Cell::new(i, j)).unwrap() != 0)
}

/// Characterization: empty, or every nested hook `(a, 1^b)` has `a = b`.
pub fn is_syp0(lambda: &Partition) -> bool {
    lambda.nested_hooks().iter().all(|&(a, b)| a == b)
}

/// Definition scan: no cell has symplectic content ±1.
pub fn is_syp_pm1_scan(lambda: &Partition) -> bool {
    let view = CellView::new(lambda);
    lambda
        .cells()
        .all(|(i, j)| view.symplectic_content(Cell::new(i, j)).unwrap().abs() != 1)
}

/// Characterization: empty or a staircase `δ_r`.
pub fn is_syp_pm1(lambda: &Partition) -> bool {
    lambda.is_staircase()
}

/// Sends each nested hook `(a, 1^a)` to a part `2a`; defined on partitions
/// with all symplectic contents nonzero, lands on distinct even parts.
pub fn straighten(lambda: &Partition) -> Result<Partition, CellError> {
    if !is_syp0(lambda) {
        return Err(CellError::NotInDomain(
            "straighten requires all symplectic contents nonzero",
        ));
    }
    let parts = lambda.nested_hooks().iter().map(|&(a, b)| a + b).collect();
    Ok(Partition::new(parts).expect("nested hook sums decrease strictly"))
}

/// Two-sided inverse of `straighten`: rebuilds the diagram whose i-th nested
/// hook is `(μ_i/2, 1^{μ_i/2})`.
pub fn unstraighten(mu: &Partition) -> Result<Partition, CellError> {
    let distinct_even = mu.parts().iter().all(|&p| p % 2 == 0)
        && mu.parts().windows(2).all(|w| w[0] > w[1]);
    if !distinct_even {
        return Err(CellError::NotInDomain(
            "unstraighten requires distinct even parts",
        ));
    }
    let arms: Vec<usize> = mu.parts().iter().map(|&p| p / 2).collect();
    let m = arms.len();
    if m == 0 {
        return Ok(Partition::empty());
    }
    let mut rows: Vec<usize> = (0..m).map(|i| arms[i] + i).collect();
    let total_rows = arms[0] + 1; // λ'_1 = b_1 + 1 with b_1 = a_1
    for i in m + 1..=total_rows {
        rows.push((1..=m).filter(|&j| arms[j - 1] + j >= i).count());
    }
    Ok(Partition::new(rows).expect("hook refill yields a partition"))
}
