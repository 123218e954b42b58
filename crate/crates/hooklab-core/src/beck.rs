//! Beck-type part-count statistics and rank-parity machinery.
//!
//! Counting operations enumerate partitions directly; the series operations
//! expand bivariate generating functions (coefficients polynomial in the
//! part-count or rank variable `z`) and cross-check them against the counts.
//! The `D` operator is formal z-differentiation followed by `z := 1`, applied
//! to truncated series; no analytic limits are involved.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::families::{enumerate, FamilySpec};
use crate::identity::VerificationReport;
use crate::partition::{distinct_even_partitions, distinct_partitions, Partition};
use crate::poly::Poly;
use crate::rational::{rat, ratio, Rational};
use crate::series::{pochhammer, PochBase, PochKind, QSeries, SeriesError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BeckError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("{what} cross-check failed at n={n}: series gives {from_series}, enumeration gives {from_enumeration}")]
    CrossCheck {
        what: &'static str,
        n: usize,
        from_series: i64,
        from_enumeration: i64,
    },
    #[error("coefficient of q^{n} is not an integer")]
    NonIntegerCoefficient { n: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn matches(self, value: i64) -> bool {
        match self {
            Parity::Even => value.rem_euclid(2) == 0,
            Parity::Odd => value.rem_euclid(2) == 1,
        }
    }
}

/// Total number of parts over all partitions of `n` in the family.
pub fn total_parts(n: usize, family: FamilySpec) -> usize {
    enumerate(n, family).map(|p| p.len()).sum()
}

/// Partitions of `n` into even parts with exactly one part value repeated.
/// Weighted: weight 2 unless the repeated value is the smallest part.
pub fn count_even_one_repeat(n: usize, weighted: bool) -> usize {
    enumerate(n, FamilySpec::EvenPartsOneRepeat)
        .map(|p| {
            if !weighted {
                return 1;
            }
            let repeated = repeated_value(&p);
            let smallest = *p.parts().last().unwrap();
            if repeated == smallest {
                1
            } else {
                2
            }
        })
        .sum()
}

fn repeated_value(p: &Partition) -> usize {
    p.parts()
        .windows(2)
        .find(|w| w[0] == w[1])
        .map(|w| w[0])
        .expect("family guarantees a repeat")
}

/// Partitions of `n` into distinct even parts with the given M2-rank parity.
/// The empty partition counts as even.
pub fn count_distinct_even_m2(n: usize, parity: Parity) -> usize {
    distinct_even_partitions(n)
        .filter(|p| parity.matches(p.m2_rank().unwrap_or(0)))
        .count()
}

/// Distinct partitions of `n` split by rank parity, as `(even, odd)`.
pub fn distinct_rank_parity_counts(n: usize) -> (usize, usize) {
    let mut even = 0;
    let mut odd = 0;
    for p in distinct_partitions(n) {
        if p.rank().rem_euclid(2) == 0 {
            even += 1;
        } else {
            odd += 1;
        }
    }
    (even, odd)
}

/// Distinct-even partitions of `n` split by M2-rank parity, as `(even, odd)`.
pub fn distinct_even_m2_parity_counts(n: usize) -> (usize, usize) {
    let mut even = 0;
    let mut odd = 0;
    for p in distinct_even_partitions(n) {
        if p.m2_rank().unwrap_or(0).rem_euclid(2) == 0 {
            even += 1;
        } else {
            odd += 1;
        }
    }
    (even, odd)
}

/// First Beck companion: the part-count excess of the nonzero-symplectic
/// family over distinct even parts equals twice the one-repeat count plus
/// the even-M2-rank count.
pub fn verify_beck_1(n: usize) -> bool {
    let excess = total_parts(n, FamilySpec::Syp0) as i64
        - total_parts(n, FamilySpec::DistinctEven) as i64;
    excess
        == 2 * count_even_one_repeat(n, false) as i64
            + count_distinct_even_m2(n, Parity::Even) as i64
}

/// Second Beck companion: the doubled excess equals the weighted one-repeat
/// count.
pub fn verify_beck_2(n: usize) -> bool {
    let excess = total_parts(n, FamilySpec::Syp0) as i64
        - 2 * total_parts(n, FamilySpec::DistinctEven) as i64;
    excess == count_even_one_repeat(n, true) as i64
}

/// Which bivariate generating function to expand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BivariateGf {
    /// Nonzero-symplectic partitions by number of parts:
    /// `Σ_{m≥1} z^{m+1} q^{m²+m} / (zq²;q²)_m` (the empty partition is not
    /// included).
    SypZeroByParts,
    /// Distinct even parts by number of parts:
    /// `Σ_{m≥0} z^m q^{m²+m} / (q²;q²)_m`.
    DistinctEvenByParts,
    /// Distinct parts by rank: `Σ_{n≥0} q^{n(n+1)/2} / (zq;q)_n`.
    DistinctByRank,
}

/// Expands the chosen bivariate series; coefficient polynomials live in `z`
/// and their degree is capped at the truncation order.
pub fn bivariate_gf(which: BivariateGf, order: usize) -> Result<QSeries, SeriesError> {
    let mut acc = QSeries::zero(order);
    match which {
        BivariateGf::SypZeroByParts => {
            let mut m = 1usize;
            while m * m + m <= order {
                let poch = pochhammer(PochBase::Z, false, 2, 2, PochKind::Finite(m), order)?;
                let term = poch
                    .inv()?
                    .scale_poly(&Poly::monomial(rat(1), m + 1))
                    .shifted(m * m + m);
                acc = acc.add(&term)?;
                m += 1;
            }
        }
        BivariateGf::DistinctEvenByParts => {
            let mut m = 0usize;
            while m * m + m <= order {
                let poch = pochhammer(PochBase::One, false, 2, 2, PochKind::Finite(m), order)?;
                let term = poch
                    .inv()?
                    .scale_poly(&Poly::monomial(rat(1), m))
                    .shifted(m * m + m);
                acc = acc.add(&term)?;
                m += 1;
            }
        }
        BivariateGf::DistinctByRank => {
            let mut n = 0usize;
            while n * (n + 1) / 2 <= order {
                let poch = pochhammer(PochBase::Z, false, 1, 1, PochKind::Finite(n), order)?;
                let term = poch.inv()?.shifted(n * (n + 1) / 2);
                acc = acc.add(&term)?;
                n += 1;
            }
        }
    }
    check_z_cap(&acc)?;
    Ok(acc)
}

fn check_z_cap(s: &QSeries) -> Result<(), SeriesError> {
    let degree = s.max_coeff_degree();
    if degree > s.order() {
        return Err(SeriesError::ZDegreeCapExceeded {
            degree,
            cap: s.order(),
        });
    }
    Ok(())
}

/// `D f = (∂f/∂z)|_{z=1}` applied coefficient-wise.
pub fn d_op(series: &QSeries) -> QSeries {
    QSeries::from_fn(series.order(), |n| {
        Poly::constant(series.coeff(n).derivative().eval(&rat(1)))
    })
}

/// Part-count totals recovered through the series route: `D` applied to the
/// bivariate generating function.
pub fn total_parts_series(which: BivariateGf, order: usize) -> Result<Vec<Rational>, SeriesError> {
    Ok(d_op(&bivariate_gf(which, order)?).eval_coeffs(&rat(0)))
}

// sigma(q) = Σ_{n≥0} q^{n(n+1)/2} / (-q;q)_n
fn sigma_series(order: usize) -> Result<QSeries, SeriesError> {
    let mut acc = QSeries::zero(order);
    let mut n = 0usize;
    while n * (n + 1) / 2 <= order {
        let poch = pochhammer(PochBase::One, true, 1, 1, PochKind::Finite(n), order)?;
        acc = acc.add(&poch.inv()?.shifted(n * (n + 1) / 2))?;
        n += 1;
    }
    Ok(acc)
}

// sigma(q^2) = Σ_{n≥1} q^{n(n-1)} / (-q^2;q^2)_{n-1}
fn sigma_q2_series(order: usize) -> Result<QSeries, SeriesError> {
    let mut acc = QSeries::zero(order);
    let mut n = 1usize;
    while n * (n - 1) <= order {
        let poch = pochhammer(PochBase::One, true, 2, 2, PochKind::Finite(n - 1), order)?;
        acc = acc.add(&poch.inv()?.shifted(n * (n - 1)))?;
        n += 1;
    }
    Ok(acc)
}

fn integer_coeffs(series: &QSeries) -> Result<Vec<i64>, BeckError> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            c.as_constant()
                .filter(|r| r.denom() == &num_bigint::BigInt::from(1))
                .and_then(|r| r.numer().to_i64())
                .ok_or(BeckError::NonIntegerCoefficient { n })
        })
        .collect()
}

/// `S(n)`: distinct partitions of `n` with even rank minus those with odd
/// rank, from the series expansion, cross-checked against enumeration.
pub fn sigma_coeffs(order: usize) -> Result<Vec<i64>, BeckError> {
    let coeffs = integer_coeffs(&sigma_series(order)?)?;
    for (n, &s) in coeffs.iter().enumerate() {
        let (even, odd) = distinct_rank_parity_counts(n);
        let direct = even as i64 - odd as i64;
        if s != direct {
            return Err(BeckError::CrossCheck {
                what: "sigma",
                n,
                from_series: s,
                from_enumeration: direct,
            });
        }
    }
    Ok(coeffs)
}

/// `S̃(n)`: the distinct-even analogue with the M2-rank, cross-checked.
pub fn stilde_coeffs(order: usize) -> Result<Vec<i64>, BeckError> {
    let coeffs = integer_coeffs(&sigma_q2_series(order)?)?;
    for (n, &s) in coeffs.iter().enumerate() {
        let (even, odd) = distinct_even_m2_parity_counts(n);
        let direct = even as i64 - odd as i64;
        if s != direct {
            return Err(BeckError::CrossCheck {
                what: "stilde",
                n,
                from_series: s,
                from_enumeration: direct,
            });
        }
    }
    Ok(coeffs)
}

/// The two exceptional sequences `k(3k∓(-1)^k)/2`, `k ≥ 1`, up to `max`.
pub fn exceptional_ranks(max: usize) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let mut odd_seq = BTreeSet::new();
    let mut even_seq = BTreeSet::new();
    let mut k = 1i64;
    loop {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let for_odd = k * (3 * k - sign) / 2;
        let for_even = k * (3 * k + sign) / 2;
        if for_odd > max as i64 && for_even > max as i64 {
            break;
        }
        if for_odd <= max as i64 {
            odd_seq.insert(for_odd as usize);
        }
        if for_even <= max as i64 {
            even_seq.insert(for_even as usize);
        }
        k += 1;
    }
    (odd_seq, even_seq)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityRow {
    pub n: usize,
    pub odd_count: usize,
    pub even_count: usize,
    pub odd_exceptional: bool,
    pub even_exceptional: bool,
    pub ok: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityReport {
    pub rows: Vec<ParityRow>,
    pub violations: usize,
}

/// Checks, for every `n ≤ max`, that the parity of the odd-rank and
/// even-rank distinct-partition counts matches membership in the two
/// exceptional sequences.
pub fn parity_check(max: usize) -> ParityReport {
    let (odd_seq, even_seq) = exceptional_ranks(max);
    let rows: Vec<ParityRow> = (1..=max)
        .map(|n| {
            let (even_count, odd_count) = distinct_rank_parity_counts(n);
            let odd_exceptional = odd_seq.contains(&n);
            let even_exceptional = even_seq.contains(&n);
            let ok = (odd_count % 2 == 1) == odd_exceptional
                && (even_count % 2 == 1) == even_exceptional;
            ParityRow {
                n,
                odd_count,
                even_count,
                odd_exceptional,
                even_exceptional,
                ok,
            }
        })
        .collect();
    let violations = rows.iter().filter(|r| !r.ok).count();
    ParityReport { rows, violations }
}

// Σ_{k≥1} q^{mk}
fn geometric_tail(m: usize, order: usize) -> QSeries {
    QSeries::from_fn(order, |n| {
        if n > 0 && n % m == 0 {
            Poly::one()
        } else {
            Poly::zero()
        }
    })
}

/// Rogers-Fine specialization: the rank generating function equals
/// `Σ_n q^{n(3n+1)/2} (1+q^{2n+1}) ∏_{j=1}^n (z+q^j)/(1-zq^j)`.
pub fn verify_lemma_4_1(order: usize) -> Result<VerificationReport, SeriesError> {
    let started = std::time::Instant::now();
    let lhs = bivariate_gf(BivariateGf::DistinctByRank, order)?;
    let mut rhs = QSeries::zero(order);
    let z = Poly::var();
    let mut n = 0usize;
    while n * (3 * n + 1) / 2 <= order {
        let mut term = QSeries::one(order);
        for j in 1..=n {
            let numer = QSeries::monomial(order, 0, z.clone())
                .add(&QSeries::monomial(order, j, Poly::one()))?;
            let denom = QSeries::one(order).sub(&QSeries::monomial(order, j, z.clone()))?;
            term = term.mul(&numer)?.mul(&denom.inv()?)?;
        }
        let bracket = QSeries::one(order).add(&QSeries::monomial(
            order,
            2 * n + 1,
            Poly::one(),
        ))?;
        term = term.mul(&bracket)?.shifted(n * (3 * n + 1) / 2);
        rhs = rhs.add(&term)?;
        n += 1;
    }
    check_z_cap(&rhs)?;
    Ok(VerificationReport::from_members(
        "lemma_4_1",
        &[lhs, rhs],
        started,
    ))
}

/// Both displayed expressions for `D G(z,q)`, cross-checked against the
/// formal z-derivative of the rank series itself.
pub fn verify_cor_4_3(order: usize) -> Result<VerificationReport, SeriesError> {
    let started = std::time::Instant::now();

    // log-differentiation route
    let mut log_route = QSeries::zero(order);
    let mut n = 1usize;
    while n * (n + 1) / 2 <= order {
        let poch = pochhammer(PochBase::One, false, 1, 1, PochKind::Finite(n), order)?;
        let mut inner = QSeries::zero(order);
        for m in 1..=n {
            inner = inner.add(&geometric_tail(m, order))?;
        }
        log_route = log_route.add(&poch.inv()?.mul(&inner)?.shifted(n * (n + 1) / 2))?;
        n += 1;
    }

    // Rogers-Fine route
    let mut fine_route = QSeries::zero(order);
    let mut n = 1usize;
    while n * (3 * n + 1) / 2 <= order {
        let neg_poch = pochhammer(PochBase::One, true, 1, 1, PochKind::Finite(n), order)?;
        let poch = pochhammer(PochBase::One, false, 1, 1, PochKind::Finite(n), order)?;
        let mut inner = QSeries::zero(order);
        for j in 1..=n {
            let term = QSeries::one(order).add(&geometric_tail(2 * j, order).scale(&rat(2)))?;
            inner = inner.add(&term)?;
        }
        let bracket =
            QSeries::one(order).add(&QSeries::monomial(order, 2 * n + 1, Poly::one()))?;
        let term = neg_poch
            .mul(&poch.inv()?)?
            .mul(&inner)?
            .mul(&bracket)?
            .shifted(n * (3 * n + 1) / 2);
        fine_route = fine_route.add(&term)?;
        n += 1;
    }

    let derivative_route = d_op(&bivariate_gf(BivariateGf::DistinctByRank, order)?);
    Ok(VerificationReport::from_members(
        "cor_4_3",
        &[log_route, fine_route, derivative_route],
        started,
    ))
}

/// Coefficient-wise check of the even-M2-rank identity: one half of
/// `(sigma(q²) + (-q²;q²)_∞)` against direct enumeration. Any mismatch —
/// including the `n = 0` convention — surfaces as the first failure.
pub fn verify_eq_3_2(order: usize) -> Result<VerificationReport, SeriesError> {
    let started = std::time::Instant::now();
    let dist_even = pochhammer(PochBase::One, true, 2, 2, PochKind::Infinite, order)?;
    let lhs = sigma_q2_series(order)?
        .add(&dist_even)?
        .scale(&ratio(1, 2));
    let rhs = QSeries::from_fn(order, |n| {
        Poly::constant_i64(count_distinct_even_m2(n, Parity::Even) as i64)
    });
    Ok(VerificationReport::from_members(
        "eq_3_2",
        &[lhs, rhs],
        started,
    ))
}

/// Coefficient parities of `sigma(q)`, of the distinct-partition generating
/// function `(-q;q)_∞`, and of the two-sided pentagonal series, up to `max`.
pub fn pnt_parities(max: usize) -> Result<[Vec<i64>; 3], BeckError> {
    let sigma: Vec<i64> = integer_coeffs(&sigma_series(max)?)?
        .iter()
        .map(|c| c.rem_euclid(2))
        .collect();
    let distinct: Vec<i64> =
        integer_coeffs(&pochhammer(PochBase::One, true, 1, 1, PochKind::Infinite, max)?)?
            .iter()
            .map(|c| c.rem_euclid(2))
            .collect();
    let mut pentagonal = vec![0i64; max + 1];
    pentagonal[0] += 1; // m = 0
    let mut m = 1i64;
    loop {
        let a = m * (3 * m - 1) / 2;
        let b = m * (3 * m + 1) / 2;
        if a > max as i64 {
            break;
        }
        pentagonal[a as usize] += 1;
        if b <= max as i64 {
            pentagonal[b as usize] += 1;
        }
        m += 1;
    }
    for p in &mut pentagonal {
        *p = p.rem_euclid(2);
    }
    Ok([sigma, distinct, pentagonal])
}

/// Orders `n ≤ max` where the mod-2 congruence between the three series of
/// `pnt_parities` fails; empty means the congruence holds.
pub fn pnt_congruence_failures(max: usize) -> Result<Vec<usize>, BeckError> {
    let [sigma, distinct, pentagonal] = pnt_parities(max)?;
    Ok((0..=max)
        .filter(|&n| !(sigma[n] == distinct[n] && distinct[n] == pentagonal[n]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_parts_examples() {
        assert_eq!(total_parts(4, FamilySpec::Syp0), 3);
        assert_eq!(total_parts(4, FamilySpec::DistinctEven), 1);
        assert_eq!(total_parts(6, FamilySpec::Syp0), 7);
        assert_eq!(total_parts(0, FamilySpec::All), 0);
    }

    #[test]
    fn one_repeat_counts() {
        assert_eq!(count_even_one_repeat(4, false), 1);
        assert_eq!(count_even_one_repeat(6, false), 1);
        // (4,4), (4,2,2), (2,2,2,2): each repeated value is the smallest part
        assert_eq!(count_even_one_repeat(8, true), 3);
        assert_eq!(count_even_one_repeat(8, false), 3);
        // at n = 10 only (4,4,2) repeats a non-smallest part
        assert_eq!(count_even_one_repeat(10, false), 4);
        assert_eq!(count_even_one_repeat(10, true), 5);
    }

    #[test]
    fn m2_counts() {
        assert_eq!(count_distinct_even_m2(6, Parity::Even), 2);
        assert_eq!(count_distinct_even_m2(4, Parity::Even), 0);
        assert_eq!(count_distinct_even_m2(2, Parity::Odd), 0);
        assert_eq!(count_distinct_even_m2(0, Parity::Even), 1);
    }

    #[test]
    fn beck_identities_small() {
        assert!(verify_beck_1(4));
        assert!(verify_beck_1(6));
        assert!(verify_beck_2(6));
        for n in 1..=16 {
            assert!(verify_beck_1(n), "beck 1 at n={n}");
            assert!(verify_beck_2(n), "beck 2 at n={n}");
        }
    }

    #[test]
    fn bivariate_coefficients() {
        let f = bivariate_gf(BivariateGf::SypZeroByParts, 8).unwrap();
        // z^3 q^4 from the single 3-part partition
        assert_eq!(f.coeff(4), &Poly::monomial(rat(1), 3));
        assert_eq!(f.coeff(0), &Poly::zero());

        let e = bivariate_gf(BivariateGf::DistinctEvenByParts, 8).unwrap();
        assert_eq!(e.coeff(2), &Poly::monomial(rat(1), 1));
        assert_eq!(e.coeff(0), &Poly::one());

        let g = bivariate_gf(BivariateGf::DistinctByRank, 8).unwrap();
        assert_eq!(g.coeff(2), &Poly::monomial(rat(1), 1));
        // q^3: (3) has rank 2, (2,1) has rank 0
        assert_eq!(g.coeff(3), &Poly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn bivariate_counts_by_exponent() {
        for n in 0..=14 {
            let f = bivariate_gf(BivariateGf::SypZeroByParts, 14).unwrap();
            for k in 0..=n {
                let count = enumerate(n, FamilySpec::Syp0)
                    .filter(|p| p.len() == k && !p.is_empty())
                    .count();
                assert_eq!(
                    f.coeff(n).coeff(k),
                    rat(count as i64),
                    "F at n={n}, k={k}"
                );
            }
        }
    }

    #[test]
    fn d_operator_on_monomials() {
        // D(z^k q^n) = k q^n
        for k in 0..=5 {
            let s = QSeries::monomial(6, 3, Poly::monomial(rat(1), k));
            let d = d_op(&s);
            assert_eq!(d.coeff(3), &Poly::constant(rat(k as i64)));
        }
    }

    #[test]
    fn d_route_totals_match_enumeration() {
        let f_totals = total_parts_series(BivariateGf::SypZeroByParts, 12).unwrap();
        let e_totals = total_parts_series(BivariateGf::DistinctEvenByParts, 12).unwrap();
        for n in 0..=12 {
            assert_eq!(f_totals[n], rat(total_parts(n, FamilySpec::Syp0) as i64));
            assert_eq!(
                e_totals[n],
                rat(total_parts(n, FamilySpec::DistinctEven) as i64)
            );
        }
    }

    #[test]
    fn sigma_values() {
        let s = sigma_coeffs(10).unwrap();
        assert_eq!(s[0], 1);
        assert_eq!(s[2], -1);
        let st = stilde_coeffs(10).unwrap();
        assert_eq!(st[4], -1);
        assert_eq!(st[0], 1);
    }

    #[test]
    fn rank_sums_match_d_of_rank_series() {
        let d = d_op(&bivariate_gf(BivariateGf::DistinctByRank, 12).unwrap());
        for n in 0..=12usize {
            let direct: i64 = distinct_partitions(n).map(|p| p.rank()).sum();
            assert_eq!(d.coeff(n), &Poly::constant(rat(direct)), "n={n}");
        }
    }

    #[test]
    fn exceptional_sequences_start_correctly() {
        let (odd_seq, even_seq) = exceptional_ranks(40);
        assert_eq!(
            odd_seq.iter().copied().collect::<Vec<_>>(),
            vec![2, 5, 15, 22, 40]
        );
        assert_eq!(
            even_seq.iter().copied().collect::<Vec<_>>(),
            vec![1, 7, 12, 26, 35]
        );
    }

    #[test]
    fn parity_rows_small() {
        let report = parity_check(20);
        assert_eq!(report.violations, 0);
        // n = 5: odd-rank count 1 (odd), 5 in the odd sequence
        let row5 = &report.rows[4];
        assert_eq!(row5.odd_count, 1);
        assert!(row5.odd_exceptional);
        // n = 2: only (2), rank 1
        let row2 = &report.rows[1];
        assert_eq!((row2.even_count, row2.odd_count), (0, 1));
        // n = 1: only (1), rank 0, and 1 is in the even sequence
        let row1 = &report.rows[0];
        assert_eq!((row1.even_count, row1.odd_count), (1, 0));
        assert!(row1.even_exceptional);
    }

    #[test]
    fn lemma_4_1_small() {
        let report = verify_lemma_4_1(10).unwrap();
        assert!(report.passed, "{:?}", report.first_failure);
    }

    #[test]
    fn cor_4_3_small() {
        let report = verify_cor_4_3(12).unwrap();
        assert!(report.passed, "{:?}", report.first_failure);
        // coefficient of q^1 vanishes: the only distinct partition has rank 0
        let d = d_op(&bivariate_gf(BivariateGf::DistinctByRank, 4).unwrap());
        assert_eq!(d.coeff(1), &Poly::zero());
    }

    #[test]
    fn eq_3_2_small() {
        let report = verify_eq_3_2(12).unwrap();
        assert!(report.passed, "{:?}", report.first_failure);
    }

    #[test]
    fn pnt_congruence_small() {
        assert_eq!(pnt_congruence_failures(30).unwrap(), Vec::<usize>::new());
    }
}
