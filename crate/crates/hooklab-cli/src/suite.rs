//! The `suite` subcommand: every builtin identity plus the cross-check
//! battery, each producing a verification report. All checks are exact, so
//! the report list is identical across runs and thread counts.

use std::time::Instant;

use hooklab_core::beck::{self, BeckError, BivariateGf};
use hooklab_core::diagram::{self, DiagramError};
use hooklab_core::dsl;
use hooklab_core::families::{family_count, FamilySpec};
use hooklab_core::identity::{self, Builtin, FirstFailure, VerificationReport};
use hooklab_core::poly::Poly;
use hooklab_core::series::QSeries;

pub fn run(order: usize) -> Result<Vec<VerificationReport>, String> {
    let mut reports = Vec::new();

    for b in Builtin::ALL {
        reports.push(identity::verify_builtin(b, order).map_err(|e| e.to_string())?);
    }

    reports.push(beck_report(1, order));
    reports.push(beck_report(2, order));
    reports.push(d_totals_report("d_totals_syp0", BivariateGf::SypZeroByParts, FamilySpec::Syp0, order)?);
    reports.push(d_totals_report(
        "d_totals_distinct_even",
        BivariateGf::DistinctEvenByParts,
        FamilySpec::DistinctEven,
        order,
    )?);
    reports.push(beck::verify_eq_3_2(order).map_err(|e| e.to_string())?);
    reports.push(beck::verify_lemma_4_1(order).map_err(|e| e.to_string())?);
    reports.push(beck::verify_cor_4_3(order).map_err(|e| e.to_string())?);
    reports.extend(parity_reports(order));
    reports.push(pnt_report(order)?);
    reports.push(cross_check_report("sigma_enumeration", beck::sigma_coeffs(order), order)?);
    reports.push(cross_check_report("stilde_enumeration", beck::stilde_coeffs(order), order)?);
    reports.push(hook_sum_report(order.min(25)));
    reports.push(xray_count_report(order.min(25)));
    reports.push(xray_refill_report(order.min(25)));
    reports.push(triangle_report(order.min(10))?);

    for b in Builtin::ALL {
        if let Some(text) = b.dsl_text() {
            reports.push(dsl_report(b, text, order.min(15))?);
        }
    }

    Ok(reports)
}

fn int_series(order: usize, f: impl Fn(usize) -> i64) -> QSeries {
    QSeries::from_fn(order, |n| Poly::constant_i64(f(n)))
}

fn manual(name: &str, order: usize, failure: Option<FirstFailure>) -> VerificationReport {
    VerificationReport {
        identity: name.to_string(),
        order,
        passed: failure.is_none(),
        first_failure: failure,
        elapsed_ms: 0,
    }
}

fn int_failure(q_order: usize, lhs: i64, rhs: i64) -> FirstFailure {
    let lhs = Poly::constant_i64(lhs);
    let rhs = Poly::constant_i64(rhs);
    let delta = lhs.sub(&rhs);
    FirstFailure {
        q_order,
        lhs,
        rhs,
        delta,
    }
}

// Beck companions as series comparisons; the identities are for n ≥ 1, so
// both sides are zeroed at n = 0.
fn beck_report(which: u8, order: usize) -> VerificationReport {
    let started = Instant::now();
    let name = if which == 1 { "beck_1" } else { "beck_2" };
    let lhs = int_series(order, |n| {
        if n == 0 {
            return 0;
        }
        let sc = beck::total_parts(n, FamilySpec::Syp0) as i64;
        let se = beck::total_parts(n, FamilySpec::DistinctEven) as i64;
        if which == 1 {
            sc - se
        } else {
            sc - 2 * se
        }
    });
    let rhs = int_series(order, |n| {
        if n == 0 {
            return 0;
        }
        if which == 1 {
            2 * beck::count_even_one_repeat(n, false) as i64
                + beck::count_distinct_even_m2(n, beck::Parity::Even) as i64
        } else {
            beck::count_even_one_repeat(n, true) as i64
        }
    });
    VerificationReport::from_members(name, &[lhs, rhs], started)
}

fn d_totals_report(
    name: &str,
    which: BivariateGf,
    family: FamilySpec,
    order: usize,
) -> Result<VerificationReport, String> {
    let started = Instant::now();
    let series = beck::d_op(&beck::bivariate_gf(which, order).map_err(|e| e.to_string())?);
    let counted = int_series(order, |n| beck::total_parts(n, family) as i64);
    Ok(VerificationReport::from_members(
        name,
        &[series, counted],
        started,
    ))
}

fn parity_reports(order: usize) -> Vec<VerificationReport> {
    let started = Instant::now();
    // the statement is for positive n; both sides are zeroed at n = 0
    let (odd_seq, even_seq) = beck::exceptional_ranks(order);
    let odd_parity = int_series(order, |n| {
        if n == 0 {
            return 0;
        }
        (beck::distinct_rank_parity_counts(n).1 % 2) as i64
    });
    let odd_expected = int_series(order, |n| i64::from(odd_seq.contains(&n)));
    let even_parity = int_series(order, |n| {
        if n == 0 {
            return 0;
        }
        (beck::distinct_rank_parity_counts(n).0 % 2) as i64
    });
    let even_expected = int_series(order, |n| i64::from(even_seq.contains(&n)));
    vec![
        VerificationReport::from_members("parity_odd_rank", &[odd_parity, odd_expected], started),
        VerificationReport::from_members(
            "parity_even_rank",
            &[even_parity, even_expected],
            started,
        ),
    ]
}

// sigma(q), the distinct-parts product, and the pentagonal indicator must
// agree coefficient-wise mod 2.
fn pnt_report(order: usize) -> Result<VerificationReport, String> {
    let started = Instant::now();
    let [sigma, distinct, pentagonal] = beck::pnt_parities(order).map_err(|e| e.to_string())?;
    let members = [sigma, distinct, pentagonal]
        .map(|parities| int_series(order, |n| parities[n]));
    Ok(VerificationReport::from_members(
        "pnt_congruence",
        &members,
        started,
    ))
}

fn cross_check_report(
    name: &str,
    result: Result<Vec<i64>, BeckError>,
    order: usize,
) -> Result<VerificationReport, String> {
    match result {
        Ok(_) => Ok(manual(name, order, None)),
        Err(BeckError::CrossCheck {
            n,
            from_series,
            from_enumeration,
            ..
        }) => Ok(manual(
            name,
            order,
            Some(int_failure(n, from_series, from_enumeration)),
        )),
        Err(e) => Err(e.to_string()),
    }
}

fn hook_sum_report(max: usize) -> VerificationReport {
    for n in 0..=max {
        for p in hooklab_core::partition::all_partitions(n) {
            let hooks = diagram::hook_sum(&p);
            let inv = diagram::inversion_sum(&diagram::bit_string(&p));
            if hooks != inv {
                return manual(
                    "hook_sum_inversion",
                    max,
                    Some(int_failure(n, hooks as i64, inv as i64)),
                );
            }
        }
    }
    manual("hook_sum_inversion", max, None)
}

fn xray_count_report(max: usize) -> VerificationReport {
    let started = Instant::now();
    let classes = int_series(max, |n| diagram::xray_classes(n).len() as i64);
    let distinct = int_series(max, |n| family_count(n, FamilySpec::Distinct) as i64);
    VerificationReport::from_members("xray_class_counts", &[classes, distinct], started)
}

fn xray_refill_report(max: usize) -> VerificationReport {
    let started = Instant::now();
    let round_trips = int_series(max, |n| {
        diagram::xray_classes(n)
            .iter()
            .filter(|(x, rep)| {
                diagram::xray(rep).trimmed() == &x[..]
                    && rep.parts().windows(2).all(|w| w[0] > w[1])
            })
            .count() as i64
    });
    let classes = int_series(max, |n| diagram::xray_classes(n).len() as i64);
    VerificationReport::from_members("xray_refill_round_trip", &[round_trips, classes], started)
}

fn triangle_report(rows: usize) -> Result<VerificationReport, String> {
    let started = Instant::now();
    match diagram::staircase_triangle(rows) {
        Err(DiagramError::TriangleMismatch {
            n,
            by_xray,
            by_containment,
            ..
        }) => Ok(manual(
            "staircase_triangle",
            rows,
            Some(int_failure(n, by_xray as i64, by_containment as i64)),
        )),
        Err(e) => Err(e.to_string()),
        Ok(triangle) => {
            let sums = QSeries::from_fn(rows, |n| {
                Poly::constant_i64(if n == 0 {
                    1
                } else {
                    triangle[n - 1].iter().sum::<usize>() as i64
                })
            });
            let totals = int_series(rows, |n| family_count(n, FamilySpec::All) as i64);
            Ok(VerificationReport::from_members(
                "staircase_triangle",
                &[sums, totals],
                started,
            ))
        }
    }
}

// compile ∘ parse of a builtin's text must reproduce the hand-built series
fn dsl_report(b: Builtin, text: &str, order: usize) -> Result<VerificationReport, String> {
    let started = Instant::now();
    let compiled = dsl::compile(dsl::parse(text).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let built = identity::builtin_members(b, order).map_err(|e| e.to_string())?;
    let members = vec![
        built[0].clone(),
        built[1].clone(),
        compiled.lhs_series(order).map_err(|e| e.to_string())?,
        compiled.rhs_series(order).map_err(|e| e.to_string())?,
    ];
    Ok(VerificationReport::from_members(
        &format!("dsl_{}", b.name()),
        &members,
        started,
    ))
}
