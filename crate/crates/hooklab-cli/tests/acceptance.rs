//! Acceptance battery. Every criterion is exact (oracle- or property-based)
//! and prints one pass/fail line; run with `--nocapture` to see them all.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hooklab_core::beck::{self, BivariateGf};
use hooklab_core::cells;
use hooklab_core::diagram;
use hooklab_core::families::{family_count, FamilySpec};
use hooklab_core::identity::{verify_builtin, Builtin};
use hooklab_core::kernel::{self, KernelSpec};
use hooklab_core::partition::{all_partitions, Partition};
use hooklab_core::poly::Poly;
use hooklab_core::rational::rat;

fn pt(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn report(number: usize, what: &str, pass: bool, elapsed: Duration) {
    println!(
        "criterion {number:2} [{}] {what} ({:.2}s)",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    assert!(pass, "criterion {number} failed: {what}");
}

#[test]
fn criterion_01_nonzero_symplectic_equinumerosity() {
    let started = Instant::now();
    let mut pass = true;
    for n in 0..=40 {
        // three independent routes: definition scan, direct generator,
        // predicate filter
        let syp0 = all_partitions(n).filter(cells::is_syp0_scan).count();
        let distinct_even = family_count(n, FamilySpec::DistinctEven);
        let two_mod_four = family_count(n, FamilySpec::PartsTwoMod4);
        pass &= syp0 == distinct_even && distinct_even == two_mod_four;
    }
    let elapsed = started.elapsed();
    pass &= elapsed < Duration::from_secs(60);
    report(1, "nonzero-symplectic counts to n=40", pass, elapsed);
}

#[test]
fn criterion_02_symplectic_orthogonal_linear_conjectures() {
    let started = Instant::now();
    let a = verify_builtin(Builtin::Conj62a, 25).unwrap();
    let b = verify_builtin(Builtin::Conj62b, 25).unwrap();
    let elapsed = started.elapsed();
    let pass = a.passed && b.passed && elapsed < Duration::from_secs(300);
    report(2, "linear content conjectures, symbolic t to order 25", pass, elapsed);
}

#[test]
fn criterion_03_squared_content_conjecture_and_specializations() {
    let started = Instant::now();
    let symbolic = verify_builtin(Builtin::Conj63a, 25).unwrap();
    let at_zero = verify_builtin(Builtin::Thm63b, 40).unwrap();
    let at_two = verify_builtin(Builtin::OvercubicT2, 40).unwrap();
    let elapsed = started.elapsed();
    let pass = symbolic.passed
        && at_zero.passed
        && at_two.passed
        && elapsed < Duration::from_secs(300);
    report(
        3,
        "squared content conjecture (symbolic 25; t=0 and t=2 to order 40)",
        pass,
        elapsed,
    );
}

#[test]
fn criterion_04_signed_ratio_sums_to_sixty() {
    let started = Instant::now();
    let ratio_sum = verify_builtin(Builtin::Thm62c, 60).unwrap();
    let signed = verify_builtin(Builtin::Cor63c, 60).unwrap();
    let mut pass = ratio_sum.passed && signed.passed;
    // the sign pattern: coefficient n is (-1)^{n/2} |syP0(n)| on even n, 0 on odd
    let series = kernel::lhs_series(&KernelSpec::CSP_OVER_H, 60);
    for n in 0..=60 {
        let count = family_count(n, FamilySpec::Syp0) as i64;
        let want = if n % 2 == 1 {
            0
        } else if (n / 2) % 2 == 0 {
            count
        } else {
            -count
        };
        pass &= series.coeff(n) == &Poly::constant_i64(want);
    }
    report(4, "content/hook ratio sums with sign pattern to order 60", pass, started.elapsed());
}

#[test]
fn criterion_05_squared_minus_one_kernel_to_sixty() {
    let started = Instant::now();
    let all_routes = verify_builtin(Builtin::Thm214, 60).unwrap();
    let mut pass = all_routes.passed;
    let series = kernel::lhs_series(&KernelSpec::CSP2_MINUS1_OVER_H2, 60);
    for n in 0..=60usize {
        let triangular = (1..=n).any(|k| k * (k + 1) / 2 == n) || n == 0;
        let want = if !triangular {
            0
        } else if n % 2 == 0 {
            1
        } else {
            -1
        };
        pass &= series.coeff(n) == &Poly::constant_i64(want);
    }
    report(5, "alternating triangular kernel to order 60", pass, started.elapsed());
}

#[test]
fn criterion_06_beck_companions_to_thirty() {
    let started = Instant::now();
    let mut pass = true;
    for n in 1..=30 {
        pass &= beck::verify_beck_1(n);
        pass &= beck::verify_beck_2(n);
    }
    // the derivative-of-series route reproduces the part totals
    let f = beck::total_parts_series(BivariateGf::SypZeroByParts, 30).unwrap();
    let e = beck::total_parts_series(BivariateGf::DistinctEvenByParts, 30).unwrap();
    for n in 0..=30 {
        pass &= f[n] == rat(beck::total_parts(n, FamilySpec::Syp0) as i64);
        pass &= e[n] == rat(beck::total_parts(n, FamilySpec::DistinctEven) as i64);
    }
    report(6, "Beck companions and derivative route to n=30", pass, started.elapsed());
}

#[test]
fn criterion_07_even_m2_rank_identity_to_forty() {
    let started = Instant::now();
    let r = beck::verify_eq_3_2(40).unwrap();
    report(7, "even M2-rank series vs enumeration to order 40", r.passed, started.elapsed());
}

#[test]
fn criterion_08_rank_parity_and_congruence() {
    let started = Instant::now();
    let parity = beck::parity_check(60);
    let congruence = beck::pnt_congruence_failures(40).unwrap();
    let pass = parity.violations == 0 && congruence.is_empty();
    report(8, "rank parity to n=60 and mod-2 congruence to order 40", pass, started.elapsed());
}

#[test]
fn criterion_09_bivariate_rank_identities() {
    let started = Instant::now();
    let lemma = beck::verify_lemma_4_1(12).unwrap();
    let derivative = beck::verify_cor_4_3(12).unwrap();
    let mut pass = lemma.passed && derivative.passed;
    // z = 1 counts distinct partitions; z = -1 gives the signed rank counts
    let g = beck::bivariate_gf(BivariateGf::DistinctByRank, 12).unwrap();
    let at_one = g.eval_coeffs(&rat(1));
    let at_minus_one = g.eval_coeffs(&rat(-1));
    let sigma = beck::sigma_coeffs(12).unwrap();
    for n in 0..=12 {
        pass &= at_one[n] == rat(family_count(n, FamilySpec::Distinct) as i64);
        pass &= at_minus_one[n] == rat(sigma[n]);
    }
    report(9, "bivariate rank identities to order 12 with specializations", pass, started.elapsed());
}

#[test]
fn criterion_10_hook_sums_equal_inversion_sums() {
    let started = Instant::now();
    let mut pass = true;
    for n in 0..=25 {
        for lam in all_partitions(n) {
            pass &= diagram::hook_sum(&lam)
                == diagram::inversion_sum(&diagram::bit_string(&lam));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x600C5EED);
    for _ in 0..1000 {
        let lam = random_partition(&mut rng, 200);
        pass &= diagram::hook_sum(&lam)
            == diagram::inversion_sum(&diagram::bit_string(&lam));
    }
    // published rows for n = 2, 3, 4
    let table: [(&[usize], &str, u64); 10] = [
        (&[2], "110", 3),
        (&[1, 1], "100", 3),
        (&[3], "1110", 6),
        (&[2, 1], "1010", 5),
        (&[1, 1, 1], "1000", 6),
        (&[4], "11110", 10),
        (&[3, 1], "10110", 8),
        (&[2, 2], "1100", 8),
        (&[2, 1, 1], "10010", 8),
        (&[1, 1, 1, 1], "10000", 10),
    ];
    for (parts, word, value) in table {
        let lam = pt(parts);
        let bits = diagram::bit_string(&lam);
        pass &= bits.to_string() == word;
        pass &= diagram::inversion_sum(&bits) == value;
        pass &= diagram::hook_sum(&lam) == value;
    }
    report(10, "hook sums vs binary inversion sums", pass, started.elapsed());
}

#[test]
fn criterion_11_xray_lists_and_staircase_triangle() {
    let started = Instant::now();
    let mut pass = true;
    for n in 0..=30 {
        let classes = diagram::xray_classes(n);
        pass &= classes.len() == family_count(n, FamilySpec::Distinct);
        for lam in all_partitions(n) {
            // shape: every computed x-ray is accepted by the refill validator
            pass &= diagram::phi(diagram::xray(&lam).trimmed()).is_ok();
        }
        if n <= 25 {
            for (xray, rep) in &classes {
                pass &= diagram::xray(rep).trimmed() == &xray[..];
            }
        }
    }
    let triangle = diagram::staircase_triangle(7).unwrap();
    let published: Vec<Vec<usize>> = vec![
        vec![1],
        vec![0, 2],
        vec![0, 1, 2],
        vec![0, 0, 3, 2],
        vec![0, 0, 3, 2, 2],
        vec![0, 0, 1, 6, 2, 2],
        vec![0, 0, 0, 7, 4, 2, 2],
    ];
    pass &= triangle == published;
    report(11, "x-ray classes, refill round trip, staircase triangle", pass, started.elapsed());
}

#[test]
fn criterion_12_hook_and_content_baselines() {
    let started = Instant::now();
    let no = verify_builtin(Builtin::NekrasovOkounkov, 20).unwrap();
    let stanley = verify_builtin(Builtin::Stanley, 20).unwrap();
    report(
        12,
        "hook-length and content baselines, symbolic t to order 20",
        no.passed && stanley.passed,
        started.elapsed(),
    );
}

#[test]
fn criterion_13_suite_output_is_deterministic() {
    let started = Instant::now();
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_hooklab"))
            .args(["suite", "--order", "20", "--jobs", jobs, "--format", "json"])
            .output()
            .expect("spawn hooklab")
    };
    let one = run("1");
    let eight = run("8");
    let pass = one.status.success()
        && eight.status.success()
        && one.stdout == eight.stdout
        && !one.stdout.is_empty();
    report(13, "suite JSON byte-identical across --jobs", pass, started.elapsed());
}

fn random_partition(rng: &mut StdRng, max_size: usize) -> Partition {
    let n = rng.gen_range(0..=max_size);
    let mut remaining = n;
    let mut cap = n.max(1);
    let mut parts = Vec::new();
    while remaining > 0 {
        let p = rng.gen_range(1..=remaining.min(cap));
        parts.push(p);
        remaining -= p;
        cap = p;
    }
    Partition::new(parts).unwrap()
}
