//! `hooklab`: verification suites, statistics tables, and reports.
//!
//! Exit codes: 0 = all checks pass, 1 = a verification failed (report
//! emitted), 2 = usage or parse error.

mod output;
mod suite;

use std::fs;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use hooklab_core::beck::{self, Parity};
use hooklab_core::diagram;
use hooklab_core::dsl;
use hooklab_core::families::{enumerate, family_count, FamilySpec};
use hooklab_core::identity::{self, Builtin};

use output::Format;

#[derive(Parser)]
#[command(name = "hooklab", version, about = "Exact verification of partition statistics and q-series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a builtin identity or an identity file
    Verify {
        /// Builtin name (e.g. thm_6_3b) or path to an identity file
        #[arg(long)]
        identity: String,
        /// Truncation order; defaults to 30 for t-symbolic identities, 60 otherwise
        #[arg(long)]
        order: Option<usize>,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Record wall-clock time in reports (off by default so output is reproducible)
        #[arg(long)]
        timings: bool,
    },
    /// Count partitions of each n ≤ max in a family
    Count {
        /// all | distinct | distinct-even | parts-2-mod-4 | self-conjugate |
        /// even-parts-one-repeat | syp0 | syp-pm1 | contained-in-staircase(R) |
        /// maximal-in-staircase(R)
        #[arg(long)]
        family: String,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Per-partition diagram statistics for all n ≤ max
    Stats {
        #[arg(long, value_enum)]
        stat: StatKind,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Rank-parity check against the exceptional sequences
    Parity {
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Beck part-count companion identities
    Beck {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Counting triangles
    Table {
        #[arg(long, value_enum)]
        triangle: TriangleKind,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run every builtin identity plus the cross-check battery
    Suite {
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatKind {
    Hooksum,
    Bitstring,
    Xray,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TriangleKind {
    MaximalStaircase,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Verify {
            identity,
            order,
            jobs,
            format,
            timings,
        } => {
            set_jobs(jobs)?;
            cmd_verify(&identity, order, format, timings)
        }
        Command::Count { family, max, format } => cmd_count(&family, max, format),
        Command::Stats { stat, max, format } => Ok(cmd_stats(stat, max, format)),
        Command::Parity { max, format } => Ok(cmd_parity(max, format)),
        Command::Beck { which, max, format } => Ok(cmd_beck(which, max, format)),
        Command::Table {
            triangle: TriangleKind::MaximalStaircase,
            rows,
            format,
        } => Ok(cmd_table(rows, format)),
        Command::Suite {
            order,
            jobs,
            format,
            timings,
        } => {
            set_jobs(jobs)?;
            cmd_suite(order, format, timings)
        }
    }
}

fn set_jobs(jobs: Option<usize>) -> Result<(), String> {
    let Some(jobs) = jobs else { return Ok(()) };
    if jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| format!("thread pool: {e}"))
}

fn cmd_verify(
    identity: &str,
    order: Option<usize>,
    format: Format,
    timings: bool,
) -> Result<i32, String> {
    let report = if let Some(builtin) = Builtin::parse(identity) {
        let order = order.unwrap_or_else(|| builtin.default_order());
        identity::verify_builtin(builtin, order).map_err(|e| e.to_string())?
    } else if Path::new(identity).is_file() {
        let text =
            fs::read_to_string(identity).map_err(|e| format!("cannot read {identity}: {e}"))?;
        let ast = dsl::parse(&text).map_err(|e| format!("{identity}: {e}"))?;
        let symbolic = dsl::uses_t(&ast);
        let compiled = dsl::compile(ast).map_err(|e| format!("{identity}: {e}"))?;
        let name = Path::new(identity)
            .file_stem()
            .map_or_else(|| identity.to_string(), |s| s.to_string_lossy().into_owned());
        let order = order.unwrap_or(if symbolic { 30 } else { 60 });
        identity::verify_compiled(&name, &compiled, order).map_err(|e| e.to_string())?
    } else {
        let names: Vec<&str> = Builtin::ALL.iter().map(|b| b.name()).collect();
        return Err(format!(
            "unknown identity `{identity}`; builtins are {} (or pass a file path)",
            names.join(", ")
        ));
    };
    print!("{}", output::render_reports(std::slice::from_ref(&report), format, timings, None));
    Ok(i32::from(!report.passed))
}

fn cmd_count(family: &str, max: usize, format: Format) -> Result<i32, String> {
    let spec = FamilySpec::parse(family).ok_or_else(|| {
        format!(
            "unknown family `{family}`; expected all, distinct, distinct-even, parts-2-mod-4, \
             self-conjugate, even-parts-one-repeat, syp0, syp-pm1, \
             contained-in-staircase(R) or maximal-in-staircase(R)"
        )
    })?;
    let counts: Vec<usize> = (0..=max).map(|n| family_count(n, spec)).collect();
    match format {
        Format::Text => {
            println!("{:>4}  count", "n");
            for (n, c) in counts.iter().enumerate() {
                println!("{n:>4}  {c}");
            }
        }
        Format::Json => {
            let doc = serde_json::json!({
                "family": spec.to_string(),
                "max": max,
                "counts": counts,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Csv => {
            println!("n,count");
            for (n, c) in counts.iter().enumerate() {
                println!("{n},{c}");
            }
        }
    }
    Ok(0)
}

fn cmd_stats(stat: StatKind, max: usize, format: Format) -> i32 {
    // x-ray lists serialize as genuine JSON arrays
    if stat == StatKind::Xray && format == Format::Json {
        let docs: Vec<serde_json::Value> = (0..=max)
            .flat_map(|n| enumerate(n, FamilySpec::All).map(move |p| (n, p)))
            .map(|(n, p)| {
                let x = diagram::xray(&p);
                serde_json::json!({
                    "n": n,
                    "partition": p.to_string(),
                    "xray": x.trimmed(),
                    "length": x.len_nonzero(),
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&docs).unwrap());
        return 0;
    }
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut all_ok = true;
    for n in 0..=max {
        for p in enumerate(n, FamilySpec::All) {
            let row = match stat {
                StatKind::Hooksum => {
                    let w = diagram::bit_string(&p);
                    let inv = diagram::inversion_sum(&w);
                    let hooks = diagram::hook_sum(&p);
                    all_ok &= inv == hooks;
                    vec![
                        n.to_string(),
                        p.to_string(),
                        w.to_string(),
                        inv.to_string(),
                        hooks.to_string(),
                        (inv == hooks).to_string(),
                    ]
                }
                StatKind::Bitstring => {
                    let w = diagram::bit_string(&p);
                    vec![
                        n.to_string(),
                        p.to_string(),
                        w.to_string(),
                        w.zeros().to_string(),
                        w.len().to_string(),
                    ]
                }
                StatKind::Xray => {
                    let x = diagram::xray(&p);
                    let trimmed: Vec<String> =
                        x.trimmed().iter().map(usize::to_string).collect();
                    vec![
                        n.to_string(),
                        p.to_string(),
                        format!("({})", trimmed.join(",")),
                        x.len_nonzero().to_string(),
                    ]
                }
            };
            rows.push(row);
        }
    }
    let header: &[&str] = match stat {
        StatKind::Hooksum => &["n", "partition", "bitstring", "inversion_sum", "hook_sum", "ok"],
        StatKind::Bitstring => &["n", "partition", "bitstring", "zeros", "length"],
        StatKind::Xray => &["n", "partition", "xray", "length"],
    };
    output::print_rows(header, &rows, format);
    i32::from(!all_ok)
}

fn cmd_parity(max: usize, format: Format) -> i32 {
    let report = beck::parity_check(max);
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.odd_count.to_string(),
                r.even_count.to_string(),
                r.odd_exceptional.to_string(),
                r.even_exceptional.to_string(),
                r.ok.to_string(),
            ]
        })
        .collect();
    let header = &[
        "n",
        "odd_count",
        "even_count",
        "odd_exceptional",
        "even_exceptional",
        "ok",
    ];
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "max": max,
                "violations": report.violations,
                "rows": rows_json(header, &rows),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        _ => {
            output::print_rows(header, &rows, format);
            if format == Format::Text {
                println!("violations: {}", report.violations);
            }
        }
    }
    i32::from(report.violations > 0)
}

fn cmd_beck(which: u8, max: usize, format: Format) -> i32 {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut all_ok = true;
    for n in 1..=max {
        let sc = beck::total_parts(n, FamilySpec::Syp0);
        let se = beck::total_parts(n, FamilySpec::DistinctEven);
        let row = if which == 1 {
            let excess = sc as i64 - se as i64;
            let repeat2 = 2 * beck::count_even_one_repeat(n, false) as i64;
            let even_m2 = beck::count_distinct_even_m2(n, Parity::Even) as i64;
            let ok = excess == repeat2 + even_m2;
            all_ok &= ok;
            vec![
                n.to_string(),
                sc.to_string(),
                se.to_string(),
                excess.to_string(),
                repeat2.to_string(),
                even_m2.to_string(),
                ok.to_string(),
            ]
        } else {
            let excess = sc as i64 - 2 * se as i64;
            let weighted = beck::count_even_one_repeat(n, true) as i64;
            let ok = excess == weighted;
            all_ok &= ok;
            vec![
                n.to_string(),
                sc.to_string(),
                se.to_string(),
                excess.to_string(),
                weighted.to_string(),
                ok.to_string(),
            ]
        };
        rows.push(row);
    }
    let header: &[&str] = if which == 1 {
        &["n", "parts_syp0", "parts_distinct_even", "excess", "two_x_one_repeat", "even_m2", "ok"]
    } else {
        &["n", "parts_syp0", "parts_distinct_even", "excess", "weighted_one_repeat", "ok"]
    };
    output::print_rows(header, &rows, format);
    i32::from(!all_ok)
}

fn cmd_table(rows: usize, format: Format) -> i32 {
    match diagram::staircase_triangle(rows) {
        Ok(triangle) => {
            let table: Vec<Vec<String>> = triangle
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut out = vec![(i + 1).to_string()];
                    out.extend(row.iter().map(usize::to_string));
                    out
                })
                .collect();
            match format {
                Format::Text => {
                    for row in &table {
                        let (n, counts) = row.split_first().unwrap();
                        println!("{n:>3}: {}", counts.join(", "));
                    }
                }
                Format::Json => {
                    let doc: Vec<serde_json::Value> = triangle
                        .iter()
                        .enumerate()
                        .map(|(i, row)| serde_json::json!({"n": i + 1, "counts": row}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Csv => {
                    for row in &table {
                        println!("{}", row.join(","));
                    }
                }
            }
            0
        }
        Err(e) => {
            eprintln!("{e}");
            1
        }
    }
}

fn cmd_suite(order: usize, format: Format, timings: bool) -> Result<i32, String> {
    let reports = suite::run(order).map_err(|e| e.to_string())?;
    let all_pass = reports.iter().all(|r| r.passed);
    print!(
        "{}",
        output::render_reports(&reports, format, timings, Some(order))
    );
    Ok(i32::from(!all_pass))
}

fn rows_json(header: &[&str], rows: &[Vec<String>]) -> Vec<serde_json::Value> {
    rows.iter()
        .map(|row| {
            let map: serde_json::Map<String, serde_json::Value> = header
                .iter()
                .zip(row)
                .map(|(k, v)| ((*k).to_string(), serde_json::Value::String(v.clone())))
                .collect();
            serde_json::Value::Object(map)
        })
        .collect()
}
