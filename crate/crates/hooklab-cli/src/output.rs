//! Output rendering. Everything printed here is deterministic: wall-clock
//! timings are zeroed unless `--timings` was passed, and JSON keys are
//! emitted in sorted order.

use clap::ValueEnum;
use hooklab_core::identity::VerificationReport;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Renders one report (plain `verify`) or a suite of them.
pub fn render_reports(
    reports: &[VerificationReport],
    format: Format,
    timings: bool,
    suite_order: Option<usize>,
) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            if suite_order.is_some() {
                for r in reports {
                    let time = if timings {
                        format!("  [{} ms]", r.elapsed_ms)
                    } else {
                        String::new()
                    };
                    out.push_str(&format!(
                        "{:4}  {} (order {}){}\n",
                        r.status(),
                        r.identity,
                        r.order,
                        time
                    ));
                    if let Some(f) = &r.first_failure {
                        out.push_str(&format!(
                            "      first failure at q^{}: lhs {}, rhs {}, delta {}\n",
                            f.q_order, f.lhs, f.rhs, f.delta
                        ));
                    }
                }
                let failed = reports.iter().filter(|r| !r.passed).count();
                out.push_str(&format!(
                    "{} checks, {} failed\n",
                    reports.len(),
                    failed
                ));
            } else {
                for r in reports {
                    out.push_str(&r.to_text(timings));
                }
            }
            out
        }
        Format::Json => {
            let body: Vec<serde_json::Value> =
                reports.iter().map(|r| r.to_json(timings)).collect();
            let doc = match suite_order {
                Some(order) => {
                    let status = if reports.iter().all(|r| r.passed) {
                        "pass"
                    } else {
                        "fail"
                    };
                    serde_json::json!({
                        "order": order,
                        "status": status,
                        "results": body,
                    })
                }
                None => body.into_iter().next().unwrap_or(serde_json::Value::Null),
            };
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
        Format::Csv => {
            let mut out =
                String::from("identity,order,status,first_failure_q,lhs,rhs,delta,elapsed_ms\n");
            for r in reports {
                let (q, lhs, rhs, delta) = match &r.first_failure {
                    Some(f) => (
                        f.q_order.to_string(),
                        f.lhs.to_string(),
                        f.rhs.to_string(),
                        f.delta.to_string(),
                    ),
                    None => Default::default(),
                };
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    csv_field(&r.identity),
                    r.order,
                    r.status(),
                    q,
                    csv_field(&lhs),
                    csv_field(&rhs),
                    csv_field(&delta),
                    if timings { r.elapsed_ms } else { 0 },
                ));
            }
            out
        }
    }
}

/// Aligned text, plain JSON array, or CSV with a header row.
pub fn print_rows(header: &[&str], rows: &[Vec<String>], format: Format) {
    match format {
        Format::Text => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: Vec<String>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let header: Vec<String> = header.iter().map(ToString::to_string).collect();
            println!("{}", line(header).trim_end());
            for row in rows {
                println!("{}", line(row.clone()).trim_end());
            }
        }
        Format::Json => {
            let docs: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let map: serde_json::Map<String, serde_json::Value> = header
                        .iter()
                        .zip(row)
                        .map(|(k, v)| ((*k).to_string(), serde_json::Value::String(v.clone())))
                        .collect();
                    serde_json::Value::Object(map)
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&docs).unwrap());
        }
        Format::Csv => {
            println!("{}", header.join(","));
            for row in rows {
                let quoted: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
                println!("{}", quoted.join(","));
            }
        }
    }
}

// RFC-style quoting: wrap fields containing separators or quotes.
fn csv_field(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
