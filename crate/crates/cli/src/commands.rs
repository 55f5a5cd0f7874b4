use fcgf_core::catalog::{Catalog, Family};
use fcgf_core::oracle::{
    fc_counts, fc_involution_counts, graph, within_desk_scale, AlternatingQuery, Column, CountTable, OracleError, Shape,
    DESK_MAX_GENERATORS, DESK_MAX_LENGTH,
};
use fcgf_core::series::TruncationContext;
use fcgf_core::verify::{checks_in, reproduce_table, run_checks, Bounds, CheckReport, Config, Status, Summary};
use serde_json::json;

use crate::render::{print_columns, print_csv, print_json, CoeffList};
use crate::{Format, OracleArgs, SeriesArgs, ShapeKind, TableArgs, VerifyArgs};

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn resource(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

type Outcome = Result<u8, CliError>;

/// Extra q-window tried in turn when the requested coefficients are not
/// known up to `qmax`.
const HEADROOM: [i64; 3] = [16, 48, 112];

pub fn series(a: &SeriesArgs, format: Format) -> Outcome {
    let (lo, hi) = a.n;
    let mut lists = Vec::new();
    let mut complete = false;
    for extra in HEADROOM {
        let base = TruncationContext::for_report(hi, a.qmax + extra);
        let q_min = a.qmin.unwrap_or(base.q_min.min(Bounds::default().identity_q_min));
        let ctx = TruncationContext::new(hi, base.q_max, q_min).map_err(|e| CliError::usage(e.to_string()))?;
        let cat = Catalog::new(ctx);
        let s = match (a.family, a.special, a.aux) {
            (Some(ty), _, _) => cat.gf(if a.inv { Family::inv(ty) } else { Family::all(ty) }),
            (_, Some(name), _) => cat.special(name),
            (_, _, Some(name)) => cat.aux(name),
            _ => return Err(CliError::usage("one of --family, --special, --aux is required")),
        }
        .map_err(|e| CliError { code: 1, message: e.to_string() })?;
        complete = (lo..=hi).all(|n| s.coeff(n).precision().covers(a.qmax));
        lists = (lo..=hi).map(|n| CoeffList::new(n, s.coeff(n), a.qmax)).collect();
        if complete {
            break;
        }
    }
    match format {
        Format::Text if lo == hi => println!("{}", lists[0].text()),
        Format::Text => {
            for l in &lists {
                println!("x^{}: {}", l.x_degree, l.text());
            }
        }
        Format::Json => print_json(&lists.iter().map(|l| l.json()).collect::<Vec<_>>()),
        Format::Csv => print_csv(&["x_degree", "q_exponent", "value"], lists.iter().flat_map(|l| l.csv_rows())),
    }
    if complete {
        Ok(0)
    } else {
        eprintln!("fcgf: some coefficients are not known up to q^{}; shown as far as known", a.qmax);
        Ok(4)
    }
}

fn oracle_error(e: OracleError) -> CliError {
    match e {
        OracleError::TooLarge(m) => CliError::resource(m),
        other => CliError::usage(other.to_string()),
    }
}

pub fn oracle(a: &OracleArgs, format: Format) -> Outcome {
    let (name, size, table) = match (a.family, a.alternating) {
        (Some(ty), _) => {
            if a.first != Column::Any || a.last != Column::Any || a.full_support {
                return Err(CliError::usage("--first, --last and --full-support apply to --alternating"));
            }
            let fam = Family::all(ty);
            let k = fam.group_index(a.n).ok_or_else(|| CliError::usage(format!("{ty} has no group at x^{}", a.n)))?;
            let g = graph(ty, k).map_err(oracle_error)?;
            check_scale(g.size(), a)?;
            let t = if a.involutions { fc_involution_counts(&g, a.lmax) } else { fc_counts(&g, a.lmax) };
            (g.name().to_string(), g.size(), t.map_err(oracle_error)?)
        }
        (_, Some(kind)) => {
            let shape = match kind {
                ShapeKind::Path => Shape::Path(a.n),
                ShapeKind::Cycle => Shape::Cycle(a.n),
            };
            check_scale(a.n, a)?;
            let q = AlternatingQuery::new(shape).columns(a.first, a.last).self_dual(a.involutions).full_support(a.full_support);
            (format!("{kind:?} {}", a.n).to_lowercase(), a.n, q.count(a.lmax).map_err(oracle_error)?)
        }
        _ => return Err(CliError::usage("one of --family, --alternating is required")),
    };
    print_counts(&name, size, &table, format);
    Ok(0)
}

fn check_scale(generators: usize, a: &OracleArgs) -> Result<(), CliError> {
    if a.force || within_desk_scale(generators, a.lmax) {
        Ok(())
    } else {
        Err(CliError::resource(format!(
            "{generators} generators up to length {}: beyond {DESK_MAX_GENERATORS} generators or length {DESK_MAX_LENGTH}; pass --force to run anyway",
            a.lmax
        )))
    }
}

fn print_counts(graph: &str, size: usize, table: &CountTable, format: Format) {
    match format {
        Format::Text => println!("{table}"),
        Format::Json => print_json(&json!({ "graph": graph, "generators": size, "lmax": table.lmax(), "counts": table })),
        Format::Csv => print_csv(
            &["length", "count"],
            table.as_slice().iter().enumerate().map(|(l, c)| [l.to_string(), c.to_string()]),
        ),
    }
}

pub fn verify(a: &VerifyArgs, format: Format) -> Outcome {
    let d = Bounds::default();
    let bounds = Bounds {
        identity_x_order: a.xorder.unwrap_or(d.identity_x_order),
        identity_q_max: a.qmax.unwrap_or(d.identity_q_max),
        identity_q_min: a.qmin.unwrap_or(d.identity_q_min),
        oracle_max_generators: a.max_generators.unwrap_or(d.oracle_max_generators),
        oracle_lmax: a.lmax.unwrap_or(d.oracle_lmax),
    };
    TruncationContext::new(bounds.identity_x_order, bounds.identity_q_max, bounds.identity_q_min)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let ids = if a.checks.is_empty() { checks_in(a.suite, &bounds) } else { a.checks.clone() };
    let reports = run_checks(&ids, &Config { bounds, fault: a.inject_fault });
    let summary = Summary::of(&reports);
    if let Some(path) = &a.report {
        let text = serde_json::to_string_pretty(&reports).expect("serializable reports");
        std::fs::write(path, text).map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    match format {
        Format::Text => {
            let rows: Vec<Vec<String>> = reports.iter().map(report_row).collect();
            print_columns(&rows);
            println!(
                "{} checks: {} pass, {} fail, {} skip, {} inconclusive ({} ms)",
                reports.len(),
                summary.pass,
                summary.fail,
                summary.skip,
                summary.inconclusive,
                summary.runtime_millis
            );
        }
        Format::Json => print_json(&reports),
        Format::Csv => print_csv(
            &["id", "status", "runtime_millis", "x_degree", "q_exponent", "expected", "got", "detail"],
            reports.iter().map(|r| {
                let d = r.discrepancy.as_ref();
                [
                    r.id.to_string(),
                    r.status.to_string(),
                    r.runtime_millis.to_string(),
                    d.map(|d| d.x_degree.to_string()).unwrap_or_default(),
                    d.map(|d| d.q_exponent.to_string()).unwrap_or_default(),
                    d.map(|d| d.expected.clone()).unwrap_or_default(),
                    d.map(|d| d.got.clone()).unwrap_or_default(),
                    r.detail.clone().unwrap_or_default(),
                ]
            }),
        ),
    }
    Ok(summary.exit_code() as u8)
}

fn report_row(r: &CheckReport) -> Vec<String> {
    let mut note = r.detail.clone().unwrap_or_default();
    if let Some(d) = &r.discrepancy {
        let at = format!("at x^{} q^{}: expected {}, got {}", d.x_degree, d.q_exponent, d.expected, d.got);
        note = if note.is_empty() { at } else { format!("{note}; {at}") };
    }
    vec![r.id.to_string(), r.status.to_string(), format!("{} ms", r.runtime_millis), note]
}

pub fn table(a: &TableArgs, format: Format) -> Outcome {
    let rep = reproduce_table(a.which);
    match format {
        Format::Text => {
            println!("{}: {}", a.which, a.which.title());
            let rows: Vec<Vec<String>> = rep
                .rows
                .iter()
                .map(|r| {
                    let mut row = vec![r.group.clone(), r.printed.clone(), r.status.to_string()];
                    if let Some(d) = &r.discrepancy {
                        row.push(format!("at q^{}: printed {}, computed {}", d.q_exponent, d.expected, d.got));
                    }
                    row
                })
                .collect();
            print_columns(&rows);
        }
        Format::Json => print_json(&rep),
        Format::Csv => print_csv(
            &["table", "group", "family", "n", "printed", "status", "q_exponent", "printed_value", "computed_value"],
            rep.rows.iter().map(|r| {
                let d = r.discrepancy.as_ref();
                [
                    a.which.to_string(),
                    r.group.clone(),
                    r.family.to_string(),
                    r.n.to_string(),
                    r.printed.clone(),
                    r.status.to_string(),
                    d.map(|d| d.q_exponent.to_string()).unwrap_or_default(),
                    d.map(|d| d.expected.clone()).unwrap_or_default(),
                    d.map(|d| d.got.clone()).unwrap_or_default(),
                ]
            }),
        ),
    }
    let failed = rep.rows.iter().any(|r| r.status == Status::Fail);
    Ok(if failed { 1 } else if rep.passed() { 0 } else { 4 })
}
