//! Command-line front end: evaluate single intersection numbers, print
//! route tables, render the traffic map, cross-check all routes, and
//! list Catalan numbers, in ascii, csv, or json.
//!
//! Exit codes: 0 on success (for `verify`: all proven routes agree),
//! 1 when `verify` finds a disagreement, 2 on usage errors.

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use catalan_traffic::closed_form::{self, catalan};
use catalan_traffic::intersect::{self, KTable, KappaQuery};
use catalan_traffic::traffic::{self, classify, Bounds, CityPoint, PathCountGrid, Zone};
use catalan_traffic::verify::{cross_check, RouteReport};

/// Tables larger than this are unusual enough to deserve a note; they
/// are still computed.
const TABULATION_CEILING: u32 = 30;

#[derive(Parser)]
#[command(
    name = "catalan-traffic",
    version,
    about = "Top intersection numbers on the Grassmannian of lines, computed four independent ways",
    long_about = "Top intersection numbers kappa(a, b, n) on the Grassmannian of lines in \
                  P^(n+1), computed by exterior-algebra operators, a two-term recursion, two \
                  closed formulas, and constrained lattice-walk (\"Catalan traffic\") counts. \
                  The triangle K(m, n) = kappa(2m, n-m, n) carries the Catalan numbers on its \
                  diagonal."
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable text
    Ascii,
    /// Comma-separated records with a header row
    Csv,
    /// One object with `query` and `results`; big values as decimal strings
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Operator,
    Recursive,
    Simplified,
    DoubleSum,
    Traffic,
}

impl Route {
    fn label(self) -> &'static str {
        match self {
            Route::Operator => "operator",
            Route::Recursive => "recursive",
            Route::Simplified => "simplified",
            Route::DoubleSum => "double-sum",
            Route::Traffic => "traffic",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single kappa(a, b, n); requires a + 2b = 2n
    Kappa {
        /// Exponent of the first-order operator D1
        #[arg(long)]
        a: u32,
        /// Exponent of the second-order operator D2
        #[arg(long)]
        b: u32,
        /// Triangle row: the Grassmannian of lines in P^(n+1)
        #[arg(long)]
        n: u32,
    },
    /// Print the triangle K(m, n) for 0 <= m <= n <= n-max by one route
    #[command(long_about = "Print the triangle K(m, n) = kappa(2m, n-m, n) for \
                            0 <= m <= n <= n-max, computed by the chosen route. The ascii \
                            triangle is printed with n increasing downward and m increasing \
                            rightward.")]
    Table {
        /// Largest n to tabulate
        #[arg(long)]
        n_max: u32,
        /// Which computation route fills the table
        #[arg(long, value_enum)]
        route: Route,
    },
    /// Render the traffic city map with walk counts for rows 0..=n-max
    #[command(long_about = "Render the traffic city map with walk counts for rows 0..=n-max \
                            (ascii: n increasing upward like a map, m increasing rightward; \
                            ■ marks a road block, ~ the beach, parentheses a gate).")]
    Traffic {
        /// Highest row of the map
        #[arg(long)]
        n_max: u32,
    },
    /// Compute the triangle by every route and compare cell by cell
    Verify {
        /// Largest n of the compared triangle
        #[arg(long)]
        n_max: u32,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print the first Catalan numbers C_0, C_1, ...
    Catalan {
        /// How many to print (at least one)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Kappa { a, b, n } => cmd_kappa(cli.format, a, b, n),
        Command::Table { n_max, route } => cmd_table(cli.format, n_max, route),
        Command::Traffic { n_max } => cmd_traffic(cli.format, n_max),
        Command::Verify {
            n_max,
            inject_fault,
        } => cmd_verify(cli.format, n_max, inject_fault),
        Command::Catalan { count } => cmd_catalan(cli.format, count),
    }
}

fn note_if_large(n_max: u32) {
    if n_max > TABULATION_CEILING {
        eprintln!(
            "note: n-max {n_max} exceeds the usual tabulation ceiling of {TABULATION_CEILING}; \
             computing anyway, this may take a while"
        );
    }
}

// ---- kappa ----------------------------------------------------------------

fn cmd_kappa(format: Format, a: u32, b: u32, n: u32) -> ExitCode {
    let query = match KappaQuery::new(a, b, n) {
        Ok(query) => query,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    let value = intersect::kappa(&query);
    match format {
        Format::Ascii => emit(&format!("{value}\n")),
        Format::Csv => emit(&format!("a,b,n,value\n{a},{b},{n},{value}\n")),
        Format::Json => print_json(json!({
            "query": { "a": a, "b": b, "n": n },
            "results": [ { "value": value.to_string() } ],
        })),
    }
    ExitCode::SUCCESS
}

// ---- table ----------------------------------------------------------------

fn route_table(route: Route, n_max: u32) -> KTable {
    match route {
        Route::Operator => intersect::k_table_operator(n_max),
        Route::Recursive => {
            let rows = closed_form::k_recursive_triangle(n_max);
            KTable::from_fn(n_max, |m, n| rows[n as usize][m as usize].clone())
        }
        Route::Simplified => KTable::from_fn(n_max, |m, n| {
            closed_form::kappa_simplified(m, n).expect("cell is inside the triangle")
        }),
        Route::DoubleSum => KTable::from_fn(n_max, |m, n| {
            closed_form::kappa_double_sum(m, n).expect("cell is inside the triangle")
        }),
        Route::Traffic => {
            let grid = traffic::count_paths(Bounds::sufficient_for(n_max))
                .expect("the sufficient window contains the origin");
            KTable::from_fn(n_max, |m, n| {
                grid.count(CityPoint::new(i64::from(m), i64::from(n)))
                    .cloned()
                    .unwrap_or_default()
            })
        }
    }
}

fn cmd_table(format: Format, n_max: u32, route: Route) -> ExitCode {
    note_if_large(n_max);
    let table = route_table(route, n_max);
    match format {
        Format::Ascii => emit(&table_ascii(&table, route.label())),
        Format::Csv => emit(&table_csv(&table)),
        Format::Json => print_json(json!({
            "query": { "n_max": n_max, "route": route.label() },
            "results": table_records(&table),
        })),
    }
    ExitCode::SUCCESS
}

fn table_ascii(table: &KTable, route_label: &str) -> String {
    let n_max = table.n_max();
    let cell_width = table
        .cells()
        .map(|(_, _, value)| value.to_string().len())
        .chain(std::iter::once(n_max.to_string().len()))
        .max()
        .unwrap_or(1)
        + 2;
    let label_width = "n \\ m".len().max(n_max.to_string().len() + 1);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "K(m, n) by the {route_label} route for 0 <= m <= n <= {n_max} (n downward, m rightward)"
    );
    out.push('\n');
    let _ = write!(out, "{:>label_width$}", "n \\ m");
    for m in 0..=n_max {
        let _ = write!(out, "{m:>cell_width$}");
    }
    out.push('\n');
    for n in 0..=n_max {
        let _ = write!(out, "{n:>label_width$}");
        for value in table.row(n).expect("row exists") {
            let _ = write!(out, "{:>cell_width$}", value.to_string());
        }
        out.push('\n');
    }
    out
}

fn table_csv(table: &KTable) -> String {
    let mut out = String::from("m,n,value\n");
    for (m, n, value) in table.cells() {
        let _ = writeln!(out, "{m},{n},{value}");
    }
    out
}

fn table_records(table: &KTable) -> Vec<serde_json::Value> {
    table
        .cells()
        .map(|(m, n, value)| json!({ "m": m, "n": n, "value": value.to_string() }))
        .collect()
}

// ---- traffic --------------------------------------------------------------

fn cmd_traffic(format: Format, n_max: u32) -> ExitCode {
    note_if_large(n_max);
    let bounds = Bounds::sufficient_for(n_max);
    let grid = traffic::count_paths(bounds).expect("the sufficient window contains the origin");
    match format {
        Format::Ascii => emit(&traffic_ascii(&grid)),
        Format::Csv => emit(&traffic_csv(&grid)),
        Format::Json => print_json(json!({
            "query": { "n_max": n_max },
            "results": traffic_records(&grid),
        })),
    }
    ExitCode::SUCCESS
}

fn traffic_cell(grid: &PathCountGrid, p: CityPoint) -> String {
    match classify(p) {
        Zone::BeachForbidden => "~".to_owned(),
        Zone::RoadBlock => "■".to_owned(),
        Zone::Gate => format!("({})", grid.count(p).cloned().unwrap_or_default()),
        Zone::BelowLine | Zone::AboveLine => {
            grid.count(p).cloned().unwrap_or_default().to_string()
        }
    }
}

fn traffic_ascii(grid: &PathCountGrid) -> String {
    let bounds = grid.bounds();
    let cell_width = (bounds.m_min..=bounds.m_max)
        .flat_map(|m| {
            (bounds.n_min..=bounds.n_max)
                .map(move |n| traffic_cell(grid, CityPoint::new(m, n)).len())
                .chain(std::iter::once(m.to_string().len()))
        })
        .max()
        .unwrap_or(1)
        + 2;
    let label_width = "n \\ m".len().max(bounds.n_max.to_string().len() + 1);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "Catalan traffic walk counts, window {bounds} (n upward, m rightward)"
    );
    let _ = writeln!(out, "Legend: ■ road block, ~ beach, (c) walk count at a gate");
    out.push('\n');
    let _ = write!(out, "{:>label_width$}", "n \\ m");
    for m in bounds.m_min..=bounds.m_max {
        let _ = write!(out, "{m:>cell_width$}");
    }
    out.push('\n');
    for n in (bounds.n_min..=bounds.n_max).rev() {
        let _ = write!(out, "{n:>label_width$}");
        for m in bounds.m_min..=bounds.m_max {
            let _ = write!(out, "{:>cell_width$}", traffic_cell(grid, CityPoint::new(m, n)));
        }
        out.push('\n');
    }
    out
}

fn traffic_csv(grid: &PathCountGrid) -> String {
    let bounds = grid.bounds();
    let mut out = String::from("m,n,zone,value\n");
    for n in bounds.n_min..=bounds.n_max {
        for m in bounds.m_min..=bounds.m_max {
            let p = CityPoint::new(m, n);
            let zone = classify(p);
            match grid.count(p) {
                Some(count) => {
                    let _ = writeln!(out, "{m},{n},{},{count}", zone.label());
                }
                None => {
                    let _ = writeln!(out, "{m},{n},{},", zone.label());
                }
            }
        }
    }
    out
}

fn traffic_records(grid: &PathCountGrid) -> Vec<serde_json::Value> {
    let bounds = grid.bounds();
    let mut records = Vec::new();
    for n in bounds.n_min..=bounds.n_max {
        for m in bounds.m_min..=bounds.m_max {
            let p = CityPoint::new(m, n);
            records.push(json!({
                "m": m,
                "n": n,
                "zone": classify(p).label(),
                "value": grid.count(p).map(|count| count.to_string()),
            }));
        }
    }
    records
}

// ---- verify ---------------------------------------------------------------

fn cmd_verify(format: Format, n_max: u32, inject_fault: bool) -> ExitCode {
    note_if_large(n_max);
    let mut report = cross_check(n_max);
    if inject_fault {
        report.inject_disagreement();
    }
    match format {
        Format::Ascii => emit(&verify_ascii(&report)),
        Format::Csv => emit(&verify_csv(&report)),
        Format::Json => print_json(verify_json(&report)),
    }
    if report.proven_routes_agree() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn verify_ascii(report: &RouteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Cross-check of 5 routes on 0 <= m <= n <= {} ({} cells)",
        report.n_max,
        report.cells.len()
    );
    let _ = writeln!(out, "Orientation: {}", report.orientation_note);
    out.push('\n');
    if report.all_agree() {
        let _ = writeln!(out, "All five routes agree on every cell.");
    } else {
        let _ = writeln!(out, "Disagreements:");
        for cell in report.disagreeing_cells() {
            let _ = writeln!(
                out,
                "  ({}, {}): operator={} recursive={} simplified={} double-sum={} traffic={}",
                cell.m, cell.n, cell.operator, cell.recursive, cell.simplified, cell.double_sum,
                cell.traffic
            );
        }
    }
    out.push('\n');
    let _ = writeln!(out, "Pairwise agreement (agreeing cells / total):");
    for pair in &report.pairs {
        let _ = writeln!(
            out,
            "  {:<10} vs {:<10} {}/{}",
            pair.left.label(),
            pair.right.label(),
            pair.agreements,
            report.cells.len()
        );
    }
    out.push('\n');
    let verdict = if report.proven_routes_agree() {
        "AGREE"
    } else {
        "DISAGREE"
    };
    let _ = writeln!(
        out,
        "Verdict: {verdict} (operator, recursive, simplified, traffic)"
    );
    out
}

fn verify_csv(report: &RouteReport) -> String {
    let mut out = String::from("m,n,operator,recursive,simplified,double_sum,traffic,agree\n");
    for cell in &report.cells {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            cell.m,
            cell.n,
            cell.operator,
            cell.recursive,
            cell.simplified,
            cell.double_sum,
            cell.traffic,
            cell.agree
        );
    }
    out
}

fn verify_json(report: &RouteReport) -> serde_json::Value {
    let cells: Vec<serde_json::Value> = report
        .cells
        .iter()
        .map(|cell| {
            json!({
                "m": cell.m,
                "n": cell.n,
                "operator": cell.operator.to_string(),
                "recursive": cell.recursive.to_string(),
                "simplified": cell.simplified.to_string(),
                "double_sum": cell.double_sum.to_string(),
                "traffic": cell.traffic.to_string(),
                "agree": cell.agree,
            })
        })
        .collect();
    let pairs: Vec<serde_json::Value> = report
        .pairs
        .iter()
        .map(|pair| {
            json!({
                "left": pair.left.label(),
                "right": pair.right.label(),
                "agreements": pair.agreements,
                "disagreements": pair.disagreements,
            })
        })
        .collect();
    json!({
        "query": { "n_max": report.n_max },
        "results": cells,
        "summary": {
            "pairs": pairs,
            "proven_routes_agree": report.proven_routes_agree(),
            "all_agree": report.all_agree(),
        },
        "orientation_note": report.orientation_note,
    })
}

// ---- catalan --------------------------------------------------------------

fn cmd_catalan(format: Format, count: u32) -> ExitCode {
    let values: Vec<String> = (0..count).map(|n| catalan(n).to_string()).collect();
    match format {
        Format::Ascii => emit(&format!("{}\n", values.join(" "))),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, value) in values.iter().enumerate() {
                let _ = writeln!(out, "{n},{value}");
            }
            emit(&out);
        }
        Format::Json => print_json(json!({
            "query": { "count": count },
            "results": values,
        })),
    }
    ExitCode::SUCCESS
}

// ---- shared ---------------------------------------------------------------

/// Writes to stdout. A consumer that stops reading (`head`, `grep -q`)
/// closes the pipe mid-stream; that ends the program quietly instead of
/// surfacing as a panic.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(err) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if err.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: failed writing to stdout: {err}");
        std::process::exit(1);
    }
}

fn print_json(value: serde_json::Value) {
    let mut text =
        serde_json::to_string_pretty(&value).expect("json values built here always serialize");
    text.push('\n');
    emit(&text);
}
