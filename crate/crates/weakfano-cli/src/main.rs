//! Command-line front end: classification sweeps, self-intersection numbers,
//! cone presentations, consistency suites, and pairing tables.
//!
//! All numbers are exact; rationals are printed as "p/q" (integers without a
//! denominator). Range flags accept an inclusive "lo..hi" or a single value.
//! Exit codes: 0 success, 1 failed check, 2 usage or parameter error.

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use weakfano::{anticanonical, blowup, classify, cone, fmt_rat, Family, Rat, Scenario};

#[derive(Parser)]
#[command(
    name = "weakfano",
    version,
    about = "Exact nef-cone and anti-canonical intersection arithmetic for double blow-ups"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sweep parameter ranges and emit a classification table
    Classify(ClassifyArgs),
    /// Compute (-K)^n for a single scenario
    Selfint(SelfintArgs),
    /// Print cone generators, the duality pairing, and the -K decomposition
    Cone(ConeArgs),
    /// Run internal consistency checks
    Verify(VerifyArgs),
    /// Emit the curve/divisor basis pairing table for a family
    Table(TableArgs),
}

/// Inclusive integer range: "lo..hi" or a single point "v".
#[derive(Clone, Copy, Debug)]
struct Range {
    lo: i64,
    hi: i64,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.find("..") {
            Some(pos) => {
                let lo: i64 = s[..pos].parse().map_err(|e| {
                    format!("bad lower bound {:?} at column 1: {e}", &s[..pos])
                })?;
                let hi: i64 = s[pos + 2..].parse().map_err(|e| {
                    format!("bad upper bound {:?} at column {}: {e}", &s[pos + 2..], pos + 3)
                })?;
                Ok(Range { lo, hi })
            }
            None => {
                let v: i64 = s
                    .parse()
                    .map_err(|e| format!("bad integer {s:?} at column 1: {e}"))?;
                Ok(Range { lo: v, hi: v })
            }
        }
    }
}

impl Range {
    fn pair(self) -> (i64, i64) {
        (self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Pipeline,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Duality,
    Oracle,
    All,
}

#[derive(clap::Args)]
struct ClassifyArgs {
    /// Family tag: pp-n1 or pp-n2
    #[arg(long)]
    family: String,
    /// n range, e.g. "3..6" or "4"
    #[arg(long)]
    n: Range,
    /// a range (pp-n1)
    #[arg(long)]
    a: Option<Range>,
    /// b range (pp-n1)
    #[arg(long)]
    b: Option<Range>,
    /// d range (pp-n2)
    #[arg(long)]
    d: Option<Range>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the table to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct SelfintArgs {
    /// Family tag (default pp-n1)
    #[arg(long, default_value = "pp-n1")]
    family: String,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    /// Number of flipped curves (families with a choice only)
    #[arg(long)]
    t: Option<i64>,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
}

#[derive(clap::Args)]
struct ConeArgs {
    #[arg(long, default_value = "pp-n1")]
    family: String,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    t: Option<i64>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
}

#[derive(clap::Args)]
struct TableArgs {
    /// Family tag: pp-n1, pp-n2, pn-line-plane, pn-line-quadric, pn-conic-plane
    #[arg(long)]
    family: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// One emitted table row; inapplicable parameters stay empty/null.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct Row {
    family: String,
    n: i64,
    a: Option<i64>,
    b: Option<i64>,
    d: Option<i64>,
    status: String,
    c0: String,
    c1: String,
    c2: String,
    c3: String,
    selfint: String,
}

const CSV_HEADER: &str = "family,n,a,b,d,status,c0,c1,c2,c3,selfint";

fn opt_field(v: Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn rows_to_csv(rows: &[Row]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.family,
            r.n,
            opt_field(r.a),
            opt_field(r.b),
            opt_field(r.d),
            r.status,
            r.c0,
            r.c1,
            r.c2,
            r.c3,
            r.selfint
        );
    }
    out
}

fn rows_to_json(rows: &[Row]) -> Result<String, String> {
    let mut out = serde_json::to_string_pretty(rows).map_err(|e| e.to_string())?;
    out.push('\n');
    Ok(out)
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn row_from_sweep(sr: &classify::SweepRow) -> Row {
    let scn = &sr.scenario;
    let v = &sr.verdict;
    let c = |i: usize| fmt_rat(&v.coeffs[i]);
    Row {
        family: scn.family.tag().to_string(),
        n: scn.n,
        a: scn.a,
        b: scn.b,
        d: scn.d,
        status: v.status.label().to_string(),
        c0: c(0),
        c1: c(1),
        c2: c(2),
        c3: c(3),
        selfint: fmt_rat(&v.selfint),
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode, String> {
    let family = Family::from_tag(&args.family).map_err(|e| e.to_string())?;
    let sweep = match family {
        Family::ProdP1 => {
            let a = args.a.ok_or("--a range is required for family pp-n1")?;
            let b = args.b.ok_or("--b range is required for family pp-n1")?;
            if args.d.is_some() {
                return Err("--d does not apply to family pp-n1".into());
            }
            classify::sweep(args.n.pair(), a.pair(), b.pair()).map_err(|e| e.to_string())?
        }
        Family::ProdP2 => {
            let d = args.d.ok_or("--d range is required for family pp-n2")?;
            if args.a.is_some() || args.b.is_some() {
                return Err("--a/--b do not apply to family pp-n2".into());
            }
            classify::sweep_p2family(args.n.pair(), d.pair()).map_err(|e| e.to_string())?
        }
        _ => {
            return Err(format!(
                "classification tables cover pp-n1 and pp-n2; family {} has no sweep",
                args.family
            ))
        }
    };
    for skip in &sweep.skips {
        eprintln!(
            "skip: n={} a={} b={}: {}",
            skip.n, skip.a, skip.b, skip.reason
        );
    }
    let rows: Vec<Row> = sweep.rows.iter().map(row_from_sweep).collect();
    let text = match args.format {
        Format::Csv => rows_to_csv(&rows),
        Format::Json => rows_to_json(&rows)?,
    };
    emit(&text, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn build_scenario(
    family: &str,
    n: i64,
    a: Option<i64>,
    b: Option<i64>,
    d: Option<i64>,
    t: Option<i64>,
) -> Result<Scenario, String> {
    let fam = Family::from_tag(family).map_err(|e| e.to_string())?;
    let scn = match fam {
        Family::ProdP1 => {
            let a = a.ok_or("--a is required for family pp-n1")?;
            let b = b.ok_or("--b is required for family pp-n1")?;
            if d.is_some() {
                return Err("--d does not apply to family pp-n1".into());
            }
            Scenario::prod_p1(n, a, b)
        }
        Family::ProdP2 => {
            let d = d.ok_or("--d is required for family pp-n2")?;
            if a.is_some() || b.is_some() {
                return Err("--a/--b do not apply to family pp-n2".into());
            }
            Scenario::prod_p2(n, d)
        }
        _ => {
            if a.is_some() || b.is_some() || d.is_some() {
                return Err(format!("--a/--b/--d do not apply to family {family}"));
            }
            Scenario::pn(fam, n)
        }
    }
    .map_err(|e| e.to_string())?;
    match t {
        Some(t) => scn.with_t(t).map_err(|e| e.to_string()),
        None => Ok(scn),
    }
}

fn closed_value(scn: &Scenario) -> Result<Rat, String> {
    match scn.family {
        Family::ProdP1 => {
            let (a, b) = scn.ab().map_err(|e| e.to_string())?;
            anticanonical::kx_selfint_closed(scn.n, a, b).map_err(|e| e.to_string())
        }
        Family::ProdP2 => {
            let d = scn.degree_d().map_err(|e| e.to_string())?;
            anticanonical::kx_selfint_p2family(scn.n, d).map_err(|e| e.to_string())
        }
        _ => Err(format!(
            "family {} has no closed form; use --method pipeline",
            scn.family.tag()
        )),
    }
}

fn pipeline_value(scn: &Scenario) -> Result<Rat, String> {
    match scn.family {
        Family::ProdP2 => {
            let d = scn.degree_d().map_err(|e| e.to_string())?;
            anticanonical::kx_selfint_p2family_pipeline(scn.n, d).map_err(|e| e.to_string())
        }
        _ => anticanonical::kx_selfint_pipeline(scn).map_err(|e| e.to_string()),
    }
}

fn cmd_selfint(args: SelfintArgs) -> Result<ExitCode, String> {
    let scn = build_scenario(&args.family, args.n, args.a, args.b, args.d, args.t)?;
    match args.method {
        Method::Closed => {
            println!("closed: {}", fmt_rat(&closed_value(&scn)?));
            Ok(ExitCode::SUCCESS)
        }
        Method::Pipeline => {
            println!("pipeline: {}", fmt_rat(&pipeline_value(&scn)?));
            Ok(ExitCode::SUCCESS)
        }
        Method::Both => {
            let c = closed_value(&scn)?;
            let p = pipeline_value(&scn)?;
            println!("closed: {}", fmt_rat(&c));
            println!("pipeline: {}", fmt_rat(&p));
            if c == p {
                println!("match");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("mismatch");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn scenario_line(scn: &Scenario) -> String {
    let mut line = format!("scenario: family={} n={}", scn.family.tag(), scn.n);
    if let Some(a) = scn.a {
        let _ = write!(line, " a={a}");
    }
    if let Some(b) = scn.b {
        let _ = write!(line, " b={b}");
    }
    if let Some(d) = scn.d {
        let _ = write!(line, " d={d}");
    }
    let _ = write!(line, " t={}", scn.t);
    line
}

fn cmd_cone(args: ConeArgs) -> Result<ExitCode, String> {
    let scn = build_scenario(&args.family, args.n, args.a, args.b, args.d, args.t)?;
    let pres = cone::presentation(&scn).map_err(|e| e.to_string())?;
    println!("{}", scenario_line(&scn));
    println!("nef generators:");
    for g in &pres.div_gens {
        println!("  {g}");
    }
    println!("dual curve classes:");
    for c in &pres.curve_gens {
        println!("  {c}");
    }
    println!("pairing matrix (curves x generators):");
    for c in &pres.curve_gens {
        let row: Vec<String> = pres
            .div_gens
            .iter()
            .map(|g| cone::pairing(g, c).map(|v| fmt_rat(&v)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        println!("  {}", row.join(" "));
    }
    let minus_k = cone::anticanonical_class(&scn);
    println!("-K = {minus_k}");
    let coeffs = cone::decompose(&minus_k, &pres.div_gens).map_err(|e| e.to_string())?;
    let printed: Vec<String> = coeffs.iter().map(fmt_rat).collect();
    println!("coefficients: ({})", printed.join(", "));
    println!("status: {}", cone::nef_status(&coeffs));
    Ok(ExitCode::SUCCESS)
}

struct Report {
    passed: usize,
    failed: usize,
}

impl Report {
    fn new() -> Report {
        Report { passed: 0, failed: 0 }
    }

    fn check(&mut self, name: &str, ok: bool) {
        if ok {
            self.passed += 1;
            println!("pass  {name}");
        } else {
            self.failed += 1;
            println!("FAIL  {name}");
        }
    }
}

fn suite_identities(report: &mut Report) {
    for weight in 0..=2u32 {
        for x in 1..=6 {
            let ok = (2..=14)
                .all(|n| blowup::binomial_sum(n, x, weight) == blowup::binomial_sum_closed(n, x, weight));
            report.check(
                &format!("identities: weighted sum w={weight} x={x} over n=2..14"),
                ok,
            );
        }
    }
}

fn suite_duality(report: &mut Report) -> Result<(), String> {
    let branches = [(0, 1), (1, 0), (1, 2), (2, 0), (3, 2)];
    for (a, b) in branches {
        let scn = Scenario::prod_p1(4, a, b).map_err(|e| e.to_string())?;
        let pres = cone::presentation(&scn).map_err(|e| e.to_string())?;
        report.check(
            &format!("duality: pp-n1 branch (a,b)=({a},{b}) Kronecker pairing"),
            pres.verified,
        );
    }
    let scn = Scenario::prod_p2(4, 2).map_err(|e| e.to_string())?;
    let pres = cone::presentation(&scn).map_err(|e| e.to_string())?;
    report.check("duality: pp-n2 d=2 Kronecker pairing", pres.verified);
    for fam in [
        Family::PnLinePlane,
        Family::PnLineQuadric,
        Family::PnConicPlane,
    ] {
        let scn = Scenario::pn(fam, 4).map_err(|e| e.to_string())?;
        let pres = cone::presentation(&scn).map_err(|e| e.to_string())?;
        report.check(
            &format!("duality: {} Kronecker pairing", fam.tag()),
            pres.verified,
        );
    }
    Ok(())
}

fn suite_oracle(report: &mut Report) -> Result<(), String> {
    for n in 3..=12 {
        let mut ok = true;
        for a in 0..=8 {
            for b in 0..=8 {
                if a == 0 && b != 1 {
                    continue;
                }
                let scn = Scenario::prod_p1(n, a, b).map_err(|e| e.to_string())?;
                let closed =
                    anticanonical::kx_selfint_closed(n, a, b).map_err(|e| e.to_string())?;
                let pipe =
                    anticanonical::kx_selfint_pipeline(&scn).map_err(|e| e.to_string())?;
                ok &= closed == pipe;
            }
        }
        report.check(
            &format!("oracle: pp-n1 pipeline = closed form, n={n}, all bidegrees a<=8 b<=8"),
            ok,
        );
    }
    for n in 3..=8 {
        let ok = (1..=4).try_fold(true, |acc, d| -> Result<bool, String> {
            let closed = anticanonical::kx_selfint_p2family(n, d).map_err(|e| e.to_string())?;
            let pipe = anticanonical::kx_selfint_p2family_pipeline(n, d)
                .map_err(|e| e.to_string())?;
            Ok(acc && closed == pipe)
        })?;
        report.check(
            &format!("oracle: pp-n2 pipeline = closed form, n={n}, d=1..4"),
            ok,
        );
    }
    let mut sums_ok = true;
    for n in 2..=14 {
        for a in 1..=6 {
            for b in 0..=6 {
                let closed = anticanonical::sums_closed(n, a, b).map_err(|e| e.to_string())?;
                let direct = anticanonical::sums_direct(n, a, b).map_err(|e| e.to_string())?;
                sums_ok &= closed == direct;
            }
        }
    }
    report.check(
        "oracle: weighted sums closed = direct over n=2..14, a=1..6, b=0..6",
        sums_ok,
    );
    let special_ok = (3..=12).try_fold(true, |acc, n| -> Result<bool, String> {
        let general = anticanonical::kx_selfint_closed(n, 0, 1).map_err(|e| e.to_string())?;
        let special = anticanonical::kx_selfint_case01(n).map_err(|e| e.to_string())?;
        Ok(acc && general == special)
    })?;
    report.check(
        "oracle: bidegree (0,1) specialization agrees with its own expansion, n=3..12",
        special_ok,
    );
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let mut report = Report::new();
    if matches!(args.suite, Suite::Identities | Suite::All) {
        suite_identities(&mut report);
    }
    if matches!(args.suite, Suite::Duality | Suite::All) {
        suite_duality(&mut report)?;
    }
    if matches!(args.suite, Suite::Oracle | Suite::All) {
        suite_oracle(&mut report)?;
    }
    println!("{} passed, {} failed", report.passed, report.failed);
    if report.failed == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

#[derive(Serialize)]
struct TableOut {
    family: String,
    divisor_basis: Vec<String>,
    curve_basis: Vec<String>,
    matrix: Vec<Vec<i64>>,
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, String> {
    let fam = Family::from_tag(&args.family).map_err(|e| e.to_string())?;
    let div_labels = cone::DivisorClass::basis_labels(fam);
    let curve_labels = cone::CurveClass::basis_labels(fam);
    let table = cone::PairingTable::for_family(fam);
    let matrix: Vec<Vec<i64>> = (0..curve_labels.len())
        .map(|i| (0..div_labels.len()).map(|j| table.entry(i, j)).collect())
        .collect();
    let text = match args.format {
        Format::Csv => {
            let mut out = format!("curve,{}\n", div_labels.join(","));
            for (i, label) in curve_labels.iter().enumerate() {
                let cells: Vec<String> = matrix[i].iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "{label},{}", cells.join(","));
            }
            out
        }
        Format::Json => {
            let payload = TableOut {
                family: fam.tag().to_string(),
                divisor_basis: div_labels.iter().map(|s| s.to_string()).collect(),
                curve_basis: curve_labels.iter().map(|s| s.to_string()).collect(),
                matrix,
            };
            let mut out = serde_json::to_string_pretty(&payload).map_err(|e| e.to_string())?;
            out.push('\n');
            out
        }
    };
    emit(&text, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::Classify(args) => cmd_classify(args),
        Cmd::Selfint(args) => cmd_selfint(args),
        Cmd::Cone(args) => cmd_cone(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Table(args) => cmd_table(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
