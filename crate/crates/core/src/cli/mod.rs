//! Command-line front end. Every command produces a schema-versioned JSON
//! document; `--format text` renders the same document as aligned lines.
//!
//! Exit codes: 0 ok, 1 invalid input (reducible, order cap exceeded, wrong
//! family), 2 parse error, 3 degree out of range, 10 internal disagreement,
//! 11 fixture mismatch.

pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::corpus::{self, DEFAULT_SEED};
use crate::factor;
use crate::families::{self, FamilyError, FamilyKind, FamilyParams};
use crate::galois::{self, GaloisError, GroupName};
use crate::numberfield::NfError;
use crate::numeric;
use crate::poly::{int, BigRat, QPoly};
use crate::relations::{self, RelationsError};

pub use parse::{parse_poly, ParseError};

pub const SCHEMA_VERSION: u32 = 1;
/// JSON schema for every document printed by the tool.
pub const SCHEMA: &str = include_str!("../../schema/report.schema.json");

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGREE: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 10;
pub const EXIT_MISMATCH: i32 = 11;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub order_cap: usize,
    pub precision_bits: u32,
    pub seed: u64,
    pub oracle: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { order_cap: 48, precision_bits: 64, seed: DEFAULT_SEED, oracle: true }
    }
}

#[derive(Parser, Debug)]
#[command(name = "conjrel", version, about = "Linear relations among conjugates of algebraic numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest splitting-field degree attempted when computing Galois groups.
    #[arg(long, global = true, default_value_t = 48)]
    order_cap: usize,
    /// Starting precision of the numeric cross-check.
    #[arg(long, global = true, default_value_t = 64)]
    precision_bits: u32,
    /// Seed for randomized self-tests.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Skip the numeric cross-check.
    #[arg(long, global = true)]
    no_oracle: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Detect relations among four conjugates of a root of POLY.
    Detect {
        poly: Option<String>,
        /// File with one polynomial per line.
        #[arg(long)]
        batch: Option<PathBuf>,
    },
    /// Galois group of an irreducible polynomial of degree 2 to 7.
    Galois {
        poly: Option<String>,
        #[arg(long)]
        batch: Option<PathBuf>,
    },
    /// Build a polynomial from family parameters, e.g. `generate quad-cubic 2 0 2`.
    Generate {
        /// quad-cubic (alias case-iii), even-quartic, even-sextic, table1 or table2.
        family: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
    },
    /// Split a quadratic-plus-cubic sextic into its quadratic and cubic parts.
    Decompose {
        poly: Option<String>,
        #[arg(long)]
        batch: Option<PathBuf>,
    },
    /// Regenerate the reference tables and compare with the stored fixtures.
    Tables,
    /// Quick internal consistency checks.
    Selftest,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmdError {
    Parse(String),
    Degree(String),
    Invalid(String),
    Disagreement(String),
    Mismatch(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Parse(_) => EXIT_PARSE,
            CmdError::Degree(_) => EXIT_DEGREE,
            CmdError::Invalid(_) => EXIT_INVALID,
            CmdError::Disagreement(_) => EXIT_DISAGREEMENT,
            CmdError::Mismatch(_) => EXIT_MISMATCH,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CmdError::Parse(_) => "parse",
            CmdError::Degree(_) => "degree",
            CmdError::Invalid(_) => "invalid",
            CmdError::Disagreement(_) => "disagreement",
            CmdError::Mismatch(_) => "mismatch",
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Parse(m)
            | CmdError::Degree(m)
            | CmdError::Invalid(m)
            | CmdError::Disagreement(m)
            | CmdError::Mismatch(m) => m,
        }
    }
}

impl From<ParseError> for CmdError {
    fn from(e: ParseError) -> Self {
        CmdError::Parse(e.to_string())
    }
}

impl From<RelationsError> for CmdError {
    fn from(e: RelationsError) -> Self {
        match e {
            RelationsError::DegreeOutOfRange(_) => CmdError::Degree(e.to_string()),
            RelationsError::NotIrreducible | RelationsError::NotApplicable => CmdError::Invalid(e.to_string()),
            _ => CmdError::Disagreement(e.to_string()),
        }
    }
}

impl From<GaloisError> for CmdError {
    fn from(e: GaloisError) -> Self {
        match e {
            GaloisError::NumberField(NfError::DegreeOutOfRange(_)) => CmdError::Degree(e.to_string()),
            GaloisError::NotIrreducible | GaloisError::NotQuadCubic | GaloisError::NumberField(_) => {
                CmdError::Invalid(e.to_string())
            }
            _ => CmdError::Disagreement(e.to_string()),
        }
    }
}

impl From<FamilyError> for CmdError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::InternalMismatch(..) => CmdError::Disagreement(e.to_string()),
            _ => CmdError::Invalid(e.to_string()),
        }
    }
}

/// Result of one command: exit code and the document to print.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub exit_code: i32,
    pub document: Value,
}

fn finish(command: &str, start: Instant, input: Option<Value>, result: Result<Value, CmdError>) -> Outcome {
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let (exit_code, result, error) = match result {
        Ok(v) => (EXIT_OK, v, Value::Null),
        Err(e) => (e.exit_code(), Value::Null, json!({ "kind": e.kind(), "message": e.message() })),
    };
    // Tables and selftest carry their own pass/fail inside the result.
    let exit_code = if exit_code == EXIT_OK {
        result.get("exit_code").and_then(Value::as_i64).map_or(EXIT_OK, |c| c as i32)
    } else {
        exit_code
    };
    Outcome {
        exit_code,
        document: json!({
            "schema_version": SCHEMA_VERSION,
            "tool": { "name": "conjrel", "version": env!("CARGO_PKG_VERSION") },
            "command": command,
            "elapsed_ms": elapsed_ms,
            "exit_code": exit_code,
            "input": input.unwrap_or(Value::Null),
            "result": result,
            "error": error,
        }),
    }
}

fn input_doc(text: &str, p: Option<&QPoly>) -> Value {
    json!({ "text": text, "poly": p.map(report::poly) })
}

fn detect_value(p: &QPoly, opts: &Options) -> Result<Value, CmdError> {
    let d = p.degree();
    if p.is_zero() || !(4..=7).contains(&d) {
        return Err(CmdError::Degree(format!("degree {d} is outside 4..=7")));
    }
    let rep = relations::detect_relations(p)?;
    let mut v = report::relations(&rep);
    if opts.oracle {
        let (roots, orep) = numeric::oracle_relations(&p.monic(), opts.precision_bits)
            .map_err(|e| CmdError::Disagreement(format!("numeric cross-check failed: {e}")))?;
        numeric::confirm_hits(&rep, &roots, &orep).map_err(CmdError::Disagreement)?;
        v["oracle"] = report::oracle(&roots, &orep);
    } else {
        v["oracle"] = Value::Null;
    }
    Ok(v)
}

pub fn cmd_detect(text: &str, opts: &Options) -> Outcome {
    let start = Instant::now();
    match parse_poly(text) {
        Err(e) => finish("detect", start, Some(input_doc(text, None)), Err(e.into())),
        Ok(p) => {
            let r = detect_value(&p, opts);
            finish("detect", start, Some(input_doc(text, Some(&p))), r)
        }
    }
}

fn galois_value(p: &QPoly, opts: &Options) -> Result<Value, CmdError> {
    let d = p.degree();
    if p.is_zero() || !(2..=7).contains(&d) {
        return Err(CmdError::Degree(format!("degree {d} is outside 2..=7")));
    }
    let g = galois::galois_group(p, opts.order_cap)?;
    let mut v = report::galois(&g);
    // Independent classifiers where they apply.
    let mut checks = Vec::new();
    if d == 4 {
        let q = galois::quartic_galois(p);
        checks.push(("resolvent_cubic", q));
    }
    if d == 6 {
        if let Ok(dec) = families::decompose_quad_cubic(p) {
            checks.push(("quad_cubic_discriminant", galois::quad_cubic_galois_fast(&dec.a, &dec.b, &dec.c)));
        }
    }
    for (name, other) in &checks {
        if g.name != Some(*other) {
            return Err(CmdError::Disagreement(format!(
                "{name} classifier gives {other} but the splitting field gives {}",
                g.name.map_or("unnamed".to_string(), |n| n.to_string())
            )));
        }
    }
    v["cross_checks"] = json!(checks.iter().map(|(n, g)| json!({ "method": n, "name": g.as_str() })).collect::<Vec<_>>());
    Ok(v)
}

pub fn cmd_galois(text: &str, opts: &Options) -> Outcome {
    let start = Instant::now();
    match parse_poly(text) {
        Err(e) => finish("galois", start, Some(input_doc(text, None)), Err(e.into())),
        Ok(p) => {
            let r = galois_value(&p, opts);
            finish("galois", start, Some(input_doc(text, Some(&p))), r)
        }
    }
}

fn decompose_value(p: &QPoly) -> Result<Value, CmdError> {
    if p.degree() != 6 {
        return Err(CmdError::Degree(format!("degree {} is not 6", p.degree())));
    }
    Ok(report::decomposition(&families::decompose_quad_cubic(p)?))
}

pub fn cmd_decompose(text: &str, _opts: &Options) -> Outcome {
    let start = Instant::now();
    match parse_poly(text) {
        Err(e) => finish("decompose", start, Some(input_doc(text, None)), Err(e.into())),
        Ok(p) => {
            let r = decompose_value(&p);
            finish("decompose", start, Some(input_doc(text, Some(&p))), r)
        }
    }
}

fn parse_rat(s: &str) -> Result<BigRat, CmdError> {
    s.trim().replace('\u{2212}', "-").parse::<BigRat>().map_err(|_| CmdError::Parse(format!("not a rational number: {s:?}")))
}

fn generate_value(family: &str, params: &[String]) -> Result<Value, CmdError> {
    let want = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(CmdError::Parse(format!("{family} takes {n} parameters, got {}", params.len())))
        }
    };
    let (fam, p) = match family {
        "quad-cubic" | "case-iii" => {
            want(3)?;
            let (a, b, c) = (parse_rat(&params[0])?, parse_rat(&params[1])?, parse_rat(&params[2])?);
            let p = families::gen_quad_cubic(&a, &b, &c)?;
            (FamilyParams::quad_cubic(a, b, c), p)
        }
        "even-quartic" => {
            want(2)?;
            let (a, b) = (parse_rat(&params[0])?, parse_rat(&params[1])?);
            let p = families::gen_even_quartic(&a, &b);
            (FamilyParams { kind: FamilyKind::QuarticEven, a, b, c: int(0), t: int(0) }, p)
        }
        "even-sextic" => {
            want(3)?;
            let (a, b, c) = (parse_rat(&params[0])?, parse_rat(&params[1])?, parse_rat(&params[2])?);
            let p = families::gen_even_sextic(&a, &b, &c);
            (FamilyParams { kind: FamilyKind::SexticEven, a, b, c, t: int(0) }, p)
        }
        "table1" | "table2" => {
            want(2)?;
            let table = if family == "table1" { 1 } else { 2 };
            let row: GroupName = params[0].parse().map_err(CmdError::Parse)?;
            let t = parse_rat(&params[1])?;
            let p = families::gen_table_family(table, row, &t)?;
            let kind = if table == 1 { FamilyKind::SexticTableRow(row) } else { FamilyKind::QuarticTableRow(row) };
            (FamilyParams { kind, a: int(0), b: int(0), c: int(0), t }, p)
        }
        other => return Err(CmdError::Parse(format!("unknown family {other:?}"))),
    };
    Ok(json!({
        "params": report::family(&fam),
        "poly": report::poly(&p),
        "irreducible": factor::is_irreducible(&p),
    }))
}

pub fn cmd_generate(family: &str, params: &[String], _opts: &Options) -> Outcome {
    let start = Instant::now();
    let input = json!({ "text": format!("{family} {}", params.join(" ")), "poly": Value::Null });
    finish("generate", start, Some(input), generate_value(family, params))
}

/// Expected quadratic-plus-cubic rows: parameters, polynomial text and group.
pub const QUAD_CUBIC_TABLE: [((i64, i64, i64), &str, GroupName); 3] = [
    ((2, 0, 2), "x^6 - 6x^4 + 4x^3 + 12x^2 + 24x - 4", GroupName::D6),
    ((-1, -3, 1), "x^6 - 3x^4 + 2x^3 + 12x^2 - 12x + 17", GroupName::C6),
    ((-1, -3, 4), "x^6 - 3x^4 + 8x^3 + 12x^2 - 48x + 32", GroupName::S3),
];

/// Expected rows of the table of sextics outside the quadratic-plus-cubic family.
pub const NON_QUAD_CUBIC_TABLE: [(&str, GroupName); 3] = [
    ("x^6 + 2x^3 + 2", GroupName::D6),
    ("x^6 + x^3 + 1", GroupName::C6),
    ("x^6 + 54x^3 + 1029", GroupName::S3),
];

fn table_row(table: u8, row: &str, t: Option<&BigRat>, p: &QPoly, expected: &str, problems: Vec<String>, got: &str) -> Value {
    json!({
        "table": table,
        "row": row,
        "t": t.map(report::rat),
        "poly": report::poly(p),
        "expected": expected,
        "got": got,
        "status": if problems.is_empty() { "match" } else { "mismatch" },
        "diff": problems,
    })
}

fn group_str(g: &Result<galois::GaloisResult, GaloisError>) -> String {
    match g {
        Ok(g) => g.name.map_or_else(|| format!("unnamed order {}", g.order), |n| n.to_string()),
        Err(e) => format!("error: {e}"),
    }
}

fn tables_value(opts: &Options) -> Result<Value, CmdError> {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for table in [1u8, 2] {
        let ts: &[i64] = if table == 1 { &[1, 2, 3] } else { &[1, 2] };
        for &row in families::table_rows(table) {
            for &t in ts {
                let t = int(t);
                let p = families::gen_table_family(table, row, &t)?;
                if !factor::is_irreducible(&p) {
                    skipped.push(json!({ "table": table, "row": row.as_str(), "t": report::rat(&t), "reason": "reducible" }));
                    continue;
                }
                let g = galois::galois_group(&p, opts.order_cap);
                let got = group_str(&g);
                let mut problems = Vec::new();
                if got != row.as_str() {
                    problems.push(format!("splitting field gives {got}"));
                }
                if table == 2 {
                    let q = galois::quartic_galois(&p);
                    if q != row {
                        problems.push(format!("resolvent cubic gives {q}"));
                    }
                }
                rows.push(table_row(table, row.as_str(), Some(&t), &p, row.as_str(), problems, &got));
            }
        }
    }
    for ((a, b, c), text, group) in QUAD_CUBIC_TABLE {
        let expected = parse_poly(text)?;
        let p = families::gen_quad_cubic(&int(a), &int(b), &int(c))?;
        let mut problems = Vec::new();
        if p != expected {
            problems.push(format!("generated {p}, expected {expected}"));
        }
        let g = galois::galois_group(&p, opts.order_cap);
        let got = group_str(&g);
        if got != group.as_str() {
            problems.push(format!("splitting field gives {got}"));
        }
        let fast = galois::quad_cubic_galois_fast(&int(a), &int(b), &int(c));
        if fast != group {
            problems.push(format!("discriminant classifier gives {fast}"));
        }
        match families::decompose_quad_cubic(&p) {
            Ok(d) if (d.a.clone(), d.b.clone(), d.c.clone()) == (int(a), int(b), int(c)) => {}
            Ok(d) => problems.push(format!("decomposed to ({}, {}, {})", d.a, d.b, d.c)),
            Err(e) => problems.push(format!("decomposition failed: {e}")),
        }
        rows.push(table_row(3, &format!("({a}, {b}, {c})"), None, &p, group.as_str(), problems, &got));
    }
    for table in [4u8, 5] {
        for (text, group) in NON_QUAD_CUBIC_TABLE {
            let p = parse_poly(text)?;
            let g = galois::galois_group(&p, opts.order_cap);
            let got = group_str(&g);
            let mut problems = Vec::new();
            if got != group.as_str() {
                problems.push(format!("splitting field gives {got}"));
            }
            let forms = relations::form_match(&crate::poly::trace_normalize(&p).expect("degree 6").0);
            if !forms.is_empty() {
                problems.push(format!("{} family forms matched", forms.len()));
            }
            rows.push(table_row(table, text, None, &p, group.as_str(), problems, &got));
        }
    }
    let mismatches = rows.iter().filter(|r| r["status"] == "mismatch").count();
    Ok(json!({
        "rows": rows,
        "skipped": skipped,
        "mismatches": mismatches,
        "exit_code": if mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH },
    }))
}

pub fn cmd_tables(opts: &Options) -> Outcome {
    let start = Instant::now();
    finish("tables", start, None, tables_value(opts))
}

fn check(name: &str, r: Result<String, String>) -> Value {
    match r {
        Ok(detail) => json!({ "name": name, "passed": true, "detail": detail }),
        Err(detail) => json!({ "name": name, "passed": false, "detail": detail }),
    }
}

fn selftest_value(opts: &Options) -> Result<Value, CmdError> {
    let mut checks = Vec::new();
    checks.push(check(
        "catalog_fingerprints_injective",
        match galois::fingerprint_collision(galois::catalog()) {
            None => Ok(format!("{} groups", galois::catalog().len())),
            Some((a, b)) => Err(format!("{a} and {b} share a fingerprint")),
        },
    ));
    let corpus: Vec<QPoly> = families::quad_cubic_fixtures()
        .into_iter()
        .chain(families::non_quad_cubic_fixtures())
        .map(|f| f.poly)
        .chain([families::pair_equal_quartic_fixture()])
        .collect();
    checks.push(check(
        "parser_round_trip",
        corpus
            .iter()
            .find(|p| parse_poly(&p.to_string()).as_ref() != Ok(*p))
            .map_or(Ok(format!("{} polynomials", corpus.len())), |p| Err(format!("{p} does not round trip"))),
    ));
    checks.push(check(
        "quad_cubic_table",
        QUAD_CUBIC_TABLE
            .iter()
            .find_map(|((a, b, c), text, _)| {
                let p = families::gen_quad_cubic(&int(*a), &int(*b), &int(*c)).ok();
                (p != parse_poly(text).ok()).then(|| format!("({a}, {b}, {c}) does not give {text}"))
            })
            .map_or(Ok("3 rows".into()), Err),
    ));
    let pisot = relations::detect_relations(&families::pair_equal_quartic_fixture());
    checks.push(check(
        "pisot_quartic_pair_equal",
        match pisot {
            Ok(r) if r.pair_equal.as_ref().and_then(|pe| pe.beta_value.clone()) == Some(int(1)) => Ok("beta = 1".into()),
            other => Err(format!("{other:?}")),
        },
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut failures = Vec::new();
    let mut count = 0;
    for (a, b, c) in (0..20).map(|_| corpus::random_quad_cubic_triple(&mut rng, 20)) {
        count += 1;
        let ok = families::gen_quad_cubic(&int(a), &int(b), &int(c)).ok().and_then(|p| families::decompose_quad_cubic(&p).ok());
        if !matches!(ok, Some(d) if d.a == int(a) && d.b == int(b) && d.c == int(c)) {
            failures.push(format!("({a}, {b}, {c})"));
        }
    }
    checks.push(check(
        "quad_cubic_round_trip",
        if failures.is_empty() { Ok(format!("{count} seeded triples")) } else { Err(failures.join("; ")) },
    ));
    if opts.oracle {
        let mut failures = Vec::new();
        for d in 4..=7 {
            for _ in 0..10 {
                let p = corpus::random_monic_irreducible(&mut rng, d, 10);
                if let Err(e) = detect_value(&p, opts) {
                    failures.push(format!("{p}: {}", e.message()));
                }
            }
        }
        checks.push(check(
            "detector_matches_numeric_scan",
            if failures.is_empty() { Ok("40 seeded polynomials".into()) } else { Err(failures.join("; ")) },
        ));
    }
    let failed = checks.iter().filter(|c| c["passed"] == false).count();
    Ok(json!({
        "seed": opts.seed,
        "checks": checks,
        "failed": failed,
        "exit_code": if failed == 0 { EXIT_OK } else { EXIT_DISAGREEMENT },
    }))
}

pub fn cmd_selftest(opts: &Options) -> Outcome {
    let start = Instant::now();
    finish("selftest", start, None, selftest_value(opts))
}

/// Run `f` on every non-empty, non-comment line in parallel and return the
/// outcomes in line order. Each document records its 1-based line number.
pub fn run_batch(lines: &[String], opts: &Options, f: fn(&str, &Options) -> Outcome) -> Vec<Outcome> {
    let jobs: Vec<(usize, &str)> = lines
        .iter()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Mutex<Vec<Option<Outcome>>> = Mutex::new(vec![None; jobs.len()]);
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(line, text)) = jobs.get(k) else { break };
                let mut out = f(text, opts);
                if let Some(input) = out.document.get_mut("input").and_then(Value::as_object_mut) {
                    input.insert("line".into(), json!(line));
                }
                results.lock().expect("no poisoned workers")[k] = Some(out);
            });
        }
    });
    results.into_inner().expect("no poisoned workers").into_iter().map(|o| o.expect("every job ran")).collect()
}

fn emit(outcomes: &[Outcome], format: Format) {
    let mut out = std::io::stdout().lock();
    for o in outcomes {
        let text = match format {
            Format::Json if outcomes.len() == 1 => {
                serde_json::to_string_pretty(&o.document).expect("serializable") + "\n"
            }
            Format::Json => serde_json::to_string(&o.document).expect("serializable") + "\n",
            Format::Text if outcomes.len() > 1 => report::render_text(&o.document) + "\n",
            Format::Text => report::render_text(&o.document),
        };
        // A closed pipe downstream is not an error of ours.
        if out.write_all(text.as_bytes()).is_err() {
            return;
        }
    }
}

fn poly_inputs(poly: Option<String>, batch: Option<PathBuf>) -> Result<Vec<String>, String> {
    match (poly, batch) {
        (Some(p), None) => Ok(vec![p]),
        (None, Some(path)) => std::fs::read_to_string(&path)
            .map(|s| s.lines().map(str::to_string).collect())
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        (None, None) => std::io::read_to_string(std::io::stdin())
            .map(|s| s.lines().map(str::to_string).collect())
            .map_err(|e| format!("cannot read stdin: {e}")),
        (Some(_), Some(_)) => Err("give either a polynomial or --batch, not both".into()),
    }
}

/// Entry point shared by the binary and the tests. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let opts = Options {
        order_cap: cli.order_cap,
        precision_bits: cli.precision_bits,
        seed: cli.seed,
        oracle: !cli.no_oracle,
    };
    let (poly, batch, f): (_, _, fn(&str, &Options) -> Outcome) = match cli.command {
        Command::Detect { poly, batch } => (poly, batch, cmd_detect),
        Command::Galois { poly, batch } => (poly, batch, cmd_galois),
        Command::Decompose { poly, batch } => (poly, batch, cmd_decompose),
        Command::Generate { family, params } => {
            let o = cmd_generate(&family, &params, &opts);
            emit(std::slice::from_ref(&o), cli.format);
            return o.exit_code;
        }
        Command::Tables => {
            let o = cmd_tables(&opts);
            emit(std::slice::from_ref(&o), cli.format);
            return o.exit_code;
        }
        Command::Selftest => {
            let o = cmd_selftest(&opts);
            emit(std::slice::from_ref(&o), cli.format);
            return o.exit_code;
        }
    };
    let single = poly.is_some();
    let lines = match poly_inputs(poly, batch) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("conjrel: {e}");
            return EXIT_INVALID;
        }
    };
    let outcomes = if single { vec![f(&lines[0], &opts)] } else { run_batch(&lines, &opts, f) };
    for o in &outcomes {
        if let Some(msg) = o.document["error"]["message"].as_str() {
            eprintln!("conjrel: {msg}");
        }
    }
    emit(&outcomes, cli.format);
    outcomes.iter().map(|o| o.exit_code).max().unwrap_or(EXIT_OK)
}
