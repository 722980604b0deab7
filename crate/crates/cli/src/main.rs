//! `symcode`: construct and analyze the evaluation codes of elementary
//! symmetric polynomials, and verify their closed-form invariants.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symcode_core::{
    build_code, classify, code_params, distinguished_zeroes,
    enumerate_distinguished, enumerate_orbit_reps, extension_spectrum, ghw_with_witnesses,
    higher_weight_spectra_all, perm_count, pow_u128, verify_code_structure, verify_example_q5_m3,
    verify_ghw_relations, verify_m2_spectra, verify_m2_tables, verify_zero_bounds,
    weight_histogram_range, zero_count_bound, Classification, Field, FieldElement, FieldSpec,
    LinearCode, SetKind, Spectrum, Status, SymPoly, VerificationReport,
};

/// Message sweeps and explicit matrices larger than this abort with an
/// estimate unless --force is given.
const WORK_CAP: u128 = 100_000_000;

#[derive(Parser)]
#[command(name = "symcode", version, about = "evaluation codes of elementary symmetric polynomials")]
struct Cli {
    /// worker threads for partitionable sweeps
    #[arg(long, global = true, env = "SYMCODE_JOBS", default_value_t = 1)]
    jobs: usize,
    /// run even when the sweep size exceeds the feasibility cap
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FieldArgs {
    /// field order q = p^e
    #[arg(long, conflicts_with_all = ["p", "e", "modulus"])]
    q: Option<u64>,
    /// field characteristic (with --e)
    #[arg(long, requires = "e")]
    p: Option<u64>,
    /// extension degree (with --p)
    #[arg(long, requires = "p")]
    e: Option<u32>,
    /// modulus coefficients c0,...,ce (default: least monic irreducible)
    #[arg(long, requires = "e", value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
}

impl FieldArgs {
    fn build(&self) -> Result<Field, CliError> {
        let spec = match (self.q, self.p, self.e) {
            (Some(q), None, None) => FieldSpec::from_order(q),
            (None, Some(p), Some(e)) => FieldSpec::extension(p, e, self.modulus.clone()),
            _ => return Err(CliError::usage("exactly one of --q or --p/--e is required")),
        }
        .map_err(|e| CliError::usage(&format!("invalid field: {e}")))?;
        Ok(Field::new(spec))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetArg {
    Full,
    Orbit,
}

impl SetArg {
    fn kind(self) -> SetKind {
        match self {
            SetArg::Full => SetKind::FullDistinguished,
            SetArg::Orbit => SetKind::OrbitRepresentatives,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Zeroes,
    Tables,
    Codes,
    Spectra,
    Example,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Code parameters (n, k, d)
    Params {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = SetArg::Full)]
        set: SetArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generator matrix, rows σ^0..σ^m, columns in lexicographic point order
    Genmat {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = SetArg::Full)]
        set: SetArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Distinguished zeroes of one polynomial: count, bounds, classification
    Zeroes {
        #[command(flatten)]
        field: FieldArgs,
        /// arity (default: inferred from --coeffs)
        #[arg(long)]
        m: Option<usize>,
        /// coefficients a_0,...,a_m as canonical indices
        #[arg(long, value_delimiter = ',', required = true)]
        coeffs: Vec<u64>,
        /// restrict coordinates to this subset of canonical indices (default: all of F_q)
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<u64>>,
        /// also print the zero tuples, one per line
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Weight distribution over all q^(m+1) messages
    WeightDist {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = SetArg::Full)]
        set: SetArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generalized Hamming weights d_1..d_k
    Ghw {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = SetArg::Full)]
        set: SetArg,
        /// print a coefficient basis attaining each d_r
        #[arg(long)]
        witnesses: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Higher weight spectra A_w^(r)
    Spectra {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = SetArg::Full)]
        set: SetArg,
        /// subcode dimension (default: all r from 0 to k)
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Weight distribution of the scalar extension to F_{q^s}
    Extend {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = SetArg::Full)]
        set: SetArg,
        /// extension degree s (Q = q^s)
        #[arg(long)]
        s: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reconcile closed-form claims against brute-force oracles
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// restrict to one field order (default: the standard grid)
        #[arg(long)]
        q: Option<u64>,
        /// restrict to one arity
        #[arg(long)]
        m: Option<usize>,
        /// emit the report as JSON
        #[arg(long)]
        json: bool,
    },
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: &str) -> CliError {
        CliError { message: message.into(), code: 2 }
    }

    fn infeasible(what: &str, work: u128) -> CliError {
        CliError {
            message: format!(
                "infeasible: {what} requires a sweep of size {work} (cap {WORK_CAP}); rerun with --force"
            ),
            code: 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if e.code == 1 {
                // failed verification: the report itself is the output
                print!("{}", e.message);
            } else {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    if cli.jobs == 0 {
        return Err(CliError::usage("--jobs must be at least 1"));
    }
    match &cli.cmd {
        Cmd::Params { field, m, set, format } => {
            let field = field.build()?;
            let code = make_code(&field, *m, set.kind(), cli.force)?;
            cmd_params(&field, &code, *format)
        }
        Cmd::Genmat { field, m, set, format } => {
            let field = field.build()?;
            let code = make_code(&field, *m, set.kind(), cli.force)?;
            Ok(cmd_genmat(&field, &code, *format))
        }
        Cmd::Zeroes { field, m, coeffs, subset, list, format } => {
            let field = field.build()?;
            cmd_zeroes(&field, *m, coeffs, subset.as_deref(), *list, *format)
        }
        Cmd::WeightDist { field, m, set, format } => {
            let field = field.build()?;
            let code = make_code(&field, *m, set.kind(), cli.force)?;
            cmd_weight_dist(&field, &code, *format, cli.jobs, cli.force)
        }
        Cmd::Ghw { field, m, set, witnesses, format } => {
            let field = field.build()?;
            let code = make_code(&field, *m, set.kind(), cli.force)?;
            cmd_ghw(&field, &code, *witnesses, *format)
        }
        Cmd::Spectra { field, m, set, r, format } => {
            let field = field.build()?;
            let code = make_code(&field, *m, set.kind(), cli.force)?;
            cmd_spectra(&field, &code, *r, *format)
        }
        Cmd::Extend { field, m, set, s, format } => {
            let field = field.build()?;
            let code = make_code(&field, *m, set.kind(), cli.force)?;
            cmd_extend(&field, &code, *s, *format)
        }
        Cmd::Verify { suite, q, m, json } => cmd_verify(*suite, *q, *m, *json, cli.force),
    }
}

fn make_code(field: &Field, m: usize, kind: SetKind, force: bool) -> Result<LinearCode, CliError> {
    if m < 1 {
        return Err(CliError::usage("--m must be at least 1"));
    }
    let q = field.q();
    let cells = perm_count(q, m as u64) * (m as u128 + 1);
    if cells > WORK_CAP && !force {
        return Err(CliError::infeasible("building the generator matrix", cells));
    }
    let set = match kind {
        SetKind::FullDistinguished => enumerate_distinguished(field, m),
        SetKind::OrbitRepresentatives => enumerate_orbit_reps(field, m),
    };
    build_code(field, &set).map_err(|e| CliError::usage(&format!("{e}")))
}

fn check_sweep(code: &LinearCode, force: bool) -> Result<u64, CliError> {
    let messages = pow_u128(code.q, code.k() as u64);
    if messages > WORK_CAP && !force {
        return Err(CliError::infeasible("the message sweep", messages));
    }
    Ok(messages as u64)
}

fn field_json(field: &Field) -> Value {
    let spec = field.spec();
    json!({ "p": spec.p, "e": spec.e, "modulus": spec.modulus })
}

fn spectrum_pairs(s: &Spectrum) -> Value {
    Value::Array(s.iter().map(|(&w, &c)| json!([w, c as u64])).collect())
}

fn cmd_params(field: &Field, code: &LinearCode, format: Format) -> Result<String, CliError> {
    let params = code_params(field, code).map_err(|e| CliError::usage(&format!("{e}")))?;
    Ok(match format {
        Format::Text => format!("n={} k={} d={}\n", params.n, params.k, params.d),
        Format::Csv => format!("n,k,d\n{},{},{}\n", params.n, params.k, params.d),
        Format::Json => {
            let v = json!({
                "q": code.q, "m": code.m, "set": format!("{}", code.kind),
                "field": field_json(field),
                "n": params.n, "k": params.k, "d": params.d,
            });
            format!("{v}\n")
        }
    })
}

fn cmd_genmat(field: &Field, code: &LinearCode, format: Format) -> String {
    match format {
        Format::Text | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { " " };
            let mut out = String::new();
            if format == Format::Text {
                let _ = writeln!(
                    out,
                    "# q={} m={} set={} order=lex",
                    code.q, code.m, code.kind
                );
                let spec = field.spec();
                if spec.e > 1 {
                    let parts: Vec<String> = spec.modulus.iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(out, "# modulus={}", parts.join(","));
                }
            }
            for row in &code.rows {
                let parts: Vec<String> = row.iter().map(|c| c.index().to_string()).collect();
                let _ = writeln!(out, "{}", parts.join(sep));
            }
            out
        }
        Format::Json => {
            let rows: Vec<Vec<u64>> =
                code.rows.iter().map(|r| r.iter().map(|c| c.index()).collect()).collect();
            let v = json!({
                "q": code.q, "m": code.m, "kind": format!("{}", code.kind),
                "field": field_json(field),
                "rows": rows,
            });
            format!("{v}\n")
        }
    }
}

fn cmd_zeroes(
    field: &Field,
    m: Option<usize>,
    coeffs: &[u64],
    subset: Option<&[u64]>,
    list: bool,
    format: Format,
) -> Result<String, CliError> {
    if coeffs.len() < 2 {
        return Err(CliError::usage("--coeffs must list at least a_0,a_1"));
    }
    let m = match m {
        Some(m) if m + 1 != coeffs.len() => {
            return Err(CliError::usage(&format!(
                "--coeffs must list m+1 = {} entries, got {}",
                m + 1,
                coeffs.len()
            )))
        }
        Some(m) => m,
        None => coeffs.len() - 1,
    };
    let to_elems = |idx: &[u64]| -> Result<Vec<FieldElement>, CliError> {
        idx.iter()
            .map(|&i| field.element(i).map_err(|e| CliError::usage(&format!("{e}"))))
            .collect()
    };
    let f = SymPoly::new(to_elems(coeffs)?).map_err(|e| CliError::usage(&format!("{e}")))?;
    let mut s = match subset {
        Some(idx) => to_elems(idx)?,
        None => field.elements().collect(),
    };
    s.sort_unstable();
    s.dedup();
    if s.len() < m {
        return Err(CliError::usage(&format!(
            "--subset must contain at least m = {m} distinct elements, got {}",
            s.len()
        )));
    }
    let zeroes =
        distinguished_zeroes(field, &f, &s).map_err(|e| CliError::usage(&format!("{e}")))?;
    let count = zeroes.len() as u64;
    let type_one = matches!(classify(field, &f), Classification::TypeOne { .. });
    let bound4 = zero_count_bound(s.len() as u64, m as u64, true);
    let bound5 = if type_one { bound4 } else { zero_count_bound(s.len() as u64, m as u64, false) };
    let label = match classify(field, &f) {
        Classification::Zero => "zero",
        Classification::NonzeroConstant => "const",
        Classification::TypeOne { .. } => "I",
        Classification::TypeTwo => "II",
    };
    Ok(match format {
        Format::Text => {
            let mut out = format!("count={count} bound4={bound4} bound5={bound5} type={label}\n");
            if list {
                for z in &zeroes {
                    let parts: Vec<String> = z.iter().map(|c| c.index().to_string()).collect();
                    let _ = writeln!(out, "{}", parts.join(" "));
                }
            }
            out
        }
        Format::Csv => format!("count,bound4,bound5,type\n{count},{bound4},{bound5},{label}\n"),
        Format::Json => {
            let mut v = json!({
                "q": field.q(), "field": field_json(field),
                "f": { "m": m, "coeffs": coeffs },
                "subset": s.iter().map(|c| c.index()).collect::<Vec<_>>(),
                "count": count, "bound4": bound4 as u64, "bound5": bound5 as u64,
                "type": label,
            });
            if list {
                let rows: Vec<Vec<u64>> =
                    zeroes.iter().map(|z| z.iter().map(|c| c.index()).collect()).collect();
                v["zeroes"] = json!(rows);
            }
            format!("{v}\n")
        }
    })
}

fn cmd_weight_dist(
    field: &Field,
    code: &LinearCode,
    format: Format,
    jobs: usize,
    force: bool,
) -> Result<String, CliError> {
    let messages = check_sweep(code, force)?;
    let hist = parallel_histogram(field, code, messages, jobs);
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (w, c) in &hist {
                let _ = writeln!(out, "{w} {c}");
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("weight,count\n");
            for (w, c) in &hist {
                let _ = writeln!(out, "{w},{c}");
            }
            out
        }
        Format::Json => {
            let v = json!({
                "q": code.q, "m": code.m, "set": format!("{}", code.kind),
                "field": field_json(field),
                "weights": spectrum_pairs(&hist),
            });
            format!("{v}\n")
        }
    })
}

/// Partition the message range into contiguous chunks, sweep each on its own
/// thread, and merge by addition; the result is independent of `jobs`.
fn parallel_histogram(field: &Field, code: &LinearCode, messages: u64, jobs: usize) -> Spectrum {
    let jobs = jobs.min(messages.max(1) as usize).max(1);
    if jobs == 1 {
        return weight_histogram_range(field, code, 0, messages);
    }
    let chunk = messages.div_ceil(jobs as u64);
    let mut hist = Spectrum::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for j in 0..jobs as u64 {
            let start = j * chunk;
            let end = (start + chunk).min(messages);
            handles.push(scope.spawn(move || weight_histogram_range(field, code, start, end)));
        }
        for h in handles {
            for (w, c) in h.join().expect("sweep thread") {
                *hist.entry(w).or_insert(0) += c;
            }
        }
    });
    hist
}

fn cmd_ghw(
    field: &Field,
    code: &LinearCode,
    witnesses: bool,
    format: Format,
) -> Result<String, CliError> {
    let with = ghw_with_witnesses(field, code).map_err(|e| CliError::usage(&format!("{e}")))?;
    let ds: Vec<u64> = with.iter().map(|(d, _)| *d).collect();
    Ok(match format {
        Format::Text => {
            let parts: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
            let mut out = format!("{}\n", parts.join(" "));
            if witnesses {
                for (r, (d, basis)) in with.iter().enumerate() {
                    let polys: Vec<String> = basis
                        .iter()
                        .map(|f| {
                            let cs: Vec<String> =
                                f.coeffs().iter().map(|c| c.index().to_string()).collect();
                            cs.join(",")
                        })
                        .collect();
                    let _ = writeln!(out, "r={} d={d} basis={}", r + 1, polys.join(";"));
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("r,d\n");
            for (r, d) in ds.iter().enumerate() {
                let _ = writeln!(out, "{},{d}", r + 1);
            }
            out
        }
        Format::Json => {
            let mut v = json!({
                "q": code.q, "m": code.m, "set": format!("{}", code.kind),
                "field": field_json(field),
                "ghw": ds,
            });
            if witnesses {
                let ws: Vec<Value> = with
                    .iter()
                    .enumerate()
                    .map(|(r, (d, basis))| {
                        let rows: Vec<Vec<u64>> = basis
                            .iter()
                            .map(|f| f.coeffs().iter().map(|c| c.index()).collect())
                            .collect();
                        json!({ "r": r + 1, "d": d, "basis": rows })
                    })
                    .collect();
                v["witnesses"] = Value::Array(ws);
            }
            format!("{v}\n")
        }
    })
}

fn cmd_spectra(
    field: &Field,
    code: &LinearCode,
    r: Option<usize>,
    format: Format,
) -> Result<String, CliError> {
    let all = higher_weight_spectra_all(field, code).map_err(|e| CliError::usage(&format!("{e}")))?;
    let picked: Vec<(usize, &Spectrum)> = match r {
        Some(r) => {
            if r >= all.len() {
                return Err(CliError::usage(&format!(
                    "--r must be at most k = {}, got {r}",
                    all.len() - 1
                )));
            }
            vec![(r, &all[r])]
        }
        None => all.iter().enumerate().collect(),
    };
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (r, spec) in &picked {
                let parts: Vec<String> = spec.iter().map(|(w, c)| format!("{w}:{c}")).collect();
                let _ = writeln!(out, "r={r} {}", parts.join(" "));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("r,weight,count\n");
            for (r, spec) in &picked {
                for (w, c) in spec.iter() {
                    let _ = writeln!(out, "{r},{w},{c}");
                }
            }
            out
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (r, spec) in &picked {
                map.insert(r.to_string(), spectrum_pairs(spec));
            }
            let v = json!({
                "q": code.q, "m": code.m, "set": format!("{}", code.kind),
                "field": field_json(field),
                "spectra": map,
            });
            format!("{v}\n")
        }
    })
}

fn cmd_extend(
    field: &Field,
    code: &LinearCode,
    s: u64,
    format: Format,
) -> Result<String, CliError> {
    let all = higher_weight_spectra_all(field, code).map_err(|e| CliError::usage(&format!("{e}")))?;
    let p = extension_spectrum(&all, code.q, s).map_err(|e| CliError::usage(&format!("{e}")))?;
    let big_q = pow_u128(code.q, s);
    Ok(match format {
        Format::Text => {
            let mut out = format!("Q={big_q}\n");
            for (w, c) in &p {
                let _ = writeln!(out, "{w} {c}");
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("weight,count\n");
            for (w, c) in &p {
                let _ = writeln!(out, "{w},{c}");
            }
            out
        }
        Format::Json => {
            let v = json!({
                "q": code.q, "m": code.m, "set": format!("{}", code.kind),
                "field": field_json(field),
                "s": s, "Q": big_q as u64,
                "spectrum": spectrum_pairs(&p),
            });
            format!("{v}\n")
        }
    })
}

const TABLE_GRID: [u64; 6] = [3, 4, 5, 7, 8, 9];

fn verify_field(q: u64) -> Result<Field, CliError> {
    Field::from_order(q).map_err(|e| CliError::usage(&format!("invalid field: {e}")))
}

fn cmd_verify(
    suite: Suite,
    q: Option<u64>,
    m: Option<usize>,
    json: bool,
    force: bool,
) -> Result<String, CliError> {
    if let Some(q) = q {
        if (q > 9 || m.unwrap_or(1) > 4) && !force {
            return Err(CliError::usage(&format!(
                "verification defaults to q <= 9 and m <= 4 (got q={q}, m={}); rerun with --force",
                m.unwrap_or(1)
            )));
        }
    }
    let mut report = VerificationReport::default();

    if matches!(suite, Suite::Zeroes | Suite::All) {
        match q {
            Some(q) => {
                let field = verify_field(q)?;
                let m = m.unwrap_or(2.min(q as usize));
                // all 2^q subsets are only swept for small q
                report.merge(verify_zero_bounds(&field, m, q > 7));
            }
            None => {
                for q in [2u64, 3, 4, 5, 7] {
                    for mm in 1..=3usize {
                        if m.map(|want| want != mm).unwrap_or(false) || mm as u64 > q {
                            continue;
                        }
                        report.merge(verify_zero_bounds(&verify_field(q)?, mm, false));
                    }
                }
            }
        }
    }
    if matches!(suite, Suite::Tables | Suite::All) {
        for qq in q.map(|q| vec![q]).unwrap_or_else(|| TABLE_GRID.to_vec()) {
            report.merge(verify_m2_tables(&verify_field(qq)?));
        }
    }
    if matches!(suite, Suite::Codes | Suite::All) {
        for qq in q.map(|q| vec![q]).unwrap_or_else(|| TABLE_GRID.to_vec()) {
            let field = verify_field(qq)?;
            for mm in 1..=4usize {
                if m.map(|want| want != mm).unwrap_or(false) || mm as u64 >= qq {
                    continue;
                }
                report.merge(verify_code_structure(&field, mm));
                report.merge(verify_ghw_relations(&field, mm));
            }
        }
    }
    if matches!(suite, Suite::Spectra | Suite::All) {
        for qq in q.map(|q| vec![q]).unwrap_or_else(|| TABLE_GRID.to_vec()) {
            report.merge(verify_m2_spectra(&verify_field(qq)?));
        }
    }
    if matches!(suite, Suite::Example | Suite::All) {
        report.merge(verify_example_q5_m3());
    }

    let out = render_report(&report, json);
    if report.passed() {
        Ok(out)
    } else {
        Err(CliError { message: out, code: 1 })
    }
}

fn render_report(report: &VerificationReport, json: bool) -> String {
    if json {
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id, "claim": c.claim, "params": c.params,
                    "predicted": c.predicted, "computed": c.computed,
                    "status": if c.status == Status::Pass { "pass" } else { "fail" },
                    "counterexample": c.counterexample,
                })
            })
            .collect();
        let v = json!({ "passed": report.passed(), "checks": checks });
        return format!("{v}\n");
    }
    let mut out = String::new();
    let mut failed = 0u64;
    for c in &report.checks {
        match c.status {
            Status::Pass => {
                let _ = writeln!(out, "PASS {} ({})", c.id, c.params);
            }
            Status::Fail => {
                failed += 1;
                let _ = writeln!(
                    out,
                    "FAIL {} ({}): predicted={} computed={}{}",
                    c.id,
                    c.params,
                    c.predicted,
                    c.computed,
                    c.counterexample
                        .as_deref()
                        .map(|ce| format!(" counterexample={ce}"))
                        .unwrap_or_default()
                );
            }
        }
    }
    let _ = writeln!(out, "passed={} failed={failed}", report.checks.len() as u64 - failed);
    out
}
