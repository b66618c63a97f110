//! The `codecalc` command line: argument handling, dispatch and output.
//!
//! [`run`] takes the argument list and two writers and returns the exit
//! status, so the binary and the tests drive exactly the same code.
//!
//! Exit status: 0 on success, 1 for usage, parse and domain errors, 2 when an
//! internal invariant fails or a verification run finds disagreements.

pub mod args;
pub mod corpus;
pub mod output;

use std::ffi::OsString;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};

use codecalc_core::bernstein::{bernstein_series, bernstein_series_window, bn_action};
use codecalc_core::codes::{
    decode_code, encode_code, reading_straighten_letters, straighten_code_traced, CodeWord,
};
use codecalc_core::index::{parse_integers, render_parts};
use codecalc_core::oracle::exponent_straighten;
use codecalc_core::qvertex::{q_series_i_form, q_series_j_form, straighten_y_code_traced, straighten_y_perm, yn_action};
use codecalc_core::shifted::{
    decode_shifted, encode_shifted, preshift, shifted_straighten_traced, ShiftedCodeWord,
};
use codecalc_core::verify::{run_suite, Bounds, Suite, VerifyReport};
use codecalc_core::{Composition, Execution, Partition, StrictPartition};

use args::{ActArgs, Algebra, Cli, CodeArgs, Command, Form, Method, SeriesArgs, StraightenArgs, VerifyArgs};
use output::{to_json, CodeRecord, FailureRecord, Format, ReportRecord, SignedRecord, TermRecord};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(codecalc_core::Error),
    Io(io::Error),
    /// A verification run finished with this many failures.
    Failures(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Core(e) if e.is_invariant() => 2,
            CliError::Core(_) => 1,
            CliError::Failures(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Failures(n) => write!(f, "verification failed: {n} failures"),
        }
    }
}

impl From<codecalc_core::Error> for CliError {
    fn from(e: codecalc_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (program name first), runs the command and returns the
/// exit status. Errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_stdout = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if to_stdout { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if to_stdout { 0 } else { 1 };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Code(a) => code(a, cli.format, out),
        Command::Straighten(a) => straighten(a, cli.format, out),
        Command::Act(a) => act(a, cli.format, out),
        Command::Series(a) => series(a, cli.format, out),
        Command::Verify(a) => verify(a, cli.format, out),
    }
}

fn composition(text: &str) -> CliResult<Composition> {
    Ok(Composition::new(parse_integers(text)?))
}

fn partition(text: &str) -> CliResult<Partition> {
    Ok(Partition::new(parse_integers(text)?)?)
}

fn strict_partition(text: &str) -> CliResult<StrictPartition> {
    Ok(StrictPartition::new(parse_integers(text)?)?)
}

fn emit_signed(record: &SignedRecord, symbol: &str, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Text => writeln!(out, "{}", record.to_text(symbol))?,
        Format::Json => writeln!(out, "{}", to_json(record))?,
    }
    Ok(())
}

fn code(a: &CodeArgs, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let record = match (&a.decode, &a.index) {
        (Some(word), _) => {
            if a.preshifted {
                return Err(CliError::Usage("--decode does not take --preshifted".into()));
            }
            if a.shifted {
                let w = ShiftedCodeWord::parse(word)?;
                CodeRecord {
                    kind: "shifted".into(),
                    code: w.to_string(),
                    rows: w.rows(),
                    index: decode_shifted(&w).into_parts(),
                }
            } else {
                let w = CodeWord::parse(word)?;
                CodeRecord {
                    kind: "plain".into(),
                    code: w.to_string(),
                    rows: w.rows(),
                    index: decode_code(&w).into_parts(),
                }
            }
        }
        (None, Some(text)) => {
            let mu = composition(text)?;
            let (kind, code) = if a.shifted {
                ("shifted", encode_shifted(&mu)?.to_string())
            } else if a.preshifted {
                ("preshifted", preshift(&encode_code(&mu)?)?.render())
            } else {
                ("plain", encode_code(&mu)?.to_string())
            };
            CodeRecord {
                kind: kind.into(),
                code,
                rows: mu.len(),
                index: mu.into_parts(),
            }
        }
        (None, None) => return Err(CliError::Usage("code needs --index or --decode".into())),
    };
    match format {
        Format::Text if a.decode.is_some() => writeln!(out, "{}", render_parts(&record.index))?,
        Format::Text => writeln!(out, "{}", record.code)?,
        Format::Json => writeln!(out, "{}", to_json(&record))?,
    }
    Ok(())
}

fn methods_for(algebra: Algebra) -> &'static [Method] {
    match algebra {
        Algebra::B => &[Method::Code, Method::Reading, Method::Oracle],
        Algebra::Q => &[Method::Code, Method::Perm, Method::Shifted],
    }
}

/// Runs one straightening method; `trace` asks for the step record.
fn straighten_with(algebra: Algebra, method: Method, mu: &Composition, trace: bool) -> CliResult<SignedRecord> {
    let pick = |plain: SignedRecord, traced: SignedRecord| if trace { traced } else { plain };
    Ok(match (algebra, method) {
        (Algebra::B, Method::Code) => {
            let run = straighten_code_traced(&encode_code(mu)?)?;
            pick(SignedRecord::new(&run.result), SignedRecord::traced(&run))
        }
        (Algebra::B, Method::Reading) => {
            let run = reading_straighten_letters(encode_code(mu)?.letters())?;
            pick(SignedRecord::new(&run.result), SignedRecord::traced(&run))
        }
        (Algebra::B, Method::Oracle) => SignedRecord::new(&exponent_straighten(mu)),
        (Algebra::Q, Method::Code) => {
            let run = straighten_y_code_traced(mu)?;
            pick(SignedRecord::new(&run.result), SignedRecord::traced(&run))
        }
        (Algebra::Q, Method::Perm) => SignedRecord::new(&straighten_y_perm(mu)?),
        (Algebra::Q, Method::Shifted) => {
            let run = shifted_straighten_traced(&encode_shifted(mu)?)?;
            pick(SignedRecord::new(&run.result), SignedRecord::traced(&run))
        }
        (algebra, method) => {
            return Err(CliError::Usage(format!(
                "method {} does not apply to algebra {}",
                value_name(method),
                value_name(algebra)
            )))
        }
    })
}

fn value_name<V: ValueEnum>(v: V) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

fn straighten(a: &StraightenArgs, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let mu = composition(&a.index)?;
    if a.trace && matches!(a.method, Method::Oracle | Method::Perm) {
        return Err(CliError::Usage("--trace needs a code-based method".into()));
    }
    let record = if a.method == Method::All {
        let mut results = Vec::new();
        for &method in methods_for(a.algebra) {
            results.push((method, straighten_with(a.algebra, method, &mu, false)?));
        }
        let (first_method, first) = &results[0];
        for (method, r) in &results[1..] {
            if r != first {
                return Err(CliError::Core(codecalc_core::Error::Invariant(format!(
                    "{mu}: {} gives {} but {} gives {}",
                    value_name(*first_method),
                    to_json(first),
                    value_name(*method),
                    to_json(r)
                ))));
            }
        }
        if a.trace {
            straighten_with(a.algebra, Method::Code, &mu, true)?
        } else {
            first.clone()
        }
    } else {
        straighten_with(a.algebra, a.method, &mu, a.trace)?
    };
    let symbol = match a.algebra {
        Algebra::B => "B",
        Algebra::Q => "Y",
    };
    emit_signed(&record, symbol, format, out)
}

fn act(a: &ActArgs, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let (record, symbol) = match a.algebra {
        Algebra::B => (SignedRecord::new(&bn_action(a.n, &partition(&a.index)?)?), "s"),
        Algebra::Q => (SignedRecord::new(&yn_action(a.n, &strict_partition(&a.index)?)?), "Q"),
    };
    emit_signed(&record, symbol, format, out)
}

const DEFAULT_SERIES_BOUND: u64 = 10;

fn series(a: &SeriesArgs, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let terms: Vec<TermRecord> = match a.algebra {
        Algebra::B => {
            if a.n_max.is_some() {
                return Err(CliError::Usage("--n-max applies to --algebra q; use --t-max".into()));
            }
            let lambda = partition(&a.index)?;
            let terms = match a.t_max {
                Some(t_max) => bernstein_series_window(&lambda, t_max)?,
                None => bernstein_series(&lambda, a.i_max.unwrap_or(DEFAULT_SERIES_BOUND))?,
            };
            terms.iter().map(TermRecord::from).collect()
        }
        Algebra::Q => {
            if a.t_max.is_some() {
                return Err(CliError::Usage("--t-max applies to --algebra b; use --n-max".into()));
            }
            let lambda = strict_partition(&a.index)?;
            let terms = match a.form {
                Form::J => q_series_j_form(&lambda, a.n_max.unwrap_or(DEFAULT_SERIES_BOUND as i64))?,
                Form::I => q_series_i_form(&lambda, a.i_max.unwrap_or(DEFAULT_SERIES_BOUND))?,
            };
            terms.iter().map(TermRecord::from).collect()
        }
    };
    for term in &terms {
        match format {
            Format::Text => writeln!(out, "{}", term.to_text())?,
            Format::Json => writeln!(out, "{}", to_json(term))?,
        }
    }
    Ok(())
}

fn bounds_from(a: &VerifyArgs, suite: Suite) -> Bounds {
    let mut b = Bounds::for_suite(suite);
    if let Some(v) = a.max_part {
        b.max_part = v;
    }
    if let Some(v) = a.max_len {
        b.max_len = v;
    }
    if let Some(v) = a.max_size {
        b.max_size = v;
    }
    if let Some(v) = a.i_max {
        b.i_max = v;
    }
    if let Some(v) = a.window {
        b.window = v;
    }
    if let Some(v) = a.words {
        b.random_words = v;
    }
    if let Some(v) = a.seed {
        b.seed = v;
    }
    b
}

fn verify(a: &VerifyArgs, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let execution = if a.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let report: VerifyReport = if a.suite == "corpus" {
        let path = a
            .file
            .as_ref()
            .ok_or_else(|| CliError::Usage("--suite corpus needs --file".into()))?;
        corpus::replay_file(path)?
    } else {
        let suite: Suite = a.suite.parse().map_err(|_| {
            CliError::Usage(format!(
                "unknown suite {:?}; expected codes, bernstein, qvertex, shifted, oracle, all or corpus",
                a.suite
            ))
        })?;
        run_suite(suite, &bounds_from(a, suite), execution)
    };
    let summary = ReportRecord::from(&report);
    match format {
        Format::Text => writeln!(out, "{}", summary.to_text())?,
        Format::Json => writeln!(out, "{}", to_json(&summary))?,
    }
    let failures: Vec<FailureRecord> = report.failures.iter().map(FailureRecord::from).collect();
    match &a.output {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            for f in &failures {
                writeln!(file, "{}", to_json(f))?;
            }
            file.flush()?;
        }
        None => {
            for f in &failures {
                match format {
                    Format::Text => writeln!(out, "FAIL {}: expected {}, got {}", f.input, f.expected, f.got)?,
                    Format::Json => writeln!(out, "{}", to_json(f))?,
                }
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failures(failures.len()))
    }
}
