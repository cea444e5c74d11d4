//! The `legalc` command line.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser};
use rayon::prelude::*;

use crate::codegen::{generate, serialize, EmitConfig};
use crate::diagnostic::render_diagnostic;
use crate::normalize::preprocess;
use crate::parser::{dump_document, parse_document_traced};
use crate::scanner::dump_token;

/// Process exit status. Batch runs report the highest code seen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitCode {
    Success = 0,
    Rejected = 1,
    Failure = 2,
}

impl From<ExitCode> for std::process::ExitCode {
    fn from(code: ExitCode) -> Self {
        std::process::ExitCode::from(code as u8)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Compile,
    Validate,
    DumpTokens,
    DumpAst,
}

#[derive(Debug, Parser)]
#[command(
    name = "legalc",
    version,
    about = "Validate Arabic legal documents and translate them to XML",
    group(ArgGroup::new("mode").args(["validate", "dump_tokens", "dump_ast"]))
)]
struct Args {
    /// Input files, or "-" for standard input.
    #[arg(required = true, value_name = "INPUT")]
    inputs: Vec<PathBuf>,
    /// Output path; "-" writes to standard output. XML defaults to the
    /// input path with an .xml extension, dumps to standard output.
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Parse only; write nothing.
    #[arg(long)]
    validate: bool,
    /// Print the consumed token stream.
    #[arg(long)]
    dump_tokens: bool,
    /// Print the parsed document tree.
    #[arg(long)]
    dump_ast: bool,
    /// Spaces per nesting level in the XML output.
    #[arg(long, value_name = "N", default_value_t = 2)]
    indent: usize,
    /// Name of the root element.
    #[arg(long, value_name = "NAME", default_value = "document")]
    root_tag: String,
    /// Omit the XML declaration line.
    #[arg(long)]
    no_declaration: bool,
}

#[derive(Debug, Clone)]
pub struct CliOptions {
    pub inputs: Vec<PathBuf>,
    pub output: Option<PathBuf>,
    pub mode: Mode,
    pub emit: EmitConfig,
}

fn is_stdio(p: &Path) -> bool {
    p.as_os_str() == "-"
}

impl CliOptions {
    fn from_args(args: Args) -> Result<CliOptions, String> {
        let mode = if args.validate {
            Mode::Validate
        } else if args.dump_tokens {
            Mode::DumpTokens
        } else if args.dump_ast {
            Mode::DumpAst
        } else {
            Mode::Compile
        };
        let emit = EmitConfig::new(&args.root_tag, args.indent, !args.no_declaration)
            .map_err(|e| e.to_string())?;
        let batch = args.inputs.len() > 1;
        if batch && args.inputs.iter().any(|p| is_stdio(p)) {
            return Err("standard input (\"-\") must be the only input".into());
        }
        if batch && matches!(mode, Mode::DumpTokens | Mode::DumpAst) {
            return Err("dump modes take a single input".into());
        }
        if batch && args.output.is_some() {
            return Err("-o/--output needs a single input".into());
        }
        Ok(CliOptions {
            inputs: args.inputs,
            output: args.output,
            mode,
            emit,
        })
    }
}

#[derive(Default)]
struct Outcome {
    code: Option<ExitCode>,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

impl Outcome {
    fn fail(code: ExitCode, message: String) -> Outcome {
        Outcome {
            code: Some(code),
            stderr: message.into_bytes(),
            ..Default::default()
        }
    }
}

fn display_name(path: &Path) -> String {
    if is_stdio(path) {
        "<stdin>".into()
    } else {
        path.display().to_string()
    }
}

fn output_target(opts: &CliOptions, input: &Path) -> Result<Option<PathBuf>, String> {
    match &opts.output {
        Some(p) if is_stdio(p) => Ok(None),
        Some(p) => Ok(Some(p.clone())),
        None if is_stdio(input) || opts.mode != Mode::Compile => Ok(None),
        None => {
            let out = input.with_extension("xml");
            if out == input {
                return Err(format!(
                    "error: default output for {} would overwrite it; pass -o\n",
                    input.display()
                ));
            }
            Ok(Some(out))
        }
    }
}

fn emit(opts: &CliOptions, input: &Path, bytes: Vec<u8>, outcome: &mut Outcome) {
    match output_target(opts, input) {
        Err(msg) => *outcome = Outcome::fail(ExitCode::Failure, msg),
        Ok(None) => outcome.stdout = bytes,
        Ok(Some(path)) => {
            if let Err(e) = std::fs::write(&path, bytes) {
                *outcome = Outcome::fail(
                    ExitCode::Failure,
                    format!("error: cannot write {}: {e}\n", path.display()),
                );
            }
        }
    }
}

fn process(opts: &CliOptions, input: &Path, raw: std::io::Result<Vec<u8>>) -> Outcome {
    let name = display_name(input);
    if let Err(msg) = output_target(opts, input) {
        return Outcome::fail(ExitCode::Failure, msg);
    }
    let raw = match raw {
        Ok(raw) => raw,
        Err(e) => {
            return Outcome::fail(
                ExitCode::Failure,
                format!("error: cannot read {name}: {e}\n"),
            )
        }
    };
    let text = match preprocess(&raw, &name) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(ExitCode::Failure, format!("error: {name}: {e}\n")),
    };
    let (result, tokens) = parse_document_traced(&text);
    let mut outcome = Outcome::default();
    if opts.mode == Mode::DumpTokens {
        let dump: String = tokens.iter().map(|t| dump_token(t) + "\n").collect();
        emit(opts, input, dump.into_bytes(), &mut outcome);
    }
    match result {
        Err(diagnostics) => {
            outcome.code = Some(ExitCode::Rejected);
            for d in &diagnostics {
                outcome
                    .stderr
                    .extend(render_diagnostic(d, &text).into_bytes());
            }
        }
        Ok(doc) => match opts.mode {
            Mode::Compile => {
                let xml = serialize(&generate(&doc), &opts.emit);
                emit(opts, input, xml, &mut outcome);
            }
            Mode::DumpAst => emit(opts, input, dump_document(&doc).into_bytes(), &mut outcome),
            Mode::Validate | Mode::DumpTokens => {}
        },
    }
    outcome
}

/// Runs the command line with explicit streams. `args` includes the
/// program name.
pub fn run_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = stdout.write_all(rendered.as_bytes());
                ExitCode::Success
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
                ExitCode::Failure
            };
        }
    };
    let opts = match CliOptions::from_args(args) {
        Ok(o) => o,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return ExitCode::Failure;
        }
    };

    let outcomes: Vec<Outcome> = if opts.inputs.len() == 1 && is_stdio(&opts.inputs[0]) {
        let mut buf = Vec::new();
        let raw = stdin.read_to_end(&mut buf).map(|_| buf);
        vec![process(&opts, &opts.inputs[0], raw)]
    } else {
        opts.inputs
            .par_iter()
            .map(|p| process(&opts, p, std::fs::read(p)))
            .collect()
    };

    let mut code = ExitCode::Success;
    for o in outcomes {
        let _ = stdout.write_all(&o.stdout);
        let _ = stderr.write_all(&o.stderr);
        code = code.max(o.code.unwrap_or(ExitCode::Success));
    }
    let _ = stdout.flush();
    let _ = stderr.flush();
    code
}

/// Runs the command line against the process streams.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        args,
        &mut std::io::stdin().lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
