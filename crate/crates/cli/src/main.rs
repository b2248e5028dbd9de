//! `ston` command-line tool.

use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ston::bench::measure;
use ston::canon::{format_canonical, format_min, serialize_canonical};
use ston::encode::{Encoder, SensePolicy};
use ston::interchange::{from_tree, to_tree, ExportError};
use ston::lexicon::Lexicon;
use ston::realize::{realize_sentences, RealizeError};
use ston::stats::stats;
use ston::validate::{has_errors, validate, Diagnostic};
use ston::{parse, Document, ParseError};

const OK: u8 = 0;
const INVALID: u8 = 1;
const SYNTAX: u8 = 2;
const IO: u8 = 3;
const USAGE: u8 = 64;

const LEXICON_HELP: &str = "Lexicon file (TSV). Resolution order: this flag, then the \
STON_LEXICON environment variable, then the bundled mini-lexicon";

#[derive(Parser)]
#[command(name = "ston", version, about = "Parse, check, format and realize STON sentence documents")]
#[command(after_help = "Use `-` as a file name to read standard input.\n\n\
Exit status: 0 success, 1 validation errors, 2 parse or encode errors, \
3 I/O or lexicon errors, 64 usage errors.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tree,
}

#[derive(Subcommand)]
enum Command {
    /// Report diagnostics; exits 1 if any is an error
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the canonical form
    Fmt {
        file: PathBuf,
        /// Rewrite the file in place
        #[arg(short)]
        w: bool,
    },
    /// Print the minified form
    Min {
        file: PathBuf,
        /// Rewrite the file in place
        #[arg(short)]
        w: bool,
    },
    /// Corpus counts over one or more documents
    Stats {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Convert a document to the JSON interchange tree
    Export { file: PathBuf },
    /// Convert a JSON interchange tree back to canonical text
    Import { file: PathBuf },
    /// Render a document as English text
    Realize {
        file: PathBuf,
        #[arg(long, env = "STON_LEXICON", help = LEXICON_HELP)]
        lexicon: Option<PathBuf>,
        #[arg(long, default_value = "en")]
        lang: String,
    },
    /// Encode English sentences, one per input line, into a single document
    Encode {
        #[arg(long, env = "STON_LEXICON", help = LEXICON_HELP)]
        lexicon: Option<PathBuf>,
        /// Fail on words with several senses instead of taking the lowest offset
        #[arg(long)]
        strict: bool,
    },
    /// Time repeated parses of a document
    Bench {
        file: PathBuf,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        iterations: u64,
    },
}

/// A failure already reported to the user, carrying the exit status.
struct Exit(u8);

type Outcome = Result<u8, Exit>;

fn is_stdin(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn display(path: &Path) -> String {
    if is_stdin(path) {
        "<stdin>".into()
    } else {
        path.display().to_string()
    }
}

fn read(path: &Path) -> Result<String, Exit> {
    let result = if is_stdin(path) {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    };
    result.map_err(|e| {
        eprintln!("ston: {}: {e}", display(path));
        Exit(IO)
    })
}

fn report_parse(path: &Path, errors: &[ParseError]) -> Exit {
    for e in errors {
        eprintln!("{}:{e}", display(path));
    }
    Exit(SYNTAX)
}

fn load(path: &Path) -> Result<Document, Exit> {
    let text = read(path)?;
    parse(&text).map_err(|errs| report_parse(path, &errs))
}

fn report_diagnostics(path: &Path, diagnostics: &[Diagnostic]) {
    for d in diagnostics {
        eprintln!("{}: {d}", display(path));
    }
}

fn emit(text: &str) -> Result<(), Exit> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| {
        eprintln!("ston: {e}");
        Exit(IO)
    })
}

fn lexicon(path: Option<&Path>) -> Result<Lexicon, Exit> {
    match path {
        None => Ok(Lexicon::bundled()),
        Some(p) => Lexicon::load(p).map_err(|e| {
            eprintln!("ston: {e}");
            Exit(IO)
        }),
    }
}

fn diagnostic_value(file: &Path, d: &Diagnostic) -> Value {
    json!({
        "file": display(file),
        "severity": d.severity.to_string(),
        "code": d.code.as_str(),
        "subject": d.subject.to_string(),
        "message": d.message,
    })
}

fn parse_error_value(file: &Path, e: &ParseError) -> Value {
    json!({
        "file": display(file),
        "severity": "ERROR",
        "code": e.code.as_str(),
        "line": e.location.line,
        "column": e.location.column,
        "message": e.message,
    })
}

fn cmd_validate(files: &[PathBuf], format: Format) -> Outcome {
    let mut status = OK;
    let mut tree = Vec::new();
    for file in files {
        let text = match read(file) {
            Ok(t) => t,
            Err(Exit(code)) => {
                status = status.max(code);
                continue;
            }
        };
        match parse(&text) {
            Ok(doc) => {
                let diagnostics = validate(&doc);
                if has_errors(&diagnostics) {
                    status = status.max(INVALID);
                }
                match format {
                    Format::Text => report_diagnostics(file, &diagnostics),
                    Format::Tree => tree.extend(diagnostics.iter().map(|d| diagnostic_value(file, d))),
                }
            }
            Err(errs) => {
                status = status.max(SYNTAX);
                match format {
                    Format::Text => {
                        report_parse(file, &errs);
                    }
                    Format::Tree => tree.extend(errs.iter().map(|e| parse_error_value(file, e))),
                }
            }
        }
    }
    if format == Format::Tree {
        emit(&format!("{}\n", Value::Array(tree)))?;
    }
    Ok(status)
}

fn cmd_format(file: &Path, in_place: bool, formatter: fn(&Document) -> String) -> Outcome {
    if in_place && is_stdin(file) {
        eprintln!("ston: -w needs a file, not standard input");
        return Err(Exit(USAGE));
    }
    let text = formatter(&load(file)?);
    if in_place {
        fs::write(file, text).map_err(|e| {
            eprintln!("ston: {}: {e}", display(file));
            Exit(IO)
        })?;
    } else {
        emit(&text)?;
    }
    Ok(OK)
}

fn cmd_stats(files: &[PathBuf], format: Format) -> Outcome {
    let docs = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
    let s = stats(&docs);
    match format {
        Format::Text => emit(&format!("{s}\n"))?,
        Format::Tree => emit(&format!("{}\n", s.to_value()))?,
    }
    Ok(OK)
}

fn cmd_export(file: &Path) -> Outcome {
    let doc = load(file)?;
    match to_tree(&doc) {
        Ok(tree) => {
            emit(&format!("{tree}\n"))?;
            Ok(OK)
        }
        Err(ExportError::Invalid(diagnostics)) => {
            report_diagnostics(file, &diagnostics);
            Ok(INVALID)
        }
    }
}

fn cmd_import(file: &Path) -> Outcome {
    let text = read(file)?;
    let doc = from_tree(&text).map_err(|errs| {
        for e in errs {
            eprintln!("{}:{}: {}: {}", display(file), e.path, e.kind, e.message);
        }
        Exit(SYNTAX)
    })?;
    match serialize_canonical(&doc) {
        Ok(text) => {
            emit(&text)?;
            Ok(OK)
        }
        Err(ston::canon::CanonError::Invalid(diagnostics)) => {
            report_diagnostics(file, &diagnostics);
            Ok(INVALID)
        }
    }
}

fn cmd_realize(file: &Path, lex: Option<&Path>, lang: &str) -> Outcome {
    if lang != "en" {
        eprintln!("ston: no realizer for language `{lang}` (available: en)");
        return Err(Exit(USAGE));
    }
    let lex = lexicon(lex)?;
    let doc = load(file)?;
    let lines = match realize_sentences(&doc, &lex) {
        Ok(lines) => lines,
        Err(RealizeError::Invalid(diagnostics)) => {
            report_diagnostics(file, &diagnostics);
            return Ok(INVALID);
        }
        Err(e) => {
            eprintln!("ston: {e}");
            return Ok(IO);
        }
    };
    let mut out = String::new();
    let mut status = OK;
    for (i, line) in lines.into_iter().enumerate() {
        match line {
            Ok(text) => {
                out.push_str(&text);
                out.push('\n');
            }
            Err(e) => {
                eprintln!("{}: sentence #{}: {e}", display(file), i + 1);
                status = IO;
            }
        }
    }
    emit(&out)?;
    Ok(status)
}

fn cmd_encode(lex: Option<&Path>, strict: bool) -> Outcome {
    let lex = lexicon(lex)?;
    let policy = if strict {
        SensePolicy::Strict
    } else {
        SensePolicy::LowestOffset
    };
    let mut encoder = Encoder::new(&lex).with_policy(policy);
    let mut status = OK;
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line.map_err(|e| {
            eprintln!("ston: {e}");
            Exit(IO)
        })?;
        if line.trim().is_empty() {
            continue;
        }
        if let Err(e) = encoder.push(line.trim()) {
            eprintln!("<stdin>:{}: {e}", i + 1);
            status = SYNTAX;
        }
    }
    if status != OK {
        return Ok(status);
    }
    let encoded = encoder.finish();
    eprint!("{encoded}");
    emit(&format_canonical(&encoded.document))?;
    Ok(OK)
}

fn cmd_bench(file: &Path, iterations: u64) -> Outcome {
    let text = read(file)?;
    let report = measure(&text, iterations as usize).map_err(|errs| report_parse(file, &errs))?;
    emit(&format!("{report}\n"))?;
    Ok(OK)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { files, format } => cmd_validate(&files, format),
        Command::Fmt { file, w } => cmd_format(&file, w, format_canonical),
        Command::Min { file, w } => cmd_format(&file, w, format_min),
        Command::Stats { files, format } => cmd_stats(&files, format),
        Command::Export { file } => cmd_export(&file),
        Command::Import { file } => cmd_import(&file),
        Command::Realize { file, lexicon, lang } => cmd_realize(&file, lexicon.as_deref(), &lang),
        Command::Encode { lexicon, strict } => cmd_encode(lexicon.as_deref(), strict),
        Command::Bench { file, iterations } => cmd_bench(&file, iterations),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match run(cli) {
        Ok(code) | Err(Exit(code)) => ExitCode::from(code),
    }
}
