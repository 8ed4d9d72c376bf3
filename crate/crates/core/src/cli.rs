//! Command-line front end: input ingestion, parameters, and output.
//!
//! `minperiod <mp|rmp|lmp|cmp|detect> [--word W | --input PATH [--fasta]]
//! [--k K] [--s S] [--format json|tsv] [--morphism watson-crick|mirror|FILE]
//! [--oracle]`
//!
//! JSON output is one object per input record and line:
//! `{"name", "n", "k", "s", "command", "result", "witness"}` with infinite
//! periods as `null`. TSV prints `position<TAB>value` rows (`inf` for
//! infinity); with several records each block starts with `>name`.
//!
//! Exit codes: 0 on success (detectors included, whatever the verdict), 2 on
//! usage errors, 3 on input or format errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::InvolutionMap;
use crate::mp::compute_mp;
use crate::oracle;
use crate::period::{Period, PeriodArray};
use crate::pseudo::{compute_cmp, detect, Detection, PseudoForm, Witness};
use crate::rmp::{compute_lmp, compute_rmp};
use crate::suffix_tree::SuffixTree;
use crate::word::Word;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "minperiod", version, about = "Minimal k-th power periods and pseudo-power detection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal period of the whole word.
    Mp(Common),
    /// Minimal period of the suffix starting at each position.
    Rmp(Common),
    /// Minimal period of the reversed prefix ending at each position.
    Lmp(Common),
    /// Maximal pseudo-palindrome radius at each center 0..=n.
    Cmp(Common),
    /// Look for a pseudo-power factor of the given form.
    Detect {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        form: FormArg,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Inline word.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    word: Option<String>,
    /// Input file (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Parse the input as FASTA (one word per record, uppercased).
    #[arg(long, requires = "input")]
    fasta: bool,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
    k: u64,
    #[arg(long, default_value_t = 0)]
    s: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// `watson-crick`, `mirror`, or a file of complement pairs.
    #[arg(long, default_value = "mirror")]
    morphism: String,
    /// Use the brute-force reference implementations.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormArg {
    Suffix,
    Prefix,
    Alternating,
}

impl From<FormArg> for PseudoForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Suffix => PseudoForm::Suffix,
            FormArg::Prefix => PseudoForm::Prefix,
            FormArg::Alternating => PseudoForm::Alternating,
        }
    }
}

/// Where the words come from.
#[derive(Debug, Clone)]
pub enum Source {
    Inline(String),
    Path(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Plain,
    Fasta,
}

/// Reads named words. Plain input is the whole content minus one trailing
/// newline; FASTA yields one uppercased word per record.
pub fn ingest(source: &Source, kind: InputKind) -> Result<Vec<(String, Word)>> {
    let (name, bytes) = match source {
        Source::Inline(w) => ("word".to_string(), w.as_bytes().to_vec()),
        Source::Path(p) if p.as_os_str() == "-" => {
            let mut buf = Vec::new();
            std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)?;
            ("stdin".to_string(), buf)
        }
        Source::Path(p) => (
            p.file_name()
                .map_or_else(|| p.display().to_string(), |f| f.to_string_lossy().into_owned()),
            std::fs::read(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        ),
    };
    match kind {
        InputKind::Plain => {
            let mut b = bytes.as_slice();
            if let Some(rest) = b.strip_suffix(b"\n") {
                b = rest.strip_suffix(b"\r").unwrap_or(rest);
            }
            if b.is_empty() {
                return Err(Error::EmptyInput);
            }
            Ok(vec![(name, Word::new(b))])
        }
        InputKind::Fasta => parse_fasta(&bytes),
    }
}

pub fn parse_fasta(bytes: &[u8]) -> Result<Vec<(String, Word)>> {
    let text = String::from_utf8_lossy(bytes);
    let mut records: Vec<(String, Vec<u8>, usize)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if let Some(header) = line.strip_prefix('>') {
            records.push((header.trim().to_string(), Vec::new(), lineno + 1));
        } else if line.trim().is_empty() {
            continue;
        } else {
            let Some((_, seq, _)) = records.last_mut() else {
                return Err(Error::MalformedFasta {
                    line: lineno + 1,
                    reason: "sequence before the first header".into(),
                });
            };
            seq.extend(
                line.bytes()
                    .filter(|b| !b.is_ascii_whitespace())
                    .map(|b| b.to_ascii_uppercase()),
            );
        }
    }
    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    records
        .into_iter()
        .map(|(name, seq, line)| {
            if seq.is_empty() {
                Err(Error::MalformedFasta {
                    line,
                    reason: format!("record {name:?} has no sequence"),
                })
            } else {
                Ok((name, Word::new(seq)))
            }
        })
        .collect()
}

pub fn load_morphism(spec: &str) -> Result<InvolutionMap> {
    match spec {
        "watson-crick" => Ok(InvolutionMap::watson_crick()),
        "mirror" => Ok(InvolutionMap::mirror()),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidMorphism(format!("{path}: {e}")))?;
            InvolutionMap::parse(&text)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Period(Period),
    Periods(PeriodArray),
    Radii(Vec<usize>),
    Verdict {
        verdict: String,
        avoids: String,
        form: PseudoForm,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub position: usize,
    pub x: String,
}

/// One record's output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub command: String,
    pub result: Payload,
    pub witness: Option<WitnessOut>,
}

/// Exit code plus captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code: if code == 0 { 0 } else { EXIT_USAGE },
                stdout,
                stderr,
            };
        }
    };
    match execute(cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: match e {
                Error::InvalidExponent { .. } => EXIT_USAGE,
                _ => EXIT_INPUT,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: Cli) -> Result<String> {
    let (command, common, form) = match cli.command {
        Command::Mp(c) => ("mp", c, None),
        Command::Rmp(c) => ("rmp", c, None),
        Command::Lmp(c) => ("lmp", c, None),
        Command::Cmp(c) => ("cmp", c, None),
        Command::Detect { common, form } => ("detect", common, Some(PseudoForm::from(form))),
    };
    let source = match (&common.word, &common.input) {
        (Some(w), _) => Source::Inline(w.clone()),
        (None, Some(p)) => Source::Path(p.clone()),
        (None, None) => unreachable!("clap requires one input"),
    };
    let kind = if common.fasta {
        InputKind::Fasta
    } else {
        InputKind::Plain
    };
    let records = ingest(&source, kind)?;
    let phi = match command {
        "cmp" | "detect" => Some(Arc::new(load_morphism(&common.morphism)?)),
        _ => None,
    };
    let (k, s) = (common.k as usize, common.s as usize);

    let reports: Vec<Report> = records
        .par_iter()
        .map(|(name, word)| {
            let (result, witness) = evaluate(command, form, word, k, s, phi.as_deref(), common.oracle)?;
            Ok(Report {
                name: name.clone(),
                n: word.len(),
                k,
                s,
                command: command.to_string(),
                result,
                witness,
            })
        })
        .collect::<Result<_>>()?;

    Ok(match common.format {
        Format::Json => reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("reports serialize") + "\n")
            .collect(),
        Format::Tsv => render_tsv(&reports),
    })
}

fn evaluate(
    command: &str,
    form: Option<PseudoForm>,
    word: &Word,
    k: usize,
    s: usize,
    phi: Option<&InvolutionMap>,
    use_oracle: bool,
) -> Result<(Payload, Option<WitnessOut>)> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let payload = match command {
        "mp" if use_oracle => Payload::Period(oracle::mp_oracle(word, s, k)),
        "mp" => {
            let tree = SuffixTree::build(Arc::from(word.text()), word.sigma(), 1, word.len())?;
            Payload::Period(compute_mp(&tree, s, k)?)
        }
        "rmp" if use_oracle => Payload::Periods(oracle::rmp_oracle(word, s, k)),
        "rmp" => Payload::Periods(compute_rmp(word, s, k)?),
        "lmp" if use_oracle => Payload::Periods(oracle::lmp_oracle(word, s, k)),
        "lmp" => Payload::Periods(compute_lmp(word, s, k)?),
        "cmp" => {
            let phi = phi.expect("cmp loads a morphism");
            let cmp = if use_oracle {
                phi.covers(word.raw())?;
                oracle::cmp_oracle(word, phi)
            } else {
                compute_cmp(word, phi)?
            };
            Payload::Radii(cmp.as_slice().to_vec())
        }
        "detect" => {
            let phi = phi.expect("detect loads a morphism");
            let form = form.expect("detect has a form");
            let detection = if use_oracle {
                phi.covers(word.raw())?;
                match oracle::detect_oracle(word, phi, k, s, form) {
                    Some((position, p)) => Detection::Found(Witness {
                        position,
                        x: word.factor(position, position + p - 1).to_vec(),
                    }),
                    None => Detection::NotFound,
                }
            } else {
                detect(word, phi, form, k, s)?
            };
            let witness = detection.witness().map(|w| WitnessOut {
                position: w.position,
                x: String::from_utf8_lossy(&w.x).into_owned(),
            });
            return Ok((
                Payload::Verdict {
                    verdict: detection.verdict().into(),
                    avoids: detection.avoids().into(),
                    form,
                },
                witness,
            ));
        }
        other => unreachable!("unknown command {other}"),
    };
    Ok((payload, None))
}

fn render_tsv(reports: &[Report]) -> String {
    let mut out = String::new();
    let many = reports.len() > 1;
    for r in reports {
        if many {
            let _ = writeln!(out, ">{}", r.name);
        }
        match &r.result {
            Payload::Period(p) => {
                let _ = writeln!(out, "{p}");
            }
            Payload::Periods(a) => {
                for (i, p) in a.iter().enumerate() {
                    let _ = writeln!(out, "{}\t{p}", i + 1);
                }
            }
            Payload::Radii(c) => {
                for (i, m) in c.iter().enumerate() {
                    let _ = writeln!(out, "{i}\t{m}");
                }
            }
            Payload::Verdict { verdict, avoids, form } => {
                let (pos, x) = match &r.witness {
                    Some(w) => (w.position.to_string(), w.x.clone()),
                    None => ("-".into(), "-".into()),
                };
                let _ = writeln!(out, "{form}\t{verdict}\t{avoids}\t{pos}\t{x}");
            }
        }
    }
    out
}
