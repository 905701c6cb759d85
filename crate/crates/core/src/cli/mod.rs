//! Command-line front end. [`run`] takes the argument list and the three
//! standard streams so it can be driven in-process by tests.
//!
//! Exit codes: 0 success, 1 a partition failed verification, 2 bad usage
//! or unreadable input, 3 a size guard or search budget was hit.

pub mod json;
pub mod parse;
pub mod render;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{analyze, AnalyzeOptions, Construction};
use crate::bench::{run_bench, BenchOptions};
use crate::error::{Error, Result};
use crate::hochster::projective_dimension;
use crate::monomial::Ideal;
use crate::sv::{
    construct_lcm_iteration, construct_prop1, default_lcm_steps, emit_certificate,
    search_min_partition, verify_partition, SvPartition, DEFAULT_SEARCH_BUDGET,
};

use self::json::{AnalysisJson, CertificateJson, IdealJson, PartitionJson, PdJson, VerifyJson, SCHEMA};
use self::parse::{IdealDocument, PartitionDocument};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "sqfree-ara",
    version,
    about = "Arithmetical rank bounds and certificates for squarefree monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants, minimal primes, all constructions, pd and the bounds report.
    Analyze {
        /// Ideal document; `-` or absent reads stdin.
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Skip the projective dimension computation.
        #[arg(long)]
        no_pd: bool,
        /// Skip the minimal-partition search.
        #[arg(long)]
        no_search: bool,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        search_budget: u64,
        /// Keep non-minimal elements in the prop1 layers.
        #[arg(long)]
        no_prune: bool,
    },
    /// Build one partition and print its certificate.
    Construct {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long)]
        no_prune: bool,
        /// Step cap for the lcm iteration (default mu + n).
        #[arg(long)]
        max_steps: Option<usize>,
        /// Node budget for the search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Raise every partition element to this power in the certificate.
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[arg(long)]
        json: bool,
        /// Print the partition as a document accepted by `verify`.
        #[arg(long)]
        emit_partition: bool,
    },
    /// Check a partition document and print its certificate.
    Verify {
        /// Partition document; `-` or absent reads stdin.
        input: Option<PathBuf>,
        /// Check against this ideal instead of the document's target.
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[arg(long)]
        json: bool,
    },
    /// Projective dimension of R/I over the rationals.
    Pd {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate bound comparisons on small and random ideals.
    Bench {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random ideals for each n in 7..=9.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// Enumerate every ideal up to symmetry for n up to this value (at most 6).
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(0..=6))]
        exhaustive_max_n: u8,
        #[arg(long, default_value_t = 8)]
        max_gens: usize,
        #[arg(long, default_value_t = 2_000_000)]
        search_budget: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Prop1,
    Lcm,
    Search,
}

struct Io<'a, I, O, E> {
    stdin: &'a mut I,
    out: &'a mut O,
    err: &'a mut E,
}

pub fn run(
    args: impl IntoIterator<Item = String>,
    stdin: &mut impl Read,
    out: &mut impl Write,
    err: &mut impl Write,
) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget(_) | Error::TooLarge { .. } => EXIT_LIMIT,
        Error::InvalidPartition(_) => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

fn dispatch<I: Read, O: Write, E: Write>(command: Command, io: &mut Io<'_, I, O, E>) -> Result<u8> {
    match command {
        Command::Analyze { input, json, no_pd, no_search, search_budget, no_prune } => {
            let (ideal, name) = read_ideal(input.as_ref(), io)?;
            let options = AnalyzeOptions {
                pd: !no_pd,
                search: !no_search,
                search_budget,
                prune: !no_prune,
                lcm_steps: None,
            };
            let a = analyze(&ideal, &options);
            let text = if json {
                json::to_pretty(&AnalysisJson::new(&a, name.as_deref()))
            } else {
                render::analysis(&a, name.as_deref())
            };
            emit(io, &text)?;
            Ok(if a.limited { EXIT_LIMIT } else { EXIT_OK })
        }
        Command::Construct { input, method, no_prune, max_steps, budget, power, json, emit_partition } => {
            let (ideal, _) = read_ideal(input.as_ref(), io)?;
            let (partition, optimal) = match method {
                MethodArg::Prop1 => (construct_prop1(&ideal, !no_prune)?.0, true),
                MethodArg::Lcm => {
                    let steps = max_steps.unwrap_or_else(|| default_lcm_steps(&ideal));
                    (construct_lcm_iteration(&ideal, steps)?.0, true)
                }
                MethodArg::Search => {
                    let outcome = search_min_partition(&ideal, budget)?;
                    (outcome.partition, outcome.optimal)
                }
            };
            let partition = partition.with_uniform_exponent(power)?;
            let certificate = emit_certificate(&partition)?;
            let verified = verify_partition(&partition).is_ok();
            let c = Construction { partition, certificate, optimal };
            let text = if emit_partition {
                PartitionDocument::render(&c.partition)
            } else if json {
                let mut doc = serde_json::to_value(CertificateJson::new(&c)).expect("serializable");
                doc["schema"] = SCHEMA.into();
                json::to_pretty(&doc)
            } else {
                let mut text = render::construction(&c);
                text.push_str("  partition:\n");
                text.push_str(&render::partition_summary(&c.partition));
                text
            };
            emit(io, &text)?;
            if !optimal {
                let _ = writeln!(io.err, "warning: search budget exhausted; the certificate may not be minimal");
            }
            Ok(match (verified, optimal) {
                (false, _) => EXIT_VERIFY,
                (true, false) => EXIT_LIMIT,
                (true, true) => EXIT_OK,
            })
        }
        Command::Verify { input, ideal, power, json } => {
            let text = read_input(input.as_ref(), io)?;
            let mut partition = read_partition(&text)?;
            if let Some(path) = ideal {
                let (target, _) = read_ideal(Some(&path), io)?;
                partition = SvPartition::new(partition.parts().to_vec(), target)?.with_origin(partition.origin());
            }
            if power != 1 {
                partition = partition.with_uniform_exponent(power)?;
            }
            let result = verify_partition(&partition);
            let polynomials = match result {
                Ok(()) => emit_certificate(&partition)?.q.iter().map(ToString::to_string).collect(),
                Err(_) => Vec::new(),
            };
            let report = VerifyJson {
                schema: SCHEMA,
                ok: result.is_ok(),
                violation: result.as_ref().err().map(ToString::to_string),
                parts: partition.len(),
                polynomials,
            };
            let text = if json {
                json::to_pretty(&report)
            } else {
                match &report.violation {
                    None => {
                        let mut s = format!("ok: {} parts\n", report.parts);
                        for (i, q) in report.polynomials.iter().enumerate() {
                            s.push_str(&format!("q{i} = {q}\n"));
                        }
                        s
                    }
                    Some(v) => format!("violation: {v}\n"),
                }
            };
            emit(io, &text)?;
            Ok(if report.ok { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Pd { input, json } => {
            let (ideal, name) = read_ideal(input.as_ref(), io)?;
            let result = projective_dimension(&ideal)?;
            let text = if json {
                json::to_pretty(&PdJson { schema: SCHEMA, ideal: IdealJson::new(&ideal, name.as_deref()), result })
            } else {
                render::pd(&ideal, &result)
            };
            emit(io, &text)?;
            Ok(EXIT_OK)
        }
        Command::Bench { seed, samples, exhaustive_max_n, max_gens, search_budget, json } => {
            if max_gens == 0 {
                return Err(Error::Parse { line: 1, column: 1, message: "--max-gens must be positive".into() });
            }
            let options = BenchOptions {
                seed,
                samples,
                exhaustive_max_n: usize::from(exhaustive_max_n),
                max_gens,
                search_budget,
            };
            let report = run_bench(&options);
            let text = if json { json::to_pretty(&report) } else { crate::bench::render_text(&report) };
            emit(io, &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn emit<I, O: Write, E>(io: &mut Io<'_, I, O, E>, text: &str) -> Result<()> {
    io.out
        .write_all(text.as_bytes())
        .and_then(|()| io.out.flush())
        .map_err(|e| Error::Parse { line: 0, column: 0, message: format!("cannot write output: {e}") })
}

fn read_input<I: Read, O, E>(path: Option<&PathBuf>, io: &mut Io<'_, I, O, E>) -> Result<String> {
    let mut text = String::new();
    let result = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map(|s| text = s),
        _ => io.stdin.read_to_string(&mut text).map(|_| ()),
    };
    result.map_err(|e| {
        let source = path.map_or("stdin".to_string(), |p| p.display().to_string());
        Error::Parse { line: 0, column: 0, message: format!("cannot read {source}: {e}") }
    })?;
    Ok(text)
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Reads an ideal document (text or JSON) and reports dropped generators on stderr.
fn read_ideal<I: Read, O, E: Write>(
    path: Option<&PathBuf>,
    io: &mut Io<'_, I, O, E>,
) -> Result<(Ideal, Option<String>)> {
    let text = read_input(path, io)?;
    let doc = if is_json(&text) {
        let doc = IdealJson::parse(&text)?;
        IdealDocument { n: doc.n, name: doc.name.clone(), generators: doc.monomials()? }
    } else {
        IdealDocument::parse(&text)?
    };
    let (ideal, warnings) = doc.to_ideal()?;
    for w in warnings {
        let _ = writeln!(io.err, "warning: {w}");
    }
    Ok((ideal, doc.name))
}

fn read_partition(text: &str) -> Result<SvPartition> {
    if is_json(text) {
        PartitionJson::parse(text)?.to_partition()
    } else {
        PartitionDocument::parse(text)?.to_partition()
    }
}
