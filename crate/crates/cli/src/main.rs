//! `adfa`: generate, count, canonicalize and check acyclic DFAs from the shell.
//!
//! Exit status is 0 on success, 1 on bad arguments or malformed input, and 2
//! when the input is well formed but rejected (invalid string, word not
//! accepted, formula outside its range, non-minimal input in minimal mode).

use std::fs::File;
use std::io::{self, BufRead, BufWriter, Read, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;

use adfa::json::AutomatonJson;
use adfa::oracle::oracle_count;
use adfa::{encode, validate, Automaton, CanonicalString, Error, Generator, Mode};
use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "adfa",
    version,
    about = "Acyclic DFA enumeration and canonical forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every canonical string, one per line, in increasing order.
    Generate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        states: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        alphabet: u64,
        /// Minimal automata only.
        #[arg(long)]
        minimal: bool,
        /// Stop after this many strings.
        #[arg(long)]
        limit: Option<u64>,
        /// Split the search into this many concurrently run pieces.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        partitions: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the number of automata.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        states: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        alphabet: u64,
        #[arg(long)]
        minimal: bool,
        #[arg(long, value_enum, default_value_t = Method::Generate)]
        method: Method,
    },
    /// Read automaton JSON on stdin and print its canonical string.
    Canonicalize {
        #[arg(long)]
        minimal_mode: bool,
    },
    /// Check canonical strings read one per line from stdin.
    Validate {
        #[arg(long)]
        minimal_mode: bool,
    },
    /// Read automaton JSON on stdin and print the minimal equivalent automaton.
    Minimize,
    /// Run a word through the automaton read on stdin.
    Accepts {
        /// Symbols as named in the JSON alphabet, or comma-separated indices.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Generate,
    Formula,
    Oracle,
}

const REJECTED: u8 = 2;

fn mode(minimal: bool) -> Mode {
    if minimal {
        Mode::Madfa
    } else {
        Mode::Adfa
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            if e.downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
            {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Generate {
            states,
            alphabet,
            minimal,
            limit,
            partitions,
            output,
        } => {
            let generator = Generator::new(states as usize, alphabet as usize, mode(minimal))?;
            let out: Box<dyn Write> = match output {
                Some(path) => Box::new(
                    File::create(&path).with_context(|| format!("creating {}", path.display()))?,
                ),
                None => Box::new(io::stdout().lock()),
            };
            let mut out = BufWriter::new(out);
            let limit = limit.unwrap_or(u64::MAX);
            if partitions == 1 {
                generate_serial(&generator, limit, &mut out)?;
            } else {
                generate_parallel(&generator, partitions as usize, limit, &mut out)?;
            }
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Count {
            states,
            alphabet,
            minimal,
            method,
        } => {
            let (n, k, mode) = (states as usize, alphabet as usize, mode(minimal));
            let value = match method {
                Method::Generate => Generator::new(n, k, mode)?.count().to_string(),
                Method::Oracle => oracle_count(n, k, mode)?.to_string(),
                Method::Formula => match adfa::formula::formula(n, k, mode) {
                    Ok(v) => v.to_string(),
                    Err(e @ Error::UnsupportedN { .. }) => {
                        eprintln!("error: {e}");
                        return Ok(ExitCode::from(REJECTED));
                    }
                    Err(e) => return Err(e.into()),
                },
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Canonicalize { minimal_mode } => {
            let aut = read_automaton()?.to_automaton()?;
            match encode(&aut, mode(minimal_mode)) {
                Ok(cs) => {
                    println!("{cs}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::NotMinimal) => {
                    eprintln!("error: {}", Error::NotMinimal);
                    Ok(ExitCode::from(REJECTED))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Validate { minimal_mode } => {
            let mode = mode(minimal_mode);
            let mut rejected = false;
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            for (i, line) in io::stdin().lock().lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let cs: CanonicalString =
                    line.parse().with_context(|| format!("line {}", i + 1))?;
                match validate(&cs, mode) {
                    Ok(()) => writeln!(out, "ok")?,
                    Err(v) => {
                        rejected = true;
                        writeln!(out, "{v}")?;
                    }
                }
            }
            out.flush()?;
            Ok(if rejected {
                ExitCode::from(REJECTED)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Minimize => {
            let doc = read_automaton()?;
            let min = doc.to_automaton()?.minimize()?;
            println!(
                "{}",
                AutomatonJson::from_automaton(&min, doc.alphabet).to_json()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Accepts { word } => {
            let doc = read_automaton()?;
            let aut = doc.to_automaton()?;
            let word = parse_word(&word, doc.alphabet.as_deref(), &aut)?;
            Ok(if aut.accepts(&word)? {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(REJECTED)
            })
        }
    }
}

fn read_automaton() -> anyhow::Result<AutomatonJson> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    Ok(AutomatonJson::parse(&text)?)
}

fn parse_word(
    word: &str,
    alphabet: Option<&[String]>,
    aut: &Automaton,
) -> anyhow::Result<Vec<usize>> {
    if word.is_empty() {
        return Ok(Vec::new());
    }
    let symbols: Vec<usize> = match alphabet {
        Some(names) => {
            let parts: Vec<String> = if word.contains(',') {
                word.split(',').map(str::to_owned).collect()
            } else {
                word.chars().map(String::from).collect()
            };
            parts
                .iter()
                .map(|p| match names.iter().position(|n| n == p) {
                    Some(i) => Ok(i),
                    None => bail!("symbol {p:?} is not in the alphabet"),
                })
                .collect::<anyhow::Result<_>>()?
        }
        None => word
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .with_context(|| format!("bad symbol index {p:?}"))
            })
            .collect::<anyhow::Result<_>>()?,
    };
    if let Some(&a) = symbols.iter().find(|&&a| a >= aut.k()) {
        bail!("symbol {a} outside alphabet of size {}", aut.k());
    }
    Ok(symbols)
}

fn push_flat(buf: &mut String, k: usize, flat: &[usize]) {
    use std::fmt::Write as _;
    buf.push('[');
    for (i, t) in flat.chunks(k + 1).enumerate() {
        if i > 0 {
            buf.push(',');
        }
        buf.push('[');
        for (j, v) in t.iter().enumerate() {
            if j > 0 {
                buf.push(',');
            }
            let _ = write!(buf, "{v}");
        }
        buf.push(']');
    }
    buf.push_str("]\n");
}

fn generate_serial(generator: &Generator, limit: u64, out: &mut impl Write) -> io::Result<()> {
    if limit == 0 {
        return Ok(());
    }
    let mut written = 0;
    let mut line = String::new();
    let mut failure = None;
    let _ = generator.for_each(|flat| {
        line.clear();
        push_flat(&mut line, generator.k(), flat);
        if let Err(e) = out.write_all(line.as_bytes()) {
            failure = Some(e);
            return ControlFlow::Break(());
        }
        written += 1;
        if written == limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    failure.map_or(Ok(()), Err)
}

const BATCH: usize = 1 << 16;

/// Each partition streams batches of lines through a bounded channel; the
/// channels are drained in partition order.
fn generate_parallel(
    generator: &Generator,
    parts: usize,
    limit: u64,
    out: &mut impl Write,
) -> io::Result<()> {
    let partitions = generator.partitions(parts);
    let k = generator.k();
    std::thread::scope(|scope| {
        let receivers: Vec<mpsc::Receiver<(String, u64)>> = partitions
            .iter()
            .map(|partition| {
                let (tx, rx) = mpsc::sync_channel(16);
                scope.spawn(move || {
                    let mut batch = String::new();
                    let mut lines = 0u64;
                    let flow = generator.run_partition(partition, |flat| {
                        push_flat(&mut batch, k, flat);
                        lines += 1;
                        if batch.len() >= BATCH || lines >= limit {
                            if tx.send((std::mem::take(&mut batch), lines)).is_err()
                                || lines >= limit
                            {
                                return ControlFlow::Break(());
                            }
                            lines = 0;
                        }
                        ControlFlow::Continue(())
                    });
                    if flow.is_continue() && lines > 0 {
                        let _ = tx.send((batch, lines));
                    }
                });
                rx
            })
            .collect();
        let mut remaining = limit;
        for rx in receivers {
            for (batch, lines) in rx.iter() {
                if remaining == 0 {
                    break;
                }
                if lines <= remaining {
                    out.write_all(batch.as_bytes())?;
                    remaining -= lines;
                } else {
                    let cut = batch
                        .match_indices('\n')
                        .nth(remaining as usize - 1)
                        .map_or(batch.len(), |(i, _)| i + 1);
                    out.write_all(&batch.as_bytes()[..cut])?;
                    remaining = 0;
                }
            }
            // dropping the receiver stops the producer
        }
        Ok(())
    })
}
