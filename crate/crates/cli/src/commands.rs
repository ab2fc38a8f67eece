use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::Path;

use posetforge_core::dot::{lattice_dot, poset_dot};
use posetforge_core::enumerate::{for_each_poset_matrix, DiskKeyStore, KeyStore, MemoryKeyStore};
use posetforge_core::matrix::{format_stream_entry, v_extension};
use posetforge_core::symmetry::{automorphism_group, orbits_on_vectors, twin_decomposition};
use posetforge_core::topology::NltStream;
use posetforge_core::verify::{run_all, CHECKS};
use posetforge_core::{count_report, enumerate_poset_vectors, CountReport, Nlt, PosetMatrix, MAX_N};

use crate::error::{CliError, CliResult};

/// Largest size the first/next stream accepts; `first(n)` holds `2^n` sets.
const NLT_MAX_N: usize = 24;
const DEFAULT_VERIFY_N: usize = 5;
const MAX_N_VAR: &str = "POSETFORGE_MAX_N";

type Out = BufWriter<Box<dyn Write>>;

fn open_output(path: Option<&Path>) -> CliResult<Out> {
    let sink: Box<dyn Write> = match path {
        Some(p) => Box::new(File::create(p).map_err(CliError::io(p.display().to_string()))?),
        None => Box::new(io::stdout().lock()),
    };
    Ok(BufWriter::new(sink))
}

fn write_err(e: io::Error) -> CliError {
    CliError::io("write")(e)
}

fn read_matrix(path: &Path) -> CliResult<PosetMatrix> {
    let text = fs::read_to_string(path).map_err(CliError::io(path.display().to_string()))?;
    PosetMatrix::parse(&text).map_err(|e| match CliError::from(e) {
        CliError::Invalid(msg) => CliError::Invalid(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn check_n(n: usize, max: usize, what: &str) -> CliResult<()> {
    if n > max {
        Err(CliError::Capacity(format!("{what} supports n <= {max}, got {n}")))
    } else {
        Ok(())
    }
}

pub fn count(n: usize, shards: Option<usize>, keys_dir: Option<&Path>, header: bool) -> CliResult<()> {
    check_n(n, MAX_N, "count")?;
    let shards = match shards {
        Some(0) => return Err(CliError::Usage("--shards must be at least 1".into())),
        Some(k) => k,
        None => std::thread::available_parallelism().map_or(1, |k| k.get()),
    };
    let disk;
    let memory;
    let store: &dyn KeyStore = match keys_dir {
        Some(dir) => {
            disk = DiskKeyStore::create(dir).map_err(CliError::io(dir.display().to_string()))?;
            &disk
        }
        None => {
            memory = MemoryKeyStore::new();
            &memory
        }
    };
    let report = count_report(n, shards, store).map_err(CliError::io("key store"))?;
    let mut out = open_output(None)?;
    if header {
        writeln!(out, "{}", CountReport::CSV_HEADER).map_err(write_err)?;
    }
    writeln!(out, "{}", report.to_csv_row()).map_err(write_err)?;
    out.flush().map_err(write_err)
}

pub fn list(n: usize, topologies: bool, output: Option<&Path>, limit: Option<u64>) -> CliResult<()> {
    let mut out = open_output(output)?;
    let limit = limit.unwrap_or(u64::MAX);
    if topologies {
        check_n(n, NLT_MAX_N, "list --kind topologies")?;
        for t in NltStream::new(n).take(limit.try_into().unwrap_or(usize::MAX)) {
            writeln!(out, "{t}").map_err(write_err)?;
        }
    } else {
        check_n(n, MAX_N, "list")?;
        let mut written = 0u64;
        let mut failed = None;
        for_each_poset_matrix(n, |a| {
            if written < limit && failed.is_none() {
                let sep = if written > 0 { "\n" } else { "" };
                if let Err(e) = write!(out, "{sep}{}", format_stream_entry(a)) {
                    failed = Some(e);
                }
                written += 1;
            }
        });
        if let Some(e) = failed {
            return Err(write_err(e));
        }
    }
    out.flush().map_err(write_err)
}

pub fn extend(input: &Path, output: Option<&Path>) -> CliResult<()> {
    let a = read_matrix(input)?;
    let mut out = open_output(output)?;
    for (k, v) in enumerate_poset_vectors(&a).vectors().iter().enumerate() {
        let child = v_extension(&a, v)?;
        let sep = if k > 0 { "\n" } else { "" };
        write!(out, "{sep}{}", format_stream_entry(&child)).map_err(write_err)?;
    }
    out.flush().map_err(write_err)
}

pub fn ideals(input: &Path, output: Option<&Path>) -> CliResult<()> {
    let a = read_matrix(input)?;
    let mut out = open_output(output)?;
    out.write_all(enumerate_poset_vectors(&a).to_jsonl().as_bytes()).map_err(write_err)?;
    out.flush().map_err(write_err)
}

pub fn aut(input: &Path) -> CliResult<()> {
    let a = read_matrix(input)?;
    let group = automorphism_group(&a);
    let twins = twin_decomposition(&a);
    let orbits = orbits_on_vectors(&a);
    let mut out = open_output(None)?;
    writeln!(out, "order {}", group.order()).map_err(write_err)?;
    writeln!(out, "classes {}", twins.classes_string()).map_err(write_err)?;
    writeln!(out, "orbits {}", orbits.class_count).map_err(write_err)?;
    for (members, stab) in orbits.orbits.iter().zip(&orbits.stabilizer_orders) {
        let words: Vec<String> = members.iter().map(|v| v.entries()).collect();
        writeln!(out, "orbit {} stabilizer {stab}", words.join(" ")).map_err(write_err)?;
    }
    out.flush().map_err(write_err)
}

pub fn nlt(n: Option<usize>, resume: Option<&str>, limit: Option<u64>, output: Option<&Path>) -> CliResult<()> {
    let stream = match resume {
        Some(line) => {
            let t = Nlt::parse_line(line.trim())?;
            if let Some(n) = n.filter(|&n| n != t.n()) {
                return Err(CliError::Invalid(format!("--n {n} but the resumed family has size {}", t.n())));
            }
            check_n(t.n(), NLT_MAX_N, "nlt")?;
            NltStream::resume_after(&t)
        }
        None => {
            let n = n.ok_or_else(|| CliError::Usage("--n or --resume is required".into()))?;
            check_n(n, NLT_MAX_N, "nlt")?;
            NltStream::new(n)
        }
    };
    let mut out = open_output(output)?;
    for t in stream.take(limit.map_or(usize::MAX, |l| l.try_into().unwrap_or(usize::MAX))) {
        writeln!(out, "{t}").map_err(write_err)?;
    }
    out.flush().map_err(write_err)
}

fn verify_ceiling() -> CliResult<usize> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_N_VAR}={v:?} is not a size"))),
        Err(_) => Ok(DEFAULT_VERIFY_N),
    }
}

pub fn verify(n: Option<usize>) -> CliResult<()> {
    let n = match n {
        Some(n) => n,
        None => verify_ceiling()?,
    };
    let top = CHECKS.iter().map(|c| c.2).max().unwrap_or(0);
    check_n(n, top, "verify")?;
    let outcomes = run_all(n);
    let mut out = open_output(None)?;
    let mut failed = 0;
    for o in &outcomes {
        match &o.result {
            Ok(()) => writeln!(out, "ok   {} n={}", o.name, o.n),
            Err(why) => {
                failed += 1;
                writeln!(out, "FAIL {} n={}: {why}", o.name, o.n)
            }
        }
        .map_err(write_err)?;
    }
    writeln!(out, "{} checks, {failed} failed", outcomes.len()).map_err(write_err)?;
    out.flush().map_err(write_err)?;
    if failed > 0 {
        Err(CliError::Invalid(format!("{failed} checks failed")))
    } else {
        Ok(())
    }
}

pub fn dot(input: &Path, lattice: bool, output: Option<&Path>) -> CliResult<()> {
    let a = read_matrix(input)?;
    let text = if lattice { lattice_dot(&enumerate_poset_vectors(&a)) } else { poset_dot(&a) };
    let mut out = open_output(output)?;
    out.write_all(text.as_bytes()).map_err(write_err)?;
    out.flush().map_err(write_err)
}
