//! Counting pipelines over `PM(n)`: labelled counts by two independent
//! routes, the isomorphism-class census, and the orbit-sum comparison.

use std::collections::HashSet;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use crate::bits::IndexSet;
use crate::ideals::{count_ideals, enumerate_poset_vectors, ideal_supports};
use crate::matrix::{v_extension, PosetMatrix};
use crate::symmetry::{automorphism_group, burnside_with, canonical_form};
use crate::topology::count_stream;

/// Which route [`count_nl`] takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// Sum of ideal counts over `PM(n-1)`.
    Extension,
    /// Length of the first/next topology stream.
    Stream,
}

/// Every matrix of `PM(n)`, breadth-first from the empty matrix.
pub fn enumerate_nl(n: usize) -> Vec<PosetMatrix> {
    let mut level = vec![PosetMatrix::empty()];
    for _ in 0..n {
        level = level
            .iter()
            .flat_map(|a| {
                ideal_supports(a).into_iter().map(move |s| {
                    let mut rows = a.rows().to_vec();
                    rows.push(s.with(a.n()));
                    PosetMatrix::from_rows_unchecked(rows)
                })
            })
            .collect();
    }
    level
}

/// Visits `PM(n)` depth-first, holding one root-to-leaf chain at a time.
pub fn for_each_poset_matrix(n: usize, mut visit: impl FnMut(&PosetMatrix)) {
    fn walk(prefix: &mut Vec<IndexSet>, n: usize, visit: &mut dyn FnMut(&PosetMatrix)) {
        let a = PosetMatrix::from_rows_unchecked(prefix.clone());
        if prefix.len() == n {
            visit(&a);
            return;
        }
        let k = prefix.len();
        for s in ideal_supports(&a) {
            prefix.push(s.with(k));
            walk(prefix, n, visit);
            prefix.pop();
        }
    }
    walk(&mut Vec::with_capacity(n), n, &mut visit);
}

/// Stable FNV-1a hash of the row words; assigns parents to shards.
pub fn stable_hash(a: &PosetMatrix) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in (a.n() as u64)
        .to_le_bytes()
        .into_iter()
        .chain(a.rows().iter().flat_map(|r| r.bits().to_le_bytes()))
    {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn in_shard(a: &PosetMatrix, shard: usize, shards: usize) -> bool {
    shards <= 1 || stable_hash(a) % shards as u64 == shard as u64
}

/// `|PM(n)|`.
pub fn count_nl(n: usize, method: CountMethod) -> u64 {
    count_nl_sharded(n, method, 1)
}

/// `|PM(n)|` with the extension route split over `shards` parallel workers.
/// The stream route is inherently sequential and ignores `shards`.
pub fn count_nl_sharded(n: usize, method: CountMethod, shards: usize) -> u64 {
    match method {
        CountMethod::Stream => count_stream(n),
        CountMethod::Extension if n == 0 => 1,
        CountMethod::Extension => {
            let shards = shards.max(1);
            (0..shards)
                .into_par_iter()
                .map(|shard| {
                    let mut total = 0u64;
                    for_each_poset_matrix(n - 1, |parent| {
                        if in_shard(parent, shard, shards) {
                            total += count_ideals(parent);
                        }
                    });
                    total
                })
                .sum()
        }
    }
}

/// Deduplicating store for canonical-form keys. Inserts are idempotent.
pub trait KeyStore: Sync {
    fn insert(&self, key: &PosetMatrix) -> io::Result<()>;
    /// Number of distinct keys inserted so far.
    fn distinct(&self) -> io::Result<u64>;
}

/// In-memory store.
#[derive(Default)]
pub struct MemoryKeyStore {
    keys: Mutex<HashSet<PosetMatrix>>,
}

impl MemoryKeyStore {
    pub fn new() -> Self {
        Self::default()
    }

    fn extend(&self, batch: HashSet<PosetMatrix>) {
        let mut keys = self.keys.lock().expect("key store poisoned");
        if keys.is_empty() {
            *keys = batch;
        } else {
            keys.extend(batch);
        }
    }
}

impl KeyStore for MemoryKeyStore {
    fn insert(&self, key: &PosetMatrix) -> io::Result<()> {
        self.keys.lock().expect("key store poisoned").insert(key.clone());
        Ok(())
    }

    fn distinct(&self) -> io::Result<u64> {
        Ok(self.keys.lock().expect("key store poisoned").len() as u64)
    }
}

/// Disk-backed store: hex keys are appended to bucket files chosen by hash,
/// and buckets are deduplicated one at a time when counting.
pub struct DiskKeyStore {
    dir: PathBuf,
    buckets: Vec<Mutex<BufWriter<File>>>,
}

impl DiskKeyStore {
    pub const BUCKETS: usize = 64;

    /// Creates (truncating) the bucket files under `dir`.
    pub fn create(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        let buckets = (0..Self::BUCKETS)
            .map(|b| {
                let f = OpenOptions::new()
                    .create(true)
                    .write(true)
                    .truncate(true)
                    .open(dir.join(format!("keys-{b:02}.txt")))?;
                Ok(Mutex::new(BufWriter::new(f)))
            })
            .collect::<io::Result<_>>()?;
        Ok(DiskKeyStore { dir: dir.to_path_buf(), buckets })
    }
}

impl KeyStore for DiskKeyStore {
    fn insert(&self, key: &PosetMatrix) -> io::Result<()> {
        let b = (stable_hash(key) % Self::BUCKETS as u64) as usize;
        let mut w = self.buckets[b].lock().expect("bucket poisoned");
        writeln!(w, "{}", key.to_hex())
    }

    fn distinct(&self) -> io::Result<u64> {
        let mut total = 0;
        for (b, w) in self.buckets.iter().enumerate() {
            w.lock().expect("bucket poisoned").flush()?;
            let f = File::open(self.dir.join(format!("keys-{b:02}.txt")))?;
            let mut seen = HashSet::new();
            for line in BufReader::new(f).lines() {
                seen.insert(line?);
            }
            total += seen.len() as u64;
        }
        Ok(total)
    }
}

/// Number of isomorphism classes in `PM(n)`.
pub fn count_nip(n: usize) -> u64 {
    let store = MemoryKeyStore::new();
    let mut batch = HashSet::new();
    for_each_poset_matrix(n, |a| {
        batch.insert(canonical_form(a));
    });
    store.extend(batch);
    store.distinct().expect("memory store cannot fail")
}

/// [`count_nip`] spread over `shards` workers feeding `store`.
pub fn count_nip_with(n: usize, shards: usize, store: &dyn KeyStore) -> io::Result<u64> {
    let shards = shards.max(1);
    (0..shards).into_par_iter().try_for_each(|shard| {
        let mut local = HashSet::new();
        for_each_poset_matrix(n, |a| {
            if in_shard(a, shard, shards) {
                local.insert(canonical_form(a));
            }
        });
        local.iter().try_for_each(|k| store.insert(k))
    })?;
    store.distinct()
}

/// Per-size comparison of the labelled counts, the class census and the
/// orbit sum over parents.
#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub n: usize,
    pub nl_count_extension: u64,
    pub nl_count_stream: u64,
    pub nip_count: u64,
    /// Sum over `PM(n-1)` of orbit counts; 1 by convention at `n = 0`.
    pub orbit_sum: u64,
    /// Parents whose orbit count differs from the number of distinct
    /// canonical forms among their own extensions.
    pub parent_mismatches: u64,
    pub seconds_extension: f64,
    pub seconds_stream: f64,
}

impl CountReport {
    pub const CSV_HEADER: &'static str =
        "n,nl_extension,nl_stream,nip,orbit_sum,gap,seconds_extension,seconds_stream";

    /// `orbit_sum - nip_count`.
    pub fn gap(&self) -> i64 {
        self.orbit_sum as i64 - self.nip_count as i64
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.6},{:.6}",
            self.n,
            self.nl_count_extension,
            self.nl_count_stream,
            self.nip_count,
            self.orbit_sum,
            self.gap(),
            self.seconds_extension,
            self.seconds_stream
        )
    }
}

/// Orbit count and distinct canonical extensions for one parent.
pub fn parent_orbit_census(parent: &PosetMatrix) -> (u64, HashSet<PosetMatrix>) {
    let lattice = enumerate_poset_vectors(parent);
    let orbits = burnside_with(&lattice, &automorphism_group(parent));
    let children = lattice
        .vectors()
        .iter()
        .map(|v| canonical_form(&v_extension(parent, v).expect("lattice members are poset vectors")))
        .collect();
    (orbits, children)
}

/// Builds the full report for size `n`, sharding parents over `shards`
/// workers. Class keys go to `store`.
pub fn count_report(n: usize, shards: usize, store: &dyn KeyStore) -> io::Result<CountReport> {
    let shards = shards.max(1);

    let t = Instant::now();
    let nl_count_extension = count_nl_sharded(n, CountMethod::Extension, shards);
    let seconds_extension = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let nl_count_stream = count_nl(n, CountMethod::Stream);
    let seconds_stream = t.elapsed().as_secs_f64();

    let (orbit_sum, parent_mismatches, nip_count) = if n == 0 {
        store.insert(&PosetMatrix::empty())?;
        (1, 0, store.distinct()?)
    } else {
        let partial: io::Result<Vec<(u64, u64)>> = (0..shards)
            .into_par_iter()
            .map(|shard| {
                let mut sum = 0;
                let mut failures = 0;
                let mut local = HashSet::new();
                for_each_poset_matrix(n - 1, |parent| {
                    if in_shard(parent, shard, shards) {
                        let (orbits, children) = parent_orbit_census(parent);
                        sum += orbits;
                        failures += u64::from(orbits != children.len() as u64);
                        local.extend(children);
                    }
                });
                local.iter().try_for_each(|k| store.insert(k))?;
                Ok((sum, failures))
            })
            .collect();
        let (sum, failures) = partial?
            .into_iter()
            .fold((0, 0), |acc, (s, f)| (acc.0 + s, acc.1 + f));
        (sum, failures, store.distinct()?)
    };

    Ok(CountReport {
        n,
        nl_count_extension,
        nl_count_stream,
        nip_count,
        orbit_sum,
        parent_mismatches,
        seconds_extension,
        seconds_stream,
    })
}

/// [`count_report`] with an in-memory store and one worker per core.
pub fn orbit_sum_report(n: usize) -> CountReport {
    let shards = rayon::current_num_threads();
    count_report(n, shards, &MemoryKeyStore::new()).expect("memory store cannot fail")
}
