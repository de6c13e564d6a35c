//! Exhaustive sweeps over numerical semigroups with bounded generators,
//! parallel analysis and JSONL persistence.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::time::{SystemTime, UNIX_EPOCH};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_non_cm_quadratic_5, FamilyParams};
use crate::error::{Error, Result};
use crate::koszul::{koszul_verdict, KoszulVerdict, DEFAULT_TRUNCATION};
use crate::semigroup::NumericalSemigroup;
use crate::tangent_cone::TangentConeAnalysis;

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Which semigroups of a sweep are analyzed and which records are kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub embdim: usize,
    pub min_multiplicity: u64,
    pub max_multiplicity: u64,
    /// Bound on the largest generator.
    pub max_generator: u64,
    /// Analyze only semigroups passing the necessary conditions for a
    /// quadratic tangent cone (exact: the others are never quadratic).
    pub require_necessary: bool,
    pub quadratic_only: bool,
    pub non_cm_only: bool,
    /// Worker threads; 0 means rayon's default.
    pub jobs: usize,
    pub truncation: usize,
}

impl SweepSpec {
    pub fn new(embdim: usize, multiplicity: (u64, u64), max_generator: u64) -> Self {
        SweepSpec {
            embdim,
            min_multiplicity: multiplicity.0,
            max_multiplicity: multiplicity.1,
            max_generator,
            require_necessary: false,
            quadratic_only: false,
            non_cm_only: false,
            jobs: 0,
            truncation: DEFAULT_TRUNCATION,
        }
    }

    pub fn necessary_only(mut self) -> Self {
        self.require_necessary = true;
        self
    }

    pub fn quadratic(mut self) -> Self {
        self.require_necessary = true;
        self.quadratic_only = true;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.embdim == 0 || self.embdim >= crate::poly::MAX_VARS {
            return Err(Error::InvalidParams(format!(
                "embedding dimension {} out of range",
                self.embdim
            )));
        }
        if self.min_multiplicity == 0 || self.max_generator == 0 {
            return Err(Error::InvalidParams("bounds must be positive".into()));
        }
        Ok(())
    }

    fn keeps(&self, r: &ClassificationRecord) -> bool {
        (!self.quadratic_only || r.is_quadratic) && (!self.non_cm_only || !r.is_cm)
    }
}

/// All numerical semigroups with the given embedding dimension,
/// multiplicity in range and largest minimal generator at most the bound,
/// in lexicographic order of their minimal generators.
pub fn enumerate_semigroups(spec: &SweepSpec) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    if spec.validate().is_err() {
        return out;
    }
    let max = spec.max_generator;
    let hi = spec.max_multiplicity.min(max);
    for a1 in spec.min_multiplicity..=hi {
        // a1 = 1 gives N, of embedding dimension one
        if (a1 == 1) != (spec.embdim == 1) {
            continue;
        }
        let mut reach = vec![false; max as usize + 1];
        for x in (0..=max).step_by(a1 as usize) {
            reach[x as usize] = true;
        }
        let mut prefix = vec![a1];
        extend(&mut prefix, &reach, spec, &mut out);
    }
    out
}

fn extend(
    prefix: &mut Vec<u64>,
    reach: &[bool],
    spec: &SweepSpec,
    out: &mut Vec<NumericalSemigroup>,
) {
    let max = spec.max_generator;
    if prefix.len() == spec.embdim {
        if prefix.iter().fold(0u64, |g, &a| g.gcd(&a)) == 1 {
            out.push(NumericalSemigroup::minimal_generators(prefix).expect("valid prefix"));
        }
        return;
    }
    let last = *prefix.last().unwrap();
    for a in last + 1..=max {
        if reach[a as usize] {
            continue;
        }
        prefix.push(a);
        if prefix.len() == spec.embdim {
            extend(prefix, reach, spec, out);
        } else {
            let mut next = reach.to_vec();
            for x in a as usize..=max as usize {
                if next[x - a as usize] {
                    next[x] = true;
                }
            }
            extend(prefix, &next, spec, out);
        }
        prefix.pop();
    }
}

/// One analyzed semigroup, as persisted in a sweep file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    /// Comma-joined sorted minimal generators.
    pub key: String,
    pub generators: Vec<u64>,
    pub multiplicity: u64,
    pub embdim: usize,
    pub is_quadratic: bool,
    pub h_vector: Vec<i64>,
    pub is_cm: bool,
    pub cm_witness: Option<Vec<u32>>,
    pub qgb_revlex: bool,
    pub qgb_order: Option<String>,
    pub family_match: Option<FamilyParams>,
    pub koszul_verdict: KoszulVerdict,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub toolkit_version: String,
}

pub fn canonical_key(generators: &[u64]) -> String {
    generators
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Runs the full pipeline on one semigroup.
pub fn analyze(h: &NumericalSemigroup, truncation: usize) -> Result<ClassificationRecord> {
    let (a, istar) = TangentConeAnalysis::compute_with_ideal(h)?;
    let family_match = if h.embdim() == 5 {
        classify_non_cm_quadratic_5(h)
    } else {
        None
    };
    let order = a.qgb_revlex.as_ref().map(|q| q.order.clone());
    let verdict = koszul_verdict(&istar, &a.h_vector, a.is_cm, order.as_deref(), truncation);
    Ok(ClassificationRecord {
        key: canonical_key(h.generators()),
        generators: h.generators().to_vec(),
        multiplicity: h.multiplicity(),
        embdim: h.embdim(),
        is_quadratic: a.is_quadratic,
        h_vector: a.h_vector,
        is_cm: a.is_cm,
        cm_witness: a.cm_certificate.witness,
        qgb_revlex: order.is_some(),
        qgb_order: order,
        family_match,
        koszul_verdict: verdict,
        timestamp: now(),
        toolkit_version: TOOLKIT_VERSION.to_string(),
    })
}

fn candidates(spec: &SweepSpec) -> Vec<NumericalSemigroup> {
    enumerate_semigroups(spec)
        .into_iter()
        .filter(|h| !spec.require_necessary || h.quadratic_necessary())
        .collect()
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))
}

/// Analyzes the sweep in memory; records are sorted by generators.
pub fn analyze_all(spec: &SweepSpec) -> Result<Vec<ClassificationRecord>> {
    spec.validate()?;
    let cands = candidates(spec);
    let mut records: Vec<ClassificationRecord> = pool(spec.jobs)?.install(|| {
        cands
            .par_iter()
            .map(|h| analyze(h, spec.truncation))
            .collect::<Result<Vec<_>>>()
    })?;
    records.retain(|r| spec.keeps(r));
    records.sort_by(|a, b| a.generators.cmp(&b.generators));
    Ok(records)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub candidates: usize,
    pub skipped_existing: usize,
    pub analyzed: usize,
    pub written: usize,
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "candidates={} skipped_existing={} analyzed={} written={}",
            self.candidates, self.skipped_existing, self.analyzed, self.written
        )
    }
}

fn io_err(context: String) -> impl FnOnce(std::io::Error) -> Error {
    move |source| Error::Io { context, source }
}

/// Keys already present in a sweep file (empty if it does not exist).
pub fn existing_keys(path: &Path) -> Result<HashSet<String>> {
    if !path.exists() {
        return Ok(HashSet::new());
    }
    Ok(read_records(path)?.into_iter().map(|r| r.key).collect())
}

pub fn read_records(path: &Path) -> Result<Vec<ClassificationRecord>> {
    let file = File::open(path).map_err(io_err(format!("opening {}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err(format!("reading {} line {}", path.display(), i + 1)))?;
        if line.trim().is_empty() {
            continue;
        }
        let r = serde_json::from_str(&line).map_err(|source| Error::Json {
            context: format!("{} line {}", path.display(), i + 1),
            source,
        })?;
        out.push(r);
    }
    Ok(out)
}

/// Analyzes every candidate whose key is not yet in `out` and appends the
/// kept records, one JSON object per line, through a single writer.
pub fn analyze_and_persist(spec: &SweepSpec, out: &Path) -> Result<SweepSummary> {
    spec.validate()?;
    let done = existing_keys(out)?;
    let cands = candidates(spec);
    let todo: Vec<&NumericalSemigroup> = cands
        .iter()
        .filter(|h| !done.contains(&canonical_key(h.generators())))
        .collect();
    let mut summary = SweepSummary {
        candidates: cands.len(),
        skipped_existing: cands.len() - todo.len(),
        ..Default::default()
    };
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(out)
        .map_err(io_err(format!("opening {}", out.display())))?;
    let (tx, rx) = mpsc::channel::<ClassificationRecord>();
    let path: PathBuf = out.to_path_buf();
    let writer = std::thread::spawn(move || -> Result<usize> {
        let mut w = BufWriter::new(file);
        let mut n = 0;
        for r in rx {
            let line = serde_json::to_string(&r).map_err(|source| Error::Json {
                context: format!("record {}", r.key),
                source,
            })?;
            writeln!(w, "{line}").map_err(io_err(format!(
                "writing record {} to {}",
                r.key,
                path.display()
            )))?;
            n += 1;
        }
        w.flush()
            .map_err(io_err(format!("flushing {}", path.display())))?;
        Ok(n)
    });
    let analyzed: Result<usize> = pool(spec.jobs)?.install(|| {
        todo.par_iter()
            .map_with(tx, |tx, h| {
                let r = analyze(h, spec.truncation)?;
                if spec.keeps(&r) {
                    // the writer only stops early after an I/O error, which
                    // is reported below
                    let _ = tx.send(r);
                }
                Ok(1)
            })
            .sum()
    });
    let written = writer.join().expect("writer thread panicked")?;
    summary.analyzed = analyzed?;
    summary.written = written;
    Ok(summary)
}

/// h-vectors known to occur for quadratic semigroups of embedding
/// dimension five, with whether an example is known.
pub const KNOWN_H_VECTORS: &[&[i64]] = &[
    &[1, 4],
    &[1, 4, 1],
    &[1, 4, 2],
    &[1, 4, 2, 1],
    &[1, 4, 3],
    &[1, 4, 3, 1],
    &[1, 4, 4],
    &[1, 4, 4, 1],
    &[1, 4, 5],
    &[1, 4, 5, 1],
    &[1, 4, 5, 2],
    &[1, 4, 6, 4, 1],
];

/// Reference examples: generators, h-vector, Cohen–Macaulay, revlex
/// quadratic Gröbner basis.
pub const REFERENCE_EXAMPLES: &[(&[u64], &[i64], bool, bool)] = &[
    (&[5, 6, 7, 8, 9], &[1, 4], true, true),
    (&[6, 7, 8, 9, 10], &[1, 4, 1], true, true),
    (&[7, 8, 9, 10, 11], &[1, 4, 2], true, true),
    (&[8, 12, 13, 18, 35], &[1, 4, 2, 1], false, true),
    (&[8, 9, 10, 11, 12], &[1, 4, 3], true, true),
    (&[9, 10, 11, 13, 17], &[1, 4, 3, 1], true, true),
    (&[9, 10, 11, 12, 15], &[1, 4, 4], true, true),
    (&[9, 17, 20, 23, 25], &[1, 4, 4], true, false),
    (&[10, 16, 19, 22, 25], &[1, 4, 4, 1], true, true),
    (&[11, 13, 14, 15, 19], &[1, 4, 5, 1], true, false),
    (&[12, 14, 16, 18, 27], &[1, 4, 5, 2], true, true),
    (&[16, 17, 18, 20, 24], &[1, 4, 6, 4, 1], true, true),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub multiplicity: u64,
    pub h_vector: Vec<i64>,
    pub count: usize,
    pub non_cm: usize,
    pub qgb_revlex: usize,
    pub verdicts: BTreeMap<String, usize>,
    /// Lexicographically smallest generators realizing the row.
    pub example: Vec<u64>,
    pub known: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
    pub distinct_h_vectors: usize,
    /// Known h-vectors with no record in the input.
    pub unrealized_known: Vec<Vec<i64>>,
    /// Rows whose h-vector is not among the known ones.
    pub unknown_rows: Vec<Vec<i64>>,
    pub realized_1_4_5: bool,
    /// Records whose Hilbert function decreases somewhere.
    pub hilbert_decreases: Vec<String>,
}

/// Groups quadratic embedding dimension five records by
/// (multiplicity, h-vector).
pub fn table1_report(records: &[ClassificationRecord]) -> Table1Report {
    let mut groups: BTreeMap<(u64, Vec<i64>), Vec<&ClassificationRecord>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.embdim == 5 && r.is_quadratic) {
        groups
            .entry((r.multiplicity, r.h_vector.clone()))
            .or_default()
            .push(r);
    }
    let known: BTreeSet<Vec<i64>> = KNOWN_H_VECTORS.iter().map(|h| h.to_vec()).collect();
    let rows: Vec<Table1Row> = groups
        .into_iter()
        .map(|((m, h), rs)| {
            let mut verdicts = BTreeMap::new();
            for r in &rs {
                *verdicts
                    .entry(format!("{:?}", r.koszul_verdict.verdict))
                    .or_insert(0) += 1;
            }
            Table1Row {
                multiplicity: m,
                known: known.contains(&h),
                h_vector: h,
                count: rs.len(),
                non_cm: rs.iter().filter(|r| !r.is_cm).count(),
                qgb_revlex: rs.iter().filter(|r| r.qgb_revlex).count(),
                verdicts,
                example: rs.iter().map(|r| r.generators.clone()).min().unwrap(),
            }
        })
        .collect();
    let realized: BTreeSet<Vec<i64>> = rows.iter().map(|r| r.h_vector.clone()).collect();
    Table1Report {
        distinct_h_vectors: realized.len(),
        unrealized_known: known.difference(&realized).cloned().collect(),
        unknown_rows: realized.difference(&known).cloned().collect(),
        realized_1_4_5: realized.contains(&vec![1, 4, 5]),
        hilbert_decreases: records
            .iter()
            .filter(|r| r.h_vector.iter().skip(1).any(|&c| c < 0))
            .map(|r| r.key.clone())
            .collect(),
        rows,
    }
}

fn fmt_h(h: &[i64]) -> String {
    let v: Vec<String> = h.iter().map(|c| c.to_string()).collect();
    format!("({})", v.join(","))
}

impl fmt::Display for Table1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>4}  {:<16} {:>6} {:>6} {:>6}  {:<24} known",
            "e", "h-vector", "count", "non-CM", "qGB", "example"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>4}  {:<16} {:>6} {:>6} {:>6}  {:<24} {}",
                r.multiplicity,
                fmt_h(&r.h_vector),
                r.count,
                r.non_cm,
                r.qgb_revlex,
                format!("<{}>", canonical_key(&r.example)),
                if r.known { "yes" } else { "NO" }
            )?;
        }
        writeln!(f, "distinct h-vectors: {}", self.distinct_h_vectors)?;
        let list = |v: &[Vec<i64>]| {
            if v.is_empty() {
                "none".to_string()
            } else {
                v.iter().map(|h| fmt_h(h)).collect::<Vec<_>>().join(" ")
            }
        };
        writeln!(
            f,
            "known h-vectors not realized: {}",
            list(&self.unrealized_known)
        )?;
        writeln!(
            f,
            "h-vectors outside the known list: {}",
            list(&self.unknown_rows)
        )?;
        writeln!(f, "(1,4,5) realized: {}", self.realized_1_4_5)?;
        write!(
            f,
            "Hilbert function decreases: {}",
            if self.hilbert_decreases.is_empty() {
                "none".to_string()
            } else {
                self.hilbert_decreases.join(" ")
            }
        )
    }
}

/// Records for the reference examples.
pub fn reference_records(truncation: usize) -> Result<Vec<ClassificationRecord>> {
    REFERENCE_EXAMPLES
        .iter()
        .map(|(g, ..)| analyze(&NumericalSemigroup::from_minimal(g)?, truncation))
        .collect()
}
