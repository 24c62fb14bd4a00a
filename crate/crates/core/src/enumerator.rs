//! Exhaustive search over two-pair types up to a degree bound.
//!
//! Write `2 delta = A + (p2 - 1) q2` with
//! `A = p1 q1 p2^2 - p1 p2 - q1 p2 + 1`. For fixed `(p1, q1, p2)` the delta is
//! strictly increasing in `q2`, and `A + p2 - 1` (the `q2 = 1` value) is
//! increasing in each of `p1`, `q1`, `p2`. The search walks `p2`, `p1`, `q1`
//! until that minimum exceeds `2 delta_max`, and for each prefix solves for
//! the `q2` that lands on `(d-1)(d-2)` for every degree `d` in range. Only those
//! `q2` can satisfy the degree-genus relation; every other admissible `q2` is
//! counted as a degree-genus rejection without being visited.
//!
//! Work is sharded by the `(p2, p1)` prefix. Shards are processed in parallel
//! and merged in shard order, then sorted, so the report does not depend on
//! the number of workers.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::criterion::{evaluate, CriterionError, CurveCandidate, Verdict};
use crate::families::{
    enumerate_family, identify, known_exceptions, FamilyError, FamilyId, FamilyMatch,
};
use crate::newton::{NewtonPairType, SingularityType};

/// Largest supported degree bound.
pub const MAX_DEGREE_BOUND: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("degree bound {0} is below 3")]
    BoundTooSmall(u64),
    #[error("degree bound {0} exceeds the supported maximum {MAX_DEGREE_BOUND}")]
    BoundTooLarge(u64),
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error("criterion failed on {ntype}: {source}")]
    Criterion {
        ntype: SingularityType,
        source: Box<CriterionError>,
    },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    pub types_scanned: u64,
    pub degree_genus_rejections: u64,
    pub sdp_failures: u64,
    pub passes: u64,
}

impl std::ops::AddAssign for EnumerationStats {
    fn add_assign(&mut self, o: Self) {
        self.types_scanned += o.types_scanned;
        self.degree_genus_rejections += o.degree_genus_rejections;
        self.sdp_failures += o.sdp_failures;
        self.passes += o.passes;
    }
}

/// A candidate that passed the counting condition, with its attribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassEntry {
    #[serde(flatten)]
    pub candidate: CurveCandidate,
    pub families: Vec<FamilyMatch>,
    pub exception: Option<String>,
    /// Neither in a family nor a known exception.
    pub unexpected: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub max_degree: u64,
    pub candidates: Vec<PassEntry>,
    pub stats: EnumerationStats,
    /// Wall-clock time; not serialized so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for EnumerationReport {
    fn eq(&self, o: &Self) -> bool {
        self.max_degree == o.max_degree && self.candidates == o.candidates && self.stats == o.stats
    }
}

impl Eq for EnumerationReport {}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum Attribution {
    Family(FamilyMatch),
    Exception { note: String },
}

/// An entry the catalogue predicts should pass.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpectedEntry {
    #[serde(rename = "type")]
    pub ntype: SingularityType,
    #[serde(with = "crate::json_int::unsigned")]
    pub degree: u128,
    pub attribution: Attribution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckDiff {
    pub max_degree: u64,
    /// Catalogue entries absent from the pass list.
    pub missing: Vec<ExpectedEntry>,
    /// Passing candidates outside the catalogue.
    pub unexpected: Vec<CurveCandidate>,
    /// Passing candidates attributed to more than one family.
    pub overlaps: Vec<PassEntry>,
}

impl CrossCheckDiff {
    /// True when the pass list and the catalogue agree.
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

fn check_bound(max_degree: u64) -> Result<(), EnumerationError> {
    if max_degree < 3 {
        return Err(EnumerationError::BoundTooSmall(max_degree));
    }
    if max_degree > MAX_DEGREE_BOUND {
        return Err(EnumerationError::BoundTooLarge(max_degree));
    }
    Ok(())
}

/// `A = p1 q1 p2^2 - p1 p2 - q1 p2 + 1`, so that `2 delta = A + (p2 - 1) q2`.
fn base_term(p1: u64, q1: u64, p2: u64) -> u64 {
    p1 * q1 * p2 * p2 + 1 - p1 * p2 - q1 * p2
}

/// Twice the smallest delta reachable with this prefix (`q2 = 1`).
fn min_two_delta(p1: u64, q1: u64, p2: u64) -> u64 {
    base_term(p1, q1, p2) + p2 - 1
}

/// Number of `q` in `[1, limit]` coprime to `n`.
fn coprime_count(limit: u64, n: u64) -> u64 {
    let mut primes = Vec::new();
    let mut rest = n;
    let mut f = 2;
    while f * f <= rest {
        if rest.is_multiple_of(f) {
            primes.push(f);
            while rest.is_multiple_of(f) {
                rest /= f;
            }
        }
        f += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    let mut total: i64 = 0;
    for mask in 0u32..(1 << primes.len()) {
        let divisor: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p)
            .product();
        let term = (limit / divisor) as i64;
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total as u64
}

#[derive(Default)]
struct ShardResult {
    passes: Vec<CurveCandidate>,
    stats: EnumerationStats,
}

fn shards(two_delta_max: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p2 in 2.. {
        if min_two_delta(2, 3, p2) > two_delta_max {
            break;
        }
        for p1 in 2.. {
            if min_two_delta(p1, p1 + 1, p2) > two_delta_max {
                break;
            }
            out.push((p2, p1));
        }
    }
    out
}

fn scan_shard(p2: u64, p1: u64, max_degree: u64) -> Result<ShardResult, EnumerationError> {
    let two_delta_max = (max_degree - 1) * (max_degree - 2);
    let slope = p2 - 1;
    assert!(slope > 0, "delta must increase with q2");
    let mut out = ShardResult::default();
    for q1 in p1 + 1.. {
        if min_two_delta(p1, q1, p2) > two_delta_max {
            break;
        }
        if p1.gcd(&q1) != 1 {
            continue;
        }
        let base = base_term(p1, q1, p2);
        let scanned = coprime_count((two_delta_max - base) / slope, p2);
        let mut hits = 0;
        for d in 3..=max_degree {
            let two_delta = (d - 1) * (d - 2);
            if two_delta < base + slope {
                continue;
            }
            let rest = two_delta - base;
            if !rest.is_multiple_of(slope) {
                continue;
            }
            let q2 = rest / slope;
            if q2.gcd(&p2) != 1 {
                continue;
            }
            hits += 1;
            let t = SingularityType::TwoPairs(
                NewtonPairType::new(p1.into(), q1.into(), p2.into(), q2.into())
                    .expect("enumerated quadruples are valid"),
            );
            let c = evaluate(&t).map_err(|e| EnumerationError::Criterion {
                ntype: t,
                source: Box::new(e),
            })?;
            debug_assert_eq!(c.degree, d as u128);
            match c.verdict {
                Verdict::Pass => {
                    out.stats.passes += 1;
                    out.passes.push(c);
                }
                Verdict::FailAt(_) => out.stats.sdp_failures += 1,
            }
        }
        out.stats.types_scanned += scanned;
        out.stats.degree_genus_rejections += scanned - hits;
    }
    Ok(out)
}

fn attribute(c: CurveCandidate) -> PassEntry {
    let families = identify(&c.ntype, c.degree);
    let exception = known_exceptions()
        .into_iter()
        .find(|e| SingularityType::TwoPairs(e.ntype) == c.ntype && e.degree == c.degree)
        .map(|e| e.exclusion_note);
    let unexpected = families.is_empty() && exception.is_none();
    PassEntry {
        candidate: c,
        families,
        exception,
        unexpected,
    }
}

/// Scan every valid two-pair type whose delta fits a curve of degree at most
/// `max_degree`, using `workers` threads.
pub fn enumerate_candidates(
    max_degree: u64,
    workers: usize,
) -> Result<EnumerationReport, EnumerationError> {
    check_bound(max_degree)?;
    let started = Instant::now();
    let two_delta_max = (max_degree - 1) * (max_degree - 2);
    let work = shards(two_delta_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| EnumerationError::Pool(e.to_string()))?;
    let results: Vec<ShardResult> = pool.install(|| {
        work.par_iter()
            .map(|&(p2, p1)| scan_shard(p2, p1, max_degree))
            .collect::<Result<_, _>>()
    })?;

    let mut stats = EnumerationStats::default();
    let mut passes = Vec::new();
    for r in results {
        stats += r.stats;
        passes.extend(r.passes);
    }
    passes.sort_by_key(|a| (a.degree, a.ntype));
    let candidates = pool.install(|| passes.into_par_iter().map(attribute).collect());
    Ok(EnumerationReport {
        max_degree,
        candidates,
        stats,
        elapsed: started.elapsed(),
    })
}

/// Every non-degenerate family member and known exception with degree at
/// most `max_degree`, sorted like a pass list.
pub fn expected_entries(max_degree: u64) -> Result<Vec<ExpectedEntry>, FamilyError> {
    let mut out = Vec::new();
    for f in FamilyId::ALL {
        for inst in enumerate_family(f, max_degree.into())? {
            if inst.ntype.is_degenerate() {
                continue;
            }
            out.push(ExpectedEntry {
                ntype: inst.ntype,
                degree: inst.degree,
                attribution: Attribution::Family(FamilyMatch {
                    family: inst.family,
                    params: inst.params,
                }),
            });
        }
    }
    for e in known_exceptions() {
        if e.degree <= max_degree.into() {
            out.push(ExpectedEntry {
                ntype: e.ntype.into(),
                degree: e.degree,
                attribution: Attribution::Exception {
                    note: e.exclusion_note,
                },
            });
        }
    }
    out.sort_by_key(|a| (a.degree, a.ntype));
    Ok(out)
}

/// Compare a finished report with the catalogue.
pub fn cross_check_report(report: &EnumerationReport) -> Result<CrossCheckDiff, FamilyError> {
    let passed: HashSet<(SingularityType, u128)> = report
        .candidates
        .iter()
        .map(|p| (p.candidate.ntype, p.candidate.degree))
        .collect();
    let missing = expected_entries(report.max_degree)?
        .into_iter()
        .filter(|e| !passed.contains(&(e.ntype, e.degree)))
        .collect();
    let unexpected = report
        .candidates
        .iter()
        .filter(|p| p.unexpected)
        .map(|p| p.candidate.clone())
        .collect();
    let overlaps = report
        .candidates
        .iter()
        .filter(|p| p.families.len() > 1)
        .cloned()
        .collect();
    Ok(CrossCheckDiff {
        max_degree: report.max_degree,
        missing,
        unexpected,
        overlaps,
    })
}

/// Enumerate and compare in one step.
pub fn cross_check(max_degree: u64, workers: usize) -> Result<CrossCheckDiff, EnumerationError> {
    let report = enumerate_candidates(max_degree, workers)?;
    Ok(cross_check_report(&report)?)
}
