//! Benchmark harness: seeded random (or exhaustive) functions, minimized by
//! the Tail-Eliminate engine and scored against the exact oracle.
//!
//! # Generator
//!
//! Function `index` under seed `seed` draws from a SplitMix64 stream whose
//! state starts at `seed + (index + 1) * 0x9E3779B97F4A7C15` (wrapping).
//! Minterms are visited in increasing order; for each one a uniform
//! `u = (next() >> 11) * 2^-53` is drawn and the minterm is ON if
//! `u < density`, DC if `u < density + dc_density`, and OFF otherwise.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cover::Cover;
use crate::cube::MintermSet;
use crate::engine::{te_minimize_with, AnchorPolicy, Mode, Options};
use crate::error::{Error, Result};
use crate::expand::{prime_implicants, FunctionSpec};
use crate::oracle::exact_minimum_cover;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Largest width for `--exhaustive` runs.
pub const EXHAUSTIVE_CAP: usize = 4;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub n: usize,
    pub count: usize,
    pub density: f64,
    pub dc_density: f64,
    pub seed: u64,
    pub modes: Vec<Mode>,
    pub anchors: Vec<AnchorPolicy>,
    /// Enumerate every function of `n` variables instead of sampling.
    pub exhaustive: bool,
    /// Record wall-clock runtimes (makes the output non-reproducible).
    pub timings: bool,
}

impl Default for BenchSpec {
    fn default() -> Self {
        BenchSpec {
            n: 4,
            count: 100,
            density: 0.5,
            dc_density: 0.0,
            seed: 0,
            modes: vec![Mode::Safe],
            anchors: vec![AnchorPolicy::TailOnly],
            exhaustive: false,
            timings: false,
        }
    }
}

impl BenchSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        crate::cube::check_cap(self.n)?;
        if !(0.0..=1.0).contains(&self.density) || !(0.0..=1.0).contains(&self.dc_density) {
            return bad("densities must lie in [0, 1]".into());
        }
        if self.density + self.dc_density > 1.0 {
            return bad("density + dc-density must not exceed 1".into());
        }
        if self.exhaustive && self.n > EXHAUSTIVE_CAP {
            return bad(format!("--exhaustive supports n <= {EXHAUSTIVE_CAP}"));
        }
        if self.modes.is_empty() || self.anchors.is_empty() {
            return bad("at least one mode and one anchor policy are required".into());
        }
        Ok(())
    }

    /// Number of functions the run covers.
    pub fn function_count(&self) -> usize {
        if self.exhaustive {
            1usize << (1usize << self.n)
        } else {
            self.count
        }
    }

    pub fn function(&self, index: usize) -> Result<FunctionSpec> {
        if self.exhaustive {
            exhaustive_function(self.n, index as u64)
        } else {
            generate_function(self, index as u64)
        }
    }
}

/// The `index`-th pseudo-random function of `spec`.
pub fn generate_function(spec: &BenchSpec, index: u64) -> Result<FunctionSpec> {
    let start = spec
        .seed
        .wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    let mut rng = SplitMix64::new(start);
    let mut on = MintermSet::new(spec.n)?;
    let mut dc = MintermSet::new(spec.n)?;
    for m in 0..(1u64 << spec.n) {
        let u = rng.next_f64();
        if u < spec.density {
            on.insert(m)?;
        } else if u < spec.density + spec.dc_density {
            dc.insert(m)?;
        }
    }
    FunctionSpec::new(on, dc)
}

/// Function whose truth table is the binary expansion of `index`: minterm
/// `m` is ON iff bit `m` of `index` is set.
pub fn exhaustive_function(n: usize, index: u64) -> Result<FunctionSpec> {
    let on = MintermSet::from_iter(n, (0..1u64 << n).filter(|m| (index >> m) & 1 == 1))?;
    Ok(FunctionSpec::from_on(on))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub index: usize,
    pub n: usize,
    pub on_count: usize,
    pub dc_count: usize,
    pub te_terms: usize,
    pub te_literals: usize,
    pub exact_terms: usize,
    pub equivalent: bool,
    pub optimal: bool,
    pub te_ms: Option<f64>,
    pub exact_ms: Option<f64>,
    pub mode: Mode,
    pub anchor: AnchorPolicy,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchSummary {
    pub mode: Mode,
    pub anchor: AnchorPolicy,
    pub count: usize,
    pub equivalent_count: usize,
    pub optimal_count: usize,
    pub equivalence_rate: f64,
    /// Among equivalent results.
    pub optimality_rate: f64,
    /// Mean of `te_terms / exact_terms` over equivalent rows with a
    /// non-empty optimum.
    pub mean_term_ratio: f64,
    pub mean_te_ms: Option<f64>,
    pub mean_exact_ms: Option<f64>,
}

impl Serialize for Mode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl Serialize for AnchorPolicy {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        round6(num as f64 / den as f64)
    }
}

/// Aggregates rows of one configuration.
pub fn summarize(mode: Mode, anchor: AnchorPolicy, rows: &[BenchRow]) -> BenchSummary {
    let equivalent_count = rows.iter().filter(|r| r.equivalent).count();
    let optimal_count = rows.iter().filter(|r| r.optimal).count();
    let ratios: Vec<f64> = rows
        .iter()
        .filter(|r| r.equivalent && r.exact_terms > 0)
        .map(|r| r.te_terms as f64 / r.exact_terms as f64)
        .collect();
    let mean = |xs: &[f64]| {
        if xs.is_empty() {
            0.0
        } else {
            round6(xs.iter().sum::<f64>() / xs.len() as f64)
        }
    };
    let mean_opt = |get: fn(&BenchRow) -> Option<f64>| {
        let xs: Option<Vec<f64>> = rows.iter().map(get).collect();
        xs.filter(|v| !v.is_empty()).map(|v| mean(&v))
    };
    BenchSummary {
        mode,
        anchor,
        count: rows.len(),
        equivalent_count,
        optimal_count,
        equivalence_rate: ratio(equivalent_count, rows.len()),
        optimality_rate: ratio(optimal_count, equivalent_count),
        mean_term_ratio: mean(&ratios),
        mean_te_ms: mean_opt(|r| r.te_ms),
        mean_exact_ms: mean_opt(|r| r.exact_ms),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigReport {
    #[serde(flatten)]
    pub summary: BenchSummary,
    #[serde(skip)]
    pub rows: Vec<BenchRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub density: f64,
    pub dc_density: f64,
    pub exhaustive: bool,
    pub configs: Vec<ConfigReport>,
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Runs every configuration of `spec`; functions are processed in parallel
/// and rows come back ordered by function index.
pub fn run_bench(spec: &BenchSpec) -> Result<BenchReport> {
    spec.validate()?;
    let configs: Vec<(Mode, AnchorPolicy)> = spec
        .modes
        .iter()
        .flat_map(|&m| spec.anchors.iter().map(move |&a| (m, a)))
        .collect();

    let per_function: Vec<Vec<BenchRow>> = (0..spec.function_count())
        .into_par_iter()
        .map(|index| score_function(spec, index, &configs))
        .collect::<Result<_>>()?;

    let configs = configs
        .iter()
        .enumerate()
        .map(|(k, &(mode, anchor))| {
            let rows: Vec<BenchRow> = per_function.iter().map(|r| r[k].clone()).collect();
            ConfigReport {
                summary: summarize(mode, anchor, &rows),
                rows,
            }
        })
        .collect();

    Ok(BenchReport {
        n: spec.n,
        count: spec.function_count(),
        seed: spec.seed,
        density: spec.density,
        dc_density: spec.dc_density,
        exhaustive: spec.exhaustive,
        configs,
    })
}

fn score_function(
    spec: &BenchSpec,
    index: usize,
    configs: &[(Mode, AnchorPolicy)],
) -> Result<Vec<BenchRow>> {
    let f = spec.function(index)?;
    let start = Instant::now();
    let exact = exact_minimum_cover(&f)?;
    let exact_time = start.elapsed();
    let primes = prime_implicants(&f);

    configs
        .iter()
        .map(|&(mode, anchor)| {
            let start = Instant::now();
            let result = if primes.is_empty() {
                primes.clone()
            } else {
                let opts = Options {
                    mode,
                    anchor,
                    expand_first: false,
                };
                te_minimize_with(&primes, &opts)?.final_cover
            };
            let te_time = start.elapsed();
            row(
                spec, index, &f, &result, &exact, mode, anchor, te_time, exact_time,
            )
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn row(
    spec: &BenchSpec,
    index: usize,
    f: &FunctionSpec,
    result: &Cover,
    exact: &Cover,
    mode: Mode,
    anchor: AnchorPolicy,
    te_time: Duration,
    exact_time: Duration,
) -> Result<BenchRow> {
    let equivalent = f.is_implemented_by(result)?;
    Ok(BenchRow {
        index,
        n: spec.n,
        on_count: f.on().len(),
        dc_count: f.dc().len(),
        te_terms: result.len(),
        te_literals: result.literal_count(),
        exact_terms: exact.len(),
        equivalent,
        optimal: equivalent && result.len() == exact.len(),
        te_ms: spec.timings.then(|| ms(te_time)),
        exact_ms: spec.timings.then(|| ms(exact_time)),
        mode,
        anchor,
    })
}

pub const CSV_HEADER: &str =
    "index,n,on_count,dc_count,te_terms,te_literals,exact_terms,equivalent,optimal,te_ms,exact_ms,mode,anchor";

impl BenchReport {
    /// All rows of all configurations, configuration by configuration.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        let time = |t: Option<f64>| t.map(|x| format!("{x:.3}")).unwrap_or_default();
        for config in &self.configs {
            for r in &config.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.index,
                    r.n,
                    r.on_count,
                    r.dc_count,
                    r.te_terms,
                    r.te_literals,
                    r.exact_terms,
                    r.equivalent,
                    r.optimal,
                    time(r.te_ms),
                    time(r.exact_ms),
                    r.mode,
                    r.anchor
                ));
            }
        }
        out
    }

    pub fn summary_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}
