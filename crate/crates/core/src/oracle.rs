//! Ground truth: exact minimum prime covers and scoring of heuristic runs.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

use crate::cover::Cover;
use crate::cube::Cube;
use crate::engine::MinimizationTrace;
use crate::error::{Error, Result};
use crate::expand::{prime_implicants, FunctionSpec};

/// Default largest width accepted by [`exact_minimum_cover`].
pub const DEFAULT_EXACT_CAP: usize = 16;

pub fn exact_minimum_cover(f: &FunctionSpec) -> Result<Cover> {
    exact_minimum_cover_with_cap(f, DEFAULT_EXACT_CAP)
}

/// Minimum-cardinality prime cover of `f.on`, ties broken by fewest
/// literals and then by the sorted cube list.
pub fn exact_minimum_cover_with_cap(f: &FunctionSpec, cap: usize) -> Result<Cover> {
    if f.width() > cap {
        return Err(Error::WidthOverCap {
            width: f.width(),
            cap,
        });
    }
    let primes = prime_implicants(f);
    let on: Vec<u64> = f.on().iter().collect();
    let primes: Vec<Cube> = primes
        .cubes()
        .iter()
        .filter(|p| on.iter().any(|&m| p.covers(m)))
        .copied()
        .collect();

    let mut search = Search::new(primes, &on);
    search.run();
    let cubes = search.best.map(|b| b.cubes).unwrap_or_default();
    Cover::new(f.width(), cubes)
}

#[derive(Debug, Clone)]
struct Best {
    literals: usize,
    cubes: Vec<Cube>,
}

impl Best {
    fn key(&self) -> (usize, usize, &[Cube]) {
        (self.cubes.len(), self.literals, &self.cubes)
    }
}

struct Search {
    primes: Vec<Cube>,
    /// For each prime, the on-minterm positions it covers.
    covers: Vec<FixedBitSet>,
    /// For each on-minterm position, the primes covering it.
    covered_by: Vec<Vec<usize>>,
    min_literals: usize,
    chosen: Vec<usize>,
    excluded: Vec<bool>,
    best: Option<Best>,
}

impl Search {
    fn new(primes: Vec<Cube>, on: &[u64]) -> Self {
        let covers: Vec<FixedBitSet> = primes
            .iter()
            .map(|p| {
                let mut bits = FixedBitSet::with_capacity(on.len());
                for (k, &m) in on.iter().enumerate() {
                    if p.covers(m) {
                        bits.insert(k);
                    }
                }
                bits
            })
            .collect();
        let covered_by = (0..on.len())
            .map(|k| {
                (0..primes.len())
                    .filter(|&p| covers[p].contains(k))
                    .collect()
            })
            .collect();
        let min_literals = primes.iter().map(Cube::bound_count).min().unwrap_or(0);
        let n = primes.len();
        Search {
            primes,
            covers,
            covered_by,
            min_literals,
            chosen: vec![],
            excluded: vec![false; n],
            best: None,
        }
    }

    fn run(&mut self) {
        let mut covered = FixedBitSet::with_capacity(self.covered_by.len());
        // Minterms with a single covering prime force that prime.
        for k in 0..self.covered_by.len() {
            if let [only] = self.covered_by[k][..] {
                if !self.chosen.contains(&only) {
                    self.chosen.push(only);
                    covered.union_with(&self.covers[only]);
                }
            }
        }
        self.branch(&covered);
    }

    fn literals(&self) -> usize {
        self.chosen
            .iter()
            .map(|&p| self.primes[p].bound_count())
            .sum()
    }

    fn branch(&mut self, covered: &FixedBitSet) {
        let total = self.covered_by.len();
        let uncovered = total - covered.count_ones(..);
        if uncovered == 0 {
            self.offer();
            return;
        }

        // Lower bound: no remaining prime covers more than `widest` new minterms.
        let widest = (0..self.primes.len())
            .filter(|&p| !self.excluded[p])
            .map(|p| self.covers[p].difference_count(covered))
            .max()
            .unwrap_or(0);
        if widest == 0 {
            return;
        }
        let extra = uncovered.div_ceil(widest);
        if let Some(best) = &self.best {
            let bound = (
                self.chosen.len() + extra,
                self.literals() + extra * self.min_literals,
            );
            if bound > (best.cubes.len(), best.literals) {
                return;
            }
        }

        // Branch on the uncovered minterm with the fewest available primes.
        let mut target = None;
        let mut fewest = usize::MAX;
        for k in 0..total {
            if covered.contains(k) {
                continue;
            }
            let avail = self.covered_by[k]
                .iter()
                .filter(|&&p| !self.excluded[p])
                .count();
            if avail < fewest {
                fewest = avail;
                target = Some(k);
            }
        }
        let Some(target) = target else { return };
        if fewest == 0 {
            return;
        }

        let mut options: Vec<usize> = self.covered_by[target]
            .iter()
            .copied()
            .filter(|&p| !self.excluded[p])
            .collect();
        options.sort_by_key(|&p| std::cmp::Reverse(self.covers[p].difference_count(covered)));

        for &p in &options {
            self.chosen.push(p);
            let mut next = covered.clone();
            next.union_with(&self.covers[p]);
            self.branch(&next);
            self.chosen.pop();
            self.excluded[p] = true;
        }
        for &p in &options {
            self.excluded[p] = false;
        }
    }

    fn offer(&mut self) {
        let mut cubes: Vec<Cube> = self.chosen.iter().map(|&p| self.primes[p]).collect();
        cubes.sort();
        let candidate = Best {
            literals: self.literals(),
            cubes,
        };
        let better = match &self.best {
            None => true,
            Some(best) => candidate.key() < best.key(),
        };
        if better {
            self.best = Some(candidate);
        }
    }
}

/// Quality of one heuristic run against the exact optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreReport {
    pub input_terms: usize,
    pub output_terms: usize,
    pub input_literals: usize,
    pub output_literals: usize,
    /// Output covers the ON-set and stays within ON ∪ DC.
    pub equivalent: bool,
    pub optimal_terms: usize,
    pub optimal_literals: usize,
    pub is_optimal: bool,
    pub runtime_heuristic: Duration,
    pub runtime_exact: Duration,
}

pub fn score(
    trace: &MinimizationTrace,
    f: &FunctionSpec,
    runtime_heuristic: Duration,
) -> Result<ScoreReport> {
    let equivalent = f.is_implemented_by(&trace.final_cover)?;
    let start = Instant::now();
    let exact = exact_minimum_cover(f)?;
    let runtime_exact = start.elapsed();
    let output_terms = trace.final_cover.len();
    Ok(ScoreReport {
        input_terms: trace.initial.len(),
        output_terms,
        input_literals: trace.initial.literal_count(),
        output_literals: trace.final_cover.literal_count(),
        equivalent,
        optimal_terms: exact.len(),
        optimal_literals: exact.literal_count(),
        is_optimal: equivalent && output_terms == exact.len(),
        runtime_heuristic,
        runtime_exact,
    })
}
