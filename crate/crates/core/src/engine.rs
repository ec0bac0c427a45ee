//! The iterative Tail-Eliminate procedure.
//!
//! Each iteration rebuilds the map from the current cover, stops if an end
//! condition holds, and otherwise removes exactly one selective implicant
//! that overlaps an anchor (by default a tail implicant).

use std::cmp::Reverse;
use std::fmt;

use serde_json::json;

use crate::cover::Cover;
use crate::cube::Cube;
use crate::error::{Error, Result};
use crate::expand::expand_cover_stable;
use crate::temap::TeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Removes candidates without checking coverage.
    Faithful,
    /// Removes a candidate only if the rest of the cover still covers it.
    #[default]
    Safe,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Faithful => "faithful",
            Mode::Safe => "safe",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which implicants a selective must overlap to become removable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AnchorPolicy {
    /// Only the implicants with the highest tail quotient.
    #[default]
    TailOnly,
    /// Tail implicants plus every implicant that covers a minterm no other
    /// implicant of the current cover covers.
    AnyEssential,
}

impl AnchorPolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            AnchorPolicy::TailOnly => "tail",
            AnchorPolicy::AnyEssential => "essential",
        }
    }
}

impl fmt::Display for AnchorPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndReason {
    AllQuotientsPositive,
    AllQuotientsEqual,
    NoRemovableSelective,
    NoSafeRemoval,
}

impl EndReason {
    pub fn as_str(self) -> &'static str {
        match self {
            EndReason::AllQuotientsPositive => "ALL_QUOTIENTS_POSITIVE",
            EndReason::AllQuotientsEqual => "ALL_QUOTIENTS_EQUAL",
            EndReason::NoRemovableSelective => "NO_REMOVABLE_SELECTIVE",
            EndReason::NoSafeRemoval => "NO_SAFE_REMOVAL",
        }
    }
}

impl fmt::Display for EndReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    pub mode: Mode,
    pub anchor: AnchorPolicy,
    /// Run prime expansion before the first iteration.
    pub expand_first: bool,
}

impl Options {
    pub fn new(mode: Mode) -> Self {
        Options {
            mode,
            ..Options::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationRecord {
    pub cover_before: Cover,
    pub map: TeMap,
    pub tails: Vec<usize>,
    pub selectives: Vec<usize>,
    /// Selectives that overlap an anchor, in index order.
    pub removable: Vec<usize>,
    pub removed: Option<Cube>,
    /// Candidates ranked ahead of the removal that would have uncovered a
    /// minterm (safe mode only).
    pub skipped_unsafe: Vec<Cube>,
    pub end_reason: Option<EndReason>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimizationTrace {
    pub mode: Mode,
    pub anchor: AnchorPolicy,
    pub initial: Cover,
    pub steps: Vec<IterationRecord>,
    pub final_cover: Cover,
    pub equivalent_to_input: bool,
}

impl MinimizationTrace {
    pub fn removals(&self) -> Vec<Cube> {
        self.steps.iter().filter_map(|s| s.removed).collect()
    }

    pub fn end_reason(&self) -> Option<EndReason> {
        self.steps.last().and_then(|s| s.end_reason)
    }

    /// JSON form of the trace; cubes appear as canonical encodings and each
    /// matrix has `-1` on its diagonal.
    pub fn to_json(&self) -> serde_json::Value {
        let iterations: Vec<serde_json::Value> = self
            .steps
            .iter()
            .map(|s| {
                json!({
                    "cover": s.cover_before.encodings(),
                    "matrix": s.map.matrix(),
                    "totals": s.map.totals(),
                    "quotients": s.map.quotients(),
                    "tails": s.tails,
                    "selectives": s.selectives,
                    "removable": s.removable,
                    "removed": s.removed.map(|c| c.encoding()),
                    "end_reason": s.end_reason.map(EndReason::as_str),
                })
            })
            .collect();
        json!({
            "mode": self.mode.as_str(),
            "initial": self.initial.encodings(),
            "final": self.final_cover.encodings(),
            "equivalent": self.equivalent_to_input,
            "iterations": iterations,
        })
    }
}

/// Terminal condition on the quotients of every implicant, including those
/// with no overlaps. Positivity is checked before equality.
pub fn end_condition(map: &TeMap) -> Option<EndReason> {
    let q = map.quotients();
    if q.iter().all(|&t| t > 0) {
        Some(EndReason::AllQuotientsPositive)
    } else if q.windows(2).all(|w| w[0] == w[1]) {
        Some(EndReason::AllQuotientsEqual)
    } else {
        None
    }
}

/// Outcome of the removal choice for one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub removable: Vec<usize>,
    pub chosen: Option<usize>,
    pub skipped_unsafe: Vec<usize>,
}

/// Picks at most one selective implicant to remove.
///
/// Candidates are selectives overlapping an anchor other than themselves.
/// The winner has the most total overlaps, then the smallest encoding.
pub fn select_removal(
    map: &TeMap,
    mode: Mode,
    anchor: AnchorPolicy,
    remaining: &Cover,
) -> Result<Selection> {
    let (tails, selectives) = map.classify();
    let mut anchors = tails;
    if anchor == AnchorPolicy::AnyEssential {
        for (i, cube) in map.implicants().iter().enumerate() {
            if !anchors.contains(&i) && !remaining.is_redundant(cube)? {
                anchors.push(i);
            }
        }
    }

    let removable: Vec<usize> = selectives
        .into_iter()
        .filter(|&s| anchors.iter().any(|&a| a != s && map.count(s, a) > 0))
        .collect();

    let stats = map.stats();
    let mut ranked = removable.clone();
    ranked.sort_by_key(|&i| (Reverse(stats[i].total_overlaps), stats[i].cube));

    let mut skipped_unsafe = vec![];
    let mut chosen = None;
    for i in ranked {
        if mode == Mode::Safe && !remaining.is_redundant(&stats[i].cube)? {
            skipped_unsafe.push(i);
            continue;
        }
        chosen = Some(i);
        break;
    }

    Ok(Selection {
        removable,
        chosen,
        skipped_unsafe,
    })
}

pub fn te_minimize(cover: &Cover, mode: Mode) -> Result<MinimizationTrace> {
    te_minimize_with(cover, &Options::new(mode))
}

pub fn te_minimize_with(cover: &Cover, opts: &Options) -> Result<MinimizationTrace> {
    if cover.is_empty() {
        return Err(Error::EmptyCover);
    }
    let initial = if opts.expand_first {
        expand_cover_stable(cover)?
    } else {
        cover.clone()
    };

    let mut current = initial.clone();
    let mut steps = Vec::new();
    loop {
        let map = TeMap::build(&current)?;
        let (tails, selectives) = map.classify();
        let mut record = IterationRecord {
            cover_before: current.clone(),
            map,
            tails,
            selectives,
            removable: vec![],
            removed: None,
            skipped_unsafe: vec![],
            end_reason: None,
        };

        if let Some(reason) = end_condition(&record.map) {
            record.end_reason = Some(reason);
            steps.push(record);
            break;
        }

        let sel = select_removal(&record.map, opts.mode, opts.anchor, &current)?;
        record.removable = sel.removable;
        record.skipped_unsafe = sel
            .skipped_unsafe
            .iter()
            .map(|&i| current.cubes()[i])
            .collect();
        match sel.chosen {
            Some(i) => {
                record.removed = Some(current.cubes()[i]);
                current = current.without(i);
                steps.push(record);
            }
            None => {
                record.end_reason = Some(if record.skipped_unsafe.is_empty() {
                    EndReason::NoRemovableSelective
                } else {
                    EndReason::NoSafeRemoval
                });
                steps.push(record);
                break;
            }
        }
    }

    let equivalent_to_input = current.equivalent_symbolic(&initial)?;
    Ok(MinimizationTrace {
        mode: opts.mode,
        anchor: opts.anchor,
        initial,
        steps,
        final_cover: current,
        equivalent_to_input,
    })
}
