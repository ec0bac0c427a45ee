//! The Tail-Eliminate map: pairwise overlaps, totals, tail quotients and the
//! tail/selective classification that drives redundancy removal.

use crate::cover::Cover;
use crate::cube::Cube;
use crate::error::{Error, Result};

/// Number of minterms two cubes share, `2^(width - a)` where `a` is the bound
/// literal count of their conjunction, or 0 when they contradict.
pub fn overlap(a: &Cube, b: &Cube) -> Result<u64> {
    Ok(a.intersect(b)?.map_or(0, |x| overlap_count(&x)))
}

fn overlap_count(intersection: &Cube) -> u64 {
    1u64 << (intersection.width() - intersection.bound_count())
}

/// One off-diagonal cell of the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapEntry {
    pub row: usize,
    pub col: usize,
    pub intersection: Option<Cube>,
    pub bound_count: usize,
    pub count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ImplicantClass {
    /// Attains the highest tail quotient among overlapping implicants.
    Tail,
    /// Attains the lowest tail quotient among overlapping implicants.
    Selective,
    /// Overlaps nothing; never removed and never an anchor.
    EssentialZeroOverlap,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicantStats {
    pub cube: Cube,
    /// Minterms implied by the cube.
    pub h: u64,
    pub total_overlaps: u64,
    pub tail_quotient: i64,
    pub class: ImplicantClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeMap {
    width: usize,
    implicants: Vec<Cube>,
    entries: Vec<Vec<Option<OverlapEntry>>>,
    stats: Vec<ImplicantStats>,
}

impl TeMap {
    pub fn build(cover: &Cover) -> Result<Self> {
        if cover.is_empty() {
            return Err(Error::EmptyCover);
        }
        let implicants = cover.cubes().to_vec();
        let n = implicants.len();

        let mut entries: Vec<Vec<Option<OverlapEntry>>> = vec![vec![None; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let intersection = implicants[i].intersect_unchecked(&implicants[j]);
                let (bound_count, count) =
                    intersection.map_or((0, 0), |x| (x.bound_count(), overlap_count(&x)));
                let entry = OverlapEntry {
                    row: i,
                    col: j,
                    intersection,
                    bound_count,
                    count,
                };
                entries[j][i] = Some(OverlapEntry {
                    row: j,
                    col: i,
                    ..entry.clone()
                });
                entries[i][j] = Some(entry);
            }
        }

        let mut stats: Vec<ImplicantStats> = implicants
            .iter()
            .zip(&entries)
            .map(|(cube, row)| {
                let total: u64 = row.iter().flatten().map(|e| e.count).sum();
                ImplicantStats {
                    cube: *cube,
                    h: cube.weight(),
                    total_overlaps: total,
                    tail_quotient: cube.weight() as i64 - total as i64,
                    class: ImplicantClass::Other,
                }
            })
            .collect();

        let (tails, selectives) = extremes(&stats);
        for s in stats.iter_mut().filter(|s| s.total_overlaps == 0) {
            s.class = ImplicantClass::EssentialZeroOverlap;
        }
        for &i in &selectives {
            stats[i].class = ImplicantClass::Selective;
        }
        // With a single distinct quotient every candidate is a tail.
        for &i in &tails {
            stats[i].class = ImplicantClass::Tail;
        }

        Ok(TeMap {
            width: cover.width(),
            implicants,
            entries,
            stats,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn implicants(&self) -> &[Cube] {
        &self.implicants
    }

    pub fn len(&self) -> usize {
        self.implicants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implicants.is_empty()
    }

    /// Cell `(row, col)`; `None` on the diagonal.
    pub fn entry(&self, row: usize, col: usize) -> Option<&OverlapEntry> {
        self.entries[row][col].as_ref()
    }

    /// Overlap count for `(row, col)`; 0 on the diagonal.
    pub fn count(&self, row: usize, col: usize) -> u64 {
        self.entry(row, col).map_or(0, |e| e.count)
    }

    pub fn stats(&self) -> &[ImplicantStats] {
        &self.stats
    }

    pub fn totals(&self) -> Vec<u64> {
        self.stats.iter().map(|s| s.total_overlaps).collect()
    }

    pub fn quotients(&self) -> Vec<i64> {
        self.stats.iter().map(|s| s.tail_quotient).collect()
    }

    /// Row-major counts with `-1` on the diagonal.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.len())
            .map(|i| {
                (0..self.len())
                    .map(|j| self.entry(i, j).map_or(-1, |e| e.count as i64))
                    .collect()
            })
            .collect()
    }

    /// `(tails, selectives)`: indices of the overlapping implicants with the
    /// highest and the lowest tail quotient.
    pub fn classify(&self) -> (Vec<usize>, Vec<usize>) {
        extremes(&self.stats)
    }
}

fn extremes(stats: &[ImplicantStats]) -> (Vec<usize>, Vec<usize>) {
    let candidates = || {
        stats
            .iter()
            .enumerate()
            .filter(|(_, s)| s.total_overlaps > 0)
    };
    let Some(max) = candidates().map(|(_, s)| s.tail_quotient).max() else {
        return (vec![], vec![]);
    };
    let min = candidates().map(|(_, s)| s.tail_quotient).min().unwrap();
    let pick = |q: i64| {
        candidates()
            .filter(|(_, s)| s.tail_quotient == q)
            .map(|(i, _)| i)
            .collect()
    };
    (pick(max), pick(min))
}

pub fn build_te_map(cover: &Cover) -> Result<TeMap> {
    TeMap::build(cover)
}

pub fn classify(map: &TeMap) -> (Vec<usize>, Vec<usize>) {
    map.classify()
}
