//! Prime implicant generation by iterated adjacent-cube merging.

use std::collections::HashSet;

use crate::cover::Cover;
use crate::cube::{Cube, MintermSet};
use crate::error::{Error, Result};

/// A single-output function: required ON minterms plus don't-cares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionSpec {
    width: usize,
    on: MintermSet,
    dc: MintermSet,
}

impl FunctionSpec {
    /// Builds a function; minterms present in both sets stay in `on`.
    pub fn new(on: MintermSet, mut dc: MintermSet) -> Result<Self> {
        if on.width() != dc.width() {
            return Err(Error::WidthMismatch {
                left: on.width(),
                right: dc.width(),
            });
        }
        dc.difference_with(&on)?;
        Ok(FunctionSpec {
            width: on.width(),
            on,
            dc,
        })
    }

    pub fn from_on(on: MintermSet) -> Self {
        let dc = MintermSet::new(on.width()).expect("width already validated");
        FunctionSpec {
            width: on.width(),
            on,
            dc,
        }
    }

    pub fn from_minterms(width: usize, on: &[u64], dc: &[u64]) -> Result<Self> {
        FunctionSpec::new(
            MintermSet::from_iter(width, on.iter().copied())?,
            MintermSet::from_iter(width, dc.iter().copied())?,
        )
    }

    pub fn from_cover(cover: &Cover) -> Result<Self> {
        Ok(FunctionSpec::from_on(cover.minterms()?))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn on(&self) -> &MintermSet {
        &self.on
    }

    pub fn dc(&self) -> &MintermSet {
        &self.dc
    }

    /// ON ∪ DC.
    pub fn care_set(&self) -> MintermSet {
        let mut all = self.on.clone();
        all.union_with(&self.dc).expect("same width");
        all
    }

    /// True when `cover` includes every ON minterm and nothing outside ON ∪ DC.
    pub fn is_implemented_by(&self, cover: &Cover) -> Result<bool> {
        if cover.width() != self.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: cover.width(),
            });
        }
        let got = cover.minterms()?;
        Ok(self.on.is_subset(&got) && got.is_subset(&self.care_set()))
    }
}

/// Every prime implicant of `f`, sorted by canonical encoding.
pub fn prime_implicants(f: &FunctionSpec) -> Cover {
    let width = f.width();
    let empty = Cover::empty(width).expect("width already validated");
    if f.on().is_empty() {
        return empty;
    }

    let mut primes: Vec<Cube> = Vec::new();
    let mut level: HashSet<Cube> = f
        .care_set()
        .iter()
        .map(|m| Cube::from_minterm(width, m).expect("minterm in range"))
        .collect();

    while !level.is_empty() {
        let mut next: HashSet<Cube> = HashSet::new();
        let mut merged: HashSet<Cube> = HashSet::new();
        for cube in &level {
            let mut bits = cube.care_mask();
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                bits &= bits - 1;
                let partner = Cube::from_masks(width, cube.care_mask(), cube.value_mask() ^ bit)
                    .expect("same care mask");
                if level.contains(&partner) {
                    merged.insert(*cube);
                    next.insert(
                        Cube::from_masks(width, cube.care_mask() & !bit, cube.value_mask() & !bit)
                            .expect("subset of care mask"),
                    );
                }
            }
        }
        primes.extend(level.iter().filter(|c| !merged.contains(c)));
        level = next;
    }

    primes.sort();
    Cover::new(width, primes).expect("uniform width")
}

/// Prime implicants of the function a cover denotes.
pub fn expand_cover(cover: &Cover) -> Result<Cover> {
    Ok(prime_implicants(&FunctionSpec::from_cover(cover)?))
}

/// Like [`expand_cover`], but keeps the input's prime cubes first in their
/// original order and appends the remaining primes in canonical order.
pub fn expand_cover_stable(cover: &Cover) -> Result<Cover> {
    let primes = expand_cover(cover)?;
    stable_order(cover, &primes)
}

pub(crate) fn stable_order(original: &Cover, primes: &Cover) -> Result<Cover> {
    let kept = original.cubes().iter().filter(|c| primes.contains(c));
    let rest = primes.cubes().iter().filter(|c| !original.contains(c));
    Cover::new(primes.width(), kept.chain(rest).copied())
}
