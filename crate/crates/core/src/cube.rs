//! Product terms and minterm sets.
//!
//! Variable 0 is the most significant bit of a minterm index, so the cube
//! `0-0` over `(A, B, C)` covers minterms 0 (`000`) and 2 (`010`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Largest number of variables a cube can carry.
pub const MAX_WIDTH: usize = 32;

/// Largest width for which minterm sets (truth tables) are materialized.
pub const TRUTH_TABLE_CAP: usize = 24;

pub(crate) fn check_width(width: usize) -> Result<()> {
    if width == 0 || width > MAX_WIDTH {
        Err(Error::InvalidWidth(width))
    } else {
        Ok(())
    }
}

pub(crate) fn check_cap(width: usize) -> Result<()> {
    check_width(width)?;
    if width > TRUTH_TABLE_CAP {
        Err(Error::WidthOverCap {
            width,
            cap: TRUTH_TABLE_CAP,
        })
    } else {
        Ok(())
    }
}

/// State of one variable inside a product term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Literal {
    Free,
    Neg,
    Pos,
}

impl Literal {
    pub fn as_char(self) -> char {
        match self {
            Literal::Free => '-',
            Literal::Neg => '0',
            Literal::Pos => '1',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '-' => Some(Literal::Free),
            '0' => Some(Literal::Neg),
            '1' => Some(Literal::Pos),
            _ => None,
        }
    }
}

/// A product term over `width` variables.
///
/// Stored as a care mask (bound variables) and a value mask (polarity of the
/// bound variables). Variable `i` lives in bit `width - 1 - i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cube {
    width: u8,
    care: u32,
    value: u32,
}

impl Cube {
    /// The cube with no bound literals.
    pub fn universal(width: usize) -> Result<Self> {
        check_width(width)?;
        Ok(Cube {
            width: width as u8,
            care: 0,
            value: 0,
        })
    }

    /// The cube binding every variable to the bits of `minterm`.
    pub fn from_minterm(width: usize, minterm: u64) -> Result<Self> {
        check_width(width)?;
        if minterm >> width != 0 {
            return Err(Error::MintermOutOfRange { minterm, width });
        }
        let full = full_mask(width);
        Ok(Cube {
            width: width as u8,
            care: full,
            value: minterm as u32,
        })
    }

    pub fn from_literals(literals: &[Literal]) -> Result<Self> {
        let mut cube = Cube::universal(literals.len())?;
        for (i, lit) in literals.iter().enumerate() {
            cube = cube.with_literal(i, *lit);
        }
        Ok(cube)
    }

    /// Builds a cube from raw masks, where bit `width - 1 - i` is variable `i`.
    pub fn from_masks(width: usize, care: u32, value: u32) -> Result<Self> {
        check_width(width)?;
        let full = full_mask(width);
        if care & !full != 0 || value & !care != 0 {
            return Err(Error::InvalidCube(format!(
                "care={care:#x} value={value:#x} width={width}"
            )));
        }
        Ok(Cube {
            width: width as u8,
            care,
            value,
        })
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn care_mask(&self) -> u32 {
        self.care
    }

    pub fn value_mask(&self) -> u32 {
        self.value
    }

    fn bit(&self, index: usize) -> u32 {
        1 << (self.width() - 1 - index)
    }

    pub fn literal(&self, index: usize) -> Literal {
        let bit = self.bit(index);
        if self.care & bit == 0 {
            Literal::Free
        } else if self.value & bit == 0 {
            Literal::Neg
        } else {
            Literal::Pos
        }
    }

    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        (0..self.width()).map(move |i| self.literal(i))
    }

    /// Returns a copy with variable `index` set to `lit`.
    ///
    /// Panics if `index >= width`.
    pub fn with_literal(self, index: usize, lit: Literal) -> Self {
        assert!(index < self.width(), "literal index out of range");
        let bit = self.bit(index);
        let (care, value) = match lit {
            Literal::Free => (self.care & !bit, self.value & !bit),
            Literal::Neg => (self.care | bit, self.value & !bit),
            Literal::Pos => (self.care | bit, self.value | bit),
        };
        Cube {
            care,
            value,
            ..self
        }
    }

    /// Number of bound literals.
    pub fn bound_count(&self) -> usize {
        self.care.count_ones() as usize
    }

    pub fn free_count(&self) -> usize {
        self.width() - self.bound_count()
    }

    /// Number of minterms implied by the cube, `2^(width - bound)`.
    pub fn weight(&self) -> u64 {
        1u64 << self.free_count()
    }

    pub fn covers(&self, minterm: u64) -> bool {
        (minterm as u32 & self.care) == self.value && minterm >> self.width() == 0
    }

    /// True if every minterm of `other` is a minterm of `self`.
    pub fn contains(&self, other: &Cube) -> bool {
        self.width == other.width
            && self.care & other.care == self.care
            && other.value & self.care == self.value
    }

    /// Conjunction of two cubes, or `None` when some variable appears in
    /// both polarities.
    pub fn intersect(&self, other: &Cube) -> Result<Option<Cube>> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                left: self.width(),
                right: other.width(),
            });
        }
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &Cube) -> Option<Cube> {
        let common = self.care & other.care;
        if (self.value ^ other.value) & common != 0 {
            return None;
        }
        Some(Cube {
            width: self.width,
            care: self.care | other.care,
            value: self.value | other.value,
        })
    }

    /// Iterates over the minterm indices of the cube in increasing order.
    pub fn minterm_iter(&self) -> impl Iterator<Item = u64> {
        let free = full_mask(self.width()) & !self.care;
        let value = self.value;
        // Enumerates submasks of `free` in increasing order.
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let sub = next?;
            next = if sub == free {
                None
            } else {
                Some((sub.wrapping_sub(free)) & free)
            };
            Some((value | sub) as u64)
        })
    }

    pub fn minterms(&self) -> Result<MintermSet> {
        let mut set = MintermSet::new(self.width())?;
        for m in self.minterm_iter() {
            set.bits.insert(m as usize);
        }
        Ok(set)
    }

    /// Canonical `0`/`1`/`-` string.
    pub fn encoding(&self) -> String {
        self.literals().map(Literal::as_char).collect()
    }

    pub fn parse(encoding: &str) -> Result<Self> {
        let lits = encoding
            .chars()
            .map(|c| Literal::from_char(c).ok_or_else(|| Error::InvalidCube(encoding.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if lits.is_empty() {
            return Err(Error::InvalidCube(encoding.to_string()));
        }
        Cube::from_literals(&lits)
    }
}

fn full_mask(width: usize) -> u32 {
    if width >= 32 {
        u32::MAX
    } else {
        (1u32 << width) - 1
    }
}

impl Ord for Cube {
    /// Orders cubes like their encodings compare as strings
    /// (`-` < `0` < `1`, variable 0 first).
    fn cmp(&self, other: &Self) -> Ordering {
        self.width.cmp(&other.width).then_with(|| {
            self.literals()
                .zip(other.literals())
                .map(|(a, b)| a.cmp(&b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Cube {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cube({})", self.encoding())
    }
}

impl FromStr for Cube {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Cube::parse(s)
    }
}

/// A set of minterm indices in `[0, 2^width)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MintermSet {
    width: usize,
    bits: FixedBitSet,
}

impl MintermSet {
    /// Empty set; fails above [`TRUTH_TABLE_CAP`].
    pub fn new(width: usize) -> Result<Self> {
        check_cap(width)?;
        Ok(MintermSet {
            width,
            bits: FixedBitSet::with_capacity(1usize << width),
        })
    }

    pub fn full(width: usize) -> Result<Self> {
        let mut set = MintermSet::new(width)?;
        set.bits.insert_range(..);
        Ok(set)
    }

    pub fn from_iter<I: IntoIterator<Item = u64>>(width: usize, members: I) -> Result<Self> {
        let mut set = MintermSet::new(width)?;
        for m in members {
            set.insert(m)?;
        }
        Ok(set)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of minterms in the universe, `2^width`.
    pub fn universe_len(&self) -> u64 {
        1u64 << self.width
    }

    pub fn insert(&mut self, minterm: u64) -> Result<()> {
        if minterm >= self.universe_len() {
            return Err(Error::MintermOutOfRange {
                minterm,
                width: self.width,
            });
        }
        self.bits.insert(minterm as usize);
        Ok(())
    }

    pub fn remove(&mut self, minterm: u64) {
        if minterm < self.universe_len() {
            self.bits.set(minterm as usize, false);
        }
    }

    pub fn contains(&self, minterm: u64) -> bool {
        minterm < self.universe_len() && self.bits.contains(minterm as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() as u64 == self.universe_len()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.ones().map(|m| m as u64)
    }

    fn same_width(&self, other: &MintermSet) -> Result<()> {
        if self.width != other.width {
            Err(Error::WidthMismatch {
                left: self.width,
                right: other.width,
            })
        } else {
            Ok(())
        }
    }

    pub fn union_with(&mut self, other: &MintermSet) -> Result<()> {
        self.same_width(other)?;
        self.bits.union_with(&other.bits);
        Ok(())
    }

    pub fn intersect_with(&mut self, other: &MintermSet) -> Result<()> {
        self.same_width(other)?;
        self.bits.intersect_with(&other.bits);
        Ok(())
    }

    pub fn difference_with(&mut self, other: &MintermSet) -> Result<()> {
        self.same_width(other)?;
        self.bits.difference_with(&other.bits);
        Ok(())
    }

    pub fn is_subset(&self, other: &MintermSet) -> bool {
        self.width == other.width && self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &MintermSet) -> bool {
        self.width == other.width && self.bits.is_disjoint(&other.bits)
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }
}

impl fmt::Debug for MintermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MintermSet<{}>", self.width)?;
        f.debug_set().entries(self.iter()).finish()
    }
}
