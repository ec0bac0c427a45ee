//! Sum-of-products covers.

use std::fmt;

use crate::cube::{check_width, Cube, MintermSet};
use crate::error::{Error, Result};

/// An ordered list of distinct cubes of one width. The empty cover is the
/// constant-0 function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cover {
    width: usize,
    cubes: Vec<Cube>,
}

impl Cover {
    pub fn empty(width: usize) -> Result<Self> {
        check_width(width)?;
        Ok(Cover {
            width,
            cubes: Vec::new(),
        })
    }

    /// Builds a cover, dropping repeated cubes (first occurrence wins).
    pub fn new<I: IntoIterator<Item = Cube>>(width: usize, cubes: I) -> Result<Self> {
        let mut cover = Cover::empty(width)?;
        for cube in cubes {
            cover.push(cube)?;
        }
        Ok(cover)
    }

    /// Parses canonical encodings, e.g. `["0-0", "-11"]`.
    pub fn from_encodings<S: AsRef<str>>(encodings: &[S]) -> Result<Self> {
        let cubes = encodings
            .iter()
            .map(|s| Cube::parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let width = cubes.first().map(Cube::width).ok_or(Error::EmptyCover)?;
        Cover::new(width, cubes)
    }

    /// Appends `cube` unless already present. Returns whether it was added.
    pub fn push(&mut self, cube: Cube) -> Result<bool> {
        if cube.width() != self.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: cube.width(),
            });
        }
        if self.cubes.contains(&cube) {
            return Ok(false);
        }
        self.cubes.push(cube);
        Ok(true)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn contains(&self, cube: &Cube) -> bool {
        self.cubes.contains(cube)
    }

    pub fn position(&self, cube: &Cube) -> Option<usize> {
        self.cubes.iter().position(|c| c == cube)
    }

    /// Copy of the cover without the cube at `index`.
    pub fn without(&self, index: usize) -> Cover {
        let mut cubes = self.cubes.clone();
        cubes.remove(index);
        Cover {
            width: self.width,
            cubes,
        }
    }

    /// Same cubes in canonical-encoding order.
    pub fn sorted(&self) -> Cover {
        let mut cubes = self.cubes.clone();
        cubes.sort();
        Cover {
            width: self.width,
            cubes,
        }
    }

    /// Total number of bound literals over all cubes.
    pub fn literal_count(&self) -> usize {
        self.cubes.iter().map(Cube::bound_count).sum()
    }

    pub fn covers(&self, minterm: u64) -> bool {
        self.cubes.iter().any(|c| c.covers(minterm))
    }

    /// Truth-table content of the cover.
    pub fn minterms(&self) -> Result<MintermSet> {
        let mut set = MintermSet::new(self.width)?;
        for cube in &self.cubes {
            for m in cube.minterm_iter() {
                set.insert(m)?;
            }
        }
        Ok(set)
    }

    fn same_width(&self, other: &Cover) -> Result<()> {
        if self.width != other.width {
            Err(Error::WidthMismatch {
                left: self.width,
                right: other.width,
            })
        } else {
            Ok(())
        }
    }

    /// Truth-table equivalence.
    pub fn equivalent(&self, other: &Cover) -> Result<bool> {
        self.same_width(other)?;
        Ok(self.minterms()? == other.minterms()?)
    }

    /// Equivalence by mutual cube containment; no width cap.
    pub fn equivalent_symbolic(&self, other: &Cover) -> Result<bool> {
        self.same_width(other)?;
        Ok(self.cubes.iter().all(|c| other.covers_cube(c))
            && other.cubes.iter().all(|c| self.covers_cube(c)))
    }

    /// True if every minterm of `target` is covered by some cube.
    pub fn covers_cube(&self, target: &Cube) -> bool {
        cube_covered(target, &self.cubes)
    }

    /// True if every minterm of `cube` is covered by another cube of the cover.
    pub fn is_redundant(&self, cube: &Cube) -> Result<bool> {
        let index = self
            .position(cube)
            .ok_or_else(|| Error::NotInCover(cube.encoding()))?;
        let others: Vec<Cube> = self
            .cubes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, c)| *c)
            .collect();
        Ok(cube_covered(cube, &others))
    }

    pub fn encodings(&self) -> Vec<String> {
        self.cubes.iter().map(Cube::encoding).collect()
    }
}

/// Cube-in-cover containment by splitting `target` on variables that the
/// intersecting cubes bind.
fn cube_covered(target: &Cube, cubes: &[Cube]) -> bool {
    let relevant: Vec<Cube> = cubes
        .iter()
        .filter(|c| c.intersect_unchecked(target).is_some())
        .copied()
        .collect();
    if relevant.iter().any(|c| c.contains(target)) {
        return true;
    }
    if relevant.is_empty() {
        return false;
    }
    // Some relevant cube must bind a variable that `target` leaves free,
    // otherwise it would contain `target`.
    let free = !target.care_mask();
    let mut counts = [0u32; 32];
    for c in &relevant {
        let mut bits = c.care_mask() & free;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            counts[b] += 1;
            bits &= bits - 1;
        }
    }
    let split = (0..32).max_by_key(|&b| (counts[b], b)).unwrap();
    debug_assert!(counts[split] > 0);
    let var = target.width() - 1 - split;
    use crate::cube::Literal;
    cube_covered(&target.with_literal(var, Literal::Neg), &relevant)
        && cube_covered(&target.with_literal(var, Literal::Pos), &relevant)
}

impl fmt::Debug for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.cubes.iter()).finish()
    }
}
