//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the code paths it is used to check.

#![allow(dead_code)]

use temin::{Cover, Cube, FunctionSpec, Literal};

/// Small deterministic generator, independent of the bench module's.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed ^ 0x2545_F491_4F6C_DD1D)
    }

    pub fn next(&mut self) -> u64 {
        // xorshift64*
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn chance(&mut self, p: f64) -> bool {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64 <= p
    }
}

/// Every cube of width `n`, as literal vectors decoded from base-3 codes.
pub fn all_cubes(n: usize) -> Vec<Cube> {
    (0..3usize.pow(n as u32))
        .map(|code| {
            let mut x = code;
            let lits: Vec<Literal> = (0..n)
                .map(|_| {
                    let l = [Literal::Free, Literal::Neg, Literal::Pos][x % 3];
                    x /= 3;
                    l
                })
                .collect();
            Cube::from_literals(&lits).unwrap()
        })
        .collect()
}

pub fn random_cube(rng: &mut TestRng, n: usize) -> Cube {
    let lits: Vec<Literal> = (0..n)
        .map(|_| [Literal::Free, Literal::Neg, Literal::Pos][rng.below(3) as usize])
        .collect();
    Cube::from_literals(&lits).unwrap()
}

pub fn random_cover(rng: &mut TestRng, n: usize, max_cubes: usize) -> Cover {
    let k = 1 + rng.below(max_cubes as u64) as usize;
    Cover::new(n, (0..k).map(|_| random_cube(rng, n))).unwrap()
}

/// Minterm test straight from the literal list.
pub fn cube_has(cube: &Cube, m: u64) -> bool {
    let n = cube.width();
    cube.literals().enumerate().all(|(i, lit)| {
        let bit = (m >> (n - 1 - i)) & 1;
        match lit {
            Literal::Free => true,
            Literal::Neg => bit == 0,
            Literal::Pos => bit == 1,
        }
    })
}

pub fn cube_minterms(cube: &Cube) -> Vec<u64> {
    (0..1u64 << cube.width())
        .filter(|&m| cube_has(cube, m))
        .collect()
}

pub fn truth_table(cover: &Cover) -> Vec<bool> {
    (0..1u64 << cover.width())
        .map(|m| cover.cubes().iter().any(|c| cube_has(c, m)))
        .collect()
}

pub fn random_function(rng: &mut TestRng, n: usize, on: f64, dc: f64) -> FunctionSpec {
    let mut on_set = vec![];
    let mut dc_set = vec![];
    for m in 0..1u64 << n {
        if rng.chance(on) {
            on_set.push(m);
        } else if rng.chance(dc) {
            dc_set.push(m);
        }
    }
    FunctionSpec::from_minterms(n, &on_set, &dc_set).unwrap()
}

pub fn function_from_table(n: usize, index: u64) -> FunctionSpec {
    let on: Vec<u64> = (0..1u64 << n).filter(|m| index >> m & 1 == 1).collect();
    FunctionSpec::from_minterms(n, &on, &[]).unwrap()
}

/// Maximal implicants by enumerating all 3^n cubes.
pub fn brute_force_primes(f: &FunctionSpec) -> Vec<String> {
    let n = f.width();
    if f.on().is_empty() {
        return vec![];
    }
    let allowed = |m: u64| f.on().contains(m) || f.dc().contains(m);
    let implicant = |c: &Cube| cube_minterms(c).into_iter().all(allowed);
    let mut out: Vec<String> = all_cubes(n)
        .into_iter()
        .filter(|c| implicant(c))
        .filter(|c| {
            (0..n).all(|i| {
                c.literal(i) == Literal::Free || !implicant(&c.with_literal(i, Literal::Free))
            })
        })
        .map(|c| c.encoding())
        .collect();
    out.sort();
    out
}

/// Size of the smallest subset of `primes` covering `f.on`, trying all
/// subsets of size 0, 1, 2, ... in turn.
pub fn brute_force_min_cover(f: &FunctionSpec, primes: &[Cube]) -> usize {
    let on: Vec<u64> = f.on().iter().collect();
    let masks: Vec<u64> = primes
        .iter()
        .map(|p| {
            on.iter()
                .enumerate()
                .filter(|(_, &m)| cube_has(p, m))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .filter(|&m| m != 0)
        .collect();
    let full = if on.len() == 64 {
        u64::MAX
    } else {
        (1u64 << on.len()) - 1
    };

    fn search(masks: &[u64], start: usize, left: usize, covered: u64, full: u64) -> bool {
        if covered == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..masks.len()).any(|i| search(masks, i + 1, left - 1, covered | masks[i], full))
    }

    (0..=masks.len())
        .find(|&size| search(&masks, 0, size, 0, full))
        .expect("the full prime set covers the on-set")
}
