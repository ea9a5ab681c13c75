//! Motzkin, Dyck and Schröder paths: exhaustive generation, weights, and
//! weighted sums by dynamic programming over (position, height).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::WeightSystem;
use crate::scalar::{product, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
    Horizontal,
    /// `(2, 0)`; Schröder paths only.
    DoubleHorizontal,
}

impl Step {
    pub fn dx(self) -> usize {
        match self {
            Step::DoubleHorizontal => 2,
            _ => 1,
        }
    }

    pub fn dy(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            _ => 0,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Step::Up => "U",
            Step::Down => "D",
            Step::Horizontal => "H",
            Step::DoubleHorizontal => "H2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Motzkin,
    Dyck,
    Schroder,
}

impl Flavor {
    /// Step alphabet in enumeration priority order.
    pub fn alphabet(self) -> &'static [Step] {
        match self {
            Flavor::Motzkin => &[Step::Up, Step::Down, Step::Horizontal],
            Flavor::Dyck => &[Step::Up, Step::Down],
            Flavor::Schroder => &[Step::Up, Step::Down, Step::DoubleHorizontal],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Motzkin => "Motzkin",
            Flavor::Dyck => "Dyck",
            Flavor::Schroder => "Schröder",
        }
    }

    /// x-length of a path of size `n`: `n` for Motzkin, `2n` otherwise.
    pub fn length_for(self, n: usize) -> usize {
        match self {
            Flavor::Motzkin => n,
            Flavor::Dyck | Flavor::Schroder => 2 * n,
        }
    }
}

/// A lattice path from `(0,0)` to `(len,0)` that never goes below the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    flavor: Flavor,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(flavor: Flavor, steps: Vec<Step>) -> Result<Self> {
        let mut y = 0i64;
        for (i, s) in steps.iter().enumerate() {
            if !flavor.alphabet().contains(s) {
                return Err(Error::InvalidPath(format!(
                    "step {i} ({}) is not allowed in a {} path",
                    s.symbol(),
                    flavor.name()
                )));
            }
            y += s.dy();
            if y < 0 {
                return Err(Error::InvalidPath(format!("goes below the axis at step {i}")));
            }
        }
        if y != 0 {
            return Err(Error::InvalidPath(format!("ends at height {y}")));
        }
        Ok(LatticePath { flavor, steps })
    }

    pub fn empty(flavor: Flavor) -> Self {
        LatticePath {
            flavor,
            steps: Vec::new(),
        }
    }

    /// Parses `"UDH"`-style words; `H2` (or `h`) is a double horizontal step.
    pub fn parse(flavor: Flavor, word: &str) -> Result<Self> {
        let mut steps = Vec::new();
        let mut chars = word.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let step = match c {
                'U' | 'u' => Step::Up,
                'D' | 'd' => Step::Down,
                'h' => Step::DoubleHorizontal,
                'H' if chars.peek() == Some(&'2') || chars.peek() == Some(&'²') => {
                    chars.next();
                    Step::DoubleHorizontal
                }
                'H' if flavor == Flavor::Schroder => Step::DoubleHorizontal,
                'H' => Step::Horizontal,
                other => {
                    return Err(Error::InvalidPath(format!("unknown step symbol {other:?}")))
                }
            };
            steps.push(step);
        }
        LatticePath::new(flavor, steps)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Total x-displacement.
    pub fn len(&self) -> usize {
        self.steps.iter().map(|s| s.dx()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height of every step, i.e. the y-coordinate where it ends.
    pub fn heights(&self) -> Vec<usize> {
        let mut y = 0i64;
        self.steps
            .iter()
            .map(|s| {
                y += s.dy();
                y as usize
            })
            .collect()
    }

    /// `(step, starting x, ending height)` for every step.
    pub fn walk(&self) -> impl Iterator<Item = (Step, usize, usize)> + '_ {
        let mut x = 0;
        let mut y = 0i64;
        self.steps.iter().map(move |&s| {
            let start = x;
            x += s.dx();
            y += s.dy();
            (s, start, y as usize)
        })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "motzkin" => Ok(Flavor::Motzkin),
            "dyck" => Ok(Flavor::Dyck),
            "schroder" | "schröder" => Ok(Flavor::Schroder),
            other => Err(Error::InvalidPath(format!("unknown flavor {other:?}"))),
        }
    }
}

/// Depth-first generator of every path of a flavor and x-length, with step
/// priority `U < D < H (< H2)`.
pub struct PathIter {
    flavor: Flavor,
    len: usize,
    steps: Vec<Step>,
    // next alphabet index to try at each depth
    frames: Vec<usize>,
    x: usize,
    y: usize,
    done: bool,
}

impl PathIter {
    fn new(flavor: Flavor, len: usize) -> Self {
        PathIter {
            flavor,
            len,
            steps: Vec::new(),
            frames: vec![0],
            x: 0,
            y: 0,
            // Dyck and Schröder paths only exist for even length
            done: flavor != Flavor::Motzkin && len % 2 == 1,
        }
    }

    fn feasible(&self, s: Step) -> bool {
        let x = self.x + s.dx();
        let y = self.y as i64 + s.dy();
        y >= 0 && x <= self.len && y as usize <= self.len - x
    }
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.done {
            return None;
        }
        let alphabet = self.flavor.alphabet();
        loop {
            let frame = *self.frames.last().expect("root frame present");
            if self.x == self.len && frame == 0 {
                *self.frames.last_mut().unwrap() = alphabet.len();
                return Some(LatticePath {
                    flavor: self.flavor,
                    steps: self.steps.clone(),
                });
            }
            let next = (frame..alphabet.len()).find(|&i| self.feasible(alphabet[i]));
            match next {
                Some(i) => {
                    *self.frames.last_mut().unwrap() = i + 1;
                    let s = alphabet[i];
                    self.x += s.dx();
                    self.y = (self.y as i64 + s.dy()) as usize;
                    self.steps.push(s);
                    self.frames.push(0);
                }
                None => {
                    self.frames.pop();
                    match self.steps.pop() {
                        Some(s) => {
                            self.x -= s.dx();
                            self.y = (self.y as i64 - s.dy()) as usize;
                        }
                        None => {
                            self.done = true;
                            return None;
                        }
                    }
                }
            }
        }
    }
}

/// Every path of size `n` (x-length `n` for Motzkin, `2n` for Dyck and
/// Schröder), each exactly once, in a fixed order.
pub fn enumerate_paths(flavor: Flavor, n: usize) -> PathIter {
    PathIter::new(flavor, flavor.length_for(n))
}

/// Product of step weights. Up steps weigh one; Schröder paths are only
/// compatible with [`WeightSystem::Unweighted`].
pub fn path_weight<T: Scalar>(path: &LatticePath, w: &WeightSystem<T>) -> Result<T> {
    let mismatch = || Error::WeightMismatch {
        flavor: path.flavor.name(),
        system: w.kind(),
    };
    let heights = path.heights();
    let weights = path.steps.iter().zip(heights);
    match (path.flavor, w) {
        (Flavor::Motzkin, WeightSystem::Motzkin { horizontal, down }) => {
            Ok(product(weights.map(|(s, h)| match s {
                Step::Horizontal => horizontal.get(h),
                Step::Down => down.get(h),
                _ => T::one(),
            })))
        }
        (Flavor::Dyck, WeightSystem::Dyck { down }) => Ok(product(weights.map(|(s, h)| {
            if *s == Step::Down {
                down.get(h)
            } else {
                T::one()
            }
        }))),
        (_, WeightSystem::Unweighted) => Ok(T::one()),
        _ => Err(mismatch()),
    }
}

/// Sum of `path_weight` over all paths of size `n`, by dynamic programming.
pub fn weighted_sum<T: Scalar>(flavor: Flavor, n: usize, w: &WeightSystem<T>) -> Result<T> {
    let len = flavor.length_for(n);
    match (flavor, w) {
        (Flavor::Motzkin, WeightSystem::Motzkin { .. })
        | (Flavor::Dyck, WeightSystem::Dyck { .. })
        | (_, WeightSystem::Unweighted) => {}
        _ => {
            return Err(Error::WeightMismatch {
                flavor: flavor.name(),
                system: w.kind(),
            })
        }
    }
    let step_weight = |s: Step, h: usize| -> T {
        match (w, s) {
            (WeightSystem::Motzkin { horizontal, .. }, Step::Horizontal) => horizontal.get(h),
            (WeightSystem::Motzkin { down, .. }, Step::Down) => down.get(h),
            (WeightSystem::Dyck { down }, Step::Down) => down.get(h),
            _ => T::one(),
        }
    };
    // table[x][y]: weighted number of prefixes ending at (x, y)
    let mut table: Vec<Vec<T>> = (0..=len).map(|_| vec![T::zero(); len + 1]).collect();
    table[0][0] = T::one();
    for x in 0..len {
        for y in 0..=len - x {
            if table[x][y].is_zero() {
                continue;
            }
            let here = table[x][y].clone();
            for &s in flavor.alphabet() {
                let nx = x + s.dx();
                let ny = y as i64 + s.dy();
                if ny < 0 || nx > len || ny as usize > len - nx {
                    continue;
                }
                let ny = ny as usize;
                let add = here.clone() * step_weight(s, ny);
                table[nx][ny] = table[nx][ny].clone() + add;
            }
        }
    }
    Ok(table[len][0].clone())
}

/// Sum of weights by brute-force enumeration; oracle for [`weighted_sum`].
pub fn enumerated_sum<T: Scalar>(flavor: Flavor, n: usize, w: &WeightSystem<T>) -> Result<T> {
    enumerate_paths(flavor, n).try_fold(T::zero(), |acc, p| Ok(acc + path_weight(&p, w)?))
}

/// Every double horizontal step sits at even height.
pub fn is_sch_even(path: &LatticePath) -> bool {
    path.walk()
        .all(|(s, _, h)| s != Step::DoubleHorizontal || h % 2 == 0)
}

/// Heights of the apexes of all `UD` factors.
pub fn peak_heights(path: &LatticePath) -> Vec<usize> {
    let heights = path.heights();
    path.steps
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Step::Up && w[1] == Step::Down)
        .map(|(i, _)| heights[i])
        .collect()
}

pub fn has_even_peak(path: &LatticePath) -> bool {
    peak_heights(path).iter().any(|h| h % 2 == 0)
}

/// `#SCH_even(n)` by filtering the enumeration of Schröder paths.
pub fn count_sch_even_enumerated(n: usize) -> BigUint {
    let count = enumerate_paths(Flavor::Schroder, n)
        .filter(is_sch_even)
        .count();
    BigUint::from(count)
}

/// `#SCH_even(n)` by dynamic programming over (position, height).
pub fn count_sch_even(n: usize) -> BigUint {
    let len = 2 * n;
    let mut table: Vec<Vec<BigUint>> = (0..=len).map(|_| vec![BigUint::zero(); len + 1]).collect();
    table[0][0] = BigUint::one();
    for x in 0..len {
        for y in 0..=len - x {
            if table[x][y].is_zero() {
                continue;
            }
            let here = table[x][y].clone();
            if y < len - x {
                table[x + 1][y + 1] += &here;
            }
            if y > 0 {
                table[x + 1][y - 1] += &here;
            }
            if y % 2 == 0 && x + 2 <= len && y <= len - x - 2 {
                table[x + 2][y] += &here;
            }
        }
    }
    table[len][0].clone()
}

/// Number of Schröder paths of length `2n` with no peak at even height.
pub fn count_no_even_peaks(n: usize) -> BigUint {
    let count = enumerate_paths(Flavor::Schroder, n)
        .filter(|p| !has_even_peak(p))
        .count();
    BigUint::from(count)
}
