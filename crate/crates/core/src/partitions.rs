//! Set partitions of `[n]` as restricted-growth strings, their arcs, and
//! the k-distant noncrossing condition.

use std::fmt;

use crate::error::{Error, Result};

/// Default largest `n` for brute-force partition counts (`Bell(13)` ~ 2.7e7).
pub const DEFAULT_MAX_PARTITION_N: usize = 13;

/// Partition of `{1, ..., n}` stored as a restricted-growth string: entry
/// `i` is the block index of element `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<usize>,
}

/// `(left, right)` with `left < right` adjacent in the same block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl SetPartition {
    pub fn from_rgs(rgs: Vec<usize>) -> Result<Self> {
        let mut max: Option<usize> = None;
        for (i, &a) in rgs.iter().enumerate() {
            let limit = max.map_or(0, |m| m + 1);
            if a > limit {
                return Err(Error::InvalidPath(format!(
                    "not a restricted-growth string: entry {i} is {a}, limit {limit}"
                )));
            }
            max = Some(max.map_or(a, |m| m.max(a)));
        }
        Ok(SetPartition { rgs })
    }

    /// Builds from 1-based blocks covering `{1, ..., n}` exactly once.
    pub fn from_blocks(n: usize, blocks: &[&[usize]]) -> Result<Self> {
        let mut owner = vec![None; n];
        for (b, block) in blocks.iter().enumerate() {
            for &e in *block {
                if e == 0 || e > n || owner[e - 1].is_some() {
                    return Err(Error::InvalidPath(format!("bad block element {e}")));
                }
                owner[e - 1] = Some(b);
            }
        }
        // relabel blocks by first occurrence
        let mut relabel = vec![None; blocks.len()];
        let mut next = 0;
        let mut rgs = Vec::with_capacity(n);
        for (i, o) in owner.into_iter().enumerate() {
            let b = o.ok_or_else(|| Error::InvalidPath(format!("element {} uncovered", i + 1)))?;
            let label = *relabel[b].get_or_insert_with(|| {
                next += 1;
                next - 1
            });
            rgs.push(label);
        }
        Ok(SetPartition { rgs })
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks as sorted 1-based element lists, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        blocks
    }

    pub fn arcs(&self) -> Vec<Arc> {
        let mut out = Vec::new();
        push_arcs(&self.rgs, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let items: Vec<String> = block.iter().map(|e| e.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        write!(f, "}}")
    }
}

fn push_arcs(rgs: &[usize], last: &mut Vec<usize>, out: &mut Vec<Arc>) {
    last.clear();
    for (i, &b) in rgs.iter().enumerate() {
        if b >= last.len() {
            last.resize(b + 1, 0);
        }
        if last[b] != 0 {
            out.push(Arc {
                left: last[b],
                right: i + 1,
            });
        }
        last[b] = i + 1;
    }
}

/// Whether the arcs `(a, c)` and `(b, d)` form the pattern `a < b <= c < d`.
fn crossing_gap(x: &Arc, y: &Arc) -> Option<usize> {
    let (first, second) = if x.left < y.left { (x, y) } else { (y, x) };
    let (a, c) = (first.left, first.right);
    let (b, d) = (second.left, second.right);
    (a < b && b <= c && c < d).then(|| c - b)
}

/// No arc pair `(a,c), (b,d)` with `a < b <= c < d` and `c - b >= k`.
pub fn is_k_distant_noncrossing(p: &SetPartition, k: usize) -> bool {
    let arcs = p.arcs();
    for (i, x) in arcs.iter().enumerate() {
        for y in &arcs[i + 1..] {
            if crossing_gap(x, y).is_some_and(|gap| gap >= k) {
                return false;
            }
        }
    }
    true
}

/// Largest `c - b` over arc pairs `a < b <= c < d`, or `None` if there are
/// none. The partition is k-distant noncrossing exactly when this is `< k`.
fn widest_crossing(arcs: &[Arc]) -> Option<usize> {
    let mut best = None;
    for (i, x) in arcs.iter().enumerate() {
        for y in &arcs[i + 1..] {
            if let Some(g) = crossing_gap(x, y) {
                best = Some(best.map_or(g, |b: usize| b.max(g)));
            }
        }
    }
    best
}

/// Lexicographic generator of restricted-growth strings of length `n`.
pub struct PartitionIter {
    rgs: Vec<usize>,
    // prefix maxima: max[i] = max(rgs[0..=i])
    max: Vec<usize>,
    fresh: bool,
}

impl PartitionIter {
    fn new(n: usize) -> Self {
        PartitionIter {
            rgs: vec![0; n],
            max: vec![0; n],
            fresh: true,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.max[i - 1] {
                self.rgs[i] += 1;
                self.max[i] = self.max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max[j] = self.max[i];
                }
                return true;
            }
        }
        false
    }

    /// Current string without cloning; call after `step` returned `true`.
    fn step(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            return true;
        }
        self.advance()
    }
}

impl Iterator for PartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        self.step().then(|| SetPartition {
            rgs: self.rgs.clone(),
        })
    }
}

/// Every partition of `[n]` once, in lexicographic restricted-growth order.
pub fn enumerate_partitions(n: usize) -> PartitionIter {
    PartitionIter::new(n)
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::LimitExceeded {
            what: "partition size n",
            requested: n,
            bound,
        });
    }
    Ok(())
}

/// `#NC_k(n)` by brute force with the default size bound.
pub fn count_nc(k: usize, n: usize) -> Result<u64> {
    count_nc_bounded(k, n, DEFAULT_MAX_PARTITION_N)
}

pub fn count_nc_bounded(k: usize, n: usize, bound: usize) -> Result<u64> {
    check_bound(n, bound)?;
    let mut it = PartitionIter::new(n);
    let (mut last, mut arcs) = (Vec::new(), Vec::new());
    let mut count = 0;
    while it.step() {
        arcs.clear();
        push_arcs(&it.rgs, &mut last, &mut arcs);
        if widest_crossing(&arcs).is_none_or(|g| g < k) {
            count += 1;
        }
    }
    Ok(count)
}

/// `#NC_k(n)` for `k = 0, ..., n` in a single pass. For `k >= n` the count
/// is `Bell(n)`.
pub fn nc_profile(n: usize, bound: usize) -> Result<Vec<u64>> {
    check_bound(n, bound)?;
    let mut hist = vec![0u64; n + 2];
    let mut it = PartitionIter::new(n);
    let (mut last, mut arcs) = (Vec::new(), Vec::new());
    while it.step() {
        arcs.clear();
        push_arcs(&it.rgs, &mut last, &mut arcs);
        // smallest k for which this partition is k-distant noncrossing
        let k_min = widest_crossing(&arcs).map_or(0, |g| g + 1);
        hist[k_min] += 1;
    }
    let mut acc = 0;
    Ok(hist[..=n]
        .iter()
        .map(|h| {
            acc += h;
            acc
        })
        .collect())
}
