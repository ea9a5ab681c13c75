//! Step-rewriting correspondences between Dyck, Motzkin and Schröder paths.
//!
//! Dyck paths contract to Motzkin paths by reading steps in pairs
//! (`UU -> U`, `UD -> H`, `DU -> H`, `DD -> D`). The map forgets which pair
//! produced an `H`, so it is made invertible by decorating every horizontal
//! step with its origin. Likewise Motzkin paths whose horizontal steps carry
//! one of three choices correspond to Schröder paths with all horizontal
//! steps at even height.

use crate::error::{Error, Result};
use crate::exactnum::Sequence;
use crate::paths::{enumerate_paths, has_even_peak, is_sch_even, Flavor, LatticePath, Step};
use crate::scalar::{product, Scalar};

/// Which Dyck pair a horizontal step came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairLabel {
    FromUD,
    FromDU,
}

/// Where the contracted Dyck steps start.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Floor {
    /// Whole Dyck path, starting at height 0. A `DU` pair cannot occur at
    /// Motzkin height 0.
    Ground,
    /// Interior of a Dyck path with its first and last steps removed,
    /// starting at height 1. `DU` at Motzkin height 0 dips to the axis.
    Lifted,
}

impl Floor {
    fn offset(self) -> isize {
        match self {
            Floor::Ground => 0,
            Floor::Lifted => 1,
        }
    }
}

/// Motzkin path with the origin of every horizontal step recorded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledMotzkinPath {
    path: LatticePath,
    labels: Vec<PairLabel>,
    floor: Floor,
}

/// How a horizontal step is rendered in a Schröder path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HChoice {
    AsUD,
    AsDU,
    AsHH,
}

/// Motzkin path with a rendering choice for every horizontal step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChoiceMotzkinPath {
    path: LatticePath,
    choices: Vec<HChoice>,
}

fn horizontal_heights(path: &LatticePath) -> Vec<(usize, usize)> {
    path.steps()
        .iter()
        .zip(path.heights())
        .enumerate()
        .filter(|(_, (s, _))| **s == Step::Horizontal)
        .map(|(i, (_, h))| (i, h))
        .collect()
}

fn require_flavor(path: &LatticePath, flavor: Flavor) -> Result<()> {
    if path.flavor() != flavor {
        return Err(Error::InvalidPath(format!(
            "expected a {} path, got a {} path",
            flavor.name(),
            path.flavor().name()
        )));
    }
    Ok(())
}

impl LabeledMotzkinPath {
    pub fn new(path: LatticePath, labels: Vec<PairLabel>, floor: Floor) -> Result<Self> {
        require_flavor(&path, Flavor::Motzkin)?;
        let hs = horizontal_heights(&path);
        if hs.len() != labels.len() {
            return Err(Error::InvalidDecoration {
                position: path.steps().len(),
                reason: format!("{} horizontal steps but {} labels", hs.len(), labels.len()),
            });
        }
        if floor == Floor::Ground {
            for (&(i, h), l) in hs.iter().zip(&labels) {
                if h == 0 && *l == PairLabel::FromDU {
                    return Err(Error::InvalidDecoration {
                        position: i,
                        reason: "a DU pair cannot sit at height 0".into(),
                    });
                }
            }
        }
        Ok(LabeledMotzkinPath {
            path,
            labels,
            floor,
        })
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn labels(&self) -> &[PairLabel] {
        &self.labels
    }

    pub fn floor(&self) -> Floor {
        self.floor
    }

    /// Weight of the Dyck path this decorates, computed on the Motzkin side:
    /// `D` at height `i` gives `c_{2i+1+o} c_{2i+o}`, `H` from `UD` gives
    /// `c_{2i+o}`, `H` from `DU` gives `c_{2i-1+o}` with `o` the floor
    /// offset. A lifted path also carries the final `D` step's `c_0`.
    pub fn transported_weight<T: Scalar>(&self, c: &Sequence<T>) -> T {
        let o = self.floor.offset();
        let mut labels = self.labels.iter();
        let body = product(self.path.steps().iter().zip(self.path.heights()).map(|(s, h)| {
            let i = 2 * h as isize + o;
            match s {
                Step::Down => c.get_or_zero(i + 1) * c.get_or_zero(i),
                Step::Horizontal => match labels.next().expect("label count checked") {
                    PairLabel::FromUD => c.get_or_zero(i),
                    PairLabel::FromDU => c.get_or_zero(i - 1),
                },
                _ => T::one(),
            }
        }));
        match self.floor {
            Floor::Ground => body,
            Floor::Lifted => body * c.get(0),
        }
    }
}

impl ChoiceMotzkinPath {
    pub fn new(path: LatticePath, choices: Vec<HChoice>) -> Result<Self> {
        require_flavor(&path, Flavor::Motzkin)?;
        let hs = horizontal_heights(&path);
        if hs.len() != choices.len() {
            return Err(Error::InvalidDecoration {
                position: path.steps().len(),
                reason: format!("{} horizontal steps but {} choices", hs.len(), choices.len()),
            });
        }
        for (&(i, h), c) in hs.iter().zip(&choices) {
            if h == 0 && *c == HChoice::AsDU {
                return Err(Error::InvalidDecoration {
                    position: i,
                    reason: "DU at height 0 would go below the axis".into(),
                });
            }
        }
        Ok(ChoiceMotzkinPath { path, choices })
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn choices(&self) -> &[HChoice] {
        &self.choices
    }
}

fn pair(a: Step, b: Step) -> Step {
    match (a, b) {
        (Step::Up, Step::Up) => Step::Up,
        (Step::Down, Step::Down) => Step::Down,
        _ => Step::Horizontal,
    }
}

fn contract_steps(steps: &[Step], floor: Floor) -> Result<LabeledMotzkinPath> {
    let mut out = Vec::with_capacity(steps.len() / 2);
    let mut labels = Vec::new();
    for w in steps.chunks_exact(2) {
        let s = pair(w[0], w[1]);
        if s == Step::Horizontal {
            labels.push(if w[0] == Step::Up {
                PairLabel::FromUD
            } else {
                PairLabel::FromDU
            });
        }
        out.push(s);
    }
    let path = LatticePath::new(Flavor::Motzkin, out)?;
    LabeledMotzkinPath::new(path, labels, floor)
}

fn expand_steps(m: &LabeledMotzkinPath) -> Vec<Step> {
    let mut labels = m.labels.iter();
    let mut out = Vec::with_capacity(2 * m.path.steps().len());
    for s in m.path.steps() {
        let [a, b] = match s {
            Step::Up => [Step::Up, Step::Up],
            Step::Down => [Step::Down, Step::Down],
            _ => match labels.next().expect("label count checked") {
                PairLabel::FromUD => [Step::Up, Step::Down],
                PairLabel::FromDU => [Step::Down, Step::Up],
            },
        };
        out.push(a);
        out.push(b);
    }
    out
}

/// Reads a Dyck path of length `2n` in pairs, giving a decorated Motzkin
/// path of length `n`.
pub fn contract_dyck(p: &LatticePath) -> Result<LabeledMotzkinPath> {
    require_flavor(p, Flavor::Dyck)?;
    contract_steps(p.steps(), Floor::Ground)
}

/// Inverse of [`contract_dyck`].
pub fn expand_motzkin(m: &LabeledMotzkinPath) -> Result<LatticePath> {
    if m.floor != Floor::Ground {
        return Err(Error::InvalidDecoration {
            position: 0,
            reason: "lifted decoration; use strip_expand".into(),
        });
    }
    LatticePath::new(Flavor::Dyck, expand_steps(m))
}

/// Drops the first and last steps of a nonempty Dyck path and contracts
/// the rest, measured from height 1.
pub fn strip_contract(p: &LatticePath) -> Result<LabeledMotzkinPath> {
    require_flavor(p, Flavor::Dyck)?;
    let steps = p.steps();
    if steps.is_empty() {
        return Err(Error::OutsideDomain {
            position: 0,
            reason: "the empty Dyck path has no first and last step".into(),
        });
    }
    contract_steps(&steps[1..steps.len() - 1], Floor::Lifted)
}

/// Inverse of [`strip_contract`].
pub fn strip_expand(m: &LabeledMotzkinPath) -> Result<LatticePath> {
    if m.floor != Floor::Lifted {
        return Err(Error::InvalidDecoration {
            position: 0,
            reason: "ground decoration; use expand_motzkin".into(),
        });
    }
    let mut steps = vec![Step::Up];
    steps.extend(expand_steps(m));
    steps.push(Step::Down);
    LatticePath::new(Flavor::Dyck, steps)
}

/// `U -> UU`, `D -> DD`, and each `H` to `UD`, `DU` or `H2` per its choice.
pub fn to_schroder(c: &ChoiceMotzkinPath) -> Result<LatticePath> {
    let mut choices = c.choices.iter();
    let mut out = Vec::with_capacity(2 * c.path.steps().len());
    for s in c.path.steps() {
        match s {
            Step::Up => out.extend([Step::Up, Step::Up]),
            Step::Down => out.extend([Step::Down, Step::Down]),
            _ => match choices.next().expect("choice count checked") {
                HChoice::AsUD => out.extend([Step::Up, Step::Down]),
                HChoice::AsDU => out.extend([Step::Down, Step::Up]),
                HChoice::AsHH => out.push(Step::DoubleHorizontal),
            },
        }
    }
    LatticePath::new(Flavor::Schroder, out)
}

/// Inverse of [`to_schroder`]: reads the path in windows `[2j, 2j + 2)`.
pub fn from_schroder(s: &LatticePath) -> Result<ChoiceMotzkinPath> {
    require_flavor(s, Flavor::Schroder)?;
    if let Some((_, x, h)) = s
        .walk()
        .find(|(st, _, h)| *st == Step::DoubleHorizontal && h % 2 == 1)
    {
        return Err(Error::OutsideDomain {
            position: x,
            reason: format!("horizontal step at odd height {h}"),
        });
    }
    let steps = s.steps();
    let mut out = Vec::new();
    let mut choices = Vec::new();
    let (mut i, mut x) = (0, 0);
    while i < steps.len() {
        if steps[i] == Step::DoubleHorizontal {
            out.push(Step::Horizontal);
            choices.push(HChoice::AsHH);
            i += 1;
        } else {
            let second = steps[i + 1];
            if second == Step::DoubleHorizontal {
                return Err(Error::OutsideDomain {
                    position: x + 1,
                    reason: "horizontal step straddles a window boundary".into(),
                });
            }
            let m = pair(steps[i], second);
            if m == Step::Horizontal {
                choices.push(if steps[i] == Step::Up {
                    HChoice::AsUD
                } else {
                    HChoice::AsDU
                });
            }
            out.push(m);
            i += 2;
        }
        x += 2;
    }
    ChoiceMotzkinPath::new(LatticePath::new(Flavor::Motzkin, out)?, choices)
}

/// Replaces every double horizontal step at odd height by a peak `UD`.
/// Needs a Schröder path without peaks at even height.
pub fn odd_h_to_peaks(s: &LatticePath) -> Result<LatticePath> {
    require_flavor(s, Flavor::Schroder)?;
    if has_even_peak(s) {
        return Err(Error::OutsideDomain {
            position: 0,
            reason: "path has a peak at even height".into(),
        });
    }
    let mut out = Vec::with_capacity(s.steps().len() + 4);
    for (step, _, h) in s.walk() {
        if step == Step::DoubleHorizontal && h % 2 == 1 {
            out.extend([Step::Up, Step::Down]);
        } else {
            out.push(step);
        }
    }
    LatticePath::new(Flavor::Schroder, out)
}

/// Inverse of [`odd_h_to_peaks`]: every peak with even apex becomes a double
/// horizontal step one level below.
pub fn peaks_to_odd_h(s: &LatticePath) -> Result<LatticePath> {
    require_flavor(s, Flavor::Schroder)?;
    if !is_sch_even(s) {
        return Err(Error::OutsideDomain {
            position: 0,
            reason: "path has a horizontal step at odd height".into(),
        });
    }
    let steps = s.steps();
    let heights = s.heights();
    let mut out = Vec::with_capacity(steps.len());
    let mut i = 0;
    while i < steps.len() {
        let is_even_peak = steps[i] == Step::Up
            && steps.get(i + 1) == Some(&Step::Down)
            && heights[i] % 2 == 0;
        if is_even_peak {
            out.push(Step::DoubleHorizontal);
            i += 2;
        } else {
            out.push(steps[i]);
            i += 1;
        }
    }
    LatticePath::new(Flavor::Schroder, out)
}

fn decorations<D: Copy>(path: &LatticePath, options: impl Fn(usize) -> Vec<D>) -> Vec<Vec<D>> {
    let mut acc: Vec<Vec<D>> = vec![Vec::new()];
    for (_, h) in horizontal_heights(path) {
        let opts = options(h);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&o| {
                    let mut v = prefix.clone();
                    v.push(o);
                    v
                })
            })
            .collect();
    }
    acc
}

/// All decorated Motzkin paths of length `n` for the given floor.
pub fn labeled_motzkin_paths(n: usize, floor: Floor) -> Vec<LabeledMotzkinPath> {
    enumerate_paths(Flavor::Motzkin, n)
        .flat_map(|p| {
            decorations(&p, |h| {
                if h == 0 && floor == Floor::Ground {
                    vec![PairLabel::FromUD]
                } else {
                    vec![PairLabel::FromUD, PairLabel::FromDU]
                }
            })
            .into_iter()
            .map(move |labels| LabeledMotzkinPath {
                path: p.clone(),
                labels,
                floor,
            })
        })
        .collect()
}

/// All choice-decorated Motzkin paths of length `n`.
pub fn choice_motzkin_paths(n: usize) -> Vec<ChoiceMotzkinPath> {
    enumerate_paths(Flavor::Motzkin, n)
        .flat_map(|p| {
            decorations(&p, |h| {
                if h == 0 {
                    vec![HChoice::AsUD, HChoice::AsHH]
                } else {
                    vec![HChoice::AsUD, HChoice::AsDU, HChoice::AsHH]
                }
            })
            .into_iter()
            .map(move |choices| ChoiceMotzkinPath {
                path: p.clone(),
                choices,
            })
        })
        .collect()
}
