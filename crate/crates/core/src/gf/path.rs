//! Lattice paths through the label space of a succession rule.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::gentree::{suc, TreeLabel, TreePattern};

use super::signature::Signature;

/// Whether the step `from -> to` is recorded in the signature.
///
/// Errors if `to` is not a successor of `from` under the rule for `pi`.
pub fn recorded(from: TreeLabel, to: TreeLabel, pi: TreePattern) -> Result<bool> {
    if !suc(from, pi)?.contains(&to) {
        return Err(Error::Domain(format!(
            "{from} -> {to} is not a succession step for {pi}"
        )));
    }
    Ok(is_recorded(from, to, pi))
}

fn is_recorded(from: TreeLabel, to: TreeLabel, pi: TreePattern) -> bool {
    match pi {
        TreePattern::P2143 => (from.z == to.z && to.y == from.y + 1) || from.z > to.z,
        TreePattern::P1234 => to.y == from.y + 1,
    }
}

/// A validated path with per-edge recorded flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    pattern: TreePattern,
    points: Vec<TreeLabel>,
    recorded: Vec<bool>,
}

impl LatticePath {
    /// Validates every step against the succession rule of `pi`.
    pub fn new(points: Vec<TreeLabel>, pi: TreePattern) -> Result<Self> {
        let Some(&start) = points.first() else {
            return Err(Error::Domain("a path has at least one point".into()));
        };
        start.validate()?;
        let recorded = points
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                recorded(w[0], w[1], pi).map_err(|e| Error::Domain(format!("edge {}: {e}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath {
            pattern: pi,
            points,
            recorded,
        })
    }

    pub fn pattern(&self) -> TreePattern {
        self.pattern
    }

    pub fn points(&self) -> &[TreeLabel] {
        &self.points
    }

    pub fn recorded_flags(&self) -> &[bool] {
        &self.recorded
    }

    /// Number of points, `ℓ(P)`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn signature(&self) -> Signature {
        signature_of(self)
    }

    /// Exponent of `t` this path contributes: `ℓ(P) - |sig(P)|`.
    pub fn weight(&self) -> usize {
        self.len() - self.signature().len()
    }
}

/// The starting x-coordinate followed by the x-coordinate at the end of each
/// recorded edge.
pub fn signature_of(path: &LatticePath) -> Signature {
    let mut entries = vec![path.points[0].x];
    entries.extend(
        path.points[1..]
            .iter()
            .zip(&path.recorded)
            .filter(|(_, &r)| r)
            .map(|(p, _)| p.x),
    );
    Signature::from_vec_unchecked(entries)
}

type Steps = Rc<[(TreeLabel, bool)]>;

/// Depth-first walker over all paths from a start, caching successor lists.
struct Walker {
    pi: TreePattern,
    cache: HashMap<TreeLabel, Steps>,
}

impl Walker {
    fn new(pi: TreePattern) -> Self {
        Walker {
            pi,
            cache: HashMap::new(),
        }
    }

    fn steps(&mut self, from: TreeLabel) -> Steps {
        let pi = self.pi;
        self.cache
            .entry(from)
            .or_insert_with(|| {
                suc(from, pi)
                    .expect("labels on a path are valid")
                    .into_iter()
                    .map(|to| (to, is_recorded(from, to, pi)))
                    .collect()
            })
            .clone()
    }
}

/// Calls `f(points, flags)` for every path from `start` with at most
/// `max_points` points, including the one-point path.
pub fn for_each_path(
    pi: TreePattern,
    start: TreeLabel,
    max_points: usize,
    mut f: impl FnMut(&[TreeLabel], &[bool]),
) -> Result<()> {
    start.validate()?;
    if max_points == 0 {
        return Ok(());
    }
    fn go(
        walker: &mut Walker,
        points: &mut Vec<TreeLabel>,
        flags: &mut Vec<bool>,
        max_points: usize,
        f: &mut impl FnMut(&[TreeLabel], &[bool]),
    ) {
        f(points, flags);
        if points.len() == max_points {
            return;
        }
        let last = *points.last().expect("nonempty");
        for &(to, rec) in walker.steps(last).iter() {
            points.push(to);
            flags.push(rec);
            go(walker, points, flags, max_points, f);
            points.pop();
            flags.pop();
        }
    }
    let mut walker = Walker::new(pi);
    go(
        &mut walker,
        &mut vec![start],
        &mut Vec::new(),
        max_points,
        &mut f,
    );
    Ok(())
}

/// Every path from `start` with at most `max_points` points.
pub fn enumerate_paths(
    pi: TreePattern,
    start: TreeLabel,
    max_points: usize,
) -> Result<Vec<LatticePath>> {
    let mut out = Vec::new();
    for_each_path(pi, start, max_points, |pts, flags| {
        out.push(LatticePath {
            pattern: pi,
            points: pts.to_vec(),
            recorded: flags.to_vec(),
        })
    })?;
    Ok(out)
}

/// Path counts from `start` grouped by signature: entry `d` of the vector for
/// `γ` counts paths with that signature and `ℓ(P) - |γ| = d`.
///
/// Only paths with at most `max_points` points are seen, so entry `d` for `γ`
/// is complete when `d + |γ| <= max_points`.
pub fn path_counts(
    pi: TreePattern,
    start: TreeLabel,
    max_points: usize,
) -> Result<BTreeMap<Signature, Vec<u64>>> {
    start.validate()?;
    // signatures are interned as (parent id, appended x) -> id
    struct State {
        walker: Walker,
        intern: HashMap<(usize, u32), usize>,
        sigs: Vec<(Vec<u32>, Vec<u64>)>,
        max_points: usize,
    }
    fn go(st: &mut State, last: TreeLabel, points: usize, sig: usize) {
        let d = points - st.sigs[sig].0.len();
        let counts = &mut st.sigs[sig].1;
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
        if points == st.max_points {
            return;
        }
        for &(to, rec) in st.walker.steps(last).iter() {
            let next_sig = if rec {
                let key = (sig, to.x);
                match st.intern.get(&key) {
                    Some(&id) => id,
                    None => {
                        let mut v = st.sigs[sig].0.clone();
                        v.push(to.x);
                        st.sigs.push((v, Vec::new()));
                        let id = st.sigs.len() - 1;
                        st.intern.insert(key, id);
                        id
                    }
                }
            } else {
                sig
            };
            go(st, to, points + 1, next_sig);
        }
    }
    let mut st = State {
        walker: Walker::new(pi),
        intern: HashMap::new(),
        sigs: vec![(vec![start.x], Vec::new())],
        max_points,
    };
    if max_points > 0 {
        go(&mut st, start, 1, 0);
    }
    Ok(st
        .sigs
        .into_iter()
        .filter(|(_, c)| !c.is_empty())
        .map(|(g, c)| (Signature::from_vec_unchecked(g), c))
        .collect())
}
