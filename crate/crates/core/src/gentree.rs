//! Generating trees for 1234- and 2143-avoiding signed permutations.
//!
//! Two views of the same tree live here. The explicit tree grows a signed
//! permutation by inserting a new largest image into the top-left quadrant
//! and keeping only avoiders. The abstract tree replaces each node by a
//! [`TreeLabel`] `(x, y, z)` and produces children by a succession rule. The
//! statistics are computed from their definitions (trial insertion plus a full
//! avoidance check), so comparing the two trees validates the rules.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::perm::SignedPermutation;

/// The two patterns with succession rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreePattern {
    P1234,
    P2143,
}

impl TreePattern {
    pub const ALL: [TreePattern; 2] = [TreePattern::P1234, TreePattern::P2143];

    pub fn pattern(self) -> Pattern {
        match self {
            TreePattern::P1234 => Pattern::new(vec![1, 2, 3, 4]),
            TreePattern::P2143 => Pattern::new(vec![2, 1, 4, 3]),
        }
        .expect("valid pattern")
    }

    /// Matches a general pattern against the two supported ones.
    pub fn from_pattern(pi: &Pattern) -> Option<TreePattern> {
        match pi.values() {
            [1, 2, 3, 4] => Some(TreePattern::P1234),
            [2, 1, 4, 3] => Some(TreePattern::P2143),
            _ => None,
        }
    }

    /// Root of the explicit tree for `j` positive indices with positive images.
    pub fn root(self, j: usize) -> SignedPermutation {
        match self {
            TreePattern::P2143 => SignedPermutation::identity(j),
            TreePattern::P1234 => {
                SignedPermutation::new((1..=j as i32).map(|v| -v).collect()).expect("valid root")
            }
        }
    }
}

impl fmt::Display for TreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreePattern::P1234 => "1234",
            TreePattern::P2143 => "2143",
        })
    }
}

/// Node label of the abstract generating tree.
///
/// `x` counts sites before the first descent (2143) or ascent (1234), `y`
/// counts active sites in the relevant layer and `z` is the layer number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeLabel {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl TreeLabel {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        TreeLabel { x, y, z }
    }

    /// Label of the root for a given `j`.
    pub fn root(j: usize) -> Self {
        let r = j as u32 + 1;
        TreeLabel::new(r, r, r)
    }

    pub fn validate(self) -> Result<Self> {
        if self.x >= 1 && self.x <= self.y && self.z >= 1 {
            Ok(self)
        } else {
            Err(Error::Domain(format!(
                "label {self} must satisfy 1 <= x <= y and z >= 1"
            )))
        }
    }
}

impl fmt::Display for TreeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

fn require_avoider(w: &SignedPermutation, pi: TreePattern) -> Result<()> {
    if w.contains(&pi.pattern()) {
        Err(Error::Precondition(format!("{w} contains {pi}")))
    } else {
        Ok(())
    }
}

/// Number of sites before the first descent (2143) or first ascent (1234)
/// among the negative indices.
pub fn sites_before_first_turn(w: &SignedPermutation, pi: TreePattern) -> u32 {
    let a = w.neg_images();
    let turn = |p: usize| match pi {
        TreePattern::P2143 => a[p - 1] > a[p],
        TreePattern::P1234 => a[p - 1] < a[p],
    };
    let first = (1..a.len()).find(|&p| turn(p)).unwrap_or(a.len());
    first as u32 + 1
}

/// `1 + #{i > 0 : w(i) > max_{k<0} w(k)}`.
pub fn layer_number(w: &SignedPermutation) -> u32 {
    let max_neg = w.neg_images().iter().copied().max().unwrap_or(i32::MIN);
    // w(i) for i > 0 is -w(-i)
    1 + w.neg_images().iter().filter(|&&v| -v > max_neg).count() as u32
}

/// Sites `i` in `1..=n+1` such that inserting at site `-i` and `gap` avoids `pi`.
pub fn active_sites(w: &SignedPermutation, pi: TreePattern, gap: usize) -> Result<Vec<usize>> {
    let pattern = pi.pattern();
    let mut out = Vec::new();
    for site in 1..=w.n() + 1 {
        if w.insert(site, gap)?.avoids(&pattern) {
            out.push(site);
        }
    }
    Ok(out)
}

/// The gap whose active sites define the `y` statistic.
///
/// For 2143 this is the lowest gap above every negative-index image (the
/// current layer); for 1234 it is the top gap.
pub fn statistic_gap(w: &SignedPermutation, pi: TreePattern) -> usize {
    match pi {
        TreePattern::P2143 => w.max_negative_index_image() as usize + 1,
        TreePattern::P1234 => w.n() + 1,
    }
}

/// The label `(x, y, z)` of a `pi`-avoiding signed permutation.
pub fn stats(w: &SignedPermutation, pi: TreePattern) -> Result<TreeLabel> {
    require_avoider(w, pi)?;
    let x = sites_before_first_turn(w, pi);
    let y = active_sites(w, pi, statistic_gap(w, pi))?.len() as u32;
    let z = layer_number(w);
    Ok(TreeLabel { x, y, z })
}

/// Children of `w` in the explicit tree: insertions of an image larger than
/// every negative-index image that still avoid `pi`.
pub fn children(w: &SignedPermutation, pi: TreePattern) -> Result<Vec<SignedPermutation>> {
    require_avoider(w, pi)?;
    let pattern = pi.pattern();
    let n = w.n();
    let m = w.max_negative_index_image() as usize;
    let mut out = Vec::new();
    for gap in m + 1..=n + 1 {
        for site in 1..=n + 1 {
            let c = w.insert(site, gap)?;
            if c.avoids(&pattern) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// A node of the explicit tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermTreeNode {
    pub label: SignedPermutation,
    pub children: Vec<PermTreeNode>,
}

impl PermTreeNode {
    /// Nodes exactly `depth` steps below this one.
    pub fn level(&self, depth: usize) -> Vec<&SignedPermutation> {
        let mut frontier = vec![self];
        for _ in 0..depth {
            frontier = frontier.iter().flat_map(|n| n.children.iter()).collect();
        }
        frontier.into_iter().map(|n| &n.label).collect()
    }

    /// Preorder traversal with depths.
    pub fn walk(&self, f: &mut impl FnMut(&PermTreeNode, usize)) {
        fn go(node: &PermTreeNode, d: usize, f: &mut impl FnMut(&PermTreeNode, usize)) {
            f(node, d);
            for c in &node.children {
                go(c, d + 1, f);
            }
        }
        go(self, 0, f)
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PermTreeNode::size).sum::<usize>()
    }
}

/// Caps for explicit tree construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeLimits {
    pub max_depth: usize,
    pub max_j: usize,
}

impl Default for TreeLimits {
    fn default() -> Self {
        TreeLimits {
            max_depth: 6,
            max_j: 4,
        }
    }
}

/// Builds the explicit tree to `depth` levels below the root, within the default limits.
pub fn build_tree(pi: TreePattern, j: usize, depth: usize) -> Result<PermTreeNode> {
    build_tree_with_limits(pi, j, depth, TreeLimits::default())
}

pub fn build_tree_with_limits(
    pi: TreePattern,
    j: usize,
    depth: usize,
    limits: TreeLimits,
) -> Result<PermTreeNode> {
    if depth > limits.max_depth || j > limits.max_j {
        return Err(Error::Limit(format!(
            "explicit tree capped at depth {} and j {}, requested depth {depth} and j {j}",
            limits.max_depth, limits.max_j
        )));
    }
    fn grow(w: SignedPermutation, pi: TreePattern, left: usize) -> Result<PermTreeNode> {
        let children = if left == 0 {
            Vec::new()
        } else {
            children(&w, pi)?
                .into_iter()
                .map(|c| grow(c, pi, left - 1))
                .collect::<Result<_>>()?
        };
        Ok(PermTreeNode { label: w, children })
    }
    grow(pi.root(j), pi, depth)
}

/// The chain of labels the recursive succession rule visits, outermost first.
///
/// For 2143 the recursion continues with `(x, x, z-1)`; for 1234 with
/// `(x, y, z-1)`. The chain stops at `z = 1`.
pub fn suc_expansion(label: TreeLabel, pi: TreePattern) -> Result<Vec<TreeLabel>> {
    let TreeLabel { x, y, z } = label.validate()?;
    Ok((1..=z)
        .rev()
        .map(|zz| match pi {
            TreePattern::P2143 if zz < z => TreeLabel::new(x, x, zz),
            _ => TreeLabel::new(x, y, zz),
        })
        .collect())
}

/// Successor labels contributed at one level of the recursion.
fn suc_block(level: TreeLabel, pi: TreePattern, out: &mut Vec<TreeLabel>) {
    let TreeLabel { x, y, z } = level;
    out.extend((2..=x + 1).map(|xx| TreeLabel::new(xx, y + 1, z)));
    let same_layer_tail = match pi {
        TreePattern::P2143 => true,
        TreePattern::P1234 => z == 1,
    };
    if same_layer_tail {
        out.extend((x + 1..=y).map(|yy| TreeLabel::new(x, yy, z)));
    }
}

/// The multiset of successor labels of `label`, in a fixed order.
pub fn suc(label: TreeLabel, pi: TreePattern) -> Result<Vec<TreeLabel>> {
    let mut out = Vec::new();
    for level in suc_expansion(label, pi)? {
        suc_block(level, pi, &mut out);
    }
    Ok(out)
}

/// Anything that maps a label to its successor multiset.
pub trait SuccessionRule {
    fn successors(&self, label: TreeLabel) -> Vec<TreeLabel>;
}

impl SuccessionRule for TreePattern {
    fn successors(&self, label: TreeLabel) -> Vec<TreeLabel> {
        suc(label, *self).expect("labels reached from a root are valid")
    }
}

/// Level state of the label DP: each label with its multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelMultiset {
    counts: HashMap<TreeLabel, BigUint>,
}

impl LabelMultiset {
    pub fn root(j: usize) -> Self {
        let mut counts = HashMap::new();
        counts.insert(TreeLabel::root(j), BigUint::one());
        LabelMultiset { counts }
    }

    pub fn step(&self, rule: &impl SuccessionRule) -> LabelMultiset {
        let mut next: HashMap<TreeLabel, BigUint> = HashMap::new();
        for (&label, mult) in &self.counts {
            for child in rule.successors(label) {
                *next.entry(child).or_insert_with(BigUint::zero) += mult;
            }
        }
        LabelMultiset { counts: next }
    }

    pub fn merge(&mut self, other: LabelMultiset) {
        for (label, mult) in other.counts {
            *self.counts.entry(label).or_insert_with(BigUint::zero) += mult;
        }
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn multiplicity(&self, label: TreeLabel) -> BigUint {
        self.counts.get(&label).cloned().unwrap_or_default()
    }

    pub fn labels(&self) -> impl Iterator<Item = (&TreeLabel, &BigUint)> {
        self.counts.iter()
    }
}

/// `|B_{j+d}^j(π)|` for `d = 0..=max_depth`, from the succession rule alone.
pub fn level_counts(pi: TreePattern, j: usize, max_depth: usize) -> Vec<BigUint> {
    level_counts_with(&pi, j, max_depth)
}

/// [`level_counts`] with an arbitrary rule.
///
/// Labels at depth `d` satisfy `x <= y <= j + 1 + d` and `z <= j + 1`, so the
/// state stays polynomial in `j + d`.
pub fn level_counts_with(rule: &impl SuccessionRule, j: usize, max_depth: usize) -> Vec<BigUint> {
    let mut level = LabelMultiset::root(j);
    let mut out = vec![level.total()];
    for _ in 0..max_depth {
        level = level.step(rule);
        out.push(level.total());
    }
    out
}
