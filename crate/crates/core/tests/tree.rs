use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use sigperm_core::enumerate::enumerate_bn;
use sigperm_core::gentree::{
    active_sites, build_tree, build_tree_with_limits, children, level_counts, level_counts_with,
    statistic_gap, stats, suc, suc_expansion, LabelMultiset, SuccessionRule, TreeLimits,
};
use sigperm_core::{Error, SignedPermutation, TreeLabel, TreePattern};

fn avoiders(pi: TreePattern, n: usize, j: usize) -> BTreeSet<SignedPermutation> {
    let p = pi.pattern();
    enumerate_bn(n)
        .filter(|w| w.j_statistic() == j && w.avoids(&p))
        .collect()
}

#[test]
fn every_node_appears_once() {
    for pi in TreePattern::ALL {
        for j in 0..=3 {
            let tree = build_tree(pi, j, 4).unwrap();
            let mut seen = HashSet::new();
            tree.walk(&mut |node, _| {
                assert!(seen.insert(node.label.clone()), "{} repeated", node.label);
            });
            assert_eq!(seen.len(), tree.size());
        }
    }
}

#[test]
fn levels_are_exactly_the_avoiders() {
    let limits = TreeLimits {
        max_depth: 5,
        max_j: 5,
    };
    for pi in TreePattern::ALL {
        for j in 0..=5 {
            let tree = build_tree_with_limits(pi, j, 5 - j, limits).unwrap();
            for d in 0..=5 - j {
                let level: BTreeSet<SignedPermutation> =
                    tree.level(d).into_iter().cloned().collect();
                assert_eq!(level, avoiders(pi, j + d, j), "{pi} j={j} depth={d}");
            }
        }
    }
}

#[test]
fn children_are_tree_insertions() {
    for pi in TreePattern::ALL {
        for j in 0..=2 {
            let tree = build_tree(pi, j, 3).unwrap();
            tree.walk(&mut |node, _| {
                let w = &node.label;
                let m = w.max_negative_index_image() as usize;
                for c in &node.children {
                    let top = c.label.max_negative_index_image() as usize;
                    assert!(top > m);
                    let at = c.label.neg_images().iter().position(|&v| v as usize == top);
                    let site = c.label.n() - at.unwrap();
                    assert_eq!(&c.label.remove(site).unwrap(), w);
                    assert_eq!(c.label.j_statistic(), j);
                }
            });
        }
    }
}

#[test]
fn tree_limits_are_enforced() {
    assert!(matches!(
        build_tree(TreePattern::P2143, 0, 7),
        Err(Error::Limit(_))
    ));
    assert!(matches!(
        build_tree(TreePattern::P1234, 5, 1),
        Err(Error::Limit(_))
    ));
}

#[test]
fn stats_require_an_avoider() {
    let w: SignedPermutation = "[-4,-3,-2,-1]".parse().unwrap();
    assert!(matches!(
        stats(&w, TreePattern::P1234),
        Err(Error::Precondition(_))
    ));
    assert!(children(&w, TreePattern::P1234).is_err());
}

/// Maps a site of `insert(w, i, ℓ)` back to a site of `w`, with the inserted
/// site counted on both sides of the split.
fn pull_back(site: usize, i: usize) -> usize {
    if site <= i {
        site
    } else {
        site - 1
    }
}

#[test]
fn active_sites_shrink_along_tree_edges() {
    for pi in TreePattern::ALL {
        let p = pi.pattern();
        for n in 0..=4 {
            for w in enumerate_bn(n).filter(|w| w.avoids(&p)) {
                let m = w.max_negative_index_image() as usize;
                for gap in m + 1..=n + 1 {
                    let before: BTreeSet<usize> =
                        active_sites(&w, pi, gap).unwrap().into_iter().collect();
                    for &i in &before {
                        let c = w.insert(i, gap).unwrap();
                        for s in active_sites(&c, pi, gap + 1).unwrap() {
                            assert!(
                                before.contains(&pull_back(s, i)),
                                "{pi} {w} -> {c}: site {s} not among {before:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn y_counts_sites_at_the_statistic_gap() {
    for pi in TreePattern::ALL {
        for w in avoiders(pi, 4, 2) {
            let label = stats(&w, pi).unwrap();
            let sites = active_sites(&w, pi, statistic_gap(&w, pi)).unwrap();
            assert_eq!(label.y as usize, sites.len());
            assert!(label.x <= label.y, "{w} {label}");
        }
    }
}

#[test]
fn non_root_labels_have_x_at_least_two() {
    for pi in TreePattern::ALL {
        for j in 0..=3 {
            let tree = build_tree(pi, j, 3).unwrap();
            tree.walk(&mut |node, depth| {
                if depth > 0 {
                    assert!(stats(&node.label, pi).unwrap().x >= 2);
                }
            });
        }
    }
}

/// The succession rule written as a direct recursion on `z`.
fn suc_recursive(label: TreeLabel, pi: TreePattern) -> Vec<TreeLabel> {
    let TreeLabel { x, y, z } = label;
    let mut out: Vec<TreeLabel> = (2..=x + 1).map(|a| TreeLabel::new(a, y + 1, z)).collect();
    match pi {
        TreePattern::P2143 => {
            out.extend((x + 1..=y).map(|b| TreeLabel::new(x, b, z)));
            if z > 1 {
                out.extend(suc_recursive(TreeLabel::new(x, x, z - 1), pi));
            }
        }
        TreePattern::P1234 => {
            if z > 1 {
                out.extend(suc_recursive(TreeLabel::new(x, y, z - 1), pi));
            } else {
                out.extend((x + 1..=y).map(|b| TreeLabel::new(x, b, z)));
            }
        }
    }
    out
}

#[test]
fn iterative_rule_matches_recursive_form() {
    for pi in TreePattern::ALL {
        for x in 1..=5 {
            for y in x..=7 {
                for z in 1..=5 {
                    let l = TreeLabel::new(x, y, z);
                    assert_eq!(suc(l, pi).unwrap(), suc_recursive(l, pi), "{pi} {l}");
                }
            }
        }
    }
}

#[test]
fn expansion_traces() {
    for x in 1..=4 {
        for y in x..=6 {
            for z in 1..=4 {
                let l = TreeLabel::new(x, y, z);
                let a = suc_expansion(l, TreePattern::P2143).unwrap();
                let b = suc_expansion(l, TreePattern::P1234).unwrap();
                assert_eq!(a[0], l);
                assert_eq!(b[0], l);
                for (k, zz) in (1..z).rev().enumerate() {
                    assert_eq!(a[k + 1], TreeLabel::new(x, x, zz));
                    assert_eq!(b[k + 1], TreeLabel::new(x, y, zz));
                }
            }
        }
    }
}

#[test]
fn dp_matches_brute_force() {
    for pi in TreePattern::ALL {
        for j in 0..=6 {
            let dp = level_counts(pi, j, 6 - j);
            assert_eq!(dp[0], BigUint::from(1u32));
            for (d, c) in dp.iter().enumerate() {
                let brute = avoiders(pi, j + d, j).len();
                assert_eq!(*c, BigUint::from(brute), "{pi} j={j} depth={d}");
            }
        }
    }
}

#[test]
fn dp_mass_matches_label_multiset() {
    for pi in TreePattern::ALL {
        let mut level = LabelMultiset::root(2);
        for d in 0..5 {
            assert_eq!(level.total(), level_counts(pi, 2, d).pop().unwrap());
            level = level.step(&pi);
        }
        for (label, mult) in level.labels() {
            assert!(*mult > BigUint::from(0u32));
            assert!(label.z <= 3 && label.x <= label.y);
        }
    }
}

struct Flipped;

impl SuccessionRule for Flipped {
    fn successors(&self, label: TreeLabel) -> Vec<TreeLabel> {
        let mut out = TreePattern::P2143.successors(label);
        if label == TreeLabel::new(2, 3, 1) {
            out[0] = TreeLabel::new(2, 2, 1);
        }
        out
    }
}

#[test]
fn a_single_wrong_label_changes_the_counts() {
    let good = level_counts(TreePattern::P2143, 0, 6);
    let bad = level_counts_with(&Flipped, 0, 6);
    assert_ne!(good, bad);
}
