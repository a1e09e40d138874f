//! Ground-truth counts by exhaustive search, and closed-form evaluators.
//!
//! Brute force walks all of `B_n` (or `S_n`) and tests avoidance directly.
//! The work is split by the value of `w(-n)` into `2n` independent blocks
//! that are counted in parallel on the ambient rayon pool and then summed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::enumerate::{enumerate_bn, enumerate_bn_block, first_values};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::perm::fill_full_images;

/// How a count was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Brute,
    Tree,
    Gf,
    Formula,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Tree => "tree",
            Method::Gf => "gf",
            Method::Formula => "formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "tree" => Ok(Method::Tree),
            "gf" => Ok(Method::Gf),
            "formula" => Ok(Method::Formula),
            other => Err(crate::error::parse_err(
                other,
                "expected one of brute, tree, gf, formula",
            )),
        }
    }
}

/// Refined counts `|B_n^j(π)|` keyed by `(n, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub pattern: Pattern,
    pub method: Method,
    entries: BTreeMap<(usize, usize), BigUint>,
}

impl CountTable {
    pub fn new(pattern: Pattern, method: Method) -> Self {
        CountTable {
            pattern,
            method,
            entries: BTreeMap::new(),
        }
    }

    /// Stores the full row `j = 0..=n` for one `n`.
    pub fn insert_row(&mut self, n: usize, row: Vec<BigUint>) -> Result<()> {
        if row.len() != n + 1 {
            return Err(Error::Domain(format!(
                "row for n = {n} must have {} entries, got {}",
                n + 1,
                row.len()
            )));
        }
        for (j, c) in row.into_iter().enumerate() {
            self.entries.insert((n, j), c);
        }
        Ok(())
    }

    pub fn get(&self, n: usize, j: usize) -> Option<&BigUint> {
        self.entries.get(&(n, j))
    }

    pub fn row(&self, n: usize) -> Option<Vec<BigUint>> {
        (0..=n).map(|j| self.get(n, j).cloned()).collect()
    }

    /// `Σ_j entry(n, j)`, if the row is complete.
    pub fn total(&self, n: usize) -> Option<BigUint> {
        self.row(n).map(|r| r.into_iter().sum())
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut ns: Vec<usize> = self.entries.keys().map(|&(n, _)| n).collect();
        ns.dedup();
        ns
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.entries.iter().map(|(&(n, j), c)| (n, j, c))
    }
}

/// Counts avoiders in `B_n` by `j`: entry `j` of the result is `|B_n^j(π)|`.
pub fn j_profile(n: usize, pi: &Pattern) -> Vec<BigUint> {
    let per_block = |block: Option<i32>| -> Vec<u64> {
        let matcher = pi.matcher();
        let mut counts = vec![0u64; n + 1];
        let mut full = Vec::with_capacity(2 * n);
        let it = match block {
            Some(first) => enumerate_bn_block(n, first),
            None => enumerate_bn(n),
        };
        it.for_each_raw(|neg| {
            fill_full_images(neg, &mut full);
            if !matcher.occurs_in(&full) {
                let j = neg.iter().filter(|&&v| v < 0).count();
                counts[j] += 1;
            }
        });
        counts
    };
    let counts = if n == 0 {
        per_block(None)
    } else {
        let blocks: Vec<i32> = first_values(n).collect();
        blocks.into_par_iter().map(|b| per_block(Some(b))).reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
    };
    counts.into_iter().map(BigUint::from).collect()
}

/// `|B_n^j(π)|` by brute force.
pub fn count_bnj(n: usize, j: usize, pi: &Pattern) -> Result<BigUint> {
    if j > n {
        return Err(Error::Domain(format!("j = {j} exceeds n = {n}")));
    }
    Ok(j_profile(n, pi).swap_remove(j))
}

/// `|B_n(π)|` by brute force.
pub fn count_bn(n: usize, pi: &Pattern) -> BigUint {
    j_profile(n, pi).into_iter().sum()
}

/// `|D_n(π)|` by brute force over `D_n` (no use of the `j` refinement).
pub fn count_dn(n: usize, pi: &Pattern) -> BigUint {
    let count_block = |it: crate::enumerate::BnIter| -> u64 {
        let matcher = pi.matcher();
        let mut full = Vec::with_capacity(2 * n);
        let mut c = 0u64;
        it.for_each_raw(|neg| {
            let negatives_on_positive_side = neg.iter().filter(|&&v| v > 0).count();
            if negatives_on_positive_side % 2 == 0 {
                fill_full_images(neg, &mut full);
                if !matcher.occurs_in(&full) {
                    c += 1;
                }
            }
        });
        c
    };
    let total: u64 = if n == 0 {
        count_block(enumerate_bn(0))
    } else {
        first_values(n)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|b| count_block(enumerate_bn_block(n, b)))
            .sum()
    };
    BigUint::from(total)
}

/// Brute-force table of `|B_n^j(π)|` for all `j ≤ n ≤ max_n`.
pub fn brute_table(max_n: usize, pi: &Pattern) -> CountTable {
    let mut t = CountTable::new(pi.clone(), Method::Brute);
    for n in 0..=max_n {
        t.insert_row(n, j_profile(n, pi)).expect("row length n + 1");
    }
    t
}

/// `|S_n(π)|` for classical permutations, by brute force over `S_n`.
pub fn count_classical(n: usize, pi: &Pattern) -> BigUint {
    let matcher = pi.matcher();
    let mut perm: Vec<u8> = (1..=n as u8).collect();
    let mut count = 0u64;
    loop {
        if !matcher.occurs_in(&perm) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    BigUint::from(count)
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The Catalan number `C_j = binom(2j, j) / (j + 1)`.
pub fn catalan(j: u64) -> BigUint {
    binomial(2 * j, j) / (j + 1)
}

/// `Σ_j binom(n, j)^2 C_j`, the number of 1234-avoiding signed permutations.
pub fn egge_formula(n: u64) -> BigUint {
    (0..=n)
        .map(|j| {
            let b = binomial(n, j);
            &b * &b * catalan(j)
        })
        .sum()
}

/// `|S_n(1234)| = Σ_j binom(2j, j) binom(n+1, j+1) binom(n+2, j+1) / ((n+1)^2 (n+2))`.
///
/// Panics if the division leaves a remainder, which would indicate an
/// arithmetic bug.
pub fn classical_1234_formula(n: u64) -> BigUint {
    let sum: BigUint = (0..=n)
        .map(|j| binomial(2 * j, j) * binomial(n + 1, j + 1) * binomial(n + 2, j + 1))
        .sum();
    let den = BigUint::from((n + 1) * (n + 1) * (n + 2));
    let (q, r) = sum.div_rem(&den);
    assert!(r.is_zero(), "inexact division in |S_n(1234)| for n = {n}");
    q
}
