//! Signed permutations: elements of the hyperoctahedral group `B_n`.
//!
//! A signed permutation is a bijection `w` of `{-n..-1, 1..n}` with
//! `w(i) = -w(-i)`. It is stored by the images of the negative indices only,
//! in the order `[w(-n), ..., w(-1)]`; the positive half is always derived.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::pattern::Pattern;

/// An element of `B_n` in negative-half one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    neg_images: Vec<i32>,
}

/// Indices `a_1 < ... < a_k` in `{-n..-1, 1..n}` where a pattern occurs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub indices: Vec<i32>,
}

impl Occurrence {
    /// The mirrored occurrence `-a_k < ... < -a_1`.
    ///
    /// If `self` is an occurrence of `π` in `w`, the reflection is an
    /// occurrence of the reverse complement of `π` in `w`.
    pub fn reflect(&self) -> Occurrence {
        Occurrence {
            indices: self.indices.iter().rev().map(|&i| -i).collect(),
        }
    }

    /// Checks order-isomorphism of `w` restricted to these indices with `pi`.
    pub fn is_occurrence_of(&self, w: &SignedPermutation, pi: &Pattern) -> bool {
        if self.indices.len() != pi.len() || !self.indices.windows(2).all(|p| p[0] < p[1]) {
            return false;
        }
        let Ok(vals) = self
            .indices
            .iter()
            .map(|&i| w.image(i))
            .collect::<Result<Vec<_>>>()
        else {
            return false;
        };
        let p = pi.values();
        (0..p.len()).all(|a| (0..p.len()).all(|b| (vals[a] < vals[b]) == (p[a] < p[b])))
    }
}

impl SignedPermutation {
    /// Builds `w` from `[w(-n), ..., w(-1)]`.
    pub fn new(neg_images: Vec<i32>) -> Result<Self> {
        let n = neg_images.len();
        let mut seen = vec![false; n + 1];
        for &v in &neg_images {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::Domain(format!("image {v} outside ±1..±{n}")));
            }
            if seen[a] {
                return Err(Error::Domain(format!("repeated absolute value {a}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { neg_images })
    }

    pub(crate) fn from_vec_unchecked(neg_images: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(neg_images.clone()).is_ok());
        SignedPermutation { neg_images }
    }

    /// The identity of `B_n`, i.e. `[-n, ..., -1]`.
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            neg_images: (1..=n as i32).rev().map(|v| -v).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.neg_images.len()
    }

    /// `[w(-n), ..., w(-1)]`.
    pub fn neg_images(&self) -> &[i32] {
        &self.neg_images
    }

    /// `w(i)` for `i` in `{-n..-1, 1..n}`.
    pub fn image(&self, i: i32) -> Result<i32> {
        let n = self.n() as i32;
        if i == 0 || i.abs() > n {
            return Err(Error::Domain(format!("index {i} outside ±1..±{n}")));
        }
        Ok(if i < 0 {
            self.neg_images[(n + i) as usize]
        } else {
            -self.neg_images[(n - i) as usize]
        })
    }

    /// Images in index order: `w(-n), ..., w(-1), w(1), ..., w(n)`.
    pub fn full_images(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(2 * self.n());
        fill_full_images(&self.neg_images, &mut out);
        out
    }

    /// The natural embedding into `S_{2n}`, as a sequence with values `1..=2n`.
    pub fn embed(&self) -> Vec<u8> {
        let n = self.n() as i32;
        self.full_images()
            .into_iter()
            .map(|v| {
                if v < 0 {
                    (v + n + 1) as u8
                } else {
                    (v + n) as u8
                }
            })
            .collect()
    }

    pub fn contains(&self, pi: &Pattern) -> bool {
        pi.occurs_in(&self.full_images())
    }

    pub fn avoids(&self, pi: &Pattern) -> bool {
        !self.contains(pi)
    }

    /// A witness occurrence of `pi`, if any.
    pub fn find(&self, pi: &Pattern) -> Option<Occurrence> {
        self.find_where(pi, |_, _| true)
    }

    /// Like [`find`](Self::find) but only uses indices `i` for which
    /// `keep(i, w(i))` holds.
    pub fn find_where(
        &self,
        pi: &Pattern,
        mut keep: impl FnMut(i32, i32) -> bool,
    ) -> Option<Occurrence> {
        let (indices, values): (Vec<i32>, Vec<i32>) =
            self.indexed_images().filter(|&(i, v)| keep(i, v)).unzip();
        pi.find_in(&values).map(|pos| Occurrence {
            indices: pos.into_iter().map(|p| indices[p]).collect(),
        })
    }

    /// `(i, w(i))` pairs in increasing order of `i`.
    pub fn indexed_images(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        let n = self.n() as i32;
        let neg = self
            .neg_images
            .iter()
            .enumerate()
            .map(move |(p, &v)| (p as i32 - n, v));
        let pos = self
            .neg_images
            .iter()
            .rev()
            .enumerate()
            .map(|(p, &v)| (p as i32 + 1, -v));
        neg.chain(pos)
    }

    /// Reverses and complements the embedding and reads the result back.
    ///
    /// Every signed permutation is fixed by this map, since reversal sends
    /// index `i` to `-i` and complementation sends value `v` to `-v`.
    pub fn reverse_complement(&self) -> SignedPermutation {
        let full = self.full_images();
        let n = self.n();
        let rc: Vec<i32> = full.iter().rev().map(|&v| -v).collect();
        SignedPermutation::from_vec_unchecked(rc[..n].to_vec())
    }

    /// Number of `i` in `1..=n` with `w(i) > 0`.
    pub fn j_statistic(&self) -> usize {
        self.neg_images.iter().filter(|&&v| v < 0).count()
    }

    /// Whether `w` lies in `D_n`: an even number of `i > 0` with `w(i) < 0`.
    pub fn is_type_d(&self) -> bool {
        (self.n() - self.j_statistic()).is_multiple_of(2)
    }

    /// Largest image of a negative index, or 0 if all of them are negative.
    pub fn max_negative_index_image(&self) -> i32 {
        self.neg_images.iter().copied().max().unwrap_or(0).max(0)
    }

    /// Inserts a new element at site `-site` with image `gap`.
    ///
    /// The result lies in `B_{n+1}`; its image at index `-site` is `gap`, and
    /// all old images of absolute value at least `gap` move one step away from
    /// zero.
    pub fn insert(&self, site: usize, gap: usize) -> Result<SignedPermutation> {
        let n = self.n();
        if !(1..=n + 1).contains(&site) {
            return Err(Error::Domain(format!("site {site} outside 1..={}", n + 1)));
        }
        if !(1..=n + 1).contains(&gap) {
            return Err(Error::Domain(format!("gap {gap} outside 1..={}", n + 1)));
        }
        let gap = gap as i32;
        let push = |v: i32| {
            if v.abs() < gap {
                v
            } else {
                v + v.signum()
            }
        };
        // position of index -site in the new (n+1)-long vector
        let at = n + 1 - site;
        let mut out = Vec::with_capacity(n + 1);
        out.extend(self.neg_images[..at].iter().map(|&v| push(v)));
        out.push(gap);
        out.extend(self.neg_images[at..].iter().map(|&v| push(v)));
        Ok(SignedPermutation::from_vec_unchecked(out))
    }

    /// Deletes index `-site` (and its antipode) and standardizes.
    ///
    /// Inverse of [`insert`](Self::insert): `w.insert(i, l)?.remove(i)? == w`.
    pub fn remove(&self, site: usize) -> Result<SignedPermutation> {
        let n = self.n();
        if !(1..=n).contains(&site) {
            return Err(Error::Domain(format!("site {site} outside 1..={n}")));
        }
        let at = n - site;
        let gone = self.neg_images[at].abs();
        let out = self
            .neg_images
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != at)
            .map(|(_, &v)| if v.abs() > gone { v - v.signum() } else { v })
            .collect();
        Ok(SignedPermutation::from_vec_unchecked(out))
    }
}

pub(crate) fn fill_full_images(neg_images: &[i32], out: &mut Vec<i32>) {
    out.clear();
    out.extend_from_slice(neg_images);
    out.extend(neg_images.iter().rev().map(|&v| -v));
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (p, v) in self.neg_images.iter().enumerate() {
            if p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| parse_err(t, "expected a bracketed list like [-2,1]"))?;
        if inner.trim().is_empty() {
            return Ok(SignedPermutation::identity(0));
        }
        let tokens: Vec<&str> = inner.split(',').map(str::trim).collect();
        let n = tokens.len() as i32;
        let mut seen = vec![false; tokens.len() + 1];
        let mut values = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let v: i32 = tok
                .parse()
                .map_err(|_| parse_err(tok, "expected a nonzero integer"))?;
            if v == 0 || v.abs() > n {
                return Err(parse_err(tok, format!("entry out of range ±1..±{n}")));
            }
            let a = v.unsigned_abs() as usize;
            if seen[a] {
                return Err(parse_err(tok, "repeated absolute value"));
            }
            seen[a] = true;
            values.push(v);
        }
        Ok(SignedPermutation { neg_images: values })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_format() {
        let w = sp("[-6,4,-3,5,2,1]");
        assert_eq!(w.n(), 6);
        assert_eq!(w.image(-6).unwrap(), -6);
        assert_eq!(w.image(-5).unwrap(), 4);
        assert_eq!(w.image(-1).unwrap(), 1);
        assert_eq!(w.to_string(), "[-6,4,-3,5,2,1]");
        assert_eq!(sp(" [ -6, 4,-3 ,5,2,1 ] ").to_string(), "[-6,4,-3,5,2,1]");
        assert_eq!(sp("[]").n(), 0);
    }

    #[test]
    fn parse_errors_name_the_token() {
        match "[1,1]".parse::<SignedPermutation>() {
            Err(Error::Parse { token, reason }) => {
                assert_eq!(token, "1");
                assert!(reason.contains("repeated"));
            }
            other => panic!("unexpected {other:?}"),
        }
        match "[1,3]".parse::<SignedPermutation>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "3"),
            other => panic!("unexpected {other:?}"),
        }
        assert!("[1,x]".parse::<SignedPermutation>().is_err());
        assert!("1,2".parse::<SignedPermutation>().is_err());
        assert!("[0]".parse::<SignedPermutation>().is_err());
        assert!("[1,]".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn images_and_antisymmetry() {
        let w = sp("[-3,4,2,1]");
        assert_eq!(w.image(-3).unwrap(), 4);
        assert_eq!(w.image(3).unwrap(), -4);
        assert_eq!(w.image(4).unwrap(), 3);
        assert!(w.image(0).is_err());
        assert!(w.image(5).is_err());
        assert_eq!(w.full_images(), vec![-3, 4, 2, 1, -1, -2, -4, 3]);
    }

    #[test]
    fn embedding() {
        // w(-2) = 1, w(-1) = -2
        assert_eq!(sp("[1,-2]").embed(), vec![3, 1, 4, 2]);
        assert_eq!(SignedPermutation::identity(1).embed(), vec![1, 2]);
        assert_eq!(sp("[]").embed(), Vec::<u8>::new());
    }

    #[test]
    fn containment_examples() {
        let w = sp("[1,-2]");
        assert!(w.contains(&"231".parse().unwrap()));
        assert!(!w.contains(&"123".parse().unwrap()));
        let occ = w.find(&"231".parse().unwrap()).unwrap();
        assert!(occ.is_occurrence_of(&w, &"231".parse().unwrap()));
        assert!(!sp("[1]").contains(&Pattern::identity(4)));
        assert!(!sp("[-1]").contains(&"2143".parse().unwrap()));
        assert!(!sp("[-5,6,-4,7,-3,-1,2]").contains(&"2143".parse().unwrap()));
    }

    #[test]
    fn j_statistic_examples() {
        assert_eq!(sp("[-6,4,-3,5,2,1]").j_statistic(), 2);
        assert_eq!(sp("[2,-3,4,-5,1,-6]").j_statistic(), 3);
        assert_eq!(SignedPermutation::identity(5).j_statistic(), 5);
    }

    #[test]
    fn insertion_examples() {
        let e = SignedPermutation::identity(0);
        assert_eq!(e.insert(1, 1).unwrap(), sp("[1]"));
        assert_eq!(sp("[-1]").insert(1, 2).unwrap(), sp("[-1,2]"));
        assert_eq!(sp("[-1]").insert(2, 1).unwrap(), sp("[1,-2]"));
        assert!(sp("[-1]").insert(0, 1).is_err());
        assert!(sp("[-1]").insert(3, 1).is_err());
        assert!(sp("[-1]").insert(1, 3).is_err());
        assert!(sp("[-1]").remove(2).is_err());
    }

    #[test]
    fn reverse_complement_is_involution() {
        let w = sp("[-3,4,2,1]");
        assert_eq!(w.reverse_complement().reverse_complement(), w);
    }

    #[test]
    fn reflection_of_occurrence() {
        let w = sp("[-5,6,-4,7,-3,-1,2]");
        let p: Pattern = "132".parse().unwrap();
        let occ = w.find(&p).unwrap();
        assert!(occ.reflect().is_occurrence_of(&w, &p.reverse_complement()));
    }
}
