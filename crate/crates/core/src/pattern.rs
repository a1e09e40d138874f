//! Classical permutation patterns and containment in arbitrary sequences.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

/// Longest supported pattern; keeps the digit-string notation unambiguous.
pub const MAX_PATTERN_LEN: usize = 9;

/// A classical permutation of `1..=k` used as a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    values: Vec<u8>,
}

impl Pattern {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        let k = values.len();
        if k == 0 || k > MAX_PATTERN_LEN {
            return Err(Error::Domain(format!(
                "pattern length must be in 1..={MAX_PATTERN_LEN}, got {k}"
            )));
        }
        let mut seen = [false; MAX_PATTERN_LEN + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > k || seen[v] {
                return Err(Error::Domain(format!(
                    "pattern values must be a permutation of 1..={k}"
                )));
            }
            seen[v] = true;
        }
        Ok(Pattern { values })
    }

    /// The identity pattern `12…k`.
    pub fn identity(k: usize) -> Self {
        Pattern::new((1..=k as u8).collect()).expect("identity is a permutation")
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Reverse complement: `k + 1 - π(k + 1 - i)`.
    pub fn reverse_complement(&self) -> Pattern {
        let k = self.values.len() as u8;
        Pattern {
            values: self.values.iter().rev().map(|&v| k + 1 - v).collect(),
        }
    }

    /// Searches `seq` for an occurrence of this pattern.
    ///
    /// `seq` must consist of pairwise distinct values. Returns the positions of
    /// the first occurrence found in lexicographic order of position tuples.
    pub fn find_in<T: Ord>(&self, seq: &[T]) -> Option<Vec<usize>> {
        Matcher::new(self).find(seq)
    }

    pub fn occurs_in<T: Ord>(&self, seq: &[T]) -> bool {
        self.find_in(seq).is_some()
    }

    /// A reusable matcher, for scanning many sequences against one pattern.
    pub fn matcher(&self) -> Matcher {
        Matcher::new(self)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.values {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts a digit string (`"2143"`) or a comma-separated list (`"2,1,4,3"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(parse_err(s, "empty pattern"));
        }
        let values = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u8>()
                        .map_err(|_| parse_err(tok, "expected a pattern entry in 1..=9"))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| parse_err(c.to_string(), "expected a digit"))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Pattern::new(values).map_err(|e| parse_err(s, e.to_string()))
    }
}

/// Backtracking matcher with precomputed order constraints.
///
/// When extending a partial occurrence by the pattern entry at step `t`, the
/// new value only has to be compared against two earlier entries: the one with
/// the next smaller pattern value and the one with the next larger. If the
/// prefix is order-isomorphic, these two comparisons are sufficient.
pub struct Matcher {
    k: usize,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Matcher {
    fn new(pattern: &Pattern) -> Self {
        let p = pattern.values();
        let k = p.len();
        let mut below = vec![None; k];
        let mut above = vec![None; k];
        for t in 0..k {
            for s in 0..t {
                if p[s] < p[t] && below[t].is_none_or(|b: usize| p[b] < p[s]) {
                    below[t] = Some(s);
                }
                if p[s] > p[t] && above[t].is_none_or(|a: usize| p[a] > p[s]) {
                    above[t] = Some(s);
                }
            }
        }
        Matcher { k, below, above }
    }

    pub fn find<T: Ord>(&self, seq: &[T]) -> Option<Vec<usize>> {
        if seq.len() < self.k {
            return None;
        }
        let mut chosen = Vec::with_capacity(self.k);
        if self.extend(seq, &mut chosen, 0) {
            Some(chosen)
        } else {
            None
        }
    }

    pub fn occurs_in<T: Ord>(&self, seq: &[T]) -> bool {
        if seq.len() < self.k {
            return false;
        }
        let mut chosen = Vec::with_capacity(self.k);
        self.extend(seq, &mut chosen, 0)
    }

    fn extend<T: Ord>(&self, seq: &[T], chosen: &mut Vec<usize>, start: usize) -> bool {
        let t = chosen.len();
        if t == self.k {
            return true;
        }
        // leave room for the remaining k - t - 1 entries
        let last = seq.len() - (self.k - t - 1);
        for pos in start..last {
            let v = &seq[pos];
            if let Some(b) = self.below[t] {
                if *v < seq[chosen[b]] {
                    continue;
                }
            }
            if let Some(a) = self.above[t] {
                if *v > seq[chosen[a]] {
                    continue;
                }
            }
            chosen.push(pos);
            if self.extend(seq, chosen, pos + 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}
