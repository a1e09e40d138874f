use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

/// Signature of a lattice path: the starting x-coordinate followed by the
/// x-coordinates at the ends of recorded edges.
///
/// Valid signatures are nonempty, start at `γ_1 >= 1`, and satisfy
/// `2 <= γ_{i+1} <= γ_i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<u32>);

fn check(entries: &[u32]) -> std::result::Result<(), String> {
    let Some(&first) = entries.first() else {
        return Err("signature must be nonempty".into());
    };
    if first < 1 {
        return Err("first entry must be at least 1".into());
    }
    for (i, w) in entries.windows(2).enumerate() {
        if w[1] < 2 || w[1] > w[0] + 1 {
            return Err(format!(
                "entry {} = {} must lie in 2..={}",
                i + 2,
                w[1],
                w[0] + 1
            ));
        }
    }
    Ok(())
}

impl Signature {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        check(&entries).map_err(Error::Domain)?;
        Ok(Signature(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(check(&entries).is_ok());
        Signature(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; signatures are nonempty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    /// Drops the first entry; `None` when that leaves nothing.
    pub fn tail(&self) -> Option<Signature> {
        (self.0.len() > 1).then(|| Signature(self.0[1..].to_vec()))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Comma-separated entries, optionally wrapped in parentheses: `"4,3,4,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let entries = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>()
                    .map_err(|_| parse_err(tok, "expected a positive integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        check(&entries).map_err(|reason| parse_err(t, reason))?;
        Ok(Signature(entries))
    }
}

/// All valid signatures with `γ_1 = j + 1` and length at most `max_len`,
/// ordered by length and then lexicographically.
pub fn enumerate_signatures(j: usize, max_len: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    if max_len == 0 {
        return out;
    }
    let mut layer = vec![vec![j as u32 + 1]];
    for len in 1..=max_len {
        out.extend(layer.iter().cloned().map(Signature::from_vec_unchecked));
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for g in &layer {
            let last = *g.last().expect("nonempty");
            for v in 2..=last + 1 {
                let mut h = g.clone();
                h.push(v);
                next.push(h);
            }
        }
        layer = next;
    }
    out
}
