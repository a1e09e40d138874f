//! Memoized path generating functions `F^π(k, q, γ)` and count extraction.
//!
//! `F^π(k, q, γ)` sums `t^(ℓ(P) - |γ|)` over the paths that start at
//! `(γ_1, γ_1 + k, q)` and have signature `γ`. For 2143:
//!
//! ```text
//! F(k, q, γ) = s^k                                           |γ| = 1
//!            = F(0, q-1, γ) + F(γ1+1-γ2, q, γ')              |γ| >= 2, k = 0
//!            = s·[F(k-1, q, γ) + F(γ1+1-γ2+k, q, γ')
//!                 - F(γ1-γ2+k, q, γ')]                       |γ| >= 2, k >= 1
//! ```
//!
//! For 1234 the bottom layer `q = 1` is shared with 2143, and above it
//!
//! ```text
//! F(k, q, γ) = F(k, q-1, γ) + F(γ1+1-γ2+k, q, γ')            |γ| >= 2, q >= 2
//! ```
//!
//! with `F = 0` whenever `q = 0`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::Result;
use crate::gentree::TreePattern;

use super::series::TruncatedSeries;
use super::signature::{enumerate_signatures, Signature};

/// Memo key: the degree bound is fixed per session and not part of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MemoKey {
    pub pattern: TreePattern,
    pub k: u32,
    pub q: u32,
    pub gamma: Vec<u32>,
}

/// One evaluation session with a fixed truncation degree.
#[derive(Debug)]
pub struct GfSession {
    degree: usize,
    memo: HashMap<MemoKey, TruncatedSeries>,
    depth: usize,
    depth_bound: usize,
}

impl GfSession {
    pub fn new(degree: usize) -> Self {
        GfSession {
            degree,
            memo: HashMap::new(),
            depth: 0,
            depth_bound: usize::MAX,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `F^π(k, q, γ)` truncated at the session degree.
    pub fn f(
        &mut self,
        pi: TreePattern,
        k: u32,
        q: u32,
        gamma: &Signature,
    ) -> Result<TruncatedSeries> {
        let g = gamma.entries();
        let max_g = *g.iter().max().expect("nonempty") as usize;
        let m = g.len();
        // k and q each step down at most (k_i + q) times per signature entry,
        // and k_i <= k + max γ + m along the way.
        self.depth_bound = m * (q as usize + k as usize + max_g + m + 1) + 1;
        self.depth = 0;
        let out = self.eval(pi, k, q, g);
        debug_assert!(out.is_nonnegative(), "negative coefficient in F");
        Ok(out)
    }

    fn eval(&mut self, pi: TreePattern, k: u32, q: u32, g: &[u32]) -> TruncatedSeries {
        if q == 0 {
            return TruncatedSeries::zero(self.degree);
        }
        if g.len() == 1 {
            return TruncatedSeries::s_power(k as usize, self.degree);
        }
        let key = MemoKey {
            pattern: pi,
            k,
            q,
            gamma: g.to_vec(),
        };
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        self.depth += 1;
        debug_assert!(
            self.depth <= self.depth_bound,
            "recursion depth {} exceeds bound {}",
            self.depth,
            self.depth_bound
        );
        let v = match pi {
            TreePattern::P2143 => self.eval_2143(k, q, g),
            TreePattern::P1234 if q == 1 => self.eval(TreePattern::P2143, k, q, g),
            TreePattern::P1234 => {
                let tail_k = g[0] + 1 - g[1] + k;
                let down = self.eval(pi, k, q - 1, g);
                let across = self.eval(pi, tail_k, q, &g[1..]);
                down.add(&across).expect("same degree")
            }
        };
        self.depth -= 1;
        self.memo.insert(key, v.clone());
        v
    }

    fn eval_2143(&mut self, k: u32, q: u32, g: &[u32]) -> TruncatedSeries {
        let pi = TreePattern::P2143;
        let tail = &g[1..];
        if k == 0 {
            let down = self.eval(pi, 0, q - 1, g);
            let across = self.eval(pi, g[0] + 1 - g[1], q, tail);
            return down.add(&across).expect("same degree");
        }
        let stay = self.eval(pi, k - 1, q, g);
        let higher = self.eval(pi, g[0] + 1 - g[1] + k, q, tail);
        let lower = self.eval(pi, g[0] + k - g[1], q, tail);
        stay.add(&higher)
            .and_then(|s| s.sub(&lower))
            .expect("same degree")
            .mul_s()
    }
}

/// `F^π(k, q, γ)` in a fresh session.
pub fn f(
    pi: TreePattern,
    k: u32,
    q: u32,
    gamma: &Signature,
    degree: usize,
) -> Result<TruncatedSeries> {
    GfSession::new(degree).f(pi, k, q, gamma)
}

/// `|B_n^j(π)| = Σ_{γ_1 = j+1} [t^(n-j-|γ|+1)] F^π(0, j+1, γ)`.
pub fn count_via_theorem(n: usize, j: usize, pi: TreePattern) -> Result<BigUint> {
    count_via_theorem_bounded(n, j, pi, n.saturating_sub(j) + 1)
}

/// [`count_via_theorem`] summing only signatures of length at most `max_len`.
///
/// Signatures longer than `n - j + 1` would need a negative exponent, so any
/// larger `max_len` gives the same result.
pub fn count_via_theorem_bounded(
    n: usize,
    j: usize,
    pi: TreePattern,
    max_len: usize,
) -> Result<BigUint> {
    if j > n {
        return Err(crate::error::Error::Domain(format!(
            "j = {j} exceeds n = {n}"
        )));
    }
    let top = n - j + 1;
    let mut session = GfSession::new(top);
    let mut total = BigInt::zero();
    for gamma in enumerate_signatures(j, max_len) {
        if gamma.len() > top {
            continue;
        }
        let series = session.f(pi, 0, j as u32 + 1, &gamma)?;
        total += series.coeff(top - gamma.len());
    }
    Ok(total.to_biguint().expect("path counts are nonnegative"))
}
