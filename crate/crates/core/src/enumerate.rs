//! Enumeration of `B_n` and `D_n` in lexicographic order of `[w(-n), ..., w(-1)]`.

use crate::perm::SignedPermutation;

/// Streams the elements of `B_n`, lexicographically on the negative half.
///
/// `B_0` yields its single empty element.
pub fn enumerate_bn(n: usize) -> BnIter {
    BnIter::new(n, None)
}

/// Streams the elements of `D_n` in the same order as [`enumerate_bn`].
pub fn enumerate_dn(n: usize) -> impl Iterator<Item = SignedPermutation> {
    enumerate_bn(n).filter(SignedPermutation::is_type_d)
}

/// Streams the block of `B_n` with `w(-n) = first`.
///
/// Blocks for the `2n` possible values of `w(-n)` partition `B_n`.
pub fn enumerate_bn_block(n: usize, first: i32) -> BnIter {
    assert!(
        first != 0 && first.unsigned_abs() as usize <= n,
        "w(-n) = {first} out of range for n = {n}"
    );
    BnIter::new(n, Some(first))
}

/// Candidate values of `w(-n)` in increasing order: `-n, ..., -1, 1, ..., n`.
pub fn first_values(n: usize) -> impl Iterator<Item = i32> {
    let n = n as i32;
    (-n..=n).filter(|&v| v != 0)
}

/// Lexicographic iterator over negative halves.
///
/// Walks the raw sequence in place and hands out owned values; use
/// [`BnIter::for_each_raw`] to avoid the per-element allocation.
pub struct BnIter {
    n: usize,
    current: Vec<i32>,
    used: Vec<bool>,
    fixed_first: bool,
    started: bool,
    done: bool,
}

impl BnIter {
    fn new(n: usize, first: Option<i32>) -> Self {
        let mut it = BnIter {
            n,
            current: Vec::with_capacity(n),
            used: vec![false; n + 1],
            fixed_first: first.is_some(),
            started: false,
            done: false,
        };
        if let Some(v) = first {
            it.current.push(v);
            it.used[v.unsigned_abs() as usize] = true;
        }
        it.fill_smallest();
        it
    }

    /// Completes `current` to length `n` with the smallest available values.
    fn fill_smallest(&mut self) {
        while self.current.len() < self.n {
            // smallest available value is -a for the largest unused a
            let a = (1..=self.n)
                .rev()
                .find(|&a| !self.used[a])
                .expect("free value");
            self.used[a] = true;
            self.current.push(-(a as i32));
        }
    }

    /// Advances `current` to its lexicographic successor.
    fn advance(&mut self) -> bool {
        let floor = usize::from(self.fixed_first);
        while self.current.len() > floor {
            let old = self.current.pop().expect("nonempty");
            self.used[old.unsigned_abs() as usize] = false;
            if let Some(next) = self.next_free_above(old) {
                self.used[next.unsigned_abs() as usize] = true;
                self.current.push(next);
                self.fill_smallest();
                return true;
            }
        }
        false
    }

    fn next_free_above(&self, v: i32) -> Option<i32> {
        let n = self.n as i32;
        ((v + 1)..=n).find(|&c| c != 0 && !self.used[c.unsigned_abs() as usize])
    }

    fn step(&mut self) -> Option<&[i32]> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(&self.current)
    }

    /// Visits each negative half as a borrowed slice.
    pub fn for_each_raw(mut self, mut f: impl FnMut(&[i32])) {
        while let Some(s) = self.step() {
            f(s);
        }
    }
}

impl Iterator for BnIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        self.step()
            .map(|s| SignedPermutation::from_vec_unchecked(s.to_vec()))
    }
}
