//! Cross-method consistency checks.

use num_bigint::BigUint;
use sigperm_core::gentree::{level_counts_with, SuccessionRule};
use sigperm_core::gf::{count_via_theorem, enumerate_signatures, GfSession};
use sigperm_core::oracle::{count_classical, count_dn, egge_formula, j_profile};
use sigperm_core::TreePattern;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First mismatch, empty when the check passed.
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        }
    }
}

/// All checks for sizes `1..=max_n` with the built-in succession rules.
pub fn verify(max_n: usize) -> Vec<Check> {
    verify_with(max_n, &TreePattern::P1234, &TreePattern::P2143)
}

/// Like [`verify`], with the tree counts taken from the given rules.
pub fn verify_with(
    max_n: usize,
    rule_1234: &impl SuccessionRule,
    rule_2143: &impl SuccessionRule,
) -> Vec<Check> {
    let brute_1234: Vec<Vec<BigUint>> = (0..=max_n)
        .map(|n| j_profile(n, &TreePattern::P1234.pattern()))
        .collect();
    let brute_2143: Vec<Vec<BigUint>> = (0..=max_n)
        .map(|n| j_profile(n, &TreePattern::P2143.pattern()))
        .collect();

    let mut checks = vec![
        cross_method(TreePattern::P1234, rule_1234, &brute_1234),
        cross_method(TreePattern::P2143, rule_2143, &brute_2143),
    ];

    let mismatch = (1..=max_n)
        .find(|&n| brute_1234[n] != brute_2143[n])
        .map(|n| format!("n={n}: {:?} vs {:?}", brute_1234[n], brute_2143[n]));
    checks.push(Check::new(
        "refined counts of 1234 and 2143 agree",
        mismatch,
    ));

    let mismatch = (1..=max_n).find_map(|n| {
        let total: BigUint = brute_1234[n].iter().sum();
        let formula = egge_formula(n as u64);
        (total != formula).then(|| format!("n={n}: {total} vs {formula}"))
    });
    checks.push(Check::new("totals equal sum binom(n,j)^2 C_j", mismatch));

    let mismatch = (1..=max_n).find_map(|n| {
        let classical = count_classical(n, &TreePattern::P1234.pattern());
        (brute_1234[n][0] != classical)
            .then(|| format!("n={n}: {} vs {classical}", brute_1234[n][0]))
    });
    checks.push(Check::new("j = 0 slice equals |S_n(1234)|", mismatch));

    let mismatch = (1..=max_n).find_map(|n| {
        let even = |row: &[BigUint]| -> BigUint {
            row.iter()
                .enumerate()
                .filter(|(j, _)| (n - j) % 2 == 0)
                .map(|(_, c)| c)
                .sum()
        };
        let a = count_dn(n, &TreePattern::P1234.pattern());
        let b = count_dn(n, &TreePattern::P2143.pattern());
        let slice = even(&brute_1234[n]);
        (a != b || a != slice).then(|| format!("n={n}: D_n counts {a}, {b}; slice {slice}"))
    });
    checks.push(Check::new("type D counts equal the even slices", mismatch));

    checks.push(gf_grid(max_n));
    checks
}

fn cross_method(pi: TreePattern, rule: &impl SuccessionRule, brute: &[Vec<BigUint>]) -> Check {
    let mut failure = None;
    'outer: for (n, row) in brute.iter().enumerate() {
        for (j, b) in row.iter().enumerate() {
            let tree = level_counts_with(rule, j, n - j).pop().expect("nonempty");
            let gf = match count_via_theorem(n, j, pi) {
                Ok(c) => c,
                Err(e) => {
                    failure = Some(format!("n={n} j={j}: {e}"));
                    break 'outer;
                }
            };
            if *b != tree || *b != gf {
                failure = Some(format!("n={n} j={j}: brute {b}, tree {tree}, gf {gf}"));
                break 'outer;
            }
        }
    }
    Check::new(format!("brute = tree = gf for {pi}"), failure)
}

/// The two generating functions agree on a grid that grows with `max_n`.
fn gf_grid(max_n: usize) -> Check {
    let top = max_n.min(5) as u32;
    let degree = max_n + 1;
    let mut a = GfSession::new(degree);
    let mut b = GfSession::new(degree);
    let mut failure = None;
    'outer: for g1 in 1..=top as usize {
        for gamma in enumerate_signatures(g1 - 1, top as usize) {
            for k in 0..=top {
                for q in 1..=top {
                    let (fa, fb) = match (
                        a.f(TreePattern::P1234, k, q, &gamma),
                        b.f(TreePattern::P2143, k, q, &gamma),
                    ) {
                        (Ok(x), Ok(y)) => (x, y),
                        (Err(e), _) | (_, Err(e)) => {
                            failure = Some(e.to_string());
                            break 'outer;
                        }
                    };
                    if fa != fb {
                        failure = Some(format!("k={k} q={q} γ=({gamma}): {fa} vs {fb}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    Check::new("F^1234 = F^2143 on the grid", failure)
}
