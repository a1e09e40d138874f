use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;
use sigperm_core::gentree::{build_tree, level_counts, stats, PermTreeNode};
use sigperm_core::gf::{count_via_theorem, path_counts, GfSession};
use sigperm_core::oracle::{count_bnj, egge_formula, j_profile};
use sigperm_core::{Method, Pattern, Signature, TreeLabel, TreePattern};

use crate::args::{Cli, Command, ConjectureArgs, CountArgs, Format, GfArgs, TreeArgs, VerifyArgs};
use crate::error::{CliError, Outcome};
use crate::report::{Report, Row, RunManifest};
use crate::verify::verify;

/// Everything a command prints, collected so that it can run on a worker pool.
#[derive(Clone, Debug)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub outcome: Outcome,
}

impl Output {
    fn pass(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            outcome: Outcome::Pass,
        }
    }
}

fn passed_if(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Inequality
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs a parsed command line on a pool with the requested worker count.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let threads = cli.threads.unwrap_or_else(default_threads);
    if threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;
    pool.install(|| match &cli.command {
        Command::Count(a) => cmd_count(a, threads),
        Command::Verify(a) => cmd_verify(a),
        Command::Conjecture(a) => cmd_conjecture(a, threads),
        Command::Gf(a) => cmd_gf(a),
        Command::Tree(a) => cmd_tree(a),
    })
}

fn tree_pattern(pi: &Pattern, method: &str) -> Result<TreePattern, CliError> {
    TreePattern::from_pattern(pi).ok_or_else(|| {
        CliError::Usage(format!(
            "{method} is only available for patterns 1234 and 2143, got {pi}"
        ))
    })
}

fn row(n: usize, j: Option<usize>, pi: &Pattern, method: Method, count: BigUint) -> Row {
    Row {
        n,
        j,
        pattern: pi.to_string(),
        method: method.to_string(),
        count: count.to_string(),
    }
}

/// Rows for `|B_n^j(π)|`: a single row when `j` is given, else `j = 0..n`
/// followed by the total. The formula method only produces the total.
pub fn count_rows(
    n: usize,
    j: Option<usize>,
    pi: &Pattern,
    method: Method,
) -> Result<Vec<Row>, CliError> {
    if let Some(j) = j {
        if j > n {
            return Err(CliError::Usage(format!("--j {j} exceeds --n {n}")));
        }
    }
    let one = |j: usize| -> Result<BigUint, CliError> {
        Ok(match method {
            Method::Brute => count_bnj(n, j, pi)?,
            Method::Tree => level_counts(tree_pattern(pi, "tree")?, j, n - j)
                .pop()
                .expect("nonempty"),
            Method::Gf => count_via_theorem(n, j, tree_pattern(pi, "gf")?)?,
            Method::Formula => unreachable!(),
        })
    };
    if method == Method::Formula {
        if pi.values() != [1, 2, 3, 4] {
            return Err(CliError::Usage(format!(
                "formula is only available for pattern 1234, got {pi}"
            )));
        }
        if j.is_some() {
            return Err(CliError::Usage(
                "formula gives totals only; drop --j".into(),
            ));
        }
        return Ok(vec![row(n, None, pi, method, egge_formula(n as u64))]);
    }
    if let Some(j) = j {
        return Ok(vec![row(n, Some(j), pi, method, one(j)?)]);
    }
    let counts: Vec<BigUint> = match method {
        Method::Brute => j_profile(n, pi),
        _ => (0..=n).map(one).collect::<Result<_, _>>()?,
    };
    let total: BigUint = counts.iter().sum();
    let mut rows: Vec<Row> = counts
        .into_iter()
        .enumerate()
        .map(|(j, c)| row(n, Some(j), pi, method, c))
        .collect();
    rows.push(row(n, None, pi, method, total));
    Ok(rows)
}

fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Human => Ok(report.to_human()),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn cmd_count(a: &CountArgs, threads: usize) -> Result<Output, CliError> {
    let start = Instant::now();
    let rows = count_rows(a.n, a.j, &a.pattern, a.method)?;
    let j_flag = a.j.map_or_else(String::new, |j| format!(" --j {j}"));
    let report = Report {
        manifest: RunManifest {
            command: format!(
                "count --n {}{j_flag} --pattern {} --method {}",
                a.n, a.pattern, a.method
            ),
            patterns: vec![a.pattern.to_string()],
            n_min: a.n,
            n_max: a.n,
            j: a.j,
            methods: vec![a.method.to_string()],
            degree: None,
            threads,
            wall_time_ms: elapsed_ms(start),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        rows,
    };
    Ok(Output::pass(render(&report, a.format)?))
}

fn cmd_verify(a: &VerifyArgs) -> Result<Output, CliError> {
    if a.max_n < 1 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let checks = verify(a.max_n);
    let mut stdout = String::new();
    for c in &checks {
        if c.passed {
            stdout.push_str(&format!("PASS  {}\n", c.name));
        } else {
            stdout.push_str(&format!("FAIL  {}: {}\n", c.name, c.detail));
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    stdout.push_str(&format!(
        "{} of {} checks passed for n <= {}\n",
        checks.len() - failed,
        checks.len(),
        a.max_n
    ));
    Ok(Output {
        stdout,
        stderr: String::new(),
        outcome: passed_if(failed == 0),
    })
}

/// Number of signed permutations scanned per pattern: `Σ_{n <= max_n} 2^n n!`.
pub fn cost_estimate(max_n: usize) -> BigUint {
    let mut size = BigUint::from(1u32);
    let mut total = size.clone();
    for n in 1..=max_n {
        size *= 2 * n;
        total += &size;
    }
    total
}

/// First `(n, j, count for p1, count for p2)` where the refined counts differ.
pub type Discrepancy = (usize, usize, BigUint, BigUint);

pub fn conjecture_rows(
    max_n: usize,
    p1: &Pattern,
    p2: &Pattern,
) -> (Vec<Row>, Option<Discrepancy>) {
    let mut rows = Vec::new();
    let mut first = None;
    for n in 0..=max_n {
        let a = j_profile(n, p1);
        let b = j_profile(n, p2);
        for (j, (x, y)) in a.iter().zip(&b).enumerate() {
            if x != y && first.is_none() {
                first = Some((n, j, x.clone(), y.clone()));
            }
        }
        for (pi, counts) in [(p1, a), (p2, b)] {
            rows.extend(
                counts
                    .into_iter()
                    .enumerate()
                    .map(|(j, c)| row(n, Some(j), pi, Method::Brute, c)),
            );
        }
    }
    (rows, first)
}

fn cmd_conjecture(a: &ConjectureArgs, threads: usize) -> Result<Output, CliError> {
    if a.p1.len() != a.p2.len() {
        return Err(CliError::Usage(format!(
            "patterns must have equal length, got {} and {}",
            a.p1, a.p2
        )));
    }
    let cost = cost_estimate(a.max_n);
    let mut stderr = String::new();
    if a.max_n > a.guard {
        let msg = format!(
            "n = {} is above the guard {}; this scans {cost} signed permutations per pattern",
            a.max_n, a.guard
        );
        if !a.allow_long {
            return Err(CliError::Usage(format!(
                "{msg}. Pass --allow-long to run it"
            )));
        }
        stderr.push_str(&msg);
        stderr.push('\n');
    }
    let start = Instant::now();
    let (rows, discrepancy) = conjecture_rows(a.max_n, &a.p1, &a.p2);
    let report = Report {
        manifest: RunManifest {
            command: format!("conjecture --max-n {} --p1 {} --p2 {}", a.max_n, a.p1, a.p2),
            patterns: vec![a.p1.to_string(), a.p2.to_string()],
            n_min: 0,
            n_max: a.max_n,
            j: None,
            methods: vec![Method::Brute.to_string()],
            degree: None,
            threads,
            wall_time_ms: elapsed_ms(start),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        rows,
    };
    let mut stdout = render(&report, a.format)?;
    let summary = match &discrepancy {
        None => format!("{} and {} agree for all j <= n <= {}", a.p1, a.p2, a.max_n),
        Some((n, j, x, y)) => format!(
            "first discrepancy at n={n} j={j}: {} gives {x}, {} gives {y}",
            a.p1, a.p2
        ),
    };
    if a.format == Format::Human {
        stdout.push('\n');
        stdout.push_str(&summary);
        stdout.push('\n');
    } else {
        stderr.push_str(&summary);
        stderr.push('\n');
    }
    Ok(Output {
        stdout,
        stderr,
        outcome: passed_if(discrepancy.is_none()),
    })
}

/// Whether the path cross-check is cheap enough to run.
fn small_start(k: u32, q: u32, gamma: &Signature, degree: usize) -> bool {
    degree <= 6 && gamma.first() + k <= 6 && q <= 4 && gamma.len() + degree <= 9
}

/// Path counts from `(γ_1, γ_1 + k, q)` with signature `γ`, per degree.
pub fn paths_by_degree(
    pi: TreePattern,
    k: u32,
    q: u32,
    gamma: &Signature,
    degree: usize,
) -> Result<Vec<u64>, CliError> {
    let start = TreeLabel::new(gamma.first(), gamma.first() + k, q);
    let counts = path_counts(pi, start, gamma.len() + degree)?;
    let seen = counts.get(gamma).cloned().unwrap_or_default();
    Ok((0..=degree)
        .map(|d| seen.get(d).copied().unwrap_or(0))
        .collect())
}

fn cmd_gf(a: &GfArgs) -> Result<Output, CliError> {
    let pi = tree_pattern(&a.pattern, "gf")?;
    if a.q == 0 {
        return Err(CliError::Usage("--q must be at least 1".into()));
    }
    let series = GfSession::new(a.degree).f(pi, a.k, a.q, &a.gamma)?;
    let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
    let mut stdout = format!(
        "F^{pi}(k={}, q={}, γ=({})) to degree {}\n{series}\n{}\n",
        a.k,
        a.q,
        a.gamma,
        a.degree,
        serde_json::to_string(&coeffs)?
    );
    let mut ok = true;
    if small_start(a.k, a.q, &a.gamma, a.degree) {
        let paths = paths_by_degree(pi, a.k, a.q, &a.gamma, a.degree)?;
        let agree = paths
            .iter()
            .enumerate()
            .all(|(d, &c)| series.coeff(d) == c.into());
        if agree {
            stdout.push_str(&format!("paths agree through degree {}\n", a.degree));
        } else {
            stdout.push_str(&format!("paths DISAGREE: {paths:?}\n"));
            ok = false;
        }
    } else {
        stdout.push_str("paths not checked (start too large)\n");
    }
    Ok(Output {
        stdout,
        stderr: String::new(),
        outcome: passed_if(ok),
    })
}

#[derive(Serialize)]
struct TreeJson {
    perm: String,
    label: [u32; 3],
    children: Vec<TreeJson>,
}

fn tree_json(node: &PermTreeNode, pi: TreePattern) -> Result<TreeJson, CliError> {
    let TreeLabel { x, y, z } = stats(&node.label, pi)?;
    Ok(TreeJson {
        perm: node.label.to_string(),
        label: [x, y, z],
        children: node
            .children
            .iter()
            .map(|c| tree_json(c, pi))
            .collect::<Result<_, _>>()?,
    })
}

fn cmd_tree(a: &TreeArgs) -> Result<Output, CliError> {
    let pi = tree_pattern(&a.pattern, "tree")?;
    let tree = build_tree(pi, a.j, a.depth).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&tree_json(&tree, pi)?)?;
    s.push('\n');
    Ok(Output::pass(s))
}
