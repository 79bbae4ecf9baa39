//! Named closure operators that need no input file.

use crate::closure::ClosureOperator;
use crate::error::{Error, Result};

/// Names accepted by [`builtin`]; `r`, `n` and `density` are parameters.
pub const BUILTIN_NAMES: &[&str] = &[
    "example-1-3",
    "two-wedge",
    "uniform:r,n",
    "random:n,density",
];

/// A non-matroid on `{1,…,5}` whose flats are the empty set, the points,
/// `{1,2}`, `{1,3}`, `{2,3}`, `{3,4}`, `{3,5}`, `{4,5}` and the ground set.
///
/// Its independence complex is two triangles sharing a vertex plus four
/// edges and is not shellable, while its augmented Bergman complex is.
pub fn worked_example() -> ClosureOperator {
    ClosureOperator::from_proper_flats(
        &["1", "2", "3", "4", "5"],
        &[
            vec![],
            vec!["1"],
            vec!["2"],
            vec!["3"],
            vec!["4"],
            vec!["5"],
            vec!["1", "2"],
            vec!["1", "3"],
            vec!["2", "3"],
            vec!["3", "4"],
            vec!["3", "5"],
            vec!["4", "5"],
        ],
    )
    .expect("valid flat family")
}

/// Flats `∅`, the four points, `{1,2}`, `{3,4}` and `{1,2,3,4}`. Its Bergman
/// complex is two disjoint wedges.
pub fn two_wedge() -> ClosureOperator {
    ClosureOperator::from_proper_flats(
        &["1", "2", "3", "4"],
        &[
            vec![],
            vec!["1"],
            vec!["2"],
            vec!["3"],
            vec!["4"],
            vec!["1", "2"],
            vec!["3", "4"],
        ],
    )
    .expect("valid flat family")
}

pub fn element_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// `U_{r,n}` on `{1,…,n}`.
pub fn uniform(rank: usize, n: usize) -> Result<ClosureOperator> {
    ClosureOperator::uniform_matroid(rank, &element_names(n))
}

/// A seeded random operator on `{1,…,n}`.
pub fn random(seed: u64, n: usize, density: f64) -> Result<ClosureOperator> {
    ClosureOperator::random(seed, &element_names(n), density)
}

/// `count` random operators with between 1 and `max_elements` elements,
/// seeded by their position.
pub fn random_operators(count: usize, max_elements: usize) -> Result<Vec<ClosureOperator>> {
    const DENSITIES: [f64; 3] = [0.2, 0.35, 0.5];
    (0..count)
        .map(|i| {
            random(
                i as u64,
                1 + i % max_elements,
                DENSITIES[i % DENSITIES.len()],
            )
        })
        .collect()
}

fn parse_pair<A: std::str::FromStr, B: std::str::FromStr>(text: &str) -> Option<(A, B)> {
    let (a, b) = text.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Resolves a builtin name, or `None` if `name` is not one.
pub fn builtin(name: &str, seed: u64) -> Option<Result<ClosureOperator>> {
    let bad = |what: &str| Error::InvalidArgument(format!("expected {what}, got `{name}`"));
    match name {
        "example-1-3" => Some(Ok(worked_example())),
        "two-wedge" => Some(Ok(two_wedge())),
        _ => {
            if let Some(rest) = name.strip_prefix("uniform:") {
                Some(
                    parse_pair::<usize, usize>(rest)
                        .ok_or_else(|| bad("uniform:r,n"))
                        .and_then(|(r, n)| uniform(r, n)),
                )
            } else {
                name.strip_prefix("random:").map(|rest| {
                    parse_pair::<usize, f64>(rest)
                        .ok_or_else(|| bad("random:n,density"))
                        .and_then(|(n, d)| random(seed, n, d))
                })
            }
        }
    }
}
