//! Brute-force twins of the statistics, computed straight from their
//! definitions over enumerated compositions and tilings.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::tiling::{runs_of, Oracle, OracleError, PartConstraint, TilingFilter};

type Outcome = Result<BigInt, OracleError>;

fn sum_over(
    o: &Oracle,
    n: u32,
    constraint: &PartConstraint,
    mut f: impl FnMut(&[u32]) -> u64,
) -> Outcome {
    let mut total: u64 = 0;
    o.for_each_composition(n, constraint, |parts| total += f(parts))?;
    Ok(total.into())
}

fn count_where(
    o: &Oracle,
    n: u32,
    constraint: &PartConstraint,
    mut pred: impl FnMut(&[u32]) -> bool,
) -> Outcome {
    sum_over(o, n, constraint, |parts| u64::from(pred(parts)))
}

fn copies(parts: &[u32], k: u32) -> usize {
    parts.iter().filter(|&&p| p == k).count()
}

pub fn compositions(o: &Oracle, n: u32) -> Outcome {
    o.count_compositions(n, &PartConstraint::Unrestricted)
}

pub fn with_part(o: &Oracle, n: u32, k: u32) -> Outcome {
    count_where(o, n, &PartConstraint::Unrestricted, |p| p.contains(&k))
}

pub fn with_at_least(o: &Oracle, n: u32, m: u32, k: u32, p: u32) -> Outcome {
    count_where(o, n, &PartConstraint::MaxPart(k), |parts| {
        copies(parts, m) >= p as usize
    })
}

pub fn with_exactly(o: &Oracle, n: u32, m: u32, k: u32, p: u32) -> Outcome {
    count_where(o, n, &PartConstraint::MaxPart(k), |parts| {
        copies(parts, m) == p as usize
    })
}

pub fn exactly_unbounded(o: &Oracle, n: u32, k: u32, p: u32) -> Outcome {
    count_where(o, n, &PartConstraint::Unrestricted, |parts| {
        copies(parts, k) == p as usize
    })
}

pub fn part_occurrences(o: &Oracle, n: u32, k: u32) -> Outcome {
    sum_over(o, n, &PartConstraint::Unrestricted, |parts| {
        copies(parts, k) as u64
    })
}

fn runs_matching(parts: &[u32], keep: impl Fn(u32, u32) -> bool) -> u64 {
    runs_of(parts)
        .iter()
        .filter(|run| keep(run.value, run.length))
        .count() as u64
}

pub fn runs_of_part_bounded(o: &Oracle, n: u32, j: u32, k: u32) -> Outcome {
    sum_over(o, n, &PartConstraint::MaxPart(k), |parts| {
        runs_matching(parts, |v, _| v == j)
    })
}

pub fn runs_bounded(o: &Oracle, n: u32, k: u32) -> Outcome {
    sum_over(o, n, &PartConstraint::MaxPart(k), |parts| {
        runs_of(parts).len() as u64
    })
}

pub fn without_part(o: &Oracle, n: u32, k: u32) -> Outcome {
    o.count_compositions(n, &PartConstraint::ForbiddenPart(k))
}

pub fn tilings_avoiding(o: &Oracle, n: u32, m: u32, k: u32) -> Outcome {
    o.count_tilings(m, n, &TilingFilter::forbid_white(k))
}

pub fn largest_part(o: &Oracle, n: u32, k: u32) -> Outcome {
    count_where(o, n, &PartConstraint::Unrestricted, |parts| {
        parts.iter().max() == Some(&k)
    })
}

pub fn largest_part_times(o: &Oracle, n: u32, k: u32, r: u32) -> Outcome {
    count_where(o, n, &PartConstraint::MaxPart(k), |parts| {
        copies(parts, k) == r as usize
    })
}

/// Classes of compositions that differ only in where the copies of `k` sit:
/// each class is identified by the other parts in order plus the number of
/// copies of `k`.
pub fn frozen(o: &Oracle, n: u32, k: u32) -> Outcome {
    let mut classes: HashSet<(Vec<u32>, usize)> = HashSet::new();
    o.for_each_composition(n, &PartConstraint::Unrestricted, |parts| {
        let rest: Vec<u32> = parts.iter().copied().filter(|&p| p != k).collect();
        classes.insert((rest, copies(parts, k)));
    })?;
    Ok(classes.len().into())
}

pub fn compositions_with_parts(o: &Oracle, n: u32, parts: &[u32]) -> Outcome {
    o.count_compositions(n, &PartConstraint::allowed(parts.iter().copied()))
}

/// Per-part weights `w[j]` for `j = 0..=n`, each computed by enumerating the
/// compositions of `j`.
fn part_weights(
    o: &Oracle,
    n: u32,
    weight: impl Fn(&[u32]) -> u64,
) -> Result<Vec<u64>, OracleError> {
    (0..=n)
        .map(|j| {
            let mut w = 0;
            o.for_each_composition(j, &PartConstraint::Unrestricted, |c| w += weight(c))?;
            Ok(w)
        })
        .collect()
}

pub fn replaced_compositions_total(o: &Oracle, n: u32) -> Outcome {
    let w = part_weights(o, n, |_| 1)?;
    sum_over(o, n, &PartConstraint::Unrestricted, |parts| {
        parts.iter().map(|&j| w[j as usize]).sum()
    })
}

pub fn replaced_parts_total(o: &Oracle, n: u32) -> Outcome {
    let w = part_weights(o, n, |c| c.len() as u64)?;
    sum_over(o, n, &PartConstraint::Unrestricted, |parts| {
        parts.iter().map(|&j| w[j as usize]).sum()
    })
}

pub fn tile_total(o: &Oracle, r: u32, n: u32) -> Outcome {
    let mut total: u64 = 0;
    o.for_each_tiling(r, n, &TilingFilter::none(), |tiles| {
        total += tiles.len() as u64
    })?;
    Ok(total.into())
}

fn copies_adjacent(parts: &[u32], k: u32) -> bool {
    let positions: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] == k).collect();
    positions.windows(2).all(|w| w[1] == w[0] + 1)
}

pub fn consecutive(o: &Oracle, n: u32, k: u32) -> Outcome {
    count_where(o, n, &PartConstraint::Unrestricted, |parts| {
        copies_adjacent(parts, k)
    })
}

pub fn consecutive_exactly(o: &Oracle, n: u32, k: u32, p: u32) -> Outcome {
    count_where(o, n, &PartConstraint::Unrestricted, |parts| {
        copies(parts, k) == p as usize && copies_adjacent(parts, k)
    })
}

pub fn avoiding_multiples(o: &Oracle, n: u32, k: u32) -> Outcome {
    o.count_compositions(n, &PartConstraint::NoMultipleOf(k))
}

pub fn runs_of_part(o: &Oracle, n: u32, k: u32) -> Outcome {
    sum_over(o, n, &PartConstraint::Unrestricted, |parts| {
        runs_matching(parts, |v, _| v == k)
    })
}

pub fn runs_of_part_length(o: &Oracle, n: u32, k: u32, l: u32) -> Outcome {
    sum_over(o, n, &PartConstraint::Unrestricted, |parts| {
        runs_matching(parts, |v, len| v == k && len == l)
    })
}

pub fn runs_total(o: &Oracle, n: u32) -> Outcome {
    sum_over(o, n, &PartConstraint::Unrestricted, |parts| {
        runs_of(parts).len() as u64
    })
}

pub fn parts_total(o: &Oracle, n: u32) -> Outcome {
    sum_over(o, n, &PartConstraint::Unrestricted, |parts| {
        parts.len() as u64
    })
}

pub fn palindromic_tilings(o: &Oracle, r: u32, n: u32) -> Outcome {
    Ok(o.enumerate_palindromic_tilings(r, n)?.len().into())
}

fn is_palindrome(parts: &[u32]) -> bool {
    parts.iter().eq(parts.iter().rev())
}

pub fn palindromes(o: &Oracle, n: u32) -> Outcome {
    count_where(o, n, &PartConstraint::Unrestricted, is_palindrome)
}

pub fn palindromes_without(o: &Oracle, n: u32, k: u32) -> Outcome {
    count_where(o, n, &PartConstraint::ForbiddenPart(k), is_palindrome)
}
