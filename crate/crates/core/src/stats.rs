//! Composition statistics computed from closed forms over the tiling
//! sequences. Every function here has a brute-force twin in [`oracle`].
//!
//! Arguments are `(n, …)` with `n` the composed integer. Negative `n` gives
//! zero. Alternating sums run until their sequence argument goes negative.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::sequences::{a, a_k, a_s, binomial, fibonacci_k, sign};

pub mod oracle;

fn step_limit(n: i64, step: i64) -> i64 {
    if n < 0 {
        -1
    } else {
        n / step + 2
    }
}

/// `F(n+1-jm, k, j)`, the compositions of `n - jm` with parts at most `k`
/// and `j` marked slots.
fn bounded_term(n: i64, m: i64, k: i64, j: i64) -> BigInt {
    a_k(j, n - j * m, k as u32)
}

/// Number of compositions of `n` (`C(n)`).
pub fn compositions(n: i64) -> BigInt {
    a(0, n)
}

/// `L(n, k)`: compositions of `n` with at least one part `k`.
pub fn with_part(n: i64, k: i64) -> BigInt {
    assert!(k >= 1);
    (1..=step_limit(n, k))
        .map(|j| sign(j - 1) * a(j, n - j * k))
        .sum()
}

/// `L(n, m, k)`: compositions of `n` with parts at most `k` and at least one
/// part `m`.
pub fn with_part_bounded(n: i64, m: i64, k: i64) -> BigInt {
    with_at_least(n, m, k, 1)
}

/// `L_p(n, m, k)`: compositions of `n` with parts at most `k` and at least
/// `p` parts equal to `m`.
pub fn with_at_least(n: i64, m: i64, k: i64, p: i64) -> BigInt {
    assert!(m >= 1 && k >= 1);
    if m > k || p < 0 {
        return BigInt::zero();
    }
    if p == 0 {
        return a_k(0, n, k as u32);
    }
    (p..=step_limit(n, m).max(p))
        .map(|j| sign(j - p) * binomial(j - 1, p - 1) * bounded_term(n, m, k, j))
        .sum()
}

/// `E_p(n, m, k)`: compositions of `n` with parts at most `k` and exactly
/// `p` parts equal to `m`.
pub fn with_exactly(n: i64, m: i64, k: i64, p: i64) -> BigInt {
    assert!(m >= 1 && k >= 1);
    if m > k {
        return if p == 0 {
            a_k(0, n, k as u32)
        } else {
            BigInt::zero()
        };
    }
    if p < 0 {
        return BigInt::zero();
    }
    (p..=step_limit(n, m).max(p))
        .map(|j| sign(j - p) * binomial(j, p) * bounded_term(n, m, k, j))
        .sum()
}

/// `E_p(n, k)`: compositions of `n` with exactly `p` parts equal to `k`.
pub fn exactly_unbounded(n: i64, k: i64, p: i64) -> BigInt {
    assert!(k >= 1);
    if p < 0 {
        return BigInt::zero();
    }
    (p..=step_limit(n, k).max(p))
        .map(|j| sign(j - p) * binomial(j, p) * a(j, n - j * k))
        .sum()
}

/// `S(n, k)`: occurrences of the part `k` over all compositions of `n`.
/// Note the order: `n` first.
pub fn part_occurrences(n: i64, k: i64) -> BigInt {
    assert!(k >= 1);
    a(1, n - k)
}

/// `r(n, j, {k})`: runs of `j` over the compositions of `n` with parts at
/// most `k`.
pub fn runs_of_part_bounded(n: i64, j: i64, k: i64) -> BigInt {
    assert!(j >= 1 && k >= 1);
    if j > k {
        return BigInt::zero();
    }
    let k = k as u32;
    a_k(1, n - j, k) - a_k(1, n - 2 * j, k)
}

/// `r(n, {k})`: runs of any part over the compositions of `n` with parts at
/// most `k`.
pub fn runs_bounded(n: i64, k: i64) -> BigInt {
    (1..=k).map(|j| runs_of_part_bounded(n, j, k)).sum()
}

/// `C(n, k̂)`: compositions of `n` with no part `k`.
pub fn without_part(n: i64, k: i64) -> BigInt {
    assert!(k >= 1);
    (0..=step_limit(n, k))
        .map(|j| sign(j) * a(j, n - j * k))
        .sum()
}

/// `C(n, m, k̂)`: tilings with `m` red squares and white total `n` in which
/// no white tile has length `k`.
pub fn tilings_avoiding(n: i64, m: i64, k: i64) -> BigInt {
    assert!(k >= 1);
    if m < 0 {
        return BigInt::zero();
    }
    (m..=m + step_limit(n, k))
        .map(|j| sign(j - m) * binomial(j, m) * a(j, n - k * (j - m)))
        .sum()
}

/// `G(n, k)`: compositions of `n` whose largest part is `k`.
pub fn largest_part(n: i64, k: i64) -> BigInt {
    assert!(k >= 1);
    fibonacci_k(n + 1, k as u32) - fibonacci_k(n + 1, k as u32 - 1)
}

/// `G(n, k, r)`: compositions of `n` with parts at most `k` in which `k`
/// occurs exactly `r` times. For `r ≥ 1` the largest part is `k`.
pub fn largest_part_times(n: i64, k: i64, r: i64) -> BigInt {
    assert!(k >= 1);
    if r < 0 {
        return BigInt::zero();
    }
    a_k(r, n - k * r, k as u32 - 1)
}

/// `CF(n, k)`: compositions of `n` with the part `k` frozen, so that two
/// compositions agree when they differ only in where the copies of `k` sit.
pub fn frozen(n: i64, k: i64) -> BigInt {
    assert!(k >= 1);
    (0..=step_limit(n, k))
        .map(|j| without_part(n - j * k, k))
        .sum()
}

/// `C(n, ⟨parts⟩)`: compositions of `n` using only the given parts.
pub fn compositions_with_parts(n: i64, parts: &[i64]) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let mut c: Vec<BigInt> = Vec::with_capacity(n as usize + 1);
    c.push(BigInt::one());
    for m in 1..=n {
        let v = parts
            .iter()
            .filter(|&&p| p >= 1 && p <= m)
            .map(|&p| &c[(m - p) as usize])
            .sum();
        c.push(v);
    }
    c.pop().unwrap()
}

/// Replace every part `j` of every composition of `n` by each composition
/// of `j`; this is the total number of compositions produced.
pub fn replaced_compositions_total(n: i64) -> BigInt {
    a_s(1, 2, n - 1)
}

/// Same replacement as [`replaced_compositions_total`], counting the parts
/// of the produced compositions.
pub fn replaced_parts_total(n: i64) -> BigInt {
    a_s(1, 3, n - 1)
}

/// `C_a(r, n)`: total number of tiles over all tilings counted by `a(r, n)`.
pub fn tile_total(r: i64, n: i64) -> BigInt {
    if r < 0 {
        return BigInt::zero();
    }
    (r + 1) * a_s(1, r + 1, n - 1) + r * a(r, n)
}

/// `C_b(n, k)`: compositions of `n` in which all copies of `k` are adjacent
/// (including those with no `k`).
pub fn consecutive(n: i64, k: i64) -> BigInt {
    let blocks: BigInt = (0..=step_limit(n, k))
        .map(|j| exactly_unbounded(n - j * k, k, 1))
        .sum();
    without_part(n, k) + blocks
}

/// `C_b(n, k, p)`: compositions of `n` with exactly `p ≥ 1` copies of `k`,
/// all adjacent.
pub fn consecutive_exactly(n: i64, k: i64, p: i64) -> BigInt {
    assert!(k >= 1);
    if p < 1 {
        return BigInt::zero();
    }
    exactly_unbounded(n - (p - 1) * k, k, 1)
}

/// `C(n, [k])`: compositions of `n` with no part a multiple of `k`.
pub fn avoiding_multiples(n: i64, k: i64) -> BigInt {
    assert!(k >= 1);
    let k32 = k as u32;
    fibonacci_k(n + 1, k32) - fibonacci_k(n + 1 - k, k32)
}

/// `R(n, k)`: runs of the part `k` over all compositions of `n`.
pub fn runs_of_part(n: i64, k: i64) -> BigInt {
    assert!(k >= 1);
    a(1, n - k) - a(1, n - 2 * k)
}

/// `R(n, k, l)`: runs of `k` of length exactly `l` over all compositions
/// of `n`.
pub fn runs_of_part_length(n: i64, k: i64, l: i64) -> BigInt {
    assert!(k >= 1 && l >= 1);
    a(1, n - k * l) - 2 * a(1, n - (l + 1) * k) + a(1, n - (l + 2) * k)
}

/// `R(n)`: runs over all compositions of `n`.
pub fn runs_total(n: i64) -> BigInt {
    (1..=step_limit(n, 2)).map(|k| a(1, n - (2 * k - 1))).sum()
}

/// `E(n)`: parts over all compositions of `n`.
pub fn parts_total(n: i64) -> BigInt {
    a_s(1, 1, n - 1)
}

/// `m(r, n)`: palindromic tilings with `r` red squares and white total `n`.
pub fn palindromic_tilings(r: i64, n: i64) -> BigInt {
    if r < 0 || n < 0 {
        return BigInt::zero();
    }
    match (r % 2, n % 2) {
        (0, _) => a_s(1, r / 2, n / 2),
        (1, 0) => a(r / 2, n / 2),
        _ => BigInt::zero(),
    }
}

/// `Pal(n)`: palindromic compositions of `n`.
pub fn palindromes(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    BigInt::one() << (n / 2)
}

/// `Pal(n, k̂)`: palindromic compositions of `n` with no part `k`.
pub fn palindromes_without(n: i64, k: i64) -> BigInt {
    assert!(k >= 1);
    (0..=step_limit(n, k))
        .map(|j| sign((j + 1) / 2) * palindromic_tilings(j, n - j * k))
        .sum()
}
