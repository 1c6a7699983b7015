//! Exact, memoized evaluation of the tiling counts and Fibonacci-type
//! sequences.
//!
//! Every function takes signed size arguments and returns zero when a size
//! argument is negative, so alternating sums such as
//! `Σ_j (-1)^j a(j, n - jk)` can simply run until their terms vanish.
//!
//! Memo tables are process-wide and append-only. Concurrent callers may race
//! to fill the same cell; the first value stored wins and any duplicate is
//! identical by determinism.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// A closed form evaluated to a value that is not an integer.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("non-integer result {0}")]
pub struct NonIntegral(pub BigRational);

/// Keyed cache from parameter tuples to exact values.
pub struct MemoTable<K> {
    cells: RwLock<HashMap<K, BigInt>>,
}

impl<K: Hash + Eq> MemoTable<K> {
    pub fn new() -> Self {
        Self {
            cells: RwLock::new(HashMap::new()),
        }
    }

    pub fn get(&self, key: &K) -> Option<BigInt> {
        self.cells.read().unwrap().get(key).cloned()
    }

    /// Stores `value` unless the key is already present; returns the stored
    /// value either way.
    pub fn insert(&self, key: K, value: BigInt) -> BigInt {
        self.cells
            .write()
            .unwrap()
            .entry(key)
            .or_insert(value)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.cells.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<K: Hash + Eq> Default for MemoTable<K> {
    fn default() -> Self {
        Self::new()
    }
}

/// Growable prefix cache for one-index sequences, one prefix per family key.
struct PrefixMemo<K> {
    prefixes: RwLock<HashMap<K, Vec<BigInt>>>,
}

impl<K: Hash + Eq + Clone> PrefixMemo<K> {
    fn new() -> Self {
        Self {
            prefixes: RwLock::new(HashMap::new()),
        }
    }

    /// Returns term `index`, extending the stored prefix with `next` (which
    /// sees all earlier terms) as needed.
    fn term(&self, key: &K, index: usize, next: impl Fn(&[BigInt]) -> BigInt) -> BigInt {
        if let Some(v) = self
            .prefixes
            .read()
            .unwrap()
            .get(key)
            .and_then(|p| p.get(index))
        {
            return v.clone();
        }
        let mut guard = self.prefixes.write().unwrap();
        let prefix = guard.entry(key.clone()).or_default();
        while prefix.len() <= index {
            let v = next(prefix);
            prefix.push(v);
        }
        prefix[index].clone()
    }
}

static A: LazyLock<MemoTable<(i64, i64)>> = LazyLock::new(MemoTable::new);
static A_S: LazyLock<MemoTable<(i64, i64, i64)>> = LazyLock::new(MemoTable::new);
static A_K: LazyLock<MemoTable<(i64, i64, u32)>> = LazyLock::new(MemoTable::new);
static A_S_K: LazyLock<MemoTable<(i64, i64, i64, u32)>> = LazyLock::new(MemoTable::new);
static FIB: LazyLock<PrefixMemo<u32>> = LazyLock::new(PrefixMemo::new);
static NEG_FIB: LazyLock<PrefixMemo<u32>> = LazyLock::new(PrefixMemo::new);
static PELL: LazyLock<PrefixMemo<()>> = LazyLock::new(PrefixMemo::new);

/// `2^e` as an exact rational; `e` may be negative.
pub fn pow2(e: i64) -> BigRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// Binomial coefficient with a generalized upper index:
/// `n(n-1)…(n-k+1)/k!` for `k ≥ 0`, and zero for `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub(crate) fn into_integer(value: BigRational) -> Result<BigInt, NonIntegral> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(NonIntegral(value))
    }
}

/// `a(r, n)`: two-toned tilings with `r` red squares and white total `n`.
///
/// Computed by the recurrence `a(r,n) = a(r-1,n) + 2a(r,n-1) - a(r-1,n-1)`
/// with `a(r,0) = 1` and `a(0,n) = 2^{n-1}`.
pub fn a(r: i64, n: i64) -> BigInt {
    if r < 0 || n < 0 {
        return BigInt::zero();
    }
    if let Some(v) = A.get(&(r, n)) {
        return v;
    }
    for i in 0..=r {
        for j in 0..=n {
            if A.get(&(i, j)).is_some() {
                continue;
            }
            let v = if j == 0 {
                BigInt::one()
            } else if i == 0 {
                BigInt::one() << (j - 1)
            } else {
                let up = A.get(&(i - 1, j)).unwrap();
                let left = A.get(&(i, j - 1)).unwrap();
                let diag = A.get(&(i - 1, j - 1)).unwrap();
                up + (left << 1) - diag
            };
            A.insert((i, j), v);
        }
    }
    A.get(&(r, n)).unwrap()
}

/// `a(r, n) = 2^{n-r-1} Σ_{j=0}^{r} C(r+1, j) C(n+r-j, n)`, evaluated
/// exactly. Agrees with [`a`] whenever [`a_explicit_is_exact`] holds; at
/// `n = 0` the value is not an integer and the error carries it.
pub fn a_explicit(r: i64, n: i64) -> Result<BigInt, NonIntegral> {
    if r < 0 || n < 0 {
        return Ok(BigInt::zero());
    }
    let sum: BigInt = (0..=r)
        .map(|j| binomial(r + 1, j) * binomial(n + r - j, n))
        .sum();
    into_integer(pow2(n - r - 1) * BigRational::from_integer(sum))
}

/// Domain on which [`a_explicit`] equals [`a`].
pub fn a_explicit_is_exact(r: i64, n: i64) -> bool {
    r >= 0 && n >= 1
}

/// `a_s(r, n)`: tilings of a `1 × (n+r+s)` strip with `r` red squares whose
/// final `s` tiles are white. Equals the `s`-fold cumulative sum of
/// `a(r, ·)`; `a_0 = a`.
pub fn a_s(s: i64, r: i64, n: i64) -> BigInt {
    if s < 0 || r < 0 || n < 0 {
        return BigInt::zero();
    }
    if s == 0 {
        return a(r, n);
    }
    if let Some(v) = A_S.get(&(s, r, n)) {
        return v;
    }
    for level in 1..=s {
        let mut running = BigInt::zero();
        for j in 0..=n {
            running += if level == 1 {
                a(r, j)
            } else {
                A_S.get(&(level - 1, r, j)).unwrap()
            };
            A_S.insert((level, r, j), running.clone());
        }
    }
    A_S.get(&(s, r, n)).unwrap()
}

/// `a_s(r, n) = Σ_{j=0}^{n} C(n-1+s, j-1+s) C(r+j, r)`.
///
/// The `s = 0, n = 0` corner evaluates to zero rather than one.
pub fn a_s_binomial(s: i64, r: i64, n: i64) -> BigInt {
    if s < 0 || r < 0 || n < 0 {
        return BigInt::zero();
    }
    (0..=n)
        .map(|j| binomial(n - 1 + s, j - 1 + s) * binomial(r + j, r))
        .sum()
}

/// `a_r(r, n) = 2^{n-1} (C(n+r, r) + C(n+r-1, r-1))`. Not an integer at
/// `r = n = 0`.
pub fn a_diag(r: i64, n: i64) -> Result<BigInt, NonIntegral> {
    if r < 0 || n < 0 {
        return Ok(BigInt::zero());
    }
    let sum = binomial(n + r, r) + binomial(n + r - 1, r - 1);
    into_integer(pow2(n - 1) * BigRational::from_integer(sum))
}

/// `a_{r+1}(r, n) = 2^n C(n+r, r)`.
pub fn a_diag_plus(r: i64, n: i64) -> BigInt {
    if r < 0 || n < 0 {
        return BigInt::zero();
    }
    binomial(n + r, r) << n
}

/// `a(r, n, k)`: tilings whose white tiles have length at most `k`.
///
/// Built as the `r`-th convolution of `a(0, ·, k) = F(· + 1, k)`. The
/// single-sequence recurrence `a(r,n,k) = Σ_{j=1}^{k} a(r,n-j,k)` is only
/// valid for `r = 0` and is not used.
pub fn a_k(r: i64, n: i64, k: u32) -> BigInt {
    if r < 0 || n < 0 {
        return BigInt::zero();
    }
    if r == 0 {
        return fibonacci_k(n + 1, k);
    }
    if let Some(v) = A_K.get(&(r, n, k)) {
        return v;
    }
    let base: Vec<BigInt> = (0..=n).map(|j| fibonacci_k(j + 1, k)).collect();
    for level in 1..=r {
        for m in 0..=n {
            if A_K.get(&(level, m, k)).is_some() {
                continue;
            }
            let v: BigInt = (0..=m)
                .map(|j| {
                    let prev = if level == 1 {
                        base[(m - j) as usize].clone()
                    } else {
                        A_K.get(&(level - 1, m - j, k)).unwrap()
                    };
                    prev * &base[j as usize]
                })
                .sum();
            A_K.insert((level, m, k), v);
        }
    }
    A_K.get(&(r, n, k)).unwrap()
}

/// `a_s(r, n, k) = Σ_{j=0}^{n} a_{s-1}(r, j, k)` with `a_0(r,n,k) = a(r,n,k)`.
pub fn a_s_k(s: i64, r: i64, n: i64, k: u32) -> BigInt {
    if s < 0 || r < 0 || n < 0 {
        return BigInt::zero();
    }
    if s == 0 {
        return a_k(r, n, k);
    }
    if let Some(v) = A_S_K.get(&(s, r, n, k)) {
        return v;
    }
    for level in 1..=s {
        let mut running = BigInt::zero();
        for j in 0..=n {
            running += if level == 1 {
                a_k(r, j, k)
            } else {
                A_S_K.get(&(level - 1, r, j, k)).unwrap()
            };
            A_S_K.insert((level, r, j, k), running.clone());
        }
    }
    A_S_K.get(&(s, r, n, k)).unwrap()
}

/// `F(n, k)`, the `n`-th `k`-step Fibonacci number: zero for `n ≤ 0`, one at
/// `n = 1`, and the sum of the previous `k` terms afterwards. `k = 0` gives
/// the sequence that is one at `n = 1` and zero elsewhere.
pub fn fibonacci_k(n: i64, k: u32) -> BigInt {
    if n <= 0 {
        return BigInt::zero();
    }
    // prefix[i] = F(i + 1, k)
    FIB.term(&k, (n - 1) as usize, |prefix| {
        if prefix.is_empty() {
            return BigInt::one();
        }
        prefix.iter().rev().take(k as usize).sum()
    })
}

/// `negF(n, k)`: the `k`-step recurrence run in both directions from the
/// seeds `negF(1) = 1` and `negF(0) = … = negF(-(k-2)) = 0`.
///
/// Panics if `k = 0`.
pub fn neg_fibonacci_k(n: i64, k: u32) -> BigInt {
    assert!(k >= 1, "negF is defined for k ≥ 1");
    if n >= 1 {
        return fibonacci_k(n, k);
    }
    let k = k as usize;
    // prefix[i] = negF(1 - i, k)
    NEG_FIB.term(&(k as u32), (1 - n) as usize, |prefix| {
        let i = prefix.len();
        if i == 0 {
            BigInt::one()
        } else if i < k {
            BigInt::zero()
        } else {
            let tail: BigInt = prefix[i - (k - 1)..].iter().sum();
            &prefix[i - k] - tail
        }
    })
}

/// `F(n, k, r)`: the `r`-th convolution of the `k`-step Fibonacci numbers,
/// indexed so that `F(n+1, k, r) = a(r, n, k)` and `F(n, k, 0) = F(n, k)`.
pub fn fibonacci_k_conv(n: i64, k: u32, r: i64) -> BigInt {
    a_k(r, n - 1, k)
}

/// Pell numbers: `P(0) = 0`, `P(1) = 1`, `P(n) = 2P(n-1) + P(n-2)`.
pub fn pell(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    PELL.term(&(), n as usize, |prefix| match prefix.len() {
        0 => BigInt::zero(),
        1 => BigInt::one(),
        i => (&prefix[i - 1] << 1) + &prefix[i - 2],
    })
}

/// `(-1)^e` for any integer `e`.
pub fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn a_spot_values() {
        assert_eq!(a(2, 3), big(25));
        assert_eq!(a(7, 0), big(1));
        assert_eq!(a(3, 4), big(129));
        assert_eq!(a(5, 5), big(1182));
        assert_eq!(a(-1, 4), big(0));
        assert_eq!(a(2, -3), big(0));
    }

    #[test]
    fn a_explicit_values() {
        assert_eq!(a_explicit(1, 4), Ok(big(28)));
        assert_eq!(a_explicit(0, 5), Ok(big(16)));
        assert_eq!(a_explicit(5, 5), Ok(big(1182)));
        assert!(!a_explicit_is_exact(1, 0));
        let err = a_explicit(1, 0).unwrap_err();
        assert_eq!(err.0, BigRational::new(big(3), big(4)));
    }

    #[test]
    fn a_s_values() {
        assert_eq!(a_s(1, 2, 2), big(13));
        assert_eq!(a_s(2, 2, 4), big(160));
        for s in 0..5 {
            for r in 0..5 {
                assert_eq!(a_s(s, r, 0), big(1));
            }
        }
        assert_eq!(a_s_binomial(1, 1, 3), big(20));
        assert_eq!(a_s_binomial(0, 2, 3), big(25));
        assert_eq!(a_s_binomial(2, 2, 1), big(5));
    }

    #[test]
    fn diagonal_closed_forms() {
        assert_eq!(a_diag(2, 2), Ok(big(18)));
        assert_eq!(a_diag(1, 2), Ok(big(8)));
        assert!(a_diag(0, 0).is_err());
        assert_eq!(a_diag_plus(1, 2), big(12));
        assert_eq!(a_diag_plus(1, 2), a_s(2, 1, 2));
    }

    #[test]
    fn a_k_values() {
        assert_eq!(a_k(0, 5, 3), big(13));
        assert_eq!(a_k(1, 4, 3), big(26));
        assert_eq!(a_k(1, 1, 1), big(2));
        assert_eq!(a_k(1, 3, 2), big(10));
        assert_eq!(a_k(3, 2, 0), big(0));
        assert_eq!(a_k(3, 0, 0), big(1));
    }

    #[test]
    fn fibonacci_values() {
        let tribonacci: Vec<BigInt> = (-1..=12).map(|n| fibonacci_k(n, 3)).collect();
        let expected = [0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504];
        assert_eq!(tribonacci, expected.map(big));
        assert_eq!(fibonacci_k(8, 3), big(44));
        assert_eq!(fibonacci_k(0, 5), big(0));
        assert_eq!(fibonacci_k(4, 2), big(3));
    }

    #[test]
    fn negative_fibonacci_table() {
        let got: Vec<BigInt> = (-9..=1).map(|n| neg_fibonacci_k(n, 3)).collect();
        let expected = [-8, 4, 1, -3, 2, 0, -1, 1, 0, 0, 1];
        assert_eq!(got, expected.map(big));
        assert_eq!(neg_fibonacci_k(-4, 2), big(-3));
    }

    #[test]
    fn convolution_values() {
        assert_eq!(fibonacci_k_conv(5, 3, 1), big(26));
        assert_eq!(fibonacci_k_conv(6, 3, 2), big(153));
        assert_eq!(fibonacci_k_conv(7, 3, 2), big(359));
        for n in 0..10 {
            assert_eq!(fibonacci_k_conv(n, 3, 0), fibonacci_k(n, 3));
        }
    }

    #[test]
    fn pell_values() {
        let got: Vec<BigInt> = (0..=6).map(pell).collect();
        assert_eq!(got, [0, 1, 2, 5, 12, 29, 70].map(big));
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(2, 5), big(0));
        assert_eq!(binomial(-1, 3), big(-1));
        assert_eq!(binomial(-3, 2), big(6));
        assert_eq!(binomial(4, -1), big(0));
    }

    #[test]
    fn memo_is_idempotent() {
        let memo: MemoTable<u8> = MemoTable::new();
        assert_eq!(memo.insert(1, big(5)), big(5));
        assert_eq!(memo.insert(1, big(6)), big(5));
        assert_eq!(memo.len(), 1);
        assert_eq!(a(6, 6), a(6, 6));
    }

    #[test]
    fn concurrent_fill_agrees() {
        let values: Vec<BigInt> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..8)
                .map(|t| scope.spawn(move || a_s(3, 4 + t % 2, 20) + a_k(3, 18, 4)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for (t, v) in values.iter().enumerate() {
            assert_eq!(v, &values[t % 2]);
        }
    }
}
