//! Truncated formal power series over exact rationals, used to certify
//! generating-function claims coefficient by coefficient.
//!
//! A [`TruncatedSeries`] of order `N` stores coefficients `0..=N`. All
//! arithmetic stays at the smaller order of its operands, and coefficient `i`
//! of a result only ever depends on coefficients `0..=i` of the inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("not expandable: denominator has zero constant term")]
    NotExpandable,
}

/// Polynomial with integer coefficients; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// The monomial `c·x^m`.
    pub fn monomial(c: i64, m: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[m] = BigInt::from(c);
        Self::new(coeffs)
    }

    /// `1 - x - x^2 - … - x^k`.
    pub fn fibonacci_denominator(k: usize) -> Self {
        let mut coeffs = vec![-1i64; k + 1];
        coeffs[0] = 1;
        Self::from_ints(&coeffs)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// A generating function `numerator / denominator` with integer
/// polynomials. Expandable as a power series iff the denominator's constant
/// term is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl RationalGF {
    pub fn new(numerator: Poly, denominator: Poly) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    pub fn from_ints(numerator: &[i64], denominator: &[i64]) -> Self {
        Self::new(Poly::from_ints(numerator), Poly::from_ints(denominator))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.numerator.pow(e), self.denominator.pow(e))
    }

    pub fn recip(&self) -> Self {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    pub fn is_expandable(&self) -> bool {
        !self.denominator.coeff(0).is_zero()
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: &RationalGF) -> RationalGF {
        RationalGF::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
    }
}

/// Coefficients `0..=order` of a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::from_coeffs(
            (0..=order)
                .map(|i| BigRational::from_integer(p.coeff(i)))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficients as integers, or `None` if any is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `x^m`, keeping the order.
    pub fn shift(&self, m: usize) -> Self {
        let order = self.order();
        Self::from_coeffs(
            (0..=order)
                .map(|i| {
                    if i >= m {
                        self.coeffs[i - m].clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        )
    }

    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::NotExpandable);
        }
        let c0_inv = c0.recip();
        let order = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        out.push(c0_inv.clone());
        for i in 1..=order {
            let mut acc = BigRational::zero();
            for j in 1..=i {
                acc += &self.coeffs[j] * &out[i - j];
            }
            out.push(-acc * &c0_inv);
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    fn common_order(&self, rhs: &Self) -> usize {
        self.order().min(rhs.order())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.common_order(rhs);
        TruncatedSeries::from_coeffs(
            (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.common_order(rhs);
        TruncatedSeries::from_coeffs(
            (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.common_order(rhs);
        TruncatedSeries::from_coeffs(
            (0..=order)
                .map(|i| (0..=i).map(|j| &self.coeffs[j] * &rhs.coeffs[i - j]).sum())
                .collect(),
        )
    }
}

/// Maclaurin coefficients `0..=order` of `gf`.
pub fn expand(gf: &RationalGF, order: usize) -> Result<TruncatedSeries, SeriesError> {
    if !gf.is_expandable() {
        return Err(SeriesError::NotExpandable);
    }
    let num = TruncatedSeries::from_poly(&gf.numerator, order);
    let den = TruncatedSeries::from_poly(&gf.denominator, order);
    num.div(&den)
}

/// `coeffs[i] = f(i)` for `i = 0..=order`.
pub fn series_of_sequence(f: impl Fn(i64) -> BigInt, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(
        (0..=order as i64)
            .map(|i| BigRational::from_integer(f(i)))
            .collect(),
    )
}

/// Index of the first coefficient where `lhs` and `rhs` differ, up to the
/// smaller order.
pub fn first_mismatch(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Option<usize> {
    (0..=lhs.common_order(rhs)).find(|&i| lhs.coeffs[i] != rhs.coeffs[i])
}

/// Outcome of comparing a generating function with a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfCheck {
    pub matches: bool,
    pub first_mismatch: Option<usize>,
}

/// Checks that `gf` generates `f(0), f(1), …, f(order)`. A
/// non-expandable `gf` fails at index 0.
pub fn verify_gf(gf: &RationalGF, f: impl Fn(i64) -> BigInt, order: usize) -> GfCheck {
    let mismatch = match expand(gf, order) {
        Ok(series) => first_mismatch(&series, &series_of_sequence(f, order)),
        Err(_) => Some(0),
    };
    GfCheck {
        matches: mismatch.is_none(),
        first_mismatch: mismatch,
    }
}

/// Expands `num(x, y) / den(x, y)` by bivariate long division.
/// `num[i][j]` is the coefficient of `x^i y^j`. Returns, for each
/// `i = 0..=order_x`, the coefficient of `x^i` as a series in `y`.
pub fn expand_bivariate(
    num: &[Vec<i64>],
    den: &[Vec<i64>],
    order_x: usize,
    order_y: usize,
) -> Result<Vec<TruncatedSeries>, SeriesError> {
    let at = |m: &[Vec<i64>], i: usize, j: usize| -> BigRational {
        let c = m.get(i).and_then(|row| row.get(j)).copied().unwrap_or(0);
        BigRational::from_integer(c.into())
    };
    let d00 = at(den, 0, 0);
    if d00.is_zero() {
        return Err(SeriesError::NotExpandable);
    }
    let mut b = vec![vec![BigRational::zero(); order_y + 1]; order_x + 1];
    for i in 0..=order_x {
        for j in 0..=order_y {
            let mut acc = at(num, i, j);
            for p in 0..=i {
                for q in 0..=j {
                    if p == 0 && q == 0 {
                        continue;
                    }
                    let d = at(den, p, q);
                    if !d.is_zero() {
                        acc -= d * &b[i - p][j - q];
                    }
                }
            }
            b[i][j] = acc / &d00;
        }
    }
    Ok(b.into_iter().map(TruncatedSeries::from_coeffs).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{a, a_s, fibonacci_k};
    use proptest::prelude::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn expand_examples() {
        let compositions = RationalGF::from_ints(&[1, -1], &[1, -2]);
        assert_eq!(
            ints(&expand(&compositions, 5).unwrap()),
            [1, 1, 2, 4, 8, 16]
        );
        let geometric = RationalGF::from_ints(&[1], &[1, -1]);
        assert_eq!(ints(&expand(&geometric, 3).unwrap()), [1, 1, 1, 1]);
        let pell = RationalGF::from_ints(&[1], &[1, -2, -1]);
        assert_eq!(ints(&expand(&pell, 5).unwrap()), [1, 2, 5, 12, 29, 70]);
    }

    #[test]
    fn not_expandable() {
        let gf = RationalGF::from_ints(&[1], &[0, 1]);
        assert_eq!(expand(&gf, 3), Err(SeriesError::NotExpandable));
        assert_eq!(
            verify_gf(&gf, |_| BigInt::zero(), 3).first_mismatch,
            Some(0)
        );
    }

    #[test]
    fn sequence_series() {
        assert_eq!(
            ints(&series_of_sequence(|n| a(2, n), 5)),
            [1, 3, 9, 25, 66, 168]
        );
        assert_eq!(ints(&series_of_sequence(|_| BigInt::zero(), 4)), [0; 5]);
        assert_eq!(
            ints(&series_of_sequence(|n| a_s(1, 1, n), 4)),
            [1, 3, 8, 20, 48]
        );
    }

    #[test]
    fn verify_examples() {
        let gf = RationalGF::from_ints(&[1, -1], &[1, -2]).pow(3);
        assert!(verify_gf(&gf, |n| a(2, n), 12).matches);
        let trib = RationalGF::new(Poly::one(), Poly::fibonacci_denominator(3));
        assert!(verify_gf(&trib, |n| fibonacci_k(n + 1, 3), 12).matches);
        let perturbed = RationalGF::from_ints(&[1, -1], &[1, -2, 0, 1]).pow(3);
        let check = verify_gf(&perturbed, |n| a(2, n), 12);
        assert!(!check.matches);
        assert_eq!(check.first_mismatch, Some(3));
    }

    #[test]
    fn shift_and_division() {
        let s = TruncatedSeries::from_ints(&[1, 2, 3, 4]);
        assert_eq!(ints(&s.shift(2)), [0, 0, 1, 2]);
        let q = s.div(&s).unwrap();
        assert_eq!(ints(&q), [1, 0, 0, 0]);
    }

    #[test]
    fn bivariate_slices() {
        // (1 - y) / (1 - 2y - x + xy)
        let num = vec![vec![1, -1]];
        let den = vec![vec![1, -2], vec![-1, 1]];
        let rows = expand_bivariate(&num, &den, 4, 6).unwrap();
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(*row, series_of_sequence(|n| a(r as i64, n), 6));
        }
    }

    fn small_series() -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(-9i64..=9, 7).prop_map(|c| TruncatedSeries::from_ints(&c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_series(), b in small_series(), c in small_series()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &TruncatedSeries::one(a.order()), a.clone());
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn division_inverts_multiplication(
            num in proptest::collection::vec(-9i64..=9, 1..6),
            mut den in proptest::collection::vec(-9i64..=9, 1..6),
        ) {
            if den[0] == 0 {
                den[0] = 1;
            }
            let order = 8;
            let q = expand(&RationalGF::from_ints(&num, &den), order).unwrap();
            let back = &q * &TruncatedSeries::from_poly(&Poly::from_ints(&den), order);
            prop_assert_eq!(back, TruncatedSeries::from_poly(&Poly::from_ints(&num), order));
        }

        #[test]
        fn coefficient_locality(a in small_series(), b in small_series(), cut in 0usize..7) {
            let full = &a * &b;
            let truncated = &a.truncate(cut) * &b.truncate(cut);
            prop_assert_eq!(full.truncate(cut), truncated);
        }
    }
}
