//! The registry contents. Each record pairs a formula with an independent
//! route to the same number: brute-force enumeration where it is feasible,
//! otherwise a power-series expansion or a separately coded recurrence.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Domain, Eval, Form, IdentityRecord, Kind, Relation, Scale, Value};
use crate::sequences::{
    a, a_explicit, a_k, a_s, a_s_k, binomial, fibonacci_k, fibonacci_k_conv, neg_fibonacci_k, pell,
    pow2, sign,
};
use crate::series::{expand, Poly, RationalGF, TruncatedSeries};
use crate::stats::{self, oracle as so};
use crate::tiling::{Oracle, Tile, TilingFilter};

fn v(x: impl Into<Value>) -> Value {
    x.into()
}

fn o() -> Oracle {
    Oracle::default()
}

fn u(x: i64) -> u32 {
    u32::try_from(x).expect("oracle parameters are nonnegative")
}

fn q(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

fn grid(ranges: &[(i64, i64)], keep: impl Fn(&[i64]) -> bool) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for &(lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out.retain(|p| keep(p));
    out
}

fn all(_: &[i64]) -> bool {
    true
}

fn sum(range: std::ops::RangeInclusive<i64>, f: impl Fn(i64) -> BigInt) -> BigInt {
    range.map(f).sum()
}

fn sum_q(range: std::ops::RangeInclusive<i64>, f: impl Fn(i64) -> BigRational) -> BigRational {
    range.map(f).fold(BigRational::zero(), |acc, x| acc + x)
}

/// `((1-x)/(1-2x))^e`.
fn u_pow(e: u32) -> RationalGF {
    RationalGF::from_ints(&[1, -1], &[1, -2]).pow(e)
}

/// `(1/(1-x))^e`.
fn geometric_pow(e: u32) -> RationalGF {
    RationalGF::from_ints(&[1], &[1, -1]).pow(e)
}

fn monomial(m: usize) -> RationalGF {
    RationalGF::new(Poly::monomial(1, m), Poly::one())
}

fn coeff(gf: &RationalGF, n: i64) -> Value {
    if n < 0 {
        return v(0);
    }
    match expand(gf, n as usize) {
        Ok(s) => v(s.coeff(n as usize).clone()),
        Err(e) => Value::undefined(e.to_string()),
    }
}

fn series_coeff(s: &TruncatedSeries, n: i64) -> Value {
    if n < 0 {
        v(0)
    } else {
        v(s.coeff(n as usize).clone())
    }
}

/// `(1 - x - … - x^k)` as a polynomial; `k = 0` gives `1`.
fn fib_den(k: i64) -> Poly {
    Poly::fibonacci_denominator(k as usize)
}

fn a_series(r: i64, n: i64) -> Value {
    coeff(&u_pow(r as u32 + 1), n)
}

/// `m(j, n)` with the zero convention for negative arguments.
fn m(j: i64, n: i64) -> BigInt {
    stats::palindromic_tilings(j, n)
}

/// Terms of an alternating sum over `j ≥ lo` vanish once `n - j·step < 0`.
fn last_term(n: i64, step: i64) -> i64 {
    if n < 0 {
        -1
    } else {
        n / step.max(1) + 1
    }
}

impl IdentityRecord {
    fn new(
        id: &'static str,
        citation: &'static str,
        params: &'static [&'static str],
        domain: Domain,
        eval: Eval,
    ) -> Self {
        Self {
            id,
            citation,
            kind: Kind::Identity,
            params,
            printed: Form {
                name: "printed",
                statement: citation,
                domain,
                eval,
                relation: Relation::Equal,
            },
            correction: None,
            candidates: Vec::new(),
            note: None,
        }
    }

    fn conjecture(mut self) -> Self {
        self.kind = Kind::Conjecture;
        self
    }

    fn nondecreasing(mut self) -> Self {
        self.printed.relation = Relation::Nondecreasing;
        self
    }

    fn note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    fn corrected(mut self, statement: &'static str, domain: Domain, eval: Eval) -> Self {
        self.correction = Some(Form {
            name: "corrected",
            statement,
            domain,
            eval,
            relation: Relation::Equal,
        });
        self
    }

    fn candidate(
        mut self,
        name: &'static str,
        statement: &'static str,
        domain: Domain,
        eval: Eval,
    ) -> Self {
        self.candidates.push(Form {
            name,
            statement,
            domain,
            eval,
            relation: Relation::Equal,
        });
        self
    }
}

static REGISTRY: LazyLock<Vec<IdentityRecord>> = LazyLock::new(build);

/// Every record, in definition order.
pub fn registry() -> &'static [IdentityRecord] {
    &REGISTRY
}

fn build() -> Vec<IdentityRecord> {
    let mut r = Vec::new();
    tilings(&mut r);
    fibonacci(&mut r);
    convolutions(&mut r);
    parts(&mut r);
    avoidance(&mut r);
    largest(&mut r);
    frozen(&mut r);
    replacement(&mut r);
    runs(&mut r);
    pell_numbers(&mut r);
    palindromes(&mut r);
    examples(&mut r);
    r
}

const RN: &[&str] = &["r", "n"];
const SRN: &[&str] = &["s", "r", "n"];
const NK: &[&str] = &["n", "k"];
const NKR: &[&str] = &["n", "k", "r"];
const N: &[&str] = &["n"];

fn tilings(out: &mut Vec<IdentityRecord>) {
    out.push(
        IdentityRecord::new(
            "a-recurrence",
            "a(r,n) = a(r-1,n) + 2a(r,n-1) - a(r-1,n-1)",
            RN,
            |s| grid(&[(2, s.bound()), (2, s.bound())], all),
            |p| {
                let (r, n) = (p[0], p[1]);
                vec![
                    a_series(r, n),
                    v(a(r - 1, n) + 2 * a(r, n - 1) - a(r - 1, n - 1)),
                ]
            },
        )
        .note("checked on the printed range r, n > 1"),
    );
    out.push(IdentityRecord::new(
        "a-initial",
        "2^{n-1} & \\text{ if } r=0,\\, n \\geq 1.",
        RN,
        |s| {
            grid(&[(0, s.bound()), (0, s.bound())], |p| {
                p[1] == 0 || p[0] == 0
            })
        },
        |p| {
            let (r, n) = (p[0], p[1]);
            let closed = if n == 0 { v(1) } else { v(pow2(n - 1)) };
            vec![a_series(r, n), closed, v(a(r, n))]
        },
    ));
    out.push(IdentityRecord::new(
        "a-gf",
        "\\sum_{n \\geq 0} a(r,n)x^n = \\left(\\frac{1-x}{1-2x}\\right)^{r+1}",
        RN,
        |s| grid(&[(0, s.bound()), (0, s.bound())], all),
        |p| vec![v(a(p[0], p[1])), a_series(p[0], p[1])],
    ));
    out.push(IdentityRecord::new(
        "a-tilings",
        "A(x,y) = \\sum_{r \\geq 0} \\sum_{n \\geq 0} a(r,n)x^ry^n.",
        RN,
        |s| {
            grid(&[(0, s.oracle_bound()), (0, s.oracle_bound())], |p| {
                p[0] + p[1] <= s.oracle_bound()
            })
        },
        |p| {
            let count = o().count_tilings(u(p[0]), u(p[1]), &TilingFilter::none());
            vec![v(count), v(a(p[0], p[1]))]
        },
    ));
    out.push(IdentityRecord::new(
        "a-bivariate-gf",
        "\\frac{1-y}{1-2y-x+xy}",
        RN,
        |s| grid(&[(0, s.bound()), (0, s.bound())], all),
        |p| {
            let (r, n) = (p[0] as usize, p[1] as usize);
            let rows =
                crate::series::expand_bivariate(&[vec![1, -1]], &[vec![1, -2], vec![-1, 1]], r, n)
                    .expect("constant term is one");
            vec![v(a(p[0], p[1])), v(rows[r].coeff(n).clone())]
        },
    ));
    out.push(IdentityRecord::new(
        "a-convolution",
        "a(r,n) = \\sum_{j = 0}^n a(r-1,n-j)a(0,j).",
        RN,
        |s| grid(&[(1, s.bound()), (0, s.bound())], all),
        |p| {
            let (r, n) = (p[0], p[1]);
            vec![a_series(r, n), v(sum(0..=n, |j| a(r - 1, n - j) * a(0, j)))]
        },
    ));
    out.push(IdentityRecord::new(
        "as-cumulative",
        "a_s(r,n) = \\sum_{i = 0}^n a_{s-1}(r,i),",
        SRN,
        |s| {
            let b = s.oracle_bound();
            grid(&[(1, b), (0, b), (0, b)], |p| p[0] + p[1] + p[2] <= b)
        },
        |p| {
            let (s, r, n) = (p[0], p[1], p[2]);
            let count = o().count_tilings(u(r), u(n), &TilingFilter::suffix(u(s)));
            vec![v(count), v(sum(0..=n, |i| a_s(s - 1, r, i)))]
        },
    ));
    out.push(IdentityRecord::new(
        "as-gf",
        "\\sum_{n \\geq 0} a_s(r,n)x^n = \\frac{1}{(1-x)^s}\\left(\\frac{1-x}{1-2x}\\right)^{r+1}",
        SRN,
        |s| grid(&[(0, s.bound()), (0, s.bound()), (0, s.bound())], all),
        |p| {
            let (s, r, n) = (p[0], p[1], p[2]);
            let gf = &geometric_pow(s as u32) * &u_pow(r as u32 + 1);
            vec![v(a_s(s, r, n)), coeff(&gf, n)]
        },
    ));
    out.push(IdentityRecord::new(
        "diag-gf",
        "\\sum_{n \\geq 0} a_r(r,n)x^n = \\frac{1-x}{(1-2x)^{r+1}},",
        RN,
        |s| grid(&[(0, s.bound()), (0, s.bound())], all),
        |p| {
            let (r, n) = (p[0], p[1]);
            let gf = RationalGF::new(
                Poly::from_ints(&[1, -1]),
                Poly::from_ints(&[1, -2]).pow(r as u32 + 1),
            );
            vec![v(a_s(r, r, n)), coeff(&gf, n)]
        },
    ));
    out.push(
        IdentityRecord::new(
            "diag-closed",
            "a_r(r,n) = 2^{n-1}\\left(\\binom{n+r}{r} + \\binom{n+r-1}{r-1}\\right),",
            RN,
            |s| grid(&[(0, s.bound()), (0, s.bound())], all),
            diag_closed,
        )
        .corrected(
            "a_r(r,n) = 2^{n-1}\\left(\\binom{n+r}{r} + \\binom{n+r-1}{r-1}\\right) \\text{ for } (r,n) \\neq (0,0)",
            |s| grid(&[(0, s.bound()), (0, s.bound())], |p| p[0] + p[1] > 0),
            diag_closed,
        ),
    );
    out.push(IdentityRecord::new(
        "diag-plus-gf",
        "\\sum_{n \\geq 0} a_{r+1}(r,n)x^n = \\frac{1}{(1-2x)^{r+1}},",
        RN,
        |s| grid(&[(0, s.bound()), (0, s.bound())], all),
        |p| {
            let (r, n) = (p[0], p[1]);
            let gf = RationalGF::new(Poly::one(), Poly::from_ints(&[1, -2]).pow(r as u32 + 1));
            vec![v(a_s(r + 1, r, n)), coeff(&gf, n)]
        },
    ));
    out.push(IdentityRecord::new(
        "diag-plus-closed",
        "a_{r+1}(r,n) = 2^n\\binom{n+r}{r}.",
        RN,
        |s| grid(&[(0, s.bound()), (0, s.bound())], all),
        |p| {
            let (r, n) = (p[0], p[1]);
            vec![v(a_s(r + 1, r, n)), v(pow2(n) * q(binomial(n + r, r)))]
        },
    ));
    out.push(
        IdentityRecord::new(
            "a-from-cumulative",
            "a(r,n) = a_1(r,n-1) + a(r-1,n).",
            RN,
            |s| grid(&[(1, s.bound()), (0, s.bound())], all),
            |p| {
                let (r, n) = (p[0], p[1]);
                vec![a_series(r, n), v(a_s(1, r, n - 1) + a(r - 1, n))]
            },
        )
        .note("checked for r ≥ 1; at r = 0 the term a(-1, n) is outside the tiling count"),
    );
    out.push(
        IdentityRecord::new(
            "as-binomial",
            "a_s(r,n) = \\sum_{j=0}^n \\binom{n-1+s}{j-1+s}\\binom{r+j}{r}.",
            SRN,
            |s| grid(&[(0, s.bound()), (0, s.bound()), (0, s.bound())], all),
            as_binomial,
        )
        .note("binomial coefficients with a negative lower index are zero")
        .corrected(
            "a_s(r,n) = \\sum_{j=0}^n \\binom{n-1+s}{j-1+s}\\binom{r+j}{r} \\text{ unless } s = n = 0",
            |s| grid(&[(0, s.bound()), (0, s.bound()), (0, s.bound())], |p| p[0] + p[2] > 0),
            as_binomial,
        ),
    );
    out.push(
        IdentityRecord::new(
            "conjecture-cumulative-closed",
            "a_s(r,n) = 2^{n-r-1+s}\\sum_{j = 0}^{r+1-s} \\binom{r+1-s}{j}\\binom{n+r-j}{n}.",
            SRN,
            |s| grid(&[(1, s.bound()), (1, s.bound()), (1, s.bound())], all),
            conjecture_1,
        )
        .conjecture()
        .note("the upper summation limit r+1-s is negative once s ≥ r+2, leaving an empty sum")
        .corrected(
            "the same formula restricted to 1 \\leq s \\leq r+1",
            |s| {
                grid(&[(1, s.bound()), (1, s.bound()), (1, s.bound())], |p| {
                    p[0] <= p[1] + 1
                })
            },
            conjecture_1,
        ),
    );
    out.push(
        IdentityRecord::new(
            "a-explicit",
            "a(r,n) = 2^{n-r-1}\\sum_{j=0}^r \\binom{r+1}{j}\\binom{n+r-j}{n}.",
            RN,
            |s| grid(&[(0, s.bound()), (0, s.bound())], all),
            |p| vec![v(a(p[0], p[1])), v(a_explicit(p[0], p[1]))],
        )
        .corrected(
            "a(r,n) = 2^{n-r-1}\\sum_{j=0}^r \\binom{r+1}{j}\\binom{n+r-j}{n} \\text{ for } n \\geq 1",
            |s| grid(&[(0, s.bound()), (1, s.bound())], all),
            |p| vec![v(a(p[0], p[1])), v(a_explicit(p[0], p[1]))],
        ),
    );
    out.push(IdentityRecord::new(
        "diag-gf-form",
        "\\frac{(1-x)^{r+1}}{(1-2x)^{r+1}(1-x)^r}.",
        RN,
        |s| grid(&[(0, s.bound()), (0, s.bound())], all),
        |p| {
            let (r, n) = (p[0], p[1]);
            let gf = RationalGF::new(
                Poly::from_ints(&[1, -1]).pow(r as u32 + 1),
                &Poly::from_ints(&[1, -2]).pow(r as u32 + 1)
                    * &Poly::from_ints(&[1, -1]).pow(r as u32),
            );
            vec![v(a_s(r, r, n)), coeff(&gf, n)]
        },
    ));
    out.push(IdentityRecord::new(
        "diag-recurrence",
        "a_r(r,n) = 2a_r(r,n-1) + a_{r-1}(r-1,n).",
        RN,
        |s| grid(&[(1, s.bound()), (1, s.bound())], all),
        |p| {
            let (r, n) = (p[0], p[1]);
            vec![
                v(a_s(r, r, n)),
                v(2 * a_s(r, r, n - 1) + a_s(r - 1, r - 1, n)),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "diag-recurrence-gf",
        "2x\\frac{(1-x)^{r+1}}{(1-2x)^{r+1}(1-x)^r} + \\frac{(1-x)^{r}}{(1-2x)^{r}(1-x)^{r-1}}.",
        RN,
        |s| grid(&[(1, s.bound()), (0, s.bound())], all),
        |p| {
            let (r, n) = (p[0] as u32, p[1]);
            let diag = |r: u32| {
                RationalGF::new(
                    Poly::from_ints(&[1, -1]).pow(r + 1),
                    &Poly::from_ints(&[1, -2]).pow(r + 1) * &Poly::from_ints(&[1, -1]).pow(r),
                )
            };
            let order = n as usize;
            let total = match (expand(&diag(r), order), expand(&diag(r - 1), order)) {
                (Ok(d), Ok(e)) => {
                    let two_x = TruncatedSeries::from_poly(&Poly::from_ints(&[0, 2]), order);
                    series_coeff(&(&(&two_x * &d) + &e), n)
                }
                _ => Value::undefined("not expandable"),
            };
            vec![v(a_s(r as i64, r as i64, n)), total]
        },
    ));
}

fn diag_closed(p: &[i64]) -> Vec<Value> {
    let (r, n) = (p[0], p[1]);
    let closed = pow2(n - 1) * q(binomial(n + r, r) + binomial(n + r - 1, r - 1));
    vec![v(a_s(r, r, n)), v(closed)]
}

fn as_binomial(p: &[i64]) -> Vec<Value> {
    let (s, r, n) = (p[0], p[1], p[2]);
    let rhs = sum(0..=n, |j| {
        binomial(n - 1 + s, j - 1 + s) * binomial(r + j, r)
    });
    vec![v(a_s(s, r, n)), v(rhs)]
}

pub(super) fn conjecture_1(p: &[i64]) -> Vec<Value> {
    let (s, r, n) = (p[0], p[1], p[2]);
    let rhs = pow2(n - r - 1 + s)
        * q(sum(0..=r + 1 - s, |j| {
            binomial(r + 1 - s, j) * binomial(n + r - j, n)
        }));
    vec![v(a_s(s, r, n)), v(rhs)]
}

fn fibonacci(out: &mut Vec<IdentityRecord>) {
    out.push(IdentityRecord::new(
        "fib-recurrence",
        "\\sum_{j=1}^k F(n-j,k) & \\text{ if } n \\geq 2.",
        NK,
        |s| grid(&[(2, s.bound() + 2), (1, 8)], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let direct = fib_series(k, n);
            vec![v(fibonacci_k(n, k as u32)), direct]
        },
    ));
    out.push(IdentityRecord::new(
        "fib-small",
        "F(j,k) = 2^{j-2}",
        &["j", "k"],
        |s| grid(&[(2, s.bound()), (2, s.bound())], |p| p[0] <= p[1]),
        |p| vec![v(fibonacci_k(p[0], p[1] as u32)), v(pow2(p[0] - 2))],
    ));
    out.push(
        IdentityRecord::new(
            "fib-tiling",
            "F(n+1,k)  = \\sum_{j \\geq 0} (-1)^ja_j(j,n-j(k+1)).",
            NK,
            |s| grid(&[(-1, s.bound()), (0, s.bound())], all),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![fib_series(k, n + 1), v(fib_tiling_sum(n, k))]
            },
        )
        .note("F(n, 0) is one at n = 1 and zero elsewhere"),
    );
    out.push(IdentityRecord::new(
        "fib-tiling-gf",
        "=& \\frac{1-x}{1-2x}\\left(\\frac{1}{1+\\frac{x^{k+1}}{1-2x}}\\right).",
        NK,
        |s| grid(&[(0, s.bound()), (0, s.bound())], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let order = n as usize;
            let inner = TruncatedSeries::one(order).add_ref(
                &expand(
                    &RationalGF::new(Poly::monomial(1, k as usize + 1), Poly::from_ints(&[1, -2])),
                    order,
                )
                .unwrap(),
            );
            let outer = expand(&u_pow(1), order).unwrap();
            let value = outer
                .div(&inner)
                .map_or_else(|e| Value::undefined(e.to_string()), |s| series_coeff(&s, n));
            vec![v(fib_tiling_sum(n, k)), value]
        },
    ));
    out.push(
        IdentityRecord::new(
            "fib-explicit",
            "\\frac{n-rk+r}{n-rk}2^{n-rk-r-1}.",
            NK,
            |s| grid(&[(1, s.bound()), (1, s.bound())], all),
            |p| {
                let (n, k) = (p[0], p[1]);
                let rhs = sum_q(0..=n / (k + 1), |r| {
                    q(sign(r) * binomial(n - r * k, r))
                        * BigRational::new((n - r * k + r).into(), (n - r * k).into())
                        * pow2(n - r * k - r - 1)
                });
                vec![v(fibonacci_k(n + 1, k as u32)), v(rhs)]
            },
        )
        .note("the summation index is read as running from r = 0"),
    );
    out.push(IdentityRecord::new(
        "negf-recurrence",
        "\\negF(n,k) = \\negF(n-1,k) + \\cdots + \\negF(n-k,k)",
        NK,
        |s| grid(&[(-3 * s.bound(), s.bound()), (1, 6)], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let rhs = sum(1..=k, |j| neg_fibonacci_k(n - j, k as u32));
            vec![v(neg_fibonacci_k(n, k as u32)), v(rhs)]
        },
    ));
    out.push(
        IdentityRecord::new(
        "negf-agrees",
        "$\\negF(n,k) = F(n,k)$",
        NK,
        |s| grid(&[(0, s.bound()), (1, s.bound())], all),
        |p| vec![v(neg_fibonacci_k(p[0], p[1] as u32)), v(fibonacci_k(p[0], p[1] as u32))],
    )
    .note("with k = 1 the recurrence runs back from negF(1,1) = 1, so negF(0,1) = 1 while F(0,1) = 0")
    .corrected(
        "\\negF(n,k) = F(n,k) \\text{ for } n \\geq 0 \\text{ unless } n = 0,\\, k = 1",
        |s| grid(&[(0, s.bound()), (1, s.bound())], |p| p[0] > 0 || p[1] > 1),
        |p| vec![v(neg_fibonacci_k(p[0], p[1] as u32)), v(fibonacci_k(p[0], p[1] as u32))],
    ));
    out.push(
        IdentityRecord::new(
            "negf-theorem",
            "\\negF(-(n+1),k) = \\sum_{j \\geq 0} (-1)^{r-jk}a_{r+jk}(r+jk,m-r-j(k+1)).",
            NK,
            |s| grid(&[(1, 3 * s.bound()), (1, 6)], all),
            |p| {
                vec![
                    v(neg_fibonacci_k(-(p[0] + 1), p[1] as u32)),
                    v(negf_sum(p[0], p[1])),
                ]
            },
        )
        .note("n + 1 = km + r with 0 ≤ r < k; the sign is evaluated as (-1) to an integer power")
        .corrected(
            "\\negF(-n,k) = \\sum_{j \\geq 0} (-1)^{r-jk}a_{r+jk}(r+jk,m-r-j(k+1))",
            |s| grid(&[(1, 3 * s.bound()), (1, 6)], all),
            |p| {
                vec![
                    v(neg_fibonacci_k(-p[0], p[1] as u32)),
                    v(negf_sum(p[0], p[1])),
                ]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "negf-gf",
            "\\sum_{i \\geq 0} b_ix^i = \\frac{1-x^k}{1-2x^k+x^{k+1}}.",
            &["i", "k"],
            |s| grid(&[(0, 3 * s.bound()), (1, 6)], all),
            |p| {
                let (i, k) = (p[0], p[1] as usize);
                let mut num = vec![0i64; k + 1];
                num[0] = 1;
                num[k] -= 1;
                let mut den = vec![0i64; k + 2];
                den[0] = 1;
                den[k] -= 2;
                den[k + 1] += 1;
                vec![
                    v(neg_fibonacci_k(1 - i, k as u32)),
                    coeff(&RationalGF::from_ints(&num, &den), i),
                ]
            },
        )
        .note("b_i = negF(1 - i, k), so b_0 = negF(1, k) = 1"),
    );
    out.push(IdentityRecord::new(
        "fib2-tiling",
        "F(n+1,2) = \\sum_{i \\geq 0} (-1)^i a_i(i,n-3i),",
        N,
        |s| grid(&[(-1, 2 * s.bound())], all),
        |p| vec![fib_series(2, p[0] + 1), v(fib_tiling_sum(p[0], 2))],
    ));
    out.push(
        IdentityRecord::new(
            "negf2-odd",
            "\\negF(-(n+1),2) = \\sum_{i \\geq 0} a_{2i}(2i,m-3i)",
            &["m"],
            |s| grid(&[(1, 2 * s.bound())], all),
            |p| vec![v(neg_fibonacci_k(-2 * p[0], 2)), v(negf2_odd_sum(p[0]))],
        )
        .note("n = 2m - 1")
        .corrected(
            "\\negF(-n,2) = \\sum_{i \\geq 0} a_{2i}(2i,m-3i) \\text{ for } n = 2m-1",
            |s| grid(&[(1, 2 * s.bound())], all),
            |p| {
                vec![
                    v(neg_fibonacci_k(-(2 * p[0] - 1), 2)),
                    v(negf2_odd_sum(p[0])),
                ]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "negf2-even",
            "\\negF(-(n+1),2) = \\sum_{i \\geq 0} (-1)^{i+1}a_{2i+1}(2i+1,m-(3i+1))",
            &["m"],
            |s| grid(&[(1, 2 * s.bound())], all),
            |p| {
                vec![
                    v(neg_fibonacci_k(-(2 * p[0] + 1), 2)),
                    v(negf2_even_sum(p[0])),
                ]
            },
        )
        .note("n = 2m")
        .corrected(
            "\\negF(-n,2) = -\\sum_{i \\geq 0} a_{2i+1}(2i+1,m-(3i+1)) \\text{ for } n = 2m",
            |s| grid(&[(1, 2 * s.bound())], all),
            |p| {
                let m = p[0];
                let rhs = -sum(0..=last_term(m, 3), |i| {
                    a_s(2 * i + 1, 2 * i + 1, m - (3 * i + 1))
                });
                vec![v(neg_fibonacci_k(-2 * m, 2)), v(rhs)]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "negf2-mirror",
            "$\\negF(n,2) = F(-n,2)$",
            N,
            |s| grid(&[(-3 * s.bound(), -1)], all),
            |p| vec![v(neg_fibonacci_k(p[0], 2)), v(fibonacci_k(-p[0], 2))],
        )
        .corrected(
            "\\negF(n,2) = (-1)^{n+1}F(-n,2) \\text{ for } n < 0",
            |s| grid(&[(-3 * s.bound(), -1)], all),
            |p| {
                vec![
                    v(neg_fibonacci_k(p[0], 2)),
                    v(sign(p[0] + 1) * fibonacci_k(-p[0], 2)),
                ]
            },
        ),
    );
}

/// `F(n, k)` read off `x / (1 - x - … - x^k)`.
fn fib_series(k: i64, n: i64) -> Value {
    coeff(&RationalGF::new(Poly::monomial(1, 1), fib_den(k)), n)
}

fn fib_tiling_sum(n: i64, k: i64) -> BigInt {
    sum(0..=last_term(n, k + 1), |j| {
        sign(j) * a_s(j, j, n - j * (k + 1))
    })
}

fn negf_sum(n: i64, k: i64) -> BigInt {
    let (m, r) = ((n + 1).div_euclid(k), (n + 1).rem_euclid(k));
    sum(0..=last_term(m - r, k + 1), |j| {
        sign(r - j * k) * a_s(r + j * k, r + j * k, m - r - j * (k + 1))
    })
}

fn negf2_odd_sum(m: i64) -> BigInt {
    sum(0..=last_term(m, 3), |i| a_s(2 * i, 2 * i, m - 3 * i))
}

fn negf2_even_sum(m: i64) -> BigInt {
    sum(0..=last_term(m, 3), |i| {
        sign(i + 1) * a_s(2 * i + 1, 2 * i + 1, m - (3 * i + 1))
    })
}

trait AddRef {
    fn add_ref(&self, other: &Self) -> Self;
}

impl AddRef for TruncatedSeries {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
}

/// Coefficient of `x^(n-1)` in `(Σ_{j≥1} F(j,k) x^(j-1))^(r+1)`.
fn conv_by_series(n: i64, k: i64, r: i64) -> Value {
    if n < 1 {
        return v(0);
    }
    let order = (n - 1) as usize;
    let base = crate::series::series_of_sequence(|j| fibonacci_k(j + 1, k as u32), order);
    series_coeff(&base.pow(r as u32 + 1), n - 1)
}

fn convolutions(out: &mut Vec<IdentityRecord>) {
    out.push(IdentityRecord::new(
        "conv-definition",
        "\\left(\\sum_{k \\geq 0} s_kx^k\\right)^{r+1}",
        NKR,
        |s| grid(&[(0, s.bound()), (1, 6), (0, 6)], all),
        |p| {
            vec![
                v(fibonacci_k_conv(p[0], p[1] as u32, p[2])),
                conv_by_series(p[0], p[1], p[2]),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "conv-zero",
        "F(n,k,0) &= F(n,k), \\\\",
        NK,
        |s| grid(&[(0, s.bound()), (1, s.bound())], all),
        |p| {
            vec![
                conv_by_series(p[0], p[1], 0),
                v(fibonacci_k(p[0], p[1] as u32)),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "conv-first",
        "F(n,k,1) &= \\sum_{j=1}^n F(n+1-j,k)F(j,k)",
        NK,
        |s| grid(&[(0, s.bound()), (1, s.bound())], all),
        |p| {
            let (n, k) = (p[0], p[1] as u32);
            vec![
                conv_by_series(n, k as i64, 1),
                v(sum(1..=n, |j| {
                    fibonacci_k(n + 1 - j, k) * fibonacci_k(j, k)
                })),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "conv-recursive",
            "F(n,k,r) &= \\sum_{j=1}^n F(n+1-j,k,r-1)F(j,k,r-1).",
            NKR,
            |s| grid(&[(0, s.bound()), (1, 6), (1, 6)], all),
            |p| {
                let (n, k, r) = (p[0], p[1] as u32, p[2]);
                vec![
                    conv_by_series(n, k as i64, r),
                    v(sum(1..=n, |j| {
                        fibonacci_k_conv(n + 1 - j, k, r - 1) * fibonacci_k_conv(j, k, r - 1)
                    })),
                ]
            },
        )
        .corrected(
            "F(n,k,r) = \\sum_{j=1}^n F(n+1-j,k,r-1)F(j,k)",
            |s| grid(&[(0, s.bound()), (1, 6), (1, 6)], all),
            |p| {
                let (n, k, r) = (p[0], p[1] as u32, p[2]);
                vec![
                    conv_by_series(n, k as i64, r),
                    v(sum(1..=n, |j| {
                        fibonacci_k_conv(n + 1 - j, k, r - 1) * fibonacci_k(j, k)
                    })),
                ]
            },
        ),
    );
    out.push(IdentityRecord::new(
        "ak-cumulative",
        "a_s(r,n,k) = \\sum_{j=0}^n a_{s-1}(r,j,k)",
        &["s", "r", "n", "k"],
        |s| grid(&[(1, 4), (0, 6), (0, s.bound()), (1, 6)], all),
        |p| {
            let (s, r, n, k) = (p[0], p[1], p[2], p[3] as u32);
            vec![
                v(a_s_k(s, r, n, k)),
                v(sum(0..=n, |j| a_s_k(s - 1, r, j, k))),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "ak-no-white",
        "$a(r,0,k) = 1$",
        &["r", "k"],
        |s| grid(&[(0, s.oracle_bound()), (1, 6)], all),
        |p| {
            vec![
                v(o().count_tilings(u(p[0]), 0, &TilingFilter::max_white(u(p[1])))),
                v(1),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "ak-no-red",
        "$F(n+1,k)$",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let count = o().count_tilings(0, u(p[0]), &TilingFilter::max_white(u(p[1])));
            vec![v(count), v(fibonacci_k(p[0] + 1, p[1] as u32))]
        },
    ));
    out.push(
        IdentityRecord::new(
            "ak-recurrence",
            "a(r,n,k) = \\sum_{j=1}^k a(r,n-j,k).",
            &["r", "n", "k"],
            |s| {
                let b = s.oracle_bound();
                grid(&[(0, b), (0, b), (1, b)], |p| p[0] + p[1] <= b)
            },
            |p| {
                let (r, n, k) = (p[0], p[1], p[2]);
                vec![v(ak_oracle(r, n, k)), v(sum(1..=k, |j| a_k(r, n - j, k as u32)))]
            },
        )
        .corrected(
            "a(r,n,k) = \\sum_{i=0}^n a(r-1,n-i,k)F(i+1,k) \\text{ for } r \\geq 1, \\text{ and the printed recurrence for } r = 0,\\, n \\geq 1",
            |s| {
                let b = s.oracle_bound();
                grid(&[(0, b), (0, b), (1, b)], |p| p[0] + p[1] <= b && (p[0] >= 1 || p[1] >= 1))
            },
            |p| {
                let (r, n, k) = (p[0], p[1], p[2]);
                let k32 = k as u32;
                let rhs = if r == 0 {
                    sum(1..=k, |j| a_k(0, n - j, k32))
                } else {
                    sum(0..=n, |i| a_k(r - 1, n - i, k32) * fibonacci_k(i + 1, k32))
                };
                vec![v(ak_oracle(r, n, k)), v(rhs)]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "ak-gf",
            "\\sum_{n \\geq 0} a(r,n,k)x^n = \\left(\\frac{1-x}{1-2x+x^{k+1}}\\right)^{r+1}.",
            &["r", "n", "k"],
            |s| grid(&[(0, s.bound()), (0, s.bound()), (0, s.bound())], all),
            |p| {
                let (r, n, k) = (p[0], p[1], p[2]);
                let mut den = vec![0i64; k as usize + 2];
                den[0] = 1;
                den[1] = -2;
                den[k as usize + 1] += 1;
                let gf = RationalGF::from_ints(&[1, -1], &den).pow(r as u32 + 1);
                vec![v(a_k(r, n, k as u32)), coeff(&gf, n)]
            },
        )
        .note("k = 0 allows no white tiles"),
    );
    out.push(IdentityRecord::new(
        "ak-equals-conv",
        "$a(r,n,k) = F(n+1,k,r)$",
        &["r", "n", "k"],
        |s| {
            let b = s.oracle_bound();
            grid(&[(0, b), (0, b), (1, b)], |p| p[0] + p[1] <= b)
        },
        |p| {
            let (r, n, k) = (p[0], p[1], p[2]);
            vec![v(ak_oracle(r, n, k)), conv_by_series(n + 1, k, r)]
        },
    ));
    out.push(IdentityRecord::new(
        "fconv-alternating",
        "F(n+1,k,r) = a(r,n,k) = \\sum_{j \\geq 0} (-1)^j\\binom{r+j}{r}a_j(r+j,n-j(k+1)).",
        &["r", "n", "k"],
        |s| grid(&[(0, s.bound()), (0, s.bound()), (0, s.bound())], all),
        |p| {
            let (r, n, k) = (p[0], p[1], p[2]);
            vec![
                conv_by_series(n + 1, k, r),
                v(a_k(r, n, k as u32)),
                v(fconv_alternating(r, n, k)),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "fconv-gf-expansion",
            "\\sum_{i \\geq 0} (-1)^i\\binom{r+1}{i}\\left(\\frac{1-x}{1-2x}\\right)^{r+1+i}\\frac{x^{i(k+1)}}{(1-x)^i}.",
            &["r", "n", "k"],
            |s| grid(&[(0, 5), (0, s.bound()), (1, 5)], all),
            |p| fconv_expansion(p, |r, i| binomial(r + 1, i)),
        )
        .corrected(
            "\\sum_{i \\geq 0} (-1)^i\\binom{r+i}{r}\\left(\\frac{1-x}{1-2x}\\right)^{r+1+i}\\frac{x^{i(k+1)}}{(1-x)^i}",
            |s| grid(&[(0, 5), (0, s.bound()), (1, 5)], all),
            |p| fconv_expansion(p, |r, i| binomial(r + i, r)),
        ),
    );
    out.push(IdentityRecord::new(
        "fconv-gf-closure",
        "\\frac{1}{\\left(1+\\frac{(1-x)x^{k+1}}{(1-2x)(1-x)}\\right)^{r+1}}",
        &["r", "n", "k"],
        |s| grid(&[(0, 5), (0, s.bound()), (1, 5)], all),
        |p| {
            let (r, n, k) = (p[0], p[1], p[2]);
            let order = n as usize;
            let inner_gf = RationalGF::new(
                &Poly::from_ints(&[1, -1]) * &Poly::monomial(1, k as usize + 1),
                &Poly::from_ints(&[1, -2]) * &Poly::from_ints(&[1, -1]),
            );
            let inner = &TruncatedSeries::one(order) + &expand(&inner_gf, order).unwrap();
            let value = inner.inverse().map_or_else(
                |e| Value::undefined(e.to_string()),
                |inv| {
                    let lhs =
                        &expand(&u_pow(r as u32 + 1), order).unwrap() * &inv.pow(r as u32 + 1);
                    series_coeff(&lhs, n)
                },
            );
            vec![v(a_k(r, n, k as u32)), value]
        },
    ));
}

fn ak_oracle(r: i64, n: i64, k: i64) -> Value {
    if n < 0 {
        return v(0);
    }
    v(o().count_tilings(u(r), u(n), &TilingFilter::max_white(u(k))))
}

fn fconv_alternating(r: i64, n: i64, k: i64) -> BigInt {
    sum(0..=last_term(n, k + 1), |j| {
        sign(j) * binomial(r + j, r) * a_s(j, r + j, n - j * (k + 1))
    })
}

fn fconv_expansion(p: &[i64], weight: fn(i64, i64) -> BigInt) -> Vec<Value> {
    let (r, n, k) = (p[0], p[1], p[2]);
    let order = n as usize;
    let mut total = TruncatedSeries::zero(order);
    for i in 0..=last_term(n, k + 1) {
        let shift = (i * (k + 1)) as usize;
        if shift > order {
            break;
        }
        let gf = &u_pow((r + 1 + i) as u32) * &geometric_pow(i as u32);
        let term = expand(&gf, order)
            .unwrap()
            .shift(shift)
            .scale(&q(sign(i) * weight(r, i)));
        total = &total + &term;
    }
    vec![v(a_k(r, n, k as u32)), series_coeff(&total, n)]
}

const NMK: &[&str] = &["n", "m", "k"];
const NMKP: &[&str] = &["n", "m", "k", "p"];

fn bounded_grid(s: Scale, with_p: bool) -> Vec<Vec<i64>> {
    let b = s.oracle_bound().min(12);
    if with_p {
        grid(&[(1, b), (1, b), (1, b), (1, b)], |p| {
            p[1] <= p[2] && p[2] <= p[0] && p[3] * p[1] <= p[0] + p[1]
        })
    } else {
        grid(&[(1, b), (1, b), (1, b)], |p| {
            p[1] <= p[2] && p[2] <= p[0] + 1
        })
    }
}

fn parts(out: &mut Vec<IdentityRecord>) {
    out.push(IdentityRecord::new(
        "with-part-bounded",
        "L(n,m,k) = \\sum_{j \\geq 1} (-1)^{j-1}F(n+1-jm,k,j).",
        NMK,
        |s| bounded_grid(s, false),
        |p| {
            let (n, m, k) = (p[0], p[1], p[2]);
            let rhs = sum(1..=last_term(n, m), |j| {
                sign(j - 1) * fibonacci_k_conv(n + 1 - j * m, k as u32, j)
            });
            vec![v(so::with_at_least(&o(), u(n), u(m), u(k), 1)), v(rhs)]
        },
    ));
    out.push(IdentityRecord::new(
        "with-at-least",
        "L_p(n,m,k) = \\sum_{j \\geq p} (-1)^{j-p}\\binom{j-1}{p-1}F(n+1-jm,k,j).",
        NMKP,
        |s| bounded_grid(s, true),
        |p| {
            let (n, m, k, pp) = (p[0], p[1], p[2], p[3]);
            let rhs = sum(pp..=last_term(n, m).max(pp), |j| {
                sign(j - pp)
                    * binomial(j - 1, pp - 1)
                    * fibonacci_k_conv(n + 1 - j * m, k as u32, j)
            });
            vec![v(so::with_at_least(&o(), u(n), u(m), u(k), u(pp))), v(rhs)]
        },
    ));
    out.push(IdentityRecord::new(
        "with-exactly",
        "E_p(n,m,k) = \\sum_{j \\geq p} (-1)^{j-p}\\binom{j}{p}F(n+1-jm,k,j).",
        NMKP,
        |s| bounded_grid(s, true),
        |p| {
            let (n, m, k, pp) = (p[0], p[1], p[2], p[3]);
            let rhs = sum(pp..=last_term(n, m).max(pp), |j| {
                sign(j - pp) * binomial(j, pp) * fibonacci_k_conv(n + 1 - j * m, k as u32, j)
            });
            vec![v(so::with_exactly(&o(), u(n), u(m), u(k), u(pp))), v(rhs)]
        },
    ));
    out.push(IdentityRecord::new(
        "with-exactly-difference",
        "E_p(n,m,k) = L_p(n,m,k) - L_{p+1}(n,m,k)",
        NMKP,
        |s| bounded_grid(s, true),
        |p| {
            let (n, m, k, pp) = (u(p[0]), u(p[1]), u(p[2]), u(p[3]));
            let o = o();
            let diff = so::with_at_least(&o, n, m, k, pp)
                .and_then(|x| Ok(x - so::with_at_least(&o, n, m, k, pp + 1)?));
            vec![v(so::with_exactly(&o, n, m, k, pp)), v(diff)]
        },
    ));
    let occurrences = |n: i64, k: i64| v(so::part_occurrences(&o(), u(n), u(k)));
    let _ = occurrences;
    out.push(
        IdentityRecord::new(
            "part-occurrences-headline",
            "$S(n,k) = 2^{n-2}(n+1)$",
            NK,
            |s| {
                grid(&[(2, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[1] < p[0]
                })
            },
            |p| {
                vec![
                    v(so::part_occurrences(&o(), u(p[0]), u(p[1]))),
                    v(pow2(p[0] - 2) * q((p[0] + 1).into())),
                ]
            },
        )
        .corrected(
            "S(n,k) = a(1,n-k)",
            |s| {
                grid(&[(2, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[1] < p[0]
                })
            },
            |p| {
                vec![
                    v(so::part_occurrences(&o(), u(p[0]), u(p[1]))),
                    v(a(1, p[0] - p[1])),
                ]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "part-occurrences-shifted",
            "S(n,k) = 2^{n-k-2}(n-k+3).",
            NK,
            |s| {
                grid(&[(2, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[1] < p[0]
                })
            },
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![
                    v(so::part_occurrences(&o(), u(n), u(k))),
                    v(pow2(n - k - 2) * q((n - k + 3).into())),
                ]
            },
        )
        .note("checked on 1 ≤ k < n"),
    );
    out.push(IdentityRecord::new(
        "part-occurrences",
        "S(n,k) = a(1,n-k).",
        NK,
        |s| {
            grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                p[1] <= p[0]
            })
        },
        |p| {
            vec![
                v(so::part_occurrences(&o(), u(p[0]), u(p[1]))),
                v(a(1, p[0] - p[1])),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "part-occurrences-by-exact",
        "S(n,k) = \\sum_{j \\geq 1} jE_j(n,k).",
        NK,
        |s| {
            grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                p[1] <= p[0]
            })
        },
        |p| {
            let (n, k) = (p[0], p[1]);
            let rhs = sum(1..=n / k, |j| j * stats::exactly_unbounded(n, k, j));
            vec![v(so::part_occurrences(&o(), u(n), u(k))), v(rhs)]
        },
    ));
    out.push(
        IdentityRecord::new(
            "part-occurrences-final",
            "S(n,k) = \\sum_{j=1}^n a(1,n-j) = a_1(1,n-1) = 2^{n-2}(n+1),",
            NK,
            |s| {
                grid(&[(2, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[1] < p[0]
                })
            },
            |p| {
                let (n, k) = (p[0], p[1]);
                let mut values = vec![v(so::part_occurrences(&o(), u(n), u(k)))];
                values.extend(parts_total_chain(n));
                values
            },
        )
        .corrected(
            "E(n) = \\sum_{j=1}^n a(1,n-j) = a_1(1,n-1) = 2^{n-2}(n+1)",
            |s| grid(&[(1, s.oracle_bound()), (1, 1)], all),
            |p| {
                let n = p[0];
                let mut values = vec![v(so::parts_total(&o(), u(n)))];
                values.extend(parts_total_chain(n));
                values
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "cumulative-one-closed",
            "$a_1(1,n) = 2^{n-2}(n+1)$",
            N,
            |s| grid(&[(0, s.bound())], all),
            |p| vec![v(a_s(1, 1, p[0])), v(pow2(p[0] - 2) * q((p[0] + 1).into()))],
        )
        .corrected(
            "a_1(1,n-1) = 2^{n-2}(n+1) \\text{ for } n \\geq 1",
            |s| grid(&[(1, s.bound())], all),
            |p| {
                vec![
                    v(a_s(1, 1, p[0] - 1)),
                    v(pow2(p[0] - 2) * q((p[0] + 1).into())),
                ]
            },
        ),
    );
}

fn parts_total_chain(n: i64) -> Vec<Value> {
    vec![
        v(sum(1..=n, |j| a(1, n - j))),
        v(a_s(1, 1, n - 1)),
        v(pow2(n - 2) * q((n + 1).into())),
    ]
}

fn runs_bounded_by_parts(n: i64, k: i64) -> BigInt {
    sum(1..=k, |j| {
        fibonacci_k_conv(n + 1 - j, k as u32, 1) - fibonacci_k_conv(n + 1 - 2 * j, k as u32, 1)
    })
}

const NJK: &[&str] = &["n", "j", "k"];

fn avoidance(out: &mut Vec<IdentityRecord>) {
    out.push(IdentityRecord::new(
        "runs-bounded-part",
        "r(n,j,\\{k\\}) = F(n+1-j,k,1) - F(n+1-2j,k,1).",
        NJK,
        |s| {
            let b = s.oracle_bound();
            grid(&[(1, b), (1, b), (1, b)], |p| p[1] <= p[2] && p[2] <= p[0])
        },
        |p| {
            let (n, j, k) = (p[0], p[1], p[2]);
            let rhs = fibonacci_k_conv(n + 1 - j, k as u32, 1)
                - fibonacci_k_conv(n + 1 - 2 * j, k as u32, 1);
            vec![v(so::runs_of_part_bounded(&o(), u(n), u(j), u(k))), v(rhs)]
        },
    ));
    out.push(
        IdentityRecord::new(
            "runs-bounded-total",
            "r(n,\\{k\\}) = \\sum_{j \\geq 0} F(n-2j,k,1).",
            NK,
            |s| {
                grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[1] <= p[0]
                })
            },
            |p| {
                let (n, k) = (p[0], p[1]);
                let rhs = sum(0..=n / 2 + 1, |j| fibonacci_k_conv(n - 2 * j, k as u32, 1));
                vec![v(so::runs_bounded(&o(), u(n), u(k))), v(rhs)]
            },
        )
        .corrected(
            "r(n,\\{k\\}) = \\sum_{j=1}^k \\left(F(n+1-j,k,1) - F(n+1-2j,k,1)\\right)",
            |s| {
                grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[1] <= p[0]
                })
            },
            |p| {
                vec![
                    v(so::runs_bounded(&o(), u(p[0]), u(p[1]))),
                    v(runs_bounded_by_parts(p[0], p[1])),
                ]
            },
        ),
    );
    out.push(IdentityRecord::new(
        "runs-bounded-sum",
        "r(n,\\{k\\}) = r(n,1,\\{k\\}) + \\cdots + r(n,k,\\{k\\}).",
        NK,
        |s| {
            grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                p[1] <= p[0]
            })
        },
        |p| {
            let (n, k) = (u(p[0]), u(p[1]));
            let o = o();
            let parts: Result<BigInt, _> =
                (1..=k).map(|j| so::runs_of_part_bounded(&o, n, j, k)).sum();
            vec![v(so::runs_bounded(&o, n, k)), v(parts)]
        },
    ));
    out.push(
        IdentityRecord::new(
            "runs-bounded-proof",
            "r(n,\\{k\\}) = \\sum_{j \\geq 0} (F(n-j,k,1) - F(n-1-2j,k,1),",
            NK,
            |s| {
                grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[1] <= p[0]
                })
            },
            |p| {
                let (n, k) = (p[0], p[1] as u32);
                let rhs = sum(0..=n + 1, |j| {
                    fibonacci_k_conv(n - j, k, 1) - fibonacci_k_conv(n - 1 - 2 * j, k, 1)
                });
                vec![v(so::runs_bounded(&o(), u(n), k)), v(rhs)]
            },
        )
        .note("the unbalanced parenthesis is read as closing after the second term")
        .corrected(
            "r(n,\\{k\\}) = \\sum_{j=1}^k \\left(F(n+1-j,k,1) - F(n+1-2j,k,1)\\right)",
            |s| {
                grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[1] <= p[0]
                })
            },
            |p| {
                vec![
                    v(so::runs_bounded(&o(), u(p[0]), u(p[1]))),
                    v(runs_bounded_by_parts(p[0], p[1])),
                ]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "without-part-recurrence",
            "C(n, \\widehat k) = 2C(n-1,\\widehat k) + C(n-k-1,\\widehat k) - C(n-k,\\widehat k).",
            NK,
            |s| grid(&[(2, s.oracle_bound()), (1, s.oracle_bound())], all),
            |p| {
                let (n, k) = (p[0], p[1]);
                let c = |m: i64| {
                    if m < 0 {
                        BigInt::zero()
                    } else {
                        so::without_part(&o(), u(m), u(k)).unwrap()
                    }
                };
                vec![v(c(n)), v(2 * c(n - 1) + c(n - k - 1) - c(n - k))]
            },
        )
        .note("checked for n ≥ 2, with C(m, k̂) = 0 for m < 0"),
    );
    out.push(IdentityRecord::new(
        "without-part-gf",
        "\\sum_{n \\geq 0} C(n,\\widehat k)x^n = \\frac{1-x}{1-2x+x^k-x^{k+1}}.",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            vec![
                v(so::without_part(&o(), u(p[0]), u(p[1]))),
                coeff(&without_part_gf(p[1]), p[0]),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "without-part-complement",
        "C(n,\\widehat k) = C(n) - L(n,k).",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (u(p[0]), u(p[1]));
            let o = o();
            let diff = so::compositions(&o, n).and_then(|c| Ok(c - so::with_part(&o, n, k)?));
            vec![v(so::without_part(&o, n, k)), v(diff)]
        },
    ));
    out.push(IdentityRecord::new(
        "with-part",
        "L(n,k) = \\sum_{j \\geq 1} (-1)^{j-1}a(j,n-jk)",
        NK,
        |s| grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            vec![
                v(so::with_part(&o(), u(p[0]), u(p[1]))),
                v(stats::with_part(p[0], p[1])),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "without-part",
        "C(n,\\widehat k) = \\sum_{j \\geq 0} (-1)^ja(j,n-jk).",
        NK,
        |s| grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            vec![
                v(so::without_part(&o(), u(p[0]), u(p[1]))),
                v(stats::without_part(p[0], p[1])),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "allowed-parts-gf",
            "\\sum_{n \\geq 0} C_S(n)x^n = \\frac{1}{1-x^{s_1} - \\cdots - x^{s_m}}.",
            &["n", "set"],
            |s| grid(&[(0, s.oracle_bound()), (1, 63)], all),
            |p| {
                let (n, mask) = (p[0], p[1]);
                let set: Vec<u32> = (1..=6).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let mut den = vec![0i64; 7];
                den[0] = 1;
                for &i in &set {
                    den[i as usize] = -1;
                }
                vec![
                    v(so::compositions_with_parts(&o(), u(n), &set)),
                    coeff(&RationalGF::from_ints(&[1], &den), n),
                ]
            },
        )
        .note("the set is a nonempty subset of {1,…,6}, encoded as a bitmask"),
    );
    out.push(
        IdentityRecord::new(
            "without-part-gf-printed",
            "\\frac{1}{1+x^k - \\sum_{i \\geq 0} x^i}.",
            NK,
            |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![
                    v(so::without_part(&o(), u(n), u(k))),
                    without_part_geometric(n, k, 0),
                ]
            },
        )
        .corrected(
            "\\frac{1}{1+x^k - \\sum_{i \\geq 1} x^i}",
            |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![
                    v(so::without_part(&o(), u(n), u(k))),
                    without_part_geometric(n, k, 1),
                ]
            },
        ),
    );
    out.push(IdentityRecord::new(
        "fibonacci-without-one",
        "F(n-1,2) = \\sum_{j \\geq 0} (-1)^ja(j,n-j).",
        N,
        |s| grid(&[(1, s.oracle_bound())], all),
        |p| {
            let n = p[0];
            vec![
                v(so::without_part(&o(), u(n), 1)),
                v(fibonacci_k(n - 1, 2)),
                v(sum(0..=n, |j| sign(j) * a(j, n - j))),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "without-part-large-k",
            "C(n,\\widehat k) = a(0,n) - a(1,n-k) = 2^{n-1} - 2^{n-k}(n-k+3).",
            NK,
            |s| grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| 2 * p[1] > p[0] && p[1] <= p[0]),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![
                    v(so::without_part(&o(), u(n), u(k))),
                    v(a(0, n) - a(1, n - k)),
                    v(pow2(n - 1) - pow2(n - k) * q((n - k + 3).into())),
                ]
            },
        )
        .note("checked for n/2 < k ≤ n")
        .corrected(
            "C(n,\\widehat k) = a(0,n) - a(1,n-k) = 2^{n-1} - 2^{n-k-2}(n-k+3) \\text{ for } n/2 < k < n",
            |s| grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| 2 * p[1] > p[0] && p[1] < p[0]),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![
                    v(so::without_part(&o(), u(n), u(k))),
                    v(a(0, n) - a(1, n - k)),
                    v(pow2(n - 1) - pow2(n - k - 2) * q((n - k + 3).into())),
                ]
            },
        ),
    );
    out.push(IdentityRecord::new(
        "tilings-avoiding-exact",
        "C(n,m,\\widehat k) &= E_m(n+mk,k) \\\\",
        NMK,
        |s| {
            let b = s.oracle_bound();
            grid(&[(0, b), (0, b), (1, b)], |p| p[0] + p[1] <= b && p[0] + p[1] * p[2] <= b)
        },
        |p| {
            let (n, m, k) = (p[0], p[1], p[2]);
            vec![
                v(so::tilings_avoiding(&o(), u(n), u(m), u(k))),
                v(so::exactly_unbounded(&o(), u(n + m * k), u(k), u(m))),
            ]
        },
    ).note("checked for k ≥ 1; with k = 0 there is no part to avoid and the alternating sum does not terminate"));
    out.push(IdentityRecord::new(
        "tilings-avoiding",
        "&= \\sum_{j \\geq m} (-1)^{j-m}\\binom{j}{m}a(j,n-k(j-m)).",
        NMK,
        |s| {
            let b = s.oracle_bound();
            grid(&[(0, b), (0, b), (1, b)], |p| p[0] + p[1] <= b)
        },
        |p| {
            let (n, m, k) = (p[0], p[1], p[2]);
            vec![
                v(so::tilings_avoiding(&o(), u(n), u(m), u(k))),
                v(stats::tilings_avoiding(n, m, k)),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "tilings-avoiding-zero",
            "C(n,0,\\widehat k) &= a(0,n) - a(1,n-k) + a(2,n-2k) - \\cdots \\\\",
            NK,
            |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![
                    v(so::tilings_avoiding(&o(), u(n), 0, u(k))),
                    v(sum(0..=last_term(n, k), |j| sign(j) * a(j, n - j * k))),
                ]
            },
        )
        .note("the trailing dots continue the alternating pattern"),
    );
    out.push(
        IdentityRecord::new(
            "tilings-avoiding-one",
            "C(n,1,\\widehat k) &= a(1,n) - a(2,n-k) + 3a(3,n-2k) - \\cdots \\\\",
            NK,
            |s| tilings_avoiding_short(s, 1),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![
                    v(so::tilings_avoiding(&o(), u(n), 1, u(k))),
                    v(a(1, n) - a(2, n - k) + 3 * a(3, n - 2 * k)),
                ]
            },
        )
        .note("checked for n < 3k, where the printed terms are the whole sum")
        .corrected(
            "C(n,1,\\widehat k) = a(1,n) - 2a(2,n-k) + 3a(3,n-2k) - \\cdots",
            |s| tilings_avoiding_short(s, 1),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![
                    v(so::tilings_avoiding(&o(), u(n), 1, u(k))),
                    v(a(1, n) - 2 * a(2, n - k) + 3 * a(3, n - 2 * k)),
                ]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "tilings-avoiding-two",
            "C(n+2k,2,\\widehat k) &= a(2,n) - 3a(3,n-k) + 6a(4,n-2k) - \\cdots",
            NK,
            |s| tilings_avoiding_short(s, 2),
            |p| {
                let (n, k) = (p[0], p[1]);
                let rhs = a(2, n) - 3 * a(3, n - k) + 6 * a(4, n - 2 * k);
                let lhs = if n + 2 * k + 2 <= 18 {
                    v(so::tilings_avoiding(&o(), u(n + 2 * k), 2, u(k)))
                } else {
                    v(stats::tilings_avoiding(n + 2 * k, 2, k))
                };
                vec![lhs, v(rhs)]
            },
        )
        .note("checked for n < 3k, where the printed terms are the whole sum")
        .corrected(
            "C(n,2,\\widehat k) = a(2,n) - 3a(3,n-k) + 6a(4,n-2k) - \\cdots",
            |s| tilings_avoiding_short(s, 2),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![
                    v(so::tilings_avoiding(&o(), u(n), 2, u(k))),
                    v(a(2, n) - 3 * a(3, n - k) + 6 * a(4, n - 2 * k)),
                ]
            },
        ),
    );
}

fn tilings_avoiding_short(s: Scale, reds: i64) -> Vec<Vec<i64>> {
    let b = s.oracle_bound();
    grid(&[(0, b), (1, b)], |p| p[0] < 3 * p[1] && p[0] + reds <= b)
}

fn without_part_gf(k: i64) -> RationalGF {
    let k = k as usize;
    let mut den = vec![0i64; k + 2];
    den[0] = 1;
    den[1] -= 2;
    den[k] += 1;
    den[k + 1] -= 1;
    RationalGF::from_ints(&[1, -1], &den)
}

/// `1 / (1 + x^k - Σ_{i ≥ start} x^i)` built by series arithmetic.
fn without_part_geometric(n: i64, k: i64, start: usize) -> Value {
    let order = n as usize;
    let geometric = TruncatedSeries::from_coeffs(
        (0..=order)
            .map(|i| {
                if i >= start {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect(),
    );
    let base = &TruncatedSeries::one(order)
        + &TruncatedSeries::from_poly(&Poly::monomial(1, k as usize), order);
    (&base - &geometric)
        .inverse()
        .map_or_else(|e| Value::undefined(e.to_string()), |s| series_coeff(&s, n))
}

fn largest_gf(k: i64, shift: usize, expanded: bool) -> RationalGF {
    if expanded {
        let mut d1 = vec![0i64; k as usize + 2];
        d1[0] = 1;
        d1[1] -= 2;
        d1[k as usize + 1] += 1;
        let mut d2 = vec![0i64; k as usize + 1];
        d2[0] = 1;
        d2[1] -= 2;
        d2[k as usize] += 1;
        RationalGF::new(
            &Poly::monomial(1, shift) * &Poly::from_ints(&[1, -1]).pow(2),
            &Poly::from_ints(&d1) * &Poly::from_ints(&d2),
        )
    } else {
        RationalGF::new(Poly::monomial(1, shift), &fib_den(k) * &fib_den(k - 1))
    }
}

fn largest(out: &mut Vec<IdentityRecord>) {
    out.push(IdentityRecord::new(
        "largest-part-difference",
        "C(n,\\langle 1,\\dots,k\\rangle) - C(n,\\langle 1,\\dots,k-1\\rangle) = G(n,k).",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (u(p[0]), u(p[1]));
            let o = o();
            let upto = |k: u32| so::compositions_with_parts(&o, n, &(1..=k).collect::<Vec<_>>());
            let diff = upto(k).and_then(|c| Ok(c - upto(k - 1)?));
            vec![v(diff), v(so::largest_part(&o, n, k))]
        },
    ));
    out.push(IdentityRecord::new(
        "bounded-parts-recurrence",
        "C(n,\\langle 1,\\dots,k\\rangle) = \\sum_{j = 1}^k C(n-j,\\langle 1,\\dots,k\\rangle),",
        NK,
        |s| grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let parts: Vec<u32> = (1..=u(k)).collect();
            let c = |m: i64| {
                if m < 0 {
                    BigInt::zero()
                } else {
                    so::compositions_with_parts(&o(), u(m), &parts).unwrap()
                }
            };
            vec![v(c(n)), v(sum(1..=k, |j| c(n - j)))]
        },
    ));
    out.push(IdentityRecord::new(
        "bounded-parts-gf",
        "$\\sum_{n \\geq 0} C(n,\\langle 1,\\dots,k\\rangle)x^n = \\frac{1-x}{1-2x+x^{k+1}}$",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let mut den = vec![0i64; k as usize + 2];
            den[0] = 1;
            den[1] = -2;
            den[k as usize + 1] += 1;
            let parts: Vec<u32> = (1..=u(k)).collect();
            vec![
                v(so::compositions_with_parts(&o(), u(n), &parts)),
                coeff(&RationalGF::from_ints(&[1, -1], &den), n),
                v(fibonacci_k(n + 1, k as u32)),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "largest-part",
        "G(n,k) = F(n+1,k) - F(n+1,k-1).",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            vec![
                v(so::largest_part(&o(), u(p[0]), u(p[1]))),
                v(stats::largest_part(p[0], p[1])),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "largest-part-gf",
            "\\sum_{n \\geq 0} G(n,k)x^n &= \\frac{x^{k-1}}{(1-x-\\cdots -x^k)(1-x-\\cdots -x^{k-1})} \\\\",
            NK,
            |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
            |p| vec![v(so::largest_part(&o(), u(p[0]), u(p[1]))), coeff(&largest_gf(p[1], p[1] as usize - 1, false), p[0])],
        )
        .corrected(
            "\\sum_{n \\geq 0} G(n,k)x^n = \\frac{x^{k}}{(1-x-\\cdots -x^k)(1-x-\\cdots -x^{k-1})}",
            |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
            |p| vec![v(so::largest_part(&o(), u(p[0]), u(p[1]))), coeff(&largest_gf(p[1], p[1] as usize, false), p[0])],
        ),
    );
    out.push(
        IdentityRecord::new(
            "largest-part-gf-expanded",
            "&= \\frac{x^{k-1}(1-x)^2}{(1-2x+x^{k+1})(1-2x+x^k)}.",
            NK,
            |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
            |p| {
                vec![
                    v(so::largest_part(&o(), u(p[0]), u(p[1]))),
                    coeff(&largest_gf(p[1], p[1] as usize - 1, true), p[0]),
                ]
            },
        )
        .corrected(
            "\\sum_{n \\geq 0} G(n,k)x^n = \\frac{x^{k}(1-x)^2}{(1-2x+x^{k+1})(1-2x+x^k)}",
            |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
            |p| {
                vec![
                    v(so::largest_part(&o(), u(p[0]), u(p[1]))),
                    coeff(&largest_gf(p[1], p[1] as usize, true), p[0]),
                ]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "largest-part-convolution",
            "$G(n+k-1,k)$",
            NK,
            |s| {
                grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[0] + p[1] <= s.oracle_bound()
                })
            },
            |p| {
                let (n, k) = (p[0], p[1]);
                let conv = sum(0..=n, |i| {
                    fibonacci_k(i + 1, k as u32) * fibonacci_k(n - i + 1, k as u32 - 1)
                });
                vec![v(so::largest_part(&o(), u(n + k - 1), u(k))), v(conv)]
            },
        )
        .corrected(
            "G(n+k,k) = \\sum_{i=0}^n F(i+1,k)F(n-i+1,k-1)",
            |s| {
                grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[0] + p[1] <= s.oracle_bound()
                })
            },
            |p| {
                let (n, k) = (p[0], p[1]);
                let conv = sum(0..=n, |i| {
                    fibonacci_k(i + 1, k as u32) * fibonacci_k(n - i + 1, k as u32 - 1)
                });
                vec![v(so::largest_part(&o(), u(n + k), u(k))), v(conv)]
            },
        ),
    );
    out.push(IdentityRecord::new(
        "largest-part-bridge",
        "F(n,k) = \\sum_{j \\geq 0} F(n-jk,k-1,j).",
        NK,
        |s| grid(&[(-2, s.bound() + 8), (1, 6)], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            vec![fib_series(k, n), v(bridge_sum(n, k))]
        },
    ));
    out.push(
        IdentityRecord::new(
            "largest-part-bridge-gf",
            "&= \\frac{1}{1-x-x^2-\\cdots-x^k},",
            NK,
            |s| grid(&[(0, s.bound()), (1, 6)], all),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![v(bridge_sum(n, k)), coeff(&RationalGF::new(Poly::one(), fib_den(k)), n)]
            },
        )
        .corrected(
            "\\sum_{n \\geq 0}\\left(\\sum_{j \\geq 0} F(n-jk,k-1,j)\\right)x^n = \\frac{x}{1-x-x^2-\\cdots-x^k}",
            |s| grid(&[(0, s.bound()), (1, 6)], all),
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![v(bridge_sum(n, k)), coeff(&RationalGF::new(Poly::monomial(1, 1), fib_den(k)), n)]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "largest-part-times",
            "G(n,k,r) = F(n+1-kr,k-1,r).",
            NKR,
            |s| {
                let b = s.oracle_bound();
                grid(&[(0, b), (1, b), (0, b)], |p| p[1] * p[2] <= p[0] + p[1])
            },
            |p| {
                let (n, k, r) = (p[0], p[1], p[2]);
                vec![
                    v(so::largest_part_times(&o(), u(n), u(k), u(r))),
                    v(fibonacci_k_conv(n + 1 - k * r, k as u32 - 1, r)),
                ]
            },
        )
        .note("G(n,k,r) counts compositions with parts at most k and exactly r copies of k; for r ≥ 1 these have largest part k"),
    );
    out.push(IdentityRecord::new(
        "largest-part-sum",
        "G(n,k) = \\sum_{r \\geq 1} G(n,k,r).",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (u(p[0]), u(p[1]));
            let o = o();
            let total: Result<BigInt, _> = (1..=n / k)
                .map(|r| so::largest_part_times(&o, n, k, r))
                .sum();
            vec![v(so::largest_part(&o, n, k)), v(total)]
        },
    ));
}

fn bridge_sum(n: i64, k: i64) -> BigInt {
    sum(0..=last_term(n, k), |j| {
        fibonacci_k_conv(n - j * k, k as u32 - 1, j)
    })
}

fn frozen(out: &mut Vec<IdentityRecord>) {
    out.push(IdentityRecord::new(
        "frozen-without",
        "CF(n,k) = \\sum_{j \\geq 0} C(n-jk,\\widehat k).",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let o = o();
            let rhs: Result<BigInt, _> = (0..=n / k)
                .map(|j| so::without_part(&o, u(n - j * k), u(k)))
                .sum();
            vec![
                v(so::frozen(&o, u(n), u(k))),
                v(rhs),
                v(stats::frozen(n, k)),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "frozen-allowed",
        "CF(n,k) = C(n,\\langle1,\\dots,k,2k\\rangle).",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let mut parts: Vec<i64> = (1..=k).collect();
            parts.push(2 * k);
            let parts32: Vec<u32> = parts.iter().map(|&x| u(x)).collect();
            vec![
                v(so::frozen(&o(), u(n), u(k))),
                v(so::compositions_with_parts(&o(), u(n), &parts32)),
                v(stats::compositions_with_parts(n, &parts)),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "frozen-gf",
        "&= \\frac{1}{1-x-x^2-\\cdots-x^k-x^{2k}}.",
        NK,
        |s| grid(&[(0, s.bound()), (1, s.bound())], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let middle =
                &RationalGF::new(Poly::one(), &Poly::one() - &Poly::monomial(1, k as usize))
                    * &without_part_gf(k);
            let final_den = &fib_den(k) - &Poly::monomial(1, 2 * k as usize);
            vec![
                v(stats::frozen(n, k)),
                coeff(&middle, n),
                coeff(&RationalGF::new(Poly::one(), final_den), n),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "frozen-convolutions",
        "CF(n,k) = \\sum_{j \\geq 0} F(n+1-2kj,k,j).",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let rhs = sum(0..=last_term(n, 2 * k), |j| {
                fibonacci_k_conv(n + 1 - 2 * k * j, k as u32, j)
            });
            vec![v(so::frozen(&o(), u(n), u(k))), v(rhs)]
        },
    ));
}

fn replacement(out: &mut Vec<IdentityRecord>) {
    let replaced_domain: Domain = |s| grid(&[(1, s.oracle_bound().min(12))], all);
    out.push(IdentityRecord::new(
        "replaced-compositions",
        "$a_1(2,n-1)$",
        N,
        replaced_domain,
        |p| {
            vec![
                v(so::replaced_compositions_total(&o(), u(p[0]))),
                v(a_s(1, 2, p[0] - 1)),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "replaced-compositions-sum",
            "\\sum_{j = 1}^n a_1(1,n-j)a(0,j).",
            N,
            replaced_domain,
            |p| {
                let n = p[0];
                vec![
                    v(so::replaced_compositions_total(&o(), u(n))),
                    v(sum(1..=n, |j| a_s(1, 1, n - j) * a(0, j))),
                ]
            },
        )
        .corrected("\\sum_{j = 1}^n a(1,n-j)a(0,j)", replaced_domain, |p| {
            let n = p[0];
            vec![
                v(so::replaced_compositions_total(&o(), u(n))),
                v(sum(1..=n, |j| a(1, n - j) * a(0, j))),
            ]
        }),
    );
    out.push(IdentityRecord::new(
        "replaced-compositions-gf",
        "\\left(\\frac{1}{1-x}\\right)\\left(\\frac{1-x}{1-2x}\\right)^2\\left(\\frac{1-x}{1-2x}\\right) = \\frac{1}{1-x}\\left(\\frac{1-x}{1-2x}\\right)^3,",
        N,
        |s| grid(&[(0, s.bound())], all),
        |p| {
            let lhs = &(&geometric_pow(1) * &u_pow(2)) * &u_pow(1);
            let rhs = &geometric_pow(1) * &u_pow(3);
            vec![coeff(&lhs, p[0]), coeff(&rhs, p[0]), v(a_s(1, 2, p[0]))]
        },
    ));
    out.push(IdentityRecord::new(
        "replaced-parts",
        "$a_1(3,n-1)$",
        N,
        replaced_domain,
        |p| {
            vec![
                v(so::replaced_parts_total(&o(), u(p[0]))),
                v(a_s(1, 3, p[0] - 1)),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "replaced-parts-sum",
            "\\sum_{j=1}^n a(1,n-j)a_1(1,n-j),",
            N,
            replaced_domain,
            |p| {
                let n = p[0];
                vec![
                    v(so::replaced_parts_total(&o(), u(n))),
                    v(sum(1..=n, |j| a(1, n - j) * a_s(1, 1, n - j))),
                ]
            },
        )
        .corrected("\\sum_{j=1}^n a(1,n-j)a_1(1,j-1)", replaced_domain, |p| {
            let n = p[0];
            vec![
                v(so::replaced_parts_total(&o(), u(n))),
                v(sum(1..=n, |j| a(1, n - j) * a_s(1, 1, j - 1))),
            ]
        }),
    );
    out.push(
        IdentityRecord::new(
            "replaced-parts-gf",
            "\\left(\\frac{1-x}{1-2x}\\right)^2\\left(\\frac{1}{1-x}\\right)^2\\left(\\frac{1-x}{1-2x}\\right) = \\frac{1}{1-x}\\left(\\frac{1-x}{1-2x}\\right)^4.",
            N,
            |s| grid(&[(0, s.bound())], all),
            |p| {
                let lhs = &(&u_pow(2) * &geometric_pow(2)) * &u_pow(1);
                let rhs = &geometric_pow(1) * &u_pow(4);
                vec![coeff(&lhs, p[0]), coeff(&rhs, p[0])]
            },
        )
        .corrected(
            "\\left(\\frac{1-x}{1-2x}\\right)^2 \\cdot \\frac{x}{1-x}\\left(\\frac{1-x}{1-2x}\\right)^2 = \\frac{x}{1-x}\\left(\\frac{1-x}{1-2x}\\right)^4",
            |s| grid(&[(1, s.oracle_bound().min(12))], all),
            |p| {
                let parts_gf = &(&monomial(1) * &geometric_pow(1)) * &u_pow(2);
                let lhs = &u_pow(2) * &parts_gf;
                let rhs = &(&monomial(1) * &geometric_pow(1)) * &u_pow(4);
                vec![v(so::replaced_parts_total(&o(), u(p[0]))), coeff(&lhs, p[0]), coeff(&rhs, p[0])]
            },
        ),
    );
    out.push(IdentityRecord::new(
        "tile-total",
        "C_a(r,n) = (r+1)a_1(r+1,n-1) + ra_0(r,n).",
        RN,
        |s| {
            let b = s.oracle_bound();
            grid(&[(0, b), (0, b)], |p| p[0] + p[1] <= b)
        },
        |p| {
            vec![
                v(so::tile_total(&o(), u(p[0]), u(p[1]))),
                v(stats::tile_total(p[0], p[1])),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "white-tile-total",
        "\\sum_{j = 1}^n j\\binom{r+j}{r}\\binom{n-1}{j-1} = (r+1)a_1(r+1,n-1).",
        RN,
        |s| {
            let b = s.oracle_bound();
            grid(&[(0, b), (0, b)], |p| p[0] + p[1] <= b)
        },
        |p| {
            let (r, n) = (p[0], p[1]);
            let mut whites: u64 = 0;
            let walked = o().for_each_tiling(u(r), u(n), &TilingFilter::none(), |tiles| {
                whites += tiles.iter().filter(|t| matches!(t, Tile::White(_))).count() as u64
            });
            let oracle = walked.map(|_| BigInt::from(whites));
            vec![
                v(oracle),
                v(sum(1..=n, |j| {
                    j * binomial(r + j, r) * binomial(n - 1, j - 1)
                })),
                v((r + 1) * a_s(1, r + 1, n - 1)),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "consecutive-exactly",
            "C_b(n,k,p) = C(1,n-pk,\\widehat k) = E_1(n-(p-1)k,k).",
            &["n", "k", "p"],
            consecutive_domain,
            |p| {
                let (n, k, pp) = (p[0], p[1], p[2]);
                let swapped = if n - pp * k < 0 {
                    v(0)
                } else {
                    v(so::tilings_avoiding(&o(), 1, u(n - pp * k), u(k)))
                };
                vec![
                    v(so::consecutive_exactly(&o(), u(n), u(k), u(pp))),
                    swapped,
                    v(stats::exactly_unbounded(n - (pp - 1) * k, k, 1)),
                ]
            },
        )
        .note("C(n,m,k̂) has white total n and m red squares")
        .corrected(
            "C_b(n,k,p) = C(n-pk,1,\\widehat k) = E_1(n-(p-1)k,k)",
            consecutive_domain,
            |p| {
                let (n, k, pp) = (p[0], p[1], p[2]);
                let tilings = if n - pp * k < 0 {
                    v(0)
                } else {
                    v(so::tilings_avoiding(&o(), u(n - pp * k), 1, u(k)))
                };
                vec![
                    v(so::consecutive_exactly(&o(), u(n), u(k), u(pp))),
                    tilings,
                    v(stats::exactly_unbounded(n - (pp - 1) * k, k, 1)),
                ]
            },
        ),
    );
    out.push(IdentityRecord::new(
        "consecutive",
        "C_b(n,k) = C(n,\\widehat k) + \\sum_{j \\geq 0} E_1(n-jk,k).",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            vec![
                v(so::consecutive(&o(), u(p[0]), u(p[1]))),
                v(stats::consecutive(p[0], p[1])),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "consecutive-exactly-alternating",
        "C_b(n,k,p) = \\sum_{j \\geq 1} (-1)^{j+1}ja(j,n-k(p+j-1)).",
        &["n", "k", "p"],
        consecutive_domain,
        |p| {
            let (n, k, pp) = (p[0], p[1], p[2]);
            let rhs = sum(1..=last_term(n, k) + 1, |j| {
                sign(j + 1) * j * a(j, n - k * (pp + j - 1))
            });
            vec![v(so::consecutive_exactly(&o(), u(n), u(k), u(pp))), v(rhs)]
        },
    ));
    out.push(IdentityRecord::new(
        "avoiding-multiples",
        "C(n,[k]) = F(n+1,k) - F(n+1-k,k).",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            vec![
                v(so::avoiding_multiples(&o(), u(n), u(k))),
                v(fibonacci_k(n + 1, k as u32) - fibonacci_k(n + 1 - k, k as u32)),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "avoiding-multiples-gf",
        "\\frac{1-x^k}{1-x-x^2-\\cdots-x^k},",
        NK,
        |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            let (n, k) = (p[0], p[1]);
            let gf = RationalGF::new(&Poly::one() - &Poly::monomial(1, k as usize), fib_den(k));
            vec![v(so::avoiding_multiples(&o(), u(n), u(k))), coeff(&gf, n)]
        },
    ));
    out.push(
        IdentityRecord::new(
            "avoiding-multiples-gf-direct",
            "\\frac{1}{1-\\left(\\sum_{i \\geq i} x^i\\right) + \\left(\\sum_{j \\geq 1} x^{jk}\\right)}.",
            NK,
            |s| grid(&[(0, s.oracle_bound()), (1, s.oracle_bound())], all),
            |p| {
                let (n, k) = (p[0], p[1]);
                let order = n as usize;
                let series = |keep: &dyn Fn(usize) -> bool| {
                    TruncatedSeries::from_coeffs(
                        (0..=order)
                            .map(|i| if keep(i) { BigRational::one() } else { BigRational::zero() })
                            .collect(),
                    )
                };
                let parts = series(&|i| i >= 1);
                let multiples = series(&|i| i >= 1 && i % k as usize == 0);
                let den = &(&TruncatedSeries::one(order) - &parts) + &multiples;
                let value = den.inverse().map_or_else(|e| Value::undefined(e.to_string()), |s| series_coeff(&s, n));
                vec![v(so::avoiding_multiples(&o(), u(n), u(k))), value]
            },
        )
        .note("the lower limit i ≥ i is read as i ≥ 1"),
    );
}

fn consecutive_domain(s: Scale) -> Vec<Vec<i64>> {
    let b = s.oracle_bound();
    grid(&[(0, b), (1, b), (1, b)], |p| p[2] * p[1] <= p[0] + p[1])
}

fn runs(out: &mut Vec<IdentityRecord>) {
    out.push(IdentityRecord::new(
        "runs-of-part",
        "$R(n,k) = a(1,n-k) - a(1,n-2k)$",
        NK,
        |s| grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], all),
        |p| {
            vec![
                v(so::runs_of_part(&o(), u(p[0]), u(p[1]))),
                v(stats::runs_of_part(p[0], p[1])),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "runs-of-part-closed",
            "R(n,k) = 2^{n-k-2}(n-k+3) - 2^{n-2k-2}(n-2k+3).",
            NK,
            |s| {
                grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[1] <= p[0]
                })
            },
            runs_closed,
        )
        .corrected(
            "R(n,k) = 2^{n-k-2}(n-k+3) - 2^{n-2k-2}(n-2k+3) \\text{ for } n \\geq 2k+1",
            |s| {
                grid(&[(1, s.oracle_bound()), (1, s.oracle_bound())], |p| {
                    p[0] > 2 * p[1]
                })
            },
            runs_closed,
        ),
    );
    out.push(IdentityRecord::new(
        "runs-total",
        "R(n) = \\sum_{k \\geq 1} a(1,n-(2k-1)).",
        N,
        |s| grid(&[(0, s.oracle_bound())], all),
        |p| vec![v(so::runs_total(&o(), u(p[0]))), v(stats::runs_total(p[0]))],
    ));
    out.push(IdentityRecord::new(
        "runs-total-sum",
        "R(n) = \\sum_{k \\geq 1} R(n,k) = \\sum_{k \\geq 1} a(1,n-k) - a(1,n-2k).",
        N,
        |s| grid(&[(0, s.oracle_bound())], all),
        |p| {
            let n = p[0];
            let o = o();
            let by_part: Result<BigInt, _> =
                (1..=u(n)).map(|k| so::runs_of_part(&o, u(n), k)).sum();
            vec![
                v(so::runs_total(&o, u(n))),
                v(by_part),
                v(sum(1..=n, |k| a(1, n - k) - a(1, n - 2 * k))),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "parts-total",
        "E(n) &= a_1(1,n-1) \\\\",
        N,
        |s| grid(&[(0, s.oracle_bound())], all),
        |p| {
            let n = p[0];
            vec![
                v(so::parts_total(&o(), u(n))),
                v(a_s(1, 1, n - 1)),
                v(sum(1..=n, |i| a(1, n - i))),
                v(sum(1..=n, |i| a(1, n - 2 * i + 1)) + sum(1..=n, |i| a(1, n - 2 * i))),
                v(stats::runs_total(n) + stats::runs_total(n - 1)),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "parts-runs-lemma",
        "$E(n) = R(n) + R(n-1)$",
        N,
        |s| grid(&[(1, s.oracle_bound())], all),
        |p| {
            let n = u(p[0]);
            let o = o();
            let runs = so::runs_total(&o, n).and_then(|x| Ok(x + so::runs_total(&o, n - 1)?));
            vec![v(so::parts_total(&o, n)), v(runs)]
        },
    ));
    out.push(
        IdentityRecord::new(
            "parts-total-closed",
            "$(n+1)2^{n-2}$",
            N,
            |s| grid(&[(1, s.oracle_bound())], all),
            |p| {
                vec![
                    v(so::parts_total(&o(), u(p[0]))),
                    v(pow2(p[0] - 2) * q((p[0] + 1).into())),
                ]
            },
        )
        .note("checked for n ≥ 1"),
    );
    out.push(
        IdentityRecord::new(
            "runs-sandwich",
            "$C(n) \\leq R(n) \\leq E(n)$",
            N,
            |s| grid(&[(1, s.oracle_bound())], all),
            |p| {
                let n = u(p[0]);
                vec![
                    v(so::compositions(&o(), n)),
                    v(so::runs_total(&o(), n)),
                    v(so::parts_total(&o(), n)),
                ]
            },
        )
        .nondecreasing()
        .note("checked for n ≥ 1; the empty composition has no runs"),
    );
    out.push(
        IdentityRecord::new(
            "conjecture-run-lengths",
            "R(n,k,l) = a(1,n-kl) - 2a(1,n-(l+1)k) + a(1,n-(l+2)k).",
            &["n", "k", "l"],
            |s| {
                let b = s.oracle_bound();
                grid(&[(1, b), (1, b), (1, b)], |p| p[1] * p[2] <= p[0])
            },
            run_lengths,
        )
        .conjecture(),
    );
}

fn runs_closed(p: &[i64]) -> Vec<Value> {
    let (n, k) = (p[0], p[1]);
    let closed =
        pow2(n - k - 2) * q((n - k + 3).into()) - pow2(n - 2 * k - 2) * q((n - 2 * k + 3).into());
    vec![v(so::runs_of_part(&o(), u(n), u(k))), v(closed)]
}

pub(super) fn run_lengths(p: &[i64]) -> Vec<Value> {
    let (n, k, l) = (p[0], p[1], p[2]);
    vec![
        v(so::runs_of_part_length(&o(), u(n), u(k), u(l))),
        v(a(1, n - k * l) - 2 * a(1, n - (l + 1) * k) + a(1, n - (l + 2) * k)),
    ]
}

fn pell_sum(n: i64) -> BigInt {
    sum(0..=last_term(n, 4), |i| a_s(2 * i, 2 * i + 1, n - 4 * i))
}

fn pell_numbers(out: &mut Vec<IdentityRecord>) {
    out.push(
        IdentityRecord::new(
            "pell",
            "P(n) = \\sum_{i \\geq 0} a_{2i}(2i+1,n-4i)",
            N,
            |s| grid(&[(0, 2 * s.bound())], all),
            |p| vec![v(pell(p[0])), v(pell_sum(p[0]))],
        )
        .corrected(
            "P(n+1) = \\sum_{i \\geq 0} a_{2i}(2i+1,n-4i)",
            |s| grid(&[(0, 2 * s.bound())], all),
            |p| vec![v(pell(p[0] + 1)), v(pell_sum(p[0]))],
        ),
    );
    out.push(
        IdentityRecord::new(
            "pell-gf",
            "\\sum_{n \\geq 0} P(n)x^n = \\frac{1}{1-2x-x^2}.",
            N,
            |s| grid(&[(0, 2 * s.bound())], all),
            |p| {
                vec![
                    v(pell(p[0])),
                    coeff(&RationalGF::from_ints(&[1], &[1, -2, -1]), p[0]),
                ]
            },
        )
        .corrected(
            "\\sum_{n \\geq 0} P(n)x^n = \\frac{x}{1-2x-x^2}",
            |s| grid(&[(0, 2 * s.bound())], all),
            |p| {
                vec![
                    v(pell(p[0])),
                    coeff(&RationalGF::from_ints(&[0, 1], &[1, -2, -1]), p[0]),
                ]
            },
        ),
    );
    out.push(
        IdentityRecord::new(
            "pell-proof-gf",
            "&= \\frac{(1-x)^2}{(1-2x)^2-x^4} \\\\",
            N,
            |s| grid(&[(0, 2 * s.bound())], all),
            |p| {
                let n = p[0];
                let den = &Poly::from_ints(&[1, -2]).pow(2) - &Poly::monomial(1, 4);
                vec![
                    v(pell_sum(n)),
                    coeff(&RationalGF::new(Poly::from_ints(&[1, -1]).pow(2), den), n),
                    coeff(&RationalGF::from_ints(&[1], &[1, -2, -1]), n),
                ]
            },
        )
        .note("the opening sum of the display is garbled; the record checks the two closed forms against the series it should equal"),
    );
}

fn m_oracle(r: i64, n: i64) -> Value {
    if r < 0 || n < 0 {
        return v(0);
    }
    v(so::palindromic_tilings(&o(), u(r), u(n)))
}

fn pal_oracle(n: i64) -> Value {
    v(so::palindromes(&o(), u(n)))
}

fn pal_hat_oracle(n: i64, k: i64) -> Value {
    v(so::palindromes_without(&o(), u(n), u(k)))
}

fn palindrome_domain(s: Scale) -> Vec<Vec<i64>> {
    let b = s.oracle_bound();
    grid(&[(0, b), (1, b + 1)], all)
}

fn pal_signed(p: &[i64]) -> Vec<Value> {
    let (n, k) = (p[0], p[1]);
    vec![pal_hat_oracle(n, k), v(stats::palindromes_without(n, k))]
}

fn pal_central(p: &[i64]) -> Vec<Value> {
    let (n, k) = (p[0], p[1]);
    let centres = (0..=n).filter(|l| (n - l) % 2 == 0 && *l != k);
    let total: BigInt = centres.map(|l| stats::without_part((n - l) / 2, k)).sum();
    vec![pal_hat_oracle(n, k), v(total)]
}

fn palindromes(out: &mut Vec<IdentityRecord>) {
    let even_domain: Domain = |s| {
        let b = s.oracle_bound();
        grid(&[(0, b), (0, b)], |p| 2 * p[0] + 2 * p[1] < b)
    };
    out.push(
        IdentityRecord::new(
            "palindromic-tilings-even",
            "m(2r,2n) &= m(2r,2n+1) = a_1(r,\\lfloor n/2\\rfloor) \\\\",
            RN,
            even_domain,
            |p| {
                let (r, n) = (p[0], p[1]);
                vec![
                    m_oracle(2 * r, 2 * n),
                    m_oracle(2 * r, 2 * n + 1),
                    v(a_s(1, r, n / 2)),
                ]
            },
        )
        .corrected("m(2r,2n) = m(2r,2n+1) = a_1(r,n)", even_domain, |p| {
            let (r, n) = (p[0], p[1]);
            vec![
                m_oracle(2 * r, 2 * n),
                m_oracle(2 * r, 2 * n + 1),
                v(a_s(1, r, n)),
            ]
        }),
    );
    out.push(IdentityRecord::new(
        "palindromic-tilings-odd-reds",
        "m(2r+1,2n) &= a_0(r,n) \\\\",
        RN,
        even_domain,
        |p| vec![m_oracle(2 * p[0] + 1, 2 * p[1]), v(a(p[0], p[1]))],
    ));
    out.push(
        IdentityRecord::new(
            "palindromic-tilings-odd-total",
            "m(2r,2n+1) &= 0",
            RN,
            even_domain,
            |p| vec![m_oracle(2 * p[0], 2 * p[1] + 1), v(0)],
        )
        .corrected(
            "m(2r+1,2n+1) = 0",
            |s| {
                let b = s.oracle_bound();
                grid(&[(0, b), (0, b)], |p| 2 * p[0] + 2 * p[1] + 2 <= b)
            },
            |p| vec![m_oracle(2 * p[0] + 1, 2 * p[1] + 1), v(0)],
        )
        .candidate("proof text", "m(2r,2n+1) = a_1(r,n)", even_domain, |p| {
            vec![m_oracle(2 * p[0], 2 * p[1] + 1), v(a_s(1, p[0], p[1]))]
        }),
    );
    out.push(IdentityRecord::new(
        "palindromic-cumulative",
        "a(r,n) + a(r,n-1) + \\cdots + a(r,0) = a_1(r,n).",
        RN,
        |s| grid(&[(0, s.bound()), (0, s.bound())], all),
        |p| vec![v(sum(0..=p[1], |i| a(p[0], i))), v(a_s(1, p[0], p[1]))],
    ));
    out.push(IdentityRecord::new(
        "palindromic-tilings-proof",
        "$m(R,N) = a_1(r,n)$",
        RN,
        even_domain,
        |p| vec![m_oracle(2 * p[0], 2 * p[1]), v(a_s(1, p[0], p[1]))],
    ));
    out.push(IdentityRecord::new(
        "palindromic-tilings-example",
        "3rr3 & r1221r \\\\",
        &[],
        |_| vec![Vec::new()],
        |_| {
            let mut no_centre = 0i64;
            let walked = o().for_each_tiling(2, 6, &TilingFilter::palindromic(), |tiles| {
                if tiles.len() % 2 == 0 {
                    no_centre += 1;
                }
            });
            vec![v(walked.map(|_| BigInt::from(no_centre))), v(12)]
        },
    ).note("the twelve listed palindromes are those of two red squares and white total 6 with no central tile"));
    out.push(IdentityRecord::new(
        "palindromes-count",
        "$\\Pal(2n) = \\Pal(2n+1) = 2^n$",
        N,
        |s| grid(&[(0, (s.oracle_bound() - 1) / 2)], all),
        |p| {
            vec![
                pal_oracle(2 * p[0]),
                pal_oracle(2 * p[0] + 1),
                v(BigInt::one() << p[0]),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "palindromes-cumulative-zero",
        "$a_1(0,n) = 2^n$",
        N,
        |s| grid(&[(0, s.bound())], all),
        |p| vec![v(a_s(1, 0, p[0])), v(BigInt::one() << p[0])],
    ));
    out.push(
        IdentityRecord::new(
            "palindromes-without",
            "\\Pal(n,k) = \\sum_{j \\geq 0} (-1)^jm(j,n-2j).",
            NK,
            palindrome_domain,
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![pal_hat_oracle(n, k), v(sum(0..=last_term(n, 2), |j| sign(j) * m(j, n - 2 * j)))]
            },
        )
        .note("Pal(n,k) denotes the palindromes of n with no part k; checked for k ≥ 1")
        .corrected(
            "\\Pal(n,\\widehat k) = \\sum_{j \\geq 0} (-1)^{\\lceil j/2 \\rceil}m(j,n-jk)",
            palindrome_domain,
            pal_signed,
        )
        .candidate(
            "k-weighted summand",
            "\\Pal(n,\\widehat k) = \\sum_{j \\geq 0} (-1)^jm(j,n-jk)",
            palindrome_domain,
            |p| {
                let (n, k) = (p[0], p[1]);
                vec![pal_hat_oracle(n, k), v(sum(0..=last_term(n, k), |j| sign(j) * m(j, n - j * k)))]
            },
        )
        .candidate(
            "central-part sum",
            "\\Pal(n,\\widehat k) = \\sum_{\\ell \\equiv n \\ (2),\\ \\ell \\neq k} C((n-\\ell)/2,\\widehat k)",
            palindrome_domain,
            pal_central,
        ),
    );
    out.push(
        IdentityRecord::new(
            "palindromes-without-same-parity",
            "\\Pal(n,k) = \\sum_{j \\geq} (-1)^j(a_1(j,n-jk) - a(j,n-(j+1)k)),",
            NK,
            |s| palindrome_domain(s).into_iter().filter(|p| (p[0] - p[1]) % 2 == 0).collect(),
            |p| {
                let (n, k) = (p[0], p[1]);
                let rhs = sum(0..=last_term(n, k), |j| sign(j) * (a_s(1, j, n - j * k) - a(j, n - (j + 1) * k)));
                vec![pal_hat_oracle(n, k), v(rhs)]
            },
        )
        .note("the summation is read as j ≥ 0")
        .corrected(
            "\\Pal(n,\\widehat k) = \\sum_{j \\geq 0} (-1)^{\\lceil j/2 \\rceil}m(j,n-jk) \\text{ for } n \\equiv k \\pmod 2",
            |s| palindrome_domain(s).into_iter().filter(|p| (p[0] - p[1]) % 2 == 0).collect(),
            pal_signed,
        ),
    );
    out.push(
        IdentityRecord::new(
            "palindromes-without-mixed-parity",
            "\\Pal(n,k) = \\sum_{j \\geq 0} (-1)^j a_1(j,n-2k).",
            NK,
            |s| palindrome_domain(s).into_iter().filter(|p| (p[0] - p[1]) % 2 != 0).collect(),
            |p| {
                let (n, k) = (p[0], p[1]);
                let rhs = if n - 2 * k >= 0 {
                    Value::undefined("the summand does not depend on j and never vanishes")
                } else {
                    v(0)
                };
                vec![pal_hat_oracle(n, k), rhs]
            },
        )
        .corrected(
            "\\Pal(n,\\widehat k) = \\sum_{j \\geq 0} (-1)^{\\lceil j/2 \\rceil}m(j,n-jk) \\text{ for } n \\not\\equiv k \\pmod 2",
            |s| palindrome_domain(s).into_iter().filter(|p| (p[0] - p[1]) % 2 != 0).collect(),
            pal_signed,
        ),
    );
    out.push(IdentityRecord::new(
        "palindromes-central-part",
        "(c_1,c_2,\\dots,c_s,\\ell, c_s,\\dots,c_2,c_1)",
        NK,
        palindrome_domain,
        pal_central,
    ).note("ℓ ranges over the centres of the same parity as n, ℓ = 0 meaning no centre, and excludes ℓ = k"));
    out.push(
        IdentityRecord::new(
            "palindromes-with-part",
            "\\Pal(n) - \\Pal(n,\\widehat k) = \\sum_{j \\geq 1} (-1)^{j-1}(m(2j-1, n-(2j-1)k) + m(2j,2jk)).",
            NK,
            palindrome_domain,
            |p| {
                let (n, k) = (p[0], p[1]);
                let lhs = v(so::palindromes(&o(), u(n)).and_then(|x| Ok(x - so::palindromes_without(&o(), u(n), u(k))?)));
                vec![lhs, Value::undefined("the summand m(2j,2jk) never vanishes")]
            },
        )
        .corrected(
            "\\Pal(n) - \\Pal(n,\\widehat k) = \\sum_{j \\geq 1} (-1)^{j-1}(m(2j-1, n-(2j-1)k) + m(2j,n-2jk))",
            palindrome_domain,
            |p| {
                let (n, k) = (p[0], p[1]);
                let lhs = v(so::palindromes(&o(), u(n)).and_then(|x| Ok(x - so::palindromes_without(&o(), u(n), u(k))?)));
                let rhs = sum(1..=last_term(n, k), |j| {
                    sign(j - 1) * (m(2 * j - 1, n - (2 * j - 1) * k) + m(2 * j, n - 2 * j * k))
                });
                vec![lhs, v(rhs)]
            },
        ),
    );
}

fn examples(out: &mut Vec<IdentityRecord>) {
    let single: Domain = |_| vec![Vec::new()];
    out.push(IdentityRecord::new(
        "example-a55",
        "$a(5,5) = a(4,5) + 2a(5,4) - a(4,4) = 1182$",
        &[],
        single,
        |_| {
            vec![
                v(o().count_tilings(5, 5, &TilingFilter::none())),
                v(a(4, 5) + 2 * a(5, 4) - a(4, 4)),
                v(1182),
            ]
        },
    ));
    out.push(
        IdentityRecord::new(
            "example-part-occurrences",
            "$S(2,4) = 5$",
            &[],
            single,
            |_| vec![v(so::part_occurrences(&o(), 4, 2)), v(stats::part_occurrences(4, 2)), v(5)],
        )
        .note("the example writes the part before the total; the count is for part 2 in compositions of 4"),
    );
    out.push(IdentityRecord::new(
        "example-consecutive",
        "$C_b(4,1) = 7$",
        &[],
        single,
        |_| {
            vec![
                v(so::consecutive(&o(), 4, 1)),
                v(stats::consecutive(4, 1)),
                v(7),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "example-consecutive-exactly",
        "$C_b(4,1,2) = 2$",
        &[],
        single,
        |_| {
            vec![
                v(so::consecutive_exactly(&o(), 4, 1, 2)),
                v(stats::consecutive_exactly(4, 1, 2)),
                v(2),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "example-allowed-parts",
        "$C(5,\\langle 1,2,5\\rangle) = 9$",
        &[],
        single,
        |_| {
            vec![
                v(so::compositions_with_parts(&o(), 5, &[1, 2, 5])),
                v(stats::compositions_with_parts(5, &[1, 2, 5])),
                v(9),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "example-avoiding-multiples",
        "$C(4,[2]) = 3$",
        &[],
        single,
        |_| {
            vec![
                v(so::avoiding_multiples(&o(), 4, 2)),
                v(stats::avoiding_multiples(4, 2)),
                v(3),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "example-tribonacci",
        "$\\dots, 0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149,\\dots$",
        N,
        |_| grid(&[(-1, 10)], all),
        |p| {
            const LISTED: [i64; 12] = [0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149];
            vec![
                v(fibonacci_k(p[0], 3)),
                fib_series(3, p[0]),
                v(LISTED[(p[0] + 1) as usize]),
            ]
        },
    ));
    out.push(IdentityRecord::new(
        "example-negf-table",
        "\\negF(n,3) & -8 & 4 & 1 & -3 & 2 & 0 & -1 & 1 & 0 & 0 & 1 \\\\",
        N,
        |_| grid(&[(-9, 1)], all),
        |p| {
            const LISTED: [i64; 11] = [-8, 4, 1, -3, 2, 0, -1, 1, 0, 0, 1];
            vec![v(neg_fibonacci_k(p[0], 3)), v(LISTED[(p[0] + 9) as usize])]
        },
    ));
}
