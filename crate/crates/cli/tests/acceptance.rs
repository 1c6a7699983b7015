//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Some criteria cannot pass because the printed source is wrong at the
//! checked points. Those are listed in `KNOWN_FAILURES` together with the
//! exact failure detail; the run exits nonzero if any criterion fails in a
//! way not listed there, or if a listed one starts passing.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::Value as Json;
use tilingkit::identities::{
    check_conjecture_1, check_runs_conjecture, run_registry, Scale, Status,
};
use tilingkit::sequences::{a, a_k, a_s, neg_fibonacci_k, pell};
use tilingkit::series::{expand, Poly, RationalGF, TruncatedSeries};
use tilingkit::stats::{self, oracle as so};
use tilingkit::{Oracle, PartConstraint, TilingFilter};

const TABLE_BUDGET: Duration = Duration::from_secs(5);
const TRIPLE_BUDGET: Duration = Duration::from_secs(60);
/// Largest r + n (or n alone, for composition statistics) in the triples.
const TRIPLE_BOUND: i64 = 16;
const CONJECTURE_1_BOUND: i64 = 12;
const RUNS_BOUND: i64 = 18;

const KNOWN_FAILURES: &[(&str, &str)] = &[
    ("1", "T_diag (5, 1) printed 10 but computed 11"),
    (
        "3b",
        "fail as printed: negf-theorem, consecutive-exactly, pell",
    ),
    (
        "4a",
        "counterexample at n=1, r=1, s=3: cumulative sum 5, closed form 0",
    ),
];

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tilingkit"))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("tilingkit runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

// -- 1 ------------------------------------------------------------------

fn tables() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut populated = 0;
    let mut bold = Vec::new();
    for id in ["T1", "T_as2", "T_diag", "T_F3", "T_m"] {
        let (code, text) = run_cli(&["table", id, "--format", "json"]);
        assert_eq!(code, 0, "table {id} exits 0");
        let doc: Json = serde_json::from_str(&text).expect("table json");
        for cell in doc["rows"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|r| r.as_array().unwrap())
        {
            if cell["bold"] == true {
                bold.push(cell["value"].as_str().unwrap().to_string());
            }
            let Some(printed) = cell["published"].as_i64() else {
                continue;
            };
            populated += 1;
            let value = cell["value"].as_str().unwrap();
            if value != printed.to_string() {
                mismatches.push(format!(
                    "{id} ({}, {}) printed {printed} but computed {value}",
                    cell["row"], cell["col"]
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let mut problems = mismatches;
    if bold != ["4", "8", "5", "1"] {
        problems.push(format!("bold diagonal is {bold:?}"));
    }
    if elapsed > TABLE_BUDGET {
        problems.push(format!("took {elapsed:?}"));
    }
    Outcome {
        id: "1",
        title: "table reproduction",
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{populated} populated cells match, bold diagonal 4 8 5 1")
        } else {
            problems.join("; ")
        },
    }
}

// -- 2 ------------------------------------------------------------------

fn gf(num: &[i64], den: &[i64]) -> RationalGF {
    RationalGF::from_ints(num, den)
}

fn coeffs(g: &RationalGF) -> TruncatedSeries {
    expand(g, TRIPLE_BOUND as usize).expect("expandable")
}

fn int(s: &TruncatedSeries, n: i64) -> BigInt {
    let c = s.coeff(n as usize);
    assert!(c.is_integer(), "nonintegral coefficient {c}");
    c.to_integer()
}

/// `1 - Σ_{s ∈ parts} x^s`.
fn allowed_den(parts: impl IntoIterator<Item = usize>) -> Poly {
    parts
        .into_iter()
        .fold(Poly::one(), |acc, s| &acc - &Poly::monomial(1, s))
}

struct Triples {
    checked: usize,
    mismatches: Vec<String>,
}

impl Triples {
    fn check(&mut self, what: &str, values: [BigInt; 3]) {
        self.checked += 1;
        if values[0] != values[1] || values[1] != values[2] {
            let [f, o, g] = values;
            self.mismatches
                .push(format!("{what}: formula {f}, oracle {o}, series {g}"));
        }
    }
}

fn u(x: i64) -> u32 {
    x as u32
}

fn triples() -> Outcome {
    let start = Instant::now();
    // a(8,8) alone visits more tilings than the default guard allows.
    let o = Oracle::with_ceiling(1 << 32);
    let mut t = Triples {
        checked: 0,
        mismatches: Vec::new(),
    };
    let tilings = |r: i64, n: i64, f: &TilingFilter| -> BigInt {
        o.count_tilings(u(r), u(n), f).expect("within ceiling")
    };

    for r in 0..=TRIPLE_BOUND {
        let base = gf(&[1, -1], &[1, -2]).pow(u(r) + 1);
        let s0 = coeffs(&base);
        for n in 0..=TRIPLE_BOUND - r {
            t.check(
                &format!("a({r},{n})"),
                [a(r, n), tilings(r, n, &TilingFilter::none()), int(&s0, n)],
            );
        }
        for s in 1..=4 {
            let series = coeffs(&(&gf(&[1], &[1, -1]).pow(u(s)) * &base));
            for n in 0..=TRIPLE_BOUND - r {
                t.check(
                    &format!("a_{s}({r},{n})"),
                    [
                        a_s(s, r, n),
                        tilings(r, n, &TilingFilter::suffix(u(s))),
                        int(&series, n),
                    ],
                );
            }
        }
        for k in 1..=5u32 {
            // r + 1 independent white runs, each a composition with parts ≤ k.
            let run = RationalGF::new(Poly::one(), allowed_den(1..=k as usize));
            let series = coeffs(&run.pow(u(r) + 1));
            for n in 0..=TRIPLE_BOUND - r {
                t.check(
                    &format!("a({r},{n},{k})"),
                    [
                        a_k(r, n, k),
                        tilings(r, n, &TilingFilter::max_white(k)),
                        int(&series, n),
                    ],
                );
            }
        }
    }

    let order = TRIPLE_BOUND as usize;
    for k in 1..=TRIPLE_BOUND {
        let ku = k as usize;
        let without = coeffs(&RationalGF::new(
            Poly::one(),
            allowed_den((1..=order).filter(|&p| p != ku)),
        ));
        let frozen = coeffs(&RationalGF::new(
            Poly::one(),
            allowed_den((1..=ku).chain([2 * ku])),
        ));
        let bounded = |m: usize| coeffs(&RationalGF::new(Poly::one(), allowed_den(1..=m)));
        let largest = &bounded(ku) - &bounded(ku - 1);
        for n in 0..=TRIPLE_BOUND {
            let on = |f: fn(&Oracle, u32, u32) -> Result<BigInt, _>| f(&o, u(n), u(k)).unwrap();
            t.check(
                &format!("C({n},^{k})"),
                [
                    stats::without_part(n, k),
                    on(so::without_part),
                    int(&without, n),
                ],
            );
            t.check(
                &format!("CF({n},{k})"),
                [stats::frozen(n, k), on(so::frozen), int(&frozen, n)],
            );
            t.check(
                &format!("G({n},{k})"),
                [
                    stats::largest_part(n, k),
                    on(so::largest_part),
                    int(&largest, n),
                ],
            );
        }
    }

    // P(n+1) weighs each composition of n into 1s and 2s by 2^(number of 1s).
    let pell_series = coeffs(&gf(&[0, 1], &[1, -2, -1]));
    let two_colour = PartConstraint::allowed([1, 2]);
    for n in 0..=TRIPLE_BOUND {
        let mut weighted = BigInt::from(0);
        if n >= 1 {
            o.for_each_composition(u(n - 1), &two_colour, |parts| {
                weighted += BigInt::from(1) << parts.iter().filter(|&&p| p == 1).count();
            })
            .unwrap();
        }
        t.check(
            &format!("P({n})"),
            [pell(n), weighted, int(&pell_series, n)],
        );
    }

    let elapsed = start.elapsed();
    let mut problems = t.mismatches;
    if elapsed > TRIPLE_BUDGET {
        problems.push(format!("took {elapsed:?}"));
    }
    Outcome {
        id: "2",
        title: "formula, oracle and series agree",
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{} triples agree in {:.1?}", t.checked, elapsed)
        } else {
            problems.join("; ")
        },
    }
}

// -- 3 ------------------------------------------------------------------

/// Named results that should verify.
const NAMED: &[&str] = &[
    "fib-tiling",
    "negf-theorem",
    "fconv-alternating",
    "with-part-bounded",
    "with-at-least",
    "with-exactly",
    "largest-part-bridge",
    "largest-part-times",
    "frozen-without",
    "frozen-allowed",
    "frozen-convolutions",
    "replaced-compositions",
    "replaced-parts",
    "tile-total",
    "consecutive",
    "consecutive-exactly",
    "consecutive-exactly-alternating",
    "avoiding-multiples",
    "runs-of-part",
    "runs-total",
    "parts-runs-lemma",
    "pell",
    // The m case split as the proof derives it; the displayed lines are
    // among the errata below.
    "palindromic-tilings-proof",
    "palindromic-tilings-odd-reds",
];

/// Printed forms known to be wrong, each needing a recorded counterexample
/// and a reading that holds.
const ERRATA: &[&str] = &[
    "ak-recurrence",
    "part-occurrences-headline",
    "palindromes-without",
    "palindromes-without-same-parity",
    "palindromes-without-mixed-parity",
    "palindromes-with-part",
    "palindromic-tilings-even",
    "palindromic-tilings-odd-total",
    "replaced-compositions-sum",
];

fn registry() -> Vec<Outcome> {
    let report = run_registry(Scale::Default, None);
    let find = |id: &str| {
        report
            .records
            .iter()
            .find(|r| r.id == id)
            .unwrap_or_else(|| panic!("record {id} exists"))
    };
    let s = &report.summary;
    let a = Outcome {
        id: "3a",
        title: "registry matches expected statuses at default scale",
        pass: report.all_match(),
        detail: if report.all_match() {
            format!(
                "{} records: {} verified, {} fail as printed, {} conjecture, {} refuted",
                s.records, s.verified, s.fails_as_printed, s.conjecture, s.refuted
            )
        } else {
            format!("mismatched: {}", s.mismatched.join(", "))
        },
    };

    let failing: Vec<&str> = NAMED
        .iter()
        .copied()
        .filter(|id| find(id).status != Status::Verified)
        .collect();
    let b = Outcome {
        id: "3b",
        title: "named results verify",
        pass: failing.is_empty(),
        detail: if failing.is_empty() {
            format!("{} named records verified", NAMED.len())
        } else {
            format!("fail as printed: {}", failing.join(", "))
        },
    };

    let bad: Vec<&str> = ERRATA
        .iter()
        .copied()
        .filter(|id| {
            let r = find(id);
            let resolved = r.resolution.as_deref().is_some_and(|x| x != "none");
            r.status != Status::FailsAsPrinted || r.counterexample.is_none() || !resolved
        })
        .collect();
    let c = Outcome {
        id: "3c",
        title: "errata carry counterexamples and a holding reading",
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} errata resolved", ERRATA.len())
        } else {
            format!("unresolved: {}", bad.join(", "))
        },
    };
    vec![a, b, c]
}

// -- 4 ------------------------------------------------------------------

fn conjectures() -> Vec<Outcome> {
    let b = CONJECTURE_1_BOUND;
    let c1 = check_conjecture_1(b, b, b);
    let detail = match &c1.first_counterexample {
        None => format!("{} points, bounds {:?}", c1.points, c1.bounds),
        Some(cx) => format!(
            "counterexample at n={}, r={}, s={}: cumulative sum {}, closed form {}",
            cx.point["n"], cx.point["r"], cx.point["s"], cx.values[0], cx.values[1]
        ),
    };
    let runs = check_runs_conjecture(RUNS_BOUND);
    vec![
        Outcome {
            id: "4a",
            title: "cumulative closed form for 1 <= s,r,n <= 12",
            pass: c1.holds,
            detail,
        },
        Outcome {
            id: "4b",
            title: "run-length formula for n <= 18",
            pass: runs.holds,
            detail: format!(
                "{} points, {} failures, bounds {:?}",
                runs.points, runs.failures, runs.bounds
            ),
        },
    ]
}

// -- 5 ------------------------------------------------------------------

fn spot_values() -> Outcome {
    let o = Oracle::default();
    let n = |x: i64| BigInt::from(x);
    // (what, formula, oracle where one applies, expected)
    let checks: Vec<(&str, BigInt, Option<BigInt>, i64)> = vec![
        (
            "a(5,5)",
            a(5, 5),
            Some(o.count_tilings(5, 5, &TilingFilter::none()).unwrap()),
            1182,
        ),
        (
            "C_b(4,1)",
            stats::consecutive(4, 1),
            Some(so::consecutive(&o, 4, 1).unwrap()),
            7,
        ),
        (
            "C_b(4,1,2)",
            stats::consecutive_exactly(4, 1, 2),
            Some(so::consecutive_exactly(&o, 4, 1, 2).unwrap()),
            2,
        ),
        (
            "C(5,<1,2,5>)",
            stats::compositions_with_parts(5, &[1, 2, 5]),
            Some(so::compositions_with_parts(&o, 5, &[1, 2, 5]).unwrap()),
            9,
        ),
        (
            "C(4,[2])",
            stats::avoiding_multiples(4, 2),
            Some(so::avoiding_multiples(&o, 4, 2).unwrap()),
            3,
        ),
        (
            "S(4,2)",
            stats::part_occurrences(4, 2),
            Some(so::part_occurrences(&o, 4, 2).unwrap()),
            5,
        ),
        (
            "Pal(6)",
            stats::palindromes(6),
            Some(so::palindromes(&o, 6).unwrap()),
            8,
        ),
        (
            "Pal(7)",
            stats::palindromes(7),
            Some(so::palindromes(&o, 7).unwrap()),
            8,
        ),
        ("negF(-9,3)", neg_fibonacci_k(-9, 3), None, -8),
    ];
    let mut wrong = Vec::new();
    for (what, formula, oracle, want) in &checks {
        if *formula != n(*want) || oracle.as_ref().is_some_and(|x| *x != n(*want)) {
            wrong.push(format!(
                "{what} = {formula} (oracle {oracle:?}), expected {want}"
            ));
        }
    }
    Outcome {
        id: "5",
        title: "spot values",
        pass: wrong.is_empty(),
        detail: if wrong.is_empty() {
            format!("{} values exact", checks.len())
        } else {
            wrong.join("; ")
        },
    }
}

// -- 6 ------------------------------------------------------------------

fn determinism() -> Outcome {
    let args = ["verify", "--scale", "default"];
    let (c1, first) = run_cli(&args);
    let (c2, second) = run_cli(&args);
    let same = first == second && !first.is_empty();
    Outcome {
        id: "6",
        title: "verify --scale default is byte-identical across runs",
        pass: same && c1 == 0 && c2 == 0,
        detail: format!(
            "{} bytes, exit codes {c1} {c2}, identical: {same}",
            first.len()
        ),
    }
}

fn main() {
    let mut outcomes = vec![tables(), triples()];
    outcomes.extend(registry());
    outcomes.extend(conjectures());
    outcomes.push(spot_values());
    outcomes.push(determinism());

    let mut surprises = 0;
    for o in &outcomes {
        let known = KNOWN_FAILURES.iter().find(|(id, _)| *id == o.id);
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let tag = match (o.pass, known) {
            (false, Some((_, d))) if *d == o.detail => " [known]",
            (true, None) => "",
            (true, Some(_)) => {
                surprises += 1;
                " [listed as a known failure; update KNOWN_FAILURES]"
            }
            (false, _) => {
                surprises += 1;
                " [unexpected]"
            }
        };
        println!("{verdict} {}: {}: {}{tag}", o.id, o.title, o.detail);
    }
    if surprises > 0 {
        eprintln!("{surprises} criteria deviate from the recorded analysis");
        std::process::exit(1);
    }
}
