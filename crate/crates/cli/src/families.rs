//! The sequences `seq` can emit, each a function of the index `n` and a few
//! named parameters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use tilingkit::{sequences as sq, stats as st};

pub type Params = BTreeMap<&'static str, i64>;

pub struct Family {
    pub name: &'static str,
    pub about: &'static str,
    pub required: &'static [&'static str],
    pub optional: &'static [&'static str],
    pub eval: fn(&Params, i64) -> BigInt,
}

impl Family {
    pub fn signature(&self) -> String {
        let mut s = format!("{} n", self.name);
        for p in self.required {
            s += &format!(" --{p} <int>");
        }
        for p in self.optional {
            s += &format!(" [--{p} <int>]");
        }
        s
    }
}

fn k32(p: &Params) -> u32 {
    p["k"].max(0) as u32
}

pub static FAMILIES: &[Family] = &[
    Family {
        name: "a",
        about: "two-toned tilings a(r,n)",
        required: &["r"],
        optional: &[],
        eval: |p, n| sq::a(p["r"], n),
    },
    Family {
        name: "as",
        about: "tilings ending in s white tiles, a_s(r,n)",
        required: &["s", "r"],
        optional: &[],
        eval: |p, n| sq::a_s(p["s"], p["r"], n),
    },
    Family {
        name: "ak",
        about: "tilings with white tiles of length at most k, a(r,n,k)",
        required: &["r", "k"],
        optional: &[],
        eval: |p, n| sq::a_k(p["r"], n, k32(p)),
    },
    Family {
        name: "f",
        about: "k-step Fibonacci numbers F(n,k)",
        required: &["k"],
        optional: &[],
        eval: |p, n| sq::fibonacci_k(n, k32(p)),
    },
    Family {
        name: "fconv",
        about: "r-th convolution F(n,k,r)",
        required: &["k", "r"],
        optional: &[],
        eval: |p, n| sq::fibonacci_k_conv(n, k32(p), p["r"]),
    },
    Family {
        name: "negf",
        about: "k-step Fibonacci numbers at any integer index, negF(n,k)",
        required: &["k"],
        optional: &[],
        eval: |p, n| sq::neg_fibonacci_k(n, k32(p).max(1)),
    },
    Family {
        name: "pell",
        about: "Pell numbers P(n)",
        required: &[],
        optional: &[],
        eval: |_, n| sq::pell(n),
    },
    Family {
        name: "L",
        about: "compositions containing k; with --m, parts at most k containing m; with --p, at least p copies",
        required: &["k"],
        optional: &["m", "p"],
        eval: |p, n| match (p.get("m"), p.get("p")) {
            (None, None) => st::with_part(n, p["k"]),
            (Some(&m), None) => st::with_part_bounded(n, m, p["k"]),
            (m, Some(&c)) => st::with_at_least(n, m.copied().unwrap_or(p["k"]), bound_or_n(m, p, n), c),
        },
    },
    Family {
        name: "Ep",
        about: "compositions with exactly p copies of k; with --m, parts at most k and exactly p copies of m",
        required: &["k", "p"],
        optional: &["m"],
        eval: |p, n| match p.get("m") {
            None => st::exactly_unbounded(n, p["k"], p["p"]),
            Some(&m) => st::with_exactly(n, m, p["k"], p["p"]),
        },
    },
    Family {
        name: "S",
        about: "total occurrences of the part k over compositions of n",
        required: &["k"],
        optional: &[],
        eval: |p, n| st::part_occurrences(n, p["k"]),
    },
    Family {
        name: "G",
        about: "compositions with largest part k",
        required: &["k"],
        optional: &[],
        eval: |p, n| st::largest_part(n, p["k"]),
    },
    Family {
        name: "Gr",
        about: "compositions with parts at most k and exactly r copies of k",
        required: &["k", "r"],
        optional: &[],
        eval: |p, n| st::largest_part_times(n, p["k"], p["r"]),
    },
    Family {
        name: "CF",
        about: "compositions with the part k frozen",
        required: &["k"],
        optional: &[],
        eval: |p, n| st::frozen(n, p["k"]),
    },
    Family {
        name: "Cb",
        about: "compositions whose copies of k are consecutive; with --p, exactly p of them",
        required: &["k"],
        optional: &["p"],
        eval: |p, n| match p.get("p") {
            None => st::consecutive(n, p["k"]),
            Some(&c) => st::consecutive_exactly(n, p["k"], c),
        },
    },
    Family {
        name: "Chat",
        about: "compositions without the part k; with --m, tilings with m reds and no white tile of length k",
        required: &["k"],
        optional: &["m"],
        eval: |p, n| match p.get("m") {
            None => st::without_part(n, p["k"]),
            Some(&m) => st::tilings_avoiding(n, m, p["k"]),
        },
    },
    Family {
        name: "Cmult",
        about: "compositions with no part a multiple of k",
        required: &["k"],
        optional: &[],
        eval: |p, n| st::avoiding_multiples(n, p["k"]),
    },
    Family {
        name: "R",
        about: "total number of runs over compositions of n",
        required: &[],
        optional: &[],
        eval: |_, n| st::runs_total(n),
    },
    Family {
        name: "Rk",
        about: "runs of the part k; with --l, runs of exactly l copies",
        required: &["k"],
        optional: &["l"],
        eval: |p, n| match p.get("l") {
            None => st::runs_of_part(n, p["k"]),
            Some(&l) => st::runs_of_part_length(n, p["k"], l),
        },
    },
    Family {
        name: "E",
        about: "total number of parts over compositions of n",
        required: &[],
        optional: &[],
        eval: |_, n| st::parts_total(n),
    },
    Family {
        name: "m",
        about: "palindromic tilings m(r,n)",
        required: &["r"],
        optional: &[],
        eval: |p, n| st::palindromic_tilings(p["r"], n),
    },
    Family {
        name: "pal",
        about: "palindromic compositions of n",
        required: &[],
        optional: &[],
        eval: |_, n| st::palindromes(n),
    },
    Family {
        name: "palhat",
        about: "palindromic compositions of n without the part k",
        required: &["k"],
        optional: &[],
        eval: |p, n| st::palindromes_without(n, p["k"]),
    },
    Family {
        name: "Ca",
        about: "total tiles over tilings with r reds and white total n",
        required: &["r"],
        optional: &[],
        eval: |p, n| st::tile_total(p["r"], n),
    },
    Family {
        name: "runs",
        about: "runs over compositions with parts at most k; with --j, runs of the part j",
        required: &["k"],
        optional: &["j"],
        eval: |p, n| match p.get("j") {
            None => st::runs_bounded(n, p["k"]),
            Some(&j) => st::runs_of_part_bounded(n, j, p["k"]),
        },
    },
];

/// `L --p` without `--m` counts at least p copies of k with parts unbounded,
/// which is the bounded count with the bound at n.
fn bound_or_n(m: Option<&i64>, p: &Params, n: i64) -> i64 {
    if m.is_some() {
        p["k"]
    } else {
        n.max(p["k"])
    }
}

pub fn find(name: &str) -> Option<&'static Family> {
    FAMILIES.iter().find(|f| f.name == name)
}
