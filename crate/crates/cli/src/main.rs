use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tilingkit::identities::{self, check_conjecture_1, check_runs_conjecture, Scale};
use tilingkit::tables::{self, TableId};
use tilingkit::{Oracle, OracleError, PartConstraint, TilingFilter};

mod families;
mod render;

use render::Format;

const CEILING_VAR: &str = "TILINGKIT_ORACLE_CEILING";

#[derive(Parser)]
#[command(
    name = "tilingkit",
    version,
    about = "Two-toned tilings, restricted compositions and their identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit terms of a counting sequence.
    Seq(SeqArgs),
    /// Recompute a published table and compare it with the printed values.
    Table {
        /// T1, T_as2, T_diag, T_F3 or T_m.
        id: TableId,
        #[arg(long, value_enum, default_value = "pretty-table")]
        format: Format,
    },
    /// Check the identity registry against its expected statuses.
    Verify(VerifyArgs),
    /// Run the conjecture records, or probe them directly with --probe.
    Conjecture {
        #[arg(long, default_value = "default")]
        scale: Scale,
        /// Evaluate the conjectures over explicit bounds instead.
        #[arg(long)]
        probe: bool,
        /// Bound on s, r and n for the cumulative closed form.
        #[arg(long, default_value_t = 12)]
        max: i64,
        /// Bound on n for the run-length formula.
        #[arg(long, default_value_t = 18)]
        max_n: i64,
    },
    /// Enumerate tilings, compositions or palindromic tilings by brute force.
    Oracle {
        #[command(subcommand)]
        kind: OracleKind,
    },
}

#[derive(Args)]
struct SeqArgs {
    /// Sequence family; `seq --list` shows them all.
    #[arg(required_unless_present = "list")]
    family: Option<String>,
    /// Inclusive index range, e.g. 0..10 or -9..1.
    #[arg(long, default_value = "0..10", allow_hyphen_values = true)]
    range: String,
    #[arg(long, value_enum, default_value = "bfile")]
    format: Format,
    #[arg(long)]
    list: bool,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    #[arg(long)]
    s: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    m: Option<i64>,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    j: Option<i64>,
    #[arg(long)]
    l: Option<i64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "default")]
    scale: Scale,
    /// Glob over record ids, e.g. "pal*".
    #[arg(long)]
    filter: Option<String>,
    /// json for the full report, pretty-table for one line per record.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum OracleKind {
    Tilings {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max_white: Option<u32>,
        #[arg(long)]
        forbid: Option<u32>,
        /// Require the last s tiles to be white (white total becomes n + s).
        #[arg(long, default_value_t = 0)]
        suffix: u32,
        #[arg(long)]
        palindromic: bool,
        #[arg(long)]
        count_only: bool,
    },
    Compositions {
        #[arg(long)]
        n: u32,
        #[arg(long, conflicts_with_all = ["forbid", "parts", "no_multiple_of"])]
        max_part: Option<u32>,
        #[arg(long, conflicts_with_all = ["parts", "no_multiple_of"])]
        forbid: Option<u32>,
        /// Allowed parts, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "no_multiple_of")]
        parts: Option<Vec<u32>>,
        #[arg(long)]
        no_multiple_of: Option<u32>,
        #[arg(long)]
        count_only: bool,
    },
    Palindromes {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        count_only: bool,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Guard(OracleError),
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Guard(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = stdout.write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(e)) => {
            eprintln!("error: {e}; raise {CEILING_VAR} to allow it");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Seq(args) => seq(args, out),
        Command::Table { id, format } => {
            *out = render::table(format, &tables::table(id)).map_err(Failure::Usage)?;
            Ok(())
        }
        Command::Verify(args) => verify(args, out),
        Command::Conjecture {
            scale,
            probe: false,
            ..
        } => verify(
            VerifyArgs {
                scale,
                filter: Some("conjecture*".into()),
                format: Format::Json,
            },
            out,
        ),
        Command::Conjecture { max, max_n, .. } => {
            let reports = [
                check_conjecture_1(max, max, max),
                check_runs_conjecture(max_n),
            ];
            *out = serde_json::to_string_pretty(&reports).unwrap() + "\n";
            if reports.iter().all(|r| r.holds) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Oracle { kind } => oracle(kind, out),
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("range '{s}' is not of the form lo..hi"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if hi < lo {
        return Err(Failure::Usage(format!("range '{s}' is empty")));
    }
    Ok((lo, hi))
}

fn seq(args: SeqArgs, out: &mut String) -> Result<(), Failure> {
    if args.list {
        for f in families::FAMILIES {
            out.push_str(&format!("{:<44} {}\n", f.signature(), f.about));
        }
        return Ok(());
    }
    let name = args.family.as_deref().unwrap_or_default();
    let family = families::find(name).ok_or_else(|| {
        let names: Vec<&str> = families::FAMILIES.iter().map(|f| f.name).collect();
        Failure::Usage(format!(
            "unknown family '{name}'; expected one of {}",
            names.join(", ")
        ))
    })?;
    let given = [
        ("r", args.r),
        ("s", args.s),
        ("k", args.k),
        ("m", args.m),
        ("p", args.p),
        ("j", args.j),
        ("l", args.l),
    ];
    let mut params = families::Params::new();
    for (key, value) in given {
        let Some(value) = value else { continue };
        if !family.required.contains(&key) && !family.optional.contains(&key) {
            return Err(Failure::Usage(format!(
                "--{key} does not apply; usage: seq {}",
                family.signature()
            )));
        }
        params.insert(key, value);
    }
    if let Some(missing) = family.required.iter().find(|k| !params.contains_key(*k)) {
        return Err(Failure::Usage(format!(
            "missing --{missing}; usage: seq {}",
            family.signature()
        )));
    }
    let (lo, hi) = parse_range(&args.range)?;
    let values: Vec<_> = (lo..=hi).map(|n| (family.eval)(&params, n)).collect();
    let shown: Vec<(&str, i64)> = params.iter().map(|(k, v)| (*k, *v)).collect();
    *out = render::sequence(args.format, family.name, &shown, lo, &values);
    Ok(())
}

fn verify(args: VerifyArgs, out: &mut String) -> Result<(), Failure> {
    let report = identities::run_registry(args.scale, args.filter.as_deref());
    match args.format {
        Format::Json => *out = report.to_json() + "\n",
        Format::Pretty => {
            for r in &report.records {
                let mark = if r.matches_expected { "ok" } else { "MISMATCH" };
                out.push_str(&format!(
                    "{:<8} {:<17} {:<36} {:>6}\n",
                    mark,
                    r.status.to_string(),
                    r.id,
                    r.points
                ));
            }
            let s = &report.summary;
            out.push_str(&format!(
                "{} records, {} match; verified {}, fails-as-printed {}, conjecture {}, refuted {}, unresolved {}\n",
                s.records, s.matched, s.verified, s.fails_as_printed, s.conjecture, s.refuted, s.unresolved
            ));
        }
        Format::Bfile | Format::Csv => {
            return Err(Failure::Usage("verify writes json or pretty-table".into()));
        }
    }
    if report.records.is_empty() {
        return Err(Failure::Usage(format!(
            "filter '{}' matches no record",
            args.filter.unwrap_or_default()
        )));
    }
    if report.all_match() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn oracle_from_env() -> Result<Oracle, Failure> {
    match std::env::var(CEILING_VAR) {
        Ok(v) => v.trim().parse().map(Oracle::with_ceiling).map_err(|_| {
            Failure::Usage(format!("{CEILING_VAR}='{v}' is not a nonnegative integer"))
        }),
        Err(_) => Ok(Oracle::default()),
    }
}

fn oracle(kind: OracleKind, out: &mut String) -> Result<(), Failure> {
    let o = oracle_from_env()?;
    fn lines<T: ToString>(items: Vec<T>) -> String {
        items.iter().map(|t| t.to_string() + "\n").collect()
    }
    *out = match kind {
        OracleKind::Tilings {
            r,
            n,
            max_white,
            forbid,
            suffix,
            palindromic,
            count_only,
        } => {
            let filter = TilingFilter {
                max_white_len: max_white,
                forbidden_white_len: forbid,
                suffix_white_tiles: suffix,
                palindromic,
            };
            if count_only {
                format!("{}\n", o.count_tilings(r, n, &filter)?)
            } else {
                lines(o.enumerate_tilings(r, n, &filter)?)
            }
        }
        OracleKind::Palindromes { r, n, count_only } => {
            if count_only {
                format!("{}\n", o.count_tilings(r, n, &TilingFilter::palindromic())?)
            } else {
                lines(o.enumerate_palindromic_tilings(r, n)?)
            }
        }
        OracleKind::Compositions {
            n,
            max_part,
            forbid,
            parts,
            no_multiple_of,
            count_only,
        } => {
            let constraint = match (max_part, forbid, parts, no_multiple_of) {
                (Some(k), ..) => PartConstraint::MaxPart(k),
                (_, Some(k), ..) => PartConstraint::ForbiddenPart(k),
                (_, _, Some(set), _) => PartConstraint::allowed(set),
                (.., Some(k)) => PartConstraint::NoMultipleOf(k),
                _ => PartConstraint::Unrestricted,
            };
            if count_only {
                format!("{}\n", o.count_compositions(n, &constraint)?)
            } else {
                lines(o.enumerate_compositions(n, &constraint)?)
            }
        }
    };
    Ok(())
}
