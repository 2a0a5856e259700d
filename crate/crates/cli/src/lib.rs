//! Command-line front end. [`run`] takes the argument list and returns the
//! exit code with everything that would be written to stdout and stderr, so
//! the binary is a thin wrapper and tests can drive the CLI in-process.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use weyl_schur::audit::audit_sweep;
use weyl_schur::oracle::{freudenthal, kostka_multiplicity};
use weyl_schur::orbitchar::{orbit_char_x, reduce_to_generators};
use weyl_schur::partition::{partitions, Partition};
use weyl_schur::poly::{Coefficient, Monomial, Poly};
use weyl_schur::schur::generalized_schur;
use weyl_schur::solver::{dimension, solve_multiplicities_with, MultiplicityTable};
use weyl_schur::weyl::weyl_character_u;
use weyl_schur::{sub_q_lambda1, AlgebraContext, DominantWeight, Error, Execution, SchurContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_AUDIT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "weyl-schur", version, about = "A_{N-1} weight multiplicities through degenerated Schur functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dominant weight multiplicities of an irreducible representation.
    Mult {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Cross-check every entry against Freudenthal and Kostka.
        #[arg(long, value_enum, default_value_t = Toggle::Off)]
        oracle: Toggle,
    },
    /// The (degenerated, generalized) Schur function of a partition.
    Schur {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        partition: Partition,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Weyl orbit of a dominant weight and its orbit character.
    Orbit {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The Weyl character A(rho + L) / A(rho) as a polynomial in u_1..u_N.
    Character {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The dominant weights Sub(Q λ1): partitions of Q with at most N rows.
    Sub {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        height: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare the solver with Freudenthal, Kostka and the alternant quotient.
    Audit {
        /// Values of N to sweep.
        #[arg(long, value_delimiter = ',', default_values_t = [3usize, 4, 5])]
        ranks: Vec<usize>,
        /// Maximum height of the highest weights.
        #[arg(long, default_value_t = 5)]
        height: u32,
        #[arg(long, value_enum, default_value_t = Mode::Parallel)]
        mode: Mode,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Wall time of the solver against alternant division over an (N, height) grid.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [3usize, 4, 5, 6])]
        ranks: Vec<usize>,
        #[arg(long, default_value_t = 6)]
        height: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct WeightArgs {
    /// N, so that the algebra is A_{N-1}.
    #[arg(long)]
    rank: usize,
    /// Highest weight in λ-coordinates, N-1 comma-separated integers.
    #[arg(long, value_delimiter = ',', conflicts_with = "partition", required_unless_present = "partition")]
    weight: Option<Vec<u32>>,
    /// Highest weight as a partition with at most N rows.
    #[arg(long)]
    partition: Option<Partition>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Sequential,
    Parallel,
}

impl From<Mode> for Execution {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Sequential => Execution::Sequential,
            Mode::Parallel => Execution::Parallel,
        }
    }
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Audit(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Run = Result<String, (Failure, String)>;

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Output { code: EXIT_OK, stdout, stderr: String::new() },
        Err((failure, stdout)) => {
            let (code, msg) = match failure {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Audit(m) => (EXIT_AUDIT, m),
                Failure::Internal(m) => (EXIT_INTERNAL, m),
            };
            Output { code, stdout, stderr: format!("error: {msg}\n") }
        }
    }
}

fn fail(e: impl Into<Failure>) -> (Failure, String) {
    (e.into(), String::new())
}

fn dispatch(cmd: Command) -> Run {
    match cmd {
        Command::Mult { weight, out, oracle } => mult(&weight, out.format, oracle == Toggle::On),
        Command::Schur { rank, partition, out } => schur(rank, &partition, out.format),
        Command::Orbit { weight, out } => orbit(&weight, out.format),
        Command::Character { weight, out } => character(&weight, out.format),
        Command::Sub { rank, height, out } => sub(rank, height, out.format),
        Command::Audit { ranks, height, mode, out } => audit(&ranks, height, mode.into(), out.format),
        Command::Bench { ranks, height, out } => bench(&ranks, height, out.format),
    }
}

fn parse_weight(args: &WeightArgs) -> Result<DominantWeight, Failure> {
    let ctx = AlgebraContext::new(args.rank)?;
    match (&args.weight, &args.partition) {
        (Some(coords), None) => Ok(DominantWeight::new(ctx, coords.clone())?),
        (None, Some(p)) => Ok(DominantWeight::from_partition(p, ctx)?),
        _ => Err(Failure::Usage("give exactly one of --weight and --partition".into())),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("serializable");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

fn joined<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct MultJson {
    algebra: String,
    highest_weight: Vec<u32>,
    dimension: u64,
    entries: Vec<EntryJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleJson>,
}

#[derive(Serialize)]
struct EntryJson {
    weight: Vec<u32>,
    partition: Vec<u32>,
    multiplicity: u64,
    orbit_size: u64,
}

#[derive(Serialize)]
struct OracleJson {
    freudenthal: bool,
    kostka: bool,
}

#[derive(Serialize)]
struct EntryCsv {
    weight: String,
    partition: String,
    multiplicity: u64,
    orbit_size: u64,
}

fn mult(args: &WeightArgs, format: Format, with_oracle: bool) -> Run {
    let hw = parse_weight(args).map_err(|f| (f, String::new()))?;
    let sctx = SchurContext::new(hw.ctx());
    let table = solve_multiplicities_with(Execution::default(), &hw, &sctx).map_err(fail)?;
    let oracle = if with_oracle { Some(check_oracles(&hw, &table).map_err(fail)?) } else { None };
    let body = render_table(&table, oracle.as_ref(), format);
    match &oracle {
        Some(o) if !(o.freudenthal && o.kostka) => Err((Failure::Audit(format!("oracle disagreement for {hw}")), body)),
        _ => Ok(body),
    }
}

fn check_oracles(hw: &DominantWeight, table: &MultiplicityTable) -> weyl_schur::Result<OracleJson> {
    let f = freudenthal(hw);
    let mut kostka_ok = true;
    for e in &table.entries {
        kostka_ok &= kostka_multiplicity(hw, &e.weight)? == e.multiplicity;
    }
    let freudenthal_ok = table.entries.iter().all(|e| f.dominant(&e.weight) == e.multiplicity);
    Ok(OracleJson { freudenthal: freudenthal_ok, kostka: kostka_ok })
}

fn render_table(t: &MultiplicityTable, oracle: Option<&OracleJson>, format: Format) -> String {
    let hw = &t.highest_weight;
    match format {
        Format::Json => to_json(&MultJson {
            algebra: hw.ctx().name(),
            highest_weight: hw.coords().to_vec(),
            dimension: t.dimension,
            entries: t
                .entries
                .iter()
                .map(|e| EntryJson {
                    weight: e.weight.coords().to_vec(),
                    partition: e.partition.parts().to_vec(),
                    multiplicity: e.multiplicity,
                    orbit_size: e.orbit_size,
                })
                .collect(),
            oracle: oracle.map(|o| OracleJson { freudenthal: o.freudenthal, kostka: o.kostka }),
        }),
        Format::Csv => to_csv(
            &t.entries
                .iter()
                .map(|e| EntryCsv {
                    weight: joined(e.weight.coords()),
                    partition: joined(e.partition.parts()),
                    multiplicity: e.multiplicity,
                    orbit_size: e.orbit_size,
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "R({hw}) of {}, dimension {}", hw.ctx().name(), t.dimension).unwrap();
            let width = t.entries.iter().map(|e| e.weight.to_string().chars().count()).max().unwrap_or(0);
            for e in &t.entries {
                let w = e.weight.to_string();
                let pad = width - w.chars().count();
                writeln!(
                    s,
                    "  {w}{:pad$}  {:<14} m = {:<3} |W| = {}",
                    "",
                    e.partition.to_string(),
                    e.multiplicity,
                    e.orbit_size
                )
                .unwrap();
            }
            if let Some(o) = oracle {
                writeln!(s, "oracles: freudenthal {}, kostka {}", verdict(o.freudenthal), verdict(o.kostka)).unwrap();
            }
            s
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "agree"
    } else {
        "DISAGREE"
    }
}

#[derive(Serialize)]
struct TermCsv {
    exponents: String,
    coefficient: String,
}

fn poly_terms<C: Coefficient + std::fmt::Display>(p: &Poly<C>) -> Vec<TermCsv> {
    p.terms()
        .rev()
        .map(|(m, c): (&Monomial, &C)| TermCsv { exponents: joined(m.exponents()), coefficient: c.to_string() })
        .collect()
}

#[derive(Serialize)]
struct SchurJson {
    algebra: String,
    partition: Vec<u32>,
    polynomial: String,
}

fn schur(rank: usize, p: &Partition, format: Format) -> Run {
    let ctx = AlgebraContext::new(rank).map_err(fail)?;
    let s = generalized_schur(&SchurContext::new(ctx), p);
    Ok(match format {
        Format::Json => {
            to_json(&SchurJson { algebra: ctx.name(), partition: p.parts().to_vec(), polynomial: s.to_string() })
        }
        Format::Csv => to_csv(&poly_terms(&s)),
        Format::Text => format!("S_{p} = {s}\n"),
    })
}

#[derive(Serialize)]
struct OrbitJson {
    algebra: String,
    weight: Vec<u32>,
    partition: Vec<u32>,
    orbit_size: u64,
    generators: String,
    x: String,
    orbit: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct OrbitCsv {
    mu: String,
    lambda: String,
}

fn orbit(args: &WeightArgs, format: Format) -> Run {
    let w = parse_weight(args).map_err(|f| (f, String::new()))?;
    let p = w.mu_partition();
    let weights = w.orbit_weights();
    let g = reduce_to_generators(&p);
    let x = orbit_char_x(&p, &SchurContext::new(w.ctx())).map_err(fail)?;
    Ok(match format {
        Format::Json => to_json(&OrbitJson {
            algebra: w.ctx().name(),
            weight: w.coords().to_vec(),
            partition: p.parts().to_vec(),
            orbit_size: w.orbit_size(),
            generators: g.to_string(),
            x: x.to_string(),
            orbit: weights.iter().map(|o| o.mu().to_vec()).collect(),
        }),
        Format::Csv => to_csv(
            &weights
                .iter()
                .map(|o| OrbitCsv { mu: joined(o.mu()), lambda: joined(&o.lambda_coords()) })
                .collect::<Vec<_>>(),
        ),
        Format::Text => format!("W({w}) in {}: {} weights\nK_{p} = {g}\n      = {x}\n", w.ctx().name(), w.orbit_size()),
    })
}

#[derive(Serialize)]
struct CharacterJson {
    algebra: String,
    highest_weight: Vec<u32>,
    dimension: u64,
    terms: usize,
    polynomial: String,
}

fn character(args: &WeightArgs, format: Format) -> Run {
    let w = parse_weight(args).map_err(|f| (f, String::new()))?;
    let ch = weyl_character_u(&w).map_err(fail)?;
    Ok(match format {
        Format::Json => to_json(&CharacterJson {
            algebra: w.ctx().name(),
            highest_weight: w.coords().to_vec(),
            dimension: dimension(&w),
            terms: ch.len(),
            polynomial: ch.to_string(),
        }),
        Format::Csv => to_csv(&poly_terms(&ch)),
        Format::Text => format!("ChR({w}) = {ch}\n"),
    })
}

/// Entries whose weight is commonly listed wrongly for the A_5, Q = 7 table.
const LISTING_CORRECTIONS: &[(usize, &[u32], &str)] =
    &[(6, &[4, 1, 1, 1], "corrected: 3λ2+λ4 has height 10; (4,1,1,1) converts to 3λ1+λ4")];

#[derive(Serialize)]
struct SubJson {
    algebra: String,
    height: u32,
    entries: Vec<SubEntryJson>,
}

#[derive(Serialize)]
struct SubEntryJson {
    partition: Vec<u32>,
    length: usize,
    weight: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct SubCsv {
    partition: String,
    length: usize,
    weight: String,
    note: String,
}

fn sub(rank: usize, height: u32, format: Format) -> Run {
    let ctx = AlgebraContext::new(rank).map_err(fail)?;
    let rows: Vec<SubEntryJson> = sub_q_lambda1(height, ctx)
        .into_iter()
        .map(|e| {
            let note = LISTING_CORRECTIONS
                .iter()
                .find(|(n, p, _)| *n == rank && e.partition.parts() == *p)
                .map(|(_, _, note)| note.to_string());
            SubEntryJson {
                length: e.partition.len(),
                partition: e.partition.parts().to_vec(),
                weight: e.weight.coords().to_vec(),
                note,
            }
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(&SubJson { algebra: ctx.name(), height, entries: rows }),
        Format::Csv => to_csv(
            &rows
                .iter()
                .map(|r| SubCsv {
                    partition: joined(&r.partition),
                    length: r.length,
                    weight: joined(&r.weight),
                    note: r.note.clone().unwrap_or_default(),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let w = DominantWeight::new(ctx, r.weight.clone()).expect("valid weight");
                let p = Partition::new(r.partition.clone()).expect("valid partition");
                write!(s, "{:<14} {w}", p.to_string()).unwrap();
                if let Some(n) = &r.note {
                    write!(s, "  [{n}]").unwrap();
                }
                s.push('\n');
            }
            s
        }
    })
}

#[derive(Serialize)]
struct AuditJson {
    ranks: Vec<usize>,
    height: u32,
    highest_weights: usize,
    entries: usize,
    mismatches: Vec<MismatchJson>,
}

#[derive(Serialize)]
struct MismatchJson {
    algebra: String,
    highest_weight: Vec<u32>,
    weight: Vec<u32>,
    solver: u64,
    freudenthal: u64,
    kostka: u64,
    alternant: u64,
}

fn audit(ranks: &[usize], height: u32, exec: Execution, format: Format) -> Run {
    let reports = audit_sweep(exec, height, ranks).map_err(fail)?;
    let mut mismatches = Vec::new();
    for r in &reports {
        for row in r.mismatches() {
            mismatches.push(MismatchJson {
                algebra: r.highest_weight.ctx().name(),
                highest_weight: r.highest_weight.coords().to_vec(),
                weight: row.weight.coords().to_vec(),
                solver: row.solver,
                freudenthal: row.freudenthal,
                kostka: row.kostka,
                alternant: row.alternant,
            });
        }
    }
    let summary = AuditJson {
        ranks: ranks.to_vec(),
        height,
        highest_weights: reports.len(),
        entries: reports.iter().map(|r| r.rows.len()).sum(),
        mismatches,
    };
    let body = match format {
        Format::Json => to_json(&summary),
        Format::Csv => to_csv(
            &summary
                .mismatches
                .iter()
                .map(|m| {
                    [
                        m.algebra.clone(),
                        joined(&m.highest_weight),
                        joined(&m.weight),
                        m.solver.to_string(),
                        m.freudenthal.to_string(),
                        m.kostka.to_string(),
                        m.alternant.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = format!(
                "{} highest weights, {} entries, {} mismatches\n",
                summary.highest_weights,
                summary.entries,
                summary.mismatches.len()
            );
            for m in &summary.mismatches {
                writeln!(
                    s,
                    "  {} {:?} at {:?}: solver {} freudenthal {} kostka {} alternant {}",
                    m.algebra, m.highest_weight, m.weight, m.solver, m.freudenthal, m.kostka, m.alternant
                )
                .unwrap();
            }
            s
        }
    };
    if summary.mismatches.is_empty() {
        Ok(body)
    } else {
        Err((Failure::Audit(format!("{} mismatches", summary.mismatches.len())), body))
    }
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    height: u32,
    weights: usize,
    solver_ms: f64,
    alternant_ms: f64,
}

fn bench(ranks: &[usize], height: u32, format: Format) -> Run {
    let mut rows = Vec::new();
    for &n in ranks {
        let ctx = AlgebraContext::new(n).map_err(fail)?;
        for h in 1..=height {
            let weights: Vec<DominantWeight> = partitions(h, n - 1)
                .iter()
                .map(|p| DominantWeight::from_partition(p, ctx))
                .collect::<Result<_, _>>()
                .map_err(fail)?;
            let start = Instant::now();
            let sctx = SchurContext::new(ctx);
            for w in &weights {
                solve_multiplicities_with(Execution::Sequential, w, &sctx).map_err(fail)?;
            }
            let solver_ms = start.elapsed().as_secs_f64() * 1e3;
            let start = Instant::now();
            for w in &weights {
                let ch = weyl_character_u(w).map_err(fail)?;
                for e in sub_q_lambda1(h, ctx) {
                    std::hint::black_box(ch.coeff(&Monomial::new(e.partition.padded(n))));
                }
            }
            let alternant_ms = start.elapsed().as_secs_f64() * 1e3;
            rows.push(BenchRow { n, height: h, weights: weights.len(), solver_ms, alternant_ms });
        }
    }
    Ok(match format {
        Format::Json => to_json(&rows),
        Format::Csv => to_csv(&rows),
        Format::Text => {
            let mut s = String::from("   N  height  weights   solver ms   alternant ms\n");
            for r in &rows {
                writeln!(
                    s,
                    "{:>4}  {:>6}  {:>7}  {:>10.2}  {:>13.2}",
                    r.n, r.height, r.weights, r.solver_ms, r.alternant_ms
                )
                .unwrap();
            }
            s
        }
    })
}
