//! `pperim`: enumerate, map, count and verify partition statistics from the
//! command line.
//!
//! Exit codes: 0 success, 1 a verification or conjecture check failed,
//! 2 usage or precondition error.

mod output;

use std::ffi::OsString;
use std::io::Write;
use std::num::NonZeroUsize;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use perimeter_partitions::bijections::{
    fu_tang, fu_tang_inv, glaisher, glaisher_inv, theorem1_inv, theorem1_map,
};
use perimeter_partitions::counting::{
    beck_totals, franklin_counts, perimeter_table, refined_counts, regular_perimeter_counts,
};
use perimeter_partitions::partitions::{
    enumerate_by_perimeter, enumerate_by_size, from_profile, to_profile,
};
use perimeter_partitions::series::{
    closed_form, fib_convolution, gf_catalog, perimeter_q_row, q_binomial, recurrence_sequence,
    recurrence_step, series_coeffs, ClosedFormName, ConvolutionName, GfName, RecurrenceName,
};
use perimeter_partitions::verify::{
    self, conjecture_scan_with, verify_beck, verify_franklin, verify_perimeter, verify_regular,
    verify_theorem1, VerificationReport,
};
use perimeter_partitions::{
    fibonacci, m2_index, Constraint, ConstraintSpec, Partition, ProfileWord,
};

pub use output::Format;
use output::{Emitter, Record};

#[derive(Parser, Debug)]
#[command(
    name = "pperim",
    version,
    about = "Exact partition bijections and perimeter statistics"
)]
struct Cli {
    /// Output serialization.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Suppress the trailing `#`-prefixed timing lines.
    #[arg(long, global = true)]
    no_footer: bool,
    /// Cap on worker threads.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<NonZeroUsize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List partitions of a size or a perimeter, optionally constrained.
    Enumerate(EnumerateArgs),
    /// Apply a bijection to one partition.
    Map(MapArgs),
    /// Count a partition class.
    Count(CountArgs),
    /// Coefficients of a catalogued generating function.
    Series(SeriesArgs),
    /// Evaluate a closed form, recurrence or Fibonacci convolution.
    Formula(FormulaArgs),
    /// Run identity checks over a parameter grid.
    Verify(VerifyArgs),
    /// Scan g_r(M) <= h_r(M).
    Conjecture(ConjectureArgs),
    /// Boundary profile word of a partition, or the partition of a word.
    Profile(ProfileArgs),
    /// Gaussian binomial coefficients and perimeter generating rows.
    Qpoly(QpolyArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("domain").required(true).args(["size", "perimeter"])))]
struct EnumerateArgs {
    #[arg(long, value_name = "N")]
    size: Option<u64>,
    #[arg(long, value_name = "M")]
    perimeter: Option<u32>,
    /// All parts odd.
    #[arg(long)]
    odd: bool,
    /// All parts distinct.
    #[arg(long)]
    distinct: bool,
    /// No part divisible by R.
    #[arg(long, value_name = "R")]
    regular: Option<u64>,
    /// Every multiplicity below R.
    #[arg(long, value_name = "R")]
    mult_below: Option<u64>,
    /// Every part congruent to D modulo R.
    #[arg(long = "mod", value_name = "R,D", value_parser = parse_pair)]
    modulo: Option<(u64, u64)>,
    /// No part equal to 1.
    #[arg(long)]
    no_ones: bool,
    /// Size equal to N (useful with --perimeter).
    #[arg(long, value_name = "N")]
    size_eq: Option<u64>,
    /// Exactly J distinct part values divisible by R, each repeated U times if given.
    #[arg(long, value_name = "R,J[,U]", value_parser = parse_triple)]
    div_values: Option<(u64, u64, Option<u64>)>,
    /// Exactly J distinct part values repeated at least R times, each equal to U if given.
    #[arg(long, value_name = "R,J[,U]", value_parser = parse_triple)]
    rep_values: Option<(u64, u64, Option<u64>)>,
    /// Print only the number of matching partitions.
    #[arg(long)]
    count: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapName {
    Glaisher,
    Theorem1,
    Futang,
}

#[derive(Args, Debug)]
struct MapArgs {
    #[arg(long, value_enum)]
    name: MapName,
    /// Apply the inverse map.
    #[arg(long)]
    inverse: bool,
    /// Modulus for glaisher and theorem1.
    #[arg(long, value_name = "R")]
    r: Option<u64>,
    /// Parts in non-increasing order, e.g. "4,2,1"; "" is the empty partition.
    #[arg(long, value_name = "PARTS", value_parser = parse_partition, allow_hyphen_values = true)]
    partition: Partition,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("what").required(true)
    .args(["franklin", "refined", "beck", "perimeter", "regular"])))]
struct CountArgs {
    /// Partitions of N with exactly J part values divisible by R, and with exactly J values repeated R or more times.
    #[arg(long, num_args = 3, value_names = ["N", "R", "J"])]
    franklin: Option<Vec<u64>>,
    /// The refined pair for repetition count / part value U.
    #[arg(long, num_args = 3, value_names = ["N", "R", "U"])]
    refined: Option<Vec<u64>>,
    /// Part totals over odd-part and distinct-part partitions of N, and the j = 1 class sizes for r = 2.
    #[arg(long, value_name = "N")]
    beck: Option<u64>,
    /// Exhaustive statistics over all partitions of perimeter M.
    #[arg(long, value_name = "M")]
    perimeter: Option<u32>,
    /// R-regular and multiplicity-bounded counts at perimeter M, and the residue-D class if given.
    #[arg(long, num_args = 2..=3, value_names = ["M", "R", "D"])]
    regular: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_parser = parse_gf)]
    name: GfName,
    #[arg(long, value_name = "R")]
    r: Option<u64>,
    #[arg(long, value_name = "D")]
    d: Option<u64>,
    /// Number of coefficients, starting at x^1.
    #[arg(long, value_name = "N", default_value_t = 10)]
    terms: usize,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("prev").args(["prev2", "prev1"]).multiple(true).requires_all(["prev2", "prev1"])))]
struct FormulaArgs {
    /// g, h, g1, h1, index_sum, cfib1..cfib4 or fib.
    #[arg(long)]
    name: String,
    #[arg(long, value_name = "M", allow_hyphen_values = true)]
    m: i64,
    /// f(M-2), to take one recurrence step.
    #[arg(long, value_name = "VALUE", allow_hyphen_values = true)]
    prev2: Option<BigInt>,
    /// f(M-1), to take one recurrence step.
    #[arg(long, value_name = "VALUE", allow_hyphen_values = true)]
    prev1: Option<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Franklin,
    Theorem1,
    Beck,
    Perimeter,
    Regular,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Largest size n for the size-indexed checks.
    #[arg(long, value_name = "N")]
    n_max: Option<u64>,
    /// Moduli, comma separated.
    #[arg(long, value_name = "R,...", value_delimiter = ',')]
    r_set: Option<Vec<u64>>,
    /// Largest j for the Franklin check.
    #[arg(long, value_name = "J")]
    j_max: Option<usize>,
    /// Largest perimeter checked by enumeration.
    #[arg(long, value_name = "M")]
    m_enum: Option<u32>,
    /// Largest perimeter checked through series and formulas.
    #[arg(long, value_name = "M")]
    m_series: Option<u32>,
}

#[derive(Args, Debug)]
struct ConjectureArgs {
    #[arg(long, value_name = "R")]
    r: u64,
    #[arg(long, value_name = "M")]
    m_max: u32,
    /// Largest perimeter cross-checked by enumeration.
    #[arg(long, value_name = "M", default_value_t = 16)]
    enum_max: u32,
    /// Also print h_r(M) - g_r(M) for every M.
    #[arg(long)]
    margins: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["partition", "word"])))]
struct ProfileArgs {
    #[arg(long, value_name = "PARTS", value_parser = parse_partition, allow_hyphen_values = true)]
    partition: Option<Partition>,
    /// A 0/1 word starting with 1 and ending with 0.
    #[arg(long, value_name = "BITS", value_parser = parse_word)]
    word: Option<ProfileWord>,
}

#[derive(Args, Debug)]
struct QpolyArgs {
    #[arg(long, value_name = "M")]
    m: u64,
    /// Print [M over J] instead of the perimeter-M row.
    #[arg(long, value_name = "J", allow_hyphen_values = true)]
    j: Option<i64>,
    /// Substitute q^B for q in [M over J].
    #[arg(long, value_name = "B", default_value_t = 1, requires = "j")]
    base: usize,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse()
        .map_err(|e: perimeter_partitions::Error| e.to_string())
}

fn parse_word(s: &str) -> Result<ProfileWord, String> {
    s.parse()
        .map_err(|e: perimeter_partitions::Error| e.to_string())
}

fn parse_gf(s: &str) -> Result<GfName, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = GfName::ALL.iter().map(|n| n.as_str()).collect();
        format!(
            "unknown generating function {s:?}; expected one of {}",
            names.join(", ")
        )
    })
}

fn parse_numbers(s: &str, min: usize, max: usize) -> Result<Vec<u64>, String> {
    let values = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("{:?} is not a non-negative integer", t.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() < min || values.len() > max {
        return Err(format!(
            "expected {min} to {max} comma-separated values, got {s:?}"
        ));
    }
    Ok(values)
}

fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    let v = parse_numbers(s, 2, 2)?;
    Ok((v[0], v[1]))
}

fn parse_triple(s: &str) -> Result<(u64, u64, Option<u64>), String> {
    let v = parse_numbers(s, 2, 3)?;
    Ok((v[0], v[1], v.get(2).copied()))
}

/// Why a command stopped short of success.
enum Failure {
    /// A bad argument or an unmet precondition.
    Usage(String),
    /// The computation ran, and a checked relation did not hold.
    Check,
}

impl From<perimeter_partitions::Error> for Failure {
    fn from(e: perimeter_partitions::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code. Data goes to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.threads {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k.get()).build() {
            // The sink need not be Send; collect inside the pool, then write.
            Ok(pool) => {
                let (result, buf) = pool.install(|| {
                    let mut buf = Vec::new();
                    (execute(&cli, &mut buf), buf)
                });
                out.write_all(&buf).map_err(Failure::from).and(result)
            }
            Err(e) => Err(usage(format!("cannot start {k} threads: {e}"))),
        },
        None => execute(&cli, out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let mut em = Emitter::new(cli.format, out);
    let mut footer = Vec::new();
    let result = match &cli.command {
        Command::Enumerate(a) => enumerate(a, &mut em),
        Command::Map(a) => map(a, &mut em),
        Command::Count(a) => count(a, &mut em),
        Command::Series(a) => series(a, &mut em),
        Command::Formula(a) => formula(a, &mut em),
        Command::Verify(a) => verify_cmd(a, &mut em, &mut footer),
        Command::Conjecture(a) => conjecture(a, &mut em),
        Command::Profile(a) => profile(a, &mut em),
        Command::Qpoly(a) => qpoly(a, &mut em),
    };
    if !cli.no_footer && !matches!(result, Err(Failure::Usage(_))) {
        for line in footer {
            em.footer(&line)?;
        }
        em.footer(&format!("elapsed {:.3?}", start.elapsed()))?;
    }
    result
}

fn constraint_spec(a: &EnumerateArgs) -> Result<ConstraintSpec, perimeter_partitions::Error> {
    let mut cs = Vec::new();
    if a.odd {
        cs.push(Constraint::AllOdd);
    }
    if a.distinct {
        cs.push(Constraint::AllDistinct);
    }
    if let Some(r) = a.regular {
        cs.push(Constraint::NoPartDivisibleBy(r));
    }
    if let Some(r) = a.mult_below {
        cs.push(Constraint::MultiplicitiesBelow(r));
    }
    if let Some((r, d)) = a.modulo {
        cs.push(Constraint::Congruent { d, r });
    }
    if a.no_ones {
        cs.push(Constraint::NoOnes);
    }
    if let Some(n) = a.size_eq {
        cs.push(Constraint::SizeEquals(n));
    }
    if let Some((r, j, u)) = a.div_values {
        let u = u.map(|u| u as usize);
        cs.push(Constraint::DivisibleValues {
            r,
            j: j as usize,
            u,
        });
    }
    if let Some((r, j, u)) = a.rep_values {
        cs.push(Constraint::RepeatedValues {
            r,
            j: j as usize,
            u,
        });
    }
    ConstraintSpec::from_constraints(cs)
}

fn enumerate(a: &EnumerateArgs, em: &mut Emitter) -> Outcome {
    let spec = constraint_spec(a)?;
    let (domain, value, stream): (&str, u64, Box<dyn Iterator<Item = Partition> + '_>) =
        match (a.size, a.perimeter) {
            (Some(n), _) => ("size", n, Box::new(enumerate_by_size(n, &spec))),
            (None, Some(m)) => (
                "perimeter",
                u64::from(m),
                Box::new(enumerate_by_perimeter(m, &spec)?),
            ),
            (None, None) => unreachable!("clap requires --size or --perimeter"),
        };
    if a.count {
        let n = stream.count();
        return Ok(em.emit(
            Record::new(n.to_string())
                .field("domain", domain)
                .field("value", value)
                .field("constraints", spec.to_string())
                .field("count", n),
        )?);
    }
    for p in stream {
        em.emit(
            Record::new(p.to_string())
                .field("partition", p.to_string())
                .field("size", p.size())
                .field("length", p.len())
                .field("perimeter", p.perimeter()),
        )?;
    }
    Ok(())
}

fn map(a: &MapArgs, em: &mut Emitter) -> Outcome {
    let p = &a.partition;
    let need_r = || a.r.ok_or_else(|| usage("--r is required for this map"));
    let image = match a.name {
        MapName::Glaisher if a.inverse => glaisher_inv(p, need_r()?)?,
        MapName::Glaisher => glaisher(p, need_r()?)?,
        MapName::Theorem1 if a.inverse => theorem1_inv(p, need_r()?)?,
        MapName::Theorem1 => theorem1_map(p, need_r()?)?,
        MapName::Futang => {
            if a.r.is_some() {
                return Err(usage("--r does not apply to futang"));
            }
            if a.inverse {
                fu_tang_inv(p)?
            } else {
                fu_tang(p)?
            }
        }
    };
    let name = a.name.to_possible_value().expect("no skipped variants");
    Ok(em.emit(
        Record::new(image.to_string())
            .field("map", name.get_name())
            .field("inverse", a.inverse)
            .opt("r", a.r)
            .field("input", p.to_string())
            .field("output", image.to_string()),
    )?)
}

fn count(a: &CountArgs, em: &mut Emitter) -> Outcome {
    let record = if let Some(v) = &a.franklin {
        let (n, r, j) = (v[0], v[1], v[2] as usize);
        let (o, d) = franklin_counts(n, r, j)?;
        Record::new(format!("{o},{d}"))
            .field("n", n)
            .field("r", r)
            .field("j", j)
            .big("divisible", &o)
            .big("repeated", &d)
    } else if let Some(v) = &a.refined {
        let (n, r, u) = (v[0], v[1], v[2]);
        let (alpha, beta) = refined_counts(n, r, u)?;
        Record::new(format!("{alpha},{beta}"))
            .field("n", n)
            .field("r", r)
            .field("u", u)
            .big("alpha", &alpha)
            .big("beta", &beta)
    } else if let Some(n) = a.beck {
        let t = beck_totals(n);
        Record::new(format!("{},{},{},{}", t.a, t.b, t.o, t.d))
            .field("n", n)
            .big("a", &t.a)
            .big("b", &t.b)
            .big("one_even_value", &t.o)
            .big("one_repeated_value", &t.d)
    } else if let Some(m) = a.perimeter {
        let t = perimeter_table(m)?;
        let row: serde_json::Map<String, serde_json::Value> = t
            .t_row
            .iter()
            .map(|(n, c)| (n.to_string(), c.to_string().into()))
            .collect();
        Record::new(format!(
            "g={} h={} g1={} h1={} index_sum={}",
            t.g, t.h, t.g1, t.h1, t.index_sum
        ))
        .field("m", m)
        .big("g", &t.g)
        .big("h", &t.h)
        .big("g1", &t.g1)
        .big("h1", &t.h1)
        .big("index_sum", &t.index_sum)
        .big("g1_no_one", &t.g1_no_one)
        .big("odd_count", &t.odd_count)
        .big("distinct_count", &t.distinct_count)
        .field("t_row", row)
    } else if let Some(v) = &a.regular {
        let (m, r) = (v[0], v[1]);
        let m = u32::try_from(m).map_err(|_| usage(format!("perimeter {m} is too large")))?;
        let c = regular_perimeter_counts(m, r, v.get(2).copied())?;
        let mut plain = format!("{},{}", c.g_r, c.h_r);
        if let Some(x) = &c.g_r_d {
            plain.push_str(&format!(",{x}"));
        }
        Record::new(plain)
            .field("m", m)
            .field("r", r)
            .big("g_r", &c.g_r)
            .big("h_r", &c.h_r)
            .opt("d", c.d)
            .opt("g_r_d", c.g_r_d.map(|x| x.to_string()))
    } else {
        unreachable!("clap requires one count selector")
    };
    Ok(em.emit(record)?)
}

fn series(a: &SeriesArgs, em: &mut Emitter) -> Outcome {
    let s = gf_catalog(a.name, a.r, a.d)?;
    let coeffs = series_coeffs(&s, a.terms);
    let plain = coeffs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(em.emit(
        Record::new(plain)
            .field("name", a.name.as_str())
            .opt("r", a.r)
            .opt("d", a.d)
            .field("numerator", s.numerator().display_with("x"))
            .field("denominator", s.denominator().display_with("x"))
            .big_list("coefficients", &coeffs),
    )?)
}

fn formula(a: &FormulaArgs, em: &mut Emitter) -> Outcome {
    let name = a.name.as_str();
    let nonneg =
        || u64::try_from(a.m).map_err(|_| usage(format!("M = {} must be non-negative", a.m)));
    let (route, value): (&str, BigInt) = if let (Some(p2), Some(p1)) = (&a.prev2, &a.prev1) {
        let rec: RecurrenceName = name.parse()?;
        ("recurrence_step", recurrence_step(rec, p2, p1, nonneg()?)?)
    } else if name == "fib" {
        ("fibonacci", fibonacci(a.m)?.into())
    } else if let Ok(c) = name.parse::<ClosedFormName>() {
        ("closed_form", closed_form(c, nonneg()?)?)
    } else if let Ok(c) = name.parse::<ConvolutionName>() {
        ("convolution", fib_convolution(c, nonneg()?)?)
    } else if let Ok(rec) = name.parse::<RecurrenceName>() {
        let m = nonneg()?;
        if m == 0 {
            return Err(usage("M must be at least 1"));
        }
        let seq = recurrence_sequence(rec, m as usize);
        ("recurrence", seq.last().cloned().unwrap_or_default())
    } else {
        return Err(usage(format!(
            "unknown formula {name:?}; expected g, h, g1, h1, index_sum, cfib1..cfib4 or fib"
        )));
    };
    Ok(em.emit(
        Record::new(value.to_string())
            .field("name", name)
            .field("m", a.m)
            .field("route", route)
            .big("value", value),
    )?)
}

fn verify_cmd(a: &VerifyArgs, em: &mut Emitter, footer: &mut Vec<String>) -> Outcome {
    use verify::defaults as d;
    let r_set = a.r_set.clone().unwrap_or_else(|| d::R_SET.to_vec());
    let wants = |s: Suite| a.suite == Suite::All || a.suite == s;
    let mut all_passed = true;
    let mut report = |rep: VerificationReport| -> Outcome {
        all_passed &= rep.passed();
        footer.push(format!("{} elapsed {:.3?}", rep.check, rep.elapsed));
        let plain = plain_report(&rep);
        let value = serde_json::to_value(&rep).map_err(|e| usage(e.to_string()))?;
        Ok(em.emit(Record::new(plain).with_fields(value))?)
    };
    if wants(Suite::Franklin) {
        let n = a.n_max.unwrap_or(d::FRANKLIN_N_MAX);
        report(verify_franklin(n, &r_set, a.j_max.unwrap_or(d::J_MAX))?)?;
    }
    if wants(Suite::Theorem1) {
        report(verify_theorem1(
            a.n_max.unwrap_or(d::THEOREM1_N_MAX),
            &r_set,
        )?)?;
    }
    if wants(Suite::Beck) {
        report(verify_beck(a.n_max.unwrap_or(d::BECK_N_MAX)))?;
    }
    if wants(Suite::Perimeter) {
        let m_enum = a.m_enum.unwrap_or(d::M_ENUM);
        report(verify_perimeter(m_enum, a.m_series.unwrap_or(d::M_SERIES))?)?;
    }
    if wants(Suite::Regular) {
        let m_enum = a.m_enum.unwrap_or(d::REGULAR_M_ENUM);
        let m_series = a.m_series.unwrap_or(d::REGULAR_M_SERIES);
        report(verify_regular(m_enum, &r_set, m_series)?)?;
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn plain_report(rep: &VerificationReport) -> String {
    match &rep.counterexample {
        None => format!("{}: pass ({} witnesses)", rep.check, rep.witnesses_checked),
        Some(c) => {
            let point: Vec<String> = c.point.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!(
                "{}: FAIL ({} failures); first at {}: {}: {} != {}",
                rep.check,
                rep.failures,
                point.join(" "),
                c.relation,
                c.left,
                c.right
            )
        }
    }
}

fn conjecture(a: &ConjectureArgs, em: &mut Emitter) -> Outcome {
    let scan = conjecture_scan_with(a.r, a.m_max, a.enum_max)?;
    let holds = scan.first_violation.is_none();
    let consistent = scan.cross_check_mismatch.is_none();
    let mut plain = format!(
        "r={} M<={}: {}",
        scan.r,
        scan.m_max,
        if holds { "holds" } else { "VIOLATED" }
    );
    if let Some(m) = scan.first_violation {
        plain.push_str(&format!(" at M={m}"));
    }
    if let (Some(m), Some((g, h))) = (scan.first_strict_gap, &scan.gap_counts) {
        plain.push_str(&format!("; first strict gap at M={m} (g={g}, h={h})"));
    }
    match scan.cross_check_mismatch {
        None => plain.push_str(&format!(
            "; enumeration agrees through M={}",
            scan.cross_checked_through
        )),
        Some(m) => plain.push_str(&format!("; enumeration DISAGREES at M={m}")),
    }
    let (gap_g, gap_h) = match &scan.gap_counts {
        Some((g, h)) => (Some(g.to_string()), Some(h.to_string())),
        None => (None, None),
    };
    let mut record = Record::new(plain)
        .field("r", scan.r)
        .field("m_max", scan.m_max)
        .field("holds", holds)
        .opt("first_violation", scan.first_violation)
        .opt("first_strict_gap", scan.first_strict_gap)
        .opt("gap_g", gap_g)
        .opt("gap_h", gap_h)
        .field("cross_checked_through", scan.cross_checked_through)
        .opt("cross_check_mismatch", scan.cross_check_mismatch);
    if a.margins {
        record = record.big_list("margins", &scan.margins);
    }
    em.emit(record)?;
    if holds && consistent {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn profile(a: &ProfileArgs, em: &mut Emitter) -> Outcome {
    let (p, w) = match (&a.partition, &a.word) {
        (Some(p), _) => (p.clone(), to_profile(p)),
        (None, Some(w)) => (from_profile(w), w.clone()),
        (None, None) => unreachable!("clap requires --partition or --word"),
    };
    let plain = if a.partition.is_some() {
        w.to_string()
    } else {
        p.to_string()
    };
    let index = if p.is_empty() {
        None
    } else {
        Some(m2_index(&p)?)
    };
    Ok(em.emit(
        Record::new(plain)
            .field("partition", p.to_string())
            .field("word", w.to_string())
            .field("size", p.size())
            .field("length", p.len())
            .field("perimeter", p.perimeter())
            .opt("m2_index", index),
    )?)
}

fn qpoly(a: &QpolyArgs, em: &mut Emitter) -> Outcome {
    let poly = match a.j {
        Some(j) => q_binomial(a.m, j, a.base)?,
        None => perimeter_q_row(a.m)?,
    };
    let coeffs = poly.coeffs();
    let plain = coeffs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let mut record = Record::new(plain).field("m", a.m);
    if let Some(j) = a.j {
        record = record.field("j", j).field("base", a.base);
    }
    Ok(em.emit(
        record
            .field("polynomial", poly.display_with("q"))
            .big("at_one", poly.eval_one())
            .big_list("coefficients", coeffs),
    )?)
}
