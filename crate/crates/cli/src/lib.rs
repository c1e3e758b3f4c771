//! Front end for the `rrg` binary.
//!
//! [`run`] takes the argument vector and returns the exit status together with
//! the text destined for stdout and stderr, so every command can be tested
//! without spawning a process. Exit status is 0 on success (and on a passing
//! `verify`), 1 on a failing check or an internal failure, 2 on usage errors.

use std::ffi::OsString;

use andrews_involutions::{involute_pipeline, AndrewsError, PipelineOutcome};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gordon_involution::{GordonError, GordonInvolution};
use partition_core::{count_family, enumerate_family, Family, PartitionError};
use serde::Serialize;
use verify_harness::{
    check_identity_with, check_involution_laws, ground_set, parse_pair, sweep_cap, trace_orbit,
    FixedJson, HarnessError, IdentityId, Mode, OrbitTrace, PairJson, Scope, Terminal,
    VerificationReport,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "rrg", version, about = "Exact checks of Rogers-Ramanujan-Gordon type identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; json is the stable one.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone, Copy)]
struct Params {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    a: u32,
}

#[derive(Args, Debug, Clone, Copy)]
struct Bound {
    /// Weight or truncation bound.
    #[arg(long = "n", visible_aliases = ["max-weight", "truncate"], value_name = "N")]
    n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of partitions in a family for every weight 0..=N.
    Count {
        #[arg(long)]
        family: Family,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        bound: Bound,
    },
    /// Every partition of weight exactly N in a family.
    Enumerate {
        #[arg(long)]
        family: Family,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        bound: Bound,
    },
    /// Checks an identity to q^N, or with --scope the involution laws up to weight N.
    Verify {
        #[arg(long, required_unless_present = "scope", conflicts_with = "scope")]
        identity: Option<IdentityId>,
        #[arg(long)]
        scope: Option<Scope>,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        bound: Bound,
        /// Compare inverted series instead of cross-multiplied products.
        #[arg(long)]
        inverted: bool,
    },
    /// Applies an involution to a pair such as "6,1;5,5" and back.
    Trace {
        #[arg(long)]
        scope: Scope,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        pair: String,
    },
    /// Fixed configurations of an involution up to a weight.
    FixedPoints {
        #[arg(long)]
        scope: Scope,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        bound: Bound,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        let usage = match &e {
            HarnessError::Params(_)
            | HarnessError::SweepCap { .. }
            | HarnessError::NotMember(_)
            | HarnessError::Partition(_) => true,
            HarnessError::Gordon(g) => gordon_usage(g),
            HarnessError::Andrews(a) => andrews_usage(a),
            HarnessError::NotInvolution(_) | HarnessError::Series(_) => false,
        };
        if usage {
            Failure::Usage(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

fn gordon_usage(e: &GordonError) -> bool {
    matches!(e, GordonError::Params(_) | GordonError::NotMember(..) | GordonError::InvalidIndex(_))
}

fn andrews_usage(e: &AndrewsError) -> bool {
    match e {
        AndrewsError::Parity { .. }
        | AndrewsError::NotMember { .. }
        | AndrewsError::Precondition(_)
        | AndrewsError::Partition(_) => true,
        AndrewsError::Gordon(g) => gordon_usage(g),
        AndrewsError::Consistency { .. } | AndrewsError::Series(_) => false,
    }
}

impl From<PartitionError> for Failure {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::Overflow => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<GordonError> for Failure {
    fn from(e: GordonError) -> Self {
        HarnessError::Gordon(e).into()
    }
}

/// Rendered command result: stdout text, an optional warning and whether
/// the command counts as failed.
struct Rendered {
    out: String,
    warning: Option<String>,
    failed: bool,
}

impl Rendered {
    fn ok(out: String) -> Self {
        Rendered { out, warning: None, failed: false }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                // --help and --version
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(cli.command, cli.format) {
        Ok(r) => Output {
            code: u8::from(r.failed),
            stdout: r.out,
            stderr: r.warning.map(|w| format!("warning: {w}\n")).unwrap_or_default(),
        },
        Err(Failure::Usage(m)) => Output { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Internal(m)) => Output { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

fn execute(cmd: Command, format: Format) -> Result<Rendered, Failure> {
    match cmd {
        Command::Count { family, params, bound } => count(family, params, bound.n, format),
        Command::Enumerate { family, params, bound } => enumerate(family, params, bound.n, format),
        Command::Verify { identity, scope, params, bound, inverted } => {
            let (k, a, n) = (params.k, params.a, bound.n);
            let report = match (identity, scope) {
                (Some(id), _) => {
                    let mode = if inverted { Mode::Inverted } else { Mode::CrossMultiplied };
                    check_identity_with(id, k, a, n as usize, mode)?
                }
                (None, Some(scope)) => check_involution_laws(scope, k, a, n)?,
                (None, None) => unreachable!("clap requires --identity or --scope"),
            };
            let failed = !report.passed();
            Ok(Rendered { out: render_report(&report, format)?, warning: None, failed })
        }
        Command::Trace { scope, params, pair } => {
            let start = parse_pair(&pair)?;
            let t = trace_orbit(&start, scope, params.k, params.a)?;
            Ok(Rendered::ok(render_trace(&t, format)?))
        }
        Command::FixedPoints { scope, params, bound } => fixed_points(scope, params, bound.n, format),
    }
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, Failure> {
    let fail = |e: &dyn std::fmt::Display| Failure::Internal(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| fail(&e))?;
    for r in rows {
        w.write_record(&r).map_err(|e| fail(&e))?;
    }
    let bytes = w.into_inner().map_err(|e| fail(&e))?;
    String::from_utf8(bytes).map_err(|e| fail(&e))
}

fn join(parts: &[u32], sep: &str) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

/// Same syntax as `--pair`, so output can be pasted back in.
fn pair_arg(p: &PairJson) -> String {
    format!("{};{}", join(&p.a, ","), join(&p.b, ","))
}

#[derive(Serialize)]
struct CountJson {
    family: String,
    k: u32,
    a: u32,
    n: u32,
    counts: Vec<u64>,
}

fn count(family: Family, p: Params, n: u32, format: Format) -> Result<Rendered, Failure> {
    let counts = (0..=n)
        .map(|w| count_family(family, p.k, p.a, w))
        .collect::<Result<Vec<_>, _>>()?;
    let out = match format {
        Format::Json => json(&CountJson { family: family.to_string(), k: p.k, a: p.a, n, counts })?,
        Format::Csv => csv_table(
            &["n", "count"],
            counts.iter().enumerate().map(|(w, c)| vec![w.to_string(), c.to_string()]).collect(),
        )?,
        Format::Text => counts.iter().enumerate().map(|(w, c)| format!("{w}\t{c}\n")).collect(),
    };
    Ok(Rendered::ok(out))
}

#[derive(Serialize)]
struct EnumerateJson {
    family: String,
    k: u32,
    a: u32,
    n: u32,
    partitions: Vec<Vec<u32>>,
}

fn enumerate(family: Family, p: Params, n: u32, format: Format) -> Result<Rendered, Failure> {
    let parts: Vec<Vec<u32>> = enumerate_family(family, p.k, p.a, n)?
        .into_iter()
        .map(|x| x.into_parts())
        .collect();
    let out = match format {
        Format::Json => json(&EnumerateJson { family: family.to_string(), k: p.k, a: p.a, n, partitions: parts })?,
        Format::Csv => csv_table(&["partition"], parts.iter().map(|x| vec![join(x, " ")]).collect())?,
        Format::Text => parts
            .iter()
            .map(|x| if x.is_empty() { "(empty)\n".to_string() } else { join(x, "+") + "\n" })
            .collect(),
    };
    Ok(Rendered::ok(out))
}

fn render_report(r: &VerificationReport, format: Format) -> Result<String, Failure> {
    let status = if r.passed() { "pass" } else { "fail" };
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let d = r.first_discrepancy.as_ref();
            let c = r.counterexample.as_ref();
            let row = vec![
                r.identity.clone(),
                r.k.to_string(),
                r.a.to_string(),
                r.truncation.to_string(),
                status.to_string(),
                d.map(|d| d.exponent.to_string()).unwrap_or_default(),
                d.map(|d| d.lhs.to_string()).unwrap_or_default(),
                d.map(|d| d.rhs.to_string()).unwrap_or_default(),
                r.checked.map(|n| n.to_string()).unwrap_or_default(),
                c.map(|c| c.law.clone()).unwrap_or_default(),
                c.map(|c| pair_arg(&c.config)).unwrap_or_default(),
            ];
            csv_table(
                &["identity", "k", "a", "truncation", "status", "exponent", "lhs", "rhs", "checked", "law", "config"],
                vec![row],
            )
        }
        Format::Text => {
            let mut s = format!("{} k={} a={} N={}: {status}\n", r.identity, r.k, r.a, r.truncation);
            if let Some(n) = r.checked {
                s += &format!("  {n} configurations checked\n");
            }
            if let Some(d) = &r.first_discrepancy {
                s += &format!("  first discrepancy at q^{}: {} vs {}\n", d.exponent, d.lhs, d.rhs);
            }
            if let Some(c) = &r.counterexample {
                s += &format!("  {} law broken at {}: {}\n", c.law, pair_arg(&c.config), c.detail);
            }
            Ok(s)
        }
    }
}

fn render_trace(t: &OrbitTrace, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => json(t),
        Format::Csv => {
            let mut rows = Vec::new();
            let mut from = pair_arg(&t.start);
            for s in &t.steps {
                let to = pair_arg(&s.config);
                rows.push(vec![s.label.clone(), from, to.clone()]);
                from = to;
            }
            if let Terminal::Fixed { fixed } = &t.terminal {
                rows.push(vec![fixed.tag.clone(), from.clone(), from]);
            }
            csv_table(&["label", "from", "to"], rows)
        }
        Format::Text => {
            let start = pair_arg(&t.start);
            let mut s = format!("{} k={} a={} start {start} (weight {})\n", t.scope, t.k, t.a, t.weight);
            let mut from = start;
            for step in &t.steps {
                let to = pair_arg(&step.config);
                s += &format!("  {}: {from} -> {to}\n", step.label);
                from = to;
            }
            match &t.terminal {
                Terminal::Partner => {
                    s += &format!("partner {}\n", pair_arg(&t.steps[0].config));
                }
                Terminal::Fixed { fixed } => s += &format!("{}\n", fixed_line(fixed)),
            }
            Ok(s)
        }
    }
}

fn fixed_line(f: &FixedJson) -> String {
    let mut s = format!(
        "{} weight {} sign {:+} {};{}",
        f.tag,
        f.weight,
        f.sign,
        join(&f.a, ","),
        join(&f.b, ",")
    );
    if let Some(e) = &f.e {
        s += &format!(" E {}", join(e, ","));
    }
    s
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FixedListJson {
    scope: String,
    k: u32,
    a: u32,
    max_weight: u32,
    fixed: Vec<FixedJson>,
}

fn fixed_points(scope: Scope, p: Params, max: u32, format: Format) -> Result<Rendered, Failure> {
    let (k, a) = (p.k, p.a);
    let mut fixed = Vec::new();
    let mut unresolved: Vec<String> = Vec::new();
    match scope {
        Scope::Gordon => {
            let g = GordonInvolution::new(k, a)?;
            let empty = partition_core::PartitionPair::empty();
            fixed.push(FixedJson::gordon(gordon_involution::FixedTag::Empty, &empty));
            for family in [1, 2] {
                for n in 1.. {
                    let pair = g.fixed_point(family, n)?;
                    if pair.weight() > u64::from(max) {
                        break;
                    }
                    let tag = g.match_fixed(&pair).expect("template pairs are recognised");
                    fixed.push(FixedJson::gordon(tag, &pair));
                }
            }
            fixed.sort_by_key(|f| f.weight);
        }
        Scope::Pipeline(pl) => {
            let cap = sweep_cap();
            if max > cap {
                return Err(HarnessError::SweepCap { n: max, cap }.into());
            }
            for w in 0..=max {
                for pair in ground_set(scope, k, a, w)? {
                    match involute_pipeline(&pair, pl, k, a) {
                        Ok(PipelineOutcome::Fixed(c)) => fixed.push(FixedJson::canonical(&c)),
                        Ok(PipelineOutcome::Partner { .. }) => {}
                        Err(e) => unresolved.push(format!("{pair}: {e}")),
                    }
                }
            }
        }
    }
    let out = match format {
        Format::Json => json(&FixedListJson { scope: scope.to_string(), k, a, max_weight: max, fixed })?,
        Format::Csv => csv_table(
            &["tag", "weight", "sign", "A", "B", "E"],
            fixed
                .iter()
                .map(|f| {
                    vec![
                        f.tag.clone(),
                        f.weight.to_string(),
                        f.sign.to_string(),
                        join(&f.a, " "),
                        join(&f.b, " "),
                        f.e.as_deref().map(|e| join(e, " ")).unwrap_or_default(),
                    ]
                })
                .collect(),
        )?,
        Format::Text => fixed.iter().map(|f| fixed_line(f) + "\n").collect(),
    };
    let warning = (!unresolved.is_empty()).then(|| {
        format!(
            "{} configurations could not be classified, first: {}",
            unresolved.len(),
            unresolved[0]
        )
    });
    let failed = warning.is_some();
    Ok(Rendered { out, warning, failed })
}
