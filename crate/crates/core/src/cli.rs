//! The `hf` command line.
//!
//! Exit codes: 0 on success, 1 when a computation is refused (bad manifold,
//! unsupported parameters), 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::formulas::{
    compare, conjecture_check, delta_invariant, delta_report, FamilyId, Source, TABLE1_FAMILIES,
};
use crate::gradedroot::{
    assemble_hf, build_root, compute_hf_with_margin, grading_shift, HFPlusModule,
};
use crate::plumbing::star_plumbing;
use crate::report::{module_from_json, ModuleJson};
use crate::seifert::{brieskorn_general, surgery_target, SeifertInvariants, SurgerySign};
use crate::tau::{reduce, tau_sequence_with_margin, ExtremumKind};

#[derive(Parser, Debug)]
#[command(
    name = "hf",
    version,
    about = "Graded roots and HF+ of Seifert fibered homology spheres"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    /// JSON output
    #[arg(long, global = false)]
    json: bool,
    /// CSV output
    #[arg(long)]
    csv: bool,
    /// Graphviz output
    #[arg(long)]
    dot: bool,
    /// Text picture of the graded root
    #[arg(long)]
    ascii: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Fmt {
    Text,
    Json,
    Csv,
    Dot,
    Ascii,
}

impl Format {
    fn get(self) -> Fmt {
        match (self.json, self.csv, self.dot, self.ascii) {
            (true, ..) => Fmt::Json,
            (_, true, ..) => Fmt::Csv,
            (_, _, true, _) => Fmt::Dot,
            (.., true) => Fmt::Ascii,
            _ => Fmt::Text,
        }
    }
}

#[derive(Args, Debug)]
struct ManifoldArg {
    /// `brieskorn A B C`, `seifert e0=E arms=A/B,...` or `surgery P Q N +|-`
    #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
    manifold: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Seifert invariants of a Brieskorn sphere
    Brieskorn {
        #[arg(required = true, num_args = 3.., allow_negative_numbers = true)]
        a: Vec<i64>,
        #[command(flatten)]
        format: Format,
    },
    /// Validate Seifert invariants given as `e0=E arms=A/B,...`
    Seifert {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        spec: Vec<String>,
        #[command(flatten)]
        format: Format,
    },
    /// Brieskorn sphere of +-1/n surgery on a torus knot
    Surgery {
        p: i64,
        q: i64,
        n: i64,
        /// `+` for 1/n, `-` for -1/n
        #[arg(allow_hyphen_values = true)]
        sign: String,
        #[command(flatten)]
        format: Format,
    },
    /// Tau function and its local extrema
    Tau {
        #[command(flatten)]
        m: ManifoldArg,
        /// Print the table of local extrema
        #[arg(long)]
        extrema: bool,
        /// Extend the truncation bound by K steps
        #[arg(long, value_name = "K", default_value_t = 0)]
        bound_margin: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Graded root
    Root {
        #[command(flatten)]
        m: ManifoldArg,
        #[arg(long, value_name = "K", default_value_t = 0)]
        bound_margin: usize,
        #[command(flatten)]
        format: Format,
    },
    /// HF+ of -Sigma
    Hf {
        #[arg(num_args = 1.., allow_negative_numbers = true, required_unless_present = "from_json")]
        manifold: Vec<String>,
        /// Read a module previously written with --json
        #[arg(long, value_name = "FILE", conflicts_with = "manifold")]
        from_json: Option<std::path::PathBuf>,
        #[arg(long, value_name = "K", default_value_t = 0)]
        bound_margin: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Compare a closed form with the pipeline over a range of n
    Compare {
        /// e.g. `2,5,minus1`
        #[arg(long)]
        family: FamilyId,
        /// `A..B`, `A..=B` or `A`
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<i64>,
        /// Use the tabulated row even for the surgery families
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        format: Format,
    },
    /// CSV of HF+ over families and n, computed in parallel
    Sweep {
        /// Repeatable; defaults to the ten tabulated families
        #[arg(long)]
        family: Vec<FamilyId>,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<i64>,
    },
    /// Delta invariants of torus knots
    Delta {
        /// Cover degree (a prime power)
        #[arg(long, requires = "knot", conflicts_with = "report")]
        cover: Option<i64>,
        /// `P,Q` for the torus knot T_{P,Q}
        #[arg(long, value_parser = parse_pair)]
        knot: Option<(i64, i64)>,
        /// Table of printed values against the pipeline
        #[arg(long)]
        report: bool,
        #[arg(long, value_parser = parse_range, default_value = "1..3")]
        n: RangeInclusive<i64>,
        #[command(flatten)]
        format: Format,
    },
    /// Check predicted d-invariants of -Sigma(2, p, 2pn -+ k)
    Conjecture {
        #[arg(long)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<i64>,
        #[command(flatten)]
        format: Format,
    },
    /// Star-shaped plumbing graph
    Plumb {
        #[command(flatten)]
        m: ManifoldArg,
        #[command(flatten)]
        format: Format,
    },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected A..B, A..=B or A, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a < 1 || b < a {
        return Err(format!("need 1 <= A <= B, got {s:?}"));
    }
    Ok(a..=b)
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q, got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad P in {s:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad Q in {s:?}"))?;
    Ok((a, b))
}

/// Parsed manifold: Seifert data plus the `-Sigma(...)` label.
struct Manifold {
    seifert: SeifertInvariants,
    name: String,
}

fn parse_manifold(words: &[String]) -> Result<Manifold> {
    let (kind, rest) = words
        .split_first()
        .ok_or_else(|| Error::Parse("missing manifold".into()))?;
    let ints = |xs: &[String]| -> Result<Vec<i64>> {
        xs.iter()
            .map(|x| {
                x.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("not an integer: {x:?}")))
            })
            .collect()
    };
    let seifert = match kind.as_str() {
        "brieskorn" => brieskorn_general(&ints(rest)?)?,
        "seifert" => rest.join(" ").parse::<SeifertInvariants>()?,
        "surgery" => {
            let [p, q, n, sign] = rest else {
                return Err(Error::Parse("surgery needs P Q N +|-".into()));
            };
            let (p, q, r) = surgery_target(
                ints(std::slice::from_ref(p))?[0],
                ints(std::slice::from_ref(q))?[0],
                ints(std::slice::from_ref(n))?[0],
                parse_sign(sign)?,
            )?;
            brieskorn_general(&[p, q, r])?
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown manifold kind {other:?}; use brieskorn, seifert or surgery"
            )))
        }
    };
    if !seifert.validate()? {
        return Err(Error::InvalidArgs(format!(
            "{seifert} is not an integer homology sphere"
        )));
    }
    let name = sigma_name(&seifert.multiplicities());
    Ok(Manifold { seifert, name })
}

fn parse_sign(s: &str) -> Result<SurgerySign> {
    match s {
        "+" | "plus" | "+1" => Ok(SurgerySign::Plus),
        "-" | "minus" | "-1" => Ok(SurgerySign::Minus),
        _ => Err(Error::Parse(format!(
            "surgery sign must be + or -, got {s:?}"
        ))),
    }
}

fn sigma_name(a: &[i64]) -> String {
    let parts: Vec<String> = a.iter().map(i64::to_string).collect();
    format!("-Sigma({})", parts.join(","))
}

/// A failure and the exit code it maps to.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: 1,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

fn unsupported(cmd: &str, f: Fmt) -> Failure {
    usage(format!("`{cmd}` does not support {f:?} output"))
}

type Out = std::result::Result<String, Failure>;

/// Runs the tool on `args` (program name first), writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            let text = e.render().to_string();
            return match e.kind() {
                DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = out.write_all(text.as_bytes());
                    if e.kind() == DisplayHelpOnMissingArgumentOrSubcommand {
                        2
                    } else {
                        0
                    }
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cmd: Command) -> Out {
    match cmd {
        Command::Brieskorn { a, format } => cmd_brieskorn(&a, format.get()),
        Command::Seifert { spec, format } => {
            let mut words = vec!["seifert".to_string()];
            words.extend(spec);
            let m = parse_manifold(&words)?;
            describe_seifert(&m, format.get(), "seifert")
        }
        Command::Surgery {
            p,
            q,
            n,
            sign,
            format,
        } => cmd_surgery(p, q, n, &sign, format.get()),
        Command::Tau {
            m,
            extrema,
            bound_margin,
            format,
        } => cmd_tau(
            &parse_manifold(&m.manifold)?,
            extrema,
            bound_margin,
            format.get(),
        ),
        Command::Root {
            m,
            bound_margin,
            format,
        } => cmd_root(&parse_manifold(&m.manifold)?, bound_margin, format.get()),
        Command::Hf {
            manifold,
            from_json,
            bound_margin,
            format,
        } => cmd_hf(&manifold, from_json.as_deref(), bound_margin, format.get()),
        Command::Compare {
            family,
            n,
            table,
            format,
        } => cmd_compare(&family, n, table, format.get()),
        Command::Sweep { family, n } => cmd_sweep(family, n),
        Command::Delta {
            cover,
            knot,
            report,
            n,
            format,
        } => cmd_delta(cover, knot, report, n, format.get()),
        Command::Conjecture { p, k, n, format } => cmd_conjecture(p, k, n, format.get()),
        Command::Plumb { m, format } => cmd_plumb(&parse_manifold(&m.manifold)?, format.get()),
    }
}

fn cmd_brieskorn(a: &[i64], f: Fmt) -> Out {
    let s = brieskorn_general(a)?;
    let m = Manifold {
        name: sigma_name(a),
        seifert: s,
    };
    describe_seifert(&m, f, "brieskorn")
}

fn describe_seifert(m: &Manifold, f: Fmt, cmd: &str) -> Out {
    let s = &m.seifert;
    let e = s.orbifold_e();
    let eps = s.orbifold_epsilon()?;
    match f {
        Fmt::Text => Ok(format!(
            "manifold: {}\nseifert: {}\ne: {}\nepsilon: {}\n",
            &m.name[1..],
            s,
            e,
            eps
        )),
        Fmt::Json => Ok(to_json(&json!({
            "manifold": &m.name[1..],
            "e0": s.e0,
            "arms": s.arms.iter().map(|a| [a.a, a.b]).collect::<Vec<_>>(),
            "e": e.to_string(),
            "epsilon": eps.to_string(),
        }))),
        other => Err(unsupported(cmd, other)),
    }
}

fn cmd_surgery(p: i64, q: i64, n: i64, sign: &str, f: Fmt) -> Out {
    let sign = parse_sign(sign)?;
    let (a, b, c) = surgery_target(p, q, n, sign)?;
    let (slope, target) = match sign {
        SurgerySign::Plus => (format!("1/{n}"), format!("-Sigma({a},{b},{c})")),
        SurgerySign::Minus => (format!("-1/{n}"), format!("Sigma({a},{b},{c})")),
    };
    match f {
        Fmt::Text => Ok(format!("S^3_{slope}(T_{{{p},{q}}}) = {target}\n")),
        Fmt::Json => Ok(to_json(&json!({
            "knot": [p, q],
            "slope": slope,
            "manifold": target,
            "triple": [a, b, c],
        }))),
        other => Err(unsupported("surgery", other)),
    }
}

fn kind_str(k: ExtremumKind) -> &'static str {
    match k {
        ExtremumKind::Min => "min",
        ExtremumKind::Max => "max",
    }
}

fn cmd_tau(m: &Manifold, extrema: bool, margin: usize, f: Fmt) -> Out {
    let tau = tau_sequence_with_margin(&m.seifert, margin)?;
    let r = reduce(&tau);
    let plain = &m.name[1..];
    match f {
        Fmt::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "manifold: {plain}");
            let _ = writeln!(s, "seifert: {}", m.seifert);
            let _ = writeln!(s, "bound: {}", tau.bound);
            let _ = writeln!(s, "min: {}", tau.min());
            let _ = writeln!(s, "reduced: {:?}", r.values());
            if extrema {
                let _ = writeln!(s, "kind  i  start  end  value");
                let (mut mins, mut maxs) = (0, 0);
                for e in &r.extrema {
                    let idx = match e.kind {
                        ExtremumKind::Min => {
                            mins += 1;
                            mins - 1
                        }
                        ExtremumKind::Max => {
                            maxs += 1;
                            maxs - 1
                        }
                    };
                    let _ = writeln!(
                        s,
                        "{}  {}  {}  {}  {}",
                        kind_str(e.kind),
                        idx,
                        e.start,
                        e.end,
                        e.value
                    );
                }
            }
            Ok(s)
        }
        Fmt::Json => {
            let ext: Vec<_> = r
                .extrema
                .iter()
                .map(|e| json!({"kind": kind_str(e.kind), "value": e.value, "start": e.start, "end": e.end}))
                .collect();
            let mut v = json!({
                "manifold": plain,
                "seifert": m.seifert.to_string(),
                "bound": tau.bound,
                "min": tau.min(),
                "reduced": r.values(),
            });
            if extrema {
                v["extrema"] = serde_json::Value::Array(ext);
            } else {
                v["values"] = json!(tau.values);
            }
            Ok(to_json(&v))
        }
        Fmt::Csv => {
            let mut s = String::new();
            if extrema {
                s.push_str("kind,start,end,value\n");
                for e in &r.extrema {
                    let _ = writeln!(s, "{},{},{},{}", kind_str(e.kind), e.start, e.end, e.value);
                }
            } else {
                s.push_str("k,tau\n");
                for (k, v) in tau.values.iter().enumerate() {
                    let _ = writeln!(s, "{k},{v}");
                }
            }
            Ok(s)
        }
        other => Err(unsupported("tau", other)),
    }
}

fn cmd_root(m: &Manifold, margin: usize, f: Fmt) -> Out {
    let tau = tau_sequence_with_margin(&m.seifert, margin)?;
    let root = build_root(&reduce(&tau))?;
    let shift = grading_shift(&m.seifert)?;
    match f {
        Fmt::Text | Fmt::Ascii => Ok(format!("{}\n{}", m.name, root.to_ascii(shift))),
        Fmt::Dot => Ok(root.to_dot(&m.name, shift)),
        Fmt::Json => {
            let leaves: Vec<_> = root
                .leaves
                .iter()
                .enumerate()
                .map(|(id, l)| json!({"id": id, "value": l.value, "index": l.index}))
                .collect();
            let merges: Vec<_> = root
                .merges
                .iter()
                .map(|g| json!({"leaf": g.leaf, "into": g.into, "level": g.level}))
                .collect();
            Ok(to_json(&json!({
                "manifold": m.name,
                "shift": shift,
                "trunk": root.trunk,
                "leaves": leaves,
                "merges": merges,
            })))
        }
        Fmt::Csv => Err(unsupported("root", f)),
    }
}

fn cmd_hf(words: &[String], from: Option<&std::path::Path>, margin: usize, f: Fmt) -> Out {
    let (name, module) = match from {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure {
                code: 1,
                msg: format!("{}: {e}", path.display()),
            })?;
            module_from_json(&text)?
        }
        None => {
            let m = parse_manifold(words)?;
            (m.name.clone(), compute_hf_with_margin(&m.seifert, margin)?)
        }
    };
    emit_module(&name, &module, f)
}

fn emit_module(name: &str, m: &HFPlusModule, f: Fmt) -> Out {
    match f {
        Fmt::Text => Ok(format!("manifold: {name}\n{m}\n")),
        Fmt::Json => Ok(to_json(&ModuleJson::new(name, m))),
        Fmt::Csv => {
            let mut s = String::from("bottom,length,mult\n");
            for (t, k) in m.towers() {
                let _ = writeln!(s, "{},{},{}", t.bottom, t.length, k);
            }
            Ok(s)
        }
        other => Err(unsupported("hf", other)),
    }
}

fn cmd_compare(family: &FamilyId, ns: RangeInclusive<i64>, table: bool, f: Fmt) -> Out {
    let source = if table {
        Source::Table1
    } else {
        Source::default_for(family)?
    };
    let mut rows = Vec::new();
    for n in ns {
        match compare(family, n, source) {
            Ok(c) => rows.push(serde_json::to_value(&c).expect("serializable")),
            Err(Error::DomainEdge(msg)) => rows.push(json!({
                "family": family.to_string(),
                "n": n,
                "source": source,
                "domain_edge": msg,
            })),
            Err(e) => return Err(e.into()),
        }
    }
    match f {
        Fmt::Json => Ok(to_json(&rows)),
        Fmt::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "family {} ({})", family, family.label());
            for r in &rows {
                if let Some(msg) = r.get("domain_edge") {
                    let _ = writeln!(
                        s,
                        "n={}: domain edge: {}",
                        r["n"],
                        msg.as_str().unwrap_or("")
                    );
                    continue;
                }
                let offsets = match &r["grading_offsets"] {
                    serde_json::Value::Null => "none".to_string(),
                    o => format!("base {} indexed {}", o["base"], o["indexed"]),
                };
                let _ = writeln!(
                    s,
                    "n={} {}: equal={} offsets: {}",
                    r["n"],
                    r["pipeline"]["manifold"].as_str().unwrap_or(""),
                    r["equal"],
                    offsets
                );
            }
            Ok(s)
        }
        other => Err(unsupported("compare", other)),
    }
}

fn cmd_sweep(mut families: Vec<FamilyId>, ns: RangeInclusive<i64>) -> Out {
    if families.is_empty() {
        families = TABLE1_FAMILIES.to_vec();
    }
    families.sort();
    families.dedup();
    let jobs: Vec<(FamilyId, i64)> = families
        .iter()
        .flat_map(|f| ns.clone().map(move |n| (*f, n)))
        .collect();
    let results: Vec<Result<(FamilyId, i64, HFPlusModule)>> = jobs
        .into_par_iter()
        .map(|(f, n)| {
            let [a, b, c] = f.triple(n)?;
            let m = crate::gradedroot::compute_hf(&brieskorn_general(&[a, b, c])?)?;
            Ok((f, n, m))
        })
        .collect();
    let mut s = String::from("family,n,d,tower_bottom,tower_len,mult\n");
    for r in results {
        let (f, n, m) = r?;
        if m.tower_count() == 0 {
            let _ = writeln!(s, "\"{f}\",{n},{},,,", m.d);
        }
        for (t, k) in m.towers() {
            let _ = writeln!(s, "\"{f}\",{n},{},{},{},{}", m.d, t.bottom, t.length, k);
        }
    }
    Ok(s)
}

fn cmd_delta(
    cover: Option<i64>,
    knot: Option<(i64, i64)>,
    report: bool,
    ns: RangeInclusive<i64>,
    f: Fmt,
) -> Out {
    if !report {
        let (Some(c), Some((p, q))) = (cover, knot) else {
            return Err(usage("give --cover and --knot, or --report"));
        };
        let v = delta_invariant(c, p, q)?;
        return match f {
            Fmt::Text => Ok(format!("delta_{c}(T_{{{p},{q}}}) = {v}\n")),
            Fmt::Json => Ok(to_json(&json!({"cover": c, "knot": [p, q], "delta": v}))),
            other => Err(unsupported("delta", other)),
        };
    }
    let rows = delta_report(ns)?;
    match f {
        Fmt::Json => Ok(to_json(&rows)),
        Fmt::Csv | Fmt::Text => {
            let mut s =
                String::from("family,n,claim,cover,knot_p,knot_q,printed,pipeline,agrees\n");
            for r in &rows {
                let claim = serde_json::to_value(r.claim).expect("serializable");
                let _ = writeln!(
                    s,
                    "\"{}\",{},{},{},{},{},{},{},{}",
                    r.family,
                    r.n,
                    claim.as_str().unwrap_or(""),
                    r.cover,
                    r.knot[0],
                    r.knot[1],
                    r.printed,
                    r.pipeline,
                    r.agrees
                );
            }
            if f == Fmt::Text {
                let bad = rows.iter().filter(|r| !r.agrees).count();
                let _ = writeln!(
                    s,
                    "# {bad} of {} printed values disagree with the pipeline",
                    rows.len()
                );
            }
            Ok(s)
        }
        other => Err(unsupported("delta", other)),
    }
}

fn cmd_conjecture(p: i64, k: i64, ns: RangeInclusive<i64>, f: Fmt) -> Out {
    let rows = conjecture_check(p, k, ns)?;
    match f {
        Fmt::Json => Ok(to_json(&rows)),
        Fmt::Csv | Fmt::Text => {
            let mut s = String::from("p,k,n,sign,a1,a2,a3,d,conjectured,agree\n");
            for r in &rows {
                let sign = if r.sign < 0 { '-' } else { '+' };
                let [a1, a2, a3] = r.triple;
                let _ = writeln!(
                    s,
                    "{},{},{},{sign},{a1},{a2},{a3},{},{},{}",
                    r.p, r.k, r.n, r.d, r.conjectured, r.agree
                );
            }
            if f == Fmt::Text {
                let agree = rows.iter().filter(|r| r.agree).count();
                let _ = writeln!(s, "# {agree} of {} cases agree", rows.len());
            }
            Ok(s)
        }
        other => Err(unsupported("conjecture", other)),
    }
}

fn cmd_plumb(m: &Manifold, f: Fmt) -> Out {
    let g = star_plumbing(&m.seifert)?;
    let plain = &m.name[1..];
    match f {
        Fmt::Dot => Ok(g.to_dot(plain)),
        Fmt::Text => {
            let mut s = format!("manifold: {plain}\n");
            s.push_str(&g.adjacency_dump());
            if !s.ends_with('\n') {
                s.push('\n');
            }
            let _ = writeln!(s, "negative definite: {}", g.is_negative_definite());
            let _ = writeln!(s, "determinant: {}", g.determinant());
            let _ = writeln!(s, "bad vertices: {:?}", g.bad_vertices());
            Ok(s)
        }
        Fmt::Json => Ok(to_json(&json!({
            "manifold": plain,
            "weights": g.vertices.iter().map(|v| v.weight).collect::<Vec<_>>(),
            "edges": g.edges,
            "center": g.center,
            "negative_definite": g.is_negative_definite(),
            "determinant": g.determinant().to_string(),
            "bad_vertices": g.bad_vertices(),
        }))),
        other => Err(unsupported("plumb", other)),
    }
}

/// Used by `root --json` consumers and tests: the module a root encodes.
pub fn module_of(s: &SeifertInvariants) -> Result<HFPlusModule> {
    let root = build_root(&reduce(&tau_sequence_with_margin(s, 0)?))?;
    Ok(assemble_hf(&root, grading_shift(s)?))
}
