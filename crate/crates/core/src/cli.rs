//! The `sidon` command line: argument parsing, dispatch, and the text and
//! JSON renderings of every result.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combinat::{GroundSet, Limits};
use crate::error::{usage, Error, Result};
use crate::generate::GeneratorSpec;
use crate::group::{AmbientGroup, Element};
use crate::matroid::{MuCovering, PartitionMu, SidonMatroid};
use crate::oracle;
use crate::sidon::{self, BhkWitness, Membership};

#[derive(Parser, Debug)]
#[command(
    name = "sidon",
    version,
    about = "Sidon sets of order h and their matroids"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Comma-separated elements, e.g. `1,2,3`
    #[arg(long, global = true, allow_hyphen_values = true)]
    set: Option<String>,
    /// File with one integer per line; `#` starts a comment
    #[arg(long, global = true)]
    file: Option<PathBuf>,
    /// Generator spec: interval:n, powers:g=..,count=.., random:seed=..,n=..,max=..
    #[arg(long, global = true)]
    gen: Option<String>,
    /// Order h
    #[arg(long = "h", global = true)]
    order: Option<usize>,
    /// Overlap k for B_{h,k}
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Work in Z/nZ instead of Z
    #[arg(long = "mod", global = true)]
    modulus: Option<i64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of h-multisets enumerated at once
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Seed for generators that do not carry one
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Skip the B_{2h-1,h-1} check; matroid queries fall back to exhaustive search
    #[arg(long, global = true)]
    no_validate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test membership in B_h, or in B_{h,k} when --k is given
    Check,
    /// Largest k such that the set is B_{h,k} (0 if none)
    Classify,
    /// Queries on the matroid of B_h subsets
    Matroid {
        #[command(subcommand)]
        query: MatroidQuery,
    },
    /// All inclusion-maximal B_h subsets, grouped by size
    Maximal,
    /// Cross-check every structural result on one ground set
    Verify,
}

#[derive(Subcommand, Debug, Clone)]
enum MatroidQuery {
    Rank,
    Basis,
    Profile,
    Cover,
    /// Covering by disjoint independent sets of sizes mu_1 >= mu_2 >= ...
    Mu {
        parts: String,
    },
}

/// Runs one invocation; returns the process exit code.
///
/// 0: success or affirmative answer; 1: negative answer or failed check;
/// 2: usage, parse or resource error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(Outcome { code, text, json }) => {
            let _ = match cli.global.format {
                Format::Text => write!(out, "{text}"),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&json).expect("json value")
                ),
            };
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Integrity(_) | Error::NotGeneralizedSidon { .. } => 1,
                _ => 2,
            }
        }
    }
}

struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

/// Parses `1,2,3` (whitespace tolerated) into integers.
pub fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("`{t}` is not an integer")))
        })
        .collect()
}

/// One integer per line; `#` starts a comment; blank lines are ignored.
pub fn parse_set_file(contents: &str) -> Result<Vec<i64>> {
    contents
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.parse::<i64>()
                .map_err(|_| Error::Parse(format!("`{l}` is not an integer")))
        })
        .collect()
}

impl GlobalArgs {
    fn group(&self) -> Result<AmbientGroup> {
        match self.modulus {
            Some(n) => AmbientGroup::cyclic(n),
            None => Ok(AmbientGroup::Integers),
        }
    }

    fn limits(&self) -> Limits {
        Limits {
            multiset_cap: self.cap.unwrap_or(Limits::DEFAULT.multiset_cap),
            ..Limits::DEFAULT
        }
    }

    fn h(&self) -> Result<usize> {
        match self.order {
            Some(h) if h >= 1 => Ok(h),
            Some(_) => Err(usage("--h must be at least 1")),
            None => Err(usage("--h is required")),
        }
    }

    fn ground(&self) -> Result<GroundSet> {
        let group = self.group()?;
        let sources = [self.set.is_some(), self.file.is_some(), self.gen.is_some()];
        if sources.iter().filter(|&&b| b).count() != 1 {
            return Err(usage("give exactly one of --set, --file, --gen"));
        }
        let values = if let Some(s) = &self.set {
            parse_list(s)?
        } else if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            parse_set_file(&text)?
        } else {
            let spec: GeneratorSpec = self.gen.as_deref().expect("checked above").parse()?;
            return spec.build(group, self.seed);
        };
        GroundSet::new(group, values).map_err(|e| match e {
            Error::DuplicateElement(v) => Error::Parse(format!("duplicate element {v}")),
            other => other,
        })
    }
}

fn values(v: &[Element]) -> Vec<i64> {
    v.iter().map(|e| e.value()).collect()
}

fn set_text(v: &[Element]) -> String {
    let mut s = String::new();
    crate::combinat::write_set(&mut s, v).expect("writing to a String");
    s
}

fn witness_json(w: &BhkWitness) -> Value {
    let d = w.representation();
    json!({
        "left": values(d.left().entries()),
        "right": values(d.right().entries()),
        "sum": d.sum().value(),
        "shared": w.overlap(),
    })
}

fn class_name(h: usize, k: usize) -> String {
    if h == k {
        format!("B_{h}")
    } else {
        format!("B_{{{h},{k}}}")
    }
}

fn base_json(cmd: &str, x: &GroundSet) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(cmd));
    m.insert("group".into(), json!(x.group().to_string()));
    m.insert("set".into(), json!(x.values()));
    m
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let limits = g.limits();
    match &cli.command {
        Command::Check => {
            let x = g.ground()?;
            let h = g.h()?;
            let k = g.k.unwrap_or(h);
            if k == 0 || k > h {
                return Err(usage(format!("need 1 <= k <= h, got h = {h}, k = {k}")));
            }
            let m = sidon::is_bhk(&x, h, k, &limits)?;
            let name = class_name(h, k);
            let mut json = base_json("check", &x);
            json.insert("h".into(), json!(h));
            json.insert("k".into(), json!(k));
            json.insert("member".into(), json!(m.is_member()));
            let text = match &m {
                Membership::Member => format!("{x} is a {name} set\n"),
                Membership::NotMember(w) => {
                    json.insert("witness".into(), witness_json(w));
                    format!(
                        "{x} is not a {name} set\nwitness: {} (shared summands: {})\n",
                        w.representation(),
                        w.overlap()
                    )
                }
            };
            Ok(Outcome {
                code: if m.is_member() { 0 } else { 1 },
                text,
                json: json.into(),
            })
        }
        Command::Classify => {
            let x = g.ground()?;
            let h = g.h()?;
            let k = sidon::classify_max_k(&x, h, &limits)?;
            let mut json = base_json("classify", &x);
            json.insert("h".into(), json!(h));
            json.insert("max_k".into(), json!(k));
            let text = if k == 0 {
                format!("{x}: not a B_{{{h},k}} set for any k >= 1 (max k = 0)\n")
            } else {
                format!("{x}: largest k with {x} in B_{{{h},k}} is {k}\n")
            };
            Ok(Outcome {
                code: 0,
                text,
                json: json.into(),
            })
        }
        Command::Maximal => {
            let x = g.ground()?;
            let h = g.h()?;
            let all = oracle::brute_maximal_independents(&x, h, &limits)?;
            let mut json = base_json("maximal", &x);
            json.insert("h".into(), json!(h));
            let mut text = format!("maximal B_{h} subsets of {x}: {}\n", all.len());
            let mut groups = Vec::new();
            let mut i = 0;
            while i < all.len() {
                let size = all[i].len();
                let j = all[i..]
                    .iter()
                    .position(|s| s.len() != size)
                    .map_or(all.len(), |p| i + p);
                text.push_str(&format!("size {size}: {} sets\n", j - i));
                for s in &all[i..j] {
                    text.push_str(&format!("  {}\n", set_text(s)));
                }
                groups.push(json!({
                    "size": size,
                    "count": j - i,
                    "sets": all[i..j].iter().map(|s| values(s)).collect::<Vec<_>>(),
                }));
                i = j;
            }
            json.insert("groups".into(), json!(groups));
            Ok(Outcome {
                code: 0,
                text,
                json: json.into(),
            })
        }
        Command::Verify => {
            let x = g.ground()?;
            let h = g.h()?;
            let report = oracle::verify_paper(&x, h, &limits)?;
            let mut json = base_json("verify", &x);
            json.insert("h".into(), json!(h));
            json.insert("all_passed".into(), json!(report.all_passed()));
            json.insert(
                "checks".into(),
                serde_json::to_value(&report.checks).expect("serializable"),
            );
            let verdict = if report.all_passed() {
                "all applicable checks passed"
            } else {
                "SOME CHECKS FAILED"
            };
            Ok(Outcome {
                code: if report.all_passed() { 0 } else { 1 },
                text: format!("{report}{verdict}\n"),
                json: json.into(),
            })
        }
        Command::Matroid { query } => matroid_query(g, query, &limits),
    }
}

fn matroid_query(g: &GlobalArgs, query: &MatroidQuery, limits: &Limits) -> Result<Outcome> {
    let x = g.ground()?;
    let h = g.h()?;
    let mut json = base_json("matroid", &x);
    json.insert("h".into(), json!(h));
    json.insert("validated".into(), json!(!g.no_validate));
    let m = match SidonMatroid::with_limits(x.clone(), h, !g.no_validate, *limits) {
        Ok(m) => m,
        Err(Error::NotGeneralizedSidon { witness }) => {
            json.insert("valid".into(), json!(false));
            json.insert("witness".into(), witness_json(&witness));
            let text = format!(
                "{x} is not a {} set, so its B_{h} subsets need not form a matroid\nwitness: {} (shared summands: {})\n",
                class_name(2 * h - 1, h - 1),
                witness.representation(),
                witness.overlap()
            );
            return Ok(Outcome {
                code: 1,
                text,
                json: json.into(),
            });
        }
        Err(e) => return Err(e),
    };
    let mu = match query {
        MatroidQuery::Mu { parts } => {
            let mut p: Vec<usize> = parse_list(parts)?
                .into_iter()
                .map(|v| usize::try_from(v).map_err(|_| Error::Parse(format!("negative part {v}"))))
                .collect::<Result<_>>()?;
            p.sort_unstable_by(|a, b| b.cmp(a));
            let mu = PartitionMu::new(p)?;
            if mu.total() != x.len() {
                return Err(usage(format!(
                    "{mu} is not a partition of |X| = {}",
                    x.len()
                )));
            }
            Some(mu)
        }
        _ => None,
    };
    if !m.is_validated() {
        return unvalidated_query(&x, h, query, mu.as_ref(), limits, json);
    }
    let (code, text) = match query {
        MatroidQuery::Rank => {
            let r = m.rank(x.elements())?;
            json.insert("rank".into(), json!(r));
            (0, format!("rank {r}\n"))
        }
        MatroidQuery::Basis => {
            let b = m.find_basis(None)?;
            json.insert("basis".into(), json!(values(&b)));
            (0, format!("basis {}\n", set_text(&b)))
        }
        MatroidQuery::Profile => {
            let p = m.rank_profile()?;
            json.insert("rho".into(), json!(p.ranks()));
            json.insert("covering_number".into(), json!(p.covering_number()));
            let rho: Vec<String> = p.ranks().iter().map(usize::to_string).collect();
            (
                0,
                format!(
                    "rho = [{}]\ncovering number {}\n",
                    rho.join(", "),
                    p.covering_number()
                ),
            )
        }
        MatroidQuery::Cover => {
            let k = m.covering_number(None)?;
            let parts = m.union_partition(None, k)?;
            json.insert("covering_number".into(), json!(k));
            json.insert(
                "parts".into(),
                json!(parts.iter().map(|p| values(p)).collect::<Vec<_>>()),
            );
            let mut text = format!("covering number {k}\n");
            for p in &parts {
                text.push_str(&format!("  {}\n", set_text(p)));
            }
            (0, text)
        }
        MatroidQuery::Mu { .. } => {
            let mu = mu.expect("parsed above");
            json.insert("mu".into(), json!(mu.parts()));
            match m.construct_mu_covering(&mu)? {
                MuCovering::Covering(parts) => {
                    json.insert("exists".into(), json!(true));
                    json.insert(
                        "parts".into(),
                        json!(parts.iter().map(|p| values(p)).collect::<Vec<_>>()),
                    );
                    let mut text = format!("{mu}-covering:\n");
                    for p in &parts {
                        text.push_str(&format!("  {}\n", set_text(p)));
                    }
                    (0, text)
                }
                MuCovering::Infeasible(why) => {
                    json.insert("exists".into(), json!(false));
                    json.insert("reason".into(), json!(why.to_string()));
                    (1, format!("no {mu}-covering: {why}\n"))
                }
            }
        }
    };
    Ok(Outcome {
        code,
        text,
        json: json.into(),
    })
}

/// Matroid queries answered by exhaustive search when validation was skipped.
fn unvalidated_query(
    x: &GroundSet,
    h: usize,
    query: &MatroidQuery,
    mu: Option<&PartitionMu>,
    limits: &Limits,
    mut json: serde_json::Map<String, Value>,
) -> Result<Outcome> {
    json.insert("method".into(), json!("exhaustive"));
    let (code, text) = match query {
        MatroidQuery::Rank => {
            let r = oracle::brute_union_rank(x, h, 1, limits)?;
            json.insert("rank".into(), json!(r));
            (0, format!("largest B_{h} subset has size {r}\n"))
        }
        MatroidQuery::Basis => {
            let all = oracle::brute_maximal_independents(x, h, limits)?;
            let b = all.first().cloned().unwrap_or_default();
            json.insert("basis".into(), json!(values(&b)));
            (0, format!("largest B_{h} subset {}\n", set_text(&b)))
        }
        MatroidQuery::Profile | MatroidQuery::Cover => {
            let k = oracle::brute_covering_number(x, h, limits)?;
            let rho = (1..=k)
                .map(|j| oracle::brute_union_rank(x, h, j, limits))
                .collect::<Result<Vec<_>>>()?;
            json.insert("rho".into(), json!(rho));
            json.insert("covering_number".into(), json!(k));
            let rho: Vec<String> = rho.iter().map(usize::to_string).collect();
            (
                0,
                format!("rho = [{}]\ncovering number {k}\n", rho.join(", ")),
            )
        }
        MatroidQuery::Mu { .. } => {
            let mu = mu.expect("parsed by caller");
            let exists = oracle::brute_mu_partition_exists(x, h, mu, limits)?;
            json.insert("mu".into(), json!(mu.parts()));
            json.insert("exists".into(), json!(exists));
            let verdict = if exists { "exists" } else { "does not exist" };
            (
                if exists { 0 } else { 1 },
                format!("a {mu}-covering {verdict}\n"),
            )
        }
    };
    Ok(Outcome {
        code,
        text,
        json: json.into(),
    })
}
