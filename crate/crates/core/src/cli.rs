//! The `alcove-kit` command line.
//!
//! [`run`] takes the argument vector and two sinks and returns the process
//! exit status, so it can be driven from tests without spawning a process.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::affine_group::{parse_word, AffineElement};
use crate::biclosed_twisted::{
    twisted_length_def, twisted_length_lemma, twisted_length_lemma_rminus, twisted_length_theorem,
    twisted_length_theorem_rminus, BiclosedSpec, SimpleSet, SubsetPair,
};
use crate::enumeration_verify::{enumerate, run_suite_on, Bounds, Suite};
use crate::error::{Error, Result};
use crate::inversions::inversion_set;
use crate::render::{render_alcoves, RenderSpec};
use crate::root_system::{build_root_system, CartanType, Rational, RootSystem};
use crate::shi_vectors::shi_vector;

/// Worker-count override for parallel verification.
pub const WORKERS_ENV: &str = "ALCOVE_KIT_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "alcove-kit",
    version,
    about = "Shi vectors, inversion sets and twisted lengths on affine Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct Common {
    /// Cartan type, e.g. A2, B3, G2.
    #[arg(long = "type", value_name = "TYPE")]
    cartan: CartanType,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct WordArg {
    /// Generator indices, comma separated; 0 is the affine generator.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    word: String,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Simple roots in Δ₁ (1-based, comma separated).
    #[arg(long, default_value = "")]
    delta1: String,
    /// Simple roots in Δ₂.
    #[arg(long, default_value = "")]
    delta2: String,
    /// Word for the twisting element y.
    #[arg(long, default_value = "")]
    y: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Positive roots, Gram matrix and highest short root.
    Roots {
        #[command(flatten)]
        common: Common,
    },
    /// Shi vector of an element.
    Shi {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        word: WordArg,
    },
    /// Coxeter length of an element.
    Len {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        word: WordArg,
    },
    /// Inversion set N(w) as (root, level) pairs.
    Nset {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        word: WordArg,
    },
    /// Twisted length of x for the biclosed set y·A₁,₂.
    Tlen {
        #[command(flatten)]
        common: Common,
        /// Word for x (alias of --word).
        #[arg(long, alias = "word", default_value = "")]
        x: String,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suite name, comma list, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long)]
        lx: Option<usize>,
        #[arg(long)]
        ly: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON file mapping type names to bounds.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// SVG alcove picture (rank 2 only).
    Render {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        word: WordArg,
        #[command(flatten)]
        pair: PairArgs,
        /// Window radius, integer or p/q.
        #[arg(long)]
        radius: Option<Rational>,
    },
}

/// Parses `argv` (including the program name) and runs the command.
/// Returns 0 on success, 1 on failed verification or runtime error, 2 on
/// usage errors.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    configure_workers();
    match dispatch(cli.command) {
        Ok((text, status)) => match text {
            Emit::Stdout(s) => {
                let _ = out.write_all(s.as_bytes());
                status
            }
            Emit::File(path, s) => match std::fs::write(&path, s) {
                Ok(()) => status,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    1
                }
            },
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn configure_workers() {
    let Some(n) = std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    else {
        return;
    };
    // Fails harmlessly if the global pool already exists.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
}

enum Emit {
    Stdout(String),
    File(PathBuf, String),
}

fn emit(common: &Common, body: String) -> Emit {
    match &common.out {
        Some(p) => Emit::File(p.clone(), body),
        None => Emit::Stdout(body),
    }
}

fn element(rs: &Arc<RootSystem>, word: &str) -> Result<AffineElement> {
    AffineElement::from_word(rs, &parse_word(word)?)
}

fn biclosed(rs: &Arc<RootSystem>, pair: &PairArgs) -> Result<BiclosedSpec> {
    let p = SubsetPair::new(
        SimpleSet::parse(rs, &pair.delta1)?,
        SimpleSet::parse(rs, &pair.delta2)?,
    );
    Ok(BiclosedSpec::new(p, element(rs, &pair.y)?))
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn dispatch(cmd: Command) -> Result<(Emit, i32)> {
    match cmd {
        Command::Roots { common } => {
            let rs = build_root_system(common.cartan);
            let body = match common.format {
                Format::Json => json_line(&serde_json::to_value(&*rs).expect("serializable")),
                Format::Text => {
                    let mut s = format!(
                        "{}: {} positive roots\n",
                        rs.cartan_type(),
                        rs.num_positive()
                    );
                    for (i, r) in rs.positive_roots().iter().enumerate() {
                        s += &format!(
                            "{i:>3}  {:?}  {}  |α|²={}\n",
                            r.coords(),
                            r.label(),
                            rs.norm(i)
                        );
                    }
                    s += &format!("highest short root: {}\n", rs.highest_short_root().label());
                    s
                }
            };
            Ok((emit(&common, body), 0))
        }
        Command::Shi { common, word } => {
            let rs = build_root_system(common.cartan);
            let sv = shi_vector(&element(&rs, &word.word)?);
            let body = match common.format {
                Format::Json => json_line(&serde_json::to_value(&sv).expect("serializable")),
                Format::Text => rs
                    .positive_roots()
                    .iter()
                    .zip(sv.entries())
                    .map(|(r, k)| format!("{} {k}\n", r.label()))
                    .collect(),
            };
            Ok((emit(&common, body), 0))
        }
        Command::Len { common, word } => {
            let rs = build_root_system(common.cartan);
            let len = shi_vector(&element(&rs, &word.word)?).length();
            let body = match common.format {
                Format::Json => json_line(&json!({ "length": len })),
                Format::Text => format!("{len}\n"),
            };
            Ok((emit(&common, body), 0))
        }
        Command::Nset { common, word } => {
            let rs = build_root_system(common.cartan);
            let pairs = inversion_set(&element(&rs, &word.word)?).to_pairs(&rs);
            let body = match common.format {
                Format::Json => json_line(&json!(pairs)),
                Format::Text => pairs.iter().map(|(r, k)| format!("{r:?} {k}\n")).collect(),
            };
            Ok((emit(&common, body), 0))
        }
        Command::Tlen { common, x, pair } => {
            let rs = build_root_system(common.cartan);
            let x = element(&rs, &x)?;
            let spec = biclosed(&rs, &pair)?;
            let def = twisted_length_def(&spec, &x);
            let (formula, rminus, name) = if spec.y().is_identity() {
                (
                    twisted_length_lemma(&spec.pair(), &x),
                    twisted_length_lemma_rminus(&spec.pair(), &x),
                    "lemma",
                )
            } else {
                (
                    twisted_length_theorem(&spec, &x)?,
                    twisted_length_theorem_rminus(&spec, &x)?,
                    "theorem",
                )
            };
            let body = match common.format {
                Format::Json => json_line(&json!({
                    "def": def,
                    "formula": name,
                    "lemma_or_theorem": formula,
                    "agree": def == formula,
                    "rminus_only": rminus,
                    "rminus_agree": def == rminus,
                })),
                Format::Text => format!(
                    "def {def}\n{name} {formula}{}\n{name} without r+ {rminus}{}\n",
                    if def == formula { "" } else { " (differs)" },
                    if def == rminus { "" } else { " (differs)" },
                ),
            };
            Ok((emit(&common, body), 0))
        }
        Command::Verify {
            common,
            suite,
            max_length,
            lx,
            ly,
            seed,
            config,
        } => {
            let rs = build_root_system(common.cartan);
            let suites = Suite::parse_list(&suite)?;
            let mut bounds = match &config {
                Some(path) => load_bounds(path, rs.cartan_type())?,
                None => Bounds::for_rank(rs.rank()),
            };
            if let Some(l) = max_length {
                bounds.max_length = l;
            }
            if let Some(l) = lx {
                bounds.theorem_x = l;
            }
            if let Some(l) = ly {
                bounds.theorem_y = l;
            }
            let reach = bounds
                .max_length
                .max(bounds.theorem_x)
                .max(bounds.theorem_y)
                .max(bounds.pair_length);
            let table = enumerate(&rs, reach)?;
            let reports = suites
                .into_iter()
                .map(|s| run_suite_on(&table, s, &bounds, seed))
                .collect::<Result<Vec<_>>>()?;
            let status = if reports.iter().all(|r| r.is_ok()) {
                0
            } else {
                1
            };
            let body = match common.format {
                Format::Json => json_line(&serde_json::to_value(&reports).expect("serializable")),
                Format::Text => reports
                    .iter()
                    .map(|r| {
                        let mut line = r.summary_line();
                        if let Some(c) = r.first_counterexample() {
                            line += &format!("\n    first failure: {c}");
                        }
                        line + "\n"
                    })
                    .collect(),
            };
            Ok((emit(&common, body), status))
        }
        Command::Render {
            common,
            word,
            pair,
            radius,
        } => {
            let rs = build_root_system(common.cartan);
            let mut spec = RenderSpec::new(element(&rs, &word.word)?, biclosed(&rs, &pair)?);
            if let Some(r) = radius {
                spec = spec.with_radius(r);
            }
            let svg = render_alcoves(&spec)?;
            Ok((emit(&common, svg), 0))
        }
    }
}

/// Reads a JSON object `{"B2": {"max_length": 6, ...}, ...}`; types without
/// an entry fall back to the rank defaults.
fn load_bounds(path: &PathBuf, t: CartanType) -> Result<Bounds> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    let mut map: BTreeMap<String, Value> = serde_json::from_str(&text)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    let Some(entry) = map.remove(&t.to_string()) else {
        return Ok(Bounds::for_rank(t.rank()));
    };
    let mut merged = serde_json::to_value(Bounds::for_rank(t.rank())).expect("serializable");
    if let (Value::Object(base), Value::Object(over)) = (&mut merged, entry) {
        base.extend(over);
    }
    serde_json::from_value(merged).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("alcove-kit").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn len_of_finite_longest_element() {
        assert_eq!(
            call(&["len", "--type", "A2", "--word", "1,2,1"]),
            (0, "3\n".into(), String::new())
        );
    }

    #[test]
    fn empty_word_gives_zero_shi_vector() {
        let (code, out, _) = call(&["shi", "--type", "A2", "--word", "", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v.as_object().unwrap().values().all(|k| k == 0));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["len", "--type", "A2", "--bogus"]).0, 2);
        assert_eq!(call(&["len", "--type", "Q7"]).0, 2);
    }

    #[test]
    fn runtime_errors_exit_one() {
        let (code, out, err) = call(&["len", "--type", "A2", "--word", "1,7"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn config_overrides_and_falls_back() {
        let dir = std::env::temp_dir().join(format!("alcove-kit-cfg-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bounds.json");
        std::fs::write(&path, r#"{"B2": {"max_length": 3}}"#).unwrap();
        let b2: CartanType = "B2".parse().unwrap();
        let a3: CartanType = "A3".parse().unwrap();
        let b = load_bounds(&path, b2).unwrap();
        assert_eq!(b.max_length, 3);
        assert_eq!(b.theorem_x, Bounds::for_rank(2).theorem_x);
        assert_eq!(load_bounds(&path, a3).unwrap(), Bounds::for_rank(3));
        std::fs::write(&path, "not json").unwrap();
        assert!(matches!(load_bounds(&path, b2), Err(Error::Config(_))));
    }
}
