//! `hbrauer`: censuses, word evaluation and verification suites for the
//! Brauer monoids of types H3 and H4.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 for usage
//! or parse errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use hbrauer::admissible::{CellData, HAdmissible, Variant};
use hbrauer::embed::{embed_report, FoldingMap, SimplyLaced};
use hbrauer::engine::{Engine, NormalFormJson};
use hbrauer::group::{central_element_z, r5_word, GroupTable};
use hbrauer::hsystem::HCoxeter;
use hbrauer::roots::{CoxeterType, DiagramSpec, RootSystem};
use hbrauer::suites::{self, Options, Suite, SuiteReport};
use hbrauer::{Error, GoldenNumber};

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(name = "hbrauer", version, about = "Exact Brauer monoids of Coxeter types H3 and H4")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Config {
    /// H3, H4, D6 or E8.
    #[arg(long = "type", global = true, default_value = "H3", value_parser = parse_type)]
    kind: CoxeterType,
    /// standard or chen (chen needs H4).
    #[arg(long, global = true, default_value = "standard", value_parser = parse_variant)]
    variant: Variant,
    /// Emit JSON reports.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for the group-table cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots in simple-root coordinates.
    Roots,
    /// Order of the Coxeter group, and the central element z for H4.
    Group,
    /// Orthogonal bases, admissible sets and cell data.
    Admissible,
    /// Enumerate every normal form and check closure.
    Census,
    /// Normal form of a word such as "r1 e2 d d-".
    Eval { word: String },
    /// Run verification suites.
    Verify {
        /// relations, census, embed, action, properties or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Folding checks into D6 (from H3) or E8 (from H4).
    Embed,
}

fn parse_type(s: &str) -> Result<CoxeterType, String> {
    s.parse().map_err(|_| format!("unknown type {s:?}; expected H3, H4, D6 or E8"))
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::BadGenerator { .. } | Error::UnsupportedDiagram(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Internal(other),
        }
    }
}

type Outcome = Result<(), Failure>;

#[derive(Debug, Serialize, Deserialize)]
struct RootsReport {
    #[serde(rename = "type")]
    kind: String,
    count: usize,
    roots: Vec<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GroupReport {
    #[serde(rename = "type")]
    kind: String,
    order: usize,
    longest_length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    z: Option<ZReport>,
    seconds: f64,
}

/// The central involution of ⟨r3, r4, r5⟩ in W(H4).
#[derive(Debug, Serialize, Deserialize)]
struct ZReport {
    order: usize,
    length: usize,
    central_in_k: bool,
    word: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct VerifyReport {
    #[serde(rename = "type")]
    kind: String,
    variant: Variant,
    seed: u64,
    suites: Vec<SuiteReport>,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let c = &cli.config;
    if c.variant == Variant::Chen && c.kind != CoxeterType::H4 {
        return Err(Failure::Usage("--variant chen requires --type H4".into()));
    }
    if let Some(n) = c.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("--jobs: {e}")))?;
    }
    match &cli.command {
        Command::Roots => cmd_roots(c),
        Command::Group => cmd_group(c),
        Command::Admissible => cmd_admissible(c),
        Command::Census => cmd_census(c),
        Command::Eval { word } => cmd_eval(c, word),
        Command::Verify { suite, seed } => cmd_verify(c, suite, *seed),
        Command::Embed => cmd_embed(c),
    }
}

/// `println!` that ignores a closed stdout, so output can be piped to `head`.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

fn print_json(v: &impl Serialize) {
    say!("{}", serde_json::to_string_pretty(v).expect("reports serialize"));
}

fn require_h(c: &Config, what: &str) -> Result<(), Failure> {
    if c.kind.is_golden() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{what} needs --type H3 or H4, got {}", c.kind)))
    }
}

fn h_system(c: &Config) -> Result<Arc<HCoxeter>, Failure> {
    Ok(Arc::new(HCoxeter::build_cached(c.kind, c.cache_dir.as_deref())?))
}

fn engine(c: &Config) -> Result<Engine, Failure> {
    Ok(Engine::with_system(h_system(c)?, c.variant)?)
}

fn cmd_roots(c: &Config) -> Outcome {
    let spec = DiagramSpec::of(c.kind);
    let (roots, text): (Vec<Value>, Vec<String>) = if c.kind.is_golden() {
        let s = RootSystem::<GoldenNumber>::build(spec)?;
        s.roots()
            .iter()
            .map(|r| {
                let pairs: Vec<[i64; 2]> = r.coeffs().iter().map(|x| [x.a(), x.b()]).collect();
                let shown: Vec<String> = r.coeffs().iter().map(|x| x.to_string()).collect();
                (json!(pairs), shown.join(", "))
            })
            .unzip()
    } else {
        let s = RootSystem::<i64>::build(spec)?;
        s.roots()
            .iter()
            .map(|r| {
                let shown: Vec<String> = r.coeffs().iter().map(|x| x.to_string()).collect();
                (json!(r.coeffs()), shown.join(", "))
            })
            .unzip()
    };
    if c.json {
        print_json(&RootsReport { kind: c.kind.name().into(), count: roots.len(), roots });
    } else {
        say!("{}: {} positive roots", c.kind, roots.len());
        for (i, t) in text.iter().enumerate() {
            say!("{:>4}  ({t})", i + 1);
        }
    }
    Ok(())
}

fn cmd_group(c: &Config) -> Outcome {
    let start = Instant::now();
    let (order, longest_length, z) = if c.kind.is_golden() {
        let h = h_system(c)?;
        let g = h.group();
        let z = if c.kind == CoxeterType::H4 {
            let ze = central_element_z(h.system())?;
            let id = g.id_of(&ze).ok_or_else(|| Failure::Internal(Error::Inconsistent("z not in W(H4)".into())))?;
            let r5 = g.from_word(&r5_word().iter().map(|&i| i as u8).collect::<Vec<_>>());
            let k = [g.generator(2), g.generator(3), r5];
            let word: Vec<String> = g.word(id).iter().map(|i| format!("r{}", i + 1)).collect();
            Some(ZReport {
                order: ze.order(),
                length: g.length(id),
                central_in_k: k.iter().all(|&x| g.mul(x, id) == g.mul(id, x)),
                word: word.join(" "),
            })
        } else {
            None
        };
        (g.len(), g.ids().map(|x| g.length(x)).max().unwrap_or(0), z)
    } else if c.kind == CoxeterType::D6 {
        let s = RootSystem::<i64>::build(DiagramSpec::of(c.kind))?;
        let g = GroupTable::coxeter(&s)?;
        (g.len(), g.ids().map(|x| g.length(x)).max().unwrap_or(0), None)
    } else {
        return Err(Failure::Usage("W(E8) is not enumerated; use `embed --type H4` for the folded subgroup".into()));
    };
    let report =
        GroupReport { kind: c.kind.name().into(), order, longest_length, z, seconds: start.elapsed().as_secs_f64() };
    if c.json {
        print_json(&report);
    } else {
        say!("W({}) has order {}", c.kind, report.order);
        say!("longest element length {}", report.longest_length);
        if let Some(z) = &report.z {
            say!("z = {} (order {}, central in <r3,r4,r5>: {})", z.word, z.order, z.central_in_k);
        }
    }
    Ok(())
}

fn cmd_admissible(c: &Config) -> Outcome {
    if !c.kind.is_golden() {
        let amb = SimplyLaced::new(c.kind)?;
        let sets = amb.reachable_sets()?;
        let mut by_size = std::collections::BTreeMap::new();
        for b in &sets {
            *by_size.entry(b.len()).or_insert(0usize) += 1;
        }
        if c.json {
            print_json(&json!({ "type": c.kind.name(), "reachable_sets": sets.len(), "by_size": by_size }));
        } else {
            say!("{}: {} sets reachable from the empty set", c.kind, sets.len());
            for (k, n) in by_size {
                say!("  size {k}: {n}");
            }
        }
        return Ok(());
    }
    let h = h_system(c)?;
    let census = HAdmissible::new(h.system()).census(h.system());
    let counts = CellData::build(&h, c.variant)?.counts();
    if c.json {
        let mut v = serde_json::to_value(&census).expect("census serializes");
        v["variant"] = json!(c.variant);
        v["cells"] = serde_json::to_value(&counts).expect("counts serialize");
        print_json(&v);
    } else {
        say!("{}: {} positive roots, {} orthogonal pairs", census.kind, census.positive_roots, census.orthogonal_pairs);
        say!("bases: {}", census.bases);
        say!("bases per root: {}..{}", census.bases_per_root.0, census.bases_per_root.1);
        say!("bases per orthogonal pair: {}..{}", census.bases_per_pair.0, census.bases_per_pair.1);
        say!("admissible sets: {}", census.admissible_sets);
        say!(
            "N1 {} (index {}), K {}, C1 {}, D1 {}, N2 {}, D2 {}",
            counts.n1,
            counts.n1_index,
            counts.k,
            counts.c1,
            counts.d1,
            counts.n2,
            counts.d2
        );
    }
    Ok(())
}

fn cmd_census(c: &Config) -> Outcome {
    require_h(c, "census")?;
    let e = engine(c)?;
    let start = Instant::now();
    let r = e.census()?;
    let passed = r.passed();
    if c.json || !passed {
        print_json(&r);
    } else {
        let n = r.counts;
        say!("{} {}: {} + {} + {} = {} forms", r.kind, r.variant, n.group, n.e1, n.e1e3, n.total);
        say!("closed: {}, reachable: {}, rewrites: {}", r.closed, r.reachable, r.rewrites);
        say!("{:.2}s", start.elapsed().as_secs_f64());
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_eval(c: &Config, word: &str) -> Outcome {
    require_h(c, "eval")?;
    let e = engine(c)?;
    let x = e.eval(word)?;
    let j: NormalFormJson = e.to_json(&x);
    if c.json {
        print_json(&j);
    } else {
        say!("{}", e.canonical_word(&x));
        let cell = serde_json::to_value(j.cell).expect("cell kind serializes");
        say!("delta {} cell {} u [{}] v [{}] w [{}]", j.delta, cell.as_str().unwrap_or(""), j.u, j.v, j.w);
    }
    Ok(())
}

fn cmd_verify(c: &Config, suite: &str, seed: u64) -> Outcome {
    let selected: Vec<Suite> = if suite == "all" {
        if c.kind.is_golden() {
            Suite::ALL.to_vec()
        } else {
            vec![Suite::Embed]
        }
    } else {
        vec![suite.parse::<Suite>()?]
    };
    let e = if c.kind.is_golden() { Some(engine(c)?) } else { None };
    let opts = Options { seed, ..Options::default() };
    let mut reports = Vec::new();
    for s in selected {
        reports.push(suites::run(s, c.kind, e.as_ref(), &opts)?);
    }
    let passed = reports.iter().all(SuiteReport::passed);
    let report = VerifyReport { kind: c.kind.name().into(), variant: c.variant, seed, suites: reports, passed };
    if c.json {
        print_json(&report);
    } else {
        for r in &report.suites {
            say!("[{}]", r.suite);
            for ch in &r.checks {
                let detail = ch.detail.as_deref().map(|d| format!("  ({d})")).unwrap_or_default();
                say!("  {} {}{detail}", if ch.pass { "PASS" } else { "FAIL" }, ch.name);
            }
        }
        say!("{}", if passed { "all checks passed" } else { "some checks FAILED" });
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_embed(c: &Config) -> Outcome {
    let r = embed_report(FoldingMap::for_type(c.kind)?)?;
    let passed = r.passed();
    if c.json {
        print_json(&r);
    } else {
        say!("{}: group order {}", r.map, r.group_order);
        say!("orbits: pair {}, top {}", r.orbits.pair, r.orbits.top);
        say!("r5 check: {}", r.r5_check);
        for ch in r.relation_checks.iter().chain(&r.checks) {
            say!("  {} {}", if ch.pass { "PASS" } else { "FAIL" }, ch.name);
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
