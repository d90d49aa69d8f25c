//! Verification suites shared by the command line and the acceptance tests.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admissible::OrthoSet;
use crate::embed::{embed_report, FoldingMap};
use crate::engine::{left_roots, relation_instances, Engine, Generator, NormalForm, RelationReport};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::roots::CoxeterType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Census,
    Embed,
    Action,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Relations, Suite::Census, Suite::Embed, Suite::Action, Suite::Properties];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Census => "census",
            Suite::Embed => "embed",
            Suite::Action => "action",
            Suite::Properties => "properties",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse { offset: 0, message: format!("unknown suite {s:?}") })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    /// Random triples for associativity.
    pub triples: usize,
    /// Random pairs for the anti-automorphism and concatenation checks.
    pub pairs: usize,
    /// Random contexts wrapped around each relation instance.
    pub contexts: usize,
    /// Forms the left regular action is checked on, when not exhaustive.
    pub regular_sample: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0x5eed, triples: 10_000, pairs: 1_000, contexts: 200, regular_sample: 500 }
    }
}

/// A random form with δ exponent in -2..=2.
pub fn random_form(engine: &Engine, rng: &mut impl Rng) -> NormalForm {
    let cell = engine.cell_at(rng.gen_range(0..engine.total_forms())).expect("index in range");
    NormalForm { delta: rng.gen_range(-2..=2), cell }
}

/// One check per defining family, named `relation: ...`, then the derived
/// identities, named `identity: ...`. Families that do not apply to the
/// chosen type are listed as passing with no instances.
fn family_checks(report: &RelationReport) -> Vec<Check> {
    report
        .families
        .iter()
        .map(|f| {
            let prefix = if f.defining { "relation: " } else { "identity: " };
            let detail = match f.failures.first() {
                _ if !f.applicable => "not applicable".to_string(),
                Some(first) => format!("{} instances, {} failing, first: {first}", f.instances, f.failures.len()),
                None => format!("{} instances", f.instances),
            };
            Check::with_detail(format!("{prefix}{}", f.name), f.passed(), detail)
        })
        .collect()
}

fn summary(name: &str, report: &RelationReport) -> Check {
    let failing = report.families.iter().filter(|f| !f.passed()).count();
    Check::with_detail(name, report.passed(), format!("{failing} failing families"))
}

pub fn relations(engine: &Engine, opts: &Options) -> Result<SuiteReport> {
    let mut checks = family_checks(&engine.verify_relations()?);
    let exhaustive = engine.kind() == CoxeterType::H3;
    let forms: Vec<NormalForm> = if exhaustive {
        engine.all_forms().collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        (0..opts.regular_sample).map(|_| random_form(engine, &mut rng)).collect()
    };
    let label =
        if exhaustive { "relations hold in the left regular action" } else { "relations hold on sampled forms" };
    checks.push(summary(label, &engine.verify_relations_on(&forms)?));
    checks.push(summary(
        "relations hold inside random words",
        &engine.verify_relations_in_context(opts.contexts, opts.seed)?,
    ));
    Ok(SuiteReport { suite: Suite::Relations, checks })
}

pub fn census(engine: &Engine) -> Result<SuiteReport> {
    let r = engine.census()?;
    let expected = r.expected.map_or("none".to_string(), |e| e.total.to_string());
    let checks = vec![
        Check::with_detail(
            "form counts",
            r.expected == Some(r.counts),
            format!("{} (expected {expected})", r.counts.total),
        ),
        Check::with_detail("closed under left multiplication", r.closed, format!("{} rewrites", r.rewrites)),
        Check::with_detail("every form reachable from 1", r.reachable == r.counts.total, r.reachable.to_string()),
    ];
    Ok(SuiteReport { suite: Suite::Census, checks })
}

pub fn embed(kind: CoxeterType) -> Result<SuiteReport> {
    let r = embed_report(FoldingMap::for_type(kind)?)?;
    let (order, pair, top) = match r.map.as_str() {
        "phi1" => (120, 15, 5),
        _ => (14400, 60, 75),
    };
    let mut checks = vec![Check::with_detail(
        format!("{} generates a group of order {order}", r.map),
        r.group_order == order,
        r.group_order.to_string(),
    )];
    checks.extend(r.relation_checks.iter().cloned());
    checks.push(Check::new("phi(r5) is the product of the two mate reflections", r.r5_check));
    checks.push(Check::with_detail(
        format!("orbit of the pair has {pair} sets"),
        r.orbits.pair == pair,
        r.orbits.pair.to_string(),
    ));
    checks.push(Check::with_detail(
        format!("orbit of the top set has {top} sets"),
        r.orbits.top == top,
        r.orbits.top.to_string(),
    ));
    checks.extend(r.checks.iter().cloned());
    Ok(SuiteReport { suite: Suite::Embed, checks })
}

pub fn action(engine: &Engine, opts: &Options) -> Result<SuiteReport> {
    let adm = engine.cells().admissible().all();
    let instances = relation_instances(engine.kind(), engine.variant());
    let mut bad = Vec::new();
    for inst in &instances {
        for b in &adm {
            if engine.act_word(&inst.lhs, b)? != engine.act_word(&inst.rhs, b)? {
                bad.push(inst.label());
                break;
            }
        }
    }
    let mut checks = vec![Check::with_detail(
        "relations act identically on admissible sets",
        bad.is_empty(),
        format!("{} sets, {} instances, {} failing", adm.len(), instances.len(), bad.len()),
    )];

    let exhaustive = engine.kind() == CoxeterType::H3;
    let forms: Vec<NormalForm> = if exhaustive {
        engine.all_forms().collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 1);
        (0..opts.pairs).map(|_| random_form(engine, &mut rng)).collect()
    };
    let k = engine.rank() as u8;
    let gens: Vec<Generator> = (0..k).map(Generator::R).chain((0..k).map(Generator::E)).collect();
    let failures: usize = forms
        .par_iter()
        .map(|x| -> Result<usize> {
            let b: OrthoSet = left_roots(engine, &x.cell);
            let mut n = 0;
            for &g in &gens {
                let y = engine.lmul(g, x)?;
                n += usize::from(engine.action(g, &b)? != left_roots(engine, &y.cell));
            }
            Ok(n)
        })
        .sum::<Result<usize>>()?;
    checks.push(Check::with_detail(
        "action tracks left root sets of products",
        failures == 0,
        format!("{} forms, {failures} failing", forms.len()),
    ));
    Ok(SuiteReport { suite: Suite::Action, checks })
}

pub fn properties(engine: &Engine, opts: &Options) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let triples: Vec<[NormalForm; 3]> = (0..opts.triples)
        .map(|_| [random_form(engine, &mut rng), random_form(engine, &mut rng), random_form(engine, &mut rng)])
        .collect();
    let pairs: Vec<[NormalForm; 2]> =
        (0..opts.pairs).map(|_| [random_form(engine, &mut rng), random_form(engine, &mut rng)]).collect();

    let assoc = triples
        .par_iter()
        .map(|[a, b, c]| -> Result<usize> {
            let l = engine.multiply(&engine.multiply(a, b)?, c)?;
            let r = engine.multiply(a, &engine.multiply(b, c)?)?;
            Ok(usize::from(l != r))
        })
        .sum::<Result<usize>>()?;
    let anti = pairs
        .par_iter()
        .map(|[a, b]| -> Result<usize> {
            let l = engine.op(&engine.multiply(a, b)?)?;
            let r = engine.multiply(&engine.op(b)?, &engine.op(a)?)?;
            Ok(usize::from(l != r))
        })
        .sum::<Result<usize>>()?;
    let concat = pairs
        .par_iter()
        .map(|[a, b]| -> Result<usize> {
            let w = engine.canonical_word(a).concat(&engine.canonical_word(b));
            Ok(usize::from(engine.normal_form(&w.0)? != engine.multiply(a, b)?))
        })
        .sum::<Result<usize>>()?;
    let forms: Vec<NormalForm> = engine.all_forms().collect();
    let involution = forms
        .par_iter()
        .map(|x| -> Result<usize> { Ok(usize::from(&engine.op(&engine.op(x)?)? != x)) })
        .sum::<Result<usize>>()?;

    let checks = vec![
        Check::with_detail(
            "multiplication is associative",
            assoc == 0,
            format!("{} triples, {assoc} failing", triples.len()),
        ),
        Check::with_detail("op reverses products", anti == 0, format!("{} pairs, {anti} failing", pairs.len())),
        Check::with_detail(
            "products agree with word concatenation",
            concat == 0,
            format!("{} pairs, {concat} failing", pairs.len()),
        ),
        Check::with_detail(
            "op is an involution",
            involution == 0,
            format!("{} forms, {involution} failing", forms.len()),
        ),
    ];
    Ok(SuiteReport { suite: Suite::Properties, checks })
}

/// Runs one suite. Every suite but `embed` needs an engine.
pub fn run(suite: Suite, kind: CoxeterType, engine: Option<&Engine>, opts: &Options) -> Result<SuiteReport> {
    let need =
        || engine.ok_or_else(|| Error::UnsupportedDiagram(format!("suite {suite} needs type H3 or H4, got {kind}")));
    match suite {
        Suite::Relations => relations(need()?, opts),
        Suite::Census => census(need()?),
        Suite::Embed => embed(kind),
        Suite::Action => action(need()?, opts),
        Suite::Properties => properties(need()?, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::Variant;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn h3_suites_pass() {
        let e = Engine::new(CoxeterType::H3, Variant::Standard).unwrap();
        let opts = Options { triples: 500, pairs: 200, ..Options::default() };
        for s in Suite::ALL {
            let r = run(s, CoxeterType::H3, Some(&e), &opts).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(!r.checks.is_empty());
            if s == Suite::Relations {
                assert_eq!(r.checks.iter().filter(|c| c.name.starts_with("relation: ")).count(), 17);
            }
        }
    }

    #[test]
    fn embed_suite_runs_without_engine() {
        let r = run(Suite::Embed, CoxeterType::D6, None, &Options::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(run(Suite::Census, CoxeterType::D6, None, &Options::default()).is_err());
    }
}
