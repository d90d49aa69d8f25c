//! The defining relations of BrM(H_k) instantiated over all index pairs, and
//! checks that the normal forms satisfy them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admissible::Variant;
use crate::error::Result;
use crate::group::r5_word;
use crate::roots::{CoxeterType, DiagramSpec};

use super::word::rs;
use super::{Engine, Generator, GeneratorWord, NormalForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: &'static str,
    pub lhs: Vec<Generator>,
    pub rhs: Vec<Generator>,
}

impl RelationInstance {
    pub fn label(&self) -> String {
        let show = |w: &[Generator]| {
            if w.is_empty() {
                "1".to_string()
            } else {
                GeneratorWord(w.to_vec()).to_string()
            }
        };
        format!("{} = {}", show(&self.lhs), show(&self.rhs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub name: String,
    /// Part of the presentation, as opposed to a derived identity.
    pub defining: bool,
    pub applicable: bool,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    #[serde(rename = "type")]
    pub kind: String,
    pub variant: Variant,
    pub families: Vec<FamilyReport>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyReport::passed)
    }
}

/// Relation families in presentation order, then the derived identities.
pub const FAMILIES: [(&str, bool); 19] = [
    ("δ δ⁻¹ = 1", true),
    ("δ x = x δ", true),
    ("r_i² = 1", true),
    ("r_i e_i = e_i r_i = e_i", true),
    ("e_i² = δ² e_i", true),
    ("r_i r_j = r_j r_i (i ≁ j)", true),
    ("e_i r_j = r_j e_i (i ≁ j)", true),
    ("e_i e_j = e_j e_i (i ≁ j)", true),
    ("r_i r_j r_i = r_j r_i r_j (i ∼ j)", true),
    ("r_j r_i e_j = e_i e_j (i ∼ j)", true),
    ("r_i e_j r_i = r_j e_i r_j (i ∼ j)", true),
    ("r1 r2 r1 r2 r1 = r2 r1 r2 r1 r2", true),
    ("r1 r2 e1 r2 r1 = r2 r1 e2 r1 r2", true),
    ("e1 e2 e1 = e1", true),
    ("e1 r2 e1 = e1", true),
    ("e1 r2 r1 r2 e1 = e1", true),
    ("e1 (r5 r3 r4)⁵ = e1", true),
    ("conjugations e1 ↔ e2 ↔ e3", false),
    ("r5 e1 r5 = e1", false),
];

/// Whether a family applies to the given presentation.
pub fn family_applies(name: &str, kind: CoxeterType, variant: Variant) -> bool {
    name != FAMILIES[16].0 || (kind == CoxeterType::H4 && variant == Variant::Standard)
}

/// The word (r5 r3 r4)⁵ with r5 = r2r1r2r1r3r2r1r2r3r1r2r1r2.
pub fn central_word() -> Vec<Generator> {
    let mut one: Vec<usize> = r5_word().iter().map(|&i| i + 1).collect();
    one.extend([3, 4]);
    rs(&one).repeat(5)
}

/// Every instance of every family for the given presentation. Families that
/// do not apply contribute no instances.
pub fn relation_instances(kind: CoxeterType, variant: Variant) -> Vec<RelationInstance> {
    use Generator::{Delta as D, DeltaInv as Dinv};
    let spec = DiagramSpec::of(kind);
    let k = kind.rank();
    let r = |i: usize| Generator::R(i as u8);
    let e = |i: usize| Generator::E(i as u8);
    let mut out = Vec::new();
    let mut add = |n: usize, lhs: Vec<Generator>, rhs: Vec<Generator>| {
        out.push(RelationInstance { family: FAMILIES[n].0, lhs, rhs });
    };

    add(0, vec![D, Dinv], vec![]);
    add(0, vec![Dinv, D], vec![]);
    for i in 0..k {
        for x in [r(i), e(i)] {
            add(1, vec![D, x], vec![x, D]);
        }
        add(2, vec![r(i), r(i)], vec![]);
        add(3, vec![r(i), e(i)], vec![e(i)]);
        add(3, vec![e(i), r(i)], vec![e(i)]);
        add(4, vec![e(i), e(i)], vec![D, D, e(i)]);
    }
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            if spec.unbonded(i, j) {
                add(5, vec![r(i), r(j)], vec![r(j), r(i)]);
                add(6, vec![e(i), r(j)], vec![r(j), e(i)]);
                add(7, vec![e(i), e(j)], vec![e(j), e(i)]);
            }
            if spec.simple_bond(i, j) {
                add(8, vec![r(i), r(j), r(i)], vec![r(j), r(i), r(j)]);
                add(9, vec![r(j), r(i), e(j)], vec![e(i), e(j)]);
                add(10, vec![r(i), e(j), r(i)], vec![r(j), e(i), r(j)]);
            }
        }
    }
    let (r1, r2, e1, e2) = (r(0), r(1), e(0), e(1));
    add(11, vec![r1, r2, r1, r2, r1], vec![r2, r1, r2, r1, r2]);
    add(12, vec![r1, r2, e1, r2, r1], vec![r2, r1, e2, r1, r2]);
    add(13, vec![e1, e2, e1], vec![e1]);
    add(14, vec![e1, r2, e1], vec![e1]);
    add(15, vec![e1, r2, r1, r2, e1], vec![e1]);
    if family_applies(FAMILIES[16].0, kind, variant) {
        let mut lhs = vec![e1];
        lhs.extend(central_word());
        add(16, lhs, vec![e1]);
    }

    let wrap = |pre: &[usize], mid: Generator| {
        let mut w = rs(pre);
        w.push(mid);
        w.extend(rs(&pre.iter().rev().copied().collect::<Vec<_>>()));
        w
    };
    add(17, wrap(&[2, 1, 2, 1], e2), vec![e1]);
    add(17, wrap(&[1, 2, 1, 2], e1), vec![e2]);
    add(17, wrap(&[2, 3], e2), vec![e(2)]);
    add(17, wrap(&[3, 2], e(2)), vec![e2]);
    let r5: Vec<usize> = r5_word().iter().map(|&i| i + 1).collect();
    let mut lhs = rs(&r5);
    lhs.push(e1);
    lhs.extend(rs(&r5));
    add(18, lhs, vec![e1]);
    out
}

impl Engine {
    /// Fold `word` onto `x` from the right.
    pub fn apply_word(&self, word: &[Generator], x: &NormalForm) -> Result<NormalForm> {
        word.iter().rev().try_fold(*x, |acc, &g| self.lmul(g, &acc))
    }

    fn family_reports(&self, check: impl Fn(&RelationInstance) -> Result<bool> + Sync) -> Result<RelationReport> {
        let instances = relation_instances(self.kind(), self.variant());
        let verdicts = instances.par_iter().map(&check).collect::<Result<Vec<bool>>>()?;
        let families = FAMILIES
            .iter()
            .map(|&(name, defining)| {
                let mut n = 0;
                let mut failures = Vec::new();
                for (inst, &ok) in instances.iter().zip(&verdicts) {
                    if inst.family == name {
                        n += 1;
                        if !ok {
                            failures.push(inst.label());
                        }
                    }
                }
                FamilyReport {
                    name: name.to_string(),
                    defining,
                    applicable: family_applies(name, self.kind(), self.variant()),
                    instances: n,
                    failures,
                }
            })
            .collect();
        Ok(RelationReport { kind: self.kind().to_string(), variant: self.variant(), families })
    }

    /// Both sides of every relation instance have the same normal form.
    pub fn verify_relations(&self) -> Result<RelationReport> {
        self.family_reports(|inst| Ok(self.normal_form(&inst.lhs)? == self.normal_form(&inst.rhs)?))
    }

    /// Both sides act identically by left multiplication on `forms`. With
    /// every form this shows the relations hold in the left regular action.
    pub fn verify_relations_on(&self, forms: &[NormalForm]) -> Result<RelationReport> {
        self.family_reports(|inst| {
            for x in forms {
                if self.apply_word(&inst.lhs, x)? != self.apply_word(&inst.rhs, x)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
    }

    /// Both sides agree after random short words are attached on each side.
    pub fn verify_relations_in_context(&self, samples: usize, seed: u64) -> Result<RelationReport> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let contexts: Vec<(Vec<Generator>, Vec<Generator>)> =
            (0..samples).map(|_| (self.random_word(&mut rng, 6), self.random_word(&mut rng, 6))).collect();
        self.family_reports(|inst| {
            for (p, q) in &contexts {
                let wrap = |mid: &[Generator]| [p.as_slice(), mid, q.as_slice()].concat();
                if self.normal_form(&wrap(&inst.lhs))? != self.normal_form(&wrap(&inst.rhs))? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
    }

    /// A uniformly random word of length at most `max_len` in r_i, e_i.
    pub fn random_word(&self, rng: &mut impl Rng, max_len: usize) -> Vec<Generator> {
        let k = self.rank() as u8;
        let len = rng.gen_range(0..=max_len);
        (0..len)
            .map(|_| {
                let i = rng.gen_range(0..k);
                if rng.gen_bool(0.5) {
                    Generator::R(i)
                } else {
                    Generator::E(i)
                }
            })
            .collect()
    }
}
