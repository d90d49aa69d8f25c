//! H3 inside D6 and H4 inside E8: folded generators, the action on
//! simply-laced admissible sets, and the orbit and reflection checks.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::admissible::{CellData, OrthoSet, Variant};
use crate::engine::{action_h, Generator};
use crate::error::{Error, Result};
use crate::group::{r5_word, GroupElement, GroupTable};
use crate::hsystem::HCoxeter;
use crate::report::Check;
use crate::roots::{CoxeterType, DiagramSpec, Root, RootSystem};
use crate::SimplyLacedRootSystem;

/// A D6 or E8 root system with the simply-laced admissible-set machinery.
#[derive(Clone, Debug)]
pub struct SimplyLaced {
    kind: CoxeterType,
    system: SimplyLacedRootSystem,
    reflections: Vec<GroupElement>,
    /// Coefficient parities of each root as a bit mask.
    parity: Vec<u16>,
}

/// Image of a set under a signed permutation, folded to positive roots.
pub fn apply_perm(g: &GroupElement, b: &OrthoSet) -> OrthoSet {
    OrthoSet::from_indices(b.iter().map(|i| g.apply_index(i).index()))
}

impl SimplyLaced {
    pub fn new(kind: CoxeterType) -> Result<Self> {
        if kind.is_golden() {
            return Err(Error::UnsupportedDiagram(format!("{kind} is not simply laced")));
        }
        let system = RootSystem::build(DiagramSpec::of(kind))?;
        let reflections =
            (0..system.len()).map(|r| GroupElement::reflection(&system, r)).collect::<Result<Vec<_>>>()?;
        let parity = system
            .roots()
            .iter()
            .map(|r| r.coeffs().iter().enumerate().fold(0u16, |m, (i, c)| m | (((c & 1) as u16) << i)))
            .collect();
        Ok(SimplyLaced { kind, system, reflections, parity })
    }

    pub fn kind(&self) -> CoxeterType {
        self.kind
    }

    pub fn system(&self) -> &SimplyLacedRootSystem {
        &self.system
    }

    /// Root index of α_n, 1-based.
    pub fn alpha(&self, n: usize) -> usize {
        n - 1
    }

    pub fn set(&self, nodes: &[usize]) -> Result<OrthoSet> {
        OrthoSet::new(&self.system, nodes.iter().map(|&n| self.alpha(n)))
    }

    /// Index of the root with the given simple-root coefficients.
    pub fn root_index(&self, coeffs: &[i64]) -> Result<usize> {
        self.system.index_of(&Root::new(coeffs.to_vec())).ok_or(Error::NotARoot)
    }

    /// Least superset of `b` closed under the D4 rule: if α, β, γ ∈ B are
    /// distinct and a positive root δ ⊥ B satisfies (α+β+γ+δ)/2 ∈ Φ, add δ.
    pub fn sl_closure(&self, b: &OrthoSet) -> Result<OrthoSet> {
        let s = &self.system;
        let members: Vec<usize> = b.iter().collect();
        for (k, &x) in members.iter().enumerate() {
            if members[k + 1..].iter().any(|&y| !s.orthogonal(x, y)) {
                return Err(Error::NotOrthogonal);
            }
        }
        let mut cur = b.clone();
        loop {
            let m: Vec<usize> = cur.iter().collect();
            let candidates: Vec<usize> =
                (0..s.len()).filter(|&d| !cur.contains(d) && m.iter().all(|&x| s.orthogonal(x, d))).collect();
            let mut added = None;
            'search: for &d in &candidates {
                for i in 0..m.len() {
                    for j in i + 1..m.len() {
                        for k in j + 1..m.len() {
                            if self.half_sum_is_root(&[m[i], m[j], m[k], d]) {
                                added = Some(d);
                                break 'search;
                            }
                        }
                    }
                }
            }
            match added {
                Some(d) => cur = cur.with(d),
                None => return Ok(cur),
            }
        }
    }

    /// For mutually orthogonal roots the half-sum has norm 2, and every
    /// norm-2 vector of the D6 or E8 root lattice is a root, so only
    /// integrality matters: the coefficient parities must cancel.
    fn half_sum_is_root(&self, roots: &[usize]) -> bool {
        roots.iter().fold(0u16, |acc, &r| acc ^ self.parity[r]) == 0
    }

    /// The positive root β ⊥ α with α ± β = ±2ε_k in the ε-coordinates of D6.
    pub fn orthogonal_mate(&self, alpha: usize) -> Result<usize> {
        if self.kind != CoxeterType::D6 {
            return Err(Error::UnsupportedDiagram("orthogonal mates are defined on D6".into()));
        }
        let eps = |r: usize| d6_epsilon(self.system.root(r).coeffs());
        let a = eps(alpha);
        let twice_unit = |v: &[i64]| {
            let nz: Vec<i64> = v.iter().copied().filter(|&c| c != 0).collect();
            nz.len() == 1 && nz[0].abs() == 2
        };
        let mut hits = (0..self.system.len()).filter(|&b| {
            if !self.system.orthogonal(alpha, b) {
                return false;
            }
            let e = eps(b);
            let plus: Vec<i64> = a.iter().zip(&e).map(|(x, y)| x + y).collect();
            let minus: Vec<i64> = a.iter().zip(&e).map(|(x, y)| x - y).collect();
            twice_unit(&plus) || twice_unit(&minus)
        });
        match (hits.next(), hits.next()) {
            (Some(b), None) => Ok(b),
            _ => Err(Error::NoMate(alpha)),
        }
    }

    pub fn reflection(&self, root: usize) -> Result<GroupElement> {
        self.reflections.get(root).cloned().ok_or(Error::NotARoot)
    }

    /// R_i or E_i (0-based) acting on an admissible set; δ acts trivially.
    ///
    /// E_i fixes B when α_i ∈ B, adds α_i and closes when α_i ⊥ B, and
    /// otherwise applies R_β R_i for the first β ∈ B not orthogonal to α_i.
    pub fn action_sl(&self, gen: Generator, b: &OrthoSet) -> Result<OrthoSet> {
        let s = &self.system;
        match gen {
            Generator::Delta | Generator::DeltaInv => Ok(b.clone()),
            Generator::R(i) => Ok(apply_perm(&self.reflections[i as usize], b)),
            Generator::E(i) => {
                let i = i as usize;
                if b.contains(i) {
                    return Ok(b.clone());
                }
                match b.iter().find(|&beta| !s.orthogonal(beta, i)) {
                    None => self.sl_closure(&b.with(i)),
                    Some(beta) => {
                        let (rb, ri) = (&self.reflections[beta], &self.reflections[i]);
                        Ok(OrthoSet::from_indices(b.iter().map(|x| rb.apply(ri.apply_index(x)).index())))
                    }
                }
            }
        }
    }

    /// Admissible sets reachable from ∅ under every R_i and E_i.
    pub fn reachable_sets(&self) -> Result<BTreeSet<OrthoSet>> {
        let k = self.system.rank() as u8;
        let gens: Vec<Generator> = (0..k).map(Generator::R).chain((0..k).map(Generator::E)).collect();
        let mut seen = BTreeSet::from([OrthoSet::empty()]);
        let mut frontier = vec![OrthoSet::empty()];
        while let Some(b) = frontier.pop() {
            for &g in &gens {
                let c = self.action_sl(g, &b)?;
                if seen.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        Ok(seen)
    }

    /// Defining relations of the simply-laced Brauer monoid that survive δ
    /// acting trivially, instantiated over all index pairs.
    pub fn relation_words(&self) -> Vec<(Vec<Generator>, Vec<Generator>)> {
        let spec = self.system.spec();
        let n = spec.rank();
        let r = |i: usize| Generator::R(i as u8);
        let e = |i: usize| Generator::E(i as u8);
        let mut out = Vec::new();
        for i in 0..n {
            out.push((vec![r(i), r(i)], vec![]));
            out.push((vec![r(i), e(i)], vec![e(i)]));
            out.push((vec![e(i), r(i)], vec![e(i)]));
            out.push((vec![e(i), e(i)], vec![e(i)]));
            for j in 0..n {
                if i == j {
                    continue;
                }
                if spec.unbonded(i, j) {
                    out.push((vec![r(i), r(j)], vec![r(j), r(i)]));
                    out.push((vec![e(i), r(j)], vec![r(j), e(i)]));
                    out.push((vec![e(i), e(j)], vec![e(j), e(i)]));
                } else {
                    out.push((vec![r(i), r(j), r(i)], vec![r(j), r(i), r(j)]));
                    out.push((vec![r(j), r(i), e(j)], vec![e(i), e(j)]));
                    out.push((vec![r(i), e(j), r(i)], vec![r(j), e(i), r(j)]));
                    out.push((vec![e(i), e(j), e(i)], vec![e(i)]));
                }
            }
        }
        out
    }

    /// Relations failing on some reachable set, as `lhs = rhs on B`.
    pub fn relation_failures(&self) -> Result<(usize, Vec<String>)> {
        let sets = self.reachable_sets()?;
        let mut failures = Vec::new();
        for (lhs, rhs) in self.relation_words() {
            for b in &sets {
                if self.act_word(&lhs, b)? != self.act_word(&rhs, b)? {
                    failures.push(format!(
                        "{} = {} on {b:?}",
                        crate::engine::GeneratorWord(lhs.clone()),
                        crate::engine::GeneratorWord(rhs.clone())
                    ));
                    break;
                }
            }
        }
        Ok((sets.len(), failures))
    }

    /// Right-to-left action of a word.
    pub fn act_word(&self, word: &[Generator], b: &OrthoSet) -> Result<OrthoSet> {
        word.iter().rev().try_fold(b.clone(), |acc, &g| self.action_sl(g, &acc))
    }
}

/// ε-coordinates of a D6 root given in simple-root coordinates, with
/// α6 = ε1−ε2, α5 = ε2−ε3, α4 = ε3−ε4, α3 = ε4−ε5, α1 = ε5−ε6, α2 = ε5+ε6.
pub fn d6_epsilon(coeffs: &[i64]) -> [i64; 6] {
    const SIMPLE: [[i64; 6]; 6] = [
        [0, 0, 0, 0, 1, -1],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 1, -1, 0],
        [0, 0, 1, -1, 0, 0],
        [0, 1, -1, 0, 0, 0],
        [1, -1, 0, 0, 0, 0],
    ];
    let mut out = [0i64; 6];
    for (c, v) in coeffs.iter().zip(SIMPLE.iter()) {
        for k in 0..6 {
            out[k] += c * v[k];
        }
    }
    out
}

/// An admissible partition: each H-node goes to a commuting pair of
/// simply-laced nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldingMap {
    pub name: String,
    pub source: CoxeterType,
    pub target: CoxeterType,
    /// 1-based node pairs, one per H-node.
    pub pairs: Vec<(usize, usize)>,
}

impl FoldingMap {
    pub fn phi1() -> Self {
        FoldingMap {
            name: "phi1".into(),
            source: CoxeterType::H3,
            target: CoxeterType::D6,
            pairs: vec![(2, 4), (3, 5), (1, 6)],
        }
    }

    pub fn phi2() -> Self {
        FoldingMap {
            name: "phi2".into(),
            source: CoxeterType::H4,
            target: CoxeterType::E8,
            pairs: vec![(2, 5), (4, 6), (3, 7), (1, 8)],
        }
    }

    pub fn for_type(kind: CoxeterType) -> Result<Self> {
        match kind {
            CoxeterType::H3 | CoxeterType::D6 => Ok(FoldingMap::phi1()),
            CoxeterType::H4 | CoxeterType::E8 => Ok(FoldingMap::phi2()),
        }
    }

    /// Pairs are disjoint, cover every node, and each pair is unbonded.
    pub fn is_partition(&self) -> bool {
        let spec = DiagramSpec::of(self.target);
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.pairs {
            if !seen.insert(a) || !seen.insert(b) || !spec.unbonded(a - 1, b - 1) {
                return false;
            }
        }
        seen.len() == spec.rank() && seen.iter().all(|&n| (1..=spec.rank()).contains(&n))
    }

    /// Image of one H-generator as a word in simply-laced generators.
    pub fn image(&self, gen: Generator) -> Vec<Generator> {
        match gen {
            Generator::R(i) => {
                let (a, b) = self.pairs[i as usize];
                vec![Generator::R((a - 1) as u8), Generator::R((b - 1) as u8)]
            }
            Generator::E(i) => {
                let (a, b) = self.pairs[i as usize];
                vec![Generator::E((a - 1) as u8), Generator::E((b - 1) as u8)]
            }
            other => vec![other],
        }
    }

    pub fn image_word(&self, word: &[Generator]) -> Vec<Generator> {
        word.iter().flat_map(|&g| self.image(g)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbits {
    pub pair: usize,
    pub top: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedReport {
    pub map: String,
    pub group_order: usize,
    pub relation_checks: Vec<Check>,
    pub orbits: Orbits,
    pub r5_check: bool,
    /// Root membership, orthogonality, closure and action checks.
    pub checks: Vec<Check>,
}

impl EmbedReport {
    pub fn passed(&self) -> bool {
        let (order, orbits) = match self.map.as_str() {
            "phi1" => (120, Orbits { pair: 15, top: 5 }),
            _ => (14400, Orbits { pair: 60, top: 75 }),
        };
        self.group_order == order
            && self.orbits == orbits
            && self.r5_check
            && self.relation_checks.iter().all(|c| c.pass)
            && self.checks.iter().all(|c| c.pass)
    }
}

/// The folded image of W(H_k) inside W(D6) or W(E8).
#[derive(Clone, Debug)]
pub struct Folding {
    pub map: FoldingMap,
    pub ambient: SimplyLaced,
    pub generators: Vec<GroupElement>,
    pub subgroup: GroupTable,
}

impl Folding {
    pub fn build(map: FoldingMap) -> Result<Self> {
        if !map.is_partition() {
            return Err(Error::Inconsistent(format!("{} is not an admissible partition", map.name)));
        }
        let ambient = SimplyLaced::new(map.target)?;
        let generators = folded_generators(&ambient, &map)?;
        let subgroup = GroupTable::generate(ambient.system().rank(), generators.clone())?;
        Ok(Folding { map, ambient, generators, subgroup })
    }

    /// φ of a word in the H reflections (0-based).
    pub fn element(&self, word: &[usize]) -> GroupElement {
        let degree = self.ambient.system().len();
        word.iter().fold(GroupElement::identity(degree), |acc, &i| acc.compose(&self.generators[i]))
    }

    pub fn orbit(&self, b: &OrthoSet) -> BTreeSet<OrthoSet> {
        self.subgroup.ids().map(|w| apply_perm(self.subgroup.element(w), b)).collect()
    }
}

/// φ(r_i) = R_a R_b for each node pair.
pub fn folded_generators(ambient: &SimplyLaced, map: &FoldingMap) -> Result<Vec<GroupElement>> {
    map.pairs
        .iter()
        .map(|&(a, b)| {
            let ra = GroupElement::simple_reflection(ambient.system(), a - 1)?;
            let rb = GroupElement::simple_reflection(ambient.system(), b - 1)?;
            Ok(ra.compose(&rb))
        })
        .collect()
}

/// Orders of φ(r_i)φ(r_j) against the H Coxeter matrix.
pub fn coxeter_relation_checks(f: &Folding) -> Vec<Check> {
    let spec = DiagramSpec::of(f.map.source);
    let k = spec.rank();
    let mut out = Vec::new();
    for i in 0..k {
        let g = &f.generators[i];
        out.push(Check::new(format!("phi(r{}) is an involution", i + 1), !g.is_identity() && g.order() == 2));
        for j in i + 1..k {
            let m = spec.bond(i, j) as usize;
            let got = g.compose(&f.generators[j]).order();
            out.push(Check::new(format!("order of phi(r{})phi(r{}) is {m}", i + 1, j + 1), got == m));
        }
    }
    out
}

/// Maps H-admissible sets to simply-laced ones: ∅ ↦ ∅, u·{β1} ↦ φ(u)·φ(e1)∅
/// and u·B0 ↦ φ(u)·φ(e1e3)∅, with u the canonical coset representative.
struct SetMap<'a> {
    folding: &'a Folding,
    h: &'a HCoxeter,
    cells: CellData,
    single: OrthoSet,
    top: OrthoSet,
}

impl<'a> SetMap<'a> {
    fn new(folding: &'a Folding, h: &'a HCoxeter) -> Result<Self> {
        let cells = CellData::build(h, Variant::Standard)?;
        let amb = &folding.ambient;
        let single = amb.act_word(&folding.map.image(Generator::E(0)), &OrthoSet::empty())?;
        let top = amb.act_word(&folding.map.image_word(&[Generator::E(0), Generator::E(2)]), &OrthoSet::empty())?;
        Ok(SetMap { folding, h, cells, single, top })
    }

    fn map(&self, b: &OrthoSet) -> Result<OrthoSet> {
        let (u, base) = match b.len() {
            0 => return Ok(OrthoSet::empty()),
            1 => (self.cells.d1_for_root(b.iter().next().unwrap_or(0)), &self.single),
            _ => (self.cells.d2_for_basis(b).ok_or(Error::NotOrthogonal)?, &self.top),
        };
        let word: Vec<usize> = self.h.group().word(u).iter().map(|&i| i as usize).collect();
        Ok(apply_perm(&self.folding.element(&word), base))
    }
}

/// Runs every check for one folding map.
pub fn embed_report(map: FoldingMap) -> Result<EmbedReport> {
    let f = Folding::build(map)?;
    let amb = &f.ambient;
    let s = amb.system();
    let mut checks = Vec::new();
    let mut check = |name: &str, pass: bool| checks.push(Check::new(name, pass));

    let r5: Vec<usize> = r5_word();
    let phi_r5 = f.element(&r5);
    let (pair, top_seed, r5_check, name) = match f.map.target {
        CoxeterType::D6 => {
            let a4s = amb.orthogonal_mate(amb.alpha(4))?;
            let a6s = amb.orthogonal_mate(amb.alpha(6))?;
            check("mate of alpha2 is alpha1", amb.orthogonal_mate(amb.alpha(2))? == amb.alpha(1));
            check("mate is an involution", amb.orthogonal_mate(a4s)? == amb.alpha(4));
            let target = amb.reflection(a4s)?.compose(&amb.reflection(a6s)?);
            let b23 = amb.sl_closure(&amb.set(&[1, 2, 4, 6])?)?;
            let expected = OrthoSet::new(s, [0, 1, 3, 5, a4s, a6s])?;
            check("closure of {a1,a2,a4,a6} is B2", b23 == expected);
            check("{a2,a4,a6} is closed", amb.sl_closure(&amb.set(&[2, 4, 6])?)? == amb.set(&[2, 4, 6])?);
            (amb.set(&[2, 4])?, amb.set(&[1, 2, 4, 6])?, phi_r5 == target, "D6")
        }
        _ => {
            let ap = amb.root_index(&[0, 1, 1, 2, 1, 0, 0, 0])?;
            let app = amb.root_index(&[0, 1, 1, 2, 2, 2, 1, 0])?;
            for (label, r) in [("alpha'", ap), ("alpha''", app)] {
                check(
                    &format!("{label} is orthogonal to alpha2 and alpha5"),
                    s.orthogonal(r, amb.alpha(2)) && s.orthogonal(r, amb.alpha(5)),
                );
            }
            let target = amb.reflection(ap)?.compose(&amb.reflection(app)?);
            let word = [5, 6, 7, 2, 4, 5].map(|n| Generator::E((n - 1) as u8));
            check("E5E6E7E2E4E5{a6,a8} = {a2,a5}", amb.act_word(&word, &amb.set(&[6, 8])?)? == amb.set(&[2, 5])?);
            let top = amb.sl_closure(&amb.set(&[2, 3, 5, 7])?)?;
            check("closure of {a2,a3,a5,a7} has 8 roots", top.len() == 8);
            (amb.set(&[2, 5])?, amb.set(&[2, 3, 5, 7])?, phi_r5 == target, "E8")
        }
    };
    let top = amb.sl_closure(&top_seed)?;

    // φ intertwines the two actions on admissible sets.
    let h = HCoxeter::build(f.map.source)?;
    let sets = SetMap::new(&f, &h)?;
    check(&format!("phi(e1) on the empty set is {{a{},a{}}}", f.map.pairs[0].0, f.map.pairs[0].1), sets.single == pair);
    check("phi(e1 e3) on the empty set is the top set", sets.top == top);
    let adm = crate::admissible::HAdmissible::new(h.system());
    let k = h.rank() as u8;
    let mut intertwines = true;
    for b in adm.all() {
        let image = sets.map(&b)?;
        for gen in (0..k).map(Generator::R).chain((0..k).map(Generator::E)) {
            let left = sets.map(&action_h(h.system(), h.group(), &adm, gen, &b)?)?;
            let right = amb.act_word(&f.map.image(gen), &image)?;
            intertwines &= left == right;
        }
    }
    check(&format!("phi intertwines the actions on admissible sets of {name}"), intertwines);

    Ok(EmbedReport {
        map: f.map.name.clone(),
        group_order: f.subgroup.len(),
        relation_checks: coxeter_relation_checks(&f),
        orbits: Orbits { pair: f.orbit(&pair).len(), top: f.orbit(&top).len() },
        r5_check,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d6() -> SimplyLaced {
        SimplyLaced::new(CoxeterType::D6).unwrap()
    }

    #[test]
    fn epsilon_model_matches_gram() {
        let a = d6();
        let s = a.system();
        for i in 0..s.len() {
            for j in 0..s.len() {
                let x = d6_epsilon(s.root(i).coeffs());
                let y = d6_epsilon(s.root(j).coeffs());
                let dot: i64 = x.iter().zip(&y).map(|(p, q)| p * q).sum();
                assert_eq!(dot, s.inner_idx(i, j));
            }
        }
    }

    #[test]
    fn parity_test_agrees_with_root_lookup() {
        for kind in [CoxeterType::D6, CoxeterType::E8] {
            let a = SimplyLaced::new(kind).unwrap();
            let s = a.system();
            for quad in crate::admissible::orthogonal_subsets(s, 4) {
                let q: Vec<usize> = quad.iter().collect();
                let mut sum = Root::new(vec![0i64; s.rank()]);
                for &r in &q {
                    sum = sum.checked_add(s.root(r)).unwrap();
                }
                let lookup = sum.coeffs().iter().all(|c| c % 2 == 0)
                    && s.locate(&Root::new(sum.coeffs().iter().map(|c| c / 2).collect())).is_ok();
                assert_eq!(a.half_sum_is_root(&q), lookup);
            }
        }
    }

    #[test]
    fn closure_examples() {
        let a = d6();
        assert_eq!(a.sl_closure(&a.set(&[2]).unwrap()).unwrap(), a.set(&[2]).unwrap());
        assert_eq!(a.sl_closure(&OrthoSet::empty()).unwrap(), OrthoSet::empty());
        assert!(a.sl_closure(&OrthoSet::from_indices([0, 2])).is_err());
    }

    #[test]
    fn closure_idempotent_and_monotone() {
        let a = d6();
        let s = a.system();
        let pairs = crate::admissible::orthogonal_subsets(s, 2);
        let triples = crate::admissible::orthogonal_subsets(s, 3);
        for b in pairs.iter().chain(&triples) {
            let c = a.sl_closure(b).unwrap();
            assert!(b.is_subset(&c));
            assert_eq!(a.sl_closure(&c).unwrap(), c);
        }
        for t in &triples {
            for p in pairs.iter().filter(|p| p.is_subset(t)) {
                assert!(a.sl_closure(p).unwrap().is_subset(&a.sl_closure(t).unwrap()));
            }
        }
    }

    #[test]
    fn closure_equivariant_under_folded_group() {
        let f = Folding::build(FoldingMap::phi1()).unwrap();
        let a = &f.ambient;
        let seeds = [a.set(&[1, 2, 4, 6]).unwrap(), a.set(&[2, 4]).unwrap(), a.set(&[1, 6]).unwrap()];
        for w in f.subgroup.ids() {
            let g = f.subgroup.element(w);
            for b in &seeds {
                assert_eq!(a.sl_closure(&apply_perm(g, b)).unwrap(), apply_perm(g, &a.sl_closure(b).unwrap()));
            }
        }
    }

    #[test]
    fn mates() {
        let a = d6();
        for r in 0..a.system().len() {
            let m = a.orthogonal_mate(r).unwrap();
            assert!(a.system().orthogonal(r, m));
            assert_eq!(a.orthogonal_mate(m).unwrap(), r);
        }
        let e8 = SimplyLaced::new(CoxeterType::E8).unwrap();
        assert!(e8.orthogonal_mate(0).is_err());
    }

    #[test]
    fn action_examples() {
        let a = d6();
        let e2 = Generator::E(1);
        assert_eq!(a.action_sl(e2, &OrthoSet::empty()).unwrap(), a.set(&[2]).unwrap());
        assert_eq!(a.action_sl(e2, &a.set(&[2]).unwrap()).unwrap(), a.set(&[2]).unwrap());
    }

    #[test]
    fn simply_laced_relations_on_reachable_sets() {
        for kind in [CoxeterType::D6, CoxeterType::E8] {
            let a = SimplyLaced::new(kind).unwrap();
            let (n, failures) = a.relation_failures().unwrap();
            eprintln!("{kind}: {n} reachable sets");
            assert!(failures.is_empty(), "{kind}: {failures:?}");
        }
    }

    #[test]
    fn partitions() {
        assert!(FoldingMap::phi1().is_partition());
        assert!(FoldingMap::phi2().is_partition());
        let bad = FoldingMap { pairs: vec![(2, 3), (4, 5), (1, 6)], ..FoldingMap::phi1() };
        assert!(!bad.is_partition());
        assert!(Folding::build(bad).is_err());
    }

    #[test]
    fn phi1_report() {
        let r = embed_report(FoldingMap::phi1()).unwrap();
        assert_eq!(r.group_order, 120);
        assert_eq!(r.orbits, Orbits { pair: 15, top: 5 });
        assert!(r.r5_check);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn phi2_report() {
        let r = embed_report(FoldingMap::phi2()).unwrap();
        assert_eq!(r.group_order, 14400);
        assert_eq!(r.orbits, Orbits { pair: 60, top: 75 });
        assert!(r.r5_check);
        assert!(r.passed(), "{r:?}");
    }
}
