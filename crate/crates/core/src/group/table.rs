use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::roots::{RootSystem, SignedRoot};
use crate::scalar::Coefficient;

use super::GroupElement;

/// Largest group the enumerator will build. W(E8) (696729600) is far beyond
/// it; W(D6) (23040) and W(H4) (14400) fit.
pub const ENUMERATION_GUARD: usize = 50_000;

/// Index of an element in a [`GroupTable`]. Index 0 is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub u32);

impl ElemId {
    pub const IDENTITY: ElemId = ElemId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite group given by generators, fully enumerated.
///
/// Elements are numbered in BFS order under right multiplication by the
/// generators, so index order is (length, lexicographic canonical word)
/// order, and the canonical word of each element is the first one reached.
#[derive(Clone, Debug)]
pub struct GroupTable {
    rank: usize,
    gens: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    words: Vec<Vec<u8>>,
    index: HashMap<u128, u32>,
    right: Vec<u32>,
    inverse: Vec<u32>,
}

impl GroupTable {
    /// The Coxeter group of a root system on its simple reflections.
    pub fn coxeter<S: Coefficient>(system: &RootSystem<S>) -> Result<Self> {
        let gens =
            (0..system.rank()).map(|i| GroupElement::simple_reflection(system, i)).collect::<Result<Vec<_>>>()?;
        GroupTable::generate(system.rank(), gens)
    }

    /// BFS closure of `gens`. `rank` is the number of simple roots of the
    /// ambient system, used for element keys.
    pub fn generate(rank: usize, gens: Vec<GroupElement>) -> Result<Self> {
        GroupTable::generate_with_guard(rank, gens, ENUMERATION_GUARD)
    }

    pub fn generate_with_guard(rank: usize, gens: Vec<GroupElement>, guard: usize) -> Result<Self> {
        let degree = gens.first().map_or(0, |g| g.degree());
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::Inconsistent("generators of different degree".into()));
        }
        if gens.len() > u8::MAX as usize {
            return Err(Error::Inconsistent("too many generators".into()));
        }
        let identity = GroupElement::identity(degree);
        let mut index = HashMap::new();
        index.insert(identity.key(rank), 0u32);
        let mut elements = vec![identity];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (g, gen) in gens.iter().enumerate() {
                let next = elements[i].compose(gen);
                let key = next.key(rank);
                if index.contains_key(&key) {
                    continue;
                }
                if elements.len() >= guard {
                    return Err(Error::GuardExceeded(guard));
                }
                let mut word = words[i].clone();
                word.push(g as u8);
                index.insert(key, elements.len() as u32);
                elements.push(next);
                words.push(word);
                queue.push_back(elements.len() - 1);
            }
        }
        GroupTable::from_parts(rank, gens, elements, words, index)
    }

    pub(crate) fn from_parts(
        rank: usize,
        gens: Vec<GroupElement>,
        elements: Vec<GroupElement>,
        words: Vec<Vec<u8>>,
        index: HashMap<u128, u32>,
    ) -> Result<Self> {
        let mut table = GroupTable { rank, gens, elements, words, index, right: Vec::new(), inverse: Vec::new() };
        let n = table.len();
        let mut right = Vec::with_capacity(n * table.gens.len());
        for i in 0..n {
            for gen in &table.gens {
                let prod = table.elements[i].compose(gen);
                let id = table.id_of(&prod).ok_or_else(|| Error::Inconsistent("table not closed".into()))?;
                right.push(id.0);
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for e in &table.elements {
            let inv = e.inverse();
            inverse.push(table.id_of(&inv).ok_or_else(|| Error::Inconsistent("inverse missing".into()))?.0);
        }
        table.right = right;
        table.inverse = inverse;
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        (0..self.len() as u32).map(ElemId)
    }

    pub fn element(&self, id: ElemId) -> &GroupElement {
        &self.elements[id.index()]
    }

    /// Canonical reduced word, as generator indices.
    pub fn word(&self, id: ElemId) -> &[u8] {
        &self.words[id.index()]
    }

    pub fn length(&self, id: ElemId) -> usize {
        self.elements[id.index()].length()
    }

    pub fn id_of(&self, e: &GroupElement) -> Option<ElemId> {
        self.index.get(&e.key(self.rank)).map(|&i| ElemId(i))
    }

    pub fn generator(&self, g: usize) -> ElemId {
        ElemId(self.right[g])
    }

    /// `a · gen[g]`.
    pub fn mul_gen(&self, a: ElemId, g: usize) -> ElemId {
        ElemId(self.right[a.index() * self.gens.len() + g])
    }

    /// `gen[g] · a`.
    pub fn gen_mul(&self, g: usize, a: ElemId) -> ElemId {
        self.inv(self.mul_gen(self.inv(a), g))
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        ElemId(self.inverse[a.index()])
    }

    /// `a · b`: only the simple-root images of `b` are pushed through `a`.
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let ea = &self.elements[a.index()];
        let eb = &self.elements[b.index()];
        let mut key = 0u128;
        for i in 0..self.rank {
            let s = ea.apply(eb.perm()[i]);
            key |= (s.raw() as u128) << (16 * i);
        }
        ElemId(*self.index.get(&key).expect("group table is closed under products"))
    }

    pub fn apply(&self, a: ElemId, s: SignedRoot) -> SignedRoot {
        self.elements[a.index()].apply(s)
    }

    /// Element of a word in generator indices.
    pub fn from_word(&self, word: &[u8]) -> ElemId {
        word.iter().fold(ElemId::IDENTITY, |acc, &g| self.mul_gen(acc, g as usize))
    }

    /// Elements of the subgroup generated by `gens`, sorted by id.
    pub fn closure(&self, gens: &[ElemId]) -> Vec<ElemId> {
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut out = vec![ElemId::IDENTITY];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort();
        out
    }

    /// One representative per left coset gH, the smallest id in the coset
    /// (minimal length, then lexicographically least canonical word). Also
    /// returns, for every element, the position of its coset's
    /// representative in the returned list.
    pub fn left_cosets(&self, subgroup: &[ElemId]) -> Result<(Vec<ElemId>, Vec<u32>)> {
        self.check_subgroup(subgroup)?;
        let mut assign = vec![u32::MAX; self.len()];
        let mut reps = Vec::with_capacity(self.len() / subgroup.len().max(1));
        for g in self.ids() {
            if assign[g.index()] != u32::MAX {
                continue;
            }
            let k = reps.len() as u32;
            reps.push(g);
            for &h in subgroup {
                let gh = self.mul(g, h);
                if assign[gh.index()] != u32::MAX {
                    return Err(Error::NotASubgroup);
                }
                assign[gh.index()] = k;
            }
        }
        Ok((reps, assign))
    }

    pub fn coset_reps(&self, subgroup: &[ElemId]) -> Result<Vec<ElemId>> {
        Ok(self.left_cosets(subgroup)?.0)
    }

    fn check_subgroup(&self, subgroup: &[ElemId]) -> Result<()> {
        if !subgroup.contains(&ElemId::IDENTITY) || subgroup.iter().any(|x| x.index() >= self.len()) {
            return Err(Error::NotASubgroup);
        }
        let mut member = vec![false; self.len()];
        for x in subgroup {
            member[x.index()] = true;
        }
        for &a in subgroup {
            if !member[self.inv(a).index()] {
                return Err(Error::NotASubgroup);
            }
            for &b in subgroup {
                if !member[self.mul(a, b).index()] {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::element_from_word;
    use crate::ring::GoldenNumber;
    use crate::roots::{CoxeterType, DiagramSpec};

    fn h3_table() -> (RootSystem<GoldenNumber>, GroupTable) {
        let s = RootSystem::build(DiagramSpec::of(CoxeterType::H3)).unwrap();
        let t = GroupTable::coxeter(&s).unwrap();
        (s, t)
    }

    #[test]
    fn orders() {
        let (_, t) = h3_table();
        assert_eq!(t.len(), 120);
        let s4 = RootSystem::<GoldenNumber>::build(DiagramSpec::of(CoxeterType::H4)).unwrap();
        assert_eq!(GroupTable::coxeter(&s4).unwrap().len(), 14400);
        let i2 = RootSystem::<GoldenNumber>::build(DiagramSpec::i2_5()).unwrap();
        assert_eq!(GroupTable::coxeter(&i2).unwrap().len(), 10);
    }

    #[test]
    fn guard() {
        let (s, _) = h3_table();
        let gens = (0..3).map(|i| GroupElement::simple_reflection(&s, i).unwrap()).collect();
        assert_eq!(GroupTable::generate_with_guard(3, gens, 100).unwrap_err(), Error::GuardExceeded(100));
    }

    #[test]
    fn canonical_words_and_lengths() {
        let (s, t) = h3_table();
        for id in t.ids() {
            let word: Vec<usize> = t.word(id).iter().map(|&g| g as usize).collect();
            assert_eq!(&element_from_word(&s, &word).unwrap(), t.element(id));
            // canonical words are reduced
            assert_eq!(word.len(), t.length(id));
            assert_eq!(t.length(id), t.length(t.inv(id)));
            for g in 0..3 {
                let l = t.length(t.mul_gen(id, g));
                assert!(l + 1 == t.length(id) || l == t.length(id) + 1);
            }
        }
        // ids are sorted by (length, word)
        for w in t.ids().collect::<Vec<_>>().windows(2) {
            let key = |x: ElemId| (t.length(x), t.word(x).to_vec());
            assert!(key(w[0]) < key(w[1]));
        }
    }

    #[test]
    fn products_agree_with_composition() {
        let (_, t) = h3_table();
        for a in t.ids().step_by(7) {
            for b in t.ids().step_by(5) {
                let ab = t.element(a).compose(t.element(b));
                assert_eq!(t.id_of(&ab), Some(t.mul(a, b)));
            }
            assert_eq!(t.mul(a, t.inv(a)), ElemId::IDENTITY);
            for g in 0..3 {
                assert_eq!(t.gen_mul(g, a), t.mul(t.generator(g), a));
            }
        }
    }

    #[test]
    fn faithful_on_roots() {
        let (_, t) = h3_table();
        let perms: std::collections::HashSet<Vec<SignedRoot>> =
            t.ids().map(|id| t.element(id).perm().to_vec()).collect();
        assert_eq!(perms.len(), 120);
    }

    #[test]
    fn cosets() {
        let (_, t) = h3_table();
        assert_eq!(t.coset_reps(&[ElemId::IDENTITY]).unwrap().len(), 120);
        let all: Vec<ElemId> = t.ids().collect();
        assert_eq!(t.coset_reps(&all).unwrap(), vec![ElemId::IDENTITY]);
        let r1 = t.generator(0);
        let sub = t.closure(&[r1]);
        assert_eq!(sub.len(), 2);
        let (reps, assign) = t.left_cosets(&sub).unwrap();
        assert_eq!(reps.len(), 60);
        for (k, &rep) in reps.iter().enumerate() {
            assert_eq!(assign[rep.index()] as usize, k);
            assert_eq!(assign[t.mul(rep, r1).index()] as usize, k);
        }
        // {1, r1, r2} is not a subgroup
        assert_eq!(t.coset_reps(&[ElemId::IDENTITY, r1, t.generator(1)]).unwrap_err(), Error::NotASubgroup);
    }
}
