//! Mutually orthogonal root sets of type H: admissibility, closure, basis
//! censuses, and the stabilizer/coset data behind the normal forms.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{beta5, beta7, central_element_z, r5_word, ElemId, GroupTable};
use crate::hsystem::HCoxeter;
use crate::roots::{CoxeterType, RootSystem};
use crate::scalar::Coefficient;

/// A sorted set of pairwise orthogonal positive-root indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrthoSet(Vec<u16>);

impl OrthoSet {
    pub fn empty() -> Self {
        OrthoSet(Vec::new())
    }

    pub fn new<S: Coefficient>(system: &RootSystem<S>, roots: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<u16> = roots.into_iter().map(|i| i as u16).collect();
        v.sort_unstable();
        v.dedup();
        if v.iter().any(|&i| i as usize >= system.len()) {
            return Err(Error::NotARoot);
        }
        for (k, &a) in v.iter().enumerate() {
            for &b in &v[k + 1..] {
                if !system.orthogonal(a as usize, b as usize) {
                    return Err(Error::NotOrthogonal);
                }
            }
        }
        if v.len() > system.rank() {
            return Err(Error::Inconsistent("orthogonal set larger than rank".into()));
        }
        Ok(OrthoSet(v))
    }

    /// Trusted constructor for indices already known to be orthogonal.
    pub(crate) fn from_indices(roots: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<u16> = roots.into_iter().map(|i| i as u16).collect();
        v.sort_unstable();
        v.dedup();
        OrthoSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&(i as u16)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn is_subset(&self, other: &OrthoSet) -> bool {
        self.iter().all(|i| other.contains(i))
    }

    /// Image under a group element, folded to positive roots.
    pub fn apply(&self, group: &GroupTable, w: ElemId) -> OrthoSet {
        let mut v: Vec<u16> = self.0.iter().map(|&i| group.element(w).apply_index(i as usize).index() as u16).collect();
        v.sort_unstable();
        OrthoSet(v)
    }

    pub fn with(&self, i: usize) -> OrthoSet {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&(i as u16)) {
            v.insert(pos, i as u16);
        }
        OrthoSet(v)
    }
}

impl fmt::Debug for OrthoSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

/// Every orthogonal subset of size exactly `size`, in lexicographic order.
pub fn orthogonal_subsets<S: Coefficient>(system: &RootSystem<S>, size: usize) -> Vec<OrthoSet> {
    fn go<S: Coefficient>(s: &RootSystem<S>, size: usize, start: usize, cur: &mut Vec<u16>, out: &mut Vec<OrthoSet>) {
        if cur.len() == size {
            out.push(OrthoSet(cur.clone()));
            return;
        }
        for i in start..s.len() {
            if cur.iter().all(|&j| s.orthogonal(i, j as usize)) {
                cur.push(i as u16);
                go(s, size, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(system, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Admissible sets of type H: at most one root, or an orthogonal basis.
#[derive(Clone, Debug)]
pub struct HAdmissible {
    rank: usize,
    roots: usize,
    bases: Vec<OrthoSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisCensus {
    #[serde(rename = "type")]
    pub kind: String,
    pub positive_roots: usize,
    pub bases: usize,
    /// Minimum and maximum number of bases through a single root.
    pub bases_per_root: (usize, usize),
    pub orthogonal_pairs: usize,
    /// Minimum and maximum number of bases through an orthogonal pair.
    pub bases_per_pair: (usize, usize),
    pub admissible_sets: usize,
}

impl HAdmissible {
    pub fn new<S: Coefficient>(system: &RootSystem<S>) -> Self {
        HAdmissible { rank: system.rank(), roots: system.len(), bases: orthogonal_subsets(system, system.rank()) }
    }

    pub fn bases(&self) -> &[OrthoSet] {
        &self.bases
    }

    pub fn is_admissible(&self, b: &OrthoSet) -> bool {
        b.len() <= 1 || b.len() == self.rank
    }

    /// Smallest admissible superset: `b` itself when |b| ≤ 1, otherwise the
    /// unique orthogonal basis through `b`.
    pub fn closure(&self, b: &OrthoSet) -> Result<OrthoSet> {
        if b.len() <= 1 {
            return Ok(b.clone());
        }
        let mut hits = self.bases.iter().filter(|basis| b.is_subset(basis));
        match (hits.next(), hits.next()) {
            (Some(basis), None) => Ok(basis.clone()),
            (None, _) => Err(Error::Inconsistent(format!("no basis contains {b:?}"))),
            _ => Err(Error::Inconsistent(format!("several bases contain {b:?}"))),
        }
    }

    /// δ exponent of e_{B^cl} = δ^{2·|B^cl \ B|} e_B.
    pub fn closure_delta_exponent(&self, b: &OrthoSet) -> Result<i64> {
        Ok(2 * (self.closure(b)?.len() - b.len()) as i64)
    }

    /// ∅, every singleton, every basis.
    pub fn all(&self) -> Vec<OrthoSet> {
        let mut v = vec![OrthoSet::empty()];
        v.extend((0..self.roots).map(|i| OrthoSet(vec![i as u16])));
        v.extend(self.bases.iter().cloned());
        v
    }

    pub fn census<S: Coefficient>(&self, system: &RootSystem<S>) -> BasisCensus {
        let per_root: Vec<usize> =
            (0..system.len()).map(|i| self.bases.iter().filter(|b| b.contains(i)).count()).collect();
        let pairs = orthogonal_subsets(system, 2);
        let per_pair: Vec<usize> = pairs.iter().map(|p| self.bases.iter().filter(|b| p.is_subset(b)).count()).collect();
        let range = |v: &[usize]| (v.iter().copied().min().unwrap_or(0), v.iter().copied().max().unwrap_or(0));
        BasisCensus {
            kind: system.spec().name().to_string(),
            positive_roots: system.len(),
            bases: self.bases.len(),
            bases_per_root: range(&per_root),
            orthogonal_pairs: pairs.len(),
            bases_per_pair: range(&per_pair),
            admissible_sets: self.all().len(),
        }
    }
}

/// Which presentation the Brauer monoid of H4 uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// All defining relations, including e1·z = e1.
    #[default]
    Standard,
    /// Without the H4-only relation: z is not absorbed by e1.
    Chen,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Standard => "standard",
            Variant::Chen => "chen",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Variant::Standard),
            "chen" => Ok(Variant::Chen),
            _ => Err(Error::Parse { offset: 0, message: format!("unknown variant {s:?}") }),
        }
    }
}

const NONE: u32 = u32::MAX;

/// Stabilizers, middle groups and canonical coset representatives for the
/// three normal-form cells.
#[derive(Clone, Debug)]
pub struct CellData {
    kind: CoxeterType,
    variant: Variant,
    admissible: HAdmissible,
    /// β1, β3, β5 (and β7 for H4).
    basis: OrthoSet,
    n1: Vec<ElemId>,
    /// ⟨r3, r5⟩ for H3, ⟨r3, r4, r5⟩ for H4.
    kgroup: Vec<ElemId>,
    z: Option<ElemId>,
    c1: Vec<ElemId>,
    d1: Vec<ElemId>,
    n2: Vec<ElemId>,
    d2: Vec<ElemId>,
    /// Per element of K, position in `c1` of its class.
    c1_of: Vec<u32>,
    /// Per element of N1, its component in K.
    kpart: Vec<u32>,
    /// Per positive root ρ, position in `d1` of the rep u with uβ1 = ±ρ.
    d1_of_root: Vec<u32>,
    d2_of_basis: HashMap<OrthoSet, u32>,
    bases_by_id: Vec<OrthoSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCounts {
    pub n1: usize,
    pub n1_index: usize,
    pub k: usize,
    pub c1: usize,
    pub d1: usize,
    pub n2: usize,
    pub d2: usize,
}

impl CellData {
    pub fn build(h: &HCoxeter, variant: Variant) -> Result<Self> {
        let kind = h.kind();
        if variant == Variant::Chen && kind != CoxeterType::H4 {
            return Err(Error::UnsupportedDiagram("the chen variant applies to H4 only".into()));
        }
        let system = h.system();
        let group = h.group();
        let admissible = HAdmissible::new(system);

        let b5 = system.index_of(&beta5(system)?).ok_or(Error::NotARoot)?;
        let mut basis_roots = vec![0, 2, b5];
        if kind == CoxeterType::H4 {
            basis_roots.push(system.index_of(&beta7(system)?).ok_or(Error::NotARoot)?);
        }
        let basis = OrthoSet::new(system, basis_roots)?;

        let r5 = group.from_word(&r5_word().iter().map(|&g| g as u8).collect::<Vec<_>>());
        let r = |i: usize| group.generator(i);

        // Stabilizer of β1 up to sign, by brute force, then compared with the
        // generated subgroup.
        let n1: Vec<ElemId> = group.ids().filter(|&w| group.element(w).apply_index(0).index() == 0).collect();
        let mut n1_gens = vec![r(0), r(2), r5];
        let mut k_gens = vec![r(2), r5];
        if kind == CoxeterType::H4 {
            n1_gens.push(r(3));
            k_gens.push(r(3));
        }
        if group.closure(&n1_gens) != n1 {
            return Err(Error::Inconsistent("stabilizer of β1 is not generated by r1, r3, (r4,) r5".into()));
        }
        let kgroup = group.closure(&k_gens);

        let z = match kind {
            CoxeterType::H4 => Some(group.id_of(&central_element_z(system)?).ok_or(Error::NotARoot)?),
            _ => None,
        };

        let mut c1_of = vec![NONE; group.len()];
        let c1 = match (z, variant) {
            (Some(z), Variant::Standard) => {
                // classes of K modulo ⟨z⟩, smallest id first
                let zsub = group.closure(&[z]);
                let mut reps = Vec::new();
                for &k in &kgroup {
                    if c1_of[k.index()] != NONE {
                        continue;
                    }
                    let pos = reps.len() as u32;
                    reps.push(k);
                    for &y in &zsub {
                        c1_of[group.mul(k, y).index()] = pos;
                    }
                }
                reps
            }
            _ => {
                for (pos, &k) in kgroup.iter().enumerate() {
                    c1_of[k.index()] = pos as u32;
                }
                kgroup.clone()
            }
        };

        let mut kpart = vec![NONE; group.len()];
        let mut in_k = vec![false; group.len()];
        for &k in &kgroup {
            in_k[k.index()] = true;
        }
        for &n in &n1 {
            let k = if in_k[n.index()] { n } else { group.mul(r(0), n) };
            if !in_k[k.index()] {
                return Err(Error::Inconsistent("N1 is not ⟨r1⟩ × K".into()));
            }
            kpart[n.index()] = k.0;
        }

        let (d1, _) = group.left_cosets(&n1)?;
        let mut d1_of_root = vec![NONE; system.len()];
        for (pos, &u) in d1.iter().enumerate() {
            let rho = group.element(u).apply_index(0).index();
            if d1_of_root[rho] != NONE {
                return Err(Error::Inconsistent("two D1 reps for one root".into()));
            }
            d1_of_root[rho] = pos as u32;
        }

        let n2: Vec<ElemId> = group.ids().filter(|&w| basis.apply(group, w) == basis).collect();
        let (d2, _) = group.left_cosets(&n2)?;
        let mut d2_of_basis = HashMap::new();
        let mut bases_by_id = Vec::with_capacity(d2.len());
        for (pos, &u) in d2.iter().enumerate() {
            let b = basis.apply(group, u);
            bases_by_id.push(b.clone());
            if d2_of_basis.insert(b, pos as u32).is_some() {
                return Err(Error::Inconsistent("two D2 reps for one basis".into()));
            }
        }

        let data = CellData {
            kind,
            variant,
            admissible,
            basis,
            n1,
            kgroup,
            z,
            c1,
            d1,
            n2,
            d2,
            c1_of,
            kpart,
            d1_of_root,
            d2_of_basis,
            bases_by_id,
        };
        data.check_counts(system.len())?;
        Ok(data)
    }

    fn check_counts(&self, roots: usize) -> Result<()> {
        let c = self.counts();
        let expected = match (self.kind, self.variant) {
            (CoxeterType::H3, _) => CellCounts { n1: 8, n1_index: 15, k: 4, c1: 4, d1: 15, n2: 24, d2: 5 },
            (_, Variant::Standard) => CellCounts { n1: 240, n1_index: 60, k: 120, c1: 60, d1: 60, n2: 192, d2: 75 },
            (_, Variant::Chen) => CellCounts { n1: 240, n1_index: 60, k: 120, c1: 120, d1: 60, n2: 192, d2: 75 },
        };
        if c != expected || c.d1 != roots || self.d2.len() != self.admissible.bases().len() {
            return Err(Error::Inconsistent(format!("cell data {c:?}, expected {expected:?}")));
        }
        Ok(())
    }

    pub fn counts(&self) -> CellCounts {
        CellCounts {
            n1: self.n1.len(),
            n1_index: self.d1.len(),
            k: self.kgroup.len(),
            c1: self.c1.len(),
            d1: self.d1.len(),
            n2: self.n2.len(),
            d2: self.d2.len(),
        }
    }

    pub fn kind(&self) -> CoxeterType {
        self.kind
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn admissible(&self) -> &HAdmissible {
        &self.admissible
    }

    pub fn basis(&self) -> &OrthoSet {
        &self.basis
    }

    pub fn n1(&self) -> &[ElemId] {
        &self.n1
    }

    pub fn kgroup(&self) -> &[ElemId] {
        &self.kgroup
    }

    pub fn z(&self) -> Option<ElemId> {
        self.z
    }

    pub fn c1(&self) -> &[ElemId] {
        &self.c1
    }

    pub fn d1(&self) -> &[ElemId] {
        &self.d1
    }

    pub fn n2(&self) -> &[ElemId] {
        &self.n2
    }

    pub fn d2(&self) -> &[ElemId] {
        &self.d2
    }

    /// D1 representative u with u·β1 = ±ρ.
    pub fn d1_for_root(&self, rho: usize) -> ElemId {
        self.d1[self.d1_of_root[rho] as usize]
    }

    pub fn d1_position(&self, rho: usize) -> usize {
        self.d1_of_root[rho] as usize
    }

    /// D2 representative u with u·basis = `b`.
    pub fn d2_for_basis(&self, b: &OrthoSet) -> Option<ElemId> {
        self.d2_of_basis.get(b).map(|&p| self.d2[p as usize])
    }

    pub fn d2_position(&self, b: &OrthoSet) -> Option<usize> {
        self.d2_of_basis.get(b).map(|&p| p as usize)
    }

    /// Basis u·B0 for the D2 rep at `pos`.
    pub fn basis_at(&self, pos: usize) -> &OrthoSet {
        &self.bases_by_id[pos]
    }

    /// K-component of an element of N1, or `None` outside N1.
    pub fn kpart(&self, n: ElemId) -> Option<ElemId> {
        let k = self.kpart[n.index()];
        (k != NONE).then_some(ElemId(k))
    }

    /// Position in C1 of the class of `k` ∈ K (mod ⟨z⟩ in the standard H4
    /// variant).
    pub fn c1_position(&self, k: ElemId) -> Option<usize> {
        let p = self.c1_of[k.index()];
        (p != NONE).then_some(p as usize)
    }

    pub fn c1_rep(&self, k: ElemId) -> Option<ElemId> {
        self.c1_position(k).map(|p| self.c1[p])
    }

    pub fn in_n2(&self, w: ElemId) -> bool {
        self.n2.binary_search(&w).is_ok()
    }
}
