//! Normal forms of BrM(H3) and BrM(H4) and the left-multiplication rewrite
//! rules that keep them closed.
//!
//! Every monomial is δ^k times one of
//!
//! * `w` for a group element w,
//! * `u·e1·v·w` with u ∈ D1, v ∈ C1, w⁻¹ ∈ D1,
//! * `u·e1e3·w` with u ∈ D2, w⁻¹ ∈ D2.
//!
//! Left multiplication by r_i only moves u. Left multiplication by e_β is
//! pulled through u to e_γ with γ = u⁻¹β and then resolved against e1 (or
//! against e1e3) using tables precomputed at construction.

mod action;
mod census;
mod i25;
mod relations;
mod word;

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::admissible::{CellData, OrthoSet, Variant};
use crate::error::{Error, Result};
use crate::group::{ElemId, GroupTable};
use crate::hsystem::HCoxeter;
use crate::roots::{CoxeterType, SignedRoot};

pub use action::{action_h, left_roots};
pub use census::{CensusCounts, CensusReport};
pub use i25::{i25_table, I25Entry};
pub use relations::{relation_instances, FamilyReport, RelationInstance, RelationReport};
pub use word::{Generator, GeneratorWord};

/// The shape of a normal form without its δ power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Group(ElemId),
    /// u·e1·v·w
    E1 {
        u: ElemId,
        v: ElemId,
        w: ElemId,
    },
    /// u·e1e3·w
    E1E3 {
        u: ElemId,
        w: ElemId,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pub delta: i64,
    pub cell: Cell,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { delta: 0, cell: Cell::Group(ElemId::IDENTITY) }
    }

    fn with_delta(self, step: i64) -> Result<Self> {
        let delta = self.delta.checked_add(step).ok_or(Error::Overflow)?;
        Ok(NormalForm { delta, ..self })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Group,
    E1,
    E1e3,
}

/// Text form of a [`NormalForm`]: each component is the canonical word of a
/// group element. For the group cell the element is in `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormJson {
    pub delta: i64,
    pub cell: CellKind,
    pub u: String,
    pub v: String,
    pub w: String,
}

/// How e_γ·e1 resolves, per positive root γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Reduction {
    /// γ = β1: e1² = δ²e1.
    Square,
    /// γ ⊥ β1: e_γ·e1 = c·e1e3·c⁻¹ with c{β1,β3} = {β1,γ}.
    Orthogonal(ElemId),
    /// e_γ·e1 = g·e1.
    Tabulated(ElemId),
}

#[derive(Clone, Debug)]
pub struct Engine {
    h: Arc<HCoxeter>,
    cells: CellData,
    reduce: Vec<Reduction>,
    /// For γ outside the standard basis: e_γ·e1e3 = h·e1e3.
    top: Vec<Option<ElemId>>,
    /// Position in D2 of the representative of w·N2, per element w.
    d2_of_elem: Vec<u32>,
}

fn invariant(msg: impl Into<String>) -> Error {
    Error::Engine(msg.into())
}

impl Engine {
    pub fn new(kind: CoxeterType, variant: Variant) -> Result<Self> {
        Engine::with_system(Arc::new(HCoxeter::build(kind)?), variant)
    }

    pub fn with_system(h: Arc<HCoxeter>, variant: Variant) -> Result<Self> {
        let cells = CellData::build(&h, variant)?;
        let g = h.group();
        let s = h.system();
        let img = |w: ElemId, root: usize| g.apply(w, SignedRoot::positive(root)).index();

        // I2(5) pattern: non-β1 positive roots of ⟨r1,r2⟩, each with the
        // smallest dihedral element carrying β1 to it.
        let dihedral = g.closure(&[g.generator(0), g.generator(1)]);
        let mut pattern: HashMap<usize, ElemId> = HashMap::new();
        for &x in &dihedral {
            let p = img(x, 0);
            if p != 0 {
                pattern.entry(p).or_insert(x);
            }
        }
        if pattern.len() != 4 {
            return Err(Error::Inconsistent(format!("I2(5) pattern has {} roots", pattern.len())));
        }
        let (r2, r3) = (g.generator(1), g.generator(2));

        let mut reduce = Vec::with_capacity(s.len());
        for gamma in 0..s.len() {
            let r = if gamma == 0 {
                Reduction::Square
            } else if s.orthogonal(gamma, 0) {
                let mut target = [0, gamma];
                target.sort_unstable();
                let c = g
                    .ids()
                    .find(|&w| {
                        let mut got = [img(w, 0), img(w, 2)];
                        got.sort_unstable();
                        got == target
                    })
                    .ok_or_else(|| Error::Inconsistent(format!("no conjugator of {{β1,β3}} to {{β1,{gamma}}}")))?;
                Reduction::Orthogonal(c)
            } else {
                let five = cells
                    .n1()
                    .iter()
                    .find_map(|&y| pattern.get(&img(y, gamma)).map(|&x0| g.mul(g.mul(g.inv(y), x0), y)));
                let three = || {
                    g.ids()
                        .find(|&y| img(y, 0) == 2 && img(y, gamma) == 1)
                        .map(|y| g.mul(g.mul(g.mul(g.inv(y), r3), r2), y))
                };
                match five.or_else(three) {
                    Some(x) => Reduction::Tabulated(x),
                    None => return Err(Error::Inconsistent(format!("root {gamma} matches no pattern pair"))),
                }
            };
            reduce.push(r);
        }

        let basis = cells.basis().clone();
        let mut top = vec![None; s.len()];
        for (gamma, slot) in top.iter_mut().enumerate() {
            if basis.contains(gamma) {
                continue;
            }
            let bi = basis
                .iter()
                .find(|&b| !s.orthogonal(gamma, b))
                .ok_or_else(|| Error::Inconsistent("root orthogonal to a whole basis".into()))?;
            let t = cells.d1_for_root(bi);
            let h_elem = match reduce[img(g.inv(t), gamma)] {
                Reduction::Tabulated(x) => g.mul(g.mul(t, x), g.inv(t)),
                other => return Err(Error::Inconsistent(format!("unexpected {other:?} in top-cell table"))),
            };
            *slot = Some(h_elem);
        }

        let mut d2_of_elem = Vec::with_capacity(g.len());
        for w in g.ids() {
            let pos = cells
                .d2_position(&basis.apply(g, w))
                .ok_or_else(|| Error::Inconsistent("basis image has no D2 representative".into()))?;
            d2_of_elem.push(pos as u32);
        }

        Ok(Engine { h, cells, reduce, top, d2_of_elem })
    }

    pub fn kind(&self) -> CoxeterType {
        self.h.kind()
    }

    pub fn variant(&self) -> Variant {
        self.cells.variant()
    }

    pub fn rank(&self) -> usize {
        self.h.rank()
    }

    pub fn system(&self) -> &HCoxeter {
        &self.h
    }

    pub fn shared_system(&self) -> Arc<HCoxeter> {
        Arc::clone(&self.h)
    }

    pub fn group(&self) -> &GroupTable {
        self.h.group()
    }

    pub fn cells(&self) -> &CellData {
        &self.cells
    }

    fn image(&self, w: ElemId, root: usize) -> usize {
        self.group().apply(w, SignedRoot::positive(root)).index()
    }

    /// Normal form of a·e1·b.
    pub fn canon_e1(&self, a: ElemId, b: ElemId) -> Result<Cell> {
        let g = self.group();
        let u = self.cells.d1_for_root(self.image(a, 0));
        let n1 = g.mul(g.inv(u), a);
        let d = self.cells.d1_for_root(self.image(g.inv(b), 0));
        let n2 = g.mul(b, d);
        let n = g.mul(n1, n2);
        let k = self.cells.kpart(n).ok_or_else(|| invariant(format!("{:?} not in the stabilizer of β1", g.word(n))))?;
        let v = self.cells.c1_rep(k).ok_or_else(|| invariant("middle part outside K"))?;
        Ok(Cell::E1 { u, v, w: g.inv(d) })
    }

    /// Normal form of a·e1e3·b.
    pub fn canon_e1e3(&self, a: ElemId, b: ElemId) -> Cell {
        let g = self.group();
        let d2 = self.cells.d2();
        let u = d2[self.d2_of_elem[a.index()] as usize];
        let w = g.inv(d2[self.d2_of_elem[g.inv(b).index()] as usize]);
        Cell::E1E3 { u, w }
    }

    /// r_i·x.
    pub fn lmul_r(&self, i: usize, x: &NormalForm) -> Result<NormalForm> {
        self.check_index(i)?;
        self.lmul_group(self.group().generator(i), x)
    }

    /// w·x for a group element w.
    pub fn lmul_group(&self, a: ElemId, x: &NormalForm) -> Result<NormalForm> {
        let g = self.group();
        let cell = match x.cell {
            Cell::Group(w) => Cell::Group(g.mul(a, w)),
            Cell::E1 { u, v, w } => self.canon_e1(g.mul(a, u), g.mul(v, w))?,
            Cell::E1E3 { u, w } => self.canon_e1e3(g.mul(a, u), w),
        };
        Ok(NormalForm { cell, ..*x })
    }

    /// e_β·x for the positive root with index `beta`.
    pub fn lmul_e(&self, beta: usize, x: &NormalForm) -> Result<NormalForm> {
        if beta >= self.h.system().len() {
            return Err(Error::NotARoot);
        }
        let g = self.group();
        let cell = match x.cell {
            Cell::Group(w) => {
                let t = self.cells.d1_for_root(self.image(g.inv(w), beta));
                self.canon_e1(g.mul(w, t), g.inv(t))?
            }
            Cell::E1 { u, v, w } => match self.reduce[self.image(g.inv(u), beta)] {
                Reduction::Square => return x.with_delta(2),
                Reduction::Orthogonal(c) => self.canon_e1e3(g.mul(u, c), g.mul(g.mul(g.inv(c), v), w)),
                Reduction::Tabulated(t) => self.canon_e1(g.mul(u, t), g.mul(v, w))?,
            },
            Cell::E1E3 { u, w } => {
                let gamma = self.image(g.inv(u), beta);
                match self.top[gamma] {
                    None => return x.with_delta(2),
                    Some(h) => self.canon_e1e3(g.mul(u, h), w),
                }
            }
        };
        Ok(NormalForm { cell, ..*x })
    }

    pub fn lmul(&self, gen: Generator, x: &NormalForm) -> Result<NormalForm> {
        match gen {
            Generator::R(i) => self.lmul_r(i as usize, x),
            Generator::E(i) => {
                self.check_index(i as usize)?;
                self.lmul_e(i as usize, x)
            }
            Generator::Delta => x.with_delta(1),
            Generator::DeltaInv => x.with_delta(-1),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::BadGenerator { index: i, rank: self.rank() });
        }
        Ok(())
    }

    /// Right-to-left fold of the word onto the identity.
    pub fn normal_form(&self, word: &[Generator]) -> Result<NormalForm> {
        let mut x = NormalForm::identity();
        for (k, &gen) in word.iter().enumerate().rev() {
            x = self.lmul(gen, &x).map_err(|e| match e {
                Error::Engine(m) => invariant(format!("{m} (at letter {k} of {})", GeneratorWord(word.to_vec()))),
                other => other,
            })?;
        }
        Ok(x)
    }

    pub fn eval(&self, text: &str) -> Result<NormalForm> {
        self.normal_form(&GeneratorWord::parse(text, self.rank())?.0)
    }

    fn group_word(&self, w: ElemId) -> impl Iterator<Item = Generator> + '_ {
        self.group().word(w).iter().map(|&i| Generator::R(i))
    }

    /// Canonical word of the cell: the words of u, e1 (or e1 e3), v, w.
    pub fn cell_word(&self, cell: &Cell) -> GeneratorWord {
        let mut out = Vec::new();
        match *cell {
            Cell::Group(w) => out.extend(self.group_word(w)),
            Cell::E1 { u, v, w } => {
                out.extend(self.group_word(u));
                out.push(Generator::E(0));
                out.extend(self.group_word(v));
                out.extend(self.group_word(w));
            }
            Cell::E1E3 { u, w } => {
                out.extend(self.group_word(u));
                out.extend([Generator::E(0), Generator::E(2)]);
                out.extend(self.group_word(w));
            }
        }
        GeneratorWord(out)
    }

    /// Canonical word including the δ power, written first.
    pub fn canonical_word(&self, x: &NormalForm) -> GeneratorWord {
        let d = if x.delta >= 0 { Generator::Delta } else { Generator::DeltaInv };
        let mut out = vec![d; x.delta.unsigned_abs() as usize];
        out.extend(self.cell_word(&x.cell).0);
        GeneratorWord(out)
    }

    /// x·y: the canonical word of x folded onto y, group segments applied
    /// whole.
    pub fn multiply(&self, x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
        let g = self.group();
        let z = match x.cell {
            Cell::Group(w) => self.lmul_group(w, y)?,
            Cell::E1 { u, v, w } => {
                let t = self.lmul_group(g.mul(v, w), y)?;
                let t = self.lmul_e(0, &t)?;
                self.lmul_group(u, &t)?
            }
            Cell::E1E3 { u, w } => {
                let t = self.lmul_group(w, y)?;
                let t = self.lmul_e(2, &t)?;
                let t = self.lmul_e(0, &t)?;
                self.lmul_group(u, &t)?
            }
        };
        z.with_delta(x.delta)
    }

    /// The anti-involution reversing words.
    pub fn op(&self, x: &NormalForm) -> Result<NormalForm> {
        let g = self.group();
        let cell = match x.cell {
            Cell::Group(w) => Cell::Group(g.inv(w)),
            Cell::E1 { u, v, w } => self.canon_e1(g.mul(g.inv(w), g.inv(v)), g.inv(u))?,
            Cell::E1E3 { u, w } => self.canon_e1e3(g.inv(w), g.inv(u)),
        };
        Ok(NormalForm { cell, ..*x })
    }

    pub fn total_forms(&self) -> usize {
        let c = self.cells.counts();
        self.group().len() + c.d1 * c.c1 * c.d1 + c.d2 * c.d2
    }

    /// Position of a valid cell in the enumeration order used by the census,
    /// or `None` if some component is not a canonical representative.
    pub fn cell_index(&self, cell: &Cell) -> Option<usize> {
        let g = self.group();
        let c = &self.cells;
        let nw = g.len();
        let (nd1, nc1, nd2) = (c.d1().len(), c.c1().len(), c.d2().len());
        let d1_pos = |x: ElemId| {
            let p = c.d1_position(self.image(x, 0));
            (c.d1()[p] == x).then_some(p)
        };
        let d2_pos = |x: ElemId| {
            let p = self.d2_of_elem[x.index()] as usize;
            (c.d2()[p] == x).then_some(p)
        };
        match *cell {
            Cell::Group(w) => (w.index() < nw).then_some(w.index()),
            Cell::E1 { u, v, w } => {
                let pu = d1_pos(u)?;
                let pv = c.c1_position(v).filter(|&p| c.c1()[p] == v)?;
                let pw = d1_pos(g.inv(w))?;
                Some(nw + (pu * nc1 + pv) * nd1 + pw)
            }
            Cell::E1E3 { u, w } => {
                let pu = d2_pos(u)?;
                let pw = d2_pos(g.inv(w))?;
                Some(nw + nd1 * nc1 * nd1 + pu * nd2 + pw)
            }
        }
    }

    /// Inverse of [`Engine::cell_index`].
    pub fn cell_at(&self, index: usize) -> Option<Cell> {
        let g = self.group();
        let c = &self.cells;
        let nw = g.len();
        let (nd1, nc1, nd2) = (c.d1().len(), c.c1().len(), c.d2().len());
        if index < nw {
            return Some(Cell::Group(ElemId(index as u32)));
        }
        let i = index - nw;
        if i < nd1 * nc1 * nd1 {
            let (pw, rest) = (i % nd1, i / nd1);
            let (pv, pu) = (rest % nc1, rest / nc1);
            return Some(Cell::E1 { u: c.d1()[pu], v: c.c1()[pv], w: g.inv(c.d1()[pw]) });
        }
        let i = i - nd1 * nc1 * nd1;
        (i < nd2 * nd2).then(|| Cell::E1E3 { u: c.d2()[i / nd2], w: g.inv(c.d2()[i % nd2]) })
    }

    pub fn is_valid(&self, x: &NormalForm) -> bool {
        self.cell_index(&x.cell).is_some()
    }

    fn word_string(&self, w: ElemId) -> String {
        GeneratorWord(self.group_word(w).collect()).to_string()
    }

    pub fn to_json(&self, x: &NormalForm) -> NormalFormJson {
        let id = ElemId::IDENTITY;
        let (cell, u, v, w) = match x.cell {
            Cell::Group(w) => (CellKind::Group, id, id, w),
            Cell::E1 { u, v, w } => (CellKind::E1, u, v, w),
            Cell::E1E3 { u, w } => (CellKind::E1e3, u, id, w),
        };
        NormalFormJson { delta: x.delta, cell, u: self.word_string(u), v: self.word_string(v), w: self.word_string(w) }
    }

    pub fn from_json(&self, j: &NormalFormJson) -> Result<NormalForm> {
        let elem = |text: &str| -> Result<ElemId> {
            let word = GeneratorWord::parse(text, self.rank())?;
            let mut letters = Vec::with_capacity(word.len());
            for gen in word.0 {
                match gen {
                    Generator::R(i) => letters.push(i),
                    other => {
                        return Err(Error::Parse { offset: 0, message: format!("{other} in a group word") });
                    }
                }
            }
            Ok(self.group().from_word(&letters))
        };
        let (u, v, w) = (elem(&j.u)?, elem(&j.v)?, elem(&j.w)?);
        let cell = match j.cell {
            CellKind::Group => Cell::Group(w),
            CellKind::E1 => Cell::E1 { u, v, w },
            CellKind::E1e3 => Cell::E1E3 { u, w },
        };
        let x = NormalForm { delta: j.delta, cell };
        if !self.is_valid(&x) {
            return Err(invariant("components are not canonical representatives"));
        }
        Ok(x)
    }

    /// Basis u·{β1,β3,β5(,β7)} of a top-cell form, or `None` for other cells.
    pub fn top_basis(&self, cell: &Cell) -> Option<OrthoSet> {
        match *cell {
            Cell::E1E3 { u, .. } => Some(self.cells.basis().apply(self.group(), u)),
            _ => None,
        }
    }

    /// The tabulated g with e_γ·e1 = g·e1, for γ neither β1 nor orthogonal to it.
    pub fn e1_reduction(&self, gamma: usize) -> Option<ElemId> {
        match self.reduce.get(gamma)? {
            Reduction::Tabulated(x) => Some(*x),
            _ => None,
        }
    }

    /// The h with e_γ·e1e3 = h·e1e3, for γ outside the standard basis.
    pub fn top_reduction(&self, gamma: usize) -> Option<ElemId> {
        self.top.get(gamma).copied().flatten()
    }
}

#[cfg(test)]
mod tests;
