//! The action of BrM(H_k) on admissible root sets.

use crate::admissible::{HAdmissible, OrthoSet};
use crate::error::{Error, Result};
use crate::group::{ElemId, GroupTable};
use crate::ring::GoldenNumber;
use crate::roots::{RootSystem, SignedRoot};

use super::{Cell, Engine, Generator};

/// Image of the admissible set `b` under a generator.
///
/// r_i permutes roots. e_i fixes `b` when β_i ∈ b, adds β_i and closes when
/// β_i ⊥ b, and otherwise moves `b` by the element x of ⟨r_β, r_i⟩ with
/// x·β = ±β_i, for the first β ∈ b not orthogonal to β_i. δ acts trivially.
pub fn action_h(
    system: &RootSystem<GoldenNumber>,
    group: &GroupTable,
    admissible: &HAdmissible,
    gen: Generator,
    b: &OrthoSet,
) -> Result<OrthoSet> {
    match gen {
        Generator::Delta | Generator::DeltaInv => Ok(b.clone()),
        Generator::R(i) => Ok(b.apply(group, group.generator(i as usize))),
        Generator::E(i) => {
            let i = i as usize;
            if b.contains(i) {
                return Ok(b.clone());
            }
            match b.iter().find(|&beta| !system.orthogonal(beta, i)) {
                None => admissible.closure(&b.with(i)),
                Some(beta) => {
                    let x = dihedral_mover(system, group, beta, i)?;
                    Ok(b.apply(group, x))
                }
            }
        }
    }
}

/// Shortest element of ⟨r_from, r_to⟩ sending `from` to ±`to`.
fn dihedral_mover(system: &RootSystem<GoldenNumber>, group: &GroupTable, from: usize, to: usize) -> Result<ElemId> {
    let refl = |root: usize| -> Result<ElemId> {
        let e = crate::group::GroupElement::reflection(system, root)?;
        group.id_of(&e).ok_or(Error::NotARoot)
    };
    let sub = group.closure(&[refl(from)?, refl(to)?]);
    sub.into_iter()
        .find(|&x| group.apply(x, SignedRoot::positive(from)).index() == to)
        .ok_or_else(|| Error::Inconsistent(format!("no dihedral element moves root {from} to {to}")))
}

/// Left root set of a form: ∅, {u·β1}, or u·{β1,β3,β5(,β7)}.
pub fn left_roots(engine: &Engine, cell: &Cell) -> OrthoSet {
    let g = engine.group();
    match *cell {
        Cell::Group(_) => OrthoSet::empty(),
        Cell::E1 { u, .. } => OrthoSet::from_indices([g.apply(u, SignedRoot::positive(0)).index()]),
        Cell::E1E3 { u, .. } => engine.cells().basis().apply(g, u),
    }
}

impl Engine {
    pub fn action(&self, gen: Generator, b: &OrthoSet) -> Result<OrthoSet> {
        action_h(self.system().system(), self.group(), self.cells().admissible(), gen, b)
    }

    pub fn act_word(&self, word: &[Generator], b: &OrthoSet) -> Result<OrthoSet> {
        word.iter().rev().try_fold(b.clone(), |acc, &g| self.action(g, &acc))
    }
}
