//! Coxeter group elements as signed permutations of positive roots.
//!
//! An element is stored by the signed image of every positive root. Two
//! elements are equal iff they agree on the simple roots, which gives a
//! compact hash key. Products inside a [`GroupTable`] only touch the simple
//! root images, so composition is a handful of lookups.

mod special;
mod table;

pub use special::{beta5, beta7, central_element_z, r5_word, BETA5_WORD};
pub use table::{ElemId, GroupTable, ENUMERATION_GUARD};

use std::fmt;

use crate::error::{Error, Result};
use crate::roots::{RootSystem, SignedRoot};
use crate::scalar::Coefficient;

/// A signed permutation of positive-root indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    perm: Box<[SignedRoot]>,
    length: usize,
}

impl GroupElement {
    pub fn identity(degree: usize) -> Self {
        let perm: Box<[SignedRoot]> = (0..degree).map(SignedRoot::positive).collect();
        GroupElement { perm, length: 0 }
    }

    pub fn from_perm(perm: Vec<SignedRoot>) -> Self {
        let length = perm.iter().filter(|s| s.is_negative()).count();
        GroupElement { perm: perm.into_boxed_slice(), length }
    }

    /// Reflection in the positive root with table index `root`.
    pub fn reflection<S: Coefficient>(system: &RootSystem<S>, root: usize) -> Result<Self> {
        Ok(GroupElement::from_perm(system.reflection_perm(root)?))
    }

    pub fn simple_reflection<S: Coefficient>(system: &RootSystem<S>, i: usize) -> Result<Self> {
        if i >= system.rank() {
            return Err(Error::BadGenerator { index: i, rank: system.rank() });
        }
        Ok(GroupElement::from_perm(system.simple_reflection(i).to_vec()))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[SignedRoot] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, s)| s.index() == i && !s.is_negative())
    }

    pub fn apply(&self, s: SignedRoot) -> SignedRoot {
        self.perm[s.index()].signed(s.is_negative())
    }

    pub fn apply_index(&self, i: usize) -> SignedRoot {
        self.perm[i]
    }

    /// `self · other`: apply `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let perm = other.perm.iter().map(|&s| self.apply(s)).collect();
        GroupElement::from_perm(perm)
    }

    pub fn inverse(&self) -> GroupElement {
        let mut perm = vec![SignedRoot::positive(0); self.perm.len()];
        for (i, s) in self.perm.iter().enumerate() {
            perm[s.index()] = SignedRoot::new(i, s.is_negative());
        }
        GroupElement::from_perm(perm)
    }

    pub fn pow(&self, k: usize) -> GroupElement {
        (0..k).fold(GroupElement::identity(self.degree()), |acc, _| acc.compose(self))
    }

    /// Smallest k ≥ 1 with selfᵏ = 1.
    pub fn order(&self) -> usize {
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.compose(self);
            k += 1;
        }
        k
    }

    /// Hash key: the signed images of the first `rank` (simple) roots.
    pub fn key(&self, rank: usize) -> u128 {
        debug_assert!(rank <= 8);
        self.perm[..rank].iter().enumerate().fold(0u128, |acc, (i, s)| acc | (s.raw() as u128) << (16 * i))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement(len {}, {:?})", self.length, &self.perm[..self.perm.len().min(8)])
    }
}

/// Product of simple reflections `r_{w[0]} r_{w[1]} …` (0-based indices).
pub fn element_from_word<S: Coefficient>(system: &RootSystem<S>, word: &[usize]) -> Result<GroupElement> {
    let mut x = GroupElement::identity(system.len());
    for &i in word {
        x = x.compose(&GroupElement::simple_reflection(system, i)?);
    }
    Ok(x)
}
