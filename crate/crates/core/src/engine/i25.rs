//! Products e_γ·e1 in BrM(I2(5)), derived by brute force from the rank-2
//! presentation on r1, r2, e1, e2 alone.
//!
//! For every positive root γ of I2(5) let x be the shortest dihedral element
//! with x·β1 = ±γ. Then e_γ·e1 = x·e1·x⁻¹·e1, and since e1·y·e1 = e1 for every
//! y ∉ ⟨r1⟩ this collapses to x·e1 (or δ²e1 when γ = β1). Each such equality
//! is confirmed by searching the words equivalent to the left side.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ring::GoldenNumber;
use crate::roots::{DiagramSpec, RootSystem, SignedRoot};

use super::{Generator, GeneratorWord};

const R1: u8 = 0;
const R2: u8 = 1;
const E1: u8 = 2;
const E2: u8 = 3;

/// (lhs, rhs, δ exponent gained going lhs → rhs)
const RULES: &[(&[u8], &[u8], i8)] = &[
    (&[R1, R1], &[], 0),
    (&[R2, R2], &[], 0),
    (&[R1, E1], &[E1], 0),
    (&[E1, R1], &[E1], 0),
    (&[R2, E2], &[E2], 0),
    (&[E2, R2], &[E2], 0),
    (&[E1, E1], &[E1], 2),
    (&[E2, E2], &[E2], 2),
    (&[R1, R2, R1, R2, R1], &[R2, R1, R2, R1, R2], 0),
    (&[R1, R2, E1, R2, R1], &[R2, R1, E2, R1, R2], 0),
    (&[E1, E2, E1], &[E1], 0),
    (&[E1, R2, E1], &[E1], 0),
    (&[E1, R2, R1, R2, E1], &[E1], 0),
];

/// Extra letters the search may use beyond the longer side.
const SLACK: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct I25Entry {
    /// γ in the basis β1, β2, as `[a, b]` pairs a + bφ.
    pub gamma: Vec<[i64; 2]>,
    /// e_γ·e1 written in the generators.
    pub lhs: String,
    /// The reduced product: δ² e1 or x·e1.
    pub rhs: String,
    pub delta: i64,
    /// The presentation proves lhs = δ^delta · rhs.
    pub verified: bool,
    /// Words visited by the search.
    pub explored: usize,
}

fn to_gens(w: &[u8]) -> GeneratorWord {
    GeneratorWord(
        w.iter()
            .map(|&c| match c {
                R1 => Generator::R(0),
                R2 => Generator::R(1),
                E1 => Generator::E(0),
                _ => Generator::E(1),
            })
            .collect(),
    )
}

/// Breadth-first search over words of length at most `bound` reachable from
/// `start` by applying the rules in either direction.
fn equivalent(start: &[u8], target: &[u8], target_delta: i8, bound: usize) -> (bool, usize) {
    let mut seen: HashSet<(Vec<u8>, i8)> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert((start.to_vec(), 0));
    queue.push_back((start.to_vec(), 0i8));
    while let Some((w, d)) = queue.pop_front() {
        if w == target && d == target_delta {
            return (true, seen.len());
        }
        for &(l, r, dd) in RULES {
            for (from, to, step) in [(l, r, dd), (r, l, -dd)] {
                if from.is_empty() || from.len() > w.len() || w.len() - from.len() + to.len() > bound {
                    continue;
                }
                let mut pos = 0;
                while pos + from.len() <= w.len() {
                    if &w[pos..pos + from.len()] == from {
                        let mut next = Vec::with_capacity(w.len() + to.len());
                        next.extend_from_slice(&w[..pos]);
                        next.extend_from_slice(to);
                        next.extend_from_slice(&w[pos + from.len()..]);
                        let key = (next, d + step);
                        if seen.insert(key.clone()) {
                            queue.push_back(key);
                        }
                    }
                    pos += 1;
                }
            }
            // Insertions of r_i r_i are the only rules with an empty side.
            if l.len() == 2 && r.is_empty() && w.len() + 2 <= bound {
                for pos in 0..=w.len() {
                    let mut next = w.clone();
                    next.splice(pos..pos, l.iter().copied());
                    let key = (next, d);
                    if seen.insert(key.clone()) {
                        queue.push_back(key);
                    }
                }
            }
        }
    }
    (false, seen.len())
}

/// One entry per positive root of I2(5), in root order.
pub fn i25_table() -> Result<Vec<I25Entry>> {
    let system = RootSystem::<GoldenNumber>::build(DiagramSpec::i2_5())?;
    let group = GroupTable::coxeter(&system)?;
    let mut out = Vec::new();
    for gamma in 0..system.len() {
        let x =
            group.ids().find(|&x| group.apply(x, SignedRoot::positive(0)).index() == gamma).ok_or(Error::NotARoot)?;
        let xw: Vec<u8> = group.word(x).to_vec();
        let (lhs, rhs, delta) = if gamma == 0 {
            (vec![E1, E1], vec![E1], 2)
        } else {
            let lhs = if gamma == 1 {
                vec![E2, E1]
            } else {
                let mut l = xw.clone();
                l.push(E1);
                l.extend(xw.iter().rev());
                l.push(E1);
                l
            };
            let mut rhs = xw.clone();
            rhs.push(E1);
            (lhs, rhs, 0)
        };
        // Deepen the length bound until the equality is found.
        let base = lhs.len().max(rhs.len());
        let (mut verified, mut explored) = (false, 0);
        for bound in base..=base + SLACK {
            (verified, explored) = equivalent(&lhs, &rhs, delta, bound);
            if verified {
                break;
            }
        }
        out.push(I25Entry {
            gamma: system.root(gamma).coeffs().iter().map(|c| [c.a(), c.b()]).collect(),
            lhs: to_gens(&lhs).to_string(),
            rhs: if delta == 2 { format!("d d {}", to_gens(&rhs)) } else { to_gens(&rhs).to_string() },
            delta: delta as i64,
            verified,
            explored,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_entries_all_verified() {
        let t = i25_table().unwrap();
        assert_eq!(t.len(), 5);
        for e in &t {
            assert!(e.verified, "{e:?}");
        }
        assert_eq!(t[0].rhs, "d d e1");
        assert_eq!(t[1].lhs, "e2 e1");
        assert_eq!(t[1].rhs, "r1 r2 r1 r2 e1");
        // γ = r2·β1
        let g = t.iter().find(|e| e.lhs == "r2 e1 r2 e1").unwrap();
        assert_eq!(g.rhs, "r2 e1");
    }

    #[test]
    fn search_rejects_false_identities() {
        let (found, _) = equivalent(&[E2, E1], &[R1, R2, E1], 0, 7);
        assert!(!found);
        let (found, _) = equivalent(&[E1], &[E2], 0, 5);
        assert!(!found);
    }
}
