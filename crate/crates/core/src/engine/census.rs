//! Enumeration of all normal forms with closure and reachability checks.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admissible::Variant;
use crate::error::Result;
use crate::roots::CoxeterType;

use super::{Engine, Generator, NormalForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCounts {
    pub group: usize,
    pub e1: usize,
    pub e1e3: usize,
    pub total: usize,
}

impl CensusCounts {
    /// Ranks stated for the known presentations.
    pub fn expected(kind: CoxeterType, variant: Variant) -> Option<Self> {
        let (group, e1, e1e3) = match (kind, variant) {
            (CoxeterType::H3, Variant::Standard) => (120, 900, 25),
            (CoxeterType::H4, Variant::Standard) => (14400, 216000, 5625),
            (CoxeterType::H4, Variant::Chen) => (14400, 432000, 5625),
            _ => return None,
        };
        Some(CensusCounts { group, e1, e1e3, total: group + e1 + e1e3 })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    #[serde(rename = "type")]
    pub kind: String,
    pub variant: Variant,
    pub counts: CensusCounts,
    pub expected: Option<CensusCounts>,
    /// Every product g·x (g a generator, x a form) is again a valid form.
    pub closed: bool,
    /// Number of forms reached from the identity by left multiplication.
    pub reachable: usize,
    /// Left multiplications performed by the closure check.
    pub rewrites: usize,
    /// Up to ten offending products, as `generator · form`.
    pub failures: Vec<String>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.closed
            && self.failures.is_empty()
            && self.reachable == self.counts.total
            && self.expected == Some(self.counts)
    }
}

impl Engine {
    fn generators(&self) -> Vec<Generator> {
        let k = self.rank() as u8;
        (0..k).map(Generator::R).chain((0..k).map(Generator::E)).collect()
    }

    /// Forms with δ⁰ in enumeration order.
    pub fn all_forms(&self) -> impl Iterator<Item = NormalForm> + '_ {
        (0..self.total_forms()).map(|i| NormalForm { delta: 0, cell: self.cell_at(i).expect("index in range") })
    }

    pub fn census(&self) -> Result<CensusReport> {
        let c = self.cells().counts();
        let counts = CensusCounts {
            group: self.group().len(),
            e1: c.d1 * c.c1 * c.d1,
            e1e3: c.d2 * c.d2,
            total: self.total_forms(),
        };
        let gens = self.generators();

        // Closure: every generator times every form is a valid form, and the
        // δ power moves by 0 or 2.
        let results: Vec<std::result::Result<(), String>> = (0..counts.total)
            .into_par_iter()
            .map(|i| {
                let cell = self.cell_at(i).expect("index in range");
                let x = NormalForm { delta: 0, cell };
                if self.cell_index(&cell) != Some(i) {
                    return Err(format!("form {i} does not index back to itself"));
                }
                for &g in &gens {
                    match self.lmul(g, &x) {
                        Ok(y) if self.is_valid(&y) && (y.delta == 0 || y.delta == 2) => {}
                        Ok(y) => return Err(format!("{g} · {} gave invalid {y:?}", self.cell_word(&cell))),
                        Err(e) => return Err(format!("{g} · {}: {e}", self.cell_word(&cell))),
                    }
                }
                Ok(())
            })
            .collect();
        let failures: Vec<String> = results.into_iter().filter_map(|r| r.err()).take(10).collect();

        let reachable = self.reachable_count()?;
        Ok(CensusReport {
            kind: self.kind().to_string(),
            variant: self.variant(),
            counts,
            expected: CensusCounts::expected(self.kind(), self.variant()),
            closed: failures.is_empty(),
            reachable,
            rewrites: counts.total * gens.len(),
            failures,
        })
    }

    /// Breadth-first search from the identity under left multiplication by
    /// generators, ignoring δ.
    pub fn reachable_count(&self) -> Result<usize> {
        let gens = self.generators();
        let total = self.total_forms();
        let seen: Vec<AtomicBool> = (0..total).map(|_| AtomicBool::new(false)).collect();
        seen[0].store(true, Ordering::Relaxed);
        let mut frontier = vec![0usize];
        let mut count = 1;
        while !frontier.is_empty() {
            let next: Vec<usize> = frontier
                .par_iter()
                .map(|&i| -> Result<Vec<usize>> {
                    let x = NormalForm { delta: 0, cell: self.cell_at(i).expect("index in range") };
                    let mut out = Vec::new();
                    for &g in &gens {
                        let y = self.lmul(g, &x)?;
                        if let Some(j) = self.cell_index(&y.cell) {
                            if !seen[j].swap(true, Ordering::Relaxed) {
                                out.push(j);
                            }
                        }
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            count += next.len();
            frontier = next;
        }
        Ok(count)
    }
}
