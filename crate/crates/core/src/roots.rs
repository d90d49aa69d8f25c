//! Coxeter diagrams, Gram data and positive-root tables.
//!
//! Roots live in simple-root coordinates; the Gram matrix carries the metric.
//! Positive roots are enumerated by closing the simple roots under simple
//! reflections, folding negatives to positives.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Sign;
use crate::scalar::Coefficient;

/// Upper bound on enumerated positive roots before the closure is declared
/// non-terminating.
const ROOT_GUARD: usize = 1024;

/// The four diagrams the library knows by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterType {
    H3,
    H4,
    D6,
    E8,
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::H3 => 3,
            CoxeterType::H4 => 4,
            CoxeterType::D6 => 6,
            CoxeterType::E8 => 8,
        }
    }

    pub fn is_golden(self) -> bool {
        matches!(self, CoxeterType::H3 | CoxeterType::H4)
    }

    pub fn name(self) -> &'static str {
        match self {
            CoxeterType::H3 => "H3",
            CoxeterType::H4 => "H4",
            CoxeterType::D6 => "D6",
            CoxeterType::E8 => "E8",
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "H3" => Ok(CoxeterType::H3),
            "H4" => Ok(CoxeterType::H4),
            "D6" => Ok(CoxeterType::D6),
            "E8" => Ok(CoxeterType::E8),
            _ => Err(Error::UnsupportedDiagram(s.to_string())),
        }
    }
}

/// A Coxeter diagram with bonds labeled 3 or 5. Nodes are 0-based
/// internally; constructors take the 1-based labels used in the literature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSpec {
    name: String,
    nodes: usize,
    /// `bonds[i][j]` is the Coxeter label m(i,j); 2 means no edge.
    bonds: Vec<Vec<u32>>,
}

impl DiagramSpec {
    /// `edges` use 1-based node labels.
    pub fn new(name: &str, nodes: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut bonds = vec![vec![2u32; nodes]; nodes];
        for (i, row) in bonds.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, m) in edges {
            if i == 0 || j == 0 || i > nodes || j > nodes || i == j {
                return Err(Error::UnsupportedDiagram(format!("{name}: bad edge {i}-{j}")));
            }
            if m != 3 && m != 5 {
                return Err(Error::UnsupportedDiagram(format!("{name}: bond label {m}")));
            }
            bonds[i - 1][j - 1] = m;
            bonds[j - 1][i - 1] = m;
        }
        Ok(DiagramSpec { name: name.to_string(), nodes, bonds })
    }

    pub fn of(t: CoxeterType) -> Self {
        let edges: &[(usize, usize, u32)] = match t {
            CoxeterType::H3 => &[(1, 2, 5), (2, 3, 3)],
            CoxeterType::H4 => &[(1, 2, 5), (2, 3, 3), (3, 4, 3)],
            CoxeterType::D6 => &[(1, 3, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3)],
            CoxeterType::E8 => &[(1, 3, 3), (3, 4, 3), (2, 4, 3), (4, 5, 3), (5, 6, 3), (6, 7, 3), (7, 8, 3)],
        };
        DiagramSpec::new(t.name(), t.rank(), edges).expect("built-in diagram")
    }

    /// The dihedral diagram I2(5), i.e. nodes 1, 2 of H3.
    pub fn i2_5() -> Self {
        DiagramSpec::of(CoxeterType::H3).restrict(&[1, 2]).expect("nodes 1,2 of H3")
    }

    /// Induced sub-diagram on the given 1-based nodes, renumbered in order.
    pub fn restrict(&self, nodes: &[usize]) -> Result<Self> {
        let mut edges = Vec::new();
        for (a, &i) in nodes.iter().enumerate() {
            if i == 0 || i > self.nodes {
                return Err(Error::UnsupportedDiagram(format!("{}: no node {i}", self.name)));
            }
            for (b, &j) in nodes.iter().enumerate().skip(a + 1) {
                let m = self.bonds[i - 1][j - 1];
                if m > 2 {
                    edges.push((a + 1, b + 1, m));
                }
            }
        }
        let name = format!("{}{:?}", self.name, nodes);
        DiagramSpec::new(&name, nodes.len(), &edges)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.nodes
    }

    /// Coxeter label between 0-based nodes (1 on the diagonal).
    pub fn bond(&self, i: usize, j: usize) -> u32 {
        self.bonds[i][j]
    }

    /// Joined by an unlabeled (m = 3) edge.
    pub fn simple_bond(&self, i: usize, j: usize) -> bool {
        self.bonds[i][j] == 3
    }

    /// Not joined at all.
    pub fn unbonded(&self, i: usize, j: usize) -> bool {
        i != j && self.bonds[i][j] == 2
    }

    pub fn gram<S: Coefficient>(&self) -> Result<Vec<Vec<S>>> {
        let two = S::one() + S::one();
        let mut g = vec![vec![S::zero(); self.nodes]; self.nodes];
        for (i, row) in g.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = if i == j {
                    two
                } else {
                    S::bond(self.bonds[i][j]).ok_or_else(|| {
                        Error::UnsupportedDiagram(format!(
                            "{}: bond {} not representable in this coefficient ring",
                            self.name, self.bonds[i][j]
                        ))
                    })?
                };
            }
        }
        Ok(g)
    }
}

/// A vector in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root<S> {
    coeffs: Vec<S>,
}

impl<S: Coefficient> Root<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        Root { coeffs }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![S::zero(); rank];
        coeffs[i] = S::one();
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn height(&self) -> Result<S> {
        self.coeffs.iter().try_fold(S::zero(), |acc, c| acc.checked_add(c).ok_or(Error::Overflow))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Sign of the first nonzero coefficient.
    pub fn leading_sign(&self) -> Sign {
        self.coeffs.iter().map(|c| c.sign()).find(|s| *s != Sign::Zero).unwrap_or(Sign::Zero)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| c.sign() != Sign::Negative)
    }

    pub fn all_nonpositive(&self) -> bool {
        self.coeffs.iter().all(|c| c.sign() != Sign::Positive)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.checked_neg().ok_or(Error::Overflow)).collect::<Result<_>>()?;
        Ok(Root { coeffs })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x.checked_add(y))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x.checked_sub(y))
    }

    pub fn checked_scale(&self, k: S) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.checked_mul(&k).ok_or(Error::Overflow)).collect::<Result<_>>()?;
        Ok(Root { coeffs })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> Option<S>) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| f(x, y).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Root { coeffs })
    }
}

impl<S: fmt::Debug> fmt::Debug for Root<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// A positive-root index together with a sign: the image of a root under a
/// group element, folded back to the positive table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRoot(u16);

impl SignedRoot {
    pub fn new(index: usize, negative: bool) -> Self {
        debug_assert!(index < (1 << 15));
        SignedRoot(((index as u16) << 1) | negative as u16)
    }

    pub fn positive(index: usize) -> Self {
        SignedRoot::new(index, false)
    }

    pub fn index(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_negative(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn negate(self) -> Self {
        SignedRoot(self.0 ^ 1)
    }

    /// Flip the sign when `flip` is set.
    pub fn signed(self, flip: bool) -> Self {
        SignedRoot(self.0 ^ flip as u16)
    }

    pub fn raw(self) -> u16 {
        self.0
    }
}

impl fmt::Debug for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.is_negative() { "-" } else { "+" }, self.index())
    }
}

/// Positive-root table with reflection data for one diagram.
#[derive(Clone, Debug)]
pub struct RootSystem<S> {
    spec: DiagramSpec,
    gram: Vec<Vec<S>>,
    roots: Vec<Root<S>>,
    index: HashMap<Root<S>, usize>,
    /// Inner products between positive roots, row-major.
    inner: Vec<S>,
    /// Per simple generator, the signed image of every positive root.
    reflections: Vec<Vec<SignedRoot>>,
}

impl<S: Coefficient> RootSystem<S> {
    pub fn build(spec: DiagramSpec) -> Result<Self> {
        let gram = spec.gram::<S>()?;
        let n = spec.rank();
        let simple: Vec<Root<S>> = (0..n).map(|i| Root::simple(n, i)).collect();

        let mut found: HashMap<Root<S>, ()> = HashMap::new();
        let mut roots = Vec::new();
        let mut queue: VecDeque<Root<S>> = VecDeque::new();
        for r in &simple {
            found.insert(r.clone(), ());
            roots.push(r.clone());
            queue.push_back(r.clone());
        }
        while let Some(x) = queue.pop_front() {
            for m in &simple {
                let y = reflect_with(&gram, m, &x)?;
                let y = if y.all_nonnegative() {
                    y
                } else if y.all_nonpositive() {
                    y.checked_neg()?
                } else {
                    return Err(Error::UnsupportedDiagram(format!(
                        "{}: mixed-sign vector {:?} in closure",
                        spec.name(),
                        y
                    )));
                };
                if !found.contains_key(&y) {
                    if roots.len() >= ROOT_GUARD {
                        return Err(Error::NonTerminatingClosure(ROOT_GUARD));
                    }
                    found.insert(y.clone(), ());
                    roots.push(y.clone());
                    queue.push_back(y);
                }
            }
        }

        let mut keyed = roots.into_iter().map(|r| Ok((r.height()?, r))).collect::<Result<Vec<_>>>()?;
        keyed.sort_by(|(ha, a), (hb, b)| ha.cmp(hb).then_with(|| b.coeffs.cmp(&a.coeffs)));
        let roots: Vec<Root<S>> = keyed.into_iter().map(|(_, r)| r).collect();
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let mut system = RootSystem { spec, gram, roots, index, inner: Vec::new(), reflections: Vec::new() };
        let len = system.len();
        let mut inner = Vec::with_capacity(len * len);
        for i in 0..len {
            for j in 0..len {
                inner.push(system.inner(&system.roots[i], &system.roots[j])?);
            }
        }
        system.inner = inner;
        system.reflections = (0..n).map(|i| system.reflection_perm(i)).collect::<Result<_>>()?;
        Ok(system)
    }

    pub fn spec(&self) -> &DiagramSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    /// Number of positive roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn gram(&self) -> &[Vec<S>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Root<S>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root<S> {
        &self.roots[i]
    }

    /// Simple root `i` sits at table index `i`.
    pub fn simple(&self, i: usize) -> &Root<S> {
        &self.roots[i]
    }

    pub fn index_of(&self, r: &Root<S>) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn inner(&self, x: &Root<S>, y: &Root<S>) -> Result<S> {
        let n = self.rank();
        if x.dim() != n || y.dim() != n {
            return Err(Error::DimensionMismatch(x.dim().max(y.dim()), n));
        }
        inner_with(&self.gram, x, y)
    }

    /// Inner product of two table roots.
    pub fn inner_idx(&self, i: usize, j: usize) -> S {
        self.inner[i * self.len() + j]
    }

    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        self.inner_idx(i, j).is_zero()
    }

    /// x − (x, mirror)·mirror.
    pub fn reflect(&self, mirror: &Root<S>, x: &Root<S>) -> Result<Root<S>> {
        let two = S::one() + S::one();
        if self.inner(mirror, mirror)? != two {
            return Err(Error::BadMirror);
        }
        reflect_with(&self.gram, mirror, x)
    }

    /// Positive representative and whether a sign flip was needed.
    pub fn to_positive(&self, x: &Root<S>) -> Result<(Root<S>, Sign)> {
        let s = self.locate(x)?;
        let sign = if s.is_negative() { Sign::Negative } else { Sign::Positive };
        Ok((self.roots[s.index()].clone(), sign))
    }

    /// Table index and sign of a root or its negative.
    pub fn locate(&self, x: &Root<S>) -> Result<SignedRoot> {
        if let Some(i) = self.index_of(x) {
            return Ok(SignedRoot::new(i, false));
        }
        let neg = x.checked_neg()?;
        self.index_of(&neg).map(|i| SignedRoot::new(i, true)).ok_or(Error::NotARoot)
    }

    /// Signed image of every positive root under simple reflection `i`.
    pub fn simple_reflection(&self, i: usize) -> &[SignedRoot] {
        &self.reflections[i]
    }

    /// Signed permutation of the reflection in table root `m`.
    pub fn reflection_perm(&self, m: usize) -> Result<Vec<SignedRoot>> {
        let mirror = &self.roots[m];
        self.roots.iter().map(|x| self.locate(&self.reflect(mirror, x)?)).collect()
    }

    /// Signed image of table root `i` under the given permutation data.
    pub fn signed_root(&self, s: SignedRoot) -> Result<Root<S>> {
        let r = &self.roots[s.index()];
        if s.is_negative() {
            r.checked_neg()
        } else {
            Ok(r.clone())
        }
    }
}

fn inner_with<S: Coefficient>(gram: &[Vec<S>], x: &Root<S>, y: &Root<S>) -> Result<S> {
    let mut acc = S::zero();
    for (i, xi) in x.coeffs.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.coeffs.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let t = xi.checked_mul(&gram[i][j]).and_then(|t| t.checked_mul(yj)).ok_or(Error::Overflow)?;
            acc = acc.checked_add(&t).ok_or(Error::Overflow)?;
        }
    }
    Ok(acc)
}

fn reflect_with<S: Coefficient>(gram: &[Vec<S>], mirror: &Root<S>, x: &Root<S>) -> Result<Root<S>> {
    let k = inner_with(gram, x, mirror)?;
    x.checked_sub(&mirror.checked_scale(k)?)
}
