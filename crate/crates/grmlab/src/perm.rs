//! Permutation groups on the channel input alphabet `[q]`.
//!
//! Everything is fully materialized: closures, orbit computations, and
//! transitivity tests all enumerate elements directly, which is exhaustively
//! testable at the supported degrees (q ≤ 8).

use crate::gf::FieldSpec;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet, VecDeque};
use thiserror::Error;

/// Largest degree for which groups are materialized (|Sym(8)| = 40320).
pub const MAX_DEGREE: usize = 8;

#[derive(Debug, Error, PartialEq)]
pub enum PermError {
    #[error("{0:?} is not a permutation of [{1}]")]
    NotAPermutation(Vec<usize>, usize),
    #[error("degree {0} exceeds the materialization limit {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// A bijection of `[q]`, stored as its image array.
///
/// Serializes as a bare JSON array of images, e.g. `[1,2,0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, PermError> {
        let q = images.len();
        let mut seen = vec![false; q];
        for &y in &images {
            if y >= q || seen[y] {
                return Err(PermError::NotAPermutation(images.clone(), q));
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(sigma: Permutation) -> Vec<usize> {
        sigma.images
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        Self::try_from(images)
    }

    pub fn identity(q: usize) -> Self {
        Permutation { images: (0..q).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Functional composition: `self.compose(&t)` maps `x` to `self(t(x))`.
    pub fn compose(&self, t: &Permutation) -> Permutation {
        Permutation {
            images: t.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }
}

/// How far a group's action on `[q]` mixes points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transitivity {
    Intransitive,
    Transitive,
    DoublyTransitive,
}

/// A permutation group on `[q]` with its full element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    pub q: usize,
    pub generators: Vec<Permutation>,
    /// All elements, sorted by image tuple.
    pub elements: Vec<Permutation>,
}

fn factorial_usize(n: usize) -> usize {
    (1..=n).product::<usize>().max(1)
}

/// Closes `generators` under composition and inverse, materializing the
/// smallest group that contains them.
pub fn group_closure(q: usize, generators: Vec<Permutation>) -> Result<PermGroup, PermError> {
    if q > MAX_DEGREE {
        return Err(PermError::DegreeTooLarge(q));
    }
    for g in &generators {
        if g.degree() != q {
            return Err(PermError::DegreeMismatch(g.degree(), q));
        }
    }
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let id = Permutation::identity(q);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(s) = queue.pop_front() {
        for g in &generators {
            let next = g.compose(&s);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let elements: Vec<Permutation> = seen.into_iter().collect();
    debug_assert_eq!(factorial_usize(q) % elements.len(), 0);
    Ok(PermGroup { q, generators, elements })
}

impl PermGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.elements.binary_search(sigma).is_ok()
    }

    /// The orbit of `x`, sorted.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut orbit: BTreeSet<usize> = BTreeSet::new();
        for s in &self.elements {
            orbit.insert(s.apply(x));
        }
        orbit.into_iter().collect()
    }

    pub fn stabilizer_order(&self, x: usize) -> usize {
        self.elements.iter().filter(|s| s.apply(x) == x).count()
    }
}

/// Decides whether `g` acts transitively (one point orbit covers `[q]`) or
/// doubly transitively (one ordered-pair orbit covers all distinct pairs).
pub fn transitivity(g: &PermGroup) -> Transitivity {
    let q = g.q;
    if q <= 1 {
        return Transitivity::DoublyTransitive;
    }
    if g.orbit(0).len() < q {
        return Transitivity::Intransitive;
    }
    let mut pair_orbit: HashSet<(usize, usize)> = HashSet::new();
    for s in &g.elements {
        pair_orbit.insert((s.apply(0), s.apply(1)));
    }
    if pair_orbit.len() == q * (q - 1) {
        Transitivity::DoublyTransitive
    } else {
        Transitivity::Transitive
    }
}

/// The named groups attached to a field structure on `[q]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGroup {
    /// Translations `x ↦ x ⊞ b`: q elements, transitive, fixed-point-free off identity.
    Additive,
    /// Maps `x ↦ a·x ⊞ b` with `a ≠ 0`: q(q−1) elements, doubly transitive.
    Affine,
}

pub fn named_group(spec: &FieldSpec, which: NamedGroup) -> Result<PermGroup, PermError> {
    let q = spec.q;
    if q > MAX_DEGREE {
        return Err(PermError::DegreeTooLarge(q));
    }
    let mut generators = vec![];
    match which {
        NamedGroup::Additive => {
            for b in 1..q {
                generators.push(Permutation {
                    images: (0..q).map(|x| spec.add(x, b)).collect(),
                });
            }
        }
        NamedGroup::Affine => {
            for a in 1..q {
                for b in 0..q {
                    generators.push(Permutation {
                        images: (0..q).map(|x| spec.add(spec.mul(a, x), b)).collect(),
                    });
                }
            }
        }
    }
    group_closure(q, generators)
}

/// True iff every element of `h` lies in `g`.
pub fn contains_subgroup(g: &PermGroup, h: &PermGroup) -> Result<bool, PermError> {
    if g.q != h.q {
        return Err(PermError::DegreeMismatch(g.q, h.q));
    }
    Ok(h.elements.iter().all(|s| g.contains(s)))
}

/// The full symmetric group on `[q]`.
pub fn symmetric_group(q: usize) -> Result<PermGroup, PermError> {
    if q > MAX_DEGREE {
        return Err(PermError::DegreeTooLarge(q));
    }
    if q <= 1 {
        return group_closure(q, vec![]);
    }
    let swap = Permutation::new((0..q).map(|x| match x {
        0 => 1,
        1 => 0,
        other => other,
    }).collect())
    .unwrap();
    let cycle = Permutation::new((0..q).map(|x| (x + 1) % q).collect()).unwrap();
    group_closure(q, vec![swap, cycle])
}
