//! Admissible profiles with a given total, up to isomorphism.
//!
//! Every admissible quotient is a least singleton class below some poset of
//! middle classes below a greatest class. Middle posets are grown one
//! maximal element at a time: a poset on `m` elements is a poset on `m - 1`
//! plus a new maximal element whose down-set is an order ideal of the
//! smaller one. Sizes and limit counts are then spread over the classes and
//! the results deduplicated by canonical form.

use std::collections::{BTreeSet, HashSet};

use crate::canon::{canonical_form, CanonicalProfile, LabelledDag};
use crate::error::{Error, Result};
use crate::preorder::{Preorder, Vertex};
use crate::profile::RkProfile;

pub const DEFAULT_CAP: u64 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub total: u64,
    /// Sorted by canonical text.
    pub profiles: Vec<CanonicalProfile>,
}

impl EnumerationResult {
    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    max_vertices: Option<u64>,
    cap: u64,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            max_vertices: None,
            cap: DEFAULT_CAP,
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Upper bound on the vertex count. Defaults to the total.
    pub fn max_vertices(mut self, max: u64) -> Self {
        self.max_vertices = Some(max);
        self
    }

    /// Largest total accepted by [`run`](Self::run).
    pub fn cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn run(&self, total: u64) -> Result<EnumerationResult> {
        if total < 2 {
            return Err(Error::InvalidTotal {
                total,
                reason: "total must be at least 2".into(),
            });
        }
        if total > self.cap {
            return Err(Error::InvalidTotal {
                total,
                reason: format!("total exceeds the enumeration cap of {}", self.cap),
            });
        }
        let max_vertices = self.max_vertices.unwrap_or(total).min(total);
        let mut found = BTreeSet::new();
        let mut posets = vec![vec![Poset::empty()]];
        // bottom costs 1, top at least 2, each middle class at least 1
        for k in 2..total as usize {
            let middle = k - 2;
            while posets.len() <= middle {
                let next = extend_all(posets.last().expect("seeded"));
                posets.push(next);
            }
            for p in &posets[middle] {
                let below = frame(p);
                let mut labels = vec![(0, 0); k];
                assign(&below, k, 0, total, max_vertices, &mut labels, &mut found)?;
            }
        }
        Ok(EnumerationResult {
            total,
            profiles: found.into_iter().collect(),
        })
    }
}

pub fn enumerate_profiles(total: u64, max_vertices: Option<u64>) -> Result<EnumerationResult> {
    let mut e = Enumerator::new();
    if let Some(m) = max_vertices {
        e = e.max_vertices(m);
    }
    e.run(total)
}

/// Strict order on `0..m`, row-major.
#[derive(Debug, Clone)]
struct Poset {
    m: usize,
    below: Vec<bool>,
}

impl Poset {
    fn empty() -> Self {
        Poset {
            m: 0,
            below: Vec::new(),
        }
    }

    fn below(&self, x: usize, y: usize) -> bool {
        self.below[x * self.m + y]
    }

    fn ideals(&self) -> Vec<u32> {
        (0..1u32 << self.m)
            .filter(|&s| {
                (0..self.m).all(|y| {
                    s >> y & 1 == 0 || (0..self.m).all(|x| !self.below(x, y) || s >> x & 1 == 1)
                })
            })
            .collect()
    }

    fn with_top(&self, ideal: u32) -> Poset {
        let m = self.m + 1;
        let mut below = vec![false; m * m];
        for x in 0..self.m {
            for y in 0..self.m {
                below[x * m + y] = self.below(x, y);
            }
            below[x * m + self.m] = ideal >> x & 1 == 1;
        }
        Poset { m, below }
    }
}

fn extend_all(smaller: &[Poset]) -> Vec<Poset> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in smaller {
        for ideal in p.ideals() {
            let q = p.with_top(ideal);
            let key =
                LabelledDag::new(q.m, q.below.clone(), vec![(0, 0); q.m]).canonical_encoding();
            if seen.insert(key) {
                out.push(q);
            }
        }
    }
    out
}

/// Adds a least class 0 and a greatest class `m + 1` around the middle
/// poset, whose elements become classes `1..=m`.
fn frame(p: &Poset) -> Vec<bool> {
    let k = p.m + 2;
    let mut below = vec![false; k * k];
    for x in 0..p.m {
        for y in 0..p.m {
            below[(x + 1) * k + y + 1] = p.below(x, y);
        }
        below[x + 1] = true;
        below[(x + 1) * k + k - 1] = true;
    }
    below[k - 1] = true;
    below
}

/// Chooses (size, limit count) for class `i` onwards.
fn assign(
    below: &[bool],
    k: usize,
    i: usize,
    budget: u64,
    vertices_left: u64,
    labels: &mut [(u64, u64)],
    found: &mut BTreeSet<CanonicalProfile>,
) -> Result<()> {
    if i == k {
        if budget == 0 {
            found.insert(canonical_form(&build(below, labels))?);
        }
        return Ok(());
    }
    let top = i == k - 1;
    if i == 0 {
        labels[0] = (1, 0);
        return assign(below, k, 1, budget - 1, vertices_left - 1, labels, found);
    }
    // classes after this one each need a vertex; the top also needs a limit model
    let later = (k - 1 - i) as u64;
    let reserve = if top { 0 } else { later + 1 };
    for size in 1..=vertices_left.saturating_sub(later) {
        let Some(room) = budget.checked_sub(size + reserve) else {
            break;
        };
        let min_il = u64::from(top || size > 1);
        if top {
            // the last class takes whatever remains
            if room >= min_il {
                labels[i] = (size, room);
                assign(below, k, i + 1, 0, vertices_left - size, labels, found)?;
            }
            continue;
        }
        for il in min_il..=room {
            labels[i] = (size, il);
            assign(
                below,
                k,
                i + 1,
                budget - size - il,
                vertices_left - size,
                labels,
                found,
            )?;
        }
    }
    Ok(())
}

fn build(below: &[bool], labels: &[(u64, u64)]) -> RkProfile {
    let k = labels.len();
    let mut names = Vec::new();
    let mut class = Vec::new();
    for (c, &(size, _)) in labels.iter().enumerate() {
        for j in 0..size {
            names.push(Vertex::new(format!("c{c}_{j}")).expect("identifier"));
            class.push(c);
        }
    }
    let (order, perm) = Preorder::from_relation(names, |a, b| {
        class[a] == class[b] || below[class[a] * k + class[b]]
    })
    .expect("distinct names");
    let il: Vec<u64> = perm.iter().map(|&src| labels[class[src]].1).collect();
    RkProfile::from_vertex_il(order, |v| il[v])
}
