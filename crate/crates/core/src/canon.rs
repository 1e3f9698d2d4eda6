//! Canonical forms and isomorphism testing.
//!
//! Members of one mutual-domination class are interchangeable, so two
//! profiles are isomorphic exactly when their quotient posets are
//! isomorphic by a map preserving class size and limit count. The
//! canonical labelling therefore runs on the quotient: colour refinement
//! by (label, down-set, up-set) signatures, then individualisation of the
//! first non-singleton cell, keeping the least adjacency encoding over all
//! leaves. Twin classes (same label, same strict up- and down-sets) are
//! swapped by an automorphism, so only one twin per cell is branched on.

use std::fmt;

use crate::error::Result;
use crate::io::write_document;
use crate::preorder::{Preorder, Vertex};
use crate::profile::{QuotientPoset, RkProfile};
use crate::validate::require_admissible;

/// Serialised profile after canonical relabelling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalProfile {
    text: String,
}

impl CanonicalProfile {
    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.text.as_bytes()
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

impl fmt::Display for CanonicalProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

pub fn canonical_form(profile: &RkProfile) -> Result<CanonicalProfile> {
    require_admissible(profile)?;
    Ok(CanonicalProfile {
        text: write_document(&canonical_relabel(profile)),
    })
}

pub fn is_isomorphic(a: &RkProfile, b: &RkProfile) -> Result<bool> {
    require_admissible(a)?;
    require_admissible(b)?;
    if a.vertex_count() != b.vertex_count() || a.class_count() != b.class_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Renames every vertex by its canonical position. Works on any profile,
/// admissible or not.
pub fn canonical_relabel(profile: &RkProfile) -> RkProfile {
    let q = profile.quotient();
    let order = LabelledDag::from_quotient(q).canonical_order();
    let width = digits(order.len().saturating_sub(1));
    let mut names = Vec::with_capacity(profile.vertex_count());
    let mut class_pos = Vec::with_capacity(profile.vertex_count());
    for (p, &c) in order.iter().enumerate() {
        let size = q.class(c).size;
        for j in 0..size {
            let name = if size == 1 {
                format!("v{p:0width$}")
            } else {
                format!("v{p:0width$}_{j:0w$}", w = digits(size - 1))
            };
            names.push(Vertex::new(name).expect("generated names are identifiers"));
            class_pos.push(p);
        }
    }
    let leq = |a: usize, b: usize| {
        let (ca, cb) = (order[class_pos[a]], order[class_pos[b]]);
        q.below_or_equal(ca, cb)
    };
    // zero padding makes generation order the sorted order
    debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
    let (relabelled, _) =
        Preorder::from_relation(names, leq).expect("generated names are distinct");
    let mut by_vertex = Vec::with_capacity(relabelled.len());
    for &c in &order {
        by_vertex.extend(std::iter::repeat_n(q.class(c).limit_count, q.class(c).size));
    }
    RkProfile::from_vertex_il(relabelled, |v| by_vertex[v])
}

fn digits(mut n: usize) -> usize {
    let mut d = 1;
    while n >= 10 {
        n /= 10;
        d += 1;
    }
    d
}

/// A strict partial order with a label on each element.
#[derive(Debug, Clone)]
pub(crate) struct LabelledDag {
    k: usize,
    below: Vec<bool>,
    labels: Vec<(u64, u64)>,
}

type Best = Option<(Vec<u64>, Vec<usize>)>;

impl LabelledDag {
    pub(crate) fn new(k: usize, below: Vec<bool>, labels: Vec<(u64, u64)>) -> Self {
        debug_assert_eq!(below.len(), k * k);
        debug_assert_eq!(labels.len(), k);
        LabelledDag { k, below, labels }
    }

    pub(crate) fn from_quotient(q: &QuotientPoset) -> Self {
        let k = q.len();
        let mut below = vec![false; k * k];
        for x in 0..k {
            for y in 0..k {
                below[x * k + y] = q.below(x, y);
            }
        }
        let labels = q
            .classes()
            .iter()
            .map(|c| (c.size as u64, c.limit_count))
            .collect();
        LabelledDag::new(k, below, labels)
    }

    fn below(&self, x: usize, y: usize) -> bool {
        self.below[x * self.k + y]
    }

    /// Elements listed in canonical order.
    pub(crate) fn canonical_order(&self) -> Vec<usize> {
        if self.k == 0 {
            return Vec::new();
        }
        let twins = self.twin_leaders();
        let initial = self.initial_colours();
        let mut best: Best = None;
        self.search(initial, &twins, &mut best);
        best.expect("search reaches at least one leaf").1
    }

    /// Isomorphism-invariant key: equal iff the labelled orders are isomorphic.
    pub(crate) fn canonical_encoding(&self) -> Vec<u64> {
        self.encode(&self.canonical_order())
    }

    fn initial_colours(&self) -> Vec<u32> {
        let sigs: Vec<(u64, u64, usize, usize)> = (0..self.k)
            .map(|x| {
                let down = (0..self.k).filter(|&y| self.below(y, x)).count();
                let up = (0..self.k).filter(|&y| self.below(x, y)).count();
                (self.labels[x].0, self.labels[x].1, down, up)
            })
            .collect();
        rank(&sigs)
    }

    fn refine(&self, mut colours: Vec<u32>) -> Vec<u32> {
        let mut cells = count_cells(&colours);
        loop {
            let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..self.k)
                .map(|x| {
                    let mut down: Vec<u32> = (0..self.k)
                        .filter(|&y| self.below(y, x))
                        .map(|y| colours[y])
                        .collect();
                    let mut up: Vec<u32> = (0..self.k)
                        .filter(|&y| self.below(x, y))
                        .map(|y| colours[y])
                        .collect();
                    down.sort_unstable();
                    up.sort_unstable();
                    (colours[x], down, up)
                })
                .collect();
            colours = rank(&sigs);
            let next = count_cells(&colours);
            if next == cells {
                return colours;
            }
            cells = next;
        }
    }

    /// For each element, the smallest index of an element that is its twin.
    fn twin_leaders(&self) -> Vec<usize> {
        (0..self.k)
            .map(|x| (0..x).find(|&w| self.is_twin(w, x)).unwrap_or(x))
            .collect()
    }

    fn is_twin(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
            && !self.below(a, b)
            && !self.below(b, a)
            && (0..self.k).filter(|&z| z != a && z != b).all(|z| {
                self.below(z, a) == self.below(z, b) && self.below(a, z) == self.below(b, z)
            })
    }

    fn search(&self, colours: Vec<u32>, twins: &[usize], best: &mut Best) {
        let colours = self.refine(colours);
        let cells = count_cells(&colours);
        if cells == self.k {
            let mut order = vec![0; self.k];
            for (x, &c) in colours.iter().enumerate() {
                order[c as usize] = x;
            }
            let enc = self.encode(&order);
            if best.as_ref().is_none_or(|(b, _)| enc < *b) {
                *best = Some((enc, order));
            }
            return;
        }
        let mut sizes = vec![0usize; cells];
        for &c in &colours {
            sizes[c as usize] += 1;
        }
        let target = sizes
            .iter()
            .position(|&s| s > 1)
            .expect("partition is not discrete") as u32;
        let cell: Vec<usize> = (0..self.k).filter(|&x| colours[x] == target).collect();
        for &v in &cell {
            // a twin in the same cell gives an isomorphic subtree
            if cell.iter().any(|&w| w < v && twins[v] == twins[w]) {
                continue;
            }
            let next: Vec<u32> = colours
                .iter()
                .enumerate()
                .map(|(x, &c)| match c.cmp(&target) {
                    std::cmp::Ordering::Less => c,
                    std::cmp::Ordering::Greater => c + 1,
                    std::cmp::Ordering::Equal if x == v => c,
                    std::cmp::Ordering::Equal => c + 1,
                })
                .collect();
            self.search(next, twins, best);
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u64> {
        let k = self.k;
        let mut enc = Vec::with_capacity(1 + 2 * k + k * k.div_ceil(64));
        enc.push(k as u64);
        for &x in order {
            enc.push(self.labels[x].0);
            enc.push(self.labels[x].1);
        }
        for &x in order {
            let mut word = 0u64;
            let mut bits = 0;
            for &y in order {
                word = (word << 1) | u64::from(self.below(x, y));
                bits += 1;
                if bits == 64 {
                    enc.push(word);
                    word = 0;
                    bits = 0;
                }
            }
            if bits > 0 {
                enc.push(word);
            }
        }
        enc
    }
}

fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut uniq: Vec<T> = sigs.to_vec();
    uniq.sort();
    uniq.dedup();
    sigs.iter()
        .map(|s| uniq.binary_search(s).expect("present") as u32)
        .collect()
}

fn count_cells(colours: &[u32]) -> usize {
    colours.iter().max().map_or(0, |&m| m as usize + 1)
}
