//! IL-labelled preorders and their quotient posets.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::preorder::{Preorder, Vertex};

/// One mutual-domination class of a profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSummary {
    /// Lexicographically least member.
    pub representative: Vertex,
    pub size: usize,
    pub limit_count: u64,
}

/// The partial order of mutual-domination classes.
///
/// Class `i` of the quotient is class `i` of the profile it came from;
/// classes are ordered by representative name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPoset {
    classes: Vec<ClassSummary>,
    // k*k strict order, below[x*k + y] iff x < y
    below: Vec<bool>,
}

impl QuotientPoset {
    pub(crate) fn new(classes: Vec<ClassSummary>, below: Vec<bool>) -> Self {
        debug_assert_eq!(below.len(), classes.len() * classes.len());
        QuotientPoset { classes, below }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ClassSummary] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &ClassSummary {
        &self.classes[i]
    }

    /// Strict order: `x` is strictly below `y`.
    pub fn below(&self, x: usize, y: usize) -> bool {
        self.below[x * self.classes.len() + y]
    }

    pub fn below_or_equal(&self, x: usize, y: usize) -> bool {
        x == y || self.below(x, y)
    }

    pub fn down_count(&self, x: usize) -> usize {
        (0..self.len()).filter(|&y| self.below(y, x)).count()
    }

    pub fn up_count(&self, x: usize) -> usize {
        (0..self.len()).filter(|&y| self.below(x, y)).count()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.down_count(x) == 0)
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up_count(x) == 0).collect()
    }

    /// The least class, if there is exactly one minimal class.
    pub fn least(&self) -> Option<usize> {
        match self.minimal().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// The greatest class, if there is exactly one maximal class.
    pub fn greatest(&self) -> Option<usize> {
        match self.maximal().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// `y` covers `x`: `x < y` with nothing strictly between.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.below(x, y) && !(0..self.len()).any(|z| self.below(x, z) && self.below(z, y))
    }

    /// Hasse edges `(lower, upper)` in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for x in 0..k {
            for y in 0..k {
                if self.covers(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Length of the longest chain from a minimal class up to `x`, per class.
    pub fn depths(&self) -> Vec<usize> {
        let order = self.topological_order();
        let mut depth = vec![0; self.len()];
        for &y in &order {
            for &x in &order {
                if self.below(x, y) {
                    depth[y] = depth[y].max(depth[x] + 1);
                }
            }
        }
        depth
    }

    /// Linear extension; among available classes the one with the smallest
    /// index (i.e. representative name) comes first.
    pub fn topological_order(&self) -> Vec<usize> {
        let k = self.len();
        let mut remaining: Vec<usize> = (0..k).map(|x| self.down_count(x)).collect();
        let mut done = vec![false; k];
        let mut order = Vec::with_capacity(k);
        while order.len() < k {
            let next = (0..k)
                .find(|&x| !done[x] && remaining[x] == 0)
                .expect("strict order is acyclic");
            done[next] = true;
            order.push(next);
            for (y, r) in remaining.iter_mut().enumerate() {
                if self.below(next, y) {
                    *r -= 1;
                }
            }
        }
        order
    }
}

/// A finite preorder with a limit-model count on every mutual-domination
/// class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RkProfile {
    order: Preorder,
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    quotient: QuotientPoset,
}

impl RkProfile {
    /// Attaches limit counts to classes. Each `(name, count)` pair labels the
    /// class containing `name`; every class needs exactly one label.
    pub fn new<I, S>(order: Preorder, il: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, u64)>,
        S: AsRef<str>,
    {
        let (class_of, members) = classes_of(&order);
        let mut labels: Vec<Option<u64>> = vec![None; members.len()];
        for (name, count) in il {
            let name = name.as_ref();
            let v = order
                .index_of(name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            let slot = &mut labels[class_of[v]];
            if slot.is_some() {
                return Err(Error::DuplicateIl(name.to_string()));
            }
            *slot = Some(count);
        }
        let il = labels
            .iter()
            .zip(&members)
            .map(|(l, m)| l.ok_or_else(|| Error::MissingIl(order.vertex(m[0]).to_string())))
            .collect::<Result<Vec<u64>>>()?;
        Ok(Self::assemble(order, class_of, members, il))
    }

    /// Builds a profile when the limit count is known per vertex.
    /// Members of one class must carry equal values.
    pub(crate) fn from_vertex_il(order: Preorder, il: impl Fn(usize) -> u64) -> Self {
        let (class_of, members) = classes_of(&order);
        let labels: Vec<u64> = members.iter().map(|m| il(m[0])).collect();
        debug_assert!(members
            .iter()
            .zip(&labels)
            .all(|(m, &l)| m.iter().all(|&v| il(v) == l)));
        Self::assemble(order, class_of, members, labels)
    }

    fn assemble(
        order: Preorder,
        class_of: Vec<usize>,
        members: Vec<Vec<usize>>,
        il: Vec<u64>,
    ) -> Self {
        let k = members.len();
        let mut below = vec![false; k * k];
        for x in 0..k {
            for y in 0..k {
                below[x * k + y] = x != y && order.leq(members[x][0], members[y][0]);
            }
        }
        let classes = members
            .iter()
            .zip(il)
            .map(|(m, limit_count)| ClassSummary {
                representative: order.vertex(m[0]).clone(),
                size: m.len(),
                limit_count,
            })
            .collect();
        RkProfile {
            order,
            class_of,
            members,
            quotient: QuotientPoset::new(classes, below),
        }
    }

    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn quotient(&self) -> &QuotientPoset {
        &self.quotient
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn class_count(&self) -> usize {
        self.members.len()
    }

    pub fn class_of(&self, vertex: usize) -> usize {
        self.class_of[vertex]
    }

    /// Vertex indices of class `c`, ascending.
    pub fn class_members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn class_il(&self, c: usize) -> u64 {
        self.quotient.classes[c].limit_count
    }

    /// Limit count of the class containing `name`.
    pub fn il_of(&self, name: &str) -> Option<u64> {
        self.order
            .index_of(name)
            .map(|v| self.class_il(self.class_of[v]))
    }

    /// Class representative name to limit count.
    pub fn il_map(&self) -> BTreeMap<Vertex, u64> {
        self.quotient
            .classes
            .iter()
            .map(|c| (c.representative.clone(), c.limit_count))
            .collect()
    }
}

/// Mutual-domination classes. Classes are numbered in order of their least
/// member; members are ascending.
fn classes_of(order: &Preorder) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = order.len();
    let mut class_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let c = members.len();
        let m: Vec<usize> = (v..n).filter(|&u| order.equivalent(v, u)).collect();
        for &u in &m {
            class_of[u] = c;
        }
        members.push(m);
    }
    (class_of, members)
}

/// Free-function form of [`RkProfile::quotient`].
pub fn quotient(profile: &RkProfile) -> QuotientPoset {
    profile.quotient().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Vertex {
        Vertex::new(s).unwrap()
    }

    fn profile(names: &[&str], le: &[(&str, &str)], il: &[(&str, u64)]) -> RkProfile {
        let order = Preorder::close(
            names.iter().map(|n| v(n)),
            le.iter().map(|(a, b)| (v(a), v(b))),
        )
        .unwrap();
        RkProfile::new(order, il.iter().copied()).unwrap()
    }

    #[test]
    fn two_chain_quotient() {
        let p = profile(&["a", "b"], &[("a", "b")], &[("a", 0), ("b", 1)]);
        let q = p.quotient();
        assert_eq!(q.len(), 2);
        assert!(q.below(0, 1));
        assert!(!q.below(1, 0));
        assert_eq!(q.least(), Some(0));
        assert_eq!(q.greatest(), Some(1));
        assert_eq!(q.class(1).limit_count, 1);
        assert_eq!(q.cover_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn oval_top_class() {
        let p = profile(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "b")],
            &[("a", 0), ("c", 1)],
        );
        let q = p.quotient();
        let sizes: Vec<usize> = q.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, [1, 2]);
        assert_eq!(q.class(1).representative.as_str(), "b");
        assert_eq!(p.il_of("b"), Some(1));
        assert_eq!(p.class_members(1), &[1, 2]);
    }

    #[test]
    fn single_vertex() {
        let p = profile(&["a"], &[], &[("a", 0)]);
        let q = p.quotient();
        assert_eq!(q.len(), 1);
        assert!(q.cover_pairs().is_empty());
        assert_eq!(q.least(), q.greatest());
    }

    #[test]
    fn il_declaration_errors() {
        let order =
            Preorder::close([v("a"), v("b")], [(v("a"), v("b")), (v("b"), v("a"))]).unwrap();
        assert_eq!(
            RkProfile::new(order.clone(), [("a", 0), ("b", 1)]),
            Err(Error::DuplicateIl("b".into()))
        );
        assert_eq!(
            RkProfile::new(order.clone(), Vec::<(&str, u64)>::new()),
            Err(Error::MissingIl("a".into()))
        );
        assert_eq!(
            RkProfile::new(order, [("x", 0)]),
            Err(Error::UnknownVertex("x".into()))
        );
    }

    #[test]
    fn depths_and_topological_order() {
        // diamond a < b, c < d
        let p = profile(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
            &[("a", 0), ("b", 0), ("c", 0), ("d", 1)],
        );
        let q = p.quotient();
        assert_eq!(q.depths(), [0, 1, 1, 2]);
        assert_eq!(q.topological_order(), [0, 1, 2, 3]);
        assert_eq!(q.cover_pairs(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(!q.covers(0, 3));
    }
}
