//! Vertices and finite preorders.
//!
//! A [`Preorder`] keeps its vertices sorted by name, so vertex indices and
//! name order coincide. The relation is stored as a dense reflexive,
//! transitive boolean matrix; `leq(a, b)` reads "a is dominated by b".

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Separator used when forming product vertex names.
pub const PAIR_SEPARATOR: char = '*';

/// Name of an isomorphism type of a prime model.
///
/// A name is one or more segments of `[A-Za-z0-9_]+` joined by `*`. Plain
/// input files normally use single-segment names; compound names are what
/// [`pareto_product`](crate::product::pareto_product) produces.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(String);

impl Vertex {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.split(PAIR_SEPARATOR).all(is_plain_identifier) {
            Ok(Vertex(name))
        } else {
            Err(Error::InvalidName(name))
        }
    }

    /// The product vertex `a*b`.
    pub fn pair(a: &Vertex, b: &Vertex) -> Self {
        Vertex(format!("{}{}{}", a.0, PAIR_SEPARATOR, b.0))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// True if the name has no `*` segments.
    pub fn is_plain(&self) -> bool {
        !self.0.contains(PAIR_SEPARATOR)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Vertex::new(s)
    }
}

fn is_plain_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// A reflexive, transitive relation on a finite set of named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    vertices: Vec<Vertex>,
    // row-major n*n; leq[a*n + b] iff a <= b
    leq: Vec<bool>,
}

impl Preorder {
    /// Least reflexive-transitive relation on `vertices` containing every
    /// generating pair.
    pub fn close<V, P>(vertices: V, generating_pairs: P) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        P: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = BTreeSet::new();
        for v in vertices {
            if let Some(dup) = seen.replace(v) {
                return Err(Error::DuplicateVertex(dup.0));
            }
        }
        let vertices: Vec<Vertex> = seen.into_iter().collect();
        let n = vertices.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in generating_pairs {
            let ia = vertices
                .binary_search(&a)
                .map_err(|_| Error::UnknownVertex(a.0.clone()))?;
            let ib = vertices
                .binary_search(&b)
                .map_err(|_| Error::UnknownVertex(b.0.clone()))?;
            leq[ia * n + ib] = true;
        }
        warshall(&mut leq, n);
        Ok(Preorder { vertices, leq })
    }

    /// Builds a preorder from an already reflexive and transitive relation
    /// given over `vertices` in arbitrary order. Also returns, for each
    /// sorted position, the input index it came from.
    pub(crate) fn from_relation(
        vertices: Vec<Vertex>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<(Self, Vec<usize>)> {
        let n = vertices.len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        if let Some(w) = perm.windows(2).find(|w| vertices[w[0]] == vertices[w[1]]) {
            return Err(Error::DuplicateVertex(vertices[w[0]].0.clone()));
        }
        let mut rel = vec![false; n * n];
        for (i, &pi) in perm.iter().enumerate() {
            for (j, &pj) in perm.iter().enumerate() {
                rel[i * n + j] = leq(pi, pj);
            }
        }
        debug_assert!(is_preorder(&rel, n));
        let sorted: Vec<Vertex> = perm.iter().map(|&p| vertices[p].clone()).collect();
        Ok((
            Preorder {
                vertices: sorted,
                leq: rel,
            },
            perm,
        ))
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(name))
            .ok()
    }

    pub fn position(&self, v: &Vertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// `a` is dominated by `b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.vertices.len() + b]
    }

    /// Mutual domination.
    pub fn equivalent(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) && self.leq(b, a)
    }

    /// Strict domination: `a <= b` but not `b <= a`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) && !self.leq(b, a)
    }
}

fn warshall(rel: &mut [bool], n: usize) {
    for k in 0..n {
        for i in 0..n {
            if !rel[i * n + k] {
                continue;
            }
            for j in 0..n {
                if rel[k * n + j] {
                    rel[i * n + j] = true;
                }
            }
        }
    }
}

fn is_preorder(rel: &[bool], n: usize) -> bool {
    (0..n).all(|i| rel[i * n + i])
        && (0..n).all(|a| {
            (0..n).all(|b| !rel[a * n + b] || (0..n).all(|c| !rel[b * n + c] || rel[a * n + c]))
        })
}

/// Free-function form of [`Preorder::close`].
pub fn close_preorder<V, P>(vertices: V, generating_pairs: P) -> Result<Preorder>
where
    V: IntoIterator<Item = Vertex>,
    P: IntoIterator<Item = (Vertex, Vertex)>,
{
    Preorder::close(vertices, generating_pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Vertex {
        Vertex::new(s).unwrap()
    }

    #[test]
    fn names() {
        assert!(Vertex::new("a_1").is_ok());
        assert!(Vertex::new("a*b*c").is_ok());
        for bad in ["", "a b", "a-b", "*a", "a*", "a**b", "é"] {
            assert_eq!(
                Vertex::new(bad),
                Err(Error::InvalidName(bad.into())),
                "{bad:?}"
            );
        }
        assert!(v("a").is_plain());
        assert!(!Vertex::pair(&v("a"), &v("b")).is_plain());
        assert_eq!(Vertex::pair(&v("a"), &v("b")).as_str(), "a*b");
    }

    #[test]
    fn reflexive_closure_only() {
        let p = Preorder::close([v("a")], []).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.leq(0, 0));
    }

    #[test]
    fn transitive_closure() {
        let p = Preorder::close(
            [v("c"), v("b"), v("a")],
            [(v("a"), v("b")), (v("b"), v("c"))],
        )
        .unwrap();
        let (a, c) = (p.index_of("a").unwrap(), p.index_of("c").unwrap());
        assert!(p.leq(a, c));
        assert!(!p.leq(c, a));
        assert!(p.lt(a, c));
    }

    #[test]
    fn symmetric_cycle_is_one_class() {
        let p = Preorder::close([v("a"), v("b")], [(v("a"), v("b")), (v("b"), v("a"))]).unwrap();
        assert!(p.equivalent(0, 1));
        assert!(!p.lt(0, 1));
    }

    #[test]
    fn unknown_and_duplicate_vertices() {
        assert_eq!(
            Preorder::close([v("a")], [(v("a"), v("z"))]),
            Err(Error::UnknownVertex("z".into()))
        );
        assert_eq!(
            Preorder::close([v("a"), v("a")], []),
            Err(Error::DuplicateVertex("a".into()))
        );
    }

    #[test]
    fn vertices_sorted_by_name() {
        let p = Preorder::close([v("b"), v("a"), v("a*b")], []).unwrap();
        let names: Vec<&str> = p.vertices().iter().map(Vertex::as_str).collect();
        assert_eq!(names, ["a", "a*b", "b"]);
        assert_eq!(p.position(&v("b")), Some(2));
        assert_eq!(p.index_of("q"), None);
    }
}
