//! Order-theoretic predicates on quotients: lattice, Boolean lattice, and
//! monotonicity of class size and limit count along the order.

use std::fmt;

use crate::error::{Error, Result};
use crate::profile::{QuotientPoset, RkProfile};
use crate::validate::require_admissible;

/// Least element of `set` under the quotient order, if any.
fn least_of(q: &QuotientPoset, set: &[usize]) -> Option<usize> {
    let &cand = set.iter().min_by_key(|&&x| q.down_count(x))?;
    set.iter()
        .all(|&y| q.below_or_equal(cand, y))
        .then_some(cand)
}

fn greatest_of(q: &QuotientPoset, set: &[usize]) -> Option<usize> {
    let &cand = set.iter().min_by_key(|&&x| q.up_count(x))?;
    set.iter()
        .all(|&y| q.below_or_equal(y, cand))
        .then_some(cand)
}

fn join(q: &QuotientPoset, x: usize, y: usize) -> Option<usize> {
    let upper: Vec<usize> = (0..q.len())
        .filter(|&z| q.below_or_equal(x, z) && q.below_or_equal(y, z))
        .collect();
    least_of(q, &upper)
}

fn meet(q: &QuotientPoset, x: usize, y: usize) -> Option<usize> {
    let lower: Vec<usize> = (0..q.len())
        .filter(|&z| q.below_or_equal(z, x) && q.below_or_equal(z, y))
        .collect();
    greatest_of(q, &lower)
}

/// Join and meet tables of a lattice.
struct Tables {
    k: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl Tables {
    fn build(q: &QuotientPoset) -> Option<Self> {
        let k = q.len();
        if k == 0 {
            return None;
        }
        let mut join_t = vec![0; k * k];
        let mut meet_t = vec![0; k * k];
        for x in 0..k {
            for y in x..k {
                let j = join(q, x, y)?;
                let m = meet(q, x, y)?;
                join_t[x * k + y] = j;
                join_t[y * k + x] = j;
                meet_t[x * k + y] = m;
                meet_t[y * k + x] = m;
            }
        }
        Some(Tables {
            k,
            join: join_t,
            meet: meet_t,
        })
    }

    fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.k + y]
    }

    fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.k + y]
    }
}

/// Every pair of classes has a least upper bound and a greatest lower bound.
pub fn is_lattice(q: &QuotientPoset) -> bool {
    Tables::build(q).is_some()
}

/// Distributive and complemented.
pub fn is_boolean_lattice(q: &QuotientPoset) -> Result<bool> {
    let t = Tables::build(q).ok_or(Error::NotALattice)?;
    let k = t.k;
    let bottom = q.least().expect("lattices have a least element");
    let top = q.greatest().expect("lattices have a greatest element");
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if t.meet(a, t.join(b, c)) != t.join(t.meet(a, b), t.meet(a, c)) {
                    return Ok(false);
                }
            }
        }
    }
    let complemented =
        (0..k).all(|a| (0..k).any(|b| t.meet(a, b) == bottom && t.join(a, b) == top));
    Ok(complemented)
}

/// How a quantity behaves along the strict order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Monotone {
    /// Decreases somewhere.
    None,
    /// Never decreases.
    Weak,
    /// Strictly increases on every strictly comparable pair.
    Strict,
}

impl fmt::Display for Monotone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Monotone::None => "none",
            Monotone::Weak => "weak",
            Monotone::Strict => "strict",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monotonicity {
    pub size: Monotone,
    pub limit: Monotone,
}

/// Classify a quantity over every strictly comparable pair `x < y`.
/// Incomparable pairs impose nothing; with no comparable pairs the result
/// is `Strict`.
pub fn classify<T: Ord>(q: &QuotientPoset, value: impl Fn(usize) -> T) -> Monotone {
    let mut flag = Monotone::Strict;
    for x in 0..q.len() {
        for y in 0..q.len() {
            if !q.below(x, y) {
                continue;
            }
            match value(x).cmp(&value(y)) {
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => flag = flag.min(Monotone::Weak),
                std::cmp::Ordering::Greater => return Monotone::None,
            }
        }
    }
    flag
}

pub fn monotonicity(profile: &RkProfile) -> Result<Monotonicity> {
    require_admissible(profile)?;
    let q = profile.quotient();
    Ok(Monotonicity {
        size: classify(q, |c| q.class(c).size),
        limit: classify(q, |c| q.class(c).limit_count),
    })
}
