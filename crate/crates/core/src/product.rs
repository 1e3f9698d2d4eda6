//! Pareto products of profiles, i.e. the profile of a disjoint union of
//! theories.
//!
//! The product preorder is componentwise. A product class arises from a
//! pair of factor classes `x`, `y`; it has `|x|·|y|` members and
//!
//! ```text
//! IL(z) = IL(x)·|y| + |x|·IL(y) + IL(x)·IL(y)
//! ```
//!
//! limit models. [`oracle_product`] recomputes the same profile by
//! enumerating model tokens, without using that formula.

use std::fmt::Write as _;

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::preorder::{Preorder, Vertex};
use crate::profile::RkProfile;
use crate::validate::{counts, require_admissible, DecompositionReport};

/// Limit count of the product class generated by classes of the given
/// sizes and limit counts.
pub fn product_class_limit(x_size: u64, x_limit: u64, y_size: u64, y_limit: u64) -> u64 {
    x_limit * y_size + x_size * y_limit + x_limit * y_limit
}

pub fn pareto_product(a: &RkProfile, b: &RkProfile) -> Result<RkProfile> {
    require_admissible(a)?;
    require_admissible(b)?;
    let (na, nb) = (a.vertex_count(), b.vertex_count());
    let names: Vec<Vertex> = (0..na * nb)
        .map(|i| Vertex::pair(a.order().vertex(i / nb), b.order().vertex(i % nb)))
        .collect();
    let (order, source) = Preorder::from_relation(names, |u, v| {
        a.order().leq(u / nb, v / nb) && b.order().leq(u % nb, v % nb)
    })?;
    let il: Vec<u64> = source
        .iter()
        .map(|&i| {
            let (sx, sy) = (
                a.quotient().class(a.class_of(i / nb)),
                b.quotient().class(b.class_of(i % nb)),
            );
            product_class_limit(
                sx.size as u64,
                sx.limit_count,
                sy.size as u64,
                sy.limit_count,
            )
        })
        .collect();
    Ok(RkProfile::from_vertex_il(order, |v| il[v]))
}

/// Left fold of [`pareto_product`].
pub fn product_many(factors: &[RkProfile]) -> Result<RkProfile> {
    let (first, rest) = factors.split_first().ok_or(Error::EmptyFactorList)?;
    require_admissible(first)?;
    rest.iter()
        .try_fold(first.clone(), |acc, f| pareto_product(&acc, f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Prime(usize),
    Limit(usize),
}

impl Token {
    fn is_limit(self) -> bool {
        matches!(self, Token::Limit(_))
    }
}

/// Reference computation of the product. The order is obtained by closing
/// the one-coordinate-at-a-time steps; each product class counts its limit
/// models by listing every pair of model tokens (one prime token per
/// member, one limit token per limit model of each factor class) and
/// keeping the pairs with at least one limit component.
pub fn oracle_product(a: &RkProfile, b: &RkProfile) -> Result<RkProfile> {
    require_admissible(a)?;
    require_admissible(b)?;
    let (oa, ob) = (a.order(), b.order());
    let name = |x: usize, y: usize| Vertex::pair(oa.vertex(x), ob.vertex(y));
    let mut steps = Vec::new();
    for y in 0..ob.len() {
        for x1 in 0..oa.len() {
            for x2 in 0..oa.len() {
                if x1 != x2 && oa.leq(x1, x2) {
                    steps.push((name(x1, y), name(x2, y)));
                }
            }
        }
    }
    for x in 0..oa.len() {
        for y1 in 0..ob.len() {
            for y2 in 0..ob.len() {
                if y1 != y2 && ob.leq(y1, y2) {
                    steps.push((name(x, y1), name(x, y2)));
                }
            }
        }
    }
    let vertices = (0..oa.len()).flat_map(|x| (0..ob.len()).map(move |y| (x, y)));
    let order = Preorder::close(vertices.map(|(x, y)| name(x, y)), steps)?;

    let tokens = |p: &RkProfile, c: usize| -> Vec<Token> {
        let members = p.class_members(c).iter().map(|&v| Token::Prime(v));
        let limits = (0..p.class_il(c) as usize).map(Token::Limit);
        members.chain(limits).collect()
    };
    let mut il = Vec::new();
    for cx in 0..a.class_count() {
        let tx = tokens(a, cx);
        for cy in 0..b.class_count() {
            let ty = tokens(b, cy);
            let mut limit = 0u64;
            let mut prime = 0usize;
            for &s in &tx {
                for &t in &ty {
                    if s.is_limit() || t.is_limit() {
                        limit += 1;
                    } else {
                        prime += 1;
                    }
                }
            }
            debug_assert_eq!(prime, a.class_members(cx).len() * b.class_members(cy).len());
            let rep = name(a.class_members(cx)[0], b.class_members(cy)[0]);
            il.push((rep, limit));
        }
    }
    // the pair of first members lies in the product class; the label
    // applies to the whole class
    RkProfile::new(order, il.iter().map(|(v, l)| (v.as_str(), *l)))
}

/// One row of a product decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTerm {
    /// Representative of the generating class in each factor.
    pub factor_classes: Vec<Vertex>,
    pub size: u64,
    pub limit_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductDecomposition {
    pub factor_reports: Vec<DecompositionReport>,
    pub product_report: DecompositionReport,
    /// Ordered lexicographically by factor-class representative tuples.
    pub term_table: Vec<ProductTerm>,
}

impl ProductDecomposition {
    /// Equation in the form `3·4=4+8=2·2+(0+1+2+5)`. Limit terms are listed
    /// in ascending order.
    pub fn equation(&self) -> String {
        let totals = self.join_factors(|r| r.total);
        let primes = self.join_factors(|r| r.prime_count);
        let mut limits: Vec<u64> = self.term_table.iter().map(|t| t.limit_count).collect();
        limits.sort_unstable();
        let limits: Vec<String> = limits.iter().map(u64::to_string).collect();
        let mut out = String::new();
        write!(
            out,
            "{totals}={}+{}={primes}+({})",
            self.product_report.prime_count,
            self.product_report.limit_count,
            limits.join("+")
        )
        .unwrap();
        out
    }

    fn join_factors(&self, f: impl Fn(&DecompositionReport) -> u64) -> String {
        if self.factor_reports.is_empty() {
            return f(&self.product_report).to_string();
        }
        self.factor_reports
            .iter()
            .map(|r| f(r).to_string())
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// Per-class decomposition of `profile`. With `factors`, the profile must be
/// isomorphic to their product and the table lists one row per tuple of
/// factor classes; without, each class is its own row.
pub fn decomposition(
    profile: &RkProfile,
    factors: Option<&[RkProfile]>,
) -> Result<ProductDecomposition> {
    let product_report = counts(profile)?;
    let Some(factors) = factors else {
        let q = profile.quotient();
        let term_table = q
            .classes()
            .iter()
            .map(|c| ProductTerm {
                factor_classes: vec![c.representative.clone()],
                size: c.size as u64,
                limit_count: c.limit_count,
            })
            .collect();
        return Ok(ProductDecomposition {
            factor_reports: Vec::new(),
            product_report,
            term_table,
        });
    };
    let factor_reports = factors.iter().map(counts).collect::<Result<Vec<_>>>()?;
    let expected = product_many(factors)?;
    if !is_isomorphic(profile, &expected)? {
        return Err(Error::FactorMismatch);
    }

    // factor class indices follow representative order, so an odometer
    // over class indices walks the tuples lexicographically
    let mut term_table = Vec::new();
    let mut idx = vec![0usize; factors.len()];
    'outer: loop {
        let mut size = 1u64;
        let mut limit = 0u64;
        let mut reps = Vec::with_capacity(factors.len());
        for (f, &c) in factors.iter().zip(&idx) {
            let s = f.quotient().class(c);
            limit = product_class_limit(size, limit, s.size as u64, s.limit_count);
            size *= s.size as u64;
            reps.push(s.representative.clone());
        }
        term_table.push(ProductTerm {
            factor_classes: reps,
            size,
            limit_count: limit,
        });
        for i in (0..idx.len()).rev() {
            idx[i] += 1;
            if idx[i] < factors[i].class_count() {
                continue 'outer;
            }
            idx[i] = 0;
        }
        break;
    }

    let prime_product: u64 = factor_reports.iter().map(|r| r.prime_count).product();
    let total_product: u64 = factor_reports.iter().map(|r| r.total).product();
    let prime_sum: u64 = term_table.iter().map(|t| t.size).sum();
    let limit_sum: u64 = term_table.iter().map(|t| t.limit_count).sum();
    if prime_product != product_report.prime_count
        || total_product != product_report.total
        || prime_sum != product_report.prime_count
        || limit_sum != product_report.limit_count
    {
        return Err(Error::FactorMismatch);
    }
    Ok(ProductDecomposition {
        factor_reports,
        product_report,
        term_table,
    })
}
