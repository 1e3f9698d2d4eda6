//! Named profiles: every diagram for three, four and five countable models,
//! plus parametric families built with the product.
//!
//! The `fig2.*` entries are numbered in reading order: chains first
//! (`fig2.1` to `fig2.4`), then the remaining shapes (`fig2.5` to `fig2.8`).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::preorder::{Preorder, Vertex};
use crate::product::pareto_product;
use crate::profile::RkProfile;
use crate::validate::validate_profile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameters: &'static [&'static str],
    pub description: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    entry("fig1a", &[], "chain [0,1]; 3 models"),
    entry("fig1b.1", &[], "chain [0,2]; 4 models"),
    entry(
        "fig1b.2",
        &[],
        "least vertex below a 2-vertex class with IL 1; 4 models",
    ),
    entry("fig1b.3", &[], "chain [0,0,1]; 4 models"),
    entry("fig2.1", &[], "chain [0,3]; 5 models"),
    entry("fig2.2", &[], "chain [0,1,1]; 5 models"),
    entry("fig2.3", &[], "chain [0,0,2]; 5 models"),
    entry("fig2.4", &[], "chain [0,0,0,1]; 5 models"),
    entry(
        "fig2.5",
        &[],
        "least vertex below a 2-vertex class with IL 2; 5 models",
    ),
    entry(
        "fig2.6",
        &[],
        "least vertex below a 3-vertex class with IL 1; 5 models",
    ),
    entry(
        "fig2.7",
        &[],
        "chain of least, IL-0 vertex, 2-vertex class with IL 1; 5 models",
    ),
    entry("fig2.8", &[], "diamond with IL 0,0,0,1; 5 models"),
    entry("diamond4", &[], "alias of fig2.8"),
    entry("param.chain2", &["k"], "chain [0,k]; k+2 models"),
    entry("param.chain3end", &["k"], "chain [0,0,k]; k+3 models"),
    entry(
        "param.ex11",
        &["k", "m"],
        "(least + 2-class with IL k) x chain [0,m]; (k+3)(m+2) models",
    ),
    entry(
        "param.ex12",
        &["k", "m"],
        "(least + 2-class with IL k) x (least + 2-class with IL m); (k+3)(m+3) models",
    ),
];

const fn entry(
    name: &'static str,
    parameters: &'static [&'static str],
    description: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        parameters,
        description,
    }
}

/// The twelve fixed diagrams, without aliases or parametric entries.
pub const BASE_ENTRIES: [&str; 12] = [
    "fig1a", "fig1b.1", "fig1b.2", "fig1b.3", "fig2.1", "fig2.2", "fig2.3", "fig2.4", "fig2.5",
    "fig2.6", "fig2.7", "fig2.8",
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

/// Built base entries, in [`BASE_ENTRIES`] order.
pub fn base_profiles() -> Vec<(&'static str, RkProfile)> {
    BASE_ENTRIES
        .iter()
        .map(|&n| (n, get(n, &BTreeMap::new()).expect("base entries build")))
        .collect()
}

fn name_for(i: usize, n: usize) -> Vertex {
    let s = if n <= 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{i:02}")
    };
    Vertex::new(s).expect("generated names are identifiers")
}

fn admissible(profile: RkProfile) -> Result<RkProfile> {
    match validate_profile(&profile).first_failure() {
        None => Ok(profile),
        Some(s) => Err(Error::AdmissibilityViolation(s.to_string())),
    }
}

/// Linear order of singleton classes with the given limit counts, bottom
/// to top.
pub fn chain_profile(limit_counts: &[u64]) -> Result<RkProfile> {
    if limit_counts.is_empty() {
        return Err(Error::AdmissibilityViolation("empty chain".into()));
    }
    let n = limit_counts.len();
    let names: Vec<Vertex> = (0..n).map(|i| name_for(i, n)).collect();
    let steps = names.windows(2).map(|w| (w[0].clone(), w[1].clone()));
    let order = Preorder::close(names.clone(), steps.collect::<Vec<_>>())?;
    let profile = RkProfile::new(
        order,
        names
            .iter()
            .zip(limit_counts)
            .map(|(v, &l)| (v.as_str(), l)),
    )?;
    admissible(profile)
}

/// A least vertex (IL 0) below one class of `class_size` mutually dominated
/// vertices carrying `class_limit` limit models.
pub fn least_plus_class(class_size: usize, class_limit: u64) -> Result<RkProfile> {
    if class_size < 2 {
        return Err(Error::AdmissibilityViolation(format!(
            "class size {class_size} < 2"
        )));
    }
    let n = class_size + 1;
    let names: Vec<Vertex> = (0..n).map(|i| name_for(i, n)).collect();
    let mut steps = vec![(names[0].clone(), names[1].clone())];
    for i in 1..n {
        let next = if i + 1 < n { i + 1 } else { 1 };
        steps.push((names[i].clone(), names[next].clone()));
    }
    let order = Preorder::close(names.clone(), steps)?;
    let profile = RkProfile::new(
        order,
        [(names[0].as_str(), 0), (names[1].as_str(), class_limit)],
    )?;
    admissible(profile)
}

fn diamond() -> Result<RkProfile> {
    let v = |s: &str| Vertex::new(s).expect("identifier");
    let order = Preorder::close(
        ["a", "b", "c", "d"].map(v),
        [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")].map(|(x, y)| (v(x), v(y))),
    )?;
    admissible(RkProfile::new(
        order,
        [("a", 0), ("b", 0), ("c", 0), ("d", 1)],
    )?)
}

/// Least vertex, one IL-0 vertex, then a 2-vertex class with IL 1.
fn fig2_7() -> Result<RkProfile> {
    let v = |s: &str| Vertex::new(s).expect("identifier");
    let order = Preorder::close(
        ["a", "b", "c", "d"].map(v),
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "c")].map(|(x, y)| (v(x), v(y))),
    )?;
    admissible(RkProfile::new(order, [("a", 0), ("b", 0), ("c", 1)])?)
}

pub fn get(name: &str, parameters: &BTreeMap<String, u64>) -> Result<RkProfile> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    if let Some(extra) = parameters
        .keys()
        .find(|k| !entry.parameters.contains(&k.as_str()))
    {
        return Err(Error::UnexpectedParameter {
            entry: name.to_string(),
            name: extra.clone(),
        });
    }
    let param = |p: &str| -> Result<u64> {
        let value = *parameters.get(p).ok_or_else(|| Error::MissingParameter {
            entry: name.to_string(),
            name: p.to_string(),
        })?;
        if value == 0 {
            return Err(Error::AdmissibilityViolation(format!(
                "parameter {p} of `{name}` must be at least 1"
            )));
        }
        Ok(value)
    };
    match name {
        "fig1a" => chain_profile(&[0, 1]),
        "fig1b.1" => chain_profile(&[0, 2]),
        "fig1b.2" => least_plus_class(2, 1),
        "fig1b.3" => chain_profile(&[0, 0, 1]),
        "fig2.1" => chain_profile(&[0, 3]),
        "fig2.2" => chain_profile(&[0, 1, 1]),
        "fig2.3" => chain_profile(&[0, 0, 2]),
        "fig2.4" => chain_profile(&[0, 0, 0, 1]),
        "fig2.5" => least_plus_class(2, 2),
        "fig2.6" => least_plus_class(3, 1),
        "fig2.7" => fig2_7(),
        "fig2.8" | "diamond4" => diamond(),
        "param.chain2" => chain_profile(&[0, param("k")?]),
        "param.chain3end" => chain_profile(&[0, 0, param("k")?]),
        "param.ex11" => pareto_product(
            &least_plus_class(2, param("k")?)?,
            &chain_profile(&[0, param("m")?])?,
        ),
        "param.ex12" => pareto_product(
            &least_plus_class(2, param("k")?)?,
            &least_plus_class(2, param("m")?)?,
        ),
        _ => unreachable!("every listed entry has a builder"),
    }
}
