//! Admissibility conditions and the decomposition counts.
//!
//! A profile is *admissible* when V1–V5 hold. These are necessary
//! conditions on the countable-model distribution of an Ehrenfeucht
//! theory; nothing here claims that an admissible profile is realised by
//! some theory. V6 (at least two countable models) is informational only.

use std::fmt;

use crate::error::{Error, Result};
use crate::preorder::Vertex;
use crate::profile::RkProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// Unique least class.
    V1,
    /// Least class is a singleton with no limit models.
    V2,
    /// Unique greatest class.
    V3,
    /// With more than one vertex, the greatest class has a limit model.
    V4,
    /// Every class with more than one member has a limit model.
    V5,
    /// At least two countable models in total.
    V6,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::V1,
        Condition::V2,
        Condition::V3,
        Condition::V4,
        Condition::V5,
        Condition::V6,
    ];

    pub fn description(self) -> &'static str {
        match self {
            Condition::V1 => "unique least class",
            Condition::V2 => "least class is a singleton with IL=0",
            Condition::V3 => "unique greatest class",
            Condition::V4 => "greatest class has IL>=1 when there are several vertices",
            Condition::V5 => "every class of size>1 has IL>=1",
            Condition::V6 => "Ehrenfeucht range: total >= 2 (informational)",
        }
    }

    /// Whether the condition counts towards admissibility.
    pub fn is_required(self) -> bool {
        self != Condition::V6
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    /// Could not be evaluated because a prerequisite failed.
    Skipped(String),
}

impl Status {
    pub fn passed(&self) -> bool {
        matches!(self, Status::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionStatus {
    pub condition: Condition,
    pub status: Status,
}

impl fmt::Display for ConditionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.condition;
        match &self.status {
            Status::Pass => write!(f, "{c} pass {}", c.description()),
            Status::Fail(why) => write!(f, "{c} FAIL {}: {why}", c.description()),
            Status::Skipped(why) => write!(f, "{c} skip {}: {why}", c.description()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub conditions: Vec<ConditionStatus>,
}

impl ValidationReport {
    pub fn status(&self, condition: Condition) -> &Status {
        &self
            .conditions
            .iter()
            .find(|s| s.condition == condition)
            .expect("every condition is reported")
            .status
    }

    pub fn passed(&self, condition: Condition) -> bool {
        self.status(condition).passed()
    }

    /// V1–V5 all pass.
    pub fn is_admissible(&self) -> bool {
        self.conditions
            .iter()
            .filter(|s| s.condition.is_required())
            .all(|s| s.status.passed())
    }

    /// First required condition that did not pass.
    pub fn first_failure(&self) -> Option<&ConditionStatus> {
        self.conditions
            .iter()
            .find(|s| s.condition.is_required() && !s.status.passed())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.conditions {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

fn names(profile: &RkProfile, classes: &[usize]) -> String {
    classes
        .iter()
        .map(|&c| format!("`{}`", profile.quotient().class(c).representative))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn validate_profile(profile: &RkProfile) -> ValidationReport {
    let q = profile.quotient();
    let mut out = Vec::with_capacity(6);
    let mut push = |condition, status| out.push(ConditionStatus { condition, status });

    let least = q.least();
    push(
        Condition::V1,
        match (least, q.is_empty()) {
            (_, true) => Status::Fail("profile has no vertices".into()),
            (Some(_), _) => Status::Pass,
            (None, _) => Status::Fail(format!("minimal classes {}", names(profile, &q.minimal()))),
        },
    );
    push(
        Condition::V2,
        match least {
            None => Status::Skipped("no least class".into()),
            Some(c) => {
                let s = q.class(c);
                if s.size != 1 {
                    Status::Fail(format!(
                        "least class `{}` has size {}",
                        s.representative, s.size
                    ))
                } else if s.limit_count != 0 {
                    Status::Fail(format!(
                        "least class `{}` has IL={}",
                        s.representative, s.limit_count
                    ))
                } else {
                    Status::Pass
                }
            }
        },
    );

    let greatest = q.greatest();
    push(
        Condition::V3,
        match (greatest, q.is_empty()) {
            (_, true) => Status::Fail("profile has no vertices".into()),
            (Some(_), _) => Status::Pass,
            (None, _) => Status::Fail(format!("maximal classes {}", names(profile, &q.maximal()))),
        },
    );
    push(
        Condition::V4,
        match greatest {
            None => Status::Skipped("no greatest class".into()),
            Some(c) => {
                let s = q.class(c);
                if profile.vertex_count() > 1 && s.limit_count == 0 {
                    Status::Fail(format!("greatest class `{}` has IL=0", s.representative))
                } else {
                    Status::Pass
                }
            }
        },
    );

    let offenders: Vec<usize> = (0..q.len())
        .filter(|&c| q.class(c).size > 1 && q.class(c).limit_count == 0)
        .collect();
    push(
        Condition::V5,
        if offenders.is_empty() {
            Status::Pass
        } else {
            Status::Fail(format!("IL=0 on classes {}", names(profile, &offenders)))
        },
    );

    let total = total_models(profile);
    push(
        Condition::V6,
        if total >= 2 {
            Status::Pass
        } else {
            Status::Fail(format!("total is {total}"))
        },
    );
    ValidationReport { conditions: out }
}

fn total_models(profile: &RkProfile) -> u64 {
    profile.vertex_count() as u64
        + profile
            .quotient()
            .classes()
            .iter()
            .map(|c| c.limit_count)
            .sum::<u64>()
}

/// Fails with [`Error::InvalidProfile`] naming the first failing condition.
pub fn require_admissible(profile: &RkProfile) -> Result<()> {
    let report = validate_profile(profile);
    match report.first_failure() {
        None => Ok(()),
        Some(s) => Err(Error::InvalidProfile(s.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTerm {
    pub representative: Vertex,
    pub size: usize,
    pub limit_count: u64,
}

/// Totals of the decomposition `I = I_p + I_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Number of prime models over tuples, i.e. vertices.
    pub prime_count: u64,
    /// Number of limit models, summed over classes.
    pub limit_count: u64,
    pub total: u64,
    /// Per-class terms, in topological order with ties broken by name.
    pub class_terms: Vec<ClassTerm>,
}

impl DecompositionReport {
    /// `"12 = 4 + 8"`.
    pub fn equation(&self) -> String {
        format!(
            "{} = {} + {}",
            self.total, self.prime_count, self.limit_count
        )
    }

    /// Limit counts of all classes, ascending.
    pub fn limit_multiset(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.class_terms.iter().map(|t| t.limit_count).collect();
        v.sort_unstable();
        v
    }
}

pub fn counts(profile: &RkProfile) -> Result<DecompositionReport> {
    require_admissible(profile)?;
    let q = profile.quotient();
    let class_terms: Vec<ClassTerm> = q
        .topological_order()
        .into_iter()
        .map(|c| {
            let s = q.class(c);
            ClassTerm {
                representative: s.representative.clone(),
                size: s.size,
                limit_count: s.limit_count,
            }
        })
        .collect();
    let prime_count = profile.vertex_count() as u64;
    let limit_count = class_terms.iter().map(|t| t.limit_count).sum();
    Ok(DecompositionReport {
        prime_count,
        limit_count,
        total: prime_count + limit_count,
        class_terms,
    })
}
