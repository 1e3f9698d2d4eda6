//! Finite Rudin–Keisler preorders labelled with limit-model counts.
//!
//! An [`RkProfile`] describes the countable models of an Ehrenfeucht
//! theory: one vertex per powerful type up to isolation, preordered by
//! Rudin–Keisler domination, with a limit-model count on each class of
//! mutually dominated vertices. This crate validates profiles, computes the
//! prime/limit decomposition, forms Pareto products (the profile of a
//! disjoint union of theories), enumerates admissible profiles up to
//! isomorphism and renders Hasse diagrams.
//!
//! ```
//! use rkprofile::{catalog, counts, pareto_product};
//! use std::collections::BTreeMap;
//!
//! let none = BTreeMap::new();
//! let a = catalog::get("fig1a", &none).unwrap();
//! let b = catalog::get("fig1b.1", &none).unwrap();
//! let p = pareto_product(&a, &b).unwrap();
//! assert_eq!(counts(&p).unwrap().equation(), "12 = 4 + 8");
//! ```

pub mod canon;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod lattice;
pub mod preorder;
pub mod product;
pub mod profile;
pub mod render;
pub mod validate;

pub use canon::{canonical_form, canonical_relabel, is_isomorphic, CanonicalProfile};
pub use enumerate::{enumerate_profiles, EnumerationResult, Enumerator};
pub use error::{Error, Result};
pub use io::{parse, serialize};
pub use lattice::{is_boolean_lattice, is_lattice, monotonicity, Monotone, Monotonicity};
pub use preorder::{close_preorder, Preorder, Vertex};
pub use product::{
    decomposition, oracle_product, pareto_product, product_many, ProductDecomposition, ProductTerm,
};
pub use profile::{quotient, ClassSummary, QuotientPoset, RkProfile};
pub use render::{render_ascii, render_dot};
pub use validate::{
    counts, require_admissible, validate_profile, ClassTerm, Condition, ConditionStatus,
    DecompositionReport, Status, ValidationReport,
};
