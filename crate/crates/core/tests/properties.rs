mod common;

use common::admissible_profile;
use proptest::prelude::*;
use rkprofile::{
    canonical_form, counts, is_isomorphic, oracle_product, pareto_product, parse, serialize,
    validate_profile, RkProfile,
};

/// Same profile with every vertex renamed through `f`.
fn rename(p: &RkProfile, f: impl Fn(&str) -> String) -> RkProfile {
    let text = serialize(p).unwrap();
    let mut out = String::new();
    for line in text.lines() {
        let mut words = line.split(' ');
        let head = words.next().unwrap();
        let rest: Vec<String> = words
            .map(|w| match head {
                "vertex" | "le" => f(w),
                "il" if w.parse::<u64>().is_err() => f(w),
                _ => w.to_string(),
            })
            .collect();
        out += &[vec![head.to_string()], rest].concat().join(" ");
        out.push('\n');
    }
    parse(&out).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counts_multiply(a in admissible_profile(), b in admissible_profile()) {
        let (ca, cb) = (counts(&a).unwrap(), counts(&b).unwrap());
        let p = counts(&pareto_product(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(p.total, ca.total * cb.total);
        prop_assert_eq!(p.prime_count, ca.prime_count * cb.prime_count);
        prop_assert_eq!(
            p.limit_count,
            ca.limit_count * cb.prime_count
                + ca.prime_count * cb.limit_count
                + ca.limit_count * cb.limit_count
        );
    }

    #[test]
    fn product_matches_oracle(a in admissible_profile(), b in admissible_profile()) {
        let fast = pareto_product(&a, &b).unwrap();
        let slow = oracle_product(&a, &b).unwrap();
        prop_assert!(is_isomorphic(&fast, &slow).unwrap());
        prop_assert_eq!(serialize(&fast).unwrap(), serialize(&slow).unwrap());
    }

    #[test]
    fn product_is_admissible_and_commutes(a in admissible_profile(), b in admissible_profile()) {
        let ab = pareto_product(&a, &b).unwrap();
        prop_assert!(validate_profile(&ab).is_admissible());
        prop_assert!(is_isomorphic(&ab, &pareto_product(&b, &a).unwrap()).unwrap());
    }

    #[test]
    fn round_trip(p in admissible_profile()) {
        let text = serialize(&p).unwrap();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(serialize(&back).unwrap(), text);
    }

    #[test]
    fn canonical_form_is_idempotent(p in admissible_profile()) {
        let c = canonical_form(&p).unwrap();
        let again = canonical_form(&parse(c.as_str()).unwrap()).unwrap();
        prop_assert_eq!(again, c);
    }

    #[test]
    fn canonical_form_ignores_names(p in admissible_profile(), salt in 0u32..1000) {
        let renamed = rename(&p, |w| format!("r{}_{w}", salt));
        let reversed = rename(&p, |w| w.chars().rev().collect::<String>() + "z");
        let c = canonical_form(&p).unwrap();
        prop_assert_eq!(canonical_form(&renamed).unwrap(), c.clone());
        prop_assert_eq!(canonical_form(&reversed).unwrap(), c);
    }
}
