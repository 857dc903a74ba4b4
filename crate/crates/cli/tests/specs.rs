use kuptv_cli::commands;
use kuptv_core::kuperberg::{ContractionOptions, DEFAULT_COST_CAP};
use proptest::prelude::*;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lens() -> impl Strategy<Value = (u32, u32)> {
    (1u32..=6)
        .prop_flat_map(|p| (Just(p), 0u32..p.max(2)))
        .prop_filter("coprime", |&(p, q)| gcd(p, q) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_algebra_counts_homs((p, q) in lens(), g in prop::sample::select(vec!["Z2", "Z3", "S3"])) {
        let spec = format!("lens:{p},{q}");
        let opts = ContractionOptions::default();
        let ku = commands::ku(&spec, &format!("group:{g}"), None, &opts).unwrap();
        let homs = commands::pi1count(&spec, g, DEFAULT_COST_CAP).unwrap();
        prop_assert_eq!(ku.value, homs.value);
    }

    #[test]
    fn connected_sum_multiplies((p, q) in lens(), (r, s) in lens()) {
        let opts = ContractionOptions::default();
        let ku = |d: &str| commands::ku(d, "function:Z2", None, &opts).unwrap().value.parse::<i64>().unwrap();
        let a = format!("lens:{p},{q}");
        let b = format!("lens:{r},{s}");
        prop_assert_eq!(ku(&format!("{a}#{b}")), ku(&a) * ku(&b));
    }
}
