use lowdisc::syntax::{format_spec, parse_spec};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = String> {
    prop_oneof![
        prop::sample::select(vec!["2", "3", "5", "7", "11"]).prop_map(|b| format!("vdc({b})")),
        Just("halton(2, 3, 5)".to_string()),
        (1u64..50, 1u64..50, prop::sample::select(vec![2u64, 3, 5, 6, 7, 10, 50]))
            .prop_map(|(a, b, d)| format!("kronecker(W=96; {a}/{}, sqrt({d}))", a + b)),
        (2u64..40, 0u64..40).prop_map(|(n, g)| format!("lattice(N={n}; 1, {})", g % n)),
        (1u64..30).prop_map(|n| format!("hammersley(N={n}; 2, 3)")),
        prop::sample::select(vec!["c1", "identity"]).prop_map(|m| format!("digital(q=3, L=10; {m})")),
        any::<u16>().prop_map(|s| format!("digital(q=2, L=16; random({s}), finiterow({s}))")),
        (0u8..4).prop_map(|g| format!("ratnet(q=2, f=[0 0 0 1]; [1 {} {}])", g & 1, g >> 1)),
        prop::sample::select(vec![(3u64, 2u64), (5, 2), (5, 3), (7, 4)]).prop_map(|(p, r)| format!("power({p}, {r})")),
    ]
}

fn spec() -> impl Strategy<Value = String> {
    leaf().prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("hybrid({a}, {b})")),
            inner.prop_map(|a| format!("digitsum({a})")),
        ]
    })
}

proptest! {
    #[test]
    fn printed_specs_parse_back(src in spec()) {
        let parsed = parse_spec(&src).unwrap();
        let printed = format_spec(&parsed);
        let again = parse_spec(&printed).unwrap();
        prop_assert_eq!(&again, &parsed);
        prop_assert_eq!(format_spec(&again), printed);
    }
}
