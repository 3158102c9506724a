use exsuper_core::classifier::{classify_by_reflections, classify_char0, Verdict};
use exsuper_core::lattice::{
    from_metric, pair_with_odd_root, pairing, root_datum, to_metric, MetricVector,
};
use exsuper_core::reflection::{chain, reflect_back, Branch};
use exsuper_core::{Characteristic, ScalarContext, SuperType, Weight, ZetaMode};
use proptest::prelude::*;

fn any_type() -> impl Strategy<Value = SuperType> {
    prop::sample::select(SuperType::ALL.to_vec())
}

fn weight(ty: SuperType, lo: i64, hi: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(lo..=hi, ty.rank()).prop_map(move |c| Weight::new(ty, &c).unwrap())
}

fn any_weight(lo: i64, hi: i64) -> impl Strategy<Value = Weight> {
    any_type().prop_flat_map(move |ty| weight(ty, lo, hi))
}

fn context(ty: SuperType) -> BoxedStrategy<ScalarContext> {
    match ty {
        SuperType::D21 => (prop::sample::select(vec![3u64, 5, 7, 11, 13]), 1u64..12)
            .prop_filter_map("zeta in {0, -1}", |(p, z)| ScalarContext::d21(p, z).ok())
            .boxed(),
        SuperType::G3 => prop::sample::select(vec![3u64, 5, 7, 11, 13])
            .prop_map(|p| ScalarContext::prime(SuperType::G3, p).unwrap())
            .boxed(),
        SuperType::F31 => prop::sample::select(vec![5u64, 7, 11, 13])
            .prop_map(|p| ScalarContext::prime(SuperType::F31, p).unwrap())
            .boxed(),
    }
}

fn weight_and_context(lo: i64, hi: i64) -> impl Strategy<Value = (Weight, ScalarContext)> {
    any_type().prop_flat_map(move |ty| (weight(ty, lo, hi), context(ty)))
}

fn metric(ty: SuperType) -> impl Strategy<Value = MetricVector> {
    prop::collection::vec(-12i64..=12, ty.metric_dim()).prop_map(|h| MetricVector::from_halves(&h))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn metric_round_trip(w in any_weight(-50, 50)) {
        prop_assert_eq!(from_metric(&to_metric(&w), w.super_type()).unwrap(), w);
    }

    #[test]
    fn pairing_is_bilinear_and_symmetric(
        (ty, u, v, x) in any_type().prop_flat_map(|ty| (Just(ty), metric(ty), metric(ty), metric(ty))),
        k in -5i64..5,
    ) {
        let p = |a: &MetricVector, b: &MetricVector| pairing(a, b, ty).unwrap();
        prop_assert_eq!(p(&u, &v), p(&v, &u));
        prop_assert_eq!(p(&(u + x), &v), p(&u, &v) + p(&x, &v));
        prop_assert_eq!(p(&(u * k), &v), p(&u, &v) * k);
    }

    #[test]
    fn odd_root_pairing_matches_form(w in any_weight(-30, 30)) {
        let ty = w.super_type();
        let rd = root_datum(ty);
        for (i, b) in rd.odd_roots.iter().enumerate() {
            let x = pair_with_odd_root(&w, i).unwrap();
            prop_assert_eq!(x, pairing(&to_metric(&w), b, ty).unwrap());
            let (q0, q1) = x.quarters();
            match ty {
                SuperType::F31 => prop_assert_eq!(q1, 0),
                _ => prop_assert!(q0 % 4 == 0 && q1 % 4 == 0),
            }
            if ty == SuperType::G3 {
                prop_assert_eq!(q1, 0);
            }
        }
    }

    #[test]
    fn chain_round_trip_and_integrality((w, ctx) in weight_and_context(-6, 40)) {
        let c = chain(&w, &ctx).unwrap();
        prop_assert_eq!(c.weight(0), w);
        for node in &c.nodes[1..] {
            let step = node.step.unwrap();
            let src = c.weight(step.edge.src);
            match step.branch {
                Branch::Fixed => prop_assert_eq!(node.weight, src),
                Branch::Reflected => {
                    // (λ − β, β) = (λ, β) because β is isotropic.
                    let again = pair_with_odd_root(&node.weight, step.edge.odd_root).unwrap();
                    prop_assert_eq!(again, step.pairing);
                    prop_assert!(!ctx.is_zero(again).unwrap());
                    prop_assert_eq!(reflect_back(&node.weight, step.edge.odd_root).unwrap(), src);
                }
            }
            // Integrality: the weight converts to metric and back exactly.
            prop_assert_eq!(from_metric(&to_metric(&node.weight), w.super_type()).unwrap(), node.weight);
        }
    }

    #[test]
    fn delta_side_never_increases((w, ctx) in weight_and_context(-6, 40)) {
        let c = chain(&w, &ctx).unwrap();
        for node in &c.nodes[1..] {
            let src = c.weight(node.step.unwrap().edge.src);
            prop_assert!(node.weight.delta_coord() <= src.delta_coord());
        }
    }

    #[test]
    fn high_d_is_finite((w, ctx) in weight_and_context(0, 40)) {
        let ty = w.super_type();
        let threshold = match ty {
            SuperType::D21 => 2,
            SuperType::G3 => 3,
            SuperType::F31 => 4,
        };
        let mut c = w.coords().to_vec();
        let di = ty.delta_index();
        c[di] += threshold;
        let lifted = Weight::new(ty, &c).unwrap();
        prop_assert_eq!(classify_by_reflections(&lifted, &ctx).unwrap().verdict, Verdict::Finite);
    }

    #[test]
    fn generic_zeta_finite_only_on_known_set(w in weight(SuperType::D21, 0, 30)) {
        let c = w.coords();
        let expected = c == [0, 0, 0] || c[0] >= 2;
        let got = classify_char0(&w, Some(ZetaMode::Generic)).unwrap().verdict;
        prop_assert_eq!(got == Verdict::Finite, expected);
        let ctx = ScalarContext::new(SuperType::D21, Characteristic::Zero, Some(ZetaMode::Generic)).unwrap();
        prop_assert_eq!(classify_by_reflections(&w, &ctx).unwrap().verdict == Verdict::Finite, expected);
    }
}

#[test]
fn zero_weight_is_always_finite() {
    for ty in SuperType::ALL {
        let z = Weight::zero(ty);
        for p in [3u64, 5, 7, 11, 13] {
            let ctxs: Vec<ScalarContext> = match ty {
                SuperType::D21 => (1..p - 1)
                    .map(|v| ScalarContext::d21(p, v).unwrap())
                    .collect(),
                SuperType::F31 if p == 3 => vec![],
                _ => vec![ScalarContext::prime(ty, p).unwrap()],
            };
            for ctx in ctxs {
                assert_eq!(
                    classify_by_reflections(&z, &ctx).unwrap().verdict,
                    Verdict::Finite
                );
            }
        }
        let zeta = (ty == SuperType::D21).then_some(ZetaMode::Generic);
        assert_eq!(classify_char0(&z, zeta).unwrap().verdict, Verdict::Finite);
    }
}
