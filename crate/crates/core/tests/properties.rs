use std::collections::HashMap;
use std::sync::OnceLock;

use coxeter_shuffle::coxeter::{build_group, CoxeterGroup, GroupDescriptor};
use coxeter_shuffle::gfpoly::{factor, PolyFq};
use coxeter_shuffle::measures::{class_distribution, convolve, measure};
use coxeter_shuffle::rational::{format_q, parse_q, q, Q};
use num_traits::One;
use proptest::prelude::*;

fn groups() -> &'static [CoxeterGroup] {
    static GROUPS: OnceLock<Vec<CoxeterGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        [GroupDescriptor::a(3), GroupDescriptor::b(3), GroupDescriptor::d(4), GroupDescriptor::i2(7), GroupDescriptor::g2()]
            .into_iter()
            .map(|d| build_group(d).unwrap())
            .collect()
    })
}

fn nonzero_rational() -> impl Strategy<Value = Q> {
    (-12i128..=12, 1i128..=6).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn measure_is_a_descent_class_function_summing_to_one(gi in 0usize..5, x in nonzero_rational()) {
        let g = &groups()[gi];
        let m = measure(g, x).unwrap();
        prop_assert_eq!(m.total(), Q::one());
        prop_assert_eq!(class_distribution(g, &m).total(), Q::one());
        let mut by_descent: HashMap<u32, Q> = HashMap::new();
        for (w, e) in g.elements().iter().enumerate() {
            let c = *by_descent.entry(e.descents.0).or_insert(m.coefficient(w));
            prop_assert_eq!(c, m.coefficient(w));
        }
    }

    #[test]
    fn measures_multiply_by_parameter(gi in 0usize..5, x in nonzero_rational(), y in nonzero_rational()) {
        let g = &groups()[gi];
        let (mx, my) = (measure(g, x).unwrap(), measure(g, y).unwrap());
        let xy = convolve(&mx, &my).unwrap();
        prop_assert_eq!(&xy, &convolve(&my, &mx).unwrap());
        prop_assert_eq!(xy, measure(g, x * y).unwrap());
    }

    #[test]
    fn factorization_reconstructs(
        qi in 0usize..4,
        lower in proptest::collection::vec(0u32..13, 1..8),
    ) {
        let qq = [2u32, 3, 5, 7][qi];
        let mut coeffs = lower;
        coeffs.push(1);
        let f = PolyFq::new(qq, coeffs).unwrap();
        let fact = factor(&f).unwrap();
        prop_assert_eq!(fact.product(qq), f);
        for w in fact.factors.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn rational_text_round_trips(n in -10_000i128..10_000, d in 1i128..10_000) {
        let x = q(n, d);
        prop_assert_eq!(parse_q(&format_q(&x)).unwrap(), x);
    }
}
