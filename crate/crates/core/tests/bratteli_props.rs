mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use torus_af::bratteli::{
    build_diagram, export_diagram, k0_group, level_dimensions, stable_isomorphic, BratteliDiagram, ExportFormat,
};
use torus_af::contfrac::{cf_expand, convergents, VerdictKind};

proptest! {
    #[test]
    fn dimensions_are_convergent_denominators(theta in positive_irrational(), levels in 1usize..=12) {
        let cf = cf_expand(&theta).unwrap();
        let dg = build_diagram(&cf, levels).unwrap();
        let dims = level_dimensions(&dg);
        let cs = convergents(&cf, levels).unwrap();
        prop_assert_eq!(dims.len(), levels + 1);
        for n in 1..=levels {
            prop_assert_eq!(&dims[n].upper, &cs[n].q);
            prop_assert_eq!(&dims[n].lower, &cs[n - 1].q);
            let a = dg.transitions()[n - 1].quotient();
            prop_assert_eq!(&dims[n].upper, &(a * &dims[n - 1].upper + &dims[n - 1].lower));
        }
    }

    #[test]
    fn json_export_round_trips(theta in positive_irrational(), levels in 1usize..=8) {
        let dg = build_diagram(&cf_expand(&theta).unwrap(), levels).unwrap();
        let text = export_diagram(&dg, ExportFormat::Json);
        let back: BratteliDiagram = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, dg);
    }

    #[test]
    fn positive_cone_is_a_total_order(theta in positive_irrational(), p1 in -60i64..60, q1 in -60i64..60, p2 in -60i64..60, q2 in -60i64..60) {
        let g = k0_group(&theta).unwrap();
        let (p1, q1, p2, q2) = (BigInt::from(p1), BigInt::from(q1), BigInt::from(p2), BigInt::from(q2));
        if g.contains(&p1, &q1) && g.contains(&p2, &q2) {
            prop_assert!(g.contains(&(&p1 + &p2), &(&q1 + &q2)));
        }
        let zero = p1 == BigInt::from(0) && q1 == BigInt::from(0);
        prop_assert!(zero || g.contains(&p1, &q1) != g.contains(&-&p1, &-&q1));
    }

    #[test]
    fn monoid_images_are_stably_isomorphic(theta in positive_irrational(), m in positive_monoid(20)) {
        let image = theta.mobius(&m.swap_conjugate()).unwrap();
        let v = stable_isomorphic(&theta, &image).unwrap();
        prop_assert_eq!(v.kind, VerdictKind::SlEquivalent);
    }
}
