mod common;

use common::*;
use proptest::prelude::*;
use torus_af::lattice::{induced_tau, reduce_fundamental, tori_isomorphic, Lattice, ModuliPoint};
use torus_af::ComplexQuadratic;

fn point() -> impl Strategy<Value = ModuliPoint> {
    upper_half_point().prop_map(|t| ModuliPoint::new(t).unwrap())
}

proptest! {
    #[test]
    fn reduction_lands_in_domain_and_is_idempotent(t in point()) {
        let r = reduce_fundamental(&t);
        prop_assert!(r.tau_reduced.in_fundamental_domain());
        prop_assert_eq!(induced_tau(&r.witness, &t).unwrap(), r.tau_reduced.clone());
        let again = reduce_fundamental(&r.tau_reduced);
        prop_assert_eq!(&again.tau_reduced, &r.tau_reduced);
    }

    #[test]
    fn reduction_is_orbit_invariant(t in point(), m in sl2z(20)) {
        let moved = induced_tau(&m, &t).unwrap();
        prop_assert_eq!(reduce_fundamental(&moved).tau_reduced, reduce_fundamental(&t).tau_reduced);
        let w = tori_isomorphic(&t, &moved).expect("same orbit");
        prop_assert_eq!(induced_tau(&w, &t).unwrap(), moved);
    }

    #[test]
    fn induced_action_is_covariant(t in point(), a in sl2z(10), b in sl2z(10)) {
        let direct = induced_tau(&(&a * &b), &t).unwrap();
        let stepwise = induced_tau(&a, &induced_tau(&b, &t).unwrap()).unwrap();
        prop_assert_eq!(direct, stepwise);
    }

    #[test]
    fn normalization_commutes_with_basis_change(
        (w1, t) in prop::sample::select(&[1u64, 2, 3][..]).prop_flat_map(|d| (upper_half_in(d), upper_half_in(d))),
        m in sl2z(12),
    ) {
        let w2 = &w1 * &t;
        let lattice = Lattice::new(w1, w2).unwrap();
        let moved = lattice.basis_change(&m).unwrap();
        prop_assert_eq!(lattice.normalize().into_tau(), t);
        prop_assert_eq!(moved.normalize(), induced_tau(&m, &lattice.normalize()).unwrap());
    }

    #[test]
    fn distinct_reduced_points_are_not_isomorphic(a in point(), b in point()) {
        let (ra, rb) = (reduce_fundamental(&a), reduce_fundamental(&b));
        prop_assert_eq!(tori_isomorphic(&a, &b).is_some(), ra.tau_reduced == rb.tau_reduced);
    }
}

#[test]
fn real_ratio_is_degenerate() {
    let w: ComplexQuadratic = "1+i".parse().unwrap();
    let v: ComplexQuadratic = "3+3*i".parse().unwrap();
    assert!(Lattice::new(w, v).is_err());
}
