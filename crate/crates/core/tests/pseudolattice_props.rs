mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use torus_af::functor::{f_morphism, f_object};
use torus_af::pseudolattice::{MeasuredFoliation, PseudoLattice};
use torus_af::Rational;

fn pseudo_lattice() -> impl Strategy<Value = PseudoLattice> {
    prop::sample::select(&RADICANDS[..])
        .prop_flat_map(|d| (real_in(d), real_in(d)))
        .prop_filter_map("positive", |(a, b)| PseudoLattice::new(a, b).ok())
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1..=500i64, 1..=500i64).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

proptest! {
    #[test]
    fn foliation_round_trip(pl in pseudo_lattice()) {
        let f = pl.to_foliation();
        prop_assert_eq!(PseudoLattice::from_foliation(&f), pl);
        let f2 = MeasuredFoliation::new(f.slope().clone(), f.measure().clone()).unwrap();
        prop_assert_eq!(PseudoLattice::from_foliation(&f2).to_foliation(), f);
    }

    #[test]
    fn scaling_is_in_the_kernel(pl in pseudo_lattice(), s in positive_rational()) {
        let scaled = pl.scaled(&s).unwrap();
        prop_assert_eq!(f_object(&scaled), f_object(&pl));
        prop_assert_eq!(scaled.to_foliation().slope().clone(), pl.to_foliation().slope().clone());
    }

    #[test]
    fn slope_transforms_by_induced_mobius(pl in pseudo_lattice(), m in positive_monoid(20)) {
        let moved = pl.basis_change(&m).unwrap();
        let theta = f_object(&pl).theta().clone();
        prop_assert_eq!(f_object(&moved).theta().clone(), theta.mobius(&m.swap_conjugate()).unwrap());
    }

    #[test]
    fn basis_change_composes(pl in pseudo_lattice(), a in positive_monoid(10), b in positive_monoid(10)) {
        // periods transform as a column vector, so the later change multiplies on the left
        let stepwise = pl.basis_change(&a).unwrap().basis_change(&b).unwrap();
        prop_assert_eq!(pl.basis_change(&(&b * &a)).unwrap(), stepwise);
    }

    #[test]
    fn morphisms_compose(a in sl2z(20), b in sl2z(20)) {
        prop_assert_eq!(f_morphism(&(&a * &b)).unwrap(), &f_morphism(&a).unwrap() * &f_morphism(&b).unwrap());
    }
}
