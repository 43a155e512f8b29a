use ajs::ajscat::{check_structure, Base, KObject};
use ajs::alcove::Refl;
use ajs::dualtilt::{dualize, left_act, tilt_w0};
use ajs::fracring::RootFraction;
use ajs::json::{dump_object, load_object};
use ajs::report::Report;
use ajs::suites::random_basis_change;
use ajs::{Fp, Root, RootDatum, RootType, Q};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type F = Fp<101>;

fn a2() -> &'static RootDatum {
    RootDatum::get(RootType::A2)
}

fn word(max: usize) -> impl Strategy<Value = Vec<Refl>> {
    prop::collection::vec((0u8..3).prop_map(Refl), 0..=max)
}

fn base() -> impl Strategy<Value = Base> {
    prop_oneof![Just(Base::P0), Just(Base::Q0)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn translated_objects_satisfy_the_structure_lemmas(w in word(3), b in base()) {
        let m = KObject::<F>::bott_samelson(a2(), &w, b, 0);
        let mut rep = Report::new();
        check_structure(&m, &mut rep).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn translation_doubles_total_rank(w in word(3), b in base(), s in 0u8..3) {
        let m = KObject::<F>::bott_samelson(a2(), &w, b, 0);
        let total = |x: &KObject<F>| x.components().values().map(|d| d.len()).sum::<usize>();
        prop_assert_eq!(total(&m.translate(Refl(s))), 2 * total(&m));
    }

    #[test]
    fn duality_and_tilting_are_involutions(w in word(3), b in base(), n in -3i32..3) {
        let m = KObject::<F>::bott_samelson(a2(), &w, b, 2 * n);
        let dd = dualize(&dualize(&m).unwrap()).unwrap();
        prop_assert_eq!(dd.first_difference(&m).unwrap(), None);
        let cc = tilt_w0(&tilt_w0(&m).unwrap()).unwrap();
        prop_assert_eq!(cc.first_difference(&m).unwrap(), None);
    }

    #[test]
    fn tilting_moves_ranks_by_w0(w in word(3), b in base()) {
        let rd = a2();
        let m = KObject::<F>::bott_samelson(rd, &w, b, 0);
        let c = tilt_w0(&m).unwrap();
        for a in c.components().keys() {
            prop_assert_eq!(c.rank(*a), m.rank(left_act(rd, rd.longest_element(), *a)));
        }
    }

    #[test]
    fn lattice_invariants_survive_basis_change(w in word(3), b in base(), seed in any::<u64>()) {
        let m = KObject::<F>::bott_samelson(a2(), &w, b, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for e in m.edges().values() {
            let f = random_basis_change(e, &mut rng).unwrap();
            prop_assert!(f.same_span(e).unwrap(), "seed {}", seed);
            prop_assert_eq!(f.snf_beta().exponents, e.snf_beta().exponents);
            prop_assert_eq!(f.is_dense(), e.is_dense());
        }
    }

    #[test]
    fn json_round_trip(w in word(2), b in base(), n in -2i32..2) {
        let m = KObject::<Q>::bott_samelson(a2(), &w, b, 2 * n);
        let back = load_object::<Q>(&dump_object(&m)).unwrap();
        prop_assert_eq!(back.first_difference(&m).unwrap(), None);
        prop_assert_eq!(dump_object(&back), dump_object(&m));
    }

    #[test]
    fn fraction_text_round_trip(c in -9i64..9, e in prop::collection::vec(-3i64..4, 3), k in 0usize..3) {
        let rd = a2();
        let mut x = RootFraction::<Q>::scalar(rd, Q::new(c as i128, 1));
        for (b, p) in e.iter().enumerate() {
            x = x.mul(&RootFraction::root_power(rd, b, Q::new(1, 1), *p));
        }
        x = x.add(&RootFraction::root(rd, Root::pos(k)));
        prop_assert_eq!(RootFraction::<Q>::parse(rd, &x.render()).unwrap(), x);
    }
}
