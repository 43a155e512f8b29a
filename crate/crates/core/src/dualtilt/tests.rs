use super::*;
use crate::ajscat::{Base, KObject};
use crate::alcove::{Alcove, Refl};
use crate::field::{Fp, Q};
use crate::rootsys::{RootDatum, RootType};

fn rd(t: RootType) -> &'static RootDatum {
    RootDatum::get(t)
}

#[test]
fn dual_of_unit_is_unit() {
    for t in [RootType::A1, RootType::A2, RootType::B2] {
        let p = KObject::<Q>::unit_object(rd(t));
        assert_eq!(dualize(&p).unwrap().first_difference(&p).unwrap(), None);
    }
}

#[test]
fn dual_commutes_with_shift_up_to_sign() {
    let r = rd(RootType::A2);
    let m = KObject::<Q>::bott_samelson(r, &[Refl(0), Refl(2)], Base::Q0, 0);
    let a = dualize(&m.shift(3)).unwrap();
    let b = dualize(&m).unwrap().shift(-3);
    assert!(a.same_as(&b).unwrap());
    let dd = dualize(&dualize(&m).unwrap()).unwrap();
    assert!(dd.same_as(&m).unwrap());
}

#[test]
fn tilt_by_identity_and_support() {
    let r = rd(RootType::A2);
    let m = KObject::<Q>::bott_samelson(r, &[Refl(1), Refl(2)], Base::P0, 0);
    assert!(tilt(&m, crate::rootsys::WeylElt::E).unwrap().same_as(&m).unwrap());
    let p = KObject::<Q>::unit_object(r);
    let cp = tilt_w0(&p).unwrap();
    let w0 = r.longest_element();
    assert_eq!(cp.support().into_iter().collect::<Vec<_>>(), vec![left_act(r, w0, Alcove::E)]);
    let c = tilt_w0(&m).unwrap();
    let expect: std::collections::BTreeSet<_> = m.support().iter().map(|a| left_act(r, w0, *a)).collect();
    assert_eq!(c.support(), expect);
    // C C = id for w0
    assert!(tilt_w0(&c).unwrap().same_as(&m).unwrap());
}

#[test]
fn tau_sigma_on_small_objects() {
    for t in [RootType::A1, RootType::A2] {
        let r = rd(t);
        for base in [Base::P0, Base::Q0] {
            let m = KObject::<Q>::base(r, base);
            for s in Refl::all(r) {
                let w = tau_sigma(s, &m).unwrap();
                let c = w.verify().unwrap();
                assert!(c.ok(), "{t} {:?} {}: {}", base, s.label(r), c.summary());
            }
        }
    }
}

#[test]
fn kipptrans_holds_for_w0_and_fails_for_e() {
    let r = rd(RootType::A2);
    let q = KObject::<Q>::q_zero(r);
    for s in Refl::all(r) {
        let k = check_kipptrans(&q, s, r.longest_element()).unwrap();
        assert!(k.equal(), "{:?}", k.failures);
    }
    let any_fail = Refl::all(r).into_iter().any(|s| !check_kipptrans(&q, s, crate::rootsys::WeylElt::E).unwrap().equal());
    assert!(any_fail);
}

#[test]
fn q0_witness_signs() {
    for t in [RootType::A1, RootType::A2, RootType::B2] {
        let w = q0_selfdual_witness::<Q>(rd(t)).unwrap();
        let c = w.verify().unwrap();
        assert!(c.ok(), "{t}: {}", c.summary());
        assert_eq!(w.shift, -2 * rd(t).n_pos() as i32);
    }
}

#[test]
fn bs_witness_small() {
    let r = rd(RootType::A1);
    let w = bs_selfdual_witness::<Fp<5>>(r, &[Refl(1)]).unwrap();
    assert_eq!(w.shift, -4);
    let c = w.verify().unwrap();
    assert!(c.ok(), "{}", c.summary());
    let m = KObject::<Fp<5>>::bott_samelson(r, &[Refl(1)], Base::Q0, 0);
    for n in [-2, 2] {
        let s = shift_witness(&w, &m, n).unwrap();
        assert_eq!(s.shift, -4 - 2 * n);
        assert!(s.verify().unwrap().ok());
    }
}

#[test]
fn summand_split_a1() {
    let r = rd(RootType::A1);
    let sp = q0_summand_split::<Q>(r, &[Refl(0)]).unwrap();
    assert!(sp.succeeded(), "{:?}", sp.checks);
    assert!(q0_summand_split::<Q>(r, &[Refl(1)]).is_err());
}

#[test]
fn anti_box_a1_single_step() {
    let r = rd(RootType::A1);
    let boxed = box_alcoves(r, 3);
    assert_eq!(boxed, vec![Alcove::finite(r.longest_element())]);
    let words = anti_words(r, boxed[0]);
    assert_eq!(words, vec![vec![Refl(0)]]);
    let rep = selfdual_anti_check::<Q>(r, boxed[0], &words[0]).unwrap();
    assert!(rep.report.passed(), "{:?}", rep.report.failures);
    assert_eq!(rep.witness_shift, -2);
}

#[test]
fn anti_box_a2() {
    let r = rd(RootType::A2);
    assert_eq!(reduced_words_w0(r).len(), 2);
    let boxed = box_alcoves(r, 5);
    assert_eq!(boxed.len(), 2);
    for a in boxed {
        let words = anti_words(r, a);
        assert_eq!(words.len(), 2);
        for w in words {
            let rep = selfdual_anti_check::<Fp<101>>(r, a, &w).unwrap();
            assert!(rep.report.passed(), "{} {:?}", rep.word, rep.report.failures);
        }
    }
}

#[test]
fn anti_rejects_outside_box() {
    let r = rd(RootType::A2);
    assert!(selfdual_anti_check::<Q>(r, Alcove::E, &[]).is_err());
}

#[test]
fn summand_split_a2_both_words() {
    let r = rd(RootType::A2);
    for w in reduced_words_w0(r) {
        let sp = q0_summand_split::<Fp<101>>(r, &w).unwrap();
        assert!(sp.succeeded(), "{:?}", sp.checks);
    }
}
