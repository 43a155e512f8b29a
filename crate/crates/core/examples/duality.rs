//! Duality against translation: the τ/σ pair and the tilting comparison,
//! and what goes wrong when tilting by the identity.
use ajs::ajscat::{Base, KObject};
use ajs::alcove::Refl;
use ajs::dualtilt::{check_kipptrans, tau_sigma};
use ajs::{RootDatum, RootType, WeylElt, Q};

fn main() {
    let rd = RootDatum::get(RootType::A2);
    let m = KObject::<Q>::bott_samelson(rd, &[Refl(0), Refl(2)], Base::P0, 0);
    for s in Refl::all(rd) {
        let w = tau_sigma(s, &m).unwrap();
        let l = s.label(rd);
        println!("D T_{l} M vs T_{l}^v D M {{-2}}: {}", w.verify().unwrap().summary());
        let k = check_kipptrans(&m, s, rd.longest_element()).unwrap();
        println!("  C T^v = T C: {} ({} components, {} edges)", k.equal(), k.components_checked, k.edges_checked);
        let e = check_kipptrans(&m, s, WeylElt::E).unwrap();
        println!("  tilting by e instead: {} mismatches", e.failures.len());
    }
}
