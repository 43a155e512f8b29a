//! Bott-Samelson objects: build T_w(P0), print rank tables and run the
//! structure checks.
use ajs::ajscat::{check_structure, Base, KObject};
use ajs::alcove::{parse_word, AlcoveDisplay};
use ajs::report::Report;
use ajs::{RootDatum, RootType, Q};

fn main() {
    let rd = RootDatum::get(RootType::A2);
    let word = parse_word(rd, "s0 s1 sA").unwrap();
    for base in [Base::P0, Base::Q0] {
        let m = KObject::<Q>::bott_samelson(rd, &word, base, 0);
        println!("{}", m.summary());
        for (a, (r, degs)) in m.rank_table() {
            println!("  {:>20}  rank {r}  degrees {degs:?}", AlcoveDisplay(rd, a).to_string());
        }
        let mut rep = Report::new();
        check_structure(&m, &mut rep).unwrap();
        println!("  structure: {} checked, {} failed", rep.checked(), rep.failed());
    }
}
