//! Q0: indecomposability by linking, its self-duality witness, and the
//! witnesses for translated objects with their shifts.
use ajs::ajscat::{q0_indecomposable_check, Base, KObject};
use ajs::alcove::{parse_word, word_label};
use ajs::dualtilt::{bs_selfdual_witness, q0_selfdual_witness, shift_witness};
use ajs::json::witness_to_json;
use ajs::{RootDatum, RootType, Q};

fn main() {
    for t in [RootType::A1, RootType::A2, RootType::B2] {
        let rd = RootDatum::get(t);
        let g = q0_indecomposable_check::<Q>(rd).unwrap();
        let w = q0_selfdual_witness::<Q>(rd).unwrap();
        println!("{t}: linked {}, witness {} with shift {}", g.indecomposable_by_linking(), w.verify().unwrap().summary(), w.shift);
    }
    let rd = RootDatum::get(RootType::A2);
    let word = parse_word(rd, "s1 sA").unwrap();
    let wit = bs_selfdual_witness::<Q>(rd, &word).unwrap();
    let m = KObject::<Q>::bott_samelson(rd, &word, Base::Q0, 0);
    for n in [-2, 0, 2] {
        let s = shift_witness(&wit, &m, n).unwrap();
        println!("{}{{{n}}}: z = {}, {}", word_label(rd, &word), s.shift, s.verify().unwrap().summary());
    }
    let j = witness_to_json(&wit).unwrap();
    println!("witness dump: {} forward matrices", j.forward.len());
}
