//! Alcove combinatorics in A2: the β↑ bijection, s-walls, and the
//! anti-fundamental box.
use ajs::alcove::{AlcoveDisplay, Refl};
use ajs::dualtilt::box_alcoves;
use ajs::{RootDatum, RootType};

fn main() {
    let rd = RootDatum::get(RootType::A2);
    let window = rd.window(3);
    println!("{} alcoves of length at most 3", window.len());
    let a = window[window.len() / 2];
    println!("A = {}", AlcoveDisplay(rd, a));
    for b in 0..rd.n_pos() {
        let up = rd.up(b, a);
        println!("  {}↑A = {}  (down again: {})", rd.root_label(b), AlcoveDisplay(rd, up), rd.down(b, up) == a);
    }
    for s in Refl::all(rd) {
        let w = rd.s_wall(a, s);
        println!("  wall {}: {} | {}", s.label(rd), AlcoveDisplay(rd, w.minus), AlcoveDisplay(rd, rd.wall_plus(&w)));
    }
    for b in box_alcoves(rd, 6) {
        println!("box alcove {} of length {}", AlcoveDisplay(rd, b), rd.alcove_length(b));
    }
    let rep = ajs::alcove::verify_alcove_lemmas(rd, 4);
    let failed: u64 = rep.values().map(|t| t.failed).sum();
    println!("wall lemmas over window 4: {} clauses, {failed} failures", rep.len());
}
