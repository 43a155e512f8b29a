//! The self-duality argument for the anti-fundamental box, clause by clause.
use ajs::dualtilt::{anti_words, box_alcoves, selfdual_anti_check};
use ajs::{Fp, RootDatum, RootType};

fn main() {
    let rd = RootDatum::get(RootType::A2);
    for a in box_alcoves(rd, 5) {
        for w in anti_words(rd, a) {
            let r = selfdual_anti_check::<Fp<101>>(rd, a, &w).unwrap();
            println!("{} via {}: shift {} (expected {}), {} checks, {} failed", r.alcove, r.word, r.witness_shift, r.expected_shift, r.report.checked(), r.report.failed());
        }
    }
}
