//! Splitting Q0 off T_{s_l}...T_{s_1} P0 for each reduced word of w0.
use ajs::alcove::word_label;
use ajs::dualtilt::{q0_summand_split, reduced_words_w0};
use ajs::{RootDatum, RootType, Q};

fn main() {
    for t in [RootType::A1, RootType::A2] {
        let rd = RootDatum::get(t);
        for w in reduced_words_w0(rd) {
            let sp = q0_summand_split::<Q>(rd, &w).unwrap();
            println!("{t} {}: split {}, composite identity {}", word_label(rd, &w), sp.succeeded(), sp.composite_is_identity);
            for (name, ok, _) in &sp.checks {
                println!("    {name}: {ok}");
            }
        }
    }
}
