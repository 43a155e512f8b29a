//! Dump an object to JSON and read it back.
use ajs::ajscat::{Base, KObject};
use ajs::alcove::parse_word;
use ajs::json::{dump_object, load_object};
use ajs::{Fp, RootDatum, RootType};

fn main() {
    let rd = RootDatum::get(RootType::A2);
    let m = KObject::<Fp<7>>::bott_samelson(rd, &parse_word(rd, "s0 s1 s0").unwrap(), Base::P0, 0);
    let text = dump_object(&m);
    let back = load_object::<Fp<7>>(&text).unwrap();
    println!("{} bytes; equal after reload: {}", text.len(), back.same_as(&m).unwrap());
    let broken = text.replacen("\"1\"", "\"(a1+a2\"", 1);
    println!("corrupt entry: {}", load_object::<Fp<7>>(&broken).unwrap_err());
}
