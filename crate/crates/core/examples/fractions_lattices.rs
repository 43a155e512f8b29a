//! Root fractions and β-lattices: parsing, the butterfly, duals and the
//! β-adic Smith form.
use ajs::fracring::RootFraction;
use ajs::suites::butterfly_vs_split;
use ajs::{RootDatum, RootType, Q};

fn main() {
    let rd = RootDatum::get(RootType::A2);
    let x = RootFraction::<Q>::parse(rd, "(a1+2*a2)/(a1*a2^2)").unwrap();
    let y = RootFraction::<Q>::parse(rd, "a1*a2").unwrap();
    println!("x = {}, degree {:?}", x.render(), x.degree());
    println!("x * y = {}", x.mul(&y).render());
    let (fly, split) = butterfly_vs_split::<Q>(rd, 2).unwrap();
    println!("butterfly links: {}, split links: {}", fly.links().unwrap(), split.links().unwrap());
    println!("same span: {}", fly.same_span(&split).unwrap());
    println!("butterfly exponents {:?}, split exponents {:?}", fly.snf_beta().exponents, split.snf_beta().exponents);
    let d = fly.dual().unwrap();
    println!("dual degrees {:?}, dense {}", d.degrees(), d.is_dense());
}
