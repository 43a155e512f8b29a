//! Run verification suites from code, as the command line does.
use ajs::suites::{run, Suite, SuiteConfig};
use ajs::{Fp, RootType};

fn main() {
    let cfg = SuiteConfig { max_word: Some(2), ..SuiteConfig::new(RootType::A2) };
    for s in [Suite::AlcoveLemmas, Suite::Verma, Suite::Dualtrans, Suite::Mainthm, Suite::Controls] {
        for r in run::<Fp<101>>(s, &cfg).unwrap() {
            println!("{} {}: {} checked, {} failed", if r.passed() { "PASS" } else { "FAIL" }, r.suite, r.report.checked(), r.report.failed());
        }
    }
}
