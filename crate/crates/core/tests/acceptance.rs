//! The eight acceptance criteria, run exactly, one PASS/FAIL line each.
//! Runs without the test harness so the lines always show.

use std::process::ExitCode;
use std::time::Instant;

use ajs::ajscat::{q0_indecomposable_check, Base, KObject};
use ajs::alcove::{verify_alcove_lemmas, Refl};
use ajs::dualtilt::{check_kipptrans, q0_selfdual_witness, q0_summand_split, reduced_words_w0};
use ajs::suites::{run, Suite, SuiteConfig, SuiteResult};
use ajs::{RootDatum, RootType, WeylElt, Q};

type Outcome = Result<String, String>;

fn rd(t: RootType) -> &'static RootDatum {
    RootDatum::get(t)
}

fn suite(s: Suite, t: RootType, max_word: usize) -> Result<SuiteResult, String> {
    let cfg = SuiteConfig { max_word: Some(max_word), ..SuiteConfig::new(t) };
    let mut r = run::<Q>(s, &cfg).map_err(|e| format!("{s} {t}: {e}"))?;
    Ok(r.remove(0))
}

fn all_pass(results: &[SuiteResult]) -> Outcome {
    let mut parts = vec![];
    for r in results {
        if !r.passed() || r.report.checked() == 0 {
            return Err(format!("{} {}: {} of {} failed; {:?}", r.suite, r.root_type, r.report.failed(), r.report.checked(), r.report.failures.first()));
        }
        parts.push(format!("{} {} {}", r.suite, r.root_type, r.report.checked()));
    }
    Ok(parts.join(", "))
}

fn alcove_lemmas() -> Outcome {
    let mut parts = vec![];
    for (t, w) in [(RootType::A1, 8), (RootType::A2, 5)] {
        let rep = verify_alcove_lemmas(rd(t), w);
        let checked: u64 = rep.values().map(|x| x.checked).sum();
        let failed: u64 = rep.values().map(|x| x.failed).sum();
        if failed > 0 || checked == 0 {
            return Err(format!("{t} window {w}: {failed} of {checked} failed"));
        }
        // every lemma clause is exercised
        for clause in ["wallcomb a", "wallcomb b", "wallcomb c", "wallcomb d", "kipp:wb positive", "kipp:wb negative", "kipp:arithmetik a", "kipp:arithmetik b", "updown equivalence"] {
            if rep.get(clause).map_or(0, |x| x.checked) == 0 && t == RootType::A2 {
                return Err(format!("{t}: clause {clause} never checked"));
            }
        }
        parts.push(format!("{t} window {w}: {checked} instances"));
    }
    Ok(parts.join(", "))
}

fn structure() -> Outcome {
    let mut rs = vec![];
    for (t, n) in [(RootType::A1, 6), (RootType::A2, 4)] {
        rs.push(suite(Suite::Density, t, n)?);
        let v = suite(Suite::Verma, t, n)?;
        if v.report.tally("imageup equality").checked == 0 {
            return Err(format!("{t}: imageup equality never checked"));
        }
        rs.push(v);
    }
    all_pass(&rs)
}

fn duality_vs_translation() -> Outcome {
    let mut rs = vec![];
    for (t, n) in [(RootType::A1, 6), (RootType::A2, 4)] {
        rs.push(suite(Suite::Dualtrans, t, n)?);
        rs.push(suite(Suite::Kipptrans, t, n)?);
    }
    let mut line = all_pass(&rs)?;
    // the guard: tilting by e must break at least one edge in A2
    let q = KObject::<Q>::q_zero(rd(RootType::A2));
    let mut broken = 0;
    for s in Refl::all(rd(RootType::A2)) {
        broken += check_kipptrans(&q, s, WeylElt::E).map_err(|e| e.to_string())?.failures.len();
    }
    if broken == 0 {
        return Err("tilt by e gave no failing edge in A2".into());
    }
    line.push_str(&format!("; tilt by e: {broken} failing entries"));
    Ok(line)
}

fn q0_facts() -> Outcome {
    let a1 = rd(RootType::A1);
    let q = KObject::<Q>::q_zero(a1);
    let t = KObject::<Q>::bott_samelson(a1, &[Refl(0)], Base::P0, 0);
    if let Some(d) = q.first_difference(&t).map_err(|e| e.to_string())? {
        return Err(format!("Q0 differs from T_s P0 at {d}"));
    }
    for ty in [RootType::A1, RootType::A2, RootType::B2] {
        let g = q0_indecomposable_check::<Q>(rd(ty)).map_err(|e| e.to_string())?;
        if !g.indecomposable_by_linking() {
            return Err(format!("{ty}: Q0 linking graph {g:?}"));
        }
    }
    // l(w0) = 1, 3 in A1, A2
    for (ty, shift) in [(RootType::A1, -2), (RootType::A2, -6)] {
        let w = q0_selfdual_witness::<Q>(rd(ty)).map_err(|e| e.to_string())?;
        let c = w.verify().map_err(|e| e.to_string())?;
        if !c.ok() || w.shift != shift {
            return Err(format!("{ty}: shift {} ({})", w.shift, c.summary()));
        }
    }
    Ok("Q0 = T_s P0 in A1; indecomposable in A1 A2 B2; witness shifts -2 and -6".into())
}

fn q0_splitting() -> Outcome {
    let mut parts = vec![];
    for (ty, expected_words) in [(RootType::A1, 1), (RootType::A2, 2)] {
        let words = reduced_words_w0(rd(ty));
        if words.len() != expected_words {
            return Err(format!("{ty}: {} reduced words of w0", words.len()));
        }
        for w in words {
            let sp = q0_summand_split::<Q>(rd(ty), &w).map_err(|e| e.to_string())?;
            if !(sp.succeeded() && sp.composite_is_automorphism && sp.top_component_invertible) {
                return Err(format!("{ty} {w:?}: {:?}", sp.checks.iter().filter(|c| !c.1).collect::<Vec<_>>()));
            }
            parts.push(format!("{ty} identity={}", sp.composite_is_identity));
        }
    }
    Ok(parts.join(", "))
}

fn bs_self_duality() -> Outcome {
    let rs = vec![suite(Suite::Mainthm, RootType::A1, 6)?, suite(Suite::Mainthm, RootType::A2, 4)?];
    for r in &rs {
        if r.report.tally("shifted witness").checked != 2 * r.report.tally("witness").checked {
            return Err(format!("{}: shifted variants missing", r.root_type));
        }
    }
    all_pass(&rs)
}

fn selfdual_anti() -> Outcome {
    let r = suite(Suite::Selfdualanti, RootType::A2, 5)?;
    for clause in ["unit rank", "rank invariance", "path in support", "alpha-string size 2", "links", "reaches w0.A", "witness for M'"] {
        if r.report.tally(clause).checked == 0 {
            return Err(format!("clause {clause} never checked"));
        }
    }
    all_pass(&[r])
}

fn controls() -> Outcome {
    let mut rs = vec![];
    for ty in [RootType::A1, RootType::A2] {
        let r = suite(Suite::Controls, ty, 0)?;
        for clause in ["alpha control: not an isomorphism", "butterfly differs from split"] {
            if r.report.tally(clause).checked == 0 {
                return Err(format!("{ty}: {clause} never checked"));
            }
        }
        rs.push(r);
    }
    all_pass(&rs)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("alcove lemmas", alcove_lemmas),
        ("structure suite", structure),
        ("duality versus translation", duality_vs_translation),
        ("Q0 facts", q0_facts),
        ("Q0 splitting", q0_splitting),
        ("self-duality of Bott-Samelson objects", bs_self_duality),
        ("anti-fundamental box", selfdual_anti),
        ("negative controls", controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(d) => println!("PASS {} {name} ({secs:.1}s): {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {d}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 8 passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
