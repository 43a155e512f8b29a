//! The ingredients of the self-duality argument for alcoves in the
//! anti-fundamental box, each checked on the actual objects.

use serde::Serialize;

use crate::ajscat::{Base, KObject};
use crate::alcove::{word_label, Alcove, AlcoveDisplay, Refl};
use crate::dualtilt::functors::left_act;
use crate::dualtilt::witness::bs_selfdual_witness;
use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::report::Report;
use crate::rootsys::RootDatum;

#[derive(Clone, Debug, Serialize)]
pub struct AntiReport {
    pub alcove: String,
    pub word: String,
    pub length: usize,
    pub witness_shift: i32,
    pub expected_shift: i32,
    pub report: Report,
}

/// Words `(s_1..s_l, s_{l+1}..s_j)` with `s_1..s_l` a reduced word of
/// `w0` and the whole word reduced for the alcove `a` (as an element
/// `A = x.A_e`), one per reduced word of `w0`.
pub fn anti_words(rd: &RootDatum, a: Alcove) -> Vec<Vec<Refl>> {
    let w0 = rd.longest_element();
    let rest_elt = rd.compose(rd.affine_inverse(Alcove::finite(w0)), a);
    let rest = rd.affine_word(rest_elt);
    if rd.alcove_length(a) != rd.n_pos() + rest.len() {
        return vec![];
    }
    reduced_words_w0(rd)
        .into_iter()
        .map(|mut w| {
            w.extend(rest.iter().copied());
            w
        })
        .collect()
}

/// All reduced words of `w0`, by depth-first search on descents.
pub fn reduced_words_w0(rd: &RootDatum) -> Vec<Vec<Refl>> {
    fn go(rd: &RootDatum, w: crate::rootsys::WeylElt, acc: &mut Vec<Refl>, out: &mut Vec<Vec<Refl>>) {
        if rd.length(w) == 0 {
            let mut v = acc.clone();
            v.reverse();
            out.push(v);
            return;
        }
        for i in 0..rd.rank {
            let ws = rd.mul(w, rd.simple_reflection(i));
            if rd.length(ws) < rd.length(w) {
                acc.push(Refl(i as u8));
                go(rd, ws, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = vec![];
    go(rd, rd.longest_element(), &mut vec![], &mut out);
    out
}

/// Alcoves of the anti-fundamental box of length at most `max_len`.
pub fn box_alcoves(rd: &RootDatum, max_len: usize) -> Vec<Alcove> {
    rd.window(max_len).into_iter().filter(|a| rd.in_anti_fundamental_box(*a)).collect()
}

/// Check clauses (i)-(vi) for `A_w` and `word = (s_1..s_l, s_{l+1}..s_j)`.
pub fn selfdual_anti_check<F: Field>(rd: &'static RootDatum, a: Alcove, word: &[Refl]) -> Result<AntiReport> {
    if !rd.in_anti_fundamental_box(a) {
        return Err(AjsError::NotInBox);
    }
    let l = rd.n_pos();
    if word.len() < l || word.len() != rd.alcove_length(a) {
        return Err(AjsError::BadWord(format!("{} is not a reduced word for the alcove", word_label(rd, word))));
    }
    let product = word.iter().fold(Alcove::E, |acc, s| rd.compose(acc, rd.simple_affine(*s)));
    if product != a {
        return Err(AjsError::BadWord(format!("{} does not multiply to {}", word_label(rd, word), AlcoveDisplay(rd, a))));
    }
    let (head, tail) = word.split_at(l);
    let path = rd.w0_path(a, head)?;
    let m = KObject::<F>::bott_samelson(rd, word, Base::P0, 0);
    let mp = KObject::<F>::bott_samelson(rd, tail, Base::Q0, 0);
    let mut rep = Report::new();
    let here = || format!("{} via {}", AlcoveDisplay(rd, a), word_label(rd, word));

    // (i)
    rep.check("unit rank", m.rank(a) == 1 && mp.rank(a) == 1, || {
        format!("{}: ranks {} and {}", here(), m.rank(a), mp.rank(a))
    });
    // (ii)
    for &x in mp.components().keys() {
        for w in rd.weyl_elements() {
            let y = left_act(rd, w, x);
            rep.check("rank invariance", mp.rank(x) == mp.rank(y), || {
                format!("{}: rank {} at {} but {} at {}", here(), mp.rank(x), AlcoveDisplay(rd, x), mp.rank(y), AlcoveDisplay(rd, y))
            });
        }
    }
    // (iii), (iv)
    let supp = mp.support();
    for win in path.windows(2) {
        let (from, (to, beta)) = (win[0].0, win[1]);
        let beta = beta.expect("every step after the first carries a root");
        rep.check("path in support", supp.contains(&from) && supp.contains(&to), || {
            format!("{}: step {} -> {}", here(), AlcoveDisplay(rd, from), AlcoveDisplay(rd, to))
        });
        if !supp.contains(&from) {
            continue;
        }
        let string = rd.alpha_string(from, beta, &supp)?;
        rep.check("alpha-string size 2", string == vec![from, to], || {
            format!("{}: {}-string through {} has {} alcoves", here(), rd.root_label(beta), AlcoveDisplay(rd, from), string.len())
        });
        rep.check("rank one on path", mp.rank(from) == 1, || format!("{}: rank at {}", here(), AlcoveDisplay(rd, from)));
        // M'(β↓A, β) = β^k S^β in the second block
        let below = mp.edge_or_zero(rd.down(beta, from), beta);
        let lo = below.intersect_block(1)?;
        let pr = below.project_block(1)?;
        let exponent = (pr.rank() == 1 && pr.same_span(&lo)? && below.split() == 0)
            .then(|| (pr.degrees()[0] - pr.ambient()[0]) / 2);
        rep.check("edge below is a power of beta", exponent.is_some(), || {
            format!("{}: edge below {}", here(), AlcoveDisplay(rd, from))
        });
        if let Some(k) = exponent {
            let e = mp.edge_or_zero(from, beta);
            let p0 = e.project_block(0)?;
            let c0 = e.intersect_block(0)?;
            let is_power = |x: &crate::lattice::SubmoduleBasis<F>, k: i32| {
                x.rank() == 1 && x.matrix().get(0, 0) != F::zero() && (x.degrees()[0] - x.ambient()[0]) / 2 == k
            };
            rep.check("projection is beta^l", is_power(&p0, k), || format!("{}: at {}", here(), AlcoveDisplay(rd, from)));
            rep.check("intersection is beta^(l+1)", is_power(&c0, k + 1), || {
                format!("{}: at {}", here(), AlcoveDisplay(rd, from))
            });
        }
        rep.check("links", mp.links(from, beta)?, || format!("{}: no link at {}", here(), AlcoveDisplay(rd, from)));
    }
    // (v)
    let end = path.last().map(|p| p.0);
    let w0a = left_act(rd, rd.longest_element(), a);
    rep.check("reaches w0.A", end == Some(w0a), || format!("{}: path ends elsewhere", here()));
    // (vi)
    let wit = bs_selfdual_witness::<F>(rd, tail)?;
    let check = wit.verify()?;
    rep.check("witness for M'", check.ok(), || format!("{}: {}", here(), check.summary()));
    let expected = -2 * word.len() as i32;
    rep.check("witness shift", wit.shift == expected, || format!("{}: shift {} vs {}", here(), wit.shift, expected));
    Ok(AntiReport {
        alcove: rd.alcove_label(a),
        word: word_label(rd, word),
        length: word.len(),
        witness_shift: wit.shift,
        expected_shift: expected,
        report: rep,
    })
}
