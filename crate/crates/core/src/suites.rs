//! Verification suites: each runs one family of checks at a configurable
//! scale and returns a [`Report`].

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ajscat::{check_alpha_strings, check_density, check_projtimesbeta, check_verma, Base, KMorphism, KObject};
use crate::alcove::{verify_alcove_lemmas, word_label, Refl};
use crate::dualtilt::{
    anti_words, box_alcoves, check_kipptrans, extend_witness, q0_selfdual_witness, q0_summand_split, reduced_words_w0,
    selfdual_anti_check, shift_witness, tau_sigma, DualityWitness,
};
use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::fracring::RootFraction;
use crate::lattice::SubmoduleBasis;
use crate::linalg::SpVec;
use crate::report::Report;
use crate::rootsys::{Root, RootDatum, RootType, WeylElt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    AlcoveLemmas,
    Density,
    Verma,
    Dualtrans,
    Kipptrans,
    Q0dual,
    Q0summand,
    Mainthm,
    Selfdualanti,
    Controls,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::AlcoveLemmas,
        Suite::Density,
        Suite::Verma,
        Suite::Dualtrans,
        Suite::Kipptrans,
        Suite::Q0dual,
        Suite::Q0summand,
        Suite::Mainthm,
        Suite::Selfdualanti,
        Suite::Controls,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::AlcoveLemmas => "alcove-lemmas",
            Suite::Density => "density",
            Suite::Verma => "verma",
            Suite::Dualtrans => "dualtrans",
            Suite::Kipptrans => "kipptrans",
            Suite::Q0dual => "q0dual",
            Suite::Q0summand => "q0summand",
            Suite::Mainthm => "mainthm",
            Suite::Selfdualanti => "selfdualanti",
            Suite::Controls => "controls",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = AjsError;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| AjsError::Parse(format!("unknown suite {s:?}")))
    }
}

/// Scale knobs. `None` picks the per-type default.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub root_type: RootType,
    pub window: Option<usize>,
    pub max_word: Option<usize>,
    pub seed: u64,
    /// Tilt used by the kipptrans suite; `None` means `w0`.
    pub tilt_by: Option<WeylElt>,
}

impl SuiteConfig {
    pub fn new(root_type: RootType) -> Self {
        SuiteConfig { root_type, window: None, max_word: None, seed: 0x5eed, tilt_by: None }
    }

    pub fn window(&self) -> usize {
        self.window.unwrap_or(match self.root_type {
            RootType::A1 => 8,
            RootType::A2 => 5,
            RootType::B2 => 4,
            RootType::G2 => 3,
        })
    }

    pub fn max_word(&self) -> usize {
        self.max_word.unwrap_or(match self.root_type {
            RootType::A1 => 6,
            RootType::A2 => 4,
            RootType::B2 => 3,
            RootType::G2 => 2,
        })
    }

    /// Length bound for the anti-fundamental box.
    pub fn anti_length(&self) -> usize {
        self.max_word.map_or(5, |m| m.max(RootDatum::get(self.root_type).n_pos()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub root_type: RootType,
    pub field: String,
    pub report: Report,
    pub notes: Vec<String>,
    pub millis: u128,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Run one suite (or all of them, one result each).
pub fn run<F: Field>(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<SuiteResult>> {
    if suite == Suite::All {
        return Suite::EACH.iter().map(|s| run_one::<F>(*s, cfg)).collect();
    }
    Ok(vec![run_one::<F>(suite, cfg)?])
}

fn run_one<F: Field>(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteResult> {
    let rd = RootDatum::get(cfg.root_type);
    let t = Instant::now();
    let mut notes = vec![];
    let report = match suite {
        Suite::AlcoveLemmas => {
            let mut r = Report::new();
            r.absorb_clauses(&verify_alcove_lemmas(rd, cfg.window()));
            notes.push(format!("window {}", cfg.window()));
            r
        }
        Suite::Density => {
            notes.push(format!("words up to length {}, seed {}", cfg.max_word(), cfg.seed));
            density_suite::<F>(rd, cfg)?
        }
        Suite::Verma => {
            notes.push(format!("words up to length {}", cfg.max_word()));
            over_words::<F>(rd, cfg.max_word(), |m, rep| {
                check_verma(m, rep)?;
                check_projtimesbeta(m, rep);
                check_alpha_strings(m, rep)
            })?
        }
        Suite::Dualtrans => over_words::<F>(rd, cfg.max_word(), |m, rep| {
            for s in Refl::all(rd) {
                let w = tau_sigma(s, m)?;
                let c = w.verify()?;
                rep.check("tau sigma inverse pair", c.ok(), || {
                    format!("{} via {}: {}", m.provenance().render(rd), s.label(rd), c.summary())
                });
            }
            Ok(())
        })?,
        Suite::Kipptrans => {
            let w = cfg.tilt_by.unwrap_or(rd.longest_element());
            notes.push(format!("tilt by {}", crate::ajscat::weyl_label(rd, w)));
            over_words::<F>(rd, cfg.max_word(), |m, rep| {
                for s in Refl::all(rd) {
                    let k = check_kipptrans(m, s, w)?;
                    rep.check("kipptrans equality", k.equal(), || {
                        format!("{} via {}: {}", m.provenance().render(rd), s.label(rd), k.failures.join("; "))
                    });
                }
                Ok(())
            })?
        }
        Suite::Q0dual => q0dual_suite::<F>(rd, &mut notes)?,
        Suite::Q0summand => q0summand_suite::<F>(rd, &mut notes)?,
        Suite::Mainthm => {
            notes.push(format!("Q0 words up to length {}, shifts -2 0 2", cfg.max_word()));
            mainthm_suite::<F>(rd, cfg.max_word())?
        }
        Suite::Selfdualanti => selfdualanti_suite::<F>(rd, cfg.anti_length(), &mut notes)?,
        Suite::Controls => controls_suite::<F>(rd, &mut notes)?,
        Suite::All => unreachable!("handled by run"),
    };
    Ok(SuiteResult {
        suite: suite.name().into(),
        root_type: cfg.root_type,
        field: F::label(),
        report,
        notes,
        millis: t.elapsed().as_millis(),
    })
}

/// Every word over all simple affine reflections of length at most `n`,
/// shortest first.
pub fn words(rd: &RootDatum, n: usize) -> Vec<Vec<Refl>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..n {
        let mut next = vec![];
        for w in &frontier {
            for s in Refl::all(rd) {
                let mut v: Vec<Refl> = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Visit `T_w(base)` for every word up to length `n` and both bases,
/// sharing prefixes; subtrees run in parallel.
fn over_words<F: Field>(
    rd: &'static RootDatum,
    n: usize,
    check: impl Fn(&KObject<F>, &mut Report) -> Result<()> + Sync,
) -> Result<Report> {
    fn walk<F: Field>(
        m: &KObject<F>,
        depth: usize,
        check: &(impl Fn(&KObject<F>, &mut Report) -> Result<()> + Sync),
        rep: &mut Report,
    ) -> Result<()> {
        check(m, rep)?;
        if depth == 0 {
            return Ok(());
        }
        for s in Refl::all(m.root_datum()) {
            walk(&m.translate(s), depth - 1, check, rep)?;
        }
        Ok(())
    }
    let mut roots = vec![];
    for base in [Base::P0, Base::Q0] {
        let b = KObject::<F>::base(rd, base);
        roots.push((b.clone(), 0usize));
        if n > 0 {
            for s in Refl::all(rd) {
                roots.push((b.translate(s), n - 1));
            }
        }
    }
    let parts: Vec<Result<Report>> = roots
        .par_iter()
        .enumerate()
        .map(|(i, (m, depth))| {
            let mut rep = Report::new();
            // the bare bases are checked once, without descending
            if i % (Refl::all(rd).len() + 1) == 0 {
                check(m, &mut rep)?;
            } else {
                walk(m, *depth, &check, &mut rep)?;
            }
            Ok(rep)
        })
        .collect();
    let mut total = Report::new();
    for p in parts {
        total.merge(p?);
    }
    Ok(total)
}

/// A random change of basis invertible over `S^β`: column operations
/// `v_i += c β^k v_j` with `k ≥ 0` and nonzero rescalings.
pub fn random_basis_change<F: Field>(e: &SubmoduleBasis<F>, rng: &mut impl Rng) -> Result<SubmoduleBasis<F>> {
    let (n, r) = (e.ambient_rank(), e.rank());
    let mut cols: Vec<Vec<F>> = (0..r)
        .map(|j| {
            let mut v = vec![F::zero(); n];
            for &(i, x) in e.matrix().col(j) {
                v[i] = x;
            }
            v
        })
        .collect();
    let degs = e.degrees().to_vec();
    for _ in 0..2 * r {
        let (i, j) = (rng.gen_range(0..r), rng.gen_range(0..r));
        if i == j {
            let c = F::from_i64(rng.gen_range(1..=4));
            if !c.is_zero() {
                cols[i].iter_mut().for_each(|x| *x = *x * c);
            }
        } else if degs[i] >= degs[j] && (degs[i] - degs[j]) % 2 == 0 {
            let c = F::from_i64(rng.gen_range(-3..=3));
            let add: Vec<F> = cols[j].iter().map(|x| *x * c).collect();
            cols[i].iter_mut().zip(add).for_each(|(x, y)| *x = *x + y);
        }
    }
    let sparse = cols
        .into_iter()
        .zip(degs)
        .map(|(c, d)| (c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect::<SpVec<F>>(), d))
        .collect();
    SubmoduleBasis::from_columns(e.root_datum(), e.beta(), e.ambient().to_vec(), e.split(), sparse)
}

fn density_suite<F: Field>(rd: &'static RootDatum, cfg: &SuiteConfig) -> Result<Report> {
    let seed = cfg.seed;
    over_words::<F>(rd, cfg.max_word(), move |m, rep| {
        check_density(m, rep);
        // one seeded basis change per object, at each edge
        let mut h = DefaultHasher::new();
        m.provenance().render(rd).hash(&mut h);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h.finish());
        for (&(a, b), e) in m.edges() {
            let f = random_basis_change(e, &mut rng)?;
            let here = || format!("{} at ({}, {}), seed {seed}", m.provenance().render(rd), rd.alcove_label(a), rd.root_label(b));
            rep.check("basis change keeps span", f.same_span(e)?, here);
            rep.check("basis change keeps density", f.is_dense() == e.is_dense(), here);
            rep.check("basis change keeps invariants", f.snf_beta().exponents == e.snf_beta().exponents, here);
        }
        Ok(())
    })
}

fn q0dual_suite<F: Field>(rd: &'static RootDatum, notes: &mut Vec<String>) -> Result<Report> {
    let mut rep = Report::new();
    let q = KObject::<F>::q_zero(rd);
    if rd.rank == 1 {
        let t = KObject::<F>::bott_samelson(rd, &[Refl(0)], Base::P0, 0);
        let diff = q.first_difference(&t)?;
        rep.check("q_zero is the translated unit", diff.is_none(), || diff.unwrap_or_default());
    }
    let g = crate::ajscat::linking_graph(&q)?;
    rep.check("q0 indecomposable", g.indecomposable_by_linking(), || {
        format!("max rank {}, connected {}", g.max_rank, g.connected)
    });
    notes.push(format!("{} alcoves, {} linking edges", g.vertices, g.linking_edges.len()));
    let w = q0_selfdual_witness::<F>(rd)?;
    let c = w.verify()?;
    rep.check("q0 witness", c.ok(), || c.summary());
    let want = -2 * rd.n_pos() as i32;
    rep.check("q0 witness shift", w.shift == want, || format!("shift {} vs {want}", w.shift));
    notes.push(format!("shift {}", w.shift));
    Ok(rep)
}

fn q0summand_suite<F: Field>(rd: &'static RootDatum, notes: &mut Vec<String>) -> Result<Report> {
    let mut rep = Report::new();
    for w in reduced_words_w0(rd) {
        let sp = q0_summand_split::<F>(rd, &w)?;
        let label = word_label(rd, &w);
        for (name, ok, detail) in &sp.checks {
            rep.check(name, *ok, || format!("{label}: {detail}"));
        }
        rep.check("composite is an automorphism", sp.composite_is_automorphism, || label.clone());
        rep.check("top component invertible of degree 0", sp.top_component_invertible, || label.clone());
        notes.push(format!("{label}: composite is the identity: {}", sp.composite_is_identity));
    }
    Ok(rep)
}

fn mainthm_suite<F: Field>(rd: &'static RootDatum, n: usize) -> Result<Report> {
    fn walk<F: Field>(
        wit: &DualityWitness<F>,
        m: &KObject<F>,
        r: usize,
        depth: usize,
        rep: &mut Report,
    ) -> Result<()> {
        let rd = m.root_datum();
        let here = || m.provenance().render(rd);
        let c = wit.verify()?;
        rep.check("witness", c.ok(), || format!("{}: {}", here(), c.summary()));
        let z = -2 * r as i32 - 2 * rd.n_pos() as i32;
        rep.check("witness shift", wit.shift == z, || format!("{}: {} vs {z}", here(), wit.shift));
        for k in [-2, 2] {
            let s = shift_witness(wit, m, k)?;
            let c = s.verify()?;
            rep.check("shifted witness", c.ok() && s.shift == z - 2 * k, || {
                format!("{}{{{k}}}: shift {}, {}", here(), s.shift, c.summary())
            });
        }
        if depth == 0 {
            return Ok(());
        }
        for s in Refl::all(rd) {
            let next = extend_witness(wit, m, s)?;
            walk(&next, &m.translate(s), r + 1, depth - 1, rep)?;
        }
        Ok(())
    }
    let q = KObject::<F>::q_zero(rd);
    let w = q0_selfdual_witness::<F>(rd)?;
    let mut rep = Report::new();
    walk(&w, &q, 0, 0, &mut rep)?;
    if n == 0 {
        return Ok(rep);
    }
    let parts: Vec<Result<Report>> = Refl::all(rd)
        .into_par_iter()
        .map(|s| {
            let mut r = Report::new();
            walk(&extend_witness(&w, &q, s)?, &q.translate(s), 1, n - 1, &mut r)?;
            Ok(r)
        })
        .collect();
    for p in parts {
        rep.merge(p?);
    }
    Ok(rep)
}

fn selfdualanti_suite<F: Field>(rd: &'static RootDatum, max_len: usize, notes: &mut Vec<String>) -> Result<Report> {
    let mut rep = Report::new();
    let boxed = box_alcoves(rd, max_len);
    rep.check("box is nonempty", !boxed.is_empty(), || format!("no box alcoves up to length {max_len}"));
    let mut instances = 0;
    for a in boxed {
        let words = anti_words(rd, a);
        rep.check("reduced words through w0", !words.is_empty(), || rd.alcove_label(a));
        for w in words {
            let r = selfdual_anti_check::<F>(rd, a, &w)?;
            instances += 1;
            rep.merge(r.report);
        }
    }
    notes.push(format!("{instances} (alcove, word) pairs up to length {max_len}"));
    Ok(rep)
}

/// The butterfly `{(βx + y, y)}` next to the sum of its intersections
/// with the two blocks.
pub fn butterfly_vs_split<F: Field>(rd: &'static RootDatum, beta: usize) -> Result<(SubmoduleBasis<F>, SubmoduleBasis<F>)> {
    let one = F::one();
    let fly = SubmoduleBasis::from_columns(rd, beta, vec![0, 0], 1, vec![(vec![(0, one)], 2), (vec![(0, one), (1, one)], 0)])?;
    let split = SubmoduleBasis::from_columns(rd, beta, vec![0, 0], 1, vec![(vec![(0, one)], 2), (vec![(1, one)], 2)])?;
    Ok((fly, split))
}

fn controls_suite<F: Field>(rd: &'static RootDatum, notes: &mut Vec<String>) -> Result<Report> {
    let mut rep = Report::new();
    // multiplication by α_0 against the shift by -2
    let q = KObject::<F>::q_zero(rd);
    let qs = q.shift(-2);
    let alpha = RootFraction::<F>::root(rd, Root::pos(0));
    let f = KMorphism::scalar_family(&q, &qs, |_| alpha.clone());
    let inv = alpha.inverse_unit().expect("roots are units");
    let g = KMorphism::scalar_family(&qs, &q, |_| inv.clone());
    rep.check("alpha control: inverse is not a morphism", !g.is_morphism(&qs, &q)?, || {
        "the inverse of multiplication by alpha passed".into()
    });
    rep.check("alpha control: not an isomorphism", !f.is_isomorphism(&q, &qs)?, || {
        "multiplication by alpha was accepted as an isomorphism".into()
    });
    notes.push(format!("multiplication by alpha is a morphism: {}", f.is_morphism(&q, &qs)?));
    // butterfly against the split lattice with the same block intersections
    for b in 0..rd.n_pos() {
        let (fly, split) = butterfly_vs_split::<F>(rd, b)?;
        rep.check("butterfly differs from split", !fly.same_span(&split)?, || rd.root_label(b));
        rep.check("butterfly links", fly.links()?, || rd.root_label(b));
        rep.check("split does not link", !split.links()?, || rd.root_label(b));
    }
    // tilting by the identity breaks kipptrans in rank two
    if rd.rank == 2 {
        let mut broken = 0;
        for s in Refl::all(rd) {
            broken += check_kipptrans(&q, s, WeylElt::E)?.failures.len();
        }
        rep.check("tilt by e breaks kipptrans", broken > 0, || "no failing edge".into());
        notes.push(format!("tilt by e: {broken} failing entries on Q0"));
    }
    Ok(rep)
}
