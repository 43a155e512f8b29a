//! Explicit isomorphisms: `τ/σ` between `D T_s` and `{-2} T_s^∨ D`, the
//! block swap `κ` between `C T_s^∨` and `T_s C`, the self-duality of `Q0`
//! and its extension to Bott-Samelson like objects, and the splitting of
//! `Q0` off `T_{s_l} ... T_{s_1} P0`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::ajscat::{lift_hom, FracMat, KMorphism, KObject};
use crate::alcove::{Alcove, AlcoveDisplay, Refl};
use crate::dualtilt::functors::{dualize, left_act, tilt};
use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::fracring::RootFraction;
use crate::rootsys::{Root, RootDatum, WeylElt};

/// Mutually inverse morphisms `source ⇄ target`.
#[derive(Clone, Debug)]
pub struct DualityWitness<F: Field> {
    pub source: KObject<F>,
    pub target: KObject<F>,
    pub forward: KMorphism<F>,
    pub backward: KMorphism<F>,
    /// The declared grading shift.
    pub shift: i32,
}

/// Outcome of checking a witness.
#[derive(Clone, Debug, Default, Serialize)]
pub struct WitnessCheck {
    pub forward_defect: Option<String>,
    pub backward_defect: Option<String>,
    pub backward_after_forward_is_id: bool,
    pub forward_after_backward_is_id: bool,
}

impl WitnessCheck {
    pub fn ok(&self) -> bool {
        self.forward_defect.is_none()
            && self.backward_defect.is_none()
            && self.backward_after_forward_is_id
            && self.forward_after_backward_is_id
    }

    pub fn summary(&self) -> String {
        let mut parts = vec![];
        if let Some(d) = &self.forward_defect {
            parts.push(format!("forward: {d}"));
        }
        if let Some(d) = &self.backward_defect {
            parts.push(format!("backward: {d}"));
        }
        if !self.backward_after_forward_is_id {
            parts.push("backward ∘ forward ≠ id".into());
        }
        if !self.forward_after_backward_is_id {
            parts.push("forward ∘ backward ≠ id".into());
        }
        if parts.is_empty() {
            "ok".into()
        } else {
            parts.join("; ")
        }
    }
}

impl<F: Field> DualityWitness<F> {
    pub fn verify(&self) -> Result<WitnessCheck> {
        Ok(WitnessCheck {
            forward_defect: self.forward.defect(&self.source, &self.target)?,
            backward_defect: self.backward.defect(&self.target, &self.source)?,
            backward_after_forward_is_id: self.backward.compose(&self.forward).is_identity(),
            forward_after_backward_is_id: self.forward.compose(&self.backward).is_identity(),
        })
    }

    /// The same matrices between `source{l}` and `target{l}`.
    pub fn shifted(&self, l: i32) -> Self {
        DualityWitness {
            source: self.source.shift(l),
            target: self.target.shift(l),
            forward: self.forward.clone(),
            backward: self.backward.clone(),
            shift: self.shift,
        }
    }
}

/// `α_s(A)` as a fraction.
pub fn alpha_s_fraction<F: Field>(rd: &'static RootDatum, a: Alcove, s: Refl) -> RootFraction<F> {
    RootFraction::root(rd, rd.alpha_s(a, s))
}

/// `τ: D T_s M → {-2} T_s^∨ D M`, `τ_A = α_s(A)`, with inverse `σ`.
pub fn tau_sigma<F: Field>(s: Refl, m: &KObject<F>) -> Result<DualityWitness<F>> {
    let rd = m.root_datum();
    let x = dualize(&m.translate(s))?;
    let y = dualize(m)?.translate_dual(s).shift(-2);
    let tau = KMorphism::scalar_family(&x, &y, |a| alpha_s_fraction(rd, a, s));
    let sigma = KMorphism::scalar_family(&y, &x, |a| {
        alpha_s_fraction::<F>(rd, a, s).inverse_unit().expect("roots are units")
    });
    Ok(DualityWitness { source: x, target: y, forward: tau, backward: sigma, shift: -2 })
}

/// Comparison of `C_w T_s^∨ N` with `T_s C_w N`.
#[derive(Clone, Debug)]
pub struct KippTrans<F: Field> {
    pub left: KObject<F>,
    pub right: KObject<F>,
    /// Block permutations `left → right`.
    pub kappa: KMorphism<F>,
    pub components_checked: usize,
    pub edges_checked: usize,
    pub failures: Vec<String>,
}

impl<F: Field> KippTrans<F> {
    pub fn equal(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Per-alcove block permutation and the permuted degree list.
fn kappa_perm<F: Field>(n: &KObject<F>, s: Refl, w: WeylElt, a: Alcove) -> Option<Vec<usize>> {
    let rd = n.root_datum();
    let (lm, lp) = KObject::<F>::sides(rd, left_act(rd, w, a), s);
    let (am, ap) = KObject::<F>::sides(rd, a, s);
    let left = [(lm, 0), (lp, n.rank(lm))];
    let mut perm = vec![];
    for lab in [left_act(rd, w, am), left_act(rd, w, ap)] {
        let &(x, start) = left.iter().find(|(x, _)| *x == lab)?;
        perm.extend(start..start + n.rank(x));
    }
    Some(perm)
}

/// Compare both sides componentwise (after the block swap `κ`) and
/// edge by edge.
pub fn check_kipptrans<F: Field>(n: &KObject<F>, s: Refl, w: WeylElt) -> Result<KippTrans<F>> {
    let rd = n.root_datum();
    let left = tilt(&n.translate_dual(s), w)?;
    let right = tilt(n, w)?.translate(s);
    let mut failures = vec![];
    let alcoves: BTreeSet<Alcove> = left.components().keys().chain(right.components().keys()).copied().collect();
    let mut perms: BTreeMap<Alcove, Vec<usize>> = BTreeMap::new();
    let mut maps = BTreeMap::new();
    for &a in &alcoves {
        match kappa_perm(n, s, w, a) {
            Some(p) => {
                let permuted: Vec<i32> = p.iter().map(|&i| left.component(a)[i]).collect();
                if permuted != right.component(a) {
                    failures.push(format!("component {}", AlcoveDisplay(rd, a)));
                }
                maps.insert(a, FracMat::permutation(rd, &p));
                perms.insert(a, p);
            }
            None => failures.push(format!("the walls at {} do not match", AlcoveDisplay(rd, a))),
        }
    }
    let keys: BTreeSet<(Alcove, usize)> = left.edges().keys().chain(right.edges().keys()).copied().collect();
    for &(a, b) in &keys {
        let up = rd.up(b, a);
        let empty = vec![];
        let Some(pa) = perms.get(&a) else { continue };
        let pu = perms.get(&up).unwrap_or(&empty);
        let off = pa.len();
        let perm: Vec<usize> = pa.iter().copied().chain(pu.iter().map(|i| i + off)).collect();
        let l = left.edge_or_zero(a, b);
        let r = right.edge_or_zero(a, b);
        if l.ambient_rank() != perm.len() {
            failures.push(format!("edge ({}, {}): ambient sizes differ", AlcoveDisplay(rd, a), rd.root_label(b)));
            continue;
        }
        let lp = l.permute_ambient(&perm, off);
        if lp.split() != r.split() || lp.ambient() != r.ambient() || !lp.same_span(&r)? {
            failures.push(format!("edge ({}, {})", AlcoveDisplay(rd, a), rd.root_label(b)));
        }
    }
    Ok(KippTrans {
        components_checked: alcoves.len(),
        edges_checked: keys.len(),
        kappa: KMorphism::from_maps(rd, maps),
        left,
        right,
        failures,
    })
}

/// `δ = ∏ α` over the positive roots.
pub fn delta<F: Field>(rd: &'static RootDatum) -> RootFraction<F> {
    (0..rd.n_pos()).fold(RootFraction::one(rd), |acc, b| &acc * &RootFraction::root(rd, Root::pos(b)))
}

/// `g: C D Q0 → Q0{-2 l(w0)}`, `g_{A_w} = (-1)^{l(w)} δ`, and its inverse `f`.
pub fn q0_selfdual_witness<F: Field>(rd: &'static RootDatum) -> Result<DualityWitness<F>> {
    let q = KObject::<F>::q_zero(rd);
    let x = tilt(&dualize(&q)?, rd.longest_element())?;
    let z = -2 * rd.n_pos() as i32;
    let y = q.shift(z);
    let d = delta::<F>(rd);
    let di = d.inverse_unit().expect("δ is a unit");
    let sign = |a: Alcove| if rd.length(a.w) % 2 == 0 { F::one() } else { -F::one() };
    let g = KMorphism::scalar_family(&x, &y, |a| d.scale(sign(a)));
    let f = KMorphism::scalar_family(&y, &x, |a| di.scale(sign(a)));
    Ok(DualityWitness { source: x, target: y, forward: g, backward: f, shift: z })
}

/// From `prev: C D Z → T` build `C D T_s Z → (T_s T){-2}` as
/// `T_s(prev) ∘ κ ∘ C τ`; the inverse is `C σ ∘ κ⁻¹ ∘ T_s(prev⁻¹)`.
pub fn extend_witness<F: Field>(prev: &DualityWitness<F>, z: &KObject<F>, s: Refl) -> Result<DualityWitness<F>> {
    let rd = z.root_datum();
    let w0 = rd.longest_element();
    let ts = tau_sigma(s, z)?;
    let kp = check_kipptrans(&dualize(z)?, s, w0)?;
    if !kp.equal() {
        return Err(AjsError::Verification {
            stage: "kipptrans".into(),
            detail: format!("{} failures, first: {}", kp.failures.len(), kp.failures[0]),
        });
    }
    let source = tilt(&ts.source, w0)?;
    let target = prev.target.translate(s).shift(-2);
    let forward = prev.forward.translate(s).compose(&kp.kappa.compose(&ts.forward.tilt(w0)));
    let backward = ts.backward.tilt(w0).compose(&kp.kappa.dual().compose(&prev.backward.translate(s)));
    Ok(DualityWitness { source, target, forward, backward, shift: prev.shift - 2 })
}

/// `C D M ≅ M{z}` for `M = T_{s_r} ... T_{s_1} Q0`, `z = -2r - 2 l(w0)`.
pub fn bs_selfdual_witness<F: Field>(rd: &'static RootDatum, word: &[Refl]) -> Result<DualityWitness<F>> {
    let mut wit = q0_selfdual_witness(rd)?;
    let mut m = KObject::<F>::q_zero(rd);
    for &s in word {
        wit = extend_witness(&wit, &m, s)?;
        m = m.translate(s);
    }
    Ok(wit)
}

/// The witness for `M{n}`: computed objects on both sides, same matrices,
/// shift `z - 2n`.
pub fn shift_witness<F: Field>(wit: &DualityWitness<F>, m: &KObject<F>, n: i32) -> Result<DualityWitness<F>> {
    let mn = m.shift(n);
    let z = wit.shift - 2 * n;
    Ok(DualityWitness {
        source: tilt(&dualize(&mn)?, m.root_datum().longest_element())?,
        target: mn.shift(z),
        forward: wit.forward.clone(),
        backward: wit.backward.clone(),
        shift: z,
    })
}

/// Everything built while splitting `Q0` off `B = T_{s_l} ... T_{s_1} P0`.
#[derive(Clone, Debug)]
pub struct SummandSplit<F: Field> {
    pub bs: KObject<F>,
    /// `f̃: Q0 → B`.
    pub embed: KMorphism<F>,
    /// `ξ ∘ C D(g̃) ∘ η: B → Q0`.
    pub project: KMorphism<F>,
    pub composite: KMorphism<F>,
    pub checks: Vec<(String, bool, String)>,
    pub composite_is_identity: bool,
    pub composite_is_automorphism: bool,
    pub top_component_invertible: bool,
}

impl<F: Field> SummandSplit<F> {
    pub fn succeeded(&self) -> bool {
        self.checks.iter().all(|c| c.1) && self.composite_is_automorphism && self.top_component_invertible
    }
}

fn reduced_word_of_w0(rd: &RootDatum, word: &[Refl]) -> Result<()> {
    if word.iter().any(|s| s.is_affine(rd)) {
        return Err(AjsError::NotReducedForW0);
    }
    let fin: Vec<usize> = word.iter().map(|s| s.0 as usize).collect();
    if fin.len() != rd.n_pos() || rd.from_word(&fin)? != rd.longest_element() {
        return Err(AjsError::NotReducedForW0);
    }
    Ok(())
}

/// Split `Q0` off `T_{s_l} ... T_{s_1} P0` for a reduced word of `w0`.
pub fn q0_summand_split<F: Field>(rd: &'static RootDatum, word: &[Refl]) -> Result<SummandSplit<F>> {
    reduced_word_of_w0(rd, word)?;
    let w0 = rd.longest_element();
    let q = KObject::<F>::q_zero(rd);
    let p = KObject::<F>::unit_object(rd);
    let cp = tilt(&p, w0)?;
    let top = left_act(rd, w0, Alcove::E);
    let mut checks: Vec<(String, bool, String)> = vec![];
    let mut note = |name: &str, d: Option<String>| checks.push((name.to_string(), d.is_none(), d.unwrap_or_default()));

    // f: Q0 → P0 and g: Q0 → C P0, then lifted along the word
    let unit_at = |tgt: &KObject<F>, at: Alcove| {
        KMorphism::from_fn(&q, tgt, |a, r, c| if a == at { FracMat::identity(rd, 1) } else { FracMat::zeros(rd, r, c) })
    };
    let mut f = unit_at(&p, Alcove::E);
    let mut g = unit_at(&cp, top);
    note("f: Q0 → P0", f.defect(&q, &p)?);
    note("g: Q0 → C P0", g.defect(&q, &cp)?);
    let (mut b, mut bc) = (p.clone(), cp.clone());
    for &s in word {
        f = lift_hom(&f, &q, s)?;
        g = lift_hom(&g, &q, s)?;
        b = b.translate(s);
        bc = bc.translate(s);
    }
    note("f̃: Q0 → T...T P0", f.defect(&q, &b)?);
    note("g̃: Q0 → T...T C P0", g.defect(&q, &bc)?);

    // η: B{-2l} → C D (T...T C P0), built along the word from C D C P0 = P0
    let base_src = tilt(&dualize(&cp)?, w0)?;
    let same = base_src.first_difference(&p)?;
    note("C D C P0 = P0", same);
    let mut wit = DualityWitness {
        forward: KMorphism::identity(&p),
        backward: KMorphism::identity(&p),
        source: base_src,
        target: p.clone(),
        shift: 0,
    };
    let mut z = cp.clone();
    for &s in word {
        wit = extend_witness(&wit, &z, s)?;
        z = z.translate(s);
    }
    let wc = wit.verify()?;
    note("η chain", (!wc.ok()).then(|| wc.summary()));
    let eta = wit.backward.clone();

    // C D (g̃): C D (T...T C P0) → C D Q0
    let cdg = g.dual().tilt(w0);
    let cdq = tilt(&dualize(&q)?, w0)?;
    note("C D g̃", cdg.defect(&wit.source, &cdq)?);
    // ξ: C D Q0 {2l} → Q0
    let xi_w = q0_selfdual_witness::<F>(rd)?;
    let xc = xi_w.verify()?;
    note("ξ", (!xc.ok()).then(|| xc.summary()));
    let xi = xi_w.forward.clone();

    let project = xi.compose(&cdg.compose(&eta));
    note("projection B → Q0", project.defect(&b, &q)?);
    let composite = project.compose(&f);
    note("composite Q0 → Q0", composite.defect(&q, &q)?);
    let composite_is_automorphism = composite.is_isomorphism(&q, &q)?;
    let top_component_invertible = composite
        .at(top)
        .map(|m| m.nrows() == 1 && m.ncols() == 1 && m.get(0, 0).is_unit(None) && m.get(0, 0).degree() == Some(0))
        .unwrap_or(false);
    Ok(SummandSplit {
        composite_is_identity: composite.is_identity(),
        bs: b,
        embed: f,
        project,
        composite,
        checks,
        composite_is_automorphism,
        top_component_invertible,
    })
}
