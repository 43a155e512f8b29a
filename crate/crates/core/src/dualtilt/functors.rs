//! The duality `D` and the tilting functors `C_w`.

use std::collections::BTreeMap;

use crate::ajscat::{KObject, Step};
use crate::alcove::{Alcove, AlcoveDisplay};
use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::rootsys::{Root, RootDatum, WeylElt};

/// `(-1)^floor(x/2)`.
fn half_sign<F: Field>(x: i32) -> F {
    if x.div_euclid(2).rem_euclid(2) == 0 {
        F::one()
    } else {
        -F::one()
    }
}

/// `D M`: dual bases, degrees negated. Every edge must be dense.
pub fn dualize<F: Field>(m: &KObject<F>) -> Result<KObject<F>> {
    let rd = m.root_datum();
    let comps = m.components().iter().map(|(a, d)| (*a, d.iter().map(|x| -x).collect())).collect();
    let mut edges = BTreeMap::new();
    for (&(a, b), e) in m.edges() {
        let d = e.dual().map_err(|_| AjsError::NotDense { alcove: rd.alcove_label(a), beta: rd.root_label(b) })?;
        edges.insert((a, b), d);
    }
    let mut prov = m.provenance().clone();
    prov.steps.push(Step::Dual);
    Ok(KObject::raw(rd, comps, edges, prov))
}

/// `w.A` for a finite `w`.
pub fn left_act(rd: &RootDatum, w: WeylElt, a: Alcove) -> Alcove {
    rd.compose(Alcove::finite(w), a)
}

/// `C_w N`: `C_w N(A) = N(w.A)`, edges taken from `N` at the root
/// `w(β)^+` and twisted back to `β`; when `w(β)` is negative the two blocks
/// trade places.
pub fn tilt<F: Field>(n: &KObject<F>, w: WeylElt) -> Result<KObject<F>> {
    let rd = n.root_datum();
    let wi = rd.inverse(w);
    let comps: BTreeMap<Alcove, Vec<i32>> = n.components().iter().map(|(a, d)| (left_act(rd, wi, *a), d.clone())).collect();
    let supp = comps.keys().copied().collect();
    let mut edges = BTreeMap::new();
    for (a, b) in KObject::<F>::candidate_edges(rd, &supp) {
        let up = rd.up(b, a);
        let g = rd.weyl_act(w, Root::pos(b));
        let e = if !g.neg {
            let wa = left_act(rd, w, a);
            if rd.up(g.idx, wa) != left_act(rd, w, up) {
                return Err(wall_mismatch(rd, a, b));
            }
            n.edge_or_zero(wa, g.idx).with_beta(b)
        } else {
            let wu = left_act(rd, w, up);
            if rd.up(g.idx, wu) != left_act(rd, w, a) {
                return Err(wall_mismatch(rd, a, b));
            }
            let src = n.edge_or_zero(wu, g.idx);
            // the twist sends w(β)^+ to -β
            let r: Vec<F> = src.ambient().iter().map(|&u| half_sign(u)).collect();
            let c: Vec<F> = src.degrees().iter().map(|&v| half_sign(v)).collect();
            let (s, tot) = (src.split(), src.ambient_rank());
            let perm: Vec<usize> = (s..tot).chain(0..s).collect();
            src.rescale(&r, &c).permute_ambient(&perm, tot - s).with_beta(b)
        };
        if e.ambient_rank() > 0 {
            edges.insert((a, b), e);
        }
    }
    let mut prov = n.provenance().clone();
    prov.steps.push(Step::Tilt(w.index() as u8));
    Ok(KObject::raw(rd, comps, edges, prov))
}

fn wall_mismatch(rd: &RootDatum, a: Alcove, b: usize) -> AjsError {
    AjsError::Verification {
        stage: "tilt".into(),
        detail: format!("w(β)↑ does not match w.(β↑A) at ({}, {})", AlcoveDisplay(rd, a), rd.root_label(b)),
    }
}

/// `C = C_{w0}`.
pub fn tilt_w0<F: Field>(n: &KObject<F>) -> Result<KObject<F>> {
    tilt(n, n.root_datum().longest_element())
}
