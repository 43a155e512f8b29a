//! Structural checks on objects: density, the two image identities at
//! every edge, multiplication by β inside an edge, α-strings and the
//! linking graph of `Q0`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::ajscat::object::{Base, KObject};
use crate::alcove::{Alcove, AlcoveDisplay};
use crate::error::Result;
use crate::field::Field;
use crate::lattice::SubmoduleBasis;
use crate::report::Report;

/// Every stored edge spans its ambient after inverting β.
pub fn check_density<F: Field>(m: &KObject<F>, rep: &mut Report) {
    let rd = m.root_datum();
    for (&(a, b), e) in m.edges() {
        rep.check("density", e.is_dense(), || format!("edge ({}, {}) is not dense", AlcoveDisplay(rd, a), rd.root_label(b)));
    }
}

fn describe<F: Field>(m: &KObject<F>, a: Alcove, b: usize) -> String {
    let rd = m.root_datum();
    format!("{} at ({}, {})", m.provenance().render(rd), AlcoveDisplay(rd, a), rd.root_label(b))
}

/// `pr_A M(A,β) = M(β↓A,β) ∩ M(A)` and `β pr_A M(β↓A,β) ⊆ M(A,β) ∩ M(A)`,
/// the latter with equality when the object is built from `Q0`.
pub fn check_verma<F: Field>(m: &KObject<F>, rep: &mut Report) -> Result<()> {
    let rd = m.root_datum();
    let equality = m.provenance().base == Some(Base::Q0);
    for &a in m.components().keys() {
        for b in 0..rd.n_pos() {
            let up = m.edge_or_zero(a, b);
            let down = m.edge_or_zero(rd.down(b, a), b);
            let proj_up = up.project_block(0)?;
            let cap_down = down.intersect_block(1)?;
            rep.check("imagedown", proj_up.same_span(&cap_down)?, || describe(m, a, b));
            let lhs = down.project_block(1)?.scale(1);
            let rhs = up.intersect_block(0)?;
            rep.check("imageup inclusion", rhs.includes(&lhs)?, || describe(m, a, b));
            if equality {
                rep.check("imageup equality", lhs.includes(&rhs)?, || describe(m, a, b));
            }
        }
    }
    Ok(())
}

/// `(m1, m2) ∈ M(A,β)` implies `(βm1, 0)` and `(0, βm2)` are in it too.
pub fn check_projtimesbeta<F: Field>(m: &KObject<F>, rep: &mut Report) {
    for (&(a, b), e) in m.edges() {
        rep.check("projtimesbeta", projtimesbeta_holds(e), || describe(m, a, b));
    }
}

pub(crate) fn projtimesbeta_holds<F: Field>(e: &SubmoduleBasis<F>) -> bool {
    let split = e.split();
    let mut q = vec![];
    for j in 0..e.rank() {
        let (lo, hi): (Vec<_>, Vec<_>) = e.matrix().col(j).iter().partition(|(i, _)| *i < split);
        let d = e.degrees()[j] + 2;
        q.push((lo, d));
        q.push((hi, d));
    }
    e.contains_all(&q).into_iter().all(|x| x)
}

/// For each alcove of the support and each positive root, the support
/// meets the α-string through it in an unbroken run.
pub fn check_alpha_strings<F: Field>(m: &KObject<F>, rep: &mut Report) -> Result<()> {
    let rd = m.root_datum();
    let supp = m.support();
    for &a in &supp {
        for b in 0..rd.n_pos() {
            let s = rd.alpha_string(a, b, &supp)?;
            let strips: Vec<i64> = s.iter().map(|x| rd.strip(b, *x)).collect();
            let ok = strips.windows(2).all(|w| w[1] == w[0] + 1);
            rep.check("alpha-string interval", ok, || describe(m, a, b));
        }
    }
    Ok(())
}

/// Density, image identities and `projtimesbeta` in one go.
pub fn check_structure<F: Field>(m: &KObject<F>, rep: &mut Report) -> Result<()> {
    check_density(m, rep);
    check_verma(m, rep)?;
    check_projtimesbeta(m, rep);
    Ok(())
}

/// Result of the indecomposability argument for `Q0`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct LinkingGraph {
    pub max_rank: usize,
    pub vertices: usize,
    pub linking_edges: Vec<(String, String, String)>,
    pub connected: bool,
}

impl LinkingGraph {
    /// Ranks at most one and one linked block.
    pub fn indecomposable_by_linking(&self) -> bool {
        self.max_rank <= 1 && self.connected
    }
}

/// The graph on `supp M` joining `A` and `β↑A` whenever `M(A,β)` links.
pub fn linking_graph<F: Field>(m: &KObject<F>) -> Result<LinkingGraph> {
    let rd = m.root_datum();
    let supp = m.support();
    let mut adj: BTreeMap<Alcove, BTreeSet<Alcove>> = supp.iter().map(|a| (*a, BTreeSet::new())).collect();
    let mut linking_edges = vec![];
    for (&(a, b), _) in m.edges() {
        if m.links(a, b)? {
            let u = rd.up(b, a);
            adj.entry(a).or_default().insert(u);
            adj.entry(u).or_default().insert(a);
            linking_edges.push((rd.alcove_label(a), rd.alcove_label(u), rd.root_label(b)));
        }
    }
    let connected = match supp.iter().next() {
        None => true,
        Some(&start) => {
            let mut seen = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in &adj[&x] {
                    if seen.insert(*y) {
                        queue.push_back(*y);
                    }
                }
            }
            seen.len() == supp.len()
        }
    };
    Ok(LinkingGraph {
        max_rank: m.components().values().map(|d| d.len()).max().unwrap_or(0),
        vertices: supp.len(),
        linking_edges,
        connected,
    })
}

/// `Q0` has rank-one components joined by linking edges into one block.
pub fn q0_indecomposable_check<F: Field>(rd: &'static crate::rootsys::RootDatum) -> Result<LinkingGraph> {
    linking_graph(&KObject::<F>::q_zero(rd))
}
