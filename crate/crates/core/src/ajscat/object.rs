//! Objects of `K`: families of graded free `S^∅`-modules `M(A)` with
//! `S^β`-lattices `M(A, β) ⊆ M(A) ⊕ M(β↑A)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alcove::{word_label, Alcove, AlcoveDisplay, Refl};
use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::lattice::SubmoduleBasis;
use crate::linalg::SpMat;
use crate::rootsys::{RootDatum, WeylElt};

/// Which object a construction started from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Base {
    P0,
    Q0,
}

impl Base {
    pub fn label(self) -> &'static str {
        match self {
            Base::P0 => "P0",
            Base::Q0 => "Q0",
        }
    }
}

impl std::str::FromStr for Base {
    type Err = AjsError;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "P0" | "P" => Ok(Base::P0),
            "Q0" | "Q" => Ok(Base::Q0),
            o => Err(AjsError::Parse(format!("unknown base object `{o}` (use P0 or Q0)"))),
        }
    }
}

/// One functor application in the history of an object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    Translate(u8),
    TranslateDual(u8),
    Shift(i32),
    Dual,
    /// index of the Weyl group element
    Tilt(u8),
}

/// Construction history. Membership in the subcategory generated from `Q0`
/// is decided by this record, not by an intrinsic test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub base: Option<Base>,
    pub steps: Vec<Step>,
}

impl Provenance {
    pub fn from_base(b: Base) -> Self {
        Provenance { base: Some(b), steps: vec![] }
    }

    /// Only translations (and shifts) applied to a base object.
    pub fn is_bott_samelson(&self) -> bool {
        self.base.is_some() && self.steps.iter().all(|s| matches!(s, Step::Translate(_) | Step::Shift(_)))
    }

    pub fn render(&self, rd: &RootDatum) -> String {
        let mut s = self.base.map_or("?".to_string(), |b| b.label().to_string());
        for st in &self.steps {
            s = match st {
                Step::Translate(r) => format!("T[{}]({s})", Refl(*r).label(rd)),
                Step::TranslateDual(r) => format!("Tv[{}]({s})", Refl(*r).label(rd)),
                Step::Shift(l) => format!("({s}){{{l}}}"),
                Step::Dual => format!("D({s})"),
                Step::Tilt(w) => format!("C[w{w}]({s})"),
            };
        }
        s
    }
}

/// An object of `K` with finite support.
#[derive(Clone, Debug)]
pub struct KObject<F: Field> {
    rd: &'static RootDatum,
    comps: BTreeMap<Alcove, Vec<i32>>,
    edges: BTreeMap<(Alcove, usize), SubmoduleBasis<F>>,
    prov: Provenance,
}

/// Rank and sorted generator degrees of one component.
pub type RankTable = BTreeMap<Alcove, (usize, Vec<i32>)>;

const EMPTY: &[i32] = &[];

impl<F: Field> KObject<F> {
    /// Assemble an object from raw data, validating the shape invariants.
    pub fn from_parts(
        rd: &'static RootDatum,
        comps: BTreeMap<Alcove, Vec<i32>>,
        edges: BTreeMap<(Alcove, usize), SubmoduleBasis<F>>,
        prov: Provenance,
    ) -> Result<Self> {
        let comps: BTreeMap<_, _> = comps.into_iter().filter(|(_, d)| !d.is_empty()).collect();
        let obj = KObject { rd, comps, edges, prov };
        for (&(a, b), e) in &obj.edges {
            let want = obj.edge_ambient(a, b);
            if e.ambient() != want.0.as_slice() || e.split() != want.1 || e.beta() != b {
                return Err(AjsError::Schema(format!(
                    "edge ({}, {}) has ambient {:?}/{} but the components give {:?}/{}",
                    AlcoveDisplay(rd, a),
                    rd.root_label(b),
                    e.ambient(),
                    e.split(),
                    want.0,
                    want.1
                )));
            }
        }
        // every edge with a nonzero endpoint must be present
        for a in obj.comps.keys() {
            for b in 0..rd.n_pos() {
                for key in [(*a, b), (rd.down(b, *a), b)] {
                    if !obj.edges.contains_key(&key) {
                        return Err(AjsError::Schema(format!(
                            "missing edge ({}, {})",
                            AlcoveDisplay(rd, key.0),
                            rd.root_label(b)
                        )));
                    }
                }
            }
        }
        Ok(obj)
    }

    /// The unit object `P0`: `S^∅` at `A_e`, `S^β` on the two edges at `A_e`.
    pub fn unit_object(rd: &'static RootDatum) -> Self {
        let ae = Alcove::E;
        let mut comps = BTreeMap::new();
        comps.insert(ae, vec![0]);
        let mut edges = BTreeMap::new();
        for b in 0..rd.n_pos() {
            let one = vec![(vec![(0, F::one())], 0)];
            edges.insert((ae, b), SubmoduleBasis::from_columns(rd, b, vec![0], 1, one.clone()).expect("unit edge"));
            edges.insert((rd.down(b, ae), b), SubmoduleBasis::from_columns(rd, b, vec![0], 0, one).expect("unit edge"));
        }
        KObject { rd, comps, edges, prov: Provenance::from_base(Base::P0) }
    }

    /// The object `Q0`, supported on the alcoves of the finite Weyl group.
    pub fn q_zero(rd: &'static RootDatum) -> Self {
        let mut comps = BTreeMap::new();
        let mut edges = BTreeMap::new();
        let one = F::one();
        for a in rd.finite_alcoves() {
            comps.insert(a, vec![0]);
        }
        for a in rd.finite_alcoves() {
            for b in 0..rd.n_pos() {
                if rd.in_a_minus(a, b) {
                    // butterfly {(βx + y, y)}
                    let cols = vec![(vec![(0, one)], 2), (vec![(0, one), (1, one)], 0)];
                    edges.insert((a, b), SubmoduleBasis::from_columns(rd, b, vec![0, 0], 1, cols).expect("butterfly"));
                    let below = vec![(vec![(0, one)], 0)];
                    edges.insert((rd.down(b, a), b), SubmoduleBasis::from_columns(rd, b, vec![0], 0, below).expect("edge"));
                } else {
                    // β S^β ⊕ 0
                    let cols = vec![(vec![(0, one)], 2)];
                    edges.insert((a, b), SubmoduleBasis::from_columns(rd, b, vec![0], 1, cols).expect("edge"));
                }
            }
        }
        KObject { rd, comps, edges, prov: Provenance::from_base(Base::Q0) }
    }

    pub fn base(rd: &'static RootDatum, b: Base) -> Self {
        match b {
            Base::P0 => Self::unit_object(rd),
            Base::Q0 => Self::q_zero(rd),
        }
    }

    /// `T_{s_r} ... T_{s_1}(base){n}`.
    pub fn bott_samelson(rd: &'static RootDatum, word: &[Refl], base: Base, n: i32) -> Self {
        let mut m = Self::base(rd, base);
        for &s in word {
            m = m.translate(s);
        }
        if n != 0 {
            m = m.shift(n);
        }
        m
    }

    pub fn root_datum(&self) -> &'static RootDatum {
        self.rd
    }
    pub fn provenance(&self) -> &Provenance {
        &self.prov
    }
    pub fn components(&self) -> &BTreeMap<Alcove, Vec<i32>> {
        &self.comps
    }
    pub fn edges(&self) -> &BTreeMap<(Alcove, usize), SubmoduleBasis<F>> {
        &self.edges
    }

    /// Generator degrees of `M(A)` (empty outside the support).
    pub fn component(&self, a: Alcove) -> &[i32] {
        self.comps.get(&a).map_or(EMPTY, |v| v.as_slice())
    }

    pub fn rank(&self, a: Alcove) -> usize {
        self.component(a).len()
    }

    pub fn support(&self) -> BTreeSet<Alcove> {
        self.comps.keys().copied().collect()
    }

    pub fn rank_table(&self) -> RankTable {
        self.comps
            .iter()
            .map(|(a, d)| {
                let mut s = d.clone();
                s.sort_unstable();
                (*a, (d.len(), s))
            })
            .collect()
    }

    pub fn edge(&self, a: Alcove, beta: usize) -> Option<&SubmoduleBasis<F>> {
        self.edges.get(&(a, beta))
    }

    /// Degrees of `M(A) ⊕ M(β↑A)` and the block split.
    pub fn edge_ambient(&self, a: Alcove, beta: usize) -> (Vec<i32>, usize) {
        let mut amb = self.component(a).to_vec();
        let split = amb.len();
        amb.extend_from_slice(self.component(self.rd.up(beta, a)));
        (amb, split)
    }

    /// The edge, or the zero lattice in the right ambient.
    pub fn edge_or_zero(&self, a: Alcove, beta: usize) -> SubmoduleBasis<F> {
        match self.edges.get(&(a, beta)) {
            Some(e) => e.clone(),
            None => {
                let (amb, split) = self.edge_ambient(a, beta);
                SubmoduleBasis::zero(self.rd, beta, amb, split)
            }
        }
    }

    /// Keys `(A, β)` that can carry a nonzero ambient.
    pub(crate) fn candidate_edges(rd: &RootDatum, supp: &BTreeSet<Alcove>) -> BTreeSet<(Alcove, usize)> {
        let mut keys = BTreeSet::new();
        for &a in supp {
            for b in 0..rd.n_pos() {
                keys.insert((a, b));
                keys.insert((rd.down(b, a), b));
            }
        }
        keys
    }

    /// `M{l}`.
    pub fn shift(&self, l: i32) -> Self {
        let comps = self.comps.iter().map(|(a, d)| (*a, d.iter().map(|x| x + l).collect())).collect();
        let edges = self.edges.iter().map(|(k, e)| (*k, e.shift(l))).collect();
        let mut prov = self.prov.clone();
        prov.steps.push(Step::Shift(l));
        KObject { rd: self.rd, comps, edges, prov }
    }

    /// The translation functor `T_s`.
    pub fn translate(&self, s: Refl) -> Self {
        self.translate_impl(s, false)
    }

    /// The dual translation functor `T_s^∨`.
    pub fn translate_dual(&self, s: Refl) -> Self {
        self.translate_impl(s, true)
    }

    /// `(A^(s)_-, A^(s)_+)`.
    pub fn sides(rd: &RootDatum, a: Alcove, s: Refl) -> (Alcove, Alcove) {
        let w = rd.s_wall(a, s);
        (w.minus, rd.wall_plus(&w))
    }

    fn translate_impl(&self, s: Refl, dual: bool) -> Self {
        let rd = self.rd;
        let mut supp = BTreeSet::new();
        for &a in self.comps.keys() {
            supp.insert(a);
            supp.insert(rd.neighbor(a, s));
        }
        let mut comps = BTreeMap::new();
        for &a in &supp {
            let (m, p) = Self::sides(rd, a, s);
            let mut d = self.component(m).to_vec();
            d.extend_from_slice(self.component(p));
            if !d.is_empty() {
                comps.insert(a, d);
            }
        }
        let mut edges = BTreeMap::new();
        for (a, b) in Self::candidate_edges(rd, &supp) {
            let e = self.translated_edge(s, a, b, dual);
            if e.ambient_rank() > 0 {
                edges.insert((a, b), e);
            }
        }
        let mut prov = self.prov.clone();
        prov.steps.push(if dual { Step::TranslateDual(s.0) } else { Step::Translate(s.0) });
        KObject { rd, comps, edges, prov }
    }

    /// `T_s M(A, β)` (or its dual variant), routed into
    /// `T_s M(A) ⊕ T_s M(β↑A)` by the alcove labels of the slots.
    fn translated_edge(&self, s: Refl, a: Alcove, beta: usize, dual: bool) -> SubmoduleBasis<F> {
        let rd = self.rd;
        let wall = rd.s_wall(a, s);
        let (am, ap) = (wall.minus, rd.wall_plus(&wall));
        let up = rd.up(beta, a);
        // natural layout: list of (half, label) blocks in row order
        let (natural, blocks): (SubmoduleBasis<F>, Vec<(usize, Alcove)>) = if wall.beta == beta {
            if a == am {
                // {(βx + y, y) | x, y ∈ M(A, β)}
                let e = self.edge_or_zero(a, beta);
                let n = e.ambient_rank();
                let mut cols = vec![];
                for j in 0..e.rank() {
                    let c = e.matrix().col(j);
                    let mut y = c.clone();
                    y.extend(c.iter().map(|&(i, x)| (i + n, x)));
                    cols.push((y, e.degrees()[j]));
                }
                for j in 0..e.rank() {
                    cols.push((e.matrix().col(j).clone(), e.degrees()[j] + 2));
                }
                let mut amb = e.ambient().to_vec();
                amb.extend_from_slice(e.ambient());
                let mut out = SubmoduleBasis::from_columns(rd, beta, amb, n, cols).expect("translated edge");
                if let Some(ci) = e.inverse() {
                    // [[C, C], [C, 0]]⁻¹ = [[0, C⁻¹], [C⁻¹, -C⁻¹]]
                    let r = e.rank();
                    let mut icols = vec![vec![]; 2 * n];
                    for (j, i, x) in ci.entries() {
                        // row j of the inverse, column i
                        icols[i].push((r + j, x));
                        icols[n + i].push((j, x));
                        icols[n + i].push((r + j, -x));
                    }
                    out = out.with_inverse(SpMat::from_columns(2 * r, icols));
                }
                (out, vec![(0, am), (0, ap), (1, am), (1, ap)])
            } else {
                let down = rd.down(beta, a);
                let lo = self.edge_or_zero(down, beta);
                let hi = self.edge_or_zero(up, beta);
                let sum = if dual {
                    SubmoduleBasis::direct_sum(&lo, &hi.scale(1))
                } else {
                    SubmoduleBasis::direct_sum(&lo.scale(1), &hi)
                };
                (sum, vec![(0, down), (0, a), (1, up), (1, rd.up(beta, up))])
            }
        } else {
            let em = self.edge_or_zero(am, beta);
            let ep = self.edge_or_zero(ap, beta);
            let sum = SubmoduleBasis::direct_sum(&em, &ep);
            (sum, vec![(0, am), (1, rd.up(beta, am)), (0, ap), (1, rd.up(beta, ap))])
        };
        let (um, upp) = Self::sides(rd, up, s);
        let target = [(0, am), (0, ap), (1, um), (1, upp)];
        let mut start = vec![0usize; 4];
        for k in 1..4 {
            start[k] = start[k - 1] + self.rank(blocks[k - 1].1);
        }
        let mut perm = vec![];
        let mut used = [false; 4];
        for t in target {
            let k = (0..4)
                .find(|&k| !used[k] && blocks[k] == t)
                .unwrap_or_else(|| panic!("slot {} of the translated edge has no source block", AlcoveDisplay(rd, t.1)));
            used[k] = true;
            perm.extend(start[k]..start[k] + self.rank(t.1));
        }
        let split = self.rank(am) + self.rank(ap);
        natural.permute_ambient(&perm, split)
    }

    /// `M(A, β)` does not split along its two blocks.
    pub fn links(&self, a: Alcove, beta: usize) -> Result<bool> {
        match self.edges.get(&(a, beta)) {
            Some(e) => e.links(),
            None => Ok(false),
        }
    }

    /// Edges whose basis is not square and invertible.
    pub fn density_failures(&self) -> Vec<(Alcove, usize)> {
        self.edges.iter().filter(|(_, e)| !e.is_dense()).map(|(k, _)| *k).collect()
    }

    /// Equal supports, equal degree lists, and edges with equal spans in
    /// identical ambient bases.
    pub fn same_as(&self, o: &Self) -> Result<bool> {
        Ok(self.first_difference(o)?.is_none())
    }

    /// Description of the first place where two objects differ.
    pub fn first_difference(&self, o: &Self) -> Result<Option<String>> {
        let rd = self.rd;
        if self.comps != o.comps {
            let a = self
                .comps
                .keys()
                .chain(o.comps.keys())
                .find(|a| self.comps.get(a) != o.comps.get(a))
                .copied()
                .unwrap();
            return Ok(Some(format!(
                "component {}: degrees {:?} vs {:?}",
                AlcoveDisplay(rd, a),
                self.component(a),
                o.component(a)
            )));
        }
        let keys: BTreeSet<_> = self.edges.keys().chain(o.edges.keys()).copied().collect();
        for (a, b) in keys {
            let x = self.edge_or_zero(a, b);
            let y = o.edge_or_zero(a, b);
            if x.split() != y.split() || !x.same_span(&y)? {
                return Ok(Some(format!("edge ({}, {})", AlcoveDisplay(rd, a), rd.root_label(b))));
            }
        }
        Ok(None)
    }

    pub(crate) fn raw(
        rd: &'static RootDatum,
        comps: BTreeMap<Alcove, Vec<i32>>,
        edges: BTreeMap<(Alcove, usize), SubmoduleBasis<F>>,
        prov: Provenance,
    ) -> Self {
        KObject { rd, comps, edges, prov }
    }

    /// Short one-line summary.
    pub fn summary(&self) -> String {
        let total: usize = self.comps.values().map(|d| d.len()).sum();
        format!(
            "{}: {} alcoves, total rank {}, {} edges",
            self.prov.render(self.rd),
            self.comps.len(),
            total,
            self.edges.len()
        )
    }
}

impl<F: Field> fmt::Display for KObject<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for (a, d) in &self.comps {
            writeln!(f, "  {}  rank {}  degrees {:?}", AlcoveDisplay(self.rd, *a), d.len(), d)?;
        }
        for ((a, b), e) in &self.edges {
            writeln!(
                f,
                "  edge ({}, {}): ambient {:?} split {} generators {:?}",
                AlcoveDisplay(self.rd, *a),
                self.rd.root_label(*b),
                e.ambient(),
                e.split(),
                e.degrees()
            )?;
            for j in 0..e.rank() {
                let col: Vec<String> = e.column(j).iter().map(|x| x.render()).collect();
                writeln!(f, "      [{}]", col.join(", "))?;
            }
        }
        Ok(())
    }
}

/// Label for a Weyl group element in provenance and reports.
pub fn weyl_label(rd: &RootDatum, w: WeylElt) -> String {
    let word = rd.word(w);
    if word.is_empty() {
        "e".into()
    } else {
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("")
    }
}

pub fn word_string(rd: &RootDatum, word: &[Refl]) -> String {
    if word.is_empty() {
        "()".into()
    } else {
        word_label(rd, word)
    }
}
