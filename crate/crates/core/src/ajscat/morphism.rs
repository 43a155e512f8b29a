//! Morphisms of `K`: families of degree-0 matrices over `S^∅` preserving
//! every edge lattice.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::ajscat::object::KObject;
use crate::alcove::{Alcove, AlcoveDisplay, Refl};
use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::fracring::RootFraction;
use crate::linalg::SpMat;
use crate::rootsys::{RootDatum, WeylElt};

/// Sparse column-major matrix over `S^∅`.
#[derive(Clone, Debug)]
pub struct FracMat<F: Field> {
    rd: &'static RootDatum,
    rows: usize,
    cols: Vec<Vec<(usize, RootFraction<F>)>>,
}

impl<F: Field> FracMat<F> {
    pub fn zeros(rd: &'static RootDatum, rows: usize, ncols: usize) -> Self {
        FracMat { rd, rows, cols: vec![vec![]; ncols] }
    }

    pub fn identity(rd: &'static RootDatum, n: usize) -> Self {
        Self::scalar(rd, &RootFraction::one(rd), n)
    }

    /// `x · I_n`.
    pub fn scalar(rd: &'static RootDatum, x: &RootFraction<F>, n: usize) -> Self {
        if x.is_zero() {
            return Self::zeros(rd, n, n);
        }
        FracMat { rd, rows: n, cols: (0..n).map(|i| vec![(i, x.clone())]).collect() }
    }

    /// The matrix of `v ↦ (v[perm[0]], v[perm[1]], ...)`.
    pub fn permutation(rd: &'static RootDatum, perm: &[usize]) -> Self {
        let mut cols = vec![vec![]; perm.len()];
        for (k, &p) in perm.iter().enumerate() {
            cols[p].push((k, RootFraction::one(rd)));
        }
        FracMat { rd, rows: perm.len(), cols }
    }

    pub fn from_scalar_matrix(rd: &'static RootDatum, m: &SpMat<F>) -> Self {
        FracMat {
            rd,
            rows: m.nrows(),
            cols: m.columns().iter().map(|c| c.iter().map(|&(i, x)| (i, RootFraction::scalar(rd, x))).collect()).collect(),
        }
    }

    /// From rows of entries.
    pub fn from_dense(rd: &'static RootDatum, d: &[Vec<RootFraction<F>>], ncols: usize) -> Self {
        let rows = d.len();
        let mut cols = vec![vec![]; ncols];
        for (i, r) in d.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                if !x.is_zero() {
                    cols[j].push((i, x.clone()));
                }
            }
        }
        FracMat { rd, rows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<RootFraction<F>>> {
        let mut d = vec![vec![RootFraction::zero(self.rd); self.ncols()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                d[*i][j] = x.clone();
            }
        }
        d
    }

    pub fn root_datum(&self) -> &'static RootDatum {
        self.rd
    }
    pub fn nrows(&self) -> usize {
        self.rows
    }
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> RootFraction<F> {
        self.cols[j].iter().find(|e| e.0 == i).map_or_else(|| RootFraction::zero(self.rd), |e| e.1.clone())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RootFraction<F>)> + '_ {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, x)| (*i, j, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.ncols() && self.cols.iter().enumerate().all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.ncols(), o.rows, "matrix product shape");
        let cols = o
            .cols
            .iter()
            .map(|c| {
                let mut acc: BTreeMap<usize, RootFraction<F>> = BTreeMap::new();
                for (k, y) in c {
                    for (i, x) in &self.cols[*k] {
                        let t = x * y;
                        let e = acc.entry(*i).or_insert_with(|| RootFraction::zero(self.rd));
                        *e = &*e + &t;
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        FracMat { rd: self.rd, rows: self.rows, cols }
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![vec![]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                cols[*i].push((j, x.clone()));
            }
        }
        FracMat { rd: self.rd, rows: self.ncols(), cols }
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let mut cols = a.cols.clone();
        cols.extend(b.cols.iter().map(|c| c.iter().map(|(i, x)| (i + a.rows, x.clone())).collect()));
        FracMat { rd: a.rd, rows: a.rows + b.rows, cols }
    }

    /// `[a; b]`.
    pub fn vstack(a: &Self, b: &Self) -> Self {
        assert_eq!(a.ncols(), b.ncols(), "vstack shape");
        let cols = a
            .cols
            .iter()
            .zip(&b.cols)
            .map(|(x, y)| x.iter().cloned().chain(y.iter().map(|(i, v)| (i + a.rows, v.clone()))).collect())
            .collect();
        FracMat { rd: a.rd, rows: a.rows + b.rows, cols }
    }

    pub fn map(&self, f: impl Fn(&RootFraction<F>) -> RootFraction<F>) -> Self {
        FracMat {
            rd: self.rd,
            rows: self.rows,
            cols: self.cols.iter().map(|c| c.iter().map(|(i, x)| (*i, f(x))).filter(|(_, x)| !x.is_zero()).collect()).collect(),
        }
    }

    pub fn twist(&self, w: WeylElt) -> Self {
        self.map(|x| x.twist(w))
    }

    /// Inverse over `S^∅`: unit pivots first, fraction-free elimination if
    /// no unit pivot is available. `None` if the determinant is not a unit.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.rows;
        if n != self.ncols() {
            return None;
        }
        let mut a = self.to_dense();
        let zero = RootFraction::zero(self.rd);
        let mut b: Vec<Vec<RootFraction<F>>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { RootFraction::one(self.rd) } else { zero.clone() }).collect())
            .collect();
        let mut done = vec![false; n];
        let mut pivot_row = vec![usize::MAX; n];
        for _ in 0..n {
            // any unit entry in an unused row and column
            let mut found = None;
            'search: for c in 0..n {
                if pivot_row[c] != usize::MAX {
                    continue;
                }
                for r in 0..n {
                    if !done[r] && a[r][c].is_unit(None) {
                        found = Some((r, c));
                        break 'search;
                    }
                }
            }
            let Some((r, c)) = found else {
                return self.inverse_fraction_free();
            };
            let inv = a[r][c].inverse_unit()?;
            for j in 0..n {
                a[r][j] = &a[r][j] * &inv;
                b[r][j] = &b[r][j] * &inv;
            }
            for i in 0..n {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..n {
                        if !a[r][j].is_zero() {
                            a[i][j] = &a[i][j] - &(&f * &a[r][j]);
                        }
                        if !b[r][j].is_zero() {
                            b[i][j] = &b[i][j] - &(&f * &b[r][j]);
                        }
                    }
                }
            }
            done[r] = true;
            pivot_row[c] = r;
        }
        // row pivot_row[c] of b is row c of the inverse
        let rows: Vec<Vec<RootFraction<F>>> = (0..n).map(|c| b[pivot_row[c]].clone()).collect();
        Some(Self::from_dense(self.rd, &rows, n))
    }

    /// Fraction-free Gauss-Jordan: ends with `det · I | adj`-type data.
    fn inverse_fraction_free(&self) -> Option<Self> {
        let n = self.rows;
        let mut a = self.to_dense();
        let one = RootFraction::one(self.rd);
        let zero = RootFraction::zero(self.rd);
        let mut b: Vec<Vec<RootFraction<F>>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { one.clone() } else { zero.clone() }).collect()).collect();
        let mut prev = one.clone();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, p);
            b.swap(k, p);
            for i in 0..n {
                if i == k {
                    continue;
                }
                let (piv, f) = (a[k][k].clone(), a[i][k].clone());
                for j in 0..n {
                    let x = &(&piv * &a[i][j]) - &(&f * &a[k][j]);
                    a[i][j] = x.div_exact(&prev).or_else(|| x.is_zero().then(|| zero.clone()))?;
                    let y = &(&piv * &b[i][j]) - &(&f * &b[k][j]);
                    b[i][j] = y.div_exact(&prev).or_else(|| y.is_zero().then(|| zero.clone()))?;
                }
            }
            prev = a[k][k].clone();
        }
        // now a = diag(d, ..., d) with d the last pivot
        let dinv = a[n - 1][n - 1].inverse_unit()?;
        let rows: Vec<Vec<RootFraction<F>>> = (0..n)
            .map(|i| {
                let di = a[i][i].inverse_unit().unwrap_or_else(|| dinv.clone());
                b[i].iter().map(|x| x * &di).collect()
            })
            .collect();
        let out = Self::from_dense(self.rd, &rows, n);
        out.mul(self).is_identity().then_some(out)
    }

    /// Entries as text, row by row.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        self.to_dense().iter().map(|r| r.iter().map(|x| x.render()).collect()).collect()
    }
}

/// A morphism `M -> N`: one matrix per alcove of `supp M ∪ supp N`,
/// of shape `rk N(A) x rk M(A)`.
#[derive(Clone, Debug)]
pub struct KMorphism<F: Field> {
    rd: &'static RootDatum,
    maps: BTreeMap<Alcove, FracMat<F>>,
}

fn union_support<F: Field>(m: &KObject<F>, n: &KObject<F>) -> BTreeSet<Alcove> {
    m.components().keys().chain(n.components().keys()).copied().collect()
}

impl<F: Field> KMorphism<F> {
    pub fn from_maps(rd: &'static RootDatum, maps: BTreeMap<Alcove, FracMat<F>>) -> Self {
        KMorphism { rd, maps }
    }

    /// Build from a rule giving the matrix at each alcove of the supports.
    pub fn from_fn(src: &KObject<F>, tgt: &KObject<F>, f: impl Fn(Alcove, usize, usize) -> FracMat<F>) -> Self {
        let rd = src.root_datum();
        let maps = union_support(src, tgt).into_iter().map(|a| (a, f(a, tgt.rank(a), src.rank(a)))).collect();
        KMorphism { rd, maps }
    }

    pub fn identity(m: &KObject<F>) -> Self {
        let rd = m.root_datum();
        Self::from_fn(m, m, |_, r, _| FracMat::identity(rd, r))
    }

    pub fn zero(src: &KObject<F>, tgt: &KObject<F>) -> Self {
        let rd = src.root_datum();
        Self::from_fn(src, tgt, |_, r, c| FracMat::zeros(rd, r, c))
    }

    /// `x · id` where the two objects have matching ranks.
    pub fn scalar_family(src: &KObject<F>, tgt: &KObject<F>, x: impl Fn(Alcove) -> RootFraction<F>) -> Self {
        let rd = src.root_datum();
        Self::from_fn(src, tgt, |a, r, c| if r == c { FracMat::scalar(rd, &x(a), r) } else { FracMat::zeros(rd, r, c) })
    }

    pub fn maps(&self) -> &BTreeMap<Alcove, FracMat<F>> {
        &self.maps
    }

    pub fn at(&self, a: Alcove) -> Option<&FracMat<F>> {
        self.maps.get(&a)
    }

    fn at_or_empty(&self, a: Alcove) -> FracMat<F> {
        self.maps.get(&a).cloned().unwrap_or_else(|| FracMat::zeros(self.rd, 0, 0))
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Self) -> Self {
        let keys: BTreeSet<Alcove> = self.maps.keys().chain(f.maps.keys()).copied().collect();
        let maps = keys
            .into_iter()
            .map(|a| {
                let m = match (self.maps.get(&a), f.maps.get(&a)) {
                    (Some(g), Some(h)) => g.mul(h),
                    (Some(g), None) => FracMat::zeros(self.rd, g.nrows(), 0),
                    (None, Some(h)) => FracMat::zeros(self.rd, 0, h.ncols()),
                    (None, None) => unreachable!(),
                };
                (a, m)
            })
            .collect();
        KMorphism { rd: self.rd, maps }
    }

    pub fn is_identity(&self) -> bool {
        self.maps.values().all(|m| m.is_identity())
    }

    /// `(T_s f)_A = f_{A_-} ⊕ f_{A_+}`, for both `T_s` and `T_s^∨`.
    pub fn translate(&self, s: Refl) -> Self {
        let rd = self.rd;
        let mut keys = BTreeSet::new();
        for &a in self.maps.keys() {
            keys.insert(a);
            keys.insert(rd.neighbor(a, s));
        }
        let maps = keys
            .into_iter()
            .map(|a| {
                let (m, p) = KObject::<F>::sides(rd, a, s);
                (a, FracMat::block_diag(&self.at_or_empty(m), &self.at_or_empty(p)))
            })
            .collect();
        KMorphism { rd, maps }
    }

    /// `(D f)_A = f_Aᵀ`, a morphism in the opposite direction.
    pub fn dual(&self) -> Self {
        KMorphism { rd: self.rd, maps: self.maps.iter().map(|(a, m)| (*a, m.transpose())).collect() }
    }

    /// `(C_w f)_A = t_w(f_{w.A})`.
    pub fn tilt(&self, w: WeylElt) -> Self {
        let rd = self.rd;
        let wi = rd.inverse(w);
        let maps = self.maps.iter().map(|(a, m)| (rd.compose(Alcove::finite(wi), *a), m.twist(w))).collect();
        KMorphism { rd, maps }
    }

    /// Check shapes, degree 0 and edge preservation. `Ok(None)` means `self`
    /// is a morphism `src -> tgt`; otherwise the first defect found.
    pub fn defect(&self, src: &KObject<F>, tgt: &KObject<F>) -> Result<Option<String>> {
        let rd = self.rd;
        for a in union_support(src, tgt) {
            let (r, c) = (tgt.rank(a), src.rank(a));
            match self.maps.get(&a) {
                Some(m) if m.nrows() == r && m.ncols() == c => {}
                Some(m) => {
                    return Err(AjsError::Dimension(format!(
                        "map at {} is {}x{}, objects need {r}x{c}",
                        AlcoveDisplay(rd, a),
                        m.nrows(),
                        m.ncols()
                    )))
                }
                None if r == 0 || c == 0 => {}
                None => return Err(AjsError::Dimension(format!("no map at {}", AlcoveDisplay(rd, a)))),
            }
        }
        for (a, m) in &self.maps {
            let (mu, nu) = (src.component(*a), tgt.component(*a));
            if m.nrows() != nu.len() || m.ncols() != mu.len() {
                return Err(AjsError::Dimension(format!("map at {} outside both supports", AlcoveDisplay(rd, *a))));
            }
            for (i, k, x) in m.entries() {
                let want = (mu[k] - nu[i]) as i64;
                if x.degree() != Some(want) {
                    return Ok(Some(format!(
                        "entry ({i},{k}) at {} is {} of degree {:?}, expected {want}",
                        AlcoveDisplay(rd, *a),
                        x.render(),
                        x.degree()
                    )));
                }
            }
        }
        for (&(a, b), e) in src.edges() {
            if e.rank() == 0 {
                continue;
            }
            let (tamb, _) = tgt.edge_ambient(a, b);
            if tamb.is_empty() {
                continue;
            }
            let up = rd.up(b, a);
            let fm = FracMat::block_diag(&self.at_or_empty(a), &self.at_or_empty(up));
            let t = tgt.edge(a, b).ok_or_else(|| AjsError::Dimension("target edge missing".into()))?;
            if let Some(bad) = edge_defect(&fm, e, t)? {
                return Ok(Some(format!("edge ({}, {}): {bad}", AlcoveDisplay(rd, a), rd.root_label(b))));
            }
        }
        Ok(None)
    }

    pub fn is_morphism(&self, src: &KObject<F>, tgt: &KObject<F>) -> Result<bool> {
        Ok(self.defect(src, tgt)?.is_none())
    }

    /// Inverse family, if every component is invertible and the inverse is
    /// again a morphism.
    pub fn inverse(&self, src: &KObject<F>, tgt: &KObject<F>) -> Result<Option<Self>> {
        if !self.is_morphism(src, tgt)? {
            return Ok(None);
        }
        let mut maps = BTreeMap::new();
        for (a, m) in &self.maps {
            if m.nrows() == 0 && m.ncols() == 0 {
                maps.insert(*a, m.clone());
                continue;
            }
            match m.inverse() {
                Some(i) => {
                    maps.insert(*a, i);
                }
                None => return Ok(None),
            }
        }
        let inv = KMorphism { rd: self.rd, maps };
        Ok(inv.is_morphism(tgt, src)?.then_some(inv))
    }

    pub fn is_isomorphism(&self, src: &KObject<F>, tgt: &KObject<F>) -> Result<bool> {
        Ok(self.inverse(src, tgt)?.is_some())
    }
}

/// Whether `fm` maps the lattice `m` into the lattice `n` (both in the
/// ambients of one edge). Entries of `fm` are split into scalar multiples of
/// a few degree-0 "atoms", so all linear algebra runs over the field.
fn edge_defect<F: Field>(
    fm: &FracMat<F>,
    m: &crate::lattice::SubmoduleBasis<F>,
    n: &crate::lattice::SubmoduleBasis<F>,
) -> Result<Option<String>> {
    let rd = fm.root_datum();
    let beta = n.beta();
    let (mu, nu) = (m.ambient(), n.ambient());
    let mut atoms: Vec<RootFraction<F>> = vec![];
    let mut index: HashMap<RootFraction<F>, usize> = HashMap::new();
    let mut parts: Vec<Vec<Vec<(usize, F)>>> = vec![];
    for (i, k, x) in fm.entries() {
        let d = nu[i] as i64 - mu[k] as i64;
        if d % 2 != 0 {
            return Ok(Some(format!("entry ({i},{k}) joins degrees of different parity")));
        }
        let g = x.mul_root_pow(beta, d / 2);
        let c = g.numerator().lead_coeff();
        let atom = g.scale(c.inv().expect("nonzero entry"));
        let idx = *index.entry(atom.clone()).or_insert_with(|| {
            atoms.push(atom);
            parts.push(vec![vec![]; fm.ncols()]);
            atoms.len() - 1
        });
        parts[idx][k].push((i, c));
    }
    if atoms.is_empty() {
        return Ok(None);
    }
    let ninv = n.inverse().ok_or_else(|| AjsError::NotDense { alcove: String::new(), beta: rd.root_label(beta) })?;
    // T_a = N⁻¹ · S_a · C_M
    let ts: Vec<SpMat<F>> = parts
        .into_iter()
        .map(|p| {
            let s = SpMat::from_columns(fm.nrows(), p);
            ninv.mul(&s.mul(m.matrix()))
        })
        .collect();
    let (mv, nv) = (m.degrees(), n.degrees());
    let mut cells: BTreeMap<(usize, usize), Vec<(usize, F)>> = BTreeMap::new();
    for (a, t) in ts.iter().enumerate() {
        for (j, l, x) in t.entries() {
            cells.entry((j, l)).or_default().push((a, x));
        }
    }
    for ((j, l), terms) in cells {
        let d = mv[l] as i64 - nv[j] as i64;
        let sum = if terms.len() == 1 {
            atoms[terms[0].0].scale(terms[0].1)
        } else {
            terms.iter().fold(RootFraction::zero(rd), |acc, (a, x)| &acc + &atoms[*a].scale(*x))
        };
        let Some(v) = sum.beta_valuation(beta) else { continue };
        if d % 2 != 0 {
            return Ok(Some(format!("coefficient ({j},{l}) has odd degree")));
        }
        if v + d / 2 < 0 {
            return Ok(Some(format!(
                "image of generator {l} needs coefficient {} on generator {j}, not in S^{}",
                sum.mul_root_pow(beta, d / 2).render(),
                rd.root_label(beta)
            )));
        }
    }
    Ok(None)
}

/// The diagonal `Δ: M -> T_s M`, `t ↦ (t, t)`; needs `M(A_-) = M(A_+)` on
/// every alcove, which holds for `Q0` and finite `s`.
pub fn diagonal<F: Field>(m: &KObject<F>, s: Refl) -> Result<KMorphism<F>> {
    let rd = m.root_datum();
    if s.is_affine(rd) {
        return Err(AjsError::AffineReflection(s.label(rd)));
    }
    let t = m.translate(s);
    let mut maps = BTreeMap::new();
    for a in union_support(m, &t) {
        let (lo, hi) = KObject::<F>::sides(rd, a, s);
        if m.component(lo) != m.component(hi) {
            return Err(AjsError::Dimension(format!(
                "the two sides of {} carry different modules",
                AlcoveDisplay(rd, a)
            )));
        }
        let r = m.rank(lo);
        // A itself is one of the sides, so rk M(A) = r
        maps.insert(a, FracMat::vstack(&FracMat::identity(rd, r), &FracMat::identity(rd, r)));
    }
    Ok(KMorphism::from_maps(rd, maps))
}

/// `f^(s) = (T_s f) ∘ Δ` for `f: M -> K`.
pub fn lift_hom<F: Field>(f: &KMorphism<F>, m: &KObject<F>, s: Refl) -> Result<KMorphism<F>> {
    Ok(f.translate(s).compose(&diagonal(m, s)?))
}
