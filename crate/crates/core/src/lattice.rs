//! Graded free modules and `S^β`-lattices inside them.
//!
//! Every lattice handled here has a basis whose entries are a scalar times
//! a power of `β`: entry `(i, j)` is `C[i][j] * β^((v_j - u_i) / 2)` where
//! `u` are the ambient degrees and `v` the vector degrees. Such a lattice is
//! `S^β ⊗ L₀` for the `F[β]`-lattice `L₀` with the same basis, and `S^β` is
//! flat over `F[β]`, so membership, intersections and images reduce to
//! filtered linear algebra over `F`: a homogeneous vector `x·β^((d-u)/2)` lies
//! in the lattice iff `x` is in the span of the columns of degree `<= d`.

use std::sync::OnceLock;

use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::fracring::RootFraction;
use crate::linalg::{Echelon, SpMat, SpVec};
use crate::rootsys::RootDatum;

/// A free graded module with a fixed basis, given by the basis degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedFreeModule {
    pub degrees: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(degrees: Vec<i32>) -> Self {
        GradedFreeModule { degrees }
    }
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
    /// `M{l}`: every generator moves up by `l`.
    pub fn shift(&self, l: i32) -> Self {
        GradedFreeModule { degrees: self.degrees.iter().map(|d| d + l).collect() }
    }
    pub fn dual(&self) -> Self {
        GradedFreeModule { degrees: self.degrees.iter().map(|d| -d).collect() }
    }
    pub fn sorted_degrees(&self) -> Vec<i32> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }
}

fn half_diff(a: i32, b: i32) -> Option<i64> {
    let d = a as i64 - b as i64;
    (d % 2 == 0).then_some(d / 2)
}

/// Output of [`SubmoduleBasis::snf_beta`]: `U · B · V` has exactly one
/// nonzero entry `β^e` (up to a scalar) in each pivot row and column.
#[derive(Clone, Debug)]
pub struct SnfBeta<F: Field> {
    /// sorted exponents
    pub exponents: Vec<i64>,
    /// pivot `(row, column)` positions with their exponents, in elimination order
    pub pivots: Vec<(usize, usize, i64)>,
    /// scalar parts of `U` (degrees: ambient x ambient) and `V` (vector x vector)
    pub u: SpMat<F>,
    pub v: SpMat<F>,
}

/// Result of solving `v = Σ c_j b_j`.
#[derive(Clone, Debug)]
pub struct Solution<F: Field> {
    pub coeffs: Vec<RootFraction<F>>,
    pub member: bool,
}

/// An `S^β`-submodule of a free `S^∅`-module, stored by an explicit basis.
/// The ambient is split into two blocks: rows `< split` and rows `>= split`.
#[derive(Clone, Debug)]
pub struct SubmoduleBasis<F: Field> {
    rd: &'static RootDatum,
    beta: usize,
    ambient: Vec<i32>,
    split: usize,
    mat: SpMat<F>,
    degrees: Vec<i32>,
    inv: OnceLock<Option<SpMat<F>>>,
}

impl<F: Field> PartialEq for SubmoduleBasis<F> {
    /// Equality of stored data, not of spans; see [`SubmoduleBasis::same_span`].
    fn eq(&self, o: &Self) -> bool {
        self.beta == o.beta && self.ambient == o.ambient && self.split == o.split && self.mat == o.mat && self.degrees == o.degrees
    }
}

impl<F: Field> SubmoduleBasis<F> {
    pub fn new(
        rd: &'static RootDatum,
        beta: usize,
        ambient: Vec<i32>,
        split: usize,
        mat: SpMat<F>,
        degrees: Vec<i32>,
    ) -> Result<Self> {
        if mat.nrows() != ambient.len() || mat.ncols() != degrees.len() || split > ambient.len() {
            return Err(AjsError::Dimension(format!(
                "basis {}x{} against ambient {} (split {split}) and {} degrees",
                mat.nrows(),
                mat.ncols(),
                ambient.len(),
                degrees.len()
            )));
        }
        if beta >= rd.n_pos() {
            return Err(AjsError::NotARoot(format!("root index {beta}")));
        }
        for (i, j, _) in mat.entries() {
            if half_diff(degrees[j], ambient[i]).is_none() {
                return Err(AjsError::Inhomogeneous(format!(
                    "entry ({i},{j}) joins ambient degree {} to vector degree {}",
                    ambient[i], degrees[j]
                )));
            }
        }
        Ok(SubmoduleBasis { rd, beta, ambient, split, mat, degrees, inv: OnceLock::new() })
    }

    /// Build from columns given as sparse scalar vectors with degrees.
    pub fn from_columns(
        rd: &'static RootDatum,
        beta: usize,
        ambient: Vec<i32>,
        split: usize,
        cols: Vec<(SpVec<F>, i32)>,
    ) -> Result<Self> {
        let (vecs, degs): (Vec<_>, Vec<_>) = cols.into_iter().unzip();
        let m = SpMat::from_columns(ambient.len(), vecs);
        Self::new(rd, beta, ambient, split, m, degs)
    }

    /// Build from a matrix of fractions (outer index: column). Every entry
    /// must be `c·β^k` with `k` matching the degrees.
    pub fn from_fractions(
        rd: &'static RootDatum,
        beta: usize,
        ambient: Vec<i32>,
        split: usize,
        cols: &[Vec<RootFraction<F>>],
        degrees: Vec<i32>,
    ) -> Result<Self> {
        let mut sp = Vec::with_capacity(cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != ambient.len() {
                return Err(AjsError::Dimension(format!("column {j} has {} entries, ambient {}", col.len(), ambient.len())));
            }
            let mut c = vec![];
            for (i, x) in col.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let (a, k) = x.as_root_monomial(beta).ok_or_else(|| {
                    AjsError::NonUnivariate(format!("entry ({i},{j}) = {} is not a multiple of a power of the edge root", x.render()))
                })?;
                let want = half_diff(degrees[j], ambient[i]);
                if want != Some(k) {
                    return Err(AjsError::Inhomogeneous(format!(
                        "entry ({i},{j}) has β-exponent {k}, degrees require {want:?}"
                    )));
                }
                c.push((i, a));
            }
            sp.push(c);
        }
        let m = SpMat::from_columns(ambient.len(), sp);
        Self::new(rd, beta, ambient, split, m, degrees)
    }

    /// The zero submodule.
    pub fn zero(rd: &'static RootDatum, beta: usize, ambient: Vec<i32>, split: usize) -> Self {
        let n = ambient.len();
        Self::new(rd, beta, ambient, split, SpMat::zeros(n, 0), vec![]).expect("zero submodule")
    }

    /// Attach a known scalar inverse (checked in debug builds).
    pub fn with_inverse(self, inv: SpMat<F>) -> Self {
        debug_assert!(self.mat.mul(&inv).is_identity(), "supplied inverse is wrong");
        let _ = self.inv.set(Some(inv));
        self
    }

    pub fn root_datum(&self) -> &'static RootDatum {
        self.rd
    }
    pub fn beta(&self) -> usize {
        self.beta
    }
    pub fn ambient(&self) -> &[i32] {
        &self.ambient
    }
    pub fn split(&self) -> usize {
        self.split
    }
    pub fn matrix(&self) -> &SpMat<F> {
        &self.mat
    }
    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
    pub fn ambient_rank(&self) -> usize {
        self.ambient.len()
    }

    /// The `β`-exponent of entry `(i, j)` (meaningful where the entry is nonzero).
    pub fn exponent(&self, i: usize, j: usize) -> i64 {
        (self.degrees[j] as i64 - self.ambient[i] as i64).div_euclid(2)
    }

    pub fn entry(&self, i: usize, j: usize) -> RootFraction<F> {
        let c = self.mat.get(i, j);
        if c.is_zero() {
            RootFraction::zero(self.rd)
        } else {
            RootFraction::root_power(self.rd, self.beta, c, self.exponent(i, j))
        }
    }

    pub fn column(&self, j: usize) -> Vec<RootFraction<F>> {
        (0..self.ambient.len()).map(|i| self.entry(i, j)).collect()
    }

    /// Scalar inverse of the basis matrix, if square and invertible.
    pub fn inverse(&self) -> Option<&SpMat<F>> {
        self.inv
            .get_or_init(|| if self.mat.nrows() == self.mat.ncols() { self.mat.inverse() } else { None })
            .as_ref()
    }

    /// `S ⊗ S^∅ → ambient` is an isomorphism: the basis is square and its
    /// determinant `det(C)·β^k` is a unit of `S^∅`.
    pub fn is_dense(&self) -> bool {
        self.inverse().is_some()
    }

    /// Solve `v = Σ c_j b_j` over the fraction field. Needs a dense basis.
    pub fn solve_in_basis(&self, v: &[RootFraction<F>]) -> Result<Solution<F>> {
        if v.len() != self.ambient.len() {
            return Err(AjsError::Dimension(format!("vector of length {} in ambient {}", v.len(), self.ambient.len())));
        }
        let inv = self
            .inverse()
            .ok_or_else(|| AjsError::Dimension("solving needs a square invertible basis".into()))?;
        let mut coeffs = vec![RootFraction::zero(self.rd); self.rank()];
        // B⁻¹[j][i] = C⁻¹[j][i] · β^((u_i - v_j)/2)
        for (j, i, c) in inv.entries() {
            if v[i].is_zero() {
                continue;
            }
            let k = (self.ambient[i] as i64 - self.degrees[j] as i64).div_euclid(2);
            let t = v[i].scale(c).mul_root_pow(self.beta, k);
            coeffs[j] = &coeffs[j] + &t;
        }
        let member = coeffs.iter().all(|c| c.is_in_ring(Some(self.beta)));
        Ok(Solution { coeffs, member })
    }

    /// Re-expand `Σ c_j b_j`.
    pub fn expand(&self, coeffs: &[RootFraction<F>]) -> Vec<RootFraction<F>> {
        let mut out = vec![RootFraction::zero(self.rd); self.ambient.len()];
        for (i, j, _) in self.mat.entries() {
            out[i] = &out[i] + &(&self.entry(i, j) * &coeffs[j]);
        }
        out
    }

    /// Column indices sorted by degree.
    fn by_degree(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.rank()).collect();
        idx.sort_by_key(|&j| self.degrees[j]);
        idx
    }

    /// Membership of many homogeneous vectors `(x, d)` (scalar part and degree).
    pub fn contains_all(&self, queries: &[(SpVec<F>, i32)]) -> Vec<bool> {
        let mut qi: Vec<usize> = (0..queries.len()).collect();
        qi.sort_by_key(|&k| queries[k].1);
        let cols = self.by_degree();
        let mut e = Echelon::natural(self.ambient.len());
        let mut next = 0;
        let mut out = vec![false; queries.len()];
        for k in qi {
            let (x, d) = &queries[k];
            while next < cols.len() && self.degrees[cols[next]] <= *d {
                e.insert(self.mat.col(cols[next]));
                next += 1;
            }
            // an entry whose ambient degree has the wrong parity is never in the lattice
            let parity_ok = x.iter().all(|(i, _)| half_diff(*d, self.ambient[*i]).is_some());
            out[k] = parity_ok && e.contains(x);
        }
        out
    }

    pub fn contains(&self, x: &SpVec<F>, d: i32) -> bool {
        self.contains_all(&[(x.clone(), d)])[0]
    }

    /// Membership of an arbitrary ambient vector of fractions.
    pub fn contains_vector(&self, v: &[RootFraction<F>]) -> Result<bool> {
        if v.len() != self.ambient.len() {
            return Err(AjsError::Dimension(format!("vector of length {} in ambient {}", v.len(), self.ambient.len())));
        }
        if let Some((x, d)) = self.as_scalar_vector(v) {
            return Ok(self.contains(&x, d));
        }
        Ok(self.solve_in_basis(v)?.member)
    }

    /// Write `v` as `x·β^((d-u)/2)` if possible.
    pub fn as_scalar_vector(&self, v: &[RootFraction<F>]) -> Option<(SpVec<F>, i32)> {
        let mut d = None;
        let mut x = vec![];
        for (i, f) in v.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let (c, k) = f.as_root_monomial(self.beta)?;
            let di = self.ambient[i] as i64 + 2 * k;
            match d {
                None => d = Some(di),
                Some(e) if e != di => return None,
                _ => {}
            }
            x.push((i, c));
        }
        Some((x, d.unwrap_or(0) as i32))
    }

    fn check_same_ambient(&self, o: &Self) -> Result<()> {
        if self.beta != o.beta || self.ambient != o.ambient {
            return Err(AjsError::Dimension(format!(
                "ambient mismatch: root {} degrees {:?} vs root {} degrees {:?}",
                self.beta, self.ambient, o.beta, o.ambient
            )));
        }
        Ok(())
    }

    /// `span(o) ⊆ span(self)`.
    pub fn includes(&self, o: &Self) -> Result<bool> {
        self.check_same_ambient(o)?;
        let q: Vec<(SpVec<F>, i32)> = (0..o.rank()).map(|j| (o.mat.col(j).clone(), o.degrees[j])).collect();
        Ok(self.contains_all(&q).into_iter().all(|b| b))
    }

    /// Equality of spans (mutual inclusion).
    pub fn same_span(&self, o: &Self) -> Result<bool> {
        Ok(self.includes(o)? && o.includes(self)?)
    }

    fn block_range(&self, b: usize) -> Result<std::ops::Range<usize>> {
        match b {
            0 => Ok(0..self.split),
            1 => Ok(self.split..self.ambient.len()),
            _ => Err(AjsError::Dimension(format!("block {b} (only 0 and 1 exist)"))),
        }
    }

    /// Generators of the image under projection to block `b`.
    pub fn project_generators(&self, b: usize) -> Result<Vec<(SpVec<F>, i32)>> {
        let r = self.block_range(b)?;
        Ok((0..self.rank())
            .map(|j| {
                let v = self.mat.col(j).iter().filter(|(i, _)| r.contains(i)).map(|&(i, x)| (i - r.start, x)).collect();
                (v, self.degrees[j])
            })
            .collect())
    }

    /// A basis of the projection to block `b` (a lattice in that block).
    pub fn project_block(&self, b: usize) -> Result<SubmoduleBasis<F>> {
        let r = self.block_range(b)?;
        let gens = self.project_generators(b)?;
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.sort_by_key(|&j| gens[j].1);
        let mut e = Echelon::natural(r.len());
        let mut cols = vec![];
        for j in order {
            if e.insert(&gens[j].0).is_some() {
                cols.push(gens[j].clone());
            }
        }
        let amb = self.ambient[r.clone()].to_vec();
        let n = amb.len();
        Self::from_columns(self.rd, self.beta, amb, n, cols)
    }

    /// A basis of `span(self) ∩ block b`, as a lattice in that block.
    pub fn intersect_block(&self, b: usize) -> Result<SubmoduleBasis<F>> {
        let r = self.block_range(b)?;
        let n = self.ambient.len();
        // coordinates outside the block get priority, so a lead inside the
        // block means the vector vanishes outside it
        let order: Vec<usize> = (0..n).filter(|i| !r.contains(i)).chain(r.clone()).collect();
        let mut e = Echelon::with_order(order);
        let mut cols = vec![];
        for j in self.by_degree() {
            if let Some((lead, red)) = e.insert(self.mat.col(j)) {
                if r.contains(&lead) {
                    let v = red.into_iter().map(|(i, x)| (i - r.start, x)).collect();
                    cols.push((v, self.degrees[j]));
                }
            }
        }
        let amb = self.ambient[r].to_vec();
        let m = amb.len();
        let out = Self::from_columns(self.rd, self.beta, amb, m, cols)?;
        // the result must lie in the original lattice
        let back = out.embed_block(b, self);
        if !self.includes(&back)? {
            return Err(AjsError::Verification { stage: "intersect_block".into(), detail: "result escapes the lattice".into() });
        }
        Ok(out)
    }

    /// Put a lattice living in block `b` of `like`'s ambient back into that ambient.
    pub fn embed_block(&self, b: usize, like: &Self) -> SubmoduleBasis<F> {
        let off = if b == 0 { 0 } else { like.split };
        let cols = (0..self.rank())
            .map(|j| (self.mat.col(j).iter().map(|&(i, x)| (i + off, x)).collect(), self.degrees[j]))
            .collect();
        Self::from_columns(self.rd, self.beta, like.ambient.clone(), like.split, cols).expect("embedding a block")
    }

    /// `(span ∩ block 0) ⊕ (span ∩ block 1) ≠ span`.
    pub fn links(&self) -> Result<bool> {
        let a = self.intersect_block(0)?;
        let b = self.intersect_block(1)?;
        Ok(a.rank() + b.rank() != self.rank() || {
            let sum = Self::direct_sum(&a, &b);
            !sum.same_span(self)?
        })
    }

    /// The dual lattice in the dual ambient: rows of the inverse basis
    /// matrix, with all degrees negated.
    pub fn dual(&self) -> Result<SubmoduleBasis<F>> {
        let inv = self.inverse().ok_or_else(|| AjsError::NotDense {
            alcove: String::new(),
            beta: self.rd.root_label(self.beta),
        })?;
        let m = inv.transpose();
        let out = Self::new(
            self.rd,
            self.beta,
            self.ambient.iter().map(|d| -d).collect(),
            self.split,
            m,
            self.degrees.iter().map(|d| -d).collect(),
        )?;
        Ok(out.with_inverse(self.mat.transpose()))
    }

    /// Multiply by `β^k`.
    pub fn scale(&self, k: i32) -> SubmoduleBasis<F> {
        let mut out = self.clone();
        for d in &mut out.degrees {
            *d += 2 * k;
        }
        out
    }

    /// `{l}` on ambient and vectors.
    pub fn shift(&self, l: i32) -> SubmoduleBasis<F> {
        let mut out = self.clone();
        for d in out.ambient.iter_mut().chain(out.degrees.iter_mut()) {
            *d += l;
        }
        out
    }

    /// Block-diagonal sum; the split sits between the two ambients.
    pub fn direct_sum(a: &Self, b: &Self) -> SubmoduleBasis<F> {
        assert_eq!(a.beta, b.beta, "direct sum of lattices for different roots");
        let mut ambient = a.ambient.clone();
        ambient.extend_from_slice(&b.ambient);
        let mut degrees = a.degrees.clone();
        degrees.extend_from_slice(&b.degrees);
        let m = SpMat::block_diag(&a.mat, &b.mat);
        let out = SubmoduleBasis { rd: a.rd, beta: a.beta, ambient, split: a.ambient.len(), mat: m, degrees, inv: OnceLock::new() };
        match (a.inv.get(), b.inv.get()) {
            (Some(Some(x)), Some(Some(y))) => out.with_inverse(SpMat::block_diag(x, y)),
            _ => out,
        }
    }

    /// Smith form over the local ring at `β`: pivots are chosen with the
    /// minimal remaining exponent, so every multiplier is integral.
    pub fn snf_beta(&self) -> SnfBeta<F> {
        let (n, m) = (self.ambient.len(), self.rank());
        let mut a = self.mat.to_dense();
        let mut u = SpMat::<F>::identity(n).to_dense();
        let mut v = SpMat::<F>::identity(m).to_dense();
        let mut row_done = vec![false; n];
        let mut col_done = vec![false; m];
        let mut pivots = vec![];
        loop {
            let mut best: Option<(i64, usize, usize)> = None;
            for i in (0..n).filter(|&i| !row_done[i]) {
                for j in (0..m).filter(|&j| !col_done[j]) {
                    if !a[i][j].is_zero() {
                        let e = self.exponent(i, j);
                        if best.is_none_or(|b| e < b.0) {
                            best = Some((e, i, j));
                        }
                    }
                }
            }
            let Some((e, p, q)) = best else { break };
            let inv = a[p][q].inv().unwrap();
            // clear column q with row operations
            for i in 0..n {
                if i != p && !a[i][q].is_zero() {
                    let f = a[i][q] * inv;
                    for j in 0..m {
                        a[i][j] = a[i][j] - f * a[p][j];
                    }
                    for j in 0..n {
                        u[i][j] = u[i][j] - f * u[p][j];
                    }
                }
            }
            // clear row p with column operations
            for j in 0..m {
                if j != q && !a[p][j].is_zero() {
                    let f = a[p][j] * inv;
                    for i in 0..n {
                        a[i][j] = a[i][j] - f * a[i][q];
                    }
                    for i in 0..m {
                        v[i][j] = v[i][j] - f * v[i][q];
                    }
                }
            }
            row_done[p] = true;
            col_done[q] = true;
            pivots.push((p, q, e));
        }
        let mut exponents: Vec<i64> = pivots.iter().map(|p| p.2).collect();
        exponents.sort_unstable();
        SnfBeta { exponents, pivots, u: SpMat::from_dense(&u), v: SpMat::from_dense(&v) }
    }

    /// Exponent of `β` in the determinant (square dense bases only).
    pub fn det_beta_exponent(&self) -> Option<i64> {
        self.is_dense().then(|| {
            let s: i64 = self.degrees.iter().map(|&d| d as i64).sum::<i64>() - self.ambient.iter().map(|&d| d as i64).sum::<i64>();
            s / 2
        })
    }

    /// Relabel the ambient: new row `k` is old row `perm[k]`.
    pub fn permute_ambient(&self, perm: &[usize], split: usize) -> SubmoduleBasis<F> {
        let ambient = perm.iter().map(|&p| self.ambient[p]).collect();
        let m = self.mat.permute_rows(perm);
        let out = SubmoduleBasis { rd: self.rd, beta: self.beta, ambient, split, mat: m, degrees: self.degrees.clone(), inv: OnceLock::new() };
        match self.inv.get() {
            // (P C)⁻¹ = C⁻¹ Pᵀ: column k of the new inverse is column perm[k] of the old one
            Some(Some(x)) => out.with_inverse(x.permute_cols(perm)),
            _ => out,
        }
    }

    /// Apply a diagonal sign/scalar twist to the entries: entry `(i, j)` is
    /// multiplied by `r[i] * c[j]`.
    pub fn rescale(&self, r: &[F], c: &[F]) -> SubmoduleBasis<F> {
        let m = self.mat.scale_rows_cols(r, c);
        let out = SubmoduleBasis {
            rd: self.rd,
            beta: self.beta,
            ambient: self.ambient.clone(),
            split: self.split,
            mat: m,
            degrees: self.degrees.clone(),
            inv: OnceLock::new(),
        };
        match self.inv.get() {
            Some(Some(x)) => {
                let ri: Vec<F> = r.iter().map(|y| y.inv().expect("rescale by zero")).collect();
                let ci: Vec<F> = c.iter().map(|y| y.inv().expect("rescale by zero")).collect();
                out.with_inverse(x.scale_rows_cols(&ci, &ri))
            }
            _ => out,
        }
    }

    /// Same lattice, relabelled to another root index and datum-compatible
    /// ambient (used by the tilting functor).
    pub fn with_beta(&self, beta: usize) -> SubmoduleBasis<F> {
        let mut out = self.clone();
        out.beta = beta;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::rootsys::{Root, RootType};

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn a1() -> &'static RootDatum {
        RootDatum::get(RootType::A1)
    }

    /// {(β,0),(1,1)} in S^∅ ⊕ S^∅, generators in degree 0.
    fn butterfly() -> SubmoduleBasis<Q> {
        SubmoduleBasis::from_columns(a1(), 0, vec![0, 0], 1, vec![(vec![(0, q(1))], 2), (vec![(0, q(1)), (1, q(1))], 0)]).unwrap()
    }

    fn split_lattice() -> SubmoduleBasis<Q> {
        SubmoduleBasis::from_columns(a1(), 0, vec![0, 0], 1, vec![(vec![(0, q(1))], 2), (vec![(1, q(1))], 0)]).unwrap()
    }

    fn frac(s: &str) -> RootFraction<Q> {
        RootFraction::parse(a1(), s).unwrap()
    }

    #[test]
    fn butterfly_solve() {
        let b = butterfly();
        let s = b.solve_in_basis(&[frac("a1"), frac("0")]).unwrap();
        assert!(s.member);
        assert_eq!(s.coeffs, vec![frac("1"), frac("0")]);
        let s = b.solve_in_basis(&[frac("1"), frac("0")]).unwrap();
        assert!(!s.member);
        assert_eq!(s.coeffs[0], RootFraction::root_power(a1(), 0, q(1), -1));
        assert_eq!(b.expand(&s.coeffs), vec![frac("1"), frac("0")]);
        assert!(!b.contains_vector(&[frac("1"), frac("0")]).unwrap());
        assert!(b.contains_vector(&[frac("a1"), frac("0")]).unwrap());
        assert!(b.contains_vector(&[frac("0"), frac("a1")]).unwrap());
    }

    #[test]
    fn equality_and_density() {
        let b = butterfly();
        let swapped = SubmoduleBasis::from_columns(a1(), 0, vec![0, 0], 1, vec![(vec![(0, q(1)), (1, q(1))], 0), (vec![(0, q(1))], 2)]).unwrap();
        assert!(b.same_span(&swapped).unwrap());
        assert!(!b.same_span(&split_lattice()).unwrap());
        assert!(b.is_dense());
        let thin = SubmoduleBasis::from_columns(a1(), 0, vec![0, 0], 1, vec![(vec![(0, q(1)), (1, q(1))], 2)]).unwrap();
        assert!(!thin.is_dense());
        let one = SubmoduleBasis::from_columns(a1(), 0, vec![0], 1, vec![(vec![(0, q(1))], 0)]).unwrap();
        assert!(!one.same_span(&one.scale(1)).unwrap());
        assert!(one.includes(&one.scale(1)).unwrap());
    }

    #[test]
    fn duals() {
        let b = butterfly();
        let d = b.dual().unwrap();
        // rows of B⁻¹: (β⁻¹, −β⁻¹), (0, 1)
        assert_eq!(d.column(0), vec![RootFraction::root_power(a1(), 0, q(1), -1), RootFraction::root_power(a1(), 0, q(-1), -1)]);
        assert_eq!(d.column(1), vec![frac("0"), frac("1")]);
        for i in 0..2 {
            for j in 0..2 {
                let pairing: RootFraction<Q> = (0..2).fold(RootFraction::zero(a1()), |acc, k| &acc + &(&d.entry(k, i) * &b.entry(k, j)));
                assert_eq!(pairing.is_one(), i == j);
                assert_eq!(pairing.is_zero(), i != j);
            }
        }
        let dd = d.dual().unwrap();
        assert!(dd.same_span(&b).unwrap());
        let one = SubmoduleBasis::from_columns(a1(), 0, vec![0], 1, vec![(vec![(0, q(1))], 2)]).unwrap();
        let od = one.dual().unwrap();
        assert_eq!(od.entry(0, 0), RootFraction::root_power(a1(), 0, q(1), -1));
        assert_eq!(od.degrees(), &[-2]);
    }

    #[test]
    fn snf_examples() {
        assert_eq!(butterfly().snf_beta().exponents, vec![0, 1]);
        let id = SubmoduleBasis::<Q>::from_columns(a1(), 0, vec![0, 0], 1, vec![(vec![(0, q(1))], 0), (vec![(1, q(1))], 0)]).unwrap();
        assert_eq!(id.snf_beta().exponents, vec![0, 0]);
        assert_eq!(id.scale(1).snf_beta().exponents, vec![1, 1]);
        assert_eq!(butterfly().det_beta_exponent(), Some(1));
    }

    #[test]
    fn blocks() {
        let b = butterfly();
        let p = b.project_block(0).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.degrees(), &[0]);
        let i = b.intersect_block(0).unwrap();
        assert_eq!(i.degrees(), &[2]);
        let i1 = b.intersect_block(1).unwrap();
        assert_eq!(i1.degrees(), &[2]);
        assert!(b.links().unwrap());
        assert!(!split_lattice().links().unwrap());
        let s = split_lattice().intersect_block(0).unwrap();
        assert_eq!(s.degrees(), &[2]);
        assert!(matches!(b.intersect_block(2), Err(AjsError::Dimension(_))));
    }

    #[test]
    fn sums_and_shifts() {
        let one = SubmoduleBasis::from_columns(a1(), 0, vec![0], 1, vec![(vec![(0, q(1))], 0)]).unwrap();
        let s = SubmoduleBasis::direct_sum(&one, &one.scale(1));
        assert_eq!(s.degrees(), &[0, 2]);
        assert_eq!(s.split(), 1);
        assert_eq!(s.shift(-2).shift(2), s);
        assert_eq!(one.scale(1).entry(0, 0), frac("a1"));
    }

    #[test]
    fn fraction_input_must_be_univariate() {
        let rd = RootDatum::get(RootType::A2);
        let bad = vec![vec![RootFraction::<Q>::root(rd, Root::pos(1))]];
        assert!(matches!(
            SubmoduleBasis::from_fractions(rd, 0, vec![0], 1, &bad, vec![2]),
            Err(AjsError::NonUnivariate(_))
        ));
        let good = vec![vec![RootFraction::<Q>::root(rd, Root::pos(0))]];
        assert!(SubmoduleBasis::from_fractions(rd, 0, vec![0], 1, &good, vec![2]).is_ok());
        assert!(matches!(
            SubmoduleBasis::from_fractions(rd, 0, vec![0], 1, &good, vec![0]),
            Err(AjsError::Inhomogeneous(_))
        ));
    }
}
