//! Sparse matrices and incremental echelon bases over a field.

use std::collections::BTreeMap;

use crate::field::Field;

/// Sparse vector: sorted `(index, value)` pairs with nonzero values.
pub type SpVec<F> = Vec<(usize, F)>;

/// Column-compressed sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpMat<F: Field> {
    rows: usize,
    cols: Vec<SpVec<F>>,
}

impl<F: Field> SpMat<F> {
    pub fn zeros(rows: usize, ncols: usize) -> Self {
        SpMat { rows, cols: vec![vec![]; ncols] }
    }

    pub fn identity(n: usize) -> Self {
        SpMat { rows: n, cols: (0..n).map(|i| vec![(i, F::one())]).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<SpVec<F>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.retain(|(_, x)| !x.is_zero());
                c.sort_by_key(|e| e.0);
                debug_assert!(c.iter().all(|(i, _)| *i < rows));
                c
            })
            .collect();
        SpMat { rows, cols }
    }

    pub fn from_dense(d: &[Vec<F>]) -> Self {
        let rows = d.len();
        let ncols = d.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| (0..rows).filter(|&i| !d[i][j].is_zero()).map(|i| (i, d[i][j])).collect())
            .collect();
        SpMat { rows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut d = vec![vec![F::zero(); self.ncols()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, x) in c {
                d[i][j] = x;
            }
        }
        d
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }
    pub fn col(&self, j: usize) -> &SpVec<F> {
        &self.cols[j]
    }
    pub fn columns(&self) -> &[SpVec<F>] {
        &self.cols
    }
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        match self.cols[j].binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.cols[j][k].1,
            Err(_) => F::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, F)> + '_ {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |&(i, x)| (i, j, x)))
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SpVec<F>> = vec![vec![]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, x) in c {
                cols[i].push((j, x));
            }
        }
        SpMat { rows: self.ncols(), cols }
    }

    /// `self * v` for a sparse column vector.
    pub fn mul_vec(&self, v: &SpVec<F>) -> SpVec<F> {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for &(k, x) in v {
            for &(i, a) in &self.cols[k] {
                let e = acc.entry(i).or_insert_with(F::zero);
                *e = *e + a * x;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    pub fn mul(&self, rhs: &SpMat<F>) -> SpMat<F> {
        assert_eq!(self.ncols(), rhs.nrows(), "matrix product shape");
        SpMat { rows: self.rows, cols: rhs.cols.iter().map(|c| self.mul_vec(c)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.ncols()
            && self.cols.iter().enumerate().all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    /// Scale each entry `(i, j)` by `r[i] * c[j]`.
    pub fn scale_rows_cols(&self, r: &[F], c: &[F]) -> Self {
        SpMat {
            rows: self.rows,
            cols: self.cols.iter().enumerate().map(|(j, col)| col.iter().map(|&(i, x)| (i, x * r[i] * c[j])).collect()).collect(),
        }
    }

    /// Rows taken in the order `perm` (new row `k` is old row `perm[k]`).
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        let mut inv = vec![usize::MAX; self.rows];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        SpMat::from_columns(perm.len(), self.cols.iter().map(|c| c.iter().map(|&(i, x)| (inv[i], x)).collect()).collect())
    }

    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        SpMat { rows: self.rows, cols: perm.iter().map(|&p| self.cols[p].clone()).collect() }
    }

    /// Inverse by dense Gauss-Jordan elimination.
    pub fn inverse(&self) -> Option<SpMat<F>> {
        let n = self.rows;
        if n != self.ncols() {
            return None;
        }
        let mut a = self.to_dense();
        let mut b: Vec<Vec<F>> = (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, p);
            b.swap(c, p);
            let inv = a[c][c].inv().unwrap();
            for j in 0..n {
                a[c][j] = a[c][j] * inv;
                b[c][j] = b[c][j] * inv;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c];
                    for j in 0..n {
                        if !a[c][j].is_zero() {
                            a[r][j] = a[r][j] - f * a[c][j];
                        }
                        if !b[c][j].is_zero() {
                            b[r][j] = b[r][j] - f * b[c][j];
                        }
                    }
                }
            }
        }
        Some(SpMat::from_dense(&b))
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::natural(self.rows);
        self.cols.iter().filter(|c| e.insert(c).is_some()).count()
    }

    pub fn block_diag(a: &SpMat<F>, b: &SpMat<F>) -> SpMat<F> {
        let off = a.rows;
        let mut cols = a.cols.clone();
        cols.extend(b.cols.iter().map(|c| c.iter().map(|&(i, x)| (i + off, x)).collect()));
        SpMat { rows: a.rows + b.rows, cols }
    }
}

/// Incremental echelon basis. Coordinates are compared by `order`
/// (position of each coordinate), the lead of a vector is its first nonzero
/// coordinate in that order.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pos_of: Vec<usize>,
    coord_of: Vec<usize>,
    /// lead position -> vector in position space (sorted by position)
    basis: BTreeMap<usize, SpVec<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn natural(n: usize) -> Self {
        Self::with_order((0..n).collect())
    }

    /// `order[k]` is the coordinate with priority `k`.
    pub fn with_order(order: Vec<usize>) -> Self {
        let mut pos_of = vec![0; order.len()];
        for (k, &c) in order.iter().enumerate() {
            pos_of[c] = k;
        }
        Echelon { pos_of, coord_of: order, basis: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn to_pos(&self, v: &SpVec<F>) -> BTreeMap<usize, F> {
        v.iter().filter(|(_, x)| !x.is_zero()).map(|&(i, x)| (self.pos_of[i], x)).collect()
    }

    fn reduce_pos(&self, mut v: BTreeMap<usize, F>) -> BTreeMap<usize, F> {
        let mut from = 0;
        loop {
            let next = v.range(from..).find(|(p, _)| self.basis.contains_key(p)).map(|(p, x)| (*p, *x));
            let Some((p, x)) = next else { break };
            let b = &self.basis[&p];
            // b is normalized with lead coefficient 1
            for &(q, y) in b {
                let e = v.entry(q).or_insert_with(F::zero);
                *e = *e - x * y;
                if e.is_zero() {
                    v.remove(&q);
                }
            }
            from = p + 1;
        }
        v
    }

    /// Reduce `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &SpVec<F>) -> SpVec<F> {
        let mut out: SpVec<F> = self.reduce_pos(self.to_pos(v)).into_iter().map(|(p, x)| (self.coord_of[p], x)).collect();
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn contains(&self, v: &SpVec<F>) -> bool {
        self.reduce_pos(self.to_pos(v)).is_empty()
    }

    /// Insert `v`; returns the reduced vector (in coordinates) and its lead
    /// coordinate if `v` was independent.
    pub fn insert(&mut self, v: &SpVec<F>) -> Option<(usize, SpVec<F>)> {
        let r = self.reduce_pos(self.to_pos(v));
        let (&lead, &lc) = r.iter().next()?;
        let inv = lc.inv().unwrap();
        let normalized: SpVec<F> = r.iter().map(|(&p, &x)| (p, x * inv)).collect();
        let mut coords: SpVec<F> = r.iter().map(|(&p, &x)| (self.coord_of[p], x)).collect();
        coords.sort_by_key(|e| e.0);
        self.basis.insert(lead, normalized);
        Some((self.coord_of[lead], coords))
    }

    /// Priority position of a coordinate.
    pub fn position(&self, coord: usize) -> usize {
        self.pos_of[coord]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn inverse_and_product() {
        let m = SpMat::from_dense(&[vec![q(1), q(1)], vec![q(0), q(1)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(inv.get(0, 1), q(-1));
        let sing = SpMat::from_dense(&[vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn echelon_with_order() {
        // prefer coordinate 1 as lead
        let mut e = Echelon::<Q>::with_order(vec![1, 0]);
        let (lead, _) = e.insert(&vec![(0, q(1)), (1, q(1))]).unwrap();
        assert_eq!(lead, 1);
        let (lead, red) = e.insert(&vec![(1, q(2))]).unwrap();
        assert_eq!(lead, 0);
        assert_eq!(red, vec![(0, q(-2))]);
        assert!(e.contains(&vec![(0, q(5))]));
        assert!(e.insert(&vec![(0, q(3)), (1, q(3))]).is_none());
    }

    #[test]
    fn permutations() {
        let m = SpMat::from_dense(&[vec![q(1), q(2)], vec![q(3), q(4)]]);
        let p = m.permute_rows(&[1, 0]);
        assert_eq!(p.get(0, 0), q(3));
        assert_eq!(m.transpose().get(0, 1), q(3));
        let bd = SpMat::block_diag(&m, &SpMat::identity(1));
        assert_eq!(bd.get(2, 2), q(1));
        assert_eq!(bd.nnz(), 5);
    }
}
