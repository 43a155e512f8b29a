//! Root data of rank at most two and the finite Weyl group.
//!
//! Conventions: roots are integer vectors in the basis of simple roots,
//! `cartan[i][j] = <alpha_j, alpha_i^vee>`. Points of the dual space are
//! written in fundamental-coweight coordinates, i.e. by their pairings with
//! the simple roots. In B2 the first simple root is long, in G2 it is short.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{AjsError, Result};
use crate::field::{Field, Q};

/// Two integer coordinates; rank-one data only uses the first.
pub type Vec2 = [i64; 2];
pub type Mat2 = [[i64; 2]; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A1,
    A2,
    B2,
    G2,
}

impl RootType {
    pub fn all_enabled() -> Vec<RootType> {
        let mut v = vec![RootType::A1, RootType::A2, RootType::B2];
        if cfg!(feature = "g2") {
            v.push(RootType::G2);
        }
        v
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A1 => "A1",
            RootType::A2 => "A2",
            RootType::B2 => "B2",
            RootType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = AjsError;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(RootType::A1),
            "A2" => Ok(RootType::A2),
            "B2" | "C2" => Ok(RootType::B2),
            "G2" if cfg!(feature = "g2") => Ok(RootType::G2),
            "G2" => Err(AjsError::UnsupportedType("G2 (build with feature `g2`)".into())),
            other => Err(AjsError::UnsupportedType(other.to_string())),
        }
    }
}

/// Handle to an element of the finite Weyl group of some root datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt(pub(crate) u8);

impl WeylElt {
    pub const E: WeylElt = WeylElt(0);
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A root `±pos[idx]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub idx: usize,
    pub neg: bool,
}

impl Root {
    pub fn pos(idx: usize) -> Root {
        Root { idx, neg: false }
    }
    pub fn negate(self) -> Root {
        Root { idx: self.idx, neg: !self.neg }
    }
    pub fn sign(self) -> i64 {
        if self.neg {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug)]
struct WeylData {
    word: Vec<usize>,
    root_mat: Mat2,
    cw_mat: Mat2,
}

#[derive(Debug)]
pub struct RootDatum {
    pub ty: RootType,
    pub rank: usize,
    pub cartan: Mat2,
    /// half squared lengths of the simple roots
    sym: [i64; 2],
    pos: Vec<Vec2>,
    coroot_cw: Vec<Vec2>,
    highest: usize,
    coxeter: i64,
    weyl: Vec<WeylData>,
    mul: Vec<Vec<u8>>,
    inv: Vec<u8>,
    w0: u8,
    act: Vec<Vec<Root>>,
    refl: Vec<u8>,
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub(crate) fn mat_vec(a: &Mat2, v: &Vec2) -> Vec2 {
    [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
}

impl RootDatum {
    /// Cached, leaked instance; there are only four of them.
    pub fn get(ty: RootType) -> &'static RootDatum {
        static CELLS: [OnceLock<RootDatum>; 4] =
            [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let i = ty as usize;
        CELLS[i].get_or_init(|| RootDatum::build(ty))
    }

    pub fn from_label(label: &str) -> Result<&'static RootDatum> {
        Ok(RootDatum::get(label.parse()?))
    }

    fn build(ty: RootType) -> RootDatum {
        let (rank, cartan, sym): (usize, Mat2, [i64; 2]) = match ty {
            RootType::A1 => (1, [[2, 0], [0, 2]], [1, 1]),
            RootType::A2 => (2, [[2, -1], [-1, 2]], [1, 1]),
            RootType::B2 => (2, [[2, -1], [-2, 2]], [2, 1]),
            RootType::G2 => (2, [[2, -3], [-1, 2]], [1, 3]),
        };
        let simple_refl = |i: usize| -> Mat2 {
            // s_i(v) = v - <v, alpha_i^vee> alpha_i on root coordinates
            let mut m = [[1, 0], [0, 1]];
            if rank == 1 {
                return [[-1, 0], [0, 1]];
            }
            for j in 0..2 {
                m[i][j] -= cartan[i][j];
            }
            m
        };
        let simple_refl_cw = |i: usize| -> Mat2 {
            // (s_i c)_j = c_j - c_i * cartan[i][j]
            let mut m = [[1, 0], [0, 1]];
            if rank == 1 {
                return [[-1, 0], [0, 1]];
            }
            for j in 0..2 {
                m[j][i] -= cartan[i][j];
            }
            m
        };

        // roots: orbit of the simple roots
        let mut roots: Vec<Vec2> = (0..rank).map(|i| if i == 0 { [1, 0] } else { [0, 1] }).collect();
        let mut k = 0;
        while k < roots.len() {
            for i in 0..rank {
                let r = mat_vec(&simple_refl(i), &roots[k]);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            k += 1;
        }
        let mut pos: Vec<Vec2> = roots.into_iter().filter(|r| r[0] >= 0 && r[1] >= 0).collect();
        pos.sort_by_key(|r| (r[0] + r[1], [-r[0], -r[1]]));
        let highest = pos.len() - 1;

        let form = |x: &Vec2, y: &Vec2| -> i64 {
            let mut s = 0;
            for i in 0..rank {
                for j in 0..rank {
                    s += x[i] * y[j] * sym[i] * cartan[i][j];
                }
            }
            s
        };
        let coroot_cw: Vec<Vec2> = pos
            .iter()
            .map(|a| {
                let aa = form(a, a);
                let mut c = [0; 2];
                for (j, cj) in c.iter_mut().enumerate().take(rank) {
                    let e = if j == 0 { [1, 0] } else { [0, 1] };
                    let num = 2 * form(&e, a);
                    assert_eq!(num % aa, 0);
                    *cj = num / aa;
                }
                c
            })
            .collect();

        // Weyl group by breadth-first search; words come out reduced
        let mut weyl = vec![WeylData { word: vec![], root_mat: [[1, 0], [0, 1]], cw_mat: [[1, 0], [0, 1]] }];
        let mut k = 0;
        while k < weyl.len() {
            for i in 0..rank {
                let m = mat_mul(&weyl[k].root_mat, &simple_refl(i));
                if weyl.iter().all(|d| d.root_mat != m) {
                    let mut word = weyl[k].word.clone();
                    word.push(i);
                    let cw = mat_mul(&weyl[k].cw_mat, &simple_refl_cw(i));
                    weyl.push(WeylData { word, root_mat: m, cw_mat: cw });
                }
            }
            k += 1;
        }
        let find = |m: &Mat2| weyl.iter().position(|d| &d.root_mat == m).unwrap() as u8;
        let n = weyl.len();
        let mul: Vec<Vec<u8>> = (0..n)
            .map(|a| (0..n).map(|b| find(&mat_mul(&weyl[a].root_mat, &weyl[b].root_mat))).collect())
            .collect();
        let inv: Vec<u8> = (0..n).map(|a| (0..n).position(|b| mul[a][b] == 0).unwrap() as u8).collect();
        let w0 = (0..n).max_by_key(|&a| weyl[a].word.len()).unwrap() as u8;
        let find_root = |v: &Vec2| -> Root {
            if let Some(i) = pos.iter().position(|p| p == v) {
                Root::pos(i)
            } else {
                let i = pos.iter().position(|p| p[0] == -v[0] && p[1] == -v[1]).expect("image of a root is a root");
                Root { idx: i, neg: true }
            }
        };
        let act: Vec<Vec<Root>> =
            (0..n).map(|a| pos.iter().map(|r| find_root(&mat_vec(&weyl[a].root_mat, r))).collect()).collect();
        let refl: Vec<u8> = pos
            .iter()
            .zip(&coroot_cw)
            .map(|(b, bc)| {
                // s_b(v) = v - <v, b^vee> b, and <alpha_j, b^vee> = bc[j]
                let mut m = [[1, 0], [0, 1]];
                for (i, row) in m.iter_mut().enumerate().take(rank) {
                    for j in 0..rank {
                        row[j] -= b[i] * bc[j];
                    }
                }
                find(&m)
            })
            .collect();
        let coxeter = pos[highest][0] + pos[highest][1] + 1;
        RootDatum { ty, rank, cartan, sym, pos, coroot_cw, highest, coxeter, weyl, mul, inv, w0, act, refl }
    }

    pub fn positive_roots(&self) -> &[Vec2] {
        &self.pos
    }
    pub fn n_pos(&self) -> usize {
        self.pos.len()
    }
    pub fn root_vec(&self, r: Root) -> Vec2 {
        let v = self.pos[r.idx];
        if r.neg {
            [-v[0], -v[1]]
        } else {
            v
        }
    }
    pub fn simple(&self, i: usize) -> usize {
        i
    }
    pub fn highest_root(&self) -> usize {
        self.highest
    }
    pub fn coxeter_number(&self) -> i64 {
        self.coxeter
    }
    /// The coroot of a positive root in fundamental-coweight coordinates.
    pub fn coroot(&self, beta: usize) -> Vec2 {
        self.coroot_cw[beta]
    }
    /// `<v, beta^vee>` for a vector `v` in root coordinates.
    pub fn pairing(&self, v: &Vec2, beta: usize) -> i64 {
        let c = &self.coroot_cw[beta];
        v[0] * c[0] + v[1] * c[1]
    }
    /// `(alpha_i, alpha_i) / 2` for each simple root
    pub fn half_sq_lengths(&self) -> [i64; 2] {
        self.sym
    }
    pub fn root_index(&self, v: &Vec2) -> Result<Root> {
        for (i, p) in self.pos.iter().enumerate() {
            if p == v {
                return Ok(Root::pos(i));
            }
            if p[0] == -v[0] && p[1] == -v[1] {
                return Ok(Root { idx: i, neg: true });
            }
        }
        Err(AjsError::NotARoot(format!("{v:?}")))
    }
    pub fn root_label(&self, beta: usize) -> String {
        let v = self.pos[beta];
        if self.rank == 1 {
            return "a1".into();
        }
        let mut parts = vec![];
        for (i, &c) in v.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("a{}", i + 1)),
                c => parts.push(format!("{c}a{}", i + 1)),
            }
        }
        parts.join("+")
    }

    /// Fundamental coweights in simple-coroot coordinates.
    pub fn fundamental_coweights(&self) -> Vec<[Q; 2]> {
        // omega_i = sum_k x_k alpha_k^vee with <alpha_j, omega_i> = delta_ij,
        // <alpha_j, alpha_k^vee> = cartan[k][j]
        let r = self.rank;
        let c = |k: usize, j: usize| Q::from_i64(self.cartan[k][j]);
        (0..r)
            .map(|i| {
                if r == 1 {
                    return [Q::new(1, 2), Q::new(0, 1)];
                }
                // solve 2x2 system M^T x = e_i where M[k][j] = cartan[k][j]
                let (a, b, cc, d) = (c(0, 0), c(1, 0), c(0, 1), c(1, 1));
                let det = a * d - b * cc;
                let e = if i == 0 { [Q::new(1, 1), Q::new(0, 1)] } else { [Q::new(0, 1), Q::new(1, 1)] };
                [(d * e[0] - b * e[1]) / det, (a * e[1] - cc * e[0]) / det]
            })
            .collect()
    }

    pub fn weyl_size(&self) -> usize {
        self.weyl.len()
    }
    pub fn weyl_elements(&self) -> impl Iterator<Item = WeylElt> {
        (0..self.weyl.len() as u8).map(WeylElt)
    }
    pub fn word(&self, w: WeylElt) -> &[usize] {
        &self.weyl[w.index()].word
    }
    pub fn matrix(&self, w: WeylElt) -> Mat2 {
        self.weyl[w.index()].root_mat
    }
    pub(crate) fn cw_matrix(&self, w: WeylElt) -> Mat2 {
        self.weyl[w.index()].cw_mat
    }
    pub fn length(&self, w: WeylElt) -> usize {
        self.weyl[w.index()].word.len()
    }
    pub fn longest_element(&self) -> WeylElt {
        WeylElt(self.w0)
    }
    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        WeylElt(self.refl[i])
    }
    pub fn reflection(&self, beta: usize) -> WeylElt {
        WeylElt(self.refl[beta])
    }
    pub fn mul(&self, a: WeylElt, b: WeylElt) -> WeylElt {
        WeylElt(self.mul[a.index()][b.index()])
    }
    pub fn inverse(&self, a: WeylElt) -> WeylElt {
        WeylElt(self.inv[a.index()])
    }
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElt> {
        let mut w = WeylElt::E;
        for &i in word {
            if i >= self.rank {
                return Err(AjsError::BadWord(format!("s{i} is not a finite simple reflection")));
            }
            w = self.mul(w, self.simple_reflection(i));
        }
        Ok(w)
    }

    pub fn weyl_act(&self, w: WeylElt, r: Root) -> Root {
        let img = self.act[w.index()][r.idx];
        if r.neg {
            img.negate()
        } else {
            img
        }
    }
    /// `w(beta)^+` together with whether `w(beta)` was negative.
    pub fn w_plus(&self, w: WeylElt, beta: usize) -> (usize, bool) {
        let r = self.act[w.index()][beta];
        (r.idx, r.neg)
    }

    /// Inversion count, used to cross-check `length`.
    pub fn inversions(&self, w: WeylElt) -> usize {
        self.act[w.index()].iter().filter(|r| r.neg).count()
    }
}

/// JSON view of a root datum.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct RootDatumJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub cartan: Vec<Vec<i64>>,
}

impl RootDatum {
    pub fn to_json(&self) -> RootDatumJson {
        let r = self.rank;
        let cut = |v: &Vec2| v[..r].to_vec();
        RootDatumJson {
            ty: self.ty.to_string(),
            rank: r,
            simple_roots: (0..r).map(|i| cut(&self.pos[i])).collect(),
            positive_roots: self.pos.iter().map(cut).collect(),
            coroots: self.coroot_cw.iter().map(cut).collect(),
            highest_root: cut(&self.pos[self.highest]),
            cartan: (0..r).map(|i| self.cartan[i][..r].to_vec()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let expect = [(RootType::A1, 1, 2), (RootType::A2, 3, 6), (RootType::B2, 4, 8)];
        for (ty, np, nw) in expect {
            let rd = RootDatum::get(ty);
            assert_eq!(rd.n_pos(), np);
            assert_eq!(rd.weyl_size(), nw);
            assert_eq!(rd.length(rd.longest_element()), np);
        }
    }

    #[test]
    fn b2_highest_root_is_long() {
        let rd = RootDatum::get(RootType::B2);
        assert_eq!(rd.positive_roots()[rd.highest_root()], [1, 2]);
        // long roots have coroots with smaller pairings
        assert_eq!(rd.pairing(&[0, 1], 0), -1);
        assert_eq!(rd.pairing(&[1, 0], 1), -2);
    }

    #[test]
    fn a2_action() {
        let rd = RootDatum::get(RootType::A2);
        let s1 = rd.simple_reflection(0);
        assert_eq!(rd.root_vec(rd.weyl_act(s1, Root::pos(1))), [1, 1]);
        assert_eq!(rd.w_plus(s1, 0), (0, true));
        let w0 = rd.longest_element();
        for b in 0..3 {
            assert!(rd.weyl_act(w0, Root::pos(b)).neg);
        }
    }

    #[test]
    fn invariants_all_types() {
        for ty in RootType::all_enabled() {
            let rd = RootDatum::get(ty);
            let hi = rd.positive_roots()[rd.highest_root()];
            for b in 0..rd.n_pos() {
                let v = rd.positive_roots()[b];
                assert_eq!(rd.pairing(&v, b), 2);
                assert!(hi[0] >= v[0] && hi[1] >= v[1]);
            }
            for i in 0..rd.rank {
                assert!(rd.pairing(&hi, i) >= 0);
            }
            for w in rd.weyl_elements() {
                assert_eq!(rd.length(w), rd.inversions(w));
                let wi = rd.inverse(w);
                for b in 0..rd.n_pos() {
                    let (c, _) = rd.w_plus(w, b);
                    assert_eq!(rd.w_plus(wi, c).0, b);
                }
                // word matches matrix
                let mut m = [[1, 0], [0, 1]];
                for &i in rd.word(w) {
                    m = mat_mul(&m, &rd.matrix(rd.simple_reflection(i)));
                }
                assert_eq!(m, rd.matrix(w));
            }
        }
    }

    #[test]
    fn coweights_dual_to_simple_roots() {
        for ty in RootType::all_enabled() {
            let rd = RootDatum::get(ty);
            let om = rd.fundamental_coweights();
            for (i, o) in om.iter().enumerate() {
                for j in 0..rd.rank {
                    // <alpha_j, sum_k o_k alpha_k^vee>
                    let mut s = Q::new(0, 1);
                    for k in 0..rd.rank {
                        s = s + o[k] * Q::new(rd.cartan[k][j] as i128, 1);
                    }
                    assert_eq!(s, Q::new((i == j) as i128, 1));
                }
            }
        }
    }
}
