//! Elements of `S^∅`: a polynomial over a monomial in the positive roots.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::fracring::poly::Poly;
use crate::rootsys::{Root, RootDatum, WeylElt};

const MAX_ROOTS: usize = 6;

/// `num / prod alpha^den[alpha]`, normalized so that no root in the
/// denominator divides the numerator. The normal form is unique, so
/// derived equality is equality in `S^∅`.
#[derive(Clone)]
pub struct RootFraction<F: Field> {
    rd: &'static RootDatum,
    num: Poly<F>,
    den: [u16; MAX_ROOTS],
}

impl<F: Field> PartialEq for RootFraction<F> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}
impl<F: Field> Eq for RootFraction<F> {}

impl<F: Field> Hash for RootFraction<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl<F: Field> fmt::Debug for RootFraction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn root_form<F: Field>(rd: &RootDatum, beta: usize) -> [F; 2] {
    let v = rd.positive_roots()[beta];
    [F::from_i64(v[0]), F::from_i64(v[1])]
}

pub(crate) fn root_poly<F: Field>(rd: &RootDatum, beta: usize) -> Poly<F> {
    Poly::linear(&rd.positive_roots()[beta][..rd.rank])
}

impl<F: Field> RootFraction<F> {
    pub fn zero(rd: &'static RootDatum) -> Self {
        RootFraction { rd, num: Poly::zero(), den: [0; MAX_ROOTS] }
    }

    pub fn one(rd: &'static RootDatum) -> Self {
        Self::scalar(rd, F::one())
    }

    pub fn scalar(rd: &'static RootDatum, c: F) -> Self {
        RootFraction { rd, num: Poly::constant(c), den: [0; MAX_ROOTS] }
    }

    pub fn from_i64(rd: &'static RootDatum, n: i64) -> Self {
        Self::scalar(rd, F::from_i64(n))
    }

    pub fn from_poly(rd: &'static RootDatum, num: Poly<F>) -> Self {
        RootFraction { rd, num, den: [0; MAX_ROOTS] }
    }

    /// The signed root `±alpha` as an element of `S`.
    pub fn root(rd: &'static RootDatum, r: Root) -> Self {
        let p = root_poly(rd, r.idx);
        Self::from_poly(rd, if r.neg { -&p } else { p })
    }

    /// `c * beta^k`, with `k` of either sign.
    pub fn root_power(rd: &'static RootDatum, beta: usize, c: F, k: i64) -> Self {
        let mut f = Self::scalar(rd, c);
        f.mul_root_pow_mut(beta, k);
        f
    }

    /// Build `num / prod alpha^den` and normalize.
    pub fn from_parts(rd: &'static RootDatum, num: Poly<F>, den: &[u16]) -> Self {
        let mut d = [0; MAX_ROOTS];
        d[..den.len()].copy_from_slice(den);
        let mut f = RootFraction { rd, num, den: d };
        f.normalize();
        f
    }

    pub fn root_datum(&self) -> &'static RootDatum {
        self.rd
    }
    pub fn numerator(&self) -> &Poly<F> {
        &self.num
    }
    pub fn denominator_exponents(&self) -> &[u16] {
        &self.den[..self.rd.n_pos()]
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = [0; MAX_ROOTS];
            return;
        }
        for k in 0..self.rd.n_pos() {
            if self.den[k] == 0 {
                continue;
            }
            let l = root_form::<F>(self.rd, k);
            while self.den[k] > 0 {
                match self.num.div_linear(&l) {
                    Some(q) => {
                        self.num = q;
                        self.den[k] -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.iter().all(|&e| e == 0) && self.num.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_scalar(&self) -> Option<F> {
        if self.den.iter().all(|&e| e == 0) {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn scale(&self, c: F) -> Self {
        if c.is_zero() {
            return Self::zero(self.rd);
        }
        RootFraction { rd: self.rd, num: self.num.scale(c), den: self.den }
    }

    fn mul_root_pow_mut(&mut self, beta: usize, k: i64) {
        if self.num.is_zero() || k == 0 {
            return;
        }
        if k < 0 {
            self.den[beta] += (-k) as u16;
            // only the new factor can cancel
            let l = root_form::<F>(self.rd, beta);
            while self.den[beta] > 0 {
                match self.num.div_linear(&l) {
                    Some(q) => {
                        self.num = q;
                        self.den[beta] -= 1;
                    }
                    None => break,
                }
            }
        } else {
            let cancel = (self.den[beta] as i64).min(k);
            self.den[beta] -= cancel as u16;
            let rest = k - cancel;
            if rest > 0 {
                self.num = &self.num * &root_poly::<F>(self.rd, beta).pow(rest as u32);
            }
        }
    }

    /// Multiply by `beta^k`.
    pub fn mul_root_pow(&self, beta: usize, k: i64) -> Self {
        let mut f = self.clone();
        f.mul_root_pow_mut(beta, k);
        f
    }

    /// Exponent of `beta` in `self`; `None` for zero.
    pub fn beta_valuation(&self, beta: usize) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let l = root_form::<F>(self.rd, beta);
        let mut v = 0i64;
        let mut n = self.num.clone();
        while let Some(q) = n.div_linear(&l) {
            n = q;
            v += 1;
        }
        Some(v - self.den[beta] as i64)
    }

    /// Membership in `S^β` (`Some(beta)`) or in `S^∅` (`None`).
    pub fn is_in_ring(&self, tag: Option<usize>) -> bool {
        match tag {
            None => true,
            Some(b) => self.den[b] == 0,
        }
    }

    /// Factor the numerator as a scalar times a product of positive roots.
    fn numerator_root_factors(&self) -> Option<(F, [u16; MAX_ROOTS])> {
        let mut n = self.num.clone();
        let mut ex = [0u16; MAX_ROOTS];
        if n.is_zero() {
            return None;
        }
        loop {
            if let Some(c) = n.as_constant() {
                return Some((c, ex));
            }
            let mut progressed = false;
            for k in 0..self.rd.n_pos() {
                if let Some(q) = n.div_linear(&root_form::<F>(self.rd, k)) {
                    n = q;
                    ex[k] += 1;
                    progressed = true;
                    break;
                }
            }
            if !progressed {
                return None;
            }
        }
    }

    pub fn is_unit(&self, tag: Option<usize>) -> bool {
        match self.numerator_root_factors() {
            None => false,
            Some((_, ex)) => match tag {
                None => true,
                Some(b) => ex[b] == 0 && self.den[b] == 0,
            },
        }
    }

    /// Inverse of a unit of `S^∅`.
    pub fn inverse_unit(&self) -> Option<Self> {
        let (c, ex) = self.numerator_root_factors()?;
        let mut num = Poly::constant(c.inv()?);
        for k in 0..self.rd.n_pos() {
            if self.den[k] > 0 {
                num = &num * &root_poly::<F>(self.rd, k).pow(self.den[k] as u32);
            }
        }
        Some(RootFraction { rd: self.rd, num, den: ex })
    }

    /// Exact quotient in `S^∅`, if it exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.rd));
        }
        // strip root factors off the divisor's numerator; they become denominators
        let mut q = d.num.clone();
        let mut ex = [0u16; MAX_ROOTS];
        for k in 0..self.rd.n_pos() {
            let l = root_form::<F>(self.rd, k);
            while let Some(r) = q.div_linear(&l) {
                q = r;
                ex[k] += 1;
            }
        }
        let num = self.num.div_exact(&q)?;
        let mut den = self.den;
        for k in 0..MAX_ROOTS {
            den[k] += ex[k];
        }
        let mut f = RootFraction { rd: self.rd, num, den };
        f.normalize();
        for k in 0..self.rd.n_pos() {
            f.mul_root_pow_mut(k, d.den[k] as i64);
        }
        Some(f)
    }

    /// Degree, if homogeneous (`deg a_i = 2`).
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let d: i64 = self.den.iter().map(|&e| e as i64).sum();
        self.num.degree().map(|n| n - 2 * d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// `c` and `k` with `self = c beta^k`, if it has that shape.
    pub fn as_root_monomial(&self, beta: usize) -> Option<(F, i64)> {
        if self.is_zero() {
            return Some((F::zero(), 0));
        }
        for k in 0..self.rd.n_pos() {
            if k != beta && self.den[k] != 0 {
                return None;
            }
        }
        let l = root_form::<F>(self.rd, beta);
        let mut n = self.num.clone();
        let mut v = 0i64;
        loop {
            if let Some(c) = n.as_constant() {
                return Some((c, v - self.den[beta] as i64));
            }
            n = n.div_linear(&l)?;
            v += 1;
        }
    }

    /// Twist by `w`: every variable `X` is replaced by `w^{-1}(X)`.
    pub fn twist(&self, w: WeylElt) -> Self {
        if w == WeylElt::E || self.is_zero() {
            return self.clone();
        }
        let rd = self.rd;
        let wi = rd.inverse(w);
        let m = rd.matrix(wi);
        // image of a_i in root coordinates is column i of the matrix
        let subs: Vec<Poly<F>> =
            (0..rd.rank).map(|i| Poly::linear(&[m[0][i], m[1][i]][..rd.rank])).chain(std::iter::repeat(Poly::zero())).take(2).collect();
        let mut num = self.num.substitute(&subs);
        let mut den = [0u16; MAX_ROOTS];
        let mut sign_flips = 0u32;
        for k in 0..rd.n_pos() {
            if self.den[k] == 0 {
                continue;
            }
            let img = rd.weyl_act(wi, Root::pos(k));
            den[img.idx] += self.den[k];
            if img.neg {
                sign_flips += self.den[k] as u32;
            }
        }
        if sign_flips % 2 == 1 {
            num = -&num;
        }
        let mut f = RootFraction { rd, num, den };
        f.normalize();
        f
    }

    /// Text form `(<poly>)/(<roots>)`, or just the polynomial when there is
    /// no denominator.
    pub fn render(&self) -> String {
        let dens: Vec<String> = (0..self.rd.n_pos())
            .filter(|&k| self.den[k] > 0)
            .map(|k| {
                let p = root_poly::<F>(self.rd, k).render();
                let base = if p.contains(' ') { format!("({p})") } else { p };
                if self.den[k] == 1 {
                    base
                } else {
                    format!("{base}^{}", self.den[k])
                }
            })
            .collect();
        if dens.is_empty() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), dens.join("*"))
        }
    }

    pub fn parse(rd: &'static RootDatum, s: &str) -> Result<Self> {
        crate::fracring::parse::parse_fraction(rd, s)
    }
}

impl<F: Field> fmt::Display for RootFraction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<F: Field> Add for &RootFraction<F> {
    type Output = RootFraction<F>;
    fn add(self, rhs: &RootFraction<F>) -> RootFraction<F> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let mut f = RootFraction { rd: self.rd, num: &self.num + &rhs.num, den: self.den };
            f.normalize();
            return f;
        }
        let mut den = [0u16; MAX_ROOTS];
        let mut a = self.num.clone();
        let mut b = rhs.num.clone();
        for k in 0..self.rd.n_pos() {
            den[k] = self.den[k].max(rhs.den[k]);
            if den[k] > self.den[k] {
                a = &a * &root_poly::<F>(self.rd, k).pow((den[k] - self.den[k]) as u32);
            }
            if den[k] > rhs.den[k] {
                b = &b * &root_poly::<F>(self.rd, k).pow((den[k] - rhs.den[k]) as u32);
            }
        }
        let mut f = RootFraction { rd: self.rd, num: &a + &b, den };
        f.normalize();
        f
    }
}

impl<F: Field> Neg for &RootFraction<F> {
    type Output = RootFraction<F>;
    fn neg(self) -> RootFraction<F> {
        RootFraction { rd: self.rd, num: -&self.num, den: self.den }
    }
}

impl<F: Field> Sub for &RootFraction<F> {
    type Output = RootFraction<F>;
    fn sub(self, rhs: &RootFraction<F>) -> RootFraction<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &RootFraction<F> {
    type Output = RootFraction<F>;
    fn mul(self, rhs: &RootFraction<F>) -> RootFraction<F> {
        if self.is_zero() || rhs.is_zero() {
            return RootFraction::zero(self.rd);
        }
        if let Some(c) = self.as_scalar() {
            return rhs.scale(c);
        }
        if let Some(c) = rhs.as_scalar() {
            return self.scale(c);
        }
        let mut den = [0u16; MAX_ROOTS];
        let mut any_den = false;
        for k in 0..MAX_ROOTS {
            den[k] = self.den[k] + rhs.den[k];
            any_den |= den[k] > 0;
        }
        let mut f = RootFraction { rd: self.rd, num: &self.num * &rhs.num, den };
        if any_den {
            f.normalize();
        }
        f
    }
}

impl<F: Field> RootFraction<F> {
    pub fn add(&self, o: &Self) -> Self {
        self + o
    }
    pub fn mul(&self, o: &Self) -> Self {
        self * o
    }
    pub fn require_same(&self, o: &Self) -> Result<()> {
        if std::ptr::eq(self.rd, o.rd) {
            Ok(())
        } else {
            Err(AjsError::Dimension("fractions over different root data".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};
    use crate::rootsys::RootType;

    type RF = RootFraction<Q>;

    fn a2() -> &'static RootDatum {
        RootDatum::get(RootType::A2)
    }

    fn r(i: usize) -> RF {
        RF::root(a2(), Root::pos(i))
    }

    #[test]
    fn cancellation() {
        let rd = a2();
        let inv = RF::root_power(rd, 0, Q::from_i64(1), -1);
        assert!((&r(0) * &inv).is_one());
        // (a1+a2)/a1 + (-a2)/a1 = 1
        let x = &r(2) * &inv;
        let y = &(-&r(1)) * &inv;
        assert!((&x + &y).is_one());
    }

    #[test]
    fn valuations() {
        let rd = a2();
        assert_eq!(r(1).beta_valuation(1), Some(1));
        assert_eq!(RF::root_power(rd, 1, Q::from_i64(1), -1).beta_valuation(1), Some(-1));
        let f = &(&r(0) * &r(2)) * &RF::root_power(rd, 1, Q::from_i64(1), -1);
        assert_eq!(f.beta_valuation(2), Some(1));
        assert_eq!(f.beta_valuation(1), Some(-1));
        assert!(f.is_in_ring(Some(0)) && !f.is_in_ring(Some(1)));
    }

    #[test]
    fn units() {
        let rd = a2();
        assert!((&r(0) * &r(1)).is_unit(None));
        let g = RF::from_poly(rd, Poly::linear(&[1, 2]));
        assert!(!g.is_unit(None));
        assert!(r(0).is_unit(Some(1)) && !r(0).is_unit(Some(0)));
        let u = &(&r(0) * &r(0)) * &RF::root_power(rd, 2, Q::from_i64(3), -1);
        assert!((&u * &u.inverse_unit().unwrap()).is_one());
    }

    #[test]
    fn twists() {
        let rd = a2();
        let s1 = rd.simple_reflection(0);
        assert_eq!(r(1).twist(s1), r(2));
        let a1 = RootDatum::get(RootType::A1);
        let w0 = a1.longest_element();
        assert_eq!(RF::root(a1, Root::pos(0)).twist(w0), RF::root(a1, Root { idx: 0, neg: true }));
        let f = &r(0) * &RF::root_power(rd, 2, Q::from_i64(1), -2);
        for w in rd.weyl_elements() {
            assert_eq!(f.twist(w).twist(rd.inverse(w)), f);
            assert_eq!(f.twist(w).degree(), f.degree());
        }
        assert_eq!(f.twist(WeylElt::E), f);
    }

    #[test]
    fn monomial_shape() {
        let rd = a2();
        let f = RF::root_power(rd, 2, Q::from_i64(-3), -2);
        assert_eq!(f.as_root_monomial(2), Some((Q::from_i64(-3), -2)));
        assert_eq!(f.as_root_monomial(1), None);
        assert_eq!(r(0).as_root_monomial(2), None);
        assert_eq!(f.degree(), Some(-4));
    }

    #[test]
    fn render_roundtrip() {
        let rd = a2();
        let f = &(&r(0) + &RF::from_i64(rd, 0)) * &RF::root_power(rd, 2, Q::new(1, 2), -2);
        let s = f.render();
        assert_eq!(s, "(1/2*a1)/((a1 + a2)^2)");
        assert_eq!(RF::parse(rd, &s).unwrap(), f);
    }

    #[test]
    fn prime_field() {
        let rd = RootDatum::get(RootType::B2);
        let f = RootFraction::<Fp<5>>::root(rd, Root::pos(3));
        assert!(f.is_unit(None));
        assert_eq!(f.beta_valuation(3), Some(1));
    }
}
