//! Sparse polynomials in the simple-root variables `a1, a2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;

/// Exponents of `a1, a2`.
pub type Mono = [u32; 2];

/// Terms sorted by monomial, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<F: Field> {
    terms: Vec<(Mono, F)>,
}

fn mono_mul(a: Mono, b: Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1]]
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { terms: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, [0, 0])
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn monomial(c: F, m: Mono) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = [0, 0];
        m[i] = 1;
        Self::monomial(F::one(), m)
    }

    /// The linear form `sum c_i a_i`.
    pub fn linear(c: &[i64]) -> Self {
        Self::from_terms(c.iter().enumerate().map(|(i, &ci)| {
            let mut m = [0, 0];
            m[i] = 1;
            (m, F::from_i64(ci))
        }))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, F)>) -> Self {
        let mut terms: Vec<(Mono, F)> = it.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mono, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = *lc + c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, F)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.as_slice() {
            [] => Some(F::zero()),
            [([0, 0], c)] => Some(*c),
            _ => None,
        }
    }

    /// Leading coefficient (largest monomial in the internal order).
    pub fn lead_coeff(&self) -> F {
        self.terms.last().map(|t| t.1).unwrap_or_else(F::zero)
    }

    /// Degree with the convention `deg a_i = 2`, if homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut d = None;
        for (m, _) in &self.terms {
            let e = 2 * (m[0] + m[1]) as i64;
            match d {
                None => d = Some(e),
                Some(x) if x != e => return None,
                _ => {}
            }
        }
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn scale(&self, c: F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, *x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by the linear form `l = b0 a1 + b1 a2`; `None` if the
    /// remainder is nonzero.
    pub fn div_linear(&self, l: &[F; 2]) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if l[1].is_zero() {
            // divide by b0 * a1
            let inv = l[0].inv().expect("nonzero linear form");
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if m[0] == 0 {
                    return None;
                }
                out.push(([m[0] - 1, m[1]], *c * inv));
            }
            return Some(Poly { terms: out });
        }
        // main variable a2: eliminate from the top a2-degree down
        let inv = l[1].inv().unwrap();
        let mut rem: std::collections::BTreeMap<Mono, F> = self.terms.iter().map(|(m, c)| (*m, *c)).collect();
        let mut quot = Vec::new();
        loop {
            // term with largest a2 exponent that is at least one
            let top = rem.iter().filter(|(m, _)| m[1] >= 1).max_by_key(|(m, _)| (m[1], m[0])).map(|(m, c)| (*m, *c));
            let Some((m, c)) = top else { break };
            let q = c * inv;
            let qm = [m[0], m[1] - 1];
            quot.push((qm, q));
            // subtract q * qm * (b0 a1 + b1 a2)
            for (k, b) in l.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut t = qm;
                t[k] += 1;
                let e = rem.entry(t).or_insert_with(F::zero);
                *e = *e - q * *b;
                if e.is_zero() {
                    rem.remove(&t);
                }
            }
        }
        if rem.is_empty() {
            Some(Self::from_terms(quot))
        } else {
            None
        }
    }

    /// Exact division by an arbitrary polynomial; `None` if it does not divide.
    /// One divisor is a Gröbner basis of its ideal, so the remainder of
    /// lex-leading-term division is zero exactly when it divides.
    pub fn div_exact(&self, d: &Poly<F>) -> Option<Self> {
        let &(lm, lc) = d.terms.last()?;
        let inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = vec![];
        while let Some(&(m, c)) = rem.terms.last() {
            if m[0] < lm[0] || m[1] < lm[1] {
                return None;
            }
            let qm = [m[0] - lm[0], m[1] - lm[1]];
            let qc = c * inv;
            quot.push((qm, qc));
            rem = &rem - &(&Poly::monomial(qc, qm) * d);
        }
        Some(Self::from_terms(quot))
    }

    /// Substitute linear forms for the variables: `a_i -> subs[i]`.
    pub fn substitute(&self, subs: &[Poly<F>]) -> Self {
        let mut acc = Self::zero();
        let mut cache: Vec<Vec<Poly<F>>> = subs.iter().map(|p| vec![Self::one(), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Self::constant(*c);
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap() * &subs[i];
                    powers.push(next);
                }
                t = &t * &powers[e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn eval(&self, x: &[F; 2]) -> F {
        self.terms.iter().fold(F::zero(), |acc, (m, c)| acc + *c * x[0].pow(m[0]) * x[1].pow(m[1]))
    }

    /// Render with variables `a1, a2`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_display();
            let abs = if neg { -*c } else { *c };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = vec![];
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("a{}", i + 1)),
                    e => factors.push(format!("a{}^{e}", i + 1)),
                }
            }
            if factors.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1 + b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -*c)).collect() }
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms[0];
            // a monomial factor keeps the order
            return Poly { terms: rhs.terms.iter().map(|(n, d)| (mono_mul(m, *n), c * *d)).collect() };
        }
        Poly::from_terms(
            self.terms.iter().flat_map(|(m, c)| rhs.terms.iter().map(move |(n, d)| (mono_mul(*m, *n), *c * *d))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    type P = Poly<Q>;

    #[test]
    fn arithmetic_and_division() {
        let x = P::var(0);
        let y = P::var(1);
        let s = &x + &y;
        let prod = &(&s * &x) * &y;
        let l = [Q::from_i64(1), Q::from_i64(1)];
        let q = prod.div_linear(&l).unwrap();
        assert_eq!(q, &x * &y);
        assert!(x.div_linear(&l).is_none());
        assert_eq!(prod.div_linear(&[Q::from_i64(1), Q::from_i64(0)]).unwrap(), &s * &y);
        let d = &s - &s;
        assert!(d.is_zero());
        assert_eq!(prod.degree(), Some(6));
        assert_eq!(prod.render(), "a1^2*a2 + a1*a2^2");
        let g = &(&x + &y.scale(Q::from_i64(2))) * &(&x - &y);
        assert_eq!(g.div_exact(&(&x - &y)).unwrap(), &x + &y.scale(Q::from_i64(2)));
        assert!(g.div_exact(&(&x + &y)).is_none());
    }

    #[test]
    fn substitution() {
        let x = P::var(0);
        let y = P::var(1);
        // a1 -> a1 + a2, a2 -> -a2
        let subs = [&x + &y, -&y];
        let f = &x * &y;
        assert_eq!(f.substitute(&subs), &(&(&x + &y) * &y) * &P::constant(Q::from_i64(-1)));
    }

    #[test]
    fn prime_field_division() {
        type P7 = Poly<Fp<7>>;
        let x = P7::var(0);
        let y = P7::var(1);
        let f = &(&x + &y.scale(Fp::new(3))) * &x;
        assert_eq!(f.div_linear(&[Fp::new(1), Fp::new(3)]).unwrap(), x);
    }
}
