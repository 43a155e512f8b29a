//! Parser for the text form of fractions, e.g. `(a1^2 - 1/2*a1*a2)/(a2*(a1 + a2)^2)`.
//!
//! Division is only allowed by units of `S^∅`.

use crate::error::{AjsError, Result};
use crate::field::Field;
use crate::fracring::fraction::RootFraction;
use crate::fracring::poly::Poly;
use crate::rootsys::RootDatum;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Var(usize),
    Op(char),
}

fn lex(s: &str, rank: usize) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = vec![];
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(cs[st..i].iter().collect()));
        } else if c == 'a' {
            let st = i + 1;
            i += 1;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let idx: usize = cs[st..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| AjsError::Parse(format!("bad variable in `{s}`")))?;
            if idx == 0 || idx > rank {
                return Err(AjsError::Parse(format!("variable a{idx} out of range in `{s}`")));
            }
            out.push(Tok::Var(idx - 1));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(AjsError::Parse(format!("unexpected character `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    rd: &'static RootDatum,
    toks: &'a [Tok],
    pos: usize,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, msg: &str) -> AjsError {
        AjsError::Parse(format!("{msg} at token {}", self.pos))
    }

    fn expr(&mut self) -> Result<RootFraction<F>> {
        let mut neg = false;
        if let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            neg = *c == '-';
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let minus = *c == '-';
            self.pos += 1;
            let t = self.term()?;
            acc = if minus { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RootFraction<F>> {
        let mut acc = self.factor()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek() {
            let div = *c == '/';
            self.pos += 1;
            let f = self.factor()?;
            if div {
                let inv = f.inverse_unit().ok_or_else(|| self.err("division by a non-unit"))?;
                acc = &acc * &inv;
            } else {
                acc = &acc * &f;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RootFraction<F>> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.parse().map_err(|_| self.err("bad exponent"))?;
                    self.pos += 1;
                    let mut acc = RootFraction::one(self.rd);
                    for _ in 0..e {
                        acc = &acc * &base;
                    }
                    Ok(acc)
                }
                _ => Err(self.err("expected exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RootFraction<F>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let c = F::parse_coeff(&n).ok_or_else(|| self.err("bad number"))?;
                Ok(RootFraction::scalar(self.rd, c))
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(RootFraction::from_poly(self.rd, Poly::var(i)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            _ => Err(self.err("unexpected end or token")),
        }
    }
}

pub fn parse_fraction<F: Field>(rd: &'static RootDatum, s: &str) -> Result<RootFraction<F>> {
    let toks = lex(s, rd.rank)?;
    if toks.is_empty() {
        return Err(AjsError::Parse("empty expression".into()));
    }
    let mut p = Parser { rd, toks: &toks, pos: 0, _f: std::marker::PhantomData };
    let f = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::rootsys::{Root, RootType};

    #[test]
    fn parses() {
        let rd = RootDatum::get(RootType::A2);
        let f: RootFraction<Q> = parse_fraction(rd, "(a1+a2)/a1 - a2/a1").unwrap();
        assert!(f.is_one());
        let g: RootFraction<Q> = parse_fraction(rd, "-a1^2*a2").unwrap();
        let a1 = RootFraction::root(rd, Root::pos(0));
        assert_eq!(g, -&(&(&a1 * &a1) * &RootFraction::root(rd, Root::pos(1))));
        assert!(parse_fraction::<Q>(rd, "1/(a1+2*a2)").is_err());
        assert!(parse_fraction::<Q>(rd, "a3").is_err());
        assert!(parse_fraction::<Q>(rd, "(a1").is_err());
        assert!(parse_fraction::<Q>(rd, "a1 a2").is_err());
    }
}
