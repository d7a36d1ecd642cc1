//! Parser for state expressions such as `(1/2+3i)*|1,2,2) + |3) - 2i*|)`.
//!
//! ```text
//! vector := term (('+'|'-') term)*
//! term   := [coeff '*'] ket
//! coeff  := rational | rational 'i' | '(' rational ('+'|'-') rational 'i' ')'
//! ket    := '|' int (',' int)* ')' | '|)'
//! ```
//!
//! Whitespace is ignored. A leading sign on the first term and a sign on a
//! rational literal are also accepted.

use num::{BigInt, BigRational, Zero};

use super::state::{ModeIndex, Statistics};
use super::vector::FockVector;
use crate::error::{Error, Result};
use crate::scalar::ExactComplex;

/// One parsed term before canonicalization: coefficient and raw index list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTerm {
    pub coeff: ExactComplex,
    pub modes: Vec<ModeIndex>,
}

pub fn parse_terms(input: &str) -> Result<Vec<RawTerm>> {
    let mut p = Parser::new(input);
    let terms = p.vector()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected `{c}`")));
    }
    Ok(terms)
}

pub fn parse_vector(input: &str, stats: Statistics) -> Result<FockVector> {
    let mut v = FockVector::zero(stats);
    for t in parse_terms(input)? {
        v.push_raw(&t.modes, t.coeff);
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn location(&self) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.location();
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => Err(self.error(format!("expected `{c}`, found `{found}`"))),
                None => Err(self.error(format!("expected `{c}`, found end of input"))),
            }
        }
    }

    fn vector(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let mut t = self.term()?;
            if negate {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm> {
        match self.peek() {
            Some('|') => Ok(RawTerm {
                coeff: ExactComplex::one(),
                modes: self.ket()?,
            }),
            Some(_) => {
                let coeff = self.coeff()?;
                self.expect('*')?;
                Ok(RawTerm {
                    coeff,
                    modes: self.ket()?,
                })
            }
            None => Err(self.error("expected a term, found end of input")),
        }
    }

    fn coeff(&mut self) -> Result<ExactComplex> {
        if self.eat('(') {
            let re = self.rational()?;
            let negative = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else {
                return Err(self.error("expected `+` or `-` inside complex literal"));
            };
            let mut im = self.rational()?;
            self.expect('i')?;
            self.expect(')')?;
            if negative {
                im = -im;
            }
            return Ok(ExactComplex::new(re, im));
        }
        let q = self.rational()?;
        if self.eat('i') {
            Ok(ExactComplex::new(BigRational::zero(), q))
        } else {
            Ok(ExactComplex::from(q))
        }
    }

    fn rational(&mut self) -> Result<BigRational> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let num = self.integer()?;
        let q = if self.eat('/') {
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            BigRational::new(num, den)
        } else {
            BigRational::from_integer(num)
        };
        Ok(if negative { -q } else { q })
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.chars.get(self.pos) {
                Some(c) => self.error(format!("expected a number, found `{c}`")),
                None => self.error("expected a number, found end of input"),
            });
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> Result<BigInt> {
        let s = self.digits()?;
        Ok(s.parse().expect("digits parse as an integer"))
    }

    fn ket(&mut self) -> Result<Vec<ModeIndex>> {
        self.expect('|')?;
        let mut modes = Vec::new();
        if self.eat(')') {
            return Ok(modes);
        }
        loop {
            let start = self.pos;
            let s = self.digits()?;
            let id: u32 = s.parse().map_err(|_| {
                self.pos = start;
                self.error(format!("mode index `{s}` out of range"))
            })?;
            modes.push(ModeIndex(id));
            if !self.eat(',') {
                break;
            }
        }
        self.expect(')')?;
        Ok(modes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_reference_example() {
        let v = parse_vector("(1/2+3i)*|1,2,2) + |3)", Statistics::Boson).unwrap();
        let expected = &FockVector::basis_ids(&[1, 2, 2], Statistics::Boson)
            .scale(&ExactComplex::from_parts((1, 2), (3, 1)))
            + &FockVector::basis_ids(&[3], Statistics::Boson);
        assert_eq!(v, expected);
    }

    #[test]
    fn whitespace_vacuum_and_signs() {
        let v = parse_vector(" - 2i * | ) +\n -3/4*|0 , 5)", Statistics::Fermion).unwrap();
        let expected = &FockVector::vacuum(Statistics::Fermion).scale(&ExactComplex::i().scale(-2))
            + &FockVector::basis_ids(&[0, 5], Statistics::Fermion)
                .scale(&ExactComplex::from_ratio(-3, 4));
        assert_eq!(v, expected);
    }

    #[test]
    fn fermion_input_order_matters() {
        let v = parse_vector("|2,1)", Statistics::Fermion).unwrap();
        assert_eq!(
            v,
            FockVector::basis_ids(&[1, 2], Statistics::Fermion)
                .scale(&ExactComplex::from_integer(-1))
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse_terms("|1,2) + 3*|x)") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 12)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_terms("|1)\n+ (1+2)*|1)") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_terms("").is_err());
        assert!(parse_terms("1/0*|1)").is_err());
        assert!(parse_terms("|1) |2)").is_err());
        assert!(parse_terms("|99999999999)").is_err());
    }
}
