//! Expression grammar for Lie elements.
//!
//! ```text
//! sum   := ['-'] term (('+' | '-') term)*  |  '0'
//! term  := INT '*' term | atom
//! atom  := IDENT | 'u(' INT ',' INT ')' | '[' term (',' term)+ ']'
//! ```
//!
//! `[e1, e2, ..., ek]` is left-normed. Offsets in errors count characters.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lie::{normal_form_with, Alphabet, BracketCache, LieElement, LieTree};
use crate::torsion::AGenerator;

/// A parsed sum of scaled bracket trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    pub terms: Vec<LieTree>,
}

impl Expression {
    pub fn evaluate(&self, cache: &mut BracketCache<BigInt>) -> LieElement<BigInt> {
        self.terms.iter().fold(LieElement::zero(), |acc, t| {
            acc + normal_form_with(cache, t)
        })
    }

    /// The single tree of a one-term expression.
    pub fn into_tree(mut self) -> Option<LieTree> {
        (self.terms.len() == 1).then(|| self.terms.pop().unwrap())
    }
}

/// Parses `text` over `alphabet`; `u(s,t)` is looked up under that name.
pub fn parse_expression(text: &str, alphabet: &Alphabet) -> Result<Expression> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        alphabet,
    };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and reduces to the Lyndon basis.
pub fn parse_element(text: &str, alphabet: &Alphabet) -> Result<LieElement<BigInt>> {
    Ok(parse_expression(text, alphabet)?.evaluate(&mut BracketCache::new()))
}

/// Printed form accepted back by [`parse_expression`].
pub fn print_element(e: &LieElement<BigInt>, alphabet: &Alphabet) -> String {
    e.format(alphabet)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
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
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn sum(&mut self) -> Result<Expression> {
        self.skip_ws();
        let start = self.pos;
        if self.integer()?.is_some_and(|n| n == BigInt::from(0)) {
            self.skip_ws();
            if self.pos == self.chars.len() {
                return Ok(Expression { terms: Vec::new() });
            }
        }
        self.pos = start;
        let mut terms = Vec::new();
        let mut negate = self.eat('-');
        loop {
            let t = self.term()?;
            terms.push(if negate { LieTree::scaled(-1, t) } else { t });
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        Ok(Expression { terms })
    }

    fn integer(&mut self) -> Result<Option<BigInt>> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(Some(digits.parse().expect("ascii digits")))
    }

    fn small_integer(&mut self) -> Result<u32> {
        let at = self.pos;
        match self.integer()? {
            Some(n) => u32::try_from(n).map_err(|_| Error::Parse {
                offset: at,
                message: "index too large".into(),
            }),
            None => Err(self.error("expected a non-negative integer")),
        }
    }

    fn term(&mut self) -> Result<LieTree> {
        self.skip_ws();
        if let Some(n) = self.integer()? {
            self.expect('*')?;
            let inner = self.term()?;
            return Ok(LieTree::scaled(n, inner));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<LieTree> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let mut entries = vec![self.term()?];
                while self.eat(',') {
                    entries.push(self.term()?);
                }
                self.expect(']')?;
                if entries.len() < 2 {
                    return Err(Error::Parse {
                        offset: start,
                        message: "a bracket needs at least two entries".into(),
                    });
                }
                let mut it = entries.into_iter();
                let first = it.next().unwrap();
                Ok(it.fold(first, LieTree::bracket))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.skip_ws();
                let name = if name == "u" && self.peek() == Some('(') {
                    self.pos += 1;
                    let s = self.small_integer()?;
                    self.expect(',')?;
                    let t = self.small_integer()?;
                    self.expect(')')?;
                    AGenerator::new(s, t).name()
                } else {
                    name
                };
                self.alphabet
                    .letter(&name)
                    .map(LieTree::Gen)
                    .ok_or(Error::Parse {
                        offset: start,
                        message: format!("unknown generator `{name}`"),
                    })
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Letter;
    use crate::torsion::a_alphabet;

    fn offset(r: Result<Expression>) -> usize {
        match r {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn left_normed_brackets() {
        let a = Alphabet::standard(2);
        let (x, y) = (LieTree::Gen(Letter(0)), LieTree::Gen(Letter(1)));
        let e = parse_expression("[y,x,x]", &a)
            .unwrap()
            .into_tree()
            .unwrap();
        assert_eq!(
            e,
            LieTree::bracket(LieTree::bracket(y.clone(), x.clone()), x.clone())
        );
        let e = parse_expression(" 3 * [x, [x,y]] ", &a)
            .unwrap()
            .into_tree()
            .unwrap();
        assert_eq!(
            e,
            LieTree::scaled(3, LieTree::bracket(x.clone(), LieTree::bracket(x, y)))
        );
    }

    #[test]
    fn a_generators() {
        let a = a_alphabet(4);
        let e = parse_expression("u(1,0)", &a).unwrap().into_tree().unwrap();
        assert_eq!(e, LieTree::Gen(AGenerator::new(1, 0).letter()));
        assert_eq!(offset(parse_expression("u(1,)", &a)), 4);
        assert_eq!(offset(parse_expression("u(5,5)", &a)), 0);
    }

    #[test]
    fn errors_carry_offsets() {
        let a = Alphabet::standard(2);
        assert_eq!(offset(parse_expression("[y,x", &a)), 4);
        assert_eq!(offset(parse_expression("[y,q]", &a)), 3);
        assert_eq!(offset(parse_expression("[y]", &a)), 0);
        assert_eq!(offset(parse_expression("x y", &a)), 2);
        assert_eq!(offset(parse_expression("", &a)), 0);
    }

    #[test]
    fn sums_and_round_trip() {
        let a = Alphabet::standard(3);
        let e = parse_element("[x,y,z] - 2*[z,[x,y]] + [y,x,z]", &a).unwrap();
        assert_eq!(parse_element(&print_element(&e, &a), &a).unwrap(), e);
        assert!(parse_element("[x,x]", &a).unwrap().is_zero());
        assert_eq!(print_element(&LieElement::zero(), &a), "0");
        assert!(parse_element("0", &a).unwrap().is_zero());
    }
}
