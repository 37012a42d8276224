//! Words over a single generator `A`, its inverse, and explicit elements of T.

use std::fmt;

use crate::elements::Element;
use crate::error::Result;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Token {
    A,
    AInv,
    /// An explicit element, expected to lie in T.
    T(Element),
}

impl fmt::Debug for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::A => f.write_str("A"),
            Token::AInv => f.write_str("A^-1"),
            Token::T(e) => write!(f, "T[{}]", e.to_line()),
        }
    }
}

/// A freely reduced product of tokens, read left to right (right action).
/// Adjacent `A A^-1` pairs cancel and adjacent T tokens are multiplied out.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    tokens: Vec<Token>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.tokens).finish()
    }
}

impl Word {
    pub fn new() -> Self {
        Word::default()
    }

    pub fn generator() -> Self {
        Word {
            tokens: vec![Token::A],
        }
    }

    pub fn generator_inverse() -> Self {
        Word {
            tokens: vec![Token::AInv],
        }
    }

    pub fn t(e: Element) -> Self {
        let mut w = Word::new();
        w.push(Token::T(e));
        w
    }

    /// Takes tokens verbatim, without reduction.
    pub fn from_tokens(tokens: Vec<Token>) -> Self {
        Word { tokens }
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Number of `A` and `A^-1` tokens.
    pub fn generator_count(&self) -> usize {
        self.tokens
            .iter()
            .filter(|t| !matches!(t, Token::T(_)))
            .count()
    }

    pub fn push(&mut self, tok: Token) {
        match (self.tokens.last(), &tok) {
            (_, Token::T(e)) if e.is_identity() => {}
            (Some(Token::A), Token::AInv) | (Some(Token::AInv), Token::A) => {
                self.tokens.pop();
            }
            (Some(Token::T(prev)), Token::T(e)) => match prev.compose(e) {
                Ok(prod) => {
                    self.tokens.pop();
                    if !prod.is_identity() {
                        self.tokens.push(Token::T(prod));
                    }
                }
                Err(_) => self.tokens.push(tok),
            },
            _ => self.tokens.push(tok),
        }
    }

    pub fn append(&mut self, other: &Word) {
        for t in &other.tokens {
            self.push(t.clone());
        }
    }

    pub fn then(mut self, other: &Word) -> Word {
        self.append(other);
        self
    }

    pub fn inverse(&self) -> Word {
        let mut w = Word::new();
        for t in self.tokens.iter().rev() {
            w.push(match t {
                Token::A => Token::AInv,
                Token::AInv => Token::A,
                Token::T(e) => Token::T(e.invert()),
            });
        }
        w
    }

    /// `by⁻¹ · self · by`.
    pub fn conjugated_by(&self, by: &Word) -> Word {
        by.inverse().then(self).then(by)
    }

    /// Conjugation by a single explicit element.
    pub fn conjugated_by_t(&self, t: &Element) -> Word {
        Word::t(t.invert()).then(self).then(&Word::t(t.clone()))
    }

    /// Replaces every `A` by `gen` and every `A^-1` by its inverse.
    pub fn substitute(&self, gen: &Word) -> Word {
        let inv = gen.inverse();
        let mut w = Word::new();
        for t in &self.tokens {
            match t {
                Token::A => w.append(gen),
                Token::AInv => w.append(&inv),
                Token::T(e) => w.push(Token::T(e.clone())),
            }
        }
        w
    }

    /// Multiplies the word out with `A` bound to `a`.
    pub fn evaluate(&self, a: &Element) -> Result<Element> {
        let a_inv = a.invert();
        let mut acc = Element::identity();
        for t in &self.tokens {
            let next = match t {
                Token::A => a,
                Token::AInv => &a_inv,
                Token::T(e) => e,
            };
            acc = acc.compose(next)?;
        }
        Ok(acc)
    }

    pub fn t_elements(&self) -> impl Iterator<Item = &Element> {
        self.tokens.iter().filter_map(|t| match t {
            Token::T(e) => Some(e),
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::addresses::Address;

    fn sw(x: &str, y: &str) -> Element {
        Element::swap(&x.parse::<Address>().unwrap(), &y.parse().unwrap()).unwrap()
    }

    #[test]
    fn free_reduction() {
        let mut w = Word::generator();
        w.push(Token::AInv);
        assert!(w.is_empty());
        let r = sw("0", "1");
        let w = Word::t(r.clone()).then(&Word::t(r.clone()));
        assert!(w.is_empty());
        assert!(Word::t(Element::identity()).is_empty());
    }

    #[test]
    fn inverse_and_substitution() {
        let a = sw("00", "10");
        let t = sw("0", "1");
        let w = Word::generator()
            .then(&Word::t(t.clone()))
            .then(&Word::generator());
        let prod = w.evaluate(&a).unwrap();
        assert!(prod
            .compose(&w.inverse().evaluate(&a).unwrap())
            .unwrap()
            .is_identity());
        // substituting a word for A evaluates like substituting its value
        let gen = Word::t(t.clone()).then(&Word::generator());
        let direct = w.evaluate(&gen.evaluate(&a).unwrap()).unwrap();
        assert_eq!(w.substitute(&gen).evaluate(&a).unwrap(), direct);
        let c = Word::generator().conjugated_by_t(&t);
        assert_eq!(c.evaluate(&a).unwrap(), a.conjugate(&t).unwrap());
    }
}
