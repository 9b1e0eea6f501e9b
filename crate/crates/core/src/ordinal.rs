//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a strictly decreasing sum `ω^e₁·c₁ + … + ω^eₖ·cₖ` whose exponents are
//! themselves ordinals. The representation is canonical, so structural equality is ordinal
//! equality and the derived `Hash` is consistent with it.
//!
//! Text grammar (whitespace is ignored):
//!
//! ```text
//! ordinal := "0" | term ("+" term)*
//! term    := nat | "w" ("^" exp)? ("*" nat)?
//! exp     := nat | "w" | "(" ordinal ")"
//! ```
//!
//! Canonical output omits `^1` and `*1` and parenthesizes every non-finite exponent,
//! e.g. `w^(w)+w^2*3+1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("not in Cantor normal form at position {pos}: {msg}")]
    Normalization { pos: usize, msg: String },
}

/// One CNF summand `ω^exp · coeff`, `coeff ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exp: Ordinal,
    coeff: u64,
}

impl Term {
    pub fn exp(&self) -> &Ordinal {
        &self.exp
    }

    pub fn coeff(&self) -> u64 {
        self.coeff
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    // exponents strictly decreasing, coefficients nonzero
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::finite(1)
    }

    pub fn finite(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    exp: Ordinal::zero(),
                    coeff: n,
                }],
            }
        }
    }

    pub fn omega() -> Self {
        Ordinal::monomial(Ordinal::one(), 1)
    }

    /// `ω^exp · coeff`. A zero coefficient yields 0.
    pub fn monomial(exp: Ordinal, coeff: u64) -> Self {
        if coeff == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term { exp, coeff }],
        }
    }

    /// `ω · n`, the form every ordinal below ω² other than the finite part takes.
    pub fn omega_times(n: u64) -> Self {
        Ordinal::monomial(Ordinal::one(), n)
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, rejecting anything that is not
    /// already in Cantor normal form.
    pub fn from_terms<I>(terms: I) -> Result<Self, OrdinalError>
    where
        I: IntoIterator<Item = (Ordinal, u64)>,
    {
        let mut out: Vec<Term> = Vec::new();
        for (i, (exp, coeff)) in terms.into_iter().enumerate() {
            if coeff == 0 {
                return Err(OrdinalError::Normalization {
                    pos: i,
                    msg: "zero coefficient".into(),
                });
            }
            if let Some(prev) = out.last() {
                if exp >= prev.exp {
                    return Err(OrdinalError::Normalization {
                        pos: i,
                        msg: "exponents must be strictly decreasing".into(),
                    });
                }
            }
            out.push(Term { exp, coeff });
        }
        Ok(Ordinal { terms: out })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    /// The value as a natural number, if it is below ω.
    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exp.is_zero() => Some(t.coeff),
            _ => None,
        }
    }

    /// Exponent of the leading term; `None` for 0.
    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exp)
    }

    /// Exponent of the last (smallest) term; `None` for 0.
    pub fn trailing_exponent(&self) -> Option<&Ordinal> {
        self.terms.last().map(|t| &t.exp)
    }

    /// Nonzero with no finite part. Zero is not a limit ordinal here.
    pub fn is_limit(&self) -> bool {
        match self.terms.last() {
            None => false,
            Some(t) => !t.exp.is_zero(),
        }
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some(t) if t.exp.is_zero())
    }

    /// Splits `self` as `limit_part + finite_part`, where `limit_part` is 0 or a limit.
    pub fn split(&self) -> (Ordinal, u64) {
        match self.terms.last() {
            Some(t) if t.exp.is_zero() => {
                let limit = Ordinal {
                    terms: self.terms[..self.terms.len() - 1].to_vec(),
                };
                (limit, t.coeff)
            }
            _ => (self.clone(), 0),
        }
    }

    pub fn successor(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// The predecessor of a successor ordinal.
    pub fn predecessor(&self) -> Option<Ordinal> {
        let (limit, k) = self.split();
        if k == 0 {
            None
        } else {
            Some(limit.add(&Ordinal::finite(k - 1)))
        }
    }

    /// Ordinal addition. Terms of `self` below the leading exponent of `rhs` are absorbed.
    ///
    /// Panics if a merged coefficient overflows `u64`.
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(head) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exp >= head.exp)
            .cloned()
            .collect();
        let mut rest = rhs.terms.iter();
        if let Some(last) = terms.last_mut() {
            if last.exp == head.exp {
                last.coeff = last
                    .coeff
                    .checked_add(head.coeff)
                    .expect("ordinal coefficient overflow");
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    /// Nesting depth of exponents: 0 for finite ordinals, 1 below ω^ω, and so on.
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|t| {
                if t.exp.is_zero() {
                    0
                } else {
                    1 + t.exp.height()
                }
            })
            .max()
            .unwrap_or(0)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::finite(n)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a.exp.cmp(&b.exp).then(a.coeff.cmp(&b.coeff));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Ordinal> for &'a Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &'a Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if t.exp.is_zero() {
                write!(f, "{}", t.coeff)?;
                continue;
            }
            f.write_str("w")?;
            match t.exp.as_finite() {
                Some(1) => {}
                Some(e) => write!(f, "^{e}")?,
                None => write!(f, "^({})", t.exp)?,
            }
            if t.coeff != 1 {
                write!(f, "*{}", t.coeff)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Ordinal {
    type Err = OrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Parses the text grammar. Input must already be in Cantor normal form.
pub fn parse(text: &str) -> Result<Ordinal, OrdinalError> {
    let mut p = Parser::new(text);
    let ord = p.ordinal()?;
    if let Some((pos, c)) = p.peek() {
        return Err(OrdinalError::Syntax {
            pos,
            msg: format!("unexpected '{c}'"),
        });
    }
    Ok(ord)
}

struct Parser {
    // non-whitespace chars with their byte offsets in the source
    toks: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            toks: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            at: 0,
            len: text.len(),
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.toks.get(self.at).copied()
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.len, |(p, _)| p)
    }

    fn eat(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some((_, d)) if d == c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn syntax<T>(&self, msg: &str) -> Result<T, OrdinalError> {
        Err(OrdinalError::Syntax {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn nat(&mut self) -> Result<u64, OrdinalError> {
        let start = self.pos();
        let mut digits = String::new();
        while let Some((_, c)) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return self.syntax("expected a natural number");
        }
        digits.parse().map_err(|_| OrdinalError::Syntax {
            pos: start,
            msg: "number too large".into(),
        })
    }

    fn ordinal(&mut self) -> Result<Ordinal, OrdinalError> {
        let mut terms: Vec<Term> = Vec::new();
        loop {
            let pos = self.pos();
            let bare = matches!(self.peek(), Some((_, c)) if c.is_ascii_digit());
            let (exp, coeff) = self.term()?;
            if coeff == 0 {
                // a lone "0" is the zero ordinal
                if bare && terms.is_empty() && !matches!(self.peek(), Some((_, '+'))) {
                    return Ok(Ordinal::zero());
                }
                return Err(OrdinalError::Normalization {
                    pos,
                    msg: "zero coefficient".into(),
                });
            }
            if let Some(prev) = terms.last() {
                if exp >= prev.exp {
                    return Err(OrdinalError::Normalization {
                        pos,
                        msg: "exponents must be strictly decreasing".into(),
                    });
                }
            }
            terms.push(Term { exp, coeff });
            if !self.eat('+') {
                break;
            }
        }
        Ok(Ordinal { terms })
    }

    fn term(&mut self) -> Result<(Ordinal, u64), OrdinalError> {
        match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => Ok((Ordinal::zero(), self.nat()?)),
            Some((_, 'w')) => {
                self.at += 1;
                let exp = if self.eat('^') {
                    self.exponent()?
                } else {
                    Ordinal::one()
                };
                let coeff = if self.eat('*') { self.nat()? } else { 1 };
                Ok((exp, coeff))
            }
            Some(_) => self.syntax("expected a number or 'w'"),
            None => self.syntax("unexpected end of input"),
        }
    }

    fn exponent(&mut self) -> Result<Ordinal, OrdinalError> {
        match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => Ok(Ordinal::finite(self.nat()?)),
            Some((_, 'w')) => {
                self.at += 1;
                Ok(Ordinal::omega())
            }
            Some((_, '(')) => {
                self.at += 1;
                let inner = self.ordinal()?;
                if !self.eat(')') {
                    return self.syntax("expected ')'");
                }
                Ok(inner)
            }
            _ => self.syntax("expected an exponent"),
        }
    }
}
