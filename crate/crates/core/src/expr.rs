//! Text syntax for words and linear combinations.
//!
//! Words print as `[a,b,c]`, the empty word as `[]`, combinations as
//! `3/2*[a,b] + [c] - [a]`. Printing is canonical (term order, reduced
//! coefficients), so `print ∘ parse` normalizes and `parse ∘ print` is
//! the identity on canonical output.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::vspec::{is_label_char, VElem, VLabel, VSpec};
use crate::word::Word;

struct Cursor<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            offset: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => Err(self.err(format!(
                "expected `{}`, found `{}`",
                c as char, got as char
            ))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.input.len()
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).expect("ascii");
        text.parse::<BigInt>()
            .map_err(|e| self.err(format!("bad integer: {e}")))
    }

    /// `digits [ '/' digits ]`; the sign comes from the term separator.
    fn rational(&mut self) -> Result<Scalar> {
        let numer = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let denom = self.digits()?;
            if denom == BigInt::from(0) {
                return Err(Error::Syntax {
                    offset: at,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Scalar::new(numer, denom))
        } else {
            Ok(Scalar::from_integer(numer))
        }
    }

    fn label(&mut self, spec: &VSpec) -> Result<VLabel> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if is_label_char(c as char)) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected label"));
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).expect("ascii");
        spec.normalize_label(text).map_err(|e| Error::Syntax {
            offset: start,
            msg: e.to_string(),
        })
    }

    fn word(&mut self, spec: &VSpec) -> Result<Word> {
        self.expect(b'[')?;
        self.skip_ws();
        let mut letters = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(Word::empty());
        }
        loop {
            letters.push(self.label(spec)?);
            self.skip_ws();
            match self.bump() {
                Some(b']') => break,
                Some(b',') => self.skip_ws(),
                Some(c) => {
                    self.pos -= 1;
                    return Err(self.err(format!("expected `,` or `]`, found `{}`", c as char)));
                }
                None => {
                    return Err(self.err("unexpected end of input"));
                }
            }
        }
        if letters.iter().any(VLabel::is_unit) {
            return Err(self.err("the adjoined unit cannot be used as a letter"));
        }
        Word::new(letters).map_err(|e| self.err(e.to_string()))
    }
}

fn parse_lincomb<T: Ord + Clone>(
    input: &str,
    mut atom: impl FnMut(&mut Cursor) -> Result<T>,
) -> Result<LinComb<T>> {
    let mut cur = Cursor::new(input);
    let mut out = LinComb::zero();
    cur.skip_ws();
    if cur.at_end() {
        return Err(cur.err("empty expression"));
    }
    let mut sign = Scalar::from_integer(1.into());
    if cur.peek() == Some(b'-') {
        cur.pos += 1;
        sign = -sign;
        cur.skip_ws();
    } else if cur.peek() == Some(b'+') {
        cur.pos += 1;
        cur.skip_ws();
    }
    loop {
        // term := [rational '*'] atom
        let coeff = if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            let c = cur.rational()?;
            cur.skip_ws();
            cur.expect(b'*')?;
            cur.skip_ws();
            c
        } else {
            Scalar::from_integer(1.into())
        };
        let t = atom(&mut cur)?;
        out.insert(t, sign.clone() * coeff);
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                sign = Scalar::from_integer(1.into());
                cur.skip_ws();
            }
            Some(b'-') => {
                cur.pos += 1;
                sign = Scalar::from_integer((-1).into());
                cur.skip_ws();
            }
            Some(c) => {
                return Err(cur.err(format!("expected `+`, `-` or end, found `{}`", c as char)))
            }
        }
    }
    Ok(out)
}

/// Parses a linear combination of words, e.g. `3/2*[a,b] + [c] - [a]`.
pub fn parse_word_lincomb(input: &str, spec: &VSpec) -> Result<LinComb<Word>> {
    parse_lincomb(input, |cur| cur.word(spec))
}

/// Parses a single word, e.g. `[a,b]`.
pub fn parse_word(input: &str, spec: &VSpec) -> Result<Word> {
    let mut cur = Cursor::new(input);
    cur.skip_ws();
    let w = cur.word(spec)?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(cur.err("trailing input after word"));
    }
    Ok(w)
}

/// Parses a combination of bare labels, e.g. `v1 + 1/2*v2` (used for
/// graph decorations, which are expanded by multilinearity).
pub fn parse_label_lincomb(input: &str, spec: &VSpec) -> Result<VElem> {
    let lc = parse_lincomb(input, |cur| cur.label(spec))?;
    if lc.terms().any(VLabel::is_unit) {
        return Err(Error::UnitLetter);
    }
    Ok(lc)
}
