//! Text syntax for Picard elements.
//!
//! ```text
//! element := term ('*' term)*
//! term    := 'S' ('^' int)? | 'i' '{' int (',' int)* '}' | 'w' | 'e'
//! ```
//!
//! Whitespace is ignored. Terms compose as functors, so the leftmost is
//! applied last: `i{0} * S` means `ι_0 ∘ S`.

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::picard::PicElement;

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, pos: 0, text }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// Byte offset of the current token, or the end of the text.
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.text.len(), |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        let mut s = String::new();
        if let Some(c @ ('-' | '+')) = self.peek() {
            s.push(c);
            self.pos += 1;
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer")
        })
    }

    fn term(&mut self) -> Result<PicElement> {
        match self.peek() {
            Some('S') => {
                self.pos += 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    Ok(PicElement::shift(self.int()?))
                } else {
                    Ok(PicElement::shift(1))
                }
            }
            Some('i') => {
                self.pos += 1;
                self.expect('{')?;
                let mut set = FinSet::new();
                loop {
                    set.toggle(self.int()?);
                    match self.peek() {
                        Some(',') => self.pos += 1,
                        _ => break,
                    }
                }
                self.expect('}')?;
                // ι_J ι_K = ι_{J⊕K}, so repeats cancel
                Ok(PicElement::iota(set))
            }
            Some('w') => {
                self.pos += 1;
                Ok(PicElement::omega())
            }
            Some('e') => {
                self.pos += 1;
                Ok(PicElement::identity())
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'; expected S, i{{..}}, w or e"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn element(&mut self) -> Result<PicElement> {
        if self.peek().is_none() {
            return Err(self.error("empty expression"));
        }
        let mut acc = self.term()?;
        while self.peek().is_some() {
            self.expect('*')?;
            acc = acc.compose(&self.term()?);
        }
        Ok(acc)
    }
}

/// Parses and normalizes an expression.
pub fn parse_expression(text: &str) -> Result<PicElement> {
    Parser::new(text).element()
}

impl std::str::FromStr for PicElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<PicElement> {
        parse_expression(s)
    }
}
