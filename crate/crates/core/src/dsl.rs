//! Step-set expression language.
//!
//! Whitespace-insensitive grammar:
//!
//! ```text
//! stepset := "unit(" N ")"                 classical columns {0,1}^N - {0}
//!          | "box(" a ".." b "," N ")"     {a..b}^N, 1 <= a <= b
//!          | "natpos(" N ")"               all non-zero vectors of naturals
//!          | "halfopen2"                   {(x,y) | x >= 1, y >= 0}
//!          | "prod(" base {"," base} ")"   cartesian product of base sets
//!          | "{" vector {"," vector} "}"   explicit step list
//! base    := "nat" | "natpos" | "{" int {"," int} "}"
//! vector  := "(" int {"," int} ")"
//! ```

use crate::error::{Error, Result};
use crate::step::{BaseSet, StepSet, StepVector};

/// Parses a step-set expression. The result is unvalidated; call
/// [`StepSet::validate`] to obtain a usable set.
pub fn parse_step_set(input: &str) -> Result<StepSet> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { src: compact.as_bytes(), pos: 0 };
    let set = p.step_set()?;
    p.expect_end()?;
    Ok(set)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        let rest = String::from_utf8_lossy(&self.src[self.pos.min(self.src.len())..]);
        let shown = if rest.len() > 16 { format!("{}...", &rest[..16]) } else { rest.into_owned() };
        Error::Parse(format!("{} at \"{}\" (offset {})", msg.into(), shown, self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn try_eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| self.err("number out of range"))
    }

    fn expect_end(&self) -> Result<()> {
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    fn step_set(&mut self) -> Result<StepSet> {
        if self.peek() == Some(b'{') {
            return self.explicit_set();
        }
        let name = self.ident();
        match name.as_str() {
            "unit" => {
                self.eat(b'(')?;
                let n = self.number()?;
                self.eat(b')')?;
                Ok(StepSet::UnitCube { dimension: n as usize })
            }
            "natpos" => {
                self.eat(b'(')?;
                let n = self.number()?;
                self.eat(b')')?;
                Ok(StepSet::AllPositiveWeak { dimension: n as usize })
            }
            "halfopen2" => Ok(StepSet::HalfOpen),
            "box" => {
                self.eat(b'(')?;
                let low = self.number()?;
                self.eat(b'.')?;
                self.eat(b'.')?;
                let high = self.number()?;
                self.eat(b',')?;
                let n = self.number()?;
                self.eat(b')')?;
                Ok(StepSet::Box { low, high, dimension: n as usize })
            }
            "prod" => {
                self.eat(b'(')?;
                let mut bases = vec![self.base_set()?];
                while self.try_eat(b',') {
                    bases.push(self.base_set()?);
                }
                self.eat(b')')?;
                Ok(StepSet::Product { bases })
            }
            "" => Err(self.err("expected a step-set expression")),
            other => Err(self.err(format!("unknown step-set keyword \"{}\"", other))),
        }
    }

    fn explicit_set(&mut self) -> Result<StepSet> {
        self.eat(b'{')?;
        let mut steps = Vec::new();
        if self.peek() != Some(b'}') {
            steps.push(self.vector()?);
            while self.try_eat(b',') {
                steps.push(self.vector()?);
            }
        }
        self.eat(b'}')?;
        if steps.is_empty() {
            return Err(self.err("empty explicit step set has no dimension"));
        }
        StepSet::explicit(steps)
    }

    fn vector(&mut self) -> Result<StepVector> {
        self.eat(b'(')?;
        let mut entries = vec![self.number()?];
        while self.try_eat(b',') {
            entries.push(self.number()?);
        }
        self.eat(b')')?;
        StepVector::new(entries)
    }

    fn base_set(&mut self) -> Result<BaseSet> {
        if self.try_eat(b'{') {
            let mut members = vec![self.number()?];
            while self.try_eat(b',') {
                members.push(self.number()?);
            }
            self.eat(b'}')?;
            return Ok(BaseSet::finite(members));
        }
        let name = self.ident();
        match name.as_str() {
            "nat" => Ok(BaseSet::Nat),
            "natpos" => Ok(BaseSet::NatPos),
            other => Err(self.err(format!("unknown base set \"{}\"", other))),
        }
    }
}
