//! Monoid generators and words: `r1 r2 e1 e3 d d-`.

use std::fmt;

use crate::error::{Error, Result};

/// A generator of BrM(H_k). Indices are 0-based; text is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    R(u8),
    E(u8),
    Delta,
    DeltaInv,
}

impl Generator {
    pub fn index(self) -> Option<usize> {
        match self {
            Generator::R(i) | Generator::E(i) => Some(i as usize),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::R(i) => write!(f, "r{}", i + 1),
            Generator::E(i) => write!(f, "e{}", i + 1),
            Generator::Delta => f.write_str("d"),
            Generator::DeltaInv => f.write_str("d-"),
        }
    }
}

/// A word over the generators, read left to right as a product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(pub Vec<Generator>);

impl GeneratorWord {
    /// Parse whitespace-separated tokens, checking indices against `rank`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut out = Vec::new();
        let mut rest = text;
        let mut offset = 0;
        loop {
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            if trimmed.is_empty() {
                break;
            }
            let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let token = &trimmed[..end];
            out.push(parse_token(token, rank).map_err(|message| Error::Parse { offset, message })?);
            offset += end;
            rest = &trimmed[end..];
        }
        Ok(GeneratorWord(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word read backwards. Each generator is fixed by the op involution
    /// except δ^{±1}, which is central, so this is op on words.
    pub fn reversed(&self) -> Self {
        GeneratorWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &GeneratorWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GeneratorWord(v)
    }
}

fn parse_token(token: &str, rank: usize) -> std::result::Result<Generator, String> {
    match token {
        "d" => return Ok(Generator::Delta),
        "d-" => return Ok(Generator::DeltaInv),
        _ => {}
    }
    let (head, digits) = token.split_at(token.chars().next().map_or(0, char::len_utf8));
    let idx: usize = digits.parse().map_err(|_| format!("unrecognized token {token:?}"))?;
    if idx == 0 || idx > rank {
        return Err(format!("index {idx} out of range 1..={rank} in {token:?}"));
    }
    match head {
        "r" => Ok(Generator::R((idx - 1) as u8)),
        "e" => Ok(Generator::E((idx - 1) as u8)),
        _ => Err(format!("unrecognized token {token:?}")),
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Shorthand for building words in tests and relation tables: 1-based
/// reflection indices.
pub(crate) fn rs(word: &[usize]) -> Vec<Generator> {
    word.iter().map(|&i| Generator::R((i - 1) as u8)).collect()
}
