//! D0L substitution systems and their single-shot extensions.
//!
//! A D0L morphism maps every symbol of its alphabet to a word over the same
//! alphabet; all rules here have the same width `w >= 1`. Iterating from a
//! stable seed (one whose image begins with itself) defines a unique
//! right-infinite fixed point. A D0LEC adds a final constant-width morphism
//! from symbols to digit words, giving an automatic sequence.

use crate::algebra::{Domain, DomainValue};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("symbol {0:?} has no production rule")]
    MissingRule(String),
    #[error("rule for {0:?} uses unknown symbol {1:?}")]
    UnknownSymbol(String, String),
    #[error("rules have unequal widths ({0} vs {1}); null or ragged productions are not allowed")]
    RaggedWidth(usize, usize),
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("seed {0:?} is not stable: its image does not begin with it")]
    UnstableSeed(String),
    #[error("seed {0:?} is not in the alphabet")]
    UnknownSeed(String),
    #[error("sequence index {0} is before the start of a right-infinite sequence")]
    BeforeStart(i64),
}

/// A deterministic, context-free, constant-width substitution on a finite
/// alphabet. Symbols are interned; rules map each symbol to a word of fixed
/// width over the alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    symbols: Vec<String>,
    index: HashMap<String, usize>,
    rules: Vec<Vec<usize>>,
    width: usize,
}

impl Morphism {
    /// Builds a morphism from `(symbol, image)` pairs; every alphabet symbol
    /// must have exactly one rule and all images must have equal width.
    pub fn new(rules: &[(&str, &[&str])]) -> Result<Morphism, MorphismError> {
        if rules.is_empty() {
            return Err(MorphismError::EmptyAlphabet);
        }
        let mut symbols = Vec::with_capacity(rules.len());
        let mut index = HashMap::new();
        for (sym, _) in rules {
            if index.insert(sym.to_string(), symbols.len()).is_some() {
                return Err(MorphismError::DuplicateSymbol(sym.to_string()));
            }
            symbols.push(sym.to_string());
        }
        let width = rules[0].1.len();
        let mut table = Vec::with_capacity(rules.len());
        for (sym, image) in rules {
            if image.len() != width {
                return Err(MorphismError::RaggedWidth(width, image.len()));
            }
            let row = image
                .iter()
                .map(|s| {
                    index
                        .get(*s)
                        .copied()
                        .ok_or_else(|| MorphismError::UnknownSymbol(sym.to_string(), s.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            table.push(row);
        }
        if width == 0 {
            return Err(MorphismError::RaggedWidth(1, 0));
        }
        Ok(Morphism {
            symbols,
            index,
            rules: table,
            width,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn alphabet(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol_index(&self, sym: &str) -> Option<usize> {
        self.index.get(sym).copied()
    }

    pub fn symbol_name(&self, idx: usize) -> &str {
        &self.symbols[idx]
    }

    pub fn rule(&self, idx: usize) -> &[usize] {
        &self.rules[idx]
    }

    /// Applies the morphism once to a word.
    pub fn apply(&self, word: &[usize]) -> Vec<usize> {
        let mut out = Vec::with_capacity(word.len() * self.width);
        for &s in word {
            out.extend_from_slice(&self.rules[s]);
        }
        out
    }

    fn seed_stable(&self, seed: usize) -> bool {
        self.rules[seed][0] == seed
    }

    /// First `length` symbols of the fixed point from `seed`.
    ///
    /// Only as much of the fixed point as requested is expanded: the buffer
    /// is grown by rewriting one symbol at a time, so the cost is linear in
    /// `length`.
    pub fn fixed_point(&self, seed: usize, length: usize) -> Result<Vec<usize>, MorphismError> {
        if !self.seed_stable(seed) {
            return Err(MorphismError::UnstableSeed(self.symbols[seed].clone()));
        }
        if length == 0 {
            return Ok(Vec::new());
        }
        if self.width == 1 {
            // the stable seed rewrites to itself forever
            return Ok(vec![seed; length]);
        }
        let mut buf: Vec<usize> = self.rules[seed].clone();
        let mut next = 1;
        while buf.len() < length {
            let s = buf[next];
            buf.extend_from_slice(&self.rules[s]);
            next += 1;
        }
        buf.truncate(length);
        Ok(buf)
    }

    /// Fixed point rendered as the concatenation of symbol names.
    pub fn fixed_point_word(&self, seed: &str, length: usize) -> Result<String, MorphismError> {
        let idx = self
            .symbol_index(seed)
            .ok_or_else(|| MorphismError::UnknownSeed(seed.to_string()))?;
        let fp = self.fixed_point(idx, length)?;
        Ok(fp.iter().map(|&s| self.symbols[s].as_str()).collect())
    }
}

/// A D0L generator plus a final constant-width digit extension: the defining
/// data of an automatic sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D0lecSpec {
    generator: Morphism,
    seed: usize,
    /// Digit word each symbol extends to; all words share `ext_width`.
    extension: Vec<Vec<i64>>,
    ext_width: usize,
    domain: Domain,
}

impl D0lecSpec {
    pub fn new(
        generator: Morphism,
        seed: &str,
        extension: &[(&str, &[i64])],
        domain: Domain,
    ) -> Result<D0lecSpec, MorphismError> {
        let seed_idx = generator
            .symbol_index(seed)
            .ok_or_else(|| MorphismError::UnknownSeed(seed.to_string()))?;
        if !generator.seed_stable(seed_idx) {
            return Err(MorphismError::UnstableSeed(seed.to_string()));
        }
        let mut table: Vec<Option<Vec<i64>>> = vec![None; generator.alphabet().len()];
        let mut width: Option<usize> = None;
        for (sym, word) in extension {
            let idx = generator
                .symbol_index(sym)
                .ok_or_else(|| MorphismError::UnknownSymbol(sym.to_string(), sym.to_string()))?;
            match width {
                None => width = Some(word.len()),
                Some(w) if w != word.len() => {
                    return Err(MorphismError::RaggedWidth(w, word.len()))
                }
                _ => {}
            }
            table[idx] = Some(word.to_vec());
        }
        let ext_width = width.ok_or(MorphismError::EmptyAlphabet)?;
        if ext_width == 0 {
            return Err(MorphismError::RaggedWidth(1, 0));
        }
        let extension = table
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| MorphismError::MissingRule(generator.symbol_name(i).to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(D0lecSpec {
            generator,
            seed: seed_idx,
            extension,
            ext_width,
            domain,
        })
    }

    pub fn generator(&self) -> &Morphism {
        &self.generator
    }

    pub fn seed_name(&self) -> &str {
        self.generator.symbol_name(self.seed)
    }

    pub fn extension_word(&self, sym: &str) -> Option<&[i64]> {
        Some(self.extension[self.generator.symbol_index(sym)?].as_slice())
    }

    pub fn ext_width(&self) -> usize {
        self.ext_width
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Digits `start .. start+length` of the extended fixed point, reduced
    /// into the definition's domain.
    pub fn terms(&self, start: i64, length: usize) -> Result<Vec<DomainValue>, MorphismError> {
        if start < 0 {
            return Err(MorphismError::BeforeStart(start));
        }
        let start = start as usize;
        let end = start + length;
        let symbols_needed = end.div_ceil(self.ext_width);
        let fp = self.generator.fixed_point(self.seed, symbols_needed)?;
        let mut out = Vec::with_capacity(length);
        for pos in start..end {
            let digit = self.extension[fp[pos / self.ext_width]][pos % self.ext_width];
            out.push(self.domain.from_i64(digit));
        }
        Ok(out)
    }

    /// Raw digits before domain reduction (for power-freeness scans).
    pub fn raw_digits(&self, start: i64, length: usize) -> Result<Vec<i64>, MorphismError> {
        if start < 0 {
            return Err(MorphismError::BeforeStart(start));
        }
        let start = start as usize;
        let end = start + length;
        let symbols_needed = end.div_ceil(self.ext_width);
        let fp = self.generator.fixed_point(self.seed, symbols_needed)?;
        Ok((start..end)
            .map(|pos| self.extension[fp[pos / self.ext_width]][pos % self.ext_width])
            .collect())
    }
}
