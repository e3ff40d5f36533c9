//! Sequence sources: built-in named sequences, explicit periodic words,
//! finite segments, and D0LEC substitution systems, plus the power-freeness
//! scanner used to spot-check the square-free/cube-free claims.

mod builtins;
mod closed;
mod morphism;
mod powerfree;
mod specfile;

pub use builtins::{
    knight_morphic_spec, nosquare4_spec, nosquare6_spec, pagoda_generator, pagoda_morphic_spec,
    quaternary_v_spec, rook_morphic_spec, rueppel_morphic_spec, ternary_u_spec,
    thue_morse_generator, thue_morse_spec, thue_rook_spec, zigzag_spec, Builtin,
};
pub use closed::{knight, libran_prefix, pagoda, rook, rueppel, SplitMix64};
pub use morphism::{D0lecSpec, Morphism, MorphismError};
pub use powerfree::{power_free_check, PowerFreeReport, PowerOccurrence};
pub use specfile::{parse_d0lec, serialize_d0lec};

use crate::algebra::{AlgebraError, Domain, DomainValue};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SeqError {
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("unknown sequence name {0:?}")]
    UnknownName(String),
    #[error("sequence has no term at index {0}")]
    OutOfRange(i64),
    #[error("spec file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("empty sequence")]
    Empty,
}

/// A description of a sequence, as the CLI and the analyses consume it.
#[derive(Debug, Clone)]
pub enum SequenceSpec {
    Builtin { which: Builtin, domain: Domain },
    PeriodicWord { digits: Vec<i64>, domain: Domain },
    FiniteSegment { digits: Vec<i64>, domain: Domain },
    D0lec(D0lecSpec),
}

impl SequenceSpec {
    pub fn builtin(name: &str, domain: Option<Domain>, seed: u64) -> Result<SequenceSpec, SeqError> {
        let which = Builtin::parse(name, seed)?;
        Ok(SequenceSpec::Builtin {
            which,
            domain: domain.unwrap_or_else(|| which.natural_domain()),
        })
    }

    pub fn periodic(digits: Vec<i64>, domain: Domain) -> Result<SequenceSpec, SeqError> {
        if digits.is_empty() {
            return Err(SeqError::Empty);
        }
        Ok(SequenceSpec::PeriodicWord { digits, domain })
    }

    pub fn segment(digits: Vec<i64>, domain: Domain) -> Result<SequenceSpec, SeqError> {
        if digits.is_empty() {
            return Err(SeqError::Empty);
        }
        Ok(SequenceSpec::FiniteSegment { digits, domain })
    }

    pub fn domain(&self) -> Domain {
        match self {
            SequenceSpec::Builtin { domain, .. } => *domain,
            SequenceSpec::PeriodicWord { domain, .. } => *domain,
            SequenceSpec::FiniteSegment { domain, .. } => *domain,
            SequenceSpec::D0lec(spec) => spec.domain(),
        }
    }

    /// Raw digits `start .. start+len` before reduction into the wall domain.
    pub fn raw_digits(&self, start: i64, len: usize) -> Result<Vec<i64>, SeqError> {
        match self {
            SequenceSpec::Builtin { which, domain } => {
                let modulus = domain.modulus().unwrap_or(0);
                which.raw_digits(start, len, modulus)
            }
            SequenceSpec::PeriodicWord { digits, .. } => Ok((start..start + len as i64)
                .map(|n| digits[n.rem_euclid(digits.len() as i64) as usize])
                .collect()),
            SequenceSpec::FiniteSegment { digits, .. } => {
                let end = start + len as i64;
                if start < 0 || end > digits.len() as i64 {
                    return Err(SeqError::OutOfRange(if start < 0 { start } else { end - 1 }));
                }
                Ok(digits[start as usize..end as usize].to_vec())
            }
            SequenceSpec::D0lec(spec) => Ok(spec.raw_digits(start, len)?),
        }
    }

    /// Terms reduced into the sequence's domain.
    pub fn terms(&self, start: i64, len: usize) -> Result<Vec<DomainValue>, SeqError> {
        let domain = self.domain();
        Ok(self
            .raw_digits(start, len)?
            .into_iter()
            .map(|d| domain.from_i64(d))
            .collect())
    }
}
