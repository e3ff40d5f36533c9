//! Exhaustive search for periodic words maximising deficiency depth.
//!
//! Words are enumerated by period length, deduplicated under the symmetries
//! that provably preserve the window pattern: rotation (a column shift of the
//! wall), reversal (a column reflection) and scaling by a nonzero constant
//! (which scales row m by c^{m+1}). Each canonical word's wall is computed to
//! termination and scored with [`deficiency`].

use super::deficiency::{deficiency, DeficiencyReport};
use crate::algebra::Domain;
use crate::wall::{wall_frame, WallInput};
use thiserror::Error;

#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    pub max_period: usize,
    pub max_candidates: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_period: 8,
            max_candidates: 2_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub word: Vec<i64>,
    pub report: DeficiencyReport,
    /// Canonical words whose walls were computed.
    pub visited: u64,
    /// Whether the whole space up to `max_period` was enumerated.
    pub exhaustive: bool,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("candidate budget exhausted; best-so-far attached")]
    EffortExhausted(SearchOutcome),
    #[error("search space is empty")]
    EmptySpace,
}

/// Smallest representative of the word's orbit under rotation, reversal and
/// unit scaling.
fn canonical_form(word: &[i64], q: u64) -> Vec<i64> {
    let t = word.len();
    let mut best: Option<Vec<i64>> = None;
    let reversed: Vec<i64> = word.iter().rev().copied().collect();
    for base in [word, reversed.as_slice()] {
        for rot in 0..t {
            for c in 1..q as i64 {
                let candidate: Vec<i64> = (0..t)
                    .map(|i| (base[(i + rot) % t] * c).rem_euclid(q as i64))
                    .collect();
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
        }
    }
    best.unwrap()
}

/// Searches all periodic words over Z/q (q prime) up to the period limit for
/// the greatest depth with no window of size >= d. Deterministic: candidates
/// are visited by increasing period, then lexicographically, and only a
/// strictly greater depth replaces the incumbent.
pub fn search_max_depth(
    q: u64,
    d: usize,
    limits: SearchLimits,
) -> Result<SearchOutcome, SearchError> {
    let domain = Domain::prime_field(q).expect("q must be prime");
    let mut best: Option<(i64, Vec<i64>, DeficiencyReport)> = None;
    let mut visited = 0u64;
    let mut exhausted = false;

    'outer: for t in 1..=limits.max_period {
        let mut word = vec![0i64; t];
        loop {
            if word == canonical_form(&word, q) {
                if visited >= limits.max_candidates {
                    exhausted = true;
                    break 'outer;
                }
                visited += 1;
                let input = WallInput::periodic(domain, &word).expect("nonempty word");
                let wall = wall_frame(&input, t as i64 + 2).expect("periodic wall");
                let report = deficiency(&wall, d);
                if best.as_ref().is_none_or(|(depth, _, _)| report.depth > *depth) {
                    best = Some((report.depth, word.clone(), report));
                }
            }
            // next word in lexicographic order
            let mut i = t;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                word[i] += 1;
                if word[i] < q as i64 {
                    break;
                }
                word[i] = 0;
            }
            if word.iter().all(|&x| x == 0) {
                break;
            }
        }
    }

    match best {
        None => Err(SearchError::EmptySpace),
        Some((_, word, report)) => {
            let outcome = SearchOutcome {
                word,
                report,
                visited,
                exhaustive: !exhausted,
            };
            if exhausted {
                Err(SearchError::EffortExhausted(outcome))
            } else {
                Ok(outcome)
            }
        }
    }
}
