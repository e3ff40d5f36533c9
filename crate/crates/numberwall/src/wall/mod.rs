//! Number walls: the doubly indexed table `S[m][n]` of Toeplitz determinants
//! of a sequence, computed three ways — a brute-force determinant oracle, the
//! naive two-row condensation recurrence, and the production algorithm that
//! crosses zero windows using the frame identities.
//!
//! Rows are indexed from `m = -2` (identically zero) and `m = -1` (identically
//! one); row 0 is the sequence itself. Zero entries occur only as square
//! "windows", each bounded by a nonzero inner frame whose edges are geometric
//! sequences; the window-crossing step reconstructs the row below a window
//! from the outer-frame relation.

mod arith;
mod dump;
mod engine;
mod naive;
mod oracle;

pub use dump::{dump_wall, parse_wall};

use crate::algebra::{AlgebraError, Domain, DomainValue};
use arith::{IntegerCtx, PrimeFieldCtx, WallArith};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WallError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("division by zero at wall entry ({m}, {n}); the naive recurrence cannot pass a window")]
    ZeroDivision { m: i64, n: i64 },
    #[error("entry ({m}, {n}) requires sequence terms outside the given segment")]
    OutOfRange { m: i64, n: i64 },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("sequence input is empty")]
    EmptyInput,
    #[error("requested depth must be nonnegative")]
    BadDepth,
    #[error("malformed wall dump: {0}")]
    Parse(String),
    #[error("integer walls are capped at {} rows (requested {requested}); entries grow doubly exponentially", INTEGER_ROW_CAP)]
    IntegerDepthCap { requested: i64 },
    #[error("window frame data incomplete")]
    IncompleteFrame,
}

/// How the sequence underlying a wall is presented.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WallMode {
    /// Cyclic sequence of the given period; every column is defined.
    Periodic { period: usize },
    /// A finite run of terms `S[start], ..., S[start+len-1]`. Only the
    /// triangular region `start + m <= n <= start + len - 1 - m` is
    /// determined by the given terms, and only that region is computed.
    Segment { start: i64, len: usize },
}

impl WallMode {
    /// Inclusive column range of row `m`, or `None` when the row has no cells.
    pub fn column_range(&self, m: i64) -> Option<(i64, i64)> {
        match *self {
            WallMode::Periodic { period } => Some((0, period as i64 - 1)),
            WallMode::Segment { start, len } => {
                let lo = start + m;
                let hi = start + len as i64 - 1 - m;
                (lo <= hi).then_some((lo, hi))
            }
        }
    }

    pub fn contains(&self, m: i64, n: i64) -> bool {
        match *self {
            WallMode::Periodic { .. } => true,
            WallMode::Segment { .. } => self
                .column_range(m)
                .is_some_and(|(lo, hi)| lo <= n && n <= hi),
        }
    }
}

/// A sequence prepared for wall computation: domain, presentation mode and
/// the terms themselves (one period, or the whole segment).
#[derive(Debug, Clone)]
pub struct WallInput {
    domain: Domain,
    mode: WallMode,
    terms: Vec<DomainValue>,
}

impl WallInput {
    pub fn periodic(domain: Domain, digits: &[i64]) -> Result<WallInput, WallError> {
        if digits.is_empty() {
            return Err(WallError::EmptyInput);
        }
        Ok(WallInput {
            domain,
            mode: WallMode::Periodic {
                period: digits.len(),
            },
            terms: digits.iter().map(|&d| domain.from_i64(d)).collect(),
        })
    }

    pub fn segment(domain: Domain, start: i64, digits: &[i64]) -> Result<WallInput, WallError> {
        if digits.is_empty() {
            return Err(WallError::EmptyInput);
        }
        Ok(WallInput {
            domain,
            mode: WallMode::Segment {
                start,
                len: digits.len(),
            },
            terms: digits.iter().map(|&d| domain.from_i64(d)).collect(),
        })
    }

    pub fn from_values(mode: WallMode, values: Vec<DomainValue>) -> Result<WallInput, WallError> {
        let domain = match values.first() {
            Some(v) => v.domain(),
            None => return Err(WallError::EmptyInput),
        };
        debug_assert!(values.iter().all(|v| v.domain() == domain));
        let expect = match mode {
            WallMode::Periodic { period } => period,
            WallMode::Segment { len, .. } => len,
        };
        if values.len() != expect {
            return Err(WallError::Inconsistency(format!(
                "mode expects {expect} terms, got {}",
                values.len()
            )));
        }
        Ok(WallInput {
            domain,
            mode,
            terms: values,
        })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn mode(&self) -> WallMode {
        self.mode
    }

    /// Sequence term at index `n` (cyclic in periodic mode).
    pub fn term(&self, n: i64) -> Result<DomainValue, WallError> {
        match self.mode {
            WallMode::Periodic { period } => {
                Ok(self.terms[n.rem_euclid(period as i64) as usize].clone())
            }
            WallMode::Segment { start, len } => {
                if n < start || n >= start + len as i64 {
                    Err(WallError::OutOfRange { m: 0, n })
                } else {
                    Ok(self.terms[(n - start) as usize].clone())
                }
            }
        }
    }
}

/// An exact ratio of two domain values; the denominator is nonzero. Over a
/// prime field this always reduces to a single value, over Z it may not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainRatio {
    pub num: DomainValue,
    pub den: DomainValue,
}

impl DomainRatio {
    /// Folded value `num/den`; exact over a field, and over Z only when the
    /// division happens to be exact.
    pub fn value(&self) -> Result<DomainValue, AlgebraError> {
        crate::algebra::exact_divide(&self.num, &self.den)
    }

    /// Equality of `self` and `num/den` by cross-multiplication.
    pub fn equals_ratio(&self, num: &DomainValue, den: &DomainValue) -> bool {
        let lhs = self.num.checked_mul(den);
        let rhs = num.checked_mul(&self.den);
        matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
    }
}

/// The four inner-frame ratios of a window: North, West, East, South.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameRatios {
    pub p: DomainRatio,
    pub q: DomainRatio,
    pub r: DomainRatio,
    pub t: DomainRatio,
}

/// A maximal square zero region of the wall.
///
/// The record itself is small (walls can hold hundreds of thousands of
/// windows); frames and ratios are read back off the wall grid on demand.
///
/// Inner frames follow the compass convention: `north[k] = A_k` runs
/// west-to-east along the row above the window with `A_0` at the NW corner;
/// `west[k] = B_k` runs north-to-south with `B_0 = A_0`; `east[k] = C_k` runs
/// south-to-north with `C_0` at the SE corner; `south[k] = D_k` runs
/// east-to-west with `D_0 = C_0`. Each has `g + 2` entries, sharing corners.
/// Outer frames `E, F, G, H` sit immediately outside, aligned index by index
/// with `A, B, C, D`.
#[derive(Debug, Clone, Copy)]
pub struct Window {
    origin: (i64, i64),
    size: u32,
    interior_truncated: bool,
    inner_complete: bool,
    frames_complete: bool,
}

impl Window {
    pub(crate) fn record(
        origin: (i64, i64),
        size: u32,
        interior_truncated: bool,
        inner_complete: bool,
        frames_complete: bool,
    ) -> Window {
        Window {
            origin,
            size,
            interior_truncated,
            inner_complete,
            frames_complete,
        }
    }
}

/// The four inner frame sequences `(A, B, C, D)` of a window.
pub type InnerFrames = (
    Vec<DomainValue>,
    Vec<DomainValue>,
    Vec<DomainValue>,
    Vec<DomainValue>,
);

/// The eight frame sequences of a window, read off a computed wall.
#[derive(Debug, Clone)]
pub struct WindowFrames {
    pub north: Vec<DomainValue>,
    pub west: Vec<DomainValue>,
    pub east: Vec<DomainValue>,
    pub south: Vec<DomainValue>,
    pub outer_north: Vec<DomainValue>,
    pub outer_west: Vec<DomainValue>,
    pub outer_east: Vec<DomainValue>,
    pub outer_south: Vec<DomainValue>,
}

impl Window {
    /// Top-left interior cell `(m0, n0)`. In periodic mode `n0` is the
    /// canonical representative in `0..t`.
    pub fn origin(&self) -> (i64, i64) {
        self.origin
    }

    /// Observed interior size `g`. For a window truncated by the segment
    /// triangle this is only the visible extent of the top row.
    pub fn size(&self) -> usize {
        self.size as usize
    }

    /// Interior cut by the segment triangle: the true size is unknown.
    pub fn interior_truncated(&self) -> bool {
        self.interior_truncated
    }

    /// All inner-frame positions were computed (the frame laws apply).
    pub fn inner_complete(&self) -> bool {
        self.inner_complete
    }

    /// All inner and outer frame positions were computed (the outer-frame
    /// relation can be replayed).
    pub fn frames_complete(&self) -> bool {
        self.frames_complete
    }

    /// Truncated in any way; such windows are excluded from frame-law checks.
    pub fn truncated(&self) -> bool {
        self.interior_truncated || !self.inner_complete
    }

    /// Whether `(m, n)` is an interior (zero) cell of this window.
    pub fn contains_interior(&self, m: i64, n: i64, mode: &WallMode) -> bool {
        let (m0, n0) = self.origin;
        let g = self.size as i64;
        if m < m0 {
            return false;
        }
        match *mode {
            WallMode::Periodic { period } => {
                let j = (n - n0).rem_euclid(period as i64);
                m < m0 + g && j < g
            }
            WallMode::Segment { .. } => {
                if self.interior_truncated {
                    // visible staircase: every in-triangle cell at or below
                    // the top row within the observed column span
                    mode.contains(m, n) && n >= n0 && n < n0 + g
                } else {
                    m < m0 + g && n >= n0 && n < n0 + g
                }
            }
        }
    }

    /// Nullity of an interior cell: its distance to the nearest inner frame
    /// edge (cells adjacent to the frame have nullity 1).
    pub fn nullity(&self, m: i64, n: i64, mode: &WallMode) -> Option<u32> {
        if !self.contains_interior(m, n, mode) {
            return None;
        }
        let (m0, n0) = self.origin;
        let g = self.size as i64;
        let dm = (m - m0).min(m0 + g - 1 - m);
        let dn = match *mode {
            WallMode::Periodic { period } => {
                let j = (n - n0).rem_euclid(period as i64);
                j.min(g - 1 - j)
            }
            WallMode::Segment { .. } => (n - n0).min(n0 + g - 1 - n),
        };
        Some(dm.min(dn) as u32 + 1)
    }

    /// Inner frame values `(A, B, C, D)`, available whenever the inner ring
    /// was fully computed.
    pub fn inner_frames(&self, wall: &Wall) -> Result<InnerFrames, WallError> {
        if !self.inner_complete {
            return Err(WallError::IncompleteFrame);
        }
        let (m0, n0) = self.origin;
        let g = self.size as i64;
        let at = |m: i64, n: i64| wall.entry(m, n).ok_or(WallError::IncompleteFrame);
        let mut north = Vec::new();
        let mut west = Vec::new();
        let mut east = Vec::new();
        let mut south = Vec::new();
        for k in 0..=g + 1 {
            north.push(at(m0 - 1, n0 - 1 + k)?);
            west.push(at(m0 - 1 + k, n0 - 1)?);
            east.push(at(m0 + g - k, n0 + g)?);
            south.push(at(m0 + g, n0 + g - k)?);
        }
        Ok((north, west, east, south))
    }

    /// Inner and outer frame values, read off the wall that recorded this
    /// window; `Err` when any position was not computed.
    pub fn frames(&self, wall: &Wall) -> Result<WindowFrames, WallError> {
        if !self.frames_complete {
            return Err(WallError::IncompleteFrame);
        }
        let (m0, n0) = self.origin;
        let g = self.size as i64;
        let at = |m: i64, n: i64| wall.entry(m, n).ok_or(WallError::IncompleteFrame);
        let mut f = WindowFrames {
            north: Vec::new(),
            west: Vec::new(),
            east: Vec::new(),
            south: Vec::new(),
            outer_north: Vec::new(),
            outer_west: Vec::new(),
            outer_east: Vec::new(),
            outer_south: Vec::new(),
        };
        for k in 0..=g + 1 {
            f.north.push(at(m0 - 1, n0 - 1 + k)?);
            f.west.push(at(m0 - 1 + k, n0 - 1)?);
            f.east.push(at(m0 + g - k, n0 + g)?);
            f.south.push(at(m0 + g, n0 + g - k)?);
            f.outer_north.push(at(m0 - 2, n0 - 1 + k)?);
            f.outer_west.push(at(m0 - 1 + k, n0 - 2)?);
            f.outer_east.push(at(m0 + g - k, n0 + g + 1)?);
            f.outer_south.push(at(m0 + g + 1, n0 + g - k)?);
        }
        Ok(f)
    }

    /// The inner-frame ratios `(P, Q, R, T)` as exact value pairs: first
    /// over zeroth entry of each geometric edge.
    pub fn ratios(&self, wall: &Wall) -> Result<FrameRatios, WallError> {
        if !self.inner_complete {
            return Err(WallError::IncompleteFrame);
        }
        let (m0, n0) = self.origin;
        let g = self.size as i64;
        let at = |m: i64, n: i64| wall.entry(m, n).ok_or(WallError::IncompleteFrame);
        Ok(FrameRatios {
            p: DomainRatio {
                num: at(m0 - 1, n0)?,
                den: at(m0 - 1, n0 - 1)?,
            },
            q: DomainRatio {
                num: at(m0, n0 - 1)?,
                den: at(m0 - 1, n0 - 1)?,
            },
            r: DomainRatio {
                num: at(m0 - 1, n0 + g)?,
                den: at(m0, n0 + g)?,
            },
            t: DomainRatio {
                num: at(m0 + g, n0 + g - 1)?,
                den: at(m0 + g, n0 + g)?,
            },
        })
    }
}

/// Ratios op in tuple shape.
pub fn window_ratios(
    wall: &Wall,
    w: &Window,
) -> Result<(DomainRatio, DomainRatio, DomainRatio, DomainRatio), WallError> {
    let r = w.ratios(wall)?;
    Ok((r.p, r.q, r.r, r.t))
}

#[derive(Debug)]
pub(crate) enum Grid {
    Field { p: u64, rows: Vec<Vec<u64>> },
    Int { rows: Vec<Vec<BigInt>> },
}

/// A computed number wall: the value grid for rows `-2..=max_row`, the
/// window census gathered during computation, and the terminal all-zero row
/// if the wall vanished.
#[derive(Debug)]
pub struct Wall {
    input: WallInput,
    max_row: i64,
    grid: Grid,
    windows: Vec<Window>,
    terminal_zero_from: Option<i64>,
}

impl Wall {
    pub fn domain(&self) -> Domain {
        self.input.domain()
    }

    pub fn mode(&self) -> WallMode {
        self.input.mode()
    }

    pub fn input(&self) -> &WallInput {
        &self.input
    }

    /// Deepest stored row index `M` (rows run `-2..=M`).
    pub fn max_row(&self) -> i64 {
        self.max_row
    }

    /// First identically-zero row, if the wall vanished. All wall entries at
    /// or below this row are zero; they are not windows.
    pub fn terminal_zero_from(&self) -> Option<i64> {
        self.terminal_zero_from
    }

    pub fn windows(&self) -> &[Window] {
        &self.windows
    }

    fn storage_index(&self, m: i64, n: i64) -> Option<(usize, usize)> {
        if m < -2 || m > self.max_row {
            return None;
        }
        let row = (m + 2) as usize;
        let col = match self.mode() {
            WallMode::Periodic { period } => n.rem_euclid(period as i64) as usize,
            WallMode::Segment { .. } => {
                let (lo, hi) = self.mode().column_range(m)?;
                if n < lo || n > hi {
                    return None;
                }
                (n - lo) as usize
            }
        };
        Some((row, col))
    }

    /// Wall entry, or `None` outside the computed region.
    pub fn entry(&self, m: i64, n: i64) -> Option<DomainValue> {
        let (row, col) = self.storage_index(m, n)?;
        Some(match &self.grid {
            Grid::Field { p, rows } => Domain::PrimeField(*p).from_i64(rows[row][col] as i64),
            Grid::Int { rows } => Domain::Integers.from_bigint(rows[row][col].clone()),
        })
    }

    pub fn entry_is_zero(&self, m: i64, n: i64) -> Option<bool> {
        use num_traits::Zero;
        let (row, col) = self.storage_index(m, n)?;
        Some(match &self.grid {
            Grid::Field { rows, .. } => rows[row][col] == 0,
            Grid::Int { rows } => rows[row][col].is_zero(),
        })
    }

    /// Iterates `(m, n, is_zero)` over all stored cells of rows `0..=max_row`.
    pub fn for_each_cell<F: FnMut(i64, i64, bool)>(&self, mut f: F) {
        use num_traits::Zero;
        for m in 0..=self.max_row {
            let Some((lo, _hi)) = self.mode().column_range(m) else {
                continue;
            };
            let row = (m + 2) as usize;
            match &self.grid {
                Grid::Field { rows, .. } => {
                    if row >= rows.len() {
                        continue;
                    }
                    for (j, v) in rows[row].iter().enumerate() {
                        f(m, lo + j as i64, *v == 0);
                    }
                }
                Grid::Int { rows } => {
                    if row >= rows.len() {
                        continue;
                    }
                    for (j, v) in rows[row].iter().enumerate() {
                        f(m, lo + j as i64, v.is_zero());
                    }
                }
            }
        }
    }

    /// Grid equality (domain, mode, depth and every entry); window metadata
    /// is not part of the comparison.
    pub fn same_grid(&self, other: &Wall) -> bool {
        if self.domain() != other.domain()
            || self.mode() != other.mode()
            || self.max_row != other.max_row
        {
            return false;
        }
        match (&self.grid, &other.grid) {
            (Grid::Field { rows: a, .. }, Grid::Field { rows: b, .. }) => a == b,
            (Grid::Int { rows: a }, Grid::Int { rows: b }) => a == b,
            _ => false,
        }
    }
}

/// Wall entry as an (m+1) x (m+1) Toeplitz determinant, computed directly by
/// fraction-free elimination. The independent oracle for everything else in
/// this module.
pub fn hankel_oracle(input: &WallInput, m: i64, n: i64) -> Result<DomainValue, WallError> {
    oracle::hankel_oracle(input, m, n)
}

/// Naive Sylvester recursion. Fills rows `0..=max_row`, with the all-zero-row
/// shortcut; fails with [`WallError::ZeroDivision`] at the first entry whose
/// divisor is a zero wall entry (two rows above a window).
pub fn wall_naive(input: &WallInput, max_row: i64) -> Result<Wall, WallError> {
    naive::wall_naive(input, max_row)
}

/// Integer walls grow doubly exponentially; deeper requests than this are
/// rejected rather than silently consuming unbounded memory.
pub const INTEGER_ROW_CAP: i64 = 32;

/// Production algorithm: Sylvester recursion away from zeros, window
/// detection plus frame reconstruction at and below them. Bit-identical to
/// [`hankel_oracle`] at every computed position. Integer-domain depth is
/// capped at [`INTEGER_ROW_CAP`]; use [`wall_frame_capped`] to raise it.
pub fn wall_frame(input: &WallInput, max_row: i64) -> Result<Wall, WallError> {
    wall_frame_capped(input, max_row, INTEGER_ROW_CAP)
}

/// [`wall_frame`] with an explicit integer-domain depth bound.
pub fn wall_frame_capped(
    input: &WallInput,
    max_row: i64,
    integer_cap: i64,
) -> Result<Wall, WallError> {
    if max_row < 0 {
        return Err(WallError::BadDepth);
    }
    if input.domain() == Domain::Integers && max_row > integer_cap {
        return Err(WallError::IntegerDepthCap { requested: max_row });
    }
    match input.domain() {
        Domain::PrimeField(p) => {
            let ctx = PrimeFieldCtx { p };
            engine::frame_wall(&ctx, input, max_row)
        }
        Domain::Integers => {
            let ctx = IntegerCtx;
            engine::frame_wall(&ctx, input, max_row)
        }
    }
}

/// Recomputes the row below a window's South outer frame from the
/// outer-frame relation, reading `E`, `F`, `G` and the inner frames off the
/// wall. Returns `H_0 ..= H_{g+1}`, which must equal the wall's own row.
pub fn cross_window(wall: &Wall, w: &Window) -> Result<Vec<DomainValue>, WallError> {
    let ratios = w.ratios(wall)?;
    let f = w.frames(wall)?;
    match wall.domain() {
        Domain::PrimeField(p) => cross_window_in(&PrimeFieldCtx { p }, &ratios, &f),
        Domain::Integers => cross_window_in(&IntegerCtx, &ratios, &f),
    }
}

fn cross_window_in<A: WallArith>(
    ctx: &A,
    ratios: &FrameRatios,
    f: &WindowFrames,
) -> Result<Vec<DomainValue>, WallError> {
    let to_frac = |v: &DomainValue| ctx.to_frac(&ctx.elem_of(v));
    let ratio = |r: &DomainRatio| -> Result<A::Frac, WallError> {
        ctx.frac_div(&to_frac(&r.num), &to_frac(&r.den))
    };
    let (p, q, r, t) = (
        ratio(&ratios.p)?,
        ratio(&ratios.q)?,
        ratio(&ratios.r)?,
        ratio(&ratios.t)?,
    );
    // H_k = (D_k / R) * ( Q E_k / A_k + (-1)^k P F_k / B_k - (-1)^k T G_k / C_k )
    let mut out = Vec::with_capacity(f.north.len());
    for k in 0..f.north.len() {
        let e_term = ctx.frac_div(
            &ctx.frac_mul(&q, &to_frac(&f.outer_north[k])),
            &to_frac(&f.north[k]),
        )?;
        let f_term = ctx.frac_div(
            &ctx.frac_mul(&p, &to_frac(&f.outer_west[k])),
            &to_frac(&f.west[k]),
        )?;
        let g_term = ctx.frac_div(
            &ctx.frac_mul(&t, &to_frac(&f.outer_east[k])),
            &to_frac(&f.east[k]),
        )?;
        let mut signed = ctx.frac_sub(&f_term, &g_term);
        if k % 2 == 1 {
            signed = ctx.frac_neg(&signed);
        }
        let sum = ctx.frac_add(&e_term, &signed);
        let h = ctx.frac_div(&ctx.frac_mul(&to_frac(&f.south[k]), &sum), &r)?;
        out.push(ctx.to_value(&ctx.frac_to_elem(&h)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
