//! Row-streaming wall computation with window detection and frame crossing.
//!
//! Rows are produced top-down. Away from zeros each entry comes from the
//! condensation step `S[m][n] = (S[m-1][n]^2 - S[m-1][n+1] S[m-1][n-1]) / S[m-2][n]`.
//! When a row acquires a horizontal zero run, the square-window theorem fixes
//! the full window geometry from that run alone: the interior is filled with
//! zeros, the South inner frame is extrapolated from the geometric frame laws,
//! and the row below the window is recovered from the outer-frame relation.
//! Everything else still divides by a nonzero entry two rows up, so the
//! recursion never stalls.

use super::arith::WallArith;
use super::{Wall, WallError, WallInput, WallMode, Window};

/// Row/column geometry shared by all wall algorithms.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Shape {
    pub periodic: bool,
    pub start: i64,
    pub len: usize,
}

impl Shape {
    pub fn of(mode: &WallMode) -> Shape {
        match *mode {
            WallMode::Periodic { period } => Shape {
                periodic: true,
                start: 0,
                len: period,
            },
            WallMode::Segment { start, len } => Shape {
                periodic: false,
                start,
                len,
            },
        }
    }

    /// Number of stored cells in row `m`.
    pub fn width(&self, m: i64) -> usize {
        if self.periodic {
            self.len
        } else {
            (self.len as i64 - 2 * m).max(0) as usize
        }
    }

    /// Column of the first stored cell in row `m`.
    pub fn col0(&self, m: i64) -> i64 {
        if self.periodic {
            0
        } else {
            self.start + m
        }
    }

    pub fn in_range(&self, m: i64, n: i64) -> bool {
        if self.periodic {
            true
        } else {
            let lo = self.start + m;
            let hi = self.start + self.len as i64 - 1 - m;
            n >= lo && n <= hi
        }
    }

    /// Storage offset of column `n` in row `m`.
    pub fn offset(&self, m: i64, n: i64) -> Option<usize> {
        if self.periodic {
            Some(n.rem_euclid(self.len as i64) as usize)
        } else if self.in_range(m, n) {
            Some((n - self.col0(m)) as usize)
        } else {
            None
        }
    }
}

struct Fill<F> {
    p: F,
    q: F,
    r: F,
    t: F,
    /// Value at the SE inner corner, `C_0 = C_g / R^g`.
    c0: F,
}

struct WinState<F> {
    m0: i64,
    n0: i64,
    g: usize,
    left_cut: bool,
    right_cut: bool,
    fill: Option<Fill<F>>,
}

impl<F> WinState<F> {
    fn cut(&self) -> bool {
        self.left_cut || self.right_cut
    }

    /// Influences rows up to and including its H row (uncut windows).
    fn last_row(&self) -> Option<i64> {
        if self.cut() {
            None // staircase continues until the triangle exhausts itself
        } else {
            Some(self.m0 + self.g as i64 + 1)
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Claim {
    Free,
    Interior(usize),
    South(usize),
    HRow(usize),
}

struct Engine<'a, A: WallArith> {
    ctx: &'a A,
    shape: Shape,
    /// Stored rows, index `m + 2`.
    rows: Vec<Vec<A::Elem>>,
    wins: Vec<WinState<A::Frac>>,
    active: Vec<usize>,
    terminal: Option<i64>,
}

impl<'a, A: WallArith> Engine<'a, A> {
    fn get(&self, m: i64, n: i64) -> Result<&A::Elem, WallError> {
        let row = usize::try_from(m + 2).map_err(|_| bug(m, n))?;
        let off = self.shape.offset(m, n).ok_or_else(|| bug(m, n))?;
        self.rows
            .get(row)
            .and_then(|r| r.get(off))
            .ok_or_else(|| bug(m, n))
    }

    fn frac_at(&self, m: i64, n: i64) -> Result<A::Frac, WallError> {
        Ok(self.ctx.to_frac(self.get(m, n)?))
    }

    /// Condensation step at `(m, n)`; divisor must be nonzero.
    fn sylvester(&self, m: i64, n: i64) -> Result<A::Elem, WallError> {
        let up = self.get(m - 1, n)?;
        let up_l = self.get(m - 1, n - 1)?;
        let up_r = self.get(m - 1, n + 1)?;
        let div = self.get(m - 2, n)?;
        if self.ctx.is_zero(div) {
            return Err(WallError::Inconsistency(format!(
                "unexpected zero divisor at ({m}, {n}); window bookkeeping failed"
            )));
        }
        let num = self.ctx.sub(&self.ctx.mul(up, up), &self.ctx.mul(up_r, up_l));
        self.ctx.exact_div(&num, div)
    }

    /// South inner-frame value `D_k` at column `n` of window `wi`.
    fn south_value(&self, wi: usize, n: i64) -> Result<A::Elem, WallError> {
        let w = &self.wins[wi];
        let fill = w.fill.as_ref().expect("south claims only on uncut windows");
        let g = w.g as i64;
        let j = self.rel_col(n, w.n0);
        let k = g - j; // D_k sits at column n0 + g - k
        let mut d = fill.c0.clone();
        for _ in 0..k {
            d = self.ctx.frac_mul(&d, &fill.t);
        }
        let v = self.ctx.frac_to_elem(&d)?;
        if self.ctx.is_zero(&v) {
            return Err(WallError::Inconsistency(format!(
                "inner frame value vanished at ({}, {n})",
                w.m0 + g
            )));
        }
        Ok(v)
    }

    /// Outer-frame crossing: `H_k` at column `n` below window `wi`.
    fn h_value(&self, wi: usize, n: i64) -> Result<A::Elem, WallError> {
        let w = &self.wins[wi];
        let fill = w.fill.as_ref().expect("H claims only on uncut windows");
        let g = w.g as i64;
        let (m0, n0) = (w.m0, w.n0);
        let j = self.rel_col(n, n0);
        let k = g - j;
        let e_k = self.frac_at(m0 - 2, n0 - 1 + k)?;
        let f_k = self.frac_at(m0 - 1 + k, n0 - 2)?;
        let g_k = self.frac_at(m0 + g - k, n0 + g + 1)?;
        let a_k = self.frac_at(m0 - 1, n0 - 1 + k)?;
        let b_k = self.frac_at(m0 - 1 + k, n0 - 1)?;
        let c_k = self.frac_at(m0 + g - k, n0 + g)?;
        let d_k = self.frac_at(m0 + g, n0 + g - k)?;

        let e_term = self.ctx.frac_div(&self.ctx.frac_mul(&fill.q, &e_k), &a_k)?;
        let f_term = self.ctx.frac_div(&self.ctx.frac_mul(&fill.p, &f_k), &b_k)?;
        let g_term = self.ctx.frac_div(&self.ctx.frac_mul(&fill.t, &g_k), &c_k)?;
        let mut signed = self.ctx.frac_sub(&f_term, &g_term);
        if k % 2 == 1 {
            signed = self.ctx.frac_neg(&signed);
        }
        let sum = self.ctx.frac_add(&e_term, &signed);
        let h = self
            .ctx
            .frac_div(&self.ctx.frac_mul(&d_k, &sum), &fill.r)?;
        self.ctx.frac_to_elem(&h)
    }

    /// Offset of column `n` from a window's left column (cyclic in periodic
    /// mode).
    fn rel_col(&self, n: i64, n0: i64) -> i64 {
        if self.shape.periodic {
            (n - n0).rem_euclid(self.shape.len as i64)
        } else {
            n - n0
        }
    }

    /// Claim spans contributed by window `wi` to row `m`.
    fn mark_claims(&self, wi: usize, m: i64, claim: &mut [Claim]) {
        let w = &self.wins[wi];
        let g = w.g as i64;
        let kind = if w.cut() {
            if m >= w.m0 {
                Claim::Interior(wi)
            } else {
                return;
            }
        } else if m < w.m0 || m > w.m0 + g + 1 {
            return;
        } else if m < w.m0 + g {
            Claim::Interior(wi)
        } else if m == w.m0 + g {
            Claim::South(wi)
        } else {
            Claim::HRow(wi)
        };
        // columns n0 ..= n0+g-1, clipped to the stored row
        if self.shape.periodic {
            let t = self.shape.len as i64;
            for j in 0..g {
                let off = (w.n0 + j).rem_euclid(t) as usize;
                claim[off] = kind;
            }
        } else {
            let lo = w.n0.max(self.shape.col0(m));
            let hi = (w.n0 + g - 1).min(self.shape.col0(m) + claim.len() as i64 - 1);
            for n in lo..=hi {
                claim[(n - self.shape.col0(m)) as usize] = kind;
            }
        }
    }

    /// Detects new maximal zero runs in the freshly computed row `m` and
    /// opens a window for each.
    fn detect_windows(&mut self, m: i64, claim: &[Claim]) -> Result<(), WallError> {
        let width = self.shape.width(m);
        let row = &self.rows[(m + 2) as usize];
        let zero: Vec<bool> = row.iter().map(|v| self.ctx.is_zero(v)).collect();

        // Maximal zero runs as (start offset, length), cyclic when periodic.
        let mut runs: Vec<(usize, usize)> = Vec::new();
        if self.shape.periodic {
            debug_assert!(zero.iter().any(|z| !z), "all-zero rows handled earlier");
            let anchor = zero.iter().position(|z| !z).unwrap();
            let mut j = 0;
            while j < width {
                let off = (anchor + 1 + j) % width;
                if zero[off] {
                    let s = j;
                    while j < width && zero[(anchor + 1 + j) % width] {
                        j += 1;
                    }
                    runs.push(((anchor + 1 + s) % width, j - s));
                } else {
                    j += 1;
                }
            }
        } else {
            let mut j = 0;
            while j < width {
                if zero[j] {
                    let s = j;
                    while j < width && zero[j] {
                        j += 1;
                    }
                    runs.push((s, j - s));
                } else {
                    j += 1;
                }
            }
        }

        for (off, len) in runs {
            // Runs consisting of cells already inside a known window are that
            // window's rows passing by; mixed runs would mean the square
            // window theorem failed.
            let claimed = (0..len)
                .filter(|d| {
                    matches!(claim[(off + d) % width], Claim::Interior(_))
                })
                .count();
            if claimed == len {
                continue;
            }
            if claimed != 0 {
                return Err(WallError::Inconsistency(format!(
                    "zero run at row {m} partially overlaps a known window"
                )));
            }
            let n0 = self.shape.col0(m) + off as i64;
            // north neighbours must all be nonzero, or the run would extend
            // the window above
            for d in 0..len {
                let n = n0 + d as i64;
                if self.ctx.is_zero(self.get(m - 1, n)?) {
                    return Err(WallError::Inconsistency(format!(
                        "zero above an unclaimed zero run at ({m}, {n})"
                    )));
                }
            }
            let (left_cut, right_cut) = if self.shape.periodic {
                (false, false)
            } else {
                (off == 0, off + len == width)
            };
            debug_assert!(
                !(left_cut && right_cut),
                "full-width zero rows are terminal"
            );
            let fill = if left_cut || right_cut {
                None
            } else {
                Some(self.make_fill(m, n0, len)?)
            };
            self.wins.push(WinState {
                m0: m,
                n0: if self.shape.periodic {
                    n0.rem_euclid(self.shape.len as i64)
                } else {
                    n0
                },
                g: len,
                left_cut,
                right_cut,
                fill,
            });
            self.active.push(self.wins.len() - 1);
        }
        Ok(())
    }

    /// Frame ratios for a window whose top run spans `n0 ..= n0+g-1` in row `m`.
    fn make_fill(&self, m: i64, n0: i64, g: usize) -> Result<Fill<A::Frac>, WallError> {
        let gi = g as i64;
        let a0 = self.frac_at(m - 1, n0 - 1)?;
        let a1 = self.frac_at(m - 1, n0)?;
        let b1 = self.frac_at(m, n0 - 1)?;
        let cg = self.frac_at(m, n0 + gi)?;
        let cg1 = self.frac_at(m - 1, n0 + gi)?;
        let p = self.ctx.frac_div(&a1, &a0)?;
        let q = self.ctx.frac_div(&b1, &a0)?;
        let r = self.ctx.frac_div(&cg1, &cg)?;
        // PT/QR = (-1)^g fixes T
        let mut t = self.ctx.frac_div(&self.ctx.frac_mul(&q, &r), &p)?;
        if g % 2 == 1 {
            t = self.ctx.frac_neg(&t);
        }
        let mut c0 = cg;
        for _ in 0..g {
            c0 = self.ctx.frac_div(&c0, &r)?;
        }
        Ok(Fill { p, q, r, t, c0 })
    }
}

fn bug(m: i64, n: i64) -> WallError {
    WallError::Inconsistency(format!("read of uncomputed wall entry ({m}, {n})"))
}

pub(crate) fn frame_wall<A: WallArith>(
    ctx: &A,
    input: &WallInput,
    max_row: i64,
) -> Result<Wall, WallError> {
    let shape = Shape::of(&input.mode());
    let mut eng = Engine {
        ctx,
        shape,
        rows: Vec::new(),
        wins: Vec::new(),
        active: Vec::new(),
        terminal: None,
    };
    eng.rows.push(vec![ctx.zero(); shape.width(-2)]);
    eng.rows.push(vec![ctx.one(); shape.width(-1)]);

    let mut effective_max = -1i64;
    for m in 0..=max_row {
        let width = shape.width(m);
        if width == 0 {
            break;
        }
        effective_max = m;

        if eng.terminal.is_some() {
            eng.rows.push(vec![ctx.zero(); width]);
            continue;
        }

        let mut claim = vec![Claim::Free; width];
        let active = eng.active.clone();
        for &wi in &active {
            eng.mark_claims(wi, m, &mut claim);
        }

        let col0 = shape.col0(m);
        let mut row: Vec<A::Elem> = Vec::with_capacity(width);
        for (j, c) in claim.iter().enumerate() {
            let n = col0 + j as i64;
            let v = match *c {
                Claim::Interior(_) => ctx.zero(),
                Claim::South(wi) => eng.south_value(wi, n)?,
                Claim::HRow(wi) => eng.h_value(wi, n)?,
                Claim::Free => {
                    if m == 0 {
                        ctx.elem_of(&input.term(n)?)
                    } else {
                        eng.sylvester(m, n)?
                    }
                }
            };
            row.push(v);
        }
        eng.rows.push(row);

        if eng.rows[(m + 2) as usize].iter().all(|v| ctx.is_zero(v)) {
            eng.terminal = Some(m);
            continue;
        }

        eng.detect_windows(m, &claim)?;
        let wins = &eng.wins;
        eng.active
            .retain(|&wi| wins[wi].last_row().is_none_or(|last| last > m));
    }

    finalize(ctx, input, eng, effective_max)
}

fn finalize<A: WallArith>(
    ctx: &A,
    input: &WallInput,
    eng: Engine<'_, A>,
    effective_max: i64,
) -> Result<Wall, WallError> {
    let shape = eng.shape;
    let mut windows = Vec::with_capacity(eng.wins.len());
    for w in &eng.wins {
        let g = w.g as i64;
        let (m0, n0) = (w.m0, w.n0);
        // inner ring: the four frame corners pin the whole ring inside the
        // computed region (frame rows/columns are contiguous)
        let inner_ok = !w.cut()
            && m0 + g <= effective_max
            && shape.in_range(m0 - 1, n0 - 1)
            && shape.in_range(m0 - 1, n0 + g)
            && shape.in_range(m0 + g, n0 - 1)
            && shape.in_range(m0 + g, n0 + g);
        // outer ring adds the E/F/G/H frames and the H row
        let outer_ok = inner_ok
            && m0 + g < effective_max
            && shape.in_range(m0 - 2, n0 - 1)
            && shape.in_range(m0 - 2, n0 + g)
            && shape.in_range(m0 + g, n0 - 2)
            && shape.in_range(m0 + g, n0 + g + 1)
            && shape.in_range(m0 + g + 1, n0 - 1)
            && shape.in_range(m0 + g + 1, n0 + g);
        windows.push(Window::record((m0, n0), w.g as u32, w.cut(), inner_ok, outer_ok));
    }

    let Engine { rows, terminal, .. } = eng;
    Ok(Wall {
        input: input.clone(),
        max_row: effective_max,
        grid: ctx.make_grid(rows),
        windows,
        terminal_zero_from: terminal,
    })
}
