//! The textbook two-row recursion, kept as a foil: it cannot get past the
//! second row under a zero entry.

use super::arith::{IntegerCtx, PrimeFieldCtx, WallArith};
use super::engine::Shape;
use super::{Wall, WallError, WallInput};
use crate::algebra::Domain;

pub(crate) fn wall_naive(input: &WallInput, max_row: i64) -> Result<Wall, WallError> {
    if max_row < 0 {
        return Err(WallError::BadDepth);
    }
    match input.domain() {
        Domain::PrimeField(p) => run(&PrimeFieldCtx { p }, input, max_row),
        Domain::Integers => run(&IntegerCtx, input, max_row),
    }
}

fn run<A: WallArith>(ctx: &A, input: &WallInput, max_row: i64) -> Result<Wall, WallError> {
    let shape = Shape::of(&input.mode());
    let mut rows: Vec<Vec<A::Elem>> = Vec::new();
    rows.push(vec![ctx.zero(); shape.width(-2)]);
    rows.push(vec![ctx.one(); shape.width(-1)]);
    let mut terminal: Option<i64> = None;
    let mut effective_max = -1i64;

    for m in 0..=max_row {
        let width = shape.width(m);
        if width == 0 {
            break;
        }
        effective_max = m;
        if terminal.is_some() {
            rows.push(vec![ctx.zero(); width]);
            continue;
        }
        let col0 = shape.col0(m);
        let mut row = Vec::with_capacity(width);
        for j in 0..width {
            let n = col0 + j as i64;
            let v = if m == 0 {
                ctx.elem_of(&input.term(n)?)
            } else {
                let at = |mm: i64, nn: i64| {
                    let off = shape.offset(mm, nn).expect("recursion inputs in range");
                    &rows[(mm + 2) as usize][off]
                };
                let div = at(m - 2, n);
                if ctx.is_zero(div) {
                    return Err(WallError::ZeroDivision { m, n });
                }
                let up = at(m - 1, n);
                let num = ctx.sub(
                    &ctx.mul(up, up),
                    &ctx.mul(at(m - 1, n + 1), at(m - 1, n - 1)),
                );
                ctx.exact_div(&num, div)?
            };
            row.push(v);
        }
        if row.iter().all(|v| ctx.is_zero(v)) {
            terminal = Some(m);
        }
        rows.push(row);
    }

    Ok(Wall {
        input: input.clone(),
        max_row: effective_max,
        grid: ctx.make_grid(rows),
        windows: Vec::new(),
        terminal_zero_from: terminal,
    })
}
