//! Direct determinant evaluation of single wall entries.
//!
//! Entry `(m, n)` is the order-(m+1) Toeplitz determinant with `(i, j)`
//! element `S[n+j-i]`. Bareiss fraction-free elimination works over both
//! domains: every division it performs is exact, so no fraction field is
//! needed and integer growth stays polynomial.

use super::arith::{IntegerCtx, PrimeFieldCtx, WallArith};
use super::{WallError, WallInput, WallMode};
use crate::algebra::{Domain, DomainValue};

pub(crate) fn hankel_oracle(input: &WallInput, m: i64, n: i64) -> Result<DomainValue, WallError> {
    if m < -2 {
        return Err(WallError::OutOfRange { m, n });
    }
    if m == -2 {
        return Ok(input.domain().zero());
    }
    if m == -1 {
        return Ok(input.domain().one());
    }
    if let WallMode::Segment { start, len } = input.mode() {
        if n - m < start || n + m > start + len as i64 - 1 {
            return Err(WallError::OutOfRange { m, n });
        }
    }
    match input.domain() {
        Domain::PrimeField(p) => det(&PrimeFieldCtx { p }, input, m, n),
        Domain::Integers => det(&IntegerCtx, input, m, n),
    }
}

fn det<A: WallArith>(ctx: &A, input: &WallInput, m: i64, n: i64) -> Result<DomainValue, WallError> {
    let size = (m + 1) as usize;
    let mut a: Vec<Vec<A::Elem>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| Ok(ctx.elem_of(&input.term(n + j as i64 - i as i64)?)))
                .collect::<Result<_, WallError>>()
        })
        .collect::<Result<_, _>>()?;

    let mut sign_flip = false;
    let mut prev_pivot = ctx.one();
    for k in 0..size - 1 {
        if ctx.is_zero(&a[k][k]) {
            let Some(swap) = (k + 1..size).find(|&i| !ctx.is_zero(&a[i][k])) else {
                return Ok(input.domain().zero());
            };
            a.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = ctx.sub(&ctx.mul(&a[i][j], &a[k][k]), &ctx.mul(&a[i][k], &a[k][j]));
                a[i][j] = ctx.exact_div(&num, &prev_pivot)?;
            }
            a[i][k] = ctx.zero();
        }
        prev_pivot = a[k][k].clone();
    }
    let mut d = a[size - 1][size - 1].clone();
    if sign_flip {
        d = ctx.neg(&d);
    }
    Ok(ctx.to_value(&d))
}
