//! Plain-text wall dumps.
//!
//! Header line `#wall mod=<p|Z> mode=<periodic t|segment L> [start=<s>] rows=<M>`,
//! then one line per row `m = -2 ..= M` of space-separated canonical
//! integers. Segment rows are padded with `.` out to the column span of row
//! -2, so every line has the same number of fields. Dumps round-trip
//! bit-exactly: parsing and re-dumping reproduces the bytes.

use super::{Grid, Wall, WallError, WallInput, WallMode};
use crate::algebra::Domain;
use num_bigint::BigInt;
use std::fmt::Write as _;

pub fn dump_wall(wall: &Wall) -> String {
    let mut out = String::new();
    match wall.domain() {
        Domain::Integers => out.push_str("#wall mod=Z"),
        Domain::PrimeField(p) => {
            let _ = write!(out, "#wall mod={p}");
        }
    }
    match wall.mode() {
        WallMode::Periodic { period } => {
            let _ = write!(out, " mode=periodic {period}");
        }
        WallMode::Segment { start, len } => {
            let _ = write!(out, " mode=segment {len}");
            if start != 0 {
                let _ = write!(out, " start={start}");
            }
        }
    }
    let _ = writeln!(out, " rows={}", wall.max_row());

    let full_range = wall.mode().column_range(-2);
    for m in -2..=wall.max_row() {
        let mut first = true;
        let (lo, hi) = match wall.mode() {
            WallMode::Periodic { .. } => wall.mode().column_range(m).unwrap(),
            WallMode::Segment { .. } => full_range.unwrap(),
        };
        for n in lo..=hi {
            if !first {
                out.push(' ');
            }
            first = false;
            match wall.entry(m, n) {
                Some(v) => {
                    let _ = write!(out, "{v}");
                }
                None => out.push('.'),
            }
        }
        out.push('\n');
    }
    out
}

pub fn parse_wall(text: &str) -> Result<Wall, WallError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| err("empty dump"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("#wall") {
        return Err(err("missing #wall header"));
    }

    let mut domain: Option<Domain> = None;
    let mut mode_kind: Option<&str> = None;
    let mut mode_size: Option<usize> = None;
    let mut start: i64 = 0;
    let mut rows_decl: Option<i64> = None;
    for tok in toks {
        if let Some(v) = tok.strip_prefix("mod=") {
            domain = Some(if v == "Z" {
                Domain::Integers
            } else {
                let p: u64 = v.parse().map_err(|_| err("bad modulus"))?;
                Domain::prime_field(p)?
            });
        } else if let Some(v) = tok.strip_prefix("mode=") {
            mode_kind = Some(match v {
                "periodic" => "periodic",
                "segment" => "segment",
                _ => return Err(err("unknown mode")),
            });
        } else if let Some(v) = tok.strip_prefix("start=") {
            start = v.parse().map_err(|_| err("bad start"))?;
        } else if let Some(v) = tok.strip_prefix("rows=") {
            rows_decl = Some(v.parse().map_err(|_| err("bad rows"))?);
        } else if mode_kind.is_some() && mode_size.is_none() {
            mode_size = Some(tok.parse().map_err(|_| err("bad mode size"))?);
        } else {
            return Err(err("unexpected header token"));
        }
    }
    let domain = domain.ok_or_else(|| err("missing mod="))?;
    let max_row = rows_decl.ok_or_else(|| err("missing rows="))?;
    let size = mode_size.ok_or_else(|| err("missing mode size"))?;
    let mode = match mode_kind {
        Some("periodic") => WallMode::Periodic { period: size },
        Some("segment") => WallMode::Segment { start, len: size },
        _ => return Err(err("missing mode=")),
    };

    let full_lo = mode.column_range(-2).ok_or_else(|| err("degenerate mode"))?.0;
    let mut grid_rows: Vec<Vec<BigInt>> = Vec::new();
    for m in -2..=max_row {
        let line = lines.next().ok_or_else(|| err("missing row line"))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (lo, hi) = mode.column_range(m).ok_or_else(|| err("row out of mode range"))?;
        let expected_fields = match mode {
            WallMode::Periodic { period } => period,
            WallMode::Segment { len, .. } => len + 4,
        };
        if fields.len() != expected_fields {
            return Err(err(&format!(
                "row {m}: expected {expected_fields} fields, got {}",
                fields.len()
            )));
        }
        let mut row = Vec::with_capacity((hi - lo + 1) as usize);
        for (idx, f) in fields.iter().enumerate() {
            let n = full_lo + idx as i64;
            let inside = n >= lo && n <= hi;
            if *f == "." {
                if inside {
                    return Err(err(&format!("row {m}: '.' inside the triangle at column {n}")));
                }
                continue;
            }
            if !inside {
                return Err(err(&format!("row {m}: value outside the triangle at column {n}")));
            }
            let v: BigInt = f.parse().map_err(|_| err("bad integer"))?;
            row.push(v);
        }
        grid_rows.push(row);
    }
    if lines.next().is_some_and(|l| !l.trim().is_empty()) {
        return Err(err("trailing content after last row"));
    }

    // Row 0 is the sequence itself; rebuild the input from it.
    let row0 = grid_rows
        .get(2)
        .ok_or_else(|| err("dump lacks row 0"))?
        .iter()
        .map(|v| domain.from_bigint(v.clone()))
        .collect::<Vec<_>>();
    let input = WallInput::from_values(mode, row0)?;

    let grid = match domain {
        Domain::Integers => Grid::Int { rows: grid_rows },
        Domain::PrimeField(p) => {
            let mut rows = Vec::with_capacity(grid_rows.len());
            for r in grid_rows {
                let mut out = Vec::with_capacity(r.len());
                for v in r {
                    let u = u64::try_from(&v).map_err(|_| err("negative residue"))?;
                    if u >= p {
                        return Err(err("residue out of canonical range"));
                    }
                    out.push(u);
                }
                rows.push(out);
            }
            Grid::Field { p, rows }
        }
    };

    Ok(Wall {
        input,
        max_row,
        grid,
        windows: Vec::new(),
        terminal_zero_from: None,
    })
}

fn err(msg: &str) -> WallError {
    WallError::Parse(msg.to_string())
}
