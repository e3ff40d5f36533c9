//! Text format for D0LEC definitions.
//!
//! One directive per line, `#` starts a comment:
//!
//! ```text
//! alphabet A B C D
//! gen A -> B C
//! seed B
//! ext A -> 0
//! mod 2
//! ```
//!
//! Generator images may be written spaced (`gen A -> B C`) or, when every
//! alphabet symbol is a single character, compacted (`gen A -> BC`);
//! extension digit words likewise (`ext A -> 2 2 0 1` or `ext A -> 2201`).
//! `mod Z` (or omitting the line) selects the integers. The serializer
//! always writes the spaced form, so parse-then-serialize is canonical.

use super::morphism::{D0lecSpec, Morphism};
use super::SeqError;
use crate::algebra::Domain;
use std::fmt::Write as _;

pub fn parse_d0lec(text: &str) -> Result<D0lecSpec, SeqError> {
    let mut alphabet: Vec<String> = Vec::new();
    let mut gens: Vec<(String, Vec<String>)> = Vec::new();
    let mut exts: Vec<(String, Vec<i64>)> = Vec::new();
    let mut seed: Option<String> = None;
    let mut domain = Domain::Integers;

    let fail = |line: usize, msg: &str| SeqError::Parse {
        line,
        msg: msg.to_string(),
    };

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "alphabet" => {
                if toks.len() < 2 {
                    return Err(fail(line_no, "alphabet needs at least one symbol"));
                }
                alphabet = toks[1..].iter().map(|s| s.to_string()).collect();
            }
            "gen" | "ext" => {
                if toks.len() < 4 || toks[2] != "->" {
                    return Err(fail(line_no, "expected `gen|ext SYMBOL -> WORD`"));
                }
                let sym = toks[1].to_string();
                if !alphabet.contains(&sym) {
                    return Err(fail(line_no, "symbol not in alphabet (declare alphabet first)"));
                }
                if toks[0] == "gen" {
                    let image = split_symbols(&toks[3..], &alphabet)
                        .ok_or_else(|| fail(line_no, "image uses unknown symbols"))?;
                    gens.push((sym, image));
                } else {
                    let digits = split_digits(&toks[3..])
                        .ok_or_else(|| fail(line_no, "extension word must be integers"))?;
                    exts.push((sym, digits));
                }
            }
            "seed" => {
                if toks.len() != 2 {
                    return Err(fail(line_no, "expected `seed SYMBOL`"));
                }
                seed = Some(toks[1].to_string());
            }
            "mod" => {
                if toks.len() != 2 {
                    return Err(fail(line_no, "expected `mod P` or `mod Z`"));
                }
                domain = if toks[1] == "Z" {
                    Domain::Integers
                } else {
                    let p: u64 = toks[1]
                        .parse()
                        .map_err(|_| fail(line_no, "modulus must be an integer or Z"))?;
                    Domain::prime_field(p)?
                };
            }
            other => {
                return Err(fail(line_no, &format!("unknown directive {other:?}")));
            }
        }
    }

    let seed = seed.ok_or_else(|| fail(0, "missing seed directive"))?;
    if alphabet.is_empty() {
        return Err(fail(0, "missing alphabet directive"));
    }
    let gen_rules: Vec<(&str, Vec<&str>)> = gens
        .iter()
        .map(|(s, img)| (s.as_str(), img.iter().map(|x| x.as_str()).collect()))
        .collect();
    // order rules by alphabet declaration
    let mut ordered: Vec<(&str, &[&str])> = Vec::new();
    for sym in &alphabet {
        let rule = gen_rules
            .iter()
            .find(|(s, _)| s == sym)
            .ok_or_else(|| fail(0, &format!("no gen rule for {sym:?}")))?;
        ordered.push((rule.0, rule.1.as_slice()));
    }
    let generator = Morphism::new(&ordered).map_err(SeqError::Morphism)?;
    let ext_refs: Vec<(&str, &[i64])> = exts
        .iter()
        .map(|(s, d)| (s.as_str(), d.as_slice()))
        .collect();
    D0lecSpec::new(generator, &seed, &ext_refs, domain).map_err(SeqError::Morphism)
}

/// Canonical text for a D0LEC.
pub fn serialize_d0lec(spec: &D0lecSpec) -> String {
    let gen = spec.generator();
    let mut out = String::new();
    out.push_str("alphabet");
    for sym in gen.alphabet() {
        let _ = write!(out, " {sym}");
    }
    out.push('\n');
    for (i, sym) in gen.alphabet().iter().enumerate() {
        let _ = write!(out, "gen {sym} ->");
        for &target in gen.rule(i) {
            let _ = write!(out, " {}", gen.symbol_name(target));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "seed {}", spec.seed_name());
    for sym in gen.alphabet() {
        let _ = write!(out, "ext {sym} ->");
        for d in spec.extension_word(sym).expect("total extension") {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    match spec.domain() {
        Domain::Integers => out.push_str("mod Z\n"),
        Domain::PrimeField(p) => {
            let _ = writeln!(out, "mod {p}");
        }
    }
    out
}

fn split_symbols(toks: &[&str], alphabet: &[String]) -> Option<Vec<String>> {
    let single_char = alphabet.iter().all(|s| s.chars().count() == 1);
    let mut out = Vec::new();
    for tok in toks {
        if alphabet.iter().any(|s| s == tok) {
            out.push(tok.to_string());
        } else if single_char {
            for c in tok.chars() {
                let s = c.to_string();
                if !alphabet.contains(&s) {
                    return None;
                }
                out.push(s);
            }
        } else {
            return None;
        }
    }
    Some(out)
}

fn split_digits(toks: &[&str]) -> Option<Vec<i64>> {
    let mut out = Vec::new();
    for tok in toks {
        if let Ok(v) = tok.parse::<i64>() {
            // multi-character all-digit tokens are digit strings, e.g. 2201
            if tok.len() > 1 && tok.bytes().all(|b| b.is_ascii_digit()) {
                for b in tok.bytes() {
                    out.push((b - b'0') as i64);
                }
            } else {
                out.push(v);
            }
        } else {
            return None;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqgen::builtins;

    #[test]
    fn parse_thue_morse_compact() {
        let text = "\
# the classic
alphabet A B C D
gen A -> BC
gen B -> BD
gen C -> CA
gen D -> CB
seed B
ext A -> 0
ext B -> 0
ext C -> 1
ext D -> 1
mod 2
";
        let spec = parse_d0lec(text).unwrap();
        assert_eq!(
            spec,
            builtins::thue_morse_spec(Domain::prime_field(2).unwrap())
        );
    }

    #[test]
    fn canonical_round_trip() {
        let spec = builtins::pagoda_morphic_spec(Domain::prime_field(3).unwrap());
        let text = serialize_d0lec(&spec);
        let back = parse_d0lec(&text).unwrap();
        assert_eq!(back, spec);
        assert_eq!(serialize_d0lec(&back), text);
    }

    #[test]
    fn digit_words_split() {
        let text = "\
alphabet A B
gen A -> A B
gen B -> A A
seed A
ext A -> 2201
ext B -> 0 2 1 1
mod 3
";
        let spec = parse_d0lec(text).unwrap();
        assert_eq!(spec.extension_word("A").unwrap(), &[2, 2, 0, 1]);
        assert_eq!(spec.extension_word("B").unwrap(), &[0, 2, 1, 1]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_d0lec("alphabet A\nbogus X\n").unwrap_err();
        match e {
            SeqError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
