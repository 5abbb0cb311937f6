//! Custom root-datum files: a small key/value format with a matrix block.
//!
//! ```text
//! # comment
//! abelian_rank = 1
//! factors = [A:2, D:4]
//! cochar = [
//!   [1, 0, 0, 0, 0, 0, 0],
//!   [1/2, 0, 0, 0, 1/2, 0, 1],
//! ]
//! ```
//!
//! Rows of `cochar` are generators of the cocharacter lattice in ambient
//! coordinates (per-factor coroot blocks, then the abelian block).

use piclat_core::error::{Error, Result};
use piclat_core::exactalg::num::Rat;
use piclat_core::exactalg::Lattice;
use piclat_core::rootdata::{simple_factor_table, validate_datum, ReductiveDatum, TypeTag};

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<num::BigInt> {
        t.trim().parse::<num::BigInt>().map_err(|_| Error::Parse(format!("bad number {:?}", t)))
    };
    if let Some((n, d)) = s.split_once('/') {
        let den = parse_int(d)?;
        if den == num::BigInt::from(0) {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rat::new(parse_int(n)?, den))
    } else {
        Ok(Rat::from_integer(parse_int(s)?))
    }
}

pub fn parse_vec(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rat).collect()
}

pub fn load(path: &std::path::Path) -> Result<ReductiveDatum> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {}", path.display(), e)))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<ReductiveDatum> {
    let stripped: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    let mut abelian_rank: Option<usize> = None;
    let mut factors: Option<Vec<TypeTag>> = None;
    let mut rows: Option<Vec<Vec<Rat>>> = None;
    // Join continuation lines so each `key = value` is one logical entry.
    let mut entries: Vec<String> = Vec::new();
    for line in stripped.lines() {
        let l = line.trim();
        if l.is_empty() {
            continue;
        }
        if l.contains('=') {
            entries.push(l.to_string());
        } else if let Some(last) = entries.last_mut() {
            last.push(' ');
            last.push_str(l);
        } else {
            return Err(Error::Parse(format!("unexpected line {:?}", l)));
        }
    }
    for e in entries {
        let (key, value) = e.split_once('=').ok_or_else(|| Error::Parse(e.clone()))?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "abelian_rank" => {
                abelian_rank = Some(
                    value.parse().map_err(|_| Error::Parse(format!("bad rank {:?}", value)))?,
                )
            }
            "factors" => {
                let inner = value
                    .strip_prefix('[')
                    .and_then(|v| v.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse("factors needs [..]".into()))?;
                let mut tags = Vec::new();
                for part in inner.split(',') {
                    let part = part.trim();
                    if !part.is_empty() {
                        tags.push(TypeTag::parse(part)?);
                    }
                }
                factors = Some(tags);
            }
            "cochar" | "cochar_generators" => {
                rows = Some(parse_matrix(value)?);
            }
            other => return Err(Error::Parse(format!("unknown key {:?}", other))),
        }
    }
    let abelian_rank = abelian_rank.ok_or_else(|| Error::Parse("missing abelian_rank".into()))?;
    let tags = factors.unwrap_or_default();
    let rows = rows.ok_or_else(|| Error::Parse("missing cochar".into()))?;
    let mut facs = Vec::new();
    for t in tags {
        facs.push(simple_factor_table(t)?);
    }
    let ambient: usize = facs.iter().map(|f| f.rank).sum::<usize>() + abelian_rank;
    for (i, r) in rows.iter().enumerate() {
        if r.len() != ambient {
            return Err(Error::Parse(format!(
                "generator {} has {} entries, ambient dimension is {}",
                i,
                r.len(),
                ambient
            )));
        }
    }
    let cols: Vec<Vec<Rat>> = rows;
    let cochar = Lattice::from_cols(ambient, &cols);
    let datum = ReductiveDatum::new(facs, abelian_rank, cochar);
    let violations = validate_datum(&datum);
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::InvalidDatum(msgs.join("; ")));
    }
    Ok(datum)
}

/// Parses `[[a, b, ...], [c, d, ...], ...]`.
fn parse_matrix(s: &str) -> Result<Vec<Vec<Rat>>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| Error::Parse("cochar needs [[..], ..]".into()))?;
    let mut rows = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                if depth == 1 {
                    cur.clear();
                } else {
                    cur.push(ch);
                }
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    rows.push(parse_vec(&cur)?);
                } else {
                    cur.push(ch);
                }
            }
            _ if depth >= 1 => cur.push(ch),
            _ => {}
        }
    }
    if rows.is_empty() {
        return Err(Error::Parse("cochar has no generators".into()));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_gl2_shape() {
        let text = r#"
            # GL2 as a custom datum
            abelian_rank = 1
            factors = [A:1]
            cochar = [
              [1, 0],
              [1/2, 1],
            ]
        "#;
        let d = parse(text).unwrap();
        assert_eq!(d.abelian_rank, 1);
        assert_eq!(d.factors.len(), 1);
        let p = piclat_core::rootdata::derive_parts(&d).unwrap();
        assert_eq!(p.pi1.group().free_rank(), 1);
    }

    #[test]
    fn rejects_bad_data() {
        assert!(parse("factors = [A:1]\ncochar = [[1]]").is_err()); // missing rank
        let bad = "abelian_rank = 0\nfactors = [A:1]\ncochar = [[1/3]]";
        assert!(parse(bad).is_err()); // outside the coweight lattice
    }
}
