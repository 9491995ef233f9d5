//! Text formats for matrices, bases and Steiner systems.
//!
//! Blank lines are ignored and `#` starts a comment in every format.

use std::fmt::Write as _;

use crate::algebra::{make_field, Mat};
use crate::error::{Error, Result};
use crate::families::SteinerSystem;
use crate::matroid::Matroid;
use crate::subset::{GroundSubset, MAX_GROUND};

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.column, message: message.into() }
    }

    fn number(&self) -> Result<u64> {
        self.text.parse().map_err(|_| self.error(format!("expected a non-negative integer, found `{}`", self.text)))
    }
}

/// Non-empty lines split into tokens with 1-based positions.
fn lines(input: &str) -> Vec<Vec<Token<'_>>> {
    input
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token { text: &body[s..pos], line: i + 1, column: body[..s].chars().count() + 1 });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(tokens)
        })
        .collect()
}

fn eof(input: &str, message: &str) -> Error {
    Error::Parse { line: input.lines().count() + 1, column: 1, message: message.into() }
}

/// Reads `key value` pairs from a header line, in order.
fn header(line: &[Token<'_>], keys: &[&str]) -> Result<Vec<u64>> {
    let mut values = Vec::with_capacity(keys.len());
    for (i, key) in keys.iter().enumerate() {
        let name = line.get(2 * i).ok_or_else(|| line[line.len() - 1].error(format!("missing `{key}`")))?;
        if name.text != *key {
            return Err(name.error(format!("expected `{key}`, found `{}`", name.text)));
        }
        let value = line.get(2 * i + 1).ok_or_else(|| name.error(format!("missing value for `{key}`")))?;
        values.push(value.number()?);
    }
    if let Some(extra) = line.get(2 * keys.len()) {
        return Err(extra.error("unexpected token"));
    }
    Ok(values)
}

/// `q p e`, `dims k n`, then `k` rows of `n` entries in `[0, q)`.
pub fn parse_matrix(input: &str) -> Result<Mat> {
    let lines = lines(input);
    let mut it = lines.iter();
    let first = it.next().ok_or_else(|| eof(input, "empty input"))?;
    if first[0].text != "q" || first.len() != 3 {
        return Err(first[0].error("expected `q <p> <e>`"));
    }
    let p = first[1].number()?;
    let e = first[2].number()?;
    let field = make_field(p, e as u32).map_err(|err| first[1].error(err.to_string()))?;
    let dims = it.next().ok_or_else(|| eof(input, "missing `dims <k> <n>`"))?;
    if dims[0].text != "dims" || dims.len() != 3 {
        return Err(dims[0].error("expected `dims <k> <n>`"));
    }
    let k = dims[1].number()? as usize;
    let n = dims[2].number()? as usize;
    let q = field.order() as u64;
    let mut data = Vec::with_capacity(k * n);
    for row in 0..k {
        let line = it.next().ok_or_else(|| eof(input, &format!("expected {k} rows, found {row}")))?;
        if line.len() != n {
            let at = line.get(n).unwrap_or(&line[line.len() - 1]);
            return Err(at.error(format!("expected {n} entries, found {}", line.len())));
        }
        for tok in line {
            let v = tok.number()?;
            if v >= q {
                return Err(tok.error(format!("entry {v} is not below q = {q}")));
            }
            data.push(v as u8);
        }
    }
    if let Some(extra) = it.next() {
        return Err(extra[0].error("unexpected line after the matrix"));
    }
    Mat::new(field, k, n, data)
}

pub fn write_matrix(m: &Mat) -> String {
    let f = m.field();
    let mut out = format!("q {} {}\ndims {} {}\n", f.characteristic(), f.degree(), m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn parse_subset(line: &[Token<'_>], n: usize) -> Result<GroundSubset> {
    let mut set = GroundSubset::EMPTY;
    for tok in line {
        let e = tok.number()? as usize;
        if e == 0 || e > n {
            return Err(tok.error(format!("element {e} is outside 1..{n}")));
        }
        if set.contains(e) {
            return Err(tok.error(format!("element {e} repeated")));
        }
        set = set.with(e);
    }
    Ok(set)
}

fn ground_size(tok: &Token<'_>) -> Result<usize> {
    let n = tok.number()? as usize;
    if n == 0 || n > MAX_GROUND {
        return Err(tok.error(format!("ground set size must be in 1..={MAX_GROUND}")));
    }
    Ok(n)
}

/// `n <n>`, then one basis per line. The empty basis is written `{}`.
pub fn parse_bases(input: &str) -> Result<(usize, Vec<GroundSubset>)> {
    let lines = lines(input);
    let first = lines.first().ok_or_else(|| eof(input, "empty input"))?;
    header(first, &["n"])?;
    let n = ground_size(&first[1])?;
    let mut bases = Vec::with_capacity(lines.len() - 1);
    for line in &lines[1..] {
        if line.len() == 1 && line[0].text == "{}" {
            bases.push(GroundSubset::EMPTY);
        } else {
            bases.push(parse_subset(line, n)?);
        }
    }
    if bases.is_empty() {
        return Err(eof(input, "no bases listed"));
    }
    Ok((n, bases))
}

pub fn parse_bases_matroid(input: &str) -> Result<Matroid> {
    let (n, bases) = parse_bases(input)?;
    Matroid::from_bases(n, bases)
}

fn write_subset_line(out: &mut String, set: GroundSubset) {
    if set.is_empty() {
        out.push_str("{}\n");
        return;
    }
    let items: Vec<String> = set.iter().map(|e| e.to_string()).collect();
    let _ = writeln!(out, "{}", items.join(" "));
}

pub fn write_bases(m: &Matroid) -> Result<String> {
    let mut out = format!("n {}\n", m.n());
    for &b in m.bases()?.iter() {
        write_subset_line(&mut out, b);
    }
    Ok(out)
}

/// `n <n> t <t> k <k>`, then one block per line.
pub fn parse_steiner(input: &str) -> Result<SteinerSystem> {
    let lines = lines(input);
    let first = lines.first().ok_or_else(|| eof(input, "empty input"))?;
    let values = header(first, &["n", "t", "k"])?;
    let n = ground_size(&first[1])?;
    let mut blocks = Vec::with_capacity(lines.len() - 1);
    for line in &lines[1..] {
        let block = parse_subset(line, n)?;
        if block.len() as u64 != values[2] {
            return Err(line[0].error(format!("block has {} elements, expected {}", block.len(), values[2])));
        }
        blocks.push(block);
    }
    SteinerSystem::new(n, values[1] as usize, values[2] as usize, blocks)
}

pub fn write_steiner(s: &SteinerSystem) -> String {
    let mut out = format!("n {} t {} k {}\n", s.n(), s.t(), s.k());
    for &b in s.blocks() {
        write_subset_line(&mut out, b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{fano, vamos};

    #[test]
    fn matrix_round_trip() {
        let text = "q 3 2\ndims 2 3\n1 0 8\n0 1 4\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.field().order(), 9);
        assert_eq!(write_matrix(&m), text);
    }

    #[test]
    fn matrix_with_comments() {
        let text = "# header\nq 2 1\n\ndims 1 2  # one row\n1 1\n";
        assert_eq!(parse_matrix(text).unwrap().cols(), 2);
    }

    #[test]
    fn matrix_errors_carry_positions() {
        let err = parse_matrix("q 2 1\ndims 1 3\n1 2 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 3, .. }), "{err:?}");
        let err = parse_matrix("q 2 1\ndims 1 3\n1 x 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 3, .. }), "{err:?}");
        let err = parse_matrix("q 2 1\ndims 2 3\n1 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err:?}");
        let err = parse_matrix("q 4 1\ndims 1 1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 3, .. }), "{err:?}");
        let err = parse_matrix("q 2 1\ndims 1 3\n1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn bases_round_trip() {
        let m = vamos();
        let text = write_bases(&m).unwrap();
        let back = parse_bases_matroid(&text).unwrap();
        assert_eq!(back.bases().unwrap(), m.bases().unwrap());
    }

    #[test]
    fn bases_errors() {
        let err = parse_bases("n 3\n1 2\n1 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 3, .. }), "{err:?}");
        let err = parse_bases("m 3\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 1, .. }), "{err:?}");
        assert!(matches!(parse_bases_matroid("n 3\n1 2\n3\n"), Err(Error::InvalidBases(_))));
    }

    #[test]
    fn steiner_round_trip() {
        let s = fano();
        let back = parse_steiner(&write_steiner(&s)).unwrap();
        assert_eq!(back.blocks(), s.blocks());
        let err = parse_steiner("n 7 t 2 k 3\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }
}
