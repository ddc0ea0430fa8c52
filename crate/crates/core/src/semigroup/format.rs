//! Text formats for tables, names and partial-bijection generators.
//!
//! Table: line 1 is `n z` (`z` the zero index, or `-1` for none), followed by
//! `n` rows of `n` space-separated indices. Names: one name per line.
//! Generators: line 1 is `m k` (domain size, generator count), followed by
//! `k` rows of `m` tokens, each a 1-based target point or `-` for undefined.
//! Lines starting with `#` are comments.

use super::MultiplicationTable;
use crate::text::{content_lines, parse_usize, ParseError};

pub fn parse_table(input: &str) -> Result<MultiplicationTable, ParseError> {
    let mut lines = content_lines(input);
    let (line_no, header) = lines.next().ok_or_else(|| ParseError::new(1, "empty table file"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(ParseError::new(line_no, "expected header `n z`"));
    }
    let n = parse_usize(head[0], line_no)?;
    let zero = match head[1] {
        "-1" => None,
        z => Some(parse_usize(z, line_no)?),
    };
    let mut rows = Vec::with_capacity(n);
    let mut last = line_no;
    for (line_no, line) in lines {
        last = line_no;
        if rows.len() == n {
            return Err(ParseError::new(line_no, format!("unexpected row beyond the {n} declared")));
        }
        let row = line
            .split_whitespace()
            .map(|tok| parse_usize(tok, line_no))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(ParseError::new(line_no, format!("row has {} entries, expected {n}", row.len())));
        }
        if let Some(v) = row.iter().find(|&&v| v >= n) {
            return Err(ParseError::new(line_no, format!("entry {v} out of range")));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ParseError::new(last, format!("expected {n} rows, found {}", rows.len())));
    }
    MultiplicationTable::new(rows, zero).map_err(|e| ParseError::new(line_no, e.to_string()))
}

pub fn write_table(table: &MultiplicationTable) -> String {
    let mut out = format!(
        "{} {}\n",
        table.len(),
        table.declared_zero().map_or("-1".to_string(), |z| z.to_string())
    );
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// One name per line; blank lines are kept so that names stay aligned with indices.
pub fn parse_names(input: &str, n: usize) -> Result<Vec<String>, ParseError> {
    let names: Vec<String> = input.lines().map(|l| l.trim().to_string()).collect();
    let names = match names.iter().rposition(|l| !l.is_empty()) {
        Some(last) => names[..=last].to_vec(),
        None => Vec::new(),
    };
    if names.len() != n {
        return Err(ParseError::new(names.len().max(1), format!("expected {n} names, found {}", names.len())));
    }
    Ok(names)
}

pub fn write_names(table: &MultiplicationTable) -> String {
    (0..table.len()).map(|s| table.name(s) + "\n").collect()
}

/// Parsed generator file, with 0-based targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorFile {
    pub domain_size: usize,
    pub generators: Vec<Vec<Option<usize>>>,
}

pub fn parse_generators(input: &str) -> Result<GeneratorFile, ParseError> {
    let mut lines = content_lines(input);
    let (line_no, header) = lines.next().ok_or_else(|| ParseError::new(1, "empty generator file"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(ParseError::new(line_no, "expected header `m k`"));
    }
    let m = parse_usize(head[0], line_no)?;
    let k = parse_usize(head[1], line_no)?;
    let mut generators = Vec::with_capacity(k);
    let mut last = line_no;
    for (line_no, line) in lines {
        last = line_no;
        if generators.len() == k {
            return Err(ParseError::new(line_no, format!("unexpected generator beyond the {k} declared")));
        }
        let images = line
            .split_whitespace()
            .map(|tok| match tok {
                "-" => Ok(None),
                _ => match parse_usize(tok, line_no)? {
                    p if (1..=m).contains(&p) => Ok(Some(p - 1)),
                    p => Err(ParseError::new(line_no, format!("point {p} outside 1..={m}"))),
                },
            })
            .collect::<Result<Vec<_>, _>>()?;
        if images.len() != m {
            return Err(ParseError::new(line_no, format!("generator has {} tokens, expected {m}", images.len())));
        }
        generators.push(images);
    }
    if generators.len() != k {
        return Err(ParseError::new(last, format!("expected {k} generators, found {}", generators.len())));
    }
    Ok(GeneratorFile { domain_size: m, generators })
}
