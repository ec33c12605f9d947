//! Text format for generator sets.
//!
//! ```text
//! # comments start with '#'
//! kind: matrix
//! dimension: 2
//!
//! label: r
//! 0 -1
//! 1 0
//!
//! label: m
//! 1, 0
//! 0, -1
//! ```
//!
//! Blocks are separated by blank lines. A matrix row is split on commas
//! when it contains one and on whitespace otherwise, so entries with inner
//! spaces such as `1/2 + sqrt(3)/2` need commas. Permutation files use
//! `kind: permutation`, `degree: k` and one cycle-notation line per block.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, Permutation};
use crate::linalg::Matrix;
use crate::parse::parse_scalar;
use crate::QuadNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Matrix,
    Permutation,
}

/// Parsed generator file.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorFile {
    pub kind: GeneratorKind,
    /// Matrix dimension or permutation degree.
    pub size: usize,
    pub generators: Vec<(Option<String>, GroupElement)>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos: line,
        msg: format!("line {line}: {}", msg.into()),
    }
}

/// Parses a generator file; error positions are 1-based line numbers.
pub fn parse_generators(text: &str) -> Result<GeneratorFile> {
    let mut kind = None;
    let mut size = None;
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![];
    let mut current: Vec<(usize, &str)> = vec![];
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            let value = value.trim();
            match key.trim() {
                "kind" => {
                    kind = Some(match value {
                        "matrix" => GeneratorKind::Matrix,
                        "permutation" => GeneratorKind::Permutation,
                        other => return Err(err(line_no, format!("unknown kind `{other}`"))),
                    });
                    continue;
                }
                "dimension" | "degree" => {
                    size = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| err(line_no, "expected a positive integer"))?,
                    );
                    continue;
                }
                "label" => {
                    current.push((line_no, line));
                    continue;
                }
                _ => {}
            }
        }
        current.push((line_no, line));
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    let kind = kind.ok_or_else(|| err(1, "missing `kind:` header"))?;
    let size = size
        .filter(|&n| n > 0)
        .ok_or_else(|| err(1, "missing `dimension:` or `degree:` header"))?;
    let mut generators = Vec::with_capacity(blocks.len());
    for block in blocks {
        let (label, body) = match block[0].1.strip_prefix("label:") {
            Some(l) => (Some(l.trim().to_string()), &block[1..]),
            None => (None, &block[..]),
        };
        let first_line = block[0].0;
        let element = match kind {
            GeneratorKind::Matrix => {
                if body.len() != size {
                    return Err(err(
                        first_line,
                        format!("expected {size} matrix rows, found {}", body.len()),
                    ));
                }
                let rows = body
                    .iter()
                    .map(|&(n, row)| {
                        let cells: Vec<&str> = if row.contains(',') {
                            row.split(',').map(str::trim).collect()
                        } else {
                            row.split_whitespace().collect()
                        };
                        if cells.len() != size {
                            return Err(err(n, format!("expected {size} entries, found {}", cells.len())));
                        }
                        cells
                            .iter()
                            .map(|c| parse_scalar(c).map_err(|e| err(n, e.to_string())))
                            .collect::<Result<Vec<QuadNumber>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                GroupElement::Matrix(Matrix::from_rows(rows))
            }
            GeneratorKind::Permutation => {
                let [(n, cycles)] = body else {
                    return Err(err(first_line, "expected one cycle-notation line"));
                };
                GroupElement::Permutation(Permutation::from_cycles(cycles, size).map_err(|e| err(*n, e.to_string()))?)
            }
        };
        generators.push((label, element));
    }
    if generators.is_empty() {
        return Err(err(text.lines().count().max(1), "no generators"));
    }
    Ok(GeneratorFile { kind, size, generators })
}

impl GeneratorFile {
    /// Closes the generators and carries their labels over.
    pub fn to_group(&self, max_order: usize) -> Result<Group> {
        let gens: Vec<GroupElement> = self.generators.iter().map(|(_, g)| g.clone()).collect();
        let mut group = Group::close_generators(&gens, max_order)?;
        for (label, g) in &self.generators {
            if let (Some(label), Some(i)) = (label, group.index_of_element(g)) {
                group.set_label(i, label.clone());
            }
        }
        Ok(group)
    }
}

/// Writes generators in the format read by [`parse_generators`].
pub fn write_generators(file: &GeneratorFile) -> String {
    let mut out = String::new();
    let (kind, key) = match file.kind {
        GeneratorKind::Matrix => ("matrix", "dimension"),
        GeneratorKind::Permutation => ("permutation", "degree"),
    };
    let _ = writeln!(out, "kind: {kind}\n{key}: {}", file.size);
    for (label, g) in &file.generators {
        out.push('\n');
        if let Some(l) = label {
            let _ = writeln!(out, "label: {l}");
        }
        match g {
            GroupElement::Matrix(m) => {
                for r in 0..m.nrows() {
                    let cells: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "{}", cells.join(", "));
                }
            }
            GroupElement::Permutation(p) => {
                let _ = writeln!(out, "{p}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_MAX_ORDER;

    #[test]
    fn matrix_file() {
        let text = "# D3 in the plane\nkind: matrix\ndimension: 2\n\nlabel: r\n-1/2, -sqrt(3)/2\nsqrt(3)/2, -1/2\n\nlabel: m\n1 0\n0 -1\n";
        let file = parse_generators(text).unwrap();
        assert_eq!(file.kind, GeneratorKind::Matrix);
        assert_eq!(file.generators.len(), 2);
        let g = file.to_group(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.element_order(g.index_of("r").unwrap()), 3);
        assert_eq!(parse_generators(&write_generators(&file)).unwrap(), file);
    }

    #[test]
    fn permutation_file() {
        let text = "kind: permutation\ndegree: 4\n\n(0 1 2 3)\n\nlabel: s\n(0 1)\n";
        let file = parse_generators(text).unwrap();
        let g = file.to_group(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.index_of("s").is_ok());
    }

    #[test]
    fn identity_only() {
        let text = "kind: matrix\ndimension: 1\nlabel: E\n1\n";
        let g = parse_generators(text).unwrap().to_group(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.label(0), "E");
    }

    #[test]
    fn errors() {
        let cases = [
            ("dimension: 2\n1 0\n0 1\n", 1),
            ("kind: matrix\ndimension: 2\n1 0\n", 3),
            ("kind: matrix\ndimension: 2\n1 0\n0 x\n", 4),
            ("kind: permutation\ndegree: 3\n(0 5)\n", 3),
            ("kind: tensor\n", 1),
        ];
        for (text, line) in cases {
            match parse_generators(text) {
                Err(Error::Parse { pos, .. }) => assert_eq!(pos, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
