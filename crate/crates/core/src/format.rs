//! Plain-text structure files.
//!
//! ```text
//! # the 3-chain
//! kind module
//! size 3
//! names 0 u v
//! sum
//! 0 u v
//! u u v
//! v v v
//! ```
//!
//! `kind` is one of `module`, `poset`, `algebra`, `monoid`. `names` is
//! optional and defaults to `e0 ..`. Modules and algebras need a `sum`
//! block, algebras and monoids a `mul` block, posets a `leq` block of 0/1
//! rows. Monoids name their unit with `one`; in algebras the unit is the
//! element at index 1. Table entries are element names. `#` starts a
//! comment.

use std::fmt::Write as _;

use crate::algebra::{validate_algebra, FinAlgebra};
use crate::error::{Error, Result};
use crate::lattice::{default_names, validate_module, FinModule, FinPoset};
use crate::monoid::FinMonoid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureFile {
    Module(FinModule),
    Poset(FinPoset),
    Algebra(FinAlgebra),
    Monoid(FinMonoid),
}

impl StructureFile {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureFile::Module(_) => "module",
            StructureFile::Poset(_) => "poset",
            StructureFile::Algebra(_) => "algebra",
            StructureFile::Monoid(_) => "monoid",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Module,
    Poset,
    Algebra,
    Monoid,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<(usize, &'a str)>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, c) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
                match (c.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push((s + 1, &content[s..pos]));
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses a structure file and validates the structure it describes.
/// Syntax problems are `Parse` errors; well-formed tables that break the
/// axioms come back as the matching validation error.
pub fn parse(text: &str) -> Result<StructureFile> {
    let lines = tokenize(text);
    let mut kind = None;
    let mut size = None;
    let mut names: Option<Vec<String>> = None;
    let mut one: Option<(usize, usize, String)> = None;
    let mut blocks: Vec<(&str, usize, Vec<&Line>)> = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let line = &lines[i];
        let (col, key) = line.tokens[0];
        let args = &line.tokens[1..];
        let single = |what: &str| -> Result<(usize, &str)> {
            match args {
                [a] => Ok(*a),
                _ => Err(err(line.number, col, format!("`{what}` takes exactly one value"))),
            }
        };
        match key {
            "kind" => {
                let (c, v) = single("kind")?;
                kind = Some(match v {
                    "module" => Kind::Module,
                    "poset" => Kind::Poset,
                    "algebra" => Kind::Algebra,
                    "monoid" => Kind::Monoid,
                    _ => return Err(err(line.number, c, format!("unknown kind `{v}`"))),
                });
            }
            "size" => {
                let (c, v) = single("size")?;
                let n: usize = v
                    .parse()
                    .map_err(|_| err(line.number, c, format!("`{v}` is not a size")))?;
                if n == 0 {
                    return Err(err(line.number, c, "size must be positive"));
                }
                size = Some(n);
            }
            "names" => {
                if args.is_empty() {
                    return Err(err(line.number, col, "`names` needs at least one name"));
                }
                names = Some(args.iter().map(|(_, s)| s.to_string()).collect());
            }
            "one" => {
                let (c, v) = single("one")?;
                one = Some((line.number, c, v.to_string()));
            }
            "sum" | "mul" | "leq" => {
                if !args.is_empty() {
                    return Err(err(line.number, args[0].0, "block header takes no values"));
                }
                let n = size.ok_or_else(|| err(line.number, col, "`size` must come before tables"))?;
                if blocks.iter().any(|(k, _, _)| *k == key) {
                    return Err(err(line.number, col, format!("duplicate `{key}` block")));
                }
                let rows: Vec<&Line> = lines[i + 1..].iter().take(n).collect();
                if rows.len() < n {
                    let last = lines.last().map_or(line.number, |l| l.number);
                    return Err(err(last + 1, 1, format!("`{key}` block needs {n} rows")));
                }
                blocks.push((key, line.number, rows));
                i += n;
            }
            _ => return Err(err(line.number, col, format!("unknown keyword `{key}`"))),
        }
        i += 1;
    }
    let eof = lines.last().map_or(1, |l| l.number + 1);
    let kind = kind.ok_or_else(|| err(eof, 1, "missing `kind`"))?;
    let n = size.ok_or_else(|| err(eof, 1, "missing `size`"))?;
    let names = names.unwrap_or_else(|| default_names(n));
    if names.len() != n {
        return Err(err(eof, 1, format!("{} names for size {n}", names.len())));
    }
    let needed: &[&str] = match kind {
        Kind::Module => &["sum"],
        Kind::Poset => &["leq"],
        Kind::Algebra => &["sum", "mul"],
        Kind::Monoid => &["mul"],
    };
    for (k, line, _) in &blocks {
        if !needed.contains(k) {
            return Err(err(*line, 1, format!("`{k}` block does not belong to this kind")));
        }
    }
    let block = |k: &str| -> Result<&Vec<&Line>> {
        blocks
            .iter()
            .find(|(b, _, _)| *b == k)
            .map(|(_, _, rows)| rows)
            .ok_or_else(|| err(eof, 1, format!("missing `{k}` block")))
    };
    let table = |k: &str| -> Result<Vec<Vec<usize>>> {
        block(k)?
            .iter()
            .map(|row| {
                if row.tokens.len() != n {
                    return Err(err(row.number, 1, format!("expected {n} entries, found {}", row.tokens.len())));
                }
                row.tokens
                    .iter()
                    .map(|(c, t)| {
                        names
                            .iter()
                            .position(|x| x == t)
                            .ok_or_else(|| err(row.number, *c, format!("unknown element `{t}`")))
                    })
                    .collect()
            })
            .collect()
    };
    if let (Some((l, c, _)), false) = (&one, kind == Kind::Monoid) {
        return Err(err(*l, *c, "`one` is only used by monoids"));
    }
    match kind {
        Kind::Module => Ok(StructureFile::Module(validate_module(names.clone(), &table("sum")?)?)),
        Kind::Algebra => Ok(StructureFile::Algebra(validate_algebra(
            names.clone(),
            &table("sum")?,
            &table("mul")?,
        )?)),
        Kind::Monoid => {
            let unit = match &one {
                Some((l, c, v)) => names
                    .iter()
                    .position(|x| x == v)
                    .ok_or_else(|| err(*l, *c, format!("unknown element `{v}`")))?,
                None => 0,
            };
            Ok(StructureFile::Monoid(FinMonoid::new(names.clone(), &table("mul")?, unit)?))
        }
        Kind::Poset => {
            let rows = block("leq")?
                .iter()
                .map(|row| {
                    if row.tokens.len() != n {
                        return Err(err(row.number, 1, format!("expected {n} entries, found {}", row.tokens.len())));
                    }
                    row.tokens
                        .iter()
                        .map(|(c, t)| match *t {
                            "0" => Ok(false),
                            "1" => Ok(true),
                            _ => Err(err(row.number, *c, format!("expected 0 or 1, found `{t}`"))),
                        })
                        .collect()
                })
                .collect::<Result<Vec<Vec<bool>>>>()?;
            Ok(StructureFile::Poset(FinPoset::from_rows(names.clone(), &rows)?))
        }
    }
}

fn write_table(out: &mut String, key: &str, names: &[String], table: &[usize]) {
    let n = names.len();
    let _ = writeln!(out, "{key}");
    for row in table.chunks(n) {
        let cells: Vec<&str> = row.iter().map(|&x| names[x].as_str()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
}

fn header(out: &mut String, kind: &str, names: &[String]) {
    let _ = writeln!(out, "kind {kind}");
    let _ = writeln!(out, "size {}", names.len());
    let _ = writeln!(out, "names {}", names.join(" "));
}

pub fn write_module(m: &FinModule) -> String {
    let mut out = String::new();
    header(&mut out, "module", m.names());
    write_table(&mut out, "sum", m.names(), m.sum_table());
    out
}

pub fn write_algebra(a: &FinAlgebra) -> String {
    let mut out = String::new();
    header(&mut out, "algebra", a.names());
    write_table(&mut out, "sum", a.names(), a.sum_table());
    write_table(&mut out, "mul", a.names(), a.mul_table());
    out
}

pub fn write_monoid(m: &FinMonoid) -> String {
    let mut out = String::new();
    header(&mut out, "monoid", m.names());
    let _ = writeln!(out, "one {}", m.name(m.unit()));
    write_table(&mut out, "mul", m.names(), m.mul_table());
    out
}

pub fn write_poset(p: &FinPoset) -> String {
    let mut out = String::new();
    header(&mut out, "poset", p.names());
    let _ = writeln!(out, "leq");
    for row in p.leq_table().chunks(p.size()) {
        let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn write(s: &StructureFile) -> String {
    match s {
        StructureFile::Module(m) => write_module(m),
        StructureFile::Poset(p) => write_poset(p),
        StructureFile::Algebra(a) => write_algebra(a),
        StructureFile::Monoid(m) => write_monoid(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const M6: &str = "\
kind module
size 6
names 0 a b c d e
sum
0 a b c d e
a a d e d e
b d b c d e
c e c c e e
d d d e d e
e e e e e e
";

    #[test]
    fn parses_module() {
        let StructureFile::Module(m) = parse(M6).unwrap() else { panic!("not a module") };
        assert_eq!(m.size(), 6);
        assert_eq!(m.sum(1, 2), 4);
        assert!(m.is_modular());
    }

    #[test]
    fn round_trip() {
        let s = parse(M6).unwrap();
        assert_eq!(parse(&write(&s)).unwrap(), s);
        let g = StructureFile::Monoid(FinMonoid::cyclic_group(3));
        assert_eq!(parse(&write(&g)).unwrap(), g);
        let p = StructureFile::Poset(FinPoset::chain(3));
        assert_eq!(parse(&write(&p)).unwrap(), p);
        let a = StructureFile::Algebra(FinAlgebra::b1());
        assert_eq!(parse(&write(&a)).unwrap(), a);
    }

    #[test]
    fn comments_and_defaults() {
        let text = "# B1\nkind module\nsize 2 # two elements\nsum\ne0 e1\ne1 e1\n";
        let StructureFile::Module(m) = parse(text).unwrap() else { panic!("not a module") };
        assert_eq!(m.names(), ["e0", "e1"]);
    }

    #[test]
    fn errors_carry_positions() {
        let bad = M6.replace("c e c c e e", "c e c q e e");
        assert_eq!(
            parse(&bad),
            Err(Error::Parse {
                line: 8,
                col: 7,
                msg: "unknown element `q`".into()
            })
        );
        assert!(matches!(parse("kind ring\n"), Err(Error::Parse { line: 1, col: 6, .. })));
        assert!(matches!(parse("kind module\nsum\n"), Err(Error::Parse { line: 2, col: 1, .. })));
        assert!(matches!(
            parse("kind module\nsize 2\nsum\ne0 e1\n"),
            Err(Error::Parse { line: 5, .. })
        ));
        let swapped = "kind module\nsize 2\nsum\ne0 e0\ne1 e1\n";
        assert!(matches!(parse(swapped), Err(Error::NotCommutative(..))));
    }
}
