//! Instance file formats.
//!
//! Every file is a header line `p <kind> <params...>` followed by a
//! kind-specific body; lines starting with `#` are comments and blank
//! lines are ignored. Kinds:
//!
//! ```text
//! p tournament <n>          n rows of n chars in {0,1}, row i col j = arc i->j
//! p coloring <n> <k>        n space-separated color ids (k distinct)
//! p h3 <n> <m>              m lines "a b c"
//! p graph <n> <m>           m lines "a b"
//! p cert odd-heavy-cycle <n> <len>        one line of len vertex ids
//! p cert all-pairs-blocked <n> <scope>    scope ids, then scope·(scope−1)
//!                                         lines "u v x y z"
//! ```
//!
//! `serialize` emits the canonical form: no comments, normalized
//! whitespace, one trailing newline per line. Parsing then serializing
//! reproduces a canonicalized file byte-for-byte.

use crate::graph::Graph;
use crate::hypergraph::Hypergraph3;
use crate::light::{CertificateBody, NonTwoColorCertificate};
use crate::tournament::{Coloring, Tournament};
use crate::vset::VertexSet;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, col {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// A parsed instance file.
#[derive(Clone, Debug)]
pub enum Instance {
    Tournament(Tournament),
    Coloring(Coloring),
    Hypergraph(Hypergraph3),
    Graph(Graph),
    Certificate(NonTwoColorCertificate),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Tournament(_) => "tournament",
            Instance::Coloring(_) => "coloring",
            Instance::Hypergraph(_) => "h3",
            Instance::Graph(_) => "graph",
            Instance::Certificate(_) => "cert",
        }
    }
}

/// Content lines with their original 1-based line numbers.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .collect()
}

fn parse_usize(tok: &str, line: usize, col: usize) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::new(line, col, format!("expected a nonnegative integer, got {tok:?}")))
}

/// Column (1-based) at which whitespace-separated token `idx` starts.
fn token_col(line: &str, idx: usize) -> usize {
    let mut count = 0;
    let mut in_token = false;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            in_token = false;
        } else if !in_token {
            in_token = true;
            if count == idx {
                return i + 1;
            }
            count += 1;
        }
    }
    line.len() + 1
}

pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let lines = content_lines(text);
    let (&(header_no, header), rest) = lines
        .split_first()
        .ok_or_else(|| ParseError::new(1, 1, "empty file: missing 'p' header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.first() != Some(&"p") {
        return Err(ParseError::new(header_no, 1, "header must start with 'p'"));
    }
    let kind = *toks
        .get(1)
        .ok_or_else(|| ParseError::new(header_no, token_col(header, 1), "missing kind"))?;
    match kind {
        "tournament" => parse_tournament(header_no, header, &toks, rest),
        "coloring" => parse_coloring(header_no, header, &toks, rest),
        "h3" => parse_h3(header_no, header, &toks, rest),
        "graph" => parse_graph(header_no, header, &toks, rest),
        "cert" => parse_cert(header_no, header, &toks, rest),
        other => Err(ParseError::new(
            header_no,
            token_col(header, 1),
            format!("unknown kind {other:?}"),
        )),
    }
}

fn want_params(
    toks: &[&str],
    count: usize,
    header_no: usize,
    header: &str,
) -> Result<Vec<usize>, ParseError> {
    if toks.len() != 2 + count {
        return Err(ParseError::new(
            header_no,
            1,
            format!("header needs {count} parameter(s)"),
        ));
    }
    toks[2..]
        .iter()
        .enumerate()
        .map(|(i, tok)| parse_usize(tok, header_no, token_col(header, 2 + i)))
        .collect()
}

fn parse_tournament(
    header_no: usize,
    header: &str,
    toks: &[&str],
    rest: &[(usize, &str)],
) -> Result<Instance, ParseError> {
    let n = want_params(toks, 1, header_no, header)?[0];
    if rest.len() != n {
        return Err(ParseError::new(
            rest.last().map_or(header_no, |&(l, _)| l),
            1,
            format!("expected {n} rows, found {}", rest.len()),
        ));
    }
    // validate row shapes before allocating the n×n matrix
    for &(line_no, row) in rest {
        let row = row.trim();
        if row.len() != n {
            return Err(ParseError::new(
                line_no,
                row.len().min(n) + 1,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
    }
    let mut m = vec![vec![false; n]; n];
    for (i, &(line_no, row)) in rest.iter().enumerate() {
        for (j, ch) in row.trim().chars().enumerate() {
            m[i][j] = match ch {
                '0' => false,
                '1' => true,
                _ => {
                    return Err(ParseError::new(
                        line_no,
                        j + 1,
                        format!("expected '0' or '1', got {ch:?}"),
                    ))
                }
            };
        }
    }
    // validate with positions: self-loops on the row's line, pair
    // violations on the later row's line
    for (i, &(line_no, _)) in rest.iter().enumerate() {
        if m[i][i] {
            return Err(ParseError::new(line_no, i + 1, format!("self-loop at vertex {i}")));
        }
    }
    for j in 0..n {
        for i in 0..j {
            let line_no = rest[j].0;
            if m[i][j] && m[j][i] {
                return Err(ParseError::new(
                    line_no,
                    i + 1,
                    format!("digon between vertices {i} and {j}"),
                ));
            }
            if !m[i][j] && !m[j][i] {
                return Err(ParseError::new(
                    line_no,
                    i + 1,
                    format!("missing arc between vertices {i} and {j}"),
                ));
            }
        }
    }
    let t = Tournament::from_bool_matrix(n, &m)
        .map_err(|e| ParseError::new(header_no, 1, e.to_string()))?;
    Ok(Instance::Tournament(t))
}

fn parse_coloring(
    header_no: usize,
    header: &str,
    toks: &[&str],
    rest: &[(usize, &str)],
) -> Result<Instance, ParseError> {
    let params = want_params(toks, 2, header_no, header)?;
    let (n, k) = (params[0], params[1]);
    // sized by the actual body, not the claimed header
    let mut colors = Vec::new();
    for &(line_no, line) in rest {
        for (i, tok) in line.split_whitespace().enumerate() {
            colors.push(parse_usize(tok, line_no, token_col(line, i))? as u32);
        }
    }
    if colors.len() != n {
        return Err(ParseError::new(
            rest.last().map_or(header_no, |&(l, _)| l),
            1,
            format!("expected {n} colors, found {}", colors.len()),
        ));
    }
    let coloring = Coloring::new(colors);
    if coloring.palette_size() != k {
        return Err(ParseError::new(
            header_no,
            token_col(header, 3),
            format!("header claims {k} colors, body uses {}", coloring.palette_size()),
        ));
    }
    Ok(Instance::Coloring(coloring))
}

fn parse_id_line(
    line_no: usize,
    line: &str,
    want: usize,
    n: usize,
) -> Result<Vec<usize>, ParseError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != want {
        return Err(ParseError::new(
            line_no,
            1,
            format!("expected {want} ids, found {}", toks.len()),
        ));
    }
    toks.iter()
        .enumerate()
        .map(|(i, tok)| {
            let v = parse_usize(tok, line_no, token_col(line, i))?;
            if v >= n {
                Err(ParseError::new(
                    line_no,
                    token_col(line, i),
                    format!("vertex {v} out of range for n={n}"),
                ))
            } else {
                Ok(v)
            }
        })
        .collect()
}

fn parse_h3(
    header_no: usize,
    header: &str,
    toks: &[&str],
    rest: &[(usize, &str)],
) -> Result<Instance, ParseError> {
    let params = want_params(toks, 2, header_no, header)?;
    let (n, m) = (params[0], params[1]);
    if rest.len() != m {
        return Err(ParseError::new(
            rest.last().map_or(header_no, |&(l, _)| l),
            1,
            format!("expected {m} edges, found {}", rest.len()),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for &(line_no, line) in rest {
        let ids = parse_id_line(line_no, line, 3, n)?;
        edges.push([ids[0], ids[1], ids[2]]);
        // report duplicate/degenerate edges at this line
        if let Err(e) = Hypergraph3::new(n, edges.clone()) {
            return Err(ParseError::new(line_no, 1, e.to_string()));
        }
    }
    let h = Hypergraph3::new(n, edges).map_err(|e| ParseError::new(header_no, 1, e.to_string()))?;
    Ok(Instance::Hypergraph(h))
}

fn parse_graph(
    header_no: usize,
    header: &str,
    toks: &[&str],
    rest: &[(usize, &str)],
) -> Result<Instance, ParseError> {
    let params = want_params(toks, 2, header_no, header)?;
    let (n, m) = (params[0], params[1]);
    if rest.len() != m {
        return Err(ParseError::new(
            rest.last().map_or(header_no, |&(l, _)| l),
            1,
            format!("expected {m} edges, found {}", rest.len()),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for &(line_no, line) in rest {
        let ids = parse_id_line(line_no, line, 2, n)?;
        edges.push((ids[0], ids[1]));
        if let Err(e) = Graph::new(n, edges.clone()) {
            return Err(ParseError::new(line_no, 1, e.to_string()));
        }
    }
    let g = Graph::new(n, edges).map_err(|e| ParseError::new(header_no, 1, e.to_string()))?;
    Ok(Instance::Graph(g))
}

fn parse_cert(
    header_no: usize,
    header: &str,
    toks: &[&str],
    rest: &[(usize, &str)],
) -> Result<Instance, ParseError> {
    let variant = *toks
        .get(2)
        .ok_or_else(|| ParseError::new(header_no, token_col(header, 2), "missing cert variant"))?;
    match variant {
        "odd-heavy-cycle" => {
            if toks.len() != 5 {
                return Err(ParseError::new(header_no, 1, "header needs <n> <len>"));
            }
            let n = parse_usize(toks[3], header_no, token_col(header, 3))?;
            let len = parse_usize(toks[4], header_no, token_col(header, 4))?;
            if rest.len() != 1 {
                return Err(ParseError::new(
                    rest.last().map_or(header_no, |&(l, _)| l),
                    1,
                    format!("expected exactly one cycle line, found {}", rest.len()),
                ));
            }
            let (line_no, line) = rest[0];
            let cycle = parse_id_line(line_no, line, len, n)?;
            Ok(Instance::Certificate(NonTwoColorCertificate {
                scope: VertexSet::full(n),
                body: CertificateBody::OddHeavyCycle { cycle },
            }))
        }
        "all-pairs-blocked" => {
            if toks.len() != 5 {
                return Err(ParseError::new(header_no, 1, "header needs <n> <scope_size>"));
            }
            let n = parse_usize(toks[3], header_no, token_col(header, 3))?;
            let scope_size = parse_usize(toks[4], header_no, token_col(header, 4))?;
            let &(line_no, line) = rest
                .first()
                .ok_or_else(|| ParseError::new(header_no, 1, "missing scope line"))?;
            let scope_ids = parse_id_line(line_no, line, scope_size, n)?;
            let scope = VertexSet::from_members(n, scope_ids.iter().copied());
            let want_pairs = scope_size * scope_size.saturating_sub(1);
            if rest.len() != 1 + want_pairs {
                return Err(ParseError::new(
                    rest.last().map_or(header_no, |&(l, _)| l),
                    1,
                    format!("expected {want_pairs} witness lines, found {}", rest.len() - 1),
                ));
            }
            let mut witnesses = BTreeMap::new();
            for &(line_no, line) in &rest[1..] {
                let ids = parse_id_line(line_no, line, 5, n)?;
                witnesses.insert((ids[0], ids[1]), [ids[2], ids[3], ids[4]]);
            }
            Ok(Instance::Certificate(NonTwoColorCertificate {
                scope,
                body: CertificateBody::AllPairsBlocked { witnesses },
            }))
        }
        other => Err(ParseError::new(
            header_no,
            token_col(header, 2),
            format!("unknown cert variant {other:?}"),
        )),
    }
}

pub fn serialize(instance: &Instance) -> String {
    let mut out = String::new();
    match instance {
        Instance::Tournament(t) => {
            let n = t.n();
            writeln!(out, "p tournament {n}").unwrap();
            for i in 0..n {
                for j in 0..n {
                    out.push(if t.has_arc(i, j) { '1' } else { '0' });
                }
                out.push('\n');
            }
        }
        Instance::Coloring(c) => {
            writeln!(out, "p coloring {} {}", c.len(), c.palette_size()).unwrap();
            let body: Vec<String> = c.colors().iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", body.join(" ")).unwrap();
        }
        Instance::Hypergraph(h) => {
            writeln!(out, "p h3 {} {}", h.n(), h.m()).unwrap();
            for e in h.edges() {
                writeln!(out, "{} {} {}", e[0], e[1], e[2]).unwrap();
            }
        }
        Instance::Graph(g) => {
            writeln!(out, "p graph {} {}", g.n(), g.edges().len()).unwrap();
            for &(a, b) in g.edges() {
                writeln!(out, "{a} {b}").unwrap();
            }
        }
        Instance::Certificate(cert) => match &cert.body {
            CertificateBody::OddHeavyCycle { cycle } => {
                writeln!(
                    out,
                    "p cert odd-heavy-cycle {} {}",
                    cert.scope.universe(),
                    cycle.len()
                )
                .unwrap();
                let body: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{}", body.join(" ")).unwrap();
            }
            CertificateBody::AllPairsBlocked { witnesses } => {
                writeln!(
                    out,
                    "p cert all-pairs-blocked {} {}",
                    cert.scope.universe(),
                    cert.scope.len()
                )
                .unwrap();
                let scope: Vec<String> = cert.scope.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{}", scope.join(" ")).unwrap();
                for (&(u, v), &[x, y, z]) in witnesses {
                    writeln!(out, "{u} {v} {x} {y} {z}").unwrap();
                }
            }
        },
    }
    out
}
