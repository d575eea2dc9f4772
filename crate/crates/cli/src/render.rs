//! ASCII pictures of tagged Dynkin diagrams, and a parser for them.
//!
//! Tags sit above the nodes and 1-based indices below. Multiple edges use
//! `=` or `≡` with the arrow pointing from the long root to the short one.
//! The branch node of a `D` or `E` component hangs below the main chain:
//!
//! ```text
//! 0   1   0   0   0
//! o---o---o---o---o
//! 1   3   4   5   6
//!         |
//!         2
//!         o
//!         2
//! ```

use std::fmt;

use uniflag_core::dynkin::Component;
use uniflag_core::{CartanMatrix, DynkinDiagram, Family, Tag};

const GAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedDiagram(String);

impl RenderedDiagram {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for RenderedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot read diagram picture: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

/// A block of text lines, addressed by character column.
struct Canvas(Vec<Vec<char>>);

impl Canvas {
    fn put(&mut self, row: usize, col: usize, text: &str) {
        while self.0.len() <= row {
            self.0.push(Vec::new());
        }
        let line = &mut self.0[row];
        for (k, ch) in text.chars().enumerate() {
            while line.len() <= col + k {
                line.push(' ');
            }
            line[col + k] = ch;
        }
    }

    fn width(&self) -> usize {
        self.0.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn append(&mut self, other: Canvas, offset: usize) {
        for (row, line) in other.0.into_iter().enumerate() {
            let text: String = line.into_iter().collect();
            self.put(row, offset, &text);
        }
    }
}

/// Splits a component into its main chain and an optional hanging node
/// `(node, attached_to)`, both as node indices.
fn layout(comp: &Component) -> (Vec<usize>, Option<(usize, usize)>) {
    let p = &comp.positions;
    let n = p.len();
    match comp.cartan_type.family {
        Family::D => (p[..n - 1].to_vec(), Some((p[n - 1], p[n - 3]))),
        Family::E => {
            let mut chain = vec![p[0]];
            chain.extend_from_slice(&p[2..]);
            (chain, Some((p[1], p[3])))
        }
        _ => (p.clone(), None),
    }
}

fn connector(cartan: &CartanMatrix, a: usize, b: usize, len: usize) -> String {
    let k = cartan.get(a, b).abs().max(cartan.get(b, a).abs());
    let fill = match k {
        1 => '-',
        2 => '=',
        _ => '≡',
    };
    let mut chars = vec![fill; len];
    if k > 1 {
        chars[len / 2] = if cartan.get(a, b) == -k { '>' } else { '<' };
    }
    chars.into_iter().collect()
}

fn render_component(g: &DynkinDiagram, comp: &Component, tag: &Tag) -> Canvas {
    let label = |i: usize| (i + 1).to_string();
    let value = |i: usize| tag.get(i).to_string();
    let (chain, hanging) = layout(comp);
    let mut canvas = Canvas(Vec::new());
    let mut col = 0;
    let mut columns = Vec::new();
    for (k, &node) in chain.iter().enumerate() {
        let mut cell = label(node).len().max(value(node).len());
        if let Some((h, at)) = hanging {
            if at == node {
                cell = cell.max(label(h).len()).max(value(h).len());
            }
        }
        columns.push(col);
        canvas.put(0, col, &value(node));
        canvas.put(1, col, "o");
        canvas.put(2, col, &label(node));
        if let Some(&next) = chain.get(k + 1) {
            canvas.put(1, col + 1, &connector(g.cartan(), node, next, cell + 2));
        }
        col += cell + 3;
    }
    if let Some((h, at)) = hanging {
        let c = columns[chain.iter().position(|&x| x == at).unwrap()];
        canvas.put(3, c, "|");
        canvas.put(4, c, &value(h));
        canvas.put(5, c, "o");
        canvas.put(6, c, &label(h));
    }
    canvas
}

/// Renders a tagged diagram. Components sit side by side.
pub fn render(g: &DynkinDiagram, tag: &Tag) -> RenderedDiagram {
    let mut canvas = Canvas(Vec::new());
    let mut offset = 0;
    for comp in g.components() {
        let block = render_component(g, comp, tag);
        let width = block.width();
        canvas.append(block, offset);
        offset += width + GAP;
    }
    let lines: Vec<String> = canvas
        .0
        .into_iter()
        .map(|line| line.into_iter().collect::<String>().trim_end().to_string())
        .collect();
    let mut text = lines.join("\n");
    text.push('\n');
    RenderedDiagram(text)
}

fn number_at(line: Option<&Vec<char>>, col: usize, what: &str) -> Result<u32, ParseError> {
    let digits: String = line
        .map(|l| {
            l.iter()
                .skip(col)
                .take_while(|c| c.is_ascii_digit())
                .collect()
        })
        .unwrap_or_default();
    digits
        .parse()
        .map_err(|_| ParseError(format!("missing {what} at column {}", col + 1)))
}

/// Recovers the diagram and tag from a picture produced by [`render`].
pub fn parse(text: &str) -> Result<(DynkinDiagram, Tag), ParseError> {
    let lines: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    if lines.iter().all(|l| l.iter().all(|c| c.is_whitespace())) {
        return Ok((DynkinDiagram::empty(), Tag::new(Vec::new())));
    }
    let glyphs = lines
        .get(1)
        .ok_or_else(|| ParseError("no node row".into()))?;
    // (label, tag value, column) for every node, and (a, b, k, long) edges.
    let mut nodes: Vec<(u32, u32, usize)> = Vec::new();
    let mut edges: Vec<(usize, usize, i32, Option<usize>)> = Vec::new();
    let mut prev: Option<usize> = None;
    let mut col = 0;
    while col < glyphs.len() {
        match glyphs[col] {
            'o' => {
                let label = number_at(lines.get(2), col, "index")?;
                let value = number_at(lines.first(), col, "tag")?;
                nodes.push((label, value, col));
                prev = Some(nodes.len() - 1);
                col += 1;
            }
            ' ' => {
                prev = None;
                col += 1;
            }
            '-' | '=' | '≡' => {
                let start = col;
                while col < glyphs.len() && glyphs[col] != 'o' && glyphs[col] != ' ' {
                    col += 1;
                }
                let run = &glyphs[start..col];
                let a = prev
                    .ok_or_else(|| ParseError(format!("dangling edge at column {}", start + 1)))?;
                if glyphs.get(col) != Some(&'o') {
                    return Err(ParseError(format!("dangling edge at column {}", start + 1)));
                }
                let k = match run[0] {
                    '-' => 1,
                    '=' => 2,
                    _ => 3,
                };
                let long = if run.contains(&'>') {
                    Some(0)
                } else if run.contains(&'<') {
                    Some(1)
                } else {
                    None
                };
                edges.push((a, nodes.len(), k, long));
            }
            other => {
                return Err(ParseError(format!(
                    "unexpected '{other}' at column {}",
                    col + 1
                )))
            }
        }
    }
    for (col, ch) in lines.get(3).into_iter().flatten().enumerate() {
        if *ch != '|' {
            continue;
        }
        let at = nodes
            .iter()
            .position(|&(_, _, c)| c == col)
            .ok_or_else(|| ParseError(format!("branch at column {} has no node", col + 1)))?;
        if lines.get(5).and_then(|l| l.get(col)) != Some(&'o') {
            return Err(ParseError(format!(
                "branch at column {} has no node",
                col + 1
            )));
        }
        let label = number_at(lines.get(6), col, "index")?;
        let value = number_at(lines.get(4), col, "tag")?;
        nodes.push((label, value, usize::MAX));
        edges.push((at, nodes.len() - 1, 1, None));
    }

    let n = nodes.len();
    let mut index = vec![usize::MAX; n];
    let mut tag = vec![0; n];
    for (k, &(label, value, _)) in nodes.iter().enumerate() {
        let i = (label as usize)
            .checked_sub(1)
            .filter(|&i| i < n && index[i] == usize::MAX)
            .ok_or_else(|| ParseError(format!("node indices are not 1..{n}")))?;
        index[i] = k;
        tag[i] = value;
    }
    let mut position = vec![0; n];
    for (i, &k) in index.iter().enumerate() {
        position[k] = i;
    }
    let mut entries = vec![vec![0; n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b, k, long) in edges {
        let (a, b) = (position[a], position[b]);
        let (ab, ba) = match long {
            None => (-1, -1),
            Some(0) => (-k, -1),
            Some(_) => (-1, -k),
        };
        entries[a][b] = ab;
        entries[b][a] = ba;
    }
    let cartan = CartanMatrix::from_entries(entries).map_err(|e| ParseError(e.to_string()))?;
    let diagram = DynkinDiagram::from_cartan(cartan).map_err(|e| ParseError(e.to_string()))?;
    Ok((diagram, Tag::new(tag)))
}
