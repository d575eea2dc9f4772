//! Dynkin diagrams of finite type and their Cartan matrices.
//!
//! Simple roots of a connected diagram are numbered the way Bourbaki and
//! Humphreys do:
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 - 2 - ... - (n-1) => n          (node n short)
//! C_n  1 - 2 - ... - (n-1) <= n          (node n long)
//! D_n  1 - 2 - ... - (n-2) - (n-1),  (n-2) - n
//! E_n  1 - 3 - 4 - 5 - ... - n,  2 - 4
//! F_4  1 - 2 => 3 - 4                   (nodes 1, 2 long)
//! G_2  1 <≡ 2                           (node 1 short)
//! ```
//!
//! A diagram may be disconnected; `A2+B3` numbers the `A2` nodes 1, 2 and
//! the `B3` nodes 3, 4, 5. Subdiagrams keep their induced numbering, so each
//! component also records which node sits at which standard position.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A connected finite type such as `B3` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let out_of_range = |range| Error::RankOutOfRange {
            family,
            rank,
            range,
        };
        match family {
            Family::A if rank < 1 => return Err(out_of_range("n >= 1")),
            Family::B if rank < 2 => return Err(out_of_range("n >= 2")),
            Family::C if rank < 3 => return Err(out_of_range("n >= 3")),
            Family::D if rank < 4 => return Err(out_of_range("n >= 4")),
            Family::E if !(6..=8).contains(&rank) => {
                return Err(Error::NoSuchExceptional { family, rank })
            }
            Family::F if rank != 4 => return Err(Error::NoSuchExceptional { family, rank }),
            Family::G if rank != 2 => return Err(Error::NoSuchExceptional { family, rank }),
            _ => {}
        }
        if rank > NodeSet::CAPACITY {
            return Err(Error::RankTooLarge(rank));
        }
        Ok(CartanType { family, rank })
    }

    /// Every connected type with `rank <= max_rank`, in family order.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = CartanType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Edges between standard positions (0-based): `(a, b, multiplicity, long end)`.
    fn standard_edges(self) -> Vec<(usize, usize, u8, Option<usize>)> {
        let n = self.rank;
        let mut edges = Vec::new();
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    edges.push((i, i + 1, 1, None));
                }
            }
            Family::B | Family::C => {
                for i in 0..n - 2 {
                    edges.push((i, i + 1, 1, None));
                }
                let long = if self.family == Family::B {
                    n - 2
                } else {
                    n - 1
                };
                edges.push((n - 2, n - 1, 2, Some(long)));
            }
            Family::D => {
                for i in 0..n - 2 {
                    edges.push((i, i + 1, 1, None));
                }
                edges.push((n - 3, n - 1, 1, None));
            }
            Family::E => {
                edges.push((0, 2, 1, None));
                edges.push((1, 3, 1, None));
                for i in 2..n - 1 {
                    edges.push((i, i + 1, 1, None));
                }
            }
            Family::F => {
                edges.push((0, 1, 1, None));
                edges.push((1, 2, 2, Some(1)));
                edges.push((2, 3, 1, None));
            }
            Family::G => edges.push((0, 1, 3, Some(1))),
        }
        edges
    }

    /// The Cartan matrix in standard numbering.
    pub fn standard_cartan(self) -> CartanMatrix {
        let n = self.rank;
        let mut c = vec![vec![0i32; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b, mult, long) in self.standard_edges() {
            set_edge(&mut c, a, b, mult, long);
        }
        CartanMatrix { entries: c }
    }

    /// `|Φ⁺|` by the usual closed forms.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, 8) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
            _ => unreachable!("validated in CartanType::new"),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let grammar = |reason: &str| Error::Grammar {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| grammar("empty component"))?;
        let family = Family::from_letter(letter)
            .ok_or_else(|| grammar("family letter must be one of A-G"))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(grammar("expected a rank after the family letter"));
        }
        let rank: usize = digits.parse().map_err(|_| grammar("rank is too large"))?;
        CartanType::new(family, rank)
    }
}

fn set_edge(c: &mut [Vec<i32>], a: usize, b: usize, mult: u8, long: Option<usize>) {
    let k = i32::from(mult);
    match long {
        Some(l) => {
            let s = if l == a { b } else { a };
            c[l][s] = -k;
            c[s][l] = -1;
        }
        None => {
            c[a][b] = -1;
            c[b][a] = -1;
        }
    }
}

/// `C[i][j]` is the pairing of simple root `i` with coroot `j`, i.e. the
/// intersection number of `-K_i` with the fiber class `Γ_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i32>>,
}

impl CartanMatrix {
    /// Checks the generalized Cartan matrix conditions plus the finite-type
    /// bound `C_ij * C_ji <= 3`. Finite type itself is not checked here.
    #[allow(clippy::needless_range_loop)]
    pub fn from_entries(entries: Vec<Vec<i32>>) -> Result<Self> {
        let n = entries.len();
        if n > NodeSet::CAPACITY {
            return Err(Error::RankTooLarge(n));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!(
                    "row {} has length {}",
                    i + 1,
                    row.len()
                )));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry {} is {}",
                    i + 1,
                    row[i]
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (entries[i][j], entries[j][i]);
                if a > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "entry ({},{}) = {a} is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (a == 0) != (b == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({0},{1}) and ({1},{0}) must vanish together",
                        i + 1,
                        j + 1
                    )));
                }
                if a * b > 3 {
                    return Err(Error::InvalidCartan(format!(
                        "product of entries ({0},{1}) and ({1},{0}) is {2} > 3",
                        i + 1,
                        j + 1,
                        a * b
                    )));
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.entries
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.entries[i][j] != 0
    }

    /// Principal submatrix on `nodes`, in the given order.
    pub fn restrict(&self, nodes: &[usize]) -> CartanMatrix {
        let entries = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.entries[i][j]).collect())
            .collect();
        CartanMatrix { entries }
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// smallest node.
    #[allow(clippy::needless_range_loop)]
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in 0..n {
                    if !seen[w] && self.adjacent(v, w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// An edge of the diagram, between 0-based nodes `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    /// The long end of a multiple edge; arrows point away from it.
    pub long: Option<usize>,
}

/// A connected component of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub cartan_type: CartanType,
    /// `positions[p]` is the node at standard position `p` (0-based).
    pub positions: Vec<usize>,
}

impl Component {
    pub fn nodes(&self) -> NodeSet {
        self.positions.iter().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    cartan: CartanMatrix,
    components: Vec<Component>,
}

/// A subdiagram together with its node map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubDiagram {
    pub diagram: DynkinDiagram,
    /// `nodes[new] = old`.
    pub nodes: Vec<usize>,
}

impl SubDiagram {
    pub fn old_to_new(&self, old: usize) -> Option<usize> {
        self.nodes.iter().position(|&o| o == old)
    }
}

impl DynkinDiagram {
    /// The rank-0 diagram.
    pub fn empty() -> Self {
        DynkinDiagram {
            cartan: CartanMatrix {
                entries: Vec::new(),
            },
            components: Vec::new(),
        }
    }

    /// Disjoint union of connected types, numbered consecutively.
    pub fn from_types(types: &[CartanType]) -> Result<Self> {
        let n: usize = types.iter().map(|t| t.rank).sum();
        if n > NodeSet::CAPACITY {
            return Err(Error::RankTooLarge(n));
        }
        let mut entries = vec![vec![0i32; n]; n];
        let mut components = Vec::with_capacity(types.len());
        let mut offset = 0;
        for &t in types {
            let block = t.standard_cartan();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    entries[offset + i][offset + j] = block.get(i, j);
                }
            }
            components.push(Component {
                cartan_type: t,
                positions: (offset..offset + t.rank).collect(),
            });
            offset += t.rank;
        }
        Ok(DynkinDiagram {
            cartan: CartanMatrix { entries },
            components,
        })
    }

    pub fn connected(t: CartanType) -> Self {
        DynkinDiagram::from_types(&[t]).expect("a single validated type fits")
    }

    /// Classifies every connected component of `cartan`.
    pub fn from_cartan(cartan: CartanMatrix) -> Result<Self> {
        let components = cartan
            .connected_components()
            .into_iter()
            .map(|nodes| classify(&cartan, &nodes))
            .collect::<Result<Vec<_>>>()?;
        Ok(DynkinDiagram { cartan, components })
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn types(&self) -> Vec<CartanType> {
        self.components.iter().map(|c| c.cartan_type).collect()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let n = self.rank();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let (x, y) = (self.cartan.get(a, b), self.cartan.get(b, a));
                if x == 0 {
                    continue;
                }
                let multiplicity = (x * y) as u8;
                let long = match multiplicity {
                    1 => None,
                    _ if x < y => Some(a),
                    _ => Some(b),
                };
                edges.push(Edge {
                    a,
                    b,
                    multiplicity,
                    long,
                });
            }
        }
        edges
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node < self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: node + 1,
                rank: self.rank(),
            })
        }
    }

    pub fn check_subset(&self, set: NodeSet) -> Result<()> {
        match set.difference(self.nodes()).iter().next() {
            Some(node) => self.check_node(node),
            None => Ok(()),
        }
    }

    /// Induced subdiagram on `set`, renumbered in increasing order.
    pub fn subdiagram(&self, set: NodeSet) -> Result<SubDiagram> {
        self.check_subset(set)?;
        let nodes: Vec<usize> = set.iter().collect();
        let diagram = DynkinDiagram::from_cartan(self.cartan.restrict(&nodes))
            .expect("induced subdiagrams of finite-type diagrams are finite type");
        Ok(SubDiagram { diagram, nodes })
    }

    /// Each connected component as its own diagram, by smallest node.
    pub fn split_components(&self) -> Vec<(NodeSet, DynkinDiagram)> {
        self.components
            .iter()
            .map(|c| {
                let set = c.nodes();
                let sub = self.subdiagram(set).expect("component nodes are in range");
                (set, sub.diagram)
            })
            .collect()
    }

    /// Index of the component containing `node`.
    pub fn component_of(&self, node: usize) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.positions.contains(&node))
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", c.cartan_type)?;
        }
        Ok(())
    }
}

/// Parses the `A2+B3` grammar. Case-insensitive; whitespace is ignored.
impl FromStr for DynkinDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Grammar {
                input: s.to_string(),
                reason: "empty diagram".into(),
            });
        }
        let types = compact
            .split('+')
            .map(|part| {
                part.parse::<CartanType>().map_err(|e| match e {
                    Error::Grammar { reason, .. } => Error::Grammar {
                        input: s.to_string(),
                        reason,
                    },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        DynkinDiagram::from_types(&types)
    }
}

/// Parses a diagram string. Alias for `str::parse`.
pub fn build_diagram(spec: &str) -> Result<DynkinDiagram> {
    spec.parse()
}

fn classify(cartan: &CartanMatrix, nodes: &[usize]) -> Result<Component> {
    let k = nodes.len();
    let bad = |why: &str| {
        Error::InvalidCartan(format!(
            "component on nodes {} {why}",
            nodes.iter().copied().collect::<NodeSet>()
        ))
    };
    let neighbours = |v: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&w| cartan.adjacent(v, w))
            .collect()
    };
    let mult = |a: usize, b: usize| (cartan.get(a, b) * cartan.get(b, a)) as u8;

    let edge_count: usize = nodes.iter().map(|&v| neighbours(v).len()).sum::<usize>() / 2;
    if edge_count + 1 != k {
        return Err(bad("is not a tree"));
    }
    if k == 1 {
        return Ok(Component {
            cartan_type: CartanType::new(Family::A, 1)?,
            positions: nodes.to_vec(),
        });
    }

    let degree = |v: usize| neighbours(v).len();
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
    let multiple: Vec<(usize, usize)> = nodes
        .iter()
        .flat_map(|&a| neighbours(a).into_iter().map(move |b| (a, b)))
        .filter(|&(a, b)| a < b && mult(a, b) > 1)
        .collect();

    let (family, positions) = if branch.is_empty() {
        // A path; walk it from an end.
        let ends: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) == 1).collect();
        let walk = |start: usize| {
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(next) = neighbours(cur).into_iter().find(|&w| w != prev) {
                prev = cur;
                cur = next;
                path.push(cur);
            }
            path
        };
        let long_end = |a: usize, b: usize| {
            if cartan.get(a, b) < cartan.get(b, a) {
                a
            } else {
                b
            }
        };
        match multiple.as_slice() {
            [] => (Family::A, walk(ends[0].min(ends[1]))),
            [(a, b)] if mult(*a, *b) == 3 => {
                if k != 2 {
                    return Err(bad("has a triple edge outside G2"));
                }
                let long = long_end(*a, *b);
                let short = if long == *a { *b } else { *a };
                (Family::G, vec![short, long])
            }
            [(a, b)] => {
                let long = long_end(*a, *b);
                let short = if long == *a { *b } else { *a };
                if k == 2 {
                    (Family::B, vec![long, short])
                } else if degree(*a) == 1 || degree(*b) == 1 {
                    let end = if degree(*a) == 1 { *a } else { *b };
                    let other_end = ends.iter().copied().find(|&e| e != end).unwrap();
                    let family = if end == short { Family::B } else { Family::C };
                    (family, walk(other_end))
                } else if k == 4 {
                    let start = ends
                        .iter()
                        .copied()
                        .find(|&e| neighbours(e)[0] == long)
                        .ok_or_else(|| bad("has a malformed F4 shape"))?;
                    (Family::F, walk(start))
                } else {
                    return Err(bad("has a double edge in an inadmissible position"));
                }
            }
            _ => return Err(bad("has more than one multiple edge")),
        }
    } else {
        if branch.len() > 1 || !multiple.is_empty() || degree(branch[0]) != 3 {
            return Err(bad("is not a Dynkin diagram"));
        }
        let centre = branch[0];
        // Arms as paths leaving the branch node, shortest first, ties by
        // the smaller far end.
        let mut arms: Vec<Vec<usize>> = neighbours(centre)
            .into_iter()
            .map(|first| {
                let mut arm = vec![first];
                let mut prev = centre;
                let mut cur = first;
                while let Some(next) = neighbours(cur).into_iter().find(|&w| w != prev) {
                    prev = cur;
                    cur = next;
                    arm.push(cur);
                }
                arm
            })
            .collect();
        arms.sort_by_key(|arm| (arm.len(), *arm.last().unwrap()));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        match lens.as_slice() {
            [1, 1, _] => {
                // D_k: long arm reversed, then the centre, then the two
                // leaves. In D4 every arm is a leaf; the smallest goes first.
                let long = if lens[2] == 1 {
                    arms.remove(0)
                } else {
                    arms.remove(2)
                };
                let mut pos: Vec<usize> = long.iter().rev().copied().collect();
                pos.push(centre);
                pos.push(arms[0][0]);
                pos.push(arms[1][0]);
                (Family::D, pos)
            }
            [1, 2, 2..=4] => {
                let mut pos = vec![arms[1][1], arms[0][0], arms[1][0], centre];
                pos.extend(arms[2].iter().copied());
                (Family::E, pos)
            }
            _ => return Err(bad("is not a Dynkin diagram")),
        }
    };

    let cartan_type = CartanType::new(family, k)?;
    if cartan.restrict(&positions) != cartan_type.standard_cartan() {
        return Err(bad(
            "does not match the standard Cartan matrix of its shape",
        ));
    }
    Ok(Component {
        cartan_type,
        positions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DynkinDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn a3_is_a_simple_path() {
        let g = d("A3");
        let edges: Vec<_> = g
            .edges()
            .iter()
            .map(|e| (e.a, e.b, e.multiplicity))
            .collect();
        assert_eq!(edges, vec![(0, 1, 1), (1, 2, 1)]);
    }

    #[test]
    fn g2_has_a_triple_edge() {
        let g = d("G2");
        let e = g.edges();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].multiplicity, 3);
        assert_eq!(e[0].long, Some(1));
        let mut off = [g.cartan().get(0, 1), g.cartan().get(1, 0)];
        off.sort();
        assert_eq!(off, [-3, -1]);
    }

    #[test]
    fn disjoint_union_numbers_consecutively() {
        let g = d("A1+A1");
        assert_eq!(g.rank(), 2);
        assert!(g.edges().is_empty());
        let comps = g.split_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].0, NodeSet::from_labels(&[1]));
        assert_eq!(comps[1].0, NodeSet::from_labels(&[2]));
        assert_eq!(comps[1].1.to_string(), "A1");
    }

    #[test]
    fn grammar_is_case_insensitive_and_ignores_spaces() {
        assert_eq!(d(" a2 + b3 "), d("A2+B3"));
        assert_eq!(d("e7").to_string(), "E7");
    }

    #[test]
    fn out_of_range_ranks_are_rejected() {
        let err = "D3".parse::<DynkinDiagram>().unwrap_err();
        assert_eq!(
            err,
            Error::RankOutOfRange {
                family: Family::D,
                rank: 3,
                range: "n >= 4"
            }
        );
        assert!(err.to_string().contains("n >= 4"));
        assert!("C2".parse::<DynkinDiagram>().is_err());
        assert!("B1".parse::<DynkinDiagram>().is_err());
        assert!("E9".parse::<DynkinDiagram>().is_err());
        assert!("F3".parse::<DynkinDiagram>().is_err());
        assert!("A0".parse::<DynkinDiagram>().is_err());
        assert!(matches!(
            "H3".parse::<DynkinDiagram>(),
            Err(Error::Grammar { .. })
        ));
        assert!(matches!(
            "A".parse::<DynkinDiagram>(),
            Err(Error::Grammar { .. })
        ));
        assert!(matches!(
            "A2+".parse::<DynkinDiagram>(),
            Err(Error::Grammar { .. })
        ));
        assert!(matches!(
            "".parse::<DynkinDiagram>(),
            Err(Error::Grammar { .. })
        ));
    }

    #[test]
    fn cartan_small_cases() {
        assert_eq!(d("A1").cartan().rows(), &[vec![2]]);
        assert_eq!(d("A2").cartan().rows(), &[vec![2, -1], vec![-1, 2]]);
        // B2: node 1 long, node 2 short.
        assert_eq!(d("B2").cartan().rows(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(d("G2").cartan().rows(), &[vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn cartan_is_block_diagonal_across_components() {
        let g = d("A2+G2");
        for i in 0..2 {
            for j in 2..4 {
                assert_eq!(g.cartan().get(i, j), 0);
                assert_eq!(g.cartan().get(j, i), 0);
            }
        }
    }

    #[test]
    fn subdiagram_of_e6_is_a3() {
        let sub = d("E6")
            .subdiagram(NodeSet::from_labels(&[1, 3, 4]))
            .unwrap();
        assert_eq!(sub.diagram.to_string(), "A3");
        assert_eq!(sub.nodes, vec![0, 2, 3]);
        assert_eq!(sub.old_to_new(3), Some(2));
        let edges: Vec<_> = sub.diagram.edges().iter().map(|e| (e.a, e.b)).collect();
        assert_eq!(edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn subdiagram_edge_cases() {
        assert_eq!(
            d("A3")
                .subdiagram(NodeSet::from_labels(&[1, 3]))
                .unwrap()
                .diagram
                .to_string(),
            "A1+A1"
        );
        let full = d("F4").subdiagram(NodeSet::full(4)).unwrap();
        assert_eq!(full.diagram, d("F4"));
        assert_eq!(full.nodes, vec![0, 1, 2, 3]);
        let empty = d("E8").subdiagram(NodeSet::empty()).unwrap();
        assert_eq!(empty.diagram.rank(), 0);
        assert!(empty.diagram.components().is_empty());
        assert!(d("A2").subdiagram(NodeSet::from_labels(&[3])).is_err());
    }

    #[test]
    fn components_of_a4_subdiagram() {
        let sub = d("A4")
            .subdiagram(NodeSet::from_labels(&[1, 2, 4]))
            .unwrap();
        let comps = sub.diagram.split_components();
        assert_eq!(comps.len(), 2);
        // Renumbered: old {1,2} -> new {1,2}, old {4} -> new {3}.
        assert_eq!(comps[0].0, NodeSet::from_labels(&[1, 2]));
        assert_eq!(comps[0].1.to_string(), "A2");
        assert_eq!(comps[1].0, NodeSet::from_labels(&[3]));
        assert_eq!(comps[1].1.to_string(), "A1");
        assert_eq!(d("E8").split_components().len(), 1);
    }

    #[test]
    fn subdiagrams_recognise_non_standard_numbering() {
        // E6 nodes 2,3,4: path 2-4-3.
        let sub = d("E6")
            .subdiagram(NodeSet::from_labels(&[2, 3, 4]))
            .unwrap();
        assert_eq!(sub.diagram.to_string(), "A3");
        assert_eq!(sub.diagram.components()[0].positions, vec![0, 2, 1]);
        // F4 nodes 2,3,4: 2 => 3 - 4 is C3 read from node 4.
        let sub = d("F4")
            .subdiagram(NodeSet::from_labels(&[2, 3, 4]))
            .unwrap();
        assert_eq!(sub.diagram.to_string(), "C3");
        let sub = d("F4")
            .subdiagram(NodeSet::from_labels(&[1, 2, 3]))
            .unwrap();
        assert_eq!(sub.diagram.to_string(), "B3");
        // D5 minus the end of the long arm is D4; minus the branch is A2+A1+A1.
        assert_eq!(
            d("D5")
                .subdiagram(NodeSet::from_labels(&[2, 3, 4, 5]))
                .unwrap()
                .diagram
                .to_string(),
            "D4"
        );
        assert_eq!(
            d("D5")
                .subdiagram(NodeSet::from_labels(&[1, 2, 4, 5]))
                .unwrap()
                .diagram
                .to_string(),
            "A2+A1+A1"
        );
        assert_eq!(
            d("E8")
                .subdiagram(NodeSet::from_labels(&[1, 2, 3, 4, 5, 6, 7]))
                .unwrap()
                .diagram
                .to_string(),
            "E7"
        );
        assert_eq!(
            d("E7")
                .subdiagram(NodeSet::from_labels(&[2, 3, 4, 5, 6, 7]))
                .unwrap()
                .diagram
                .to_string(),
            "D6"
        );
    }

    #[test]
    fn from_cartan_rejects_non_finite_shapes() {
        // Affine A1.
        assert!(CartanMatrix::from_entries(vec![vec![2, -2], vec![-2, 2]]).is_err());
        // Triangle (affine A2).
        let tri =
            CartanMatrix::from_entries(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]])
                .unwrap();
        assert!(DynkinDiagram::from_cartan(tri).is_err());
        assert!(CartanMatrix::from_entries(vec![vec![2, 0], vec![-1, 2]]).is_err());
        assert!(CartanMatrix::from_entries(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanMatrix::from_entries(vec![vec![1]]).is_err());
    }

    #[test]
    fn every_type_round_trips_through_its_cartan_matrix() {
        for t in CartanType::all_up_to(8) {
            let g = DynkinDiagram::connected(t);
            let back = DynkinDiagram::from_cartan(g.cartan().clone()).unwrap();
            assert_eq!(back.types(), vec![t], "{t}");
            assert_eq!(
                back.components()[0].positions,
                (0..t.rank).collect::<Vec<_>>(),
                "{t}"
            );
        }
    }
}
