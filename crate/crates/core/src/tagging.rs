//! Tags of uniform flag bundles and the counts derived from them.
//!
//! A tag `(d_1, .., d_n)` records the degrees `K_j · Γ̄ = d_j` of the relative
//! canonical divisors on a minimal section over a curve of the family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinDiagram, Family};
use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsys::{Root, RootSystem};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tag(Vec<u32>);

impl Tag {
    pub fn new(entries: Vec<u32>) -> Self {
        Tag(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Tag(vec![0; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn check_rank(&self, diagram: &DynkinDiagram) -> Result<()> {
        if self.len() == diagram.rank() {
            Ok(())
        } else {
            Err(Error::TagLength {
                tag: self.len(),
                rank: diagram.rank(),
            })
        }
    }

    /// `I_0 = {i : d_i = 0}`.
    pub fn zero_set(&self) -> NodeSet {
        self.nodes_where(|d| d == 0)
    }

    /// `I_1 = {i : d_i <= 1}`.
    pub fn at_most_one_set(&self) -> NodeSet {
        self.nodes_where(|d| d <= 1)
    }

    fn nodes_where(&self, pred: impl Fn(u32) -> bool) -> NodeSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &d)| pred(d))
            .map(|(i, _)| i)
            .collect()
    }

    /// Entries on `nodes`, in that order.
    pub fn restrict(&self, nodes: &[usize]) -> Tag {
        Tag(nodes.iter().map(|&i| self.0[i]).collect())
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Comma-separated non-negative integers, e.g. `0,1,0`.
impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::TagLiteral(s.to_string()));
        }
        compact
            .split(',')
            .map(|x| {
                x.parse::<u32>()
                    .map_err(|_| Error::TagLiteral(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Tag)
    }
}

/// `(I_0, I_1)`.
pub fn zero_sets(tag: &Tag) -> (NodeSet, NodeSet) {
    (tag.zero_set(), tag.at_most_one_set())
}

fn check_one_node(diagram: &DynkinDiagram, tag: &Tag, j: usize) -> Result<()> {
    tag.check_rank(diagram)?;
    diagram.check_node(j)?;
    match tag.get(j) {
        1 => Ok(()),
        value => Err(Error::NotAOneNode { node: j + 1, value }),
    }
}

/// `I_0(j)`: nodes of the component through `j` of the subdiagram on
/// `I_0 ∪ {j}`. Requires `d_j = 1`.
pub fn component_of_one(diagram: &DynkinDiagram, tag: &Tag, j: usize) -> Result<NodeSet> {
    check_one_node(diagram, tag, j)?;
    let mut allowed = tag.zero_set();
    allowed.insert(j);
    let cartan = diagram.cartan();
    let mut seen = NodeSet::singleton(j);
    let mut stack = vec![j];
    while let Some(v) = stack.pop() {
        for w in allowed.difference(seen).iter() {
            if cartan.adjacent(v, w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    Ok(seen)
}

/// `m_j`: positive roots supported on `I_0(j)` with coefficient 1 at `j`.
///
/// Counts on a freshly generated root system of the subdiagram on `I_0(j)`.
pub fn m_value(diagram: &DynkinDiagram, tag: &Tag, j: usize) -> Result<usize> {
    let support = component_of_one(diagram, tag, j)?;
    let sub = diagram.subdiagram(support)?;
    let local_j = sub.old_to_new(j).expect("j lies in its own component");
    let rs = RootSystem::new(&sub.diagram);
    Ok(rs.roots().iter().filter(|r| r.coeff(local_j) == 1).count())
}

/// Tabulated `m_j` for a connected diagram, `j` 0-based.
pub fn m_closed_form(family: Family, rank: usize, j: usize) -> Result<usize> {
    let n = rank;
    crate::dynkin::CartanType::new(family, n)?;
    if j >= n {
        return Err(Error::NodeOutOfRange {
            node: j + 1,
            rank: n,
        });
    }
    let j = j + 1;
    let value = match family {
        Family::A => j * (n + 1 - j),
        Family::B => j * (2 * n - 2 * j + 1),
        Family::C if j < n => j * (2 * n - 2 * j),
        Family::C => n * (n + 1) / 2,
        Family::D if j + 2 < n => j * (2 * n - 2 * j),
        Family::D if j + 2 == n => 4 * (n - 2),
        Family::D => n * (n - 1) / 2,
        Family::E => {
            const E6: [usize; 6] = [16, 20, 20, 18, 20, 16];
            const E7: [usize; 7] = [32, 35, 30, 24, 30, 32, 27];
            const E8: [usize; 8] = [64, 56, 42, 30, 40, 48, 54, 56];
            match n {
                6 => E6[j - 1],
                7 => E7[j - 1],
                _ => E8[j - 1],
            }
        }
        Family::F => [14, 12, 6, 8][j - 1],
        Family::G => [2, 4][j - 1],
    };
    Ok(value)
}

/// `L · Γ̄ = -Σ a_i d_i`.
pub fn degree_on_minimal_section(root: &Root, tag: &Tag) -> i64 {
    -root
        .coeffs()
        .iter()
        .zip(tag.entries())
        .map(|(&a, &d)| i64::from(a) * i64::from(d))
        .sum::<i64>()
}

/// A weakly increasing splitting type `(a_0, .., a_r)` on a rational curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SplittingType(Vec<i64>);

impl SplittingType {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::SplittingTooShort(entries.len()));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotMonotone(entries));
        }
        Ok(SplittingType(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `r`, the rank of the associated `A_r`.
    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Successive differences `(a_1 - a_0, .., a_r - a_{r-1})`, placed on nodes
/// `1..r` of `A_r` in that order.
pub fn tag_from_splitting(st: &SplittingType) -> (DynkinDiagram, Tag) {
    let entries = st.entries();
    let tag = entries
        .windows(2)
        .map(|w| u32::try_from(w[1] - w[0]).expect("difference fits in u32"))
        .collect();
    let diagram = DynkinDiagram::connected(
        crate::dynkin::CartanType::new(Family::A, st.rank()).expect("rank >= 1"),
    );
    (diagram, Tag(tag))
}

/// Prefix sums, normalized so that `a_0 = 0`.
pub fn splitting_from_tag(diagram: &DynkinDiagram, tag: &Tag) -> Result<SplittingType> {
    tag.check_rank(diagram)?;
    let is_a = diagram.is_connected() && diagram.components()[0].cartan_type.family == Family::A;
    if !is_a {
        return Err(Error::NotTypeA(diagram.to_string()));
    }
    // Entries follow the standard positions of the A_r chain.
    let positions = &diagram.components()[0].positions;
    let mut entries = Vec::with_capacity(tag.len() + 1);
    let mut acc = 0i64;
    entries.push(acc);
    for &node in positions {
        acc += i64::from(tag.get(node));
        entries.push(acc);
    }
    SplittingType::new(entries)
}
