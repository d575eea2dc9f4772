//! Admissible orderings of `Φ⁺` compatible with a chain of node subsets, and
//! the filtration plans they induce on the relative tangent bundle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsys::{canonical_cmp, Root, RootSystem};

/// `∅ = J_0 ⊊ J_1 ⊊ .. ⊊ J_{k+1} = D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chain {
    members: Vec<NodeSet>,
}

impl Chain {
    /// `∅ ⊊ D`.
    pub fn trivial(rank: usize) -> Self {
        let mut members = vec![NodeSet::empty()];
        if rank > 0 {
            members.push(NodeSet::full(rank));
        }
        Chain { members }
    }

    /// Adds the endpoints `∅` and `D` when they are missing, then checks that
    /// the chain is strictly increasing inside `D`.
    pub fn new(members: &[NodeSet], rank: usize) -> Result<Self> {
        let full = NodeSet::full(rank);
        let mut all = Vec::with_capacity(members.len() + 2);
        if members.first() != Some(&NodeSet::empty()) {
            all.push(NodeSet::empty());
        }
        all.extend_from_slice(members);
        if all.last() != Some(&full) {
            all.push(full);
        }
        for (position, w) in all.windows(2).enumerate() {
            if !w[0].is_subset(w[1]) || w[0] == w[1] {
                return Err(Error::ChainNotIncreasing {
                    position,
                    previous: w[0],
                    current: w[1],
                });
            }
        }
        if let Some(bad) = members.iter().find(|m| !m.is_subset(full)) {
            return Err(Error::NodeOutOfRange {
                node: bad.difference(full).iter().next().unwrap() + 1,
                rank,
            });
        }
        Ok(Chain { members: all })
    }

    /// All members, endpoints included.
    pub fn members(&self) -> &[NodeSet] {
        &self.members
    }

    /// The members `J_1, .., J_k` strictly between the endpoints.
    pub fn interior(&self) -> &[NodeSet] {
        let len = self.members.len();
        if len <= 2 {
            &[]
        } else {
            &self.members[1..len - 1]
        }
    }

    /// Index of the smallest member containing `support`.
    fn block_of(&self, support: NodeSet) -> usize {
        self.members
            .iter()
            .position(|m| support.is_subset(*m))
            .expect("the last member is D")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleOrdering {
    pub sequence: Vec<Root>,
    pub chain: Chain,
}

/// Orders `Φ⁺` by chain block, then height, then coefficients.
pub fn admissible_order(rs: &RootSystem, chain: &Chain) -> AdmissibleOrdering {
    let mut sequence: Vec<Root> = rs.roots().to_vec();
    sequence.sort_by(|a, b| {
        chain
            .block_of(a.support())
            .cmp(&chain.block_of(b.support()))
            .then_with(|| canonical_cmp(a, b))
    });
    AdmissibleOrdering {
        sequence,
        chain: chain.clone(),
    }
}

/// Outcome of [`is_admissible`]. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Admissibility {
    Pass,
    /// `L_j + L_{j'} = L_{j''}` with `j'' < max(j, j')`.
    SumOrder {
        j: usize,
        j2: usize,
        j3: usize,
    },
    /// The prefix of length `|Φ⁺(J_r)|` contains a root outside `Φ⁺(J_r)`.
    Prefix {
        member: usize,
        root: Root,
    },
}

impl Admissibility {
    pub fn is_pass(&self) -> bool {
        matches!(self, Admissibility::Pass)
    }
}

/// Checks both conditions by direct scan: every pair `j < j'` whose sum is a
/// root, then each interior chain member's prefix. Reports the first failure.
pub fn is_admissible(rs: &RootSystem, sequence: &[Root], chain: &Chain) -> Result<Admissibility> {
    let m = rs.len();
    if sequence.len() != m {
        return Err(Error::NotAPermutation(format!(
            "expected {m} roots, got {}",
            sequence.len()
        )));
    }
    // position_of[root index] = position in `sequence`.
    let mut position_of = vec![usize::MAX; m];
    for (p, r) in sequence.iter().enumerate() {
        let k = rs
            .position(r.coeffs())
            .ok_or_else(|| Error::NotAPermutation(format!("{r} is not a positive root")))?;
        if position_of[k] != usize::MAX {
            return Err(Error::NotAPermutation(format!("{r} appears twice")));
        }
        position_of[k] = p;
    }

    let mut sum = vec![0; rs.rank()];
    for a in 0..m {
        for b in a + 1..m {
            for (s, (x, y)) in sum
                .iter_mut()
                .zip(sequence[a].coeffs().iter().zip(sequence[b].coeffs()))
            {
                *s = x + y;
            }
            if let Some(k) = rs.position(&sum) {
                let c = position_of[k];
                if c < b {
                    return Ok(Admissibility::SumOrder {
                        j: a + 1,
                        j2: b + 1,
                        j3: c + 1,
                    });
                }
            }
        }
    }

    for (r, &member) in chain.members().iter().enumerate() {
        let size = rs.phi_plus_subset(member).len();
        if let Some(root) = sequence[..size]
            .iter()
            .find(|x| !x.support().is_subset(member))
        {
            return Ok(Admissibility::Prefix {
                member: r,
                root: root.clone(),
            });
        }
    }
    Ok(Admissibility::Pass)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Breakpoint {
    pub member: NodeSet,
    /// `m - |Φ⁺(J_r)|`: from this index on, the filtration equals the
    /// relative tangent bundle of `Y → Y_{J_r}`.
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationPlan {
    pub ordering: AdmissibleOrdering,
    /// Entry `r` is `L_{m-r}`, the class of the `r`-th quotient.
    pub quotient_classes: Vec<Root>,
    pub breakpoints: Vec<Breakpoint>,
}

pub fn filtration_plan(rs: &RootSystem, chain: &Chain) -> FiltrationPlan {
    let ordering = admissible_order(rs, chain);
    let quotient_classes = ordering.sequence.iter().rev().cloned().collect();
    let m = rs.len();
    let breakpoints = chain
        .members()
        .iter()
        .map(|&member| Breakpoint {
            member,
            index: m - rs.phi_plus_subset(member).len(),
        })
        .collect();
    FiltrationPlan {
        ordering,
        quotient_classes,
        breakpoints,
    }
}

impl FiltrationPlan {
    /// Vector sum of the quotient classes.
    pub fn class_sum(&self) -> Vec<i64> {
        let n = self.quotient_classes.first().map_or(0, Root::rank);
        let mut sum = vec![0i64; n];
        for q in &self.quotient_classes {
            for (s, &a) in sum.iter_mut().zip(q.coeffs()) {
                *s += i64::from(a);
            }
        }
        sum
    }
}
