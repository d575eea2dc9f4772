//! Positive roots of a finite-type root system.
//!
//! A root `L = -Σ a_i K_i` is stored by its coefficient vector `(a_1, .., a_n)`
//! over the simple roots. Only positive roots are materialized.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::dynkin::{CartanMatrix, DynkinDiagram};
use crate::error::{Error, Result};
use crate::nodeset::NodeSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    coeffs: Vec<i32>,
    height: u32,
    #[serde(skip)]
    support: NodeSet,
}

impl Root {
    /// Panics if a coefficient is negative or the vector is zero.
    pub fn new(coeffs: Vec<i32>) -> Self {
        assert!(
            coeffs.iter().all(|&a| a >= 0),
            "positive roots have non-negative coefficients"
        );
        let height = coeffs.iter().sum::<i32>() as u32;
        assert!(height >= 1, "the zero vector is not a root");
        let support = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i)
            .collect();
        Root {
            coeffs,
            height,
            support,
        }
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        Root::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i32 {
        self.coeffs[i]
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn support(&self) -> NodeSet {
        self.support
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// `L · Γ_j = Σ_i a_i C_ij`, the pairing with coroot `j`.
    pub fn pairing(&self, j: usize, cartan: &CartanMatrix) -> i32 {
        pairing(&self.coeffs, j, cartan)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Height, then larger coefficients on earlier nodes first.
pub fn canonical_cmp(a: &Root, b: &Root) -> Ordering {
    a.height
        .cmp(&b.height)
        .then_with(|| b.coeffs.cmp(&a.coeffs))
}

fn pairing(coeffs: &[i32], j: usize, cartan: &CartanMatrix) -> i32 {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, &a)| a * cartan.get(i, j))
        .sum()
}

/// Divisor `L` paired with the fiber class `Γ_j`.
pub fn pairing_with_fiber_class(root: &Root, j: usize, cartan: &CartanMatrix) -> i32 {
    root.pairing(j, cartan)
}

/// The simple reflection `r_i` on a coefficient vector:
/// `v ↦ v - <v, α_i^∨> α_i`.
pub fn simple_reflection(cartan: &CartanMatrix, i: usize, v: &mut [i32]) {
    let c = pairing(v, i, cartan);
    v[i] -= c;
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanMatrix,
    roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
}

impl RootSystem {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        positive_roots(diagram.cartan()).expect("validated diagrams are of finite type")
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// All positive roots in canonical order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn position(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn contains(&self, coeffs: &[i32]) -> bool {
        self.index.contains_key(coeffs)
    }

    /// `Φ⁺(J)`: roots supported on `set`.
    pub fn phi_plus_subset(&self, set: NodeSet) -> Vec<&Root> {
        self.roots
            .iter()
            .filter(|r| r.support().is_subset(set))
            .collect()
    }

    /// `Φ⁺ \ Φ⁺(I)`: positive representatives of the weights of the
    /// nilradical bundle for `I`. The bundle's summands are the
    /// corresponding negative roots.
    pub fn nilradical_weights(&self, set: NodeSet) -> Vec<&Root> {
        self.roots
            .iter()
            .filter(|r| !r.support().is_subset(set))
            .collect()
    }

    /// Coefficients of the relative anticanonical divisor, `Σ_{L ∈ Φ⁺} L`.
    pub fn relative_anticanonical(&self) -> Vec<i64> {
        let mut sum = vec![0i64; self.rank()];
        for r in &self.roots {
            for (s, &a) in sum.iter_mut().zip(r.coeffs()) {
                *s += i64::from(a);
            }
        }
        sum
    }

    /// The coefficient-wise maximal root of each connected component.
    pub fn highest_roots(&self) -> Vec<&Root> {
        self.cartan
            .connected_components()
            .into_iter()
            .filter_map(|comp| {
                let set: NodeSet = comp.into_iter().collect();
                self.roots
                    .iter()
                    .filter(|r| r.support().is_subset(set))
                    .max_by_key(|r| r.height())
            })
            .collect()
    }

    /// A reduced word `(l_1, .., l_m)` for the longest Weyl element,
    /// `w_0 = r_{l_1} ⋯ r_{l_m}`, with 0-based node indices.
    ///
    /// Grows `w` one letter at a time, always appending the smallest `i`
    /// with `w(α_i) > 0`; each such step adds exactly one inversion.
    pub fn longest_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut word: Vec<usize> = Vec::with_capacity(self.len());
        loop {
            let next = (0..n).find(|&i| {
                let mut v = vec![0; n];
                v[i] = 1;
                apply_word(&self.cartan, &word, &mut v);
                v.iter().all(|&a| a >= 0)
            });
            match next {
                Some(i) => word.push(i),
                None => return word,
            }
        }
    }

    /// The root system of the subdiagram on `set`, renumbered in increasing
    /// node order. Equals `Φ⁺(set)` with the other coordinates dropped.
    pub fn restrict(&self, set: NodeSet) -> RootSystem {
        let nodes: Vec<usize> = set.iter().collect();
        let cartan = self.cartan.restrict(&nodes);
        let roots: Vec<Root> = self
            .phi_plus_subset(set)
            .into_iter()
            .map(|r| Root::new(nodes.iter().map(|&i| r.coeff(i)).collect()))
            .collect();
        RootSystem::from_parts(cartan, roots)
    }

    fn from_parts(cartan: CartanMatrix, mut roots: Vec<Root>) -> RootSystem {
        roots.sort_by(canonical_cmp);
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coeffs.clone(), k))
            .collect();
        RootSystem {
            cartan,
            roots,
            index,
        }
    }
}

/// Applies `r_{word[0]} ⋯ r_{word[last]}` to `v`, rightmost letter first.
pub fn apply_word(cartan: &CartanMatrix, word: &[usize], v: &mut [i32]) {
    for &i in word.iter().rev() {
        simple_reflection(cartan, i, v);
    }
}

/// Generates `Φ⁺` by height, using root strings: for a root `β` and simple
/// root `α_i` with `β ≠ α_i`, `β + α_i` is a root iff `p - <β, α_i^∨> > 0`,
/// where `p` is the largest `k` with `β - k α_i` a root.
pub fn positive_roots(cartan: &CartanMatrix) -> Result<RootSystem> {
    let n = cartan.rank();
    let limit = 10 * n * n;
    let mut index: HashMap<Vec<i32>, usize> = HashMap::new();
    let mut roots: Vec<Root> = Vec::new();
    let mut level: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();

    while !level.is_empty() {
        level.sort_by(canonical_cmp);
        let start = roots.len();
        for r in level.drain(..) {
            index.insert(r.coeffs.clone(), roots.len());
            roots.push(r);
        }
        if roots.len() > limit {
            return Err(Error::GenerationLimit { limit });
        }
        let mut next: HashMap<Vec<i32>, ()> = HashMap::new();
        for r in &roots[start..] {
            for i in 0..n {
                let mut down = r.coeffs.clone();
                let mut p = 0;
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !index.contains_key(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing(&r.coeffs, i, cartan) > 0 {
                    let mut up = r.coeffs.clone();
                    up[i] += 1;
                    next.entry(up).or_insert(());
                }
            }
        }
        level = next.into_keys().map(Root::new).collect();
    }

    Ok(RootSystem {
        cartan: cartan.clone(),
        roots,
        index,
    })
}
