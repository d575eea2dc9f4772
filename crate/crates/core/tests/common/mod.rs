//! Oracles that share no code path with the library's generators.
#![allow(dead_code)]

use std::collections::BTreeSet;

use uniflag_core::{CartanMatrix, CartanType, DynkinDiagram, Family};

/// Positive roots as the positive part of the Weyl orbit of the simple
/// roots, closed under simple reflections.
pub fn weyl_orbit_positive_roots(cartan: &CartanMatrix) -> BTreeSet<Vec<i32>> {
    let n = cartan.rank();
    let reflect = |v: &[i32], i: usize| -> Vec<i32> {
        let c: i32 = (0..n).map(|k| v[k] * cartan.get(k, i)).sum();
        let mut w = v.to_vec();
        w[i] -= c;
        w
    };
    let mut all: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i32>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for v in &frontier {
        all.insert(v.clone());
    }
    while let Some(v) = frontier.pop() {
        for i in 0..n {
            let w = reflect(&v, i);
            if all.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    all.into_iter()
        .filter(|v| v.iter().all(|&a| a >= 0))
        .collect()
}

/// Textbook `|Φ⁺|`, written out independently of the library.
pub fn expected_root_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

/// Every connected type of rank at most `max`.
pub fn connected_types(max: usize) -> Vec<CartanType> {
    CartanType::all_up_to(max)
}

pub fn diagram(t: CartanType) -> DynkinDiagram {
    DynkinDiagram::connected(t)
}

/// All vectors of length `n` with entries in `values`.
pub fn all_tags(n: usize, values: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// `#{L ∈ Φ⁺ : supp(L) ⊆ I_0(j), a_j = 1}`, filtering the full root list.
pub fn m_by_filter(roots: &BTreeSet<Vec<i32>>, component: &[usize], j: usize) -> usize {
    roots
        .iter()
        .filter(|r| r[j] == 1)
        .filter(|r| {
            r.iter()
                .enumerate()
                .all(|(i, &a)| a == 0 || component.contains(&i))
        })
        .count()
}

/// Expected m_j rows, written out by hand.
pub fn m_table_row(family: Family, n: usize) -> Vec<usize> {
    (1..=n)
        .map(|j| match family {
            Family::A => j * (n + 1 - j),
            Family::B => j * (2 * n - 2 * j + 1),
            Family::C => {
                if j < n {
                    j * (2 * n - 2 * j)
                } else {
                    n * (n + 1) / 2
                }
            }
            Family::D => {
                if j + 2 < n {
                    j * (2 * n - 2 * j)
                } else if j + 2 == n {
                    4 * (n - 2)
                } else {
                    n * (n - 1) / 2
                }
            }
            Family::E => match n {
                6 => [16, 20, 20, 18, 20, 16][j - 1],
                7 => [32, 35, 30, 24, 30, 32, 27][j - 1],
                _ => [64, 56, 42, 30, 40, 48, 54, 56][j - 1],
            },
            Family::F => [14, 12, 6, 8][j - 1],
            Family::G => [2, 4][j - 1],
        })
        .collect()
}
