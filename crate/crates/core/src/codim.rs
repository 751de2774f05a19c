//! Codimension functions: integer labelings `d` with `d(lower) = d(upper) + 1`
//! across every cover.
//!
//! In a finite poset the direct codimension-one specializations are exactly
//! the covers, so existence is a difference-constraint problem on the Hasse
//! graph. [`solve`] propagates potentials breadth-first over each weakly
//! connected component and either returns the anchored labeling or a closed
//! walk whose signed length is nonzero.

use std::collections::VecDeque;
use std::fmt;

use indexmap::IndexMap;
use serde::Serialize;
use thiserror::Error;

use crate::analysis;
use crate::poset::SpectralPoset;

/// A labeling of points by integers, in point order.
pub type Labeling = IndexMap<String, i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodimError {
    #[error("labeling has no value for point `{0}`")]
    MissingValue(String),
}

/// Refutation of existence: a closed walk along covers. Stepping down a cover
/// contributes `+1`, stepping up contributes `-1`; any codimension function
/// would force the total to be zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// Closed walk; the first and last entries coincide.
    pub walk: Vec<String>,
    pub signed_length: i64,
}

impl Certificate {
    /// Re-checks the walk against `poset`: closed, every step a cover, and the
    /// recomputed signed length matches and is nonzero.
    pub fn verify(&self, poset: &SpectralPoset) -> bool {
        if self.walk.len() < 2 || self.walk.first() != self.walk.last() {
            return false;
        }
        let mut total = 0;
        for w in self.walk.windows(2) {
            if poset.is_cover(&w[1], &w[0]) {
                total += 1;
            } else if poset.is_cover(&w[0], &w[1]) {
                total -= 1;
            } else {
                return false;
            }
        }
        total != 0 && total == self.signed_length
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (signed length {})", self.walk.join(" -> "), self.signed_length)
    }
}

/// Outcome of [`solve`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CodimResult {
    /// Anchored so each weakly connected component has minimum value 0.
    Assignment(Labeling),
    Certificate(Certificate),
}

impl CodimResult {
    pub fn exists(&self) -> bool {
        matches!(self, CodimResult::Assignment(_))
    }

    pub fn assignment(&self) -> Option<&Labeling> {
        match self {
            CodimResult::Assignment(a) => Some(a),
            CodimResult::Certificate(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CodimResult::Certificate(c) => Some(c),
            CodimResult::Assignment(_) => None,
        }
    }
}

/// Decides whether a codimension function exists and produces either the
/// canonical one or a refuting walk.
pub fn solve(poset: &SpectralPoset) -> CodimResult {
    match solve_indices(poset) {
        Ok(values) => CodimResult::Assignment(labeling(poset, values)),
        Err(walk) => {
            let signed_length = signed_length(poset, &walk);
            CodimResult::Certificate(Certificate {
                walk: walk.iter().map(|&i| poset.name(i).to_string()).collect(),
                signed_length,
            })
        }
    }
}

/// Index-level solver. `Ok` holds the anchored values, `Err` a closed walk.
pub(crate) fn solve_indices(poset: &SpectralPoset) -> Result<Vec<i64>, Vec<usize>> {
    let n = poset.len();
    let mut value: Vec<Option<i64>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut component = vec![usize::MAX; n];

    for root in 0..n {
        if value[root].is_some() {
            continue;
        }
        let mut members = vec![root];
        value[root] = Some(0);
        component[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let vx = value[x].unwrap();
            for (next, v) in neighbours(poset, x, vx) {
                if value[next].is_none() {
                    value[next] = Some(v);
                    parent[next] = Some(x);
                    depth[next] = depth[x] + 1;
                    component[next] = root;
                    members.push(next);
                    queue.push_back(next);
                }
            }
        }

        // Every violated cover closes a fundamental cycle with the BFS tree;
        // report the shortest one.
        let mut best: Option<Vec<usize>> = None;
        for &(lo, up) in poset.cover_indices() {
            if component[lo] != root {
                continue;
            }
            if value[lo].unwrap() != value[up].unwrap() + 1 {
                let cycle = fundamental_cycle(&parent, &depth, lo, up);
                if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                    best = Some(cycle);
                }
            }
        }
        if let Some(cycle) = best {
            return Err(canonical_rotation(cycle));
        }

        let min = members.iter().map(|&m| value[m].unwrap()).min().unwrap();
        for &m in &members {
            value[m] = Some(value[m].unwrap() - min);
        }
    }
    Ok(value.into_iter().map(Option::unwrap).collect())
}

fn neighbours(poset: &SpectralPoset, x: usize, vx: i64) -> Vec<(usize, i64)> {
    let mut out: Vec<(usize, i64)> = poset
        .upper_covers(x)
        .iter()
        .map(|&u| (u, vx - 1))
        .chain(poset.lower_covers(x).iter().map(|&l| (l, vx + 1)))
        .collect();
    out.sort_unstable();
    out
}

/// Tree path `lo .. lca .. up` closed by the cover `up -> lo`.
fn fundamental_cycle(parent: &[Option<usize>], depth: &[usize], lo: usize, up: usize) -> Vec<usize> {
    let (mut a, mut b) = (lo, up);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a].unwrap();
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b].unwrap();
        right.push(b);
    }
    while a != b {
        a = parent[a].unwrap();
        b = parent[b].unwrap();
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    // lo -> ... -> lca -> ... -> up, then back to lo
    let mut cycle = left;
    cycle.extend(right);
    cycle
}

/// Rotates an open cycle (no repeated endpoint) to start at its least index,
/// picks the direction with the smaller second entry, and closes it.
fn canonical_rotation(cycle: Vec<usize>) -> Vec<usize> {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let forward: Vec<usize> = (0..k).map(|j| cycle[(start + j) % k]).collect();
    let backward: Vec<usize> = (0..k).map(|j| cycle[(start + k - j) % k]).collect();
    let mut walk = if k > 1 && backward[1] < forward[1] { backward } else { forward };
    walk.push(walk[0]);
    walk
}

fn signed_length(poset: &SpectralPoset, walk: &[usize]) -> i64 {
    walk.windows(2)
        .map(|w| if poset.upper_covers(w[1]).contains(&w[0]) { 1 } else { -1 })
        .sum()
}

fn labeling(poset: &SpectralPoset, values: Vec<i64>) -> Labeling {
    poset.points().iter().cloned().zip(values).collect()
}

pub(crate) fn valid_indices(poset: &SpectralPoset, d: &[i64]) -> bool {
    poset.cover_indices().iter().all(|&(lo, up)| d[lo] == d[up] + 1)
}

/// Whether `d` steps up by exactly one across every cover.
pub fn is_codim_function(poset: &SpectralPoset, d: &Labeling) -> Result<bool, CodimError> {
    let values = poset
        .points()
        .iter()
        .map(|p| d.get(p).copied().ok_or_else(|| CodimError::MissingValue(p.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(valid_indices(poset, &values))
}

/// `x -> codim(closure{x}, X)`; a codimension function on biequidimensional
/// spaces.
pub fn candidate_codim(poset: &SpectralPoset) -> Labeling {
    labeling(poset, (0..poset.len()).map(|i| poset.codim_in_space_at(i) as i64).collect())
}

/// `x -> -dim(closure{x})`.
pub fn candidate_neg_dim(poset: &SpectralPoset) -> Labeling {
    labeling(poset, (0..poset.len()).map(|i| -(poset.dim_at(i) as i64)).collect())
}

/// Holds iff every local poset is catenary and equidimensional, which is
/// exactly when [`candidate_codim`] is a codimension function.
pub fn local_rings_criterion(poset: &SpectralPoset) -> bool {
    analysis::local_rings_catenary_equidimensional(poset)
}
