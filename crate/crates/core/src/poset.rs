//! Finite posets of points under specialization.
//!
//! Order convention used throughout the crate: `x <= y` iff `x` lies in the
//! closure of `{y}`. Generic points of irreducible components are therefore
//! the maximal elements and closed points are the minimal elements. A cover
//! `(lower, upper)` means `closure{lower}` is strictly contained in
//! `closure{upper}` with nothing in between.
//!
//! A point may carry an *infinite-family flag*: it then stands for countably
//! many pairwise incomparable points with identical strict relations to every
//! other point. Any chain uses at most one member of such a family, so the
//! flags never change a chain-length quantity; they only matter to
//! [`crate::analysis::noetherian_obstructions`].

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

/// Errors raised while building or querying a [`SpectralPoset`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("a space needs at least one point")]
    Empty,
    #[error("point `{0}` is declared twice")]
    DuplicatePoint(String),
    #[error("cover `{0} < {1}` is declared twice")]
    DuplicateCover(String, String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("covers contain a directed cycle through {}", .0.join(" < "))]
    Cycle(Vec<String>),
    #[error("cover `{0} < {1}` is implied by a longer path and must be removed")]
    NotReduced(String, String),
    #[error("points `{0}` and `{1}` are not comparable in that order")]
    NotComparable(String, String),
}

/// A strictly ascending chain of points. Its length counts strict steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Chain(Vec<String>);

impl Chain {
    pub fn new(elems: Vec<String>) -> Self {
        Chain(elems)
    }

    pub fn elems(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether every consecutive pair is a cover of `poset`.
    pub fn is_saturated(&self, poset: &SpectralPoset) -> bool {
        self.0.windows(2).all(|w| poset.is_cover(&w[0], &w[1]))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(" < "))
    }
}

/// Immutable finite poset with precomputed reachability and path tables.
#[derive(Clone)]
pub struct SpectralPoset {
    points: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    infinite: Vec<bool>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    topo: Vec<usize>,
    /// `above[x]` holds every `y` with `x < y`.
    above: Vec<FixedBitSet>,
    /// Shortest and longest Hasse path from `x` to `y`, `u32::MAX` when `x </= y`.
    min_len: Vec<Vec<u32>>,
    max_len: Vec<Vec<u32>>,
    dim: Vec<usize>,
    coheight: Vec<usize>,
}

const NONE: u32 = u32::MAX;

impl SpectralPoset {
    /// Validates raw input and builds the poset.
    ///
    /// Covers must already be a transitive reduction; a redundant pair is
    /// rejected rather than silently dropped.
    pub fn build<P, S, C, F>(points: P, covers: C, infinite: F) -> Result<Self, PosetError>
    where
        P: IntoIterator<Item = S>,
        S: Into<String>,
        C: IntoIterator<Item = (S, S)>,
        F: IntoIterator<Item = S>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(PosetError::DuplicatePoint(p.clone()));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| PosetError::UnknownPoint(name.to_string()))
        };
        let mut pairs = Vec::new();
        for (a, b) in covers {
            let (a, b): (String, String) = (a.into(), b.into());
            pairs.push((lookup(&a)?, lookup(&b)?));
        }
        let mut flags = vec![false; points.len()];
        for f in infinite {
            let f: String = f.into();
            flags[lookup(&f)?] = true;
        }
        Self::from_indices(points, index, pairs, flags)
    }

    /// Builds from index pairs; used by enumeration and local posets.
    pub(crate) fn from_index_pairs(
        points: Vec<String>,
        pairs: Vec<(usize, usize)>,
        infinite: Vec<bool>,
    ) -> Result<Self, PosetError> {
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(PosetError::DuplicatePoint(p.clone()));
            }
        }
        Self::from_indices(points, index, pairs, infinite)
    }

    fn from_indices(
        points: Vec<String>,
        index: HashMap<String, usize>,
        pairs: Vec<(usize, usize)>,
        infinite: Vec<bool>,
    ) -> Result<Self, PosetError> {
        let n = points.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(a, b) in &pairs {
            if a == b {
                return Err(PosetError::Cycle(vec![points[a].clone(), points[a].clone()]));
            }
            if upper[a].contains(&b) {
                return Err(PosetError::DuplicateCover(points[a].clone(), points[b].clone()));
            }
            upper[a].push(b);
            lower[b].push(a);
        }
        for list in upper.iter_mut().chain(lower.iter_mut()) {
            list.sort_unstable();
        }

        let topo = match topological_order(&upper, &lower) {
            Some(t) => t,
            None => {
                let cycle = find_cycle(&upper)
                    .into_iter()
                    .map(|i| points[i].clone())
                    .collect();
                return Err(PosetError::Cycle(cycle));
            }
        };

        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &x in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            for &c in &upper[x] {
                set.insert(c);
                set.union_with(&above[c]);
            }
            above[x] = set;
        }

        // A cover (a, b) is redundant iff another upper cover of a lies below b.
        for &(a, b) in &pairs {
            if upper[a].iter().any(|&c| c != b && above[c].contains(b)) {
                return Err(PosetError::NotReduced(points[a].clone(), points[b].clone()));
            }
        }

        let mut min_len = vec![vec![NONE; n]; n];
        let mut max_len = vec![vec![NONE; n]; n];
        for src in 0..n {
            let (mn, mx) = (&mut min_len[src], &mut max_len[src]);
            mn[src] = 0;
            mx[src] = 0;
            for &x in &topo {
                if mn[x] == NONE {
                    continue;
                }
                for &c in &upper[x] {
                    mn[c] = mn[c].min(mn[x] + 1);
                    mx[c] = if mx[c] == NONE { mx[x] + 1 } else { mx[c].max(mx[x] + 1) };
                }
            }
        }

        let mut dim = vec![0usize; n];
        for &x in &topo {
            dim[x] = lower[x].iter().map(|&l| dim[l] + 1).max().unwrap_or(0);
        }
        let mut coheight = vec![0usize; n];
        for &x in topo.iter().rev() {
            coheight[x] = upper[x].iter().map(|&u| coheight[u] + 1).max().unwrap_or(0);
        }

        let mut covers = pairs;
        covers.sort_unstable();

        Ok(SpectralPoset {
            points,
            index,
            covers,
            infinite,
            upper,
            lower,
            topo,
            above,
            min_len,
            max_len,
            dim,
            coheight,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn name(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PosetError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| PosetError::UnknownPoint(name.to_string()))
    }

    /// Cover pairs `(lower, upper)` as indices, sorted.
    pub fn cover_indices(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Cover pairs `(lower, upper)` by name, in index order.
    pub fn covers(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.covers
            .iter()
            .map(|&(a, b)| (self.points[a].as_str(), self.points[b].as_str()))
    }

    pub fn is_cover(&self, lower: &str, upper: &str) -> bool {
        match (self.index.get(lower), self.index.get(upper)) {
            (Some(&a), Some(&b)) => self.upper[a].binary_search(&b).is_ok(),
            _ => false,
        }
    }

    pub fn is_infinite(&self, i: usize) -> bool {
        self.infinite[i]
    }

    pub fn infinite_flags(&self) -> &[bool] {
        &self.infinite
    }

    /// Names of the infinite-flagged points, in point order.
    pub fn infinite_points(&self) -> Vec<&str> {
        self.indices_where(|i| self.infinite[i])
    }

    /// Copy of this poset with a different flag set.
    pub fn with_infinite_flags(&self, flags: Vec<bool>) -> Self {
        assert_eq!(flags.len(), self.len());
        SpectralPoset { infinite: flags, ..self.clone() }
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Indices ordered so that every cover goes from an earlier to a later entry.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Strict order on indices.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    /// `(min, max)` Hasse path lengths from `x` up to `y`, if `x <= y`.
    pub fn path_lengths(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        let mx = self.max_len[x][y];
        (mx != NONE).then(|| (self.min_len[x][y] as usize, mx as usize))
    }

    /// Dimension of `closure{x}`: longest chain descending from `x`.
    pub fn dim_at(&self, x: usize) -> usize {
        self.dim[x]
    }

    /// Codimension of `closure{x}` in the whole space.
    pub fn codim_in_space_at(&self, x: usize) -> usize {
        self.coheight[x]
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        self.upper[x].is_empty()
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        self.lower[x].is_empty()
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_maximal(i)).collect()
    }

    pub fn minimal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_minimal(i)).collect()
    }

    fn indices_where(&self, pred: impl Fn(usize) -> bool) -> Vec<&str> {
        (0..self.len())
            .filter(|&i| pred(i))
            .map(|i| self.points[i].as_str())
            .collect()
    }

    /// `closure{x}`: every `y <= x`, including `x`.
    pub fn down_set(&self, x: &str) -> Result<Vec<&str>, PosetError> {
        let x = self.index_of(x)?;
        Ok(self.indices_where(|y| self.le(y, x)))
    }

    /// Every `y >= x`, including `x`.
    pub fn up_set(&self, x: &str) -> Result<Vec<&str>, PosetError> {
        let x = self.index_of(x)?;
        Ok(self.indices_where(|y| self.le(x, y)))
    }

    /// Maximal elements: generic points of the irreducible components.
    pub fn components(&self) -> Vec<&str> {
        self.indices_where(|i| self.is_maximal(i))
    }

    /// Minimal elements.
    pub fn closed_points(&self) -> Vec<&str> {
        self.indices_where(|i| self.is_minimal(i))
    }

    /// All maximal chains, lexicographic by point order.
    pub fn maximal_chains(&self) -> Vec<Chain> {
        self.maximal_chain_iter().map(|c| self.chain_of(&c)).collect()
    }

    /// Lazily walks every minimal-to-maximal Hasse path.
    pub fn maximal_chain_iter(&self) -> MaximalChains<'_> {
        let stack = self
            .minimal_indices()
            .into_iter()
            .rev()
            .map(|m| (m, 0usize))
            .collect();
        MaximalChains { poset: self, stack, path: Vec::new() }
    }

    /// The set of lengths of maximal chains, ascending. Computed without
    /// enumerating chains.
    pub fn maximal_chain_lengths(&self) -> Vec<usize> {
        let n = self.len();
        let mut to_top: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n); n];
        for &x in self.topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            if self.is_maximal(x) {
                set.insert(0);
            }
            for &u in &self.upper[x] {
                for l in to_top[u].ones() {
                    set.insert(l + 1);
                }
            }
            to_top[x] = set;
        }
        let mut all = FixedBitSet::with_capacity(n);
        for m in self.minimal_indices() {
            all.union_with(&to_top[m]);
        }
        all.ones().collect()
    }

    pub(crate) fn chain_of(&self, idx: &[usize]) -> Chain {
        Chain(idx.iter().map(|&i| self.points[i].clone()).collect())
    }

    /// Shortest and longest saturated chain lengths from `x` up to `y`.
    pub fn saturated_lengths(&self, x: &str, y: &str) -> Result<(usize, usize), PosetError> {
        let (xi, yi) = (self.index_of(x)?, self.index_of(y)?);
        self.path_lengths(xi, yi)
            .ok_or_else(|| PosetError::NotComparable(x.to_string(), y.to_string()))
    }

    /// A Hasse path from `x` to `y` of the extreme length (`longest` or shortest).
    pub(crate) fn extreme_path(&self, x: usize, y: usize, longest: bool) -> Vec<usize> {
        let table = if longest { &self.max_len } else { &self.min_len };
        let mut path = vec![x];
        let mut cur = x;
        while cur != y {
            let want = table[cur][y] - 1;
            cur = *self.upper[cur]
                .iter()
                .find(|&&c| table[c][y] == want)
                .expect("path table is consistent with covers");
            path.push(cur);
        }
        path
    }

    /// Krull dimension of the space.
    pub fn dim_space(&self) -> usize {
        self.dim.iter().copied().max().unwrap_or(0)
    }

    pub fn dim_point(&self, x: &str) -> Result<usize, PosetError> {
        Ok(self.dim[self.index_of(x)?])
    }

    /// Longest chain from `x` up to `y`.
    pub fn codim(&self, x: &str, y: &str) -> Result<usize, PosetError> {
        self.saturated_lengths(x, y).map(|(_, max)| max)
    }

    /// Longest chain from `x` up to any component.
    pub fn codim_in_space(&self, x: &str) -> Result<usize, PosetError> {
        Ok(self.coheight[self.index_of(x)?])
    }

    /// The poset induced on `up_set(x)`, modelling the spectrum of the local
    /// ring at `x`. Up-sets are convex, so covers restrict to covers.
    pub fn local_poset(&self, x: &str) -> Result<SpectralPoset, PosetError> {
        let xi = self.index_of(x)?;
        self.induced(|y| self.le(xi, y))
    }

    /// The poset induced on `closure{x}`.
    pub fn down_poset(&self, x: &str) -> Result<SpectralPoset, PosetError> {
        let xi = self.index_of(x)?;
        self.induced(|y| self.le(y, xi))
    }

    fn induced(&self, keep: impl Fn(usize) -> bool) -> Result<SpectralPoset, PosetError> {
        let kept: Vec<usize> = (0..self.len()).filter(|&i| keep(i)).collect();
        let mut remap = vec![usize::MAX; self.len()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let pairs = self
            .covers
            .iter()
            .filter(|&&(a, b)| remap[a] != usize::MAX && remap[b] != usize::MAX)
            .map(|&(a, b)| (remap[a], remap[b]))
            .collect();
        SpectralPoset::from_index_pairs(
            kept.iter().map(|&i| self.points[i].clone()).collect(),
            pairs,
            kept.iter().map(|&i| self.infinite[i]).collect(),
        )
    }
}

impl PartialEq for SpectralPoset {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.covers == other.covers && self.infinite == other.infinite
    }
}

impl Eq for SpectralPoset {}

impl fmt::Debug for SpectralPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpectralPoset")
            .field("points", &self.points)
            .field("covers", &self.covers().collect::<Vec<_>>())
            .field("infinite", &self.infinite_points())
            .finish()
    }
}

/// Iterator over maximal chains as index paths.
pub struct MaximalChains<'a> {
    poset: &'a SpectralPoset,
    /// Pending `(node, depth)` entries of the depth-first walk.
    stack: Vec<(usize, usize)>,
    path: Vec<usize>,
}

impl Iterator for MaximalChains<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while let Some((node, depth)) = self.stack.pop() {
            self.path.truncate(depth);
            self.path.push(node);
            let ups = self.poset.upper_covers(node);
            if ups.is_empty() {
                return Some(self.path.clone());
            }
            for &u in ups.iter().rev() {
                self.stack.push((u, depth + 1));
            }
        }
        None
    }
}

fn topological_order(upper: &[Vec<usize>], lower: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = upper.len();
    let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
    // Smallest ready index first keeps the order deterministic.
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop_first() {
        order.push(x);
        for &u in &upper[x] {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                ready.insert(u);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Returns one directed cycle, closed (first == last).
fn find_cycle(upper: &[Vec<usize>]) -> Vec<usize> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let n = upper.len();
    let mut mark = vec![Mark::New; n];
    let mut stack: Vec<usize> = Vec::new();

    fn visit(
        x: usize,
        upper: &[Vec<usize>],
        mark: &mut [Mark],
        stack: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        mark[x] = Mark::Open;
        stack.push(x);
        for &u in &upper[x] {
            match mark[u] {
                Mark::Open => {
                    let start = stack.iter().position(|&s| s == u).unwrap();
                    let mut cycle = stack[start..].to_vec();
                    cycle.push(u);
                    return Some(cycle);
                }
                Mark::New => {
                    if let Some(c) = visit(u, upper, mark, stack) {
                        return Some(c);
                    }
                }
                Mark::Done => {}
            }
        }
        stack.pop();
        mark[x] = Mark::Done;
        None
    }

    for x in 0..n {
        if mark[x] == Mark::New {
            if let Some(c) = visit(x, upper, &mut mark, &mut stack) {
                return c;
            }
        }
    }
    Vec::new()
}
