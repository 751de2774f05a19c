//! Exhaustive enumeration of small posets up to isomorphism.
//!
//! Posets of size `n` are grown from classes of size `n - 1` by adjoining a
//! new maximal element above an arbitrary down-set; every `n`-element poset
//! arises this way (remove any maximal element). Each candidate is reduced to
//! a canonical form and deduplicated. Work is spread over a rayon pool of
//! `jobs` threads, and every merge step sorts, so results never depend on the
//! worker count.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{self, classify, AnalysisError, Property};
use crate::codim;
use crate::poset::SpectralPoset;

/// Default enumeration cap. There are 2045 seven-element posets up to
/// isomorphism; each extra point multiplies the work by roughly ten.
pub const DEFAULT_CAP: usize = 7;
/// Largest cap accepted at all. Ten points already means about 2.5 million
/// classes.
pub const MAX_CAP: usize = 10;
/// Labeled enumeration (`up_to_iso = false`) is limited to this size.
pub const MAX_LABELED: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("{n} points exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("posets need at least one point")]
    ZeroPoints,
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub cap: usize,
    /// Worker threads; 0 picks the number of available cores.
    pub jobs: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig { cap: DEFAULT_CAP, jobs: 0 }
    }
}

impl CensusConfig {
    fn check(&self, n: usize) -> Result<(), CensusError> {
        if n == 0 {
            return Err(CensusError::ZeroPoints);
        }
        let cap = self.cap.min(MAX_CAP);
        if n > cap {
            return Err(CensusError::CapExceeded { n, cap });
        }
        Ok(())
    }

    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R, CensusError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| CensusError::Pool(e.to_string()))?;
        Ok(pool.install(f))
    }
}

/// A strict order on `0..n` as bit rows: bit `j` of `rows[i]` is set iff `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    rows: Vec<u32>,
}

impl CanonicalForm {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// The poset on points `p0 .. p{n-1}` with covers from the transitive reduction.
    pub fn to_poset(&self) -> SpectralPoset {
        relation_to_poset(&self.rows)
    }
}

fn relation_to_poset(rows: &[u32]) -> SpectralPoset {
    let n = rows.len();
    let covers = cover_pairs(rows);
    SpectralPoset::from_index_pairs((0..n).map(|i| format!("p{i}")).collect(), covers, vec![false; n])
        .expect("a strict order reduces to a valid Hasse diagram")
}

fn cover_pairs(rows: &[u32]) -> Vec<(usize, usize)> {
    let n = rows.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rows[i] >> j & 1 == 1 && !(0..n).any(|k| rows[i] >> k & 1 == 1 && rows[k] >> j & 1 == 1) {
                out.push((i, j));
            }
        }
    }
    out
}

fn relation_of(p: &SpectralPoset) -> Vec<u32> {
    let n = p.len();
    assert!(n <= 32, "canonical forms support at most 32 points");
    (0..n)
        .map(|i| (0..n).filter(|&j| p.lt(i, j)).fold(0u32, |acc, j| acc | 1 << j))
        .collect()
}

/// Canonical form of `p`; equal for isomorphic posets (flags are ignored).
pub fn canonical_form(p: &SpectralPoset) -> CanonicalForm {
    canonical_from_relation(&relation_of(p))
}

/// Vertex colors refined until stable. Colors are ranks of invariant keys, so
/// the coloring is isomorphism-invariant.
fn refined_colors(rows: &[u32]) -> Vec<usize> {
    let n = rows.len();
    let covers = cover_pairs(rows);
    let mut ups = vec![Vec::new(); n];
    let mut downs = vec![Vec::new(); n];
    for &(a, b) in &covers {
        ups[a].push(b);
        downs[b].push(a);
    }
    let above = |i: usize| rows[i].count_ones() as usize;
    let below = |i: usize| (0..n).filter(|&k| rows[k] >> i & 1 == 1).count();
    // Longest chain below each vertex: below-count order is a linear extension.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| below(i));
    let mut level = vec![0usize; n];
    for &i in &order {
        level[i] = downs[i].iter().map(|&d| level[d] + 1).max().unwrap_or(0);
    }

    let initial: Vec<Vec<usize>> =
        (0..n).map(|i| vec![downs[i].len(), ups[i].len(), level[i], below(i), above(i)]).collect();
    let mut colors = rank(&initial);
    loop {
        let keys: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut up: Vec<usize> = ups[i].iter().map(|&u| colors[u]).collect();
                let mut down: Vec<usize> = downs[i].iter().map(|&d| colors[d]).collect();
                up.sort_unstable();
                down.sort_unstable();
                let mut key = vec![colors[i], usize::MAX];
                key.extend(up);
                key.push(usize::MAX);
                key.extend(down);
                key
            })
            .collect();
        let next = rank(&keys);
        let count = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if count(&next) == count(&colors) {
            return next;
        }
        colors = next;
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let sorted: BTreeSet<K> = keys.iter().cloned().collect();
    let sorted: Vec<K> = sorted.into_iter().collect();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

/// Ordered partition of the points. Each cell owns a fixed range of
/// positions; refinement only subdivides ranges.
type Partition = Vec<Vec<usize>>;

/// Individualization-refinement search for the least leaf.
///
/// Every node carries an isomorphism-invariant summary of its refined
/// partition; leaves are ordered by the summaries along their path followed
/// by the relation code. Subtrees are pruned when their summaries already
/// exceed the best leaf, and with automorphisms: transpositions of twins
/// (points with the same strict up-set and down-set) are known in advance,
/// and every leaf tying the best one yields another.
struct Search<'a> {
    up: &'a [u32],
    down: Vec<u32>,
    /// Summaries of the nodes on the current path.
    key: Vec<Vec<u32>>,
    /// Individualized points on the current path.
    path: Vec<usize>,
    best: Option<Leaf>,
    /// Known automorphisms, as vertex maps.
    generators: Vec<Vec<usize>>,
}

struct Leaf {
    key: Vec<Vec<u32>>,
    path: Vec<usize>,
    order: Vec<usize>,
}

/// Outcome of exploring a subtree.
enum Step {
    Done,
    /// A leaf matched the best one through an automorphism; unwind to the
    /// node at this depth.
    Jump(usize),
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    /// Splits cells by how many points of each cell lie above and below,
    /// until stable. Returns the summary of the final partition.
    fn refine(&self, cells: &mut Partition) -> Vec<u32> {
        loop {
            let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
            let signature = |v: usize| -> Vec<u32> {
                masks.iter().map(|&m| (self.up[v] & m).count_ones() << 8 | (self.down[v] & m).count_ones()).collect()
            };
            let mut next: Partition = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (signature(v), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                let masks: Vec<u32> = next.iter().map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
                let mut summary = Vec::with_capacity(next.len() * (masks.len() + 1));
                for cell in &next {
                    summary.push(cell.len() as u32);
                    let v = cell[0];
                    summary.extend(masks.iter().map(|&m| (self.up[v] & m).count_ones() << 8 | (self.down[v] & m).count_ones()));
                }
                *cells = next;
                return summary;
            }
            *cells = next;
        }
    }

    /// Orbit representatives under the generators that fix the current path.
    fn orbits(&self) -> Vec<usize> {
        let n = self.up.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for g in &self.generators {
            if self.path.iter().all(|&v| g[v] == v) {
                for (v, &w) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn code(&self, order: &[usize]) -> Vec<u32> {
        let n = order.len();
        let mut pos = vec![0usize; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let mut rows = vec![0u32; n];
        for (a, &row) in self.up.iter().enumerate() {
            for b in 0..n {
                if row >> b & 1 == 1 {
                    rows[pos[a]] |= 1 << pos[b];
                }
            }
        }
        rows
    }

    fn leaf(&mut self, cells: &Partition) -> Step {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        self.key.push(self.code(&order));
        let step = match &self.best {
            Some(best) if self.key == best.key => {
                let n = order.len();
                let mut g = vec![0usize; n];
                for (k, &v) in best.order.iter().enumerate() {
                    g[v] = order[k];
                }
                let depth = (0..self.path.len()).find(|&i| best.path.get(i) != Some(&self.path[i]));
                match depth {
                    Some(d) => {
                        self.generators.push(g);
                        Step::Jump(d)
                    }
                    None => Step::Done,
                }
            }
            Some(best) if self.key > best.key => Step::Done,
            _ => {
                self.best = Some(Leaf { key: self.key.clone(), path: self.path.clone(), order });
                Step::Done
            }
        };
        self.key.pop();
        step
    }

    fn exceeds_best(&self) -> bool {
        match &self.best {
            Some(best) => {
                let d = self.key.len().min(best.key.len());
                match self.key[..d].cmp(&best.key[..d]) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => best.key.len() <= self.key.len(),
                }
            }
            None => false,
        }
    }

    fn explore(&mut self, cells: Partition) -> Step {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells);
        };
        let depth = self.path.len();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !tried.is_empty() {
                let orbit = self.orbits();
                if tried.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            let summary = self.refine(&mut child);
            self.key.push(summary);
            self.path.push(v);
            let step = if self.exceeds_best() { Step::Done } else { self.explore(child) };
            self.path.pop();
            self.key.pop();
            if let Step::Jump(level) = step {
                if level < depth {
                    return step;
                }
            }
        }
        Step::Done
    }
}

/// Transpositions of consecutive twins.
fn twin_transpositions(rows: &[u32]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let column = |j: usize| (0..n).filter(|&i| rows[i] >> j & 1 == 1).fold(0u32, |acc, i| acc | 1 << i);
    let mut out = Vec::new();
    let mut last_of: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for v in 0..n {
        if let Some(u) = last_of.insert((rows[v], column(v)), v) {
            let mut g: Vec<usize> = (0..n).collect();
            g.swap(u, v);
            out.push(g);
        }
    }
    out
}

fn canonical_from_relation(rows: &[u32]) -> CanonicalForm {
    let n = rows.len();
    let colors = refined_colors(rows);
    let mut cells: Partition = vec![Vec::new(); colors.iter().max().map_or(0, |&c| c + 1)];
    for (v, &c) in colors.iter().enumerate() {
        cells[c].push(v);
    }
    let down = (0..n).map(|j| (0..n).filter(|&i| rows[i] >> j & 1 == 1).fold(0u32, |m, i| m | 1 << i)).collect();
    let mut search = Search { up: rows, down, key: Vec::new(), path: Vec::new(), best: None, generators: twin_transpositions(rows) };
    let summary = search.refine(&mut cells);
    search.key.push(summary);
    search.explore(cells);
    let best = search.best.expect("at least one leaf");
    CanonicalForm { rows: best.key.last().expect("leaf code").clone() }
}

/// Every down-closed subset of the order, as a bitmask.
fn down_sets(rows: &[u32]) -> Vec<u32> {
    let n = rows.len();
    let below: Vec<u32> =
        (0..n).map(|j| (0..n).filter(|&i| rows[i] >> j & 1 == 1).fold(0u32, |acc, i| acc | 1 << i)).collect();
    (0u32..(1u32 << n))
        .filter(|&s| (0..n).all(|j| s >> j & 1 == 0 || below[j] & !s == 0))
        .collect()
}

fn extensions(form: &CanonicalForm) -> Vec<CanonicalForm> {
    let n = form.rows.len();
    down_sets(&form.rows)
        .into_iter()
        .map(|set| {
            let mut rows = form.rows.clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if set >> i & 1 == 1 {
                    *row |= 1 << n;
                }
            }
            rows.push(0);
            canonical_from_relation(&rows)
        })
        .collect()
}

/// Canonical forms of all `n`-element posets, sorted.
pub fn canonical_classes(n: usize, config: &CensusConfig) -> Result<Vec<CanonicalForm>, CensusError> {
    config.check(n)?;
    config.run(|| {
        let mut level = vec![CanonicalForm { rows: vec![0] }];
        for _ in 1..n {
            let mut next: Vec<CanonicalForm> = level.par_iter().flat_map_iter(extensions).collect();
            next.par_sort_unstable();
            next.dedup();
            level = next;
        }
        level
    })
}

/// All posets on `n` points, either one per isomorphism class (canonical
/// order) or every labeled poset on `p0 .. p{n-1}`.
pub fn enumerate_posets(n: usize, up_to_iso: bool, config: &CensusConfig) -> Result<Vec<SpectralPoset>, CensusError> {
    let classes = canonical_classes(n, config)?;
    if up_to_iso {
        return Ok(classes.iter().map(CanonicalForm::to_poset).collect());
    }
    if n > MAX_LABELED {
        return Err(CensusError::CapExceeded { n, cap: MAX_LABELED });
    }
    let mut labeled = BTreeSet::new();
    for form in &classes {
        for perm in permutations(n) {
            let mut rows = vec![0u32; n];
            for (a, &row) in form.rows.iter().enumerate() {
                for b in 0..n {
                    if row >> b & 1 == 1 {
                        rows[perm[a]] |= 1 << perm[b];
                    }
                }
            }
            labeled.insert(rows);
        }
    }
    Ok(labeled.iter().map(|r| relation_to_poset(r)).collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    heap_permutations(n, &mut perm, &mut out);
    out
}

fn heap_permutations(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(k - 1, perm, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        perm.swap(j, k - 1);
    }
}

/// Number of isomorphism classes with one dimension and property vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CensusRow {
    pub n_points: usize,
    pub dimension: usize,
    /// Values in [`Property::CENSUS`] order.
    pub property_vector: Vec<bool>,
    pub count: usize,
}

/// Classifies every class of `n`-element posets and tallies them, sorted by
/// `(dimension, property vector)`.
pub fn census(n: usize, config: &CensusConfig) -> Result<Vec<CensusRow>, CensusError> {
    let classes = canonical_classes(n, config)?;
    let keys = config.run(|| {
        classes
            .par_iter()
            .map(|form| {
                let report = classify(&form.to_poset())?;
                Ok((report.dimension, report.property_vector()))
            })
            .collect::<Result<Vec<_>, AnalysisError>>()
    })??;
    let mut tally: BTreeMap<(usize, Vec<bool>), usize> = BTreeMap::new();
    for key in keys {
        *tally.entry(key).or_default() += 1;
    }
    Ok(tally
        .into_iter()
        .map(|((dimension, property_vector), count)| CensusRow { n_points: n, dimension, property_vector, count })
        .collect())
}

/// Raw property values of one poset, computed without the cross-checks in
/// [`classify`].
struct Facts {
    equidimensional: bool,
    equicodimensional: bool,
    catenary: bool,
    weakly: bool,
    biequidimensional: bool,
    components_equicodimensional: bool,
    dimension_additive: bool,
    codimension_additive: bool,
    closed_point_local: bool,
    dimension_formula: bool,
    candidate_codim_valid: bool,
    solver_finds_function: bool,
    local_rings: bool,
}

impl Facts {
    fn of(p: &SpectralPoset) -> Facts {
        let components_equicodimensional = p.components().iter().all(|c| {
            let down = p.down_poset(c).expect("component is a point");
            analysis::is_equicodimensional(&down)
        });
        Facts {
            equidimensional: analysis::is_equidimensional(p),
            equicodimensional: analysis::is_equicodimensional(p),
            catenary: analysis::is_catenary(p),
            weakly: analysis::is_weakly_biequidimensional(p),
            biequidimensional: analysis::is_biequidimensional(p),
            components_equicodimensional,
            dimension_additive: analysis::dimension_additive_holds(p),
            codimension_additive: analysis::codimension_additive_holds(p),
            closed_point_local: analysis::closed_point_local_criterion(p),
            dimension_formula: analysis::dimension_formula_holds(p),
            candidate_codim_valid: codim::is_codim_function(p, &codim::candidate_codim(p)) == Ok(true),
            solver_finds_function: codim::solve(p).exists(),
            local_rings: analysis::local_rings_catenary_equidimensional(p),
        }
    }
}

/// A statement verified over every enumerated poset.
pub struct Statement {
    pub name: &'static str,
    pub description: &'static str,
    test: fn(&Facts) -> bool,
}

pub fn statements() -> &'static [Statement] {
    &STATEMENTS
}

static STATEMENTS: [Statement; 10] = [
    Statement {
        name: "biequidimensional-implies-weakly",
        description: "biequidimensional => equidimensional, equicodimensional and catenary",
        test: |f| !f.biequidimensional || f.weakly,
    },
    Statement {
        name: "components-equicodimensional-implies-biequidimensional",
        description: "equidimensional, catenary, every component equicodimensional => biequidimensional",
        test: |f| !(f.equidimensional && f.catenary && f.components_equicodimensional) || f.biequidimensional,
    },
    Statement {
        name: "biequidimensional-iff-dimension-additive",
        description: "biequidimensional <=> equidimensional and dim(Z) = dim(Y) + codim(Y,Z)",
        test: |f| f.biequidimensional == (f.equidimensional && f.dimension_additive),
    },
    Statement {
        name: "biequidimensional-iff-codimension-additive",
        description: "biequidimensional <=> equicodimensional and codim(Y,X) = codim(Y,Z) + codim(Z,X)",
        test: |f| f.biequidimensional == (f.equicodimensional && f.codimension_additive),
    },
    Statement {
        name: "biequidimensional-iff-closed-point-local-rings",
        description: "biequidimensional <=> every closed point has a catenary, equidimensional local poset of dimension dim(X)",
        test: |f| f.biequidimensional == f.closed_point_local,
    },
    Statement {
        name: "biequidimensional-implies-dimension-formula",
        description: "biequidimensional => dim(X) = dim(Y) + codim(Y,X) for all Y",
        test: |f| !f.biequidimensional || f.dimension_formula,
    },
    Statement {
        name: "biequidimensional-implies-codim-function",
        description: "biequidimensional => codim(-,X) is a codimension function and the solver finds one",
        test: |f| !f.biequidimensional || (f.candidate_codim_valid && f.solver_finds_function),
    },
    Statement {
        name: "codim-candidate-iff-local-rings",
        description: "codim(-,X) is a codimension function <=> all local posets are catenary and equidimensional",
        test: |f| f.candidate_codim_valid == f.local_rings,
    },
    Statement {
        name: "dimension-additive-implies-catenary",
        description: "dim(Z) = dim(Y) + codim(Y,Z) for all Y <= Z => catenary",
        test: |f| !f.dimension_additive || f.catenary,
    },
    Statement {
        name: "codimension-additive-implies-catenary",
        description: "codim(Y,X) = codim(Y,Z) + codim(Z,X) for all Y <= Z => catenary",
        test: |f| !f.codimension_additive || f.catenary,
    },
];

#[derive(Debug, Clone)]
pub struct StatementResult {
    pub name: &'static str,
    pub description: &'static str,
    pub violations: usize,
    pub first_violation: Option<SpectralPoset>,
}

impl StatementResult {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone)]
pub struct ImplicationReport {
    pub n: usize,
    pub posets_checked: usize,
    pub statements: Vec<StatementResult>,
}

impl ImplicationReport {
    pub fn all_passed(&self) -> bool {
        self.statements.iter().all(StatementResult::passed)
    }
}

/// Checks every statement on every `n`-element poset up to isomorphism.
pub fn verify_implications(n: usize, config: &CensusConfig) -> Result<ImplicationReport, CensusError> {
    let classes = canonical_classes(n, config)?;
    let outcomes: Vec<Vec<bool>> = config.run(|| {
        classes
            .par_iter()
            .map(|form| {
                let facts = Facts::of(&form.to_poset());
                STATEMENTS.iter().map(|s| (s.test)(&facts)).collect()
            })
            .collect()
    })?;
    let statements = STATEMENTS
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let failing: Vec<usize> = (0..classes.len()).filter(|&i| !outcomes[i][k]).collect();
            StatementResult {
                name: s.name,
                description: s.description,
                violations: failing.len(),
                first_violation: failing.first().map(|&i| classes[i].to_poset()),
            }
        })
        .collect();
    Ok(ImplicationReport { n, posets_checked: classes.len(), statements })
}

/// Smallest size admitting a poset with every `require_true` property and no
/// `require_false` property.
#[derive(Debug, Clone)]
pub struct MinimalResult {
    pub n: usize,
    /// First match in canonical order.
    pub witness: SpectralPoset,
    /// Every matching class at size `n`, canonical order.
    pub all_witnesses: Vec<SpectralPoset>,
}

pub fn find_minimal(
    require_true: &[Property],
    require_false: &[Property],
    config: &CensusConfig,
) -> Result<Option<MinimalResult>, CensusError> {
    let cap = config.cap.min(MAX_CAP);
    for n in 1..=cap {
        let classes = canonical_classes(n, config)?;
        let hits: Vec<SpectralPoset> = config.run(|| {
            classes
                .par_iter()
                .map(CanonicalForm::to_poset)
                .filter(|p| {
                    require_true.iter().all(|q| q.holds(p)) && require_false.iter().all(|q| !q.holds(p))
                })
                .collect()
        })?;
        if let Some(first) = hits.first() {
            return Ok(Some(MinimalResult { n, witness: first.clone(), all_witnesses: hits }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> CensusConfig {
        CensusConfig { cap: 7, jobs: 2 }
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| canonical_classes(n, &cfg()).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 5, 16, 63]);
    }

    #[test]
    fn labeled_counts() {
        // Labeled posets: 1, 3, 19, 219.
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_posets(n, false, &cfg()).unwrap().len()).collect();
        assert_eq!(counts, [1, 3, 19, 219]);
    }

    #[test]
    fn cap_is_enforced() {
        let c = CensusConfig { cap: 3, jobs: 1 };
        assert_eq!(canonical_classes(4, &c), Err(CensusError::CapExceeded { n: 4, cap: 3 }));
        assert_eq!(canonical_classes(0, &c), Err(CensusError::ZeroPoints));
    }

    #[test]
    fn census_of_one_and_two() {
        let rows = census(1, &cfg()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].count, 1);
        assert!(rows[0].property_vector.iter().all(|&b| b));

        let rows = census(2, &cfg()).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.count == 1 && r.property_vector.iter().all(|&b| b)));
        assert_eq!(rows.iter().map(|r| r.dimension).collect::<Vec<_>>(), [0, 1]);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(4).into_iter().collect::<BTreeSet<_>>().len(), 24);
    }
}
