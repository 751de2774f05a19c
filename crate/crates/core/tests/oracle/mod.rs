//! Naive reference implementations used to cross-check the library.
//!
//! Everything here is derived from the cover list alone, by exhaustive path
//! enumeration, exhaustive labeling search or brute force over permutations.

#![allow(dead_code)]

use biequi_core::SpectralPoset;
use rand::seq::SliceRandom;
use rand::Rng;

pub struct Naive {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    pub up: Vec<Vec<usize>>,
    pub flags: Vec<bool>,
    /// `lt[x][y]`: strict order by transitive closure of the covers.
    pub lt: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(p: &SpectralPoset) -> Self {
        let n = p.len();
        let covers = p.cover_indices().to_vec();
        let mut up = vec![Vec::new(); n];
        let mut lt = vec![vec![false; n]; n];
        for &(a, b) in &covers {
            up[a].push(b);
            lt[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if lt[i][k] && lt[k][j] {
                        lt[i][j] = true;
                    }
                }
            }
        }
        Naive { n, covers, up, flags: p.infinite_flags().to_vec(), lt }
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt[x][y]
    }

    fn is_minimal(&self, x: usize) -> bool {
        (0..self.n).all(|y| !self.lt[y][x])
    }

    fn is_maximal(&self, x: usize) -> bool {
        (0..self.n).all(|y| !self.lt[x][y])
    }

    /// Lengths of every Hasse path from `x` up to `y`, listed one by one.
    pub fn path_lengths(&self, x: usize, y: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(x, 0usize)];
        while let Some((v, len)) = stack.pop() {
            if v == y {
                out.push(len);
                continue;
            }
            for &w in &self.up[v] {
                stack.push((w, len + 1));
            }
        }
        out
    }

    pub fn saturated_lengths(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        let lens = self.path_lengths(x, y);
        Some((*lens.iter().min()?, *lens.iter().max()?))
    }

    pub fn codim(&self, x: usize, y: usize) -> usize {
        self.saturated_lengths(x, y).expect("comparable").1
    }

    /// Every maximal chain as a list of indices, by walking upward from
    /// each minimal point.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for m in (0..self.n).filter(|&m| self.is_minimal(m)) {
            let mut stack = vec![vec![m]];
            while let Some(path) = stack.pop() {
                let last = *path.last().unwrap();
                if self.up[last].is_empty() {
                    out.push(path);
                    continue;
                }
                for &w in &self.up[last] {
                    let mut next = path.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
        }
        out
    }

    pub fn maximal_chain_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.maximal_chains().iter().map(|c| c.len() - 1).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn dim(&self, x: usize) -> usize {
        (0..self.n).filter(|&m| self.le(m, x)).map(|m| self.codim(m, x)).max().unwrap()
    }

    pub fn codim_in_space(&self, x: usize) -> usize {
        (0..self.n).filter(|&c| self.le(x, c)).map(|c| self.codim(x, c)).max().unwrap()
    }

    pub fn dim_space(&self) -> usize {
        (0..self.n).map(|x| self.dim(x)).max().unwrap()
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.le(x, y) {
                    v.push((x, y));
                }
            }
        }
        v
    }

    fn all_equal(values: impl IntoIterator<Item = usize>) -> bool {
        let v: Vec<usize> = values.into_iter().collect();
        v.windows(2).all(|w| w[0] == w[1])
    }

    pub fn equidimensional(&self) -> bool {
        Self::all_equal((0..self.n).filter(|&c| self.is_maximal(c)).map(|c| self.dim(c)))
    }

    pub fn equicodimensional(&self) -> bool {
        Self::all_equal((0..self.n).filter(|&m| self.is_minimal(m)).map(|m| self.codim_in_space(m)))
    }

    pub fn catenary(&self) -> bool {
        self.pairs().into_iter().all(|(x, y)| Self::all_equal(self.path_lengths(x, y)))
    }

    pub fn weakly_biequidimensional(&self) -> bool {
        self.equidimensional() && self.equicodimensional() && self.catenary()
    }

    pub fn biequidimensional(&self) -> bool {
        Self::all_equal(self.maximal_chains().iter().map(|c| c.len()))
    }

    pub fn dimension_formula(&self) -> bool {
        let d = self.dim_space();
        (0..self.n).all(|y| self.dim(y) + self.codim_in_space(y) == d)
    }

    pub fn dimension_additive(&self) -> bool {
        self.pairs().into_iter().all(|(y, z)| self.dim(z) == self.dim(y) + self.codim(y, z))
    }

    pub fn codimension_additive(&self) -> bool {
        self.pairs()
            .into_iter()
            .all(|(y, z)| self.codim_in_space(y) == self.codim(y, z) + self.codim_in_space(z))
    }

    pub fn local_catenary_equidimensional(&self) -> bool {
        (0..self.n).all(|x| {
            let catenary = self
                .pairs()
                .into_iter()
                .filter(|&(a, _)| self.le(x, a))
                .all(|(a, b)| Self::all_equal(self.path_lengths(a, b)));
            let equidim =
                Self::all_equal((0..self.n).filter(|&c| self.is_maximal(c) && self.le(x, c)).map(|c| self.codim(x, c)));
            catenary && equidim
        })
    }

    pub fn noetherian_obstructions(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .into_iter()
            .filter(|&(x, y)| x != y && self.codim(x, y) >= 2)
            .filter(|&(x, y)| !(0..self.n).any(|z| self.flags[z] && self.lt[x][z] && self.lt[z][y]))
            .collect()
    }

    /// A codimension function normalised to minimum 0 on each connected
    /// component, found by trying every labeling with values in `0..n`.
    pub fn codim_labeling(&self) -> Option<Vec<i64>> {
        let mut values = vec![0i64; self.n];
        if !self.search(0, &mut values) {
            return None;
        }
        let comp = self.weak_components();
        for c in 0..self.n {
            if let Some(min) = (0..self.n).filter(|&x| comp[x] == c).map(|x| values[x]).min() {
                for x in 0..self.n {
                    if comp[x] == c {
                        values[x] -= min;
                    }
                }
            }
        }
        Some(values)
    }

    fn search(&self, k: usize, values: &mut [i64]) -> bool {
        if k == self.n {
            return true;
        }
        for v in 0..self.n as i64 {
            values[k] = v;
            let consistent = self
                .covers
                .iter()
                .filter(|&&(a, b)| a.max(b) == k)
                .all(|&(a, b)| values[a] == values[b] + 1);
            if consistent && self.search(k + 1, values) {
                return true;
            }
        }
        false
    }

    /// Component label per point: the least index reachable through covers.
    pub fn weak_components(&self) -> Vec<usize> {
        let mut comp: Vec<usize> = (0..self.n).collect();
        loop {
            let mut changed = false;
            for &(a, b) in &self.covers {
                let m = comp[a].min(comp[b]);
                if comp[a] != m || comp[b] != m {
                    comp[a] = m;
                    comp[b] = m;
                    changed = true;
                }
            }
            if !changed {
                return comp;
            }
        }
    }

    /// Truth values in the order of `Property::ALL`.
    pub fn property_vector(&self) -> Vec<bool> {
        vec![
            self.equidimensional(),
            self.equicodimensional(),
            self.catenary(),
            self.weakly_biequidimensional(),
            self.biequidimensional(),
            self.dimension_formula(),
            self.dimension_additive(),
            self.codimension_additive(),
            self.local_catenary_equidimensional(),
            self.codim_labeling().is_some(),
            self.noetherian_obstructions().is_empty(),
        ]
    }
}

/// Strict order matrix flattened row by row, minimised over every
/// relabeling. Two posets are isomorphic iff their keys agree.
pub fn brute_canonical_key(lt: &[Vec<bool>]) -> Vec<bool> {
    let n = lt.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut perm, 0, &mut |perm| {
        let key: Vec<bool> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| lt[perm[i]][perm[j]]).collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    });
    best.unwrap_or_default()
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Every strict partial order on `n` labeled points, as order matrices,
/// by filtering all relations on the off-diagonal pairs.
pub fn brute_labeled_orders(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut lt = vec![vec![false; n]; n];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            lt[i][j] = mask >> bit & 1 == 1;
        }
        let antisymmetric = pairs.iter().all(|&(i, j)| !(lt[i][j] && lt[j][i]));
        let transitive = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(lt[i][j] && lt[j][k]) || lt[i][k])));
        if antisymmetric && transitive {
            out.push(lt);
        }
    }
    out
}

/// Order matrix of a library poset, derived from its covers.
pub fn order_matrix(p: &SpectralPoset) -> Vec<Vec<bool>> {
    Naive::new(p).lt
}

/// Random poset with `1..=max_n` points: a random strict order compatible
/// with a shuffled linear order, reduced to its covers, with random names
/// and random infinite flags.
pub fn random_poset<R: Rng>(rng: &mut R, max_n: usize) -> SpectralPoset {
    let n = rng.gen_range(1..=max_n);
    let density: f64 = rng.gen_range(0.1..0.7);
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            lt[i][j] = rng.gen_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if lt[i][k] && lt[k][j] {
                    lt[i][j] = true;
                }
            }
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let names: Vec<String> = label.iter().map(|l| format!("q{l}")).collect();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt[i][j] && !(0..n).any(|k| lt[i][k] && lt[k][j]) {
                covers.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    covers.shuffle(rng);
    let flagged: Vec<String> = names.iter().filter(|_| rng.gen_bool(0.3)).cloned().collect();
    let mut points = names;
    points.shuffle(rng);
    SpectralPoset::build(points, covers, flagged).expect("random poset is valid")
}
