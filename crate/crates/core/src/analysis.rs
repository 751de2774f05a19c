//! Chain-condition properties of a [`SpectralPoset`].
//!
//! Every checker has an index-level `check_*` form returning the first
//! counterwitness in a fixed enumeration order (points in declaration order,
//! pairs lexicographically), and a boolean `is_*` wrapper. [`classify`]
//! aggregates them into an [`AnalysisReport`] and cross-checks the known
//! equivalences between them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::codim::{self, CodimResult};
use crate::poset::{Chain, PosetError, SpectralPoset};

/// The boolean properties a report decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Equidimensional,
    Equicodimensional,
    Catenary,
    WeaklyBiequidimensional,
    Biequidimensional,
    DimensionFormula,
    /// `dim(Z) = dim(Y) + codim(Y, Z)` for all `Y <= Z`.
    DimensionAdditive,
    /// `codim(Y, X) = codim(Y, Z) + codim(Z, X)` for all `Y <= Z`.
    CodimensionAdditive,
    /// Every local poset is catenary and equidimensional.
    LocalRingsCatenaryEquidimensional,
    CodimFunctionExists,
    /// No interval of codimension at least 2 is missing an infinite family.
    NoetherianUnobstructed,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::Equidimensional,
        Property::Equicodimensional,
        Property::Catenary,
        Property::WeaklyBiequidimensional,
        Property::Biequidimensional,
        Property::DimensionFormula,
        Property::DimensionAdditive,
        Property::CodimensionAdditive,
        Property::LocalRingsCatenaryEquidimensional,
        Property::CodimFunctionExists,
        Property::NoetherianUnobstructed,
    ];

    /// Properties tabulated by the census. Infinite flags are never
    /// enumerated, so the Noetherian check is left out.
    pub const CENSUS: [Property; 10] = [
        Property::Equidimensional,
        Property::Equicodimensional,
        Property::Catenary,
        Property::WeaklyBiequidimensional,
        Property::Biequidimensional,
        Property::DimensionFormula,
        Property::DimensionAdditive,
        Property::CodimensionAdditive,
        Property::LocalRingsCatenaryEquidimensional,
        Property::CodimFunctionExists,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Equidimensional => "equidimensional",
            Property::Equicodimensional => "equicodimensional",
            Property::Catenary => "catenary",
            Property::WeaklyBiequidimensional => "weakly_biequidimensional",
            Property::Biequidimensional => "biequidimensional",
            Property::DimensionFormula => "dimension_formula",
            Property::DimensionAdditive => "dimension_additive",
            Property::CodimensionAdditive => "codimension_additive",
            Property::LocalRingsCatenaryEquidimensional => "local_rings_catenary_equidimensional",
            Property::CodimFunctionExists => "codim_function_exists",
            Property::NoetherianUnobstructed => "noetherian_unobstructed",
        }
    }

    /// Short column header for tables.
    pub fn abbrev(self) -> &'static str {
        match self {
            Property::Equidimensional => "eqdim",
            Property::Equicodimensional => "eqcodim",
            Property::Catenary => "caten",
            Property::WeaklyBiequidimensional => "weakly",
            Property::Biequidimensional => "bieq",
            Property::DimensionFormula => "dimfm",
            Property::DimensionAdditive => "dimadd",
            Property::CodimensionAdditive => "codadd",
            Property::LocalRingsCatenaryEquidimensional => "local",
            Property::CodimFunctionExists => "codfn",
            Property::NoetherianUnobstructed => "noeth",
        }
    }

    /// Evaluates the property directly, without building a report.
    pub fn holds(self, p: &SpectralPoset) -> bool {
        match self {
            Property::Equidimensional => check_equidimensional(p).is_none(),
            Property::Equicodimensional => check_equicodimensional(p).is_none(),
            Property::Catenary => check_catenary(p).is_none(),
            Property::WeaklyBiequidimensional => is_weakly_biequidimensional(p),
            Property::Biequidimensional => is_biequidimensional(p),
            Property::DimensionFormula => check_dimension_formula(p).is_none(),
            Property::DimensionAdditive => check_dimension_additive(p).is_none(),
            Property::CodimensionAdditive => check_codimension_additive(p).is_none(),
            Property::LocalRingsCatenaryEquidimensional => local_rings_catenary_equidimensional(p),
            Property::CodimFunctionExists => codim::solve_indices(p).is_ok(),
            Property::NoetherianUnobstructed => noetherian_obstruction_indices(p).next().is_none(),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown property `{0}`")]
pub struct UnknownProperty(pub String);

impl FromStr for Property {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let alias = match key.as_str() {
            "weakly" => Some(Property::WeaklyBiequidimensional),
            "bieq" => Some(Property::Biequidimensional),
            "codim_function" => Some(Property::CodimFunctionExists),
            "noetherian" => Some(Property::NoetherianUnobstructed),
            "local_rings" => Some(Property::LocalRingsCatenaryEquidimensional),
            _ => None,
        };
        alias
            .or_else(|| Property::ALL.into_iter().find(|p| p.name() == key))
            .ok_or_else(|| UnknownProperty(s.to_string()))
    }
}

/// Why a local poset fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocalFailure {
    NotCatenary { shorter: Chain, longer: Chain },
    NotEquidimensional { component: String, codim: usize, other: String, other_codim: usize },
}

/// A counterwitness for one false property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "property", rename_all = "snake_case")]
pub enum Witness {
    Equidimensional { component: String, dim: usize, other: String, other_dim: usize },
    Equicodimensional { point: String, codim: usize, other: String, other_codim: usize },
    Catenary { shorter: Chain, longer: Chain },
    WeaklyBiequidimensional { fails: Property },
    Biequidimensional { shorter: Chain, longer: Chain },
    DimensionFormula { point: String, dim: usize, codim: usize, space_dim: usize },
    DimensionAdditive { lower: String, upper: String, dim_lower: usize, codim_between: usize, dim_upper: usize },
    CodimensionAdditive {
        lower: String,
        upper: String,
        codim_lower: usize,
        codim_between: usize,
        codim_upper: usize,
    },
    LocalRingsCatenaryEquidimensional { point: String, failure: LocalFailure },
    CodimFunctionExists { walk: Vec<String>, signed_length: i64 },
    NoetherianUnobstructed { lower: String, upper: String, codim: usize },
}

impl Witness {
    pub fn property(&self) -> Property {
        match self {
            Witness::Equidimensional { .. } => Property::Equidimensional,
            Witness::Equicodimensional { .. } => Property::Equicodimensional,
            Witness::Catenary { .. } => Property::Catenary,
            Witness::WeaklyBiequidimensional { .. } => Property::WeaklyBiequidimensional,
            Witness::Biequidimensional { .. } => Property::Biequidimensional,
            Witness::DimensionFormula { .. } => Property::DimensionFormula,
            Witness::DimensionAdditive { .. } => Property::DimensionAdditive,
            Witness::CodimensionAdditive { .. } => Property::CodimensionAdditive,
            Witness::LocalRingsCatenaryEquidimensional { .. } => Property::LocalRingsCatenaryEquidimensional,
            Witness::CodimFunctionExists { .. } => Property::CodimFunctionExists,
            Witness::NoetherianUnobstructed { .. } => Property::NoetherianUnobstructed,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Equidimensional { component, dim, other, other_dim } => {
                write!(f, "dim({component}) = {dim} but dim({other}) = {other_dim}")
            }
            Witness::Equicodimensional { point, codim, other, other_codim } => {
                write!(f, "codim({point}) = {codim} but codim({other}) = {other_codim}")
            }
            Witness::Catenary { shorter, longer } | Witness::Biequidimensional { shorter, longer } => {
                write!(f, "{shorter} (length {}) vs {longer} (length {})", shorter.len(), longer.len())
            }
            Witness::WeaklyBiequidimensional { fails } => write!(f, "not {fails}"),
            Witness::DimensionFormula { point, dim, codim, space_dim } => {
                let rel = if dim + codim < *space_dim { "<" } else { ">" };
                write!(f, "{point}: {dim} + {codim} = {} {rel} {space_dim}", dim + codim)
            }
            Witness::DimensionAdditive { lower, upper, dim_lower, codim_between, dim_upper } => write!(
                f,
                "{lower} < {upper}: dim({upper}) = {dim_upper} != {dim_lower} + {codim_between}"
            ),
            Witness::CodimensionAdditive { lower, upper, codim_lower, codim_between, codim_upper } => write!(
                f,
                "{lower} < {upper}: codim({lower}) = {codim_lower} != {codim_between} + {codim_upper}"
            ),
            Witness::LocalRingsCatenaryEquidimensional { point, failure } => match failure {
                LocalFailure::NotCatenary { shorter, longer } => {
                    write!(f, "at {point}: {shorter} vs {longer}")
                }
                LocalFailure::NotEquidimensional { component, codim, other, other_codim } => write!(
                    f,
                    "at {point}: codim to {component} is {codim} but to {other} is {other_codim}"
                ),
            },
            Witness::CodimFunctionExists { walk, signed_length } => {
                write!(f, "{} (signed length {signed_length})", walk.join(" -> "))
            }
            Witness::NoetherianUnobstructed { lower, upper, codim } => {
                write!(f, "{lower} < {upper} has codimension {codim} and finitely many points between")
            }
        }
    }
}

/// Full classification of a space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub dimension: usize,
    pub maximal_chain_lengths: Vec<usize>,
    pub equidimensional: bool,
    pub equicodimensional: bool,
    pub catenary: bool,
    pub weakly_biequidimensional: bool,
    pub biequidimensional: bool,
    pub dimension_formula: bool,
    pub dimension_additive: bool,
    pub codimension_additive: bool,
    pub local_rings_catenary_equidimensional: bool,
    pub codim_function_exists: bool,
    pub noetherian_violations: Vec<(String, String)>,
    /// One entry per false property, in [`Property::ALL`] order.
    pub witnesses: Vec<Witness>,
}

impl AnalysisReport {
    pub fn get(&self, property: Property) -> bool {
        match property {
            Property::Equidimensional => self.equidimensional,
            Property::Equicodimensional => self.equicodimensional,
            Property::Catenary => self.catenary,
            Property::WeaklyBiequidimensional => self.weakly_biequidimensional,
            Property::Biequidimensional => self.biequidimensional,
            Property::DimensionFormula => self.dimension_formula,
            Property::DimensionAdditive => self.dimension_additive,
            Property::CodimensionAdditive => self.codimension_additive,
            Property::LocalRingsCatenaryEquidimensional => self.local_rings_catenary_equidimensional,
            Property::CodimFunctionExists => self.codim_function_exists,
            Property::NoetherianUnobstructed => self.noetherian_violations.is_empty(),
        }
    }

    pub fn witness(&self, property: Property) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.property() == property)
    }

    /// Census-facing property vector, in [`Property::CENSUS`] order.
    pub fn property_vector(&self) -> Vec<bool> {
        Property::CENSUS.iter().map(|&p| self.get(p)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

fn first_mismatch<F>(items: &[usize], value: F) -> Option<(usize, usize, usize, usize)>
where
    F: Fn(usize) -> usize,
{
    let (&first, rest) = items.split_first()?;
    let v0 = value(first);
    rest.iter()
        .find(|&&i| value(i) != v0)
        .map(|&i| (first, v0, i, value(i)))
}

pub fn check_equidimensional(p: &SpectralPoset) -> Option<Witness> {
    first_mismatch(&p.maximal_indices(), |c| p.dim_at(c)).map(|(a, da, b, db)| Witness::Equidimensional {
        component: p.name(a).into(),
        dim: da,
        other: p.name(b).into(),
        other_dim: db,
    })
}

pub fn check_equicodimensional(p: &SpectralPoset) -> Option<Witness> {
    first_mismatch(&p.minimal_indices(), |m| p.codim_in_space_at(m)).map(|(a, ca, b, cb)| {
        Witness::Equicodimensional {
            point: p.name(a).into(),
            codim: ca,
            other: p.name(b).into(),
            other_codim: cb,
        }
    })
}

/// First pair `x < y` (restricted to `within`) with saturated chains of
/// different lengths.
fn non_graded_pair(p: &SpectralPoset, within: impl Fn(usize) -> bool) -> Option<(usize, usize)> {
    let n = p.len();
    (0..n).filter(|&x| within(x)).find_map(|x| {
        (0..n)
            .filter(|&y| within(y))
            .find(|&y| matches!(p.path_lengths(x, y), Some((lo, hi)) if lo != hi))
            .map(|y| (x, y))
    })
}

fn chains_between(p: &SpectralPoset, x: usize, y: usize) -> (Chain, Chain) {
    (
        p.chain_of(&p.extreme_path(x, y, false)),
        p.chain_of(&p.extreme_path(x, y, true)),
    )
}

pub fn check_catenary(p: &SpectralPoset) -> Option<Witness> {
    non_graded_pair(p, |_| true).map(|(x, y)| {
        let (shorter, longer) = chains_between(p, x, y);
        Witness::Catenary { shorter, longer }
    })
}

pub fn is_equidimensional(p: &SpectralPoset) -> bool {
    check_equidimensional(p).is_none()
}

pub fn is_equicodimensional(p: &SpectralPoset) -> bool {
    check_equicodimensional(p).is_none()
}

pub fn is_catenary(p: &SpectralPoset) -> bool {
    check_catenary(p).is_none()
}

pub fn check_weakly_biequidimensional(p: &SpectralPoset) -> Option<Witness> {
    [
        (Property::Equidimensional, is_equidimensional(p)),
        (Property::Equicodimensional, is_equicodimensional(p)),
        (Property::Catenary, is_catenary(p)),
    ]
    .into_iter()
    .find(|(_, ok)| !ok)
    .map(|(fails, _)| Witness::WeaklyBiequidimensional { fails })
}

/// Equidimensional, equicodimensional and catenary.
pub fn is_weakly_biequidimensional(p: &SpectralPoset) -> bool {
    check_weakly_biequidimensional(p).is_none()
}

/// Witness: the first maximal chain and the first one of a different length.
pub fn check_biequidimensional(p: &SpectralPoset) -> Option<Witness> {
    if p.maximal_chain_lengths().len() <= 1 {
        return None;
    }
    let mut chains = p.maximal_chain_iter();
    let first = chains.next()?;
    let other = chains.find(|c| c.len() != first.len())?;
    let (a, b) = (p.chain_of(&first), p.chain_of(&other));
    let (shorter, longer) = if a.len() < b.len() { (a, b) } else { (b, a) };
    Some(Witness::Biequidimensional { shorter, longer })
}

/// All maximal chains have the same length.
pub fn is_biequidimensional(p: &SpectralPoset) -> bool {
    p.maximal_chain_lengths().len() == 1
}

fn comparable_pairs(p: &SpectralPoset) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = p.len();
    (0..n).flat_map(move |y| (0..n).filter(move |&z| p.lt(y, z)).map(move |z| (y, z)))
}

fn codim_between(p: &SpectralPoset, y: usize, z: usize) -> usize {
    p.path_lengths(y, z).expect("comparable pair").1
}

/// `dim(Z) = dim(Y) + codim(Y, Z)` for every `Y <= Z`.
pub fn check_dimension_additive(p: &SpectralPoset) -> Option<Witness> {
    comparable_pairs(p)
        .find(|&(y, z)| p.dim_at(z) != p.dim_at(y) + codim_between(p, y, z))
        .map(|(y, z)| Witness::DimensionAdditive {
            lower: p.name(y).into(),
            upper: p.name(z).into(),
            dim_lower: p.dim_at(y),
            codim_between: codim_between(p, y, z),
            dim_upper: p.dim_at(z),
        })
}

/// `codim(Y, X) = codim(Y, Z) + codim(Z, X)` for every `Y <= Z`.
pub fn check_codimension_additive(p: &SpectralPoset) -> Option<Witness> {
    comparable_pairs(p)
        .find(|&(y, z)| p.codim_in_space_at(y) != codim_between(p, y, z) + p.codim_in_space_at(z))
        .map(|(y, z)| Witness::CodimensionAdditive {
            lower: p.name(y).into(),
            upper: p.name(z).into(),
            codim_lower: p.codim_in_space_at(y),
            codim_between: codim_between(p, y, z),
            codim_upper: p.codim_in_space_at(z),
        })
}

pub fn dimension_additive_holds(p: &SpectralPoset) -> bool {
    check_dimension_additive(p).is_none()
}

pub fn codimension_additive_holds(p: &SpectralPoset) -> bool {
    check_codimension_additive(p).is_none()
}

/// `dim(X) = dim(Y) + codim(Y, X)` for every point.
pub fn check_dimension_formula(p: &SpectralPoset) -> Option<Witness> {
    let space_dim = p.dim_space();
    (0..p.len())
        .find(|&y| p.dim_at(y) + p.codim_in_space_at(y) != space_dim)
        .map(|y| Witness::DimensionFormula {
            point: p.name(y).into(),
            dim: p.dim_at(y),
            codim: p.codim_in_space_at(y),
            space_dim,
        })
}

pub fn dimension_formula_holds(p: &SpectralPoset) -> bool {
    check_dimension_formula(p).is_none()
}

/// Failure of the local poset at index `x`, if any. Catenarity is checked
/// before equidimensionality.
pub fn check_local_at(p: &SpectralPoset, x: usize) -> Option<LocalFailure> {
    if let Some((a, b)) = non_graded_pair(p, |y| p.le(x, y)) {
        let (shorter, longer) = chains_between(p, a, b);
        return Some(LocalFailure::NotCatenary { shorter, longer });
    }
    let tops: Vec<usize> = p.maximal_indices().into_iter().filter(|&c| p.le(x, c)).collect();
    first_mismatch(&tops, |c| codim_between(p, x, c)).map(|(a, ca, b, cb)| LocalFailure::NotEquidimensional {
        component: p.name(a).into(),
        codim: ca,
        other: p.name(b).into(),
        other_codim: cb,
    })
}

pub fn local_poset(p: &SpectralPoset, x: &str) -> Result<SpectralPoset, PosetError> {
    p.local_poset(x)
}

pub fn local_is_catenary(p: &SpectralPoset, x: &str) -> Result<bool, PosetError> {
    let xi = p.index_of(x)?;
    Ok(non_graded_pair(p, |y| p.le(xi, y)).is_none())
}

/// `codim(x, c)` agrees for every component `c` above `x`.
pub fn local_is_equidimensional(p: &SpectralPoset, x: &str) -> Result<bool, PosetError> {
    let xi = p.index_of(x)?;
    let tops: Vec<usize> = p.maximal_indices().into_iter().filter(|&c| p.le(xi, c)).collect();
    Ok(first_mismatch(&tops, |c| codim_between(p, xi, c)).is_none())
}

pub fn check_local_rings(p: &SpectralPoset) -> Option<Witness> {
    (0..p.len()).find_map(|x| {
        check_local_at(p, x).map(|failure| Witness::LocalRingsCatenaryEquidimensional {
            point: p.name(x).into(),
            failure,
        })
    })
}

pub fn local_rings_catenary_equidimensional(p: &SpectralPoset) -> bool {
    check_local_rings(p).is_none()
}

/// Every closed point has a catenary, equidimensional local poset of full
/// dimension. Equivalent to biequidimensionality.
pub fn closed_point_local_criterion(p: &SpectralPoset) -> bool {
    let d = p.dim_space();
    p.minimal_indices()
        .into_iter()
        .all(|m| check_local_at(p, m).is_none() && p.codim_in_space_at(m) == d)
}

fn noetherian_obstruction_indices(p: &SpectralPoset) -> impl Iterator<Item = (usize, usize)> + '_ {
    comparable_pairs(p).filter(move |&(x, y)| {
        codim_between(p, x, y) >= 2 && !(0..p.len()).any(|z| p.is_infinite(z) && p.lt(x, z) && p.lt(z, y))
    })
}

/// Pairs `x < y` of codimension at least 2 with no infinite family strictly
/// between them. A Noetherian spectrum has none; an empty result is only a
/// necessary condition for realizability.
pub fn noetherian_obstructions(p: &SpectralPoset) -> Vec<(String, String)> {
    noetherian_obstruction_indices(p)
        .map(|(x, y)| (p.name(x).to_string(), p.name(y).to_string()))
        .collect()
}

/// Builds the full report and cross-checks the equivalences that must hold
/// on every finite poset.
pub fn classify(p: &SpectralPoset) -> Result<AnalysisReport, AnalysisError> {
    classify_with(p, &codim::solve(p))
}

/// As [`classify`], reusing an already computed codimension result.
pub fn classify_with(p: &SpectralPoset, codim_result: &CodimResult) -> Result<AnalysisReport, AnalysisError> {
    let mut witnesses = Vec::new();
    let mut take = |w: Option<Witness>| {
        let holds = w.is_none();
        witnesses.extend(w);
        holds
    };

    let equidimensional = take(check_equidimensional(p));
    let equicodimensional = take(check_equicodimensional(p));
    let catenary = take(check_catenary(p));
    let weakly_biequidimensional = take(check_weakly_biequidimensional(p));
    let biequidimensional = take(check_biequidimensional(p));
    let dimension_formula = take(check_dimension_formula(p));
    let dimension_additive = take(check_dimension_additive(p));
    let codimension_additive = take(check_codimension_additive(p));
    let local_rings_catenary_equidimensional = take(check_local_rings(p));
    let codim_function_exists = take(codim_result.certificate().map(|c| Witness::CodimFunctionExists {
        walk: c.walk.clone(),
        signed_length: c.signed_length,
    }));
    let noetherian_violations = noetherian_obstructions(p);
    take(noetherian_violations.first().map(|(lower, upper)| Witness::NoetherianUnobstructed {
        lower: lower.clone(),
        upper: upper.clone(),
        codim: p.codim(lower, upper).unwrap_or(0),
    }));

    let report = AnalysisReport {
        dimension: p.dim_space(),
        maximal_chain_lengths: p.maximal_chain_lengths(),
        equidimensional,
        equicodimensional,
        catenary,
        weakly_biequidimensional,
        biequidimensional,
        dimension_formula,
        dimension_additive,
        codimension_additive,
        local_rings_catenary_equidimensional,
        codim_function_exists,
        noetherian_violations,
        witnesses,
    };
    cross_check(p, &report)?;
    Ok(report)
}

fn cross_check(p: &SpectralPoset, r: &AnalysisReport) -> Result<(), AnalysisError> {
    let bieq = r.biequidimensional;
    let candidate_valid = codim::valid_indices(
        p,
        &(0..p.len()).map(|i| p.codim_in_space_at(i) as i64).collect::<Vec<_>>(),
    );
    let checks = [
        (!bieq || r.weakly_biequidimensional, "biequidimensional but not weakly"),
        (bieq == (r.equidimensional && r.dimension_additive), "dimension additivity equivalence"),
        (bieq == (r.equicodimensional && r.codimension_additive), "codimension additivity equivalence"),
        (bieq == closed_point_local_criterion(p), "closed-point local criterion"),
        (!bieq || r.dimension_formula, "biequidimensional without dimension formula"),
        (!bieq || r.codim_function_exists, "biequidimensional without codimension function"),
        (candidate_valid == r.local_rings_catenary_equidimensional, "local-ring criterion for codim(-, X)"),
        (!r.dimension_additive || r.catenary, "dimension additivity without catenarity"),
        (!r.codimension_additive || r.catenary, "codimension additivity without catenarity"),
    ];
    match checks.into_iter().find(|(ok, _)| !ok) {
        Some((_, what)) => Err(AnalysisError::InternalInconsistency(format!("{what} on {p:?}"))),
        None => Ok(()),
    }
}
