//! Built-in fixture spaces with their known classifications.
//!
//! Point names of the ring-theoretic fixtures are the prime ideals they model.
//! The order is specialization, so a larger prime sits *lower*: a cover
//! `(v,w,y) < (v,w)` says `V(v,w,y)` is a maximal proper irreducible closed
//! subset of `V(v,w)`.

use thiserror::Error;

use crate::analysis::{classify, AnalysisReport, Property};
use crate::codim::{self, CodimResult};
use crate::poset::SpectralPoset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no catalog entry named `{0}`")]
    UnknownName(String),
}

/// Expected values for an entry. Every property is pinned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub dimension: usize,
    pub maximal_chain_lengths: Vec<usize>,
    pub properties: Vec<(Property, bool)>,
}

impl Expected {
    pub fn get(&self, property: Property) -> Option<bool> {
        self.properties.iter().find(|(p, _)| *p == property).map(|&(_, v)| v)
    }

    /// Human-readable differences against a computed report.
    pub fn mismatches(&self, report: &AnalysisReport) -> Vec<String> {
        let mut out = Vec::new();
        if report.dimension != self.dimension {
            out.push(format!("dimension: expected {}, got {}", self.dimension, report.dimension));
        }
        if report.maximal_chain_lengths != self.maximal_chain_lengths {
            out.push(format!(
                "maximal chain lengths: expected {:?}, got {:?}",
                self.maximal_chain_lengths, report.maximal_chain_lengths
            ));
        }
        for &(p, want) in &self.properties {
            let got = report.get(p);
            if got != want {
                out.push(format!("{p}: expected {want}, got {got}"));
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub poset: SpectralPoset,
    pub expected: Expected,
    /// What the fixture models.
    pub provenance: &'static str,
}

impl CatalogEntry {
    pub fn expected_codim_exists(&self) -> bool {
        self.expected.get(Property::CodimFunctionExists).unwrap_or(false)
    }
}

pub const NAMES: [&str; 7] = ["BUTTERFLY", "NOETHERIAN_BUTTERFLY", "GLUE", "GLUE2", "WX", "CHAIN_n", "ANTICHAIN_n"];

/// Entry names; the parametric families appear as `CHAIN_n` and `ANTICHAIN_n`.
pub fn list() -> Vec<&'static str> {
    NAMES.to_vec()
}

const MAX_PARAMETRIC: usize = 64;

pub fn get(name: &str) -> Result<CatalogEntry, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_string());
    match name {
        "BUTTERFLY" => Ok(butterfly(false)),
        "NOETHERIAN_BUTTERFLY" => Ok(butterfly(true)),
        "GLUE" => Ok(glue()),
        "GLUE2" => Ok(glue2()),
        "WX" => Ok(wx()),
        _ => {
            let (family, n) = name.rsplit_once('_').ok_or_else(unknown)?;
            let n: usize = n.parse().map_err(|_| unknown())?;
            if !(1..=MAX_PARAMETRIC).contains(&n) {
                return Err(unknown());
            }
            match family {
                "CHAIN" => Ok(chain(n)),
                "ANTICHAIN" => Ok(antichain(n)),
                _ => Err(unknown()),
            }
        }
    }
}

fn props(values: [bool; 11]) -> Vec<(Property, bool)> {
    Property::ALL.into_iter().zip(values).collect()
}

fn entry(
    name: &str,
    points: &[&str],
    covers: &[(&str, &str)],
    infinite: &[&str],
    expected: Expected,
    provenance: &'static str,
) -> CatalogEntry {
    let poset = SpectralPoset::build(points.iter().copied(), covers.iter().copied(), infinite.iter().copied())
        .expect("catalog fixture is valid");
    CatalogEntry { name: name.to_string(), poset, expected, provenance }
}

const T: bool = true;
const F: bool = false;

fn butterfly(noetherian: bool) -> CatalogEntry {
    // eqdim eqcodim caten weakly bieq dimfm dimadd codadd local codfn noeth
    let expected = Expected {
        dimension: 2,
        maximal_chain_lengths: vec![1, 2],
        properties: props([T, T, T, T, F, T, F, F, F, F, noetherian]),
    };
    let (name, infinite, provenance): (_, &[&str], _) = if noetherian {
        (
            "NOETHERIAN_BUTTERFLY",
            &["x3", "x4"],
            "butterfly with an infinite family of height-one points on each side, as forced in a Noetherian spectrum",
        )
    } else {
        ("BUTTERFLY", &[], "six-point butterfly: two chains of length 2 crossed by two covers of length 1")
    };
    entry(
        name,
        &["x1", "x2", "x3", "x4", "x5", "x6"],
        &[("x1", "x3"), ("x3", "x5"), ("x2", "x4"), ("x4", "x6"), ("x1", "x6"), ("x2", "x5")],
        infinite,
        expected,
        provenance,
    )
}

fn glue() -> CatalogEntry {
    entry(
        "GLUE",
        &["(v,w)", "(y)", "(v,w,x)", "(w,y)", "(v,w,x,y-1)", "(v,w,y)"],
        &[
            ("(v,w,x,y-1)", "(v,w,x)"),
            ("(v,w,x)", "(v,w)"),
            ("(v,w,y)", "(w,y)"),
            ("(w,y)", "(y)"),
            ("(v,w,y)", "(v,w)"),
        ],
        &["(v,w,x)", "(w,y)"],
        Expected {
            dimension: 2,
            maximal_chain_lengths: vec![1, 2],
            properties: props([T, T, T, T, F, T, F, F, F, T, T]),
        },
        "k[v,w,x,y]/(vy,wy) localized at (v,w,x,y-1) and (v,w,y): a 3-space and a plane glued along a line",
    )
}

/// Flags on GLUE2 are the minimum set that clears every obstruction; it is
/// unique because each flagged point is the only point inside some interval
/// of codimension 2.
pub const GLUE2_INFINITE: [&str; 5] = ["(u,v,w,x)", "(u,v,w,x,y-1)", "(w,y,z)", "(v,w,y,z)", "(u,v,w,y)"];

fn glue2() -> CatalogEntry {
    entry(
        "GLUE2",
        &[
            "(u,v,w)",
            "(u,v,w,x)",
            "(u,v,w,x,y-1)",
            "(u,v,w,x,y-1,z-1)",
            "(y,z)",
            "(w,y,z)",
            "(v,w,y,z)",
            "(u,v,w,y,z)",
            "(u,v,w,y)",
        ],
        &[
            ("(u,v,w,x,y-1,z-1)", "(u,v,w,x,y-1)"),
            ("(u,v,w,x,y-1)", "(u,v,w,x)"),
            ("(u,v,w,x)", "(u,v,w)"),
            ("(u,v,w,y,z)", "(v,w,y,z)"),
            ("(v,w,y,z)", "(w,y,z)"),
            ("(w,y,z)", "(y,z)"),
            ("(u,v,w,y,z)", "(u,v,w,y)"),
            ("(u,v,w,y)", "(u,v,w)"),
        ],
        &GLUE2_INFINITE,
        Expected {
            dimension: 3,
            maximal_chain_lengths: vec![2, 3],
            properties: props([T, T, T, T, F, F, F, F, F, T, T]),
        },
        "k[u,v,w,x,y,z]/(uy,uz,vy,vz,wy,wz) localized at its two closed points: 4-space and 3-space glued along a line",
    )
}

fn wx() -> CatalogEntry {
    entry(
        "WX",
        &["(w)", "(x)", "(v,w)", "(x,y)", "(u,v,w)", "(w,x)", "(x,y,z)"],
        &[
            ("(u,v,w)", "(v,w)"),
            ("(v,w)", "(w)"),
            ("(x,y,z)", "(x,y)"),
            ("(x,y)", "(x)"),
            ("(w,x)", "(w)"),
            ("(w,x)", "(x)"),
        ],
        &["(v,w)", "(x,y)"],
        Expected {
            dimension: 2,
            maximal_chain_lengths: vec![1, 2],
            properties: props([T, F, T, F, F, F, F, T, T, T, T]),
        },
        "k[u,v,w,x,y,z]/(wx) localized at (u,v,w), (w,x), (x,y,z): equidimensional with good local rings, yet not biequidimensional",
    )
}

fn letter_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| char::from(b'a' + i as u8).to_string()).collect()
    } else {
        (0..n).map(|i| format!("p{i}")).collect()
    }
}

/// `n` points in a single chain, `a < b < ...`.
fn chain(n: usize) -> CatalogEntry {
    let names = letter_names(n);
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let poset = SpectralPoset::from_index_pairs(names, covers, vec![false; n]).expect("chain is valid");
    let mut properties = props([T; 11]);
    properties[10].1 = n <= 2;
    CatalogEntry {
        name: format!("CHAIN_{n}"),
        poset,
        expected: Expected { dimension: n - 1, maximal_chain_lengths: vec![n - 1], properties },
        provenance: "parametric chain",
    }
}

fn antichain(n: usize) -> CatalogEntry {
    let poset = SpectralPoset::from_index_pairs(letter_names(n), Vec::new(), vec![false; n])
        .expect("antichain is valid");
    CatalogEntry {
        name: format!("ANTICHAIN_{n}"),
        poset,
        expected: Expected { dimension: 0, maximal_chain_lengths: vec![0], properties: props([T; 11]) },
        provenance: "parametric antichain",
    }
}

/// Outcome of checking one entry.
#[derive(Debug, Clone)]
pub struct EntryCheck {
    pub name: String,
    pub mismatches: Vec<String>,
}

impl EntryCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub entries: Vec<EntryCheck>,
}

impl Verification {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(EntryCheck::passed)
    }
}

/// Named entries plus small members of the parametric families.
pub fn verification_set() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = NAMES[..5].iter().map(|n| get(n).unwrap()).collect();
    out.extend((1..=4).map(chain));
    out.extend((1..=3).map(antichain));
    out
}

pub fn verify_entry(entry: &CatalogEntry) -> EntryCheck {
    let result = codim::solve(&entry.poset);
    let mut mismatches = match classify(&entry.poset) {
        Ok(report) => entry.expected.mismatches(&report),
        Err(e) => vec![e.to_string()],
    };
    if result.exists() != entry.expected_codim_exists() {
        mismatches.push(format!("codimension function: expected {}", entry.expected_codim_exists()));
    }
    match &result {
        CodimResult::Assignment(a) => {
            if codim::is_codim_function(&entry.poset, a) != Ok(true) {
                mismatches.push("solver assignment fails the cover condition".into());
            }
        }
        CodimResult::Certificate(c) => {
            if !c.verify(&entry.poset) {
                mismatches.push("certificate does not verify".into());
            }
        }
    }
    EntryCheck { name: entry.name.clone(), mismatches }
}

pub fn verify_all() -> Verification {
    Verification { entries: verification_set().iter().map(verify_entry).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parametric_names() {
        assert_eq!(get("CHAIN_3").unwrap().poset.points(), ["a", "b", "c"]);
        assert_eq!(get("ANTICHAIN_2").unwrap().poset.len(), 2);
        for bad in ["CHAIN_0", "CHAIN_x", "TREE_3", "butterfly", "CHAIN_65"] {
            assert!(matches!(get(bad), Err(CatalogError::UnknownName(_))), "{bad}");
        }
    }

    #[test]
    fn chain3_expected_all_true() {
        let e = get("CHAIN_3").unwrap();
        assert_eq!(e.expected.dimension, 2);
        assert!(Property::CENSUS.iter().all(|&p| e.expected.get(p) == Some(true)));
    }

    #[test]
    fn butterfly_expected_not_biequidimensional() {
        assert_eq!(get("BUTTERFLY").unwrap().expected.get(Property::Biequidimensional), Some(false));
    }

    #[test]
    fn verify_all_passes() {
        let v = verify_all();
        for e in &v.entries {
            assert!(e.passed(), "{}: {:?}", e.name, e.mismatches);
        }
    }
}
