//! Exhaustive checking of a bijection over all small weights.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::Bijection;
use crate::enumerate::Enumerator;
use crate::error::EnumerateError;
use crate::membership::{validate_membership, FamilyValue};
use crate::stats::{Statistic, Statistics};

/// The refinement cell a value sits in: weight, an optional length-type
/// statistic, and the tracked count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub n: i64,
    pub m: Option<i64>,
    pub k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub stage: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundtripReport {
    pub bijection: Bijection,
    pub n_max: usize,
    /// Domain elements pushed through the map.
    pub checked: usize,
    /// Codomain elements pulled back through the inverse.
    pub checked_codomain: usize,
    /// Domain count per cell; the codomain count was found equal unless a
    /// `cardinality` failure says otherwise.
    pub cells: BTreeMap<Cell, usize>,
    pub failures: Vec<Failure>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn stat(v: &FamilyValue, s: Statistic) -> i64 {
    v.statistic(s).unwrap_or(0)
}

fn domain_cell(b: Bijection, v: &FamilyValue) -> Cell {
    let n = v.weight();
    match b {
        Bijection::F1 | Bijection::F2 => Cell {
            n,
            m: Some(stat(v, Statistic::Length)),
            k: stat(v, Statistic::EvenParts),
        },
        Bijection::G1 | Bijection::H => Cell {
            n,
            m: None,
            k: stat(v, Statistic::BetaLength),
        },
        Bijection::G2 => Cell {
            n,
            m: Some(stat(v, Statistic::Length)),
            k: stat(v, Statistic::LabeledParts),
        },
    }
}

fn codomain_cell(b: Bijection, v: &FamilyValue) -> Cell {
    let n = v.weight();
    match b {
        Bijection::F1 => Cell {
            n,
            m: Some(stat(v, Statistic::PlainOnes)),
            k: stat(v, Statistic::OverlinedOdd),
        },
        Bijection::F2 | Bijection::G2 => {
            let pos = stat(v, Statistic::PositiveParts);
            Cell {
                n,
                m: Some(pos),
                k: pos - stat(v, Statistic::NegativeParts),
            }
        }
        Bijection::G1 => Cell {
            n,
            m: None,
            k: stat(v, Statistic::LabeledParts),
        },
        Bijection::H => Cell {
            n,
            m: None,
            k: stat(v, Statistic::RedParts),
        },
    }
}

/// Runs `bijection` over every domain element of weight at most `n_max`
/// and its inverse over every codomain element, recording anything that
/// goes wrong: forward or inverse errors, images outside the codomain or
/// in the wrong refinement cell, failed round trips, collisions, and cells
/// whose domain and codomain sizes differ.
pub fn roundtrip_report(
    bijection: Bijection,
    n_max: usize,
    enumerator: &Enumerator,
) -> Result<RoundtripReport, EnumerateError> {
    let mut report = RoundtripReport {
        bijection,
        n_max,
        checked: 0,
        checked_codomain: 0,
        cells: BTreeMap::new(),
        failures: Vec::new(),
    };
    let mut fail = |input: &FamilyValue, stage: &'static str, detail: String| {
        report.failures.push(Failure {
            input: input.to_string(),
            stage,
            detail,
        });
    };
    let mut cells: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut codomain_cells: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut checked = 0;
    let mut checked_codomain = 0;

    for n in 0..=n_max {
        let domain = enumerator.family(bijection.domain(), n, None, None)?;
        let codomain = enumerator.family(bijection.codomain(), n, None, None)?;
        let mut images = BTreeSet::new();
        for x in &domain {
            checked += 1;
            let cell = domain_cell(bijection, x);
            *cells.entry(cell).or_default() += 1;
            let y = match bijection.apply(x, false) {
                Ok(y) => y,
                Err(e) => {
                    fail(x, "forward", e.to_string());
                    continue;
                }
            };
            if let Err(r) = validate_membership(bijection.codomain(), &y) {
                fail(x, "codomain", r.reason);
            }
            let image_cell = codomain_cell(bijection, &y);
            if image_cell != cell {
                fail(
                    x,
                    "statistics",
                    format!("{cell:?} mapped to {image_cell:?}"),
                );
            }
            if !images.insert(y.to_string()) {
                fail(x, "injectivity", format!("image {} already produced", y));
            }
            match bijection.apply(&y, true) {
                Ok(back) if back == *x => {}
                Ok(back) => fail(x, "inverse", format!("came back as {}", back)),
                Err(e) => fail(x, "inverse", e.to_string()),
            }
        }
        for y in &codomain {
            checked_codomain += 1;
            *codomain_cells
                .entry(codomain_cell(bijection, y))
                .or_default() += 1;
            match bijection.apply(y, true) {
                Ok(x) => match bijection.apply(&x, false) {
                    Ok(again) if again == *y => {}
                    Ok(again) => fail(y, "codomain-roundtrip", format!("maps to {}", again)),
                    Err(e) => fail(y, "codomain-roundtrip", e.to_string()),
                },
                Err(e) => fail(y, "codomain-inverse", e.to_string()),
            }
        }
    }

    let keys: BTreeSet<Cell> = cells.keys().chain(codomain_cells.keys()).copied().collect();
    for cell in keys {
        let (a, b) = (
            cells.get(&cell).copied().unwrap_or(0),
            codomain_cells.get(&cell).copied().unwrap_or(0),
        );
        if a != b {
            report.failures.push(Failure {
                input: format!("{cell:?}"),
                stage: "cardinality",
                detail: format!("domain has {a}, codomain has {b}"),
            });
        }
    }
    report.checked = checked;
    report.checked_codomain = checked_codomain;
    report.cells = cells;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bijections_small() {
        let e = Enumerator::new();
        for b in Bijection::ALL {
            let report = roundtrip_report(b, 10, &e).unwrap();
            assert!(
                report.passed(),
                "{b}: {:?}",
                &report.failures[..report.failures.len().min(5)]
            );
        }
    }

    #[test]
    fn weight_zero_checks_only_the_empty_object() {
        let report = roundtrip_report(Bijection::G2, 0, &Enumerator::new()).unwrap();
        assert_eq!(report.checked, 1);
        assert!(report.passed());
    }
}
