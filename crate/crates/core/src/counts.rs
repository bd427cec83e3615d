//! Refined cardinalities of the families and the equalities among them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::enumerate::Enumerator;
use crate::error::EnumerateError;
use crate::membership::{Family, FamilyValue};
use crate::stats::{Statistic, Statistics};

/// A refinement cell `(m, k)`. Families graded by a single statistic use
/// `m = 0`.
pub type Cell = (i64, i64);

/// Number of members of a family of fixed weight, by cell.
pub type CellCounts = BTreeMap<Cell, u64>;

/// The cell a family member is counted in.
pub fn cell_of(family: Family, value: &FamilyValue) -> Cell {
    let stat = |s| value.statistic(s).unwrap_or(0);
    let signed = || stat(Statistic::PositiveParts) - stat(Statistic::NegativeParts);
    match family {
        Family::Ped => (stat(Statistic::Length), stat(Statistic::EvenParts)),
        Family::F => (stat(Statistic::PlainOnes), stat(Statistic::OverlinedOdd)),
        Family::FSigned => (stat(Statistic::PositiveParts), signed()),
        Family::V | Family::C => (0, stat(Statistic::BetaLength)),
        Family::A => (0, stat(Statistic::LabeledParts)),
        Family::ASigned => (0, signed()),
        Family::B => (0, stat(Statistic::RedParts)),
    }
}

pub fn cell_counts(
    enumerator: &Enumerator,
    family: Family,
    n: usize,
) -> Result<CellCounts, EnumerateError> {
    let mut counts = CellCounts::new();
    for value in enumerator.family(family, n, None, None)? {
        *counts.entry(cell_of(family, &value)).or_default() += 1;
    }
    Ok(counts)
}

/// The three counting equalities checked by exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountIdentity {
    /// `ped(n, m, k) = F(n, m, k) = F-1(n, m, k)`.
    DistinctEven,
    /// `V(n, k) = A(n, k) = A-1(n, k)`, and `sum_k V(n, k) = ped(n)`.
    Labeled,
    /// `ped(n, k) = B(n, k)`, with `k` the number of even parts, and
    /// `C(n, k)` alongside.
    Bicolored,
}

impl CountIdentity {
    pub const ALL: [CountIdentity; 3] = [
        CountIdentity::DistinctEven,
        CountIdentity::Labeled,
        CountIdentity::Bicolored,
    ];

    pub fn families(self) -> &'static [Family] {
        match self {
            CountIdentity::DistinctEven => &[Family::Ped, Family::F, Family::FSigned],
            CountIdentity::Labeled => &[Family::V, Family::A, Family::ASigned],
            CountIdentity::Bicolored => &[Family::Ped, Family::B, Family::C],
        }
    }

    /// Default exhaustive range.
    pub fn default_n_max(self) -> usize {
        match self {
            CountIdentity::Bicolored => 22,
            _ => 30,
        }
    }

    fn project(self, family: Family, cell: Cell) -> Cell {
        match (self, family) {
            (CountIdentity::Bicolored, Family::Ped) => (0, cell.1),
            _ => cell,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountMismatch {
    pub n: usize,
    /// `None` for the total-count check.
    pub cell: Option<Cell>,
    pub counts: Vec<(Family, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub identity: CountIdentity,
    pub n_max: usize,
    /// Distinct `(n, cell)` pairs compared.
    pub cells_checked: usize,
    /// Objects enumerated across all families.
    pub objects: u64,
    pub mismatches: Vec<CountMismatch>,
}

impl CountReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the refined counts of the identity's families for every weight
/// up to `n_max`.
pub fn verify_counts(
    identity: CountIdentity,
    n_max: usize,
    enumerator: &Enumerator,
) -> Result<CountReport, EnumerateError> {
    let families = identity.families();
    let mut report = CountReport {
        identity,
        n_max,
        cells_checked: 0,
        objects: 0,
        mismatches: Vec::new(),
    };
    for n in 0..=n_max {
        let mut tables = Vec::with_capacity(families.len());
        for &family in families {
            let mut projected = CellCounts::new();
            for (cell, count) in cell_counts(enumerator, family, n)? {
                *projected.entry(identity.project(family, cell)).or_default() += count;
                report.objects += count;
            }
            tables.push(projected);
        }
        let mut cells: Vec<Cell> = tables.iter().flat_map(|t| t.keys().copied()).collect();
        cells.sort_unstable();
        cells.dedup();
        for cell in cells {
            report.cells_checked += 1;
            let counts: Vec<(Family, u64)> = families
                .iter()
                .zip(&tables)
                .map(|(&f, t)| (f, t.get(&cell).copied().unwrap_or(0)))
                .collect();
            if counts.iter().any(|&(_, c)| c != counts[0].1) {
                report.mismatches.push(CountMismatch {
                    n,
                    cell: Some(cell),
                    counts,
                });
            }
        }
        if identity == CountIdentity::Labeled {
            let v: u64 = tables[0].values().sum();
            let ped = enumerator.ped(n, None, None)?.len() as u64;
            report.objects += ped;
            if v != ped {
                report.mismatches.push(CountMismatch {
                    n,
                    cell: None,
                    counts: alloc::vec![(Family::V, v), (Family::Ped, ped)],
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_agree() {
        let e = Enumerator::new();
        for identity in CountIdentity::ALL {
            let report = verify_counts(identity, 10, &e).unwrap();
            assert!(report.passed(), "{identity:?}: {:?}", report.mismatches);
            assert!(report.cells_checked > 10);
        }
    }

    #[test]
    fn ped_cells_of_four() {
        // 4, 3+1, 2+1+1, 1+1+1+1
        let counts = cell_counts(&Enumerator::new(), Family::Ped, 4).unwrap();
        let expected: CellCounts = [((1, 1), 1), ((2, 0), 1), ((3, 1), 1), ((4, 0), 1)].into();
        assert_eq!(counts, expected);
    }

    #[test]
    fn limit_is_reported() {
        let e = Enumerator::with_limit(5);
        assert!(verify_counts(CountIdentity::Labeled, 6, &e).is_err());
    }
}
