//! The correspondence table of `h` at a fixed weight, in the row order of
//! the reference table: by `k`, then `|beta|`, then `beta` descending,
//! then `l(alpha)`, then `alpha` descending.

use std::cmp::Reverse;

use parteq_core::{apply_h, BicoloredPartition, Enumerator, Partition, PartitionPair};

use crate::error::CliError;

/// The reference rows for weight 11.
pub const GOLDEN: &str = include_str!("../data/table11.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub pair: PartitionPair,
    pub image: BicoloredPartition,
}

fn side(p: &Partition) -> String {
    if p.is_empty() {
        "ε".to_string()
    } else {
        p.to_string()
    }
}

impl Row {
    pub fn render(&self) -> String {
        format!(
            "({}, {}) -> {}",
            side(&self.pair.alpha),
            side(&self.pair.beta),
            self.image
        )
    }
}

pub fn rows(n: usize, enumerator: &Enumerator) -> Result<Vec<Row>, CliError> {
    let mut pairs = enumerator.c(n, None)?;
    pairs.sort_by_key(|p| {
        (
            p.beta.len(),
            p.beta.weight(),
            Reverse(p.beta.clone()),
            p.alpha.len(),
            Reverse(p.alpha.clone()),
        )
    });
    pairs
        .into_iter()
        .map(|pair| {
            Ok(Row {
                image: apply_h(&pair)?,
                pair,
            })
        })
        .collect()
}

/// A line where the computed table and the golden file disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    /// 1-based row number.
    pub line: usize,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

pub fn compare(rendered: &[String], golden: &str) -> Vec<Difference> {
    let golden: Vec<&str> = golden.lines().filter(|l| !l.trim().is_empty()).collect();
    (0..rendered.len().max(golden.len()))
        .filter_map(|i| {
            let expected = golden.get(i).map(|s| s.to_string());
            let actual = rendered.get(i).cloned();
            (expected != actual).then_some(Difference {
                line: i + 1,
                expected,
                actual,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_eleven_matches_golden() {
        let rendered: Vec<String> = rows(11, &Enumerator::new())
            .unwrap()
            .iter()
            .map(Row::render)
            .collect();
        assert_eq!(rendered.len(), 38);
        assert_eq!(compare(&rendered, GOLDEN), vec![]);
    }

    #[test]
    fn differences_are_listed() {
        let diffs = compare(&["a".into(), "b".into()], "a\nc\nd\n");
        assert_eq!(diffs.len(), 2);
        assert_eq!(diffs[0].line, 2);
        assert_eq!(diffs[1].actual, None);
    }
}
