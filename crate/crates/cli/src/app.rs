//! Command definitions and dispatch.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use parteq_core::counts::{cell_counts, verify_counts, CountIdentity};
use parteq_core::qseries::{verify_identity, Identity};
use parteq_core::{
    roundtrip_report, validate_membership, Bijection, Enumerator, Family, Statistics, DEFAULT_LIMIT,
};
use serde_json::json;

use crate::error::CliError;
use crate::json::{parse_input, to_json};
use crate::report::{counts_json, identity_json, roundtrip_json};
use crate::table;

#[derive(Parser, Debug)]
#[command(
    name = "parteq",
    version,
    about = "Partitions with distinct even parts: enumeration, bijections and identity checks"
)]
pub struct Cli {
    /// Output notation.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest weight the enumerators will accept.
    #[arg(long, global = true, env = "PARTEQ_LIMIT", default_value_t = DEFAULT_LIMIT)]
    pub limit: usize,
    /// Drop summary lines.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List a family at one weight in canonical order.
    Enumerate {
        family: Family,
        #[arg(long)]
        n: usize,
        /// Length-type refinement (ped, F, F-1 only).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Apply a bijection or its inverse to one object.
    Map {
        bijection: Bijection,
        #[arg(long)]
        inverse: bool,
        /// Text notation or JSON.
        #[arg(long)]
        input: String,
    },
    /// Run an exhaustive check: theorem1.2, theorem1.3, theorem1.4, a
    /// bijection tag or an identity tag.
    Verify {
        target: Target,
        #[arg(long)]
        n_max: Option<usize>,
        /// Truncation order for identities.
        #[arg(long)]
        order: Option<usize>,
    },
    /// The correspondence table of h for weight 11.
    Table11 {
        /// Compare with the golden file.
        #[arg(long)]
        check: bool,
    },
    /// Statistics of one object, or cell counts of a family at one weight.
    Stats {
        family: Family,
        #[arg(long, required_unless_present = "n", conflicts_with = "n")]
        input: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Counts(CountIdentity),
    Bijection(Bijection),
    Identity(Identity),
}

impl Target {
    pub const COUNT_TAGS: [(&'static str, CountIdentity); 3] = [
        ("theorem1.2", CountIdentity::DistinctEven),
        ("theorem1.3", CountIdentity::Labeled),
        ("theorem1.4", CountIdentity::Bicolored),
    ];
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((_, c)) = Target::COUNT_TAGS
            .iter()
            .find(|(tag, _)| tag.eq_ignore_ascii_case(s))
        {
            return Ok(Target::Counts(*c));
        }
        if let Ok(b) = s.parse() {
            return Ok(Target::Bijection(b));
        }
        s.parse()
            .map(Target::Identity)
            .map_err(|_| format!("unknown verification target `{s}`"))
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Counts(c) => {
                let tag = Target::COUNT_TAGS
                    .iter()
                    .find(|(_, x)| x == c)
                    .map(|(t, _)| *t);
                f.write_str(tag.unwrap_or("counts"))
            }
            Target::Bijection(b) => b.fmt(f),
            Target::Identity(i) => i.fmt(f),
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let enumerator = Enumerator::with_limit(cli.limit);
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Enumerate { family, n, m, k } => {
            let values = enumerator.family(*family, *n, *m, *k)?;
            for v in &values {
                if json {
                    writeln!(out, "{}", to_json(v))?;
                } else {
                    writeln!(out, "{v}")?;
                }
            }
            if !cli.quiet {
                if json {
                    writeln!(out, "{}", json!({ "count": values.len() }))?;
                } else {
                    writeln!(out, "count={}", values.len())?;
                }
            }
        }
        Command::Map {
            bijection,
            inverse,
            input,
        } => {
            let source = if *inverse {
                bijection.codomain()
            } else {
                bijection.domain()
            };
            let value = parse_input(source, input)?;
            let image = bijection.apply(&value, *inverse)?;
            if json {
                let report = json!({
                    "bijection": bijection.tag(),
                    "inverse": inverse,
                    "input": to_json(&value),
                    "output": to_json(&image),
                    "text": image.to_string(),
                });
                writeln!(out, "{report}")?;
            } else {
                writeln!(out, "{image}")?;
            }
        }
        Command::Verify {
            target,
            n_max,
            order,
        } => {
            verify(cli, &enumerator, *target, *n_max, *order, out)?;
        }
        Command::Table11 { check } => {
            let rows = table::rows(11, &enumerator)?;
            let rendered: Vec<String> = rows.iter().map(table::Row::render).collect();
            if *check {
                let diffs = table::compare(&rendered, table::GOLDEN);
                for d in &diffs {
                    writeln!(
                        out,
                        "row {}: expected {}, got {}",
                        d.line,
                        d.expected.as_deref().unwrap_or("nothing"),
                        d.actual.as_deref().unwrap_or("nothing")
                    )?;
                }
                if !diffs.is_empty() {
                    return Err(CliError::Failed(format!("{} rows differ", diffs.len())));
                }
                if !cli.quiet {
                    writeln!(out, "{} rows match", rendered.len())?;
                }
            } else if json {
                for row in rows {
                    let row = json!({
                        "c": to_json(&row.pair.into()),
                        "b": to_json(&row.image.into()),
                    });
                    writeln!(out, "{row}")?;
                }
            } else {
                for line in &rendered {
                    writeln!(out, "{line}")?;
                }
            }
        }
        Command::Stats { family, input, n } => match (input, n) {
            (Some(input), _) => {
                let value = parse_input(*family, input)?;
                validate_membership(*family, &value).map_err(|r| CliError::Domain(r.reason))?;
                let stats = value.statistics();
                if json {
                    let map: serde_json::Map<String, serde_json::Value> = stats
                        .iter()
                        .map(|(s, v)| (s.name().to_string(), json!(v)))
                        .collect();
                    writeln!(out, "{}", serde_json::Value::Object(map))?;
                } else {
                    for (s, v) in stats {
                        writeln!(out, "{}={v}", s.name())?;
                    }
                }
            }
            (None, Some(n)) => {
                let counts = cell_counts(&enumerator, *family, *n)?;
                if json {
                    let cells: Vec<_> = counts
                        .iter()
                        .map(|((m, k), c)| json!({ "m": m, "k": k, "count": c }))
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        json!({ "family": family.tag(), "n": n, "cells": cells })
                    )?;
                } else {
                    for ((m, k), c) in &counts {
                        writeln!(out, "m={m} k={k} count={c}")?;
                    }
                    if !cli.quiet {
                        writeln!(out, "count={}", counts.values().sum::<u64>())?;
                    }
                }
            }
            (None, None) => unreachable!("clap requires --input or --n"),
        },
    }
    Ok(())
}

fn verify(
    cli: &Cli,
    enumerator: &Enumerator,
    target: Target,
    n_max: Option<usize>,
    order: Option<usize>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let json = cli.format == Format::Json;
    let (report, summary, failure) = match target {
        Target::Counts(identity) => {
            let n_max = n_max.unwrap_or(identity.default_n_max());
            let r = verify_counts(identity, n_max, enumerator)?;
            let summary = format!(
                "n_max={n_max} cells={} objects={}",
                r.cells_checked, r.objects
            );
            let failure = r.mismatches.first().map(|m| {
                let counts: Vec<String> = m
                    .counts
                    .iter()
                    .map(|(f, c)| format!("{}={c}", f.tag()))
                    .collect();
                match m.cell {
                    Some((a, b)) => format!("n={} cell=({a}, {b}): {}", m.n, counts.join(" ")),
                    None => format!("n={} totals: {}", m.n, counts.join(" ")),
                }
            });
            (counts_json(&target.to_string(), &r), summary, failure)
        }
        Target::Bijection(b) => {
            let n_max = n_max.unwrap_or(if b == Bijection::H { 22 } else { 30 });
            let r = roundtrip_report(b, n_max, enumerator)?;
            let summary = format!(
                "n_max={n_max} checked={} codomain={} cells={}",
                r.checked,
                r.checked_codomain,
                r.cells.len()
            );
            let failure = r
                .failures
                .first()
                .map(|f| format!("{} at {}: {}", f.input, f.stage, f.detail));
            (roundtrip_json(&r), summary, failure)
        }
        Target::Identity(identity) => {
            let order = order.unwrap_or(200);
            let r = verify_identity(identity, order);
            let through = r
                .enumerated_through
                .map(|n| format!(" enumerated_through={n}"))
                .unwrap_or_default();
            let summary = format!("order={order}{through}");
            let failure = r
                .first_mismatch
                .as_ref()
                .map(|m| format!("q^{}: lhs={} {}={}", m.degree, m.lhs, m.against, m.rhs));
            (identity_json(&r), summary, failure)
        }
    };
    if json {
        writeln!(out, "{report}")?;
    } else if !cli.quiet {
        let status = if failure.is_none() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {target} {summary}")?;
    }
    match failure {
        Some(f) => Err(CliError::Failed(f)),
        None => Ok(()),
    }
}
