//! The subcommands. Each returns what to print and which files to write;
//! nothing here touches the filesystem.

use std::path::{Path, PathBuf};

use ar_singularity::{build_xi, ArGroup, FlopChoice, Resolution, ResolutionJson, Xi, XiStar};
use ideal_calculus::{cell_of_ideal, enumerate_central_ideals, IdealJson};
use serde_json::json;
use toric_lattice::{ChartDescriptor, Decomposition, DecompositionJson};

use crate::export::{charts_csv, decomposition_csv, ideals_csv, parse_decomposition_csv, ChartRow, IdealRow, OffMesh};
use crate::suites::{run_suite, Suite};
use crate::{label_name, CliError, CommandConfig, Format, Subcommand};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    /// (path, content), written in order
    pub files: Vec<(PathBuf, String)>,
    pub exit_code: i32,
}

impl Outcome {
    /// Content goes to `out` when given, to stdout otherwise.
    fn single(out: Option<&Path>, content: String) -> Self {
        match out {
            Some(p) => Outcome {
                files: vec![(p.to_path_buf(), content)],
                ..Outcome::default()
            },
            None => Outcome {
                stdout: content,
                ..Outcome::default()
            },
        }
    }
}

pub fn execute(cfg: &CommandConfig, input: Option<&str>) -> Result<Outcome, CliError> {
    match &cfg.subcommand {
        Subcommand::Decompose => decompose(cfg),
        Subcommand::Ideals => ideals(cfg),
        Subcommand::Charts => charts(cfg),
        Subcommand::Resolve => resolve(cfg),
        Subcommand::Flop { center, axis } => flop(cfg, need(input)?, center, *axis),
        Subcommand::Verify => verify(cfg),
        Subcommand::Export => export(cfg, need(input)?),
    }
}

fn need(input: Option<&str>) -> Result<&str, CliError> {
    input.ok_or_else(|| CliError::Usage("an input file is required".into()))
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    with_newline(serde_json::to_string_pretty(v).expect("plain data serializes"))
}

/// JSON, CSV or OFF text of a decomposition (and its choice vector, if a resolution).
pub fn emit_decomposition(d: &Decomposition, choice: Option<&[u8]>, format: Format) -> Result<String, CliError> {
    let j = DecompositionJson::from_decomposition(d)?;
    Ok(match format {
        Format::Json => match choice {
            Some(c) => pretty(&ResolutionJson {
                decomposition: j,
                choice_vector: c.to_vec(),
            }),
            None => pretty(&j),
        },
        Format::Csv => decomposition_csv(&j, choice)?,
        Format::Off => OffMesh::whole(d)?.emit(),
    })
}

fn group(cfg: &CommandConfig) -> Result<ArGroup, CliError> {
    Ok(ArGroup::new(cfg.r, cfg.n)?)
}

/// `all`, one axis for every octahedron (`2`), or one axis per octahedron
/// in the order of Ξ (`1,3,2,2` or `1322`).
pub fn parse_choice(xi: &Xi, text: &str) -> Result<Vec<FlopChoice>, CliError> {
    let text = text.trim();
    if text == "all" {
        return Ok(FlopChoice::all(xi));
    }
    let axes: Vec<u8> = if text.contains(',') {
        text.split(',').map(|t| t.trim().parse::<u8>()).collect::<Result<_, _>>()
    } else {
        text.chars().map(|c| c.to_string().parse::<u8>()).collect::<Result<_, _>>()
    }
    .map_err(|e| CliError::Usage(format!("bad --choice {text:?}: {e}")))?;
    if axes.iter().any(|k| !(1..=3).contains(k)) {
        return Err(CliError::Usage(format!("axes in --choice must be 1, 2 or 3, got {text:?}")));
    }
    let choice = if axes.len() == 1 && xi.octahedra.len() != 1 {
        FlopChoice::uniform(xi, axes[0])
    } else {
        FlopChoice::from_vector(xi, &axes).map_err(|e| CliError::Usage(e.to_string()))?
    };
    Ok(vec![choice])
}

fn tag(v: &[u8]) -> String {
    v.iter().map(|k| k.to_string()).collect()
}

fn decompose(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    let g = group(cfg)?;
    let xi = build_xi(g)?;
    let ext = cfg.format.extension();
    let dir = cfg.out.clone().unwrap_or_else(|| PathBuf::from("."));
    let mut files = Vec::new();
    let mut add = |name: String, content: String| files.push((dir.join(name), content));
    add(format!("xi.{ext}"), emit_decomposition(&xi.decomposition, None, cfg.format)?);
    let mut summary = json!({
        "r": g.r,
        "n": g.n,
        "xi": { "cells": xi.decomposition.cells().len(), "counts": xi.classify_cells()? },
    });
    if g.n == 4 {
        let star = XiStar::build(&xi)?;
        let d = &star.decomposition;
        add(format!("xistar.{ext}"), emit_decomposition(d, None, cfg.format)?);
        if cfg.format == Format::Off {
            for (k, &c) in star.centers.iter().enumerate() {
                add(format!("xistar-star-{k}.off"), OffMesh::from_cells(d, &d.star(c))?.emit());
            }
        }
        summary["xiStar"] = json!({ "cells": d.cells().len(), "centers": star.centers.len() });
    }
    if let Some(text) = &cfg.choice {
        let mut done = Vec::new();
        for choice in parse_choice(&xi, text)? {
            let res = Resolution::resolve(&xi, &choice)?;
            let v = res.choice_vector();
            add(
                format!("resolution-{}.{ext}", tag(&v)),
                emit_decomposition(&res.decomposition, Some(&v), cfg.format)?,
            );
            done.push(tag(&v));
        }
        summary["resolutions"] = json!(done);
    }
    summary["files"] = json!(files.iter().map(|(p, _)| p.display().to_string()).collect::<Vec<_>>());
    Ok(Outcome {
        stdout: pretty(&summary),
        files,
        ..Outcome::default()
    })
}

pub fn ideal_rows(r: i64) -> Result<Vec<IdealRow>, CliError> {
    if !(1..=5).contains(&r) {
        return Err(CliError::Usage(format!("ideals supports 1 <= r <= 5, got {r}")));
    }
    let g = ArGroup::new(r, 4)?;
    let star = XiStar::build(&build_xi(g)?)?;
    enumerate_central_ideals(&g)?
        .iter()
        .enumerate()
        .map(|(index, (s, _))| {
            let cell = cell_of_ideal(s, &star)?;
            Ok(IdealRow {
                index,
                ideal: IdealJson::from_staircase(s),
                cell,
                label: label_name(&star.labels[cell]),
            })
        })
        .collect()
}

fn ideals(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    if cfg.n != 4 {
        return Err(CliError::Usage(format!("ideals needs n = 4, got {}", cfg.n)));
    }
    let rows = ideal_rows(cfg.r)?;
    let content = match cfg.format {
        Format::Json => pretty(&rows),
        Format::Csv => ideals_csv(&rows)?,
        Format::Off => return Err(CliError::Usage("ideals are written as json or csv".into())),
    };
    let mut out = Outcome::single(cfg.out.as_deref(), content);
    out.stderr = format!("{} central ideals for r = {}\n", rows.len(), cfg.r);
    Ok(out)
}

fn chart_row(desc: &ChartDescriptor, label: String) -> ChartRow {
    ChartRow {
        cell: desc.cell,
        label,
        vertices: desc.vertex_order.clone(),
        coordinates: desc
            .coordinates
            .iter()
            .map(|e| e.0.iter().map(|&x| x as i64).collect())
            .collect(),
    }
}

pub fn chart_rows(cfg: &CommandConfig) -> Result<Vec<ChartRow>, CliError> {
    let xi = build_xi(group(cfg)?)?;
    if let Some(text) = &cfg.choice {
        let choices = parse_choice(&xi, text)?;
        let [choice] = &choices[..] else {
            return Err(CliError::Usage("charts takes a single --choice".into()));
        };
        let res = Resolution::resolve(&xi, choice)?;
        return (0..res.decomposition.cells().len())
            .map(|c| Ok(chart_row(&res.chart(c)?, label_name(&res.labels[c]))))
            .collect();
    }
    if cfg.n == 4 {
        let star = XiStar::build(&xi)?;
        return (0..star.decomposition.cells().len())
            .map(|c| Ok(chart_row(&star.chart(c)?, label_name(&star.labels[c]))))
            .collect();
    }
    let d = &xi.decomposition;
    (0..d.cells().len())
        .map(|c| Ok(chart_row(&d.chart_basis(c)?, label_name(&xi.labels[c]))))
        .collect()
}

fn charts(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    let rows = chart_rows(cfg)?;
    let content = match cfg.format {
        Format::Json => pretty(&rows),
        Format::Csv => charts_csv(&rows)?,
        Format::Off => return Err(CliError::Usage("charts are written as json or csv".into())),
    };
    Ok(Outcome::single(cfg.out.as_deref(), content))
}

fn resolve(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    let xi = build_xi(group(cfg)?)?;
    let choices = parse_choice(&xi, cfg.choice.as_deref().unwrap_or("1"))?;
    let [choice] = &choices[..] else {
        return Err(CliError::Usage("resolve takes a single --choice; use decompose for all of them".into()));
    };
    let res = Resolution::resolve(&xi, choice)?;
    let v = res.choice_vector();
    let mut out = Outcome::single(cfg.out.as_deref(), emit_decomposition(&res.decomposition, Some(&v), cfg.format)?);
    out.stderr = format!(
        "resolution {}: smooth, crepant, chi = {}\n",
        tag(&v),
        res.decomposition.euler_number()
    );
    Ok(out)
}

/// A resolution from its JSON or CSV form, recomputed and checked.
pub fn read_resolution(text: &str) -> Result<Resolution, CliError> {
    if text.trim_start().starts_with('{') {
        return Ok(Resolution::from_json_str(text)?);
    }
    let (decomposition, choice) = parse_decomposition_csv(text)?;
    let choice_vector = choice.ok_or_else(|| CliError::Parse("no choice record: not a resolution".into()))?;
    let j = ResolutionJson {
        decomposition,
        choice_vector,
    };
    Ok(Resolution::from_json_str(&pretty(&j))?)
}

fn flop(cfg: &CommandConfig, input: &str, center: &[i64], axis: u8) -> Result<Outcome, CliError> {
    if !(1..=3).contains(&axis) {
        return Err(CliError::Usage(format!("--axis must be 1, 2 or 3, got {axis}")));
    }
    let before = read_resolution(input)?;
    let after = before.flop(center, axis)?;
    let v = after.choice_vector();
    let old = before.decomposition.cells();
    let mut changed = String::new();
    for (c, label) in after.decomposition.cells().iter().zip(&after.labels) {
        if !old.contains(c) {
            changed.push_str(&format!("{} {:?}\n", label_name(label), c));
        }
    }
    let mut out = Outcome::single(cfg.out.as_deref(), emit_decomposition(&after.decomposition, Some(&v), cfg.format)?);
    if cfg.out.is_some() {
        out.stdout = changed;
    } else {
        out.stderr = changed;
    }
    Ok(out)
}

fn verify(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    let name = cfg
        .suite
        .as_deref()
        .ok_or_else(|| CliError::Usage("verify needs a suite: a1-4, ar-4, a4 or all".into()))?;
    let suite = Suite::parse(name).ok_or_else(|| CliError::Usage(format!("unknown suite {name:?}")))?;
    let report = run_suite(suite, cfg.r, cfg.seed)?;
    let mut stderr = String::new();
    for c in &report.checks {
        let failed = c.status == crate::CheckStatus::Fail;
        if failed || cfg.verbosity > 0 {
            stderr.push_str(&format!(
                "{:?} {}{}\n",
                c.status,
                c.name,
                c.detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default()
            ));
        }
    }
    stderr.push_str(&format!(
        "{}: {} passed, {} corrected, {} failed\n",
        report.suite, report.passed, report.corrected, report.failed
    ));
    let mut out = Outcome::single(cfg.out.as_deref(), report.to_json());
    out.stderr = stderr;
    out.exit_code = if report.pass() { 0 } else { 1 };
    Ok(out)
}

fn export(cfg: &CommandConfig, input: &str) -> Result<Outcome, CliError> {
    let trimmed = input.trim_start();
    let (d, choice) = if trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(input).map_err(|e| CliError::Parse(e.to_string()))?;
        if v.get("choiceVector").is_some() {
            let res = Resolution::from_json_str(input)?;
            let c = res.choice_vector();
            (res.decomposition, Some(c))
        } else {
            (Decomposition::from_json_str(input)?, None)
        }
    } else if trimmed.starts_with("OFF") {
        return Err(CliError::Usage("OFF meshes cannot be converted back to decompositions".into()));
    } else {
        let (j, choice) = parse_decomposition_csv(input)?;
        let d = j.to_decomposition()?;
        if let Some(c) = &choice {
            let res = read_resolution(input)?;
            if res.choice_vector() != *c {
                return Err(CliError::Parse("choice record disagrees with the cells".into()));
            }
        }
        (d, choice)
    };
    Ok(Outcome::single(cfg.out.as_deref(), emit_decomposition(&d, choice.as_deref(), cfg.format)?))
}
